import pytest
from hypothesis import settings, strategies as st

from freebrace import core
from freebrace.core import Element, Kind

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def elements(draw, r, bound=6, kinds=tuple(Kind)):
    letters = [idx for idx in core.alphabet(r) if idx.kind in kinds]
    coeffs = draw(st.lists(st.integers(-bound, bound), min_size=len(letters), max_size=len(letters)))
    return Element(r, dict(zip(letters, coeffs)))


ranks = st.integers(1, 4)


@st.composite
def rank_and(draw, n, bound=6, kinds=tuple(Kind)):
    r = draw(ranks)
    return (r, *[draw(elements(r, bound, kinds)) for _ in range(n)])


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
