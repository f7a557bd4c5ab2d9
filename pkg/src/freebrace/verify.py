"""Randomised and exhaustive verification suites.

Every suite takes a :class:`SampleConfig` and returns a :class:`Report`.
Trials are independent: trial ``t`` draws from its own generator seeded
by ``(seed, t)``, so a report depends only on the config. A failing check
is recorded and the suite keeps going.

Suites that accept a ``brace`` argument run against any
:class:`~freebrace.brace.BraceTarget` with sampling hooks; the default is
the free brace of ``cfg.rank``. Passing a deliberately broken target is
how the suites are mutation-tested.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Mapping

from . import core
from .brace import BraceTarget, FreeBrace, describe
from .core import Element, Index, Kind

POWER_RANGE = range(-10, 11)


@dataclass(frozen=True)
class SampleConfig:
    rank: int
    trials: int = 1000
    coeff_bound: int = 10
    seed: int = 0

    def __post_init__(self):
        core.check_rank(self.rank)
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.coeff_bound < 0:
            raise ValueError(f"coeff_bound must be non-negative, got {self.coeff_bound}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def rng(self, trial: int) -> random.Random:
        return random.Random((self.seed << 64) | trial)


@dataclass(frozen=True)
class Failure:
    trial: int
    check: str
    inputs: dict[str, str]
    expected: str
    got: str


@dataclass
class Report:
    suite: str
    config: dict[str, Any]
    trials: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def checks_failed(self) -> set[str]:
        return {f.check for f in self.failures}

    def to_dict(self) -> dict[str, Any]:
        failures = sorted(self.failures, key=lambda f: f.trial)
        return {"suite": self.suite, "config": self.config, "trials": self.trials, "failures": [asdict(f) for f in failures]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.failures)} failures: {', '.join(sorted(self.checks_failed()))})"
        return f"{self.suite}: {self.trials} trials, {status}"


class _Recorder:
    """Compares values in a brace and files failures against a report."""

    def __init__(self, report: Report, brace: BraceTarget, fmt: Callable[[Any], str] | None = None):
        self.report = report
        self.brace = brace
        self.fmt = fmt or brace.format
        self.trial = 0
        self.inputs: dict[str, str] = {}

    def start(self, trial: int, **inputs: Any) -> None:
        self.trial = trial
        self.inputs = {k: v if isinstance(v, str) else self.fmt(v) for k, v in inputs.items()}
        if trial >= 0:
            self.report.trials += 1

    def equal(self, check: str, got: Any, expected: Any, equals: Callable[[Any, Any], bool] | None = None, **extra: Any) -> bool:
        ok = (equals or self.brace.equals)(got, expected)
        if not ok:
            self.fail(check, self.fmt(expected), self.fmt(got), **extra)
        return ok

    def fail(self, check: str, expected: str, got: str, **extra: Any) -> None:
        inputs = dict(self.inputs)
        inputs.update({k: str(v) for k, v in extra.items()})
        self.report.failures.append(Failure(self.trial, check, inputs, expected, got))


def _config(cfg: SampleConfig, brace: BraceTarget, **extra: Any) -> dict[str, Any]:
    return {"rank": cfg.rank, "trials": cfg.trials, "coeff_bound": cfg.coeff_bound, "seed": cfg.seed, **describe(brace), **extra}


def _target(cfg: SampleConfig, brace: BraceTarget | None) -> BraceTarget:
    return FreeBrace(cfg.rank) if brace is None else brace


def check_axioms(cfg: SampleConfig, brace: BraceTarget | None = None) -> Report:
    """Both group structures and left distributivity a(b+c) = ab - a + ac."""
    B = _target(cfg, brace)
    report = Report("axioms", _config(cfg, B))
    rec = _Recorder(report, B)
    zero = B.zero()
    for t in range(cfg.trials):
        rng = cfg.rng(t)
        a, b, c = (B.random_element(rng, cfg.coeff_bound) for _ in range(3))
        rec.start(t, a=a, b=b, c=c)
        rec.equal("add_associativity", B.add(B.add(a, b), c), B.add(a, B.add(b, c)))
        rec.equal("add_commutativity", B.add(a, b), B.add(b, a))
        rec.equal("add_identity", B.add(a, zero), a)
        rec.equal("add_inverse", B.add(a, B.neg(a)), zero)
        rec.equal("mul_associativity", B.mul(B.mul(a, b), c), B.mul(a, B.mul(b, c)))
        rec.equal("mul_identity", B.mul(a, zero), a)
        rec.equal("mul_identity", B.mul(zero, a), a)
        a_inv = B.inv(a)
        rec.equal("mul_inverse", B.mul(a, a_inv), zero)
        rec.equal("mul_inverse", B.mul(a_inv, a), zero)
        rec.equal("distributivity", B.mul(a, B.add(b, c)), B.add(B.sub(B.mul(a, b), a), B.mul(a, c)))
    return report


def check_star_identities(cfg: SampleConfig, brace: BraceTarget | None = None) -> Report:
    """Star identities of a pre-nilpotent brace and their B^3 = 0 forms.

    product_star        (ab)*c = a*(b*c) + b*c + a*c
    star_additive       a*(b+c) = a*b + a*c
    sum_via_star        a + b = ab - a*b
    product_star_split  (ab)*c = a*c + b*c
    inverse_star        a^-1 * c = -(a*c)
    square_translation  as = a + s for s in B^2
    square_power        s^m = m s for s in B^2
    sum_as_product      a + b = ab (a*b)^-1
    """
    B = _target(cfg, brace)
    report = Report("star", _config(cfg, B, m_range=[POWER_RANGE.start, POWER_RANGE.stop - 1]))
    rec = _Recorder(report, B)
    for t in range(cfg.trials):
        rng = cfg.rng(t)
        a, b, c = (B.random_element(rng, cfg.coeff_bound) for _ in range(3))
        s = B.random_square(rng, cfg.coeff_bound)
        rec.start(t, a=a, b=b, c=c, s=s)
        ab = B.mul(a, b)
        a_c, b_c, a_b = B.star(a, c), B.star(b, c), B.star(a, b)
        rec.equal("product_star", B.star(ab, c), B.add(B.add(B.star(a, b_c), b_c), a_c))
        rec.equal("star_additive", B.star(a, B.add(b, c)), B.add(a_b, B.star(a, c)))
        rec.equal("sum_via_star", B.add(a, b), B.sub(ab, a_b))
        rec.equal("product_star_split", B.star(ab, c), B.add(a_c, b_c))
        rec.equal("inverse_star", B.star(B.inv(a), c), B.neg(a_c))
        rec.equal("square_translation", B.mul(a, s), B.add(a, s))
        for m in POWER_RANGE:
            rec.equal("square_power", B.power(s, m), B.smul(m, s), m=m)
        rec.equal("sum_as_product", B.add(a, b), B.mul(ab, B.inv(a_b)))
    return report


def check_nilpotency(cfg: SampleConfig, brace: BraceTarget | None = None) -> Report:
    """x*(y*z) = 0, ((w*x)*y)*z = 0, and the level of iterated stars."""
    B = _target(cfg, brace)
    report = Report("nilpotency", _config(cfg, B))
    rec = _Recorder(report, B)
    zero = B.zero()
    for t in range(cfg.trials):
        rng = cfg.rng(t)
        w, x, y, z = (B.random_element(rng, cfg.coeff_bound) for _ in range(4))
        rec.start(t, w=w, x=x, y=y, z=z)
        xy = B.star(x, y)
        xy_z = B.star(xy, z)
        rec.equal("left_nilpotency", B.star(x, B.star(y, z)), zero)
        rec.equal("right_nilpotency", B.star(B.star(B.star(w, x), y), z), zero)
        for check, value, allowed in (("square_levels", xy, {2, 3}), ("cube_levels", xy_z, {3})):
            levels = B.support_levels(value)
            if levels is not None and not levels <= allowed:
                rec.fail(check, f"levels within {sorted(allowed)}", f"{B.format(value)} (levels {sorted(levels)})")
    return report


def check_symmetry(r: int, brace: BraceTarget | None = None) -> Report:
    """Exhaustively, (x_j*x_i)*x_k = (x_i*x_j)*x_k for i < j.

    On targets with a ``basis`` method both sides must also equal the
    triple letter x_ijk.
    """
    B = FreeBrace(r) if brace is None else brace
    report = Report("symmetry", {"rank": r, **describe(B)})
    rec = _Recorder(report, B)
    g = B.generators()
    basis = getattr(B, "basis", None)
    cases = [(i, j, k) for i, j in itertools.combinations(range(1, r + 1), 2) for k in range(1, r + 1)]
    for t, (i, j, k) in enumerate(cases):
        rec.start(t, i=str(i), j=str(j), k=str(k))
        forward = B.star(B.star(g[i - 1], g[j - 1]), g[k - 1])
        backward = B.star(B.star(g[j - 1], g[i - 1]), g[k - 1])
        rec.equal("swap", backward, forward)
        if basis is not None:
            rec.equal("letter", forward, basis(Index.triple(i, j, k)))
    return report


def check_decomposition(cfg: SampleConfig) -> Report:
    """Level split x = l1 + l2 + l3 and how the parts star with generators."""
    B = FreeBrace(cfg.rank)
    report = Report("decomposition", _config(cfg, B))
    rec = _Recorder(report, B)
    gens = B.generators()
    for t in range(cfg.trials):
        rng = cfg.rng(t)
        x, y = B.random_element(rng, cfg.coeff_bound), B.random_element(rng, cfg.coeff_bound)
        rec.start(t, x=x, y=y)
        parts = core.decompose(x)
        rec.equal("sum", core.add(core.add(parts[0], parts[1]), parts[2]), x)
        for level, part in enumerate(parts, start=1):
            if not B.support_levels(part) <= {level}:
                rec.fail("part_levels", f"level {level} only", B.format(part))
        for k, g in enumerate(gens, start=1):
            value = core.star(parts[1], g)
            if not B.support_levels(value) <= {3}:
                rec.fail("pair_part_star_generator", "triple letters only", B.format(value), k=k)
        rec.equal("triple_part_star", core.star(parts[2], y), B.zero())
    return report


def check_closed_forms(cfg: SampleConfig, brace: BraceTarget | None = None) -> Report:
    """Power, scalar-star and linear-combination closed forms vs direct evaluation."""
    B = _target(cfg, brace)
    r = cfg.rank
    report = Report("closed_forms", _config(cfg, B, m_range=[POWER_RANGE.start, POWER_RANGE.stop - 1]))
    rec = _Recorder(report, B)
    gens = B.generators()
    for t in range(cfg.trials):
        rng = cfg.rng(t)
        a, c = B.random_element(rng, cfg.coeff_bound), B.random_element(rng, cfg.coeff_bound)
        rec.start(t, a=a, c=c)
        aa = B.star(a, a)
        for m in POWER_RANGE:
            a_m = B.power(a, m)
            rec.equal("power_closed_form", B.power_closed_form(a, m), a_m, m=m)
            rec.equal("multiple_as_product", B.smul(m, a), B.mul(a_m, B.power(aa, -core.half_consecutive(m))), m=m)
        m, n = rng.randint(-cfg.coeff_bound, cfg.coeff_bound), rng.randint(-cfg.coeff_bound, cfg.coeff_bound)
        rec.equal("scalar_star", B.scalar_star(m, a, n, c), B.star(B.smul(m, a), B.smul(n, c)), m=m, n=n)
        coeffs = [rng.randint(-cfg.coeff_bound, cfg.coeff_bound) for _ in range(rng.randint(1, r))]
        z, k = rng.randint(-cfg.coeff_bound, cfg.coeff_bound), rng.randint(1, r)
        lhs = B.zero()
        for n_i, g in zip(coeffs, gens):
            lhs = B.add(lhs, B.smul(n_i, g))
        direct = B.star(lhs, B.smul(z, gens[k - 1]))
        rec.equal("lincomb_star", B.lincomb_star(coeffs, z, k), direct, coeffs=coeffs, z=z, k=k)
    return report


# Coordinates before merging the triple letters (i, j, k) and (j, i, k).


class UnnormalizedElement:
    """Coordinates over x_i, x_ij, x_iij and every x_ijk with i != j."""

    __slots__ = ("rank", "_coords")

    def __init__(self, rank: int, coords: Mapping[Index, int] | Iterable[tuple[Index, int]] = ()):
        core.check_rank(rank)
        items = coords.items() if isinstance(coords, Mapping) else coords
        data: dict[Index, int] = {}
        for idx, c in items:
            _validate_unnormalized(idx, rank)
            data[idx] = data.get(idx, 0) + c
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_coords", {k: v for k, v in data.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("UnnormalizedElement is immutable")

    def __getitem__(self, idx: Index) -> int:
        return self._coords.get(idx, 0)

    def items(self) -> list[tuple[Index, int]]:
        return sorted(self._coords.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnnormalizedElement):
            return NotImplemented
        return self.rank == other.rank and self._coords == other._coords

    def __add__(self, other: UnnormalizedElement) -> UnnormalizedElement:
        if self.rank != other.rank:
            raise core.RankMismatchError(f"rank mismatch: {self.rank} vs {other.rank}")
        return UnnormalizedElement(self.rank, list(self._coords.items()) + list(other._coords.items()))

    def __str__(self) -> str:
        from .expr import format_terms

        return format_terms([(idx.label(), c) for idx, c in self.items()])

    __repr__ = __str__


def _validate_unnormalized(idx: Index, r: int) -> None:
    if idx.kind is Kind.TRIPLE:
        i, j, k = idx.subs
        if i == j or not all(1 <= s <= r for s in idx.subs):
            raise core.IndexRangeError(f"unnormalised triple {idx.subs} needs i != j within 1..{r}")
    else:
        idx.validate(r)


def unnormalized_letters(r: int) -> list[Index]:
    rng = range(1, r + 1)
    letters = [idx for idx in core.alphabet(r) if idx.kind is not Kind.TRIPLE]
    letters += [Index(Kind.TRIPLE, (i, j, k)) for i in rng for j in rng if i != j for k in rng]
    return letters


def mul_unnormalized(x: UnnormalizedElement, y: UnnormalizedElement) -> UnnormalizedElement:
    """Product with the (i, j, k) and (j, i, k) coordinates kept apart."""
    if x.rank != y.rank:
        raise core.RankMismatchError(f"rank mismatch: {x.rank} vs {y.rank}")
    r = x.rank
    rng = range(1, r + 1)
    xg = {i: x[Index.gen(i)] for i in rng}
    yg = {i: y[Index.gen(i)] for i in rng}
    out = list(x.items()) + list(y.items())
    for i in rng:
        for j in rng:
            out.append((Index.pair(i, j), xg[i] * yg[j]))
            coeff = x[Index.pair(i, i)] - core.half_consecutive(xg[i])
            out.append((Index.triple_rep(i, j), coeff * yg[j]))
    for i in rng:
        for j in rng:
            if i == j:
                continue
            if i < j:
                coeff = x[Index.pair(i, j)] - xg[i] * xg[j]
            else:
                coeff = x[Index.pair(i, j)]
            for k in rng:
                out.append((Index(Kind.TRIPLE, (i, j, k)), coeff * yg[k]))
    return UnnormalizedElement(r, out)


def fold(x: UnnormalizedElement) -> Element:
    """Merge each (j, i, k) triple coordinate into (i, j, k), i < j."""
    out: dict[Index, int] = {}
    for idx, c in x.items():
        if idx.kind is Kind.TRIPLE:
            idx = Index.third(*idx.subs)
        out[idx] = out.get(idx, 0) + c
    return Element(x.rank, out)


def random_unnormalized(r: int, rng: random.Random, bound: int, kinds: Iterable[Kind] = tuple(Kind)) -> UnnormalizedElement:
    kinds = set(kinds)
    return UnnormalizedElement(r, {idx: rng.randint(-bound, bound) for idx in unnormalized_letters(r) if idx.kind in kinds})


def check_fold_oracle(cfg: SampleConfig) -> Report:
    """fold(x y) computed unmerged agrees with the merged product of folds."""
    B = FreeBrace(cfg.rank)
    report = Report("fold", _config(cfg, B))
    rec = _Recorder(report, B, fmt=str)
    for t in range(cfg.trials):
        rng = cfg.rng(t)
        x = random_unnormalized(cfg.rank, rng, cfg.coeff_bound)
        y = random_unnormalized(cfg.rank, rng, cfg.coeff_bound)
        rec.start(t, x=x, y=y)
        rec.equal("fold_product", fold(mul_unnormalized(x, y)), core.mul(fold(x), fold(y)), equals=Element.__eq__)
        rec.equal("fold_additive", fold(x + y), core.add(fold(x), fold(y)), equals=Element.__eq__)
    return report


def check_exhaustive(r: int = 1, pair_bound: int = 2, triple_bound: int = 1) -> Report:
    """Every identity on a finite box of rank-1 elements.

    Pairs range over all coordinates in [-pair_bound, pair_bound], triples
    over [-triple_bound, triple_bound].
    """
    B = FreeBrace(r)
    report = Report("exhaustive", {"rank": r, "pair_bound": pair_bound, "triple_bound": triple_bound, **describe(B)})
    rec = _Recorder(report, B)
    letters = core.alphabet(r)
    zero = B.zero()

    def box(bound: int) -> list[Element]:
        vals = range(-bound, bound + 1)
        return [Element(r, dict(zip(letters, cs)), check=False) for cs in itertools.product(vals, repeat=len(letters))]

    t = 0
    small = box(pair_bound)
    for a, b in itertools.product(small, repeat=2):
        rec.start(t, a=a, b=b)
        t += 1
        ab, a_b = B.mul(a, b), B.star(a, b)
        rec.equal("mul_inverse", B.mul(a, B.inv(a)), zero)
        rec.equal("sum_via_star", B.add(a, b), B.sub(ab, a_b))
        rec.equal("sum_as_product", B.add(a, b), B.mul(ab, B.inv(a_b)))
        rec.equal("inverse_star", B.star(B.inv(a), b), B.neg(a_b))
        rec.equal("left_nilpotency", B.star(a, B.star(b, a)), zero)
    tiny = box(triple_bound)
    for a, b, c in itertools.product(tiny, repeat=3):
        rec.start(t, a=a, b=b, c=c)
        t += 1
        ab = B.mul(a, b)
        rec.equal("mul_associativity", B.mul(ab, c), B.mul(a, B.mul(b, c)))
        rec.equal("distributivity", B.mul(a, B.add(b, c)), B.add(B.sub(ab, a), B.mul(a, c)))
        rec.equal("product_star_split", B.star(ab, c), B.add(B.star(a, c), B.star(b, c)))
        rec.equal("left_nilpotency", B.star(a, B.star(b, c)), zero)
    return report


SUITES: dict[str, Callable[[SampleConfig], Report]] = {
    "axioms": check_axioms,
    "star": check_star_identities,
    "nilpotency": check_nilpotency,
    "symmetry": lambda cfg: check_symmetry(cfg.rank),
    "decomposition": check_decomposition,
    "fold": check_fold_oracle,
    "closed_forms": check_closed_forms,
}


def run_suites(cfg: SampleConfig, names: Iterable[str] | None = None) -> list[Report]:
    names = list(SUITES) if names is None else list(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    return [SUITES[n](cfg) for n in names]
