"""Finite quotients D/mD of the free brace for odd m.

The product formulas only involve d(d-1)/2 through residues, and
d -> d(d-1)/2 mod m is well defined on residues exactly when m is odd:
shifting d by m changes d(d-1)/2 by m(m-1)/2 + m d, which is 0 mod m
only if (m-1)/2 is an integer.
"""
from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Mapping

from . import core
from .brace import BraceTarget
from .core import BraceError, Element, Index, Kind


class ModulusError(BraceError, ValueError):
    pass


def check_modulus(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise ModulusError(f"modulus must be an integer, got {m!r}")
    if m >= 2 and m % 2 == 0:
        raise ModulusError(
            f"modulus {m} is even: d(d-1)/2 is not well defined on residues mod {m} "
            f"(the lifts 0 and {m} of the residue 0 give 0 and {core.half_consecutive(m)}, "
            f"which differ mod {m})"
        )
    if m < 3:
        raise ModulusError(f"modulus must be an odd integer >= 3, got {m}")
    return m


def even_modulus_witness(m: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Two lifts of the residue 0 whose d(d-1)/2 values disagree mod m.

    For even m returns ((0, 0), (m, m(m-1)/2)); raises for odd m, where no
    such pair exists.
    """
    if m % 2:
        raise ValueError(f"d(d-1)/2 is well defined mod odd m = {m}")
    lifts = (0, m)
    vals = tuple(core.half_consecutive(d) for d in lifts)
    assert (vals[0] - vals[1]) % m != 0
    return (lifts[0], vals[0]), (lifts[1], vals[1])


class ModElement:
    """Element of D/mD: coordinates are residues in range(m), zeros dropped."""

    __slots__ = ("rank", "modulus", "_coords")

    def __init__(self, rank: int, modulus: int, coords: Mapping[Index, int] | Iterable[tuple[Index, int]] = ()):
        items = coords.items() if isinstance(coords, Mapping) else coords
        data: dict[Index, int] = {}
        for idx, c in items:
            data[idx] = (data.get(idx, 0) + c) % modulus
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "_coords", {k: v for k, v in data.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("ModElement is immutable")

    def __getitem__(self, idx: Index) -> int:
        return self._coords.get(idx, 0)

    def items(self) -> list[tuple[Index, int]]:
        return sorted(self._coords.items())

    def support(self) -> frozenset[Index]:
        return frozenset(self._coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModElement):
            return NotImplemented
        return (self.rank, self.modulus, self._coords) == (other.rank, other.modulus, other._coords)

    def __hash__(self) -> int:
        return hash((self.rank, self.modulus, frozenset(self._coords.items())))

    def __str__(self) -> str:
        from .expr import format_terms

        return f"{format_terms([(idx.label(), c) for idx, c in self.items()])} (mod {self.modulus})"

    def __repr__(self) -> str:
        return f"ModElement(r={self.rank}, {str(self)!r})"


class ModularFreeBrace(BraceTarget[ModElement]):
    """D/mD with every product formula evaluated mod m."""

    name = "modular"

    def __init__(self, r: int, m: int):
        self.rank = core.check_rank(r)
        self.modulus = check_modulus(m)
        self._half = pow(2, -1, m)
        self._letters = core.alphabet(r)

    def __repr__(self) -> str:
        return f"ModularFreeBrace({self.rank}, {self.modulus})"

    def _new(self, coords) -> ModElement:
        return ModElement(self.rank, self.modulus, coords)

    def _check(self, *xs: ModElement) -> None:
        for x in xs:
            if x.rank != self.rank or x.modulus != self.modulus:
                raise core.RankMismatchError(f"{x!r} does not belong to {self!r}")

    def zero(self) -> ModElement:
        return self._new({})

    def add(self, a: ModElement, b: ModElement) -> ModElement:
        self._check(a, b)
        return self._new(list(a._coords.items()) + list(b._coords.items()))

    def neg(self, a: ModElement) -> ModElement:
        self._check(a)
        return self._new({idx: -c for idx, c in a._coords.items()})

    def smul(self, n: int, a: ModElement) -> ModElement:
        self._check(a)
        return self._new({idx: n * c for idx, c in a._coords.items()})

    def _twist(self, d: ModElement, e: ModElement) -> list[tuple[Index, int]]:
        m, r = self.modulus, self.rank
        dg = {i: d[Index.gen(i)] for i in range(1, r + 1)}
        eg = {i: e[Index.gen(i)] for i in range(1, r + 1)}
        out = []
        for i in range(1, r + 1):
            half = dg[i] * (dg[i] - 1) * self._half % m
            mu = d[Index.pair(i, i)] - half
            for j in range(1, r + 1):
                out.append((Index.pair(i, j), dg[i] * eg[j]))
                out.append((Index.triple_rep(i, j), mu * eg[j]))
        for i, j in combinations(range(1, r + 1), 2):
            lam = d[Index.pair(i, j)] - dg[i] * dg[j] + d[Index.pair(j, i)]
            for k in range(1, r + 1):
                out.append((Index.triple(i, j, k), lam * eg[k]))
        return out

    def mul(self, a: ModElement, b: ModElement) -> ModElement:
        self._check(a, b)
        return self._new(list(a._coords.items()) + list(b._coords.items()) + self._twist(a, b))

    def inv(self, a: ModElement) -> ModElement:
        self._check(a)
        return self._new([(idx, -c) for idx, c in a._coords.items()] + self._twist(a, a))

    def equals(self, a: ModElement, b: ModElement) -> bool:
        return a == b

    def format(self, a: ModElement) -> str:
        return str(a)

    def generators(self) -> list[ModElement]:
        return [self.basis(Index.gen(i)) for i in range(1, self.rank + 1)]

    def basis(self, idx: Index) -> ModElement:
        idx.validate(self.rank)
        return self._new({idx: 1})

    def random_element(self, rng: random.Random, bound: int) -> ModElement:
        return self._new({idx: rng.randint(-bound, bound) for idx in self._letters})

    def random_square(self, rng: random.Random, bound: int) -> ModElement:
        return self._new({idx: rng.randint(-bound, bound) for idx in self._letters if idx.kind is not Kind.GEN})

    def support_levels(self, a: ModElement) -> set[int]:
        return {idx.level for idx in a.support()}


def reduce_mod(x: Element, m: int) -> ModElement:
    """Coordinatewise reduction D -> D/mD (m odd, m >= 3)."""
    check_modulus(m)
    return ModElement(x.rank, m, x.items())


def lift(x: ModElement) -> Element:
    """Representative in D with coordinates in range(m)."""
    return Element(x.rank, x.items())
