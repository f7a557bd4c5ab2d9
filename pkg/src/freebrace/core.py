"""Exact arithmetic in the free r-generated brace D with D^3 = 0.

D is the free abelian group over the alphabet

    X1   = {x_i}                       generators
    X2   = {x_ij}                      b_i * b_j
    X3,1 = {x_iij}                     (b_i * b_i) * b_j
    X3,2 = {x_ijk : i < j}             (b_i * b_j) * b_k

with the usual coordinatewise addition and a closed-form group product.
Coefficients are Python integers, so nothing ever overflows.

Elements are immutable; every operation returns a new element.
"""
from __future__ import annotations

from enum import IntEnum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence


class BraceError(Exception):
    """Base class for errors raised by this package."""


class IndexRangeError(BraceError, ValueError):
    pass


class RankMismatchError(BraceError, ValueError):
    pass


def half_consecutive(n: int) -> int:
    """Return n(n-1)/2 exactly."""
    q, rem = divmod(n * (n - 1), 2)
    assert rem == 0
    return q


class Kind(IntEnum):
    GEN = 0
    PAIR = 1
    TRIPLE_REP = 2
    TRIPLE = 3


KIND_TAGS = {Kind.GEN: "g", Kind.PAIR: "p", Kind.TRIPLE_REP: "tr", Kind.TRIPLE: "t"}
TAG_KINDS = {tag: kind for kind, tag in KIND_TAGS.items()}
_ARITY = {Kind.GEN: 1, Kind.PAIR: 2, Kind.TRIPLE_REP: 2, Kind.TRIPLE: 3}


class Index(NamedTuple):
    """A letter of the alphabet X.

    ``TRIPLE_REP`` with subscripts (i, j) names x_iij; ``TRIPLE`` with
    (i, j, k) names x_ijk and requires i < j. Ordering is by kind first,
    then lexicographic in the subscripts.
    """

    kind: Kind
    subs: tuple[int, ...]

    @classmethod
    def gen(cls, i: int) -> Index:
        return cls(Kind.GEN, (i,))

    @classmethod
    def pair(cls, i: int, j: int) -> Index:
        return cls(Kind.PAIR, (i, j))

    @classmethod
    def triple_rep(cls, i: int, j: int) -> Index:
        return cls(Kind.TRIPLE_REP, (i, j))

    @classmethod
    def triple(cls, i: int, j: int, k: int) -> Index:
        return cls(Kind.TRIPLE, (i, j, k))

    @classmethod
    def third(cls, i: int, j: int, k: int) -> Index:
        """Letter for (b_i * b_j) * b_k, folding (j, i, k) onto (i, j, k)."""
        if i == j:
            return cls.triple_rep(i, k)
        return cls.triple(min(i, j), max(i, j), k)

    def validate(self, r: int) -> None:
        if len(self.subs) != _ARITY[self.kind]:
            raise IndexRangeError(f"{self.kind.name} index needs {_ARITY[self.kind]} subscripts, got {self.subs}")
        for s in self.subs:
            if not isinstance(s, int) or not 1 <= s <= r:
                raise IndexRangeError(f"subscript {s!r} of {self.label()} outside 1..{r}")
        if self.kind is Kind.TRIPLE and not self.subs[0] < self.subs[1]:
            raise IndexRangeError(f"triple letter {self.label()} needs i < j")

    def is_valid(self, r: int) -> bool:
        try:
            self.validate(r)
        except IndexRangeError:
            return False
        return True

    @property
    def level(self) -> int:
        """1 for generators, 2 for pair letters, 3 for triple letters."""
        return min(int(self.kind), 2) + 1

    def label(self) -> str:
        if self.kind is Kind.TRIPLE_REP:
            i, j = self.subs
            return f"x{i}.{i}.{j}"
        return "x" + ".".join(map(str, self.subs))


def alphabet(r: int) -> list[Index]:
    """All letters of X for rank r, in canonical order."""
    check_rank(r)
    rng = range(1, r + 1)
    letters = [Index.gen(i) for i in rng]
    letters += [Index.pair(i, j) for i in rng for j in rng]
    letters += [Index.triple_rep(i, j) for i in rng for j in rng]
    letters += [Index.triple(i, j, k) for i, j in combinations(rng, 2) for k in rng]
    return letters


def check_rank(r: int) -> int:
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise IndexRangeError(f"rank must be a positive integer, got {r!r}")
    return r


def dimension(r: int) -> int:
    """Size of the alphabet X, i.e. the rank of (D, +)."""
    check_rank(r)
    return r + r * r + r * r + r * r * (r - 1) // 2


class Element:
    """An element of D: a rank and a finitely supported map Index -> int.

    Zero coefficients are never stored, so two elements are equal exactly
    when their ranks and supports agree.
    """

    __slots__ = ("_rank", "_coords", "_hash")

    def __init__(self, rank: int, coords: Mapping[Index, int] | Iterable[tuple[Index, int]] = (), *, check: bool = True):
        items = coords.items() if isinstance(coords, (dict, Mapping)) else coords
        data: dict[Index, int] = {}
        if check:
            check_rank(rank)
            for idx, c in items:
                if not isinstance(idx, Index):
                    raise TypeError(f"expected Index, got {idx!r}")
                idx.validate(rank)
                data[idx] = data.get(idx, 0) + int(c)
            data = {k: v for k, v in data.items() if v}
        else:
            data = {k: v for k, v in items if v}
        object.__setattr__(self, "_rank", rank)
        object.__setattr__(self, "_coords", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @property
    def rank(self) -> int:
        return self._rank

    def __getitem__(self, idx: Index) -> int:
        return self._coords.get(idx, 0)

    def coeff(self, idx: Index) -> int:
        return self._coords.get(idx, 0)

    def items(self) -> list[tuple[Index, int]]:
        """Nonzero coordinates in canonical index order."""
        return sorted(self._coords.items())

    def support(self) -> frozenset[Index]:
        return frozenset(self._coords)

    def __iter__(self) -> Iterator[tuple[Index, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._coords)

    def is_zero(self) -> bool:
        return not self._coords

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._rank == other._rank and self._coords == other._coords

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self._rank, frozenset(self._coords.items()))))
        return self._hash

    def __repr__(self) -> str:
        from .expr import format_canonical

        return f"Element(r={self._rank}, {format_canonical(self)!r})"

    def __add__(self, other: Element) -> Element:
        return add(self, other)

    def __sub__(self, other: Element) -> Element:
        return add(self, neg(other))

    def __neg__(self) -> Element:
        return neg(self)

    def __rmul__(self, n: int) -> Element:
        if isinstance(n, int):
            return smul(n, self)
        return NotImplemented

    def __pow__(self, m: int) -> Element:
        return power(self, m)

    def mul(self, other: Element) -> Element:
        return mul(self, other)

    def star(self, other: Element) -> Element:
        return star(self, other)

    def inv(self) -> Element:
        return inv(self)


def _same_rank(x: Element, y: Element) -> int:
    if x.rank != y.rank:
        raise RankMismatchError(f"rank mismatch: {x.rank} vs {y.rank}")
    return x.rank


def zero(r: int) -> Element:
    return Element(check_rank(r))


def basis(r: int, idx: Index) -> Element:
    return Element(r, {idx: 1})


def generators(r: int) -> list[Element]:
    return [basis(r, Index.gen(i)) for i in range(1, r + 1)]


def add(x: Element, y: Element) -> Element:
    r = _same_rank(x, y)
    out = dict(x._coords)
    for idx, c in y._coords.items():
        out[idx] = out.get(idx, 0) + c
    return Element(r, out, check=False)


def neg(x: Element) -> Element:
    return Element(x.rank, {idx: -c for idx, c in x._coords.items()}, check=False)


def smul(n: int, x: Element) -> Element:
    return Element(x.rank, {idx: n * c for idx, c in x._coords.items()}, check=False)


def sub(x: Element, y: Element) -> Element:
    return add(x, neg(y))


@lru_cache(maxsize=None)
def _tables(r: int) -> tuple[list[Index], dict, dict, dict]:
    """Interned letters for rank r: generators, pairs, triple reps, triples."""
    rng = range(1, r + 1)
    gens = [Index.gen(i) for i in rng]
    pairs = {(i, j): Index.pair(i, j) for i in rng for j in rng}
    reps = {(i, j): Index.triple_rep(i, j) for i in rng for j in rng}
    triples = {(i, j, k): Index.triple(i, j, k) for i, j in combinations(rng, 2) for k in rng}
    return gens, pairs, reps, triples


def _gen_coords(x: Element) -> dict[int, int]:
    c = x._coords
    out = {}
    for i, idx in enumerate(_tables(x.rank)[0], start=1):
        v = c.get(idx)
        if v:
            out[i] = v
    return out


def _twist(d: Element, e_gens: Mapping[int, int], out: dict[Index, int]) -> None:
    """Accumulate the d-dependent, e-linear part of d*e into out.

    With g = generator coordinates of d this adds, for every generator
    coordinate e_j of e,

        g_i e_j                            to x_ij
        (d_ii - g_i(g_i-1)/2) e_j          to x_iij
        (d_ij - g_i g_j + d_ji) e_k        to x_ijk, i < j
    """
    if not e_gens:
        return
    _, pairs, reps, triples = _tables(d.rank)
    dc = d._coords
    g = _gen_coords(d)
    get = out.get
    for i, gi in g.items():
        for j, ej in e_gens.items():
            idx = pairs[i, j]
            out[idx] = get(idx, 0) + gi * ej
    for i in range(1, d.rank + 1):
        mu = dc.get(pairs[i, i], 0) - half_consecutive(g.get(i, 0))
        if mu:
            for j, ej in e_gens.items():
                idx = reps[i, j]
                out[idx] = get(idx, 0) + mu * ej
    for i, j in combinations(range(1, d.rank + 1), 2):
        lam = dc.get(pairs[i, j], 0) - g.get(i, 0) * g.get(j, 0) + dc.get(pairs[j, i], 0)
        if lam:
            for k, ek in e_gens.items():
                idx = triples[i, j, k]
                out[idx] = get(idx, 0) + lam * ek


def mul(d: Element, e: Element) -> Element:
    """Group product d . e in D."""
    r = _same_rank(d, e)
    out = dict(d._coords)
    for idx, c in e._coords.items():
        out[idx] = out.get(idx, 0) + c
    _twist(d, _gen_coords(e), out)
    return Element(r, out, check=False)


def inv(x: Element) -> Element:
    """Group inverse, evaluated coordinatewise in closed form."""
    out = {idx: -c for idx, c in x._coords.items()}
    _twist(x, _gen_coords(x), out)
    return Element(x.rank, out, check=False)


def star(x: Element, y: Element) -> Element:
    """x * y = x.y - x - y."""
    r = _same_rank(x, y)
    out: dict[Index, int] = {}
    _twist(x, _gen_coords(y), out)
    return Element(r, out, check=False)


def power(x: Element, m: int) -> Element:
    """m-th power in (D, .) by square-and-multiply."""
    if m < 0:
        return inv(power(x, -m))
    result = zero(x.rank)
    base = x
    while m:
        if m & 1:
            result = mul(result, base)
        m >>= 1
        if m:
            base = mul(base, base)
    return result


def power_closed_form(x: Element, m: int) -> Element:
    """x^m = m x + m(m-1)/2 (x * x)."""
    return add(smul(m, x), smul(half_consecutive(m), star(x, x)))


def scalar_star(m: int, a: Element, n: int, c: Element) -> Element:
    """(m a) * (n c) = nm (a * c) - nm(m-1)/2 ((a * a) * c)."""
    _same_rank(a, c)
    aa_c = star(star(a, a), c)
    return add(smul(n * m, star(a, c)), smul(-n * half_consecutive(m), aa_c))


def lincomb_star(r: int, coeffs: Sequence[int], z: int, k: int) -> Element:
    """(sum_i n_i x_i) * (z x_k), written directly in the basis of X."""
    check_rank(r)
    if len(coeffs) > r:
        raise IndexRangeError(f"{len(coeffs)} coefficients for rank {r}")
    if not 1 <= k <= r:
        raise IndexRangeError(f"generator index {k} outside 1..{r}")
    out: dict[Index, int] = {}
    ns = list(enumerate(coeffs, start=1))
    for i, n in ns:
        out[Index.pair(i, k)] = out.get(Index.pair(i, k), 0) + n * z
        out[Index.triple_rep(i, k)] = out.get(Index.triple_rep(i, k), 0) - half_consecutive(n) * z
    for (i, ni), (j, nj) in combinations(ns, 2):
        idx = Index.triple(i, j, k)
        out[idx] = out.get(idx, 0) - ni * nj * z
    return Element(r, out, check=False)


def decompose(x: Element) -> tuple[Element, Element, Element]:
    """Split x into its generator, pair and triple-letter parts."""
    parts: tuple[dict, dict, dict] = ({}, {}, {})
    for idx, c in x._coords.items():
        parts[idx.level - 1][idx] = c
    return tuple(Element(x.rank, p, check=False) for p in parts)  # type: ignore[return-value]
