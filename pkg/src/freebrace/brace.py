"""The brace contract shared by the free brace and its homomorphic targets."""
from __future__ import annotations

import random
from abc import ABC, abstractmethod
from typing import Any, Generic, Sequence, TypeVar

from . import core
from .core import Element, Index, Kind

T = TypeVar("T")


class BraceTarget(ABC, Generic[T]):
    """A brace given by its two group structures on an opaque carrier.

    Subclasses supply only the group operations and equality. The star,
    additive multiples and group powers are derived from those.

    The sampling hooks (``random_element`` and friends) are optional and
    only needed when a target is run through the verification suites.
    """

    name = "brace"

    @abstractmethod
    def zero(self) -> T: ...

    @abstractmethod
    def add(self, a: T, b: T) -> T: ...

    @abstractmethod
    def neg(self, a: T) -> T: ...

    @abstractmethod
    def mul(self, a: T, b: T) -> T: ...

    @abstractmethod
    def inv(self, a: T) -> T: ...

    @abstractmethod
    def equals(self, a: T, b: T) -> bool: ...

    def sub(self, a: T, b: T) -> T:
        return self.add(a, self.neg(b))

    def star(self, a: T, b: T) -> T:
        return self.sub(self.sub(self.mul(a, b), a), b)

    def smul(self, n: int, a: T) -> T:
        """n a by doubling, so large n costs O(log n) additions."""
        if n < 0:
            return self.neg(self.smul(-n, a))
        acc = self.zero()
        while n:
            if n & 1:
                acc = self.add(acc, a)
            n >>= 1
            if n:
                a = self.add(a, a)
        return acc

    def power(self, a: T, m: int) -> T:
        if m < 0:
            return self.inv(self.power(a, -m))
        acc = self.zero()
        while m:
            if m & 1:
                acc = self.mul(acc, a)
            m >>= 1
            if m:
                a = self.mul(a, a)
        return acc

    def is_zero(self, a: T) -> bool:
        return self.equals(a, self.zero())

    def format(self, a: T) -> str:
        return str(a)

    # Closed forms that hold in any brace with B^3 = 0. Targets with a
    # faster direct formula override these.

    def power_closed_form(self, a: T, m: int) -> T:
        return self.add(self.smul(m, a), self.smul(core.half_consecutive(m), self.star(a, a)))

    def scalar_star(self, m: int, a: T, n: int, c: T) -> T:
        aa_c = self.star(self.star(a, a), c)
        return self.sub(self.smul(n * m, self.star(a, c)), self.smul(n * core.half_consecutive(m), aa_c))

    def lincomb_star(self, coeffs: Sequence[int], z: int, k: int) -> T:
        g = self.generators()
        total = self.zero()
        for i, n in enumerate(coeffs):
            total = self.add(total, self.smul(n * z, self.star(g[i], g[k - 1])))
            total = self.sub(total, self.smul(core.half_consecutive(n) * z, self.star(self.star(g[i], g[i]), g[k - 1])))
        for i, ni in enumerate(coeffs):
            for j in range(i + 1, len(coeffs)):
                bijk = self.star(self.star(g[i], g[j]), g[k - 1])
                total = self.sub(total, self.smul(ni * coeffs[j] * z, bijk))
        return total

    # Sampling hooks for the verification suites.

    def generators(self) -> list[T]:
        raise NotImplementedError(f"{type(self).__name__} has no distinguished generators")

    def random_element(self, rng: random.Random, bound: int) -> T:
        raise NotImplementedError(f"{type(self).__name__} cannot sample elements")

    def random_square(self, rng: random.Random, bound: int) -> T:
        """A random element of B^2 = B * B."""
        return self.star(self.random_element(rng, bound), self.random_element(rng, bound))

    def support_levels(self, a: T) -> set[int] | None:
        """Letter levels (1, 2, 3) occurring in a; None if not coordinatised."""
        return None


class FreeBrace(BraceTarget[Element]):
    """The free brace D of rank r, backed by :mod:`freebrace.core`."""

    name = "free"

    def __init__(self, r: int):
        self.rank = core.check_rank(r)
        self._letters = core.alphabet(r)
        self._square_letters = [idx for idx in self._letters if idx.kind is not Kind.GEN]

    def __repr__(self) -> str:
        return f"FreeBrace({self.rank})"

    def zero(self) -> Element:
        return core.zero(self.rank)

    def add(self, a: Element, b: Element) -> Element:
        return core.add(a, b)

    def neg(self, a: Element) -> Element:
        return core.neg(a)

    def mul(self, a: Element, b: Element) -> Element:
        return core.mul(a, b)

    def inv(self, a: Element) -> Element:
        return core.inv(a)

    def equals(self, a: Element, b: Element) -> bool:
        return a == b

    def smul(self, n: int, a: Element) -> Element:
        return core.smul(n, a)

    def format(self, a: Element) -> str:
        from .expr import format_canonical

        return format_canonical(a)

    def power_closed_form(self, a: Element, m: int) -> Element:
        return core.power_closed_form(a, m)

    def scalar_star(self, m: int, a: Element, n: int, c: Element) -> Element:
        return core.scalar_star(m, a, n, c)

    def lincomb_star(self, coeffs: Sequence[int], z: int, k: int) -> Element:
        return core.lincomb_star(self.rank, coeffs, z, k)

    def generators(self) -> list[Element]:
        return core.generators(self.rank)

    def basis(self, idx: Index) -> Element:
        return core.basis(self.rank, idx)

    def random_element(self, rng: random.Random, bound: int) -> Element:
        return _random_coords(self.rank, self._letters, rng, bound)

    def random_square(self, rng: random.Random, bound: int) -> Element:
        return _random_coords(self.rank, self._square_letters, rng, bound)

    def support_levels(self, a: Element) -> set[int]:
        return {idx.level for idx in a.support()}


def _random_coords(r: int, letters: list[Index], rng: random.Random, bound: int) -> Element:
    return Element(r, {idx: rng.randint(-bound, bound) for idx in letters}, check=False)


def describe(target: BraceTarget[Any]) -> dict:
    info = {"target": target.name}
    for attr in ("rank", "modulus"):
        if hasattr(target, attr):
            info[attr] = getattr(target, attr)
    return info
