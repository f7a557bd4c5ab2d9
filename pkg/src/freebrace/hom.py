"""Homomorphisms out of the free brace.

Choosing images c_1..c_r in a brace C with C^3 = 0 determines a unique
homomorphism phi: D -> C. On the canonical coordinates it reads

    phi(x) = sum x_i c_i + sum x_ij c_ij + sum x_iij c_iij + sum x_ijk c_ijk

with c_ij = c_i * c_j and c_ijk = (c_i * c_j) * c_k, all sums taken in
(C, +).
"""
from __future__ import annotations

from typing import Any, Generic, Sequence, TypeVar

from . import core
from .brace import BraceTarget, FreeBrace, describe
from .core import Element, Index, Kind
from .modular import ModularFreeBrace, reduce_mod
from .verify import Report, SampleConfig, _Recorder

T = TypeVar("T")


class Hom(Generic[T]):
    """phi: D_r -> target fixed by the generator images."""

    def __init__(self, target: BraceTarget[T], images: Sequence[T]):
        self.target = target
        self.images = tuple(images)
        self.rank = core.check_rank(len(self.images))
        self._letters = self._letter_images()

    def _letter_images(self) -> dict[Index, T]:
        C, c = self.target, self.images
        pairs = {(i, j): C.star(c[i - 1], c[j - 1]) for i in range(1, self.rank + 1) for j in range(1, self.rank + 1)}
        out: dict[Index, T] = {}
        for idx in core.alphabet(self.rank):
            s = idx.subs
            if idx.kind is Kind.GEN:
                out[idx] = c[s[0] - 1]
            elif idx.kind is Kind.PAIR:
                out[idx] = pairs[s]
            elif idx.kind is Kind.TRIPLE_REP:
                out[idx] = C.star(pairs[s[0], s[0]], c[s[1] - 1])
            else:
                out[idx] = C.star(pairs[s[0], s[1]], c[s[2] - 1])
        return out

    def letter_image(self, idx: Index) -> T:
        return self._letters[idx]

    def __call__(self, x: Element) -> T:
        return apply_hom(self, x)

    def __repr__(self) -> str:
        return f"Hom(rank={self.rank}, target={self.target!r})"


def make_hom(target: BraceTarget[T], images: Sequence[T], r: int | None = None) -> Hom[T]:
    if r is not None and len(images) != r:
        raise core.RankMismatchError(f"need {r} generator images, got {len(images)}")
    if not images:
        raise core.RankMismatchError("need at least one generator image")
    return Hom(target, images)


def apply_hom(phi: Hom[T], x: Element) -> T:
    if x.rank != phi.rank:
        raise core.RankMismatchError(f"hom has rank {phi.rank}, element has rank {x.rank}")
    C = phi.target
    acc = C.zero()
    for idx, coeff in x.items():
        acc = C.add(acc, C.smul(coeff, phi.letter_image(idx)))
    return acc


def identity_hom(r: int) -> Hom[Element]:
    B = FreeBrace(r)
    return make_hom(B, B.generators())


def permutation_hom(perm: Sequence[int]) -> Hom[Element]:
    """x_i -> x_perm[i]; perm need not be injective."""
    r = len(perm)
    B = FreeBrace(r)
    g = B.generators()
    for p in perm:
        if not 1 <= p <= r:
            raise core.IndexRangeError(f"image index {p} outside 1..{r}")
    return make_hom(B, [g[p - 1] for p in perm])


def reduction_hom(r: int, m: int) -> Hom:
    M = ModularFreeBrace(r, m)
    return make_hom(M, M.generators())


def check_hom(phi: Hom, cfg: SampleConfig) -> Report:
    """Additivity, multiplicativity and generator images of phi on samples."""
    if cfg.rank != phi.rank:
        raise core.RankMismatchError(f"config rank {cfg.rank} differs from hom rank {phi.rank}")
    C = phi.target
    D = FreeBrace(phi.rank)
    report = Report("hom", {"rank": cfg.rank, "trials": cfg.trials, "coeff_bound": cfg.coeff_bound, "seed": cfg.seed, **describe(C)})
    rec = _Recorder(report, C, fmt=lambda v: v if isinstance(v, str) else (D.format(v) if isinstance(v, Element) else C.format(v)))
    for i, (g, c) in enumerate(zip(D.generators(), phi.images), start=1):
        rec.start(-1, generator=f"x{i}")
        rec.equal("generator_image", apply_hom(phi, g), c)
    for t in range(cfg.trials):
        rng = cfg.rng(t)
        x, y = D.random_element(rng, cfg.coeff_bound), D.random_element(rng, cfg.coeff_bound)
        rec.start(t, x=x, y=y)
        px, py = apply_hom(phi, x), apply_hom(phi, y)
        rec.equal("additive", apply_hom(phi, core.add(x, y)), C.add(px, py))
        rec.equal("multiplicative", apply_hom(phi, core.mul(x, y)), C.mul(px, py))
    return report


def check_agree(phi: Hom, psi: Any, cfg: SampleConfig, name: str = "agree") -> Report:
    """phi and psi (a Hom or any callable on D) agree on sampled elements."""
    C = phi.target
    D = FreeBrace(phi.rank)
    report = Report(name, {"rank": cfg.rank, "trials": cfg.trials, "coeff_bound": cfg.coeff_bound, "seed": cfg.seed, **describe(C)})
    rec = _Recorder(report, C, fmt=lambda v: v if isinstance(v, str) else (D.format(v) if isinstance(v, Element) else C.format(v)))
    for t in range(cfg.trials):
        x = D.random_element(cfg.rng(t), cfg.coeff_bound)
        rec.start(t, x=x)
        rec.equal("agree", apply_hom(phi, x), psi(x))
    return report


def reduction_agrees(r: int, m: int, cfg: SampleConfig) -> Report:
    """The hom fixed by reduced generators is coordinatewise reduction."""
    return check_agree(reduction_hom(r, m), lambda x: reduce_mod(x, m), cfg, name="reduction")
