"""Exact arithmetic and verification for the free r-generated brace with D^3 = 0."""
from .core import (
    BraceError,
    Element,
    Index,
    IndexRangeError,
    Kind,
    RankMismatchError,
    add,
    alphabet,
    basis,
    decompose,
    dimension,
    generators,
    inv,
    lincomb_star,
    mul,
    neg,
    power,
    power_closed_form,
    scalar_star,
    smul,
    star,
    zero,
)
from .expr import format_canonical, parse, parse_element

__all__ = [
    "BraceError",
    "Element",
    "Index",
    "IndexRangeError",
    "Kind",
    "RankMismatchError",
    "add",
    "alphabet",
    "basis",
    "decompose",
    "dimension",
    "format_canonical",
    "generators",
    "inv",
    "lincomb_star",
    "mul",
    "neg",
    "parse",
    "parse_element",
    "power",
    "power_closed_form",
    "scalar_star",
    "smul",
    "star",
    "zero",
]
