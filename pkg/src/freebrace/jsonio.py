"""JSON encoding of elements.

    {"rank": r, "coords": [{"idx": [kind, i, j?, k?], "c": "<integer>"}]}

kind is one of "g", "p", "tr", "t"; coefficients are decimal strings so
that no precision is lost. Elements of D/mD carry an extra "mod" field.
"""
from __future__ import annotations

import json
from typing import Any

from .core import KIND_TAGS, TAG_KINDS, Element, Index
from .modular import ModElement, check_modulus


def to_dict(x: Element | ModElement) -> dict[str, Any]:
    out: dict[str, Any] = {
        "rank": x.rank,
        "coords": [{"idx": [KIND_TAGS[idx.kind], *idx.subs], "c": str(c)} for idx, c in x.items()],
    }
    if isinstance(x, ModElement):
        out["mod"] = x.modulus
    return out


def dumps(x: Element | ModElement) -> str:
    return json.dumps(to_dict(x))


def from_dict(data: dict[str, Any]) -> Element | ModElement:
    try:
        rank = data["rank"]
        items = []
        for entry in data["coords"]:
            tag, *subs = entry["idx"]
            idx = Index(TAG_KINDS[tag], tuple(subs))
            idx.validate(rank)
            items.append((idx, int(entry["c"])))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed element JSON: {exc}") from exc
    if "mod" in data:
        m = check_modulus(data["mod"])
        return ModElement(rank, m, items)
    return Element(rank, items)


def loads(text: str) -> Element | ModElement:
    return from_dict(json.loads(text))
