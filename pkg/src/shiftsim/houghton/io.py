"""JSON encoding of triples and flattened elements."""

from __future__ import annotations

import json

from ..classes import parse_class
from ..perm import from_dict, to_dict
from .triples import FiniteSet, HoughtonElement, Point, SigmaMap, Triple


def _points(data) -> tuple[Point, ...]:
    return tuple(Point(int(k), int(i)) for k, i in data)


def triple_to_dict(t: Triple) -> dict:
    return {
        "n": t.n,
        "class": str(t.cls),
        "minus": [list(q) for q in t.minus],
        "sigma": [[list(a), list(b)] for a, b in sorted(t.sigma.pairs)],
        "gs": [to_dict(g) for g in t.gs],
        "plus": [list(q) for q in t.plus],
    }


def triple_from_dict(data: dict) -> Triple:
    try:
        n = int(data["n"])
        cls = parse_class(data.get("class", "universe"))
        minus = FiniteSet(n, _points(data["minus"]))
        plus = FiniteSet(n, _points(data["plus"]))
        pairs = tuple((Point(*a), Point(*b)) for a, b in data["sigma"])
        gs = tuple(from_dict(g) for g in data["gs"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed triple: {exc}") from exc
    return Triple(n, minus, SigmaMap(plus, minus, pairs), gs, plus, cls)


def element_to_dict(e: HoughtonElement) -> dict:
    return {"n": e.n, "flat": to_dict(e.flat)}


def element_from_dict(data: dict) -> HoughtonElement:
    try:
        return HoughtonElement(int(data["n"]), from_dict(data["flat"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed element: {exc}") from exc


def dumps(value: Triple | HoughtonElement) -> str:
    if isinstance(value, Triple):
        return json.dumps(triple_to_dict(value))
    return json.dumps(element_to_dict(value))


def loads(text: str) -> Triple | HoughtonElement:
    data = json.loads(text)
    if isinstance(data, dict) and "flat" in data:
        return element_from_dict(data)
    return triple_from_dict(data)
