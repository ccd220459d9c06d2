"""Breadth-first enumeration of word balls in H_n(G)."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..config import Limits
from .triples import HoughtonElement, identity_element


class RadiusTooLarge(ValueError):
    pass


@dataclass
class Ball:
    elements: set[HoughtonElement]
    radius: int
    sphere_sizes: list[int] = field(default_factory=list)
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: HoughtonElement) -> bool:
        return e in self.elements


def ball_enumerate(gens: list[HoughtonElement], radius: int, n: int | None = None,
                   limits: Limits | None = None) -> Ball:
    """Elements of word length at most ``radius`` over ``gens`` and their inverses.

    Stops early, with ``truncated`` set, once more than ``limits.max_elements``
    elements are known.
    """
    limits = limits or Limits.from_env()
    if radius > limits.max_radius:
        raise RadiusTooLarge(f"radius {radius} exceeds the configured bound {limits.max_radius}")
    if n is None:
        n = gens[0].n if gens else 1
    if any(g.n != n for g in gens):
        raise ValueError("generators act on different numbers of rays")
    letters = list(dict.fromkeys(list(gens) + [g.inverse() for g in gens]))
    start = identity_element(n)
    seen = {start}
    frontier = [start]
    sizes = [1]
    for r in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for a in letters:
                y = a * x
                if y in seen:
                    continue
                seen.add(y)
                nxt.append(y)
                if len(seen) > limits.max_elements:
                    sizes.append(len(nxt))
                    return Ball(seen, r, sizes, truncated=True)
        if not nxt:
            break
        sizes.append(len(nxt))
        frontier = nxt
    return Ball(seen, radius, sizes)
