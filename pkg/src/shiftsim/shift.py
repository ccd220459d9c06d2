"""Shifting maps, arrow insertion, and the germ shifting map.

``psi(g, j)`` deletes the arrow ``j -> g(j)`` and renumbers both copies of N;
``insert_arrow(g, j, m)`` is its one-sided inverse, adding the arrow
``j -> m`` and renumbering the rest around it.
"""

from __future__ import annotations

from .perm import EPPerm, Germ, apply, from_function


def psi(g: EPPerm, j: int) -> EPPerm:
    if j < 1:
        raise ValueError(f"j must be positive, got {j}")
    if g.is_identity:
        return g
    gj = apply(g, j)

    def f(i: int) -> int:
        v = apply(g, i) if i < j else apply(g, i + 1)
        return v if v < gj else v - 1

    t0 = max(j, g.T, gj + g.displacement)
    return from_function(f, g.p, t0)


def insert_arrow(g: EPPerm, j: int, m: int) -> EPPerm:
    """The unique ``h`` with ``h(j) = m`` and ``psi(h, j) = g``."""
    if j < 1 or m < 1:
        raise ValueError(f"j and m must be positive, got j={j}, m={m}")

    def f(x: int) -> int:
        if x == j:
            return m
        v = apply(g, x if x < j else x - 1)
        return v if v < m else v + 1

    t0 = max(j, g.T + 1, m + g.displacement + 1)
    return from_function(f, g.p, t0)


def germ_shift(a: Germ) -> Germ:
    return Germ(psi(a.rep, 1))
