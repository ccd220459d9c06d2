"""Built-in shift-similar groups inside the eventually periodic universe."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .perm import IDENTITY, EPPerm, apply, compose, inverse
from .shift import insert_arrow, psi


class Kind(Enum):
    TRIVIAL = "trivial"
    SYM_M = "sym"
    SYMFIN = "symfin"
    E = "E"
    HOUGHTON_FLAT = "H"
    UNIVERSE = "universe"


class UnsupportedClass(ValueError):
    pass


class NotAMember(ValueError):
    pass


@dataclass(frozen=True)
class GroupClass:
    kind: Kind
    param: int = 0

    def __post_init__(self):
        needs_param = self.kind in (Kind.SYM_M, Kind.E, Kind.HOUGHTON_FLAT)
        if needs_param and self.param < 1:
            raise ValueError(f"{self.kind.value} needs a positive parameter")
        if not needs_param and self.param:
            raise ValueError(f"{self.kind.value} takes no parameter")

    @property
    def is_infinite(self) -> bool:
        return self.kind not in (Kind.TRIVIAL, Kind.SYM_M)

    @property
    def strongly_closed(self) -> bool:
        # finite classes are never strongly shift-similar (germ group undefined)
        return self.is_infinite

    def __str__(self) -> str:
        if self.kind in (Kind.SYM_M, Kind.E, Kind.HOUGHTON_FLAT):
            return f"{self.kind.value}({self.param})"
        return self.kind.value

    def __contains__(self, g: EPPerm) -> bool:
        return contains(self, g)


TRIVIAL = GroupClass(Kind.TRIVIAL)
SYMFIN = GroupClass(Kind.SYMFIN)
UNIVERSE = GroupClass(Kind.UNIVERSE)


def sym(m: int) -> GroupClass:
    return GroupClass(Kind.SYM_M, m)


def E(p: int) -> GroupClass:
    return GroupClass(Kind.E, p)


def H(n: int) -> GroupClass:
    return GroupClass(Kind.HOUGHTON_FLAT, n)


_CLASS_RE = re.compile(r"^\s*(trivial|symfin|universe|sym|E|H)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def parse_class(text: str) -> GroupClass:
    m = _CLASS_RE.match(text)
    if not m:
        raise ValueError(f"unknown class literal {text!r}")
    name, arg = m.groups()
    kind = {k.value: k for k in Kind}[name]
    return GroupClass(kind, int(arg) if arg else 0)


def contains(C: GroupClass, g: EPPerm) -> bool:
    k = C.kind
    if k is Kind.UNIVERSE:
        return True
    if k is Kind.TRIVIAL:
        return g.is_identity
    if k is Kind.SYMFIN:
        return g.p == 1
    if k is Kind.SYM_M:
        return g.p == 1 and all(apply(g, i) == i for i in range(C.param + 1, g.T + 1))
    if k is Kind.E:
        return C.param % g.p == 0
    # HOUGHTON_FLAT: the tail is periodic with period g.p, so one window decides residues
    n = C.param
    return n % g.p == 0 and all((apply(g, i) - i) % n == 0 for i in range(g.T + 1, g.T + n + 1))


def insertion_preserves(C: GroupClass, j: int, m: int) -> bool:
    """Whether ``insert_arrow(., j, m)`` maps members of ``C`` into ``C``.

    Insertion leaves the tail law ``h(x) = g(x - 1) + 1`` and the period
    untouched, so every infinite built-in class is closed under it for all
    ``j, m``.
    """
    return C.strongly_closed


def section_into_stabilizer(C: GroupClass, g: EPPerm, j: int) -> EPPerm:
    """``g'`` fixing ``j`` with ``psi(g', j) = g`` and ``g'`` in ``C``."""
    if not C.strongly_closed:
        raise UnsupportedClass(f"{C} is not strongly shift-similar")
    if not contains(C, g):
        raise NotAMember(f"element is not in {C}")
    return insert_arrow(g, j, j)


# -- bounded shift-closure falsifier -------------------------------------------


@dataclass(frozen=True)
class Witness:
    source: EPPerm
    j: int
    image: EPPerm


@dataclass
class FalsifierReport:
    violation: bool
    frontier_size: int
    witnesses: list[Witness] = field(default_factory=list)
    truncated: bool = False

    def summary(self) -> str:
        if self.truncated:
            return f"TRUNCATED after {self.frontier_size} elements"
        if not self.violation:
            return f"no violation found (ball size {self.frontier_size})"
        return f"{len(self.witnesses)} shifted images outside the word ball (ball size {self.frontier_size})"


def word_ball(gens: list[EPPerm], radius: int, max_elements: int) -> tuple[set[EPPerm], bool]:
    """All products of at most ``radius`` letters from ``gens`` and their inverses."""
    letters = list(dict.fromkeys(gens + [inverse(g) for g in gens]))
    ball = {IDENTITY}
    frontier = deque([IDENTITY])
    for _ in range(radius):
        nxt = deque()
        for x in frontier:
            for a in letters:
                y = compose(a, x)
                if y not in ball:
                    ball.add(y)
                    nxt.append(y)
                    if len(ball) > max_elements:
                        return ball, True
        frontier = nxt
    return ball, False


def closure_falsifier(elements: list[EPPerm], j_bound: int, depth: int,
                      max_elements: int = 100_000) -> FalsifierReport:
    """Look for some ``psi(a, j)`` that is not a short word in the generators.

    Generators and their inverses are the only sources: by the cocycle
    identity, shift-closure on a symmetric generating set implies it on the
    whole group. Membership is approximated by the word ball of radius
    ``depth``, so a reported violation is evidence rather than proof.
    """
    ball, truncated = word_ball(list(elements), depth, max_elements)
    if truncated:
        return FalsifierReport(False, len(ball), truncated=True)
    sources = list(dict.fromkeys(list(elements) + [inverse(a) for a in elements]))
    witnesses = [
        Witness(a, j, img)
        for a in sources
        for j in range(1, j_bound + 1)
        if (img := psi(a, j)) not in ball
    ]
    return FalsifierReport(bool(witnesses), len(ball), witnesses)
