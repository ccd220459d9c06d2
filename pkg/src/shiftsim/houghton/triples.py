"""Representative triples ``(M-, sigma(g_1..g_n), M+)`` and their semantics.

Points of ``[n] x N`` are flattened to N by ``(k, i) -> k + (i - 1) n``; a
:class:`HoughtonElement` is the flattened bijection, which gives triples a
decidable equality without searching for common expansions.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Iterable, NamedTuple, Sequence

from ..classes import UNIVERSE, GroupClass, NotAMember, contains
from ..perm import IDENTITY, EPPerm, apply, compose, from_function, inverse
from ..shift import psi


class Point(NamedTuple):
    ray: int
    index: int

    def __str__(self) -> str:
        return f"({self.ray},{self.index})"


def flatten(q: Point, n: int) -> int:
    return q.ray + (q.index - 1) * n


def unflatten(x: int, n: int) -> Point:
    return Point((x - 1) % n + 1, (x - 1) // n + 1)


@dataclass(frozen=True)
class FiniteSet:
    n: int
    points: tuple[Point, ...] = ()

    def __post_init__(self):
        pts = tuple(sorted(Point(*q) for q in self.points))
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated points in {pts}")
        for q in pts:
            if not (1 <= q.ray <= self.n and q.index >= 1):
                raise ValueError(f"point {q} is outside [{self.n}] x N")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, q: object) -> bool:
        return q in self._members

    @cached_property
    def _members(self) -> frozenset[Point]:
        return frozenset(self.points)

    @cached_property
    def _rays(self) -> dict[int, list[int]]:
        rays: dict[int, list[int]] = {k: [] for k in range(1, self.n + 1)}
        for q in self.points:
            rays[q.ray].append(q.index)
        return rays

    def on_ray(self, k: int) -> list[int]:
        return self._rays[k]

    def count(self, k: int) -> int:
        return len(self._rays[k])

    def max_index(self, k: int) -> int:
        idx = self._rays[k]
        return idx[-1] if idx else 0

    def beta(self, k: int, j: int) -> Point:
        """The ``j``-th point of ray ``k`` not in the set."""
        i = j
        for m in self._rays[k]:
            if m <= i:
                i += 1
            else:
                break
        return Point(k, i)

    def beta_inv(self, q: Point) -> int:
        if q in self:
            raise ValueError(f"{q} lies in the finite set")
        return q.index - bisect_left(self._rays[q.ray], q.index)

    def add(self, q: Point) -> FiniteSet:
        return FiniteSet(self.n, self.points + (q,))


def beta(M: FiniteSet, k: int, j: int) -> Point:
    if not 1 <= k <= M.n:
        raise ValueError(f"ray {k} out of range for n={M.n}")
    return M.beta(k, j)


@dataclass(frozen=True)
class SigmaMap:
    domain: FiniteSet
    codomain: FiniteSet
    pairs: tuple[tuple[Point, Point], ...]

    def __post_init__(self):
        pairs = tuple(sorted((Point(*a), Point(*b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        if sorted(a for a, _ in pairs) != list(self.domain.points) or len(set(a for a, _ in pairs)) != len(pairs):
            raise ValueError("sigma does not cover its domain exactly")
        if sorted(b for _, b in pairs) != list(self.codomain.points):
            raise ValueError("sigma is not a bijection onto its codomain")

    @cached_property
    def _map(self) -> dict[Point, Point]:
        return dict(self.pairs)

    def __call__(self, q: Point) -> Point:
        return self._map[q]

    def inverse(self) -> SigmaMap:
        return SigmaMap(self.codomain, self.domain, tuple((b, a) for a, b in self.pairs))


class NotInClass(NotAMember):
    def __init__(self, ray: int, cls: GroupClass):
        super().__init__(f"element not in H_n({cls}): ray {ray} component is outside the class")
        self.ray = ray


@dataclass(frozen=True)
class HoughtonElement:
    """An element of some ``H_n(G)``, stored as its flattened permutation of N."""

    n: int
    flat: EPPerm

    def __post_init__(self):
        g, n = self.flat, self.n
        if any((apply(g, x) - x) % n for x in range(g.T + 1, g.T + lcm(g.p, n) + 1)):
            raise ValueError(f"flattened permutation does not preserve rays eventually (n={n})")

    def __call__(self, q: Point) -> Point:
        return unflatten(apply(self.flat, flatten(q, self.n)), self.n)

    def __mul__(self, other: HoughtonElement) -> HoughtonElement:
        if other.n != self.n:
            raise ValueError("ray counts differ")
        return HoughtonElement(self.n, compose(self.flat, other.flat))

    def inverse(self) -> HoughtonElement:
        return HoughtonElement(self.n, inverse(self.flat))

    @property
    def is_identity(self) -> bool:
        return self.flat.is_identity


def identity_element(n: int) -> HoughtonElement:
    return HoughtonElement(n, IDENTITY)


@dataclass(frozen=True)
class Triple:
    n: int
    minus: FiniteSet
    sigma: SigmaMap
    gs: tuple[EPPerm, ...]
    plus: FiniteSet
    cls: GroupClass = UNIVERSE

    def __post_init__(self):
        object.__setattr__(self, "gs", tuple(self.gs))
        if len(self.gs) != self.n:
            raise ValueError(f"expected {self.n} components, got {len(self.gs)}")
        if self.minus.n != self.n or self.plus.n != self.n:
            raise ValueError("finite sets live on a different number of rays")
        if self.sigma.domain != self.plus or self.sigma.codomain != self.minus:
            raise ValueError("sigma must map M+ onto M-")
        for k, g in enumerate(self.gs, 1):
            if not contains(self.cls, g):
                raise NotInClass(k, self.cls)

    @cached_property
    def element(self) -> HoughtonElement:
        return eval_triple(self)

    def __mul__(self, other: Triple) -> Triple:
        return multiply(self, other)


def make_triple(n: int, minus: Iterable, sigma: Iterable, gs: Sequence[EPPerm], plus: Iterable,
                cls: GroupClass = UNIVERSE) -> Triple:
    """Convenience constructor from plain ``(k, i)`` pairs."""
    M_minus = FiniteSet(n, tuple(Point(*q) for q in minus))
    M_plus = FiniteSet(n, tuple(Point(*q) for q in plus))
    pairs = tuple((Point(*a), Point(*b)) for a, b in sigma)
    return Triple(n, M_minus, SigmaMap(M_plus, M_minus, pairs), tuple(gs), M_plus, cls)


def identity_triple(n: int, cls: GroupClass = UNIVERSE) -> Triple:
    return make_triple(n, (), (), [IDENTITY] * n, (), cls)


def _point_image(t: Triple, q: Point) -> Point:
    if q in t.plus:
        return t.sigma(q)
    j = t.plus.beta_inv(q)
    return t.minus.beta(q.ray, apply(t.gs[q.ray - 1], j))


def eval_triple(t: Triple) -> HoughtonElement:
    n = t.n
    if not len(t.plus) and all(g.is_identity for g in t.gs):
        return identity_element(n)
    period = n * lcm(*(g.p for g in t.gs))
    reach = max(
        t.plus.max_index(k) + max(g.T, t.minus.max_index(k) + g.displacement)
        for k, g in enumerate(t.gs, 1)
    ) + 1
    flat = from_function(lambda x: flatten(_point_image(t, unflatten(x, n)), n), period, n * reach)
    return HoughtonElement(n, flat)


def general_expand(t: Triple, k: int, j: int) -> Triple:
    if not 1 <= k <= t.n:
        raise ValueError(f"ray {k} out of range for n={t.n}")
    if j < 1:
        raise ValueError(f"j must be positive, got {j}")
    g = t.gs[k - 1]
    new_plus = t.plus.beta(k, j)
    new_minus = t.minus.beta(k, apply(g, j))
    plus = t.plus.add(new_plus)
    minus = t.minus.add(new_minus)
    sigma = SigmaMap(plus, minus, t.sigma.pairs + ((new_plus, new_minus),))
    gs = t.gs[: k - 1] + (psi(g, j),) + t.gs[k:]
    return Triple(t.n, minus, sigma, gs, plus, t.cls)


def expand(t: Triple, k: int) -> Triple:
    return general_expand(t, k, 1)


def expand_plus_to(t: Triple, target: FiniteSet) -> Triple:
    """General expansions until ``M+`` contains ``target``."""
    for q in target:
        if q not in t.plus:
            t = general_expand(t, q.ray, t.plus.beta_inv(q))
    return t


def expand_minus_to(t: Triple, target: FiniteSet) -> Triple:
    """General expansions until ``M-`` contains ``target``."""
    for q in target:
        if q not in t.minus:
            g = t.gs[q.ray - 1]
            t = general_expand(t, q.ray, g.preimage(t.minus.beta_inv(q)))
    return t


def multiply(a: Triple, b: Triple) -> Triple:
    if a.n != b.n:
        raise ValueError("ray counts differ")
    if a.cls != b.cls:
        raise ValueError(f"class tags differ: {a.cls} vs {b.cls}")
    union = FiniteSet(a.n, tuple(set(a.plus.points) | set(b.minus.points)))
    a = expand_plus_to(a, union)
    b = expand_minus_to(b, union)
    pairs = tuple((q, a.sigma(b.sigma(q))) for q in b.plus)
    sigma = SigmaMap(b.plus, a.minus, pairs)
    gs = tuple(compose(g, h) for g, h in zip(a.gs, b.gs))
    return Triple(a.n, a.minus, sigma, gs, b.plus, a.cls)


def invert_triple(t: Triple) -> Triple:
    return Triple(t.n, t.plus, t.sigma.inverse(), tuple(inverse(g) for g in t.gs), t.minus, t.cls)


def chi(t: Triple) -> tuple[int, ...]:
    return tuple(t.minus.count(k) - t.plus.count(k) for k in range(1, t.n + 1))


def embed_gn(gs: Sequence[EPPerm], cls: GroupClass = UNIVERSE) -> Triple:
    n = len(gs)
    empty = FiniteSet(n)
    return Triple(n, empty, SigmaMap(empty, empty, ()), tuple(gs), empty, cls)


def minimal_triple(e: HoughtonElement, cls: GroupClass = UNIVERSE) -> Triple:
    """Triple whose ``M+`` is exactly the set of points sent to another ray.

    For finite classes the components are then pushed through ``psi(., 1)``
    until they land in the class (possible whenever they have finite support).
    """
    n, flat = e.n, e.flat
    moved = [unflatten(x, n) for x in range(1, flat.T + 1) if (apply(flat, x) - x) % n]
    plus = FiniteSet(n, tuple(moved))
    minus = FiniteSet(n, tuple(e(q) for q in moved))
    sigma = SigmaMap(plus, minus, tuple((q, e(q)) for q in moved))
    period = lcm(flat.p, n) // n
    reach = (flat.T // n + 1) + len(moved) + flat.displacement // n + 2
    gs = []
    for k in range(1, n + 1):
        top = plus.max_index(k) + minus.max_index(k) + reach
        g = from_function(lambda j, k=k: minus.beta_inv(e(plus.beta(k, j))), period, top)
        gs.append(g)
    t = Triple(n, minus, sigma, tuple(gs), plus, UNIVERSE)
    bad = [k for k, g in enumerate(t.gs, 1) if not contains(cls, g)]
    if bad and not cls.is_infinite:
        t = _push_into_finite_class(t, cls)
        bad = [k for k, g in enumerate(t.gs, 1) if not contains(cls, g)]
    if bad:
        raise NotInClass(bad[0], cls)
    return Triple(n, t.minus, t.sigma, t.gs, t.plus, cls)


def _push_into_finite_class(t: Triple, cls: GroupClass) -> Triple:
    for k in range(1, t.n + 1):
        g = t.gs[k - 1]
        if g.p != 1:
            continue
        # psi(., 1) strictly shrinks the support bound of a finite permutation
        while not contains(cls, t.gs[k - 1]):
            t = expand(t, k)
    return t


def collapse_finite(t: Triple) -> Triple:
    """Expand at ``j = 1`` until every component is the identity."""
    for k in range(1, t.n + 1):
        if t.gs[k - 1].p != 1:
            raise ValueError(f"ray {k} component does not have finite support")
        while not t.gs[k - 1].is_identity:
            t = expand(t, k)
    return t


def is_houghton_factor(t: Triple) -> bool:
    return all(g.is_identity for g in t.gs)


def is_gn_factor(t: Triple) -> bool:
    return not len(t.plus) and not len(t.minus)
