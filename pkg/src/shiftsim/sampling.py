"""Seeded random generators for permutations, class members and triples."""

from __future__ import annotations

import random

from .classes import GroupClass, Kind
from .perm import IDENTITY, EPPerm, compose, from_function
from .houghton.triples import (
    FiniteSet,
    Point,
    SigmaMap,
    Triple,
)

MAX_PERIOD = 6
MAX_THRESHOLD = 24


def random_finite(rng: random.Random, size: int) -> EPPerm:
    """A uniformly random permutation of ``{1..size}``."""
    if size < 2:
        return IDENTITY
    image = list(range(1, size + 1))
    rng.shuffle(image)
    return from_function(lambda i: image[i - 1] if i <= size else i, 1, size)


def random_residue_perm(rng: random.Random, p: int) -> EPPerm:
    """``r + (q-1)p -> pi(r) + (q-1)p`` for a random permutation ``pi`` of residues."""
    pi = list(range(1, p + 1))
    rng.shuffle(pi)
    return from_function(lambda x: pi[(x - 1) % p] + (x - 1) // p * p, p, p)


def random_translation(rng: random.Random, p: int, max_points: int = 3, max_index: int = 4) -> EPPerm:
    """Flattened element of H_p moving a few points between rays (``p >= 2``)."""
    size = rng.randint(1, max_points)
    pool = [Point(k, i) for k in range(1, p + 1) for i in range(1, max_index + 1)]
    plus = FiniteSet(p, tuple(rng.sample(pool, size)))
    minus = FiniteSet(p, tuple(rng.sample(pool, size)))
    targets = list(minus.points)
    rng.shuffle(targets)
    sigma = SigmaMap(plus, minus, tuple(zip(plus.points, targets)))
    t = Triple(p, minus, sigma, (IDENTITY,) * p, plus)
    return t.element.flat


def random_eperm(rng: random.Random, max_p: int = MAX_PERIOD, max_T: int = MAX_THRESHOLD,
                 period: int | None = None) -> EPPerm:
    """Random eventually periodic permutation with period at most ``max_p`` and
    threshold at most ``max_T``; with ``period`` set, the period divides it."""
    while True:
        p = period or rng.randint(1, max_p)
        g = random_finite(rng, rng.randint(0, 8))
        if p > 1:
            if rng.random() < 0.7:
                g = compose(g, random_translation(rng, p))
            if rng.random() < 0.5:
                g = compose(g, random_residue_perm(rng, p))
            g = compose(g, random_finite(rng, rng.randint(0, 6)))
        if g.p <= max_p and g.T <= max_T:
            return g


def random_member(rng: random.Random, cls: GroupClass) -> EPPerm:
    kind = cls.kind
    if kind is Kind.TRIVIAL:
        return IDENTITY
    if kind is Kind.SYM_M:
        return random_finite(rng, cls.param)
    if kind is Kind.SYMFIN:
        return random_finite(rng, rng.randint(0, 8))
    if kind is Kind.E:
        return random_eperm(rng, period=cls.param, max_T=max(MAX_THRESHOLD, 4 * cls.param))
    if kind is Kind.HOUGHTON_FLAT:
        n = cls.param
        g = random_finite(rng, rng.randint(0, 6))
        if n > 1:
            g = compose(g, random_translation(rng, n))
        return g
    return random_eperm(rng)


def random_point_set(rng: random.Random, n: int, size: int, max_index: int) -> FiniteSet:
    pool = [Point(k, i) for k in range(1, n + 1) for i in range(1, max_index + 1)]
    return FiniteSet(n, tuple(rng.sample(pool, size)))


def random_triple(rng: random.Random, n: int, cls: GroupClass, max_points: int = 3,
                  max_index: int = 4) -> Triple:
    size = rng.randint(0, max_points)
    plus = random_point_set(rng, n, size, max_index)
    minus = random_point_set(rng, n, size, max_index)
    targets = list(minus.points)
    rng.shuffle(targets)
    sigma = SigmaMap(plus, minus, tuple(zip(plus.points, targets)))
    gs = tuple(random_member(rng, cls) for _ in range(n))
    return Triple(n, minus, sigma, gs, plus, cls)


def random_balanced_triple(rng: random.Random, n: int, cls: GroupClass, multiple: int,
                           max_points: int = 4, max_index: int = 4) -> Triple:
    """Random triple whose translation amounts are all divisible by ``multiple``."""
    while True:
        t = random_triple(rng, n, cls, max_points, max_index)
        counts_plus = [t.plus.count(k) for k in range(1, n + 1)]
        counts_minus = [t.minus.count(k) for k in range(1, n + 1)]
        if all((a - b) % multiple == 0 for a, b in zip(counts_minus, counts_plus)):
            return t

