"""Named, seeded identity suites.

Each suite draws its own corpus from ``random.Random(seed)`` and returns a
:class:`SuiteResult`; the ``check`` subcommand and the acceptance tests both
run them from here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .classes import E, H, SYMFIN, TRIVIAL, UNIVERSE, GroupClass, contains, sym
from .houghton import (
    HoughtonElement,
    ball_enumerate,
    chi,
    collapse_finite,
    composite_iso,
    embed_gn,
    eval_triple,
    factor_kind,
    factorize,
    general_expand,
    identity_element,
    invert_triple,
    minimal_triple,
    multiply,
    psi1_on_hng,
    reduce_h1_to_g,
)
from .houghton.triples import Triple
from .perm import ALPHA, LAMBDA, EPPerm, compose, conj, germ, inverse, mk_finite, mk_periodic
from .sampling import random_balanced_triple, random_eperm, random_member, random_triple
from .shift import germ_shift, insert_arrow, psi

DEFAULT_SEED = 20240611
BUILTIN_CLASSES: tuple[GroupClass, ...] = (TRIVIAL, sym(4), SYMFIN, E(2), E(3), H(2), H(3), UNIVERSE)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, what: Callable[[], str]) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 5:
            self.failures.append(what())

    def record_all(self, checks: list[tuple[bool, Callable[[], str]]]) -> None:
        """One sample made of several laws; it passes when all of them hold."""
        failed = [what for ok, what in checks if not ok]
        self.record(not failed, failed[0] if failed else str)

    def summary(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.passed}/{self.total}"
        return "\n".join([head] + [f"  counterexample: {f}" for f in self.failures])


def _corpus(rng: random.Random, samples: int) -> list[EPPerm]:
    return [random_eperm(rng) for _ in range(samples)]


def two_shifts(samples: int, seed: int) -> SuiteResult:
    """``psi(psi(g, j), j') == psi(psi(g, j'+1), j)`` for ``j <= j' <= 12``."""
    rng = random.Random(seed)
    res = SuiteResult("two-shifts")
    for g in _corpus(rng, samples):
        checks = []
        for _ in range(3):
            j, jp = sorted((rng.randint(1, 12), rng.randint(1, 12)))
            ok = psi(psi(g, j), jp) == psi(psi(g, jp + 1), j)
            checks.append((ok, lambda j=j, jp=jp: f"g={g!r} j={j} j'={jp}"))
        res.record_all(checks)
    return res


def cocycle(samples: int, seed: int) -> SuiteResult:
    """``psi(g h, j) == psi(g, h(j)) psi(h, j)``."""
    rng = random.Random(seed)
    res = SuiteResult("cocycle")
    for g in _corpus(rng, samples):
        h = random_eperm(rng)
        gh = compose(g, h)
        checks = []
        for j in rng.sample(range(1, 13), 3):
            ok = psi(gh, j) == compose(psi(g, h(j)), psi(h, j))
            checks.append((ok, lambda j=j: f"g={g!r} h={h!r} j={j}"))
        res.record_all(checks)
    return res


def inverse_identity(samples: int, seed: int) -> SuiteResult:
    """``psi(g, j)^-1 == psi(g^-1, g(j))``."""
    rng = random.Random(seed)
    res = SuiteResult("inverse")
    for g in _corpus(rng, samples):
        g_inv = inverse(g)
        checks = []
        for j in rng.sample(range(1, 13), 3):
            ok = inverse(psi(g, j)) == psi(g_inv, g(j))
            checks.append((ok, lambda j=j: f"g={g!r} j={j}"))
        res.record_all(checks)
    return res


def section(samples: int, seed: int) -> SuiteResult:
    """``insert_arrow`` is a section of ``psi`` and ``psi`` forgets exactly one arrow."""
    rng = random.Random(seed)
    res = SuiteResult("section")
    for g in _corpus(rng, samples):
        j, m = rng.randint(1, 8), rng.randint(1, 8)
        h = insert_arrow(g, j, m)
        res.record_all([
            (psi(h, j) == g and h(j) == m, lambda: f"psi(insert) g={g!r} j={j} m={m}"),
            (insert_arrow(psi(g, j), j, g(j)) == g, lambda: f"insert(psi) g={g!r} j={j}"),
        ])
    return res


def class_closure(samples: int, seed: int) -> SuiteResult:
    """Members stay members under psi, products, inverses and (strong classes) insertion."""
    rng = random.Random(seed)
    res = SuiteResult("class-closure")
    for C in BUILTIN_CLASSES:
        members = [random_member(rng, C) for _ in range(samples)]
        for g in members:
            h = rng.choice(members)
            j, m = rng.randint(1, 10), rng.randint(1, 10)
            checks = [
                (contains(C, g), lambda: f"{C}: sampler produced non-member {g!r}"),
                (contains(C, psi(g, j)), lambda: f"{C}: psi(g,{j}) g={g!r}"),
                (contains(C, compose(g, h)), lambda: f"{C}: g*h g={g!r} h={h!r}"),
                (contains(C, inverse(g)), lambda: f"{C}: g^-1 g={g!r}"),
            ]
            if C.strongly_closed:
                checks.append((contains(C, insert_arrow(g, j, m)), lambda: f"{C}: insert[{j},{m}] g={g!r}"))
            res.record_all(checks)
    return res


HALF_EVEN_FIXED = mk_periodic(4, 4, [3, 2, 1, 4])  # (1 3)(5 7)(9 11)...
HALF_ODD_FIXED = mk_periodic(4, 4, [1, 4, 3, 2])  # (2 4)(6 8)(10 12)...


def half_finite(samples: int = 6, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Shifts of half-supported permutations agree in germ with a fixed conjugate."""
    res = SuiteResult("half-finite")
    even_target = germ(conj(HALF_EVEN_FIXED, compose(ALPHA, LAMBDA)))
    odd_target = germ(conj(HALF_ODD_FIXED, LAMBDA))
    for j in range(1, samples + 1):
        res.record_all([
            (germ(psi(HALF_EVEN_FIXED, j)) == even_target, lambda: f"even-fixing j={j}"),
            (germ(psi(HALF_ODD_FIXED, j)) == odd_target, lambda: f"odd-fixing j={j}"),
        ])
    return res


def germ_shifts(samples: int, seed: int) -> SuiteResult:
    """The germ of ``psi(g, j)`` does not depend on ``j``, and germ shifting is multiplicative."""
    rng = random.Random(seed)
    res = SuiteResult("germ-shift")
    for g in _corpus(rng, samples):
        h = random_eperm(rng)
        i, j = rng.randint(1, 8), rng.randint(1, 8)
        hom = germ_shift(germ(compose(g, h))) == germ_shift(germ(g)) * germ_shift(germ(h))
        res.record_all([
            (germ(psi(g, i)) == germ(psi(g, j)), lambda: f"g={g!r} i={i} j={j}"),
            (hom, lambda: f"g={g!r} h={h!r}"),
        ])
    return res


def finite_support_collapse(samples: int, seed: int) -> SuiteResult:
    """``psi(., 1)`` applied ``B`` times kills a permutation supported in ``[1..B]``."""
    rng = random.Random(seed)
    res = SuiteResult("support-collapse")
    for _ in range(samples):
        f = random_member(rng, SYMFIN)
        g = f
        for _ in range(f.T):
            g = psi(g, 1)
        res.record(g.is_identity, lambda: f"f={f!r}")
    return res


def _triple_laws(rng: random.Random, a: Triple, b: Triple) -> list[tuple[bool, Callable[[], str]]]:
    ea, eb = a.element, b.element
    k, j = rng.randint(1, a.n), rng.randint(1, 6)
    expanded = general_expand(a, k, j)
    ab = multiply(a, b)
    c = chi(ab)
    return [
        (eval_triple(expanded) == ea, lambda: f"expand ({k},{j}) of {a}"),
        (chi(expanded) == chi(a), lambda: f"chi under expansion of {a}"),
        (eval_triple(minimal_triple(ea, a.cls)) == ea, lambda: f"minimal triple of {a}"),
        (ab.element == ea * eb, lambda: f"multiply {a} {b}"),
        (eval_triple(invert_triple(a)) == ea.inverse(), lambda: f"invert {a}"),
        (multiply(a, invert_triple(a)).element.is_identity, lambda: f"t * t^-1 of {a}"),
        (c == tuple(x + y for x, y in zip(chi(a), chi(b))) and sum(c) == 0, lambda: f"chi of {a} * {b}"),
    ]


def triples(samples: int, seed: int) -> SuiteResult:
    """Expansion invariance, minimal-triple round trip, group law and chi on H_2(E_2), H_3(SYMFIN)."""
    rng = random.Random(seed)
    res = SuiteResult("triples")
    for n, C in ((2, E(2)), (3, SYMFIN)):
        for _ in range(samples):
            a, b = random_triple(rng, n, C), random_triple(rng, n, C)
            res.record_all(_triple_laws(rng, a, b))
    return res


def h1(samples: int, seed: int) -> SuiteResult:
    """H_1(E_2) triples reduce to E(2) members with the same action."""
    rng = random.Random(seed)
    res = SuiteResult("h1")
    C = E(2)
    for _ in range(samples):
        t = random_triple(rng, 1, C)
        g = reduce_h1_to_g(t, C)
        res.record(contains(C, g) and g == t.element.flat, lambda: f"t={t}")
    return res


def factorization(samples: int, seed: int, max_factors: int = 8) -> SuiteResult:
    """H_2(E_2) triples split into H_2 and E_2^2 factors whose product is the input."""
    rng = random.Random(seed)
    res = SuiteResult("factorize")
    C = E(2)
    for _ in range(samples):
        t = random_triple(rng, 2, C)
        fs = factorize(t)
        prod = identity_element(2)
        for f in fs:
            prod = prod * f.element
        kinds_ok = all(factor_kind(f) in ("H", "G") for f in fs)
        members_ok = all(contains(C, g) for f in fs for g in f.gs)
        ok = len(fs) <= max_factors and kinds_ok and members_ok and prod == t.element
        res.record(ok, lambda: f"t={t} factors={len(fs)}")
    return res


def _cyclic_shift_sample(rng: random.Random, n: int, C: GroupClass) -> tuple[EPPerm, ...]:
    while True:
        gs = tuple(random_member(rng, C) for _ in range(n))
        if gs[0](1) == 1:
            return gs


def hng(samples: int, seed: int) -> SuiteResult:
    """Shifting on H_n(G) cycles the components; nesting H_2(H_2) into H_4 respects products."""
    rng = random.Random(seed)
    res = SuiteResult("hng")
    C = E(2)
    for _ in range(samples):
        n = rng.randint(2, 3)
        gs = _cyclic_shift_sample(rng, n, C)
        got = psi1_on_hng(embed_gn(gs, C).element)
        want = embed_gn(gs[1:] + (psi(gs[0], 1),), C).element
        res.record(got == want, lambda: f"gs={gs}")

    def nested() -> HoughtonElement:
        outer = random_balanced_triple(rng, 2, UNIVERSE, 2)
        inner = tuple(random_triple(rng, 2, C).element.flat for _ in range(2))
        return Triple(2, outer.minus, outer.sigma, inner, outer.plus).element

    sample = [(nested(), nested()) for _ in range(samples)]
    images: dict[HoughtonElement, HoughtonElement] = {}
    for a, b in sample:
        lhs = composite_iso(a * b, 2, C)
        rhs = composite_iso(a, 2, C) * composite_iso(b, 2, C)
        res.record(lhs == rhs, lambda: f"a={a} b={b}")
        for x in (a, b):
            images[x] = composite_iso(x, 2, C)
    res.record(len(set(images.values())) == len(images), lambda: "composite_iso is not injective on the sample")
    return res


def finite_collapse(samples: int, seed: int) -> SuiteResult:
    """Over SYM_M(4) every triple expands to one with identity components."""
    rng = random.Random(seed)
    res = SuiteResult("finite-collapse")
    C = sym(4)
    for _ in range(samples):
        n = rng.randint(1, 3)
        t = random_triple(rng, n, C)
        c = collapse_finite(t)
        ok = all(g.is_identity for g in c.gs) and c.element == t.element
        res.record(ok, lambda: f"t={t}")
    return res


def e2_ball(samples: int = 6, seed: int = DEFAULT_SEED) -> SuiteResult:
    """The word ball on alpha, lambda, (1 2) lies in E(2) and reaches (1 3)."""
    res = SuiteResult("ball")
    gens = [HoughtonElement(1, g) for g in (ALPHA, LAMBDA, mk_finite([(1, 2)]))]
    ball = ball_enumerate(gens, samples)
    res.record(not ball.truncated, lambda: "ball enumeration truncated")
    res.record(len(ball) >= 20, lambda: f"only {len(ball)} elements")
    res.record(HoughtonElement(1, mk_finite([(1, 3)])) in ball, lambda: "(1 3) missing")
    for e in ball.elements:
        res.record(contains(E(2), e.flat), lambda: f"{e.flat!r} outside E(2)")
    return res


def worked_example(samples: int = 1, seed: int = DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("worked-example")
    g = mk_finite([(1, 3), (2, 5, 6, 4)])
    res.record(psi(g, 1) == mk_finite([(1, 4, 5, 3, 2)]), lambda: repr(psi(g, 1)))
    return res


SUITES: dict[str, Callable[[int, int], SuiteResult]] = {
    "worked-example": worked_example,
    "two-shifts": two_shifts,
    "cocycle": cocycle,
    "inverse": inverse_identity,
    "section": section,
    "class-closure": class_closure,
    "half-finite": half_finite,
    "germ-shift": germ_shifts,
    "support-collapse": finite_support_collapse,
    "triples": triples,
    "h1": h1,
    "factorize": factorization,
    "hng": hng,
    "finite-collapse": finite_collapse,
    "ball": e2_ball,
}

DEFAULT_SAMPLES = {
    "worked-example": 1,
    "two-shifts": 1000,
    "cocycle": 1000,
    "inverse": 1000,
    "section": 1000,
    "class-closure": 500,
    "half-finite": 6,
    "germ-shift": 300,
    "support-collapse": 300,
    "triples": 300,
    "h1": 100,
    "factorize": 100,
    "hng": 100,
    "finite-collapse": 100,
    "ball": 6,
}


def run_suite(name: str, samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](DEFAULT_SAMPLES[name] if samples is None else samples, seed)
