"""Structural maps on H_n(G): factorization, H_1 reduction, shifting, nesting."""

from __future__ import annotations

from ..classes import GroupClass, UnsupportedClass, section_into_stabilizer
from ..perm import IDENTITY, EPPerm, compose
from ..shift import psi
from .triples import (
    FiniteSet,
    HoughtonElement,
    Point,
    SigmaMap,
    Triple,
    eval_triple,
    is_gn_factor,
    is_houghton_factor,
    minimal_triple,
    multiply,
)


def _h_triple(n: int, minus: FiniteSet, pairs, plus: FiniteSet, cls: GroupClass) -> Triple:
    return Triple(n, minus, SigmaMap(plus, minus, tuple(pairs)), (IDENTITY,) * n, plus, cls)


def factorize(t: Triple) -> list[Triple]:
    """Write ``t`` as a product of H_n factors and G^n factors (``n >= 2``).

    ``t = [M-, sigma, M+] . [M+, (g_1..g_n), M+]``, the second factor splits
    ray by ray, and each ``[M, (.., g_k, ..), M]`` is conjugated by an H_n
    element moving ``M`` onto an initial segment of another ray, after which
    it reduces to ``[{}, (.., g_k, ..), {}]``. Adjacent factors of the same
    kind are merged and identity factors dropped.
    """
    n, cls = t.n, t.cls
    if n < 2:
        raise UnsupportedClass("factorization needs n >= 2; use reduce_h1_to_g for n = 1")
    M = t.plus
    empty = FiniteSet(n)
    raw: list[Triple] = [_h_triple(n, t.minus, t.sigma.pairs, M, cls)]
    for k, g in enumerate(t.gs, 1):
        if g.is_identity:
            continue
        gs = tuple(g if r == k else IDENTITY for r in range(1, n + 1))
        e_k = Triple(n, empty, SigmaMap(empty, empty, ()), gs, empty, cls)
        if not len(M):
            raw.append(e_k)
            continue
        other = 2 if k == 1 else 1
        target = FiniteSet(n, tuple(Point(other, i) for i in range(1, len(M) + 1)))
        mu = list(zip(M.points, target.points))
        c = _h_triple(n, target, mu, M, cls)
        c_inv = _h_triple(n, M, [(b, a) for a, b in mu], target, cls)
        raw += [c_inv, e_k, c]

    out: list[Triple] = []
    for f in raw:
        if out and _kind(out[-1]) == _kind(f):
            out[-1] = multiply(out[-1], f)
        else:
            out.append(f)
    return [f for f in out if not eval_triple(f).is_identity]


def _kind(t: Triple) -> str:
    if is_gn_factor(t):
        return "G"
    if is_houghton_factor(t):
        return "H"
    return "?"


def factor_kind(t: Triple) -> str:
    """``"H"`` for an H_n element, ``"G"`` for a G^n element, ``"?"`` otherwise."""
    return _kind(t)


def reduce_h1_to_g(t: Triple, cls: GroupClass) -> EPPerm:
    """The element of ``cls`` equal to the H_1 triple ``t``."""
    if t.n != 1:
        raise ValueError("reduce_h1_to_g needs a triple on one ray")
    if not cls.strongly_closed:
        raise UnsupportedClass(f"{cls} is not strongly shift-similar")
    # t = [M-, sigma, M+] . [M+, g, M+]; the first factor has finite support
    finite = eval_triple(_h_triple(1, t.minus, t.sigma.pairs, t.plus, cls)).flat
    g = t.gs[0]
    M = list(t.plus.points)
    while M:
        q = M.pop()
        j = FiniteSet(1, tuple(M)).beta_inv(q)
        g = section_into_stabilizer(cls, g, j)
    return compose(finite, g)


def psi1_on_hng(e: HoughtonElement) -> HoughtonElement:
    return HoughtonElement(e.n, psi(e.flat, 1))


class NestingError(ValueError):
    pass


def composite_ray(k: int, l: int, m: int) -> int:
    """Ray of H_mn carrying inner ray ``l`` of outer ray ``k``."""
    return k + (l - 1) * m


def composite_iso(e: HoughtonElement, n: int, inner: GroupClass | None = None) -> HoughtonElement:
    """Re-index an element of ``H_m(H_n(G))`` as an element of ``H_mn(G)``.

    Outer ray ``k``, inner ray ``l``, index ``i`` is sent to ray
    ``composite_ray(k, l, m)``, index ``i``; on flattened permutations this is
    the identity. It is defined on elements whose outer translation amounts
    are all divisible by ``n``: an outer shift by one renumbers the inner
    copy of N and so cycles the inner rays, which no element of H_mn does.
    """
    m = e.n
    outer = minimal_triple(e)
    for k, g in enumerate(outer.gs, 1):
        try:
            component = HoughtonElement(n, g)
        except ValueError as exc:
            raise NestingError(f"outer ray {k} component is not a flattened H_{n} element") from exc
        if inner is not None:
            minimal_triple(component, inner)
    try:
        out = HoughtonElement(m * n, e.flat)
    except ValueError as exc:
        raise NestingError("outer translation amounts must be divisible by n") from exc
    if inner is not None:
        minimal_triple(out, inner)
    return out
