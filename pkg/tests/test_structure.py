import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from shiftsim.classes import E, H, SYMFIN, UNIVERSE, UnsupportedClass, contains, sym
from shiftsim.houghton import (
    HoughtonElement,
    NestingError,
    Point,
    Triple,
    collapse_finite,
    composite_iso,
    composite_ray,
    embed_gn,
    factor_kind,
    factorize,
    identity_element,
    identity_triple,
    make_triple,
    psi1_on_hng,
    reduce_h1_to_g,
)
from shiftsim.perm import ALPHA, IDENTITY, LAMBDA, mk_finite, mk_periodic
from shiftsim.shift import insert_arrow, psi

from strategies import members, triples


def _product(factors, n):
    out = identity_element(n)
    for f in factors:
        out = out * f.element
    return out


def test_factorize_identity():
    assert factorize(identity_triple(2)) == []


def test_factorize_embedded_is_one_factor():
    t = embed_gn((ALPHA, IDENTITY), E(2))
    fs = factorize(t)
    assert len(fs) == 1 and factor_kind(fs[0]) == "G" and fs[0].element == t.element


def test_factorize_frozen_example():
    t = make_triple(2, [(2, 1), (1, 2)], [((1, 1), (2, 1)), ((2, 3), (1, 2))],
                    [ALPHA, LAMBDA], [(1, 1), (2, 3)], E(2))
    fs = factorize(t)
    assert [factor_kind(f) for f in fs] == ["H", "G", "H", "G", "H"]
    assert _product(fs, 2) == t.element


def test_factorize_needs_two_rays():
    with pytest.raises(UnsupportedClass):
        factorize(identity_triple(1))


@given(triples(2, E(2)))
@settings(max_examples=60)
def test_factorization(t):
    fs = factorize(t)
    assert len(fs) <= 5
    assert _product(fs, 2) == t.element
    for f in fs:
        kind = factor_kind(f)
        assert kind in ("H", "G")
        if kind == "H":
            assert all(g.is_identity for g in f.gs)
        else:
            assert not len(f.plus) and all(contains(E(2), g) for g in f.gs)


@given(triples(3, SYMFIN))
@settings(max_examples=30)
def test_factorization_three_rays(t):
    fs = factorize(t)
    assert len(fs) <= 7 and _product(fs, 3) == t.element


def test_reduce_h1_examples():
    assert reduce_h1_to_g(identity_triple(1, E(2)), E(2)) == IDENTITY
    t = make_triple(1, [(1, 3)], [((1, 3), (1, 3))], [ALPHA], [(1, 3)], E(2))
    g = reduce_h1_to_g(t, E(2))
    assert contains(E(2), g)
    assert g.values(12) == t.element.flat.values(12)
    assert g == insert_arrow(ALPHA, 3, 3)
    swap = make_triple(1, [(1, 1), (1, 2)], [((1, 1), (1, 2)), ((1, 2), (1, 1))], [IDENTITY], [(1, 1), (1, 2)], E(2))
    assert reduce_h1_to_g(swap, E(2)) == mk_finite([(1, 2)])


def test_reduce_h1_errors():
    with pytest.raises(UnsupportedClass):
        reduce_h1_to_g(identity_triple(1, sym(3)), sym(3))
    with pytest.raises(ValueError):
        reduce_h1_to_g(identity_triple(2), E(2))


@given(st.sampled_from([E(2), E(3), SYMFIN, H(2), UNIVERSE]).flatmap(lambda C: triples(1, C, max_points=4)))
@settings(max_examples=60)
def test_h1_collapse(t):
    g = reduce_h1_to_g(t, t.cls)
    assert contains(t.cls, g) and g == t.element.flat


def test_psi1_on_hng_examples():
    assert psi1_on_hng(identity_element(2)).is_identity
    got = psi1_on_hng(embed_gn((IDENTITY, LAMBDA)).element)
    assert got == embed_gn((LAMBDA, IDENTITY)).element
    g = mk_periodic(2, 3, [1, 3, 2])
    got = psi1_on_hng(embed_gn((g, IDENTITY, IDENTITY)).element)
    assert got == embed_gn((IDENTITY, IDENTITY, psi(g, 1))).element


@st.composite
def cyclic_samples(draw):
    n = draw(st.integers(2, 4))
    C = draw(st.sampled_from([E(2), SYMFIN, UNIVERSE]))
    g1 = draw(members(C).filter(lambda g: g(1) == 1))
    rest = [draw(members(C)) for _ in range(n - 1)]
    return C, (g1, *rest)


@given(cyclic_samples())
def test_psi1_cycles_components(data):
    C, gs = data
    got = psi1_on_hng(embed_gn(gs, C).element)
    assert got == embed_gn(gs[1:] + (psi(gs[0], 1),), C).element


@given(st.integers(2, 3).flatmap(lambda n: triples(n, E(2))))
@settings(max_examples=60)
def test_psi1_stays_in_the_group(t):
    e = psi1_on_hng(t.element)
    assert e.n == t.n
    from shiftsim.houghton import minimal_triple

    assert minimal_triple(e, E(2)).element == e


def _nested(outer: Triple, inner: list) -> HoughtonElement:
    return Triple(outer.n, outer.minus, outer.sigma, tuple(g.flat for g in inner), outer.plus).element


def test_composite_iso_identity():
    assert composite_iso(identity_element(2), 2) == identity_element(4)


def test_composite_iso_moves_a_block_of_rays():
    # outer ray 1 slides down by two, so both inner rays of outer ray 1 slide by one
    outer = make_triple(2, [(2, 1), (2, 2)], [((1, 1), (2, 1)), ((1, 2), (2, 2))],
                        [IDENTITY, IDENTITY], [(1, 1), (1, 2)])
    e = composite_iso(outer.element, 2)
    assert e.n == 4
    assert composite_ray(1, 2, 2) == 3 and composite_ray(2, 2, 2) == 4
    assert e(Point(1, 1)) == Point(2, 1) and e(Point(3, 1)) == Point(4, 1)
    for i in range(2, 10):
        assert e(Point(1, i)) == Point(1, i - 1) and e(Point(3, i)) == Point(3, i - 1)
        assert e(Point(2, i)) == Point(2, i + 1) and e(Point(4, i)) == Point(4, i + 1)


def test_composite_iso_rejects_odd_outer_translation():
    # an outer shift by one point renumbers the inner rays
    outer = make_triple(2, [(2, 1)], [((1, 1), (2, 1))], [IDENTITY, IDENTITY], [(1, 1)])
    with pytest.raises(NestingError):
        composite_iso(outer.element, 2)


def test_composite_iso_rejects_bad_components():
    e = embed_gn((LAMBDA, IDENTITY)).element
    with pytest.raises(NestingError):
        composite_iso(e, 2)


@st.composite
def nested_elements(draw):
    outer = draw(triples(2, UNIVERSE, max_points=4).filter(
        lambda t: all((t.minus.count(k) - t.plus.count(k)) % 2 == 0 for k in (1, 2))))
    inner = [draw(triples(2, E(2))).element for _ in range(2)]
    return _nested(outer, inner)


@given(nested_elements(), nested_elements())
@settings(max_examples=60)
def test_composite_iso_is_an_injective_homomorphism(a, b):
    fa, fb = composite_iso(a, 2, E(2)), composite_iso(b, 2, E(2))
    assert composite_iso(a * b, 2, E(2)) == fa * fb
    assert (fa == fb) == (a == b)


def test_finite_collapse_example():
    t = make_triple(2, [(1, 1)], [((2, 1), (1, 1))], [mk_finite([(1, 2)]), mk_finite([(2, 3, 4)])],
                    [(2, 1)], sym(4))
    c = collapse_finite(t)
    assert all(g.is_identity for g in c.gs) and c.element == t.element


@given(st.integers(1, 3).flatmap(lambda n: triples(n, sym(4))))
@settings(max_examples=60)
def test_finite_collapse(t):
    c = collapse_finite(t)
    assert all(g.is_identity for g in c.gs) and c.element == t.element


def test_collapse_rejects_infinite_support():
    with pytest.raises(ValueError):
        collapse_finite(embed_gn((ALPHA,)))
