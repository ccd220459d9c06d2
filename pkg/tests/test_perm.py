import json
import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from shiftsim.perm import (
    ALPHA,
    IDENTITY,
    LAMBDA,
    DuplicateEntries,
    EPPerm,
    IncompleteResidues,
    InjectivityFailure,
    InvalidPermutation,
    MalformedTable,
    SurjectivityFailure,
    apply,
    compose,
    cycle_preview,
    dumps,
    format_perm,
    from_dict,
    germ,
    germ_equals,
    inverse,
    lcm,
    loads,
    mk_finite,
    mk_periodic,
    parse_cycles,
    power,
)

from strategies import eperms

FIG1 = mk_finite([(1, 3), (2, 5, 6, 4)])


def test_mk_finite_empty_is_identity():
    g = mk_finite([])
    assert g == IDENTITY
    assert (g.p, g.T, g.table) == (1, 0, ())


def test_mk_finite_worked_example():
    assert [FIG1(i) for i in range(1, 10)] == [3, 5, 1, 2, 6, 4, 7, 8, 9]
    # canonical threshold: first index after which g(i) = g(i-1) + 1 holds
    assert format_perm(FIG1) == "p=1,T=7,table=[3,5,1,2,6,4,7]"


def test_mk_finite_transposition():
    g = mk_finite([(1, 2)])
    assert g.values(5) == [2, 1, 3, 4, 5]


@pytest.mark.parametrize("cycles", [[(1, 2), (2, 3)], [(0, 1)], [(1, 1)]])
def test_mk_finite_rejects_bad_cycles(cycles):
    with pytest.raises(InvalidPermutation):
        mk_finite(cycles)


def test_lambda_is_the_flip():
    assert LAMBDA == mk_periodic(2, 2, [2, 1])
    assert LAMBDA.values(8) == [2, 1, 4, 3, 6, 5, 8, 7]


def test_alpha_is_the_slide():
    assert ALPHA.values(10) == [3, 1, 5, 2, 7, 4, 9, 6, 11, 8]
    assert apply(ALPHA, 9) == 11


def test_mk_periodic_rejects_missing_residue():
    with pytest.raises(InvalidPermutation):
        mk_periodic(2, 2, [1, 3])


def test_validation_errors_are_distinct():
    with pytest.raises(DuplicateEntries):
        mk_periodic(1, 2, [1, 1])
    with pytest.raises(IncompleteResidues):
        mk_periodic(2, 2, [1, 3])
    with pytest.raises(MalformedTable):
        mk_periodic(2, 3, [1, 2])
    # the tail gives g(5) = g(3) + 2 = 4 = g(1)
    with pytest.raises(InjectivityFailure):
        mk_periodic(2, 3, [4, 1, 2])
    # 1 is never hit: table and tail only produce values >= 2
    with pytest.raises(SurjectivityFailure):
        mk_periodic(1, 1, [2])


def test_mk_periodic_normalizes():
    # lambda padded to a longer threshold and a doubled period
    assert mk_periodic(4, 8, [2, 1, 4, 3, 6, 5, 8, 7]) == LAMBDA
    assert mk_periodic(1, 3, [1, 2, 3]) == IDENTITY


def test_apply_identity_and_worked_example():
    assert apply(IDENTITY, 7) == 7
    assert apply(FIG1, 5) == 6
    with pytest.raises(ValueError):
        apply(ALPHA, 0)


def test_compose_alpha_lambda():
    g = compose(ALPHA, LAMBDA)
    assert g.values(12) == [1, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13]
    assert g == mk_periodic(2, 3, [1, 3, 2])


def test_inverse_examples():
    assert inverse(IDENTITY) == IDENTITY
    assert inverse(LAMBDA) == LAMBDA
    assert compose(LAMBDA, LAMBDA) == IDENTITY
    a_inv = inverse(ALPHA)
    assert a_inv.values(10) == [2, 4, 1, 6, 3, 8, 5, 10, 7, 12]
    assert compose(ALPHA, a_inv) == IDENTITY
    assert compose(FIG1, inverse(FIG1)) == IDENTITY


def test_germ_examples():
    assert germ_equals(germ(FIG1), germ(compose(FIG1, mk_finite([(1, 2)]))))
    assert not germ_equals(germ(ALPHA), germ(LAMBDA))
    assert germ(IDENTITY) == germ(mk_finite([(1, 3)]))


def test_power():
    assert power(ALPHA, 0) == IDENTITY
    assert power(ALPHA, -2) == inverse(compose(ALPHA, ALPHA))
    assert power(mk_finite([(1, 2, 3)]), 3) == IDENTITY


def test_overflow_is_reported():
    with pytest.raises(OverflowError):
        mk_periodic(1, 1, [2**63])


def test_cycle_text_round_trip():
    assert parse_cycles("(1 3)(2 5 6 4)") == FIG1
    assert parse_cycles(" ( 1  3 ) ( 2 5 6 4 ) ") == FIG1
    assert parse_cycles("()") == IDENTITY
    assert cycle_preview(FIG1) == "(1 3)(2 5 6 4)"
    assert cycle_preview(ALPHA, 8) == "(... 8 6 4 2 1 3 5 7 ...)"
    with pytest.raises(ValueError):
        parse_cycles("(1 x)")


def test_json_round_trip_and_rejection():
    assert loads(dumps(ALPHA)) == ALPHA
    assert json.loads(dumps(ALPHA)) == {"p": 2, "T": 4, "table": [3, 1, 5, 2]}
    with pytest.raises(MalformedTable):
        from_dict({"p": 4, "T": 8, "table": [2, 1, 4, 3, 6, 5, 8, 7]})
    with pytest.raises(MalformedTable):
        from_dict({"p": 1})
    with pytest.raises(InvalidPermutation):
        from_dict({"p": 2, "T": 2, "table": [1, 3]})


def _bijective_on_window(g: EPPerm) -> bool:
    W = g.T + max(g.table, default=0) + g.p
    image = [apply(g, i) for i in range(1, W + 1)]
    return len(set(image)) == W and set(range(1, max(g.table, default=0) + 1)) <= set(image)


@given(eperms())
def test_constructed_values_are_bijective(g):
    assert _bijective_on_window(g)


@given(eperms(), st.integers(1, 3))
def test_denormalized_form_normalizes_back(g, m):
    # double the period m times over and pad the threshold through the recursion
    p, T = g.p * m, g.T + g.p * m + 3
    big = mk_periodic(p, T, g.values(T))
    assert big == g
    assert p % big.p == 0


@given(eperms(), eperms(), eperms())
@settings(max_examples=50)
def test_group_laws(g, h, k):
    assert compose(compose(g, h), k) == compose(g, compose(h, k))
    assert compose(g, IDENTITY) == g == compose(IDENTITY, g)
    assert compose(g, inverse(g)) == IDENTITY == compose(inverse(g), g)
    assert inverse(g).p == g.p


@given(eperms(), eperms())
def test_apply_compose_coherence(g, h):
    gh = compose(g, h)
    bound = g.T + h.T + 4 * lcm(g.p, h.p)
    assert all(apply(gh, i) == apply(g, apply(h, i)) for i in range(1, bound + 1))


@given(eperms())
def test_canonical_threshold_is_minimal(g):
    if g.is_identity:
        return
    T = g.T - 1
    if T < g.p:
        return
    # one step less and the recursion breaks just above the new threshold
    assert any(apply(g, i) != apply(g, i - g.p) + g.p for i in range(T + 1, T + g.p + 1))


@given(eperms(), st.integers(0, 2**31))
def test_germ_ignores_finite_factors(g, seed):
    rng = random.Random(seed)
    f = mk_finite([tuple(rng.sample(range(1, 12), 3))])
    assert germ(compose(g, f)) == germ(g) == germ(compose(f, g))
    assert hash(germ(compose(g, f))) == hash(germ(g))
