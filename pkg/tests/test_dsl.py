import json

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from shiftsim.classes import E, SYMFIN
from shiftsim.dsl import (
    ARITY,
    Call,
    Cycles,
    EvalError,
    Inv,
    Mul,
    Name,
    Num,
    ParseError,
    evaluate,
    format_expr,
    parse,
    tokenize,
)
from shiftsim.houghton import HoughtonElement, Point, chi, embed_gn
from shiftsim.houghton.io import dumps
from shiftsim.perm import ALPHA, IDENTITY, LAMBDA, compose, germ, inverse, mk_finite
from shiftsim.shift import psi

from strategies import CLASSES, eperms, triples


def test_parse_worked_example():
    assert parse("psi[1]((1 3)(2 5 6 4))") == Call("psi", (1,), (Cycles("(1 3)(2 5 6 4)"),))
    assert evaluate("psi[1]((1 3)(2 5 6 4))") == mk_finite([(1, 4, 5, 3, 2)])


def test_parse_identity():
    assert parse("id") == Name("id")
    assert evaluate("()") == IDENTITY == evaluate("id")


def test_inverse_binds_tighter_than_compose():
    assert parse("alpha * lambda ^-1") == Mul(Name("alpha"), Inv(Name("lambda")))
    assert evaluate("alpha * lambda ^-1") == compose(ALPHA, inverse(LAMBDA))
    assert evaluate("alpha * lambda * (1 2)") == compose(compose(ALPHA, LAMBDA), mk_finite([(1, 2)]))
    assert evaluate("(alpha * lambda)^-1") == inverse(compose(ALPHA, LAMBDA))
    assert parse("alpha^-1^-1") == Inv(Inv(Name("alpha")))


def test_whitespace_insensitive():
    assert parse(" psi [ 2 ] ( alpha\n*\tlambda ) ") == parse("psi[2](alpha*lambda)")


def test_call_parenthesis_is_not_cycle_notation():
    assert parse("E(2)") == Call("E", (), (Num(2),))
    assert [t.kind for t in tokenize("E(2)")] == ["name", "(", "int", ")", "eof"]
    assert [t.kind for t in tokenize("conj((1 2), alpha)")][:3] == ["name", "(", "cycles"]


def test_operators():
    assert evaluate("insert[1,3](id)").values(4) == [3, 1, 2, 4]
    assert evaluate("germ(alpha) * germ(lambda)") == germ(compose(ALPHA, LAMBDA))
    assert evaluate("conj((1 2), alpha)") == mk_finite([(2, 4)])
    assert evaluate("psi[3](alpha)") == psi(ALPHA, 3)
    assert evaluate("apply(alpha, 9)") == 11
    assert evaluate("same_germ(alpha, alpha * (1 2))") is True
    assert evaluate("beta(1, [(1,1),(1,3)], 1, 1)") == (1, 2)
    assert evaluate("section[1](E(2), alpha)")(1) == 1


def test_class_literals():
    for C in CLASSES:
        assert evaluate(str(C)) == C


def test_triples_and_elements():
    t = evaluate("triple(2, universe, [(2,1)], [((1,1),(2,1))], [id, id], [(1,1)])")
    assert chi(t) == (-1, 1)
    assert evaluate("chi(triple(2, universe, [(2,1)], [((1,1),(2,1))], [id, id], [(1,1)]))") == (-1, 1)
    assert evaluate("eval(embed(E(2), [alpha, id]))") == embed_gn((ALPHA, IDENTITY)).element
    e = evaluate("elem(2, alpha)")
    assert e == HoughtonElement(2, ALPHA)
    assert evaluate("apply(elem(2, alpha), (1, 1))") == Point(1, 2)
    assert evaluate("psi[1](eval(embed(E(2), [id, lambda])))") == embed_gn((LAMBDA, IDENTITY)).element


def test_load(tmp_path):
    (tmp_path / "a.json").write_text(json.dumps({"p": 2, "T": 4, "table": [3, 1, 5, 2]}))
    t = embed_gn((ALPHA, LAMBDA), E(2))
    (tmp_path / "t.json").write_text(dumps(t))
    assert evaluate('load("a.json") * lambda', tmp_path) == compose(ALPHA, LAMBDA)
    assert evaluate('load("t.json")', tmp_path) == t
    with pytest.raises(EvalError):
        evaluate('load("missing.json")', tmp_path)


@pytest.mark.parametrize("text, where", [
    ("psi(alpha)", (1, 1)),
    ("foo", (1, 1)),
    ("alpha *", (1, 8)),
    ("periodic(1, 2)", (1, 1)),
    ("(1 2", (1, 4)),
    ("alpha\n  ^ 2", (2, 3)),
    ("insert[1](id)", (1, 1)),
])
def test_syntax_errors_carry_positions(text, where):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.col) == where


def test_arity_is_checked_for_every_operation():
    for name, (n_params, n_args) in ARITY.items():
        wrong = ", ".join(["id"] * (n_args + 1))
        params = "[" + ",".join(["1"] * n_params) + "]" if n_params else ""
        with pytest.raises(ParseError):
            parse(f"{name}{params}({wrong})")


def test_type_errors():
    with pytest.raises(EvalError):
        evaluate("alpha * E(2)")
    with pytest.raises(EvalError):
        evaluate("germ(E(2))")
    with pytest.raises(EvalError):
        evaluate("E(2)^-1")


@given(eperms())
def test_round_trip_permutations(g):
    assert evaluate(format_expr(g)) == g
    assert evaluate(format_expr(germ(g))) == germ(g)


@given(st.sampled_from([(2, E(2)), (3, SYMFIN), (1, E(3))]).flatmap(lambda nc: triples(*nc)))
@settings(max_examples=50)
def test_round_trip_triples(t):
    assert evaluate(format_expr(t)) == t
    assert evaluate(format_expr(t.element)) == t.element


@given(st.sampled_from(CLASSES))
def test_round_trip_classes(C):
    assert evaluate(format_expr(C)) == C


def test_round_trip_printing_is_stable():
    for src in ["periodic(2, 4, [3, 1, 5, 2])", "(1 3)(2 5 6 4)", "(0, 1)", "(1,)", "[1, 2]", "true", '"x"']:
        v = evaluate(src)
        assert evaluate(format_expr(v)) == v
        assert format_expr(evaluate(format_expr(v))) == format_expr(v)
