from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lambertkit.fps import DomainError, TruncatedSeries
from lambertkit.harness.dsl import BinOp, Call, Name, Neg, Num, ParseError, evaluate, parse, pretty
from lambertkit.harness.values import EvalError


def test_builder_node():
    assert parse("lambert(mu)") == Call("lambert", (Name("mu"),))


def test_difference_ast():
    node = parse("lambert(phi) - q/(1-q)^2")
    assert isinstance(node, BinOp) and node.op == "-"
    assert node.left == Call("lambert", (Name("phi"),))


def test_nested_call_round_trip():
    node = parse("(1/etaq(1)) * facsum(minus, f=sigma1)")
    assert node.right.kwargs[0][0] == "f"
    assert parse(pretty(node)) == node


def test_power_binds_tighter_than_unary_minus():
    assert parse("-q^2") == Neg(BinOp("^", Name("q"), Num(Fraction(2))))
    assert parse("q^-1") == BinOp("^", Name("q"), Neg(Num(Fraction(1))))


def test_decimal_literal_is_exact():
    assert parse("0.25") == Num(Fraction(1, 4))


@pytest.mark.parametrize("text,line,col,fragment", [
    ("foo(1)", 1, 1, "unknown builder"),
    ("lambert()", 1, 1, "lambert"),
    ("lambert(mu, minus, 3)", 1, 1, "lambert"),
    ("1 + 12abc", 1, 5, "malformed literal"),
    ("1.2.3", 1, 1, "malformed literal"),
    ("lambert(mu)\n  + nosuch", 2, 5, "unknown name"),
    ("lambert(mu", 1, 11, "end of input"),
    ("q $ 2", 1, 3, "unexpected character"),
    ("", 1, 1, "empty"),
    ("lambert(f=mu, 2)", 1, 15, "positional argument after keyword"),
])
def test_parse_errors_carry_position(text, line, col, fragment):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert (err.value.line, err.value.col) == (line, col)
    assert fragment in str(err.value)
    assert str(err.value).startswith(f"line {line}, column {col}:")


def test_unchecked_parse_accepts_unknown_names():
    assert parse("foo(bar)", check=False) == Call("foo", (Name("bar"),))


def test_evaluate_examples():
    assert list(evaluate("q", 5)) == [0, 1, 0, 0, 0, 0]
    assert evaluate("lambert(mu)", 10) == evaluate("q", 10)
    modified = evaluate("modlambert(phi)", 8)
    assert modified == evaluate("q*(1+q^2)/(1-q^2)^2", 8)
    assert modified != evaluate("q*(q+q^2)/(1-q^2)^2", 8)


def test_scalar_expression_becomes_constant_series():
    assert evaluate("1/2 + 1/3", 3) == TruncatedSeries([Fraction(5, 6), 0, 0, 0])


def test_function_values_combine_pointwise():
    assert evaluate("ogf(mu * id(1) + 1)", 4) == TruncatedSeries([0, 2, -1, -2, 1])


def test_type_errors():
    with pytest.raises(EvalError):
        evaluate("mu + q", 5)
    with pytest.raises(EvalError):
        evaluate("mu", 5)
    with pytest.raises(EvalError):
        evaluate("lambert(minus)", 5)


def test_log_q_must_cancel():
    with pytest.raises(DomainError):
        evaluate("psi(1, 1)", 6)


# -- random ASTs ------------------------------------------------------------

fn_names = st.sampled_from(["mu", "phi", "one", "sigma1", "liouville"])
# literals the parser can produce: integers and terminating decimals
literal = st.tuples(st.integers(0, 500), st.sampled_from([1, 2, 4, 5, 10, 100])).map(
    lambda t: Num(Fraction(t[0], t[1])))
leaf = st.one_of(
    literal,
    st.just(Name("q")),
    fn_names.map(lambda f: Call("lambert", (Name(f),))),
    fn_names.map(lambda f: Call("ogf", (Name(f),))),
)


def _extend(children):
    return st.one_of(
        st.tuples(st.sampled_from("+-*/"), children, children).map(lambda t: BinOp(t[0], t[1], t[2])),
        st.tuples(children, st.integers(0, 4)).map(lambda t: BinOp("^", t[0], Num(Fraction(t[1])))),
        children.map(Neg),
        st.tuples(children, st.integers(1, 3)).map(lambda t: Call("subst", (t[0], Num(Fraction(t[1]))))),
    )


ast_st = st.recursive(leaf, _extend, max_leaves=12)


@settings(max_examples=200, deadline=None)
@given(ast_st)
def test_pretty_parse_round_trip(node):
    assert parse(pretty(node)) == node


@settings(max_examples=60, deadline=None)
@given(ast_st)
def test_round_trip_preserves_value(node):
    try:
        want = evaluate(node, 6)
    except (ZeroDivisionError, DomainError, EvalError):
        return
    assert evaluate(pretty(node), 6) == want
