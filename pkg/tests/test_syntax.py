from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hsums.kernel import ConstExpr, RatFunc, S, SumExpr, SumFactor, Z
from hsums.syntax import (
    ExprSyntaxError, _ATOM_HOOKS, format_expr, format_factor, parse_expr,
    register_atom,
)

ONE = Fraction(1)


def test_format_factor_goldens():
    assert format_factor(S(2, 1)) == "S[2,1,n]"
    assert format_factor(Z(-3)) == "Z[-3,n]"
    assert format_factor(S(2, 1, xs=(Fraction(1, 2), 3))) == \
        "S[2,1,{1/2,3},n]"
    assert format_factor(SumFactor("S", (1,), None, ONE, 2, 0)) == "S[1,n+2]"
    assert format_factor(SumFactor("S", (1,), None, ONE, -1, 0)) == "S[1,n-1]"
    assert format_factor(SumFactor("S", (1,), None, Fraction(2), 1, 0)) == \
        "S[1,2*n+1]"
    assert format_factor(SumFactor("S", (1,), None, Fraction(1, 2), 0, 0)) \
        == "S[1,n/2]"
    assert format_factor(SumFactor("S", (2,), None, ONE, 0, 1)) == \
        "Diff[S[2,n],n,1]"


def test_parse_simple_sum():
    assert parse_expr("S[1,2,-2,n]") == SumExpr.from_factor(S(1, 2, -2))
    assert parse_expr("Z[-1, 3, n]") == SumExpr.from_factor(Z(-1, 3))
    assert parse_expr("S[2,{1/2},n]") == \
        SumExpr.from_factor(S(2, xs=(Fraction(1, 2),)))


def test_parse_arguments():
    assert parse_expr("S[1,n+2]") == \
        SumExpr.from_factor(SumFactor("S", (1,), None, ONE, 2, 0))
    assert parse_expr("S[1,2*n-1]") == \
        SumExpr.from_factor(SumFactor("S", (1,), None, Fraction(2), -1, 0))
    assert parse_expr("S[1,n/2]") == \
        SumExpr.from_factor(SumFactor("S", (1,), None, Fraction(1, 2), 0, 0))


def test_precedence_goldens():
    assert parse_expr("-2^2") == SumExpr.from_rat(Fraction(-4))
    assert parse_expr("(-2)^2") == SumExpr.from_rat(Fraction(4))
    assert parse_expr("2^-1") == SumExpr.from_rat(Fraction(1, 2))
    assert parse_expr("6/2/3") == SumExpr.from_rat(Fraction(1))
    assert parse_expr("2 S[1,n]") == \
        SumExpr.from_factor(S(1)) * Fraction(2)
    assert parse_expr("1/2*S[1,n]^2") == \
        SumExpr.from_factor(S(1)) * SumExpr.from_factor(S(1)) * Fraction(1, 2)


def test_alternating_prefactor():
    plus = SumExpr.from_const(1, alt=True)
    minus = SumExpr.from_const(-1, alt=True)
    assert parse_expr("(-1)^n") == plus
    assert parse_expr("(-1)^(n+1)") == minus
    assert parse_expr("(-1)^(n-1)") == minus
    assert parse_expr("(-1)^(n+2)") == plus
    assert parse_expr("(-1)^n*(-1)^n") == SumExpr.from_const(1)
    with pytest.raises(ExprSyntaxError):
        parse_expr("(-2)^n")


def test_constants():
    e = parse_expr("z2*z3 + 2*ln2")
    expect = (SumExpr.from_const(ConstExpr.symbol("z2")
                                 * ConstExpr.symbol("z3"))
              + SumExpr.from_const(ConstExpr.symbol("ln2")) * 2)
    assert e == expect


def test_rational_function_coefficients():
    n = RatFunc.var()
    e = parse_expr("(2*n+3)/(n+1)*S[2,n]")
    expect = SumExpr.from_factor(S(2)) * SumExpr.from_rat(
        (2 * n + 3) / (n + 1))
    assert e == expect
    assert parse_expr("n^2 - n") == SumExpr.from_rat(n * n - n)


def test_diff_form():
    e = parse_expr("Diff[S[2,1,n],n,1]")
    assert e == SumExpr.from_factor(SumFactor("S", (2, 1), None, ONE, 0, 1))
    e2 = parse_expr("Diff[Diff[S[2,n],n,1],n,1]")
    assert e2 == SumExpr.from_factor(SumFactor("S", (2,), None, ONE, 0, 2))


def test_error_positions():
    with pytest.raises(ExprSyntaxError) as exc:
        parse_expr("S[1,m]")
    assert exc.value.pos >= 4
    with pytest.raises(ExprSyntaxError):
        parse_expr("1 +")
    with pytest.raises(ExprSyntaxError):
        parse_expr("Q[1,n]")
    with pytest.raises(ExprSyntaxError):
        parse_expr("S[0,n]")
    with pytest.raises(ExprSyntaxError):
        parse_expr("S[1,n] S")
    with pytest.raises(ExprSyntaxError):
        parse_expr("1/0")
    with pytest.raises(ExprSyntaxError):
        parse_expr("1/S[1,n]")


def test_atom_hook_round_trip():
    def hook(parser):
        parser.expect("op", "[")
        t = parser.expect("int")
        parser.expect("op", "]")
        return SumExpr.from_rat(Fraction(t[1], 7))

    register_atom("TestAtom", hook)
    try:
        assert parse_expr("TestAtom[3] + 1") == \
            SumExpr.from_rat(Fraction(10, 7))
    finally:
        del _ATOM_HOOKS["TestAtom"]


# ------------------------------------------------------------- round trips


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4) \
    .filter(lambda q: q != 0)

factor_st = st.builds(
    lambda kind, idx, xs, scale, shift, deriv: SumFactor(
        kind, tuple(idx),
        tuple(xs[:len(idx)]) if xs and len(xs) >= len(idx) else None,
        Fraction(scale), shift, deriv),
    st.sampled_from(["S", "Z"]),
    st.lists(st.integers(-3, 3).filter(lambda x: x != 0),
             min_size=1, max_size=3),
    st.one_of(st.none(), st.lists(
        st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(2),
                         Fraction(-1)]), min_size=3, max_size=3)),
    st.sampled_from([Fraction(1), Fraction(2), Fraction(1, 2)]),
    st.integers(-3, 3),
    st.integers(0, 2),
)

coeff_st = st.builds(
    lambda q, a, b, use_n: RatFunc.const(q) * (RatFunc.var() + a)
    / (RatFunc.var() + b) if use_n else RatFunc.const(q),
    fractions, st.integers(0, 3), st.integers(1, 3), st.booleans(),
)

const_st = st.builds(
    lambda e2, e3: ConstExpr.symbol("z2", e2) * ConstExpr.symbol("z3", e3)
    if e2 or e3 else ConstExpr.one(),
    st.integers(0, 2), st.integers(0, 1),
)

def _build_term(r, c, alt, fs):
    e = SumExpr.from_rat(r, alt=alt) * SumExpr.from_const(c)
    for f in fs:
        e = e * SumExpr.from_factor(f)
    return e


term_st = st.builds(_build_term, coeff_st, const_st, st.booleans(),
                    st.lists(factor_st, min_size=0, max_size=2))


@st.composite
def expr_st(draw):
    terms = draw(st.lists(term_st, min_size=1, max_size=3))
    e = SumExpr.zero()
    for t in terms:
        e = e + t
    return e


@given(expr_st())
@settings(max_examples=250, deadline=None)
def test_parse_format_round_trip(e):
    text = format_expr(e)
    assert parse_expr(text) == e
    assert format_expr(parse_expr(text)) == text


@given(st.lists(factor_st, min_size=1, max_size=3))
@settings(max_examples=100, deadline=None)
def test_factor_product_round_trip(fs):
    e = SumExpr.from_const(1)
    for f in fs:
        e = e * SumExpr.from_factor(f)
    text = format_expr(e)
    assert parse_expr(text) == e
