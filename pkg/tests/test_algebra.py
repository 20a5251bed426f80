from fractions import Fraction

from hypothesis import given, settings, strategies as st

from hsums.algebra import (
    convert_expr, linear_expand, product_factors, product_words,
    s_to_z, shuffle, stuffle, wedge_index, z_to_s,
)
from hsums.kernel import S, SumExpr, Z, evaluate_expr, evaluate_sum, weight


def expr_terms(e):
    """{(coeff, factors)} with rational coefficients, for golden checks."""
    out = {}
    for (cmono, alt, factors), r in e.terms.items():
        assert not alt
        out[factors] = r.constant_value()
    return out


def test_wedge():
    assert wedge_index(2, 3) == 5
    assert wedge_index(-2, 3) == -5
    assert wedge_index(-2, -3) == 5


def test_product_s_golden():
    got = expr_terms(product_factors(S(1, 4), S(2, -3)))
    expect = {
        (S(3, -7),): 1,
        (S(1, 2, -7),): -1,
        (S(1, 6, -3),): -1,
        (S(2, -4, 4),): -1,
        (S(2, 1, -7),): -1,
        (S(3, -3, 4),): -1,
        (S(3, 4, -3),): -1,
        (S(1, 2, -3, 4),): 1,
        (S(1, 2, 4, -3),): 1,
        (S(1, 4, 2, -3),): 1,
        (S(2, -3, 1, 4),): 1,
        (S(2, 1, -3, 4),): 1,
        (S(2, 1, 4, -3),): 1,
    }
    assert got == expect


def test_product_z_golden():
    got = expr_terms(product_factors(Z(1, 4), Z(2, -3)))
    expect = {
        (Z(3, -7),): 1,
        (Z(1, 2, -7),): 1,
        (Z(1, 6, -3),): 1,
        (Z(2, -4, 4),): 1,
        (Z(2, 1, -7),): 1,
        (Z(3, -3, 4),): 1,
        (Z(3, 4, -3),): 1,
        (Z(1, 2, -3, 4),): 1,
        (Z(1, 2, 4, -3),): 1,
        (Z(1, 4, 2, -3),): 1,
        (Z(2, -3, 1, 4),): 1,
        (Z(2, 1, -3, 4),): 1,
        (Z(2, 1, 4, -3),): 1,
    }
    assert got == expect


def test_conversion_goldens():
    got = expr_terms(s_to_z(S(1, 3, 4)))
    assert got == {(Z(8),): 1, (Z(1, 7),): 1, (Z(4, 4),): 1, (Z(1, 3, 4),): 1}
    got = expr_terms(z_to_s(Z(1, 3, 4)))
    assert got == {(S(8),): 1, (S(1, 7),): -1, (S(4, 4),): -1, (S(1, 3, 4),): 1}


def test_weighted_conversion_goldens():
    got = expr_terms(z_to_s(Z(1, 3, 4, xs=(2, 1, 1))))
    assert got == {
        (S(8, xs=(2,)),): 1,
        (S(1, 7, xs=(2, 1)),): -1,
        (S(4, 4, xs=(2, 1)),): -1,
        (S(1, 3, 4, xs=(2, 1, 1)),): 1,
    }
    got = expr_terms(s_to_z(S(1, 3, 4, xs=(2, 1, 1))))
    assert got == {
        (Z(8, xs=(2,)),): 1,
        (Z(1, 7, xs=(2, 1)),): 1,
        (Z(4, 4, xs=(2, 1)),): 1,
        (Z(1, 3, 4, xs=(2, 1, 1)),): 1,
    }


def test_shuffle_counts():
    got = shuffle((0, 1), (1,))
    assert got == {(0, 1, 1): 2, (1, 0, 1): 1}
    tot = sum(shuffle((0, 1, -1), (0, 1)).values())
    from math import comb
    assert tot == comb(5, 2)


indices_strategy = st.lists(
    st.integers(min_value=-3, max_value=3).filter(lambda x: x != 0),
    min_size=1, max_size=3,
).map(tuple).filter(lambda a: weight(a) <= 5)


@given(indices_strategy, indices_strategy, st.integers(1, 9))
@settings(max_examples=40, deadline=None)
def test_product_matches_pointwise_s(a, b, n):
    prod = product_factors(S(*a), S(*b))
    assert evaluate_expr(prod, n) == evaluate_sum(S(*a), n) * evaluate_sum(S(*b), n)


@given(indices_strategy, indices_strategy, st.integers(1, 9))
@settings(max_examples=40, deadline=None)
def test_product_matches_pointwise_z(a, b, n):
    prod = product_factors(Z(*a), Z(*b))
    assert evaluate_expr(prod, n) == evaluate_sum(Z(*a), n) * evaluate_sum(Z(*b), n)


@given(indices_strategy, st.integers(1, 9))
@settings(max_examples=40, deadline=None)
def test_conversions_pointwise_and_roundtrip(a, n):
    e = s_to_z(S(*a))
    assert evaluate_expr(e, n) == evaluate_sum(S(*a), n)
    back = convert_expr(e, "S")
    assert back == SumExpr.from_factor(S(*a))
    e2 = z_to_s(Z(*a))
    assert evaluate_expr(e2, n) == evaluate_sum(Z(*a), n)
    back2 = convert_expr(e2, "Z")
    assert back2 == SumExpr.from_factor(Z(*a))


@given(indices_strategy, st.lists(st.integers(1, 3), min_size=1, max_size=3))
@settings(max_examples=30, deadline=None)
def test_weighted_product_pointwise(a, xs_raw):
    xs = tuple(Fraction(x, 2) for x in xs_raw[:len(a)])
    while len(xs) < len(a):
        xs = xs + (Fraction(1),)
    a_pos = tuple(abs(x) for x in a)
    f = S(*a_pos, xs=xs)
    g = S(*a_pos, xs=xs)
    prod = product_factors(f, g)
    for n in (1, 4, 7):
        assert evaluate_expr(prod, n) == evaluate_sum(f, n) ** 2


def test_linear_expand_three_factors():
    e = (SumExpr.from_factor(S(1)) * SumExpr.from_factor(S(1))
         * SumExpr.from_factor(S(2)))
    flat = linear_expand(e)
    assert all(len(f) <= 1 for (_, _, f) in flat.terms)
    for n in (1, 2, 5, 8):
        expect = evaluate_sum(S(1), n) ** 2 * evaluate_sum(S(2), n)
        assert evaluate_expr(flat, n) == expect


def test_linear_expand_keeps_incompatible():
    e = SumExpr.from_factor(S(1)) * SumExpr.from_factor(S(1, scale=2))
    flat = linear_expand(e)
    assert len(flat.terms) == 1
    ((_, _, factors),) = flat.terms
    assert len(factors) == 2
