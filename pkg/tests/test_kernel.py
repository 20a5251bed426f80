from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hsums.kernel import (
    ConstExpr, Poly, RatFunc, S, Z, SumExpr,
    contract_notation, count_sums, evaluate_expr, evaluate_sum,
    expand_notation, index_vectors_of_weight, weight,
)


def test_expand_contract_examples():
    assert expand_notation((3, -2, 4)) == (0, 0, 1, 0, -1, 0, 0, 0, 1)
    assert contract_notation((0, 0, 1, 0, -1, 0, 0, 0, 1)) == (3, -2, 4)
    assert expand_notation((1,)) == (1,)
    assert expand_notation((-1, 2)) == (-1, 0, 1)


def test_contract_rejects_trailing_zero():
    with pytest.raises(ValueError):
        contract_notation((1, 0))


def test_count_sums():
    assert [count_sums(w) for w in range(1, 9)] == [
        2, 6, 18, 54, 162, 486, 1458, 4374]
    for w in (1, 4, 8):
        assert len(index_vectors_of_weight(w)) == count_sums(w)


indices_strategy = st.lists(
    st.integers(min_value=-4, max_value=4).filter(lambda x: x != 0),
    min_size=1, max_size=5,
).filter(lambda a: weight(a) <= 8).map(tuple)


@given(indices_strategy)
def test_expand_contract_roundtrip(a):
    assert contract_notation(expand_notation(a)) == a


def test_evaluate_plain_sums():
    assert evaluate_sum(S(1), 3) == Fraction(11, 6)
    assert evaluate_sum(S(2, 1), 2) == Fraction(11, 8)
    assert evaluate_sum(Z(1, 1), 2) == Fraction(1, 2)
    assert evaluate_sum(S(1), 0) == 0
    assert evaluate_sum(S(), 5) == 1
    assert evaluate_sum(S(), 0) == 0
    assert evaluate_sum(Z(), 0) == 1
    assert evaluate_sum(Z(1, 1, 1), 2) == 0


def test_evaluate_alternating():
    # S_{-1}(n) = sum (-1)^i/i
    assert evaluate_sum(S(-1), 2) == Fraction(-1, 2)
    assert evaluate_sum(S(-2, 1), 3) == (
        Fraction(-1, 1)
        + Fraction(1, 4) * (1 + Fraction(1, 2))
        - Fraction(1, 9) * (1 + Fraction(1, 2) + Fraction(1, 3)))


def test_evaluate_weighted():
    # sum_{i<=n} 2^i/i
    assert evaluate_sum(S(1, xs=(2,)), 3) == 2 + 2 + Fraction(8, 3)
    v = evaluate_sum(S(2, 1, xs=(Fraction(1, 2), 3)), 2)
    expect = (Fraction(1, 2) * 3
              + Fraction(1, 4) / 4 * (3 + Fraction(9, 2)))
    assert v == expect


def test_scale_and_shift():
    f = S(1, scale=2)
    assert evaluate_sum(f, 3) == evaluate_sum(S(1), 6)
    g = S(1, scale=Fraction(1, 2))
    assert evaluate_sum(g, 6) == evaluate_sum(S(1), 3)
    with pytest.raises(ValueError):
        evaluate_sum(g, 5)
    h = S(2, 1, shift=1)
    assert evaluate_sum(h, 4) == evaluate_sum(S(2, 1), 5)


def test_basic_shuffle_numeric_identity():
    # S1^2 = 2 S11 - S2 pointwise
    for n in range(1, 21):
        s1 = evaluate_sum(S(1), n)
        s11 = evaluate_sum(S(1, 1), n)
        s2 = evaluate_sum(S(2), n)
        assert s1 * s1 == 2 * s11 - s2


def test_const_expr_arithmetic():
    z2 = ConstExpr.symbol("z2")
    ln2 = ConstExpr.symbol("ln2")
    e = (z2 + ln2) * (z2 - ln2)
    assert e == z2 * z2 - ln2 * ln2
    assert (e - e).terms == {}
    assert ConstExpr.rational(Fraction(1, 2)) * 2 == ConstExpr.one()
    assert (z2 ** 3).sigma1_degree() == 0
    assert (ConstExpr.symbol("sigma1") * z2).sigma1_degree() == 1


def test_const_expr_numeric():
    import mpmath
    z2 = ConstExpr.symbol("z2")
    with mpmath.workdps(40):
        v = z2.numeric(40)
        assert abs(v - mpmath.pi ** 2 / 6) < mpmath.mpf(10) ** -38


def test_poly_ratfunc():
    t = Poly.var()
    p = (t + Poly.const(1)) * (t + Poly.const(2))
    q, r = divmod(p, t + Poly.const(1))
    assert r.is_zero() and q == t + Poly.const(2)
    assert p.integer_roots() == {-1: 1, -2: 1}
    f = RatFunc(p, (t + Poly.const(1)) * t)
    # cancels to (t+2)/t
    assert f.eval(2) == Fraction(2)
    with pytest.raises(ZeroDivisionError):
        f.eval(0)
    assert f.shift(1).eval(1) == f.eval(2)
    p2 = (t * t - Poly.const(1))
    assert sorted(p2.integer_roots()) == [-1, 1]
    assert (t * t).integer_roots() == {0: 2}


def test_sum_expr_algebra():
    e1 = SumExpr.from_factor(S(1))
    e2 = SumExpr.from_factor(S(2))
    prod = e1 * e2
    mons = prod.monomials()
    assert len(mons) == 1
    assert mons[0].factors == (S(1), S(2))
    assert (prod - prod).is_zero()
    e3 = e1 * RatFunc(Poly.var()) + e1 * RatFunc.const(1)
    assert len(e3.terms) == 1
    tot = e3 + SumExpr.from_const(ConstExpr.symbol("z3"))
    assert evaluate_expr(e3, 3) == Fraction(11, 6) * 4
    with pytest.raises(ValueError):
        evaluate_expr(tot, 3)


def test_alt_sign_multiplication():
    e = SumExpr.from_factor(S(2), alt=True)
    sq = e * e
    ((cmono, alt, factors),) = list(sq.terms)
    assert alt is False
    assert factors == (S(2), S(2))
    assert evaluate_expr(e, 3) == -evaluate_sum(S(2), 3)
    assert evaluate_expr(e, 4) == evaluate_sum(S(2), 4)


@given(st.integers(min_value=1, max_value=12), indices_strategy)
@settings(max_examples=60, deadline=None)
def test_evaluate_matches_bruteforce(n, a):
    def brute(a, m):
        if not a:
            return Fraction(1) if m > 0 else Fraction(0)
        tot = Fraction(0)
        for i in range(1, m + 1):
            sgn = (-1) ** i if a[0] < 0 else 1
            tot += Fraction(sgn, i ** abs(a[0])) * brute(a[1:], i)
        return tot

    if weight(a) > 5:
        a = a[:1]
    assert evaluate_sum(S(*a), n) == brute(a, n)
