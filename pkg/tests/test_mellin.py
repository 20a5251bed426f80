import itertools
import random
from fractions import Fraction

import mpmath as mp
import pytest

from hsums.hpl import hpl_eval_numeric
from hsums.kernel import S, SumExpr, evaluate_expr, evaluate_sum
from hsums.mellin import (
    DivergenceCancellationError, HplExpr, WeightedHpl, expand_shifted,
    format_hpl_expr, inverse_mellin, mellin, most_complicated, parse_mixed,
    part_expansion, sum_to_weighted_hpl,
)
from hsums.syntax import ExprSyntaxError, format_expr, parse_expr


def words_up_to(wmax):
    for w in range(1, wmax + 1):
        yield from itertools.product((-1, 0, 1), repeat=w)


def index_tuples(weight):
    if weight == 0:
        yield ()
        return
    for first in range(1, weight + 1):
        for sgn in (1, -1):
            for rest in index_tuples(weight - first):
                yield (sgn * first,) + rest


# ---------------------------------------------------------- pinned transforms


WEIGHT2_TABLE = [
    ((0,), "1-x", "S[2,n] - z2"),
    ((0,), "1+x", "(-1)^n*(-1/2*z2 - S[-2,n])"),
    ((1,), "1-x", "-S[1,1,n]"),
    ((1,), "1+x", "(-1)^n*(S[-1,1,n] + 1/2*z2 - 1/2*ln2^2)"),
    ((-1,), "1-x",
     "1/2*ln2^2 - 1/2*z2 + ln2*S[-1,n] - ln2*S[1,n] + S[-1,-1,n]"),
    ((-1,), "1+x",
     "(-1)^n*(1/2*ln2^2 + ln2*S[-1,n] - ln2*S[1,n] - S[1,-1,n])"),
]


@pytest.mark.parametrize("word,denom,expected", WEIGHT2_TABLE)
def test_weight_one_words_over_weighted_denominators(word, denom, expected):
    assert mellin(WeightedHpl(word, denom)) == parse_expr(expected)


WEIGHT1_PLAIN_TABLE = [
    ((0,), "-1/(n+1)^2"),
    ((1,), "S[1,n]/(n+1) + 1/(n+1)^2"),
    ((-1,), "(-1)^n*S[-1,n]/(n+1) - 1/(n+1)^2 + ln2/(n+1)"
     " + (-1)^n*ln2/(n+1)"),
]


@pytest.mark.parametrize("word,expected", WEIGHT1_PLAIN_TABLE)
def test_weight_one_words_without_denominator(word, expected):
    assert mellin(WeightedHpl(word, "1")) == parse_expr(expected)


def test_leading_one_words_subtracted_transform():
    assert mellin(WeightedHpl((1, 1), "1-x")) == parse_expr("-S[1,1,1,n]")
    assert mellin(WeightedHpl((1, 1, 0, 1), "1-x")) == parse_expr(
        "S[1,1,2,1,n] - z2*S[1,1,1,n] - 4*z5")


def test_weight_four_alternating_transform():
    got = mellin(WeightedHpl((-1, 1, 0), "1+x"))
    want = parse_expr(
        "(-1)^n*(2*li4half + 1/12*ln2^4 - 1/4*ln2^2*z2 - 7/8*z2^2"
        " + 13/8*ln2*z3 + 1/2*ln2*z2*S[-1,n] - z3*S[-1,n]"
        " - 1/2*ln2*z2*S[1,n] + z3*S[1,n] + S[1,-1,2,n])")
    assert got == want


def test_weight_five_transform():
    got = mellin(WeightedHpl((-1, 1, 0, -1), "1-x"))
    want = parse_expr(
        "11*li5half + 3*li4half*ln2 + 1/30*ln2^5 + 63/20*ln2*z2^2"
        " - 13/8*ln2^2*z3 + 3/4*z2*z3 - 845/64*z5"
        " + (-4*li4half - 1/6*ln2^4 + 3/4*ln2^2*z2 + 33/20*z2^2"
        " - 13/4*ln2*z3)*S[-1,n]"
        " + (4*li4half + 1/6*ln2^4 - 3/4*ln2^2*z2 - 33/20*z2^2"
        " + 13/4*ln2*z3)*S[1,n]"
        " + ln2*S[-1,-1,-2,n] + 1/2*z2*S[-1,-1,1,n] - ln2*S[-1,-1,2,n]"
        " + S[-1,-1,-2,-1,n]")
    assert got == want


def test_divergent_markers_cancel_up_to_weight_four():
    for word in words_up_to(4):
        for denom in ("1-x", "1+x"):
            mellin(WeightedHpl(word, denom))
    for word in words_up_to(2):
        mellin(WeightedHpl(word, "1"))


# --------------------------------------------------- sums <-> weighted words


MC_EXAMPLES = [
    (WeightedHpl((0, 1, -1), "1-x"), -1, (2, -1, -1)),
    (WeightedHpl((1, -1, 0, 1, 0, -1), "1-x"), -1, (1, -1, -2, -2, -1)),
    (WeightedHpl((-1, 1, 0), "1+x"), 1, (1, -1, 2)),
    (WeightedHpl((1, 1, 0, 1), "1-x"), 1, (1, 1, 2, 1)),
]


@pytest.mark.parametrize("f,sign,indices", MC_EXAMPLES)
def test_most_complicated_examples(f, sign, indices):
    assert most_complicated(f) == (sign, indices)


def test_most_complicated_is_the_unique_heaviest_term():
    for word in words_up_to(3):
        for denom in ("1-x", "1+x"):
            f = WeightedHpl(word, denom)
            sign, indices = most_complicated(f)
            e = mellin(f)
            top_weight = len(word) + 1
            hits = 0
            for (cm, alt, fs), r in e.terms.items():
                for fac in fs:
                    assert sum(abs(a) for a in fac.indices) <= top_weight
                if len(fs) == 1 and sum(abs(a) for a in fs[0].indices) \
                        == top_weight:
                    hits += 1
                    assert fs[0].indices == indices
                    assert not any(cm)
                    assert alt == (denom == "1+x")
                    assert r.constant_value() == sign
            assert hits == 1


def test_sum_word_correspondence_round_trips():
    for w in range(1, 5):
        for a in index_tuples(w):
            sign, f = sum_to_weighted_hpl(a)
            assert most_complicated(f) == (sign, a)


def test_sum_to_weighted_hpl_examples():
    assert sum_to_weighted_hpl((1, -1, 2)) == (1, WeightedHpl((-1, 1, 0), "1+x"))
    assert sum_to_weighted_hpl((2, -1, -1)) == (-1, WeightedHpl((0, 1, -1), "1-x"))
    assert sum_to_weighted_hpl((1,)) == (-1, WeightedHpl((), "1-x"))
    assert sum_to_weighted_hpl((-1,)) == (1, WeightedHpl((), "1+x"))
    assert sum_to_weighted_hpl((1, -1, -2, -2, -1)) == (
        -1, WeightedHpl((1, -1, 0, 1, 0, -1), "1-x"))


# ------------------------------------------------------------- inverse map


def test_inverse_mellin_single_sums():
    assert inverse_mellin(parse_expr("S[5,n]")) == parse_mixed(
        "z5*Delta1x - H[0,0,0,0,x]/(1-x)")
    assert inverse_mellin(parse_expr("S[2,1,n]")) == parse_mixed(
        "2*z3*Delta1x - z2*H[x]/(1-x) + H[0,1,x]/(1-x)")
    assert inverse_mellin(parse_expr("S[1,1,2,1,n]")) == parse_mixed(
        "4*z5*Delta1x - z2*H[1,1,x]/(1-x) + H[1,1,0,1,x]/(1-x)")


def test_inverse_mellin_alternating_sum():
    got = inverse_mellin(parse_expr("S[2,-1,-1,n]"))
    want = parse_mixed(
        "(li4half + 1/24*ln2^4 + 5/4*ln2^2*z2 + 1/40*z2^2)*Delta1x"
        " + (1/2*ln2*z2 - z3)*H[x]/(1-x) + ln2^2*H[0,x]/(1-x)"
        " + ln2*H[0,1,x]/(1-x) - H[0,1,-1,x]/(1-x)"
        " + 1/2*ln2*z2*(-1)^n*H[x]/(1+x) + ln2^2*(-1)^n*H[0,x]/(1+x)"
        " - ln2*(-1)^n*H[0,-1,x]/(1+x)")
    assert got == want


def test_round_trip_through_x_space_up_to_weight_four():
    for w in range(1, 5):
        for a in index_tuples(w):
            e = SumExpr.from_factor(S(*a))
            assert mellin(inverse_mellin(e)) == e
            ea = SumExpr.from_const(1, alt=True) * e
            assert mellin(inverse_mellin(ea)) == ea


def test_inverse_mellin_is_linear():
    e = parse_expr("3*S[2,1,n] - z2*S[-2,n] + 7/2")
    a = inverse_mellin(parse_expr("S[2,1,n]"))
    b = inverse_mellin(parse_expr("(-1)^n*0 + S[-2,n]"))
    c = inverse_mellin(parse_expr("1"))
    combined = 3 * a + (-1) * (b * parse_expr("z2")) + c * Fraction(7, 2)
    assert inverse_mellin(e) == combined


def test_inverse_mellin_rejects_rational_coefficients():
    with pytest.raises(ValueError):
        inverse_mellin(parse_expr("S[2,n]/(n+1)"))


def test_inverse_mellin_of_products_expands_first():
    e = parse_expr("S[1,n]*S[2,n]")
    assert mellin(inverse_mellin(e)) == parse_expr(
        "S[1,2,n] + S[2,1,n] - S[3,n]")


# ------------------------------------------------------------ part splitting


def test_part_expansion_golden_values():
    assert part_expansion((4,)) == parse_expr("-S[4,n]")
    assert part_expansion((1, 2)) == parse_expr("S[2,1,n] - S[3,n]")
    assert part_expansion((1, 2, 3)) == parse_expr(
        "-S[3,2,1,n] + S[5,1,n] + S[3,3,n] - S[6,n]")


def brute_ascending(a, n):
    d = len(a)
    total = Fraction(0)
    for combo in itertools.combinations(range(1, n + 1), d):
        p = Fraction(1)
        for i, idx in zip(combo, a):
            s = -1 if (idx < 0 and i % 2) else 1
            p *= Fraction(s, i ** abs(idx))
        total += p
    return Fraction((-1) ** d) * total


@pytest.mark.parametrize("a", [
    (1,), (-2,), (1, 2), (2, -1), (-1, -2), (1, 2, 3), (-1, 1, -2),
])
def test_part_expansion_is_signed_ascending_sum(a):
    e = part_expansion(a)
    for n in (1, 2, 3, 6):
        assert evaluate_expr(e, n) == brute_ascending(a, n)


# -------------------------------------------------------------- shifts


@pytest.mark.parametrize("a", [(2,), (-1,), (2, 1), (1, -2), (-1, -1, 1)])
@pytest.mark.parametrize("s", [1, 2])
def test_expand_shifted_matches_pointwise(a, s):
    e = expand_shifted(a, s)
    for n in (1, 2, 3, 8):
        assert evaluate_expr(e, n) == evaluate_sum(S(*a), n + s)


def test_plain_transform_splits_over_shift():
    # M(H_w, n) = M(H_w/(1+x), n) + M(H_w/(1+x), n+1), checked pointwise
    for word in [(0,), (1,), (-1, 1), (0, -1)]:
        whole = mellin(WeightedHpl(word, "1"))
        part = mellin(WeightedHpl(word, "1+x"))
        for n in (0, 1, 2, 5):
            with mp.workdps(45):
                lhs = evaluate_expr(whole, n, numeric=True, dps=45)
                rhs = evaluate_expr(part, n, numeric=True, dps=45) + \
                    evaluate_expr(part, n + 1, numeric=True, dps=45)
                assert abs(lhs - rhs) < 1e-35


# ---------------------------------------------------------- numeric oracle


def quad_transform(word, denom, n, dps=30):
    """Direct quadrature of the defining integral.

    For words starting with 1 over 1-x the convergent object is the
    difference against n = 0, and the same difference is returned."""
    with mp.workdps(dps + 10):
        half = mp.mpf("0.5")
        if denom == "1":
            f = lambda x: mp.mpf(x) ** n * hpl_eval_numeric(word, x, dps)
            return mp.quad(f, [0, half, 1])
        if denom == "1+x":
            f = lambda x: (mp.mpf(x) ** n * hpl_eval_numeric(word, x, dps)
                           / (1 + mp.mpf(x)))
            return mp.quad(f, [0, half, 1])
        if word and word[0] == 1:
            def f(x):
                x = mp.mpf(x)
                geo = -sum(x ** i for i in range(n))
                return geo * hpl_eval_numeric(word, x, dps)
            return mp.quad(f, [0, half, 1])
        from hsums.hpl import hpl_value_at_one
        h1 = hpl_value_at_one(word).numeric(dps + 10)
        def f(x):
            x = mp.mpf(x)
            return (x ** n * hpl_eval_numeric(word, x, dps) - h1) / (1 - x)
        return mp.quad(f, [0, half, 1])


def sym_value(word, denom, n, dps=40):
    e = mellin(WeightedHpl(word, denom))
    v = evaluate_expr(e, n, numeric=True, dps=dps)
    if denom == "1-x" and word and word[0] == 1:
        v -= evaluate_expr(e, 0, numeric=True, dps=dps)
    return v


def test_weight_one_transforms_match_quadrature():
    for word in [(0,), (1,), (-1,)]:
        for denom in ("1", "1-x", "1+x"):
            for n in range(5):
                q = quad_transform(word, denom, n)
                s = sym_value(word, denom, n)
                assert abs(q - s) < 1e-10, (word, denom, n)


def test_random_transforms_match_quadrature():
    rng = random.Random(20240817)
    pool = [(w, d) for w in words_up_to(3) for d in ("1", "1-x", "1+x")]
    cases = rng.sample(pool, 30)
    for word, denom in cases:
        for n in (0, 3):
            q = quad_transform(word, denom, n)
            s = sym_value(word, denom, n)
            assert abs(q - s) < 1e-10, (word, denom, n)


# ------------------------------------------------------------- text round trip


FORMAT_CASES = [
    "4*z5*Delta1x + z2*H[1,1,x]/(1-x)",
    "z5*Delta1x - H[0,0,0,0,x]/(1-x)",
    "(-1)^n*H[0,-1,x]/(1+x)",
    "H[x]/(1-x)",
    "ln2*(-1)^n*Delta1x",
    "2*z3*Delta1x - z2*H[x]/(1-x) + H[0,1,x]/(1-x)",
    "H[1,0,-1,x]",
]


@pytest.mark.parametrize("text", FORMAT_CASES)
def test_x_space_parse_format_round_trip(text):
    e = parse_mixed(text)
    assert isinstance(e, HplExpr)
    assert parse_mixed(format_hpl_expr(e)) == e


def test_parse_mixed_routes_by_content():
    assert isinstance(parse_mixed("S[2,1,n] - z2"), SumExpr)
    assert isinstance(parse_mixed("H[0,x]/(1-x)"), HplExpr)


def test_random_hpl_expressions_round_trip_through_text():
    rng = random.Random(7)
    consts = ["1", "-2", "z2", "ln2", "-1/3*z3", "z2 - ln2^2"]
    for _ in range(25):
        e = HplExpr.zero()
        for _ in range(rng.randint(1, 4)):
            word = tuple(rng.choice((-1, 0, 1))
                         for _ in range(rng.randint(0, 3)))
            denom = rng.choice(("1", "1-x", "1+x", "delta"))
            c = parse_expr(rng.choice(consts)).constant_part()
            if denom == "delta":
                e = e + HplExpr.delta(c, alt=rng.random() < 0.5)
            else:
                e = e + HplExpr.from_term(word, denom, c,
                                          alt=rng.random() < 0.5)
        assert parse_mixed(format_hpl_expr(e)) == e


def test_x_space_tokens_reject_bad_letters():
    with pytest.raises(ExprSyntaxError):
        parse_mixed("H[2,x]")


def test_mellin_of_delta_terms():
    e = parse_mixed("3*Delta1x + ln2*(-1)^n*Delta1x")
    assert e.mellin() == parse_expr("3 + ln2*(-1)^n")
