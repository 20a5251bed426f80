from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from hsums.kernel import (
    ConstExpr, DivergenceError, S, SumExpr, UnsupportedConstantError, Z,
    evaluate_expr, evaluate_sum, weight,
)
from hsums.lyndon import witt2
from hsums.relations import (
    FIXED_OVERRIDES, UnsupportedWeightError, class_key, class_relations,
    derive_relations, evaluate_at_infinity, extract_leading_ones,
    generate_table, load_table, ones_to_power_sums, reduce_to_basis,
    shuffle_identity, store_table,
)
from hsums.syntax import format_expr, parse_expr


@pytest.fixture(scope="module")
def table_fixed():
    return generate_table(5, "S", "fixed")


@pytest.fixture(scope="module")
def table_partly():
    return generate_table(5, "S", "partly")


# ------------------------------------------------------------ split identity


@pytest.mark.parametrize("kind", ["S", "Z"])
@pytest.mark.parametrize("split", [
    ((1,), (2,)),
    ((2, 1), (-3,)),
    ((1, -2), (2, 1)),
])
def test_shuffle_identity_vanishes(split, kind):
    zero = shuffle_identity(split, kind)
    for n in (1, 2, 3, 7, 11):
        assert evaluate_expr(zero, n) == 0


# ------------------------------------------------------- patterns and counts


PATTERNS = [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1),
            (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("family", ["S", "Z"])
@pytest.mark.parametrize("pattern", PATTERNS)
def test_rule_count_is_perms_minus_witt(pattern, family):
    word = tuple(i for i, m in enumerate(pattern) for _ in range(m))
    nperms = len(set(permutations(word)))
    rules = derive_relations(pattern, family)
    assert len(rules) == nperms - witt2(pattern)


RULES_S_111 = [
    "S[a1,a2,a3] = -1*S[a1]*S[a3,a2] + S[a1,a2]*S[a3] + S[a1,SP(a2,a3)]"
    " + -1*S[a3,SP(a1,a2)] + S[a3,a2,a1]",
    "S[a1,a3,a2] = S[a1]*S[a3,a2] + S[SP(a1,a3),a2] + -1*S[a3,a1,a2]"
    " + S[a3,SP(a1,a2)] + -1*S[a3,a2,a1]",
    "S[a2,a1,a3] = -1*S[a1,a2]*S[a3] + S[a1,a3]*S[a2] + S[SP(a1,a2),a3]"
    " + -1*S[SP(a1,a3),a2] + S[a3,a1,a2]",
    "S[a2,a3,a1] = S[a1]*S[a2,a3] + S[a1]*S[a3,a2] + -1*S[a1,SP(a2,a3)]"
    " + -1*S[a1,a3]*S[a2] + S[SP(a1,a3),a2] + S[a2,SP(a1,a3)]"
    " + -1*S[a3,a1,a2] + S[a3,SP(a1,a2)] + -1*S[a3,a2,a1]",
]

RULES_S_21 = [
    "S[a1,a1,a2] = 1/2*S[a1]*S[a1,a2] + -1/2*S[a1]*S[a2,a1]"
    " + 1/2*S[a1,SP(a1,a2)] + 1/2*S[SP(a1,a1),a2] + -1/2*S[SP(a1,a2),a1]"
    " + S[a2,a1,a1] + -1/2*S[a2,SP(a1,a1)]",
    "S[a1,a2,a1] = S[a1]*S[a2,a1] + S[SP(a1,a2),a1] + -2*S[a2,a1,a1]"
    " + S[a2,SP(a1,a1)]",
]

RULES_S_3 = [
    "S[a1,a1,a1] = 1/3*S[a1]*S[a1,a1] + 1/3*S[a1,SP(a1,a1)]"
    " + 1/3*S[SP(a1,a1),a1]",
]

RULES_Z_111 = [
    "Z[a1,a2,a3] = -1*Z[a1]*Z[a3,a2] + Z[a1,a2]*Z[a3] + -1*Z[a1,SP(a2,a3)]"
    " + Z[a3,SP(a1,a2)] + Z[a3,a2,a1]",
    "Z[a1,a3,a2] = Z[a1]*Z[a3,a2] + -1*Z[SP(a1,a3),a2] + -1*Z[a3,a1,a2]"
    " + -1*Z[a3,SP(a1,a2)] + -1*Z[a3,a2,a1]",
    "Z[a2,a1,a3] = -1*Z[a1,a2]*Z[a3] + Z[a1,a3]*Z[a2] + -1*Z[SP(a1,a2),a3]"
    " + Z[SP(a1,a3),a2] + Z[a3,a1,a2]",
    "Z[a2,a3,a1] = Z[a1]*Z[a2,a3] + Z[a1]*Z[a3,a2] + Z[a1,SP(a2,a3)]"
    " + -1*Z[a1,a3]*Z[a2] + -1*Z[SP(a1,a3),a2] + -1*Z[a2,SP(a1,a3)]"
    " + -1*Z[a3,a1,a2] + -1*Z[a3,SP(a1,a2)] + -1*Z[a3,a2,a1]",
]

RULES_Z_21 = [
    "Z[a1,a1,a2] = 1/2*Z[a1]*Z[a1,a2] + -1/2*Z[a1]*Z[a2,a1]"
    " + -1/2*Z[a1,SP(a1,a2)] + -1/2*Z[SP(a1,a1),a2] + 1/2*Z[SP(a1,a2),a1]"
    " + Z[a2,a1,a1] + 1/2*Z[a2,SP(a1,a1)]",
    "Z[a1,a2,a1] = Z[a1]*Z[a2,a1] + -1*Z[SP(a1,a2),a1] + -2*Z[a2,a1,a1]"
    " + -1*Z[a2,SP(a1,a1)]",
]

RULES_Z_3 = [
    "Z[a1,a1,a1] = 1/3*Z[a1]*Z[a1,a1] + -1/3*Z[a1,SP(a1,a1)]"
    " + -1/3*Z[SP(a1,a1),a1]",
]


@pytest.mark.parametrize("pattern,family,expect", [
    ((1, 1, 1), "S", RULES_S_111),
    ((2, 1), "S", RULES_S_21),
    ((3,), "S", RULES_S_3),
    ((1, 1, 1), "Z", RULES_Z_111),
    ((2, 1), "Z", RULES_Z_21),
    ((3,), "Z", RULES_Z_3),
])
def test_default_rule_presentations(pattern, family, expect):
    rules = derive_relations(pattern, family)
    assert [str(r) for r in rules] == expect


@pytest.mark.parametrize("family,values", [
    ("S", (1, -2, 2)), ("S", (3, 1, -1)), ("Z", (2, -1, 1)),
])
def test_depth3_rules_hold_pointwise(family, values):
    for r in derive_relations((1, 1, 1), family):
        lhs, rhs = r.instantiate(values)
        for n in range(1, 13):
            assert evaluate_sum(lhs, n) == evaluate_expr(rhs, n)


@pytest.mark.parametrize("family,values", [
    ("S", (-2, 3)), ("S", (1, -1)), ("Z", (2, 1)),
])
def test_repeated_index_rules_hold_pointwise(family, values):
    for pattern in ((2, 1), (3,)):
        vals = values[:len(pattern)]
        for r in derive_relations(pattern, family):
            lhs, rhs = r.instantiate(vals)
            for n in range(1, 13):
                assert evaluate_sum(lhs, n) == evaluate_expr(rhs, n)


def test_guard_rejects_colliding_values():
    (rule,) = derive_relations((3,))
    with pytest.raises(ValueError):
        # two slots would be needed; a (3,) rule has one
        rule.instantiate((1, 2))
    rules = derive_relations((1, 1, 1))
    with pytest.raises(ValueError):
        rules[0].instantiate((2, 2, 1))


# --------------------------------------------------------------- classes


def test_class_key_orders_by_size_then_sign():
    assert class_key((2, -1, 1)) == (-1, 1, 2)
    assert class_key((1, -2, 2)) == (1, -2, 2)


def test_class_relations_default_keep():
    kept, solved = class_relations((1, 2, 4))
    assert kept == [(4, 1, 2), (4, 2, 1)]
    assert sorted(solved) == sorted(
        set(permutations((1, 2, 4))) - set(kept))
    for lhs, rhs in solved.items():
        for n in (1, 2, 3, 9):
            assert evaluate_sum(S(*lhs), n) == evaluate_expr(rhs, n)


def test_class_relations_custom_keep():
    keep = FIXED_OVERRIDES[(1, -2, 2)]
    kept, solved = class_relations((1, -2, 2), "S", keep)
    assert set(kept) == set(keep)
    for lhs, rhs in solved.items():
        for n in (1, 2, 5):
            assert evaluate_sum(S(*lhs), n) == evaluate_expr(rhs, n)


# ----------------------------------------------------------------- tables


def test_table_entry_counts(table_partly):
    by_weight = {}
    for idx in table_partly.entries:
        by_weight[weight(idx)] = by_weight.get(weight(idx), 0) + 1
    assert by_weight == {2: 3, 3: 10, 4: 36, 5: 114}


def test_table_is_closed_and_valid(table_fixed):
    entries = table_fixed.entries
    for lhs, rhs in entries.items():
        for (_, _, factors) in rhs.terms:
            for f in factors:
                assert f.indices not in entries
    for lhs in list(entries)[::17]:
        for n in (1, 3, 6):
            assert evaluate_sum(S(*lhs), n) == evaluate_expr(entries[lhs], n)


def test_fixed_override_changes_basis(table_fixed):
    blocked = FIXED_OVERRIDES[(1, -2, 2)]
    others = set(permutations((1, -2, 2))) - set(blocked)
    for idx in blocked:
        assert idx not in table_fixed.entries
    for idx in others:
        assert idx in table_fixed.entries


def test_store_load_round_trip(tmp_path, table_partly):
    path = tmp_path / "w5.tab"
    store_table(table_partly, path)
    back = load_table(path)
    assert back.max_weight == 5
    assert back.family == "S"
    assert back.entries == table_partly.entries
    head = path.read_text().splitlines()[0]
    assert head == "HSUMTAB v1 weight=5 family=S"


def test_load_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.tab"
    path.write_text("TABLE v2 weight=3\n")
    with pytest.raises(ValueError):
        load_table(path)


# -------------------------------------------------------------- strategies


REDUCE_INPUT = (
    "S[1,2,-2,n] + S[-1,2,1,n] + S[-1,2,-2,n] + S[-2,2,1,n] + S[-2,1,2,n]"
    " + S[1,-2,-1,n] + S[-1,2,1,n] + S[2,-1,2,n] + S[-1,2,2,n]"
)

REDUCED_FIXED = (
    "S[-5,n] + 1/2*S[-2,n]^2 + S[-4,n]*S[-1,n] + S[-4,n]*S[1,n]"
    " + S[-2,n]*S[1,n]*S[2,n] + S[-2,n]*S[3,n] + 1/2*S[4,n]"
    " + S[-1,n]*(S[2,n]^2 + S[4,n]) - S[-4,-1,n] - S[-4,1,n] + S[-3,-2,n]"
    " + S[-3,-1,n] + 2*S[-3,2,n] + S[1,n]*S[-2,-1,n] + S[2,n]*S[-2,1,n]"
    " - S[-1,n]*(S[-4,n] + S[-2,n]*S[2,n] - S[2,-2,n])"
    " - S[1,n]*(S[-4,n] + S[-2,n]*S[2,n] - S[2,-2,n])"
    " + S[-2,n]*(S[-1,n]*S[2,n] - S[2,-1,n]) - S[2,n]*S[2,-1,n]"
    " - 2*S[-2,n]*S[2,1,n] - S[4,-1,n] - S[-2,-1,1,n] - S[-2,1,-1,n]"
    " + S[-2,2,-1,n] + 2*S[-2,2,1,n] - S[-1,2,2,n] + S[2,1,-2,n]"
    " + 2*(S[-3,1,n] + S[2,-2,n] + S[-1,n]*S[2,1,n] - S[2,-1,1,n]"
    " - S[2,1,-1,n])"
)

REDUCED_PARTLY = (
    "S[-5,n] + S[-3,n]*S[2,n] + 1/2*S[-1,n]*(S[2,n]^2 + S[4,n])"
    " - S[-4,1,n] + S[1,n]*S[2,-2,n] - S[-2,n]*S[2,1,n] + S[3,-2,n]"
    " + S[-2,1,2,n] + 2*S[-2,2,1,n] + S[-1,2,-2,n] + 2*S[-1,2,1,n]"
    " + S[1,-2,-1,n] - S[2,2,-1,n]"
)

REDUCED_DYNAMIC = (
    "S[-5,n] + S[-3,n]*S[2,n] + 1/2*S[-1,n]*(S[2,n]^2 + S[4,n])"
    " + S[1,n]*S[-2,2,n] + S[-2,3,n] - S[1,-4,n] - S[-2,n]*S[1,2,n]"
    " - 1/2*S[2,-3,n] - 1/2*S[2,n]*S[2,-1,n] - 1/2*S[4,-1,n]"
    " + S[-2,1,2,n] + S[-1,2,-2,n] + 2*S[-1,2,1,n] + S[1,-2,-1,n]"
    " + 2*S[1,2,-2,n] + 1/2*S[2,-1,2,n]"
)


@pytest.mark.parametrize("strategy,expect", [
    ("fixed", REDUCED_FIXED),
    ("partly", REDUCED_PARTLY),
    ("dynamic", REDUCED_DYNAMIC),
])
def test_strategy_goldens(strategy, expect):
    e = parse_expr(REDUCE_INPUT)
    got = reduce_to_basis(e, strategy)
    assert got == parse_expr(expect)
    for n in (1, 2, 3, 7):
        assert evaluate_expr(got, n) == evaluate_expr(e, n)


def _plain_indices(e):
    for (_, _, factors) in e.terms:
        for f in factors:
            if f.kind == "S" and f.xs is None and f.scale == 1 \
                    and f.shift == 0 and f.deriv == 0 and len(f.indices) > 1:
                yield f.indices


small_class = st.lists(
    st.integers(min_value=-2, max_value=2).filter(lambda x: x != 0),
    min_size=2, max_size=3,
).map(tuple).filter(lambda a: weight(a) <= 4)


@given(st.lists(small_class, min_size=1, max_size=3, unique=True),
       st.sampled_from(["fixed", "partly", "dynamic"]))
@settings(max_examples=25, deadline=None)
def test_reduce_random_expressions(classes, strategy):
    e = SumExpr.zero()
    for i, idx in enumerate(classes):
        e = e + SumExpr.from_factor(S(*idx)) * Fraction(i + 1, 2)
    got = reduce_to_basis(e, strategy)
    for n in (2, 5):
        assert evaluate_expr(got, n) == evaluate_expr(e, n)
    counts = {}
    for idx in set(_plain_indices(got)):
        counts.setdefault(class_key(idx), set()).add(idx)
    for mset, kept in counts.items():
        from hsums.relations import _class_slots
        pattern, _ = _class_slots(mset)
        assert len(kept) <= witt2(pattern)


# ----------------------------------------------- leading ones and infinity


def test_extract_leading_ones_goldens():
    e = extract_leading_ones((1, 1, 2))
    assert format_expr(e) == (
        "1/2*S[1,n]^2*S[2,n] + S[1,n]*S[3,n] - S[1,n]*S[2,1,n]"
        " + 1/2*S[4,n] - S[3,1,n] + S[2,1,1,n]")
    e2 = extract_leading_ones((1, -2))
    assert format_expr(e2) == "S[1,n]*S[-2,n] + S[-3,n] - S[-2,1,n]"


@given(st.lists(st.integers(min_value=-2, max_value=2)
                .filter(lambda x: x != 0),
                min_size=1, max_size=3).map(tuple))
@settings(max_examples=30, deadline=None)
def test_extract_leading_ones_pointwise(idx):
    e = extract_leading_ones(idx)
    for (_, _, factors) in e.terms:
        for f in factors:
            assert f.indices[0] != 1 or all(x == 1 for x in f.indices)
    for n in (1, 2, 4, 8):
        assert evaluate_expr(e, n) == evaluate_sum(S(*idx), n)


def test_ones_to_power_sums():
    assert format_expr(ones_to_power_sums(2)) == \
        "1/2*S[1,n]^2 + 1/2*S[2,n]"
    assert format_expr(ones_to_power_sums(3)) == \
        "1/6*S[1,n]^3 + 1/2*S[1,n]*S[2,n] + 1/3*S[3,n]"
    for w in range(1, 6):
        e = ones_to_power_sums(w)
        for n in (1, 3, 7):
            assert evaluate_expr(e, n) == evaluate_sum(S(*([1] * w)), n)


def test_infinity_basic_values():
    assert evaluate_at_infinity(SumExpr.from_factor(S(2))) == \
        ConstExpr.symbol("z2")
    assert evaluate_at_infinity(SumExpr.from_factor(S(-1))) == \
        ConstExpr.symbol("ln2") * Fraction(-1)
    assert evaluate_at_infinity(SumExpr.from_factor(Z(2, 1))) == \
        ConstExpr.symbol("z3")
    assert evaluate_at_infinity(SumExpr.from_factor(S(1))) == \
        ConstExpr.symbol("sigma1")


def test_infinity_divergent_prefactor_golden():
    c = evaluate_at_infinity(SumExpr.from_factor(S(1, 1, 2)))
    expect = (ConstExpr.symbol("sigma1", 2) * ConstExpr.symbol("z2")
              * Fraction(1, 2)
              - ConstExpr.symbol("sigma1") * ConstExpr.symbol("z3")
              + ConstExpr.symbol("z2", 2) * Fraction(9, 10))
    assert c == expect


def test_infinity_rational_prefactors():
    c = evaluate_at_infinity(parse_expr("(2*n+3)/(n+1)*S[2,n]"))
    assert c == ConstExpr.symbol("z2") * 2
    assert evaluate_at_infinity(parse_expr("S[2,n+3]")) == \
        ConstExpr.symbol("z2")
    assert evaluate_at_infinity(parse_expr("1/n*S[2,n]")) == ConstExpr.zero()


def test_infinity_errors():
    with pytest.raises(DivergenceError):
        evaluate_at_infinity(parse_expr("(-1)^n*S[2,n]"))
    with pytest.raises(DivergenceError):
        evaluate_at_infinity(parse_expr("n*S[2,n]"))
    with pytest.raises(UnsupportedConstantError):
        evaluate_at_infinity(SumExpr.from_factor(S(6, 1)))


def test_reduce_weight_cap():
    t3 = generate_table(3)
    with pytest.raises(UnsupportedWeightError):
        reduce_to_basis(SumExpr.from_factor(S(2, 2)), "fixed", t3)
