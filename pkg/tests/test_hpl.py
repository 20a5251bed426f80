from fractions import Fraction
from itertools import product

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsums.hpl import (
    extract_singularities,
    h_to_series,
    has_leading_ones,
    has_trailing_zeros,
    hpl_eval_numeric,
    hpl_product,
    remove_leading_ones,
    remove_trailing_zeros,
    series_limit_indices,
)


def all_words(max_weight, digits=(-1, 0, 1)):
    out = [()]
    for w in range(1, max_weight + 1):
        out.extend(product(digits, repeat=w))
    return out


class TestProduct:
    def test_paper_product(self):
        got = hpl_product((1, 0, -1), (0, 1))
        assert got == {
            (0, 1, 0, -1, 1): 1,
            (0, 1, 0, 1, -1): 1,
            (0, 1, 1, 0, -1): 2,
            (1, 0, -1, 0, 1): 1,
            (1, 0, 0, -1, 1): 2,
            (1, 0, 0, 1, -1): 2,
            (1, 0, 1, 0, -1): 1,
        }
        assert sum(got.values()) == 10  # C(5,2)

    def test_unit_word(self):
        assert hpl_product((), (0, 1)) == {(0, 1): 1}

    def test_log_square(self):
        assert hpl_product((0,), (0,)) == {(0, 0): 2}

    def test_bad_digit(self):
        with pytest.raises(ValueError):
            hpl_product((2,), (0,))


class TestRemoveTrailingZeros:
    def test_paper_golden(self):
        got = remove_trailing_zeros((1, -1, 0, 0))
        assert got == {
            (2, (1, -1)): Fraction(1, 2),
            (1, (0, 1, -1)): Fraction(-1),
            (1, (1, 0, -1)): Fraction(-1),
            (0, (0, 0, 1, -1)): Fraction(1),
            (0, (0, 1, 0, -1)): Fraction(1),
            (0, (1, 0, 0, -1)): Fraction(1),
        }

    def test_no_trailing_zero_fixed(self):
        assert remove_trailing_zeros((0, 1)) == {(0, (0, 1)): Fraction(1)}

    def test_single_step(self):
        assert remove_trailing_zeros((1, 0)) == {
            (1, (1,)): Fraction(1),
            (0, (0, 1)): Fraction(-1),
        }

    def test_all_zeros(self):
        assert remove_trailing_zeros((0, 0, 0)) == {(3, ()): Fraction(1, 6)}

    def test_outputs_have_no_trailing_zeros(self):
        for w in all_words(5):
            for (p, u), c in remove_trailing_zeros(w).items():
                assert not has_trailing_zeros(u)

    def test_exact_reconstruction(self):
        # re-expand the H[0]-polynomial with the shuffle product
        for w in all_words(5):
            if not w:
                continue
            total = {}
            for (p, u), c in remove_trailing_zeros(w).items():
                poly = {u: Fraction(1)}
                for _ in range(p):
                    new = {}
                    for v, cv in poly.items():
                        for z, cz in hpl_product((0,), v).items():
                            new[z] = new.get(z, Fraction(0)) + cv * cz
                    poly = new
                for v, cv in poly.items():
                    total[v] = total.get(v, Fraction(0)) + c * cv
            total = {v: cv for v, cv in total.items() if cv}
            assert total == {w: Fraction(1)}


class TestRemoveLeadingOnes:
    def test_paper_golden(self):
        # the In/Out box form; the inline example display carries a sign
        # typo on the first term
        got = remove_leading_ones((1, 1, 0, -1))
        assert got == {
            (2, (0, -1)): Fraction(1, 2),
            (1, (0, -1, 1)): Fraction(-1),
            (1, (0, 1, -1)): Fraction(-1),
            (0, (0, -1, 1, 1)): Fraction(1),
            (0, (0, 1, -1, 1)): Fraction(1),
            (0, (0, 1, 1, -1)): Fraction(1),
        }

    def test_no_leading_one_fixed(self):
        assert remove_leading_ones((0, -1)) == {(0, (0, -1)): Fraction(1)}

    def test_outputs_have_no_leading_ones(self):
        for w in all_words(5):
            for (p, u), c in remove_leading_ones(w).items():
                assert not has_leading_ones(u)

    def test_exact_reconstruction(self):
        for w in all_words(4):
            if not w:
                continue
            total = {}
            for (p, u), c in remove_leading_ones(w).items():
                poly = {u: Fraction(1)}
                for _ in range(p):
                    new = {}
                    for v, cv in poly.items():
                        for z, cz in hpl_product((1,), v).items():
                            new[z] = new.get(z, Fraction(0)) + cv * cz
                    poly = new
                for v, cv in poly.items():
                    total[v] = total.get(v, Fraction(0)) + c * cv
            total = {v: cv for v, cv in total.items() if cv}
            assert total == {w: Fraction(1)}


class TestExtractSingularities:
    def test_paper_combined_golden(self):
        got = extract_singularities((1, -1, 0))
        assert got == {
            (1, 1, (-1,)): Fraction(1),
            (0, 1, (-1, 1)): Fraction(-1),
            (1, 0, (0, -1)): Fraction(-1),
            (0, 0, (0, -1, 1)): Fraction(1),
        }

    def test_outputs_clean(self):
        for w in all_words(5):
            for (p1, p0, u), c in extract_singularities(w).items():
                assert not has_trailing_zeros(u)
                assert not has_leading_ones(u)


class TestHToSeries:
    def test_weight_one(self):
        assert h_to_series((1,)) == {(1, 1, ()): Fraction(1)}
        assert h_to_series((-1,)) == {(-1, 1, ()): Fraction(-1)}

    def test_paper_golden_m1_1(self):
        assert h_to_series((-1, 1)) == {
            (1, 2, ()): Fraction(1),
            (-1, 1, (-1,)): Fraction(-1),
        }

    def test_paper_golden_m1_1_0_1(self):
        assert h_to_series((-1, 1, 0, 1)) == {
            (1, 4, ()): Fraction(-1),
            (-1, 1, (-3,)): Fraction(1),
            (1, 2, (2,)): Fraction(1),
            (-1, 1, (-1, 2)): Fraction(-1),
        }

    def test_trailing_zero_rejected(self):
        with pytest.raises(ValueError):
            h_to_series((1, 0))

    def test_value_at_one_indices(self):
        # H[-1,1,0](1) = -2 S_3 + S_{-2,-1} + S_{-1,-2} at infinity
        combined = {}
        for (p0, u), c in remove_trailing_zeros((-1, 1, 0)).items():
            if p0 > 0:
                continue
            for cc, idx in series_limit_indices(h_to_series(u)):
                combined[idx] = combined.get(idx, Fraction(0)) + c * cc
        combined = {k: v for k, v in combined.items() if v}
        assert combined == {
            (3,): Fraction(-2),
            (-2, -1): Fraction(1),
            (-1, -2): Fraction(1),
        }

    def test_value_at_one_indices_weight6(self):
        # H[-1,0,1,0,0,1](1) = -S_6 + S_{-1,-5} + S_{3,3} - S_{-1,-2,3}
        combined = {}
        for cc, idx in series_limit_indices(h_to_series((-1, 0, 1, 0, 0, 1))):
            combined[idx] = combined.get(idx, Fraction(0)) + cc
        combined = {k: v for k, v in combined.items() if v}
        assert combined == {
            (6,): Fraction(-1),
            (-1, -5): Fraction(1),
            (3, 3): Fraction(1),
            (-1, -2, 3): Fraction(-1),
        }


class TestNumeric:
    def test_weight_one_values(self):
        with mp.workdps(35):
            assert abs(
                hpl_eval_numeric((1,), 0.5, 25) - mp.log(2)
            ) < mp.mpf("1e-24")
            assert abs(
                hpl_eval_numeric((-1,), 0.25, 25) - mp.log(mp.mpf("1.25"))
            ) < mp.mpf("1e-24")

    def test_dilog(self):
        with mp.workdps(35):
            for x in ("0.3", "0.8"):
                got = hpl_eval_numeric((0, 1), mp.mpf(x), 25)
                assert abs(got - mp.polylog(2, mp.mpf(x))) < mp.mpf("1e-23")

    def test_trilog(self):
        with mp.workdps(35):
            got = hpl_eval_numeric((0, 0, 1), mp.mpf("0.6"), 25)
            assert abs(got - mp.polylog(3, mp.mpf("0.6"))) < mp.mpf("1e-23")

    def test_x_out_of_range(self):
        with pytest.raises(ValueError):
            hpl_eval_numeric((1,), 1.5)

    def test_quadrature_cross_check(self):
        # independent route: integrate the defining kernel
        with mp.workdps(30):
            for word, x in [((1, 0, -1), "0.6"), ((0, -1, 1), "0.45")]:
                xm = mp.mpf(x)
                m, rest = word[0], word[1:]

                def kernel(y, m=m, rest=rest):
                    f = {
                        0: lambda t: 1 / t,
                        1: lambda t: 1 / (1 - t),
                        -1: lambda t: 1 / (1 + t),
                    }[m](y)
                    return f * hpl_eval_numeric(rest, y, 22)

                quad = mp.quad(kernel, [0, xm])
                direct = hpl_eval_numeric(word, xm, 25)
                assert abs(quad - direct) < mp.mpf("1e-18")

    words4 = [w for w in all_words(3) if w]

    @given(st.data())
    @settings(max_examples=15, deadline=None)
    def test_product_numeric_consistency(self, data):
        u = data.draw(st.sampled_from(self.words4))
        v = data.draw(st.sampled_from([w for w in self.words4 if len(w) + len(u) <= 4]))
        x = data.draw(st.sampled_from(["0.2", "0.5", "0.8"]))
        with mp.workdps(40):
            xm = mp.mpf(x)
            lhs = hpl_eval_numeric(u, xm, 30) * hpl_eval_numeric(v, xm, 30)
            rhs = mp.mpf(0)
            for w, c in hpl_product(u, v).items():
                rhs += c * hpl_eval_numeric(w, xm, 30)
            assert abs(lhs - rhs) < mp.mpf("1e-20")
