"""Mellin transforms linking weighted polylog integrands to nested sums.

The x-space objects are harmonic polylogarithms H_word(x) divided by 1,
1-x, or 1+x, plus delta(1-x) terms. Their Mellin transforms with respect
to x^n are expressions in nested sums of n. Both directions are exact.
"""

from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .algebra import linear_expand
from .hpl import check_hpl_word, hpl_product, hpl_value_at_one, remove_leading_ones
from .kernel import ConstExpr, Poly, RatFunc, SumExpr, SumFactor, SYM_INDEX
from .relations import evaluate_at_infinity
from . import syntax


class DivergenceCancellationError(RuntimeError):
    """Symbolic divergence markers survived where they must cancel."""


class WeightedHpl(NamedTuple):
    """H_word(x) divided by denom; denom is one of "1", "1-x", "1+x"."""
    word: tuple
    denom: str


DENOMS = ("1", "1-x", "1+x")

_ONE = Fraction(1)
_ALT = SumExpr.from_const(1, alt=True)


def _sf(indices):
    return SumFactor("S", tuple(indices), None, _ONE, 0, 0)


def _tail(indices):
    """S_indices at infinity minus S_indices(n)."""
    inf = evaluate_at_infinity(SumExpr.from_factor(_sf(indices)))
    return SumExpr.from_const(inf) - SumExpr.from_factor(_sf(indices))


_ACC_CACHE = {}


def _acc(sign, word, k, p):
    """Tail integral: int_0^1 sum_{i>=n} (sign*x)^i H_word(x) S_p(i+1)/(i+1)^k dx.

    Splitting off the first letter of the word trades it for a deeper
    inner sum; the empty word is a pure tail of a single nested sum.
    """
    key = (sign, word, k, p)
    hit = _ACC_CACHE.get(key)
    if hit is not None:
        return hit
    if not word:
        e = _tail((k + 1,) + p) if sign > 0 else -_tail((-(k + 1),) + p)
        _ACC_CACHE[key] = e
        return e
    d, m = word[0], word[1:]
    hv = SumExpr.from_const(_h_one(word))
    plus_idx = (k + 1,) + p
    minus_idx = (-(k + 1),) + p
    if sign > 0:
        t = _tail(plus_idx)
        if d == 0:
            e = hv * t - _acc(1, m, k + 1, p)
        elif d == 1:
            e = (hv * t - _acc(1, m, 0, plus_idx) + _acc(1, m, k + 1, p)
                 + SumExpr.from_factor(_sf(plus_idx)) * _acc(1, m, 0, ()))
        else:
            e = (hv * t - _acc(-1, m, 0, minus_idx) - _acc(1, m, k + 1, p)
                 + SumExpr.from_factor(_sf(minus_idx)) * _acc(-1, m, 0, ()))
    else:
        t = _tail(minus_idx)
        if d == 0:
            e = -hv * t - _acc(-1, m, k + 1, p)
        elif d == -1:
            e = (-hv * t + _acc(-1, m, 0, plus_idx) - _acc(-1, m, k + 1, p)
                 - SumExpr.from_factor(_sf(plus_idx)) * _acc(-1, m, 0, ()))
        else:
            e = (-hv * t + _acc(1, m, 0, minus_idx) + _acc(-1, m, k + 1, p)
                 - SumExpr.from_factor(_sf(minus_idx)) * _acc(1, m, 0, ()))
    e = linear_expand(e)
    _ACC_CACHE[key] = e
    return e


_H_ONE_CACHE = {}


def _h_one(word):
    """H_word(1), regularized consistently with the tail integrals.

    Words starting with 1 diverge at 1; their value here is the constant
    part of the corresponding tail integral at n = 0, which is what the
    recursion over first letters actually produces.
    """
    hit = _H_ONE_CACHE.get(word)
    if hit is None:
        if word and word[0] == 1:
            hit = _acc(1, word[1:], 0, ()).constant_part()
        else:
            hit = hpl_value_at_one(word)
        _H_ONE_CACHE[word] = hit
    return hit


def _one_minus_x_remainder(word):
    """The n-free divergent piece subtracted from the 1/(1-x) transform."""
    r = ConstExpr.zero()
    for (pw, y), c in remove_leading_ones(word).items():
        r = r + (Fraction(factorial(pw)) * c) * (
            _h_one((1,) * (pw + 1)) * hpl_value_at_one(y))
    return r


def _sigma1_free(e):
    i = SYM_INDEX["sigma1"]
    return all(cm[i] == 0 for (cm, alt, fs) in e.terms)


def expand_shifted(indices, shift):
    """S_indices(n+shift) as an expression in sums of argument n, shift >= 0."""
    if shift == 0:
        if not indices:
            return SumExpr.from_const(1)
        return SumExpr.from_factor(_sf(indices))
    if not indices:
        return SumExpr.from_const(1)
    head, rest = indices[0], indices[1:]
    e = expand_shifted(indices, shift - 1)
    den = Poly((Fraction(shift), Fraction(1)))
    p = Poly((Fraction(1),))
    for _ in range(abs(head)):
        p = p * den
    term = SumExpr.from_rat(RatFunc(Poly((Fraction(1),)), p)) * \
        expand_shifted(rest, shift)
    if head < 0:
        term = _ALT * term
        if shift % 2:
            term = -term
    return linear_expand(e + term)


def _shift_plus_one(e):
    """Substitute n -> n+1 into an expression of shift-free plain sums."""
    out = SumExpr.zero()
    for (cm, alt, fs), r in e.terms.items():
        if not r.is_constant():
            raise ValueError("cannot shift a rational coefficient")
        piece = SumExpr.from_const(ConstExpr({cm: r.constant_value()}), alt=alt)
        if alt:
            piece = -piece
        for f in fs:
            piece = piece * expand_shifted(f.indices, 1)
        out = out + piece
    return linear_expand(out)


_MELLIN_CACHE = {}


def _transform(word, denom):
    """Mellin transform of H_word(x)/denom against x^n, as a SumExpr.

    For words starting with 1 over 1-x the integral itself diverges; the
    result is the standard subtracted transform, fixed by its value 0 of
    the divergent marker sigma1.
    """
    key = (word, denom)
    hit = _MELLIN_CACHE.get(key)
    if hit is not None:
        return hit
    if denom == "1+x":
        e = _ALT * _acc(-1, word, 0, ())
    elif denom == "1-x":
        e = _acc(1, word, 0, ()) - SumExpr.from_const(_one_minus_x_remainder(word))
    elif denom == "1":
        base = _transform(word, "1+x")
        e = base + _shift_plus_one(base)
    else:
        raise ValueError("unknown denominator %r" % (denom,))
    e = linear_expand(e)
    if not _sigma1_free(e):
        raise DivergenceCancellationError(
            "divergent markers did not cancel in the transform of "
            "H%r/%s" % (list(word), denom))
    _MELLIN_CACHE[key] = e
    return e


def mellin(f):
    """Mellin transform of a WeightedHpl or HplExpr as a SumExpr."""
    if isinstance(f, HplExpr):
        return f.mellin()
    word = check_hpl_word(f.word)
    return _transform(word, f.denom)


# --------------------------------------------------------------- x space


class HplExpr:
    """Linear combination of weighted polylog terms and delta(1-x) terms.

    Keys are (alt, denom, word); a True alt flag marks terms whose Mellin
    transform carries an extra (-1)^n. The delta denominator uses the
    empty word.
    """

    def __init__(self):
        self.parts = {}

    @staticmethod
    def zero():
        return HplExpr()

    @staticmethod
    def from_term(word, denom, coeff=1, alt=False):
        if denom not in DENOMS:
            raise ValueError("unknown denominator %r" % (denom,))
        out = HplExpr()
        out._add_part((bool(alt), denom, check_hpl_word(word)), _as_const(coeff))
        return out

    @staticmethod
    def delta(coeff=1, alt=False):
        out = HplExpr()
        out._add_part((bool(alt), "delta", ()), _as_const(coeff))
        return out

    def _add_part(self, key, c):
        cur = self.parts.get(key)
        c = c if cur is None else cur + c
        if not c:
            self.parts.pop(key, None)
        else:
            self.parts[key] = c

    def is_zero(self):
        return not self.parts

    def __eq__(self, other):
        return isinstance(other, HplExpr) and self.parts == other.parts

    def __hash__(self):
        return hash(frozenset(self.parts.items()))

    def __neg__(self):
        out = HplExpr()
        out.parts = {k: -c for k, c in self.parts.items()}
        return out

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ConstExpr)):
            other = HplExpr.from_term((), "1", other)
        elif isinstance(other, SumExpr):
            other = _hpl_from_sumexpr(other)
            if other is None:
                return NotImplemented
        if not isinstance(other, HplExpr):
            return NotImplemented
        out = HplExpr()
        out.parts = dict(self.parts)
        for k, c in other.parts.items():
            out._add_part(k, c)
        return out

    __radd__ = __add__

    def __sub__(self, other):
        res = self + (-other if isinstance(other, HplExpr) else -1 * other)
        return res

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_value()
        if isinstance(other, (int, Fraction, ConstExpr)):
            c = _as_const(other)
            out = HplExpr()
            for k, v in self.parts.items():
                out._add_part(k, v * c)
            return out
        if isinstance(other, SumExpr):
            scaled = _hpl_scale_by_sumexpr(self, other)
            if scaled is not None:
                return scaled
        return NotImplemented

    __rmul__ = __mul__

    def mul_word(self, w):
        """Shuffle-multiply every term by the polylog H_w."""
        w = check_hpl_word(w)
        out = HplExpr()
        for (alt, denom, word), c in self.parts.items():
            if denom == "delta":
                out._add_part((alt, "delta", ()), c * hpl_value_at_one(w))
                continue
            for word2, c2 in hpl_product(word, w).items():
                out._add_part((alt, denom, word2), c * c2)
        return out

    def drop_delta(self):
        """The combination without its delta(1-x) terms."""
        out = HplExpr()
        for key, c in self.parts.items():
            if key[1] != "delta":
                out._add_part(key, c)
        return out

    def mellin(self):
        """Mellin transform of the whole combination as a SumExpr."""
        out = SumExpr.zero()
        for (alt, denom, word), c in self.parts.items():
            if denom == "delta":
                out = out + SumExpr.from_const(c, alt=alt)
                continue
            e = _transform(word, denom)
            if alt:
                e = _ALT * e
            out = out + c * e
        return linear_expand(out)


def _as_const(c):
    if isinstance(c, ConstExpr):
        return c
    return ConstExpr.rational(Fraction(c))


def _const_terms_of(e):
    """(plain, alternating) constant content of a SumExpr, or None."""
    plain = ConstExpr.zero()
    alt = ConstExpr.zero()
    for (cm, a, fs), r in e.terms.items():
        if fs or not r.is_constant():
            return None
        piece = ConstExpr({cm: r.constant_value()})
        if a:
            alt = alt + piece
        else:
            plain = plain + piece
    return plain, alt


def _hpl_from_sumexpr(e):
    got = _const_terms_of(e)
    if got is None:
        return None
    plain, alt = got
    out = HplExpr()
    if plain:
        out._add_part((False, "1", ()), plain)
    if alt:
        out._add_part((True, "1", ()), alt)
    return out


def _hpl_scale_by_sumexpr(h, e):
    got = _const_terms_of(e)
    if got is None:
        return None
    plain, alt = got
    out = HplExpr()
    for (a, denom, word), c in h.parts.items():
        if plain:
            out._add_part((a, denom, word), c * plain)
        if alt:
            out._add_part((not a, denom, word), c * alt)
    return out


# -------------------------------------------------- sum/word correspondence


def most_complicated(f):
    """The deepest-weight sum in the transform of a weighted word.

    Returns (sign, indices); for the 1+x denominator the sum carries an
    implicit (-1)^n. Only the 1-x and 1+x denominators have one.
    """
    if f.denom not in ("1-x", "1+x"):
        raise ValueError("no single leading sum for denominator %r" % (f.denom,))
    word = check_hpl_word(f.word)
    w = 1 if f.denom == "1+x" else -1
    digits = list(word) + [1]
    orig = list(word) + [1]
    prev = None
    for i, d in enumerate(digits):
        if d == 0:
            continue
        if (prev is None and w == 1) or (prev is not None and prev < 0):
            digits[i] = -d
        prev = orig[i]
    indices = []
    zeros = 0
    for d in digits:
        if d == 0:
            zeros += 1
        else:
            indices.append(d * (zeros + 1))
            zeros = 0
    k = sum(1 for d in word if d <= 0)
    return w * (-1) ** k, tuple(indices)


def sum_to_weighted_hpl(indices):
    """The weighted word whose transform leads with S_indices.

    Returns (sign, WeightedHpl); an odd number of negative indices means
    the 1+x denominator and an implicit (-1)^n on the sum.
    """
    b = list(indices)
    if not b or any(a == 0 for a in b):
        raise ValueError("need a nonempty tuple of nonzero indices")
    negs = sum(1 for a in b if a < 0)
    if negs % 2:
        denom, sigma = "1+x", 1
        b[0] = -b[0]
    else:
        denom, sigma = "1-x", -1
    for i in range(1, len(b)):
        if b[i - 1] < 0:
            b[i] = -b[i]
    digits = []
    for a in b:
        digits.extend([0] * (abs(a) - 1))
        digits.append(1 if a > 0 else -1)
    word = tuple(digits[:-1])
    k = sum(1 for d in word if d <= 0)
    return sigma * (-1) ** k, WeightedHpl(word, denom)


def part_expansion(indices):
    """Expansion of a nested sum over splittings into consecutive blocks.

    Each way of cutting the index tuple into blocks contributes the
    product of the block sums with sign (-1)^(number of blocks).
    """
    indices = tuple(indices)
    d = len(indices)
    if d == 0:
        raise ValueError("need a nonempty index tuple")
    out = SumExpr.zero()
    for mask in range(1 << (d - 1)):
        blocks = []
        start = 0
        for i in range(d - 1):
            if mask & (1 << i):
                blocks.append(indices[start:i + 1])
                start = i + 1
        blocks.append(indices[start:])
        piece = SumExpr.from_const((-1) ** len(blocks))
        for blk in blocks:
            piece = piece * SumExpr.from_factor(_sf(blk))
        out = out + piece
    return linear_expand(out)


# ------------------------------------------------------------ inverse map


def _sum_weight(indices):
    return sum(abs(a) for a in indices)


def _plain_single(fs):
    """The factor if fs is one plain undecorated sum, else None."""
    if len(fs) != 1:
        return None
    f = fs[0]
    if f.kind != "S" or f.xs is not None or f.scale != 1 or f.shift != 0 \
            or f.deriv:
        return None
    return f


def inverse_mellin(e):
    """The x-space combination whose Mellin transform equals e.

    The input must be a combination of plain sums of argument n with
    constant coefficients (products are expanded first); Z sums should be
    converted beforehand. Peeling the deepest sum against the transform
    of its partner word strictly lowers the remaining weight, and what
    survives factor-free becomes the delta(1-x) part.
    """
    work = linear_expand(e)
    for (cm, alt, fs), r in work.terms.items():
        if _plain_single(fs) is None and fs:
            raise ValueError(
                "not a linear combination of plain sums: %s"
                % syntax.format_expr(SumExpr.from_factor(fs[0])))
        if not r.is_constant():
            raise ValueError("coefficients must not depend on n")
    out = HplExpr()
    while True:
        best = None
        for (cm, alt, fs), r in work.terms.items():
            f = _plain_single(fs)
            if f is None:
                continue
            key = (_sum_weight(f.indices), len(f.indices), f.indices)
            if best is None or key > best[0]:
                best = (key, f.indices)
        if best is None:
            break
        indices = best[1]
        # full coefficient of this sum, split by the alternating flag
        for tag in (False, True):
            coeff = ConstExpr.zero()
            for (cm, alt, fs), r in work.terms.items():
                f = _plain_single(fs)
                if f is not None and f.indices == indices and alt == tag:
                    coeff = coeff + ConstExpr({cm: r.constant_value()})
            if not coeff:
                continue
            s, wh = sum_to_weighted_hpl(indices)
            xalt = tag != (wh.denom == "1+x")
            mel = _transform(wh.word, wh.denom)
            if xalt:
                mel = _ALT * mel
            c = coeff * Fraction(s)
            out._add_part((xalt, wh.denom, wh.word), c)
            work = linear_expand(work - c * mel)
    leftover = _const_terms_of(work)
    if leftover is None:
        raise DivergenceCancellationError(
            "inverse transform left a non-constant remainder: %s"
            % syntax.format_expr(work))
    plain, alt = leftover
    if plain:
        out._add_part((False, "delta", ()), plain)
    if alt:
        out._add_part((True, "delta", ()), alt)
    return out


# ------------------------------------------------------------- formatting


def _weight_of_word(word):
    return len(word)


def format_hpl_expr(e):
    """Canonical text for an HplExpr; delta terms first, then by weight."""
    if isinstance(e, SumExpr):
        return syntax.format_expr(e)
    if e.is_zero():
        return "0"
    def sort_key(item):
        (alt, denom, word), _ = item
        if denom == "delta":
            return (0, 0, (), "", alt)
        return (1, _weight_of_word(word), word, denom, alt)
    chunks = []
    for (alt, denom, word), c in sorted(e.parts.items(), key=sort_key):
        cs = syntax.format_expr(SumExpr.from_const(c))
        neg = False
        if " " in cs:
            cs = "(%s)" % cs
        elif cs.startswith("-"):
            neg = True
            cs = cs[1:]
        parts = []
        if cs != "1":
            parts.append(cs)
        if alt:
            parts.append("(-1)^n")
        if denom == "delta":
            parts.append("Delta1x")
        else:
            h = "H[%s]" % ",".join([str(d) for d in word] + ["x"])
            if denom != "1":
                h += "/(%s)" % denom
            parts.append(h)
        body = "*".join(parts)
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


# ---------------------------------------------------------------- parsing


def _parse_h_atom(parser):
    parser.expect("op", "[")
    digits = []
    while True:
        k, v, pos = parser.peek()
        if k == "name" and v == "x":
            parser.next()
            break
        d = parser._signed_int()
        if d not in (-1, 0, 1):
            raise syntax.ExprSyntaxError("polylog letters are -1, 0, 1", pos)
        digits.append(d)
        parser.expect("op", ",")
    parser.expect("op", "]")
    denom = "1"
    k, v, _ = parser.peek()
    if k == "op" and v == "/" and parser.tokens[parser.i + 1][1] == "(":
        save = parser.i
        parser.next()
        parser.expect("op", "(")
        one = parser.expect("int")
        k2, sgn, _ = parser.next()
        k3, xname, _ = parser.next()
        if one[1] == 1 and k2 == "op" and sgn in "+-" and k3 == "name" \
                and xname == "x":
            parser.expect("op", ")")
            denom = "1%sx" % sgn
        else:
            parser.i = save
    return HplExpr.from_term(tuple(digits), denom)


def _parse_delta_atom(parser):
    return HplExpr.delta(1)


syntax.register_atom("H", _parse_h_atom)
syntax.register_atom("Delta1x", _parse_delta_atom)


def parse_mixed(text):
    """Parse either an n-space SumExpr or an x-space HplExpr."""
    return syntax.parse_expr(text)
