"""Harmonic polylogarithms over the alphabet {-1, 0, 1}.

A word is a tuple of digits; the empty word denotes the constant 1.
H(0,)(x) = log x, H(1,)(x) = -log(1-x), H(-1,)(x) = log(1+x), and longer
words integrate f(a,y) = 1/y, 1/(1-y), 1/(1+y) against the tail word.

Singularity extraction writes a word as a polynomial in H[0] and H[1]
with coefficients free of trailing zeros / leading ones; such words have
power series whose coefficients are harmonic sums, which is the bridge
to values at one and to Mellin transforms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

import mpmath as mp

from .algebra import shuffle
from .kernel import ConstExpr, S, SumExpr


def check_hpl_word(word):
    w = tuple(word)
    if any(d not in (-1, 0, 1) for d in w):
        raise ValueError(f"HPL digits must be in {{-1,0,1}}: {w!r}")
    return w


def has_trailing_zeros(word):
    return bool(word) and word[-1] == 0


def has_leading_ones(word):
    return bool(word) and word[0] == 1


def hpl_product(u, v):
    """Shuffle product of two HPL words: dict word -> integer coefficient."""
    return shuffle(check_hpl_word(u), check_hpl_word(v))


def hpl_product_expr(p, q):
    """Shuffle product of two HPL polynomials (dicts word -> coefficient)."""
    out = {}
    for u, cu in p.items():
        for v, cv in q.items():
            for w, c in shuffle(u, v).items():
                cc = out.get(w, 0) + cu * cv * c
                if cc:
                    out[w] = cc
                else:
                    del out[w]
    return out


@lru_cache(maxsize=None)
def remove_trailing_zeros(word):
    """Write H_word as a polynomial in H[0].

    Returns dict (h0_power, word) -> Fraction; the words carry no
    trailing zeros.  Value-identical on (0,1).
    """
    w = check_hpl_word(word)
    if not w or w[-1] != 0:
        return {(0, w): Fraction(1)}
    if all(d == 0 for d in w):
        return {(len(w), ()): Fraction(1, factorial(len(w)))}
    v = w[:-1]
    sh = dict(shuffle((0,), v))
    m = sh.pop(w)
    out = {}

    def add(power, word2, coeff):
        key = (power, word2)
        cc = out.get(key, Fraction(0)) + coeff
        if cc:
            out[key] = cc
        else:
            out.pop(key, None)

    for (p, u), c in remove_trailing_zeros(v).items():
        add(p + 1, u, Fraction(c, m))
    for u, cu in sh.items():
        for (p, u2), c2 in remove_trailing_zeros(u).items():
            add(p, u2, -Fraction(cu, m) * c2)
    return out


@lru_cache(maxsize=None)
def remove_leading_ones(word):
    """Write H_word as a polynomial in H[1].

    Returns dict (h1_power, word) -> Fraction; the words carry no
    leading ones.  Valid on (0,1); at x=1 the H[1] powers carry the
    divergence.
    """
    w = check_hpl_word(word)
    if not w or w[0] != 1:
        return {(0, w): Fraction(1)}
    if all(d == 1 for d in w):
        return {(len(w), ()): Fraction(1, factorial(len(w)))}
    v = w[1:]
    sh = dict(shuffle((1,), v))
    m = sh.pop(w)
    out = {}

    def add(power, word2, coeff):
        key = (power, word2)
        cc = out.get(key, Fraction(0)) + coeff
        if cc:
            out[key] = cc
        else:
            out.pop(key, None)

    for (p, u), c in remove_leading_ones(v).items():
        add(p + 1, u, Fraction(c, m))
    for u, cu in sh.items():
        for (p, u2), c2 in remove_leading_ones(u).items():
            add(p, u2, -Fraction(cu, m) * c2)
    return out


def extract_singularities(word):
    """Full extraction: dict (h1_power, h0_power, word) -> Fraction with
    words free of both leading ones and trailing zeros."""
    out = {}
    for (p0, u), c in remove_trailing_zeros(tuple(word)).items():
        for (p1, u2), c2 in remove_leading_ones(u).items():
            key = (p1, p0, u2)
            cc = out.get(key, Fraction(0)) + c * c2
            if cc:
                out[key] = cc
            else:
                out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def h_to_series(word):
    """Power-series form of a word without trailing zeros.

    Returns dict (sigma, a, inner) -> Fraction, a term meaning
        coeff * Sum_{i>=1} (sigma*x)^i S_inner(i) / i^a.
    """
    w = check_hpl_word(word)
    if not w:
        raise ValueError("empty word has no series")
    if w[-1] == 0:
        raise ValueError("word has trailing zeros; extract them first")
    if len(w) == 1:
        if w == (1,):
            return {(1, 1, ()): Fraction(1)}
        return {(-1, 1, ()): Fraction(-1)}
    first, rest = w[0], w[1:]
    out = {}

    def add(sigma, a, inner, coeff):
        key = (sigma, a, inner)
        cc = out.get(key, Fraction(0)) + coeff
        if cc:
            out[key] = cc
        else:
            out.pop(key, None)

    for (sigma, a, inner), c in h_to_series(rest).items():
        if first == 0:
            add(sigma, a + 1, inner, c)
        elif first == 1:
            add(1, 1, (sigma * a,) + inner, c)
            add(sigma, a + 1, inner, -c)
        else:
            add(-1, 1, (-sigma * a,) + inner, -c)
            add(sigma, a + 1, inner, c)
    return out


def series_limit_indices(series):
    """x -> 1 limit of each series term as a harmonic sum at infinity:
    list of (coeff, index_vector) with index (sigma*a, inner...)."""
    return [
        (c, (sigma * a,) + inner)
        for (sigma, a, inner), c in sorted(series.items())
    ]


def hpl_value_at_one(word):
    """Value of H_word at x=1 as a ConstExpr; divergences appear as
    powers of sigma1."""
    from .relations import evaluate_at_infinity

    w = check_hpl_word(word)
    if not w:
        return ConstExpr.one()
    if all(d == 0 for d in w):
        return ConstExpr.zero()
    expr = SumExpr.zero()
    for (p0, u), c in remove_trailing_zeros(w).items():
        if p0 > 0:
            continue
        for cc, idx in series_limit_indices(h_to_series(u)):
            expr = expr + SumExpr.from_factor(S(*idx)) * (c * cc)
    return evaluate_at_infinity(expr)


def _series_numeric(series, x, prec_dps):
    """Numerically sum a h_to_series dict at 0 < x < 1."""
    with mp.workdps(prec_dps + 10):
        eps = mp.mpf(10) ** (-(prec_dps + 5))
        total = mp.mpf(0)
        terms = [
            (mp.mpf(c.numerator) / c.denominator, sigma, a, p)
            for (sigma, a, p), c in series.items()
        ]
        # per inner index: suffix accumulators s[j] = S_{p[j:]}(i)
        states = {p: [mp.mpf(0)] * len(p) + [mp.mpf(1)] for _, _, _, p in terms}
        xm = mp.mpf(x)
        powers = {1: mp.mpf(1), -1: mp.mpf(1)}
        kmax = max((len(p) for _, _, _, p in terms), default=0)
        i = 0
        while True:
            i += 1
            powers[1] *= xm
            powers[-1] *= -xm
            im = mp.mpf(i)
            for p, s in states.items():
                for j in range(len(p) - 1, -1, -1):
                    sgn = -1 if (p[j] < 0 and i % 2 == 1) else 1
                    s[j] += sgn * s[j + 1] / im ** abs(p[j])
            for cf, sigma, a, p in terms:
                total += cf * powers[sigma] * states[p][0] / im ** a
            if i > 30:
                bound = (2 + mp.log(i)) ** kmax * powers[1] * i / (1 - xm)
                if abs(bound) < eps:
                    break
            if i > 200000:
                raise RuntimeError("series did not converge")
        return +total


_NEAR_ONE_CACHE = {}


def _near_one_expansion(word, dps, jmax):
    """Coefficients {(j, k): mpf} of H_word(1-d) = sum a_jk d^j ln^k d.

    Requires a word without leading ones. Truncated at d^jmax."""
    key = (word, dps, jmax)
    hit = _NEAR_ONE_CACHE.get(key)
    if hit is not None:
        return hit
    if not word:
        out = {(0, 0): mp.mpf(1)}
        _NEAR_ONE_CACHE[key] = out
        return out
    d0, rest = word[0], word[1:]
    # expansion of H_rest, pulling leading ones out as powers of -ln d
    g = {}
    for (p, y), c in remove_leading_ones(rest).items():
        ey = _near_one_expansion(y, dps, jmax)
        cm = mp.mpf(c.numerator) / c.denominator * (-1) ** p
        for (j, k), a in ey.items():
            kk = (j, k + p)
            g[kk] = g.get(kk, mp.mpf(0)) + cm * a
    # multiply by the weight at t = 1-d: 1/t -> sum d^m; 1/(1+t) -> sum d^m/2^(m+1)
    fg = {}
    half = mp.mpf(1) / 2
    for (j, k), a in g.items():
        wcoef = mp.mpf(1) if d0 == 0 else half
        for m in range(jmax - j + 1):
            kk = (j + m, k)
            fg[kk] = fg.get(kk, mp.mpf(0)) + a * wcoef
            if d0 != 0:
                wcoef *= half
    # integrate 0..d termwise: int t^j ln^k t dt
    out = {}
    for (j, k), a in fg.items():
        base = mp.mpf(1)
        fk = mp.factorial(k)
        for r in range(k, -1, -1):
            out_key = (j + 1, r)
            val = a * (-1) ** (k - r) * fk / mp.factorial(r) \
                / mp.mpf(j + 1) ** (k - r + 1)
            out[out_key] = out.get(out_key, mp.mpf(0)) + val
    # H_word(1) minus the integral
    out = {k: -v for k, v in out.items()}
    h1 = hpl_value_at_one(word).numeric(dps + 10)
    out[(0, 0)] = out.get((0, 0), mp.mpf(0)) + h1
    _NEAR_ONE_CACHE[key] = out
    return out


def _near_one_numeric(word, x, dps):
    """H_word(x) for x near 1 via the (1-x)^j ln^k(1-x) expansion."""
    with mp.workdps(dps + 15):
        d = 1 - mp.mpf(x)
        jmax = max(40, int(3.0 * dps) + 12)
        coeffs = _near_one_expansion(tuple(word), dps, jmax)
        ld = mp.log(d)
        kmax = max(k for (_, k) in coeffs)
        lpow = [mp.mpf(1)]
        for _ in range(kmax):
            lpow.append(lpow[-1] * ld)
        total = mp.mpf(0)
        for (j, k), a in sorted(coeffs.items()):
            total += a * d ** j * lpow[k]
        return +total


def hpl_eval_numeric(word, x, dps=30):
    """Numeric value of H_word(x) for 0 < x < 1, accurate to ~dps digits."""
    w = check_hpl_word(word)
    if not (0 < x < 1):
        raise ValueError("x must be in (0,1)")
    if not w:
        return mp.mpf(1)
    with mp.workdps(dps + 15):
        xm = mp.mpf(x)
        logx = mp.log(xm)
        log1mx = -mp.log(1 - xm)
        total = mp.mpf(0)
        near_one = x > mp.mpf("0.55")
        if near_one:
            parts = extract_singularities(w)
        else:
            parts = {
                (0, p0, u): c
                for (p0, u), c in remove_trailing_zeros(w).items()
            }
        for (p1, p0, u), c in parts.items():
            factor = (
                mp.mpf(c.numerator) / c.denominator
                * log1mx ** p1
                * logx ** p0
            )
            if u:
                if near_one:
                    factor *= _near_one_numeric(u, xm, dps + 5)
                else:
                    factor *= _series_numeric(h_to_series(u), xm, dps + 5)
            total += factor
        return +total
