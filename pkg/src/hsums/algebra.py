"""Quasi-shuffle products of nested sums, the word shuffle, and
conversions between non-strict and strict nesting.

Internally a sum index vector is handled as a word of letters (m, x)
with m a positive exponent and x the geometric weight; the sign of a
plain index is folded into x.  The wedge of two letters multiplies
weights and adds exponents.
"""

from __future__ import annotations

from fractions import Fraction

from .kernel import RAT_ONE, SumExpr, SumFactor, UNIT_MONO, check_index_vector

ONE = Fraction(1)


# ------------------------------------------------------------- letter words


def to_letters(indices, xs=None):
    indices = check_index_vector(indices)
    if xs is None:
        xs = (ONE,) * len(indices)
    return tuple((abs(a), Fraction(x) * (1 if a > 0 else -1))
                 for a, x in zip(indices, xs))


def from_letters(letters):
    """Back to (indices, xs); xs is None when all weights are +-1."""
    if all(x in (1, -1) for _, x in letters):
        return tuple(m if x > 0 else -m for m, x in letters), None
    return tuple(m for m, _ in letters), tuple(x for _, x in letters)


def _wedge(a, b):
    return (a[0] + b[0], a[1] * b[1])


def wedge_index(a, b):
    """Contracted-index wedge: sign(a)sign(b)(|a|+|b|)."""
    s = (1 if a > 0 else -1) * (1 if b > 0 else -1)
    return s * (abs(a) + abs(b))


def _add(d, w, c):
    v = d.get(w, 0) + c
    if v:
        d[w] = v
    else:
        d.pop(w, None)


def stuffle(u, v, wedge_sign):
    """Quasi-shuffle of letter words; wedge_sign -1 for non-strict sums,
    +1 for strict sums.  Returns {word: integer coefficient}."""
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}
    a, b = u[0], v[0]
    for w, c in stuffle(u[1:], v, wedge_sign).items():
        _add(out, (a,) + w, c)
    for w, c in stuffle(u, v[1:], wedge_sign).items():
        _add(out, (b,) + w, c)
    ab = _wedge(a, b)
    for w, c in stuffle(u[1:], v[1:], wedge_sign).items():
        _add(out, (ab,) + w, wedge_sign * c)
    return out


def shuffle(u, v):
    """Plain shuffle of two words.  Returns {word: coefficient}."""
    if not u:
        return {tuple(v): 1}
    if not v:
        return {tuple(u): 1}
    out = {}
    for w, c in shuffle(u[1:], v).items():
        _add(out, (u[0],) + w, c)
    for w, c in shuffle(u, v[1:]).items():
        _add(out, (v[0],) + w, c)
    return out


# ---------------------------------------------------------------- products


def product_words(a1, x1, a2, x2, kind):
    """Expand the product of two same-kind sums over a common argument.
    Returns {(indices, xs): coeff}."""
    sign = 1 if kind == "Z" else -1
    out = {}
    for w, c in stuffle(to_letters(a1, x1), to_letters(a2, x2), sign).items():
        _add(out, from_letters(w), c)
    return out


def product_factors(f, g):
    """Product of two sum factors as a linear SumExpr, when expandable."""
    if (f.kind != g.kind or f.scale != g.scale or f.shift != g.shift
            or f.deriv or g.deriv):
        return SumExpr.from_factor(f) * SumExpr.from_factor(g)
    if not f.indices:
        return SumExpr.from_factor(g)
    if not g.indices:
        return SumExpr.from_factor(f)
    out = SumExpr.zero()
    for (ind, xs), c in product_words(f.indices, f.xs,
                                      g.indices, g.xs, f.kind).items():
        out = out + SumExpr.from_factor(
            SumFactor(f.kind, ind, xs, f.scale, f.shift, 0), coeff=c)
    return out


def _compatible(f, g):
    return (f.kind == g.kind and f.scale == g.scale and f.shift == g.shift
            and not f.deriv and not g.deriv)


def linear_expand(e):
    """Rewrite all expandable products of sum factors as linear
    combinations of single sums."""
    out = SumExpr.zero()
    for (cmono, alt, factors), r in e.terms.items():
        factors = [f for f in factors if f.indices]
        while True:
            pair = None
            for i in range(len(factors)):
                for j in range(i + 1, len(factors)):
                    if _compatible(factors[i], factors[j]):
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                break
            i, j = pair
            f, g = factors[i], factors[j]
            rest = [x for k, x in enumerate(factors) if k not in (i, j)]
            expanded = product_factors(f, g)
            # push the remaining factors back in and restart
            piece = expanded
            for x in rest:
                piece = piece * SumExpr.from_factor(x)
            base = SumExpr()
            base._add_term((cmono, alt, ()), r)
            out = out + base * piece
            factors = None
            break
        if factors is not None:
            base = SumExpr()
            base._add_term((cmono, alt, tuple(
                sorted(factors, key=lambda f: f.sort_key()))), r)
            out = out + base
    # single factors may still hide products (none today), re-check fixpoint
    if any(_has_expandable(k[2]) for k in out.terms):
        return linear_expand(out)
    return out


def _has_expandable(factors):
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if _compatible(factors[i], factors[j]):
                return True
    return False


# -------------------------------------------------------------- conversions


def _nonstrict_to_strict(letters):
    """Non-strict nested sum as a +1 combination of strict ones."""

    def G(p, tail):
        if not tail:
            return {p: 1}
        a1, rest = tail[0], tail[1:]
        out = {}
        for w, c in G(p + (a1,), rest).items():
            _add(out, w, c)
        if p:
            merged = p[:-1] + (_wedge(p[-1], a1),)
            for w, c in G(merged, rest).items():
                _add(out, w, c)
        return out

    return G((), tuple(letters))


def _strict_to_nonstrict(letters):
    """Strict nested sum as a +-1 combination of non-strict ones."""

    def H(p, tail):
        if not tail:
            return {p: 1}
        if len(tail) == 1:
            return {p + tail: 1}
        a1, a2 = tail[0], tail[1]
        out = {}
        for w, c in H(p + (a1,), tail[1:]).items():
            _add(out, w, c)
        for w, c in H(p, (_wedge(a1, a2),) + tail[2:]).items():
            _add(out, w, -c)
        return out

    return H((), tuple(letters))


def s_to_z(f):
    """A non-strict sum factor as a combination of strict ones."""
    if f.kind != "S":
        raise ValueError("s_to_z expects an S factor")
    out = SumExpr.zero()
    for w, c in _nonstrict_to_strict(to_letters(f.indices, f.xs)).items():
        ind, xs = from_letters(w)
        out = out + SumExpr.from_factor(
            SumFactor("Z", ind, xs, f.scale, f.shift, f.deriv), coeff=c)
    return out


def z_to_s(f):
    """A strict sum factor as a combination of non-strict ones."""
    if f.kind != "Z":
        raise ValueError("z_to_s expects a Z factor")
    out = SumExpr.zero()
    for w, c in _strict_to_nonstrict(to_letters(f.indices, f.xs)).items():
        ind, xs = from_letters(w)
        out = out + SumExpr.from_factor(
            SumFactor("S", ind, xs, f.scale, f.shift, f.deriv), coeff=c)
    return out


def convert_expr(e, target):
    """Convert every sum factor of an expression to the target kind."""
    conv = {"S": z_to_s, "Z": s_to_z}[target]

    def fn(f):
        if f.kind == target or not f.indices:
            return SumExpr.from_factor(f)
        return conv(f)

    return e.map_factors(fn)
