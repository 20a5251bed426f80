"""Core types for the nested-sum algebra.

Index vectors, the expanded {-1,0,1} digit notation, exact rational
functions of the summation argument, symbolic constants, sum factors
(plain nested sums, strict-nesting sums, geometrically weighted sums,
shifted/scaled/differentiated arguments) and exact evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import mpmath


class UnsupportedConstantError(Exception):
    """A value requires a constant outside the shipped basis."""


class DivergenceError(Exception):
    """A divergent piece survived where a finite value is required."""


# ----------------------------------------------------------------- indices


def check_index_vector(a):
    a = tuple(int(x) for x in a)
    if any(x == 0 for x in a):
        raise ValueError("index entries must be nonzero integers: %r" % (a,))
    return a


def weight(a):
    return sum(abs(x) for x in a)


def depth(a):
    return len(a)


def expand_notation(a):
    """Contracted index vector -> digit string over {-1,0,1}.

    Each entry contributes |a_j|-1 zeros followed by sign(a_j).
    """
    a = check_index_vector(a)
    out = []
    for x in a:
        out.extend([0] * (abs(x) - 1))
        out.append(1 if x > 0 else -1)
    return tuple(out)


def contract_notation(d):
    """Inverse of expand_notation.  Rejects trailing zeros."""
    d = tuple(int(x) for x in d)
    if not all(x in (-1, 0, 1) for x in d):
        raise ValueError("digits must lie in {-1,0,1}: %r" % (d,))
    if d and d[-1] == 0:
        raise ValueError("trailing zero has no contracted form: %r" % (d,))
    out = []
    run = 0
    for x in d:
        if x == 0:
            run += 1
        else:
            out.append(x * (run + 1))
            run = 0
    return tuple(out)


def count_sums(w):
    """Number of distinct sums of weight w (all depths, both signs)."""
    if w < 1:
        raise ValueError("weight must be >= 1")
    return 2 * 3 ** (w - 1)


def index_vectors_of_weight(w):
    """All index vectors of weight exactly w, lexicographically sorted."""
    vecs = []

    def rec(prefix, rem):
        if rem == 0:
            vecs.append(tuple(prefix))
            return
        for mag in range(1, rem + 1):
            for s in (1, -1):
                prefix.append(s * mag)
                rec(prefix, rem - mag)
                prefix.pop()

    rec([], w)
    return sorted(vecs)


# --------------------------------------------------------------- constants

# sigma1 is the formal divergent piece S_1(infinity); it must cancel in any
# finite result.  u6 is the single weight-6 value that has no representation
# in the shipped basis; it may appear in intermediates but not in output.
SYMBOLS = ("sigma1", "ln2", "z2", "z3", "z5", "li4half", "li5half", "s6", "u6")
SYM_INDEX = {s: i for i, s in enumerate(SYMBOLS)}
SYMBOL_WEIGHT = {
    "sigma1": 1, "ln2": 1, "z2": 2, "z3": 3, "z5": 5,
    "li4half": 4, "li5half": 5, "s6": 6, "u6": 6,
}
_NSYM = len(SYMBOLS)
UNIT_MONO = (0,) * _NSYM


def _mono_mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def mono_weight(mono):
    return sum(e * SYMBOL_WEIGHT[s] for e, s in zip(mono, SYMBOLS))


class ConstExpr:
    """Polynomial with rational coefficients in the symbolic constants."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    t[mono] = t.get(mono, Fraction(0)) + c
                    if not t[mono]:
                        del t[mono]
        self.terms = t

    @staticmethod
    def zero():
        return ConstExpr()

    @staticmethod
    def one():
        return ConstExpr.rational(1)

    @staticmethod
    def rational(c):
        c = Fraction(c)
        return ConstExpr({UNIT_MONO: c} if c else {})

    @staticmethod
    def symbol(name, power=1):
        mono = [0] * _NSYM
        mono[SYM_INDEX[name]] = power
        return ConstExpr({tuple(mono): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ConstExpr.rational(other)
        if not isinstance(other, ConstExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ConstExpr.rational(other)
        if not isinstance(other, ConstExpr):
            return NotImplemented
        t = dict(self.terms)
        for mono, c in other.terms.items():
            v = t.get(mono, Fraction(0)) + c
            if v:
                t[mono] = v
            else:
                t.pop(mono, None)
        out = ConstExpr()
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self):
        out = ConstExpr()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ConstExpr.rational(other)
        if not isinstance(other, ConstExpr):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            out = ConstExpr()
            if other:
                out.terms = {m: c * other for m, c in self.terms.items()}
            return out
        if not isinstance(other, ConstExpr):
            return NotImplemented
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = t.get(m, Fraction(0)) + c1 * c2
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        out = ConstExpr()
        out.terms = t
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a constant expression")
        out = ConstExpr.one()
        for _ in range(k):
            out = out * self
        return out

    def sigma1_degree(self):
        i = SYM_INDEX["sigma1"]
        return max((m[i] for m in self.terms), default=0)

    def coefficient_of_sigma1(self, k):
        """Coefficient polynomial of sigma1^k."""
        i = SYM_INDEX["sigma1"]
        t = {}
        for m, c in self.terms.items():
            if m[i] == k:
                mm = list(m)
                mm[i] = 0
                t[tuple(mm)] = c
        return ConstExpr(t)

    def rational_part(self):
        return self.terms.get(UNIT_MONO, Fraction(0))

    def is_rational(self):
        return all(m == UNIT_MONO for m in self.terms)

    def numeric(self, dps=50):
        """mpmath value; errors on sigma1 or the off-basis marker."""
        if self.sigma1_degree() > 0:
            raise DivergenceError("sigma1 has no numeric value")
        iu = SYM_INDEX["u6"]
        if any(m[iu] for m in self.terms):
            raise UnsupportedConstantError(
                "value involves a weight-6 constant outside the basis")
        with mpmath.workdps(dps + 10):
            vals = {}
            acc = mpmath.mpf(0)
            for m, c in self.terms.items():
                term = mpmath.mpf(c.numerator) / c.denominator
                for e, s in zip(m, SYMBOLS):
                    if e:
                        if s not in vals:
                            vals[s] = _symbol_value(s)
                        term *= vals[s] ** e
                acc += term
            return +acc

    def __repr__(self):
        if not self.terms:
            return "ConstExpr(0)"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            syms = "*".join(
                "%s^%d" % (s, e) if e > 1 else s
                for e, s in zip(m, SYMBOLS) if e)
            parts.append("%s%s%s" % (c, "*" if syms else "", syms))
        return "ConstExpr(%s)" % " + ".join(parts)


def _symbol_value(name):
    if name == "ln2":
        return mpmath.ln(2)
    if name == "z2":
        return mpmath.zeta(2)
    if name == "z3":
        return mpmath.zeta(3)
    if name == "z5":
        return mpmath.zeta(5)
    if name == "li4half":
        return mpmath.polylog(4, mpmath.mpf(1) / 2)
    if name == "li5half":
        return mpmath.polylog(5, mpmath.mpf(1) / 2)
    if name == "s6":
        from . import _infinity_table
        return mpmath.mpf(_infinity_table.S6_NUMERIC)
    raise UnsupportedConstantError(name)


# ------------------------------------------------------- rational functions


def _trimmed(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class Poly:
    """Dense univariate polynomial over Fraction.  c[i] is the t^i coefficient."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        self.c = _trimmed(Fraction(x) for x in coeffs)

    @staticmethod
    def const(v):
        return Poly((Fraction(v),))

    @staticmethod
    def var():
        return Poly((0, 1))

    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def is_constant(self):
        return len(self.c) <= 1

    def leading(self):
        return self.c[-1] if self.c else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        n = max(len(self.c), len(other.c))
        a = list(self.c) + [Fraction(0)] * (n - len(self.c))
        for i, x in enumerate(other.c):
            a[i] += x
        return Poly(a)

    def __neg__(self):
        return Poly(tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(x * other for x in self.c))
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.c) - len(other.c) + 1)
        r = list(self.c)
        dlead = other.leading()
        while len(r) >= len(other.c) and any(r):
            while r and not r[-1]:
                r.pop()
            if len(r) < len(other.c):
                break
            k = len(r) - len(other.c)
            f = r[-1] / dlead
            q[k] = f
            for i, x in enumerate(other.c):
                r[i + k] -= f * x
        return Poly(q), Poly(r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        if self.is_zero():
            return self
        l = self.leading()
        return Poly(tuple(x / l for x in self.c))

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def eval(self, v):
        acc = Fraction(0)
        for x in reversed(self.c):
            acc = acc * v + x
        return acc

    def shift(self, h):
        """Compose with t -> t + h."""
        h = Fraction(h)
        acc = Poly()
        for x in reversed(self.c):
            acc = acc * Poly((h, 1)) + Poly.const(x)
        return acc

    def scale_arg(self, s):
        """Compose with t -> s*t."""
        s = Fraction(s)
        return Poly(tuple(x * s ** i for i, x in enumerate(self.c)))

    def integer_roots(self):
        """Integer roots with multiplicities, as a dict root -> mult."""
        roots = {}
        if self.is_zero():
            return roots
        from math import gcd as igcd
        den = 1
        for x in self.c:
            den = den * x.denominator // igcd(den, x.denominator)
        ip = [int(x * den) for x in self.c]
        while len(ip) > 1 and ip[0] == 0:
            roots[0] = roots.get(0, 0) + 1
            ip = ip[1:]
        if len(ip) <= 1:
            return roots
        const = ip[0]
        cands = set()
        for d in range(1, abs(const) + 1):
            if abs(const) % d == 0:
                cands.update((d, -d))
        for r in sorted(cands):
            while len(ip) > 1:
                # synthetic division by (t - r); remainder is p(r)
                q = [0] * (len(ip) - 1)
                carry = ip[-1]
                for i in range(len(ip) - 2, -1, -1):
                    q[i] = carry
                    carry = ip[i] + r * carry
                if carry != 0:
                    break
                ip = q
                roots[r] = roots.get(r, 0) + 1
        return roots

    def __repr__(self):
        return "Poly(%r)" % (self.c,)


class RatFunc:
    """Reduced rational function num/den over Fraction, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
        elif isinstance(den, (int, Fraction)):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = num.gcd(den)
        if g.degree() > 0:
            num, den = num // g, den // g
        l = den.leading()
        self.num = Poly(tuple(x / l for x in num.c))
        self.den = den.monic()

    @staticmethod
    def const(v):
        return RatFunc(Poly.const(v))

    @staticmethod
    def var():
        return RatFunc(Poly.var())

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant: %r" % (self,))
        return self.num.leading() if not self.num.is_zero() else Fraction(0)

    def __eq__(self, other):
        return (isinstance(other, RatFunc)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if other.is_zero():
            raise ZeroDivisionError
        return RatFunc(self.num * other.den, self.den * other.num)

    def eval(self, v):
        v = Fraction(v)
        d = self.den.eval(v)
        if d == 0:
            raise ZeroDivisionError("pole of rational function at %s" % v)
        return self.num.eval(v) / d

    def shift(self, h):
        return RatFunc(self.num.shift(h), self.den.shift(h))

    def scale_arg(self, s):
        return RatFunc(self.num.scale_arg(s), self.den.scale_arg(s))

    def __repr__(self):
        return "RatFunc(%r, %r)" % (self.num.c, self.den.c)


RAT_ONE = RatFunc.const(1)


# -------------------------------------------------------------- sum factors


class SumFactor(NamedTuple):
    """One nested-sum factor.

    kind   : "S" (non-strict nesting) or "Z" (strict nesting)
    indices: nonzero integers, sign = alternation
    xs     : per-index geometric weights, or None for a plain sum
    scale  : argument multiplier (1, 2, or 1/2)
    shift  : integer added to the argument
    deriv  : order of d/dn applied to the whole factor
    """
    kind: str
    indices: tuple
    xs: tuple = None
    scale: Fraction = Fraction(1)
    shift: int = 0
    deriv: int = 0

    @property
    def weight(self):
        return weight(self.indices)

    @property
    def depth(self):
        return len(self.indices)

    def sort_key(self):
        xs = self.xs if self.xs is not None else ()
        return (self.kind, self.deriv, self.scale, len(self.indices),
                self.weight, self.indices, xs, self.shift)


def S(*indices, xs=None, scale=Fraction(1), shift=0, deriv=0):
    return SumFactor("S", check_index_vector(indices),
                     tuple(Fraction(x) for x in xs) if xs is not None else None,
                     Fraction(scale), shift, deriv)


def Z(*indices, xs=None, scale=Fraction(1), shift=0, deriv=0):
    return SumFactor("Z", check_index_vector(indices),
                     tuple(Fraction(x) for x in xs) if xs is not None else None,
                     Fraction(scale), shift, deriv)


def _check_factor(f):
    if f.kind not in ("S", "Z"):
        raise ValueError("unknown sum kind %r" % (f.kind,))
    check_index_vector(f.indices)
    if f.xs is not None:
        if len(f.xs) != len(f.indices):
            raise ValueError("weight vector length mismatch")
        if any(x == 0 for x in f.xs):
            raise ValueError("zero geometric weight")
    if f.scale not in (Fraction(1), Fraction(2), Fraction(1, 2)):
        raise ValueError("argument scale must be 1, 2, or 1/2")
    return f


# ------------------------------------------------------------ sum evaluation


def evaluate_sum(f, n):
    """Exact value of a single factor at integer n.  Fraction result."""
    _check_factor(f)
    if f.deriv:
        raise ValueError("derivative factors have no direct exact value")
    m = Fraction(n) * f.scale + f.shift
    if m.denominator != 1:
        raise ValueError("argument %s*%s+%s is not an integer"
                         % (f.scale, n, f.shift))
    m = int(m)
    xs = f.xs if f.xs is not None else (Fraction(1),) * len(f.indices)
    if f.kind == "S":
        return _eval_S(f.indices, xs, m)
    return _eval_Z(f.indices, xs, m)


def _eval_S(indices, xs, m, _memo=None):
    if not indices:
        return Fraction(1) if m > 0 else Fraction(0)
    if m <= 0:
        return Fraction(0)
    memo = {} if _memo is None else _memo
    key = (len(indices), m)
    if key in memo:
        return memo[key]
    a, x = indices[0], xs[0]
    s = 1 if a > 0 else -1
    acc = Fraction(0)
    base = Fraction(1)
    for i in range(1, m + 1):
        base = base * x * s
        inner = (_eval_S(indices[1:], xs[1:], i, memo)
                 if len(indices) > 1 else Fraction(1))
        acc += base / Fraction(i) ** abs(a) * inner
    memo[key] = acc
    return acc


def _eval_Z(indices, xs, m, _memo=None):
    if not indices:
        return Fraction(1) if m >= 0 else Fraction(0)
    if m < len(indices):
        return Fraction(0)
    memo = {} if _memo is None else _memo
    key = (len(indices), m)
    if key in memo:
        return memo[key]
    a, x = indices[0], xs[0]
    s = 1 if a > 0 else -1
    acc = Fraction(0)
    base = Fraction(1)
    for i in range(1, m + 1):
        base = base * x * s
        inner = (_eval_Z(indices[1:], xs[1:], i - 1, memo)
                 if len(indices) > 1 else Fraction(1))
        acc += base / Fraction(i) ** abs(a) * inner
    memo[key] = acc
    return acc


# -------------------------------------------------------------- expressions


class Monomial(NamedTuple):
    cmono: tuple      # exponent vector over SYMBOLS
    rat: RatFunc      # rational function of the argument
    alt: bool         # carries a global (-1)^n
    factors: tuple    # sorted SumFactors


class SumExpr:
    """Linear combination of monomials; the free polynomial algebra in
    sum factors with ConstExpr * RatFunc coefficients, kept canonical."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: dict[(cmono, alt, factors)] -> RatFunc
        self.terms = {}
        if terms:
            for k, r in terms.items():
                if not r.is_zero():
                    self._add_term(k, r)

    def _add_term(self, key, rat):
        cur = self.terms.get(key)
        v = rat if cur is None else cur + rat
        if v.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = v

    @staticmethod
    def zero():
        return SumExpr()

    @staticmethod
    def from_const(c, alt=False):
        if isinstance(c, (int, Fraction)):
            c = ConstExpr.rational(c)
        e = SumExpr()
        for mono, q in c.terms.items():
            e._add_term((mono, alt, ()), RatFunc.const(q))
        return e

    @staticmethod
    def from_factor(f, coeff=None, alt=False):
        _check_factor(f)
        e = SumExpr()
        if coeff is None:
            e._add_term((UNIT_MONO, alt, (f,)), RAT_ONE)
            return e
        if isinstance(coeff, (int, Fraction)):
            coeff = RatFunc.const(coeff)
        if isinstance(coeff, RatFunc):
            e._add_term((UNIT_MONO, alt, (f,)), coeff)
            return e
        for mono, q in coeff.terms.items():
            e._add_term((mono, alt, (f,)), RatFunc.const(q))
        return e

    @staticmethod
    def from_rat(rat, alt=False):
        if isinstance(rat, (int, Fraction)):
            rat = RatFunc.const(rat)
        e = SumExpr()
        e._add_term((UNIT_MONO, alt, ()), rat)
        return e

    def monomials(self):
        out = []
        for (cmono, alt, factors) in sorted(
                self.terms,
                key=lambda k: (k[1], tuple(f.sort_key() for f in k[2]), k[0])):
            out.append(Monomial(cmono, self.terms[(cmono, alt, factors)],
                                alt, factors))
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, SumExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ConstExpr)):
            other = SumExpr.from_const(other)
        if not isinstance(other, SumExpr):
            return NotImplemented
        out = SumExpr()
        out.terms = dict(self.terms)
        for k, r in other.terms.items():
            out._add_term(k, r)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SumExpr()
        out.terms = {k: -r for k, r in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ConstExpr)):
            other = SumExpr.from_const(other)
        if not isinstance(other, SumExpr):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SumExpr.from_rat(RatFunc.const(other))
        elif isinstance(other, RatFunc):
            other = SumExpr.from_rat(other)
        elif isinstance(other, ConstExpr):
            other = SumExpr.from_const(other)
        if not isinstance(other, SumExpr):
            return NotImplemented
        out = SumExpr()
        for (m1, a1, f1), r1 in self.terms.items():
            for (m2, a2, f2), r2 in other.terms.items():
                key = (_mono_mul(m1, m2), a1 != a2,
                       tuple(sorted(f1 + f2, key=lambda f: f.sort_key())))
                out._add_term(key, r1 * r2)
        return out

    __rmul__ = __mul__

    def map_factors(self, fn):
        """Rebuild with factor tuples mapped through fn (returns SumExpr)."""
        out = SumExpr()
        for (cmono, alt, factors), r in self.terms.items():
            piece = SumExpr()
            piece._add_term((cmono, alt, ()), r)
            for f in factors:
                piece = piece * fn(f)
            out = out + piece
        return out

    def constant_part(self):
        """Terms with no sum factors and constant rational part, as ConstExpr."""
        t = {}
        for (cmono, alt, factors), r in self.terms.items():
            if not factors and not alt and r.is_constant():
                t[cmono] = t.get(cmono, Fraction(0)) + r.constant_value()
        return ConstExpr(t)

    def max_weight(self):
        w = 0
        for (cmono, alt, factors) in self.terms:
            w = max(w, mono_weight(cmono) + sum(f.weight for f in factors))
        return w

    def __repr__(self):
        return "SumExpr(%d terms)" % len(self.terms)


def normalize(e):
    """Re-canonicalize (drop zero coefficients, merge duplicates)."""
    out = SumExpr()
    for k, r in e.terms.items():
        out._add_term(k, r)
    return out


def evaluate_expr(e, n, numeric=False, dps=50, diff_resolver=None):
    """Evaluate a SumExpr at integer n.

    Exact mode needs rational coefficients (ConstExpr monomials beyond the
    unit raise).  Numeric mode substitutes the constant basis at dps digits.
    Factors with deriv > 0 need a diff_resolver(factor) -> SumExpr.
    """
    if numeric:
        with mpmath.workdps(dps + 10):
            acc = mpmath.mpf(0)
            for (cmono, alt, factors), r in e.terms.items():
                c = ConstExpr({cmono: Fraction(1)}).numeric(dps)
                rv = r.eval(n)
                term = c * mpmath.mpf(rv.numerator) / rv.denominator
                if alt and n % 2:
                    term = -term
                for f in factors:
                    term *= _factor_value(f, n, True, dps, diff_resolver)
                acc += term
            return +acc
    acc = Fraction(0)
    for (cmono, alt, factors), r in e.terms.items():
        if cmono != UNIT_MONO:
            raise ValueError("exact evaluation with symbolic constants")
        term = r.eval(n)
        if alt and n % 2:
            term = -term
        for f in factors:
            term *= _factor_value(f, n, False, dps, diff_resolver)
        acc += term
    return acc


def _factor_value(f, n, numeric, dps, diff_resolver):
    if f.deriv:
        if diff_resolver is None:
            raise ValueError("derivative factor %r needs a resolver" % (f,))
        closed = diff_resolver(f)
        return evaluate_expr(closed, n, numeric=numeric, dps=dps,
                             diff_resolver=diff_resolver)
    v = evaluate_sum(f, n)
    if numeric:
        return mpmath.mpf(v.numerator) / v.denominator
    return v
