"""Textual expression format: S[1,2,-2,n] style sums, constants, rational
coefficients, and the alternating prefactor (-1)^n.

parse and format_expr are inverse on normalized expressions; whitespace is
insignificant.  Bracketed operator forms (H, Delta1x, Diff, Half on whole
expressions) are handled through hooks that the transform modules register,
so this module stays free of import cycles.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .kernel import (
    ConstExpr,
    RatFunc,
    SumExpr,
    SumFactor,
    SYMBOLS,
)

ONE = Fraction(1)

# atom hooks registered by other modules: name -> callable(parser) -> SumExpr
_ATOM_HOOKS = {}


def register_atom(name, fn):
    _ATOM_HOOKS[name] = fn


class ExprSyntaxError(ValueError):
    """Parse failure with the offending position."""

    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


# ------------------------------------------------------------------ printer


def _frac_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 \
        else "%d/%d" % (q.numerator, q.denominator)


def _poly_str(p):
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree(), -1, -1):
        c = p.c[i]
        if not c:
            continue
        if i == 0:
            body = _frac_str(abs(c))
        else:
            mag = abs(c)
            head = "" if mag == 1 else _frac_str(mag) + "*"
            body = head + ("n" if i == 1 else "n^%d" % i)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def _rat_str(r):
    """Rational-function coefficient, parenthesized for use as a factor."""
    num, den = r.num, r.den
    if den.is_constant():
        if num.is_constant():
            return _frac_str(num.leading() if not num.is_zero() else 0)
        return "(%s)" % _poly_str(num)
    ns = _poly_str(num) if num.is_constant() and num.leading() >= 0 \
        else "(%s)" % _poly_str(num)
    return "%s/(%s)" % (ns, _poly_str(den))


def format_argument(scale, shift):
    if scale == 1:
        base = "n"
    elif scale == 2:
        base = "2*n"
    elif scale == Fraction(1, 2):
        base = "n/2"
    else:
        raise ValueError("unsupported argument scale %r" % (scale,))
    if shift:
        base += "%+d" % shift
    return base


def format_factor(f):
    items = [str(a) for a in f.indices]
    if f.xs is not None:
        items.append("{%s}" % ",".join(_frac_str(x) for x in f.xs))
    items.append(format_argument(f.scale, f.shift))
    text = "%s[%s]" % (f.kind, ",".join(items))
    if f.deriv:
        text = "Diff[%s,n,%d]" % (text, f.deriv)
    return text


def _mono_parts(cmono, alt, factors):
    parts = []
    for i, p in enumerate(cmono):
        if p:
            parts.append(SYMBOLS[i] + ("^%d" % p if p > 1 else ""))
    if alt:
        parts.append("(-1)^n")
    i = 0
    while i < len(factors):
        j = i
        while j < len(factors) and factors[j] == factors[i]:
            j += 1
        text = format_factor(factors[i])
        parts.append(text + ("^%d" % (j - i) if j - i > 1 else ""))
        i = j
    return parts


def format_expr(e):
    """Canonical text for an expression (SumExpr, SumFactor, ConstExpr,
    or plain rational)."""
    if isinstance(e, SumFactor):
        e = SumExpr.from_factor(e)
    elif isinstance(e, (ConstExpr, int, Fraction)):
        e = SumExpr.from_const(e)
    if e.is_zero():
        return "0"
    chunks = []
    for cmono, rat, alt, factors in e.monomials():
        neg = (rat.num.leading() < 0)
        if neg:
            rat = RatFunc(-rat.num, rat.den)
        parts = _mono_parts(cmono, alt, factors)
        cs = _rat_str(rat)
        if cs != "1" or not parts:
            parts.insert(0, cs)
        body = "*".join(parts)
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


# ------------------------------------------------------------------- parser


def _as_ratfunc(e):
    """The expression as a bare rational function of n, or None."""
    if len(e.terms) != 1:
        return None
    ((cmono, alt, factors), r), = e.terms.items()
    if alt or factors or any(cmono):
        return None
    return r


def _divide(lhs, rhs, parser):
    r = _as_ratfunc(rhs)
    if r is None or r.is_zero():
        parser.fail("can only divide by a nonzero rational quantity")
    return lhs * RatFunc(r.den, r.num)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")

_CONSTANTS = set(SYMBOLS)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if not ch.isspace():
                tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, message):
        raise ExprSyntaxError(message, self.peek()[2])

    def expect(self, kind, value=None):
        t = self.next()
        if t[0] != kind or (value is not None and t[1] != value):
            raise ExprSyntaxError(
                "expected %s" % (value if value is not None else kind), t[2])
        return t

    # expression := term (('+'|'-') term)*
    def expression(self):
        e = self.term()
        while True:
            k, v, _ = self.peek()
            if k == "op" and v in "+-":
                self.next()
                t = self.term()
                e = e + t if v == "+" else e - t
            else:
                return e

    # term := power (('*'|'/'|juxtaposition) power)*
    def term(self):
        e = self.power()
        while True:
            k, v, _ = self.peek()
            if k == "op" and v in "*/":
                self.next()
                rhs = self.power()
                e = e * rhs if v == "*" else _divide(e, rhs, self)
            elif k == "name" or (k == "op" and v == "("):
                e = e * self.power()
            else:
                return e

    def power(self):
        base = self.atom()
        k, v, _ = self.peek()
        if not (k == "op" and v == "^"):
            return base
        self.next()
        k, v, pos = self.peek()
        if (k == "name" and v == "n") or (k == "op" and v == "("
                                          and self._looks_like_alt()):
            shift = self._alt_exponent()
            if base.terms != SumExpr.from_const(-1).terms:
                raise ExprSyntaxError(
                    "only (-1) may carry the exponent n", pos)
            return SumExpr.from_const(-1 if shift % 2 else 1, alt=True)
        neg = False
        if k == "op" and v == "-":
            self.next()
            neg = True
        t = self.expect("int")
        exp = t[1]
        out = SumExpr.from_const(1)
        for _ in range(exp):
            out = out * base
        if neg:
            out = _divide(SumExpr.from_const(1), out, self)
        return out

    def _looks_like_alt(self):
        # lookahead for ^(n...) so parenthesized numeric exponents still work
        j = self.i + 1
        return (self.tokens[j][0] == "name" and self.tokens[j][1] == "n")

    def _alt_exponent(self):
        k, v, _ = self.peek()
        if k == "name":
            self.expect("name", "n")
            return 0
        self.expect("op", "(")
        self.expect("name", "n")
        shift = 0
        k, v, _ = self.peek()
        if k == "op" and v in "+-":
            self.next()
            t = self.expect("int")
            shift = t[1] if v == "+" else -t[1]
        self.expect("op", ")")
        return shift

    def atom(self):
        k, v, pos = self.next()
        if k == "int":
            return SumExpr.from_rat(Fraction(v))
        if k == "op" and v == "(":
            e = self.expression()
            self.expect("op", ")")
            return e
        if k == "op" and v == "-":
            return -self.power()
        if k == "op" and v == "+":
            return self.power()
        if k == "name":
            if v == "n":
                return SumExpr.from_rat(RatFunc.var())
            if v in _CONSTANTS:
                return SumExpr.from_const(ConstExpr.symbol(v))
            if v in ("S", "Z"):
                return self._sum_atom(v)
            if v == "Diff":
                return self._diff_atom()
            hook = _ATOM_HOOKS.get(v)
            if hook is not None:
                return hook(self)
            raise ExprSyntaxError("unknown name %r" % v, pos)
        raise ExprSyntaxError("unexpected %r" % (v,), pos)

    def _signed_int(self):
        k, v, _ = self.peek()
        sign = 1
        if k == "op" and v in "+-":
            self.next()
            sign = -1 if v == "-" else 1
        t = self.expect("int")
        return sign * t[1]

    def _rational(self):
        num = self._signed_int()
        k, v, _ = self.peek()
        if k == "op" and v == "/":
            self.next()
            t = self.expect("int")
            return Fraction(num, t[1])
        return Fraction(num)

    def _sum_atom(self, kind):
        self.expect("op", "[")
        indices = []
        xs = None
        while True:
            k, v, pos = self.peek()
            if k == "op" and v == "{":
                self.next()
                xs = [self._rational()]
                while self.peek()[:2] == ("op", ","):
                    self.next()
                    xs.append(self._rational())
                self.expect("op", "}")
                self.expect("op", ",")
                scale, shift = self._argument()
                break
            if (k in ("int",) or (k == "op" and v in "+-")) and not \
                    self._argument_ahead():
                indices.append(self._signed_int())
                self.expect("op", ",")
                continue
            scale, shift = self._argument()
            break
        self.expect("op", "]")
        try:
            f = SumFactor(kind, tuple(indices),
                          tuple(xs) if xs is not None else None,
                          Fraction(scale), shift, 0)
            return SumExpr.from_factor(f)
        except ValueError as exc:
            raise ExprSyntaxError(str(exc), pos)

    def _argument_ahead(self):
        # an integer starts the argument only in forms like "2*n"
        j = self.i
        if self.tokens[j][0] == "op" and self.tokens[j][1] in "+-":
            j += 1
        if self.tokens[j][0] != "int":
            return False
        return self.tokens[j + 1][:2] == ("op", "*")

    def _argument(self):
        scale = Fraction(1)
        k, v, _ = self.peek()
        if k == "int":
            self.next()
            self.expect("op", "*")
            scale = Fraction(v)
        self.expect("name", "n")
        k, v, _ = self.peek()
        if k == "op" and v == "/":
            self.next()
            t = self.expect("int")
            scale /= t[1]
        shift = 0
        k, v, _ = self.peek()
        if k == "op" and v in "+-":
            self.next()
            t = self.expect("int")
            shift = t[1] if v == "+" else -t[1]
        return scale, shift

    def _diff_atom(self):
        self.expect("op", "[")
        inner = self.expression()
        self.expect("op", ",")
        self.expect("name", "n")
        self.expect("op", ",")
        t = self.expect("int")
        order = t[1]
        self.expect("op", "]")
        if len(inner.terms) == 1:
            (key, r), = inner.terms.items()
            cmono, alt, factors = key
            if (len(factors) == 1 and not alt and r.is_constant()
                    and r.constant_value() == 1 and not any(cmono)):
                f = factors[0]
                return SumExpr.from_factor(SumFactor(
                    f.kind, f.indices, f.xs, f.scale, f.shift,
                    f.deriv + order))
        hook = _ATOM_HOOKS.get("__diff__")
        if hook is None:
            self.fail("Diff of a compound expression is not supported here")
        return hook(inner, order)


def parse_expr(text):
    """Parse the textual expression format into a SumExpr."""
    p = Parser(text)
    e = p.expression()
    if p.peek()[0] != "end":
        p.fail("trailing input")
    return e
