"""Lyndon-word combinatorics.

Words are tuples of letters.  Letters may be any hashable values; an
optional ``key`` function fixes the letter order (default: natural
ordering).  Tuple comparison of key-mapped letters realizes the
lexicographic order in which a proper prefix precedes the longer word.

For the signed harmonic alphabet use :func:`harmonic_letter_key`, which
orders -1 < 1 < -2 < 2 < -3 < 3 < ...
"""

from __future__ import annotations

from fractions import Fraction
from itertools import groupby
from math import factorial, gcd

from .algebra import shuffle


def harmonic_letter_key(a):
    return (abs(a), a > 0)


def _keyed(word, key):
    if key is None:
        return tuple(word)
    return tuple(key(a) for a in word)


def is_lyndon(word, key=None):
    """True iff the word is strictly smaller than all its proper suffixes."""
    w = tuple(word)
    if not w:
        raise ValueError("empty word")
    kw = _keyed(w, key)
    return all(kw < kw[i:] for i in range(1, len(kw)))


def lyndon_words(letters, maxlen, key=None):
    """All Lyndon words over ``letters`` of length <= maxlen, in lexicographic
    order (Duval's generation)."""
    if maxlen < 1:
        raise ValueError("maxlen must be >= 1")
    alpha = sorted(set(letters), key=key)
    k = len(alpha)
    out = []
    if k == 0:
        return out
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        out.append(tuple(alpha[i] for i in w))
        while len(w) < maxlen:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n):
    if n < 1:
        raise ValueError("mobius needs a positive integer")
    if n == 1:
        return 1
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def witt1(q, n):
    """Number of Lyndon words of length n over q letters."""
    total = sum(mobius(d) * q ** (n // d) for d in _divisors(n))
    assert total % n == 0
    return total // n


def witt2(multiplicities):
    """Number of Lyndon words whose letter multiset has the given
    multiplicities."""
    mults = list(multiplicities)
    if not mults or any(m < 1 for m in mults):
        raise ValueError("multiplicities must be positive integers")
    n = sum(mults)
    g = 0
    for m in mults:
        g = gcd(g, m)
    total = 0
    for d in _divisors(g):
        term = factorial(n // d)
        for m in mults:
            term //= factorial(m // d)
        total += mobius(d) * term
    assert total % n == 0
    return total // n


def radford_factorize(word, key=None):
    """Chen-Fox-Lyndon factorization, grouped as [(lyndon, multiplicity), ...]
    with strictly decreasing factors."""
    w = tuple(word)
    if not w:
        raise ValueError("empty word")
    kw = _keyed(w, key)
    factors = []
    i, n = 0, len(w)
    while i < n:
        j, k = i + 1, i
        while j < n and kw[k] <= kw[j]:
            k = i if kw[k] < kw[j] else k + 1
            j += 1
        while i <= k:
            factors.append(w[i:i + j - k])
            i += j - k
    return [(f, sum(1 for _ in grp)) for f, grp in groupby(factors)]


def shuffle_poly(p, q):
    """Shuffle product of two word polynomials (dicts word -> coefficient)."""
    out = {}
    for u, cu in p.items():
        for v, cv in q.items():
            for w, c in shuffle(u, v).items():
                out[w] = out.get(w, 0) + cu * cv * c
    return {w: c for w, c in out.items() if c}


def expand_lyndon_monomial(factors):
    """Expand a commutative monomial [(word, power), ...] into the
    non-commutative shuffle polynomial it denotes (no normalization)."""
    poly = {(): 1}
    for w, m in factors:
        for _ in range(m):
            poly = shuffle_poly(poly, {tuple(w): 1})
    return poly


def lyndon_decompose(word, key=None):
    """Write a word as a polynomial in Lyndon words under the shuffle
    product.

    Returns a dict mapping commutative monomials, encoded as tuples of
    (lyndon_word, power) pairs in decreasing word order, to Fraction
    coefficients.  Expanding each monomial and summing reproduces the
    input word exactly.
    """
    pending = {tuple(word): Fraction(1)}
    result = {}
    while pending:
        u = max(pending, key=lambda w: _keyed(w, key))
        c = pending.pop(u)
        factors = tuple(radford_factorize(u, key))
        norm = Fraction(1)
        for _, m in factors:
            norm /= factorial(m)
        result[factors] = result.get(factors, Fraction(0)) + c * norm
        if len(factors) == 1 and factors[0][1] == 1:
            continue
        for w, cw in expand_lyndon_monomial(factors).items():
            if w == u:
                continue
            cc = pending.get(w, Fraction(0)) - c * norm * cw
            if cc:
                pending[w] = cc
            else:
                pending.pop(w, None)
    return {f: c for f, c in result.items() if c}


def quasi_shuffle(u, v, wedge, sign=1):
    """Quasi-shuffle product of two words: the wedge merges the two head
    letters in the extra term, which carries ``sign`` (+1 for strict
    nesting, -1 for the non-strict harmonic product)."""
    u, v = tuple(u), tuple(v)
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}

    def add(poly, head, c):
        for w, cw in poly.items():
            key_ = (head,) + w
            out[key_] = out.get(key_, 0) + c * cw

    add(quasi_shuffle(u[1:], v, wedge, sign), u[0], 1)
    add(quasi_shuffle(u, v[1:], wedge, sign), v[0], 1)
    add(quasi_shuffle(u[1:], v[1:], wedge, sign), wedge(u[0], v[0]), sign)
    return {w: c for w, c in out.items() if c}


def quasi_shuffle_poly(p, q, wedge, sign=1):
    out = {}
    for u, cu in p.items():
        for v, cv in q.items():
            for w, c in quasi_shuffle(u, v, wedge, sign).items():
                out[w] = out.get(w, 0) + cu * cv * c
    return {w: c for w, c in out.items() if c}


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def _block_action(word, comp, wedge):
    letters = []
    pos = 0
    for size in comp:
        block = word[pos:pos + size]
        merged = block[0]
        for a in block[1:]:
            merged = wedge(merged, a)
        letters.append(merged)
        pos += size
    return tuple(letters)


def hoffman_phi(word, wedge):
    """Hoffman's exponential-type map: an algebra isomorphism from the
    shuffle algebra onto the quasi-shuffle algebra built from ``wedge``."""
    w = tuple(word)
    out = {}
    for comp in _compositions(len(w)):
        coeff = Fraction((-1) ** (len(w) - len(comp)))
        for size in comp:
            coeff /= factorial(size)
        merged = _block_action(w, comp, wedge)
        out[merged] = out.get(merged, Fraction(0)) + coeff
    return {u: c for u, c in out.items() if c}


def hoffman_psi(word, wedge):
    """Inverse of :func:`hoffman_phi`."""
    w = tuple(word)
    out = {}
    for comp in _compositions(len(w)):
        coeff = Fraction(1)
        for size in comp:
            coeff /= size
        merged = _block_action(w, comp, wedge)
        out[merged] = out.get(merged, Fraction(0)) + coeff
    return {u: c for u, c in out.items() if c}


def map_poly(poly, word_map, **kwargs):
    """Linear extension of a word-level map to a polynomial."""
    out = {}
    for w, c in poly.items():
        for u, cu in word_map(w, **kwargs).items():
            cc = out.get(u, Fraction(0)) + c * cu
            if cc:
                out[u] = cc
            else:
                out.pop(u, None)
    return out
