"""Relations among nested sums with permuted indices.

The product of two sums with a common argument expands into sums over the
merged index multiset, so every permutation class carries a linear system
whose solution expresses most permutations through a small basis (counted
by the Witt formula).  This module derives those rules exactly over the
rationals, applies them under three reduction strategies, extracts leading
ones, and evaluates convergent expressions at infinite argument.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from pathlib import Path

from .algebra import convert_expr, from_letters, product_words, wedge_index
from .kernel import (
    ConstExpr,
    DivergenceError,
    SumExpr,
    SumFactor,
    UnsupportedConstantError,
    check_index_vector,
    index_vectors_of_weight,
    normalize,
    weight,
)
from .lyndon import harmonic_letter_key, quasi_shuffle, witt2

ONE = Fraction(1)


class UnsupportedWeightError(Exception):
    """A sum's weight exceeds what the reduction table covers."""


def _plain(f, family):
    return (f.kind == family and f.xs is None and f.scale == 1
            and f.shift == 0 and f.deriv == 0)


def _factor(indices, kind="S"):
    return SumFactor(kind, tuple(indices), None, ONE, 0, 0)


def _fname(f):
    return "%s[%s]" % (f.kind, ",".join(map(str, f.indices)))


# ----------------------------------------------------------- split identity


def shuffle_identity(split, kind="S"):
    """The product identity for one split (u, v) of an index tuple, as an
    expression equal to zero: the quasi-shuffle expansion of the two parts
    minus the product of the two sums."""
    u, v = split
    u, v = check_index_vector(u), check_index_vector(v)
    if not u or not v:
        raise ValueError("both parts of the split must be nonempty")
    out = SumExpr.zero()
    for (ind, xs), c in product_words(u, None, v, None, kind).items():
        out = out + SumExpr.from_factor(
            SumFactor(kind, ind, xs, ONE, 0, 0), coeff=c)
    return out - SumExpr.from_factor(_factor(u, kind)) \
        * SumExpr.from_factor(_factor(v, kind))


# ------------------------------------------------------- formal slot engine
#
# A rule is derived once per multiplicity pattern with abstract slots
# a1..ak; a letter is a tuple of slot ids, and a wedge merges tuples.
# Instantiation substitutes concrete indices (or index/weight pairs),
# contracting merged letters through the index wedge.


def _slot_wedge(a, b):
    return tuple(sorted(a + b))


def _distinct_perms(word):
    return sorted(set(permutations(word)))


def _splits(mset):
    """Unordered splits of a sorted multiset into two nonempty parts,
    oriented shorter part first and sorted; the resulting equation order
    pins down which presentation the echelon solver produces."""
    elems = sorted(set(mset))
    counts = [mset.count(x) for x in elems]
    out = []

    def rec(i, picked):
        if i == len(elems):
            rest = [c - p for p, c in zip(picked, counts)]
            if any(picked) and any(rest) and picked <= rest:
                a = tuple(x for x, p in zip(elems, picked) for _ in range(p))
                b = tuple(x for x, r in zip(elems, rest) for _ in range(r))
                if (len(b), b) < (len(a), a):
                    a, b = b, a
                out.append((a, b))
            return
        for p in range(counts[i] + 1):
            rec(i + 1, picked + [p])

    rec(0, [])
    out.sort(key=lambda ab: (len(ab[0]), ab[0], ab[1]))
    return out


def _pattern_equations(pattern, sign):
    """All split equations for one multiplicity pattern.

    Each row is (diag, lhs, rhs): lhs maps full-depth slot words to
    coefficients, rhs maps atoms to coefficients where an atom is
    ("p", u, v) for the product of the two part sums or ("s", w) for a
    shorter word produced by wedging.  diag is the concatenation u+v,
    the word whose head split generated the equation.
    """
    letters = []
    for slot, mult in enumerate(pattern):
        letters.extend([(slot,)] * mult)
    letters = tuple(letters)
    d = len(letters)
    rows = []
    for a, b in _splits(letters):
        pairs = set()
        for u in _distinct_perms(a):
            for v in _distinct_perms(b):
                if a == b and v < u:
                    continue
                pairs.add((u, v))
        for u, v in sorted(pairs):
            lhs = {}
            rhs = {("p", u, v): ONE}
            for w, c in quasi_shuffle(u, v, _slot_wedge, sign).items():
                if len(w) == d:
                    lhs[w] = lhs.get(w, Fraction(0)) + c
                else:
                    rhs[("s", w)] = rhs.get(("s", w), Fraction(0)) - c
            rows.append((u + v, lhs, rhs))
    return _distinct_perms(letters), rows


def _subtract(d, src, c):
    for k, v in src.items():
        nv = d.get(k, Fraction(0)) - c * v
        if nv:
            d[k] = nv
        else:
            d.pop(k, None)


def _rref(columns, rows):
    """Reduced row echelon form with symbolic right-hand sides.

    Returns {pivot column index: (lhs over column indices, rhs)} with the
    pivot coefficient normalized to one and eliminated everywhere else.
    Rows that reduce to zero are consistency identities and are dropped.
    """
    colidx = {c: i for i, c in enumerate(columns)}
    work = []
    pivots = {}
    for lhs, rhs in rows:
        row = {colidx[w]: c for w, c in lhs.items() if c}
        rr = {a: c for a, c in rhs.items() if c}
        for j, k in sorted(pivots.items()):
            c = row.get(j)
            if c:
                prow, prhs = work[k]
                _subtract(row, prow, c)
                _subtract(rr, prhs, c)
        lead = min((j for j, c in row.items() if c), default=None)
        if lead is None:
            continue
        inv = ONE / row[lead]
        row = {j: c * inv for j, c in row.items()}
        rr = {a: c * inv for a, c in rr.items()}
        for j, k in pivots.items():
            prow, prhs = work[k]
            c = prow.get(lead)
            if c:
                _subtract(prow, row, c)
                _subtract(prhs, rr, c)
        pivots[lead] = len(work)
        work.append((row, rr))
    return {lead: work[k] for lead, k in pivots.items()}


@dataclass(frozen=True)
class RelationRule:
    """One dependence: the sum with slot word ``lhs`` equals ``rhs``.

    ``rhs`` is a tuple of (factors, coefficient) pairs; a factors tuple of
    length two is a product of two sums.  Letters inside a word are slot-id
    tuples, length above one marking a wedged (merged) letter.  ``guard``
    lists slot pairs that must hold distinct values.
    """

    pattern: tuple
    family: str
    lhs: tuple
    rhs: tuple
    guard: tuple

    def instantiate(self, values):
        """Concrete (SumFactor, SumExpr) for the given slot values:
        nonzero integers for S and Z, (exponent, weight) pairs for the
        generalized family."""
        if len(values) != len(self.pattern):
            raise ValueError("expected %d slot values, got %d"
                             % (len(self.pattern), len(values)))
        if self.family in ("S", "Z"):
            vals = tuple(int(v) for v in values)
            if any(v == 0 for v in vals):
                raise ValueError("slot values must be nonzero")
            inst = functools.partial(_inst_plain, vals=vals, kind=self.family)
        else:
            vals = tuple((int(m), Fraction(x)) for m, x in values)
            if any(m < 1 or x == 0 for m, x in vals):
                raise ValueError("generalized slots need positive exponents"
                                 " and nonzero weights")
            inst = functools.partial(_inst_weighted, vals=vals)
        for i, j in self.guard:
            if vals[i] == vals[j]:
                raise ValueError("guard violated: slots a%d and a%d coincide"
                                 % (i + 1, j + 1))
        expr = SumExpr.zero()
        for factors, c in self.rhs:
            piece = SumExpr.from_const(c)
            for w in factors:
                piece = piece * SumExpr.from_factor(inst(w))
            expr = expr + piece
        return inst(self.lhs), expr

    def __str__(self):
        def letter(l):
            if len(l) == 1:
                return "a%d" % (l[0] + 1)
            return "SP(%s)" % ",".join("a%d" % (i + 1) for i in l)

        kind = "S" if self.family == "SSum" else self.family

        def word(w):
            return "%s[%s]" % (kind, ",".join(letter(l) for l in w))

        parts = []
        for factors, c in self.rhs:
            body = "*".join(word(w) for w in factors)
            parts.append("%s*%s" % (c, body) if c != 1 else body)
        return "%s = %s" % (word(self.lhs), " + ".join(parts))


def _inst_plain(word, vals, kind):
    out = []
    for letter in word:
        idx = vals[letter[0]]
        for s in letter[1:]:
            idx = wedge_index(idx, vals[s])
        out.append(idx)
    return _factor(out, kind)


def _inst_weighted(word, vals):
    letters = []
    for letter in word:
        m, x = vals[letter[0]]
        for s in letter[1:]:
            m2, x2 = vals[s]
            m, x = m + m2, x * x2
        letters.append((m, x))
    ind, xs = from_letters(tuple(letters))
    return SumFactor("S", ind, xs, ONE, 0, 0)


def _reversal_rows(rows):
    """Difference equations relating each word to its reversal.

    For every non-palindromic permutation pair the first pair of split
    equations whose difference cancels everything except the word and
    its reversal (with unit coefficients) is turned into an extra row.
    These lead the elimination so that a word swapped for its reversal
    carries only the short two-product identity, not a longer chain.
    """
    out = {}
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            diff = dict(rows[i][1])
            for w, c in rows[j][1].items():
                diff[w] = diff.get(w, Fraction(0)) - c
            diff = {w: c for w, c in diff.items() if c}
            if len(diff) != 2 or set(diff.values()) != {ONE, -ONE}:
                continue
            u, v = sorted(diff)
            if v != tuple(reversed(u)) or u in out:
                continue
            rhs = dict(rows[i][2])
            for a, c in rows[j][2].items():
                rhs[a] = rhs.get(a, Fraction(0)) - c
            out[u] = (u, diff, {a: c for a, c in rhs.items() if c})
    return [out[u] for u in sorted(out)]


@functools.lru_cache(maxsize=None)
def _solve_pattern(pattern, family, preferred):
    """Solve one pattern; returns (rules, kept slot words)."""
    sign = 1 if family == "Z" else -1
    perms, rows = _pattern_equations(pattern, sign)
    nkeep = witt2(pattern)
    if preferred is None:
        columns = list(perms)
    else:
        pref = set(preferred)
        if not pref <= set(perms) or len(pref) != nkeep:
            raise ValueError("preferred set must be %d permutations of the"
                             " pattern word" % nkeep)
        columns = [p for p in perms if p not in pref] + sorted(pref)
        rows = _reversal_rows(rows) + rows
    solved = _rref(columns, [(lhs, rhs) for _, lhs, rhs in rows])
    kept = tuple(columns[j] for j in range(len(columns)) if j not in solved)
    if preferred is not None and set(kept) != set(preferred):
        raise ValueError("preferred sums are not independent: kept %r"
                         % (kept,))
    assert len(kept) == nkeep
    guard = tuple((i, j) for i in range(len(pattern))
                  for j in range(i + 1, len(pattern)))
    rules = []
    for j in sorted(solved):
        row, rhs = solved[j]
        acc = {}
        for jj, c in row.items():
            if jj != j:
                fs = (columns[jj],)
                acc[fs] = acc.get(fs, Fraction(0)) - c
        for atom, c in rhs.items():
            fs = tuple(sorted(atom[1:])) if atom[0] == "p" else (atom[1],)
            acc[fs] = acc.get(fs, Fraction(0)) + c
        terms = tuple(sorted((fs, c) for fs, c in acc.items() if c))
        rules.append(RelationRule(pattern, family, columns[j], terms, guard))
    rules.sort(key=lambda r: r.lhs)
    return tuple(rules), kept


def derive_relations(pattern, family="S", preferred=None):
    """Dependence rules for a multiplicity pattern (one slot per distinct
    index, ``pattern[i]`` repetitions of slot i).

    The permutations left unsolved number exactly witt2(pattern); by
    default the lexicographically largest slot words stay basic, and
    ``preferred`` (a set of slot words) picks a different basis.
    """
    pattern = tuple(int(m) for m in pattern)
    if not pattern or any(m < 1 for m in pattern):
        raise ValueError("pattern must be positive multiplicities")
    if family not in ("S", "Z", "SSum"):
        raise ValueError("unknown family %r" % (family,))
    pref = None
    if preferred is not None:
        pref = frozenset(tuple(tuple(l) for l in w) for w in preferred)
    rules, _ = _solve_pattern(pattern, family, pref)
    return list(rules)


# --------------------------------------------------------- concrete classes


def class_key(indices):
    """Canonical representative of an index multiset (alphabet order
    |a| before sign, negative first)."""
    return tuple(sorted(indices, key=harmonic_letter_key))


def _class_slots(mset):
    """Slot assignment for a concrete class: slots ordered by multiplicity
    (descending), ties in alphabet order.  Returns (pattern, values)."""
    counts = {}
    for a in mset:
        counts[a] = counts.get(a, 0) + 1
    values = sorted(counts, key=lambda a: (-counts[a], harmonic_letter_key(a)))
    return tuple(counts[a] for a in values), tuple(values)


def class_relations(mset, family="S", keep=None):
    """Solve one concrete index class.

    Returns (kept, solved): the index tuples left basic, and a map from
    each dependent index tuple to its expression in kept sums, shorter
    sums of the same weight, and products of lighter sums.  ``keep``
    forces the basic set; by default the slot-order rule decides.
    """
    mset = class_key(mset)
    pattern, values = _class_slots(mset)
    preferred = None
    if keep is not None:
        slot_of = {v: i for i, v in enumerate(values)}
        preferred = frozenset(tuple((slot_of[a],) for a in kt) for kt in keep)
    rules, kept_words = _solve_pattern(pattern, family, preferred)
    kept = [_inst_plain(w, values, family).indices for w in kept_words]
    solved = {}
    for r in rules:
        lhs, rhs = r.instantiate(values)
        solved[lhs.indices] = rhs
    return kept, solved


# ----------------------------------------------------------------- tables

# Index classes whose basic representatives deviate from the slot-order
# default, per convention.  "fixed" mirrors the long-established external
# tables; "partly" mirrors the order in which a fresh table generation
# encounters the permutations.
FIXED_OVERRIDES = {
    (1, -2, 2): ((-2, 2, 1), (2, 1, -2)),
    (-1, -2, 2): ((-2, 2, -1), (2, -1, -2)),
}
PARTLY_OVERRIDES = {
    (1, -2, 2): ((-2, 1, 2), (-2, 2, 1)),
    (-1, 2, 2): ((2, 2, -1),),
    (-1, 1, -2): ((1, -2, -1), (-2, -1, 1)),
    (-1, 1, 2): ((-1, 2, 1), (2, -1, 1)),
    (-1, -2, 2): ((-1, 2, -2), (2, -1, -2)),
}


@dataclass
class RelationTable:
    """Closed reduction table: every entry maps a non-basic index vector
    to an expression containing only basic sums."""

    max_weight: int
    family: str
    convention: str
    entries: dict


def generate_table(max_weight, family="S", convention="partly"):
    """Reduction table for every index multiset of weight <= max_weight.

    Entries are closed: substituting them never exposes another entry's
    key.  Classes are processed by weight then depth so each right-hand
    side can be rewritten through already-finished entries.
    """
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    if family not in ("S", "Z"):
        raise ValueError("tables cover the S and Z families only")
    if convention not in ("fixed", "partly"):
        raise ValueError("unknown convention %r" % (convention,))
    overrides = {}
    if family == "S":
        overrides = FIXED_OVERRIDES if convention == "fixed" \
            else PARTLY_OVERRIDES
    entries = {}
    for w in range(2, max_weight + 1):
        classes = sorted(
            {class_key(v) for v in index_vectors_of_weight(w) if len(v) > 1},
            key=lambda m: (len(m), m))
        for mset in classes:
            _, solved = class_relations(mset, family, overrides.get(mset))
            for lhs, rhs in solved.items():
                entries[lhs] = _substitute(rhs, family, entries)
    return RelationTable(max_weight, family, convention, entries)


def _substitute(e, family, entries):
    def fn(f):
        if _plain(f, family):
            hit = entries.get(f.indices)
            if hit is not None:
                return hit
        return SumExpr.from_factor(f)

    return normalize(e.map_factors(fn))


def store_table(table, path):
    """Write a reduction table in the HSUMTAB v1 format: a header line,
    then one canonical-printed key/value record per line."""
    from .syntax import format_expr, format_factor
    lines = ["HSUMTAB v1 weight=%d family=%s"
             % (table.max_weight, table.family)]
    for idx in sorted(table.entries, key=lambda t: (weight(t), len(t), t)):
        key = format_factor(_factor(idx, table.family))
        lines.append("%s\t%s" % (key, format_expr(table.entries[idx])))
    Path(path).write_text("\n".join(lines) + "\n")


def load_table(path):
    """Read a table written by store_table."""
    from .syntax import parse_expr
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty table file")
    head = lines[0].split()
    if (len(head) != 4 or head[0] != "HSUMTAB" or head[1] != "v1"
            or not head[2].startswith("weight=")
            or not head[3].startswith("family=")):
        raise ValueError("not a HSUMTAB v1 header: %r" % lines[0])
    max_weight = int(head[2][len("weight="):])
    family = head[3][len("family="):]
    if family not in ("S", "Z"):
        raise ValueError("unknown family %r" % (family,))
    entries = {}
    for ln in lines[1:]:
        key, _, val = ln.partition("\t")
        kf = parse_expr(key)
        if len(kf.terms) != 1:
            raise ValueError("bad table key %r" % key)
        ((_, _, factors), _), = kf.terms.items()
        if len(factors) != 1 or not _plain(factors[0], family):
            raise ValueError("bad table key %r" % key)
        entries[factors[0].indices] = parse_expr(val)
    return RelationTable(max_weight, family, "file", entries)


# --------------------------------------------------------------- reduction


def reduce_to_basis(e, strategy="fixed", table=None, family="S"):
    """Rewrite an expression so each index class contributes at most its
    Witt count of distinct sums.

    "fixed" and "partly" substitute a closed table (generated on demand
    when none is given); "dynamic" derives relations per class, preferring
    the sums already present in the expression.
    """
    if isinstance(e, SumFactor):
        e = SumExpr.from_factor(e)
    e = normalize(e)
    if strategy == "dynamic":
        return _dynamic_reduce(e, family)
    if strategy not in ("fixed", "partly"):
        raise ValueError("unknown strategy %r" % (strategy,))
    if table is not None:
        family = table.family
    else:
        w = max((f.weight for f in _plain_factors(e, family)
                 if f.depth > 1), default=0)
        if w < 2:
            return e
        table = generate_table(w, family, strategy)
    for f in _plain_factors(e, family):
        if f.depth > 1 and f.weight > table.max_weight:
            raise UnsupportedWeightError(
                "%s has weight %d but the table covers only %d"
                % (_fname(f), f.weight, table.max_weight))
    return _substitute(e, family, table.entries)


def _plain_factors(e, family):
    for (_, _, factors) in e.terms:
        for f in factors:
            if _plain(f, family) and f.indices:
                yield f


def _dynamic_reduce(e, family):
    maxd = max((f.depth for f in _plain_factors(e, family)), default=0)
    for level in range(maxd, 1, -1):
        classes = sorted({class_key(f.indices)
                          for f in _plain_factors(e, family)
                          if f.depth == level})
        for mset in classes:
            present = sorted({f.indices for f in _plain_factors(e, family)
                              if class_key(f.indices) == mset}, reverse=True)
            if not present:
                continue
            keep = _greedy_keep(mset, family, present)
            _, solved = class_relations(mset, family, keep)
            e = _substitute_map(e, family, solved)
    return e


def _substitute_map(e, family, solved):
    def fn(f):
        if _plain(f, family):
            hit = solved.get(f.indices)
            if hit is not None:
                return hit
        return SumExpr.from_factor(f)

    return normalize(e.map_factors(fn))


@functools.lru_cache(maxsize=None)
def _class_matrix(mset, family):
    """Echelon basis of the relation rows restricted to the full-depth
    sums of one concrete class."""
    d = len(mset)
    kind = "Z" if family == "Z" else "S"
    rows = []
    for a, b in _splits(mset):
        pairs = set()
        for u in set(permutations(a)):
            for v in set(permutations(b)):
                if a == b and v < u:
                    continue
                pairs.add((u, v))
        for u, v in sorted(pairs):
            row = {}
            for (ind, _), c in product_words(u, None, v, None, kind).items():
                if len(ind) == d:
                    row[ind] = row.get(ind, Fraction(0)) + c
            rows.append(row)
    return _echelon(rows)


def _echelon(rows):
    basis = []
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        for pc, br in basis:
            c = row.get(pc)
            if c:
                _subtract(row, br, c)
        if not row:
            continue
        pc = min(row)
        inv = ONE / row[pc]
        basis.append((pc, {k: v * inv for k, v in row.items()}))
    return tuple(basis)


def _valid_keep(mset, family, kept):
    """True iff dropping ``kept`` from the unknowns leaves the class
    system able to solve everything else (full rank on the rest)."""
    basis = _class_matrix(mset, family)
    drop = set(kept)
    rows = [{k: v for k, v in row.items() if k not in drop}
            for _, row in basis]
    return len(_echelon(rows)) == len(basis)


def _greedy_keep(mset, family, present):
    pattern, _ = _class_slots(mset)
    budget = witt2(pattern)
    kept = []
    pool = list(present) + sorted(
        (p for p in set(permutations(mset)) if p not in set(present)),
        reverse=True)
    for cand in pool:
        if len(kept) == budget:
            break
        if _valid_keep(mset, family, kept + [cand]):
            kept.append(cand)
    assert len(kept) == budget
    return kept


# --------------------------------------------------------- leading ones


_EXTRACT_MEMO = {}


def extract_leading_ones(a):
    """Rewrite one sum so no leading index 1 remains outside pure
    S_{1,..,1} factors; value-identical for every argument."""
    return _extract(check_index_vector(a))


def _extract(word):
    hit = _EXTRACT_MEMO.get(word)
    if hit is not None:
        return hit
    if word[0] != 1 or all(x == 1 for x in word):
        e = SumExpr.from_factor(_factor(word))
    else:
        rest = word[1:]
        expansion = product_words((1,), None, rest, None, "S")
        c0 = expansion.pop((word, None))
        e = SumExpr.from_factor(_factor((1,))) * _extract(rest)
        for (ind, _), c in expansion.items():
            e = e - Fraction(c) * _extract(ind)
        e = normalize(e * Fraction(1, c0))
    _EXTRACT_MEMO[word] = e
    return e


@functools.lru_cache(maxsize=None)
def ones_to_power_sums(w):
    """S_{1,..,1} of depth w as a polynomial in S_1 .. S_w.

    The nested sums of 1/i are the complete homogeneous symmetric
    functions of (1, 1/2, .., 1/n) and the depth-1 sums are the power
    sums, so the Newton recursion w*h_w = sum_k p_k h_{w-k} applies.
    """
    if w < 1:
        raise ValueError("depth must be >= 1")
    exprs = [SumExpr.from_const(1)]
    for k in range(1, w + 1):
        acc = SumExpr.zero()
        for j in range(1, k + 1):
            acc = acc + SumExpr.from_factor(_factor((j,))) * exprs[k - j]
        exprs.append(normalize(acc * Fraction(1, k)))
    return exprs[w]


# ---------------------------------------------------------------- infinity


def evaluate_at_infinity(e):
    """Constant value of an expression in the limit of infinite argument.

    Strict-nesting factors are converted first; leading ones are
    extracted so the only divergent piece is a power of S_1, carried as
    the formal symbol sigma1.  Raises UnsupportedConstantError when a
    convergent sum lies outside the shipped table.
    """
    if isinstance(e, SumFactor):
        e = SumExpr.from_factor(e)
    e = convert_expr(e, "S")
    e = normalize(e.map_factors(_limit_prep))

    from ._infinity_table import INFINITY_TABLE
    total = ConstExpr.zero()
    for (cmono, alt, factors), r in e.terms.items():
        lim = _ratfunc_limit(r)
        if not lim:
            continue
        if alt:
            raise DivergenceError("alternating-sign prefactor has no limit")
        acc = ConstExpr({cmono: lim})
        for f in factors:
            if f.indices == (1,) and f.xs is None:
                acc = acc * ConstExpr.symbol("sigma1")
                continue
            row = INFINITY_TABLE.get(f.indices) if f.xs is None else None
            if row is None:
                raise UnsupportedConstantError(
                    "%s at infinity is outside the shipped constant table"
                    % _fname(f))
            acc = acc * ConstExpr(row)
        total = total + acc
    return total


def _limit_prep(f):
    if f.deriv:
        raise ValueError("derivative factors must be resolved before the"
                         " infinite-argument limit")
    if f.scale != 1:
        raise ValueError("scaled arguments must be expanded before the"
                         " infinite-argument limit")
    if not f.indices:
        return SumExpr.from_const(1)
    # a finite argument shift never moves the limit
    base = SumFactor(f.kind, f.indices, f.xs, ONE, 0, 0)
    if f.xs is None and f.kind == "S":
        if all(x == 1 for x in f.indices):
            return ones_to_power_sums(len(f.indices))
        if f.indices[0] == 1:
            return extract_leading_ones(f.indices)
    return SumExpr.from_factor(base)


def _ratfunc_limit(r):
    if r.num.is_zero():
        return Fraction(0)
    dn, dd = r.num.degree(), r.den.degree()
    if dn > dd:
        raise DivergenceError("polynomially growing coefficient")
    if dn < dd:
        return Fraction(0)
    return r.num.leading() / r.den.leading()
