"""Plücker relations, their quasi-homogeneity data, and two independent
dimension oracles for the coordinate ring: the standard-monomial count
(multichains in the componentwise subset order) and an exact linear-algebra
rank computation modulo the relation ideal.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import BadRange, NotPositive, TooLarge
from .grading import (
    DegreeTable,
    GradingParams,
    _check_range,
    _subsets,
    degrees,
    is_positive,
)


def _is_subset_index(t):
    return (
        isinstance(t, tuple)
        and len(t) >= 1
        and all(isinstance(x, int) for x in t)
        and all(x < y for x, y in zip(t, t[1:]))
    )


@dataclass(frozen=True)
class PlueckerRelation:
    """A quadratic relation among Plücker coordinates.

    terms is a tuple of (coefficient, factor1, factor2) with coefficient
    +1 or -1 and the factors strictly increasing index tuples.  Canonical
    form: factor1 < factor2 lexicographically within a term, terms sorted
    by factor pair, leading coefficient +1.  Every term multiplies out to
    the same index multiset, which makes the relation quasi-homogeneous
    under every grading of this family.
    """

    terms: tuple

    def __post_init__(self):
        terms = tuple(
            (int(c), tuple(f1), tuple(f2)) for c, f1, f2 in self.terms
        )
        if len(terms) < 3:
            raise BadRange("a nontrivial relation needs at least 3 terms")
        combined = None
        for c, f1, f2 in terms:
            if c not in (1, -1):
                raise BadRange(f"coefficient must be +1 or -1, got {c}")
            if not _is_subset_index(f1) or not _is_subset_index(f2):
                raise BadRange("factors must be strictly increasing tuples")
            if not f1 < f2:
                raise BadRange("terms must be ordered with factor1 < factor2")
            multiset = tuple(sorted(f1 + f2))
            if combined is None:
                combined = multiset
            elif multiset != combined:
                raise BadRange("terms mix different index multisets")
        if list(terms) != sorted(terms, key=lambda t: (t[1], t[2])):
            raise BadRange("terms must be sorted by factor pair")
        if terms[0][0] != 1:
            raise BadRange("canonical relations lead with coefficient +1")
        object.__setattr__(self, "terms", terms)

    @property
    def combined_multiset(self):
        c, f1, f2 = self.terms[0]
        return tuple(sorted(f1 + f2))


@lru_cache(maxsize=None)
def relations(n, k):
    """Canonicalised quadratic shuffle relations for the (n, k) coordinate
    ring: for every (k-1)-subset i and (k+1)-subset j of 0..n, the signed
    sum over positions l of T_{sort(i + j_l)} * T_{j minus j_l}, with
    repeated indices dropped, like terms combined, zero and duplicate
    relations removed, and each survivor normalised to lead with +1.

    For k = 2 this is the minimal set, one relation per 4-subset; for
    larger k it is a deterministic spanning set.
    """
    _check_range(n, k)
    seen = {}
    for i_tuple in combinations(range(n + 1), k - 1):
        i_set = set(i_tuple)
        for j_tuple in combinations(range(n + 1), k + 1):
            bucket = {}
            for l, j_l in enumerate(j_tuple):
                if j_l in i_set:
                    continue
                insertion_sign = (-1) ** sum(1 for x in i_tuple if x > j_l)
                coeff = (-1) ** l * insertion_sign
                f1 = tuple(sorted(i_tuple + (j_l,)))
                f2 = j_tuple[:l] + j_tuple[l + 1:]
                key = (f1, f2) if f1 < f2 else (f2, f1)
                bucket[key] = bucket.get(key, 0) + coeff
            terms = sorted(
                ((c, f1, f2) for (f1, f2), c in bucket.items() if c != 0),
                key=lambda t: (t[1], t[2]),
            )
            if not terms:
                continue
            lead = terms[0][0]
            terms = tuple((c * lead, f1, f2) for c, f1, f2 in terms)
            if terms not in seen:
                seen[terms] = PlueckerRelation(terms)
    return tuple(seen[key] for key in sorted(seen))


def relation_degrees(rels, table: DegreeTable):
    """Weighted degree of each relation under the given grading, with a
    per-relation flag confirming every term agrees (it always should; a
    False flag means the relation generator is broken)."""
    out = []
    for rel in rels:
        term_degs = [table[f1] + table[f2] for _, f1, f2 in rel.terms]
        out.append((term_degs[0], all(d == term_degs[0] for d in term_degs)))
    return out


def _componentwise_leq(s, t):
    return all(x <= y for x, y in zip(s, t))


def standard_monomial_count(p: GradingParams, m_max: int):
    """Coefficients d_0..d_m_max of the graded standard-monomial count:
    d_m is the number of multichains of k-subsets (componentwise order,
    any length, repeats allowed) whose degrees sum to m.

    Dynamic programming over the subset poset: N(i, m) counts multichains
    of total degree m whose maximal element is subset i.
    """
    if not isinstance(m_max, int) or m_max < 0:
        raise BadRange("m_max must be a nonnegative integer")
    if not is_positive(p):
        raise NotPositive("standard monomials need a positive grading")
    subsets = _subsets(p.n, p.k)
    degs = degrees(p).degrees
    preds = [
        [j for j in range(len(subsets)) if _componentwise_leq(subsets[j], subsets[i])]
        for i in range(len(subsets))
    ]
    counts = [[0] * (m_max + 1) for _ in subsets]
    for m in range(1, m_max + 1):
        for i in range(len(subsets)):
            rest = m - degs[i]
            if rest < 0:
                continue
            total = 1 if rest == 0 else 0
            if rest >= 1:
                total += sum(counts[j][rest] for j in preds[i])
            counts[i][m] = total
    out = [0] * (m_max + 1)
    out[0] = 1
    for m in range(1, m_max + 1):
        out[m] = sum(counts[i][m] for i in range(len(subsets)))
    return tuple(out)


def _monomials_of_degree(weights, target):
    """Exponent tuples e with sum(e_i * weights_i) = target, weights >= 1."""
    out = []
    exp = [0] * len(weights)

    def rec(pos, remaining):
        if pos == len(weights):
            if remaining == 0:
                out.append(tuple(exp))
            return
        if pos == len(weights) - 1:
            if remaining % weights[pos] == 0:
                exp[pos] = remaining // weights[pos]
                out.append(tuple(exp))
                exp[pos] = 0
            return
        upper = remaining // weights[pos]
        for e in range(upper + 1):
            exp[pos] = e
            rec(pos + 1, remaining - e * weights[pos])
        exp[pos] = 0

    rec(0, target)
    return out


def _sparse_rank(rows):
    """Exact rank of a list of sparse rows (dict column -> Fraction)."""
    rank = 0
    pivots = []
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        for col, pivot_row in pivots:
            if col in row:
                factor = row[col]
                for c, v in pivot_row.items():
                    new = row.get(c, Fraction(0)) - factor * v
                    if new:
                        row[c] = new
                    else:
                        row.pop(c, None)
        if not row:
            continue
        col = min(row)
        inv = row[col]
        row = {c: v / inv for c, v in row.items()}
        pivots.append((col, row))
        rank += 1
    return rank


IDEAL_ORACLE_LIMIT = 2000


def ideal_dimension_oracle(p: GradingParams, m: int):
    """Dimension of the degree-m piece of the coordinate ring modulo the
    shuffle relations, by exact rank of the relation-multiple span inside
    the degree-m monomial space.

    Desk-scale only: refuses (TooLarge) when the monomial basis or the
    multiple list would exceed IDEAL_ORACLE_LIMIT entries.
    """
    if not isinstance(m, int) or m < 0:
        raise BadRange("degree must be a nonnegative integer")
    if not is_positive(p):
        raise NotPositive("the oracle needs a positive grading")
    if m == 0:
        return 1
    table = degrees(p)
    weights = table.degrees
    basis = _monomials_of_degree(weights, m)
    if len(basis) > IDEAL_ORACLE_LIMIT:
        raise TooLarge(
            f"degree-{m} monomial space has {len(basis)} elements, "
            f"limit is {IDEAL_ORACLE_LIMIT}"
        )
    index = {mon: pos for pos, mon in enumerate(basis)}
    label_pos = {I: pos for pos, I in enumerate(table.labels)}
    rels = relations(p.n, p.k)
    rows = []
    for rel, (rel_deg, _) in zip(rels, relation_degrees(rels, table)):
        rest = m - rel_deg
        if rest < 0:
            continue
        for mult in _monomials_of_degree(weights, rest):
            row = {}
            for c, f1, f2 in rel.terms:
                exp = list(mult)
                exp[label_pos[f1]] += 1
                exp[label_pos[f2]] += 1
                row[index[tuple(exp)]] = row.get(index[tuple(exp)], 0) + c
            rows.append(row)
            if len(rows) > IDEAL_ORACLE_LIMIT:
                raise TooLarge(
                    f"relation-multiple list exceeds {IDEAL_ORACLE_LIMIT}"
                )
    return len(basis) - _sparse_rank(rows)
