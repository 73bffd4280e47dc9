"""Acceptance gate: twelve exact criteria, one test and one line each.

Every check is exact integer or rational arithmetic; the three timed
criteria assert their wall-clock budgets.
"""

import random
import time
from itertools import combinations, permutations
from math import comb

from oracles import weighted_projective_series

from wgrass.exact_linalg import (
    IntMatrix,
    det,
    hnf,
    is_column_equivalent,
    snf,
)
from wgrass.grading import (
    GradingParams,
    degrees,
    dualising_degrees,
    from_gl,
    gl_degree,
    is_positive,
    param_basis,
    param_basis_ambient,
    to_gl,
    weyl_act,
)
from wgrass.hilbert import (
    closed_series,
    recover_numerator,
    root_factor_product,
    weyl_denominator,
    weyl_series,
)
from wgrass.pluecker import relation_degrees, relations, standard_monomial_count
from wgrass.root_data import (
    CoweightVector,
    RepSpec,
    coweight_lattice,
    degrees_from_coweight,
)

GRID = (
    (3, 2, (1, 1, 1, 1)),
    (4, 2, (1, 1, 1, 1, 1)),
    (4, 2, (1, 2, 3, 4, 5)),
    (4, 2, (-1, 3, 3, 3, 3)),
    (4, 2, (1, 1, 2, 2, 3)),
    (3, 3, (1, 2, 3, 4)),
)


def _random_positive(rng, n, k):
    return GradingParams(n, k, tuple(sorted(rng.randint(1, 9) for _ in range(n + 1))))


def test_criterion_01_lattice_pipeline_matches_closed_basis():
    start = time.monotonic()
    for n in range(1, 7):
        for k in range(1, n + 1):
            lat = coweight_lattice(RepSpec("A", n, k))
            assert is_column_equivalent(lat.basis, param_basis_ambient(n, k)), (n, k)
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"criterion 1 PASS: lattice pipeline = closed basis, n <= 6 ({elapsed:.1f}s)")


def test_criterion_02_so10_generators_and_degrees():
    spec = RepSpec("D", 5, "standard")
    lat = coweight_lattice(spec)
    gens = []
    for i in range(5):
        col = [0] * 10
        col[i], col[5 + i] = 1, -1
        gens.append(tuple(col))
    gens.append((0,) * 5 + (1,) * 5)
    assert is_column_equivalent(lat.basis, IntMatrix.from_columns(gens))
    for j in range(6):
        a = tuple(int(i == j) for i in range(6))
        ambient = [0] * 10
        for i in range(5):
            ambient[i] += a[i]
            ambient[5 + i] += a[5] - a[i]
        degs = degrees_from_coweight(spec, CoweightVector.from_ambient(spec, ambient))
        for i in range(5):
            assert degs[f"X{i}"] == a[i]
            assert degs[f"X{5 + i}"] == -a[i] + a[5]
    print("criterion 2 PASS: SO(10) lattice generators and unit-vector degrees")


def test_criterion_03_series_b_lattice():
    targets = {
        2: ((1, 0, -1, 0, 0), (1, 1, -1, -1, 0), (1, 1, 1, 1, 1)),
        3: (
            (1, 0, 0, -1, 0, 0, 0),
            (1, 1, 0, -1, -1, 0, 0),
            (1, 1, 1, -1, -1, -1, 0),
            (1, 1, 1, 1, 1, 1, 1),
        ),
    }
    for r, cols in targets.items():
        lat = coweight_lattice(RepSpec("B", r, "standard"))
        assert is_column_equivalent(lat.basis, IntMatrix.from_columns(cols)), r
    print("criterion 3 PASS: series B lattice = HNF of coweight images with tau")


def test_criterion_04_snf_diagonal_product():
    for n in range(1, 8):
        for k in range(1, n + 1):
            s, _, _ = snf(param_basis(n, k))
            product = 1
            for i in range(min(s.rows, s.cols)):
                if s.entries[i][i]:
                    product *= s.entries[i][i]
            assert product == comb(n + 1, k), (n, k)
    print("criterion 4 PASS: snf diagonal product = binom(n+1, k), n <= 7")


def test_criterion_05_projective_product_formula():
    for a in ((1, 1, 1), (1, 2, 3), (2, 3, 5), (1, 1, 2)):
        p = GradingParams(len(a) - 1, 1, a)
        got = closed_series(p, 40).series
        assert got == tuple(weighted_projective_series(a, 40)), a
    print("criterion 5 PASS: k = 1 series = weighted product expansion to order 40")


def test_criterion_06_triple_agreement():
    start = time.monotonic()
    for n, k, a in GRID:
        p = GradingParams(n, k, a)
        closed = closed_series(p, 20).series
        weyl = weyl_series(p, 20).series
        oracle = standard_monomial_count(p, 20)
        assert closed == weyl == oracle, (n, k, a)
    elapsed = time.monotonic() - start
    assert elapsed < 120.0
    print(f"criterion 6 PASS: closed = weyl = monomial count to order 20 ({elapsed:.1f}s)")


def test_criterion_07_five_relations_and_degrees():
    rels = relations(4, 2)
    expected_terms = []
    for sub in combinations(range(5), 4):
        p, q, r, s = sub
        expected_terms.append((
            (1, (p, q), (r, s)), (-1, (p, r), (q, s)), (1, (p, s), (q, r)),
        ))
    assert [rel.terms for rel in rels] == expected_terms
    # Degree expressions as coefficient vectors over (a0..a4).
    expr = (
        (-1, 1, 1, 1, 0),
        (-1, 1, 1, 0, 1),
        (-1, 1, 0, 1, 1),
        (-1, 0, 1, 1, 1),
        (-2, 1, 1, 1, 1),
    )
    for j in range(5):
        unit = GradingParams(4, 2, tuple(int(i == j) for i in range(5)))
        graded = relation_degrees(rels, degrees(unit))
        for row, (deg, quasi) in zip(expr, graded):
            assert quasi
            assert deg == row[j], (j, row)
    print("criterion 7 PASS: five canonical relations with displayed degrees")


def test_criterion_08_adjunction_golden():
    rng = random.Random(8)
    for _ in range(20):
        p = _random_positive(rng, 3, 2)
        dual = dualising_degrees(p)
        (rel_deg, quasi), = relation_degrees(relations(3, 2), degrees(p))
        assert quasi
        assert dual.deg_omega_wP - dual.deg_omega_Y == -rel_deg, p.a
    print("criterion 8 PASS: hypersurface adjunction on 20 random gradings")


def test_criterion_09_weyl_invariance():
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(1, 4)
        k = rng.randint(1, n)
        p = _random_positive(rng, n, k)
        sigma = tuple(rng.sample(range(n + 1), n + 1))
        q = weyl_act(p, sigma)
        assert sorted(degrees(p).degrees) == sorted(degrees(q).degrees)
        assert closed_series(p, 8).series == closed_series(q, 8).series
        inverse = [0] * (n + 1)
        for i, s in enumerate(sigma):
            inverse[s] = i
        assert weyl_act(q, tuple(inverse)) == p
    print("criterion 9 PASS: Weyl action preserves degrees and series, 20 cases")


def test_criterion_10_gl_round_trip():
    rng = random.Random(10)
    for _ in range(50):
        n = rng.randint(1, 6)
        k = rng.randint(1, n)
        p = GradingParams(n, k, tuple(rng.randint(-9, 9) for _ in range(n + 1)))
        g = to_gl(p)
        assert from_gl(n, k, g) == p
        table = degrees(p)
        assert all(gl_degree(g, I) == d for I, d in table.items())
    print("criterion 10 PASS: GL round trip and degree tables, 50 cases")


def test_criterion_11_numerator_recovery():
    p = GradingParams(3, 2, (1, 1, 1, 1))
    degs = list(degrees(p).degrees)
    series = closed_series(p, sum(degs) + 6).series
    assert recover_numerator(series, degs).coeffs == ((0, 1), (2, -1))
    for a in ((1, 1, 1), (1, 2, 3), (2, 3, 5), (1, 1, 2)):
        q = GradingParams(len(a) - 1, 1, a)
        degs = list(degrees(q).degrees)
        series = closed_series(q, sum(degs) + 6).series
        assert recover_numerator(series, degs).coeffs == ((0, 1),)
    for n, k, a in GRID:
        r = GradingParams(n, k, a)
        degs = list(degrees(r).degrees)
        series = closed_series(r, sum(degs) + 6).series
        recover_numerator(series, degs)
    print("criterion 11 PASS: numerator recovery, polynomial on the whole grid")


def test_criterion_12_property_suite():
    start = time.monotonic()
    rng = random.Random(12)

    for _ in range(30):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = IntMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        )
        h, u = hnf(m)
        assert det(u) in (1, -1)
        assert m.mul(u) == h
        assert hnf(h)[0] == h
        s, su, sv = snf(m)
        assert det(su) in (1, -1) and det(sv) in (1, -1)
        assert su.mul(m).mul(sv) == s
        diag = [s.entries[i][i] for i in range(min(rows, cols))]
        for x, y in zip(diag, diag[1:]):
            assert y == 0 or (x != 0 and y % x == 0)

    for n in range(1, 6):
        for k in range(1, n + 1):
            rels = relations(n, k)
            for _ in range(10):
                a = tuple(rng.randint(-5, 5) for _ in range(n + 1))
                graded = relation_degrees(rels, degrees(GradingParams(n, k, a)))
                assert all(quasi for _, quasi in graded), (n, k, a)

    for n in range(1, 9):
        for _ in range(10):
            k = rng.randint(1, n)
            p = GradingParams(n, k, tuple(rng.randint(-3, 5) for _ in range(n + 1)))
            brute = all(
                sum(p.a[i] for i in I) > sum(p.a[l] for l in range(k - 1))
                for I in combinations(range(n + 1), k)
            )
            assert is_positive(p) == brute, p.a

    for n in range(1, 5):
        for _ in range(5):
            a = tuple(rng.randint(-4, 4) for _ in range(n + 1))
            assert weyl_denominator(n, a) == root_factor_product(n, a), (n, a)

    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"criterion 12 PASS: property suite ({elapsed:.1f}s)")
