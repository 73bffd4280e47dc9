"""Exact integer and rational linear algebra.

Normal forms (Hermite, Smith), lattice intersection, column equivalence and
integral solving.  Everything runs on arbitrary-precision integers or
Fractions; no floating point is used anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch, EmptyGenerators


def _as_int(x):
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    raise TypeError(f"expected an integer entry, got {x!r}")


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major as nested tuples."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(_as_int(x) for x in row) for row in self.entries)
        if len(rows) < 1:
            raise DimensionMismatch("a matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(c) for c in columns]
        if not columns:
            if rows is None:
                raise DimensionMismatch("row count needed for a 0-column matrix")
            return cls(tuple(() for _ in range(rows)))
        height = len(columns[0])
        if any(len(c) != height for c in columns):
            raise DimensionMismatch("ragged columns")
        return cls(tuple(tuple(c[i] for c in columns) for i in range(height)))

    @classmethod
    def identity(cls, size):
        return cls(tuple(
            tuple(1 if i == j else 0 for j in range(size)) for i in range(size)
        ))

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return IntMatrix(tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)
        ))

    def mul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        return IntMatrix(tuple(
            tuple(
                sum(self.entries[i][t] * other.entries[t][j]
                    for t in range(self.cols))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        ))

    def mul_vec(self, vec):
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length differs from column count")
        return tuple(
            sum(row[t] * vec[t] for t in range(self.cols))
            for row in self.entries
        )

    def neg(self):
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.entries))


@dataclass(frozen=True)
class RatMatrix:
    """Immutable rational matrix; Fraction keeps entries in lowest terms."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(rows) < 1:
            raise DimensionMismatch("a matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(c) for c in columns]
        if not columns:
            if rows is None:
                raise DimensionMismatch("row count needed for a 0-column matrix")
            return cls(tuple(() for _ in range(rows)))
        height = len(columns[0])
        if any(len(c) != height for c in columns):
            raise DimensionMismatch("ragged columns")
        return cls(tuple(tuple(c[i] for c in columns) for i in range(height)))

    @classmethod
    def identity(cls, size):
        return cls(tuple(
            tuple(Fraction(int(i == j)) for j in range(size))
            for i in range(size)
        ))

    @classmethod
    def from_int(cls, m):
        return cls(m.entries)

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def mul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        return RatMatrix(tuple(
            tuple(
                sum((self.entries[i][t] * other.entries[t][j]
                     for t in range(self.cols)), Fraction(0))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        ))

    def mul_vec(self, vec):
        vec = tuple(Fraction(x) for x in vec)
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length differs from column count")
        return tuple(
            sum((row[t] * vec[t] for t in range(self.cols)), Fraction(0))
            for row in self.entries
        )

    def inverse(self):
        """Gauss-Jordan inverse; raises ValueError on a singular matrix."""
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices are invertible")
        size = self.rows
        work = [list(row) + [Fraction(int(i == j)) for j in range(size)]
                for i, row in enumerate(self.entries)]
        for c in range(size):
            piv = next((i for i in range(c, size) if work[i][c] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            work[c], work[piv] = work[piv], work[c]
            inv = work[c][c]
            work[c] = [x / inv for x in work[c]]
            for i in range(size):
                if i != c and work[i][c] != 0:
                    f = work[i][c]
                    work[i] = [x - f * y for x, y in zip(work[i], work[c])]
        return RatMatrix(tuple(tuple(row[size:]) for row in work))

    def solve(self, rhs):
        """Unique exact solution of self·x = rhs; ValueError otherwise."""
        rhs = [Fraction(x) for x in rhs]
        if len(rhs) != self.rows:
            raise DimensionMismatch("right-hand side has wrong length")
        work = [list(row) + [b] for row, b in zip(self.entries, rhs)]
        ncols = self.cols
        piv_cols = []
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, self.rows) if work[i][c] != 0), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            inv = work[r][c]
            work[r] = [x / inv for x in work[r]]
            for i in range(self.rows):
                if i != r and work[i][c] != 0:
                    f = work[i][c]
                    work[i] = [x - f * y for x, y in zip(work[i], work[r])]
            piv_cols.append(c)
            r += 1
        if any(work[i][ncols] != 0 for i in range(r, self.rows)):
            raise ValueError("inconsistent system")
        if len(piv_cols) < ncols:
            raise ValueError("solution is not unique")
        sol = [Fraction(0)] * ncols
        for i, c in enumerate(piv_cols):
            sol[c] = work[i][ncols]
        return tuple(sol)


@dataclass(frozen=True)
class LatticeBasis:
    """A basis of a sublattice of ZZ^ambient_dim, columns of an IntMatrix."""

    ambient_dim: int
    basis: IntMatrix
    canonical: bool

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise DimensionMismatch("basis rows differ from ambient dimension")
        h, _ = hnf(self.basis)
        rank = sum(1 for j in range(h.cols) if any(h.column(j)))
        if rank != self.basis.cols:
            raise DimensionMismatch("basis columns are linearly dependent")
        if self.canonical and _strip_zero_columns(h) != _strip_zero_columns(self.basis):
            raise DimensionMismatch("canonical flag set on a non-HNF basis")

    @property
    def rank(self):
        return self.basis.cols

    def contains(self, vec):
        """Integer membership of vec in the spanned sublattice."""
        vec = tuple(vec)
        if len(vec) != self.ambient_dim:
            raise DimensionMismatch("vector has wrong length")
        if self.basis.cols == 0:
            return all(x == 0 for x in vec)
        return solve_integral(self.basis, vec) is not None


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _strip_zero_columns(m):
    keep = [j for j in range(m.cols) if any(m.column(j))]
    return IntMatrix.from_columns([m.column(j) for j in keep], rows=m.rows)


def hnf(m: IntMatrix):
    """Column-style Hermite normal form.

    Returns (h, u) with h = m·u, u unimodular.  Convention: lower-triangular
    echelon with strictly descending pivot rows left to right, positive
    pivots, entries left of a pivot in its row reduced into [0, pivot),
    zero columns trailing.  The form is a canonical representative of the
    column span, so lattice equality is h-equality.
    """
    cols = m.cols
    h = [list(m.column(j)) for j in range(cols)]
    u = [[int(i == j) for i in range(cols)] for j in range(cols)]

    def col_addmul(dst, src, factor):
        h[dst] = [x + factor * y for x, y in zip(h[dst], h[src])]
        u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]

    npiv = 0
    for r in range(m.rows):
        while True:
            nz = [j for j in range(npiv, cols) if h[j][r] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda j: abs(h[j][r]))
            for j in nz:
                if j != piv:
                    col_addmul(j, piv, -(h[j][r] // h[piv][r]))
        if not nz:
            continue
        j = nz[0]
        h[npiv], h[j] = h[j], h[npiv]
        u[npiv], u[j] = u[j], u[npiv]
        if h[npiv][r] < 0:
            h[npiv] = [-x for x in h[npiv]]
            u[npiv] = [-x for x in u[npiv]]
        p = h[npiv][r]
        for j in range(npiv):
            q = h[j][r] // p
            if q:
                col_addmul(j, npiv, -q)
        npiv += 1
        if npiv == cols:
            break
    h_m = IntMatrix.from_columns(h, rows=m.rows)
    u_m = IntMatrix.from_columns(u, rows=cols) if cols else IntMatrix.from_columns([], rows=1)
    return h_m, u_m


def snf(m: IntMatrix):
    """Smith normal form: s = u·m·v, s diagonal with d1 | d2 | ..., u and v
    unimodular, nonnegative diagonal with zeros trailing."""
    nrows, ncols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_combine(t, i):
        # Zero a[i][t] against pivot a[t][t] with a unimodular 2-row map.
        p, q = a[t][t], a[i][t]
        if p != 0 and q % p == 0:
            f = q // p
            a[i] = [x - f * y for x, y in zip(a[i], a[t])]
            u[i] = [x - f * y for x, y in zip(u[i], u[t])]
            return
        g, x, y = _xgcd(p, q)
        pg, qg = p // g, q // g
        a[t], a[i] = (
            [x * s + y * w for s, w in zip(a[t], a[i])],
            [-qg * s + pg * w for s, w in zip(a[t], a[i])],
        )
        u[t], u[i] = (
            [x * s + y * w for s, w in zip(u[t], u[i])],
            [-qg * s + pg * w for s, w in zip(u[t], u[i])],
        )

    def col_combine(t, j):
        p, q = a[t][t], a[t][j]
        if p != 0 and q % p == 0:
            f = q // p
            for row in a:
                row[j] -= f * row[t]
            for row in v:
                row[j] -= f * row[t]
            return
        g, x, y = _xgcd(p, q)
        pg, qg = p // g, q // g
        for row in a:
            row[t], row[j] = x * row[t] + y * row[j], -qg * row[t] + pg * row[j]
        for row in v:
            row[t], row[j] = x * row[t] + y * row[j], -qg * row[t] + pg * row[j]

    limit = min(nrows, ncols)
    for t in range(limit):
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        while True:
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    row_combine(t, i)
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    col_combine(t, j)
            if any(a[i][t] != 0 for i in range(t + 1, nrows)):
                continue
            if any(a[t][j] != 0 for j in range(t + 1, ncols)):
                continue
            p = a[t][t]
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % p != 0:
                        offender = j
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # Fold the offending column into the pivot column and restart.
            for row in a:
                row[t] += row[offender]
            for row in v:
                row[t] += row[offender]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return (
        IntMatrix.from_rows(a),
        IntMatrix.from_rows(u),
        IntMatrix.from_rows(v),
    )


def det(m: IntMatrix):
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise DimensionMismatch("determinant needs a square matrix")
    size = m.rows
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for t in range(size - 1):
        if a[t][t] == 0:
            piv = next((i for i in range(t + 1, size) if a[i][t] != 0), None)
            if piv is None:
                return 0
            a[t], a[piv] = a[piv], a[t]
            sign = -sign
        for i in range(t + 1, size):
            for j in range(t + 1, size):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[size - 1][size - 1]


def is_column_equivalent(m1: IntMatrix, m2: IntMatrix):
    """Whether two integer matrices span the same column lattice."""
    if m1.rows != m2.rows:
        raise DimensionMismatch("row counts differ")
    h1 = _strip_zero_columns(hnf(m1)[0])
    h2 = _strip_zero_columns(hnf(m2)[0])
    return h1 == h2


def solve_integral(a: IntMatrix, b):
    """An integer solution x of a·x = b, or None if none exists.

    When solutions form a coset any representative may be returned.
    """
    b = tuple(_as_int(x) for x in b)
    if len(b) != a.rows:
        raise DimensionMismatch("right-hand side has wrong length")
    s, u, v = snf(a)
    c = u.mul_vec(b)
    y = [0] * a.cols
    for i in range(a.rows):
        d = s.entries[i][i] if i < a.cols else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return v.mul_vec(y)


def lattice_intersect(gens: RatMatrix, ambient_dim: int):
    """Canonical basis of (ZZ-span of the columns of gens) ∩ ZZ^ambient_dim.

    Method: clear denominators by their common multiple D, then find all
    integer vectors y with D·y in the integer lattice spanned by D·gens.
    That condition is the integer kernel of the block matrix [D·gens | -D·I],
    read off from the zero columns of its Hermite form; the y-parts of the
    kernel basis generate the intersection, which is then HNF-canonicalised.
    """
    if gens.cols == 0:
        raise EmptyGenerators("no generator columns")
    if gens.rows != ambient_dim:
        raise DimensionMismatch("generators live in the wrong dimension")
    denom = lcm(*[x.denominator for row in gens.entries for x in row])
    cleared = [
        [int(x * denom) for x in row] for row in gens.entries
    ]
    ncols = gens.cols
    aug_rows = [
        cleared[i] + [-denom if j == i else 0 for j in range(ambient_dim)]
        for i in range(ambient_dim)
    ]
    aug = IntMatrix.from_rows(aug_rows)
    h, u = hnf(aug)
    kernel_cols = [
        u.column(j)[ncols:]
        for j in range(h.cols)
        if not any(h.column(j))
    ]
    if not kernel_cols:
        basis = IntMatrix.from_columns([], rows=ambient_dim)
        return LatticeBasis(ambient_dim, basis, canonical=True)
    raw = IntMatrix.from_columns(kernel_cols, rows=ambient_dim)
    basis = _strip_zero_columns(hnf(raw)[0])
    return LatticeBasis(ambient_dim, basis, canonical=True)
