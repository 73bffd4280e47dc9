"""Independent reference implementations used only by the test suite.

Everything here is deliberately naive: brute-force enumeration, dense
convolution, rational Gaussian elimination.  The point is that none of it
shares code with the package under test, so agreement is evidence.
"""

from fractions import Fraction
from itertools import combinations, permutations, product


def parity(perm):
    """Sign of a permutation given as a tuple of images of 0..m-1."""
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def gauss_solve(rows, rhs):
    """Solve a linear system exactly over the rationals.

    rows is a list of lists (the matrix by rows), rhs a list.  Returns a
    list of Fractions, or None if the system is inconsistent or the
    solution is not unique.
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    nrows, ncols = len(m), len(m[0]) - 1
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    if len(piv_cols) < ncols:
        return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = m[i][ncols]
    return sol


def det_laplace(a):
    """Determinant by first-row Laplace expansion; fine for tiny matrices."""
    size = len(a)
    if size == 1:
        return a[0][0]
    total = 0
    for j in range(size):
        if a[0][j]:
            minor = [row[:j] + row[j + 1:] for row in a[1:]]
            total += (-1) ** j * a[0][j] * det_laplace(minor)
    return total


def _rank_and_minor_gcd(columns):
    """Rank r and gcd of all r x r minors of the integer column list."""
    from math import gcd

    dim = len(columns[0])
    ncols = len(columns)
    for r in range(min(dim, ncols), 0, -1):
        g = 0
        for rows_sel in combinations(range(dim), r):
            for cols_sel in combinations(range(ncols), r):
                sub = [[columns[j][i] for j in cols_sel] for i in rows_sel]
                g = gcd(g, det_laplace(sub))
        if g:
            return r, g
    return 0, 0


def lattice_points_brute(basis_columns, bound):
    """All integer-coefficient combinations of the columns with coefficients
    in [-bound, bound], as a set of tuples.  Only usable for tiny bases."""
    if not basis_columns:
        return {()}
    dim = len(basis_columns[0])
    pts = set()
    for coeffs in product(range(-bound, bound + 1), repeat=len(basis_columns)):
        v = tuple(
            sum(c * col[i] for c, col in zip(coeffs, basis_columns))
            for i in range(dim)
        )
        pts.add(v)
    return pts


def intersect_lattices_brute(basis_a, basis_b, bound):
    """Points of the intersection of two lattices inside a coefficient box.

    Enumerates combinations of basis_a and keeps those that are integer
    combinations of basis_b (checked by exact rational solve against the
    b-columns).  Returns a sorted list of tuples.
    """
    pts_a = lattice_points_brute(basis_a, bound)
    out = []
    for p in sorted(pts_a):
        if is_integer_combination(basis_b, p):
            out.append(p)
    return out


def is_integer_combination(basis_columns, target):
    """Exact membership of target in the integer span of the columns.

    Works by comparing determinantal invariants: adjoining a vector of the
    span keeps both the rank and the gcd of all maximal minors, and any
    proper enlargement of the lattice strictly divides that gcd.
    """
    target = [Fraction(x) for x in target]
    if all(x == 0 for x in target):
        return True
    if not basis_columns:
        return False
    from math import lcm

    denoms = [Fraction(x).denominator for col in basis_columns for x in col]
    denoms += [x.denominator for x in target]
    scale = lcm(*denoms)
    cleared = [
        tuple(int(Fraction(x) * scale) for x in col) for col in basis_columns
    ]
    t = tuple(int(x * scale) for x in target)
    r_b, g_b = _rank_and_minor_gcd(cleared)
    if r_b == 0:
        return False
    r_a, g_a = _rank_and_minor_gcd(cleared + [t])
    return r_a == r_b and g_a == g_b


def subset_degree(a, k, subset):
    """Plücker coordinate degree for one k-subset of {0..n}."""
    base = sum(a[l] for l in range(k - 1))
    return sum(a[i] for i in subset) - base


def all_subset_degrees(a, k):
    n = len(a) - 1
    return {
        subset: subset_degree(a, k, subset)
        for subset in combinations(range(n + 1), k)
    }


def multichain_count(a, k, order):
    """Coefficients d_0..d_order of the graded count of monomials in the
    Plücker coordinates whose index subsets form a chain under the
    componentwise order.

    Direct depth-first enumeration: a multichain is a weakly increasing
    sequence in lex order whose consecutive supports are comparable, so we
    scan subset indices upward and require componentwise domination when
    moving to a new subset.
    """
    n = len(a) - 1
    subsets = list(combinations(range(n + 1), k))
    degs = [subset_degree(a, k, s) for s in subsets]
    if any(d <= 0 for d in degs):
        raise ValueError("oracle needs strictly positive degrees")

    def dominated(s, t):
        return all(x <= y for x, y in zip(s, t))

    counts = [0] * (order + 1)
    counts[0] = 1

    def go(prev, total):
        for i in range(prev, len(subsets)):
            if i != prev and not dominated(subsets[prev], subsets[i]):
                continue
            nt = total + degs[i]
            if nt > order:
                continue
            counts[nt] += 1
            go(i, nt)

    for i in range(len(subsets)):
        d = degs[i]
        if d > order:
            continue
        counts[d] += 1
        go(i, d)
    return counts


def weighted_projective_series(weights, order):
    """Series of 1 / prod (1 - t^w) as a list of length order + 1."""
    out = [0] * (order + 1)
    out[0] = 1
    for w in weights:
        for m in range(w, order + 1):
            out[m] += out[m - w]
    return out


def series_mul_poly(series, poly, order):
    """Multiply a truncated series by a dense polynomial (list of coeffs)."""
    out = [0] * (order + 1)
    for m in range(order + 1):
        s = 0
        for j, c in enumerate(poly):
            if c and 0 <= m - j <= order:
                s += c * series[m - j]
        out[m] = s
    return out


def rational_series(num, den, order):
    """Expand num/den as a power series, coefficient lists, den[0] == ±1."""
    sign = den[0]
    assert sign in (1, -1)
    num = [c * sign for c in num]
    den = [c * sign for c in den]
    out = [0] * (order + 1)
    for m in range(order + 1):
        s = num[m] if m < len(num) else 0
        for j in range(1, min(m, len(den) - 1) + 1):
            s -= den[j] * out[m - j]
        out[m] = s
    return out
