"""Integral parametrisation of gradings on Plücker coordinates for the
type A exterior-power case: degree tables, positivity, well-formedness,
dualising-sheaf degrees, GL-parameter conversion, the Weyl action on
parameters, singular strata and duality support.

Parameters (a_0, ..., a_n) encode the coweight sum(a_i * basis_i) over the
integral basis returned by param_basis; the induced degree of a Plücker
coordinate T_I is sum(a_i for i in I) minus sum(a_l for l <= k-2).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, gcd

from .errors import BadRange, MissingIndex, NonPositiveDegree
from .exact_linalg import IntMatrix, solve_integral


def _check_range(n, k):
    if not (isinstance(n, int) and isinstance(k, int) and 1 <= k <= n):
        raise BadRange(f"need integers 1 <= k <= n, got n={n!r}, k={k!r}")


@lru_cache(maxsize=None)
def _subsets(n, k):
    return tuple(combinations(range(n + 1), k))


@lru_cache(maxsize=None)
def _subset_index(n, k):
    return {I: pos for pos, I in enumerate(_subsets(n, k))}


@dataclass(frozen=True)
class GradingParams:
    """Parameters (n, k, a_0..a_n) of a weighted Grassmannian grading.

    Any integer vector is representable; positivity and well-formedness are
    separate predicates so that rejected gradings can still be inspected.
    """

    n: int
    k: int
    a: tuple

    def __post_init__(self):
        _check_range(self.n, self.k)
        a = tuple(self.a)
        if len(a) != self.n + 1 or not all(isinstance(x, int) for x in a):
            raise BadRange(
                f"parameter vector must hold n+1 = {self.n + 1} integers"
            )
        object.__setattr__(self, "a", a)


@dataclass(frozen=True)
class DegreeTable:
    """Degrees of all Plücker coordinates, in lexicographic subset order."""

    n: int
    k: int
    degrees: tuple

    def __post_init__(self):
        _check_range(self.n, self.k)
        degs = tuple(self.degrees)
        if len(degs) != comb(self.n + 1, self.k):
            raise BadRange("degree list length must be binom(n+1, k)")
        object.__setattr__(self, "degrees", degs)

    @property
    def labels(self):
        return _subsets(self.n, self.k)

    def __getitem__(self, subset):
        idx = _subset_index(self.n, self.k).get(tuple(subset))
        if idx is None:
            raise MissingIndex(
                f"{subset!r} is not a {self.k}-subset of 0..{self.n}"
            )
        return self.degrees[idx]

    def items(self):
        return zip(self.labels, self.degrees)

    def to_dict(self):
        return dict(self.items())


@dataclass(frozen=True)
class GLParams:
    """The redundant (w_0..w_n, u) parametrisation of the same gradings."""

    w: tuple
    u: int

    def __post_init__(self):
        w = tuple(self.w)
        if not w or not all(isinstance(x, int) for x in w) or not isinstance(self.u, int):
            raise BadRange("w must be a nonempty integer sequence, u an integer")
        object.__setattr__(self, "w", w)


@dataclass(frozen=True)
class DualisingDegrees:
    """Degrees of the dualising sheaves of the Grassmannian and its ambient
    weighted projective space, the Fano flag, and a well-formedness flag
    (the degree formulas are only geometrically meaningful when it is set)."""

    deg_omega_Y: int
    deg_omega_wP: int
    fano: bool
    well_formed: bool


def alpha_beta(n, k):
    """Last-row constants of param_basis: alpha = -binom(n, k), repeated
    k-1 times, and beta = binom(n, k-1), repeated n-k+2 times."""
    _check_range(n, k)
    return -comb(n, k), comb(n, k - 1)


def param_basis(n, k) -> IntMatrix:
    """Integral basis matrix of the grading lattice in coordinates
    (omega_1, ..., omega_n, binom(n+1,k)^{-1} tau): difference pattern in
    the first n rows, then the alpha/beta last row."""
    _check_range(n, k)
    alpha, beta = alpha_beta(n, k)
    rows = [
        [(1 if j == i else (-1 if j == i + 1 else 0)) for j in range(n + 1)]
        for i in range(n)
    ]
    rows.append([alpha] * (k - 1) + [beta] * (n - k + 2))
    return IntMatrix.from_rows(rows)


def param_basis_ambient(n, k) -> IntMatrix:
    """The same basis as diagonal coweights on the Plücker coordinates:
    entry of column i at subset I is [i in I] - 1 for i <= k-2 and [i in I]
    for i >= k-1, so that the column-i entries are the degrees of the
    grading with a = e_i."""
    _check_range(n, k)
    labels = _subsets(n, k)
    cols = []
    for i in range(n + 1):
        if i <= k - 2:
            cols.append(tuple(int(i in I) - 1 for I in labels))
        else:
            cols.append(tuple(int(i in I) for I in labels))
    return IntMatrix.from_columns(cols, rows=len(labels))


def degrees(p: GradingParams) -> DegreeTable:
    """Full degree table: deg(T_I) = sum(a_i, i in I) - sum(a_l, l <= k-2)."""
    base = sum(p.a[l] for l in range(p.k - 1))
    degs = tuple(
        sum(p.a[i] for i in I) - base for I in _subsets(p.n, p.k)
    )
    return DegreeTable(p.n, p.k, degs)


def is_positive(p: GradingParams) -> bool:
    """Whether every coordinate degree is strictly positive.  The binding
    constraint is the subset of the k smallest parameters."""
    base = sum(p.a[l] for l in range(p.k - 1))
    return sum(sorted(p.a)[: p.k]) > base


def is_well_formed(table: DegreeTable) -> bool:
    """Whether removing any one degree leaves the rest with gcd 1."""
    degs = table.degrees
    if any(d <= 0 for d in degs):
        raise NonPositiveDegree("well-formedness needs positive degrees")
    size = len(degs)
    prefix = [0] * (size + 1)
    for i, d in enumerate(degs):
        prefix[i + 1] = gcd(prefix[i], d)
    suffix = [0] * (size + 1)
    for i in range(size - 1, -1, -1):
        suffix[i] = gcd(suffix[i + 1], degs[i])
    return all(gcd(prefix[i], suffix[i + 1]) == 1 for i in range(size))


def dualising_degrees(p: GradingParams) -> DualisingDegrees:
    """Dualising-sheaf degrees; computed for any parameters, with the
    well_formed flag recording whether the formulas' hypothesis holds."""
    total = sum(p.a)
    head = sum(p.a[l] for l in range(p.k - 1))
    deg_y = -p.k * total + (p.n + 1) * head
    deg_wp = -comb(p.n, p.k - 1) * total + comb(p.n + 1, p.k) * head
    table = degrees(p)
    well_formed = all(d > 0 for d in table.degrees) and is_well_formed(table)
    return DualisingDegrees(deg_y, deg_wp, deg_y < 0, well_formed)


def to_gl(p: GradingParams) -> GLParams:
    """A GL-style representative of the grading: w = a, u = -sum(a_l, l<=k-2)."""
    return GLParams(p.a, -sum(p.a[l] for l in range(p.k - 1)))


def from_gl(n, k, g: GLParams) -> GradingParams:
    """Parameters induced by GL data: a_i = sum(w_l, l<=k-2) + u + w_i."""
    _check_range(n, k)
    if len(g.w) != n + 1:
        raise BadRange(f"w must hold n+1 = {n + 1} integers")
    head = sum(g.w[l] for l in range(k - 1))
    return GradingParams(n, k, tuple(head + g.u + w_i for w_i in g.w))


def gl_degree(g: GLParams, subset) -> int:
    """Degree of T_I straight from GL parameters: sum(w_i, i in I) + u."""
    return sum(g.w[i] for i in subset) + g.u


def _check_permutation(n, sigma):
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(n + 1)):
        raise BadRange(f"not a permutation of 0..{n}: {sigma!r}")
    return sigma


def weyl_act(p: GradingParams, sigma) -> GradingParams:
    """Transport of parameters along a permutation of the index set:
    the result a' satisfies degrees(a') at sigma(I) = degrees(a) at I.

    Composition runs left to right: acting by sigma then by sigma2 equals
    acting by the map i -> sigma2(sigma(i)).
    """
    sigma = _check_permutation(p.n, sigma)
    table = degrees(p)
    index = _subset_index(p.n, p.k)
    permuted = [0] * len(table.degrees)
    for I, d in table.items():
        target = tuple(sorted(sigma[i] for i in I))
        permuted[index[target]] = d
    basis = param_basis_ambient(p.n, p.k)
    solution = solve_integral(basis, permuted)
    if solution is None:
        raise RuntimeError(
            "internal error: permuted degree vector left the parameter "
            "lattice; the basis or the transport is wrong"
        )
    return GradingParams(p.n, p.k, solution)


def _prime_factors(value):
    out = []
    d = 2
    while d * d <= value:
        if value % d == 0:
            out.append(d)
            while value % d == 0:
                value //= d
        d += 1 if d == 2 else 2
    if value > 1:
        out.append(value)
    return out


def singular_strata(table: DegreeTable) -> dict:
    """For each prime dividing some degree, the set of coordinate subsets
    whose degree it divides.  Reporting only; no geometry is inferred."""
    if any(d <= 0 for d in table.degrees):
        raise NonPositiveDegree("strata need positive degrees")
    primes = set()
    for d in table.degrees:
        primes.update(_prime_factors(d))
    return {
        p: frozenset(I for I, d in table.items() if d % p == 0)
        for p in sorted(primes)
    }


def complement_basis(n, k):
    """Dual-side basis and label bijection for the complement isomorphism.

    Returns (alt_basis, bijection): alt_basis is the (n+1)x(n+1) matrix in
    the same row coordinates as param_basis whose columns express the basis
    of the complementary exterior power (negated difference pattern, last
    row alpha of the complementary index repeated kc-1 times then beta of
    it repeated k+1 times); bijection maps each k-subset to its complement.
    """
    _check_range(n, k)
    kc = n + 1 - k
    alpha_c, beta_c = alpha_beta(n, kc)
    rows = [
        [(-1 if j == i else (1 if j == i + 1 else 0)) for j in range(n + 1)]
        for i in range(n)
    ]
    rows.append([alpha_c] * (kc - 1) + [beta_c] * (k + 1))
    alt = IntMatrix.from_rows(rows)
    universe = set(range(n + 1))
    bijection = {
        I: tuple(sorted(universe - set(I))) for I in _subsets(n, k)
    }
    return alt, bijection
