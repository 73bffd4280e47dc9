"""Hilbert series of the graded coordinate rings, computed along two
independent routes: a closed alternating-sum formula grouped by coordinate
label, and a direct evaluation over the symmetric group driven by the
coweight pairing machinery.  Repeated weights make single-variable
denominators vanish, so both routes assemble everything in two variables
(t for the degree, z for a strictly increasing tie-breaking grading) and
take an exact z -> 1 limit before expanding.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations, permutations
from math import gcd

from .errors import (
    BadRange,
    BudgetExceeded,
    LimitDoesNotExist,
    NonInvertibleDenominator,
    NonPolynomialTail,
    NotPositive,
    WindowTooShort,
)
from .grading import GradingParams, degrees, is_positive
from .root_data import CoweightVector, RepSpec

# Largest n the factorial-size formula paths accept unless overridden.
DEFAULT_FORMULA_BUDGET = 7


def _exp_add(e1, e2):
    if isinstance(e1, int):
        return e1 + e2
    return tuple(x + y for x, y in zip(e1, e2))


@dataclass(frozen=True)
class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Exponents are either all integers (univariate in t) or all pairs
    (univariate exponent, tie-breaker exponent) for the bivariate form.
    coeffs is a sorted tuple of (exponent, coefficient) pairs with no
    zero coefficients.
    """

    coeffs: tuple

    def __post_init__(self):
        coeffs = []
        arity = None
        seen = set()
        for exp, c in self.coeffs:
            if not isinstance(c, int) or c == 0:
                raise ValueError("coefficients must be nonzero integers")
            if not isinstance(exp, int):
                exp = tuple(exp)
                if len(exp) != 2 or not all(isinstance(x, int) for x in exp):
                    raise ValueError("exponents must be ints or int pairs")
            this = 1 if isinstance(exp, int) else 2
            if arity is None:
                arity = this
            elif arity != this:
                raise ValueError("mixed exponent arities")
            if exp in seen:
                raise ValueError("duplicate exponent")
            seen.add(exp)
            coeffs.append((exp, c))
        if [e for e, _ in coeffs] != sorted(e for e, _ in coeffs):
            raise ValueError("coefficients must be sorted by exponent")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted((e, c) for e, c in d.items() if c != 0)))

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls.from_dict({exp: coeff})

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def arity(self):
        if self.is_zero:
            return None
        exp = self.coeffs[0][0]
        return 1 if isinstance(exp, int) else len(exp)

    def as_dict(self):
        return dict(self.coeffs)

    def coefficient(self, exp):
        if not isinstance(exp, int):
            exp = tuple(exp)
        return self.as_dict().get(exp, 0)

    def add(self, other):
        out = self.as_dict()
        for e, c in other.coeffs:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    def neg(self):
        return LaurentPoly(tuple((e, -c) for e, c in self.coeffs))

    def sub(self, other):
        return self.add(other.neg())

    def mul(self, other):
        out = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = _exp_add(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    def content(self):
        return reduce(gcd, (abs(c) for _, c in self.coeffs), 0)

    def divide_integer(self, g):
        if any(c % g for _, c in self.coeffs):
            raise ValueError(f"coefficients are not all divisible by {g}")
        return LaurentPoly(tuple((e, c // g) for e, c in self.coeffs))

    def valuation(self):
        if self.is_zero or self.arity != 1:
            raise ValueError("valuation needs a nonzero univariate polynomial")
        return self.coeffs[0][0]

    def degree(self):
        if self.is_zero or self.arity != 1:
            raise ValueError("degree needs a nonzero univariate polynomial")
        return self.coeffs[-1][0]

    def shift(self, exp):
        return LaurentPoly(tuple(sorted(
            (_exp_add(e, exp), c) for e, c in self.coeffs
        )))

    def eval_z1(self):
        """Specialise the tie-breaker variable to 1, collapsing to the
        univariate form."""
        if not self.is_zero and self.arity != 2:
            raise ValueError("eval_z1 needs a bivariate polynomial")
        out = {}
        for (et, _), c in self.coeffs:
            out[et] = out.get(et, 0) + c
        return LaurentPoly.from_dict(out)

    def divide_z_minus_1(self):
        """Exact quotient by (z - 1), or None when the polynomial does not
        vanish at z = 1."""
        if self.is_zero:
            return self
        if self.arity != 2:
            raise ValueError("divide_z_minus_1 needs a bivariate polynomial")
        if not self.eval_z1().is_zero:
            return None
        by_z = {}
        for (et, ez), c in self.coeffs:
            by_z.setdefault(ez, {})[et] = c
        zmax = max(by_z)
        zmin = min(by_z)
        out = {}
        suffix = {}
        for j in range(zmax, zmin, -1):
            for et, c in by_z.get(j, {}).items():
                suffix[et] = suffix.get(et, 0) + c
            for et, c in suffix.items():
                if c:
                    out[(et, j - 1)] = c
        return LaurentPoly.from_dict(out)


@dataclass(frozen=True)
class HilbertResult:
    """A rational Hilbert series: normalised numerator and denominator
    (univariate, denominator constant term +-1 at exponent 0) together with
    the expanded coefficients, which must satisfy the exact convolution
    identity denominator * series = numerator through the window."""

    numerator: LaurentPoly
    denominator: LaurentPoly
    series: tuple

    def __post_init__(self):
        object.__setattr__(self, "series", tuple(int(d) for d in self.series))
        den = self.denominator
        if den.is_zero or den.arity != 1 or den.valuation() != 0:
            raise ValueError("denominator must be univariate with valuation 0")
        if den.coefficient(0) not in (1, -1):
            raise ValueError("denominator constant term must be +1 or -1")
        num = self.numerator
        if not num.is_zero and (num.arity != 1 or num.valuation() < 0):
            raise ValueError("numerator must be a univariate polynomial")
        for m in range(len(self.series)):
            conv = sum(
                den.coefficient(j) * self.series[m - j] for j in range(m + 1)
            )
            if conv != num.coefficient(m):
                raise ValueError(f"convolution identity fails at degree {m}")


def _parity(sigma):
    seen = [False] * len(sigma)
    sign = 1
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = sigma[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _check_permutation(sigma, n):
    if tuple(sorted(sigma)) != tuple(range(n + 1)):
        raise BadRange(f"not a permutation of 0..{n}: {sigma}")


def perm_exponent(sigma, a):
    """The integer sum of (i - sigma^{-1}(i)) * a_i over all positions."""
    sigma = tuple(sigma)
    _check_permutation(sigma, len(a) - 1)
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return sum((i - inv[i]) * a[i] for i in range(len(a)))


@dataclass(frozen=True)
class SignedPermTerm:
    """One permutation's contribution to the alternating sums: the
    permutation, its parity sign, and the exponent of its monomial under
    the weight vector (f_value) and under the tie-breaker (f_tiebreak)."""

    sigma: tuple
    sign: int
    f_value: int
    f_tiebreak: int

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        _check_permutation(self.sigma, len(self.sigma) - 1)
        if self.sign != _parity(self.sigma):
            raise BadRange("sign must equal the permutation parity")


def perm_terms(n, a):
    """All (n+1)! signed permutation terms for the weight vector a, with
    the tie-breaker exponents taken along (0, 1, ..., n)."""
    if len(a) != n + 1:
        raise BadRange(f"need {n + 1} weights, got {len(a)}")
    delta = tuple(range(n + 1))
    out = []
    for sigma in permutations(range(n + 1)):
        out.append(SignedPermTerm(
            sigma,
            _parity(sigma),
            perm_exponent(sigma, a),
            perm_exponent(sigma, delta),
        ))
    return tuple(out)


def _binomial_factor(exp_pair):
    return LaurentPoly.from_dict({(0, 0): 1, exp_pair: -1})


def root_factor_product(n, a):
    """The bivariate product over positions i < j of
    (1 - t^(a_j - a_i) z^(j - i))."""
    if len(a) != n + 1:
        raise BadRange(f"need {n + 1} weights, got {len(a)}")
    out = LaurentPoly.monomial((0, 0))
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            out = out.mul(_binomial_factor((a[j] - a[i], j - i)))
    return out


def _mu_ambient(n, weights):
    """Ambient coordinates of the rational coweight carrying the grading:
    the telescoped fundamental-coweight combination with coefficients
    weights[i-1] - weights[i], pure of trace."""
    spec = RepSpec("A", n, 1)
    coords = [weights[i - 1] - weights[i] for i in range(1, n + 1)] + [0]
    return CoweightVector.from_omega_tau(spec, coords).coords_in_ambient


def _degree_offset(n, k, weights):
    """Uniform degree shift contributed by the central part of the grading
    combination on the k-th alternating power."""
    total = sum(weights)
    return Fraction(k * total, n + 1) - sum(weights[: k - 1])


def _as_int(frac):
    assert frac.denominator == 1, f"expected an integer, got {frac}"
    return int(frac)


def weyl_denominator(n, a):
    """The alternating sum over all permutations of
    sign * t^(rho exponent) z^(tie-breaker rho exponent), where the rho
    exponent is the coweight pairing of sigma(rho) - rho with the grading
    combination.  Equals root_factor_product(n, a) by the classical
    denominator identity; computing it independently is the point."""
    if len(a) != n + 1:
        raise BadRange(f"need {n + 1} weights, got {len(a)}")
    delta = tuple(range(n + 1))
    u_a = _mu_ambient(n, a)
    u_d = _mu_ambient(n, delta)
    out = {}
    for sigma in permutations(range(n + 1)):
        inv = [0] * (n + 1)
        for i, s in enumerate(sigma):
            inv[s] = i
        e_a = _as_int(sum((t - inv[t]) * u_a[t] for t in range(n + 1)))
        e_d = _as_int(sum((t - inv[t]) * u_d[t] for t in range(n + 1)))
        out[(e_a, e_d)] = out.get((e_a, e_d), 0) + _parity(sigma)
    return LaurentPoly.from_dict(out)


def _divide_binomial(poly, exp_pair):
    """Exact quotient of a bivariate polynomial by (1 - t^e z^d) for a
    factor known to divide it.  Processes exponents in the (z, t) order,
    in which the divisor's exponent is strictly positive."""
    key = (exp_pair[1], exp_pair[0])
    if key <= (0, 0):
        raise ValueError("divisor exponent must be positive in (z, t) order")
    work = poly.as_dict()
    top = max((e[1], e[0]) for e in work)
    quotient = {}
    heap = [(e[1], e[0]) for e in work]
    heapq.heapify(heap)
    while heap:
        ez, et = heapq.heappop(heap)
        c = work.get((et, ez), 0)
        if c == 0:
            work.pop((et, ez), None)
            continue
        if (ez, et) > top:
            raise ValueError("binomial does not divide the polynomial")
        quotient[(et, ez)] = c
        del work[(et, ez)]
        bumped = (et + exp_pair[0], ez + exp_pair[1])
        if bumped in work:
            work[bumped] += c
        else:
            work[bumped] = c
            heapq.heappush(heap, (bumped[1], bumped[0]))
    return LaurentPoly.from_dict(quotient)


def limit_z1(num, den):
    """Exact z -> 1 specialisation of the bivariate fraction num/den.

    While the denominator vanishes at z = 1, divides both parts exactly by
    (z - 1); once it stops vanishing, returns the pair of univariate
    specialisations.  LimitDoesNotExist reports a numerator that stopped
    being divisible while the denominator still vanishes, i.e. a genuine
    pole; the series pipeline never produces one.
    """
    if den.is_zero:
        raise LimitDoesNotExist("denominator is identically zero")
    while den.eval_z1().is_zero:
        den = den.divide_z_minus_1()
        reduced = num.divide_z_minus_1()
        if reduced is None:
            raise LimitDoesNotExist(
                "numerator is not divisible by (z - 1) while the "
                "denominator still vanishes at z = 1"
            )
        num = reduced
    return num.eval_z1(), den.eval_z1()


def _normalise(num, den):
    """Scale numerator and denominator by a common sign and monomial so the
    denominator has constant term +1 at exponent 0."""
    if den.is_zero or den.arity != 1:
        raise NonInvertibleDenominator("denominator must be nonzero univariate")
    if not num.is_zero and num.arity != 1:
        raise ValueError("numerator and denominator arities must match")
    v = den.valuation()
    lead = den.coefficient(v)
    if lead not in (1, -1):
        raise NonInvertibleDenominator(
            f"lowest denominator coefficient is {lead}, need +1 or -1"
        )
    den = den.shift(-v)
    num = num if num.is_zero else num.shift(-v)
    if lead == -1:
        den = den.neg()
        num = num.neg()
    return num, den


def _expand_normalised(num, den, order):
    if not num.is_zero and num.valuation() < 0:
        raise ValueError("the quotient is not a power series")
    num_c = num.as_dict()
    den_c = den.as_dict()
    out = []
    for m in range(order + 1):
        d = num_c.get(m, 0)
        d -= sum(den_c[j] * out[m - j] for j in den_c if 1 <= j <= m)
        out.append(d)
    return tuple(out)


def expand(num, den, order):
    """Coefficients d_0..d_order of num/den as a power series, by the exact
    linear recurrence after Laurent normalisation of the denominator."""
    if not isinstance(order, int) or order < 0:
        raise BadRange("order must be a nonnegative integer")
    num, den = _normalise(num, den)
    return _expand_normalised(num, den, order)


def _check_series_args(p, order, budget):
    if not isinstance(order, int) or order < 0:
        raise BadRange("order must be a nonnegative integer")
    if not is_positive(p):
        raise NotPositive("the series is defined for positive gradings only")
    limit = DEFAULT_FORMULA_BUDGET if budget is None else budget
    if p.n > limit:
        raise BudgetExceeded(
            f"n = {p.n} exceeds the formula budget {limit}; "
            "the sum has (n+1)! terms"
        )


def _grand_ratio(numerators, exp_pairs, den_core):
    """Assemble sum_i numerators[i] / (1 - t^e z^d)_i over the common
    denominator: returns (sum_i numerators[i] * prod_{j != i} factor_j,
    den_core * prod_i factor_i)."""
    prod_all = LaurentPoly.monomial((0, 0))
    for pair in exp_pairs:
        prod_all = prod_all.mul(_binomial_factor(pair))
    quotients = {}
    num = LaurentPoly.from_dict({})
    for poly, pair in zip(numerators, exp_pairs):
        if poly.is_zero:
            continue
        if pair not in quotients:
            quotients[pair] = _divide_binomial(prod_all, pair)
        num = num.add(poly.mul(quotients[pair]))
    return num, den_core.mul(prod_all)


def _finish(num, den, order):
    num, den = limit_z1(num, den)
    g = gcd(num.content(), den.content())
    if g > 1:
        num = num.divide_integer(g)
        den = den.divide_integer(g)
    num, den = _normalise(num, den)
    return HilbertResult(num, den, _expand_normalised(num, den, order))


def closed_series(p: GradingParams, order, budget=None):
    """Hilbert series by the closed alternating formula: terms are grouped
    by the k-subset image of 0..k-1, each group contributing an alternating
    polynomial over a denominator factor (1 - t^deg z^tiedeg), the whole
    sum sitting over the product of root factors."""
    _check_series_args(p, order, budget)
    n, k, a = p.n, p.k, p.a
    delta = tuple(range(n + 1))
    table = degrees(p)
    tie_table = degrees(GradingParams(n, k, delta))
    labels = table.labels
    position = {label: i for i, label in enumerate(labels)}
    grouped = [{} for _ in labels]
    for term in perm_terms(n, a):
        image = tuple(sorted(term.sigma[:k]))
        bucket = grouped[position[image]]
        key = (term.f_value, term.f_tiebreak)
        bucket[key] = bucket.get(key, 0) + term.sign
    numerators = [LaurentPoly.from_dict(bucket) for bucket in grouped]
    exp_pairs = list(zip(table.degrees, tie_table.degrees))
    num, den = _grand_ratio(numerators, exp_pairs, root_factor_product(n, a))
    return _finish(num, den, order)


def weyl_series(p: GradingParams, order, budget=None):
    """Hilbert series by direct evaluation over the symmetric group, with
    every exponent obtained from coweight pairings: numerator exponents
    from sigma(rho) - rho, denominator degrees from the grading coweight on
    the permuted fundamental weight plus the central offset, and the
    alternating rho sum as the denominator core."""
    _check_series_args(p, order, budget)
    n, k, a = p.n, p.k, p.a
    delta = tuple(range(n + 1))
    u_a, u_d = _mu_ambient(n, a), _mu_ambient(n, delta)
    d_a, d_d = _degree_offset(n, k, a), _degree_offset(n, k, delta)
    labels = tuple(combinations(range(n + 1), k))
    position = {label: i for i, label in enumerate(labels)}
    exp_pairs = [
        (
            _as_int(sum(u_a[t] for t in label) + d_a),
            _as_int(sum(u_d[t] for t in label) + d_d),
        )
        for label in labels
    ]
    grouped = [{} for _ in labels]
    core = {}
    for sigma in permutations(range(n + 1)):
        inv = [0] * (n + 1)
        for i, s in enumerate(sigma):
            inv[s] = i
        sign = _parity(sigma)
        e_a = _as_int(sum((t - inv[t]) * u_a[t] for t in range(n + 1)))
        e_d = _as_int(sum((t - inv[t]) * u_d[t] for t in range(n + 1)))
        core[(e_a, e_d)] = core.get((e_a, e_d), 0) + sign
        image = tuple(sorted(sigma[:k]))
        bucket = grouped[position[image]]
        bucket[(e_a, e_d)] = bucket.get((e_a, e_d), 0) + sign
    numerators = [LaurentPoly.from_dict(bucket) for bucket in grouped]
    num, den = _grand_ratio(numerators, exp_pairs, LaurentPoly.from_dict(core))
    return _finish(num, den, order)


def recover_numerator(series, degree_multiset):
    """Convolve a series window with the product of (1 - t^deg) over the
    coordinate degrees; if the window is long enough (coefficients beyond
    the total degree, plus a safety margin of 5) and the tail vanishes,
    the result is the numerator over the product denominator."""
    degs = sorted(int(d) for d in degree_multiset)
    if not degs or degs[0] < 1:
        raise BadRange("coordinate degrees must be positive integers")
    total = sum(degs)
    if len(series) < total + 6:
        raise WindowTooShort(
            f"need at least {total + 6} coefficients, got {len(series)}"
        )
    den = LaurentPoly.monomial(0)
    for d in degs:
        den = den.mul(LaurentPoly.from_dict({0: 1, d: -1}))
    den_c = den.as_dict()
    conv = [
        sum(c * series[m - e] for e, c in den_c.items() if e <= m)
        for m in range(len(series))
    ]
    bad = [m for m in range(total + 1, len(series)) if conv[m] != 0]
    if bad:
        raise NonPolynomialTail(
            f"nonzero coefficients beyond degree {total} at {bad[:4]}"
        )
    return LaurentPoly.from_dict({m: conv[m] for m in range(total + 1)})
