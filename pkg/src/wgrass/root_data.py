"""Root-system data for types A, B and D, weight systems of the supported
representations, and the coweight machinery turning a one-parameter subgroup
into per-coordinate degrees.

Supported representations: exterior powers of the standard representation
for type A, the standard representation for types B and D.  Coordinates are
labelled by k-subsets of {0..n} (type A, lexicographic) or by X0, X1, ...
(types B and D, index order); the label order fixes the ambient coordinate
system used by every lattice computation downstream.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import NonIntegralCoweight, UnsupportedType
from .exact_linalg import IntMatrix, RatMatrix, lattice_intersect


@dataclass(frozen=True)
class RepSpec:
    """A simple group type with a chosen representation.

    rep is the exterior power k for type A (1 <= k <= rank) and the string
    "standard" for types B and D.
    """

    group_type: str
    rank: int
    rep: object

    def __post_init__(self):
        _check_type_rank(self.group_type, self.rank)
        if self.group_type == "A":
            if not isinstance(self.rep, int) or not 1 <= self.rep <= self.rank:
                raise UnsupportedType(
                    "type A supports exterior powers 1..rank, got "
                    f"{self.rep!r}"
                )
        else:
            if self.rep != "standard":
                raise UnsupportedType(
                    f"type {self.group_type} supports only the standard "
                    f"representation, got {self.rep!r}"
                )

    @property
    def dimension(self):
        if self.group_type == "A":
            return comb(self.rank + 1, self.rep)
        if self.group_type == "B":
            return 2 * self.rank + 1
        return 2 * self.rank

    @property
    def coordinate_labels(self):
        return _labels(self)


@dataclass(frozen=True)
class RootSystemData:
    """Cartan matrix, its exact inverse, and the isogeny-type flags of the
    group acting in the construction."""

    cartan: IntMatrix
    cartan_inv: RatMatrix
    is_adjoint: bool
    is_simply_connected: bool


@dataclass(frozen=True)
class CoweightVector:
    """One coweight in two coordinate systems: coefficients over
    (omega_1, ..., omega_rank, dim(W)^{-1} tau) and the ambient diagonal
    vector acting on the labelled coordinates.

    Build through from_omega_tau or from_ambient so the two stay consistent.
    """

    coords_in_omega_tau: tuple
    coords_in_ambient: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "coords_in_omega_tau",
            tuple(Fraction(x) for x in self.coords_in_omega_tau),
        )
        object.__setattr__(
            self,
            "coords_in_ambient",
            tuple(Fraction(x) for x in self.coords_in_ambient),
        )

    @classmethod
    def from_omega_tau(cls, spec: RepSpec, coords):
        coords = tuple(Fraction(x) for x in coords)
        gens = build_Lpsi(spec)
        ambient = gens.mul_vec(coords)
        return cls(coords, ambient)

    @classmethod
    def from_ambient(cls, spec: RepSpec, ambient):
        ambient = tuple(Fraction(x) for x in ambient)
        gens = build_Lpsi(spec)
        coords = gens.solve(ambient)
        return cls(coords, ambient)


def _check_type_rank(group_type, rank):
    minimum = {"A": 1, "B": 2, "D": 3}.get(group_type)
    if minimum is None:
        raise UnsupportedType(f"unsupported group type {group_type!r}")
    if not isinstance(rank, int) or rank < minimum:
        raise UnsupportedType(
            f"type {group_type} needs integer rank >= {minimum}, got {rank!r}"
        )


@lru_cache(maxsize=None)
def _labels(spec):
    if spec.group_type == "A":
        return tuple(combinations(range(spec.rank + 1), spec.rep))
    return tuple(f"X{i}" for i in range(spec.dimension))


def cartan_matrix(group_type, rank) -> IntMatrix:
    """Cartan matrix, entry (i, j) the pairing of simple root i with simple
    coroot j.  With this orientation the B-series matrix carries its -2 in
    the next-to-last row."""
    _check_type_rank(group_type, rank)
    entries = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        entries[i][i] = 2
    if group_type in ("A", "B"):
        for i in range(rank - 1):
            entries[i][i + 1] = -1
            entries[i + 1][i] = -1
        if group_type == "B":
            entries[rank - 2][rank - 1] = -2
    else:
        for i in range(rank - 2):
            entries[i][i + 1] = -1
            entries[i + 1][i] = -1
        entries[rank - 3][rank - 1] = -1
        entries[rank - 1][rank - 3] = -1
    return IntMatrix.from_rows(entries)


def cartan_inverse(group_type, rank) -> RatMatrix:
    """Exact inverse of the Cartan matrix."""
    return RatMatrix.from_int(cartan_matrix(group_type, rank)).inverse()


def root_system_data(group_type, rank) -> RootSystemData:
    _check_type_rank(group_type, rank)
    return RootSystemData(
        cartan=cartan_matrix(group_type, rank),
        cartan_inv=cartan_inverse(group_type, rank),
        is_adjoint=group_type == "B",
        is_simply_connected=group_type == "A",
    )


def rep_weights(spec: RepSpec) -> dict:
    """Torus weight of every coordinate, as an exponent tuple.

    Type A: label I maps to the 0/1 indicator tuple of I over e_0..e_n.
    Types B/D: X_0..X_{r-1} carry +1 in slot 1..r, X_r..X_{2r-1} carry -1
    there, and the final B coordinate carries the zero weight.
    """
    out = {}
    if spec.group_type == "A":
        size = spec.rank + 1
        for label in spec.coordinate_labels:
            out[label] = tuple(int(i in label) for i in range(size))
        return out
    r = spec.rank
    for idx, label in enumerate(spec.coordinate_labels):
        if idx < r:
            out[label] = tuple(int(j == idx) for j in range(r))
        elif idx < 2 * r:
            out[label] = tuple(-int(j == idx - r) for j in range(r))
        else:
            out[label] = (0,) * r
    return out


def _coroot_vectors(spec: RepSpec):
    """Simple coroots as vectors in the same coordinate space as the weight
    tuples of rep_weights."""
    if spec.group_type == "A":
        size = spec.rank + 1
        return [
            tuple(
                1 if t == j else (-1 if t == j + 1 else 0) for t in range(size)
            )
            for j in range(spec.rank)
        ]
    r = spec.rank
    vecs = [
        tuple(1 if t == j else (-1 if t == j + 1 else 0) for t in range(r))
        for j in range(r - 1)
    ]
    if spec.group_type == "B":
        # The short simple root contributes a doubled coroot.
        vecs.append(tuple(2 if t == r - 1 else 0 for t in range(r)))
    else:
        vecs.append(tuple(1 if t in (r - 2, r - 1) else 0 for t in range(r)))
    return vecs


def coroot_images(spec: RepSpec) -> IntMatrix:
    """Images of the simple coroots as diagonal coweights on the labelled
    coordinates: column j holds the pairing of every coordinate weight with
    simple coroot j."""
    weights = rep_weights(spec)
    coroots = _coroot_vectors(spec)
    cols = [
        tuple(
            sum(w * c for w, c in zip(weights[label], coroot))
            for label in spec.coordinate_labels
        )
        for coroot in coroots
    ]
    return IntMatrix.from_columns(cols, rows=spec.dimension)


def build_Lpsi(spec: RepSpec) -> RatMatrix:
    """Generator matrix of the rational coweight span: the images of the
    fundamental coweights (inverse-Cartan combinations of the coroot images)
    followed by the central column with every entry 1/dim(W)."""
    images = RatMatrix.from_int(coroot_images(spec))
    omega_block = images.mul(cartan_inverse(spec.group_type, spec.rank))
    dim = spec.dimension
    tau = tuple(Fraction(1, dim) for _ in range(dim))
    return RatMatrix.from_columns(omega_block.columns() + [tau])


def coweight_lattice(spec: RepSpec):
    """Canonical basis of the integral coweights: the intersection of the
    rational span of build_Lpsi with the ambient integer lattice."""
    return lattice_intersect(build_Lpsi(spec), spec.dimension)


def degrees_from_coweight(spec: RepSpec, c: CoweightVector) -> dict:
    """Degree of each coordinate under an integral coweight: its ambient
    entry at that coordinate."""
    degs = {}
    for label, x in zip(spec.coordinate_labels, c.coords_in_ambient):
        if x.denominator != 1:
            raise NonIntegralCoweight(
                f"ambient coordinate at {label} is {x}, not an integer"
            )
        degs[label] = int(x)
    return degs
