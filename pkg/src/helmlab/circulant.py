"""Circulant matrices, delta-symmetric vectors, and their spectra.

A circulant matrix is determined by its first row; every later row is
the cyclic right-shift of the previous one.  Products of circulants are
again circulant, and the product spec is the first row times the other
matrix.  Spectra come from evaluating the first-row polynomial at the
roots of unity; this is the single floating-point convenience in the
package and is never used to gate an exact claim.

Also hosts the two special circulants the helm distance matrix is built
from: the signless Laplacian of the rim cycle, spec (2,1,0,...,0,1), and
the rim distance circulant, spec (0,1,2,...,2,1), plus the tridiagonal
comparison matrix with 2 on the diagonal and 1 off it.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_core import (
    RatMatrix,
    Scalar,
    Vector,
    determinant,
    dot,
    frac,
    vec,
)

_ZERO = Fraction(0)


class EmptySpecError(ValueError):
    """A circulant spec needs at least one entry."""


class LengthMismatchError(ValueError):
    """Circulant product requires specs of equal length."""


class BadPatternError(ValueError):
    """Spec does not have the required (a, b, 0, ..., 0, b) sparsity."""


class KTooSmallError(ValueError):
    """Tridiagonal order must be at least 1."""


@dataclass(frozen=True)
class CirculantSpec:
    """First row of a circulant matrix."""

    first_row: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, "first_row", vec(self.first_row))
        if not self.first_row:
            raise EmptySpecError("circulant spec must be nonempty")

    def __len__(self) -> int:
        return len(self.first_row)


@dataclass(frozen=True)
class DeltaVector:
    """Vector whose last k-1 coordinates are symmetric: z[i] = z[k-i] (0-based).

    Equivalently the spec of a symmetric circulant; the first coordinate
    is unconstrained.
    """

    coords: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", vec(self.coords))
        if not is_delta(self.coords):
            raise ValueError(f"vector is not delta-symmetric: {self.coords}")

    def __len__(self) -> int:
        return len(self.coords)


def is_delta(z: Sequence[Scalar]) -> bool:
    """True iff the tail of z reads the same forwards and backwards.

    In 1-based terms: z_i = z_{k+2-i} for i = 2..k where k = len(z).
    """
    values = vec(z)
    k = len(values)
    return all(values[i] == values[k - i] for i in range(1, k))


def materialize(spec: CirculantSpec) -> RatMatrix:
    """Dense circulant matrix: row i is the right-shift of the spec by i."""
    row = spec.first_row
    k = len(row)
    return RatMatrix(k, k, (row[(j - i) % k] for i in range(k) for j in range(k)))


def circulant_product(a: CirculantSpec, b: CirculantSpec) -> CirculantSpec:
    """Spec of the product: first row of A times the matrix B.

    Circulants of equal order commute, so this is also the spec of B A.
    """
    if len(a) != len(b):
        raise LengthMismatchError(f"specs of length {len(a)} and {len(b)}")
    ar, br = a.first_row, b.first_row
    k = len(ar)
    # entry j of a' B = sum_i a_i * B[i][j] with B[i][j] = br[(j - i) mod k]
    out = [sum((ar[i] * br[(j - i) % k] for i in range(k)), _ZERO) for j in range(k)]
    return CirculantSpec(tuple(out))


def circulant_eigenvalues(spec: CirculantSpec) -> list[complex]:
    """Eigenvalues f(w^j), j = 0..k-1, with f the first-row polynomial.

    Direct polynomial evaluation at the k-th roots of unity, in order of
    increasing j.  Floating point; documented tolerance 1e-9 against a
    generic dense eigensolver at the orders used here.
    """
    coeffs = [float(c) for c in spec.first_row]
    k = len(coeffs)
    out: list[complex] = []
    for j in range(k):
        omega_j = cmath.exp(2j * cmath.pi * j / k)
        acc = 0j
        power = 1 + 0j
        for c in coeffs:
            acc += c * power
            power *= omega_j
        out.append(acc)
    return out


def delta_closure_check(z: DeltaVector, g: CirculantSpec) -> bool:
    """Check that z' G lands back in the delta-symmetric set.

    g must have the sparsity pattern (a, b, 0, ..., 0, b); the closure
    then holds for every delta-symmetric z, and this function verifies it
    by direct multiplication.
    """
    pattern = g.first_row
    k = len(pattern)
    if k < 2 or pattern[1] != pattern[k - 1] or any(
        pattern[i] != 0 for i in range(2, k - 1)
    ):
        raise BadPatternError(f"spec {pattern} is not of the form (a, b, 0, ..., 0, b)")
    if len(z) != k:
        raise LengthMismatchError(f"vector of length {len(z)} against spec of length {k}")
    g_mat = materialize(g)
    product = tuple(dot(z.coords, g_mat.column(j)) for j in range(k))
    return is_delta(product)


def tridiagonal_211_det(k: int) -> Fraction:
    """Determinant of the k x k tridiagonal matrix with 2 on the diagonal
    and 1 on both off-diagonals; equals k + 1."""
    if k < 1:
        raise KTooSmallError(f"order must be >= 1, got {k}")
    t = RatMatrix(
        k,
        k,
        (
            2 if i == j else (1 if abs(i - j) == 1 else 0)
            for i in range(k)
            for j in range(k)
        ),
    )
    return determinant(t)


# -- named specs used throughout the package -------------------------------


def cycle_signless_laplacian_spec(order: int) -> CirculantSpec:
    """Spec (2, 1, 0, ..., 0, 1): twice the identity plus the cycle adjacency."""
    if order < 2:
        raise EmptySpecError(f"cycle needs order >= 2, got {order}")
    row = [frac(0)] * order
    row[0] = frac(2)
    row[1] += 1
    row[order - 1] += 1
    return CirculantSpec(tuple(row))


def rim_distance_spec(order: int) -> CirculantSpec:
    """Spec (0, 1, 2, ..., 2, 1): pairwise distances around a wheel rim,
    where any two non-adjacent rim vertices are 2 apart via the hub."""
    if order < 2:
        raise EmptySpecError(f"rim needs order >= 2, got {order}")
    row = [frac(2)] * order
    row[0] = frac(0)
    row[1] = frac(1)
    row[order - 1] = frac(1)
    return CirculantSpec(tuple(row))


def alternating_signs(length: int) -> Vector:
    """The vector (1, -1, 1, -1, ...)."""
    return tuple(Fraction(1) if i % 2 == 0 else Fraction(-1) for i in range(length))
