"""Closed forms for the inverse of a helm graph's distance matrix.

For the helm graph on 2n-1 vertices the inverse (n even) and the
Moore-Penrose inverse (n odd) of the distance matrix D both take the
shape

    -1/2 * L  +  4/(3(n-1)) * w w'

where w = (5-n, -e', 2e')/4 and L is a symmetric matrix with zero row
sums, built from bordered circulant blocks over the rim.  This module
constructs every ingredient of that formula; each constructor verifies
its defining identity exactly (rational arithmetic, no tolerance) before
returning, and the final formulas are checked against the generic
elimination / full-rank-factorization oracles from exact_core.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .circulant import (
    CirculantSpec,
    alternating_signs,
    cycle_signless_laplacian_spec,
    is_delta,
    materialize,
)
from .exact_core import (
    RatMatrix,
    Vector,
    VerificationError,
    dot,
    inverse,
    ones_vector,
    penrose_check,
    pseudoinverse,
    scale_vector,
    vec,
)
from .graphs import NTooSmallError, helm_distance_block


class NotOddError(ValueError):
    """Operation is defined for odd n only."""


class NotEvenError(ValueError):
    """Operation is defined for even n only."""


def rank_one_scale(n: int) -> Fraction:
    """The coefficient 4/(3(n-1)) of the rank-one term."""
    return Fraction(4, 3 * (n - 1))


@dataclass(frozen=True)
class HelmVectors:
    """The vectors attached to the helm graph of parameter n.

    w solves D w = (3(n-1)/4) e and has e'w = 1; alpha = 4/(3(n-1)).
    For odd n the distance matrix is singular with one-dimensional
    kernel spanned by kernel_vector = (0, v', 0')' where v alternates
    +1/-1 around the rim.
    """

    n: int
    m: Optional[int]
    w: Vector
    alpha: Fraction
    alternating: Vector
    kernel_vector: Optional[Vector]


def make_w_alpha(n: int) -> HelmVectors:
    """Build w = (5-n, -e', 2e')/4 and alpha = 4/(3(n-1)), verified against D."""
    if n < 4:
        raise NTooSmallError(f"helm graphs need n >= 4, got {n}")
    k = n - 1
    quarter = Fraction(1, 4)
    w = (
        (quarter * (5 - n),)
        + tuple([-quarter] * k)
        + tuple([2 * quarter] * k)
    )
    alpha = rank_one_scale(n)
    v = alternating_signs(k)
    d = helm_distance_block(n)
    if d.mul_vector(w) != scale_vector(1 / alpha, ones_vector(2 * n - 1)):
        raise VerificationError("D w != (1/alpha) e")
    if sum(w, Fraction(0)) != 1:
        raise VerificationError("e'w != 1")
    kernel_vector: Optional[Vector] = None
    m: Optional[int] = None
    if n % 2 == 1:
        m = (n - 1) // 2
        kernel_vector = (Fraction(0),) + v + (Fraction(0),) * k
        if any(x != 0 for x in d.mul_vector(kernel_vector)):
            raise VerificationError("D does not annihilate (0, v', 0')'")
    return HelmVectors(n, m, w, alpha, v, kernel_vector)


@dataclass(frozen=True)
class OddCaseData:
    """Ingredients of the Moore-Penrose closed form for odd n.

    rim_spec (delta-symmetric) and coupling_spec define the circulant
    blocks rim_block and coupling_block; laplacian_like is the bordered
    order-(2n-1) matrix

        [ (n-1)/2   -e'/2      0 ]
        [ -e/2      rim_block  coupling_block ]
        [ 0         coupling_block  I ]
    """

    n: int
    m: int
    coeffs: Vector
    rim_spec: Vector
    coupling_spec: Vector
    rim_block: RatMatrix
    coupling_block: RatMatrix
    laplacian_like: RatMatrix


def _bordered_laplacian(n: int, rim_block: RatMatrix, coupling: RatMatrix) -> RatMatrix:
    k = n - 1
    half_e_row = Fraction(-1, 2) * RatMatrix.ones(1, k)
    half_e_col = Fraction(-1, 2) * RatMatrix.ones(k, 1)
    zeros_row = RatMatrix.zeros(1, k)
    zeros_col = RatMatrix.zeros(k, 1)
    lap = RatMatrix.from_blocks(
        [
            [Fraction(n - 1, 2), half_e_row, zeros_row],
            [half_e_col, rim_block, coupling],
            [zeros_col, coupling, RatMatrix.identity(k)],
        ]
    )
    if not lap.is_symmetric():
        raise VerificationError("bordered matrix is not symmetric")
    if any(s != 0 for s in lap.row_sums()):
        raise VerificationError("bordered matrix does not have zero row sums")
    return lap


def make_odd_case(n: int) -> OddCaseData:
    """Construct the odd-n circulant blocks and the bordered matrix L.

    With m = (n-1)/2, the rim spec is

        x = (n^2+4n-12, a_1, ..., a_m, a_{m-1}, ..., a_1) / (6(n-1)),
        a_k = (-1)^(k+1) * (2m^2 - 6(m-k)^2 + 7),

    and the coupling spec is y = v/(n-1) - e_1 with v the alternating
    sign vector, i.e. (2-n, -1, 1, ..., 1, -1)/(n-1).
    """
    if n % 2 == 0:
        raise NotOddError(f"odd n required, got {n}")
    if n < 5:
        raise NTooSmallError(f"odd case needs n >= 5, got {n}")
    m = (n - 1) // 2
    k = n - 1
    coeffs = tuple(
        Fraction((-1) ** (kk + 1) * (2 * m * m - 6 * (m - kk) ** 2 + 7))
        for kk in range(1, m + 1)
    )
    body = [Fraction(n * n + 4 * n - 12)] + list(coeffs) + list(coeffs[-2::-1])
    denom = Fraction(1, 6 * (n - 1))
    x = tuple(denom * val for val in body)
    v = alternating_signs(k)
    y = tuple(
        val / (n - 1) - (1 if i == 0 else 0) for i, val in enumerate(v)
    )
    if not is_delta(x) or not is_delta(y):
        raise VerificationError("rim or coupling spec is not delta-symmetric")
    rim_block = materialize(CirculantSpec(x))
    coupling_block = materialize(CirculantSpec(y))
    lap = _bordered_laplacian(n, rim_block, coupling_block)
    return OddCaseData(n, m, coeffs, x, y, rim_block, coupling_block, lap)


@dataclass(frozen=True)
class EvenCaseData:
    """Ingredients of the inverse closed form for even n.

    The coupling block degenerates to -I; only the rim block is a
    nontrivial circulant, with delta-symmetric spec rim_spec.
    """

    n: int
    coeffs: Vector
    rim_spec: Vector
    rim_block: RatMatrix
    laplacian_like: RatMatrix


def make_even_case(n: int) -> EvenCaseData:
    """Construct the even-n rim block and the bordered matrix.

    The rim spec is

        z = (n+1, b_1, ..., b_{n/2-1}, b_{n/2-1}, ..., b_1) / 2,
        b_k = (-1)^k * ((n-1) - 2k).
    """
    if n % 2 == 1:
        raise NotEvenError(f"even n required, got {n}")
    if n < 4:
        raise NTooSmallError(f"helm graphs need n >= 4, got {n}")
    half = n // 2
    k = n - 1
    coeffs = tuple(
        Fraction((-1) ** kk * (n - 1 - 2 * kk)) for kk in range(1, half)
    )
    body = [Fraction(n + 1)] + list(coeffs) + list(reversed(coeffs))
    z = tuple(Fraction(1, 2) * val for val in body)
    if not is_delta(z):
        raise VerificationError("rim spec is not delta-symmetric")
    rim_block = materialize(CirculantSpec(z))
    lap = _bordered_laplacian(n, rim_block, -RatMatrix.identity(k))
    return EvenCaseData(n, coeffs, z, rim_block, lap)


def _formula_matrix(lap: RatMatrix, w: Vector, alpha: Fraction) -> RatMatrix:
    return Fraction(-1, 2) * lap + alpha * RatMatrix.outer(w, w)


def closed_form_inverse(n: int) -> RatMatrix:
    """Inverse of the distance matrix for even n, as -L/2 + alpha ww'.

    The result is checked for exact equality against the elimination
    inverse before being returned.
    """
    if n % 2 == 1:
        raise NotEvenError(f"even n required, got {n}")
    data = make_even_case(n)
    vectors = make_w_alpha(n)
    result = _formula_matrix(data.laplacian_like, vectors.w, vectors.alpha)
    d = helm_distance_block(n)
    if result != inverse(d):
        raise VerificationError("closed form disagrees with the elimination inverse")
    return result


def closed_form_mp_inverse(n: int) -> RatMatrix:
    """Moore-Penrose inverse of the distance matrix for odd n.

    Same shape -L/2 + alpha ww' as the even case; checked exactly against
    all four Penrose conditions and against the full-rank-factorization
    pseudoinverse before being returned.
    """
    if n % 2 == 0:
        raise NotOddError(f"odd n required, got {n}")
    data = make_odd_case(n)
    vectors = make_w_alpha(n)
    result = _formula_matrix(data.laplacian_like, vectors.w, vectors.alpha)
    d = helm_distance_block(n)
    if not penrose_check(d, result):
        raise VerificationError("closed form fails a Penrose condition")
    if result != pseudoinverse(d):
        raise VerificationError("closed form disagrees with the factorization pseudoinverse")
    return result


def rim_signless_product(n: int) -> Vector:
    """The row vector x' S for odd n, computed by dense multiplication.

    x is the odd-case rim spec and S the rim cycle's signless Laplacian.
    The result works out to

        (4n-6, n+1, -2, 2, -2, ..., 2, -2, n+1) / (n-1)

    and satisfies x'S + 2y' = s' (the spec of S); both facts are
    exercised in the tests rather than assumed here.
    """
    if n % 2 == 0:
        raise NotOddError(f"odd n required, got {n}")
    data = make_odd_case(n)
    s_mat = materialize(cycle_signless_laplacian_spec(n - 1))
    return tuple(dot(data.rim_spec, s_mat.column(j)) for j in range(n - 1))
