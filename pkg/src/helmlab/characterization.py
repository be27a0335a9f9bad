"""When is a Moore-Penrose inverse of the form -L/2 + alpha ww'?

This module packages the machinery around that question for symmetric
matrices with the all-ones vector in their range: the witness identities
that certify a candidate triple (equiv formulation), constructive
uniqueness of the triple, the six block conditions that pin down the
bordered matrix L for helm distance matrices, the kernel projector that
closes the certificate, and exact positive-semidefiniteness / rank
checks for L via congruence inertia and Schur complements.

Everything here is exact; positive semidefiniteness in particular is
decided by rational inertia, never by floating-point eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .closed_form import make_odd_case, make_w_alpha
from .exact_core import (
    Decomposition,
    InvalidDecompositionError,
    NotSymmetricError,
    RatMatrix,
    ShapeMismatchError,
    Vector,
    VerificationError,
    dot,
    inertia,
    inverse,
    ones_vector,
    pseudoinverse,
    rank,
    scale_vector,
    solve,
)
from .graphs import helm_distance_block


class OnesNotInRangeError(ValueError):
    """The all-ones vector is not in the range of the matrix, so the
    decomposition characterization does not apply."""


class SixConditions(NamedTuple):
    """Outcome of the six exact block conditions on (A, B, S).

    In order: A e = (3/2) e;  B e = -e;  B S = -S;  (B + I) A = 0;
    (B + I) B = 0;  (A + B) S + 2 B = 0.
    """

    a_row_sum: bool
    b_row_sum: bool
    b_absorbs_s: bool
    a_annihilated: bool
    b_annihilated: bool
    s_balance: bool

    def all_hold(self) -> bool:
        return all(self)


@dataclass(frozen=True)
class KernelProjector:
    """Twice the orthogonal projector onto the kernel of the distance matrix.

    Nonzero only on the rim block, where it equals 2(B + I); annihilated
    by D on the left and by both L and w on the right.
    """

    matrix: RatMatrix


def check_equiv_formulation(d: RatMatrix, dec: Decomposition) -> bool:
    """Certify dec.candidate() as the Moore-Penrose inverse of d.

    Requires d symmetric with the all-ones vector in its range (checked
    by an exact solve; OnesNotInRangeError otherwise).  Returns True iff
    all witness identities hold exactly:

        D w = (1/alpha) e,
        L D + 2 I = 2 w e' + V   for V = 2(I - X D), X = dec.candidate(),
        V symmetric,  D V = 0,  V X = 0,

    and, equivalently, X equals the factorization pseudoinverse of D.
    """
    if not d.is_symmetric():
        raise NotSymmetricError("characterization applies to symmetric matrices")
    order = d.rows
    if len(dec.w) != order:
        raise ShapeMismatchError(f"decomposition of order {len(dec.w)} against {order}")
    e = ones_vector(order)
    if solve(d, e) is None:
        raise OnesNotInRangeError("all-ones vector is outside the range of the matrix")
    if d.mul_vector(dec.w) != scale_vector(1 / dec.alpha, e):
        return False
    candidate = dec.candidate()
    correction = 2 * (RatMatrix.identity(order) - candidate @ d)
    if not correction.is_symmetric():
        return False
    lhs = dec.laplacian_like @ d + 2 * RatMatrix.identity(order)
    if lhs != 2 * RatMatrix.outer(dec.w, e) + correction:
        return False
    if not (d @ correction).is_zero():
        return False
    if not (correction @ candidate).is_zero():
        return False
    return candidate == pseudoinverse(d)


def check_uniqueness(d: RatMatrix, dec: Decomposition) -> tuple[Fraction, Vector]:
    """Recover (alpha, w) from the candidate matrix alone.

    With X = -L/2 + alpha ww', zero row sums of L give X e = alpha w and
    e' X e = alpha, so the triple is pinned down by X.  The recovered
    values must match dec's fields exactly; a mismatch (or a candidate
    with e'Xe = 0) raises InvalidDecompositionError.
    """
    if len(dec.w) != d.rows:
        raise ShapeMismatchError(f"decomposition of order {len(dec.w)} against {d.rows}")
    candidate = dec.candidate()
    e = ones_vector(d.rows)
    image = candidate.mul_vector(e)
    alpha = dot(e, image)
    if alpha == 0:
        raise InvalidDecompositionError("candidate has e'Xe = 0; no scale recoverable")
    w = scale_vector(1 / alpha, image)
    if alpha != dec.alpha or w != dec.w:
        raise InvalidDecompositionError("recovered (alpha, w) differ from the stored fields")
    return alpha, w


def check_conditions_i_vi(
    a_mat: RatMatrix, b_mat: RatMatrix, s_mat: RatMatrix
) -> SixConditions:
    """Evaluate the six exact block conditions on (A, B, S).

    A and B are the rim and coupling blocks of the bordered matrix
    (B = -I in the even case), S the rim cycle's signless Laplacian.
    """
    if not (a_mat.is_square() and a_mat.rows == b_mat.rows == s_mat.rows):
        raise ShapeMismatchError("A, B, S must be square of equal order")
    if b_mat.cols != b_mat.rows or s_mat.cols != s_mat.rows:
        raise ShapeMismatchError("A, B, S must be square of equal order")
    k = a_mat.rows
    e = ones_vector(k)
    ident = RatMatrix.identity(k)
    zero = RatMatrix.zeros(k, k)
    b_plus_i = b_mat + ident
    return SixConditions(
        a_row_sum=a_mat.mul_vector(e) == scale_vector(Fraction(3, 2), e),
        b_row_sum=b_mat.mul_vector(e) == scale_vector(Fraction(-1), e),
        b_absorbs_s=b_mat @ s_mat == -s_mat,
        a_annihilated=b_plus_i @ a_mat == zero,
        b_annihilated=b_plus_i @ b_mat == zero,
        s_balance=(a_mat + b_mat) @ s_mat + 2 * b_mat == zero,
    )


def build_kernel_projector(n: int) -> KernelProjector:
    """The block matrix with 2(B + I) on the rim and zeros elsewhere, odd n.

    Verified exactly before returning: symmetric, annihilates the
    all-ones vector, D V = 0, V L = 0 and V w = 0.
    """
    data = make_odd_case(n)
    vectors = make_w_alpha(n)
    k = n - 1
    rim = 2 * (data.coupling_block + RatMatrix.identity(k))
    zeros_row = RatMatrix.zeros(1, k)
    zeros_col = RatMatrix.zeros(k, 1)
    zero_blk = RatMatrix.zeros(k, k)
    v_mat = RatMatrix.from_blocks(
        [
            [0, zeros_row, zeros_row],
            [zeros_col, rim, zero_blk],
            [zeros_col, zero_blk, zero_blk],
        ]
    )
    if not v_mat.is_symmetric():
        raise VerificationError("kernel projector is not symmetric")
    if any(x != 0 for x in v_mat.row_sums()):
        raise VerificationError("kernel projector does not annihilate the all-ones vector")
    d = helm_distance_block(n)
    if not (d @ v_mat).is_zero():
        raise VerificationError("D V != 0")
    if not (v_mat @ data.laplacian_like).is_zero():
        raise VerificationError("V L != 0")
    if any(x != 0 for x in v_mat.mul_vector(vectors.w)):
        raise VerificationError("V w != 0")
    return KernelProjector(v_mat)


def schur_psd_check(lap: RatMatrix, n: int) -> bool:
    """Exact positive-semidefiniteness check of the odd-case matrix L.

    Primary test: the congruence inertia of lap has no negative part.
    On top of that the two-step Schur complement reduction is verified:
    eliminating the positive (1,1) scalar must leave exactly

        [ A - J/(2(n-1))   B ]
        [ B                I ]

    and eliminating that matrix's identity block must leave exactly
    A + B - J/(2(n-1)) (which encodes B^2 = -B); both complements must
    again have no negative inertia.  Returns the conjunction.
    """
    order = 2 * n - 1
    if lap.rows != order or lap.cols != order:
        raise ShapeMismatchError(f"expected order {order}, got {lap.rows}x{lap.cols}")
    if not lap.is_symmetric():
        raise NotSymmetricError("PSD check requires a symmetric matrix")
    if inertia(lap).i_minus != 0:
        return False
    corner = lap[0, 0]
    if corner <= 0:
        return False
    k = n - 1
    rest = list(range(1, order))
    border = lap.submatrix(rest, [0])
    trailing = lap.submatrix(rest, rest)
    complement_1 = trailing - (1 / corner) * (border @ border.transpose())

    data = make_odd_case(n)
    j_term = Fraction(1, 2 * (n - 1)) * RatMatrix.ones(k, k)
    expected_1 = RatMatrix.from_blocks(
        [
            [data.rim_block - j_term, data.coupling_block],
            [data.coupling_block, RatMatrix.identity(k)],
        ]
    )
    if complement_1 != expected_1 or inertia(complement_1).i_minus != 0:
        return False

    top = list(range(k))
    bottom = list(range(k, 2 * k))
    block_11 = complement_1.submatrix(top, top)
    block_12 = complement_1.submatrix(top, bottom)
    block_22 = complement_1.submatrix(bottom, bottom)
    complement_2 = block_11 - block_12 @ inverse(block_22) @ block_12.transpose()
    expected_2 = data.rim_block + data.coupling_block - j_term
    if complement_2 != expected_2 or inertia(complement_2).i_minus != 0:
        return False
    return True


def rank_l_check(n: int) -> int:
    """Rank of the odd-case matrix L, with the mechanism behind it.

    Verifies that w is not in the range of L (the system L z = w is
    inconsistent), so adding the rank-one term alpha ww' raises the rank
    by exactly one, matching the rank of the distance matrix.  Returns
    rank(L), which equals 2n - 3.
    """
    data = make_odd_case(n)
    vectors = make_w_alpha(n)
    lap = data.laplacian_like
    r = rank(lap)
    if solve(lap, vectors.w) is not None:
        raise VerificationError("w is unexpectedly in the range of L")
    candidate = Fraction(-1, 2) * lap + vectors.alpha * RatMatrix.outer(vectors.w, vectors.w)
    if rank(candidate) != r + 1:
        raise VerificationError("rank of -L/2 + alpha ww' is not rank(L) + 1")
    if rank(helm_distance_block(n)) != r + 1:
        raise VerificationError("rank of the distance matrix is not rank(L) + 1")
    return r
