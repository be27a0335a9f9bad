"""Exact linear algebra over the rationals.

Dense matrices with ``fractions.Fraction`` entries, plus the generic
oracles (rank, inverse, Moore-Penrose pseudoinverse, inertia, kernel
bases) against which every closed-form identity in this package is
verified.  There is no floating point and no tolerance anywhere in this
module: equality of matrices means entrywise equality of reduced
fractions.

The pseudoinverse is computed by full-rank factorization (pivot columns
times reduced-echelon rows), the inertia by a symmetric congruence
reduction with 2x2 hyperbolic pivots, so both stay purely rational and
independent of any closed-form expression they are used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

Rational = Fraction
Scalar = Union[Fraction, int]
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NonSquareError(ValueError):
    """Operation requires a square matrix."""


class SingularMatrixError(ValueError):
    """Matrix has determinant zero where an inverse was requested."""


class ShapeMismatchError(ValueError):
    """Operand shapes are incompatible."""


class NotSymmetricError(ValueError):
    """Operation requires a symmetric matrix."""


class InvalidDecompositionError(ValueError):
    """Candidate (L, w, alpha) triple violates a structural invariant."""


class VerificationError(RuntimeError):
    """An identity that must hold by construction failed exactly."""


def frac(value: Scalar) -> Fraction:
    """Coerce an int or Fraction to Fraction (floats are rejected)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact scalar, got {type(value).__name__}")


def vec(values: Iterable[Scalar]) -> Vector:
    return tuple(frac(v) for v in values)


def ones_vector(length: int) -> Vector:
    return (_ONE,) * length


def unit_vector(length: int, index: int) -> Vector:
    return tuple(_ONE if i == index else _ZERO for i in range(length))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ShapeMismatchError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), _ZERO)


def scale_vector(c: Scalar, v: Sequence[Fraction]) -> Vector:
    cf = frac(c)
    return tuple(cf * x for x in v)


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise ShapeMismatchError(f"sum of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


class RatMatrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar]):
        data = tuple(frac(x) for x in entries)
        if len(data) != rows * cols:
            raise ShapeMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = data

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "RatMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatchError("ragged rows")
        return cls(nrows, ncols, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, (_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (_ONE,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "RatMatrix":
        n = len(values)
        vals = vec(values)
        return cls(n, n, (vals[i] if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def row_vector(cls, v: Sequence[Scalar]) -> "RatMatrix":
        return cls(1, len(v), v)

    @classmethod
    def column_vector(cls, v: Sequence[Scalar]) -> "RatMatrix":
        return cls(len(v), 1, v)

    @classmethod
    def outer(cls, u: Sequence[Scalar], v: Sequence[Scalar]) -> "RatMatrix":
        uf, vf = vec(u), vec(v)
        return cls(len(uf), len(vf), (a * b for a in uf for b in vf))

    @classmethod
    def from_blocks(cls, grid: Sequence[Sequence[Union["RatMatrix", Scalar]]]) -> "RatMatrix":
        """Assemble a block matrix; scalar grid cells act as 1x1 blocks."""
        norm = [[b if isinstance(b, RatMatrix) else cls(1, 1, [b]) for b in row] for row in grid]
        row_heights = [row[0].rows for row in norm]
        col_widths = [b.cols for b in norm[0]]
        for i, row in enumerate(norm):
            if len(row) != len(col_widths):
                raise ShapeMismatchError("ragged block grid")
            for j, b in enumerate(row):
                if b.rows != row_heights[i] or b.cols != col_widths[j]:
                    raise ShapeMismatchError(f"block ({i},{j}) is {b.rows}x{b.cols}")
        out: list[Fraction] = []
        for i, row in enumerate(norm):
            for r in range(row_heights[i]):
                for b in row:
                    out.extend(b._entries[r * b.cols : (r + 1) * b.cols])
        return cls(sum(row_heights), sum(col_widths), out)

    # -- access ----------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self._entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix(
            len(row_idx),
            len(col_idx),
            (self._entries[i * self.cols + j] for i in row_idx for j in col_idx),
        )

    # -- algebra ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._require_same_shape(other)
        return RatMatrix(self.rows, self.cols, (a + b for a, b in zip(self._entries, other._entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._require_same_shape(other)
        return RatMatrix(self.rows, self.cols, (a - b for a, b in zip(self._entries, other._entries)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, (-a for a in self._entries))

    def __mul__(self, c: Scalar) -> "RatMatrix":
        cf = frac(c)
        return RatMatrix(self.rows, self.cols, (cf * a for a in self._entries))

    __rmul__ = __mul__

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, k, m = self.rows, self.cols, other.cols
        a, b = self._entries, other._entries
        out: list[Fraction] = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                acc = _ZERO
                for t in range(k):
                    av = arow[t]
                    if av:
                        acc += av * b[t * m + j]
                out.append(acc)
        return RatMatrix(n, m, out)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            (self._entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def mul_vector(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ShapeMismatchError(f"matrix has {self.cols} columns, vector length {len(v)}")
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def row_sums(self) -> Vector:
        return tuple(sum(self.row(i), _ZERO) for i in range(self.rows))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        e, n = self._entries, self.rows
        return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i + 1, n))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(min(self.rows, 6)))
        tail = " ..." if self.rows > 6 else ""
        return f"RatMatrix({self.rows}x{self.cols}: {body}{tail})"

    def _require_same_shape(self, other: "RatMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeMismatchError(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


class InertiaTriple(NamedTuple):
    """Counts of positive, negative and zero eigenvalues of a symmetric matrix."""

    i_plus: int
    i_minus: int
    i_zero: int


@dataclass(frozen=True)
class Decomposition:
    """Candidate triple (L, w, alpha) for an inverse of the form -L/2 + alpha*w*w'.

    L must be symmetric with all row sums zero (Laplacian-like), w must
    satisfy e'w = 1, and alpha must be nonzero.  Violations raise
    InvalidDecompositionError at construction time.
    """

    laplacian_like: RatMatrix
    w: Vector
    alpha: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", vec(self.w))
        object.__setattr__(self, "alpha", frac(self.alpha))
        lap = self.laplacian_like
        if not lap.is_square() or lap.rows != len(self.w):
            raise InvalidDecompositionError("L must be square of the same order as w")
        if not lap.is_symmetric():
            raise InvalidDecompositionError("L must be symmetric")
        if any(s != 0 for s in lap.row_sums()):
            raise InvalidDecompositionError("L must have zero row sums")
        if sum(self.w, _ZERO) != 1:
            raise InvalidDecompositionError("w must satisfy e'w = 1")
        if self.alpha == 0:
            raise InvalidDecompositionError("alpha must be nonzero")

    def candidate(self) -> RatMatrix:
        """The matrix -L/2 + alpha * w w' encoded by this triple."""
        return Fraction(-1, 2) * self.laplacian_like + self.alpha * RatMatrix.outer(self.w, self.w)


# -- elimination helpers --------------------------------------------------


def _reduced_echelon(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place reduced row echelon form; returns pivot column indices.

    Pivoting is by first nonzero entry: with exact arithmetic the only
    thing that matters is that every division is by a known-nonzero pivot.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot = rows[r][c]
        if pivot != 1:
            rows[r] = [x / pivot for x in rows[r]]
        lead = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns, exactly."""
    work = m.to_lists()
    pivots = _reduced_echelon(work, m.cols)
    return RatMatrix.from_rows(work) if work else RatMatrix.zeros(0, m.cols), tuple(pivots)


def rank(m: RatMatrix) -> int:
    """Dimension of the row space, by exact elimination."""
    work = m.to_lists()
    return len(_reduced_echelon(work, m.cols))


def determinant(m: RatMatrix) -> Fraction:
    """Exact determinant by elimination with division-controlled pivots."""
    if not m.is_square():
        raise NonSquareError(f"determinant of {m.rows}x{m.cols} matrix")
    n = m.rows
    work = m.to_lists()
    det = _ONE
    for c in range(n):
        p = next((i for i in range(c, n) if work[i][c] != 0), None)
        if p is None:
            return _ZERO
        if p != c:
            work[c], work[p] = work[p], work[c]
            det = -det
        pivot = work[c][c]
        det *= pivot
        lead = work[c]
        for i in range(c + 1, n):
            if work[i][c] != 0:
                f = work[i][c] / pivot
                work[i] = [a - f * b for a, b in zip(work[i], lead)]
    return det


def inverse(m: RatMatrix) -> RatMatrix:
    """Exact inverse via Gauss-Jordan; raises SingularMatrixError if det = 0."""
    if not m.is_square():
        raise NonSquareError(f"inverse of {m.rows}x{m.cols} matrix")
    n = m.rows
    work = [list(m.row(i)) + [_ONE if j == i else _ZERO for j in range(n)] for i in range(n)]
    pivots = _reduced_echelon(work, n)
    if len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return RatMatrix.from_rows([row[n:] for row in work])


def solve(m: RatMatrix, b: Sequence[Fraction]) -> Optional[Vector]:
    """One exact solution of m x = b, or None if the system is inconsistent.

    Free variables are set to zero.  Used both as a solver and as the
    membership test "b in the column space of m".
    """
    if len(b) != m.rows:
        raise ShapeMismatchError(f"matrix has {m.rows} rows, rhs length {len(b)}")
    work = [list(m.row(i)) + [frac(b[i])] for i in range(m.rows)]
    pivots = _reduced_echelon(work, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [_ZERO] * m.cols
    for r, c in enumerate(pivots):
        x[c] = work[r][m.cols]
    return tuple(x)


def null_space_basis(m: RatMatrix) -> list[Vector]:
    """Exact basis of the kernel, read off the reduced echelon form."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [j for j in range(m.cols) if j not in pivot_set]
    basis: list[Vector] = []
    for j in free_cols:
        v = [_ZERO] * m.cols
        v[j] = _ONE
        for r, c in enumerate(pivots):
            v[c] = -reduced[r, j]
        basis.append(tuple(v))
    return basis


def pseudoinverse(m: RatMatrix) -> RatMatrix:
    """Moore-Penrose inverse by full-rank factorization, exactly.

    Factor m = F G with F the pivot columns of m (full column rank r) and
    G the first r rows of the reduced echelon form (full row rank), then

        pinv(m) = G' (G G')^(-1) (F' F)^(-1) F'.

    The zero matrix maps to the zero matrix of transposed shape.
    """
    reduced, pivots = rref(m)
    r = len(pivots)
    if r == 0:
        return RatMatrix.zeros(m.cols, m.rows)
    f_mat = m.submatrix(range(m.rows), pivots)
    g_mat = reduced.submatrix(range(r), range(m.cols))
    gt = g_mat.transpose()
    ft = f_mat.transpose()
    return gt @ inverse(g_mat @ gt) @ inverse(ft @ f_mat) @ ft


def penrose_check(m: RatMatrix, x: RatMatrix) -> bool:
    """True iff x satisfies all four Penrose conditions for m, exactly.

    MXM = M, XMX = X, and both MX and XM symmetric.
    """
    if x.rows != m.cols or x.cols != m.rows:
        raise ShapeMismatchError(
            f"candidate must be {m.cols}x{m.rows}, got {x.rows}x{x.cols}"
        )
    mx = m @ x
    xm = x @ m
    return (
        mx @ m == m
        and x @ mx == x
        and mx.is_symmetric()
        and xm.is_symmetric()
    )


def _sym_swap(w: list[list[Fraction]], i: int, j: int) -> None:
    if i == j:
        return
    w[i], w[j] = w[j], w[i]
    for row in w:
        row[i], row[j] = row[j], row[i]


def inertia(m: RatMatrix) -> InertiaTriple:
    """Exact inertia (i_plus, i_minus, i_zero) of a symmetric matrix.

    Sylvester congruence reduction: pivot on a nonzero diagonal entry of
    the remaining block when one exists; otherwise all remaining diagonal
    entries are zero and a symmetric 2x2 pivot on an off-diagonal nonzero
    contributes one positive and one negative eigenvalue.  A zero
    remaining block terminates with i_zero.
    """
    if not m.is_symmetric():
        raise NotSymmetricError("inertia requires a symmetric matrix")
    n = m.rows
    w = m.to_lists()
    i_plus = i_minus = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if w[i][i] != 0), None)
        if p is not None:
            _sym_swap(w, k, p)
            d = w[k][k]
            if d > 0:
                i_plus += 1
            else:
                i_minus += 1
            for i in range(k + 1, n):
                f = w[i][k] / d
                if f:
                    row_i, row_k = w[i], w[k]
                    for j in range(k + 1, n):
                        row_i[j] -= f * row_k[j]
            for i in range(k + 1, n):
                w[i][k] = w[k][i] = _ZERO
            k += 1
            continue
        pair = None
        for i in range(k, n):
            row_i = w[i]
            for j in range(i + 1, n):
                if row_i[j] != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            return InertiaTriple(i_plus, i_minus, n - k)
        i0, j0 = pair
        _sym_swap(w, k, i0)
        if j0 == k:
            j0 = i0
        _sym_swap(w, k + 1, j0)
        b = w[k][k + 1]
        us = [w[l][k] for l in range(k + 2, n)]
        vs = [w[l][k + 1] for l in range(k + 2, n)]
        for a, l in enumerate(range(k + 2, n)):
            ua, va = us[a], vs[a]
            row_l = w[l]
            for c, t in enumerate(range(k + 2, n)):
                corr = ua * vs[c] + va * us[c]
                if corr:
                    row_l[t] -= corr / b
        for l in range(k + 2, n):
            w[l][k] = w[k][l] = _ZERO
            w[l][k + 1] = w[k + 1][l] = _ZERO
        i_plus += 1
        i_minus += 1
        k += 2
    return InertiaTriple(i_plus, i_minus, n - k if k < n else 0)
