"""Exact rational linear algebra with canonical subspace bases.

Scalars are arbitrary-precision rationals: plain ``int`` where possible,
``fractions.Fraction`` otherwise.  Every operation is exact; there is no
floating point anywhere in this package.  Subspaces are kept in reduced
row echelon form, so two subspaces are equal iff their ``basis`` tuples
are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Scalar = int | Fraction
Vector = tuple[Scalar, ...]


class DimensionMismatch(ValueError):
    """Operands live in incompatible dimensions."""


def as_scalar(x) -> Scalar:
    """Coerce ``x`` (int, Fraction, or 'num/den' string) to an exact scalar.

    Floats are rejected: tolerance-free certificates require that no
    approximate value ever enters the system.
    """
    if isinstance(x, bool):
        raise TypeError("boolean is not a scalar")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"not an exact rational: {x!r}")


def scalar_str(x: Scalar) -> str:
    """Serialize a scalar as 'n' or 'num/den'."""
    x = as_scalar(x)
    return str(x)


def vec(entries) -> Vector:
    return tuple(as_scalar(x) for x in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Scalar, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def zero_vec(n: int) -> Vector:
    return (0,) * n


def is_zero_vec(u: Vector) -> bool:
    return all(a == 0 for a in u)


class Matrix:
    """Immutable exact matrix, stored as a tuple of row tuples.

    >>> m = Matrix([[1, 2], [3, 4]])
    >>> (m @ m).entries
    ((7, 10), (15, 22))
    """

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows_data, cols: int | None = None):
        entries = tuple(tuple(as_scalar(x) for x in row) for row in rows_data)
        if entries and any(len(r) != len(entries[0]) for r in entries):
            raise DimensionMismatch("ragged rows")
        n_cols = len(entries[0]) if entries else (cols if cols is not None else 0)
        if entries and cols is not None and cols != len(entries[0]):
            raise DimensionMismatch("explicit cols disagrees with row length")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", n_cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "Matrix":
        return Matrix([[0] * c for _ in range(r)], cols=c)

    @staticmethod
    def from_columns(cols, rows: int | None = None) -> "Matrix":
        cols = [tuple(c) for c in cols]
        if not cols:
            return Matrix.zeros(rows or 0, 0)
        return Matrix([[col[i] for col in cols] for i in range(len(cols[0]))])

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix([self.col(j) for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        bt = [other.col(j) for j in range(other.cols)]
        return Matrix(
            [[_dot(r, c) for c in bt] for r in self.entries], cols=other.cols
        )

    def matvec(self, v: Vector) -> Vector:
        if self.cols != len(v):
            raise DimensionMismatch(f"{self.shape} @ vector of length {len(v)}")
        return tuple(_dot(r, v) for r in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.entries])

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.entries])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_skew(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def submatrix(self, row_range, col_range) -> "Matrix":
        col_range = list(col_range)
        return Matrix(
            [[self.entries[i][j] for j in col_range] for i in row_range],
            cols=len(col_range),
        )

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.entries[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
        reduced, pivots = rref(aug)
        if len(pivots) < n or any(p >= n for p in pivots):
            raise ValueError("matrix is singular")
        return Matrix([row[n:] for row in reduced])

    def rank(self) -> int:
        _, pivots = rref([list(r) for r in self.entries])
        return len(pivots)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.entries)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        body = "; ".join(" ".join(scalar_str(a) for a in r) for r in self.entries)
        return f"Matrix[{body}]"


def _dot(u, v) -> Scalar:
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def _div(a: Scalar, b: Scalar) -> Scalar:
    # Never use "/": int / int would produce a float.
    q = Fraction(a, b) if isinstance(a, int) and isinstance(b, int) else Fraction(a) / Fraction(b)
    return q.numerator if q.denominator == 1 else q


def rref(rows: list[list[Scalar]]):
    """In-place reduced row echelon form.  Returns (rows, pivot_columns)."""
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            inv_row = rows[r]
            rows[r] = [_div(x, pv) for x in inv_row]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n with a canonical (RREF) row basis.

    Canonical means: equal subspaces have identical ``basis`` tuples, so
    dataclass equality is subspace equality.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, v: Vector) -> bool:
        """Membership by elimination against the canonical basis."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector/ambient mismatch")
        residue = list(v)
        for row in self.basis:
            lead = next(j for j, x in enumerate(row) if x != 0)
            if residue[lead] != 0:
                f = residue[lead]
                residue = [x - f * y for x, y in zip(residue, row)]
        return all(x == 0 for x in residue)

    def contains_space(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimension mismatch")
        return all(self.contains(v) for v in other.basis)

    def matrix(self) -> Matrix:
        return Matrix(self.basis) if self.basis else Matrix.zeros(0, self.ambient_dim)

    def __repr__(self) -> str:
        rows = ", ".join("(" + ",".join(scalar_str(a) for a in v) + ")" for v in self.basis)
        return f"Subspace<{self.ambient_dim}>[{rows}]"


def rref_basis(vectors, ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by ``vectors`` in Q^ambient_dim.

    Idempotent, and invariant under permutation/scaling of the input.
    """
    rows = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(v)} in ambient dimension {ambient_dim}"
            )
        rows.append([as_scalar(x) for x in v])
    reduced, pivots = rref(rows)
    return Subspace(ambient_dim, tuple(tuple(r) for r in reduced[: len(pivots)]))


def zero_space(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, ())


def full_space(ambient_dim: int) -> Subspace:
    return rref_basis([tuple(1 if j == i else 0 for j in range(ambient_dim)) for i in range(ambient_dim)], ambient_dim)


def kernel(m: Matrix) -> Subspace:
    """{x : Mx = 0} with canonical basis; dim kernel + rank = cols."""
    reduced, pivots = rref([list(r) for r in m.entries])
    n = m.cols
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    gens = []
    for fc in free_cols:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        gens.append(v)
    return rref_basis(gens, n)


def image(m: Matrix) -> Subspace:
    """Column space of M as a canonical subspace of Q^rows."""
    return rref_basis([m.col(j) for j in range(m.cols)], m.rows)


def row_space(m: Matrix) -> Subspace:
    return rref_basis(list(m.entries), m.cols)


def sum_spaces(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatch("ambient dimension mismatch")
    return rref_basis(list(s1.basis) + list(s2.basis), s1.ambient_dim)


def intersect_spaces(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked bases.

    A vector in both spaces is c1·B1 = c2·B2; the coefficient pairs
    (c1, c2) form the kernel of [B1ᵀ | -B2ᵀ].
    """
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatch("ambient dimension mismatch")
    if s1.is_zero() or s2.is_zero():
        return zero_space(s1.ambient_dim)
    r1, r2 = s1.dim, s2.dim
    stacked = Matrix(
        [
            [s1.basis[i][row] for i in range(r1)] + [-s2.basis[j][row] for j in range(r2)]
            for row in range(s1.ambient_dim)
        ]
    )
    gens = []
    for coeffs in kernel(stacked).basis:
        v = [0] * s1.ambient_dim
        for i in range(r1):
            if coeffs[i]:
                v = [x + coeffs[i] * y for x, y in zip(v, s1.basis[i])]
        gens.append(v)
    return rref_basis(gens, s1.ambient_dim)


def solve_linear(m: Matrix, b: Vector):
    """A particular solution of Mx = b, or None if b is not in image(M).

    The solution is canonical: free variables are set to zero.
    """
    if len(b) != m.rows:
        raise DimensionMismatch("rhs length must equal row count")
    aug = [list(r) + [bi] for r, bi in zip(m.entries, b)]
    reduced, pivots = rref(aug)
    n = m.cols
    if any(p == n for p in pivots):
        return None
    x = [0] * n
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r][n]
    return tuple(x)
