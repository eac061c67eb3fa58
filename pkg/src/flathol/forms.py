"""Symmetric nondegenerate bilinear forms of signature (p, s).

Provides the pairing itself, orthogonal complements, total-isotropy
tests, and the construction of a basis adapted to a totally isotropic
subspace: ambient = U ⊕ W ⊕ U* with U, U* dual isotropic blocks and W
their orthogonal complement.  Signatures are computed by exact symmetric
Gaussian congruence, never by eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    DimensionMismatch,
    Matrix,
    Scalar,
    Subspace,
    Vector,
    _div,
    full_space,
    kernel,
    rref_basis,
    solve_linear,
    sum_spaces,
    vec_scale,
    vec_sub,
    zero_space,
)


class DegenerateFormError(ValueError):
    """The Gram matrix is singular."""


class NotTotallyIsotropic(ValueError):
    """A subspace required to be totally isotropic is not."""


def gram_signature(gram: Matrix) -> tuple[int, int, int]:
    """(positive, negative, rank) of a symmetric matrix.

    Exact symmetric congruence: diagonal pivots count sign directly; a
    zero diagonal with a nonzero off-diagonal entry is first symmetrized
    by a row+column addition (which turns the hyperbolic 2x2 block into
    one of each sign).
    """
    if not gram.is_symmetric():
        raise ValueError("gram matrix must be symmetric")
    n = gram.rows
    m = [list(r) for r in gram.entries]
    active = list(range(n))
    pos = neg = 0
    while active:
        piv = next((i for i in active if m[i][i] != 0), None)
        if piv is None:
            pair = None
            for i in active:
                for j in active:
                    if j > i and m[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                break  # remaining block is zero: degenerate
            i, j = pair
            for c in range(n):
                m[i][c] = m[i][c] + m[j][c]
            for r in range(n):
                m[r][i] = m[r][i] + m[r][j]
            piv = i
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for j in active:
            if j == piv or m[j][piv] == 0:
                continue
            f = _div(m[j][piv], d)
            for c in range(n):
                m[j][c] = m[j][c] - f * m[piv][c]
            for r in range(n):
                m[r][j] = m[r][j] - f * m[r][piv]
        active.remove(piv)
    return pos, neg, pos + neg


@dataclass(frozen=True)
class BilinearForm:
    """Nondegenerate symmetric pairing on Q^n with signature (p, s)."""

    n: int
    gram: Matrix
    p: int
    s: int

    @staticmethod
    def from_gram(gram: Matrix) -> "BilinearForm":
        if not gram.is_square():
            raise ValueError("gram matrix must be square")
        p, s, rank = gram_signature(gram)
        if rank != gram.rows:
            raise DegenerateFormError("gram matrix is singular")
        return BilinearForm(gram.rows, gram, p, s)

    @property
    def signature(self) -> tuple[int, int]:
        return (self.p, self.s)


def standard_form(p: int, s: int) -> BilinearForm:
    """diag(+1 x p, -1 x s)."""
    if p < 0 or s < 0 or p + s < 1:
        raise ValueError("need p >= 0, s >= 0, p + s >= 1")
    n = p + s
    gram = Matrix([[(1 if i < p else -1) if i == j else 0 for j in range(n)] for i in range(n)])
    return BilinearForm(n, gram, p, s)


def evaluate(form: BilinearForm, x: Vector, y: Vector) -> Scalar:
    """The pairing <x, y> = xᵀ·gram·y."""
    if len(x) != form.n or len(y) != form.n:
        raise DimensionMismatch("vector length must equal ambient dimension")
    gy = form.gram.matvec(y)
    return sum(a * b for a, b in zip(x, gy))


def orth_complement(form: BilinearForm, space: Subspace) -> Subspace:
    """{y : <x, y> = 0 for all x in space}."""
    if space.ambient_dim != form.n:
        raise DimensionMismatch("subspace/form dimension mismatch")
    if space.is_zero():
        return full_space(form.n)
    return kernel(space.matrix() @ form.gram)


def is_totally_isotropic(form: BilinearForm, space: Subspace) -> bool:
    """True iff every pairing of basis vectors (self-pairs included) is 0."""
    if space.ambient_dim != form.n:
        raise DimensionMismatch("subspace/form dimension mismatch")
    basis = space.basis
    paired = [form.gram.matvec(v) for v in basis]
    for i, u in enumerate(basis):
        for j in range(i, len(basis)):
            if sum(a * b for a, b in zip(u, paired[j])) != 0:
                return False
    return True


def max_isotropic_bound(form: BilinearForm) -> int:
    """Largest possible dimension of a totally isotropic subspace: min(p, s)."""
    return min(form.p, form.s)


@dataclass(frozen=True)
class WittBasis:
    """Basis adapted to a totally isotropic subspace U of dimension k.

    ``change_of_basis`` has the adapted basis as columns, ordered
    U-block, W-block, U*-block; in these coordinates the Gram matrix is
    exactly [[0,0,I_k],[0,I~,0],[I_k,0,0]] with I~ the (nondegenerate)
    restriction of the pairing to W.
    """

    form: BilinearForm
    k: int
    w_dim: int
    change_of_basis: Matrix
    i_tilde: Matrix

    @property
    def u_vectors(self) -> list[Vector]:
        return [self.change_of_basis.col(j) for j in range(self.k)]

    @property
    def w_vectors(self) -> list[Vector]:
        return [self.change_of_basis.col(self.k + j) for j in range(self.w_dim)]

    @property
    def dual_vectors(self) -> list[Vector]:
        return [self.change_of_basis.col(self.k + self.w_dim + j) for j in range(self.k)]

    def adapted_gram(self) -> Matrix:
        p = self.change_of_basis
        return p.transpose() @ self.form.gram @ p

    def expected_gram(self) -> Matrix:
        n, k, w = self.form.n, self.k, self.w_dim
        rows = [[0] * n for _ in range(n)]
        for i in range(k):
            rows[i][k + w + i] = 1
            rows[k + w + i][i] = 1
        for i in range(w):
            for j in range(w):
                rows[k + i][k + j] = self.i_tilde.entries[i][j]
        return Matrix(rows)


def witt_extend(form: BilinearForm, u0: Subspace) -> WittBasis:
    """Extend a totally isotropic subspace to an adapted hyperbolic basis.

    For each basis vector u_i of u0, solve exactly for a partner pairing
    1 with u_i and 0 with the other u_j and with the partners built so
    far, then subtract a multiple of u_i to make the partner isotropic.
    Free variables of each solve are zeroed, so the construction is
    deterministic.  W is the orthogonal complement of U ⊕ U*.
    """
    if u0.ambient_dim != form.n:
        raise DimensionMismatch("subspace/form dimension mismatch")
    if not is_totally_isotropic(form, u0):
        raise NotTotallyIsotropic("witt_extend requires a totally isotropic subspace")
    n, k = form.n, u0.dim
    u_rows = list(u0.basis)
    duals: list[Vector] = []
    for i in range(k):
        constraint_rows = [form.gram.matvec(u) for u in u_rows]
        constraint_rows += [form.gram.matvec(d) for d in duals]
        rhs = tuple(1 if j == i else 0 for j in range(k)) + (0,) * len(duals)
        x = solve_linear(Matrix(constraint_rows), rhs)
        if x is None:  # impossible for a nondegenerate form
            raise AssertionError("dual-partner solve failed on a nondegenerate form")
        self_pair = evaluate(form, x, x)
        if self_pair != 0:
            x = vec_sub(x, vec_scale(_div(self_pair, 2), u_rows[i]))
        duals.append(x)
    dual_space = rref_basis(duals, n)
    w_space = orth_complement(form, sum_spaces(u0, dual_space))
    w_rows = list(w_space.basis)
    cols = u_rows + w_rows + duals
    change = Matrix([[col[r] for col in cols] for r in range(n)]) if cols else Matrix.zeros(n, 0)
    if cols and len(cols) != n:
        raise AssertionError("adapted basis does not span the ambient space")
    i_tilde = Matrix(
        [[evaluate(form, wi, wj) for wj in w_rows] for wi in w_rows],
        cols=len(w_rows),
    )
    wb = WittBasis(form, k, len(w_rows), change, i_tilde)
    if wb.adapted_gram() != wb.expected_gram():
        raise AssertionError("adapted gram does not have the exact block shape")
    pw, sw, rw = gram_signature(i_tilde) if w_rows else (0, 0, 0)
    if rw != len(w_rows) or (pw, sw) != (form.p - k, form.s - k):
        raise AssertionError("restricted form has the wrong signature")
    return wb
