"""The Lie algebra of the centralizer of a generated isometry group,
and the open-orbit (homogeneity) check at a point.

A pair (X, w) belongs to the algebra iff for every generator (I+A, v):

    X·A = A·X,    X·v = A·w,    Xᵀ·gram + gram·X = 0.

The solution space is computed exactly; the orbit of the identity
component at a point p is open iff span{X·p + w} is everything.  A
negative orbit result at p means only "identity-component orbit not
open at p", never a refutation of homogeneity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine import GroupSpec
from .forms import orth_complement
from .holonomy import HolonomyReport, abelian_report, isotropic_radical
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    full_space,
    kernel,
    rref_basis,
    vec,
)


@dataclass(frozen=True)
class CentralizerAlgebra:
    """Canonical basis of the centralizer's Lie algebra as (X, w) pairs."""

    spec: GroupSpec
    basis: tuple[tuple[Matrix, Vector], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def centralizer_translations(spec: GroupSpec) -> Subspace:
    """Translations commuting with every generator: the common kernel of
    the nilpotent parts (equivalently, the orthogonal complement of the
    span of their images)."""
    n = spec.form.n
    if not spec.generators:
        return full_space(n)
    rows = []
    for g in spec.generators:
        rows.extend(g.nilpotent_part.entries)
    return kernel(Matrix(rows, cols=n))


def centralizer_algebra(spec: GroupSpec) -> CentralizerAlgebra:
    """Solve the defining linear conditions exactly; canonical basis."""
    n = spec.form.n
    gram = spec.form.gram.entries
    n_unknowns = n * n + n  # row-major vec(X), then w

    rows: list[list] = []

    def new_row():
        return [0] * n_unknowns

    for g in spec.generators:
        a = g.nilpotent_part.entries
        v = g.translation
        # X·A - A·X = 0
        for r in range(n):
            for c in range(n):
                row = new_row()
                for m in range(n):
                    if a[m][c]:
                        row[r * n + m] += a[m][c]
                    if a[r][m]:
                        row[m * n + c] -= a[r][m]
                rows.append(row)
        # X·v - A·w = 0
        for r in range(n):
            row = new_row()
            for m in range(n):
                if v[m]:
                    row[r * n + m] += v[m]
                if a[r][m]:
                    row[n * n + m] -= a[r][m]
            rows.append(row)
    # Xᵀ·gram + gram·X = 0 (symmetric, so r <= c suffices)
    for r in range(n):
        for c in range(r, n):
            row = new_row()
            for m in range(n):
                if gram[m][c]:
                    row[m * n + r] += gram[m][c]
                if gram[r][m]:
                    row[m * n + c] += gram[r][m]
            rows.append(row)

    sol = kernel(Matrix(rows, cols=n_unknowns))
    basis = []
    for u in sol.basis:
        x = Matrix([u[i * n : (i + 1) * n] for i in range(n)])
        w = tuple(u[n * n :])
        basis.append((x, w))
    return CentralizerAlgebra(spec, tuple(basis))


def orbit_dimension(spec: GroupSpec, point, algebra: CentralizerAlgebra | None = None) -> int:
    """dim span{X·p + w : (X, w) in the algebra basis}.

    Equal to the ambient dimension iff the identity component's orbit at
    p is open.
    """
    p = vec(point)
    if algebra is None:
        algebra = centralizer_algebra(spec)
    tangent = [
        tuple(xp + wi for xp, wi in zip(x.matvec(p), w)) for x, w in algebra.basis
    ]
    return rref_basis(tangent, spec.form.n).dim


def u0perp_centralizes(spec: GroupSpec, report: HolonomyReport | None = None):
    """Does every translation by the radical's orthogonal complement
    commute with every generator?

    Commutation of (I+A, v) with (I, u) reduces to A·u = 0.  Returns
    (flag, witness); the witness is (generator_index, u, A·u) on failure.
    The flag always coincides with the abelianness verdict.
    """
    radical = report.radical if report is not None else isotropic_radical(spec)
    perp = orth_complement(spec.form, radical)
    for u in perp.basis:
        for idx, g in enumerate(spec.generators):
            au = g.nilpotent_part.matvec(u)
            if any(x != 0 for x in au):
                return False, (idx, u, au)
    return True, None
