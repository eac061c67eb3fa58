"""Holonomy invariants of a generated isometry group.

The two subspaces that control everything are the span of the images of
the generators' nilpotent parts (written ``image_sum`` here) and its
radical, the intersection with its own orthogonal complement.  The
group's linear parts are abelian iff four superficially different
criteria hold; :func:`abelian_report` evaluates all four independently
and insists that they agree.  :func:`block_form` extracts the adapted
block shape of a single element, and :func:`index_witness` builds the
dimension >= 4 totally isotropic certificate that forces s >= 4 for
non-abelian groups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine import AffineIso, GroupSpec, wolf_check, words_up_to
from .forms import (
    BilinearForm,
    WittBasis,
    evaluate,
    is_totally_isotropic,
    max_isotropic_bound,
    orth_complement,
    witt_extend,
)
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    image,
    intersect_spaces,
    rref_basis,
    sum_spaces,
    zero_space,
)


class CriteriaDisagreement(RuntimeError):
    """The four abelianness criteria did not agree.

    This signals an input group outside the theory's hypotheses (or an
    implementation bug), never a valid report.
    """


class PreconditionFailed(ValueError):
    """An operation's documented precondition does not hold."""


class WitnessConstructionFailed(RuntimeError):
    """The isotropic witness could not be built; carries the failing step."""


def image_sum(spec: GroupSpec) -> Subspace:
    """Span of im(A) over the generators (A = linear part minus identity).

    For any product of generators the nilpotent part is a sum of the
    generators' A's and of their pairwise products, and im(A_i·A_j) is
    contained in im(A_i); so the generator images already span the
    contribution of every word.
    """
    total = zero_space(spec.form.n)
    for g in spec.generators:
        total = sum_spaces(total, image(g.nilpotent_part))
    return total


def image_sum_perp(spec: GroupSpec) -> Subspace:
    return orth_complement(spec.form, image_sum(spec))


def isotropic_radical(spec: GroupSpec) -> Subspace:
    """image_sum ∩ image_sum^⊥; always totally isotropic."""
    u = image_sum(spec)
    radical = intersect_spaces(u, orth_complement(spec.form, u))
    if not is_totally_isotropic(spec.form, radical):
        raise AssertionError("radical of the restricted form must be totally isotropic")
    return radical


@dataclass(frozen=True)
class HolonomyReport:
    """The holonomy subspaces plus the four equivalent abelianness criteria."""

    image_sum: Subspace
    image_sum_perp: Subspace
    radical: Subspace
    words_commute: bool
    products_vanish: bool
    image_sum_isotropic: bool
    radical_is_image_sum: bool
    abelian: bool
    max_word_length: int

    def criteria(self) -> dict:
        return {
            "words_commute": self.words_commute,
            "products_vanish": self.products_vanish,
            "image_sum_isotropic": self.image_sum_isotropic,
            "radical_is_image_sum": self.radical_is_image_sum,
        }


def _span_basis_of_matrices(mats: list[Matrix], n: int) -> list[Matrix]:
    """A basis (as matrices) of the linear span of ``mats``."""
    flat = rref_basis([tuple(x for row in m.entries for x in row) for m in mats], n * n)
    return [
        Matrix([v[i * n : (i + 1) * n] for i in range(n)]) for v in flat.basis
    ]


def _words_commute(spec: GroupSpec, words: list[AffineIso]) -> tuple[bool, tuple | None]:
    """Pairwise commutation of the words' linear parts.

    Commutation of I+X and I+Y is the vanishing of XY - YX, which is
    bilinear in (X, Y); so it suffices to test a basis of the span of
    the words' nilpotent parts.  On failure a concrete word pair is
    located for the witness.
    """
    n = spec.form.n
    nilpotents = []
    seen = set()
    for w in words:
        m = w.nilpotent_part
        if m.entries not in seen:
            seen.add(m.entries)
            nilpotents.append(m)
    basis = _span_basis_of_matrices(nilpotents, n)
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            if (x @ y) != (y @ x):
                witness = _find_noncommuting_pair(nilpotents)
                return False, witness
    return True, None


def _find_noncommuting_pair(nilpotents: list[Matrix]):
    for i, x in enumerate(nilpotents):
        for y in nilpotents[i + 1 :]:
            if (x @ y) != (y @ x):
                return (x, y)
    return None


def abelian_report(spec: GroupSpec, max_word_length: int = 4) -> HolonomyReport:
    """Evaluate the four abelianness criteria independently and cross-check.

    Criterion 1 quantifies over words up to ``max_word_length``; criteria
    2-4 are generator-finite.  Disagreement raises CriteriaDisagreement
    naming the criteria, as required for an invalid input group.
    """
    u = image_sum(spec)
    u_perp = orth_complement(spec.form, u)
    radical = intersect_spaces(u, u_perp)

    words = words_up_to(spec, max_word_length)
    c1, _ = _words_commute(spec, words)

    nil = [g.nilpotent_part for g in spec.generators]
    c2 = all((a @ b).is_zero() for a in nil for b in nil)

    c3 = is_totally_isotropic(spec.form, u)
    c4 = radical == u

    values = {
        "words_commute": c1,
        "products_vanish": c2,
        "image_sum_isotropic": c3,
        "radical_is_image_sum": c4,
    }
    if len(set(values.values())) != 1:
        raise CriteriaDisagreement(
            "abelianness criteria disagree: "
            + ", ".join(f"{k}={v}" for k, v in values.items())
        )
    return HolonomyReport(
        image_sum=u,
        image_sum_perp=u_perp,
        radical=radical,
        words_commute=c1,
        products_vanish=c2,
        image_sum_isotropic=c3,
        radical_is_image_sum=c4,
        abelian=c1,
        max_word_length=max_word_length,
    )


@dataclass(frozen=True)
class BlockForm:
    """The adapted-basis block shape of a single element.

    With k = dim(radical) and w = dim of its complement block, the
    conjugated nilpotent part must be

        [[0, -Bᵀ·I~, C],
         [0,    0,   B],
         [0,    0,   0]]

    with C skew-symmetric and Bᵀ·I~·B = 0 (columns isotropic and
    mutually orthogonal).  The three flags record each check.
    """

    witt: WittBasis
    b_block: Matrix
    c_block: Matrix
    adapted: Matrix
    zero_pattern_ok: bool
    c_skew_ok: bool
    b_columns_ok: bool

    @property
    def passed(self) -> bool:
        return self.zero_pattern_ok and self.c_skew_ok and self.b_columns_ok


def block_form(spec: GroupSpec, g: AffineIso, witt: WittBasis | None = None) -> BlockForm:
    """Conjugate g's nilpotent part into the basis adapted to the radical."""
    if not wolf_check(g).passed:
        raise PreconditionFailed("block_form requires an element passing wolf_check")
    if witt is None:
        witt = witt_extend(spec.form, isotropic_radical(spec))
    k, w = witt.k, witt.w_dim
    n = spec.form.n
    p = witt.change_of_basis
    adapted = p.inverse() @ g.nilpotent_part @ p

    b_block = adapted.submatrix(range(k, k + w), range(k + w, n))
    c_block = adapted.submatrix(range(k), range(k + w, n))
    top_middle = adapted.submatrix(range(k), range(k, k + w))

    zero_ok = (
        adapted.submatrix(range(k), range(k)).is_zero()
        and adapted.submatrix(range(k, n), range(k + w)).is_zero()
        and adapted.submatrix(range(k + w, n), range(k + w, n)).is_zero()
        and top_middle == -(b_block.transpose() @ witt.i_tilde)
    )
    c_skew_ok = c_block.is_skew()
    btb = b_block.transpose() @ witt.i_tilde @ b_block
    b_columns_ok = btb.is_zero()
    return BlockForm(witt, b_block, c_block, adapted, zero_ok, c_skew_ok, b_columns_ok)


@dataclass(frozen=True)
class IsotropicWitness:
    """A totally isotropic subspace of dimension >= 4, certifying s >= 4.

    ``pair`` are the generator indices with A_i·A_j != 0; ``vectors``
    are the two chosen column lifts spanning the 2-dimensional block
    inside the complement, and ``subspace`` is their span plus the
    radical.
    """

    pair: tuple[int, int]
    vectors: tuple[Vector, Vector]
    subspace: Subspace
    dim: int


def index_witness(spec: GroupSpec, report: HolonomyReport | None = None):
    """None for abelian groups; otherwise the constructed witness.

    Every claimed property is verified explicitly (rank of the B block,
    linear independence, total isotropy, dimension); a failure raises
    WitnessConstructionFailed naming the step, which is the designed
    outcome for inputs that satisfy only the element-wise conditions.
    """
    if report is None:
        report = abelian_report(spec)
    if report.abelian:
        return None
    form = spec.form
    nil = [g.nilpotent_part for g in spec.generators]
    pair = None
    for i in range(len(nil)):
        for j in range(len(nil)):
            if i != j and not (nil[i] @ nil[j]).is_zero():
                pair = (i, j)
                break
        if pair:
            break
    if pair is None:
        raise WitnessConstructionFailed("no generator pair with nonzero product")

    witt = witt_extend(form, report.radical)
    bf = block_form(spec, spec.generators[pair[0]], witt=witt)
    b = bf.b_block
    if b.rank() < 2:
        raise WitnessConstructionFailed(f"rank of B block is {b.rank()} < 2")

    cols = []
    for c in range(b.cols):
        col = b.col(c)
        if all(x == 0 for x in col):
            continue
        if not cols:
            cols.append((c, col))
        elif rref_basis([cols[0][1], col], b.rows).dim == 2:
            cols.append((c, col))
            break
    if len(cols) < 2:
        raise WitnessConstructionFailed("fewer than two independent B columns")

    w_vecs = witt.w_vectors
    lifted = []
    for _, col in cols:
        v = [0] * form.n
        for r, coeff in enumerate(col):
            if coeff:
                v = [x + coeff * y for x, y in zip(v, w_vecs[r])]
        lifted.append(tuple(v))

    w_prime = rref_basis(lifted, form.n)
    if w_prime.dim != 2:
        raise WitnessConstructionFailed("lifted columns do not span 2 dimensions")
    w_block_span = rref_basis(w_vecs, form.n)
    if not all(w_block_span.contains(v) for v in lifted):
        raise WitnessConstructionFailed("witness vectors left the complement block")
    total = sum_spaces(w_prime, report.radical)
    if total.dim != 2 + report.radical.dim:
        raise WitnessConstructionFailed("witness span is not a direct sum with the radical")
    if not is_totally_isotropic(form, total):
        raise WitnessConstructionFailed("witness subspace is not totally isotropic")
    if total.dim < 4:
        raise WitnessConstructionFailed(f"witness dimension {total.dim} < 4")
    if max_isotropic_bound(form) < total.dim or form.s < 4:
        raise WitnessConstructionFailed("signature bound fails: s < 4")
    return IsotropicWitness((pair[0], pair[1]), (lifted[0], lifted[1]), total, total.dim)
