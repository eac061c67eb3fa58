"""Affine isometries (L, v) of an indefinite scalar product, group words,
the six structural conditions on the nilpotent part, and fixed points.

An element is stored with its full linear part L; the nilpotent part is
A = L - I.  The structural conditions checked by :func:`wolf_check` are
the classical ones for elements of a group whose centralizer acts with
an open orbit: A² = 0, Av = 0, im A totally isotropic, v ⊥ im A,
im A = (ker A)^⊥ and ker A = (im A)^⊥.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .forms import BilinearForm, evaluate, is_totally_isotropic, orth_complement
from .linalg import (
    DimensionMismatch,
    Matrix,
    Subspace,
    Vector,
    image,
    kernel,
    solve_linear,
    vec,
    vec_add,
    vec_neg,
    zero_vec,
)


class IsometryError(ValueError):
    """The linear part does not preserve the form."""


class WordBudgetExceeded(RuntimeError):
    """Word enumeration grew past the configured cap."""


class AffineIso:
    """An affine isometry x -> L·x + v of a fixed bilinear form."""

    __slots__ = ("form", "linear", "translation")

    def __init__(self, form: BilinearForm, linear: Matrix, translation, check: bool = True):
        translation = vec(translation)
        if linear.shape != (form.n, form.n) or len(translation) != form.n:
            raise DimensionMismatch("element size does not match the form")
        if check and (linear.transpose() @ form.gram @ linear) != form.gram:
            raise IsometryError("linear part is not an isometry of the form")
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "translation", translation)

    def __setattr__(self, *a):
        raise AttributeError("AffineIso is immutable")

    @staticmethod
    def identity(form: BilinearForm) -> "AffineIso":
        return AffineIso(form, Matrix.identity(form.n), zero_vec(form.n), check=False)

    @property
    def nilpotent_part(self) -> Matrix:
        """A = L - I."""
        return self.linear - Matrix.identity(self.form.n)

    def is_identity(self) -> bool:
        return self.linear == Matrix.identity(self.form.n) and all(
            x == 0 for x in self.translation
        )

    def key(self):
        return (self.linear.entries, self.translation)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AffineIso)
            and self.linear == other.linear
            and self.translation == other.translation
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"AffineIso(linear={self.linear!r}, translation={self.translation})"


def compose(g: AffineIso, h: AffineIso) -> AffineIso:
    """g∘h: apply h first.  (L_g·L_h, L_g·v_h + v_g)."""
    if g.form is not h.form and g.form != h.form:
        raise DimensionMismatch("elements live over different forms")
    return AffineIso(
        g.form,
        g.linear @ h.linear,
        vec_add(g.linear.matvec(h.translation), g.translation),
        check=False,
    )


def inverse(g: AffineIso) -> AffineIso:
    li = g.linear.inverse()
    return AffineIso(g.form, li, vec_neg(li.matvec(g.translation)), check=False)


def act(g: AffineIso, x) -> Vector:
    """Image of the point x under g."""
    return vec_add(g.linear.matvec(vec(x)), g.translation)


def power(g: AffineIso, k: int) -> AffineIso:
    out = AffineIso.identity(g.form)
    step = g if k >= 0 else inverse(g)
    for _ in range(abs(k)):
        out = compose(out, step)
    return out


@dataclass(frozen=True)
class GroupSpec:
    """A finitely generated group of affine isometries."""

    name: str
    form: BilinearForm
    generators: tuple[AffineIso, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.form != self.form:
                raise DimensionMismatch("generator form differs from group form")


@dataclass(frozen=True)
class WolfReport:
    """Outcome of the six structural conditions for one element.

    Each condition carries an explicit failure witness where applicable:
    a vector whose image should vanish, or a pair with nonzero pairing.
    """

    square_zero: bool
    kills_translation: bool
    image_isotropic: bool
    translation_orthogonal: bool
    image_is_kernel_perp: bool
    kernel_is_image_perp: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return (
            self.square_zero
            and self.kills_translation
            and self.image_isotropic
            and self.translation_orthogonal
            and self.image_is_kernel_perp
            and self.kernel_is_image_perp
        )

    def conditions(self) -> dict:
        return {
            "square_zero": self.square_zero,
            "kills_translation": self.kills_translation,
            "image_isotropic": self.image_isotropic,
            "translation_orthogonal": self.translation_orthogonal,
            "image_is_kernel_perp": self.image_is_kernel_perp,
            "kernel_is_image_perp": self.kernel_is_image_perp,
        }


def wolf_check(g: AffineIso) -> WolfReport:
    """Evaluate all six structural conditions on A = L - I and v, exactly."""
    form = g.form
    a = g.nilpotent_part
    v = g.translation
    witnesses: dict = {}

    a2 = a @ a
    square_zero = a2.is_zero()
    if not square_zero:
        col = next(j for j in range(a2.cols) if any(a2.entries[i][j] != 0 for i in range(a2.rows)))
        witnesses["square_zero"] = ("A2_column", col, a2.col(col))

    av = a.matvec(v)
    kills_translation = all(x == 0 for x in av)
    if not kills_translation:
        witnesses["kills_translation"] = ("A_v", av)

    im = image(a)
    ker = kernel(a)
    image_isotropic = is_totally_isotropic(form, im)
    if not image_isotropic:
        pair = _isotropy_failure(form, im)
        witnesses["image_isotropic"] = ("pairing", *pair)

    translation_orthogonal = all(evaluate(form, v, u) == 0 for u in im.basis)
    if not translation_orthogonal:
        bad = next(u for u in im.basis if evaluate(form, v, u) != 0)
        witnesses["translation_orthogonal"] = ("pairing", v, bad, evaluate(form, v, bad))

    ker_perp = orth_complement(form, ker)
    im_perp = orth_complement(form, im)
    image_is_kernel_perp = im == ker_perp
    kernel_is_image_perp = ker == im_perp
    if not image_is_kernel_perp:
        witnesses["image_is_kernel_perp"] = ("spaces", im, ker_perp)
    if not kernel_is_image_perp:
        witnesses["kernel_is_image_perp"] = ("spaces", ker, im_perp)

    return WolfReport(
        square_zero,
        kills_translation,
        image_isotropic,
        translation_orthogonal,
        image_is_kernel_perp,
        kernel_is_image_perp,
        witnesses,
    )


def _isotropy_failure(form: BilinearForm, space: Subspace):
    for i, u in enumerate(space.basis):
        for j in range(i, space.dim):
            val = evaluate(form, u, space.basis[j])
            if val != 0:
                return (u, space.basis[j], val)
    raise AssertionError("no failing pair in a non-isotropic space")


DEFAULT_WORD_CAP = 20000


def words_up_to(spec: GroupSpec, length: int, max_words: int = DEFAULT_WORD_CAP) -> list[AffineIso]:
    """All products of at most ``length`` generators-or-inverses.

    Breadth-first over the letters, deduplicated by exact equality; the
    identity is always first.  Raises WordBudgetExceeded past the cap.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    letters: list[AffineIso] = []
    for g in spec.generators:
        letters.append(g)
        letters.append(inverse(g))
    ident = AffineIso.identity(spec.form)
    seen = {ident.key(): ident}
    frontier = [ident]
    out = [ident]
    for _ in range(length):
        new_frontier = []
        for w in frontier:
            for letter in letters:
                nxt = compose(w, letter)
                k = nxt.key()
                if k not in seen:
                    if len(seen) >= max_words:
                        raise WordBudgetExceeded(f"more than {max_words} distinct words")
                    seen[k] = nxt
                    new_frontier.append(nxt)
                    out.append(nxt)
        frontier = new_frontier
        if not frontier:
            break
    return out


def fixed_point_check(g: AffineIso):
    """A fixed point of g, or None.  g·x = x iff A·x = -v; the returned
    point is the canonical solution (free variables zero)."""
    return solve_linear(g.nilpotent_part, vec_neg(g.translation))
