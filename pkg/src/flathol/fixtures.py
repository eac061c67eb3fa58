"""The in-repo fixture corpus.

* ``quad22``: n = 4, signature (2, 2), a single generator whose
  nilpotent part has a 2-dimensional self-perpendicular image; an
  algebra fixture only (the action has a fixed point, so it is not
  free).
* ``wolf42``: n = 6, signature (4, 2), one generator rotating the dual
  block into the isotropic block, translating along the complement.
* ``trivial(p, s)``: no generators.
* ``nonabelian44``: the first signature-(4,4) survivor found by
  ``search_nonabelian((4, 4), budget=20000, seed=1)``, frozen
  permanently; two generators with nonzero cross products, an isotropic
  witness of dimension 4, and an open centralizer orbit at generic
  points (not at the origin).

``scripts/export_fixtures.py`` regenerates the JSON copies under
``data/``; a test pins them to these builders.
"""

from __future__ import annotations

from importlib import resources

from .affine import AffineIso, GroupSpec
from .forms import BilinearForm, standard_form
from .linalg import Matrix


def quad22() -> GroupSpec:
    gram = Matrix(
        [
            [0, 0, 0, 1],
            [0, 1, 0, 0],
            [0, 0, -1, 0],
            [1, 0, 0, 0],
        ]
    )
    form = BilinearForm.from_gram(gram)
    nilpotent = Matrix(
        [
            [0, -1, 1, 0],
            [0, 0, 0, 1],
            [0, 0, 0, 1],
            [0, 0, 0, 0],
        ]
    )
    g = AffineIso(form, Matrix.identity(4) + nilpotent, (1, 0, 0, 0))
    return GroupSpec("quad22", form, (g,))


def quad22_nilpotent() -> Matrix:
    return quad22().generators[0].nilpotent_part


def wolf42() -> GroupSpec:
    gram = Matrix(
        [
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
        ]
    )
    form = BilinearForm.from_gram(gram)
    nilpotent = Matrix(
        [
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, -1, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
        ]
    )
    g = AffineIso(form, Matrix.identity(6) + nilpotent, (0, 0, 1, 0, 0, 0))
    return GroupSpec("wolf42", form, (g,))


def trivial(p: int, s: int) -> GroupSpec:
    return GroupSpec(f"trivial{p}{s}", standard_form(p, s), ())


def nonabelian44() -> GroupSpec:
    gram = Matrix(
        [
            [0, 0, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 0, 0, 1],
            [0, 0, 1, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, -1, 0, 0, 0],
            [0, 0, 0, 0, 0, -1, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, 0],
        ]
    )
    form = BilinearForm.from_gram(gram)
    a1 = Matrix(
        [
            [0, 0, -2, 0, 0, 2, 0, -2],
            [0, 0, 0, 2, -2, 0, 2, 0],
            [0, 0, 0, 0, 0, 0, 2, 0],
            [0, 0, 0, 0, 0, 0, 0, -2],
            [0, 0, 0, 0, 0, 0, 0, -2],
            [0, 0, 0, 0, 0, 0, 2, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
        ]
    )
    a2 = Matrix(
        [
            [0, 0, 0, -1, -1, 0, 0, -1],
            [0, 0, -1, 0, 0, -1, 1, 0],
            [0, 0, 0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 0, -1, 0],
            [0, 0, 0, 0, 0, 0, 0, -1],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
        ]
    )
    ident = Matrix.identity(8)
    g1 = AffineIso(form, ident + a1, (2, 0, 0, 0, 0, 0, 0, 0))
    g2 = AffineIso(form, ident + a2, (0, 0, 0, 0, 0, 0, 0, 0))
    return GroupSpec("nonabelian44", form, (g1, g2))


FIXTURE_BUILDERS = {
    "quad22": quad22,
    "wolf42": wolf42,
    "trivial22": lambda: trivial(2, 2),
    "nonabelian44": nonabelian44,
}


def all_fixtures() -> list[GroupSpec]:
    return [build() for build in FIXTURE_BUILDERS.values()]


def fixture_path(name: str):
    """Filesystem path of the shipped JSON copy of a fixture."""
    if name not in FIXTURE_BUILDERS:
        raise KeyError(f"unknown fixture {name!r}")
    return resources.files("flathol").joinpath(f"data/{name}.json")
