"""The group-spec file format and shared JSON helpers.

A group-spec file is a JSON document:

    {
      "schema": 1,
      "name": "quad22",
      "dim": 4,
      "signature": [2, 2],
      "gram": [["0","0","0","1"], ...],          # optional
      "generators": [
        {"linear": [...n x n...], "translation": [...n...]}
      ]
    }

Scalar entries are integers or "num/den" strings; floats are rejected
outright.  When "gram" is omitted the diagonal form of the declared
signature is used.  All emitted JSON is deterministic (sorted keys,
fixed indentation) so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .affine import AffineIso, GroupSpec, IsometryError
from .forms import BilinearForm, DegenerateFormError, standard_form
from .linalg import Matrix, Scalar, Subspace, scalar_str

SCHEMA_VERSION = 1


class SpecFileError(ValueError):
    """The input document is malformed."""


def parse_scalar(x) -> Scalar:
    if isinstance(x, bool) or isinstance(x, float):
        raise SpecFileError(f"entries must be exact rationals, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            f = Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecFileError(f"bad rational string {x!r}") from exc
        return f.numerator if f.denominator == 1 else f
    raise SpecFileError(f"entries must be integers or 'num/den' strings, got {x!r}")


def parse_matrix(data, rows: int, cols: int, what: str) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise SpecFileError(f"{what} must be a {rows}x{cols} matrix")
    out = []
    for row in data:
        if not isinstance(row, list) or len(row) != cols:
            raise SpecFileError(f"{what} must be a {rows}x{cols} matrix")
        out.append([parse_scalar(x) for x in row])
    return Matrix(out)


def parse_vector(data, length: int, what: str) -> tuple:
    if not isinstance(data, list) or len(data) != length:
        raise SpecFileError(f"{what} must be a vector of length {length}")
    return tuple(parse_scalar(x) for x in data)


def matrix_json(m: Matrix) -> list:
    return [[scalar_str(x) for x in row] for row in m.entries]


def vector_json(v) -> list:
    return [scalar_str(x) for x in v]


def subspace_json(s: Subspace) -> dict:
    return {
        "ambient_dim": s.ambient_dim,
        "basis": [vector_json(v) for v in s.basis],
    }


def parse_subspace(data, what: str) -> Subspace:
    try:
        dim = data["ambient_dim"]
        basis_data = data["basis"]
    except (KeyError, TypeError) as exc:
        raise SpecFileError(f"{what} must have ambient_dim and basis") from exc
    if not isinstance(dim, int) or dim < 0:
        raise SpecFileError(f"{what} has a bad ambient_dim")
    basis = tuple(parse_vector(row, dim, f"{what} basis row") for row in basis_data)
    return Subspace(dim, basis)


def group_spec_to_dict(spec: GroupSpec) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "name": spec.name,
        "dim": spec.form.n,
        "signature": [spec.form.p, spec.form.s],
        "gram": matrix_json(spec.form.gram),
        "generators": [
            {
                "linear": matrix_json(g.linear),
                "translation": vector_json(g.translation),
            }
            for g in spec.generators
        ],
    }


def group_spec_from_dict(data) -> GroupSpec:
    if not isinstance(data, dict):
        raise SpecFileError("group spec must be a JSON object")
    try:
        name = data["name"]
        dim = data["dim"]
        sig = data["signature"]
        gens_data = data["generators"]
    except KeyError as exc:
        raise SpecFileError(f"missing field {exc.args[0]!r}") from exc
    if not isinstance(name, str):
        raise SpecFileError("name must be a string")
    if not isinstance(dim, int) or dim < 1:
        raise SpecFileError("dim must be a positive integer")
    if (
        not isinstance(sig, list)
        or len(sig) != 2
        or not all(isinstance(x, int) and x >= 0 for x in sig)
    ):
        raise SpecFileError("signature must be [p, s] with nonnegative integers")
    p, s = sig
    if p + s != dim:
        raise SpecFileError(f"signature {p}+{s} does not sum to dim {dim}")
    if "gram" in data and data["gram"] is not None:
        gram = parse_matrix(data["gram"], dim, dim, "gram")
        try:
            form = BilinearForm.from_gram(gram)
        except (DegenerateFormError, ValueError) as exc:
            raise SpecFileError(f"bad gram matrix: {exc}") from exc
        if form.signature != (p, s):
            raise SpecFileError(
                f"gram has signature {form.signature}, file declares {(p, s)}"
            )
    else:
        form = standard_form(p, s)
    if not isinstance(gens_data, list):
        raise SpecFileError("generators must be a list")
    gens = []
    for i, g in enumerate(gens_data):
        if not isinstance(g, dict):
            raise SpecFileError(f"generator {i} must be an object")
        try:
            linear = parse_matrix(g["linear"], dim, dim, f"generator {i} linear part")
            translation = parse_vector(g["translation"], dim, f"generator {i} translation")
        except KeyError as exc:
            raise SpecFileError(f"generator {i} missing {exc.args[0]!r}") from exc
        try:
            gens.append(AffineIso(form, linear, translation, check=True))
        except IsometryError as exc:
            raise SpecFileError(f"generator {i} is not an isometry: {exc}") from exc
    return GroupSpec(name, form, tuple(gens))


def dumps_canonical(obj) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_group_spec(path) -> GroupSpec:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecFileError(f"not valid JSON: {exc}") from exc
    return group_spec_from_dict(data)


def save_group_spec(spec: GroupSpec, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(group_spec_to_dict(spec)))
