from oracles import sympy_orbit_dim

from flathol.centralizer import (
    centralizer_algebra,
    centralizer_translations,
    orbit_dimension,
    u0perp_centralizes,
)
from flathol.forms import orth_complement
from flathol.holonomy import abelian_report, image_sum, isotropic_radical
from flathol.linalg import Matrix, kernel, rref_basis


def test_translations_trivial_group(fix_trivial22):
    assert centralizer_translations(fix_trivial22).dim == 4


def test_translations_fixtures(fix_quad22, fix_wolf42):
    assert centralizer_translations(fix_quad22) == kernel(
        fix_quad22.generators[0].nilpotent_part
    )
    assert centralizer_translations(fix_quad22).basis == ((1, 0, 0, 0), (0, 1, 1, 0))
    e = lambda i: tuple(1 if j == i else 0 for j in range(6))
    assert centralizer_translations(fix_wolf42) == rref_basis([e(0), e(1), e(2), e(3)], 6)


def test_translations_equal_image_sum_perp(valid_spec_sample, all_fixture_specs):
    for spec in list(valid_spec_sample[:60]) + all_fixture_specs:
        assert centralizer_translations(spec) == orth_complement(
            spec.form, image_sum(spec)
        )


def test_radical_inside_translations(valid_spec_sample, all_fixture_specs):
    for spec in list(valid_spec_sample[:60]) + all_fixture_specs:
        assert centralizer_translations(spec).contains_space(isotropic_radical(spec))


def test_trivial_group_full_isometry_algebra(fix_trivial22):
    alg = centralizer_algebra(fix_trivial22)
    n = 4
    assert alg.dim == n * (n - 1) // 2 + n
    assert orbit_dimension(fix_trivial22, (0, 0, 0, 0), alg) == n
    assert orbit_dimension(fix_trivial22, (5, -3, 2, 7), alg) == n


def _check_membership(spec, x, w):
    gram = spec.form.gram
    assert (x.transpose() @ gram + gram @ x).is_zero()
    for g in spec.generators:
        a = g.nilpotent_part
        assert (x @ a) == (a @ x)
        assert x.matvec(g.translation) == a.matvec(w)


def test_algebra_members_satisfy_conditions(fix_quad22, fix_wolf42, fix_nonabelian44):
    for spec in (fix_quad22, fix_wolf42, fix_nonabelian44):
        alg = centralizer_algebra(spec)
        for x, w in alg.basis:
            _check_membership(spec, x, w)


def test_quad22_contains_nilpotent_pairs(fix_quad22):
    # (A, w) for w in ker A solves all three conditions; substitution check
    a = fix_quad22.generators[0].nilpotent_part
    for w in kernel(a).basis:
        _check_membership(fix_quad22, a, w)
    # and the computed algebra does contain it: (A, 0) must be a member
    alg = centralizer_algebra(fix_quad22)
    flat = [tuple(e for row in x.entries for e in row) + tuple(w) for x, w in alg.basis]
    target = tuple(e for row in a.entries for e in row) + (0, 0, 0, 0)
    assert rref_basis(flat, 20).contains(target)


def _sympy_orbit_dim(spec, point):
    """Independent brute-force oracle: build the linear system over
    (vec X, w) with sympy, enumerate its nullspace, span the tangent
    vectors."""
    n = spec.form.n
    gram = sympy.Matrix([[sympy.Rational(e) for e in row] for row in spec.form.gram.entries])
    rows = []
    for g in spec.generators:
        a = sympy.Matrix([[sympy.Rational(e) for e in row] for row in g.nilpotent_part.entries])
        v = sympy.Matrix([sympy.Rational(e) for e in g.translation])
        for r in range(n):
            for c in range(n):
                row = [sympy.S.Zero] * (n * n + n)
                for m in range(n):
                    row[r * n + m] += a[m, c]
                    row[m * n + c] -= a[r, m]
                rows.append(row)
        for r in range(n):
            row = [sympy.S.Zero] * (n * n + n)
            for m in range(n):
                row[r * n + m] += v[m]
                row[n * n + m] -= a[r, m]
            rows.append(row)
    for r in range(n):
        for c in range(n):
            row = [sympy.S.Zero] * (n * n + n)
            for m in range(n):
                row[m * n + r] += gram[m, c]
                row[m * n + c] += gram[r, m]
            rows.append(row)
    system = sympy.Matrix(rows)
    null = system.nullspace()
    pt = sympy.Matrix([sympy.Rational(x) for x in point])
    tangent = []
    for sol in null:
        x = sympy.Matrix(n, n, lambda i, j: sol[i * n + j])
        w = sympy.Matrix([sol[n * n + m] for m in range(n)])
        tangent.append(list(x * pt + w))
    if not tangent:
        return 0
    return sympy.Matrix(tangent).rank()


def test_orbit_dimensions_match_brute_force(fix_quad22, fix_wolf42):
    assert _sympy_orbit_dim(fix_quad22, (0, 0, 0, 0)) == 4
    assert orbit_dimension(fix_quad22, (0, 0, 0, 0)) == 4
    assert _sympy_orbit_dim(fix_wolf42, (0,) * 6) == 6
    assert orbit_dimension(fix_wolf42, (0,) * 6) == 6


def test_nonabelian44_orbit_open_generically(fix_nonabelian44):
    alg = centralizer_algebra(fix_nonabelian44)
    assert orbit_dimension(fix_nonabelian44, (1,) * 8, alg) == 8
    assert orbit_dimension(fix_nonabelian44, (0,) * 8, alg) < 8


def test_u0perp_centralizes_fixtures(
    fix_trivial22, fix_quad22, fix_wolf42, fix_nonabelian44
):
    for spec, expected in (
        (fix_trivial22, True),
        (fix_quad22, True),
        (fix_wolf42, True),
        (fix_nonabelian44, False),
    ):
        flag, witness = u0perp_centralizes(spec)
        assert flag is expected
        if not flag:
            idx, u, au = witness
            assert any(x != 0 for x in au)
            assert spec.generators[idx].nilpotent_part.matvec(u) == au


def test_u0perp_matches_abelian_report(valid_spec_sample):
    for spec in valid_spec_sample[:60]:
        rep = abelian_report(spec)
        flag, _ = u0perp_centralizes(spec, rep)
        assert flag == rep.abelian
