import pytest

from flathol.affine import (
    AffineIso,
    GroupSpec,
    IsometryError,
    WordBudgetExceeded,
    act,
    compose,
    fixed_point_check,
    inverse,
    power,
    wolf_check,
    words_up_to,
)
from flathol.forms import standard_form
from flathol.linalg import Matrix


def test_isometry_invariant_enforced(fix_quad22):
    form = fix_quad22.form
    with pytest.raises(IsometryError):
        AffineIso(form, Matrix.identity(4).scale(2), (0, 0, 0, 0))


def test_translation_composition():
    form = standard_form(2, 1)
    t1 = AffineIso(form, Matrix.identity(3), (1, 2, 3))
    t2 = AffineIso(form, Matrix.identity(3), (0, 1, 0))
    assert compose(t1, t2).translation == (1, 3, 3)
    assert compose(t1, inverse(t1)).is_identity()


def test_quad22_square(fix_quad22):
    g = fix_quad22.generators[0]
    a = g.nilpotent_part
    g2 = compose(g, g)
    assert g2.linear == Matrix.identity(4) + a.scale(2)
    assert g2.translation == (2, 0, 0, 0)


def test_act_respects_composition(fix_quad22):
    g = fix_quad22.generators[0]
    h = inverse(g)
    x = (3, 1, 4, 1)
    assert act(compose(g, h), x) == act(g, act(h, x))
    assert act(g, (0, 0, 0, 0)) == g.translation


def test_wolf_check_identity(fix_quad22):
    rep = wolf_check(AffineIso.identity(fix_quad22.form))
    assert rep.passed and not rep.witnesses


def test_wolf_check_quad22_generator(fix_quad22):
    rep = wolf_check(fix_quad22.generators[0])
    assert rep.passed
    assert all(rep.conditions().values())


def test_wolf_check_failure_witness(fix_quad22):
    # same linear part, translation moved to w1: A·v = -u != 0
    g = fix_quad22.generators[0]
    bad = AffineIso(fix_quad22.form, g.linear, (0, 1, 0, 0))
    rep = wolf_check(bad)
    assert not rep.kills_translation
    assert rep.witnesses["kills_translation"][1] == (-1, 0, 0, 0)
    assert rep.square_zero  # the other conditions are unaffected


def test_words_trivial_group():
    spec = GroupSpec("t", standard_form(1, 1), ())
    words = words_up_to(spec, 3)
    assert len(words) == 1 and words[0].is_identity()


def test_words_single_translation():
    form = standard_form(2, 0)
    g = AffineIso(form, Matrix.identity(2), (1, 0))
    spec = GroupSpec("z", form, (g,))
    words = words_up_to(spec, 2)
    assert sorted(w.translation[0] for w in words) == [-2, -1, 0, 1, 2]


def test_words_quad22_powers(fix_quad22):
    words = words_up_to(fix_quad22, 2)
    a = fix_quad22.generators[0].nilpotent_part
    expected = {
        (Matrix.identity(4) + a.scale(k)).entries: k for k in range(-2, 3)
    }
    assert len(words) == 5
    for w in words:
        k = expected[w.linear.entries]
        assert w.translation == (k, 0, 0, 0)


def test_word_budget():
    form = standard_form(2, 0)
    g1 = AffineIso(form, Matrix.identity(2), (1, 0))
    g2 = AffineIso(form, Matrix.identity(2), (0, 1))
    spec = GroupSpec("z2", form, (g1, g2))
    with pytest.raises(WordBudgetExceeded):
        words_up_to(spec, 4, max_words=10)


def test_power_formula_on_wolf_elements(fix_quad22, fix_wolf42):
    for spec in (fix_quad22, fix_wolf42):
        g = spec.generators[0]
        a = g.nilpotent_part
        for k in range(-10, 11):
            gk = power(g, k)
            assert gk.linear == Matrix.identity(spec.form.n) + a.scale(k)
            assert gk.translation == tuple(k * x for x in g.translation)
            assert wolf_check(gk).passed


def test_fixed_points():
    form = standard_form(2, 0)
    t = AffineIso(form, Matrix.identity(2), (1, 0))
    assert fixed_point_check(t) is None
    assert fixed_point_check(AffineIso.identity(form)) == (0, 0)


def test_fixed_point_quad22(fix_quad22):
    g = fix_quad22.generators[0]
    pt = fixed_point_check(g)
    assert pt is not None
    assert act(g, pt) == pt
    # canonical solution: free variables zeroed
    assert pt == (0, 1, 0, 0)
    # (0,0,-1,0) is also fixed; it differs from pt by a kernel vector
    assert act(g, (0, 0, -1, 0)) == (0, 0, -1, 0)


def test_abelian_spec_words_pass_wolf(valid_spec_sample):
    from flathol.holonomy import abelian_report

    checked = 0
    for spec in valid_spec_sample[:40]:
        report = abelian_report(spec)
        if not report.abelian:
            continue
        for w in words_up_to(spec, 4):
            assert wolf_check(w).passed
        checked += 1
    assert checked > 10
