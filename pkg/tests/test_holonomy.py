import pytest

from flathol.affine import AffineIso, words_up_to
from flathol.forms import is_totally_isotropic, witt_extend
from flathol.holonomy import (
    PreconditionFailed,
    abelian_report,
    block_form,
    image_sum,
    index_witness,
    isotropic_radical,
)
from flathol.linalg import Matrix, image, rref_basis, sum_spaces, zero_space


def test_image_sum_fixtures(fix_quad22, fix_wolf42, fix_trivial22):
    assert image_sum(fix_trivial22).is_zero()
    assert image_sum(fix_quad22).basis == ((1, 0, 0, 0), (0, 1, 1, 0))
    e = lambda i: tuple(1 if j == i else 0 for j in range(6))
    assert image_sum(fix_wolf42) == rref_basis([e(0), e(1)], 6)


def test_radical_fixtures(fix_quad22, fix_wolf42, fix_trivial22):
    assert isotropic_radical(fix_trivial22).is_zero()
    assert isotropic_radical(fix_quad22) == image_sum(fix_quad22)
    assert isotropic_radical(fix_wolf42) == image_sum(fix_wolf42)


def test_radical_always_isotropic(valid_spec_sample):
    for spec in valid_spec_sample:
        radical = isotropic_radical(spec)
        assert is_totally_isotropic(spec.form, radical)


def test_image_sum_from_words_agrees(valid_spec_sample):
    # generator images span the images of all words
    for spec in valid_spec_sample[:30]:
        u = image_sum(spec)
        from_words = zero_space(spec.form.n)
        for w in words_up_to(spec, 4):
            from_words = sum_spaces(from_words, image(w.nilpotent_part))
        assert from_words == u


def test_abelian_report_fixtures(fix_quad22, fix_wolf42, fix_trivial22, fix_nonabelian44):
    for spec, expected in (
        (fix_trivial22, True),
        (fix_quad22, True),
        (fix_wolf42, True),
        (fix_nonabelian44, False),
    ):
        rep = abelian_report(spec)
        assert rep.abelian is expected
        assert set(rep.criteria().values()) == {expected}
        if expected:
            assert rep.radical == rep.image_sum


def test_report_invariants(valid_spec_sample):
    for spec in valid_spec_sample:
        rep = abelian_report(spec)
        assert len(set(rep.criteria().values())) == 1
        assert rep.image_sum_perp.dim + rep.image_sum.dim == spec.form.n


def test_block_form_identity_element(fix_quad22):
    bf = block_form(fix_quad22, AffineIso.identity(fix_quad22.form))
    assert bf.passed
    assert bf.b_block.is_zero() and bf.c_block.is_zero()


def test_block_form_quad22(fix_quad22):
    bf = block_form(fix_quad22, fix_quad22.generators[0])
    assert bf.passed
    assert bf.c_block == Matrix([[0, -1], [1, 0]])
    assert bf.b_block.shape == (0, 2)


def test_block_form_wolf42(fix_wolf42):
    bf = block_form(fix_wolf42, fix_wolf42.generators[0])
    assert bf.passed
    assert bf.c_block == Matrix([[0, 1], [-1, 0]])
    assert bf.b_block == Matrix.zeros(2, 2)


def test_block_form_requires_wolf(fix_quad22):
    g = fix_quad22.generators[0]
    bad = AffineIso(fix_quad22.form, g.linear, (0, 1, 0, 0))
    with pytest.raises(PreconditionFailed):
        block_form(fix_quad22, bad)


def test_block_form_sampled(valid_spec_sample):
    for spec in valid_spec_sample[:40]:
        witt = witt_extend(spec.form, isotropic_radical(spec))
        for g in spec.generators:
            bf = block_form(spec, g, witt=witt)
            assert bf.passed


def test_index_witness_none_for_abelian(fix_quad22, fix_wolf42, fix_trivial22):
    for spec in (fix_quad22, fix_wolf42, fix_trivial22):
        assert index_witness(spec) is None


def test_index_witness_nonabelian44(fix_nonabelian44):
    rep = abelian_report(fix_nonabelian44)
    wit = index_witness(fix_nonabelian44, rep)
    assert wit is not None
    assert wit.dim >= 4
    assert wit.subspace.dim == wit.dim
    assert is_totally_isotropic(fix_nonabelian44.form, wit.subspace)
    assert fix_nonabelian44.form.s >= 4
    # the two selected vectors live in the complement block
    witt = witt_extend(fix_nonabelian44.form, rep.radical)
    w_span = rref_basis(witt.w_vectors, 8)
    for v in wit.vectors:
        assert w_span.contains(v)
    assert wit.subspace.contains_space(rep.radical)
