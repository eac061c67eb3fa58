import random

import pytest

from flathol.affine import wolf_check, words_up_to
from flathol.holonomy import abelian_report, index_witness
from flathol.search import (
    InfeasibleParameters,
    SearchReport,
    _block_gram_rows,
    _check_generators_block,
    _materialize,
    _sample_candidate,
    _words_pass_exact,
    _words_pass_fast,
    sample_generators,
    sample_valid_specs,
    search_nonabelian,
    theorem_scan,
)
from flathol.specfile import dumps_canonical, group_spec_to_dict


def test_sample_definite_signature_pure_translations():
    spec = sample_generators((2, 0), 2, seed=5)
    for g in spec.generators:
        assert g.nilpotent_part.is_zero()


def test_sample_quad22_like():
    spec = sample_generators((2, 2), 2, seed=3, k=2)
    assert spec.form.signature == (2, 2)
    for g in spec.generators:
        assert wolf_check(g).passed
        a = g.nilpotent_part
        # with k = min(p, s) the complement is empty: corner block only
        assert all(a.entries[i][j] == 0 for i in range(4) for j in range(2))


def test_sample_requires_feasible_b():
    with pytest.raises(InfeasibleParameters):
        sample_generators((2, 2), 2, seed=1, k=2, require_b=True)
    spec = sample_generators((4, 4), 2, seed=1, k=2, require_b=True)
    assert any(not g.nilpotent_part.is_zero() for g in spec.generators)


def test_sampled_generators_always_pass_wolf():
    for seed in range(25):
        rng = random.Random(f"t:{seed}")
        p, s = rng.randint(1, 5), rng.randint(0, 4)
        spec = sample_generators((p, s), 2, seed=seed)
        for g in spec.generators:
            assert wolf_check(g).passed


def test_fast_filter_agrees_with_exact_words():
    mismatches = []
    for trial in range(120):
        rng = random.Random(f"agree:{trial}")
        p, s = rng.randint(1, 5), rng.randint(1, 4)
        cand = _sample_candidate(rng, p, s, 2, 2)
        assert _check_generators_block(cand)
        verdict, abelian = _words_pass_fast(cand, _block_gram_rows(cand.k, cand.signs))
        spec = _materialize(cand, f"agree{trial}")
        exact = _words_pass_exact(spec, 3)
        if verdict is True and not exact:
            mismatches.append((trial, "fast-pass"))
        if verdict is False and exact:
            mismatches.append((trial, "fast-fail"))
        if verdict is True:
            assert abelian_report(spec).abelian == abelian
    assert not mismatches


def test_search_report_reproducible():
    r1 = search_nonabelian((3, 3), 400, seed=11)
    r2 = search_nonabelian((3, 3), 400, seed=11)
    assert r1.stats == r2.stats
    payload1 = {
        "stats": r1.stats,
        "found": [group_spec_to_dict(s) for s in r1.found],
    }
    payload2 = {
        "stats": r2.stats,
        "found": [group_spec_to_dict(s) for s in r2.found],
    }
    assert dumps_canonical(payload1) == dumps_canonical(payload2)


def test_search_small_signatures_empty():
    for sig in ((2, 2), (3, 3), (5, 1)):
        rep = search_nonabelian(sig, 500, seed=23)
        assert rep.found == ()
        assert rep.stats["trials"] == 500


def test_search_44_finds_survivors():
    rep = search_nonabelian((4, 4), 6000, seed=1)
    assert rep.stats["found"] == len(rep.found) >= 1
    for spec in rep.found:
        for g in spec.generators:
            assert wolf_check(g).passed
        assert all(wolf_check(w).passed for w in words_up_to(spec, 3))
        r = abelian_report(spec)
        assert not r.abelian
        wit = index_witness(spec, r)
        assert wit is not None and wit.dim >= 4


def test_theorem_scan_small():
    summary = theorem_scan(1, 150, seed=9, p_cap=3)
    assert summary.violations == ()
    sigs = [rep.signature for rep in summary.reports]
    assert (1, 0) in sigs and (3, 1) in sigs
    for rep in summary.reports:
        assert isinstance(rep, SearchReport)
        assert rep.stats["trials"] == 150


def test_sample_valid_specs_deterministic_and_valid():
    a = sample_valid_specs(30, seed=77)
    b = sample_valid_specs(30, seed=77)
    assert [group_spec_to_dict(x) for x in a] == [group_spec_to_dict(y) for y in b]
    for spec in a:
        assert spec.form.s <= 4 and spec.form.n <= 8
        for g in spec.generators:
            assert wolf_check(g).passed
        assert _words_pass_exact(spec, 3)
