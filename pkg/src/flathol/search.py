"""Randomized construction of candidate generator sets and signature scans.

Candidates are built directly in adapted block coordinates, where the
element-wise structural conditions have positive probability: pick the
dimension k of the isotropic block, draw the middle block B with
isotropic, mutually orthogonal integer columns, draw a skew C, and draw
translations from the kernel.  The word-level filters then reduce to
small integer computations:

* every word of any length passes the linear-part conditions iff each
  cross product pairing Bᵢᵀ·I~·Bⱼ is skew-symmetric (the length-2 word
  fails otherwise);
* for candidates whose products all vanish, the remaining word
  conditions reduce to the pairwise translation identities
  Aᵢ·vⱼ + Aⱼ·vᵢ = 0 and vᵢᵀ·G·Aⱼ + vⱼᵀ·G·Aᵢ = 0.

Candidates with nonzero products that survive the cheap tests are rare
and get the full exact treatment: word enumeration with all six checks,
then the centralizer's open-orbit test.  Everything recorded in a
report is re-verified through the exact machinery.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import lcm

from .affine import AffineIso, GroupSpec, wolf_check, words_up_to
from .centralizer import centralizer_algebra, orbit_dimension
from .forms import BilinearForm
from .holonomy import abelian_report, index_witness
from .linalg import Matrix, kernel

DEFAULT_ENTRY_BOUND = 2
HOT_WORD_LENGTH = 3


class InfeasibleParameters(ValueError):
    """The requested candidate shape cannot exist (e.g. a nonzero B over
    a definite complement block)."""


# -- block-coordinate plumbing (integer arithmetic throughout) --------------


def _block_gram_rows(k: int, signs: tuple[int, ...]) -> list[list[int]]:
    w = len(signs)
    n = 2 * k + w
    rows = [[0] * n for _ in range(n)]
    for i in range(k):
        rows[i][k + w + i] = 1
        rows[k + w + i][i] = 1
    for i in range(w):
        rows[k + i][k + i] = signs[i]
    return rows


def _assemble_nilpotent(k: int, signs: tuple[int, ...], b_rows, c_rows) -> list[list[int]]:
    """A = [[0, -Bᵀ·I~, C], [0, 0, B], [0, 0, 0]] as integer rows."""
    w = len(signs)
    n = 2 * k + w
    rows = [[0] * n for _ in range(n)]
    for i in range(k):
        for j in range(w):
            rows[i][k + j] = -b_rows[j][i] * signs[j]
        for j in range(k):
            rows[i][k + w + j] = c_rows[i][j]
    for i in range(w):
        for j in range(k):
            rows[k + i][k + w + j] = b_rows[i][j]
    return rows


def _pairing(signs, x, y) -> int:
    return sum(s * a * b for s, a, b in zip(signs, x, y))


_ISOTROPIC_CACHE: dict = {}


def _isotropic_vectors(signs: tuple[int, ...], bound: int) -> list[tuple[int, ...]]:
    """All integer vectors with entries in [-bound, bound] that are
    isotropic for diag(signs), in deterministic order; the zero vector
    comes first."""
    key = (signs, bound)
    cached = _ISOTROPIC_CACHE.get(key)
    if cached is not None:
        return cached
    w = len(signs)
    out = []
    values = list(range(-bound, bound + 1))

    def rec(prefix, acc):
        if len(prefix) == w:
            if acc == 0:
                out.append(tuple(prefix))
            return
        s = signs[len(prefix)]
        for val in values:
            rec(prefix + [val], acc + s * val * val)

    rec([], 0)
    out.sort(key=lambda v: (sum(x != 0 for x in v), v))
    _ISOTROPIC_CACHE[key] = out
    return out


def _int_rows(basis) -> list[tuple[int, ...]]:
    """Clear denominators of a rational RREF basis, row by row."""
    out = []
    for row in basis:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append(tuple(int(x * mult) for x in row))
    return out


def _kernel_int_basis_of(rows, n: int) -> list[tuple[int, ...]]:
    return _int_rows(kernel(Matrix(rows, cols=n)).basis)


@dataclass
class _Candidate:
    """Raw integer block data for one trial (before materialization)."""

    p: int
    s: int
    k: int
    signs: tuple[int, ...]
    b_blocks: list  # per generator, w x k integer rows
    c_blocks: list  # per generator, k x k integer rows
    nilpotents: list  # per generator, assembled n x n integer rows
    translations: list  # per generator, length-n integer vectors

    @property
    def n(self) -> int:
        return self.p + self.s


_FORM_CACHE: dict = {}


def _block_form_for(k: int, p: int, s: int) -> BilinearForm:
    key = (k, p, s)
    form = _FORM_CACHE.get(key)
    if form is None:
        signs = tuple([1] * (p - k) + [-1] * (s - k))
        form = BilinearForm.from_gram(Matrix(_block_gram_rows(k, signs)))
        assert form.signature == (p, s)
        _FORM_CACHE[key] = form
    return form


def _materialize(cand: _Candidate, name: str) -> GroupSpec:
    form = _block_form_for(cand.k, cand.p, cand.s)
    ident = Matrix.identity(cand.n)
    gens = []
    for a_rows, v in zip(cand.nilpotents, cand.translations):
        gens.append(AffineIso(form, ident + Matrix(a_rows), tuple(v), check=False))
    return GroupSpec(name, form, tuple(gens))


def _sample_b_block(rng, k, signs, bound, require_nonzero=False, aligned_to=None):
    """w x k integer rows whose columns are isotropic and mutually
    orthogonal for diag(signs).

    ``aligned_to`` (a previously sampled block) optionally also makes
    each column orthogonal to the same-index column of that block; this
    concentrates sampling where cross pairings can be skew without
    constraining them to be.
    """
    w = len(signs)
    if k == 0 or w == 0:
        return [[0] * k for _ in range(w)]
    pool = _isotropic_vectors(signs, bound)
    cols = []
    for c in range(k):
        candidates = [v for v in pool if all(_pairing(signs, v, prev) == 0 for prev in cols)]
        if aligned_to is not None:
            other = [aligned_to[r][c] for r in range(w)]
            aligned = [v for v in candidates if _pairing(signs, v, other) == 0]
            if aligned:
                candidates = aligned
        if require_nonzero and c == 0:
            candidates = [v for v in candidates if any(x != 0 for x in v)]
            if not candidates:
                raise InfeasibleParameters(
                    "no nonzero isotropic vectors available for the requested B"
                )
        cols.append(candidates[rng.randrange(len(candidates))])
    return [[cols[c][r] for c in range(k)] for r in range(w)]


def _sample_skew(rng, k, bound):
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            x = rng.randint(-bound, bound)
            rows[i][j] = x
            rows[j][i] = -x
    return rows


def _kernel_int_basis(cand: _Candidate, idx: int) -> list[tuple[int, ...]]:
    """Integer basis of ker A for generator ``idx`` in ambient coordinates."""
    return _kernel_int_basis_of(cand.nilpotents[idx], cand.n)


def _common_kernel_int_basis(cand: _Candidate) -> list[tuple[int, ...]]:
    rows = []
    for a_rows in cand.nilpotents:
        rows.extend(a_rows)
    return _kernel_int_basis_of(rows, cand.n)


def _draw_translation(rng, basis, bound) -> list[int]:
    v = [0] * (len(basis[0]) if basis else 0)
    for b in basis:
        c = rng.randint(-bound, bound)
        if c:
            v = [x + c * y for x, y in zip(v, b)]
    return v


def _sample_candidate(rng, p, s, bound, n_generators, k=None, require_b=False) -> _Candidate:
    max_k = min(p, s)
    if k is None:
        k = rng.randint(0, max_k)
    elif not 0 <= k <= max_k:
        raise InfeasibleParameters(f"k={k} exceeds min(p, s)={max_k}")
    signs = tuple([1] * (p - k) + [-1] * (s - k))
    if require_b and (k == 0 or (p - k) == 0 or (s - k) == 0):
        raise InfeasibleParameters("a nonzero B needs k >= 1 and an indefinite complement")
    b_blocks, c_blocks, nilpotents = [], [], []
    for g_idx in range(n_generators):
        aligned = None
        if g_idx > 0 and rng.random() < 0.5:
            aligned = b_blocks[0]
        b = _sample_b_block(rng, k, signs, bound, require_nonzero=require_b, aligned_to=aligned)
        c = _sample_skew(rng, k, bound)
        b_blocks.append(b)
        c_blocks.append(c)
        nilpotents.append(_assemble_nilpotent(k, signs, b, c))
    cand = _Candidate(p, s, k, signs, b_blocks, c_blocks, nilpotents, [])
    common = None
    for i in range(n_generators):
        if rng.random() < 0.5:
            basis = _kernel_int_basis(cand, i)
        else:
            if common is None:
                common = _common_kernel_int_basis(cand)
            basis = common
        cand.translations.append(_draw_translation(rng, basis, bound))
    return cand


def sample_generators(
    signature: tuple[int, int],
    entry_bound: int,
    seed,
    n_generators: int = 2,
    k: int | None = None,
    require_b: bool = False,
    name: str | None = None,
) -> GroupSpec:
    """One candidate group over the adapted block gram, deterministic in
    the seed.  Generators satisfy the six element-wise conditions by
    construction; nothing is promised about words."""
    if entry_bound < 1:
        raise ValueError("entry_bound must be >= 1")
    p, s = signature
    rng = random.Random(f"sample:{seed}")
    cand = _sample_candidate(rng, p, s, entry_bound, n_generators, k=k, require_b=require_b)
    return _materialize(cand, name or f"sample-p{p}s{s}-seed{seed}")


# -- fast word-level filters -------------------------------------------------


def _mat_mul_int(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _mat_vec_int(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def _cross_products(cand: _Candidate):
    """Bᵢᵀ·I~·Bⱼ for i < j, as integer k x k matrices."""
    k, signs = cand.k, cand.signs
    out = {}
    for i in range(len(cand.b_blocks)):
        for j in range(i + 1, len(cand.b_blocks)):
            bi, bj = cand.b_blocks[i], cand.b_blocks[j]
            out[(i, j)] = [
                [
                    sum(signs[r] * bi[r][ci] * bj[r][cj] for r in range(len(signs)))
                    for cj in range(k)
                ]
                for ci in range(k)
            ]
    return out


def _check_generators_block(cand: _Candidate) -> bool:
    """The element-wise conditions in block coordinates: columns of B
    isotropic and mutually orthogonal, C skew, A·v = 0."""
    k, signs = cand.k, cand.signs
    for b, c in zip(cand.b_blocks, cand.c_blocks):
        cols = [[b[r][ci] for r in range(len(signs))] for ci in range(k)]
        for i in range(k):
            for j in range(i, k):
                if _pairing(signs, cols[i], cols[j]) != 0:
                    return False
        for i in range(k):
            for j in range(k):
                if c[i][j] != -c[j][i]:
                    return False
    for a_rows, v in zip(cand.nilpotents, cand.translations):
        if any(x != 0 for x in _mat_vec_int(a_rows, v)):
            return False
    return True


def _words_pass_fast(cand: _Candidate, gram_rows) -> tuple[bool | None, bool]:
    """(words_pass, is_abelian) for the cheap integer route.

    Returns words_pass=None (triggering the exact route) only for
    candidates with nonzero cross products that pass the skewness test.
    """
    crosses = _cross_products(cand)
    abelian = all(
        all(x == 0 for row in m for x in row) for m in crosses.values()
    )
    for m in crosses.values():
        k = len(m)
        for i in range(k):
            for j in range(k):
                if m[i][j] != -m[j][i]:
                    return False, abelian
    if not abelian:
        return None, False  # rare: decide by exact enumeration
    # Abelian: pairwise translation identities generate all word checks.
    gens = list(zip(cand.nilpotents, cand.translations))
    for i in range(len(gens)):
        ai, vi = gens[i]
        for j in range(i + 1, len(gens)):
            aj, vj = gens[j]
            t = [x + y for x, y in zip(_mat_vec_int(ai, vj), _mat_vec_int(aj, vi))]
            if any(x != 0 for x in t):
                return False, True
            gvi = _mat_vec_int(gram_rows, vi)
            gvj = _mat_vec_int(gram_rows, vj)
            for col in range(cand.n):
                total = sum(gvi[r] * aj[r][col] for r in range(cand.n)) + sum(
                    gvj[r] * ai[r][col] for r in range(cand.n)
                )
                if total != 0:
                    return False, True
    return True, abelian


def _words_pass_exact(spec: GroupSpec, length: int) -> bool:
    try:
        words = words_up_to(spec, length)
    except Exception:
        return False
    return all(wolf_check(w).passed for w in words)


def _orbit_test_points(n: int, rng) -> list[tuple[int, ...]]:
    pts = [tuple([0] * n), tuple([1] * n), tuple(range(1, n + 1))]
    for _ in range(2):
        pts.append(tuple(rng.randint(-2, 2) for _ in range(n)))
    return pts


def _has_open_orbit(spec: GroupSpec, rng) -> bool:
    algebra = centralizer_algebra(spec)
    n = spec.form.n
    return any(
        orbit_dimension(spec, pt, algebra) == n for pt in _orbit_test_points(n, rng)
    )


# -- search ------------------------------------------------------------------


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one bounded random search at a fixed signature."""

    signature: tuple[int, int]
    budget: int
    seed: int
    entry_bound: int
    stats: dict
    found: tuple[GroupSpec, ...]


def search_nonabelian(
    signature: tuple[int, int],
    budget: int,
    seed: int,
    entry_bound: int = DEFAULT_ENTRY_BOUND,
    n_generators: int = 2,
    word_length: int = HOT_WORD_LENGTH,
) -> SearchReport:
    """Sample generator pairs and keep the non-abelian candidates that
    pass every filter: element-wise conditions, all words up to
    ``word_length``, and an open centralizer orbit at a test point.

    Every recorded survivor is re-verified through the exact machinery
    (word enumeration with all six checks, the abelianness report, and
    the isotropic witness); a disagreement with the fast filters would
    be an internal error, not a tally.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    p, s = signature
    stats = {
        "trials": 0,
        "generator_check_failed": 0,
        "word_check_failed": 0,
        "abelian": 0,
        "orbit_not_open": 0,
        "found": 0,
    }
    gram_cache: dict[int, list[list[int]]] = {}
    found: list[GroupSpec] = []
    for trial in range(budget):
        stats["trials"] += 1
        rng = random.Random(f"search:{seed}:{trial}")
        cand = _sample_candidate(rng, p, s, entry_bound, n_generators)
        if not _check_generators_block(cand):
            stats["generator_check_failed"] += 1
            continue
        gram_rows = gram_cache.get(cand.k)
        if gram_rows is None:
            gram_rows = _block_gram_rows(cand.k, cand.signs)
            gram_cache[cand.k] = gram_rows
        verdict, abelian = _words_pass_fast(cand, gram_rows)
        if verdict is False:
            stats["word_check_failed"] += 1
            continue
        if abelian:
            stats["abelian"] += 1
            continue
        spec = _materialize(cand, f"survivor-p{p}s{s}-seed{seed}-trial{trial}")
        if verdict is None and not _words_pass_exact(spec, word_length):
            stats["word_check_failed"] += 1
            continue
        if not _has_open_orbit(spec, rng):
            stats["orbit_not_open"] += 1
            continue
        _verify_survivor(spec, word_length)
        stats["found"] += 1
        found.append(spec)
    return SearchReport(signature, budget, seed, entry_bound, stats, tuple(found))


def _verify_survivor(spec: GroupSpec, word_length: int):
    for g in spec.generators:
        if not wolf_check(g).passed:
            raise AssertionError("survivor generator fails the exact element check")
    if not _words_pass_exact(spec, word_length):
        raise AssertionError("survivor fails the exact word check")
    report = abelian_report(spec)
    if report.abelian:
        raise AssertionError("survivor is abelian under the exact report")
    witness = index_witness(spec, report)
    if witness is None or witness.dim < 4:
        raise AssertionError("survivor admits no isotropic witness")


@dataclass(frozen=True)
class ScanSummary:
    """Per-signature reports of a sweep, plus any bound violations."""

    s_max: int
    p_cap: int
    budget: int
    seed: int
    reports: tuple[SearchReport, ...]
    violations: tuple[GroupSpec, ...]


def theorem_scan(
    s_max: int,
    budget: int,
    seed: int,
    p_cap: int = 5,
    entry_bound: int = DEFAULT_ENTRY_BOUND,
) -> ScanSummary:
    """Sweep signatures with s <= s_max (p <= p_cap) and collect any
    non-abelian survivors.  At s <= 3 a survivor contradicts the index
    bound; it is returned as a violation artifact for inspection (it
    would indicate a filter bug, not a disproof)."""
    reports = []
    violations = []
    for s in range(0, s_max + 1):
        for p in range(0, p_cap + 1):
            if p + s < 1:
                continue
            rep = search_nonabelian((p, s), budget, seed, entry_bound=entry_bound)
            reports.append(rep)
            if s <= 3:
                violations.extend(rep.found)
    return ScanSummary(s_max, p_cap, budget, seed, tuple(reports), tuple(violations))


def sample_valid_specs(
    count: int,
    seed: int,
    n_max: int = 8,
    s_max: int = 4,
    entry_bound: int = DEFAULT_ENTRY_BOUND,
    n_generators: int = 2,
) -> list[GroupSpec]:
    """Deterministically collect ``count`` word-valid specs across the
    signatures with p+s <= n_max, s <= s_max.

    Valid means: generators satisfy the element-wise conditions and all
    words pass them too (the certificate and report suites need nothing
    stronger).  Both abelian and non-abelian specs are collected.
    """
    signatures = [
        (p, s)
        for s in range(0, s_max + 1)
        for p in range(0, n_max - s + 1)
        if p + s >= 1
    ]
    out: list[GroupSpec] = []
    trial = 0
    while len(out) < count:
        p, s = signatures[trial % len(signatures)]
        rng = random.Random(f"valid:{seed}:{trial}")
        trial += 1
        cand = _sample_candidate(rng, p, s, entry_bound, n_generators)
        if not _check_generators_block(cand):
            continue
        gram_rows = _block_gram_rows(cand.k, cand.signs)
        verdict, abelian = _words_pass_fast(cand, gram_rows)
        if verdict is False:
            continue
        spec = _materialize(cand, f"valid-p{p}s{s}-seed{seed}-trial{trial - 1}")
        if verdict is None and not _words_pass_exact(spec, HOT_WORD_LENGTH):
            continue
        out.append(spec)
    return out
