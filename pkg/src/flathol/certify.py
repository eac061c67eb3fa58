"""Machine-checkable certificates that the development image of a group
with abelian linear holonomy is a translationally isotropic domain.

The generator assembles the proof chain; :func:`verify_certificate`
re-checks every step from the raw matrices only, through its own little
elimination routines, so that a bug in the subspace machinery cannot
vouch for itself.  The set T of all invariance translations is never
computed (it has no finite presentation without the domain itself); the
certificate proves that the orthogonal complement of the radical
consists of translations commuting with the whole group, which is what
forces T^⊥ ⊆ T.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .affine import GroupSpec, wolf_check
from .holonomy import HolonomyReport, PreconditionFailed, abelian_report, index_witness
from .forms import orth_complement
from .linalg import Subspace, Vector


class MalformedCertificate(ValueError):
    """Certificate is structurally unusable (missing or inconsistent fields)."""


@dataclass(frozen=True)
class ChainStep:
    label: str
    claim: str
    ok: bool


@dataclass(frozen=True)
class IsotropyCertificate:
    """Self-contained evidence object for one group.

    ``t_lower`` is a subspace of translations proven to leave the
    centralizer's orbits invariant.  Verdict true means the chain
    closes: every invariance translation set T containing t_lower
    satisfies T^⊥ ⊆ T.  For non-abelian holonomy the verdict is false
    and the question is undetermined by this method.
    """

    spec: GroupSpec
    abelian_evidence: HolonomyReport
    t_lower: Subspace
    chain: tuple[ChainStep, ...]
    verdict: bool
    witness_dim: int | None = None  # attached isotropic witness, non-abelian case


def translational_isotropy_certificate(
    spec: GroupSpec, report: HolonomyReport | None = None
) -> IsotropyCertificate:
    """Build the certificate; verdict true iff the holonomy is abelian."""
    for g in spec.generators:
        if not wolf_check(g).passed:
            raise PreconditionFailed(
                "certificate generation requires generators passing wolf_check"
            )
    if report is None:
        report = abelian_report(spec)
    form = spec.form
    radical_perp = orth_complement(form, report.radical)

    if report.abelian:
        step_a = ChainStep(
            "a",
            "the radical equals the full image span",
            report.radical == report.image_sum,
        )
        step_b = ChainStep(
            "b",
            "orthogonal complements of radical and image span coincide",
            radical_perp == report.image_sum_perp,
        )
        commuting = all(
            all(x == 0 for x in g.nilpotent_part.matvec(u))
            for u in radical_perp.basis
            for g in spec.generators
        )
        step_c = ChainStep(
            "c",
            "every basis translation of the radical's complement commutes "
            "with every generator",
            commuting,
        )
        step_d = ChainStep(
            "d",
            "commuting translations preserve centralizer orbits, so the "
            "radical's complement consists of invariance translations",
            commuting,
        )
        involution = orth_complement(form, radical_perp) == report.radical
        contained = radical_perp.contains_space(report.radical)
        dims_ok = report.radical.dim + radical_perp.dim == form.n
        step_e = ChainStep(
            "e",
            "the radical sits between the complement's complement and the "
            "complement itself, closing T^⊥ ⊆ T",
            involution and contained and dims_ok,
        )
        chain = (step_a, step_b, step_c, step_d, step_e)
        verdict = all(s.ok for s in chain)
        return IsotropyCertificate(spec, report, radical_perp, chain, verdict)

    # Non-abelian: record the failing criteria and, when constructible,
    # the dimension >= 4 isotropic witness.  t_lower is still a genuine
    # set of invariance translations (the common kernel), but it does not
    # contain the radical's complement, so nothing follows about T^⊥.
    failing = ChainStep(
        "criteria",
        "abelianness criteria all false: "
        + ", ".join(f"{k}={v}" for k, v in report.criteria().items()),
        False,
    )
    witness_dim = None
    try:
        wit = index_witness(spec, report)
        if wit is not None:
            witness_dim = wit.dim
    except Exception:
        witness_dim = None
    undetermined = ChainStep(
        "undetermined",
        "translational isotropy is undetermined by this method for "
        "non-abelian linear holonomy",
        False,
    )
    return IsotropyCertificate(
        spec,
        report,
        report.image_sum_perp,
        (failing, undetermined),
        False,
        witness_dim,
    )


# ---------------------------------------------------------------------------
# Independent verification: raw arithmetic only.  These deliberately do not
# call the subspace routines used by the generator.


def _v_rank(vectors: list[list[Fraction]]) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = Fraction(rows[i][c], pr[c]) if isinstance(rows[i][c], int) and isinstance(pr[c], int) else Fraction(rows[i][c]) / Fraction(pr[c])
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank


def _v_in_span(v, spanning: list) -> bool:
    if not spanning:
        return all(x == 0 for x in v)
    return _v_rank(list(spanning) + [list(v)]) == _v_rank(list(spanning))


def _v_pair(gram, x, y):
    total = 0
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = gram[i]
        total += xi * sum(r * yj for r, yj in zip(row, y) if yj != 0)
    return total


def _v_mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _v_mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def verify_certificate(cert: IsotropyCertificate) -> bool:
    """Re-check every chain step from the raw data.

    Commutation is checked by composing the affine maps explicitly on
    both sides; containments by membership of each basis vector; the
    subspace computations of the generator are never consulted.
    Malformed certificates raise; a well-formed certificate with any
    false or inconsistent claim verifies to False.
    """
    try:
        spec = cert.spec
        n = spec.form.n
        gram = [list(r) for r in spec.form.gram.entries]
        gens = [
            ([list(r) for r in g.linear.entries], list(g.translation))
            for g in spec.generators
        ]
        ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        nils = [[[l[i][j] - ident[i][j] for j in range(n)] for i in range(n)] for l, _ in gens]
        ev = cert.abelian_evidence
        u_basis = [list(v) for v in ev.image_sum.basis]
        uperp_basis = [list(v) for v in ev.image_sum_perp.basis]
        rad_basis = [list(v) for v in ev.radical.basis]
        t_basis = [list(v) for v in cert.t_lower.basis]
        chain = {s.label: s for s in cert.chain}
    except (AttributeError, TypeError) as exc:
        raise MalformedCertificate(str(exc)) from exc

    # The evidence's four criteria must agree, and the verdict must match.
    crit = ev.criteria()
    if len(set(crit.values())) != 1 or ev.abelian != next(iter(crit.values())):
        return False
    if cert.verdict and not ev.abelian:
        return False
    if cert.verdict != all(s.ok for s in cert.chain):
        return False

    # Generators must be isometries: Lᵀ·gram·L = gram, checked raw.
    for l, _ in gens:
        lt = [list(r) for r in zip(*l)]
        if _v_mat_mul(_v_mat_mul(lt, gram), l) != gram:
            return False

    # Evidence subspaces re-derived from the raw nilpotent parts:
    # image_sum spans exactly the columns of all A_i.
    all_cols = []
    for a in nils:
        for j in range(n):
            all_cols.append([a[i][j] for i in range(n)])
    if not all(_v_in_span(col, u_basis) for col in all_cols):
        return False
    if not all(_v_in_span(u, all_cols) for u in u_basis):
        return False
    # image_sum_perp is exactly {y : <x, y> = 0 for x in image_sum}.
    if not all(all(_v_pair(gram, u, y) == 0 for u in u_basis) for y in uperp_basis):
        return False
    if _v_rank(u_basis) + _v_rank(uperp_basis) != n:
        return False
    # radical = image_sum ∩ image_sum_perp: membership both ways plus rank.
    for r in rad_basis:
        if not _v_in_span(r, u_basis):
            return False
        if any(_v_pair(gram, u, r) != 0 for u in u_basis):
            return False

    if not cert.verdict:
        # Nothing more is claimed; a false verdict is verified when the
        # criteria really are negative: some ordered product A_i·A_j != 0.
        if ev.abelian:
            return False
        some_nonzero = any(
            any(any(x != 0 for x in row) for row in _v_mat_mul(a, b))
            for a in nils
            for b in nils
        )
        return some_nonzero

    # Verdict true: abelian evidence must hold raw (all products vanish).
    for a in nils:
        for b in nils:
            prod = _v_mat_mul(a, b)
            if any(any(x != 0 for x in row) for row in prod):
                return False

    # (a) radical = image_sum: mutual membership.
    step_a = chain.get("a")
    if step_a is None or not step_a.ok:
        return False
    if not all(_v_in_span(r, u_basis) for r in rad_basis):
        return False
    if not all(_v_in_span(u, rad_basis) for u in u_basis):
        return False

    # (b)+(c) t_lower: every basis translation commutes with every
    # generator, checked by explicit two-sided affine composition:
    # (L, v)∘(I, u) = (L, L·u + v) must equal (I, u)∘(L, v) = (L, v + u).
    for step in ("b", "c", "d", "e"):
        if step not in chain or not chain[step].ok:
            return False
    for u in t_basis:
        for l, v in gens:
            left = [x + y for x, y in zip(_v_mat_vec(l, u), v)]
            right = [x + y for x, y in zip(v, u)]
            if left != right:
                return False

    # t_lower must be exactly the radical's orthogonal complement:
    # orthogonality, independence, and complementary dimension.
    if any(any(_v_pair(gram, r, t) != 0 for r in rad_basis) for t in t_basis):
        return False
    if t_basis and _v_rank(t_basis) != len(t_basis):
        return False
    if len(t_basis) != n - len(rad_basis):
        return False

    # (e) the radical is totally isotropic (it pairs to zero against
    # t_lower by the block above and against itself here), which closes
    # radical ⊆ complement; the outer inclusions are dimension counting.
    for i, r1 in enumerate(rad_basis):
        for r2 in rad_basis[i:]:
            if _v_pair(gram, r1, r2) != 0:
                return False
    if not all(_v_in_span(r, t_basis) for r in rad_basis):
        return False
    return True


# ---------------------------------------------------------------------------
# Serialization.  Certificate files are self-contained: they embed the
# full group spec, so a verifier needs nothing else.


def certificate_to_dict(cert: IsotropyCertificate) -> dict:
    from .specfile import SCHEMA_VERSION, group_spec_to_dict, subspace_json

    ev = cert.abelian_evidence
    return {
        "schema": SCHEMA_VERSION,
        "kind": "isotropy_certificate",
        "spec": group_spec_to_dict(cert.spec),
        "abelian_evidence": {
            "image_sum": subspace_json(ev.image_sum),
            "image_sum_perp": subspace_json(ev.image_sum_perp),
            "radical": subspace_json(ev.radical),
            "criteria": ev.criteria(),
            "abelian": ev.abelian,
            "max_word_length": ev.max_word_length,
        },
        "t_lower": subspace_json(cert.t_lower),
        "chain": [
            {"label": s.label, "claim": s.claim, "ok": s.ok} for s in cert.chain
        ],
        "verdict": cert.verdict,
        "witness_dim": cert.witness_dim,
    }


def certificate_from_dict(data) -> IsotropyCertificate:
    from .specfile import SpecFileError, group_spec_from_dict, parse_subspace

    if not isinstance(data, dict):
        raise MalformedCertificate("certificate must be a JSON object")
    try:
        spec_data = data["spec"]
        ev_data = data["abelian_evidence"]
        t_data = data["t_lower"]
        chain_data = data["chain"]
        verdict = data["verdict"]
    except KeyError as exc:
        raise MalformedCertificate(f"missing field {exc.args[0]!r}") from exc
    try:
        spec = group_spec_from_dict(spec_data)
        crit = ev_data["criteria"]
        report = HolonomyReport(
            image_sum=parse_subspace(ev_data["image_sum"], "image_sum"),
            image_sum_perp=parse_subspace(ev_data["image_sum_perp"], "image_sum_perp"),
            radical=parse_subspace(ev_data["radical"], "radical"),
            words_commute=bool(crit["words_commute"]),
            products_vanish=bool(crit["products_vanish"]),
            image_sum_isotropic=bool(crit["image_sum_isotropic"]),
            radical_is_image_sum=bool(crit["radical_is_image_sum"]),
            abelian=bool(ev_data["abelian"]),
            max_word_length=int(ev_data["max_word_length"]),
        )
        t_lower = parse_subspace(t_data, "t_lower")
        chain = tuple(
            ChainStep(str(s["label"]), str(s["claim"]), bool(s["ok"]))
            for s in chain_data
        )
    except (KeyError, TypeError, SpecFileError) as exc:
        raise MalformedCertificate(str(exc)) from exc
    wd = data.get("witness_dim")
    return IsotropyCertificate(
        spec, report, t_lower, chain, bool(verdict), None if wd is None else int(wd)
    )
