"""Command-line front end.

Exit codes are the machine contract: 0 means every check passed (or the
verdict is true), 1 means some check failed or a verdict is false, 2
means the input was malformed.  ``--json`` switches any command to a
deterministic JSON report (schema version 1); stream formatting of the
human output may evolve, the JSON schema is versioned.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .affine import GroupSpec, fixed_point_check, wolf_check, words_up_to
from .centralizer import centralizer_algebra, orbit_dimension
from .certify import (
    MalformedCertificate,
    certificate_from_dict,
    certificate_to_dict,
    translational_isotropy_certificate,
    verify_certificate,
)
from .forms import witt_extend
from .holonomy import (
    CriteriaDisagreement,
    PreconditionFailed,
    abelian_report,
    block_form,
    isotropic_radical,
)
from .linalg import scalar_str
from .search import search_nonabelian
from .specfile import (
    SCHEMA_VERSION,
    SpecFileError,
    dumps_canonical,
    group_spec_to_dict,
    load_group_spec,
    matrix_json,
    save_group_spec,
    subspace_json,
    vector_json,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MALFORMED = 2


def _emit(args, payload: dict, human_lines) -> None:
    if args.json:
        sys.stdout.write(dumps_canonical(payload))
    else:
        for line in human_lines:
            print(line)


def _load(path: str) -> GroupSpec:
    return load_group_spec(path)


def _wolf_json(label: str, rep) -> dict:
    return {"element": label, "conditions": rep.conditions(), "passed": rep.passed}


def cmd_check(args) -> int:
    spec = _load(args.file)
    words = words_up_to(spec, args.max_word_length)
    results = []
    for i, g in enumerate(spec.generators):
        results.append((f"generator {i}", wolf_check(g)))
    for j, w in enumerate(words):
        results.append((f"word {j}", wolf_check(w)))
    all_ok = all(rep.passed for _, rep in results)
    payload = {
        "schema": SCHEMA_VERSION,
        "kind": "wolf_check",
        "name": spec.name,
        "max_word_length": args.max_word_length,
        "results": [_wolf_json(label, rep) for label, rep in results],
        "passed": all_ok,
    }
    lines = [f"{spec.name}: six-condition check, words up to length {args.max_word_length}"]
    for label, rep in results:
        if label.startswith("generator") or not rep.passed:
            conds = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in rep.conditions().items())
            lines.append(f"  {label}: {conds}")
    lines.append(f"result: {'PASS' if all_ok else 'FAIL'} ({len(words)} words)")
    _emit(args, payload, lines)
    return EXIT_OK if all_ok else EXIT_FAILED


def cmd_report(args) -> int:
    spec = _load(args.file)
    rep = abelian_report(spec, args.max_word_length)
    payload = {
        "schema": SCHEMA_VERSION,
        "kind": "holonomy_report",
        "name": spec.name,
        "image_sum": subspace_json(rep.image_sum),
        "image_sum_perp": subspace_json(rep.image_sum_perp),
        "radical": subspace_json(rep.radical),
        "criteria": rep.criteria(),
        "abelian": rep.abelian,
        "max_word_length": rep.max_word_length,
    }
    lines = [
        f"{spec.name}: holonomy report",
        f"  image span dimension:   {rep.image_sum.dim}",
        f"  radical dimension:      {rep.radical.dim}",
        f"  criteria:               "
        + ", ".join(f"{k}={v}" for k, v in rep.criteria().items()),
        f"  abelian linear holonomy: {rep.abelian}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_witt(args) -> int:
    spec = _load(args.file)
    radical = isotropic_radical(spec)
    wb = witt_extend(spec.form, radical)
    payload = {
        "schema": SCHEMA_VERSION,
        "kind": "witt_basis",
        "name": spec.name,
        "k": wb.k,
        "w_dim": wb.w_dim,
        "change_of_basis": matrix_json(wb.change_of_basis),
        "i_tilde": matrix_json(wb.i_tilde),
    }
    lines = [f"{spec.name}: adapted basis (k={wb.k}, complement dimension {wb.w_dim})"]
    for label, vecs in (
        ("isotropic", wb.u_vectors),
        ("complement", wb.w_vectors),
        ("dual", wb.dual_vectors),
    ):
        for v in vecs:
            lines.append(f"  {label:10s} ({', '.join(scalar_str(x) for x in v)})")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_blockform(args) -> int:
    spec = _load(args.file)
    wb = witt_extend(spec.form, isotropic_radical(spec))
    entries = []
    all_ok = True
    for i, g in enumerate(spec.generators):
        bf = block_form(spec, g, witt=wb)
        all_ok = all_ok and bf.passed
        entries.append(
            {
                "generator": i,
                "b_block": matrix_json(bf.b_block),
                "c_block": matrix_json(bf.c_block),
                "zero_pattern_ok": bf.zero_pattern_ok,
                "c_skew_ok": bf.c_skew_ok,
                "b_columns_ok": bf.b_columns_ok,
            }
        )
    payload = {
        "schema": SCHEMA_VERSION,
        "kind": "block_form",
        "name": spec.name,
        "k": wb.k,
        "w_dim": wb.w_dim,
        "generators": entries,
        "passed": all_ok,
    }
    lines = [f"{spec.name}: block extraction (k={wb.k})"]
    for e in entries:
        lines.append(
            f"  generator {e['generator']}: zero_pattern={'ok' if e['zero_pattern_ok'] else 'FAIL'}"
            f" c_skew={'ok' if e['c_skew_ok'] else 'FAIL'}"
            f" b_columns={'ok' if e['b_columns_ok'] else 'FAIL'}"
        )
        lines.append(f"    C = {e['c_block']}")
        lines.append(f"    B = {e['b_block']}")
    lines.append(f"result: {'PASS' if all_ok else 'FAIL'}")
    _emit(args, payload, lines)
    return EXIT_OK if all_ok else EXIT_FAILED


def cmd_orbit(args) -> int:
    spec = _load(args.file)
    n = spec.form.n
    if args.point:
        parts = args.point.split(",")
        if len(parts) != n:
            raise SpecFileError(f"--point needs {n} comma-separated rationals")
        from .specfile import parse_scalar

        point = tuple(parse_scalar(x.strip()) for x in parts)
    else:
        point = (0,) * n
    algebra = centralizer_algebra(spec)
    dim = orbit_dimension(spec, point, algebra)
    is_open = dim == n
    payload = {
        "schema": SCHEMA_VERSION,
        "kind": "orbit",
        "name": spec.name,
        "point": vector_json(point),
        "centralizer_dim": algebra.dim,
        "orbit_dim": dim,
        "open": is_open,
    }
    lines = [
        f"{spec.name}: centralizer algebra dimension {algebra.dim}",
        f"  orbit dimension at ({', '.join(scalar_str(x) for x in point)}): {dim} of {n}",
        (
            "  identity component orbit is open at this point"
            if is_open
            else "  identity component orbit not open at this point"
            " (components may still act; this does not refute homogeneity)"
        ),
    ]
    _emit(args, payload, lines)
    return EXIT_OK if is_open else EXIT_FAILED


def cmd_free(args) -> int:
    spec = _load(args.file)
    words = words_up_to(spec, args.max_word_length)
    fixed = []
    for i, w in enumerate(words):
        if w.is_identity():
            continue
        pt = fixed_point_check(w)
        if pt is not None:
            fixed.append((i, pt))
    is_free = not fixed
    payload = {
        "schema": SCHEMA_VERSION,
        "kind": "freeness",
        "name": spec.name,
        "max_word_length": args.max_word_length,
        "words_checked": len(words),
        "fixed_points": [
            {"word": i, "point": vector_json(pt)} for i, pt in fixed
        ],
        "free_up_to_length": is_free,
    }
    lines = [f"{spec.name}: fixed-point scan over {len(words)} words (length <= {args.max_word_length})"]
    for i, pt in fixed:
        lines.append(f"  word {i} fixes ({', '.join(scalar_str(x) for x in pt)})")
    lines.append(
        f"result: {'free up to word length ' + str(args.max_word_length) if is_free else 'NOT free (fixed point found)'}"
    )
    _emit(args, payload, lines)
    return EXIT_OK if is_free else EXIT_FAILED


def cmd_certify(args) -> int:
    spec = _load(args.file)
    cert = translational_isotropy_certificate(spec)
    payload = certificate_to_dict(cert)
    out_path = args.out
    if out_path is None:
        p = Path(args.file)
        out_path = str(p.with_suffix("")) + ".cert.json"
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(payload))
    lines = [f"{spec.name}: certificate written to {out_path}"]
    for step in cert.chain:
        lines.append(f"  [{ '+' if step.ok else '-' }] ({step.label}) {step.claim}")
    lines.append(f"verdict: {cert.verdict}")
    if not cert.verdict:
        lines.append(
            "translational isotropy is undetermined by this method for"
            " non-abelian linear holonomy"
        )
    _emit(args, payload, lines)
    return EXIT_OK if cert.verdict else EXIT_FAILED


def cmd_verify(args) -> int:
    with open(args.certfile, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedCertificate(f"not valid JSON: {exc}") from exc
    cert = certificate_from_dict(data)
    ok = verify_certificate(cert)
    payload = {
        "schema": SCHEMA_VERSION,
        "kind": "verification",
        "name": cert.spec.name,
        "accepted": ok,
        "verdict": cert.verdict,
    }
    lines = [f"{cert.spec.name}: certificate {'ACCEPTED' if ok else 'REJECTED'}"]
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_scan(args) -> int:
    try:
        p_str, s_str = args.signature.split(",")
        p, s = int(p_str), int(s_str)
    except ValueError as exc:
        raise SpecFileError("--signature must be P,S with integers") from exc
    if p < 0 or s < 0 or p + s < 1:
        raise SpecFileError("signature components must be nonnegative, p+s >= 1")
    report = search_nonabelian(
        (p, s), args.budget, args.seed, entry_bound=args.entry_bound
    )
    outdir = Path(args.outdir)
    written = []
    for spec in report.found:
        outdir.mkdir(parents=True, exist_ok=True)
        path = outdir / f"{spec.name}.json"
        save_group_spec(spec, path)
        written.append(str(path))
    violation = s <= 3 and bool(report.found)
    payload = {
        "schema": SCHEMA_VERSION,
        "kind": "search_report",
        "signature": [p, s],
        "budget": report.budget,
        "seed": report.seed,
        "entry_bound": report.entry_bound,
        "stats": report.stats,
        "found": [group_spec_to_dict(spec) for spec in report.found],
        "survivor_files": written,
        "index_bound_violation": violation,
    }
    lines = [f"scan signature ({p},{s}), budget {args.budget}, seed {args.seed}"]
    for key, val in report.stats.items():
        lines.append(f"  {key}: {val}")
    for path in written:
        lines.append(f"  survivor written: {path}")
    if violation:
        lines.append(
            "THEOREM VIOLATION: non-abelian survivor at s <= 3;"
            " this indicates a filter bug, inspect the emitted spec files"
        )
    _emit(args, payload, lines)
    return EXIT_FAILED if violation else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flathol",
        description="Exact checks, reports and certificates for affine "
        "isometry groups of indefinite scalar products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        return sp

    sp = add("check", cmd_check, "six-condition check on generators and words")
    sp.add_argument("file")
    sp.add_argument("--max-word-length", type=int, default=4)

    sp = add("report", cmd_report, "holonomy subspaces and abelianness criteria")
    sp.add_argument("file")
    sp.add_argument("--max-word-length", type=int, default=4)

    sp = add("witt", cmd_witt, "adapted basis for the isotropic radical")
    sp.add_argument("file")

    sp = add("blockform", cmd_blockform, "per-generator block extraction")
    sp.add_argument("file")

    sp = add("orbit", cmd_orbit, "centralizer orbit dimension at a point")
    sp.add_argument("file")
    sp.add_argument("--point", help="comma-separated rationals (default: origin)")

    sp = add("free", cmd_free, "fixed-point scan up to a word length")
    sp.add_argument("file")
    sp.add_argument("--max-word-length", type=int, default=4)

    sp = add("certify", cmd_certify, "emit a translational-isotropy certificate")
    sp.add_argument("file")
    sp.add_argument("--out", help="certificate path (default: next to input)")

    sp = add("verify", cmd_verify, "independently re-verify a certificate file")
    sp.add_argument("certfile")

    sp = add("scan", cmd_scan, "random search for non-abelian candidates")
    sp.add_argument("--signature", required=True, help="P,S")
    sp.add_argument("--budget", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--entry-bound", type=int, default=2)
    sp.add_argument("--outdir", default=".", help="directory for survivor spec files")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecFileError, MalformedCertificate, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (CriteriaDisagreement, PreconditionFailed) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
