"""Command-line surface: check, cohomology, classify, pair, deform,
audit-table1 and emit.

Audit commands always exit 0 — disagreement with a claimed value is a
reported finding, not a failure; only unreadable or invalid input is an
error (exit 1)."""

from __future__ import annotations

import argparse
import sys
from .linalg import Subspace, rat
from .lie import (
    JacobiError,
    NotSubalgebraError,
    center,
    derived_length,
    derived_series,
    lower_central_series,
    nilpotency_class,
    span_of_basis_indices,
)
from .reps import abelianization_rep, adjoint_rep, trivial_rep
from .cochain import cohomology
from .pair import PairSetup, les_table, relative_complex, restriction_matrix
from .deform import (
    NILPOTENT,
    SOLVABLE,
    audit_family,
    family_jacobi,
    parse_claim,
)
from . import catalog as cat
from .fileformat import FileFormatError, emit, load_algebra, load_family
from .reports import (
    Report,
    algebra_input_doc,
    cochain_string,
    family_input_doc,
    format_table,
    relation_strings,
    yesno,
)


class InputError(ValueError):
    """Wraps any user-input failure for a clean exit-1 path."""


def _classification_text(index, length) -> str:
    if index is not None:
        return f"nilpotent (index {index})"
    if length is not None:
        return f"solvable, non-nilpotent (derived length {length})"
    return "not solvable"


def cmd_check(path: str) -> Report:
    L = load_algebra(path)
    lcs = lower_central_series(L)
    ds = derived_series(L)
    z = center(L)
    index = nilpotency_class(L)
    length = derived_length(L)
    text = _classification_text(index, length)
    computed = {
        "jacobi_ok": True,
        "lower_central_dims": list(lcs.profile),
        "derived_dims": list(ds.profile),
        "center_dim": z.dim,
        "nilpotency_index": index,
        "derived_length": length,
        "classification": text,
    }
    human = "\n".join(
        [
            f"algebra: {path} (dim {L.dim})",
            *relation_strings(L.sc, L.names),
            "jacobi: ok",
            f"lower central dims: {' '.join(map(str, lcs.profile))}",
            f"derived dims:       {' '.join(map(str, ds.profile))}",
            f"center dim: {z.dim}",
            f"classification: {text}",
        ]
    )
    return Report(input=algebra_input_doc(path, L), computed=computed, human=human)


def _coefficients(L, spec_text: str):
    """Build the coefficient module named by --coefficients."""
    if spec_text == "adjoint":
        return adjoint_rep(L)
    if spec_text == "abelianization":
        return abelianization_rep(L)[0]
    if spec_text.startswith("trivial"):
        _, _, m = spec_text.partition(":")
        return trivial_rep(L, int(m) if m else 1)
    raise InputError(
        f"unknown coefficients {spec_text!r}; expected trivial:m, adjoint or abelianization"
    )


def cmd_cohomology(path: str, degree=None, coefficients="trivial:1", representatives=False) -> Report:
    L = load_algebra(path)
    V = _coefficients(L, coefficients)
    if degree is not None and not 0 <= degree <= L.dim:
        raise InputError(f"--degree must lie in 0..{L.dim}")
    report = cohomology(L, V, representatives=representatives)
    degrees = report.degrees if degree is None else (report.degrees[degree],)
    table_rows = [
        [str(d.p), str(d.dim_c), str(d.dim_z), str(d.dim_b), str(d.dim_h)]
        for d in degrees
    ]
    computed = {
        "coefficients": coefficients,
        "module_dim": V.dim,
        "table": [
            {"p": d.p, "dim_c": d.dim_c, "dim_z": d.dim_z, "dim_b": d.dim_b, "dim_h": d.dim_h}
            for d in degrees
        ],
    }
    lines = [
        f"algebra: {path} (dim {L.dim}), coefficients: {coefficients} (module dim {V.dim})",
        format_table(["p", "dim C", "dim Z", "dim B", "dim H"], table_rows),
    ]
    if representatives:
        reps_doc = {}
        for d in degrees:
            strings = [
                cochain_string(L.dim, d.p, v, L.names, V.component_names)
                for v in (d.class_reps or ())
            ]
            reps_doc[str(d.p)] = {
                "classes": strings,
                "vectors": [[str(x) for x in v] for v in (d.class_reps or ())],
            }
            if strings:
                lines.append(f"H^{d.p} class representatives:")
                lines.extend(f"  {s}" for s in strings)
        computed["representatives"] = reps_doc
    paper_claim = None
    agrees = None
    key = cat.match_table1(L)
    if key is not None and coefficients == "abelianization":
        entry = cat.builtin(key)
        paper_claim = {"table_row": key, "dim_h2": entry.claimed_h2}
        agrees = report.dim_h(2) == entry.claimed_h2
        lines.append(
            f"claimed dim H^2 ({key}): {entry.claimed_h2}; computed: {report.dim_h(2)}"
            f" -> agrees: {yesno(agrees)}"
        )
    return Report(
        input=algebra_input_doc(path, L),
        computed=computed,
        paper_claim=paper_claim,
        agrees=agrees,
        human="\n".join(lines),
    )


def cmd_classify(path: str) -> Report:
    L = load_algebra(path)
    result = cat.rigidity_class(L)
    computed = {"dim_h2": result.dim_h2, "class": result.class_label}
    paper_claim = None
    agrees = None
    if result.claimed_h2 is not None:
        key = cat.match_table1(L)
        paper_claim = {
            "table_row": key,
            "dim_h2": result.claimed_h2,
            "class": result.claimed_class,
        }
        agrees = bool(result.h2_agrees and result.class_agrees)
    lines = [
        f"algebra: {path} (dim {L.dim})",
        f"computed dim H^2(g, g/[g,g]) = {result.dim_h2}",
        f"class: {result.class_label} ({'rigid' if result.class_label == 'II' else 'admits solvable deformations'} by the criterion)",
    ]
    if paper_claim is not None:
        lines.append(
            f"claimed ({paper_claim['table_row']}): dim {paper_claim['dim_h2']},"
            f" class {paper_claim['class']} -> agrees: {yesno(agrees)}"
        )
    lines.extend(f"warning: {w}" for w in result.warnings)
    return Report(
        input=algebra_input_doc(path, L),
        computed=computed,
        paper_claim=paper_claim,
        agrees=agrees,
        warnings=list(result.warnings),
        human="\n".join(lines),
    )


def _parse_subalgebra(L, text: str) -> Subspace:
    """Either comma-separated 1-based basis indices or ';'-separated vectors."""
    chunks = [c.strip() for c in text.split(";") if c.strip()]
    if not chunks:
        raise InputError("empty --subalgebra specification")
    if len(chunks) == 1 and all(tok.strip().isdigit() for tok in chunks[0].split(",")):
        indices = [int(tok) for tok in chunks[0].split(",")]
        bad = [i for i in indices if not 1 <= i <= L.dim]
        if bad:
            raise InputError(f"subalgebra basis index {bad[0]} out of range 1..{L.dim}")
        return span_of_basis_indices(L, [i - 1 for i in indices])
    vectors = []
    for chunk in chunks:
        entries = [tok.strip() for tok in chunk.split(",")]
        if len(entries) != L.dim:
            raise InputError(
                f"subalgebra vector {chunk!r} needs {L.dim} comma-separated entries"
            )
        vectors.append([rat(e) for e in entries])
    return Subspace.from_vectors(L.dim, vectors)


def cmd_pair(path: str, subalgebra: str, coefficients="abelianization") -> Report:
    L = load_algebra(path)
    H = _parse_subalgebra(L, subalgebra)
    V = _coefficients(L, coefficients)
    try:
        P = PairSetup(L, H, V)
    except NotSubalgebraError as exc:
        raise InputError(f"--subalgebra span is not a subalgebra: {exc}") from exc
    table = les_table(P)
    rel = relative_complex(P)
    restrictions = [restriction_matrix(P, p) for p in range(L.dim + 1)]
    cochain_rows = [
        {
            "p": p,
            "dim_rel": rel.kernels[p].dim,
            "dim_g": restrictions[p].cols,
            "dim_h": restrictions[p].rows,
        }
        for p in range(L.dim + 1)
    ]
    rows_doc = [
        {
            "p": r.p,
            "dim_rel": r.dim_rel,
            "dim_g": r.dim_g,
            "dim_h": r.dim_h,
            "rank_to_g": r.rank_to_g,
            "rank_to_h": r.rank_to_h,
            "rank_connecting": r.rank_connecting,
            "exact": r.exact,
        }
        for r in table.rows
    ]
    computed = {
        "coefficients": coefficients,
        "subalgebra_dim": H.dim,
        "les": rows_doc,
        "cochain_dims": cochain_rows,
        "all_exact": table.all_exact,
    }
    human_rows = [
        [
            str(r.p),
            str(r.dim_rel),
            str(r.dim_g),
            str(r.dim_h),
            str(r.rank_to_g),
            str(r.rank_to_h),
            str(r.rank_connecting),
            yesno(r.exact),
        ]
        for r in table.rows
    ]
    human = "\n".join(
        [
            f"algebra: {path} (dim {L.dim}), subalgebra dim {H.dim}, coefficients: {coefficients}",
            format_table(
                ["p", "H rel", "H g", "H h", "rk->g", "rk->h", "rk del", "exact"],
                human_rows,
            ),
            f"exact at every node: {yesno(table.all_exact)}",
        ]
    )
    doc = algebra_input_doc(path, L)
    doc["subalgebra"] = [[str(x) for x in row] for row in H.basis.data]
    return Report(input=doc, computed=computed, human=human)


def cmd_deform(path: str, samples=None, claim: str | None = None) -> Report:
    F = load_family(path)
    defects = family_jacobi(F)
    if defects:
        lines = ["family fails the Jacobi identity in t:"]
        for (i, j, k), vec in defects:
            names = F.names
            comps = ", ".join(
                f"{names[a]}: {p}" for a, p in enumerate(vec) if not p.is_zero()
            )
            lines.append(f"  triple ({names[i]},{names[j]},{names[k]}): {comps}")
        raise InputError("\n".join(lines))
    sample_values = None if samples is None else [rat(s) for s in samples]
    audit = audit_family(F, samples=sample_values, claim=claim)
    verdict_docs = []
    for idx, v in enumerate(audit.verdicts):
        doc = {
            "t": str(v.t0),
            "kind": v.kind,
            "nilpotency_index": v.nilpotency_index,
            "derived_length": v.solvable_length,
            "lcs_dims": list(v.lcs_dims),
            "derived_dims": list(v.derived_dims),
        }
        if audit.agreements is not None:
            doc["agrees"] = audit.agreements[idx]
        verdict_docs.append(doc)
    computed = {
        "jacobi_identically_zero": True,
        "first_order_cocycle": not audit.first_order_defects,
        "verdicts": verdict_docs,
    }
    lines = [f"family: {path} (dim {F.dim})"]
    lines.extend(relation_strings(F.sc_t, F.names))
    lines.append("jacobi in t: identically zero")
    lines.append(
        "first-order term is a 2-cocycle (adjoint): "
        + yesno(not audit.first_order_defects)
    )
    rows = []
    for idx, v in enumerate(audit.verdicts):
        row = [
            str(v.t0),
            v.describe(),
            " ".join(map(str, v.lcs_dims)),
            " ".join(map(str, v.derived_dims)),
        ]
        if audit.agreements is not None:
            row.append(yesno(audit.agreements[idx]))
        rows.append(row)
    headers = ["t", "classification", "lcs dims", "derived dims"]
    if audit.agreements is not None:
        headers.append("agrees")
    lines.append(format_table(headers, rows))
    paper_claim = None
    agrees = None
    if audit.claim is not None:
        kind, number = audit.claim
        paper_claim = {"classification": kind if number is None else f"{kind}:{number}"}
        agrees = audit.all_agree
        lines.append(f"claimed classification: {paper_claim['classification']} -> agrees: {yesno(agrees)}")
    return Report(
        input=family_input_doc(path, F),
        computed=computed,
        paper_claim=paper_claim,
        agrees=agrees,
        human="\n".join(lines),
    )


def cmd_audit_table1() -> Report:
    audit = cat.table1_audit()
    rows_doc = [
        {
            "key": r.key,
            "relations": r.relations,
            "computed_h2": r.computed_h2,
            "claimed_h2": r.claimed_h2,
            "agrees": r.h2_agrees,
            "computed_class": r.computed_class,
            "claimed_class": r.claimed_class,
            "class_agrees": r.class_agrees,
        }
        for r in audit.rows
    ]
    heis_doc = [
        {
            "k": r.k,
            "dim": r.dim,
            "computed_b2": r.computed_b2,
            "stated_b2": r.stated_b2,
            "b2_agrees": r.b2_agrees,
            "computed_h2": r.computed_h2,
            "formula_h2": r.formula_h2,
            "formula_agrees": r.formula_agrees,
            "table_h2": r.table_h2,
            "table_agrees": r.table_agrees,
        }
        for r in audit.heisenberg_rows
    ]
    computed = {
        "rows": rows_doc,
        "heisenberg": heis_doc,
        "one_cochain_specialization": audit.specialization_sign,
    }
    table = format_table(
        ["row", "computed H^2", "claimed", "agrees", "class", "claimed", "agrees"],
        [
            [
                r.key,
                str(r.computed_h2),
                str(r.claimed_h2),
                yesno(r.h2_agrees),
                r.computed_class,
                r.claimed_class,
                yesno(r.class_agrees),
            ]
            for r in audit.rows
        ],
    )
    heis_table = format_table(
        ["k", "dim B^2", "stated", "agrees", "dim H^2", "k(2k-1)", "agrees", "table", "agrees"],
        [
            [
                str(r.k),
                str(r.computed_b2),
                str(r.stated_b2),
                yesno(r.b2_agrees),
                str(r.computed_h2),
                str(r.formula_h2),
                yesno(r.formula_agrees),
                "-" if r.table_h2 is None else str(r.table_h2),
                yesno(r.table_agrees),
            ]
            for r in audit.heisenberg_rows
        ],
    )
    human = "\n".join(
        [
            "obstruction audit: computed dim H^2(g, g/[g,g]) vs claimed values",
            table,
            "",
            "Heisenberg family h_{2k+1} with coefficients h/[h,h]:",
            heis_table,
            "",
            f"1-cochain differential specialisation: (df)(x,y) = {audit.specialization_sign}",
            f"overall agreement: {yesno(audit.all_agree)}",
        ]
    )
    return Report(
        input={"rows": [r.key for r in audit.rows], "heisenberg_k": [1, 2, 3, 4]},
        computed=computed,
        agrees=audit.all_agree,
        human=human,
    )


def cmd_emit(key: str, out_path: str) -> Report:
    try:
        text = emit(key)
    except KeyError as exc:
        raise InputError(str(exc)) from exc
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return Report(
        input={"key": key},
        computed={"path": out_path, "bytes": len(text)},
        human=f"wrote {key} to {out_path} ({len(text)} bytes)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liecoh",
        description="Exact Lie-algebra cohomology, series, deformation and rigidity audits over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit the machine-readable report")

    p = sub.add_parser("check", help="series, center and nilpotency/solvability of an algebra file")
    p.add_argument("path")
    add_json(p)

    p = sub.add_parser("cohomology", help="dim C/Z/B/H table for the chosen coefficients")
    p.add_argument("path")
    p.add_argument("--degree", type=int, default=None, help="restrict to one degree p")
    p.add_argument(
        "--coefficients",
        default="trivial:1",
        help="trivial:m | adjoint | abelianization (default trivial:1)",
    )
    p.add_argument("--representatives", action="store_true", help="include class representatives")
    add_json(p)

    p = sub.add_parser("classify", help="rigidity class from dim H^2(g, g/[g,g])")
    p.add_argument("path")
    add_json(p)

    p = sub.add_parser("pair", help="long exact sequence of a subalgebra pair")
    p.add_argument("path")
    p.add_argument(
        "--subalgebra",
        required=True,
        help="comma-separated 1-based basis indices, or ';'-separated coordinate vectors",
    )
    p.add_argument("--coefficients", default="abelianization")
    add_json(p)

    p = sub.add_parser("deform", help="audit a one-parameter family file")
    p.add_argument("path")
    p.add_argument("--samples", default=None, help="comma-separated rational sample values of t")
    p.add_argument(
        "--claim",
        default=None,
        help=f"expected classification: {NILPOTENT}[:index] | {SOLVABLE}[:length] | non-solvable",
    )
    add_json(p)

    p = sub.add_parser("audit-table1", help="recompute every tabulated obstruction dimension")
    add_json(p)

    p = sub.add_parser("emit", help="write a catalog entry in the file grammar")
    p.add_argument("key", help="catalog key, e.g. h3, n5_2, h5, heisenberg(3), abelian(4), family:n4_t")
    p.add_argument("out_path")
    add_json(p)

    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            report = cmd_check(args.path)
        elif args.command == "cohomology":
            report = cmd_cohomology(
                args.path,
                degree=args.degree,
                coefficients=args.coefficients,
                representatives=args.representatives,
            )
        elif args.command == "classify":
            report = cmd_classify(args.path)
        elif args.command == "pair":
            report = cmd_pair(args.path, args.subalgebra, coefficients=args.coefficients)
        elif args.command == "deform":
            samples = None if args.samples is None else args.samples.split(",")
            if args.claim is not None:
                parse_claim(args.claim)  # validate early for a clean error
            report = cmd_deform(args.path, samples=samples, claim=args.claim)
        elif args.command == "audit-table1":
            report = cmd_audit_table1()
        elif args.command == "emit":
            report = cmd_emit(args.key, args.out_path)
        else:  # pragma: no cover - argparse enforces the choices
            raise InputError(f"unknown command {args.command}")
    except (InputError, FileFormatError, JacobiError, NotSubalgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(report.to_json() if args.json else report.human)
    return 0


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
