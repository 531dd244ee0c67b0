"""Command-line front end: verify, normalize, member, matrix, export."""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, exprs, ncalg, verify
from .linalg import DEFAULT_PRIME, DEFAULT_SEED
from .reports import reports_to_json

__all__ = ["main", "build_parser", "run"]

USAGE_ERROR = 2

ALGEBRA_NAMES = {
    "x": lambda errata: catalog.x_presentation(),
    "quantum-plane": lambda errata: catalog.quantum_plane_presentation(),
    "t": lambda errata: catalog.tt_presentation(errata),
    "qg": lambda errata: catalog.qg_presentation(errata),
    "calculus-omega": lambda errata: catalog.calculus_presentation("omega", errata),
    "calculus-omega-inv": lambda errata: catalog.calculus_presentation("omega-inv", errata),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wh3",
        description="Exact verifier for the three-parameter deformed "
                    "Weyl-Heisenberg algebra, its differential calculi and "
                    "its ten-generator quantum group.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_verify = sub.add_parser("verify", help="run verification checks")
    p_verify.add_argument("--check", help="comma-separated check ids")
    p_verify.add_argument("--all", action="store_true", help="run every check")
    p_verify.add_argument("--list", action="store_true", help="list check ids and exit")
    p_verify.add_argument("--mode", choices=("mixed", "exact", "modular"), default="mixed")
    p_verify.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--max-degree", type=int, default=4)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--errata", choices=("on", "off"), default="on",
                          help="off verifies the uncorrected transcription")
    p_verify.add_argument("--strict-exact", action="store_true",
                          help="treat pass-modular as failure for the exit code")
    p_verify.add_argument("--set", dest="bindings", default=None,
                          help="parameter values, e.g. q=3/2,u=5/7,s=2")
    p_verify.add_argument("--spec", dest="spec", default=None,
                          help="specialization such as q=u^2 or s=0")
    p_verify.add_argument("--mutate", default=None,
                          help="corrupt a braiding entry, e.g. omega:11,11=1")
    p_verify.add_argument("--no-timings", action="store_true",
                          help="zero the millis field for byte-stable output")

    p_norm = sub.add_parser("normalize", help="normalize an expression")
    p_norm.add_argument("--algebra", default=None,
                        help=f"one of {', '.join(sorted(ALGEBRA_NAMES))} or a family id")
    p_norm.add_argument("--algebra-file", default=None,
                        help="algebra-definition JSON file instead of a name")
    p_norm.add_argument("--expr", required=True)
    p_norm.add_argument("--errata", choices=("on", "off"), default="on")

    p_member = sub.add_parser("member", help="degree-bounded ideal membership")
    p_member.add_argument("--algebra", default=None)
    p_member.add_argument("--algebra-file", default=None)
    p_member.add_argument("--expr", required=True)
    p_member.add_argument("--degree", type=int, default=None)
    p_member.add_argument("--mode", choices=("exact", "modular"), default="exact")
    p_member.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p_member.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_member.add_argument("--errata", choices=("on", "off"), default="on")
    p_member.add_argument("--format", choices=("text", "json"), default="text")

    p_matrix = sub.add_parser("matrix", help="print a braiding matrix")
    p_matrix.add_argument("--name", choices=("omega", "omega-inv"), default="omega")
    p_matrix.add_argument("--set", dest="bindings", default=None)
    p_matrix.add_argument("--format", choices=("text", "json"), default="text")

    p_export = sub.add_parser("export", help="emit a relation family as JSON")
    p_export.add_argument("--family", required=True,
                          help=f"one of {', '.join(catalog.FAMILY_IDS)} or an algebra name")
    p_export.add_argument("--errata", choices=("on", "off"), default="on")
    p_export.add_argument("--out", default=None, help="output path (default stdout)")
    return parser


class UsageError(Exception):
    pass


def _parse_bindings(text: str | None) -> tuple:
    if not text:
        return ()
    out = []
    for piece in text.split(","):
        if "=" not in piece:
            raise UsageError(f"bad binding {piece!r}; expected name=value")
        name, value = piece.split("=", 1)
        name = name.strip()
        if name not in ("q", "u", "s"):
            raise UsageError(f"unknown parameter {name!r} in --set/--spec")
        out.append((name, exprs.parse_scalar(value)))
    return tuple(out)


def _parse_mutation(text: str | None) -> tuple:
    if not text:
        return ()
    try:
        target, assignment = text.split(":", 1)
        cell, value = assignment.split("=", 1)
        row, col = cell.split(",")
        row_pair = (int(row[0]), int(row[1]))
        col_pair = (int(col[0]), int(col[1]))
    except (ValueError, IndexError):
        raise UsageError(
            f"bad mutation {text!r}; expected omega:RC,MN=EXPR like omega:11,11=1"
        )
    if target != "omega":
        raise UsageError("only omega mutations are supported")
    return ((row_pair, col_pair, exprs.parse_scalar(value)),)


def _load_algebra(args) -> ncalg.PresentationSpec:
    errata = getattr(args, "errata", "on") == "on"
    if getattr(args, "algebra_file", None):
        with open(args.algebra_file, "r", encoding="utf-8") as handle:
            return ncalg.presentation_from_json(json.load(handle))
    name = args.algebra
    if not name:
        raise UsageError("choose --algebra NAME or --algebra-file PATH")
    if name in ALGEBRA_NAMES:
        return ALGEBRA_NAMES[name](errata)
    try:
        fid = catalog.canonical_family_id(name)
    except KeyError:
        raise UsageError(
            f"unknown algebra {name!r}; names: {', '.join(sorted(ALGEBRA_NAMES))} "
            f"or families: {', '.join(catalog.FAMILY_IDS)}"
        )
    fam = catalog.family(fid, errata)
    return ncalg.PresentationSpec(fid, fam.alphabet, list(fam.relations))


def _cmd_verify(args) -> int:
    if args.list:
        for cid in verify.CHECK_IDS:
            print(cid)
        return 0
    if args.all:
        checks = list(verify.CHECK_IDS)
    elif args.check:
        checks = [c.strip() for c in args.check.split(",") if c.strip()]
        unknown = [c for c in checks if c not in verify.CHECK_IDS]
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(unknown)}; "
                             f"known: {', '.join(verify.CHECK_IDS)}")
    else:
        raise UsageError("choose --all or --check ids")
    bindings = _parse_bindings(args.bindings)
    if args.spec:
        bindings = bindings + _parse_bindings(args.spec)
    ctx = verify.VerifyContext(
        errata=args.errata == "on",
        mode=args.mode,
        prime=args.prime,
        seed=args.seed,
        max_degree=args.max_degree,
        bindings=bindings,
        omega_mutations=_parse_mutation(args.mutate),
    )
    reports = verify.run_all(ctx, checks)
    if args.format == "json":
        print(reports_to_json(reports, with_timings=not args.no_timings))
    else:
        for report in reports:
            print(f"[{report.status:>12}] {report.check} "
                  f"({report.mode}, {report.millis} ms, {len(report.details)} assertions)")
            for detail in report.details:
                if not detail.ok:
                    print(f"    FAIL {detail.id}: {detail.note}")
            if report.counterexample:
                print(f"    counterexample: {report.counterexample}")
    ok = all(
        r.status == "pass" or (r.status == "pass-modular" and not args.strict_exact)
        for r in reports
    )
    return 0 if ok else 1


def _cmd_normalize(args) -> int:
    pres = _load_algebra(args)
    rules = ncalg.orient(pres)
    element = exprs.parse_element(args.expr, pres.alphabet)
    print(rules.normalize(element).format())
    return 0


def _cmd_member(args) -> int:
    pres = _load_algebra(args)
    element = exprs.parse_element(args.expr, pres.alphabet)
    report = ncalg.ideal_membership(
        element, pres, degree=args.degree, mode=args.mode,
        prime=args.prime, seed=args.seed,
    )
    doc = {
        "member": report.member,
        "certain": report.certain,
        "route": report.route,
        "mode": report.mode,
        "degree": report.degree,
        "span_rank": report.span_rank,
        "residual": report.residual.format() if report.residual is not None else None,
        "prime": report.prime,
        "seed": report.seed,
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        verdict = "member" if report.member else "not a member"
        certainty = "certain" if report.certain else "probabilistic"
        print(f"{verdict} ({certainty}; {report.route}, {report.mode}, degree {report.degree})")
        if report.residual is not None:
            print(f"residual: {report.residual.format()}")
    return 0 if report.member else 1


def _cmd_matrix(args) -> int:
    m = catalog.omega() if args.name == "omega" else catalog.omega_inverse()
    bindings = _parse_bindings(args.bindings)
    if bindings:
        m = m.substitute(dict(bindings))
    if args.format == "json":
        cells = {
            f"{r[0]}{r[1]},{c[0]}{c[1]}": value.format()
            for r, c, value in m.nonzero_cells()
        }
        print(json.dumps({"name": args.name, "entries": cells}, indent=2, sort_keys=True))
    else:
        for r, c, value in m.nonzero_cells():
            print(f"[{r[0]}{r[1]} ; {c[0]}{c[1]}] = {value}")
    return 0


def _cmd_export(args) -> int:
    from types import SimpleNamespace

    pres = _load_algebra(SimpleNamespace(
        algebra=args.family, algebra_file=None, errata=args.errata))
    doc = json.dumps(ncalg.presentation_to_json(pres), indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(doc + "\n")
    else:
        print(doc)
    return 0


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return USAGE_ERROR if err.code not in (0, None) else 0
    try:
        if args.verb == "verify":
            return _cmd_verify(args)
        if args.verb == "normalize":
            return _cmd_normalize(args)
        if args.verb == "member":
            return _cmd_member(args)
        if args.verb == "matrix":
            return _cmd_matrix(args)
        if args.verb == "export":
            return _cmd_export(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except (exprs.ExprError, ncalg.InconsistentPresentationError,
            ncalg.DegreeBoundError, FileNotFoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    return USAGE_ERROR


def main() -> None:
    sys.exit(run())
