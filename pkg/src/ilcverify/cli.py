"""Command-line driver.

    ilcverify list-models
    ilcverify verify <model> [--antiinv NAME] [--param k=v]... [--samples N]
                             [--tol T] [--seed S] [--report PATH]
    ilcverify verify-all [--include DIR] [--report PATH] [--seed S]
    ilcverify pde-check <family-id> [--seed S]
    ilcverify tangency <hypersurface-id> [--samples N] [--tol T] [--seed S]

Exit codes: 0 when no check failed (skips allowed), 1 when any check failed,
2 on usage errors or parameter-constraint violations.
"""

from __future__ import annotations

import argparse
import os
import sys

from .catalog import catalog
from .ilcmodels import validate_ilc
from .realforms import ConstraintViolation, levi_form, verify_admissible
from .report import Report, emit_report
from .tubular import TubularRealization, affine_symmetry_dim, verify_tubular


def _parse_params(items):
    out = {}
    for item in items or []:
        if "=" not in item:
            raise SystemExit2(f"--param needs k=v, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


class SystemExit2(Exception):
    pass


def cmd_list_models(args) -> int:
    cat = catalog()
    width = max(len(k) for k in cat)
    for label in sorted(cat):
        entry = cat[label]
        kind = ("stub (supply structure constants as a fixture)" if entry.stub
                else ("contact model" if entry.model else "algebra presentation"))
        ais = ",".join(sorted(entry.anti_involutions)) or "-"
        print(f"{label:{width}s}  {kind:45s} anti-involutions: {ais}")
    return 0


def cmd_verify(args) -> int:
    cat = catalog()
    if args.model not in cat:
        raise SystemExit2(f"unknown model {args.model!r}; see list-models")
    entry = cat[args.model]
    report = Report(args.seed)
    params = _parse_params(args.param)
    alg = entry.model.algebra if entry.model else entry.algebra
    if alg is None:
        raise SystemExit2(f"{args.model} is a stub; supply a fixture via "
                          "verify-all --include")
    bad = alg.verify_jacobi()
    report.add(f"jacobi:{args.model}", "pass" if not bad else "fail",
               entry.provenance, args.model, detail={"violations": len(bad)})
    if entry.model is not None:
        rep = validate_ilc(entry.model)
        report.add(f"validate:{args.model}", "pass" if rep.ok else "fail",
                   entry.provenance, args.model,
                   detail={"violations": rep.violations,
                           "pairing_rank": rep.pairing_rank})
    if args.antiinv:
        if args.antiinv not in entry.anti_involutions:
            raise SystemExit2(f"unknown anti-involution {args.antiinv!r}; "
                              f"known: {sorted(entry.anti_involutions)}")
        phi = entry.anti_involutions[args.antiinv]
        asg = params or None
        try:
            rep = verify_admissible(phi, asg)
        except ConstraintViolation as ex:
            print(f"constraint violation: {ex}", file=sys.stderr)
            return 2
        report.add(f"antiinv:{args.model}:{args.antiinv}",
                   "pass" if rep.ok else "fail", phi.provenance, args.model,
                   args.antiinv, params=params,
                   detail={"violations": rep.violations})
        if entry.model.e.dim - entry.model.k.dim == 2:
            lev = levi_form(phi, asg)
            ok = (phi.levi_expected is None
                  or lev.classification == phi.levi_expected)
            report.add(f"levi:{args.model}:{args.antiinv}",
                       "pass" if ok else "fail", phi.provenance, args.model,
                       args.antiinv, params=params,
                       detail={"classification": lev.classification,
                               "expected": phi.levi_expected})
        for row in entry.tubular_rows:
            if args.antiinv not in row.antiinv_names:
                continue
            if params and not row.applies(params):
                report.add(f"tubular:{args.model}:{args.antiinv}", "skipped",
                           row.provenance, args.model, args.antiinv,
                           params=params,
                           detail={"reason": "assignment outside this row"})
                continue
            t = TubularRealization(phi, row.a_vectors(entry.model))
            trep = verify_tubular(t, asg)
            dim = affine_symmetry_dim(t, asg) if trep.ok else None
            ok = trep.ok and dim == row.expected_affine_dim
            report.add(f"tubular:{args.model}:{args.antiinv}",
                       "pass" if ok else "fail", row.provenance, args.model,
                       args.antiinv, params=params,
                       detail={"conditions": {k: str(v) for k, v in
                                              trep.conditions.items()},
                               "affine_dim": dim,
                               "expected": row.expected_affine_dim})
    return _finish(report, args)


def cmd_verify_all(args) -> int:
    from .suite import run_all
    include = args.include or os.environ.get("ILCVERIFY_FIXTURES_EXTRA")
    report = run_all(seed=args.seed, fixtures_dir=args.fixtures,
                     include_dir=include)
    return _finish(report, args)


def cmd_pde_check(args) -> int:
    from .analytic import get_family, pde_families
    from .vecfield import verify_pde_family
    if args.family == "list":
        for fam in pde_families():
            print(fam.label)
        return 0
    try:
        fam = get_family(args.family)
    except KeyError as ex:
        raise SystemExit2(str(ex))
    report = Report(args.seed)
    rep = verify_pde_family(fam, seed=args.seed)
    report.add(f"pde:{fam.label}", "pass" if rep.passed else "fail",
               "second-order systems of the explicit solution families",
               detail={"max_residual": rep.max_residual,
                       "samples": rep.n_samples})
    return _finish(report, args)


def cmd_tangency(args) -> int:
    from .analytic import analytic_rows, get_row
    from .vecfield import tangency_check
    if args.hypersurface == "list":
        for row in analytic_rows():
            print(row.label)
        return 0
    try:
        row = get_row(args.hypersurface)
    except KeyError as ex:
        raise SystemExit2(str(ex))
    report = Report(args.seed)
    worst = 0.0
    ok = True
    for X in row.fields:
        rep = tangency_check(X, row.surface, n_samples=args.samples,
                             tol=args.tol, seed=args.seed)
        worst = max(worst, rep.max_residual)
        ok = ok and rep.passed
    report.add(f"tangency:{row.label}", "pass" if ok else "fail",
               row.provenance, row.label,
               detail={"fields": len(row.fields), "max_residual": worst,
                       "tol": args.tol})
    return _finish(report, args)


def _finish(report: Report, args) -> int:
    counts = report.counts()
    for rec in sorted(report.checks, key=lambda c: c.check_id):
        line = f"[{rec.status:8s}] {rec.check_id}"
        if rec.status == "fail":
            line += f"  {rec.detail}"
        print(line)
    print(f"summary: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['skipped']} skipped, {counts['evidence']} evidence")
    if getattr(args, "report", None):
        emit_report(report, args.report)
        print(f"report written to {args.report}")
    return 1 if report.has_failures() else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ilcverify",
                                 description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list-models", help="catalog entries and their data")
    p.set_defaults(fn=cmd_list_models)

    p = sub.add_parser("verify", help="checks for one model")
    p.add_argument("model")
    p.add_argument("--antiinv")
    p.add_argument("--param", action="append", metavar="k=v")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("verify-all", help="the full verification sweep")
    p.add_argument("--include", help="directory of extra ingestion fixtures")
    p.add_argument("--fixtures", help="directory of the shipped fixtures")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report")
    p.set_defaults(fn=cmd_verify_all)

    p = sub.add_parser("pde-check", help="verify one PDE family ('list' to list)")
    p.add_argument("family")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report")
    p.set_defaults(fn=cmd_pde_check)

    p = sub.add_parser("tangency", help="tangency sweep for one hypersurface "
                                        "('list' to list)")
    p.add_argument("hypersurface")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report")
    p.set_defaults(fn=cmd_tangency)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as ex:
        return 2 if ex.code not in (0, None) else 0
    try:
        return args.fn(args)
    except SystemExit2 as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except ConstraintViolation as ex:
        print(f"constraint violation: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
