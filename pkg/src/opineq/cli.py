"""Command line interface.

Subcommands:
  run        seeded verification campaign over the catalog
  check      evaluate one inequality on a user matrix
  radius     numerical radius, spectral radius, operator norm of a matrix
  decompose  polar and Cartesian parts of a matrix
  gen        emit a generated instance bundle as JSON

Exit codes: 0 no violations, 2 violations found, 1 usage or runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, generators, harness, linalg, radii
from .errors import OpineqError


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for violations here
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> _Parser:
    p = _Parser(prog="opineq",
                description="Operator inequality verification workbench")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a verification campaign",
                         parents=[], add_help=True)
    run.add_argument("--config", help="JSON file mirroring the campaign config")
    run.add_argument("--spec", default=None,
                     help="'all' or comma-separated registry ids")
    run.add_argument("--dims", default=None, help="comma-separated dimensions")
    run.add_argument("--trials", type=int, default=None)
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--tol", type=float, default=None)
    run.add_argument("--vector-samples", type=int, default=None)
    run.add_argument("--sup-restarts", type=int, default=None)
    run.add_argument("--sup-iters", type=int, default=None)
    run.add_argument("--alphas", default=None,
                     help="comma-separated alpha override for sweepable entries")
    run.add_argument("--hermitian-only", action="store_true", default=None,
                     help="draw Hermitian instead of Ginibre single operators")
    run.add_argument("--json", dest="json_path", default=None,
                     help="report path (default campaign_report.json)")
    run.add_argument("--csv", dest="csv_path", default=None)
    run.add_argument("--rows", dest="rows_path", default=None,
                     help="also write every row to this JSONL file")
    run.add_argument("--threads", type=int, default=None,
                     help="worker processes (default: OPINEQ_THREADS or all cores)")

    chk = sub.add_parser("check", help="evaluate one inequality on a matrix")
    chk.add_argument("matrix", help="matrix JSON file")
    chk.add_argument("--ineq", required=True, help="registry id")
    chk.add_argument("--alpha", type=float, default=None)
    chk.add_argument("--p", type=float, default=None)
    chk.add_argument("--tol", type=float, default=1e-8)
    chk.add_argument("--seed", type=int, default=0)
    chk.add_argument("--samples", type=int, default=8)
    chk.add_argument("--restarts", type=int, default=4)

    rad = sub.add_parser("radius", help="print w, r and the operator norm")
    rad.add_argument("matrix")
    rad.add_argument("--tol", type=float, default=1e-10)
    rad.add_argument("--grid-oracle", type=int, default=None,
                     help="also evaluate the dense grid oracle at this many points")

    dec = sub.add_parser("decompose", help="polar and Cartesian parts")
    dec.add_argument("matrix")
    dec.add_argument("--out", default=None, help="write JSON here instead of stdout")

    gen = sub.add_parser("gen", help="emit an instance bundle")
    gen.add_argument("--recipe", required=True,
                     help=f"one of {', '.join(generators.recipe_labels())}")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", default=None)

    lst = sub.add_parser("list", help="list the registry")
    lst.add_argument("--json", action="store_true", dest="as_json")
    return p


def _emit(obj, path=None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=1) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_run(args) -> int:
    kw = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            kw.update(json.load(fh))
    if args.spec is not None:
        kw["specs"] = "all" if args.spec == "all" else args.spec.split(",")
    if args.dims is not None:
        kw["dims"] = [int(d) for d in args.dims.split(",")]
    if args.alphas is not None:
        kw["alphas"] = [float(a) for a in args.alphas.split(",")]
    for name in ("trials", "seed", "tol", "vector_samples", "sup_restarts",
                 "sup_iters", "hermitian_only", "json_path", "csv_path",
                 "rows_path", "threads"):
        val = getattr(args, name)
        if val is not None:
            kw[name] = val
    kw.setdefault("json_path", "campaign_report.json")
    args.json_path = kw["json_path"]
    cfg = harness.CampaignConfig(**kw)
    report = harness.run_campaign(cfg)
    totals = report.data["totals"]
    for sid in report.data["spec_order"]:
        blk = report.data["specs"][sid]
        sharp = blk["sharpness"]
        line = (f"{sid:28s} trials={blk['trials']:6d} rows={blk['rows']:7d} "
                f"violations={blk['violations']['count']:5d}")
        if sharp:
            line += f" max_sharpness={sharp['max']:.6f}"
        if not blk["asserted"]:
            line += " [measured]"
        print(line)
    print(f"total: trials={totals['trials']} rows={totals['rows']} "
          f"asserted_violations={totals['violations_asserted']} "
          f"measured_violations={totals['violations_measured']} "
          f"errors={totals['errors']}")
    print(f"wall time: {report.wall_time_s:.1f}s", file=sys.stderr)
    if args.json_path:
        print(f"report: {args.json_path}")
    return 2 if report.asserted_violations > 0 else 0


def _cmd_check(args) -> int:
    A = linalg.load_matrix(args.matrix)
    spec = catalog.get_spec(args.ineq)
    bundle = catalog.bundle_for_matrix(args.ineq, A)
    params = {}
    if args.alpha is not None:
        params["alpha"] = args.alpha
    if args.p is not None:
        params["p"] = args.p
    merged = catalog._check_params(spec, params)
    catalog.validate_bundle(spec, bundle)
    rng = generators.make_rng(args.seed)
    rows = []
    if spec.vector_names:
        for i in range(args.samples):
            vectors = {name: generators.random_unit_vector(bundle.n, rng)
                       for name in spec.vector_names}
            rows.append(catalog.evaluate(args.ineq, bundle, vectors, merged,
                                         args.tol))
        rows.append(catalog.sup_search(args.ineq, bundle, merged,
                                       restarts=args.restarts, rng=rng,
                                       tol=args.tol))
    else:
        rows.append(catalog.evaluate(args.ineq, bundle, None, merged, args.tol))
    worst = min(rows, key=lambda r: r.relative_slack)
    out = {
        "spec": args.ineq,
        "statement": spec.statement,
        "asserted": spec.asserted,
        "worst": worst.to_dict(),
        "rows_checked": len(rows),
        "violation_rows": [r.to_dict() for r in rows if not r.satisfied],
    }
    _emit(out)
    return 2 if not worst.satisfied else 0


def _cmd_radius(args) -> int:
    A = linalg.load_matrix(args.matrix)
    est = radii.numerical_radius(A, args.tol)
    out = {
        "n": A.shape[0],
        "numerical_radius": {"value": est.value, "lo": est.lo, "hi": est.hi,
                             "method": est.method},
        "spectral_radius": radii.spectral_radius(A),
        "operator_norm": radii.operator_norm(A),
    }
    if args.grid_oracle:
        out["grid_oracle"] = {
            "points": args.grid_oracle,
            "value": radii.numerical_radius_grid_oracle(A, args.grid_oracle),
        }
    _emit(out)
    return 0


def _cmd_decompose(args) -> int:
    A = linalg.load_matrix(args.matrix)
    pol = linalg.polar(A)
    cart = linalg.cartesian(A)
    out = {
        "n": A.shape[0],
        "polar": {"unitary": linalg.matrix_to_dict(pol.unitary),
                  "modulus": linalg.matrix_to_dict(pol.modulus)},
        "cartesian": {"real_part": linalg.matrix_to_dict(cart.real_part),
                      "imag_part": linalg.matrix_to_dict(cart.imag_part)},
    }
    _emit(out, args.out)
    return 0


def _cmd_gen(args) -> int:
    rng = generators.make_rng(args.seed)
    bundle = generators.build_instance(args.recipe, args.n, rng)
    out = {
        "format_version": harness.FORMAT_VERSION,
        "recipe": bundle.recipe,
        "n": bundle.n,
        "seed": args.seed,
        "rng_algorithm": generators.RNG_ALGORITHM,
        "operators": {k: linalg.matrix_to_dict(v)
                      for k, v in sorted(bundle.operators.items())},
        "scalars": bundle.scalars,
        "certificates": bundle.certificates,
    }
    _emit(out, args.out)
    return 0


def _cmd_list(args) -> int:
    table = catalog.list_specs()
    if args.as_json:
        _emit([{"id": i, "statement": s, "signature": sig} for i, s, sig in table])
    else:
        for sid, statement, sig in table:
            mark = "" if sig["asserted"] else " [measured]"
            print(f"{sid:28s}{mark} {statement}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    handlers = {
        "run": _cmd_run,
        "check": _cmd_check,
        "radius": _cmd_radius,
        "decompose": _cmd_decompose,
        "gen": _cmd_gen,
        "list": _cmd_list,
    }
    try:
        return handlers[args.command](args)
    except (OpineqError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
