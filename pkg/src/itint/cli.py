"""
Command-line front end.

Exit status: 0 all checks pass, 1 some check failed, 2 bad arguments or
unparsable input, 3 an evaluation was refused (point too close to [0, 1],
non-convergent word, weight guard, no convergence).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import acceptance
from .evaluator import (
    EvalConfig, EvaluationError, eval_lincomb, format_complex, parse_complex_list,
)
from .relations import (
    DEFAULT_Z_POINTS, RELATION_TOL, SERIES_TOL, DIFF_TOL, check_broadhurst, check_duality,
    check_sum, differential_check, mzv_duality_check, sum_formula_mzv_check,
)
from .words import WordParseError, enumerate_convergent, format_word, parse_lincomb, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3

log = logging.getLogger("itint")


class UsageError(Exception):
    pass


def _z_list(text: str) -> list[complex]:
    try:
        pts = parse_complex_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not pts:
        raise argparse.ArgumentTypeError("empty list of z points")
    return pts


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return v


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("evaluation settings")
    g.add_argument("--tol", type=_positive_float, help="per-word quadrature target (1e-9)")
    g.add_argument("--nodes", type=int, help="Gauss nodes per panel (16)")
    g.add_argument("--panels", type=int, help="graded panels toward each endpoint (14)")
    g.add_argument("--grading", type=float, help="geometric grading ratio in (0,1) (0.5)")
    g.add_argument("--cutoff", type=_positive_float, help="minimum distance of z from [0,1] (1e-3)")
    g.add_argument("--series-tol", type=_positive_float, help="MZV series truncation (1e-12)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(
        prog="itint",
        description="Iterated integrals on P^1 minus {0,1,z,oo}: evaluation and relation checks.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("eval", parents=[common], help="evaluate L(word) or L(combination)")
    what = s.add_mutually_exclusive_group(required=True)
    what.add_argument("--word", help='letters 0,1,z, e.g. "z,1,0"')
    what.add_argument("--lincomb", help='e.g. "3/2*[z,1,0] - [1,z,0]"')
    s.add_argument("--z", type=_z_list, default=[2 + 0j], help='comma-separated points, e.g. "2,3+2i"')

    s = sub.add_parser("check-duality", parents=[common], help="L(w - tau(w)) = 0 for all convergent w")
    s.add_argument("--weight-max", type=int, default=4)
    s.add_argument("--z", type=_z_list, default=list(DEFAULT_Z_POINTS))
    s.add_argument("--threshold", type=_positive_float, default=RELATION_TOL)

    s = sub.add_parser("check-sum", parents=[common], help="sum formula for 2 <= k <= k-max")
    s.add_argument("--k-max", type=int, default=7)
    s.add_argument("--z", type=_z_list, default=[2 + 0j, -1 + 0j])
    s.add_argument("--threshold", type=_positive_float, default=RELATION_TOL)

    s = sub.add_parser("check-diff", parents=[common], help="differential formula vs finite differences")
    s.add_argument("--weight-max", type=int, default=4)
    s.add_argument("--z", type=_z_list, default=list(DEFAULT_Z_POINTS))
    s.add_argument("--h", type=_positive_float, default=1e-5)
    s.add_argument("--threshold", type=_positive_float, default=DIFF_TOL)

    s = sub.add_parser("check-broadhurst", parents=[common], help="duality at z = -1")
    s.add_argument("--weight-max", type=int, default=5)
    s.add_argument("--threshold", type=_positive_float, default=RELATION_TOL)

    s = sub.add_parser("check-mzv", parents=[common], help="MZV duality and sum formula (series only)")
    s.add_argument("--k-max", type=int, default=8)
    s.add_argument("--threshold", type=_positive_float, default=SERIES_TOL)

    s = sub.add_parser("enumerate", parents=[common], help="list convergent words of one weight")
    s.add_argument("--weight", type=int, required=True)

    sub.add_parser("sweep", parents=[common], help="run every acceptance criterion")
    return p


def _config(args) -> EvalConfig:
    kw = {
        "target_tol": args.tol, "nodes_per_panel": args.nodes, "panels_per_side": args.panels,
        "grading_ratio": args.grading, "segment_cutoff": args.cutoff,
        "series_truncation_tol": args.series_tol,
    }
    try:
        return EvalConfig(**{k: v for k, v in kw.items() if v is not None})
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit_reports(reports, as_json: bool, out) -> int:
    reports = sorted(reports, key=lambda r: r.relation_id)
    n_pass = sum(r.passed for r in reports)
    summary = f"PASS {n_pass}/{len(reports)}"
    if as_json:
        json.dump([r.to_dict() for r in reports], out, indent=1)
        out.write("\n")
        print(summary, file=sys.stderr)
    else:
        width = max((len(r.relation_id) for r in reports), default=10)
        for r in reports:
            res = " ".join(repr(x) for x in r.residuals)
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.relation_id:<{width}}  "
                  f"tol={r.tolerance!r}  residuals={res}", file=out)
        print(summary, file=out)
    return EXIT_OK if n_pass == len(reports) else EXIT_FAIL


def _cmd_eval(args, cfg, out) -> int:
    x = parse_lincomb(args.lincomb) if args.lincomb is not None else parse_word(args.word)
    label = str(x) if args.lincomb is not None else format_word(x)
    rows = []
    for z in args.z:
        r = eval_lincomb(x, z, cfg)
        rows.append({"input": label, "z": format_complex(z),
                     "value": [r.value.real, r.value.imag], "est_error": r.est_error,
                     "mesh": r.mesh_used})
        if not args.json:
            print(f"L({label}) at z={format_complex(z)}: {format_complex(r.value)} "
                  f"± {r.est_error:.2e}", file=out)
    if args.json:
        json.dump(rows, out, indent=1)
        out.write("\n")
    return EXIT_OK


def _cmd_enumerate(args, cfg, out) -> int:
    try:
        words = enumerate_convergent(args.weight)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        json.dump([format_word(w) for w in words], out)
        out.write("\n")
    else:
        for w in words:
            print(format_word(w), file=out)
    return EXIT_OK


def _words(weight_max: int):
    return [w for n in range(weight_max + 1) for w in enumerate_convergent(n)]


def _cmd_sweep(args, cfg, out) -> int:
    results = acceptance.run_all(cfg)
    reports = [r for c in results for r in c.reports]
    status = _emit_reports(reports, args.json, out)
    stream = sys.stderr if args.json else out
    for c in results:
        print(f"criterion {c.number} ({c.title}): {'PASS' if c.passed else 'FAIL'}", file=stream)
    return status


def _reports_for(args, cfg):
    cmd = args.command
    if cmd == "check-duality":
        return [check_duality(w, args.z, args.threshold, cfg) for w in _words(args.weight_max)]
    if cmd == "check-sum":
        return [check_sum(k, r, args.z, args.threshold, cfg)
                for k in range(2, args.k_max + 1) for r in range(1, k + 1)]
    if cmd == "check-diff":
        return [differential_check(w, z, cfg, args.h, args.threshold)
                for w in _words(args.weight_max) for z in args.z]
    if cmd == "check-broadhurst":
        return [check_broadhurst(w, args.threshold, cfg) for w in _words(args.weight_max)]
    if cmd == "check-mzv":
        reports = [mzv_duality_check(w, args.threshold, cfg)
                   for w in acceptance.mzv_words(args.k_max)]
        reports += [sum_formula_mzv_check(k, r, args.threshold, cfg)
                    for k in range(2, args.k_max + 1) for r in range(1, k)]
        return reports
    raise AssertionError(cmd)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = _config(args)
        if args.command == "eval":
            return _cmd_eval(args, cfg, out)
        if args.command == "enumerate":
            return _cmd_enumerate(args, cfg, out)
        if args.command == "sweep":
            return _cmd_sweep(args, cfg, out)
        for name in ("weight_max", "k_max"):
            if getattr(args, name, 0) < 0 or getattr(args, name, 0) > 12:
                raise UsageError(f"--{name.replace('_', '-')} must lie in [0, 12]")
        return _emit_reports(_reports_for(args, cfg), args.json, out)
    except (WordParseError, UsageError) as exc:
        print(f"itint: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EvaluationError as exc:
        print(f"itint: evaluation refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
