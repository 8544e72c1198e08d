"""Command-line surface.  Every subcommand is I/O plumbing over the module
API; graphs arrive as --graph6, --file, or on stdin (auto-detected between
graph6 and edge-list text).

Exit codes: 0 success / all pass, 1 verification failure or counterexample,
2 usage or parameter-domain error, 3 input parse error, 4 cap exceeded where
a definite answer was required.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .factor import UNKNOWN, check_yan_kano_condition, has_even_factor
from .graph6 import (
    Graph6Error,
    GraphParseError,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .graphs import FamilySpec, Graph, build_family, extremal
from .harness import (
    csv_lines,
    lemma_merge_sweep,
    soundness_sweep,
    tightness_report,
    write_csv,
)
from .identities import grid_failures, run_identity_grid
from .spectral import PowerIterationError, RootFindingError, spectral_radius
from .thresholds import edge_threshold, spectral_threshold, verdict

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CAPPED = 4


def _parse_graph_text(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise Graph6Error("no graph on input", 0)
    if len(lines) == 1 and len(lines[0].split()) == 1:
        try:
            return parse_graph6(lines[0])
        except Graph6Error:
            # a lone integer is also a valid edge-list header (edgeless graph)
            if lines[0].strip().isdigit():
                return parse_edge_list(text)
            raise
    return parse_edge_list(text)


def _read_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "graph6", None):
        return parse_graph6(args.graph6)
    if getattr(args, "file", None):
        return _parse_graph_text(Path(args.file).read_text())
    return _parse_graph_text(sys.stdin.read())


def _print_graph(g: Graph, fmt: str) -> None:
    if fmt == "edgelist":
        sys.stdout.write(write_edge_list(g))
    else:
        print(write_graph6(g))


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="evenfactor",
        description="Verification lab for size and spectral conditions for even factors",
    )
    top.add_argument("--jobs", type=int, default=1, help="worker count for sweeps")
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct family graphs")
    gen_sub = gen.add_subparsers(dest="gen_what", required=True)
    gen_ext = gen_sub.add_parser("extremal")
    gen_ext.add_argument("--n", type=int, required=True)
    gen_ext.add_argument("--delta", type=int, required=True)
    gen_ext.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    gen_fam = gen_sub.add_parser("family")
    gen_fam.add_argument("--s", type=int, required=True)
    gen_fam.add_argument("--parts", type=_int_list, required=True)
    gen_fam.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")

    check = sub.add_parser("check", help="even-factor oracle and condition checks")
    check_sub = check.add_subparsers(dest="check_what", required=True)
    check_ef = check_sub.add_parser("even-factor")
    check_ef.add_argument("--graph6")
    check_ef.add_argument("--file")
    check_ef.add_argument("--max-dim", type=int, default=40)
    check_ef.add_argument("--max-candidates", type=int, default=2**30)
    check_cond = check_sub.add_parser("condition")
    check_cond.add_argument("--graph6")
    check_cond.add_argument("--file")

    spec = sub.add_parser("spectral", help="spectral radius with residual")
    spec.add_argument("--graph6")
    spec.add_argument("--file")
    spec.add_argument("--tol", type=float, default=1e-10)
    spec.add_argument("--max-iter", type=int, default=10**6)

    thr = sub.add_parser("threshold", help="edge and spectral thresholds")
    thr.add_argument("--n", type=int, required=True)
    thr.add_argument("--delta", type=int, required=True)
    thr.add_argument("--edges", action="store_true")
    thr.add_argument("--rho", action="store_true")

    ver = sub.add_parser("verdict", help="guarantee verdict as JSON")
    ver.add_argument("--graph6")
    ver.add_argument("--file")
    ver.add_argument("--which", choices=("edges", "spectral", "both"), default="both")

    verify = sub.add_parser("verify", help="identity grids and lemma sweeps")
    verify_sub = verify.add_subparsers(dest="verify_what", required=True)
    verify_id = verify_sub.add_parser("identities")
    verify_id.add_argument("--delta-max", type=int, default=8)
    verify_id.add_argument("--n-extra", type=int, default=20)
    verify_lem = verify_sub.add_parser("lemmas")
    verify_lem.add_argument("--max-n", type=int, required=True)
    verify_lem.add_argument("--max-s", type=int, required=True)
    verify_lem.add_argument("--p", type=_int_list, default=[1])

    sweep = sub.add_parser("sweep", help="randomized soundness campaigns")
    sweep_sub = sweep.add_subparsers(dest="sweep_what", required=True)
    sweep_s = sweep_sub.add_parser("soundness")
    sweep_s.add_argument("--n", type=_int_list, required=True)
    sweep_s.add_argument("--delta", type=int, required=True)
    sweep_s.add_argument("--samples", type=int, required=True)
    sweep_s.add_argument("--seed", type=int, default=0)
    sweep_s.add_argument("--which", choices=("edges", "spectral"), default="edges")
    sweep_s.add_argument("--out", required=True)

    rep = sub.add_parser("report", help="threshold tightness reports")
    rep_sub = rep.add_subparsers(dest="report_what", required=True)
    rep_t = rep_sub.add_parser("tightness")
    rep_t.add_argument("--n", type=int, required=True)
    rep_t.add_argument("--delta", type=int, required=True)
    rep_t.add_argument("--out", required=True)

    return top


def _cmd_gen(args) -> int:
    if args.gen_what == "extremal":
        _print_graph(extremal(args.n, args.delta), args.format)
    else:
        parts = tuple(sorted(args.parts, reverse=True))
        if parts != tuple(args.parts):
            raise ValueError("parts must be sorted non-increasing")
        _print_graph(build_family(FamilySpec(args.s, parts)), args.format)
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _read_graph(args)
    if args.check_what == "even-factor":
        res = has_even_factor(g, max_dim=args.max_dim, max_candidates=args.max_candidates)
        print(res.status)
        print(f"cost {res.search_cost}")
        for u, v in res.certificate or ():
            print(u, v)
        return EXIT_CAPPED if res.status == UNKNOWN else EXIT_OK
    rep = check_yan_kano_condition(g)
    if rep.holds:
        print("holds")
    else:
        witness = ",".join(str(v) for v in rep.witness)
        print(f"violated S={witness} odd_components={rep.witness_odd_components}")
    return EXIT_OK


def _cmd_spectral(args) -> int:
    res = spectral_radius(_read_graph(args), tol=args.tol, max_iter=args.max_iter)
    print(f"rho {res.rho:.12f}")
    print(f"iterations {res.iterations}")
    print(f"residual {res.residual:.3e}")
    return EXIT_OK


def _cmd_threshold(args) -> int:
    both = args.edges == args.rho  # neither or both flags: print labeled lines
    if args.edges and not both:
        print(edge_threshold(args.n, args.delta))
    elif args.rho and not both:
        print(f"{spectral_threshold(args.n, args.delta):.10f}")
    else:
        print(f"edges {edge_threshold(args.n, args.delta)}")
        print(f"rho {spectral_threshold(args.n, args.delta):.10f}")
    return EXIT_OK


def _cmd_verdict(args) -> int:
    vd = verdict(_read_graph(args), which=args.which)
    print(json.dumps(vd.to_json_dict()))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.verify_what == "identities":
        checks = run_identity_grid(delta_max=args.delta_max, n_extra=args.n_extra)
        failures = grid_failures(checks)
        for check in checks:
            print(json.dumps(check.to_json_dict()))
        print(
            f"checks={len(checks)} failures={len(failures)}",
            file=sys.stderr,
        )
        return EXIT_FAIL if failures else EXIT_OK
    report = lemma_merge_sweep(args.max_n, args.max_s, args.p)
    for line in csv_lines(report):
        print(line)
    print(
        f"instances={report.findings['instances']} "
        f"counterexamples={len(report.counterexamples)}",
        file=sys.stderr,
    )
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_sweep(args) -> int:
    report = soundness_sweep(
        ns=args.n,
        delta=args.delta,
        samples=args.samples,
        seed=args.seed,
        which=args.which,
        jobs=args.jobs,
    )
    write_csv(report, args.out)
    print(
        f"rows={len(report.rows)} counterexamples={len(report.counterexamples)} "
        f"unknowns={report.findings['unknown_rows']} "
        f"sampler_failures={report.findings['sampler_failures']}"
    )
    if report.counterexamples:
        return EXIT_FAIL
    if report.findings["unknown_rows"]:
        return EXIT_CAPPED
    return EXIT_OK


def _cmd_report(args) -> int:
    report = tightness_report(args.n, args.delta)
    with open(args.out, "w") as fh:
        json.dump(report.to_json_dict(), fh, indent=2)
        fh.write("\n")
    checks = report.findings["checks"]
    print(
        f"checks_passed={sum(checks.values())}/{len(checks)} "
        f"supergraphs={len(report.rows) - 1} "
        f"counterexamples={len(report.counterexamples)} "
        f"extremal_oracle={report.findings['extremal_oracle_finding']['status']}"
    )
    return EXIT_OK if report.passed else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    dispatch = {
        "gen": _cmd_gen,
        "check": _cmd_check,
        "spectral": _cmd_spectral,
        "threshold": _cmd_threshold,
        "verdict": _cmd_verdict,
        "verify": _cmd_verify,
        "sweep": _cmd_sweep,
        "report": _cmd_report,
    }
    try:
        return dispatch[args.command](args)
    except GraphParseError as exc:
        print(f"parse-error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PowerIterationError, RootFindingError) as exc:
        print(f"numeric-error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"usage-error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
