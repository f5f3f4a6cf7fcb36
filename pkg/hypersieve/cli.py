#!/usr/bin/env python3
"""
hypersieve command-line interface

Subcommands: check, falsify, expand, apply, en-bound, converge, reproduce-paper.

Exit codes:
    0  success / sequence falsified
    1  inconclusive or a check failed
    2  malformed input or usage error
    3  internal certificate violation (a bug)
"""

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .bases import parse_basis_spec
from .basischange import expand_in_basis, expansion_matrix
from .config import OutputFormat, RunConfig
from .errors import CertificateError, HypersieveError, ParseError, ZeroLeadingTermsError
from .experiments import claim_convergence_check, default_grid, deformed_expansion_trace, en_max_bound
from .mstest import (
    GammaSequence, apply_sequence, falsify, geometric_extrapolation, polya_schur_check, sign_pattern_check,
    turan_check, zero_pattern_check
)
from .polycore import format_rational, to_rational
from .polyparse import parse_poly
from .regression import FactStatus, run_facts

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def configure_logging(verbosity: int):
    """WARNING by default, INFO with -v, DEBUG with -vv; HYPERSIEVE_LOG_LEVEL wins when set."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    env_level = os.getenv("HYPERSIEVE_LOG_LEVEL")
    if env_level:
        level = getattr(logging, env_level.strip().upper(), level)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")


def load_sequence(source: str) -> GammaSequence:
    """Sequence from a JSON file path, or inline JSON when the argument starts with '{'."""
    text = source.strip()
    if not text.startswith("{"):
        with open(source, "r") as f:
            text = f.read()
    return GammaSequence.from_json(json.loads(text))


def _emit(args: argparse.Namespace, config: RunConfig, payload: Dict[str, Any], human: str):
    text = json.dumps(payload, indent=2) if config.output == OutputFormat.JSON else human
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
        logger.info(f"Report written to {args.out}")
    else:
        print(text)


def _rationals(values: List[Fraction]) -> List[str]:
    return [format_rational(v) for v in values]


def cmd_check(args: argparse.Namespace, config: RunConfig) -> int:
    G = load_sequence(args.sequence)
    N = config.degree_budget
    results = [
        polya_schur_check(G, N).to_json(),
        turan_check(G, N).to_json(),
        sign_pattern_check(G, N).to_json(),
        zero_pattern_check(G, N).to_json(),
    ]
    try:
        results.append(geometric_extrapolation(G).to_json())
    except ZeroLeadingTermsError:
        results.append({"check": "geometric_extrapolation", "status": "NotApplicable", "passed": True})

    passed = all(r["passed"] for r in results)
    lines = [f"Checks for {G} up to N = {N}"]
    for r in results:
        mark = "✅" if r["passed"] else "❌"
        where = f" at {r['index']}" if "index" in r else ""
        lines.append(f"{mark} {r['check']}: {r['status']}{where}")
    payload = {"sequence": G.to_json(), "N": N, "passed": passed, "checks": results}
    _emit(args, config, payload, "\n".join(lines))
    return EXIT_OK if passed else EXIT_INCONCLUSIVE


def cmd_falsify(args: argparse.Namespace, config: RunConfig) -> int:
    G = load_sequence(args.sequence)
    basis = parse_basis_spec(args.basis)
    report = falsify(G, basis, config.degree_budget, config.trials, config.seed, tol=config.tol, jobs=config.jobs)
    _emit(args, config, report.to_json(), report.summary())
    return EXIT_OK if report.found else EXIT_INCONCLUSIVE


def cmd_expand(args: argparse.Namespace, config: RunConfig) -> int:
    basis = parse_basis_spec(args.basis)
    if args.matrix is not None:
        target = parse_basis_spec(args.target)
        matrix = expansion_matrix(basis, target, args.matrix)
        human = "\n".join("[" + ", ".join(_rationals(list(row))) + "]" for row in matrix.rows)
        _emit(args, config, matrix.to_json(), human)
        return EXIT_OK

    if not args.poly:
        raise ParseError("expand needs a polynomial literal or --matrix N")
    f = parse_poly(args.poly)
    coeffs = expand_in_basis(f, basis)
    payload = {"basis": basis.descriptor, "f": f.to_json(), "coeffs": _rationals(coeffs)}
    _emit(args, config, payload, "[" + ", ".join(_rationals(coeffs)) + "]")
    return EXIT_OK


def cmd_apply(args: argparse.Namespace, config: RunConfig) -> int:
    basis = parse_basis_spec(args.basis)
    G = load_sequence(args.seq)
    f = parse_poly(args.poly)
    image = apply_sequence(G, f, basis)
    payload = {"basis": basis.descriptor, "sequence": G.to_json(), "f": f.to_json(), "image": image.to_json()}
    _emit(args, config, payload, str(image))
    return EXIT_OK


def cmd_en_bound(args: argparse.Namespace, config: RunConfig) -> int:
    basis = parse_basis_spec(args.basis)
    bound = en_max_bound(basis, args.n, tol=config.tol, require_simple=not args.allow_multiple)
    human = (f"E_{bound.n} for {bound.basis_name}: max E_n in [{format_rational(bound.lo)}, "
             f"{format_rational(bound.hi)}] (width {format_rational(bound.width)})")
    _emit(args, config, bound.to_json(), human)
    return EXIT_OK


def cmd_converge(args: argparse.Namespace, config: RunConfig) -> int:
    source = parse_basis_spec(args.source)
    target = parse_basis_spec(args.target)
    f = parse_poly(args.poly)
    schedule = [to_rational(v) for v in args.schedule.split(",") if v.strip()]
    G = load_sequence(args.seq) if args.seq else GammaSequence.constant(1)
    grid = default_grid()

    trace = deformed_expansion_trace(f, source, target, schedule, grid)
    report = claim_convergence_check(trace, grid, G)

    lines = [f"Deformed expansion of {f}: {source.name} -> {target.name}"]
    lines.append(f"   m = [{', '.join(_rationals(trace.target_coeffs))}]")
    for record in trace.records:
        lines.append(f"   alpha={format_rational(record.alpha)}: c = [{', '.join(_rationals(record.coeffs))}]")
    lines.append(("✅" if report.passed else "❌") +
                 f" {len(report.checks) - len(report.failures())}/{len(report.checks)} gap comparisons decay")
    payload = {"trace": trace.to_json(), "report": report.to_json()}
    _emit(args, config, payload, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_INCONCLUSIVE


def cmd_reproduce_paper(args: argparse.Namespace, config: RunConfig) -> int:
    results = run_facts(config)
    passed = all(r.status == FactStatus.PASS for r in results)
    marks = {FactStatus.PASS: "✅", FactStatus.FAIL: "❌", FactStatus.SKIPPED_BUDGET: "⚠️ "}
    lines = [f"Reproducing {len(results)} facts (degree budget {config.degree_budget})", "=" * 60]
    for r in results:
        lines.append(f"{marks[r.status]} {r.status.value:<15} {r.name}: {r.detail}")
    payload = {"degree_budget": config.degree_budget, "passed": passed, "facts": [r.to_json() for r in results]}
    _emit(args, config, payload, "\n".join(lines))
    return EXIT_OK if passed else EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logging')
    common.add_argument('--output', choices=[o.value for o in OutputFormat], help='Report format (default human)')
    common.add_argument('--out', help='Write the report to this file instead of stdout')
    common.add_argument('--degree', type=int, dest='degree_budget', help='Degree budget / check bound N')
    common.add_argument('--trials', type=int, help='Random falsification trials')
    common.add_argument('--seed', type=int, help='Random seed (overrides HYPERSIEVE_SEED)')
    common.add_argument('--tol', help='Bisection tolerance as a rational, e.g. 1/1024')
    common.add_argument('--jobs', type=int, help='Falsifier worker threads')

    parser = argparse.ArgumentParser(prog='hypersieve',
                                     description='Exact-arithmetic toolkit for multiplier sequences over simple sets')
    subparsers = parser.add_subparsers(dest='command', help='Commands')
    subparsers.required = True

    check_parser = subparsers.add_parser('check', parents=[common], help='Classical multiplier-sequence checks')
    check_parser.add_argument('sequence', help='Sequence JSON file (or inline JSON)')
    check_parser.set_defaults(handler=cmd_check)

    falsify_parser = subparsers.add_parser('falsify', parents=[common], help='Search for a counterexample over a basis')
    falsify_parser.add_argument('sequence', help='Sequence JSON file (or inline JSON)')
    falsify_parser.add_argument('--basis', required=True, help='Basis shorthand (std, q1, hermite:-1, ...) or JSON')
    falsify_parser.set_defaults(handler=cmd_falsify)

    expand_parser = subparsers.add_parser('expand', parents=[common], help='Expand a polynomial in a basis')
    expand_parser.add_argument('poly', nargs='?', help='Polynomial literal, e.g. "4x^2+4x+1"')
    expand_parser.add_argument('--basis', required=True, help='Basis to expand in')
    expand_parser.add_argument('--matrix', type=int, help='Print the expansion matrix of --basis in --target up to N')
    expand_parser.add_argument('--target', default='std', help='Target basis for --matrix (default std)')
    expand_parser.set_defaults(handler=cmd_expand)

    apply_parser = subparsers.add_parser('apply', parents=[common], help='Apply a sequence to a polynomial')
    apply_parser.add_argument('poly', help='Polynomial literal, e.g. "(1+x)^3"')
    apply_parser.add_argument('--basis', required=True, help='Basis the sequence acts in')
    apply_parser.add_argument('--seq', required=True, help='Sequence JSON file (or inline JSON)')
    apply_parser.set_defaults(handler=cmd_apply)

    en_parser = subparsers.add_parser('en-bound', parents=[common], help='Bracket max E_n by exact bisection')
    en_parser.add_argument('--basis', required=True, help='Basis whose q_n has simple real zeros')
    en_parser.add_argument('--n', type=int, required=True, help='Index n >= 2')
    en_parser.add_argument('--allow-multiple', action='store_true', help='Only require q_n real-rooted')
    en_parser.set_defaults(handler=cmd_en_bound)

    converge_parser = subparsers.add_parser('converge', parents=[common], help='Deformed-basis convergence trace')
    converge_parser.add_argument('poly', nargs='?', default='x^2-1', help='Polynomial literal (default x^2-1)')
    converge_parser.add_argument('--source', default='q2', help='Source basis Q (default q2)')
    converge_parser.add_argument('--target', default='std', help='Target basis B (default std)')
    converge_parser.add_argument('--schedule', default='10,100,1000', help='Comma-separated increasing alphas > 1')
    converge_parser.add_argument('--seq', help='Sequence for the image claim (default constant 1)')
    converge_parser.set_defaults(handler=cmd_converge)

    reproduce_parser = subparsers.add_parser('reproduce-paper', parents=[common], help='Run the regression fact corpus')
    reproduce_parser.set_defaults(handler=cmd_reproduce_paper)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point with command-line interface"""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        config = RunConfig.from_env().with_overrides(
            degree_budget=args.degree_budget, trials=args.trials, seed=args.seed,
            tol=args.tol, output=args.output, jobs=args.jobs,
        )
        return args.handler(args, config)
    except CertificateError as e:
        print(f"Internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    except (HypersieveError, json.JSONDecodeError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
