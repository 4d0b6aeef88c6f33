"""
Filename: cli.py
Created Date: 2026-10-18
Description: Command-line front end.

Every subcommand prints a human-readable summary, or JSON with --json, on
stdout. Exit codes: 0 when the queried criterion passes or verifies, 1 when
it fails, 2 on usage errors and 3 on internal errors.
"""

import argparse
import json
import re
import sys
from typing import Dict, List, Optional, Sequence

from colorama import Fore, Style, init

from src.config import settings as config_settings
from src.utils.error_handler import EXIT_FAIL, EXIT_PASS, CalibrationError, ValidationError, handle_cli_error

init(autoreset=True)

# "-2/3" and "-2/3,1/2,8" are values, not options
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?(,-?\d+(/\d+)?)*$|^-\d*\.\d+$")


class RationalArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reads negative rationals as values"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ValidationError(f"{self.prog}: {message}")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="Print machine-readable JSON")
    common.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                        help="Omit timing fields from the output")
    return common


def _slopes_arg(parser: argparse.ArgumentParser):
    parser.add_argument("--slopes", nargs="+", required=True, metavar="S",
                        help="Three slopes s1 < s2 < s3 as p/q, or one comma-separated value")
    parser.add_argument("--multiple", type=int, default=None, metavar="M",
                        help="Multiple m of the triangle (default: least integral multiple)")


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = RationalArgumentParser(
        prog="coxcheck",
        description="Exact checks for blown-up weighted projective planes and toric triangles",
        parents=[common],
    )
    parser.add_argument("--version", action="store_true", help="Show version info")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    check_triangle = commands.add_parser("check-triangle", parents=[common], help="Evaluate the triangle criterion")
    check_triangle.add_argument("slopes", nargs=3, metavar="S", help="Slopes s1 < s2 < s3 as p/q")
    check_triangle.add_argument("--multiple", type=int, default=None, metavar="M",
                                help="Also check the lattice form of the second condition at m")

    check_wps = commands.add_parser("check-wps", parents=[common], help="Evaluate the plane criterion")
    check_wps.add_argument("weights", nargs=3, type=int, metavar="W")
    check_wps.add_argument("--rel", nargs=3, type=int, metavar=("E", "F", "G"),
                           help="Relation a·e + b·f = c·g; omitted means search all orientations")

    find_relation = commands.add_parser("find-relation", parents=[common], help="List relations with width below 1")
    find_relation.add_argument("weights", nargs=3, type=int, metavar="W")

    enumerate_cmd = commands.add_parser("enumerate", parents=[common], help="Survey qualifying planes")
    enumerate_cmd.add_argument("--max", type=int, required=True, dest="bound", metavar="N")
    enumerate_cmd.add_argument("--format", choices=["csv", "json", "md"], default="md")
    enumerate_cmd.add_argument("--out", nargs="?", const="", default=None, metavar="FILE",
                               help="Write the report below the reports directory (default name survey_N.FMT)")
    enumerate_cmd.add_argument("--jobs", type=int, default=None, metavar="K")
    enumerate_cmd.add_argument("--audit", action="store_true", help="Also audit relation uniqueness")

    oracle = commands.add_parser("oracle", parents=[common], help="Jet oracle and derivative lemmas")
    oracle_commands = oracle.add_subparsers(dest="oracle_command", metavar="ORACLE_COMMAND")
    lemma22 = oracle_commands.add_parser("lemma22", parents=[common], help="Check the two-set derivative lemma")
    lemma22.add_argument("--n", type=int, required=True)
    lemma22.add_argument("--a", type=int, required=True)
    lemma22.add_argument("--b", type=int, required=True)
    oracle_commands.add_parser("lemmas", parents=[common], help="Sweep all derivative lemmas over their grids")
    full = oracle_commands.add_parser("full", parents=[common], help="Decide forced vanishing at the vertex")
    _slopes_arg(full)
    full.add_argument("--mode", choices=["exact", "modular"], default=None)
    full.add_argument("--primes", type=int, default=None, metavar="K")
    full.add_argument("--double", action="store_true", help="Also decide at 2m")
    full.add_argument("--jobs", type=int, default=None, metavar="K")
    remark = oracle_commands.add_parser("remark26", parents=[common], help="Single-point derivative check (n = 1)")
    _slopes_arg(remark)
    profile = oracle_commands.add_parser("profile", parents=[common], help="Right-column staircase check")
    _slopes_arg(profile)

    gnw = commands.add_parser("gnw", parents=[common], help="Check the two infinite families")
    gnw.add_argument("--variant", type=int, choices=[1, 2], required=True)
    gnw.add_argument("--from", type=int, required=True, dest="first", metavar="N1")
    gnw.add_argument("--to", type=int, required=True, dest="last", metavar="N2")

    moduli = commands.add_parser("moduli", parents=[common], help="Sublattice configuration checks")
    moduli_commands = moduli.add_subparsers(dest="moduli_command", metavar="MODULI_COMMAND")
    moduli_commands.add_parser("verify-n13", parents=[common], help="Verify the built-in n = 13 witness")
    check = moduli_commands.add_parser("check", parents=[common], help="Check a JSON configuration file")
    check.add_argument("--file", required=True, metavar="CONFIG.json")
    check.add_argument("--allow-spanning", action="store_true",
                       help="Accept a basis whose span is spanned by rays instead of requiring ray vectors")
    return parser


def parse_slopes(values: Sequence[str]):
    from src.algebra.core import parse_rational

    parts = [p for v in values for p in v.split(",") if p.strip()]
    if len(parts) != 3:
        raise ValidationError(f"expected three slopes, got {len(parts)}")
    return tuple(parse_rational(p) for p in parts)


def _emit(args, data: Dict, lines: List[str]):
    if getattr(args, "json", False):
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _verdict_line(ok: bool, text: str) -> str:
    return f"{Fore.GREEN}✅ {text}" if ok else f"{Fore.RED}❌ {text}"


def _include_timing(args) -> bool:
    return not getattr(args, "no_timing", False)


# Subcommand handlers


def cmd_check_triangle(args) -> int:
    from src.algebra.core import format_rational
    from src.services.triangle import (
        check_triangle_criterion,
        lattice_restatement,
        minimal_multiple,
        normal_fan_rays,
        triangle_from_slopes,
    )

    t = triangle_from_slopes(*parse_slopes(args.slopes))
    report = check_triangle_criterion(t)
    fan = normal_fan_rays(t)
    data = {"triangle": t.to_dict(), "report": report.to_dict(), "fan": fan.to_dict(),
            "minimal_multiple": minimal_multiple(t)}
    if args.multiple is not None:
        data["lattice_restatement"] = lattice_restatement(t, args.multiple)

    lines = [
        f"Triangle slopes ({', '.join(format_rational(s) for s in t.slopes)})",
        f"  w = {format_rational(report.w)}  n = {report.n}",
        f"  condition (1) w < 1: {report.cond1}",
        f"  condition (2) count {report.cond2_count} = n: {report.cond2_count_ok}, "
        f"n·s2 not integral: {report.cond2_nonintegral_ok}",
        f"  normal fan weights {fan.weights}, index {fan.index}",
        _verdict_line(report.passes, "passes" if report.passes else "fails"),
    ]
    _emit(args, data, lines)
    return EXIT_PASS if report.passes else EXIT_FAIL


def cmd_check_wps(args) -> int:
    from src.algebra.core import format_rational
    from src.models.wps import Relation
    from src.services.wps import check_wps_criterion, qualifies, wps_to_triangle

    a, b, c = args.weights
    if args.rel is not None:
        rel = Relation(*args.rel)
        report = check_wps_criterion(a, b, c, rel)
    else:
        found = qualifies(a, b, c)
        if found is None:
            _emit(args, {"weights": [a, b, c], "passes": False},
                  [_verdict_line(False, f"No orientation of ({a}, {b}, {c}) passes")])
            return EXIT_FAIL
        _, rel, report = found

    data = {"report": report.to_dict()}
    lines = [
        f"{report.weights} with relation {report.relation}",
        f"  w = {format_rational(report.w)}  n = {report.n}",
        f"  delta set {list(report.delta_set)}  gamma set {list(report.gamma_set)}",
        f"  conditions: w < 1 {report.cond1}, count {report.cond2_count_ok}, modular {report.cond2_mod_ok}",
    ]
    if report.passes:
        triangle = wps_to_triangle(*report.weights.as_tuple(), report.relation)
        data["triangle"] = triangle.to_dict()
        lines.append(f"  triangle slopes ({', '.join(format_rational(s) for s in triangle.slopes)})")
    lines.append(_verdict_line(report.passes, "passes" if report.passes else "fails"))
    _emit(args, data, lines)
    return EXIT_PASS if report.passes else EXIT_FAIL


def cmd_find_relation(args) -> int:
    from src.services.wps import find_relations

    relations = find_relations(*args.weights)
    data = {"weights": list(args.weights), "relations": [list(r.as_tuple()) for r in relations]}
    lines = [str(r) for r in relations] or [f"{Fore.YELLOW}No relation with w < 1"]
    _emit(args, data, lines)
    return EXIT_PASS if relations else EXIT_FAIL


def cmd_enumerate(args) -> int:
    from dataclasses import replace

    from src.services.report import default_filename, emit_report, write_report
    from src.services.survey import calibrate, enumerate_qualifying, uniqueness_audit

    result = enumerate_qualifying(args.bound, jobs=args.jobs)
    include_timing = _include_timing(args)
    fmt = "json" if getattr(args, "json", False) else args.format

    calibration_error: Optional[CalibrationError] = None
    try:
        calibrated = calibrate(result)
    except CalibrationError as e:
        calibration_error = e
        calibrated = False
        result = replace(result, alternative_counts=e.alternatives)

    audit_ok = uniqueness_audit(result) if args.audit else True
    payload = emit_report(result, fmt, include_timing=include_timing)
    if args.out is not None:
        write_report(payload, args.out or default_filename(args.bound, fmt))
    else:
        sys.stdout.write(payload.decode("utf-8"))

    if calibration_error is not None:
        raise calibration_error
    if calibrated:
        print(f"{Fore.GREEN}Calibrated against the published count at bound {args.bound}", file=sys.stderr)
    return EXIT_PASS if audit_ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    handlers = {
        "lemma22": _oracle_lemma22,
        "lemmas": _oracle_lemmas,
        "full": _oracle_full,
        "remark26": _oracle_remark26,
        "profile": _oracle_profile,
    }
    if args.oracle_command not in handlers:
        raise ValidationError("oracle needs one of: " + ", ".join(handlers))
    return handlers[args.oracle_command](args)


def _oracle_lemma22(args) -> int:
    from src.algebra.core import format_rational
    from src.services.jet_oracle import lemma22_operator, verify_lemma22

    check = verify_lemma22(args.n, args.a, args.b)
    op = lemma22_operator(args.n, args.a, args.b)
    data = {"n": args.n, "a": args.a, "b": args.b, "operator": op.to_dict(), **check.to_dict()}
    lines = [
        "Operator: " + " + ".join(f"({format_rational(t.coeff)})∂x^{t.p}∂y^{t.q}" for t in op.terms),
        f"  kills the {args.n} monomials x^-a y^(b+j): {check.annihilates_s2}",
        f"  value on x^-(a+1) y^(b+n+1): {format_rational(check.s1_value)}",
        _verdict_line(check.annihilates_s2, "verified" if check.annihilates_s2 else "failed"),
    ]
    _emit(args, data, lines)
    return EXIT_PASS if check.annihilates_s2 else EXIT_FAIL


def _oracle_lemmas(args) -> int:
    from src.services.jet_oracle import lemma_suite

    report = lemma_suite()
    lines = [
        f"two-set lemma: {report.lemma22_cases} cases, ok = {report.lemma22_ok}",
        f"y-derivative lemma: {report.lemma25_cases} cases, ok = {report.lemma25_ok}",
        f"alternating sum lemma: {report.lemma23_cases} cases, ok = {report.lemma23_ok}",
        *(f"{Fore.RED}  {f}" for f in report.failures),
        _verdict_line(report.passes, "verified" if report.passes else "failed"),
    ]
    _emit(args, report.to_dict(), lines)
    return EXIT_PASS if report.passes else EXIT_FAIL


def _oracle_full(args) -> int:
    from src.algebra.core import format_rational
    from src.config.settings import config
    from src.services.jet_oracle import JetOracle
    from src.services.triangle import triangle_from_slopes

    t = triangle_from_slopes(*parse_slopes(args.slopes))
    settings = dict(config.get("oracle", {}))
    if args.jobs is not None:
        settings["jobs"] = args.jobs
    verdict = JetOracle(settings).run(t, args.multiple, mode=args.mode, prime_count=args.primes,
                                      double=args.double)

    ok = verdict.forced_vanishing and (verdict.doubled is None or verdict.doubled.forced_vanishing)
    lines = []
    for v in filter(None, (verdict, verdict.doubled)):
        lines.extend([
            f"m = {v.m}, W = {v.W}: {v.rows} x {v.cols} system ({v.mode}, primes {list(v.primes)})",
            f"  rank {v.rank_m}, with vertex row {v.rank_with_vertex}"
            f"{' (reflected)' if v.reflected else ''}, vertex ({', '.join(format_rational(c) for c in v.vertex)})",
            f"  forced vanishing {v.forced_vanishing}, column sums forced {v.column_sums_forced}, "
            f"primes agree {v.primes_agree}",
        ])
    lines.append(_verdict_line(ok, "forced" if ok else "not forced"))
    _emit(args, verdict.to_dict(include_timing=_include_timing(args)), lines)
    return EXIT_PASS if ok else EXIT_FAIL


def _oracle_remark26(args) -> int:
    from src.services.jet_oracle import remark26_check
    from src.services.triangle import triangle_from_slopes

    t = triangle_from_slopes(*parse_slopes(args.slopes))
    ok = remark26_check(t, args.multiple)
    _emit(args, {"remark26": ok}, [_verdict_line(ok, "only the vertex survives" if ok else "check failed")])
    return EXIT_PASS if ok else EXIT_FAIL


def _oracle_profile(args) -> int:
    from src.services.jet_oracle import proof_frame, right_columns_profile
    from src.services.triangle import triangle_from_slopes

    t = triangle_from_slopes(*parse_slopes(args.slopes))
    ok = right_columns_profile(t, args.multiple)
    frame = proof_frame(t, args.multiple)
    data = {"staircase": ok, "m": frame.m, "W": frame.W, "n": frame.n, "a": frame.a, "b": frame.b,
            "reflected": frame.reflected}
    lines = [
        f"m = {frame.m}, W = {frame.W}, n = {frame.n}, a = {frame.a}, b = {frame.b}",
        _verdict_line(ok, "right columns form the staircase" if ok else "staircase mismatch"),
    ]
    _emit(args, data, lines)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_gnw(args) -> int:
    from src.algebra.core import format_rational
    from src.services.wps import check_wps_criterion, gnw_family, gnw_width

    members = []
    lines = []
    for N in range(args.first, args.last + 1):
        if args.variant == 1 and (N < 4 or N % 3 == 0):
            continue
        if args.variant == 2 and N < 3:
            continue
        weights, rel = gnw_family(N, args.variant)
        report = check_wps_criterion(*weights.as_tuple(), rel)
        width_ok = gnw_width(N, args.variant) == report.w
        ok = report.passes and width_ok
        members.append({"N": N, **report.to_dict(), "width_formula_ok": width_ok, "ok": ok})
        lines.append(_verdict_line(ok, f"N = {N}: {weights} {rel} w = {format_rational(report.w)} n = {report.n}"))
    if not members:
        raise ValidationError(f"no valid family members for variant {args.variant} in [{args.first}, {args.last}]")
    ok = all(m["ok"] for m in members)
    _emit(args, {"variant": args.variant, "members": members, "passes": ok}, lines)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_moduli(args) -> int:
    from src.services.moduli import check_configuration, load_configuration, verify_builtin

    if args.moduli_command == "verify-n13":
        result = verify_builtin()
        lines = [
            f"det(a1..a10) = {result.determinant}",
            f"invariant factors of a1..a8: {list(result.report.invariant_factors)}",
            f"w identity: {result.w_identity}, relation identity: {result.relation_identity}",
            f"coefficients {list(result.report.coefficients or [])}: match {result.coefficients_match}",
            f"rays for n = 13: {result.ray_count}",
            _verdict_line(result.passes, "witness verified" if result.passes else "witness failed"),
        ]
        _emit(args, result.to_dict(), lines)
        return EXIT_PASS if result.passes else EXIT_FAIL

    if args.moduli_command == "check":
        cfg = load_configuration(args.file)
        report = check_configuration(cfg, require_basis_rays=False if args.allow_spanning else None)
        lines = [f"{key}: {value}" for key, value in report.to_dict().items() if key != "passes"]
        lines.append(_verdict_line(report.passes, "passes" if report.passes else "fails"))
        _emit(args, report.to_dict(), lines)
        return EXIT_PASS if report.passes else EXIT_FAIL

    raise ValidationError("moduli needs one of: verify-n13, check")


COMMANDS = {
    "check-triangle": cmd_check_triangle,
    "check-wps": cmd_check_wps,
    "find-relation": cmd_find_relation,
    "enumerate": cmd_enumerate,
    "oracle": cmd_oracle,
    "gnw": cmd_gnw,
    "moduli": cmd_moduli,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, dispatch and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        if args.version:
            from src.utils.splash import show_version
            show_version()
            return EXIT_PASS
        if args.command is None:
            parser.print_help(sys.stderr)
            raise ValidationError("no command given")
        if config_settings.load_error is not None:
            raise config_settings.load_error
        return COMMANDS[args.command](args)
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except KeyboardInterrupt:
        print(f"\n{Fore.YELLOW}Interrupted{Style.RESET_ALL}", file=sys.stderr)
        return 130
    except Exception as e:
        return handle_cli_error(e)
