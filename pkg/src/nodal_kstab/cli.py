"""Command-line interface: ``nodal-kstab <verb> [options]``."""
from __future__ import annotations

import argparse
import dataclasses
import sys
from typing import List, Optional, Tuple

from nodal_kstab.blowup_geom import invariant_record
from nodal_kstab.emitters import dispatch_emit
from nodal_kstab.exactnum import decimal_string, format_number, parse_number
from nodal_kstab.exceptions import AppException, InvalidInputError
from nodal_kstab.nodal_catalog import A_invariant, S_exact, breakpoints, classify, construct_Dn, d_sequence
from nodal_kstab.scan import SCHEMA_VERSION, ScanCache, ScanConfig, delta_upper_bound, scan
from nodal_kstab.section_ring import sm_table
from nodal_kstab.utils import get_logger, load_settings, set_level
from nodal_kstab.verify import verify_all

logger = get_logger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1 instead of argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _payload(kind: str, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, **body}


def _positive_number(text: str):
    value = parse_number(text)
    if value <= 0:
        raise InvalidInputError(f"expected a positive number, got {text}")
    return value


def cmd_invariants(args, settings) -> Tuple[dict, int]:
    record = invariant_record(args.a, args.b, settings)
    return _payload("invariants", record.to_json()), EXIT_OK


def cmd_s_exact(args, settings) -> Tuple[dict, int]:
    t = _positive_number(args.t)
    value = S_exact(t)
    body = {"t": format_number(t), "S": format_number(value), "A": format_number(A_invariant(t)),
            "S_decimal": decimal_string(value)}
    return _payload("s_exact", body), EXIT_OK


def cmd_classify(args, settings) -> Tuple[dict, int]:
    return _payload("verdict", classify(_positive_number(args.t)).to_json()), EXIT_OK


def _scan_config(args, settings, mode: str) -> ScanConfig:
    return ScanConfig.from_text(
        args.t_min, args.t_max, args.step,
        mode=mode, m=getattr(args, "m", 1), truncation_cap=settings.truncation_cap,
        cache_dir=settings.cache_dir,
    )


def cmd_scan(args, settings) -> Tuple[dict, int]:
    config = _scan_config(args, settings, args.mode)
    cache = ScanCache(settings.cache_dir) if settings.cache_dir else None
    report = scan(config, jobs=settings.jobs, cache=cache)
    return report.to_json(), EXIT_FAILURE if report.failed_rows else EXIT_OK


def cmd_delta(args, settings) -> Tuple[dict, int]:
    report = delta_upper_bound(_scan_config(args, settings, "exact"), jobs=settings.jobs)
    return report.to_json(), EXIT_OK


def cmd_dseq(args, settings) -> Tuple[dict, int]:
    if args.n < 2:
        raise InvalidInputError(f"--n must be >= 2, got {args.n}")
    sequence = d_sequence(args.n)
    points = breakpoints(args.n - 1)
    body = {
        "values": list(sequence.values),
        "breakpoints": [format_number(t) for t in points.t],
        "t_prime": [format_number(t) for t in points.t_prime],
    }
    return _payload("dseq", body), EXIT_OK


def cmd_curve(args, settings) -> Tuple[dict, int]:
    curve = construct_Dn(args.n, settings.dn_max, settings.irreducibility_max, settings.truncation_cap)
    body = curve.to_json()
    body["coefficients"] = [
        {"e0": e0, "e1": e1, "e2": e2, "coefficient": format_number(c)} for e0, e1, e2, c in curve.coefficient_rows()
    ]
    return _payload("curve", body), EXIT_OK


def cmd_sm_table(args, settings) -> Tuple[dict, int]:
    rows = [
        {"a": r.a, "b": r.b, "t": format_number(r.t), "m": r.m, "N_m": r.N_m,
         "S_m": format_number(r.S_m), "T_m": format_number(r.T_m)}
        for r in sm_table(args.a, args.b, args.m_max, settings.truncation_cap)
    ]
    return _payload("sm_table", {"rows": rows}), EXIT_OK


def cmd_verify_all(args, settings) -> Tuple[dict, int]:
    report = verify_all(settings)
    for check in report.checks:
        for error in check.errors:
            logger.error(error)
    return report.to_json(), EXIT_OK if report.passed else EXIT_FAILURE


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", default="json", choices=["csv", "json", "svg"])
    common.add_argument("--cache-dir", help="scan cache directory (default: NODAL_KSTAB_CACHE_DIR)")
    common.add_argument("--jobs", type=int, help="worker processes for scans (default: NODAL_KSTAB_JOBS)")
    common.add_argument("--log-level", type=str.upper, choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="default: LOG_LEVEL")

    parser = ArgumentParser(prog="nodal-kstab", description=__doc__)
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=ArgumentParser)

    p = verbs.add_parser("invariants", parents=[common], help="A, T, epsilon, S for weights (a, b)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(handler=cmd_invariants)

    p = verbs.add_parser("s-exact", parents=[common], help="exact S(v_t)")
    p.add_argument("--t", required=True)
    p.set_defaults(handler=cmd_s_exact)

    p = verbs.add_parser("classify", parents=[common], help="finite generation verdict for v_t")
    p.add_argument("--t", required=True)
    p.set_defaults(handler=cmd_classify)

    for name, handler, help_text in (("scan", cmd_scan, "scan S over a grid"), ("delta", cmd_delta, "A/S upper bounds")):
        p = verbs.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--t-min", required=True)
        p.add_argument("--t-max", required=True)
        p.add_argument("--step", required=True)
        if name == "scan":
            p.add_argument("--mode", default="exact", choices=["exact", "sample"])
            p.add_argument("--m", type=int, default=1)
        p.set_defaults(handler=handler)

    p = verbs.add_parser("dseq", parents=[common], help="the sequence d_n and breakpoints")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_dseq)

    p = verbs.add_parser("curve", parents=[common], help="the singular curve D_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_curve)

    p = verbs.add_parser("sm-table", parents=[common], help="S_m and T_m of v_(a,b) for m = 1..m_max")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.set_defaults(handler=cmd_sm_table)

    p = verbs.add_parser("verify-all", parents=[common], help="run every acceptance check")
    p.set_defaults(handler=cmd_verify_all)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"nodal-kstab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.log_level:
        set_level(args.log_level)
    try:
        settings = load_settings()
        overrides = {}
        if args.cache_dir:
            overrides["cache_dir"] = args.cache_dir
        if args.jobs is not None:
            if args.jobs < 1:
                raise InvalidInputError(f"--jobs must be >= 1, got {args.jobs}")
            overrides["jobs"] = args.jobs
        settings = dataclasses.replace(settings, **overrides)

        payload, status = args.handler(args, settings)
        text = dispatch_emit(payload, args.format, args.out)
    except InvalidInputError as exc:
        print(f"nodal-kstab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AppException as exc:
        logger.error(f"❌ {exc}")
        return EXIT_FAILURE

    if args.out is None:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
