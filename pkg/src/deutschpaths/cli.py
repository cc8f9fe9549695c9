"""Command-line interface.

Subcommands: count, enumerate, series, biject, verify, stats, selftest.
Output is human-readable by default; --json wraps the payload in a fixed
envelope (tool, version, command echo, payload, elapsed_seconds) and
--csv emits flat tables.  Counts and series coefficients are emitted as
decimal strings in JSON so no consumer ever rounds them through floats;
elapsed time lives only in the envelope, keeping payloads reproducible.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__, algebra
from .bijection import NotAPath, certify, from_motzkin, to_motzkin
from .formulas import (
    BadParams,
    FormulaId,
    Series,
    expand_in_z,
    formula,
    oracle_check,
)
from .matrices import (
    adjudicate_det_product,
    verify_cramer,
    verify_det_recursion,
    verify_determinant,
    verify_lu,
)
from .paths import (
    DEFAULT_ENUM_BOUND,
    PathError,
    PathFamilyQuery,
    QueryError,
    count_dp,
    enumerate_paths,
    validate_path,
)
from .reporting import MismatchFound, VerificationReport
from .selftest import run_selftest
from .stats import LAWS, ZeroCount

CACHE_ENV_VAR = "DEUTSCHPATHS_CACHE_DIR"
CONFIG_FORMAT = "deutschpaths-config"
CONFIG_VERSION = 1

FORMULA_ALIASES = {
    "area": "area_A",
    "motzkin": "motzkin_M",
    "closed": "phi0_limit",
    "open": "open_sum_limit",
}


class UsageError(ValueError):
    """Bad flag combination or invalid input value; exits with code 2."""

    def __init__(self, message: str, hint: str = ""):
        self.hint = hint
        super().__init__(message)


def _num_str(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return str(x)


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config file {path}: {exc}", "pass a readable JSON file")
    if data.get("format") != CONFIG_FORMAT or data.get("version") != CONFIG_VERSION:
        raise UsageError(
            f"config file {path} is not a {CONFIG_FORMAT} v{CONFIG_VERSION} document",
            'expected {"format": "deutschpaths-config", "version": 1, ...}',
        )
    return data


def _resolve_cache_dir(args, config: dict) -> str | None:
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    if os.environ.get(CACHE_ENV_VAR):
        return os.environ[CACHE_ENV_VAR]
    return config.get("cache_dir")


# --- subcommand handlers (return JSON-safe payloads) -------------------------


def _query_from_args(args) -> PathFamilyQuery:
    return PathFamilyQuery(
        family=args.family,
        n=args.n,
        end_level=args.end_level,
        max_height=args.max_height,
    )


def _cmd_count(args, config) -> dict:
    query = _query_from_args(args)
    return {
        "count": _num_str(count_dp(query)),
        "query": {
            "family": query.family,
            "n": query.n,
            "end_level": query.end_level,
            "max_height": query.max_height,
        },
    }


def _cmd_enumerate(args, config) -> dict:
    bound = config.get("enumeration_bound", DEFAULT_ENUM_BOUND)
    paths = enumerate_paths(_query_from_args(args), bound=bound)
    return {
        "count": _num_str(len(paths)),
        "paths": [p.tokens() for p in paths],
    }


def _formula_from_args(args) -> tuple[FormulaId, Series]:
    text = FORMULA_ALIASES.get(args.formula.strip(), args.formula.strip())
    if text in ("height_sum_closed", "height_sum_open"):
        fid = FormulaId(text, (args.terms,))
    else:
        fid = FormulaId.parse(text)
    obj = formula(fid)
    if isinstance(obj, Series):
        if obj.order < args.terms:
            raise UsageError(
                f"{fid} only defines coefficients through z^{obj.order}",
                f"use --formula '{fid.name}({args.terms})' or lower --terms",
            )
        series = obj.truncate(args.terms)
    else:
        series = expand_in_z(obj, args.terms)
    return fid, series


def _cmd_series(args, config) -> dict:
    fid, series = _formula_from_args(args)
    return {
        "formula": str(fid),
        "order": series.order,
        "coefficients": [_num_str(c) for c in series.coeffs],
    }


def _cmd_biject(args, config) -> dict:
    family = "motzkin" if args.inverse else "deutsch"
    try:
        path = validate_path(args.path, family)
    except PathError as exc:
        raise UsageError(
            f"--path is not a valid {family} path: {exc}",
            "deutsch tokens are U and D<k>; motzkin tokens are U, F, D",
        )
    image = from_motzkin(path) if args.inverse else to_motzkin(path)
    return {
        "direction": "motzkin_to_deutsch" if args.inverse else "deutsch_to_motzkin",
        "input": path.tokens(),
        "output": image.tokens(),
        "length": len(path),
    }


_VERIFY_TARGETS = ("det", "recursion", "cramer", "lu", "oracle", "bijection", "product", "all")


def _run_verify(target: str, max_n: int | None, threads: int) -> VerificationReport:
    if target == "det":
        return verify_determinant(max_n or 12)
    if target == "recursion":
        return verify_det_recursion(max_n or 12)
    if target == "cramer":
        return verify_cramer(max_n or 8)
    if target == "lu":
        return verify_lu(max_n or 12)
    if target == "oracle":
        dp_max = max_n or 30
        return oracle_check(enum_max=min(8, dp_max), dp_max=dp_max, h_max=4, threads=threads)
    if target == "bijection":
        return certify(max_n or 8, threads=threads)
    if target == "product":
        return adjudicate_det_product(max_n or 3)
    return run_selftest(threads=threads)


def _report_payload(report: VerificationReport) -> dict:
    d = report.to_dict()
    d["checks_total"] = len(report.checks)
    d["failures_total"] = len(report.failures)
    return d


def _cmd_verify(args, config) -> dict:
    report = _run_verify(args.target, args.max_n, args.threads)
    return _report_payload(report)


def _cmd_stats(args, config) -> dict:
    if args.metric == "height":
        law = LAWS["avg_height_closed" if args.family == "closed" else "avg_height_open"]
    else:
        if args.family != "closed":
            raise UsageError(
                "area statistics are defined for closed paths only",
                "drop --family or pass --family closed",
            )
        law = LAWS["avg_area"]
    try:
        exact = law.exact(args.n)
    except ZeroCount as exc:
        raise UsageError(str(exc), "closed paths need n = 0 or n >= 2")
    approx = law.approx(args.n)
    return {
        "metric": args.metric,
        "family": args.family,
        "n": args.n,
        "law": law.description,
        "exact": _num_str(exact),
        "asymptotic": approx,
        "ratio": law.ratio(args.n),
    }


def _cmd_selftest(args, config) -> dict:
    report = run_selftest(threads=args.threads)
    return _report_payload(report)


# --- output formatting --------------------------------------------------------


def _emit_human(subcommand: str, payload: dict, out) -> None:
    if subcommand == "count":
        print(payload["count"], file=out)
    elif subcommand == "enumerate":
        for tokens in payload["paths"]:
            print(tokens, file=out)
    elif subcommand == "series":
        print(", ".join(payload["coefficients"]), file=out)
    elif subcommand == "biject":
        print(payload["output"], file=out)
    elif subcommand in ("verify", "selftest"):
        for check in payload["checks"]:
            status = "PASS" if check["passed"] else "FAIL"
            suffix = f"  [{check['witness']}]" if check["witness"] else ""
            print(f"{status}  {check['name']}  ({check['dimension']}){suffix}", file=out)
        data = payload.get("data", {})
        statement = data.get("det_product_statement") or data.get("statement")
        if statement:
            print(f"note: {statement}", file=out)
        print(
            f"{payload['title']}: {payload['checks_total']} checks, "
            f"{payload['failures_total']} failures",
            file=out,
        )
    elif subcommand == "stats":
        print(
            f"n={payload['n']} {payload['metric']} ({payload['family']}): "
            f"exact={payload['exact']} asymptotic={payload['asymptotic']:.6g} "
            f"ratio={payload['ratio']:.6g}",
            file=out,
        )


_CSV_SUBCOMMANDS = ("count", "enumerate", "series", "stats")


def _emit_csv(subcommand: str, payload: dict, out) -> None:
    import csv

    w = csv.writer(out, lineterminator="\n")
    if subcommand == "count":
        w.writerow(["count"])
        w.writerow([payload["count"]])
    elif subcommand == "enumerate":
        w.writerow(["index", "tokens"])
        for i, tokens in enumerate(payload["paths"]):
            w.writerow([i, tokens])
    elif subcommand == "series":
        w.writerow(["n", "coefficient"])
        for n, c in enumerate(payload["coefficients"]):
            w.writerow([n, c])
    elif subcommand == "stats":
        w.writerow(["metric", "family", "n", "exact", "asymptotic", "ratio"])
        w.writerow(
            [
                payload["metric"],
                payload["family"],
                payload["n"],
                payload["exact"],
                repr(payload["asymptotic"]),
                repr(payload["ratio"]),
            ]
        )
    else:
        raise UsageError(
            f"--csv is not available for {subcommand!r}",
            "csv output covers count, enumerate, series, and stats",
        )


def _emit(args, payload: dict, elapsed: float, out) -> None:
    if getattr(args, "json", False):
        envelope = {
            "tool": "deutschpaths",
            "version": __version__,
            "command": {"subcommand": args.subcommand, "args": _echo_args(args)},
            "payload": payload,
            "elapsed_seconds": round(elapsed, 6),
        }
        json.dump(envelope, out, indent=2, sort_keys=True)
        out.write("\n")
    elif getattr(args, "csv", False):
        _emit_csv(args.subcommand, payload, out)
    else:
        _emit_human(args.subcommand, payload, out)


def _echo_args(args) -> dict:
    skip = {"func", "subcommand", "json", "csv"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


# --- parser -------------------------------------------------------------------


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit a JSON envelope")
    fmt.add_argument("--csv", action="store_true", help="emit CSV rows")
    p.add_argument("--threads", type=int, default=1, help="worker threads for verification runs")
    p.add_argument("--cache-dir", help=f"series/trinomial cache directory (or ${CACHE_ENV_VAR})")
    p.add_argument("--config", help="JSON config file; flags override its values")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deutschpaths",
        description="Exact enumeration of Deutsch paths: counts, generating "
        "functions, matrix identities, statistics, and the Motzkin bijection.",
    )
    parser.add_argument("--version", action="version", version=f"deutschpaths {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

    p = sub.add_parser("count", help="count paths by family, length, end level, height bound")
    p.add_argument("--family", choices=("deutsch", "reversed", "motzkin"), required=True)
    p.add_argument("--n", type=int, required=True, help="path length (number of steps)")
    p.add_argument("--end-level", type=int, default=None)
    p.add_argument("--max-height", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list all matching paths in deterministic order")
    p.add_argument("--family", choices=("deutsch", "reversed", "motzkin"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--end-level", type=int, default=None)
    p.add_argument("--max-height", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("series", help="z-expansion of a catalog generating function")
    p.add_argument(
        "--formula",
        required=True,
        help="formula id, e.g. motzkin_M, phi(4,1), area_A; aliases: "
        + ", ".join(f"{k}={v}" for k, v in FORMULA_ALIASES.items()),
    )
    p.add_argument("--terms", type=int, default=10, help="series order N (prints N+1 coefficients)")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("biject", help="map an open Deutsch path to its Motzkin partner")
    p.add_argument("--path", required=True, help='step tokens, e.g. "U U D2"')
    p.add_argument("--inverse", action="store_true", help="map a Motzkin path back instead")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_biject)

    p = sub.add_parser("verify", help="run an exact identity battery")
    p.add_argument("target", choices=_VERIFY_TARGETS)
    p.add_argument("--max-n", type=int, default=None, help="largest dimension/length to check")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("stats", help="exact statistic vs asymptotic law")
    p.add_argument("metric", choices=("height", "area"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=("closed", "open"), default="closed")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("selftest", help="full fast verification battery")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        # reject unsupported output formats before any expensive work runs
        if getattr(args, "csv", False) and args.subcommand not in _CSV_SUBCOMMANDS:
            raise UsageError(
                f"--csv is not available for {args.subcommand!r}",
                "csv output covers count, enumerate, series, and stats",
            )
        config = _load_config(args.config)
        cache_dir = _resolve_cache_dir(args, config)
        if cache_dir:
            try:
                algebra.load_cache(cache_dir)
            except (OSError, ValueError) as exc:
                print(f"warning: ignoring cache: {exc}", file=sys.stderr)
        payload = args.func(args, config)
        if cache_dir:
            try:
                algebra.save_cache(cache_dir)
            except OSError as exc:
                print(f"warning: could not write cache: {exc}", file=sys.stderr)
        _emit(args, payload, time.perf_counter() - t0, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.hint:
            print(f"hint: {exc.hint}", file=sys.stderr)
        return 2
    except (QueryError, PathError, NotAPath, BadParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: run with --help to see valid values", file=sys.stderr)
        return 2
    except MismatchFound as exc:
        report = getattr(exc, "report", None)
        if report is not None:
            _emit(args, _report_payload(report), time.perf_counter() - t0, out)
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
