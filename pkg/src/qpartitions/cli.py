"""Command-line front end: sequences, identity verification, expressions, cache.

Exit codes: 0 success (all verified), 1 an identity refuted, 2 usage or
evaluation error.  JSON output renders counts as decimal strings so
arbitrary-precision values survive any consumer.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import enumeration as en
from .dsl import DslEvalError, DslSyntaxError, eval_text
from .identities import UnknownIdentityError, registry, verify

ENV_CACHE = "QPARTITIONS_CACHE"
ENV_ORDER = "QPARTITIONS_ORDER"
CACHE_VERSION = 1

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2


# ----------------------------------------------------------------------
# sequence families
# ----------------------------------------------------------------------

# family -> (required params, counter)
_FAMILIES = {
    "p": ((), lambda p, n: en.count_p(n)),
    "p_diff": (("t",), lambda p, n: en.count_p_fixed_diff(n, p["t"])),
    "a": (("m",), lambda p, n: en.count_a(p["m"], n)),
    "a_diff": (("m", "t"), lambda p, n: en.count_a_diff(p["m"], n, p["t"])),
    "Q": (("l", "k"), lambda p, n: en.count_Q(p["l"], p["k"], n, p["convention"])),
    "p_star": (("m",), lambda p, n: en.count_p_star(p["m"], n)),
    "pbar": ((), lambda p, n: en.count_pbar(n)),
    "pbar_diff": (("t",), lambda p, n: en.count_pbar_diff(n, p["t"])),
    "abar": (("m",), lambda p, n: en.count_abar(p["m"], n)),
    "abar_diff": (("m", "t"), lambda p, n: en.count_abar_diff(p["m"], n, p["t"])),
    "ubar": ((), lambda p, n: en.count_ubar(n)),
    "breg": (("l",), lambda p, n: en.count_breg(p["l"], n)),
    "breg_diff": (("l", "t"), lambda p, n: en.count_breg_diff(p["l"], n, p["t"])),
    "areg": (("m", "l"), lambda p, n: en.count_areg(p["m"], p["l"], n)),
    "areg_diff": (("m", "l", "t"),
                  lambda p, n: en.count_areg_diff(p["m"], p["l"], n, p["t"])),
}


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _emit_rows(rows, header, fmt):
    # rows: list of (key, value) pairs; values already stringified
    if fmt == "csv":
        print(",".join(header))
        for k, v in rows:
            print(f"{k},{v}")
    elif fmt == "json":
        for k, v in rows:
            print(json.dumps({header[0]: k, header[1]: v}))
    else:
        for k, v in rows:
            print(f"{k:>8}  {v}")


def _cmd_seq(args) -> int:
    family = args.family
    if family not in _FAMILIES:
        return _usage_error(
            f"unknown family {family!r}; choose from {', '.join(sorted(_FAMILIES))}"
        )
    required, counter = _FAMILIES[family]
    params = {"m": args.m, "l": args.l, "k": args.k, "t": args.t,
              "convention": args.convention}
    missing = [name for name in required if params[name] is None]
    if missing:
        return _usage_error(
            f"family {family!r} needs --{' --'.join(missing)}"
        )
    if args.frm > args.to:
        return _usage_error("--from must not exceed --to")
    try:
        rows = [(n, str(counter(params, n))) for n in range(args.frm, args.to + 1)]
    except ValueError as exc:
        return _usage_error(str(exc))
    _emit_rows(rows, ("n", "value"), args.format)
    return EXIT_OK


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def _report_lines(report, fmt):
    if fmt == "json":
        return [json.dumps(report.to_json_dict())]
    if fmt == "csv":
        return [
            f"{report.identity},{report.status},{report.points},"
            f"{len(report.counterexamples)},{report.seconds:.3f}"
        ]
    lines = [
        f"{report.identity}: {report.status} "
        f"({report.points} points, {report.seconds:.2f}s)"
        + (f" [{report.reason}]" if report.reason else "")
    ]
    shown = report.counterexamples[:5]
    for ce in shown:
        params = ", ".join(f"{k}={v}" for k, v in ce["params"].items())
        lines.append(f"    counterexample {params}: lhs={ce['lhs']} rhs={ce['rhs']}")
    hidden = len(report.counterexamples) - len(shown)
    if hidden > 0:
        lines.append(f"    ... and {hidden} more")
    return lines


def _cmd_verify(args) -> int:
    known = [ident.id for ident in registry()]
    ids = known if args.ids == ["all"] else args.ids
    unknown = [i for i in ids if i not in known]
    if unknown:
        return _usage_error(f"unknown identity id(s): {', '.join(unknown)}")

    def run(identity_id):
        return verify(
            identity_id,
            to=args.to,
            order=args.order,
            include_nondivisible=args.include_nondivisible,
        )

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = {i: r for i, r in zip(ids, pool.map(run, ids))}
    else:
        reports = {i: run(i) for i in ids}

    if args.format == "csv":
        print("identity,status,points,counterexamples,seconds")
    exit_code = EXIT_OK
    for identity_id in ids:  # registry order is deterministic
        report = reports[identity_id]
        for line in _report_lines(report, args.format):
            print(line)
        if report.status == "refuted":
            exit_code = max(exit_code, EXIT_REFUTED)
        elif report.status == "skipped":
            exit_code = max(exit_code, EXIT_USAGE)
    return exit_code


# ----------------------------------------------------------------------
# series
# ----------------------------------------------------------------------


def _cmd_series(args) -> int:
    order = args.order
    if order is None:
        order = int(os.environ.get(ENV_ORDER, "10"))
    if order < 1:
        return _usage_error("--order must be at least 1")
    try:
        result = eval_text(args.expr, order)
    except (DslSyntaxError, DslEvalError) as exc:
        return _usage_error(str(exc))
    rows = [(e, str(result.coeff(e))) for e in range(result.min_exp, result.trunc_order)]
    _emit_rows(rows, ("exp", "coeff"), args.format)
    return EXIT_OK


# ----------------------------------------------------------------------
# cache
# ----------------------------------------------------------------------


def _cache_path(args) -> str | None:
    return args.cache or os.environ.get(ENV_CACHE)


def load_cache(path: str) -> bool:
    """Load a warm p(n) cache; ignore (with a warning) anything invalid."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        return False
    except (OSError, json.JSONDecodeError) as exc:
        print(f"warning: ignoring unreadable cache {path}: {exc}", file=sys.stderr)
        return False
    if not isinstance(data, dict) or data.get("version") != CACHE_VERSION:
        print(f"warning: ignoring cache {path}: version mismatch", file=sys.stderr)
        return False
    values = data.get("p")
    if not isinstance(values, list) or not all(
        isinstance(v, str) and v.isdigit() for v in values
    ):
        print(f"warning: ignoring corrupted cache {path}", file=sys.stderr)
        return False
    # force the honest prefix into the memo so a poisoned file cannot pass
    en.count_p(min(len(values) - 1, 20) if values else 0)
    try:
        en.preload_p([int(v) for v in values])
    except ValueError as exc:
        print(f"warning: ignoring cache {path}: {exc}", file=sys.stderr)
        return False
    return True


def _cmd_cache(args) -> int:
    path = _cache_path(args)
    if path is None:
        return _usage_error(
            f"cache commands need --cache PATH or ${ENV_CACHE}"
        )
    if args.action == "warm":
        bound = args.to if args.to is not None else 500
        if bound < 0:
            return _usage_error("--to must be non-negative")
        values = [str(en.count_p(n)) for n in range(bound + 1)]
        try:
            parent = os.path.dirname(os.path.abspath(path))
            os.makedirs(parent, exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                json.dump({"version": CACHE_VERSION, "p": values}, fh)
        except OSError as exc:
            print(f"error: cannot write cache: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"cached {len(values)} values at {path}")
        return EXIT_OK
    if args.action == "clear":
        try:
            os.remove(path)
        except FileNotFoundError:
            pass
        except OSError as exc:
            print(f"error: cannot remove cache: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"cleared {path}")
        return EXIT_OK
    # stat
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        entries = len(data.get("p", [])) if isinstance(data, dict) else 0
        version = data.get("version") if isinstance(data, dict) else None
        print(f"{path}: version {version}, {entries} entries")
    except FileNotFoundError:
        print(f"{path}: empty")
    except (OSError, json.JSONDecodeError):
        print(f"{path}: corrupted")
    return EXIT_OK


# ----------------------------------------------------------------------
# entry point
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"),
                        default="table", help="output format")
    common.add_argument("--cache", metavar="PATH", default=None,
                        help=f"p(n) cache file (default ${ENV_CACHE})")
    common.add_argument("--jobs", type=int, default=1,
                        help="concurrent identity evaluations")

    parser = argparse.ArgumentParser(
        prog="qpartitions",
        description="Partition counting, q-series evaluation, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", parents=[common],
                         help="print a counting-function sequence")
    seq.add_argument("family", help=f"one of: {', '.join(sorted(_FAMILIES))}")
    seq.add_argument("--m", type=int, default=None, help="smallest-part multiplicity bound")
    seq.add_argument("--l", type=int, default=None, help="regularity modulus / difference")
    seq.add_argument("--k", type=int, default=None, help="smallest-part value for Q")
    seq.add_argument("--t", type=int, default=None, help="largest-smallest difference")
    seq.add_argument("--convention", choices=("at_least", "exactly"),
                     default="at_least", help="Q smallest-part convention")
    seq.add_argument("--from", dest="frm", type=int, required=True)
    seq.add_argument("--to", dest="to", type=int, required=True)

    ver = sub.add_parser("verify", parents=[common],
                         help="verify registered identities")
    ver.add_argument("ids", nargs="+", help="identity ids, or 'all'")
    ver.add_argument("--to", type=int, default=None, help="override the n range")
    ver.add_argument("--order", type=int, default=None,
                     help="override the series comparison order")
    ver.add_argument("--include-nondivisible", action="store_true",
                     help="drop the divisibility hypothesis of reg_div")

    ser = sub.add_parser("series", parents=[common],
                         help="evaluate a q-series expression")
    ser.add_argument("expr", help="expression, e.g. '1/poch(q;1;inf)'")
    ser.add_argument("--order", type=int, default=None,
                     help=f"truncation order (default ${ENV_ORDER} or 10)")

    cache = sub.add_parser("cache", parents=[common],
                           help="manage the p(n) cache file")
    cache.add_argument("action", choices=("warm", "clear", "stat"))
    cache.add_argument("--to", type=int, default=None,
                       help="warm bound (default 500)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.command != "cache":
        path = _cache_path(args)
        if path:
            load_cache(path)

    if args.command == "seq":
        return _cmd_seq(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "series":
        return _cmd_series(args)
    return _cmd_cache(args)


if __name__ == "__main__":
    sys.exit(main())
