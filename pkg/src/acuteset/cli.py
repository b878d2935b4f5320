"""Command-line interface.

Exit codes: 0 success / acute, 1 not acute (or not certified) / search found
nothing, 2 invalid input or flags, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import __version__
from .basecases import CatalogError, SearchConfig, search_acute
from .doubling import construct
from .efgen import ef_generate
from .geometry import DuplicatePointError
from .io import FORMAT_VERSION, FormatError, qstr, read_pointset, write_pointset
from .verifier import DEFAULT_TOLERANCE, min_angle_deg, min_apex_dot, verify_acute

EXIT_OK, EXIT_NOT_ACUTE, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _seed(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="acuteset", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version",
                   version=f"acuteset {__version__} (format {FORMAT_VERSION})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a certified acute set in R^d by doubling")
    c.add_argument("-d", type=_positive_int, required=True)
    c.add_argument("--base", help="catalog id of the starting set")
    c.add_argument("--recheck-exact", action="store_true",
                   help="recompute the exact minimum after every step")
    c.add_argument("--threads", type=_positive_int)
    c.add_argument("-o", "--output", required=True)

    v = sub.add_parser("verify", help="certify or refute acuteness of a point set file")
    v.add_argument("file")
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--float", dest="mode", action="store_const", const="float")
    v.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    v.add_argument("--rationalize", type=_positive_int, metavar="MAX_DENOM",
                   help="read CSV floats as continued-fraction convergents (allows --exact)")
    v.add_argument("--threads", type=_positive_int)

    s = sub.add_parser("search", help="simulated annealing for a certified acute set")
    s.add_argument("-d", type=_positive_int, required=True)
    s.add_argument("-n", type=_positive_int, required=True)
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--iters", type=_positive_int, default=SearchConfig.max_iters)
    s.add_argument("--max-denom", type=_positive_int, default=SearchConfig.max_denominator)
    s.add_argument("--epsilon", type=float, default=SearchConfig.epsilon)
    s.add_argument("-o", "--output", required=True)

    e = sub.add_parser("ef", help="random cube vertices with right-triple deletion")
    e.add_argument("-d", type=int, required=True)
    e.add_argument("--seed", type=_seed, required=True)
    e.add_argument("--samples", type=_positive_int)
    e.add_argument("-o", "--output", required=True)

    st = sub.add_parser("stats", help="print n, dim, exact s and the minimum angle")
    st.add_argument("file")
    st.add_argument("--rationalize", type=_positive_int, metavar="MAX_DENOM")
    st.add_argument("--threads", type=_positive_int)
    return p


def _emit(obj) -> None:
    print(json.dumps(obj, indent=1))


def _cmd_construct(a) -> int:
    X, trace = construct(a.d, base=a.base, recheck_exact=a.recheck_exact, workers=a.threads)
    write_pointset(X, a.output)
    _emit({"n": len(X), "dim": X.dim, "base_id": trace.base_id, "steps": len(trace.steps),
           "s_lower_bound": qstr(trace.final_bound), "output": a.output})
    return EXIT_OK


def _cmd_verify(a) -> int:
    is_csv = a.file.lower().endswith(".csv")
    mode = a.mode or ("float" if is_csv and a.rationalize is None else "exact")
    if is_csv and mode == "exact" and a.rationalize is None:
        raise UsageError("exact verification of CSV input needs --rationalize MAX_DENOM")
    X = read_pointset(a.file, a.rationalize)
    report = verify_acute(X, mode, a.tol, workers=a.threads)
    _emit(report.to_dict())
    return EXIT_OK if report.is_acute else EXIT_NOT_ACUTE


def _cmd_search(a) -> int:
    cfg = SearchConfig(a.d, a.n, seed=a.seed, max_iters=a.iters, max_denominator=a.max_denom,
                       epsilon=a.epsilon)
    entry = search_acute(cfg)
    if entry is None:
        _emit({"found": False, "config": asdict(cfg)})
        return EXIT_NOT_ACUTE
    write_pointset(entry.points, a.output)
    _emit({"found": True, "id": entry.id, "n": len(entry.points), "dim": entry.dim,
           "certificate": entry.certificate.to_dict(), "output": a.output})
    return EXIT_OK


def _cmd_ef(a) -> int:
    if a.d < 2:
        raise UsageError("ef needs -d >= 2")
    run = ef_generate(a.d, a.seed, a.samples)
    write_pointset(run.output, a.output)
    _emit(run.summary())
    return EXIT_OK


def _cmd_stats(a) -> int:
    X = read_pointset(a.file, a.rationalize)
    out = {"n": len(X), "dim": X.dim, "s_min": None, "min_angle_deg": None}
    if len(X) >= 2:
        out["s_min"] = qstr(min_apex_dot(X, a.threads)[0])
    if len(X) >= 3:
        out["min_angle_deg"] = min_angle_deg(X)
    _emit(out)
    return EXIT_OK


COMMANDS = {"construct": _cmd_construct, "verify": _cmd_verify, "search": _cmd_search,
            "ef": _cmd_ef, "stats": _cmd_stats}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (UsageError, FormatError, DuplicatePointError, CatalogError, OSError, ValueError) as exc:
        print(f"acuteset: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:
        print(f"acuteset: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
