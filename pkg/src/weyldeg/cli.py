"""Command-line front end.

Output is JSON lines (one record per line, big integers as decimal strings);
``--pretty`` switches to plain tables. Exit codes: 0 ok, 1 verification
failure, 2 usage error.

The ``pell --brute-max`` scan uses ``WEYLDEG_WORKERS`` processes (default 1).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from .dimension import decimal_string, weyl_dim
from .families import family
from .pell import brute_force_star, star_solutions
from .rootdata import build_datum, coroot_jsonl, positive_coroots
from .search import SearchConfig, find_coincidences
from .verify import BUNDLES, prop2_bundle

WORKERS_ENV = "WEYLDEG_WORKERS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return v


def _coords(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise UsageError(f"bad coordinate list {text!r}; expected e.g. 1,2")
    if any(v < 0 for v in vals):
        raise UsageError("coordinates of a dominant weight must be non-negative")
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weyldeg", description="Degrees of irreducible representations")
    p.add_argument("--pretty", action="store_true", help="human-readable tables")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("dim", help="degree of V(lambda)")
    s.add_argument("type", help="e.g. A2, C159, A1+A1")
    s.add_argument("coords", help="comma-separated coordinates, e.g. 1,2")

    s = sub.add_parser("roots", help="positive coroot table")
    s.add_argument("type")

    s = sub.add_parser("search", help="equal-degree groups up to a bound")
    s.add_argument("type")
    s.add_argument("--max-dim", type=_positive_int, required=True)
    s.add_argument("--raw", action="store_true", help="do not identify automorphism orbits")

    s = sub.add_parser("family", help="closed-form equal-degree pairs")
    s.add_argument("family", choices=["A", "B", "C", "D"])
    s.add_argument("--rank", type=_positive_int, required=True)
    s.add_argument("--count", type=_positive_int, default=1)

    s = sub.add_parser("pell", help="solutions of c^2 - (4l-5) a^2 = (2l-3)^2")
    s.add_argument("--rank", type=_positive_int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", type=_positive_int)
    g.add_argument("--brute-max", type=_positive_int)

    s = sub.add_parser("verify", help="run a reproduction bundle")
    s.add_argument("bundle", choices=sorted(BUNDLES))
    s.add_argument("--extended", action="store_true", help="include the E7/E8 minimality scans")
    return p


def _emit(out: TextIO, line: str) -> None:
    out.write(line + "\n")


def _run(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    pretty = args.pretty
    if args.cmd == "dim":
        datum = build_datum(args.type)
        coords = _coords(args.coords)
        if len(coords) != datum.total_rank:
            raise UsageError(f"{datum} needs {datum.total_rank} coordinates, got {len(coords)}")
        _emit(out, decimal_string(weyl_dim(datum, coords)))
    elif args.cmd == "roots":
        datum = build_datum(args.type)
        for t in datum.types:
            if pretty:
                for b in positive_coroots(t):
                    _emit(out, f"{t}  ht {sum(b):>3}  {' '.join(map(str, b))}")
            else:
                for line in coroot_jsonl(t):
                    _emit(out, line)
    elif args.cmd == "search":
        datum = build_datum(args.type)
        cfg = SearchConfig(args.max_dim, modulo_automorphisms=not args.raw)
        for g in find_coincidences(datum, cfg):
            if pretty:
                ws = "  ".join("(" + ",".join(map(str, w)) + ")" for w in g.weights)
                _emit(out, f"{g.degree:>12}  {ws}")
            else:
                _emit(out, g.to_json())
    elif args.cmd == "family":
        for w in family(args.family, args.rank, args.count):
            if pretty:
                _emit(out, f"{w.type}  lambda={w.lam[:2]}  mu={w.mu[:2]}  degree={decimal_string(w.degree)}")
            else:
                _emit(out, w.to_json())
    elif args.cmd == "pell":
        if args.brute_max is not None:
            workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
            sols = brute_force_star(args.rank, args.brute_max, workers=workers)
        else:
            sols = star_solutions(args.rank, args.count or 1)
        for s in sols:
            if pretty:
                _emit(out, f"l={s.l}  c={s.c}  a={s.a}  b={s.b}")
            else:
                _emit(out, s.to_json())
    elif args.cmd == "verify":
        if args.bundle == "prop2":
            checks = prop2_bundle(extended=args.extended)
        elif args.bundle == "remark159":
            checks = BUNDLES["remark159"](log=lambda msg: err.write(msg + "\n"))
        else:
            checks = BUNDLES[args.bundle]()
        for c in checks:
            if pretty:
                _emit(out, c.line())
            else:
                _emit(out, json.dumps({"check": c.name, "ok": c.ok, "detail": c.detail}, separators=(",", ":")))
        return 0 if all(c.ok for c in checks) else 1
    return 0


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out, err)
    except UsageError as e:
        err.write(f"{e}\n")
        return 2
    except ValueError as e:
        err.write(f"weyldeg: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
