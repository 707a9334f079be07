"""Command line front end: ``verify``, ``moment`` and ``enumerate``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import core
from .arrangement import component_sign
from .affweyl import aw_enumerate
from .groupoid import LineBundleClass
from .moment import moment_image, paraboloid_residual
from .rootsys import root_system
from .verify import RNG_ALGORITHM, run_all

MAX_SEED = 2 ** 64 - 1


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _seed(text):
    n = int(text)
    if not 0 <= n <= MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return n


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="afflag", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, maxlen):
        p.add_argument("--group", required=True, help="family and rank, e.g. A2, B3, G2")
        p.add_argument("--maxlen", type=_nonneg, default=maxlen)

    def output(p):
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    v = sub.add_parser("verify", help="run the identity-checking suites")
    common(v, 6)
    v.add_argument("--trials", type=_positive, default=200)
    v.add_argument("--seed", type=_seed, default=0)

    m = sub.add_parser("moment", help="export moment map images of fixed points")
    common(m, 4)
    m.add_argument("--chi", type=_int_list, help="fundamental-weight coordinates, e.g. 1,0")
    m.add_argument("--kappa", type=int, default=1)
    output(m)

    e = sub.add_parser("enumerate", help="list affine Weyl group elements by length")
    common(e, 4)
    output(e)
    return parser


def _vec(v):
    return " ".join(str(x) for x in v)


def _mat(m):
    return ";".join(_vec(row) for row in m)


def _emit(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def moment_records(rs, L, maxlen):
    """One dict per fixed point, exact values as strings."""
    recs = []
    for a, n in aw_enumerate(rs, maxlen):
        m = moment_image(a, L)
        res = core.rat_str(paraboloid_residual(rs, m, L)) if L.kappa != 0 else None
        recs.append({
            "length": n,
            "lambda": [int(x) for x in a.lam],
            "w": [[int(x) for x in row] for row in a.w],
            "m0": core.rat_str(m.m0),
            "m1": [core.rat_str(x) for x in m.m1],
            "residual": res,
        })
    return recs


def cmd_verify(args, rs) -> int:
    print(f"afflag verify group={rs.name} maxlen={args.maxlen} trials={args.trials} "
          f"seed={args.seed} rng={RNG_ALGORITHM}")
    results = run_all(rs, args.maxlen, args.trials, args.seed)
    for r in results:
        print(r.line())
    failed = [r.name for r in results if r.status == "FAIL"]
    print("FAIL: " + ", ".join(failed) if failed else "all suites passed")
    return 1 if failed else 0


def cmd_moment(args, rs) -> int:
    chi = args.chi if args.chi is not None else core.zeros(rs.rank)
    L = LineBundleClass(tuple(int(x) for x in chi), args.kappa)
    recs = moment_records(rs, L, args.maxlen)
    if args.format == "json":
        text = to_json({"group": rs.name, "chi": list(L.chi), "kappa": L.kappa, "points": recs})
    else:
        header = ["length", "lambda", "w", "m0", "m1", "residual"]
        rows = [[r["length"], _vec(r["lambda"]), _mat(r["w"]), r["m0"], _vec(r["m1"]),
                 "" if r["residual"] is None else r["residual"]] for r in recs]
        text = to_csv(header, rows)
    _emit(text, args.out)
    return 0


def cmd_enumerate(args, rs) -> int:
    recs = [{"length": n, "lambda": [int(x) for x in a.lam],
             "w": [[int(x) for x in row] for row in a.w], "sign": component_sign(a)}
            for a, n in aw_enumerate(rs, args.maxlen)]
    if args.format == "json":
        text = to_json({"group": rs.name, "elements": recs})
    else:
        text = to_csv(["length", "lambda", "w", "sign"],
                      [[r["length"], _vec(r["lambda"]), _mat(r["w"]), r["sign"]] for r in recs])
    _emit(text, args.out)
    return 0


COMMANDS = {"verify": cmd_verify, "moment": cmd_moment, "enumerate": cmd_enumerate}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rs = root_system(args.group)
    except ValueError as exc:
        parser.error(str(exc))
    if getattr(args, "chi", None) is not None and len(args.chi) != rs.rank:
        parser.error(f"--chi needs {rs.rank} entries for {rs.name}")
    try:
        return COMMANDS[args.command](args, rs)
    except OSError as exc:
        print(f"afflag: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
