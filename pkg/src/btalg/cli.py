"""Command line front end.

Subcommands: dim, verify, annihilator, ptl, etl, basis, multiply, matrix.
Exit codes: 0 success / all match, 1 verification failure, 2 invalid config.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import annihilator as ann
from . import checks
from . import setpartitions as sp
from . import tableaux as tab
from .algebra import element_from_json, element_to_json, SpecializedRing
from .cellular import cell_basis
from .laurent import PrimeField, QQ
from .serialize import basis_record_to_json

COMBINATORIAL_LIMIT = 5
MATRIX_LIMIT = 4


def _parse_alpha(text, n):
    try:
        alpha = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(2)
    if sum(alpha) != n or list(alpha) != sorted(alpha, reverse=True) or min(alpha) < 1:
        print(f"error: alpha must be a partition of {n}", file=sys.stderr)
        raise SystemExit(2)
    return alpha


def _points(args):
    if not args.primes:
        return ann.default_points()
    rng = random.Random(args.seed)
    pts = [(QQ, Fraction(2))]
    for p in args.primes:
        field = PrimeField(p)
        pts.append((field, rng.randrange(2, p)))
    return pts


def _guard(value, limit, args, what):
    if value > limit and not args.force:
        print(f"error: {what} limited to {limit} (use --force to override)",
              file=sys.stderr)
        raise SystemExit(2)


def _emit(payload, args):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        _print_table(payload)


def _print_table(payload):
    if isinstance(payload, dict):
        for k in sorted(payload):
            print(f"{k}: {payload[k]}")
    elif isinstance(payload, list):
        for row in payload:
            print(row)
    else:
        print(payload)


def cmd_dim(args):
    n = args.n
    _guard(n, COMBINATORIAL_LIMIT, args, "n")
    per_alpha = {}
    for alpha in tab.partitions_of(n):
        block = len(sp.set_partitions_of_type(n, alpha)) * _factorial(n)
        per_alpha[",".join(map(str, alpha))] = block
    total = sum(per_alpha.values())
    payload = {"n": n, "dim": total, "blocks": per_alpha}
    _emit(payload, args)
    return 0


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def cmd_verify(args):
    n = args.n
    _guard(n, MATRIX_LIMIT, args, "n")
    results = checks.run_all(n, args.N, args.r)
    payload = {"n": n, "results": {name: ok for name, ok, _ in results}}
    failed = [name for name, ok, _ in results if not ok]
    if failed:
        payload["failed"] = failed
    _emit(payload, args)
    return 1 if failed else 0


def cmd_annihilator(args):
    n = args.n
    N = args.N if args.N is not None else 2
    _guard(n, MATRIX_LIMIT, args, "n")
    alphas = [_parse_alpha(args.alpha, n)] if args.alpha else tab.partitions_of(n)
    points = _points(args)
    reports = []
    for alpha in alphas:
        if args.method == "predicted":
            reports.append({
                "n": n, "N": N, "alpha": list(alpha),
                "predicted": ann.predicted_annihilator_dim(n, N, alpha),
            })
        elif args.method == "bruteforce":
            dims = ann.bruteforce_annihilator_dims(n, N, alpha, points)
            reports.append({
                "n": n, "N": N, "alpha": list(alpha),
                "bruteforce": min(dims), "per_point": dims,
            })
        else:
            reports.append(ann.verify_predicted_basis(n, N, alpha, points).to_json())
    payload = {"reports": reports}
    _emit(payload, args)
    if args.method == "verify" and not all(r["match"] for r in reports):
        return 1
    return 0


def cmd_ptl(args):
    n = args.n
    _guard(n, COMBINATORIAL_LIMIT, args, "n")
    _emit({"n": n, "dim": ann.ptl_dim(n)}, args)
    return 0


def cmd_etl(args):
    n = args.n
    N = args.N if args.N is not None else 2
    _guard(n, COMBINATORIAL_LIMIT, args, "n")
    _emit({"n": n, "N": N, "dim": ann.etl_dim(n, N)}, args)
    return 0


def cmd_basis(args):
    n = args.n
    _guard(n, MATRIX_LIMIT, args, "n")
    if not args.alpha:
        print("error: basis requires --alpha", file=sys.stderr)
        return 2
    alpha = _parse_alpha(args.alpha, n)
    flavor = args.flavor
    records = [basis_record_to_json(shape, s_tab, t_tab, el)
               for shape, s_tab, t_tab, el in cell_basis(n, alpha, flavor)]
    _emit({"n": n, "alpha": list(alpha), "flavor": flavor, "basis": records}, args)
    return 0


def cmd_multiply(args):
    data = sys.stdin.read().strip().splitlines()
    if len(data) < 2:
        print("error: multiply reads two JSON elements on stdin", file=sys.stderr)
        return 2
    a = element_from_json(json.loads(data[0]))
    b = element_from_json(json.loads(data[1]))
    if a.n != b.n:
        print("error: size mismatch", file=sys.stderr)
        return 2
    print(json.dumps(element_to_json(a.times(b)), sort_keys=True))
    return 0


def cmd_matrix(args):
    """Dump the action matrix of the type-alpha ideal basis on the tensor
    space as JSON-lines (row, col, coeff) triples."""
    n = args.n
    _guard(n, MATRIX_LIMIT, args, "n")
    if not args.alpha:
        print("error: matrix requires --alpha", file=sys.stderr)
        return 2
    alpha = _parse_alpha(args.alpha, n)
    N = args.N if args.N is not None else len(alpha)
    points = _points(args)
    field, q0 = points[0]
    ring = SpecializedRing(field, q0)
    rows = ann._action_rows(n, N, alpha, ring)
    for (a, w), row in rows:
        for (key_in, key_out), c in sorted(row.items()):
            rec = {
                "row": {"partition": sp.to_json(a), "word": list(w)},
                "col": {"in": [list(key_in[0]), list(key_in[1])],
                        "out": [list(key_out[0]), list(key_out[1])]},
                "coeff": field.scalar_repr(c),
            }
            print(json.dumps(rec, sort_keys=True))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--force", action="store_true", help="override scale guards")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--primes", type=lambda s: [int(x) for x in s.split(",")],
                        default=None)

    p = argparse.ArgumentParser(prog="btalg")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn in [("dim", cmd_dim), ("verify", cmd_verify),
                     ("annihilator", cmd_annihilator), ("ptl", cmd_ptl),
                     ("etl", cmd_etl), ("basis", cmd_basis),
                     ("matrix", cmd_matrix)]:
        sp_ = sub.add_parser(name, parents=[common])
        sp_.add_argument("n", type=int)
        sp_.add_argument("--N", type=int, default=None)
        sp_.add_argument("--r", type=int, default=None)
        sp_.add_argument("--alpha", type=str, default=None)
        sp_.set_defaults(fn=fn)

    sub.choices["annihilator"].add_argument(
        "--method", choices=["verify", "predicted", "bruteforce"], default="verify")
    sub.choices["basis"].add_argument("--flavor", choices=["m", "n"], default="m")

    mult = sub.add_parser("multiply", parents=[common])
    mult.set_defaults(fn=cmd_multiply)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        print("error: n must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
