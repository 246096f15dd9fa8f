#!/usr/bin/env python3
"""Exhaustive decide-vs-brute-force sweep over a finite field.

Every (p, q, invariant-factor profile) triple in the requested pair
dimension is decided twice: once by the structural criteria and once by
enumerating all alternating Grams for U1.  Any disagreement is printed in
full; the exit code is 0 only when the two routes agree everywhere.

Examples::

    python scripts/run_oracle_sweep.py --field "GF(2)" --dim 4
    python scripts/run_oracle_sweep.py --field "GF(3)" --dim 4 --p "t^2+1" --jobs 4
    python scripts/run_oracle_sweep.py --field "GF(2)" --dim 6 --out sweep6.json
"""

import argparse
import json
import sys

from sympdiff.cli import _merge_sweeps
from sympdiff.exprparse import parse_poly
from sympdiff.fields import field_make
from sympdiff.oracle import oracle_sweep
from sympdiff.poly import monic_polys
from sympdiff.serialize import encode_sweep_report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", default="GF(2)", help="finite field spec, e.g. GF(3)")
    ap.add_argument("--dim", type=int, default=4, help="pair dimension (even)")
    ap.add_argument("--p", help="restrict to this monic quadratic p")
    ap.add_argument("--q", help="restrict to this monic quadratic q")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes")
    ap.add_argument("--out", help="also write the full JSON report here")
    args = ap.parse_args()

    ctx = field_make(args.field)
    ps = [parse_poly(ctx, args.p)] if args.p else list(monic_polys(ctx, 2))
    qs = [parse_poly(ctx, args.q)] if args.q else None
    if args.jobs > 1 and len(ps) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            parts = list(pool.map(
                oracle_sweep,
                [ctx] * len(ps), [args.dim] * len(ps),
                [[p] for p in ps], [qs] * len(ps),
            ))
        report = _merge_sweeps(parts)
    else:
        report = oracle_sweep(ctx, args.dim, ps=ps, qs=qs)

    print(f"field {report.field}, pair dimension {report.pair_dim}: "
          f"{report.total} instances in {report.seconds:.1f}s")
    for key in ("yes/yes", "no/no", "yes/no", "no/yes"):
        print(f"  decide/brute {key}: {report.matrix[key]}")
    for inst in report.disagreements:
        chain = ", ".join(str(f) for f in inst.chain)
        print(f"  DISAGREEMENT p={inst.p} q={inst.q} chain=[{chain}] "
              f"decide={'yes' if inst.decide_yes else 'no'} "
              f"brute={'yes' if inst.brute_yes else 'no'}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(encode_sweep_report(report), fh, indent=2)
        print(f"report written to {args.out}")
    print("routes agree everywhere" if report.ok else
          f"{len(report.disagreements)} disagreements")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
