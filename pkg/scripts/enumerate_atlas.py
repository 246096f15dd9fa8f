#!/usr/bin/env python3
"""Catalogue of indecomposable symplectic (p, q)-differences up to a bound.

Prints one row per indecomposable representative v with dim(v) <= --dim:
its table number, defining parameters, and the matrix itself (as JSON with
--json).  Every row is re-decided before printing, so the output doubles as
a self-check of the decision procedure on constructed instances.

Examples::

    python scripts/enumerate_atlas.py --field "GF(3)" --p "t^2-t" --q "t^2-t" --dim 4
    python scripts/enumerate_atlas.py --field Q --p "t^2+1" --q "t^2+4" --dim 6 \\
        --inventory "t;t+1;t^2-2"
"""

import argparse
import json
import sys

from sympdiff.atlas import indecomposable_reps
from sympdiff.decide import decide_extension, pair_context
from sympdiff.exprparse import parse_poly
from sympdiff.fields import field_make
from sympdiff.serialize import encode_table_row


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", required=True, help="field spec, e.g. Q or GF(3)")
    ap.add_argument("--p", required=True, help="monic quadratic p")
    ap.add_argument("--q", required=True, help="monic quadratic q")
    ap.add_argument("--dim", type=int, default=4, help="dimension bound on v")
    ap.add_argument("--inventory",
                    help="semicolon-separated monic irreducibles for the regular "
                         "rows (required over infinite fields)")
    ap.add_argument("--json", action="store_true", help="emit JSON lines instead of text")
    args = ap.parse_args()

    ctx = field_make(args.field)
    pctx = pair_context(parse_poly(ctx, args.p), parse_poly(ctx, args.q))
    inventory = None
    if args.inventory is not None:
        inventory = [parse_poly(ctx, part)
                     for part in args.inventory.split(";") if part.strip()]

    rows = indecomposable_reps(pctx, args.dim, irreducibles=inventory)
    print(f"# case {pctx.case.family.value}, {len(rows)} rows with dim <= {args.dim}",
          file=sys.stderr)
    bad = 0
    for row in rows:
        if not decide_extension(row.rep, pctx).ok:
            bad += 1
            print(f"# SELF-CHECK FAILED: {row.params}", file=sys.stderr)
        if args.json:
            print(json.dumps(encode_table_row(row)))
        else:
            params = ", ".join(f"{k}={v}" for k, v in row.params.items())
            print(f"table {row.table}  dim {row.dim:2d}  {params}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
