#!/usr/bin/env python3
"""Tabulate graded dimensions for one presentation file.

Columns: ambient S, quotient A, quotient dual A^!, Koszul space C_n, and
the syzygy module M.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from ncquadric import (GradedModule, QuadraticPresentation, build_context,
                       koszul_component, parse_file, syzygy_presentation)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file", nargs="?", default=None)
    ap.add_argument("--degree", type=int, default=6)
    args = ap.parse_args()

    root = pathlib.Path(__file__).resolve().parents[1]
    path = args.file or str(root / "inputs" / "quadric3.pres")
    parsed = parse_file(path)
    ambient = QuadraticPresentation(parsed.field, parsed.generators,
                                    [row for _, row in parsed.relation_rows])
    ctx = build_context(ambient, parsed.central_row, bound=args.degree)
    module = GradedModule(ctx.quotient, syzygy_presentation(ctx))
    dual = ctx.quotient_dual

    print(f"graded dimensions for {path} (d = {ctx.d})")
    header = f"{'n':>3} {'S_n':>6} {'A_n':>6} {'A!_n':>6} {'C_n':>6} {'M_n':>6}"
    print(header)
    print("-" * len(header))
    for n in range(args.degree + 1):
        cn = koszul_component(ctx, n).dim if n >= 2 else (
            ctx.ambient.gdim if n == 1 else 1)
        print(f"{n:>3} {ctx.ambient.graded_dim(n):>6} "
              f"{ctx.quotient.graded_dim(n):>6} {dual.graded_dim(n):>6} "
              f"{cn:>6} {module.graded_dim(n):>6}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
