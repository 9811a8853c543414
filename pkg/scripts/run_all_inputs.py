#!/usr/bin/env python3
"""Run the full pipeline over every presentation under inputs/."""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from ncquadric import parse_file, run_pipeline


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--inputs", default=None,
                    help="directory of .pres files (default: repo inputs/)")
    args = ap.parse_args()

    root = pathlib.Path(__file__).resolve().parents[1]
    directory = pathlib.Path(args.inputs) if args.inputs else root / "inputs"
    worst = 0
    for path in sorted(directory.glob("*.pres")):
        report = run_pipeline(parse_file(str(path)), degree=args.degree,
                              seed=args.seed, input_label=path.name)
        print(report.to_text())
        print("=" * 72)
        worst = max(worst, report.exit_code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
