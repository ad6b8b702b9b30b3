#!/usr/bin/env python3
"""Regenerate every preset figure's CSV data in one go.

Each preset writes one CSV per curve plus a JSON manifest describing the
curves (graph kind, size, node, columns) into --out. Plot with any tool,
e.g. column 1 is always t:

    python3 scripts/reproduce_figures.py --out data
    python3 - <<'PY'
    import csv
    rows = list(csv.DictReader(open("data/fig1-left_complete_5.csv")))
    print(rows[-1])
    PY
"""

import argparse
import sys
import time

from qcwalk.cli import FIGURES, main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="figure_data", help="output directory")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--which",
        default="all",
        choices=("all",) + FIGURES,
        help="single preset or all of them",
    )
    args = parser.parse_args()

    presets = FIGURES if args.which == "all" else (args.which,)
    for which in presets:
        start = time.perf_counter()
        code = cli_main(
            ["figure", which, "--seed", str(args.seed), "--out", args.out]
        )
        if code != 0:
            print(f"{which}: failed with exit code {code}", file=sys.stderr)
            return code
        print(f"{which}: done in {time.perf_counter() - start:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
