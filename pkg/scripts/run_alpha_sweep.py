#!/usr/bin/env python3
"""Runtime-vs-alpha sweep over Barabasi-Albert graphs at desk scale.

Writes one CSV row per (graph, algorithm, alpha) cell; see the README for
the column schema.  Example:

    python3 scripts/run_alpha_sweep.py --out sweep.csv --sizes 1000,2000
"""

import argparse
import sys

from umc.cli import main as umc_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="alpha_sweep.csv")
    parser.add_argument("--sizes", default="1000,2000,5000")
    parser.add_argument("--m", type=int, default=10)
    parser.add_argument("--alphas", default="0.001,0.01,0.1,0.5,0.9")
    parser.add_argument("--algos", default="mule,dfs-noip")
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    cmd = ["bench", "--alphas", args.alphas, "--algos", args.algos,
           "--seed", str(args.seed), "--csv", args.out]
    for n in args.sizes.split(","):
        cmd += ["--gen", f"ba:n={n},m={args.m},seed={args.seed}"]
    rc = umc_main(cmd)
    if rc == 0:
        print(f"wrote {args.out}")
    return rc


if __name__ == "__main__":
    sys.exit(main())
