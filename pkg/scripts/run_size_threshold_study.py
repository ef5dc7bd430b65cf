#!/usr/bin/env python3
"""Output size and runtime as a function of the minimum clique size t,
using the size-thresholded enumerator on an extremal complete graph (the
worst case for output volume).

    python3 scripts/run_size_threshold_study.py --n 16 --alpha 0.5
"""

import argparse
import sys
import time

from umc.algorithms import large_mule
from umc.oracle import build_extremal_graph


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=16, help="even vertex count")
    parser.add_argument("--alpha", type=float, default=0.5)
    parser.add_argument("--max-t", type=int, default=None)
    args = parser.parse_args()

    g = build_extremal_graph(args.n, args.alpha)
    max_t = args.max_t or args.n // 2 + 1
    print("t,count,ms")
    for t in range(2, max_t + 1):
        count = 0

        def sink(c):
            nonlocal count
            count += 1

        start = time.perf_counter()
        large_mule(g, args.alpha, t, sink)
        ms = (time.perf_counter() - start) * 1000.0
        print(f"{t},{count},{ms:.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
