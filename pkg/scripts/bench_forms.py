#!/usr/bin/env python3
"""Compare the evaluation strategies for the same exact quantities.

Times, per size:
  * the Gray-code hypercube walk against the binomial collapse for the
    all-ones power sum, and
  * the binomial form against the composition-sum form of the odd
    spanning-tree count on complete graphs.

Values must agree exactly; a mismatch aborts with a nonzero exit.
"""

import argparse
import sys
import time

from treecount.formulas import (
    odd_spanning_trees_complete,
    odd_spanning_trees_complete_by_sum,
)
from treecount.signsum import binomial_power_sum, hypercube_power_sum


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, (time.perf_counter() - start) * 1e3


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args()

    print(f"{'n':>3} {'hypercube ms':>14} {'collapse ms':>12} {'value':>26}")
    for n in range(4, args.max_n + 1, 2):
        direct, t_direct = timed(lambda: hypercube_power_sum([1] * n, n - 2))
        collapsed, t_collapsed = timed(lambda: binomial_power_sum(n, n - 2))
        if direct != collapsed:
            print(f"mismatch at n={n}: {direct} != {collapsed}", file=sys.stderr)
            return 1
        print(f"{n:>3} {t_direct:>14.2f} {t_collapsed:>12.2f} {direct:>26}")

    print()
    print(f"{'n':>3} {'binomial ms':>14} {'comp-sum ms':>12} {'odd trees':>26}")
    for n in range(4, args.max_n + 1, 2):
        closed, t_closed = timed(lambda: odd_spanning_trees_complete(n))
        summed, t_summed = timed(lambda: odd_spanning_trees_complete_by_sum(n))
        if closed != summed:
            print(f"mismatch at n={n}: {closed} != {summed}", file=sys.stderr)
            return 1
        print(f"{n:>3} {t_closed:>14.2f} {t_summed:>12.2f} {closed:>26}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
