"""Solve the 150 pattern LPs and tabulate the maximum of |Theta| by pattern shape."""

import argparse
import json
import time
from collections import defaultdict

from sclvol.theta import BOUND, enumerate_patterns, max_theta_lp


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", help="write per-pattern results as JSON")
    args = ap.parse_args()

    start = time.perf_counter()
    results = [max_theta_lp(p) for p in enumerate_patterns()]
    by_shape = defaultdict(set)
    for r in results:
        by_shape[r.pattern.shape].add(r.value)
    print(f"{'shape':<16}{'patterns':>9}  max")
    for shape in sorted(by_shape, key=len, reverse=True):
        n = sum(1 for r in results if r.pattern.shape == shape)
        print(f"{str(shape):<16}{n:>9}  {max(by_shape[shape])}")
    worst = max(r.value for r in results)
    print(f"global max {worst} (bound {BOUND}), all certified: {all(r.certified for r in results)}")
    print(f"{time.perf_counter() - start:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([{"pattern": str(r.pattern), "max": str(r.value)} for r in results], fh, indent=2)


if __name__ == "__main__":
    main()
