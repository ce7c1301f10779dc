"""Histogram of the rotation-number defect |rot(xy) - rot(x) - rot(y)| over random pairs."""

import argparse
import random
from collections import Counter

from sclvol.rotation import rot
from sclvol.sampling import random_ttilde


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-len", type=int, default=3)
    ap.add_argument("--qmax", type=int, default=256)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    hist = Counter()
    for _ in range(args.pairs):
        x, y = random_ttilde(rng, args.max_len), random_ttilde(rng, args.max_len)
        hist[abs(rot(x * y, args.qmax) - rot(x, args.qmax) - rot(y, args.qmax))] += 1
    for d in sorted(hist):
        print(f"{str(d):>6}  {hist[d]}")
    print(f"max defect {max(hist)} over {args.pairs} pairs")


if __name__ == "__main__":
    main()
