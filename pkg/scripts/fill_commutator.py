"""LP upper bounds for the filling norm of powers of a word, and the per-n ratios."""

import argparse
import time

from sclvol.filling import fill_power, format_word, parse_word


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--word", default="[a,b]")
    ap.add_argument("--nmax", type=int, default=3)
    ap.add_argument("--radius", type=int, default=1)
    args = ap.parse_args()

    r = parse_word(args.word)
    print(f"r = {format_word(r)}, extra ball radius {args.radius}")
    prev = None
    for n in range(1, args.nmax + 1):
        start = time.perf_counter()
        res = fill_power(r, n, args.radius)
        dt = time.perf_counter() - start
        if not res:
            print(f"n={n}: infeasible on this support ({res.n_pairs} pairs)")
            continue
        step = "" if prev is None else f"  increment {res.value - prev}"
        print(f"n={n}: fill_ub={res.value}  per n={float(res.value / n):.4f}  "
              f"pairs={res.n_pairs}  {dt:.1f}s{step}")
        prev = res.value


if __name__ == "__main__":
    main()
