"""Realize a grid of rationals as scl values and re-derive each one from its rotation witness."""

import argparse
from fractions import Fraction

from sclvol.extensions import project_kappa
from sclvol.rotation import verify_witness
from sclvol.scl import element_with_scl


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-den", type=int, default=12)
    ap.add_argument("--max-value", type=int, default=2)
    args = ap.parse_args()

    grid = sorted({Fraction(p, q) for q in range(1, args.max_den + 1)
                   for p in range(0, args.max_value * q + 1)})
    print(f"{'q':>8} {'orbit':>6} {'rot':>8} {'witness':>10}  ok")
    for q in grid:
        cert = element_with_scl(q)
        r = cert.rotation
        ok = verify_witness(project_kappa(cert.element), r) and abs(r.value) / 2 == q
        print(f"{str(q):>8} {r.period:>6} {str(r.value):>8} {str(r.witness):>10}  {ok}")


if __name__ == "__main__":
    main()
