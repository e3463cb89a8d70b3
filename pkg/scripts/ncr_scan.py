#!/usr/bin/env python3
"""Scan the noncommutative-resolution witness: invert the Hom Hilbert matrix
of the candidate summand modules and report polynomiality of the inverse."""

import argparse
import sys
import time

from frobsum.ncr import hom_hilbert_matrix, invert_truncated_matrix, \
    polynomiality_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmin", type=int, default=5)
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--trunc", type=int, default=80)
    ap.add_argument("--guard", type=int, default=None)
    args = ap.parse_args()

    all_ok = True
    for n in range(args.nmin, args.nmax + 1):
        t0 = time.monotonic()
        H = hom_hilbert_matrix(n, args.trunc)
        Hinv = invert_truncated_matrix(H)
        rep = polynomiality_report(H, Hinv, guard=args.guard)
        all_ok = all_ok and rep.ok
        print(f"n={n}: matrix {len(H.labels)}x{len(H.labels)}, "
              f"polynomial={rep.polynomial}, max degree={rep.max_degree}, "
              f"product={rep.product_detail}, integral={not rep.non_integral} "
              f"({time.monotonic() - t0:.1f}s)")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
