#!/usr/bin/env python3
"""Run the full certification suite (series identity, brute-force kernel
oracle, rank sums, duality, range inventories) over a grid of (n, p)."""

import argparse
import sys
import time

from frobsum.hilbert import verify_identities
from frobsum import fpkernel


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="4,5", help="e.g. 4..6 or 4,5")
    ap.add_argument("--p", default="2,3", help="e.g. 2,3,5")
    ap.add_argument("--degree", type=int, default=40)
    ap.add_argument("--oracle", choices=("character", "bruteforce", "both"),
                    default="both")
    ap.add_argument("--budget", type=int, default=fpkernel.DEFAULT_BUDGET)
    args = ap.parse_args()

    def parse(text):
        out = []
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        return sorted(set(out))

    all_ok = True
    for n in parse(args.n):
        for p in parse(args.p):
            t0 = time.monotonic()
            rep = verify_identities(p, n, args.degree, oracle=args.oracle,
                                    budget=args.budget)
            status = "ok" if rep.ok else "FAILED"
            print(f"n={n} p={p} degree={args.degree}: {status} "
                  f"({time.monotonic() - t0:.1f}s)")
            for c in rep.checks:
                print(f"    [{'ok' if c.ok else 'FAIL'}] {c.name}: {c.detail}")
            all_ok = all_ok and rep.ok
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
