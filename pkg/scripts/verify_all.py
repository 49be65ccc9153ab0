#!/usr/bin/env python3
"""Run the full oracle-verification sweeps from the command line.

Equivalent to `posheap verify`; kept as a script so the suites are easy
to run with a custom scale while hacking on the library:

    POSHEAP_VERIFY_SCALE=0.1 python scripts/verify_all.py --max-n 10
"""

import argparse
import sys

from posheap.verify import run_verify


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--alphabet-size", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    ok = run_verify(max_n=args.max_n, alphabet_size=args.alphabet_size, seed=args.seed)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
