#!/usr/bin/env python3
"""Run every verification suite for a range of group sizes and time them.

Example:
    python3 scripts/verify_all.py --n-min 3 --n-max 8
"""

import argparse
import sys
import time

from qkring import adams, kring, lens, repring
from qkring.repring import GroupParams


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--psi-max", type=int, default=100,
                        help="highest Adams degree for the oracle comparison")
    args = parser.parse_args()

    failures = 0

    def run(label, fn):
        nonlocal failures
        start = time.monotonic()
        ok = fn()
        elapsed = time.monotonic() - start
        print(f"{'PASS' if ok else 'FAIL'} {label}  ({elapsed:.2f}s)")
        if not ok:
            failures += 1

    run(f"adams oracle, i <= {args.psi_max}",
        lambda: all(adams.psi_series(i) == adams.psi_oracle(i)
                    for i in range(1, args.psi_max + 1)))

    for n in range(args.n_min, args.n_max + 1):
        params = GroupParams(n)
        run(f"n={n} structure constants",
            lambda p=params: repring.verify_structure_constants(p).all_passed)
        run(f"n={n} orthogonality",
            lambda p=params: repring.verify_orthogonality(p).all_passed)
        run(f"n={n} relations in R", lambda m=n: kring.verify_relations_in_R(m).all_passed)
        run(f"n={n} relation 3 redundancy", lambda m=n: kring.verify_relation3_redundant(m))
        run(f"n={n} minimality witnesses", lambda m=n: kring.verify_minimality_witness(m))
        run(f"n={n} local confluence", lambda m=n: kring.verify_local_confluence(m).all_passed)
        run(f"n={n} embedding certificate", lambda m=n: kring.verify_embedding(m).all_passed)
        run(f"n={n} restriction homomorphism", lambda m=n: lens.verify_restriction_hom(m))
        run(f"n={n} relations vanish in lens ring",
            lambda m=n: lens.verify_relations_vanish(m).all_passed)

    print(f"\n{failures} failing suite(s)")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
