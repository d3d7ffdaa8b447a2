#!/usr/bin/env python3
"""Time the reduced coefficient-matrix route against the linearized-system
oracle as the target module grows.

The oracle solves for all five components of a homomorphism at once, so its
matrix has roughly (dim X)·(dim M) unknowns; the reduced route only ever
eliminates a matrix with n_0(M) rows per block row.  This script prints a
table showing how that gap widens with the target parameter.
"""

import argparse
import random
import time

from fourspace import catalog as cat
from fourspace.exactmat import PrimeField
from fourspace.homdim import hom_dim
from fourspace.modules import dim_vector, random_module
from fourspace.oracle import hom_oracle


def _best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - started)
    return value, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--prime", type=int, default=32003)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-dim", type=int, default=6,
                        help="upper bound for the probe module's dimensions")
    parser.add_argument("--steps", type=int, nargs="*", default=[2, 4, 8, 16, 24],
                        help="target family parameters to benchmark")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    field = PrimeField(args.prime)
    rng = random.Random(args.seed)
    probe = random_module(field, rng, max_dim=args.max_dim)
    print(f"probe module dimensions {dim_vector(probe)} over GF({args.prime})")
    header = f"{'target':>10} {'dim X':>22} {'formula':>11} {'oracle':>11} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    lam = field.coerce(2)
    for step in args.steps:
        for desc in (cat.P(step, 0), cat.I(step, 1), cat.R(step, lam)):
            target = cat.build(desc, field)
            formula_value, formula_s = _best_of(lambda: hom_dim(probe, desc), args.repeat)
            oracle_value, oracle_s = _best_of(lambda: hom_oracle(probe, target), args.repeat)
            if formula_value != oracle_value:
                raise SystemExit(f"route disagreement at {desc.label()}: "
                                 f"{formula_value} != {oracle_value}")
            print(f"{desc.label():>10} {str(dim_vector(target)):>22} "
                  f"{formula_s * 1e3:9.2f}ms {oracle_s * 1e3:9.2f}ms "
                  f"{oracle_s / formula_s:7.1f}x")


if __name__ == "__main__":
    main()
