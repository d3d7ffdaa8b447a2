"""Randomized formula-vs-oracle agreement sweep.

Draws random modules and checks hom_dim against hom_oracle on every
in-bounds descriptor.  This is the package's self-test: the structured
coefficient matrices were derived independently of the brute-force
system, so agreement on random inputs certifies both.

Trial modules alternate between two sources.  Even trials use modules
with uniformly random entries; odd trials use direct sums of in-bounds
catalog modules hidden behind a random base change.  The second source
matters: a sign error in a tube case computes the hom dimension of a
*different* tube (lam replaced by -lam), which agrees with the truth on
entrywise-random modules with overwhelming probability and only breaks
on inputs actually containing that tube.  Structured trials therefore
always include one homogeneous summand when the bounds provide lambdas.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .catalog import R, build, declared_dim, enumerate_descriptors
from .exactmat import random_invertible
from .homdim import hom_dim
from .modules import base_change, module_direct_sum, random_module, zero_module
from .oracle import hom_oracle


@dataclass(frozen=True)
class Mismatch:
    trial: int
    descriptor: str
    formula: int
    oracle: int
    module_dim: tuple


def structured_module(field, bounds, rng, max_dim=6):
    """Random direct sum of in-bounds catalog modules, base-changed."""
    budget = [max_dim] * 5
    picks = []

    def fits(desc):
        return all(x <= b for x, b in zip(declared_dim(desc), budget))

    def take(desc):
        picks.append(desc)
        for v, x in enumerate(declared_dim(desc)):
            budget[v] -= x

    if bounds.lambdas and bounds.max_l >= 1:
        lam = rng.choice(bounds.lambdas)
        depth = rng.randint(1, min(bounds.max_l, 2))
        tube = R(depth, lam)
        if fits(tube):
            take(tube)
    cands = enumerate_descriptors(bounds)
    for _ in range(6):
        if len(picks) >= 3:
            break
        desc = rng.choice(cands)
        if fits(desc):
            take(desc)

    m = zero_module(field)
    for desc in picks:
        m = module_direct_sum(m, build(desc, field))
    u = random_invertible(field, m.n0, rng)
    vs = [random_invertible(field, w.cols, rng) for w in m.mats()]
    return base_change(m, u, vs)


def run_sweep(field, bounds, trials, seed, max_dim=6, report=None):
    """List of Mismatch records (empty = all agree) over `trials` modules."""
    rng = random.Random(seed)
    descs = enumerate_descriptors(bounds)
    out = []
    for trial in range(trials):
        if trial % 2:
            M = structured_module(field, bounds, rng, max_dim=max_dim)
        else:
            M = random_module(field, rng, max_dim=max_dim)
        for d in descs:
            a = hom_dim(M, d)
            b = hom_oracle(M, build(d, field))
            if a != b:
                miss = Mismatch(trial, d.label(), a, b, M.dim_vector())
                out.append(miss)
                if report is not None:
                    report(
                        f"mismatch trial={miss.trial} desc={miss.descriptor} "
                        f"formula={miss.formula} oracle={miss.oracle} "
                        f"dim={list(miss.module_dim)}"
                    )
    return out
