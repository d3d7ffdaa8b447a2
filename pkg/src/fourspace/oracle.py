"""Ground-truth Hom computation by brute-force linear algebra.

A homomorphism F: M -> X is a 5-tuple of matrices (F_0, ..., F_4), with
F_v of shape m_v x n_v (m = dim X, n = dim M), satisfying

    F_0 A = A' F_1,   F_0 B = B' F_2,   F_0 C = C' F_3,   F_0 D = D' F_4

where (A, B, C, D) belong to M and the primed matrices to X.  Flattening
every F_v row-major, F_0 block first, turns the four relations into one
linear system; dim Hom(M, X) is its nullity.  This is asymptotically the
slow route (the unknown count is sum of m_v * n_v) and exists as the
independent reference for the structured formulas in homdim.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exactmat import (
    ExactMatrix,
    PrimeField,
    _check_same_field,
    _rank_prime,
    _rank_rational,
)
from .modules import LambdaModule, dim_vector


@dataclass(frozen=True)
class HomSystem:
    """Linearized commutativity relations for a pair (M, X).

    matrix has one row per scalar equation and one column per unknown;
    offsets[v] is the column where the flattened F_v block starts, and
    offsets[5] is the total unknown count.
    """

    matrix: ExactMatrix
    offsets: tuple
    source_dim: tuple
    target_dim: tuple


def _block_layout(M, X):
    n = dim_vector(M)
    m = dim_vector(X)
    offsets = [0]
    for v in range(5):
        offsets.append(offsets[-1] + m[v] * n[v])
    return n, m, tuple(offsets)


def _system_rows(M, X):
    """Rows of the linearized system as lists of canonical field elements."""
    field = M.field
    zero = field.zero
    n, m, offsets = _block_layout(M, X)
    cols = offsets[5]
    src = M.mats()
    tgt = X.mats()
    rows = []
    for t in range(1, 5):
        lm = src[t - 1]      # n_0 x n_t
        lx = tgt[t - 1]      # m_0 x m_t
        for i in range(m[0]):
            for j in range(n[t]):
                row = [zero] * cols
                # (F_0 L_M)[i, j]: coefficient L_M[k, j] on F_0[i, k]
                base0 = offsets[0] + i * n[0]
                for k in range(n[0]):
                    row[base0 + k] = lm[k, j]
                # (L_X F_t)[i, j]: coefficient -L_X[i, k] on F_t[k, j]
                baset = offsets[t]
                for k in range(m[t]):
                    c = lx[i, k]
                    if c != zero:
                        row[baset + k * n[t] + j] = field.neg(c)
                rows.append(row)
    return rows, offsets


def hom_system(M, X):
    """Assemble the full relation system as an ExactMatrix (for inspection)."""
    _check_same_field(M.field, X.field)
    rows, offsets = _system_rows(M, X)
    matrix = ExactMatrix(M.field, rows, shape=(len(rows), offsets[5]))
    return HomSystem(
        matrix=matrix,
        offsets=offsets,
        source_dim=dim_vector(M),
        target_dim=dim_vector(X),
    )


def hom_oracle(M, X):
    """dim Hom(M, X) as the nullity of the assembled system."""
    _check_same_field(M.field, X.field)
    rows, offsets = _system_rows(M, X)
    unknowns = offsets[5]
    if not rows or unknowns == 0:
        return unknowns
    field = M.field
    if isinstance(field, PrimeField):
        a = np.array(rows, dtype=np.int64)
        rank = _rank_prime(a, field.p)
    else:
        rank = _rank_rational([list(r) for r in rows])
    return unknowns - rank


def hom_basis(M, X):
    """Basis of Hom(M, X), each element a 5-tuple (F_0, ..., F_4)."""
    system = hom_system(M, X)
    n = system.source_dim
    m = system.target_dim
    field = M.field
    out = []
    for vec in system.matrix.nullspace():
        mats = []
        for v in range(5):
            lo = system.offsets[v]
            entries = [
                [vec[lo + i * n[v] + j] for j in range(n[v])] for i in range(m[v])
            ]
            mats.append(ExactMatrix(field, entries, shape=(m[v], n[v])))
        out.append(tuple(mats))
    return out


def check_hom(M, X, mats):
    """True iff the 5-tuple mats satisfies all four relations exactly."""
    f0 = mats[0]
    for t in range(1, 5):
        if f0 @ M.mats()[t - 1] != X.mats()[t - 1] @ mats[t]:
            return False
    return True
