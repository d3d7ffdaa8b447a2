"""Structured coefficient matrices for dim Hom(M, X), X indecomposable.

For each catalog family the relation system of oracle.py collapses to a
far smaller system  (y_1 ... y_r) * N = 0  in row variables y_i of width
n_0, where N is an almost block diagonal matrix over the letters
A, B, C, D of M (possibly negated or scaled by -lam).  dim Hom(M, X) is
then the corank of N.  Three special targets skip N entirely:

    [M, P(0,0)] = cor([A B C D]),   [M, I(0,0)] = n_0,   [M, I(0,i)] = n_i.

Every N follows one stacking scheme: a head block pattern in the top-left
corner, `reps` copies of a repeating pattern marching down the diagonal,
and a small overlap block W stitching neighbouring copies together.  The
three schemes differ only in where W sits relative to a copy:

    kind "M1": W left of each copy, in its first rows;
    kind "M2": W above each copy, in the previous copy's last rows;
    kind "M3": as "M2", plus one trailing W capping the last rows in
               fresh columns appended on the right.

Vertex-j targets with j > 1 and the exceptional tube arrangements reduce
to the j = 1 / (s, lam) = (0, 0) representative by permuting the slots of
M (hom(M, permute(X, sigma)) = hom(permute(M, sigma^-1), X)), so only
eight block patterns exist, tabulated in CASE_SPECS.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import (
    FAMILY_POSTPROJECTIVE,
    FAMILY_PREINJECTIVE,
    FAMILY_REGULAR_EXCEPTIONAL,
    FAMILY_REGULAR_HOMOGENEOUS,
    InvalidParams,
    canonical_form,
)
from .exactmat import block_grid, hstack, zeros
from .modules import PERM_IDENTITY, perm_inverse, permute_vertices

# Cell grammar: None is a zero block; (letter, coeff) is coeff * letter with
# coeff 1, -1 or "-lam".  Kept as plain nested lists so tests can patch a
# single cell and watch the oracle cross-check catch it.


def _interleave(pairs, prefix=(), suffix=()):
    out = list(prefix)
    for p in pairs:
        out.extend(p)
    out.extend(suffix)
    return out


CASE_SPECS = {
    # P(n, 0), n >= 1
    "P0": {
        "kind": "M3",
        "head": [
            [("A", 1), None, ("B", 1), None, ("C", 1), ("D", 1)],
            [None, None, None, ("B", 1), None, ("D", -1)],
            [None, ("A", 1), None, None, ("C", -1), None],
        ],
        "rep": [
            [None, ("D", -1), None, ("B", 1)],
            [("C", -1), None, ("A", 1), None],
        ],
        "overlap": [
            [("C", 1), None],
            [None, ("D", 1)],
        ],
        "reps": lambda n: n - 1,
        "var_order": lambda n: _interleave(
            ((n + 1 - k, n + 1 + k) for k in range(1, n + 1)), prefix=(n + 1,)
        ),
    },
    # P(2n+1, 1)
    "P_ODD": {
        "kind": "M3",
        "head": [
            [("A", 1), None, ("C", 1), ("D", 1)],
            [None, ("B", 1), None, ("D", -1)],
        ],
        "rep": [
            [("A", 1), None, ("C", 1), ("D", 1)],
            [None, ("B", 1), None, ("D", -1)],
        ],
        "overlap": [[("A", -1)]],
        "reps": lambda n: n,
        "var_order": lambda n: _interleave(
            ((k, n + 1 + k) for k in range(1, n + 2))
        ),
    },
    # P(2n, 1)
    "P_EVEN": {
        "kind": "M1",
        "head": [[("B", 1), ("C", 1), ("D", 1)]],
        "rep": [
            [("C", 1), ("A", 1), None, None],
            [("C", -1), None, ("B", 1), ("D", 1)],
        ],
        "overlap": [[("D", -1)]],
        "reps": lambda n: n,
        "var_order": lambda n: _interleave(
            ((k, n + 1 + k) for k in range(1, n + 1)), suffix=(n + 1,)
        ),
    },
    # I(n, 0), n >= 1
    "I0": {
        "kind": "M2",
        "head": [
            [("D", 1), ("C", 1), None, None],
            [None, ("C", -1), None, ("B", 1)],
            [("D", -1), None, ("A", 1), None],
        ],
        "rep": [
            [None, ("C", -1), None, ("B", 1)],
            [("D", -1), None, ("A", 1), None],
        ],
        "overlap": [
            [("D", 1), None],
            [None, ("C", 1)],
        ],
        "reps": lambda n: n - 1,
        "var_order": lambda n: _interleave(
            ((n + 1 + k, n + 1 - k) for k in range(1, n + 1)), prefix=(n + 1,)
        ),
    },
    # I(2n+1, 1)
    "I_ODD": {
        "kind": "M2",
        "head": [[("A", 1)]],
        "rep": [
            [("C", 1), ("D", 1), None, ("B", 1)],
            [None, ("D", -1), ("A", 1), None],
        ],
        "overlap": [[("C", -1)]],
        "reps": lambda n: n,
        "var_order": lambda n: _interleave(
            ((n + 1 - k, 2 * n + 1 - k) for k in range(n)), suffix=(1,)
        ),
    },
    # I(2n, 1), n >= 1
    "I_EVEN": {
        "kind": "M2",
        "head": [
            [("B", 1), None, ("D", 1)],
            [None, ("C", 1), ("D", -1)],
        ],
        "rep": [
            [("A", 1), ("B", 1), None, ("D", 1)],
            [None, None, ("C", 1), ("D", -1)],
        ],
        "overlap": [[("A", -1)]],
        "reps": lambda n: n - 1,
        "var_order": lambda n: _interleave(((k, n + k) for k in range(1, n + 1))),
    },
    # R(l, lam); the even exceptional rows reuse it with lam := 0
    "R_EVEN": {
        "kind": "M2",
        "head": [
            [("D", 1), ("C", 1), ("B", 1), None],
            [("D", "-lam"), ("C", -1), None, ("A", 1)],
        ],
        "rep": [
            [("D", 1), ("C", 1), ("B", 1), None],
            [("D", "-lam"), ("C", -1), None, ("A", 1)],
        ],
        "overlap": [[("D", -1)]],
        "reps": lambda l: l - 1,
        "var_order": lambda l: _interleave(
            ((l + 1 - k, 2 * l + 1 - k) for k in range(1, l + 1))
        ),
    },
    # R(0, 2l-1, 0)
    "R_ODD": {
        "kind": "M2",
        "head": [[("A", 1), ("C", 1)]],
        "rep": [
            [("B", 1), ("D", 1), None, ("A", 1)],
            [None, None, ("C", 1), ("A", -1)],
        ],
        "overlap": [[("B", -1)]],
        "reps": lambda l: l - 1,
        "var_order": lambda l: _interleave(
            ((k, l + k) for k in range(1, l)), prefix=(l,)
        ),
    },
}


@dataclass(frozen=True)
class CoeffSpec:
    """Resolved block recipe for one (case, parameter) pair.

    head / rep / overlap hold the symbolic cell patterns, reps the copy
    count, kind the stacking scheme, var_order the y-variable labels of
    the block rows in the order the assembled matrix writes them.
    """

    kind: str
    head: tuple
    rep: tuple
    overlap: tuple
    reps: int
    var_order: tuple

    @property
    def block_rows(self):
        return len(self.head) + self.reps * len(self.rep)

    @property
    def block_cols(self):
        cols = len(self.head[0]) + self.reps * len(self.rep[0])
        if self.kind == "M3":
            cols += len(self.overlap[0])
        return cols


_CLOSED_FORM_LABELS = ("P(0,0)", "I(0,0)", "I(0,1)", "I(0,2)", "I(0,3)", "I(0,4)")


def _is_closed_form(desc):
    if desc.family == FAMILY_POSTPROJECTIVE:
        return desc.params == (0, 0)
    if desc.family == FAMILY_PREINJECTIVE:
        return desc.params[0] == 0
    return False


def _resolve_case(rep_desc):
    """(case key, parameter, lam) for a representative descriptor."""
    fam, params = rep_desc.family, rep_desc.params
    if fam == FAMILY_POSTPROJECTIVE:
        n, j = params
        if j == 0:
            return "P0", n, None
        return ("P_ODD", n // 2, None) if n % 2 else ("P_EVEN", n // 2, None)
    if fam == FAMILY_PREINJECTIVE:
        n, j = params
        if j == 0:
            return "I0", n, None
        return ("I_ODD", n // 2, None) if n % 2 else ("I_EVEN", n // 2, None)
    if fam == FAMILY_REGULAR_HOMOGENEOUS:
        l, lam = params
        return "R_EVEN", l, lam
    s, m, lam = params
    if m % 2 == 0:
        return "R_EVEN", m // 2, 0
    return "R_ODD", (m + 1) // 2, None


def case_spec(desc):
    """Symbolic CoeffSpec for desc's representative case."""
    if _is_closed_form(desc):
        raise InvalidParams(
            f"{desc.label()} has a closed-form dimension; no coefficient matrix"
        )
    rep_desc, _ = canonical_form(desc)
    key, param, _ = _resolve_case(rep_desc)
    raw = CASE_SPECS[key]
    freeze = lambda pat: tuple(tuple(row) for row in pat)
    return CoeffSpec(
        kind=raw["kind"],
        head=freeze(raw["head"]),
        rep=freeze(raw["rep"]),
        overlap=freeze(raw["overlap"]),
        reps=raw["reps"](param),
        var_order=tuple(raw["var_order"](param)),
    )


_LETTER_INDEX = {"A": 0, "B": 1, "C": 2, "D": 3}


def _assemble(module, raw, param, lam):
    """Stack head / rep / overlap patterns into the concrete matrix."""
    field = module.field
    mats = module.mats()
    head, rep, overlap = raw["head"], raw["rep"], raw["overlap"]
    a, b = len(head), len(head[0])
    c, d = len(rep), len(rep[0])
    e = len(overlap)
    reps = raw["reps"](param)
    kind = raw["kind"]
    total_r = a + reps * c
    total_c = b + reps * d + (e if kind == "M3" else 0)

    cells = [[None] * total_c for _ in range(total_r)]

    def place(pattern, r0, c0):
        for i, row in enumerate(pattern):
            for j, cell in enumerate(row):
                if cell is not None:
                    cells[r0 + i][c0 + j] = cell

    place(head, 0, 0)
    for k in range(1, reps + 1):
        r0 = a + (k - 1) * c
        c0 = b + (k - 1) * d
        place(rep, r0, c0)
        if kind == "M1":
            place(overlap, r0, c0 - e)
        else:
            place(overlap, r0 - e, c0)
    if kind == "M3":
        place(overlap, total_r - e, b + reps * d)

    widths = [None] * total_c
    for r in range(total_r):
        for ccol in range(total_c):
            cell = cells[r][ccol]
            if cell is None:
                continue
            w = mats[_LETTER_INDEX[cell[0]]].cols
            if widths[ccol] is None:
                widths[ccol] = w
            elif widths[ccol] != w:
                raise AssertionError(
                    f"inconsistent block widths in column {ccol}"
                )
    n0 = module.n0
    grid = []
    for r in range(total_r):
        grid_row = []
        for ccol in range(total_c):
            cell = cells[r][ccol]
            if cell is None:
                grid_row.append(zeros(field, n0, widths[ccol] or 0))
                continue
            letter, coeff = cell
            base = mats[_LETTER_INDEX[letter]]
            if coeff == 1:
                grid_row.append(base)
            elif coeff == -1:
                grid_row.append(-base)
            else:  # "-lam"
                grid_row.append(base.scale(field.neg(lam)))
        grid.append(grid_row)
    return block_grid(grid)


def coeff_matrix(M, desc):
    """The coefficient matrix N with [M, X_desc] = cor(N).

    Raises InvalidParams for the closed-form targets P(0,0), I(0,0) and
    I(0,i); hom_dim covers those directly.
    """
    if _is_closed_form(desc):
        raise InvalidParams(
            f"{desc.label()} has a closed-form dimension; no coefficient matrix"
        )
    rep_desc, sigma = canonical_form(desc)
    if sigma != PERM_IDENTITY:
        M = permute_vertices(M, perm_inverse(sigma))
    key, param, lam = _resolve_case(rep_desc)
    if lam is not None:
        lam = M.field.coerce(lam)
        if key == "R_EVEN" and rep_desc.family == FAMILY_REGULAR_HOMOGENEOUS:
            if lam == M.field.zero or lam == M.field.one:
                raise InvalidParams(
                    f"{desc.label()}: lam reduces to {lam} in {M.field}"
                )
    return _assemble(M, CASE_SPECS[key], param, lam)


def hom_dim(M, desc):
    """dim Hom(M, X_desc), by closed form or corank of the case matrix."""
    if desc.family == FAMILY_POSTPROJECTIVE and desc.params == (0, 0):
        return hstack(M.mats()).corank()
    if desc.family == FAMILY_PREINJECTIVE and desc.params[0] == 0:
        j = desc.params[1]
        return M.dim_vector()[j]
    return coeff_matrix(M, desc).corank()


def hom_vector(M, descs):
    """Elementwise hom_dim against a descriptor list, order preserved."""
    return [hom_dim(M, d) for d in descs]
