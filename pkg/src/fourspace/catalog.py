"""Constructors for the indecomposable modules of the four subspace algebra.

The indecomposables fall into four families: postprojectives P(n, j),
preinjectives I(n, j) (j the vertex, 0 the center), regular homogeneous
modules R(l, lam) with lam outside {0, 1}, and regular exceptional modules
R(s, m, lam) with s in {0, 1} and lam in {0, 1, inf}.  Every constructor
assembles its quadruple from identity / zero / exchange / Jordan /
projection blocks; subspace-vertex members (j = 1..4) of the P/I families
are slot rotations of the j = 1 member.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import (
    anti_identity,
    identity,
    jordan,
    pi_drop_first,
    pi_drop_last,
    vstack,
    zeros,
)
from .modules import PERM_CYCLE, PERM_IDENTITY, LambdaModule, perm_compose


class InvalidParams(ValueError):
    """Descriptor parameters violate a family invariant."""


class _Infinity:
    """Label for the lam = inf exceptional tube; never enters a matrix."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()

FAMILY_POSTPROJECTIVE = "P"
FAMILY_PREINJECTIVE = "I"
FAMILY_REGULAR_HOMOGENEOUS = "RH"
FAMILY_REGULAR_EXCEPTIONAL = "RE"


@dataclass(frozen=True)
class IndecDescriptor:
    """Symbolic name of a catalog module: family tag plus parameters.

    params is (n, j) for P/I, (l, lam) for RH, (s, m, lam) for RE.  lam is
    stored canonically (Fraction over the rationals, residue over GF(p),
    or the INF label), so descriptors hash and compare by value.
    """

    family: str
    params: tuple

    def label(self):
        if self.family in (FAMILY_POSTPROJECTIVE, FAMILY_PREINJECTIVE):
            n, j = self.params
            return f"{self.family}({n},{j})"
        if self.family == FAMILY_REGULAR_HOMOGENEOUS:
            l, lam = self.params
            return f"R({l},{lam})"
        s, m, lam = self.params
        return f"R({s},{m},{lam})"

    def __repr__(self):
        return self.label()


def P(n, j):
    if n < 0 or j not in (0, 1, 2, 3, 4):
        raise InvalidParams(f"P({n},{j}): need n >= 0 and vertex j in 0..4")
    return IndecDescriptor(FAMILY_POSTPROJECTIVE, (n, j))


def I(n, j):
    if n < 0 or j not in (0, 1, 2, 3, 4):
        raise InvalidParams(f"I({n},{j}): need n >= 0 and vertex j in 0..4")
    return IndecDescriptor(FAMILY_PREINJECTIVE, (n, j))


def R(*params):
    """R(l, lam) homogeneous, or R(s, m, lam) exceptional with lam in {0,1,inf}."""
    if len(params) == 2:
        l, lam = params
        if l < 1:
            raise InvalidParams(f"R({l},{lam}): need l >= 1")
        if lam is INF:
            raise InvalidParams(
                "R(l,inf) is exceptional: use R(s,m,inf) with s in {0,1}"
            )
        if lam == 0 or lam == 1:
            raise InvalidParams(
                f"R({l},{lam}): lam in {{0,1}} lives in the exceptional family; "
                f"use R(s,{2 * l},{lam}) with s in {{0,1}}"
            )
        return IndecDescriptor(FAMILY_REGULAR_HOMOGENEOUS, (l, lam))
    if len(params) == 3:
        s, m, lam = params
        if s not in (0, 1) or m < 1:
            raise InvalidParams(f"R({s},{m},{lam}): need s in {{0,1}} and m >= 1")
        if not (lam is INF or lam == 0 or lam == 1):
            raise InvalidParams(f"R({s},{m},{lam}): exceptional lam must be 0, 1 or inf")
        lam = INF if lam is INF else int(lam)
        return IndecDescriptor(FAMILY_REGULAR_EXCEPTIONAL, (s, m, lam))
    raise InvalidParams(f"R takes 2 or 3 parameters, got {len(params)}")


def parse_descriptor(text, field):
    """Parse "P(n,j)", "I(n,j)", "R(l,lam)" or "R(s,m,lam)"; lam in the field."""
    s = "".join(text.split())
    if len(s) < 4 or s[1] != "(" or s[-1] != ")":
        raise InvalidParams(f"malformed descriptor: {text!r}")
    name, args = s[0], s[2:-1].split(",")
    try:
        if name == "P" and len(args) == 2:
            return P(int(args[0]), int(args[1]))
        if name == "I" and len(args) == 2:
            return I(int(args[0]), int(args[1]))
        if name == "R" and len(args) == 2:
            return R(int(args[0]), field.coerce(field.parse(args[1])))
        if name == "R" and len(args) == 3:
            lam = INF if args[2] == "inf" else int(args[2])
            return R(int(args[0]), int(args[1]), lam)
    except InvalidParams:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParams(f"malformed descriptor {text!r}: {exc}") from None
    raise InvalidParams(f"malformed descriptor: {text!r}")


# -- construction -----------------------------------------------------------


def _rotate_slots(slots, k):
    # one step sends (A, B, C, D) to (D, A, B, C): slot i moves to slot i+1
    k %= 4
    return tuple(slots[(j - k) % 4] for j in range(4))


def _p0_slots(field, n):
    i_n, ai = identity(field, n), anti_identity(field, n)
    return (
        vstack([i_n, zeros(field, n + 1, n)]),
        vstack([zeros(field, n + 1, n), i_n]),
        vstack([zeros(field, 1, n), i_n, ai]),
        vstack([i_n, ai, zeros(field, 1, n)]),
    )


def _p_odd_slots(field, n):
    i1 = identity(field, n + 1)
    return (
        vstack([zeros(field, 1, n), identity(field, n), identity(field, n), zeros(field, 1, n)]),
        vstack([i1, zeros(field, n + 1, n + 1)]),
        vstack([zeros(field, n + 1, n + 1), i1]),
        vstack([i1, i1]),
    )


def _p_even_slots(field, n):
    i_n = identity(field, n)
    return (
        vstack([identity(field, n + 1), zeros(field, n, n + 1)]),
        vstack([zeros(field, n + 1, n), i_n]),
        vstack([zeros(field, 1, n), i_n, i_n]),
        vstack([i_n, zeros(field, 1, n), i_n]),
    )


def _i0_slots(field, n):
    i1 = identity(field, n + 1)
    ai = anti_identity(field, n + 1)
    return (
        vstack([zeros(field, n, n + 1), i1]),
        vstack([i1, zeros(field, n, n + 1)]),
        vstack([ai, pi_drop_last(field, n)]),
        vstack([pi_drop_first(field, n), ai]),
    )


def _i_odd_slots(field, n):
    i1 = identity(field, n + 1)
    return (
        vstack([zeros(field, n + 1, n), identity(field, n)]),
        vstack([i1, zeros(field, n, n + 1)]),
        vstack([i1, pi_drop_first(field, n)]),
        vstack([i1, pi_drop_last(field, n)]),
    )


def _i_even_slots(field, n):
    i_n = identity(field, n)
    return (
        vstack([pi_drop_last(field, n), pi_drop_first(field, n)]),
        vstack([zeros(field, n, n), i_n]),
        vstack([i_n, zeros(field, n, n)]),
        vstack([i_n, i_n]),
    )


def _r_even_blocks(field, l, lam):
    i_l = identity(field, l)
    return (
        vstack([i_l, zeros(field, l, l)]),          # E1 = [I; 0]
        vstack([zeros(field, l, l), i_l]),          # E2 = [0; I]
        vstack([i_l, i_l]),                         # E3 = [I; I]
        vstack([jordan(field, l, lam), i_l]),       # E4 = [J(lam); I]
    )


def _r_odd_blocks(field, l):
    i_s = identity(field, l - 1)
    return (
        vstack([i_s, zeros(field, 1, l - 1), i_s]),        # T1
        vstack([pi_drop_last(field, l - 1), identity(field, l)]),  # T2
        vstack([i_s, zeros(field, l, l - 1)]),             # T3
        vstack([zeros(field, l - 1, l), identity(field, l)]),  # T4
    )


# slot arrangement per (s, lam) row; shared by the even and odd tables
_EXCEPTIONAL_ARRANGEMENT = {
    (0, 0): (0, 1, 2, 3),
    (1, 0): (1, 0, 3, 2),
    (0, 1): (1, 3, 0, 2),
    (1, 1): (0, 2, 1, 3),
    (0, "inf"): (1, 0, 2, 3),
    (1, "inf"): (0, 1, 3, 2),
}

# permutation sigma with build(R(s,m,lam)) == permute_vertices(build(R(0,m,0)), sigma);
# identical for the even and odd rows of each (s, lam)
_EXCEPTIONAL_SIGMA = {
    (0, 0): PERM_IDENTITY,
    (1, 0): (2, 1, 4, 3),
    (0, 1): (3, 1, 4, 2),
    (1, 1): (1, 3, 2, 4),
    (0, "inf"): (2, 1, 3, 4),
    (1, "inf"): (1, 2, 4, 3),
}


def _lam_key(lam):
    return "inf" if lam is INF else int(lam)


def build(desc, field):
    """Assemble the catalog module for desc over the given field."""
    fam, params = desc.family, desc.params
    if fam == FAMILY_POSTPROJECTIVE:
        n, j = params
        if j == 0:
            return LambdaModule(*_p0_slots(field, n))
        half, odd = divmod(n, 2)
        slots = _p_odd_slots(field, half) if odd else _p_even_slots(field, half)
        return LambdaModule(*_rotate_slots(slots, j - 1))
    if fam == FAMILY_PREINJECTIVE:
        n, j = params
        if j == 0:
            return LambdaModule(*_i0_slots(field, n))
        half, odd = divmod(n, 2)
        slots = _i_odd_slots(field, half) if odd else _i_even_slots(field, half)
        return LambdaModule(*_rotate_slots(slots, j - 1))
    if fam == FAMILY_REGULAR_HOMOGENEOUS:
        l, lam = params
        lam = field.coerce(lam)
        if lam == field.zero or lam == field.one:
            raise InvalidParams(
                f"R({l},{lam}): lam reduces to {lam} in {field}; "
                f"use the exceptional row R(s,{2 * l},{lam})"
            )
        e1, e2, e3, e4 = _r_even_blocks(field, l, lam)
        return LambdaModule(e1, e2, e3, e4)
    if fam == FAMILY_REGULAR_EXCEPTIONAL:
        s, m, lam = params
        if m % 2 == 0:
            blocks = _r_even_blocks(field, m // 2, field.zero)
        else:
            blocks = _r_odd_blocks(field, (m + 1) // 2)
        arrangement = _EXCEPTIONAL_ARRANGEMENT[(s, _lam_key(lam))]
        return LambdaModule(*(blocks[k] for k in arrangement))
    raise InvalidParams(f"unknown family {fam!r}")


def canonical_form(desc):
    """(representative descriptor, sigma) with build(desc) = permute(build(rep), sigma)."""
    fam, params = desc.family, desc.params
    if fam in (FAMILY_POSTPROJECTIVE, FAMILY_PREINJECTIVE):
        n, j = params
        if j == 0:
            return desc, PERM_IDENTITY
        sigma = PERM_IDENTITY
        for _ in range(j - 1):
            sigma = perm_compose(PERM_CYCLE, sigma)
        rep = P(n, 1) if fam == FAMILY_POSTPROJECTIVE else I(n, 1)
        return rep, sigma
    if fam == FAMILY_REGULAR_HOMOGENEOUS:
        return desc, PERM_IDENTITY
    s, m, lam = params
    return R(0, m, 0), _EXCEPTIONAL_SIGMA[(s, _lam_key(lam))]


# -- declared dimension vectors ----------------------------------------------
#
# Transcribed row by row from the catalog table (not recomputed from the
# constructors), so tests comparing build().dim_vector() against these
# formulas exercise an independent source.


def declared_dim(desc):
    fam, params = desc.family, desc.params
    if fam == FAMILY_POSTPROJECTIVE:
        m, j = params
        if j == 0:
            return (2 * m + 1, m, m, m, m)
        n = m // 2
        if m % 2:
            base = {
                1: (2 * n + 2, n, n + 1, n + 1, n + 1),
                2: (2 * n + 2, n + 1, n, n + 1, n + 1),
                3: (2 * n + 2, n + 1, n + 1, n, n + 1),
                4: (2 * n + 2, n + 1, n + 1, n + 1, n),
            }
        else:
            base = {
                1: (2 * n + 1, n + 1, n, n, n),
                2: (2 * n + 1, n, n + 1, n, n),
                3: (2 * n + 1, n, n, n + 1, n),
                4: (2 * n + 1, n, n, n, n + 1),
            }
        return base[j]
    if fam == FAMILY_PREINJECTIVE:
        m, j = params
        if j == 0:
            return (2 * m + 1, m + 1, m + 1, m + 1, m + 1)
        n = m // 2
        if m % 2:
            base = {
                1: (2 * n + 1, n, n + 1, n + 1, n + 1),
                2: (2 * n + 1, n + 1, n, n + 1, n + 1),
                3: (2 * n + 1, n + 1, n + 1, n, n + 1),
                4: (2 * n + 1, n + 1, n + 1, n + 1, n),
            }
        else:
            base = {
                1: (2 * n, n + 1, n, n, n),
                2: (2 * n, n, n + 1, n, n),
                3: (2 * n, n, n, n + 1, n),
                4: (2 * n, n, n, n, n + 1),
            }
        return base[j]
    if fam == FAMILY_REGULAR_HOMOGENEOUS:
        l, _ = params
        return (2 * l, l, l, l, l)
    s, m, lam = params
    if m % 2 == 0:
        l = m // 2
        return (2 * l, l, l, l, l)
    l = (m + 1) // 2
    base = {
        (0, 0): (2 * l - 1, l - 1, l, l - 1, l),
        (1, 0): (2 * l - 1, l, l - 1, l, l - 1),
        (0, 1): (2 * l - 1, l, l, l - 1, l - 1),
        (1, 1): (2 * l - 1, l - 1, l - 1, l, l),
        (0, "inf"): (2 * l - 1, l, l - 1, l - 1, l),
        (1, "inf"): (2 * l - 1, l - 1, l, l, l - 1),
    }
    return base[(s, _lam_key(lam))]


# -- enumeration --------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationBounds:
    """Finite truncation of the infinite families.

    max_n bounds the printed first parameter of P(n, j) / I(n, j); max_l
    bounds the tube depth l, so exceptional rows R(s, 2l-1, lam) and
    R(s, 2l, lam) appear for l <= max_l; lambdas supplies the homogeneous
    parameters (values reducing to 0 or 1 are skipped — those points live
    in the exceptional rows).
    """

    max_n: int
    max_l: int
    lambdas: tuple = ()


def enumerate_descriptors(bounds):
    """All in-bounds descriptors, duplicate-free, in the decomposition order:
    postprojectives by n ascending, regulars by l ascending, preinjectives
    by n descending.
    """
    out = []
    for n in range(bounds.max_n + 1):
        for j in range(5):
            out.append(P(n, j))
    seen_lams = []
    for lam in bounds.lambdas:
        if lam == 0 or lam == 1 or lam in seen_lams:
            continue
        seen_lams.append(lam)
    for l in range(1, bounds.max_l + 1):
        for lam in seen_lams:
            out.append(R(l, lam))
        for m in (2 * l - 1, 2 * l):
            for lam in (0, 1, INF):
                for s in (0, 1):
                    out.append(R(s, m, lam))
    for n in range(bounds.max_n, -1, -1):
        for j in range(5):
            out.append(I(n, j))
    return out
