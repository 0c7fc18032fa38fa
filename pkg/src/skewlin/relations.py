"""The relation families (R1)-(R6) among the generators, evaluated as matrices.

Each family is a table keyed by a case label determined by the relative
position of beta = (i, j) and gamma = (k, l):

    orth   disjoint index pairs, (beta, gamma) = 0
    plus   gamma = beta
    minus  gamma = -beta
    ik, il, jk, jl   exactly one shared index, named by the coincidence

For (R2) the rows are ``jk``, ``il`` and ``other``.  Every right-hand side
below agrees with the entrywise expansion of the conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import SkewLaurent, poly_inverse
from .matrix import GroupMatrix, elementary, h_matrix, w_matrix

FAMILIES = ("R1", "R2", "R3", "R4", "R5", "R6")
CONJ_CASES = ("orth", "plus", "minus", "ik", "il", "jk", "jl")
CASES = {
    "R1": ("all",),
    "R2": ("jk", "il", "other"),
    "R3": CONJ_CASES,
    "R4": CONJ_CASES,
    "R5": CONJ_CASES,
    "R6": CONJ_CASES,
}
MIN_RANK = {"all": 2, "other": 2, "plus": 2, "minus": 2, "orth": 4, "ik": 3, "il": 3, "jk": 3, "jl": 3}


class RelationError(ValueError):
    pass


def case_of(beta, gamma) -> str:
    i, j = beta
    k, l = gamma
    if (k, l) == (i, j):
        return "plus"
    if (k, l) == (j, i):
        return "minus"
    if not {i, j} & {k, l}:
        return "orth"
    if i == k:
        return "ik"
    if i == l:
        return "il"
    if j == k:
        return "jk"
    return "jl"


def r2_case(beta, gamma) -> str:
    c = case_of(beta, gamma)
    if c == "minus":
        raise RelationError("(R2) is not stated for gamma = -beta")
    return c if c in ("jk", "il") else "other"


def reflect_root(beta, gamma):
    """sigma_beta(gamma) on index pairs: swap i and j."""
    i, j = beta

    def s(x):
        return j if x == i else i if x == j else x

    return (s(gamma[0]), s(gamma[1]))


def _inv(u):
    return poly_inverse(u)


def _neg_root(beta):
    return (beta[1], beta[0])


def _commutator(a: GroupMatrix, ainv: GroupMatrix, b: GroupMatrix, binv: GroupMatrix):
    return a * b * ainv * binv


# -- right-hand side tables ----------------------------------------------------------
# Each entry maps (u, f) to (root, parameter) of the resulting generator.


def r3_table(case, beta, gamma, u, f):
    ui = _inv(u)
    sg = reflect_root(beta, gamma)
    if case == "orth":
        return gamma, f
    if case == "plus":
        return _neg_root(beta), -(ui * f * ui)
    if case == "minus":
        return beta, -(u * f * u)
    if case == "ik":
        return sg, -(ui * f)
    if case == "il":
        return sg, -(f * u)
    if case == "jk":
        return sg, u * f
    return sg, f * ui  # jl


def r4_table(case, beta, gamma, u, f):
    ui = _inv(u)
    if case == "orth":
        return gamma, f
    if case == "plus":
        return beta, u * f * u
    if case == "minus":
        return _neg_root(beta), ui * f * ui
    if case == "ik":
        return gamma, u * f
    if case == "il":
        return gamma, f * ui
    if case == "jk":
        return gamma, ui * f
    return gamma, f * u  # jl


def r5_table(case, beta, gamma, u, s):
    ui = _inv(u)
    sg = reflect_root(beta, gamma)
    if case == "orth":
        return gamma, s
    if case == "plus":
        return _neg_root(beta), -(ui * s * ui)
    if case == "minus":
        return beta, -(u * s * u)
    if case == "ik":
        return sg, -(ui * s)
    if case == "il":
        return sg, -(s * u)
    if case == "jk":
        return sg, u * s
    return sg, s * ui  # jl


def r6_table(case, beta, gamma, u, s):
    """Returns a list of (root, parameter) h-factors."""
    ui = _inv(u)
    sg = reflect_root(beta, gamma)
    if case == "orth":
        return [(gamma, s)]
    if case == "plus":
        return [(_neg_root(beta), ui * s * ui), (_neg_root(beta), u * u)]
    if case == "minus":
        return [(beta, u * s * u), (beta, ui * ui)]
    if case == "ik":
        return [(sg, ui * s), (sg, u)]
    if case == "il":
        return [(sg, s * u), (sg, ui)]
    if case == "jk":
        return [(sg, u * s), (sg, ui)]
    return [(sg, s * ui), (sg, u)]  # jl


@dataclass
class RelationReport:
    family: str
    case: str
    ok: bool
    lhs: GroupMatrix
    rhs: GroupMatrix

    def discrepancy(self):
        if self.ok:
            return None
        diffs = []
        for a in range(self.lhs.n):
            for b in range(self.lhs.n):
                x, y = self.lhs.rows[a][b], self.rhs.rows[a][b]
                if x != y:
                    diffs.append({"entry": [a + 1, b + 1], "lhs": str(x), "rhs": str(y)})
        return diffs


def sides(family, ring, n, beta, gamma, p, q):
    """Both sides of one relation instance as matrices.

    Parameters by family: R1/R2 take (f, g); R3/R4 take (u, f); R5/R6 take
    (u, s); u and s must be units.
    """
    for r in (beta, gamma):
        if r[0] == r[1] or not all(1 <= x <= n for x in r):
            raise RelationError(f"bad root {r} for n={n}")
    if family == "R1":
        if tuple(beta) != tuple(gamma):
            raise RelationError("(R1) uses a single root")
        lhs = elementary(ring, n, beta, p) * elementary(ring, n, beta, q)
        return "all", lhs, elementary(ring, n, beta, p + q)
    if family == "R2":
        case = r2_case(beta, gamma)
        a, ai = elementary(ring, n, beta, p), elementary(ring, n, beta, -p)
        b, bi = elementary(ring, n, gamma, q), elementary(ring, n, gamma, -q)
        lhs = _commutator(a, ai, b, bi)
        if case == "jk":
            rhs = elementary(ring, n, (beta[0], gamma[1]), p * q)
        elif case == "il":
            rhs = elementary(ring, n, (gamma[0], beta[1]), -(q * p))
        else:
            rhs = GroupMatrix.identity(ring, n)
        return case, lhs, rhs
    if family not in FAMILIES:
        raise RelationError(f"unknown family {family!r}")
    case = case_of(beta, gamma)
    u = p
    if family in ("R3", "R5", "R6"):
        conj, conj_inv = w_matrix(ring, n, beta, u), w_matrix(ring, n, beta, -u)
    else:
        conj, conj_inv = h_matrix(ring, n, beta, u), h_matrix(ring, n, beta, _inv(u))
    if family in ("R3", "R4"):
        mid = elementary(ring, n, gamma, q)
        table = r3_table if family == "R3" else r4_table
        root, par = table(case, beta, gamma, u, q)
        rhs = elementary(ring, n, root, par)
    elif family == "R5":
        mid = w_matrix(ring, n, gamma, q)
        root, par = r5_table(case, beta, gamma, u, q)
        rhs = w_matrix(ring, n, root, par)
    else:
        mid = h_matrix(ring, n, gamma, q)
        rhs = GroupMatrix.identity(ring, n)
        for root, par in r6_table(case, beta, gamma, u, q):
            rhs = rhs * h_matrix(ring, n, root, par)
    return case, conj * mid * conj_inv, rhs


def check_relation(family, ring, n, beta, gamma, p, q) -> RelationReport:
    case, lhs, rhs = sides(family, ring, n, tuple(beta), tuple(gamma), p, q)
    return RelationReport(family, case, lhs == rhs, lhs, rhs)


# -- sampling ------------------------------------------------------------------------------


def random_poly(ring, rng, max_terms=3, lo=-3, hi=3, allow_zero=True):
    count = rng.randint(0 if allow_zero else 1, max_terms)
    terms = {}
    for _ in range(count):
        terms[rng.randint(lo, hi)] = ring.random(rng, nonzero=True)
    f = SkewLaurent(ring, terms)
    if not allow_zero and f.is_zero():
        return SkewLaurent(ring, {rng.randint(lo, hi): ring.random(rng, nonzero=True)})
    return f


def random_unit(ring, rng, lo=-3, hi=3):
    return SkewLaurent(ring, {rng.randint(lo, hi): ring.random(rng, nonzero=True)})


def roots_for_case(family, case, n):
    out = []
    roots = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for b in roots:
        for g in roots:
            if family == "R1":
                if b == g:
                    out.append((b, g))
                continue
            if family == "R2":
                if case_of(b, g) != "minus" and r2_case(b, g) == case:
                    out.append((b, g))
                continue
            if case_of(b, g) == case:
                out.append((b, g))
    return out


def sample_instance(family, case, ring, rng, ranks=(2, 3, 4)):
    """Draw (n, beta, gamma, p, q) for one case row."""
    ok = [n for n in ranks if n >= MIN_RANK[case]]
    if not ok:
        raise RelationError(f"case {case} needs rank >= {MIN_RANK[case]}")
    n = rng.choice(ok)
    beta, gamma = rng.choice(roots_for_case(family, case, n))
    if family in ("R1", "R2"):
        p, q = random_poly(ring, rng), random_poly(ring, rng)
    elif family in ("R3", "R4"):
        p, q = random_unit(ring, rng), random_poly(ring, rng)
    else:
        p, q = random_unit(ring, rng), random_unit(ring, rng)
    return n, beta, gamma, p, q
