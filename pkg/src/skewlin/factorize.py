"""Factorizations of elements of E(n, D_tau) through the Weyl cells.

U+ is the group generated by x_b(f) for positive affine roots b.  As a
matrix set it sits inside the degree pattern

    diagonal in 1 + D[t]t,   above the diagonal D[t],   below D[t]t,

and B+ = U+ T_0 relaxes the diagonal to D^x + D[t]t.  The minus versions are
images under the mirror (i -> n+1-i, t -> t^-1).

Bruhat (+).  Right U+ column operations are applied until the lowest term
of each column sits in a distinct row.  The lowest term of a column is the
one with least exponent; among those the one furthest down.  Two columns
j, j' with lowest terms c t^m and c' t^m' in the same row are compared by
the affine root (eps_j - eps_j', m' - m): whichever of it and its negative
is positive says which column may be added to the other, and the addition
strictly raises the lowest term of the column being reduced.  When the rows
are distinct, the pivots form a monomial matrix n, and g' n^-1 lands in the
U+ pattern, which a Euclidean pass factors into generators.

Birkhoff (+) is identical except that columns are compared through their
highest terms (greatest exponent, then uppermost row), which leaves g' n^-1
in the U- pattern.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .elim import (
    NotInvertible,
    Work,
    invert_apps,
    membership_pattern_check,
    mirror_app,
    monomialize,
    mirror_matrix,
)
from .k1 import k1_of_monomial
from .laurent import SkewLaurent, UnitMonomial, poly_ldivmod, truncate
from .matrix import (
    GeneratorApp,
    GroupMatrix,
    build,
    diagonal,
    expand_e,
    is_monomial,
    monomial_inverse,
    monomial_matrix,
    weyl_representative,
)
from .weyl import AffineRoot, WeylElement, is_positive, reduced_word, simple_roots

PIVOT_RULES = ("first", "last")
MAX_STEPS = 100000


class NotElementary(ValueError):
    """The matrix has a nontrivial K1 class, so it is not in E(n, D_tau)."""


class FactorizationError(RuntimeError):
    pass


# -- column reduction ---------------------------------------------------------------


def _pivot(col, high):
    best = None
    for r, f in enumerate(col):
        if not f.terms:
            continue
        if high:
            m = f.high()
            key = (m, -r)
            if best is None or key > best[0]:
                best = (key, r, m, f.terms[m])
        else:
            m = f.low()
            key = (m, -r)
            if best is None or key < best[0]:
                best = (key, r, m, f.terms[m])
    if best is None:
        raise NotInvertible("zero column")
    return best[1:]


def reduce_columns(g: GroupMatrix, high=False, rule="first"):
    """Right U+ column operations until the column pivots occupy distinct rows.

    Returns ``(work, ops, pivots)``; ``ops`` are e-applications whose product
    C satisfies work = g C, and ``pivots[j] = (row, exponent, coeff)``.
    """
    if rule not in PIVOT_RULES:
        raise ValueError(f"pivot rule must be one of {PIVOT_RULES}")
    W = Work(g)
    F, n = W.ring, W.n
    ops = []
    cols = [[W.m[r][j] for r in range(n)] for j in range(n)]
    piv = [_pivot(c, high) for c in cols]
    for _ in range(MAX_STEPS):
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if piv[a][0] == piv[b][0]]
        if not pairs:
            return W, ops, piv
        a, b = pairs[0] if rule == "first" else pairs[-1]
        _, ma, ca = piv[a]
        _, mb, cb = piv[b]
        if is_positive(AffineRoot(a + 1, b + 1, mb - ma)):
            src, dst = a, b
        else:
            src, dst = b, a
        _, ms, cs = piv[src]
        _, md, cd = piv[dst]
        k = md - ms
        # (cs t^ms)(d t^k) = -cd t^md
        d = F.tau(F.neg(F.div(cd, cs)), -ms)
        f = SkewLaurent(F, {k: d})
        W.col_op(src, dst, f)
        ops.append(GeneratorApp("e", (src + 1, dst + 1), f))
        piv[dst] = _pivot([W.m[r][dst] for r in range(n)], high)
    raise FactorizationError("column reduction did not terminate")


# -- factoring U+ pattern matrices -------------------------------------------------------


def factor_unipotent_plus(L: GroupMatrix):
    """Write a U+ pattern matrix as a product of U+ elementary applications.

    Row k is cleared by Euclid with right column operations (the pivot is the
    entry of least top degree; columns left of the pivot only take quotient
    terms of positive degree, so every operation stays in U+).  Column k is
    then cleared by left row operations with parameters in D[t]t.
    """
    if not membership_pattern_check(L, "U+"):
        raise FactorizationError("matrix does not have the U+ degree pattern")
    W = Work(L)
    F, n = W.ring, W.n
    one = SkewLaurent.one(F)
    left, right = [], []  # prod(left) * L * prod(right) = I
    for k in range(n):
        row = W.m[k]
        for _ in range(MAX_STEPS):
            nz = [j for j in range(k, n) if row[j].terms]
            if len(nz) <= 1:
                break
            p = min(nz, key=lambda j: (row[j].high(), j))
            progressed = False
            for j in nz:
                if j == p:
                    continue
                q, _ = poly_ldivmod(row[j], row[p])
                if j < p:
                    q = truncate(q, lo=1)
                if q.terms:
                    W.col_op(p, j, -q)
                    right.append(GeneratorApp("e", (p + 1, j + 1), -q))
                    progressed = True
            if not progressed:
                raise FactorizationError(f"Euclid stalled on row {k + 1}")
        else:  # pragma: no cover
            raise FactorizationError("Euclid did not terminate")
        if row[k] != one or any(row[j].terms for j in range(k + 1, n)):
            raise FactorizationError(f"row {k + 1} did not reduce to a unit vector")
        for i in range(k + 1, n):
            c = W.m[i][k]
            if c.terms:
                if not c.is_polynomial(strict=True):
                    raise FactorizationError("entry below the diagonal is not in D[t]t")
                W.row_op(i, k, -c)
                left.insert(0, GeneratorApp("e", (i + 1, k + 1), -c))
    # L = prod(left)^-1 * prod(right)^-1
    return invert_apps(F, left) + invert_apps(F, right)


def factor_unipotent_minus(L: GroupMatrix):
    n = L.n
    apps = factor_unipotent_plus(mirror_matrix(L))
    return [mirror_app(a, n) for a in apps]


# -- results ---------------------------------------------------------------------------


@dataclass
class Factorization:
    mode: str
    sign: str
    ring: object
    n: int
    left: list
    weyl: GroupMatrix
    torus: GroupMatrix
    right: list
    cell: WeylElement
    extra: dict = field(default_factory=dict)

    def left_matrix(self):
        return build(self.ring, self.n, self.left)

    def right_matrix(self):
        return build(self.ring, self.n, self.right)

    def recompose(self) -> GroupMatrix:
        return self.left_matrix() * self.weyl * self.torus * self.right_matrix()

    def sides(self):
        """Expected (left, right) unipotent sides."""
        if self.mode == "bruhat":
            return (f"U{self.sign}", f"U{self.sign}")
        other = "-" if self.sign == "+" else "+"
        return (f"U{other}", f"U{self.sign}")

    def patterns_ok(self) -> bool:
        ls, rs = self.sides()
        if not (_apps_on_side(self.left, ls[1]) and _apps_on_side(self.right, rs[1])):
            return False
        return membership_pattern_check(self.left_matrix(), ls) and membership_pattern_check(
            self.right_matrix(), rs
        )


def _apps_on_side(apps, sign):
    for a in apps:
        pos = is_positive(AffineRoot(*a.root))
        if pos != (sign == "+"):
            return False
    return True


def _split_middle(ring, mono: GroupMatrix):
    """mono = weyl * torus with weyl a signed t-power permutation matrix in E
    and torus = diag(D^x).  Raises NotElementary for a nontrivial K1 class."""
    perm, units = is_monomial(mono)
    cls = k1_of_monomial(ring, perm, units)
    if not cls.is_trivial():
        raise NotElementary(f"K1 class (degree {cls.degree}, unit {ring.format(cls.unit)}) is nontrivial")
    cell = WeylElement(tuple(perm), tuple(u.m for u in units))
    weyl = weyl_representative(ring, cell)
    torus = monomial_inverse(weyl) * mono
    return cell, weyl, torus


def _expand(ring, apps):
    out = []
    for a in apps:
        out.extend(expand_e(ring, a))
    return out


def _plus(g: GroupMatrix, high: bool, rule: str):
    """Core (+) routine: g = L * mono * C^-1 with C from the column reduction."""
    F, n = g.ring, g.n
    try:
        W, ops, piv = reduce_columns(g, high=high, rule=rule)
        units = [UnitMonomial(F, c, m) for (_, m, c) in piv]
        mono = monomial_matrix(F, [r + 1 for (r, _, _) in piv], units)
        L = W.freeze() * monomial_inverse(mono)
        left = factor_unipotent_minus(L) if high else factor_unipotent_plus(L)
    except (FactorizationError, ValueError):
        monomialize(g)  # raises NotInvertible for singular input
        raise
    cell, weyl, torus = _split_middle(F, mono)
    return _expand(F, left), weyl, torus, _expand(F, invert_apps(F, ops)), cell


def _mirror_factorization(fac_m: Factorization, g: GroupMatrix, mode, sign):
    n = g.n
    F = g.ring

    def back(apps):
        return _expand(F, [mirror_app(_as_e(a, fac_m.ring), n) for a in apps])

    mono = mirror_matrix(fac_m.weyl * fac_m.torus)
    cell, weyl, torus = _split_middle(F, mono)
    return Factorization(mode, sign, F, n, back(fac_m.left), weyl, torus, back(fac_m.right), cell)


def _as_e(app: GeneratorApp, ring) -> GeneratorApp:
    b = AffineRoot(*app.root)
    f = SkewLaurent(ring, {b.m: app.param if b.i < b.j else ring.tau(app.param, b.m)})
    return GeneratorApp("e", (b.i, b.j), f)


def _check_sign(sign):
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")


def bruhat_factorize(g: GroupMatrix, sign="+", rule="first") -> Factorization:
    """g = u1 * weyl * torus * u2 with u1, u2 in U^sign."""
    _check_sign(sign)
    if sign == "-":
        return _mirror_factorization(bruhat_factorize(mirror_matrix(g), "+", rule), g, "bruhat", "-")
    left, weyl, torus, right, cell = _plus(g, high=False, rule=rule)
    return Factorization("bruhat", "+", g.ring, g.n, left, weyl, torus, right, cell)


def birkhoff_factorize(g: GroupMatrix, sign="+", rule="first") -> Factorization:
    """g = u1 * weyl * torus * u2 with u1 in U^(-sign), u2 in U^sign."""
    _check_sign(sign)
    if sign == "-":
        return _mirror_factorization(birkhoff_factorize(mirror_matrix(g), "+", rule), g, "birkhoff", "-")
    left, weyl, torus, right, cell = _plus(g, high=True, rule=rule)
    return Factorization("birkhoff", "+", g.ring, g.n, left, weyl, torus, right, cell)


def bruhat_cell(g: GroupMatrix, rule="first", high=False) -> WeylElement:
    """Cell of g from the column reduction alone (no unipotent factoring)."""
    F = g.ring
    _, _, piv = reduce_columns(g, high=high, rule=rule)
    perm = [r + 1 for (r, _, _) in piv]
    units = [UnitMonomial(F, c, m) for (_, m, c) in piv]
    cls = k1_of_monomial(F, perm, units)
    if not cls.is_trivial():
        raise NotElementary("matrix has a nontrivial K1 class")
    return WeylElement(tuple(perm), tuple(u.m for u in units))


def weyl_cell(g: GroupMatrix, rule="first") -> WeylElement:
    """The w with g in B+ w B+."""
    return bruhat_cell(g, rule=rule)


# -- Gauss -----------------------------------------------------------------------------------


@dataclass
class GaussFactorization:
    sign: str
    ring: object
    n: int
    x: list  # applications in U^sign
    b_opp: GroupMatrix  # in B^(-sign)
    b_same: list  # applications in U^sign (a subset of B^sign)
    cell: WeylElement

    def x_matrix(self):
        return build(self.ring, self.n, self.x)

    def b_same_matrix(self):
        return build(self.ring, self.n, self.b_same)

    def recompose(self):
        return self.x_matrix() * self.b_opp * self.b_same_matrix()

    def patterns_ok(self):
        s = self.sign
        o = "-" if s == "+" else "+"
        return (
            _apps_on_side(self.x, s)
            and _apps_on_side(self.b_same, s)
            and membership_pattern_check(self.x_matrix(), f"U{s}")
            and membership_pattern_check(self.b_opp, f"B{o}")
            and membership_pattern_check(self.b_same_matrix(), f"B{s}")
        )


def opposite_word(ring, n, w: WeylElement):
    """y = prod x_{-a_k}(1) over the reduced word of w; y lies in U- and B+ w B+."""
    roots = simple_roots(n)
    return [GeneratorApp("x", tuple(-roots[k]), ring.one) for k in reduced_word(w)]


def gauss_factorize(g: GroupMatrix, sign="+", rule="first") -> GaussFactorization:
    """g = x * b_opp * b_same with x in U^sign, b_opp in B^(-sign), b_same in U^sign."""
    _check_sign(sign)
    F, n = g.ring, g.n
    if sign == "-":
        gm = gauss_factorize(mirror_matrix(g), "+", rule)
        Fm = gm.ring

        def back(apps):
            return _expand(F, [mirror_app(_as_e(a, Fm), n) for a in apps])

        cell = bruhat_factorize(g, "-", rule).cell
        return GaussFactorization("-", F, n, back(gm.x), mirror_matrix(gm.b_opp), back(gm.b_same), cell)
    fac = bruhat_factorize(g, "+", rule)
    y_apps = opposite_word(F, n, fac.cell)
    y = build(F, n, y_apps)
    fy = bruhat_factorize(y, "+", rule)
    if fy.cell != fac.cell:
        raise FactorizationError(f"opposite word landed in cell {fy.cell}, expected {fac.cell}")
    # n = n' tau0 with the same weyl representative
    tau0 = monomial_inverse(fy.torus) * fac.torus
    x_apps = fac.left + invert_apps(F, fy.left)
    z = build(F, n, invert_apps(F, fy.right)) * tau0 * build(F, n, fac.right)
    consts = [SkewLaurent(F, {0: z.rows[i][i].coeff(0)}) for i in range(n)]
    tprime = diagonal(F, consts)
    u = monomial_inverse(tprime) * z
    b_same = _expand(F, factor_unipotent_plus(u))
    b_opp = y * tprime
    b_opp.witness = None
    return GaussFactorization("+", F, n, x_apps, b_opp, b_same, fac.cell)


MODES = ("bruhat", "birkhoff", "gauss", "monomial")
