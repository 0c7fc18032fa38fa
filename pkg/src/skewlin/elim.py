"""Elimination primitives: elementary row/column operations, the mirror
involution, degree-pattern membership tests and monomialization.

Operations are recorded as ``GeneratorApp("e", (a, b), f)``.  A left
operation e_ab(f) adds f times row b to row a; a right operation adds
column a times f to column b.
"""

from __future__ import annotations

from .field import inverse_twist
from .laurent import SkewLaurent, as_unit, divide
from .matrix import GeneratorApp, GroupMatrix, build


class NotInvertible(ArithmeticError):
    pass


class Work:
    """A mutable copy of a matrix for in-place elimination."""

    def __init__(self, g: GroupMatrix):
        self.ring = g.ring
        self.n = g.n
        self.m = [list(r) for r in g.rows]

    def freeze(self) -> GroupMatrix:
        return GroupMatrix(self.ring, self.m)

    def row_op(self, a, b, f):
        """row a += f * row b (0-based)."""
        ra, rb = self.m[a], self.m[b]
        for c in range(self.n):
            if rb[c].terms:
                ra[c] = ra[c] + f * rb[c]

    def col_op(self, a, b, f):
        """col b += col a * f (0-based)."""
        for r in self.m:
            if r[a].terms:
                r[b] = r[b] + r[a] * f


def apps_matrix(ring, n, apps) -> GroupMatrix:
    return build(ring, n, apps)


def invert_apps(ring, apps):
    return [a.inverse(ring) for a in reversed(apps)]


# -- mirror: i -> n+1-i together with t -> t^-1 (target ring carries tau^-1) ----


def mirror_poly(f: SkewLaurent, ring=None) -> SkewLaurent:
    ring = ring or inverse_twist(f.ring)
    return SkewLaurent(ring, {-m: c for m, c in f.terms.items()})


def mirror_matrix(g: GroupMatrix) -> GroupMatrix:
    ring = inverse_twist(g.ring)
    n = g.n
    rows = [[mirror_poly(g.rows[n - 1 - i][n - 1 - j], ring) for j in range(n)] for i in range(n)]
    return GroupMatrix(ring, rows)


def mirror_app(app: GeneratorApp, n) -> GeneratorApp:
    if app.kind != "e":
        raise ValueError("only e-applications are mirrored")
    a, b = app.root
    return GeneratorApp("e", (n + 1 - a, n + 1 - b), mirror_poly(app.param))


# -- degree patterns -------------------------------------------------------------------


def _pattern_plus(g: GroupMatrix, unipotent: bool) -> bool:
    one = SkewLaurent.one(g.ring)
    for i, row in enumerate(g.rows):
        for j, f in enumerate(row):
            if not f.terms:
                continue
            if i == j:
                if unipotent:
                    if not (f - one).is_polynomial(strict=True):
                        return False
                elif not (f.is_polynomial() and f.coeff(0) != 0):
                    return False
            elif i < j:
                if not f.is_polynomial():
                    return False
            elif not f.is_polynomial(strict=True):
                return False
        if not g.rows[i][i].terms:
            return False
    return True


def membership_pattern_check(g: GroupMatrix, side: str) -> bool:
    """Necessary degree-pattern condition for U+, U-, B+ or B-.

    U+: diagonal in 1 + D[t]t, above the diagonal D[t], below D[t]t.
    B+: as U+ but the diagonal only needs a nonzero constant term.
    The minus sides are the images of the plus sides under the mirror.
    Passing is necessary but not sufficient for membership.
    """
    if side not in ("U+", "U-", "B+", "B-"):
        raise ValueError(f"unknown side {side!r}")
    if side.endswith("-"):
        g = mirror_matrix(g)
    return _pattern_plus(g, side.startswith("U"))


# -- monomialization ----------------------------------------------------------------------


def monomialize(g: GroupMatrix):
    """Unrestricted Euclidean elimination to a monomial matrix.

    Returns ``(left_ops, mono, right_ops)`` with
    ``prod(left_ops) * g * prod(right_ops) == mono`` (products in list order).
    The pivot is an active entry of least span (ties: lowest column, then
    lowest row, then lowest low-exponent); remainders have strictly smaller
    span, which bounds the number of rounds.
    """
    W = Work(g)
    n, ring = W.n, W.ring
    left, right = [], []
    rows, cols = set(range(n)), set(range(n))
    while rows:
        best = None
        for j in sorted(cols):
            for i in sorted(rows):
                f = W.m[i][j]
                if f.terms:
                    key = (f.span(), j, i, f.low())
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            raise NotInvertible("matrix is not invertible (zero block after elimination)")
        _, p, j = best
        piv = W.m[p][j]
        clean = True
        for i in sorted(rows):
            if i != p and W.m[i][j].terms:
                q, r = divide("right", W.m[i][j], piv)
                if q.terms:
                    W.row_op(i, p, -q)
                    left.insert(0, GeneratorApp("e", (i + 1, p + 1), -q))
                if r.terms:
                    clean = False
        for c in sorted(cols):
            if c != j and W.m[p][c].terms:
                q, r = divide("left", W.m[p][c], piv)
                if q.terms:
                    W.col_op(j, c, -q)
                    right.append(GeneratorApp("e", (j + 1, c + 1), -q))
                if r.terms:
                    clean = False
        if clean:
            if as_unit(piv) is None:
                raise NotInvertible(f"pivot {piv} is not a unit")
            rows.discard(p)
            cols.discard(j)
    return left, W.freeze(), right
