"""Square matrices over D_tau and the generators e, x, w, h.

A :class:`GroupMatrix` stores rows of :class:`SkewLaurent` entries and may
carry a witness: the list of :class:`GeneratorApp` whose product it is.

Root conventions: a classical root is an index pair ``(i, j)`` (1-based),
standing for eps_i - eps_j; affine roots are :class:`AffineRoot`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .laurent import SkewLaurent, as_unit, format_poly, poly_inverse, NotAUnit
from .weyl import AffineRoot, WeylElement


class GeneratorError(ValueError):
    pass


class GroupMatrix:
    __slots__ = ("ring", "n", "rows", "witness")

    def __init__(self, ring, rows, witness=None):
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix is not square")
        self.witness = witness

    @classmethod
    def identity(cls, ring, n):
        one, zero = SkewLaurent.one(ring), SkewLaurent.zero(ring)
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)], witness=[])

    @classmethod
    def from_entries(cls, ring, entries):
        """Rows of SkewLaurent values or plain scalars (read as constants)."""
        return cls(ring, [[e if isinstance(e, SkewLaurent) else SkewLaurent.const(ring, ring.coerce(e)) for e in row] for row in entries])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, GroupMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __mul__(self, other):
        a, b = self.rows, other.rows
        n = self.n
        zero = SkewLaurent.zero(self.ring)
        out = []
        for i in range(n):
            row = a[i]
            nz = [(k, row[k]) for k in range(n) if row[k].terms]
            new = []
            for j in range(n):
                acc = zero
                for k, x in nz:
                    y = b[k][j]
                    if y.terms:
                        acc = acc + x * y
                new.append(acc)
            out.append(new)
        wit = None
        if self.witness is not None and other.witness is not None:
            wit = list(self.witness) + list(other.witness)
        return GroupMatrix(self.ring, out, wit)

    def is_identity(self):
        return all(
            (e.is_one() if i == j else e.is_zero())
            for i, row in enumerate(self.rows)
            for j, e in enumerate(row)
        )

    def transpose_entries(self):
        return [[self.rows[j][i] for j in range(self.n)] for i in range(self.n)]

    def to_lists(self):
        return [[format_poly(e) for e in row] for row in self.rows]

    def __str__(self):
        return "; ".join(", ".join(format_poly(e) for e in row) for row in self.rows)

    def __repr__(self):
        return f"GroupMatrix({self.ring}, [{self}])"


def product(ring, n, mats):
    out = GroupMatrix.identity(ring, n)
    for m in mats:
        out = out * m
    return out


# -- generators ---------------------------------------------------------------


def _root(beta):
    i, j = beta[0], beta[1]
    if i == j:
        raise GeneratorError(f"({i},{j}) is not a root")
    return i, j


def elementary(ring, n, beta, f: SkewLaurent) -> GroupMatrix:
    """e_beta(f) = I + f E_ij."""
    i, j = _root(beta)
    if not (1 <= i <= n and 1 <= j <= n):
        raise GeneratorError(f"root ({i},{j}) out of range for n={n}")
    one, zero = SkewLaurent.one(ring), SkewLaurent.zero(ring)
    rows = [[one if a == b else zero for b in range(n)] for a in range(n)]
    rows[i - 1][j - 1] = f
    return GroupMatrix(ring, rows, witness=[GeneratorApp("e", (i, j), f)])


def affine_param(ring, b: AffineRoot, f) -> SkewLaurent:
    """f t^m for positive classical part, t^m f for negative."""
    if b.i < b.j:
        return SkewLaurent(ring, {b.m: f})
    return SkewLaurent(ring, {b.m: ring.tau(f, b.m)})


def w_matrix(ring, n, beta, u: SkewLaurent) -> GroupMatrix:
    """w_beta(u) = e_beta(u) e_-beta(-u^-1) e_beta(u)."""
    i, j = _root(beta)
    uinv = poly_inverse(u)
    one, zero = SkewLaurent.one(ring), SkewLaurent.zero(ring)
    rows = [[one if a == b else zero for b in range(n)] for a in range(n)]
    rows[i - 1][i - 1] = zero
    rows[j - 1][j - 1] = zero
    rows[i - 1][j - 1] = u
    rows[j - 1][i - 1] = -uinv
    return GroupMatrix(ring, rows)


def h_matrix(ring, n, beta, u: SkewLaurent) -> GroupMatrix:
    """h_beta(u) = w_beta(u) w_beta(-1) = diag(u at i, u^-1 at j)."""
    i, j = _root(beta)
    uinv = poly_inverse(u)
    one, zero = SkewLaurent.one(ring), SkewLaurent.zero(ring)
    rows = [[one if a == b else zero for b in range(n)] for a in range(n)]
    rows[i - 1][i - 1] = u
    rows[j - 1][j - 1] = uinv
    return GroupMatrix(ring, rows)


def diagonal(ring, entries) -> GroupMatrix:
    n = len(entries)
    zero = SkewLaurent.zero(ring)
    return GroupMatrix(ring, [[entries[a] if a == b else zero for b in range(n)] for a in range(n)])


@dataclass(frozen=True)
class GeneratorApp:
    """One generator application.

    kind ``e``: root is a classical pair, param a SkewLaurent.
    kinds ``x``, ``w``, ``h``: root is an AffineRoot, param a scalar of D.
    """

    kind: str
    root: tuple
    param: object
    side: str = dc_field(default="left", compare=False)

    def matrix(self, ring, n) -> GroupMatrix:
        if self.kind == "e":
            return elementary(ring, n, self.root, self.param)
        b = AffineRoot(*self.root)
        if self.kind == "x":
            m = elementary(ring, n, (b.i, b.j), affine_param(ring, b, self.param))
        elif self.kind in ("w", "h"):
            if ring.is_zero(self.param):
                raise GeneratorError(f"{self.kind} needs a unit parameter")
            u = affine_param(ring, b, self.param)
            make = w_matrix if self.kind == "w" else h_matrix
            m = make(ring, n, (b.i, b.j), u)
        else:
            raise GeneratorError(f"unknown generator kind {self.kind!r}")
        m.witness = [self]
        return m

    def inverse(self, ring):
        """Inverse as a generator application (x(f)^-1 = x(-f), w(u)^-1 = w(-u))."""
        if self.kind == "e":
            return GeneratorApp("e", self.root, -self.param)
        if self.kind in ("x", "w"):
            return GeneratorApp(self.kind, self.root, ring.neg(self.param))
        # h_(beta,m)(s)^-1 = h_beta(P^-1), P the affine parameter; re-encode at level -m
        b = AffineRoot(*self.root)
        (m, k), = poly_inverse(affine_param(ring, b, self.param)).terms.items()
        c = k if b.i < b.j else ring.tau(k, -m)
        return GeneratorApp("h", (b.i, b.j, m), c)

    def describe(self, ring):
        if self.kind == "e":
            return f"e[{self.root[0]},{self.root[1]}]({format_poly(self.param)})"
        i, j, m = self.root
        return f"{self.kind}[{i},{j};{m}]({ring.format(self.param)})"


def build(ring, n, apps) -> GroupMatrix:
    """Multiply generator applications left to right; witness recorded."""
    if n < 2:
        raise GeneratorError("rank must be at least 2")
    out = GroupMatrix.identity(ring, n)
    rows = [list(r) for r in out.rows]
    for app in apps:
        if app.kind in ("e", "x"):
            # right multiplication by I + f E_ij adds column i * f to column j
            if app.kind == "e":
                i, j = _root(app.root)
                f = app.param
            else:
                b = AffineRoot(*app.root)
                i, j = _root((b.i, b.j))
                f = affine_param(ring, b, app.param)
            if not (1 <= i <= n and 1 <= j <= n):
                raise GeneratorError(f"root ({i},{j}) out of range for n={n}")
            if f.terms:
                for r in rows:
                    if r[i - 1].terms:
                        r[j - 1] = r[j - 1] + r[i - 1] * f
        else:
            rows = [list(r) for r in (GroupMatrix(ring, rows) * app.matrix(ring, n)).rows]
    out = GroupMatrix(ring, rows, witness=list(apps))
    return out


def x_gen(ring, n, b: AffineRoot, f) -> GroupMatrix:
    return GeneratorApp("x", tuple(b), f).matrix(ring, n)


def w_gen(ring, n, b: AffineRoot, u) -> GroupMatrix:
    return GeneratorApp("w", tuple(b), u).matrix(ring, n)


def h_gen(ring, n, b: AffineRoot, u) -> GroupMatrix:
    return GeneratorApp("h", tuple(b), u).matrix(ring, n)


def e_gen(ring, n, beta, f) -> GroupMatrix:
    return elementary(ring, n, beta, f)


def expand_e(ring, app: GeneratorApp):
    """Split e_beta(sum c_m t^m) into x_(beta,m) applications."""
    if app.kind != "e":
        return [app]
    i, j = app.root
    out = []
    for m in sorted(app.param.terms):
        c = app.param.terms[m]
        if i > j:
            c = ring.tau(c, -m)  # t^m c' = c t^m
        out.append(GeneratorApp("x", (i, j, m), c))
    return out


# -- monomial and diagonal matrices ------------------------------------------------


def is_monomial(g: GroupMatrix):
    """Return (perm, units) if g is monomial, else None.  perm[j] = row of column j (1-based)."""
    perm, units = [], []
    for j in range(g.n):
        nz = [i for i in range(g.n) if g.rows[i][j].terms]
        if len(nz) != 1:
            return None
        u = as_unit(g.rows[nz[0]][j])
        if u is None:
            return None
        perm.append(nz[0] + 1)
        units.append(u)
    if sorted(perm) != list(range(1, g.n + 1)):
        return None
    return tuple(perm), units


def monomial_matrix(ring, perm, units) -> GroupMatrix:
    n = len(perm)
    zero = SkewLaurent.zero(ring)
    rows = [[zero] * n for _ in range(n)]
    for j, (r, u) in enumerate(zip(perm, units)):
        rows[r - 1][j] = u.poly() if hasattr(u, "poly") else u
    return GroupMatrix(ring, rows)


def monomial_inverse(g: GroupMatrix) -> GroupMatrix:
    mono = is_monomial(g)
    if mono is None:
        raise NotAUnit("matrix is not monomial")
    perm, units = mono
    n = g.n
    zero = SkewLaurent.zero(g.ring)
    rows = [[zero] * n for _ in range(n)]
    for j, (r, u) in enumerate(zip(perm, units)):
        rows[j][r - 1] = u.inverse().poly()
    return GroupMatrix(g.ring, rows)


def perm_sign(perm) -> int:
    seen, sign = set(), 1
    for start in range(len(perm)):
        if start in seen:
            continue
        k, length = start, 0
        while k not in seen:
            seen.add(k)
            k = perm[k] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def weyl_of_monomial(g: GroupMatrix) -> WeylElement:
    mono = is_monomial(g)
    if mono is None:
        raise NotAUnit("matrix is not monomial")
    perm, units = mono
    return WeylElement(tuple(perm), tuple(u.m for u in units))


def weyl_representative(ring, w: WeylElement) -> GroupMatrix:
    """Monomial matrix t^(trans_j) at (perm(j), j), first column signed so it lies in E."""
    sign = perm_sign(w.perm)
    from .laurent import UnitMonomial

    units = []
    for j, m in enumerate(w.trans):
        s = ring.one if (j or sign == 1) else ring.neg(ring.one)
        units.append(UnitMonomial(ring, s, m))
    return monomial_matrix(ring, w.perm, units)


def deg_vector(h: GroupMatrix):
    """Exponents of the diagonal units of a torus element."""
    out = []
    for i in range(h.n):
        for j in range(h.n):
            if i != j and h.rows[i][j].terms:
                raise ValueError("not a diagonal matrix")
        u = as_unit(h.rows[i][i])
        if u is None:
            raise NotAUnit(f"diagonal entry {i + 1} is not a unit")
        out.append(u.m)
    return tuple(out)
