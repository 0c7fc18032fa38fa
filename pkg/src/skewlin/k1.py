"""K1 of GL(n, D_tau): classes in D_tau^x / [D_tau^x, D_tau^x].

For commutative D the derived subgroup of D_tau^x is N(D, tau), generated
by tau(x)/x for x in D^x; a unit s t^m maps to the class (m, s mod N).  For
F_q with tau = Frobenius^e, N is the subgroup of (p^e - 1)-th powers, whose
index in the cyclic group F_q^x is gcd(p^e - 1, q - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .elim import Work, monomialize
from .field import Field, NotEnumerable
from .laurent import SkewLaurent, UnitMonomial, as_unit, unit_commutator, unit_inverse
from .matrix import GeneratorApp, GroupMatrix, is_monomial, perm_sign


class PreconditionError(ValueError):
    pass


def n_index(ring: Field):
    """[D^x : N(D, tau)], or None for the rationals (where N is trivial)."""
    if ring.order is None:
        return None
    q = ring.order
    if ring.e == 0:
        return q - 1
    return gcd(ring.p**ring.e - 1, q - 1)


def canonical_unit(ring: Field, s):
    """Coset representative of s modulo N: generator^(dlog s mod index)."""
    if ring.is_zero(s):
        raise ZeroDivisionError("zero is not a unit")
    idx = n_index(ring)
    if idx is None:
        return s
    return ring.gen_power(ring.dlog(s) % idx)


@dataclass(frozen=True)
class K1Class:
    ring: Field
    degree: int
    unit: object  # canonical representative

    @classmethod
    def of_unit(cls, ring, s, m):
        return cls(ring, m, canonical_unit(ring, s))

    def __mul__(self, other):
        return K1Class.of_unit(self.ring, self.ring.mul(self.unit, other.unit), self.degree + other.degree)

    def is_trivial(self):
        return self.degree == 0 and self.unit == self.ring.one

    def group(self):
        return k1_structure(self.ring)["group"]

    def as_dict(self):
        return {"degree": self.degree, "unit_rep": self.ring.format(self.unit), "group": self.group()}


def k1_of_monomial(ring, perm, units) -> K1Class:
    """sign(perm) times the product of the units, read in the abelianization."""
    s = ring.one if perm_sign(perm) == 1 else ring.neg(ring.one)
    m = 0
    for u in units:
        s = ring.mul(s, u.s)
        m += u.m
    return K1Class.of_unit(ring, s, m)


def reduce_to_h1(g: GroupMatrix):
    """Elementary reduction of g to diag(u, 1, ..., 1).

    Returns ``(left_ops, u, right_ops)`` with prod(left) g prod(right) equal to
    diag(u, 1, ..., 1).  After monomialization, w_{j,perm(j)}(1) moves each
    unit onto the diagonal and h_{1j}(d_j) folds d_j into the first slot.
    """
    left, mono, right = monomialize(g)
    ring, n = g.ring, g.n
    W = Work(mono)
    one = SkewLaurent.one(ring)

    def apply_left(app):
        nonlocal left
        W.m = [list(r) for r in (app.matrix(ring, n) * W.freeze()).rows]
        left = [app] + left

    for j in range(n):
        r = next(i for i in range(n) if W.m[i][j].terms)
        if r != j:
            # w_(j, r)(1): row j <- row r, row r <- -row j
            apply_left(GeneratorApp("w", (j + 1, r + 1, 0), ring.one))
    for j in range(n - 1, 0, -1):
        d = W.m[j][j]
        if d != one:
            u = as_unit(d)
            apply_left(_h1j(ring, j + 1, u))
    u = as_unit(W.m[0][0])
    return left, u, right


def _h1j(ring, j, u: UnitMonomial) -> GeneratorApp:
    """h_(eps_1 - eps_j, m)(s) with affine parameter s t^m = u."""
    return GeneratorApp("h", (1, j, u.m), u.s)


def k1_class(g: GroupMatrix) -> K1Class:
    _, u, _ = reduce_to_h1(g)
    return K1Class.of_unit(g.ring, u.s, u.m)


def k1_structure(ring: Field):
    """D_tau^x abelianized: Z (degree) times D^x / N."""
    idx = n_index(ring)
    if idx is None:
        if ring.kind == "rational":
            return {"free_rank": 1, "torsion": None, "group": "Z x Q^x"}
        raise NotEnumerable("K1 structure needs a finite coefficient field")
    return {"free_rank": 1, "torsion": idx, "group": "Z" if idx == 1 else f"Z x Z/{idx}"}


def k1_structure_oracle(ring: Field, bound: int = 3):
    """Independent check: close the set of all unit commutators
    [s t^m, r t^k] with |m|, |k| <= bound under multiplication and report
    the index of the resulting subgroup of D^x."""
    if ring.order is None:
        raise NotEnumerable("oracle needs a finite coefficient field")
    units = list(ring.units())
    gens = set()
    for s in units:
        for m in range(-bound, bound + 1):
            u = UnitMonomial(ring, s, m)
            for r in units:
                for k in range(-bound, bound + 1):
                    c = unit_commutator(u, UnitMonomial(ring, r, k))
                    assert c.m == 0
                    gens.add(c.s)
    group = {ring.one}
    frontier = [ring.one]
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = ring.mul(a, b)
                if c not in group:
                    group.add(c)
                    nxt.append(c)
        frontier = nxt
    idx = len(units) // len(group)
    return {"free_rank": 1, "torsion": idx, "group": "Z" if idx == 1 else f"Z x Z/{idx}"}


# -- the H_1 commutator decomposition ---------------------------------------------


def h1_commutator_decompose(ring, s_list, l_list):
    """Given units s_a and columns l_a in 2..n whose h_{1,l_a}(s_a) product is
    diag(s_1...s_k, 1, ..., 1), return units v_a with s_1...s_k equal to
    [s_1, v_1] ... [s_k, v_k].

    Precondition: for every column j the ordered product of s_a^-1 over
    I_j = {a : l_a = j} equals 1.
    """
    k = len(s_list)
    if len(l_list) != k:
        raise PreconditionError("s_list and l_list differ in length")
    one = UnitMonomial(ring, ring.one, 0)
    groups = {}
    for a, l in enumerate(l_list):
        if l < 2:
            raise PreconditionError(f"column index {l} must be at least 2")
        groups.setdefault(l, []).append(a)
    for j, idxs in groups.items():
        prod = one
        for a in idxs:
            prod = prod * unit_inverse(s_list[a])
        if not prod.is_one():
            raise PreconditionError(f"product of inverses over column {j} is {prod}, not 1")
    order = [a for j in sorted(groups) for a in groups[j]]
    vs = []
    for a in range(k):
        r = order.index(a)
        v = one
        for b in range(a + 1, k):
            v = v * s_list[b]
        for b in order[:r]:
            v = v * unit_inverse(s_list[b])
        vs.append(v)
        order.pop(r)
    lhs = one
    for s in s_list:
        lhs = lhs * s
    rhs = one
    for s, v in zip(s_list, vs):
        rhs = rhs * unit_commutator(s, v)
    if lhs != rhs:  # pragma: no cover - guarded by tests
        raise AssertionError(f"commutator decomposition failed: {lhs} != {rhs}")
    return vs
