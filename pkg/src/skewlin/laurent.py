"""Skew Laurent polynomials D[t, t^-1] with t a t^-1 = tau(a).

Elements are written with coefficients on the left, f = sum a_m t^m, so a
product of monomials is (a t^k)(b t^l) = a tau^k(b) t^(k+l).
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Field


class RingMismatch(ValueError):
    pass


class NotAUnit(ArithmeticError):
    pass


class SkewLaurent:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Field, terms=None):
        self.ring = ring
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self.terms = {m: c for m, c in terms.items() if c != 0}
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def one(cls, ring):
        return cls(ring, {0: ring.one})

    @classmethod
    def const(cls, ring, a):
        return cls(ring, {0: a})

    @classmethod
    def monomial(cls, ring, a, m=0):
        return cls(ring, {m: a})

    @classmethod
    def t(cls, ring, m=1):
        return cls(ring, {m: ring.one})

    # -- structure ----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get(0) == self.ring.one

    def __eq__(self, other):
        if isinstance(other, SkewLaurent):
            return self.ring is other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        if other == 1:
            return self.is_one()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def low(self):
        return min(self.terms)

    def high(self):
        return max(self.terms)

    def span(self):
        return max(self.terms) - min(self.terms)

    def lead(self):
        """(exponent, coefficient) of the highest term."""
        m = max(self.terms)
        return m, self.terms[m]

    def trail(self):
        m = min(self.terms)
        return m, self.terms[m]

    def coeff(self, m):
        return self.terms.get(m, self.ring.zero)

    def is_polynomial(self, strict=False):
        """True when f lies in D[t] (strict: in D[t] t)."""
        bound = 1 if strict else 0
        return all(m >= bound for m in self.terms)

    def is_copolynomial(self, strict=False):
        """True when f lies in D[t^-1] (strict: in D[t^-1] t^-1)."""
        bound = -1 if strict else 0
        return all(m <= bound for m in self.terms)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, SkewLaurent):
            raise TypeError(f"cannot combine SkewLaurent with {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        add = self.ring.add
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = add(out[m], c) if m in out else c
        return _raw(self.ring, {m: c for m, c in out.items() if c != 0})

    def __neg__(self):
        neg = self.ring.neg
        return SkewLaurent(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        F = self.ring
        if not self.terms or not other.terms:
            return _raw(F, {})
        add, mul, tau = F.add, F.mul, F.tau
        out = {}
        for k, a in self.terms.items():
            for l, b in other.terms.items():
                c = mul(a, tau(b, k) if k else b)
                m = k + l
                out[m] = add(out[m], c) if m in out else c
        if len(out) > 1:
            out = {m: c for m, c in out.items() if c != 0}
        return _raw(F, out)

    def scale_left(self, a):
        """a * f for a scalar a in D."""
        mul = self.ring.mul
        return SkewLaurent(self.ring, {m: mul(a, c) for m, c in self.terms.items()})

    def shift(self, k):
        """f * t^k (no twist needed on the right)."""
        return SkewLaurent(self.ring, {m + k: c for m, c in self.terms.items()})

    def lshift(self, k):
        """t^k * f."""
        tau = self.ring.tau
        return SkewLaurent(self.ring, {m + k: tau(c, k) for m, c in self.terms.items()})

    def degree_span(self):
        return degree_span(self)

    def __repr__(self):
        return f"SkewLaurent({self.ring}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _raw(ring, terms):
    """Construct without filtering; callers guarantee nonzero coefficients."""
    f = object.__new__(SkewLaurent)
    f.ring = ring
    f.terms = terms
    f._hash = None
    return f


def format_poly(f: SkewLaurent) -> str:
    if not f.terms:
        return "0"
    F = f.ring
    out = []
    for m in sorted(f.terms, reverse=True):
        c = F.format(f.terms[m])
        if "+" in c or "-" in c[1:] or "/" in c:
            c = f"({c})"
        if m == 0:
            term = c
        else:
            tpart = "t" if m == 1 else f"t^{m}"
            term = tpart if c == "1" else f"{c}*{tpart}"
        out.append(term)
    s = " + ".join(out)
    return s.replace("+ -", "- ")


@dataclass(frozen=True)
class UnitMonomial:
    """s t^m with s a nonzero scalar."""

    ring: Field
    s: object
    m: int

    def __post_init__(self):
        if self.s == 0:
            raise NotAUnit("zero coefficient")

    def poly(self):
        return SkewLaurent(self.ring, {self.m: self.s})

    def __mul__(self, other):
        F = self.ring
        return UnitMonomial(F, F.mul(self.s, F.tau(other.s, self.m)), self.m + other.m)

    def inverse(self):
        return unit_inverse(self)

    def is_one(self):
        return self.m == 0 and self.s == self.ring.one

    def __str__(self):
        return format_poly(self.poly())


def degree_span(f: SkewLaurent):
    """(low, high) support bounds, or the string ``"zero"`` for f = 0."""
    if f.is_zero():
        return "zero"
    return f.low(), f.high()


def as_unit(f: SkewLaurent):
    """Units of D_tau are exactly the monomials s t^m; None otherwise."""
    if len(f.terms) != 1:
        return None
    (m, s), = f.terms.items()
    return UnitMonomial(f.ring, s, m)


def unit_inverse(u: UnitMonomial) -> UnitMonomial:
    F = u.ring
    return UnitMonomial(F, F.tau(F.inv(u.s), -u.m), -u.m)


def poly_inverse(f: SkewLaurent) -> SkewLaurent:
    u = as_unit(f)
    if u is None:
        raise NotAUnit(f"{format_poly(f)} is not a unit of D_tau")
    return unit_inverse(u).poly()


def unit_commutator(u: UnitMonomial, v: UnitMonomial) -> UnitMonomial:
    """[u, v] = u v u^-1 v^-1; always of exponent 0."""
    return u * v * unit_inverse(u) * unit_inverse(v)


def divide(side: str, f: SkewLaurent, g: SkewLaurent):
    """Euclidean division in D_tau.

    ``side="right"``: f = q*g + r.  ``side="left"``: f = g*q + r.
    Both operands are first shifted into D[t] with nonzero constant term;
    then r = 0 or span(r) < span(g).
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.ring is not g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    F = f.ring
    if f.is_zero():
        return SkewLaurent.zero(F), SkewLaurent.zero(F)
    if side == "right":
        q, r = _right_divide(f, g)
    elif side == "left":
        q, r = _left_divide(f, g)
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return q, r


def _right_divide(f, g):
    # g = g0 t^a and f t^-a = t^b h0 with g0, h0 in D[t]; divide h0 by g0
    F = f.ring
    a = g.low()
    g0 = g.shift(-a)
    gd, glc = g0.lead()
    h = f.shift(-a)
    b = h.low()
    h0 = h.lshift(-b)
    q = SkewLaurent.zero(F)
    r = h0
    while r and r.high() >= gd:
        rd, rlc = r.lead()
        k = rd - gd
        c = F.div(rlc, F.tau(glc, k))
        term = SkewLaurent(F, {k: c})
        q = q + term
        r = r - term * g0
    q = q.lshift(b)
    r = r.lshift(b).shift(a)
    return q, r


def _left_divide(f, g):
    # f = g q + r.  g = t^a g0 with g0 in D[t]; f = t^a h, h = h0 t^b.
    F = f.ring
    a = g.low()
    g0 = g.lshift(-a)
    gd, glc = g0.lead()
    h = f.lshift(-a)
    b = h.low()
    h0 = h.shift(-b)
    q = SkewLaurent.zero(F)
    r = h0
    while r and r.high() >= gd:
        rd, rlc = r.lead()
        k = rd - gd
        # (glc t^gd)(c t^k) = glc tau^gd(c) t^rd
        c = F.tau(F.div(rlc, glc), -gd)
        term = SkewLaurent(F, {k: c})
        q = q + term
        r = r - g0 * term
    q = q.shift(b)
    r = r.shift(b).lshift(a)
    return q, r


def slp_arith(op: str, f: SkewLaurent, g: SkewLaurent | None = None) -> SkewLaurent:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "neg":
        return -f
    raise ValueError(f"unknown op {op!r}")


def poly_ldivmod(f: SkewLaurent, g: SkewLaurent):
    """f = g q + r by top-degree division; q in D[t], deg r < deg g."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    F = g.ring
    gd, glc = g.lead()
    q = SkewLaurent.zero(F)
    r = f
    while r and r.high() >= gd:
        rd, rlc = r.lead()
        term = SkewLaurent(F, {rd - gd: F.tau(F.div(rlc, glc), -gd)})
        q = q + term
        r = r - g * term
    return q, r


def poly_rdivmod(f: SkewLaurent, g: SkewLaurent):
    """f = q g + r by top-degree division; q in D[t], deg r < deg g."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    F = g.ring
    gd, glc = g.lead()
    q = SkewLaurent.zero(F)
    r = f
    while r and r.high() >= gd:
        rd, rlc = r.lead()
        k = rd - gd
        term = SkewLaurent(F, {k: F.div(rlc, F.tau(glc, k))})
        q = q + term
        r = r - term * g
    return q, r


def truncate(f: SkewLaurent, lo=None, hi=None) -> SkewLaurent:
    """Keep the terms with lo <= exponent <= hi."""
    return SkewLaurent(
        f.ring,
        {m: c for m, c in f.terms.items() if (lo is None or m >= lo) and (hi is None or m <= hi)},
    )
