"""Rank-2 unipotent words: U = U1 * U2 with U1 = {e_a(f) : f in D[t]} and
U2 = {e_-a(g) : g in D[t]t}.

A factor list is a sequence of ``("+", q)`` (meaning e_a(q)) and
``("-", q)`` (meaning e_-a(q)) with alternating signs and nonzero q.
Degrees are top degrees in D[t]; the zero polynomial has degree infinity.
"""

from __future__ import annotations

from math import inf

from .laurent import SkewLaurent, poly_ldivmod, truncate
from .matrix import GroupMatrix, elementary


class NotInU(ValueError):
    pass


def deg(f: SkewLaurent):
    return inf if f.is_zero() else f.high()


def factor_matrix(ring, sign, q) -> GroupMatrix:
    return elementary(ring, 2, (1, 2) if sign == "+" else (2, 1), q)


def word_matrix(ring, factors) -> GroupMatrix:
    out = GroupMatrix.identity(ring, 2)
    for sign, q in factors:
        out = out * factor_matrix(ring, sign, q)
    return out


def validate_factors(factors):
    prev = None
    for k, (sign, q) in enumerate(factors):
        if sign not in "+-" or q.is_zero():
            raise NotInU(f"factor {k + 1} is not a nonzero e_+a or e_-a")
        if sign == prev:
            raise NotInU(f"factors {k} and {k + 1} do not alternate")
        if sign == "+" and not q.is_polynomial():
            raise NotInU(f"factor {k + 1}: e_a parameter must lie in D[t]")
        if sign == "-" and not q.is_polynomial(strict=True):
            raise NotInU(f"factor {k + 1}: e_-a parameter must lie in D[t]t")
        prev = sign


def unipotent_factor_rank2(x: GroupMatrix):
    """Recover the unique alternating factor list of x in U.

    Factors are peeled from the right using the first row (a, b): when
    deg b >= deg a the last factor is e_a(q) with b = a q + r; otherwise
    it is e_-a(q) with a = b q + r and q restricted to D[t]t.
    """
    if x.n != 2:
        raise ValueError("rank-2 only")
    F = x.ring
    one = SkewLaurent.one(F)
    for row in x.rows:
        for f in row:
            if not f.is_polynomial():
                raise NotInU("entry outside D[t]")
    (a, b), (c, d) = x.rows
    out = []
    for _ in range(10000):
        if b.is_zero():
            if a != one or d != one:
                raise NotInU("peeling stalled: first row is not (1, 0)")
            if c.terms:
                if not c.is_polynomial(strict=True):
                    raise NotInU("remaining lower entry is not in D[t]t")
                out.append(("-", c))
            out.reverse()
            return out
        if a.is_zero():
            raise NotInU("peeling stalled: zero diagonal entry")
        if deg(b) >= deg(a):
            q, r = poly_ldivmod(b, a)
            sign = "+"
            b, d = r, d - c * q
        else:
            q, _ = poly_ldivmod(a, b)
            q = truncate(q, lo=1)
            if q.is_zero():
                raise NotInU("peeling stalled: no admissible e_-a quotient")
            sign = "-"
            a, c = a - b * q, c - d * q
        if out and out[-1][0] == sign:
            raise NotInU("peeling produced two adjacent factors of one kind")
        out.append((sign, q))
    raise NotInU("peeling did not terminate")  # pragma: no cover


def degree_chain_check(ring, factors, partials=None):
    """Check the entry-degree chain along the running products.

    When the first factor is e_a, the first row (a_k, b_k) obeys, after each
    e_a factor, deg a_k <= deg b_k with deg a_k unchanged, and after each
    e_-a factor, deg b_k < deg a_k with deg b_k unchanged.  When the first
    factor is e_-a the second row (c_k, d_k) obeys the mirrored chain:
    after e_-a, deg d_k < deg c_k with deg d_k unchanged; after e_a,
    deg c_k <= deg d_k with deg c_k unchanged.

    ``partials`` overrides the computed running products (for negative
    controls).  Returns ``(ok, index)`` with the 1-based index of the first
    factor whose link fails, or ``(True, None)``.
    """
    if not factors:
        return True, None
    if partials is None:
        partials, cur = [], GroupMatrix.identity(ring, 2)
        for sign, q in factors:
            cur = cur * factor_matrix(ring, sign, q)
            partials.append(cur)
    first_plus = factors[0][0] == "+"
    prev = GroupMatrix.identity(ring, 2)
    for k, ((sign, _), P) in enumerate(zip(factors, partials), start=1):
        if first_plus:
            x, y = P.rows[0]
            px, py = prev.rows[0]
            if sign == "+":
                ok = deg(x) <= deg(y) and deg(x) == deg(px)
            else:
                ok = deg(y) < deg(x) and deg(y) == deg(py)
        else:
            x, y = P.rows[1]  # (c, d)
            px, py = prev.rows[1]
            if sign == "-":
                ok = deg(y) < deg(x) and deg(y) == deg(py)
            else:
                ok = deg(x) <= deg(y) and deg(x) == deg(px)
        if not ok:
            return False, k
        prev = P
    return True, None


def random_alternating(ring, rng, max_len=10, max_deg=3):
    """A random nonempty alternating factor list."""
    length = rng.randint(1, max_len)
    sign = rng.choice("+-")
    out = []
    for _ in range(length):
        lo = 0 if sign == "+" else 1
        terms = {}
        for _ in range(rng.randint(1, 3)):
            terms[rng.randint(lo, max_deg)] = ring.random(rng, nonzero=True)
        out.append((sign, SkewLaurent(ring, terms)))
        sign = "-" if sign == "+" else "+"
    return out
