"""Steinberg words over the letters x^_ij(f), the map phi to E(n, D_tau),
symbols c^(u, v), K2 elements and the universality constants.

A letter is a triple ``(i, j, f)`` with f a :class:`SkewLaurent`; inverses
are normalized via x^_ij(f)^-1 = x^_ij(-f), so every stored letter carries
exponent +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .field import NotEnumerable
from .laurent import SkewLaurent, UnitMonomial, as_unit, format_poly, poly_inverse, unit_commutator
from .matrix import GroupMatrix, elementary, h_matrix
from .relations import case_of, r4_table, reflect_root


class NotAdmissible(ValueError):
    pass


class Letter(NamedTuple):
    i: int
    j: int
    f: SkewLaurent

    def __str__(self):
        return f"x[{self.i},{self.j}]({format_poly(self.f)})"


@dataclass(frozen=True)
class SteinbergWord:
    n: int
    letters: tuple

    def __mul__(self, other):
        return SteinbergWord(self.n, self.letters + other.letters)

    def inverse(self):
        return SteinbergWord(self.n, tuple(Letter(x.i, x.j, -x.f) for x in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def reduced(self):
        return word_reduce(self.letters, self.n)

    def __str__(self):
        return " ".join(str(x) for x in self.letters) or "1"


def word_reduce(letters, n=None) -> SteinbergWord:
    """Free reduction with (ST1): merge adjacent letters at one position and
    drop zero letters.  Letters may be (i, j, f) or (i, j, f, exponent)."""
    stack = []
    top = 0
    for item in letters:
        i, j, f = item[0], item[1], item[2]
        if len(item) > 3 and item[3] == -1:
            f = -f
        elif len(item) > 3 and item[3] != 1:
            raise ValueError("letter exponent must be +1 or -1")
        top = max(top, i, j)
        if stack and (stack[-1].i, stack[-1].j) == (i, j):
            f = stack.pop().f + f
        if f.terms:
            stack.append(Letter(i, j, f))
    return SteinbergWord(n if n is not None else top, tuple(stack))


def phi_eval(word: SteinbergWord) -> GroupMatrix:
    """phi(x^_ij(f)) = I + f E_ij, extended multiplicatively."""
    if not word.letters:
        raise ValueError("phi of an empty word needs a ring; use phi_eval_in")
    return phi_eval_in(word.letters[0].f.ring, word)


def phi_eval_in(ring, word: SteinbergWord) -> GroupMatrix:
    out = GroupMatrix.identity(ring, word.n)
    for x in word.letters:
        out = out * elementary(ring, word.n, (x.i, x.j), x.f)
    out.witness = None
    return out


# -- hatted generators ------------------------------------------------------------------


def _unit(u):
    if as_unit(u) is None:
        raise NotAdmissible(f"{format_poly(u)} is not a unit")
    return u


def letter_affine(ring, i, j, m, c) -> Letter:
    """x^_(eps_i - eps_j, m)(c): c t^m for i < j, t^m c for i > j."""
    coeff = c if i < j else ring.tau(c, m)
    return Letter(i, j, SkewLaurent(ring, {m: coeff}))


def w_hat(n, i, j, u) -> SteinbergWord:
    u = _unit(u)
    ui = poly_inverse(u)
    return SteinbergWord(n, (Letter(i, j, u), Letter(j, i, -ui), Letter(i, j, u)))


def h_hat(n, i, j, u) -> SteinbergWord:
    return w_hat(n, i, j, u) * w_hat(n, i, j, -SkewLaurent.one(u.ring))


def c_hat(n, u, v) -> SteinbergWord:
    """c^(u, v) = h^_12(u) h^_12(v) h^_12(vu)^-1 (18 letters before reduction)."""
    return h_hat(n, 1, 2, u) * h_hat(n, 1, 2, v) * h_hat(n, 1, 2, v * u).inverse()


def hat_symbol(kind, n, *args) -> SteinbergWord:
    if kind == "w":
        return w_hat(n, *args)
    if kind == "h":
        return h_hat(n, *args)
    if kind == "c":
        return c_hat(n, *args)
    raise ValueError(f"unknown symbol kind {kind!r}")


# -- K2 elements ---------------------------------------------------------------------------


def _um(u) -> UnitMonomial:
    if isinstance(u, UnitMonomial):
        return u
    m = as_unit(u)
    if m is None:
        raise NotAdmissible(f"{format_poly(u)} is not a unit")
    return m


def commutator_product(ring, pairs) -> UnitMonomial:
    out = UnitMonomial(ring, ring.one, 0)
    for u, v in pairs:
        out = out * unit_commutator(_um(u), _um(v))
    return out


@dataclass
class K2Element:
    n: int
    ring: object
    pairs: list
    word: SteinbergWord

    def phi(self):
        return phi_eval_in(self.ring, self.word)


def k2_element(ring, n, pairs) -> K2Element:
    """Concatenate c^(u_i, v_i) after checking prod [u_i, v_i] = 1."""
    pairs = [(_um(u).poly(), _um(v).poly()) for u, v in pairs]
    prod = commutator_product(ring, pairs)
    if not prod.is_one():
        raise NotAdmissible(f"commutator product is {prod}, not 1")
    word = SteinbergWord(n, ())
    for u, v in pairs:
        word = word * c_hat(n, u, v)
    z = K2Element(n, ring, pairs, word)
    if not z.phi().is_identity():  # pragma: no cover - guaranteed by the algebra
        raise AssertionError("phi of a K2 element is not the identity")
    return z


def conj_letter_by_torus(letter: Letter, i, j, u, inverse=False) -> Letter:
    """Rewrite h^_ij(u) x^_kl(f) h^_ij(u)^-1 (or the conjugate by the
    inverse) as a single letter using the (R4) table."""
    if inverse:
        u = poly_inverse(u)
    beta, gamma = (i, j), (letter.i, letter.j)
    root, f = r4_table(case_of(beta, gamma), beta, gamma, u, letter.f)
    return Letter(root[0], root[1], f)


def _torus_factors(pairs):
    """c^(u, v) = h(u) h(v) h(vu)^-1, flattened to (unit, inverse) pairs."""
    out = []
    for u, v in pairs:
        out += [(u, False), (v, False), (v * u, True)]
    return out


def k2_centrality_check(z: K2Element, letter: Letter):
    """Conjugate ``letter`` through the torus factors of z (innermost first).

    Returns ``(ok, result_letter)``; ok means the letter came back unchanged
    and phi-level conjugation fixes phi(letter).
    """
    cur = letter
    for u, inv in reversed(_torus_factors(z.pairs)):
        cur = conj_letter_by_torus(cur, 1, 2, u, inverse=inv)
    ok = cur == letter
    ring, n = z.ring, z.n
    pz = z.phi()
    px = elementary(ring, n, (letter.i, letter.j), letter.f)
    ok_phi = pz * px == px * pz
    return ok and ok_phi, cur


def conj_letter_by_symbols(ring, n, pairs, letter: Letter) -> Letter:
    """The same rewriting chain for an arbitrary list of symbols (no K2 check)."""
    cur = letter
    for u, inv in reversed(_torus_factors(pairs)):
        cur = conj_letter_by_torus(cur, 1, 2, u, inverse=inv)
    return cur


# -- relation checks at the level of phi -----------------------------------------------


def _commutator_word(a: SteinbergWord, b: SteinbergWord):
    return a * b * a.inverse() * b.inverse()


def st1_check(ring, n, i, j, f, g) -> bool:
    lhs = SteinbergWord(n, (Letter(i, j, f), Letter(i, j, g)))
    rhs = word_reduce(lhs.letters, n)
    return phi_eval_in(ring, lhs) == phi_eval_in(ring, rhs)


def st2_check(ring, n, ij, kl, f, g) -> bool:
    """(ST2) as an identity of phi-images, for (i, j) != (l, k)."""
    (i, j), (k, l) = ij, kl
    if (i, j) == (l, k):
        raise ValueError("(ST2) excludes (i, j) = (l, k)")
    a = SteinbergWord(n, (Letter(i, j, f),))
    b = SteinbergWord(n, (Letter(k, l, g),))
    lhs = phi_eval_in(ring, _commutator_word(a, b))
    if j == k and i != l:
        rhs = elementary(ring, n, (i, l), f * g)
    elif i == l and j != k:
        rhs = elementary(ring, n, (k, j), -(g * f))
    else:
        rhs = GroupMatrix.identity(ring, n)
    return lhs == rhs


def st2prime_check(ring, u, v, i=1, j=2, n=2) -> bool:
    """w^_ij(u) x^_ij(v) w^_ij(-u) = x^_ji(-u^-1 v u^-1) under phi."""
    ui = poly_inverse(u)
    lhs = w_hat(n, i, j, u) * SteinbergWord(n, (Letter(i, j, v),)) * w_hat(n, i, j, -u)
    rhs = SteinbergWord(n, (Letter(j, i, -(ui * v * ui)),))
    return phi_eval_in(ring, lhs) == phi_eval_in(ring, rhs)


def rhat6_table(case, beta, gamma, u, s):
    """Right side of w^_b(u) h^_g(s) w^_b(u)^-1 as [(root, param, exponent)]."""
    ui = poly_inverse(u)
    sg = reflect_root(beta, gamma)
    nb = (beta[1], beta[0])
    if case == "orth":
        return [(gamma, s, 1)]
    if case == "plus":
        return [(nb, -(ui * s * ui), 1), (nb, -(ui * ui), -1)]
    if case == "minus":
        return [(beta, -(u * s * u), 1), (beta, -(u * u), -1)]
    if case == "ik":
        return [(sg, -(ui * s), 1), (sg, -ui, -1)]
    if case == "il":
        return [(sg, -(s * u), 1), (sg, -u, -1)]
    if case == "jk":
        return [(sg, u * s, 1), (sg, u, -1)]
    return [(sg, s * ui, 1), (sg, ui, -1)]  # jl


def rhat6_check(ring, n, beta, gamma, u, s) -> bool:
    case = case_of(beta, gamma)
    w = w_hat(n, beta[0], beta[1], u)
    lhs = phi_eval_in(ring, w * h_hat(n, gamma[0], gamma[1], s) * w.inverse())
    rhs_word = SteinbergWord(n, ())
    for root, par, e in rhat6_table(case, beta, gamma, u, s):
        h = h_hat(n, root[0], root[1], par)
        rhs_word = rhs_word * (h if e == 1 else h.inverse())
    return lhs == phi_eval_in(ring, rhs_word)


# -- universality constants -------------------------------------------------------------


@dataclass
class UniversalityConstants:
    found: bool
    a: object = None
    b: object = None
    c: object = None
    d: object = None
    failing: str | None = None
    hypothesis_ok: bool = False
    center_size: int | None = None

    def as_dict(self, ring):
        fmt = ring.format
        out = {"found": self.found, "hypothesis_ok": self.hypothesis_ok, "center_size": self.center_size}
        for k in "abcd":
            v = getattr(self, k)
            out[k] = None if v is None else fmt(v)
        if self.failing:
            out["failing"] = self.failing
        return out


DEFAULT_RATIONAL_CANDIDATES = tuple(Fraction(x) for x in (2, 3, -2, 4, 5, Fraction(1, 2)))


def find_universality_constants(ring, candidates=None) -> UniversalityConstants:
    """Least a, c, d among the tau-fixed units of D (these are central in
    D_tau) with a^2 != 1, c not in {0, 1}, c^2 - c + 1 != 0, d^3 != 1;
    b = (a^2 - 1)^-1.  The hypothesis flag is |Z(D)| >= 5 and |Z(D)| != 9."""
    F = ring
    if candidates is None:
        if F.order is None:
            candidates = DEFAULT_RATIONAL_CANDIDATES
        else:
            candidates = list(F.elements())
    pool = [F.coerce(x) if F.kind == "rational" else x for x in candidates]
    pool = [x for x in pool if not F.is_zero(x) and F.tau(x) == x]
    one = F.one
    size = F.order
    hyp = size is None or (size >= 5 and size != 9)

    def sq(x):
        return F.mul(x, x)

    a = next((x for x in pool if sq(x) != one), None)
    if a is None:
        return UniversalityConstants(False, failing="no central a with a^2 != 1", hypothesis_ok=hyp, center_size=size)
    b = F.inv(F.sub(sq(a), one))
    c = next((x for x in pool if x != one and F.add(F.sub(sq(x), x), one) != 0), None)
    if c is None:
        return UniversalityConstants(
            False, a, b, failing="no central c with c != 0, 1 and c^2 - c + 1 != 0", hypothesis_ok=hyp, center_size=size
        )
    d = next((x for x in pool if F.mul(sq(x), x) != one), None)
    if d is None:
        return UniversalityConstants(
            False, a, b, c, failing="no central d with d^3 != 1", hypothesis_ok=hyp, center_size=size
        )
    return UniversalityConstants(True, a, b, c, d, hypothesis_ok=hyp, center_size=size)


def perfectness_check(ring, n, beta, f: SkewLaurent, consts: UniversalityConstants) -> bool:
    """x_beta(f) = [h_beta(a), x_beta(b f)] as matrices."""
    if not consts.found:
        raise NotAdmissible("constants were not found for this instance")
    a = SkewLaurent.const(ring, consts.a)
    bf = SkewLaurent.const(ring, consts.b) * f
    h, hi = h_matrix(ring, n, beta, a), h_matrix(ring, n, beta, poly_inverse(a))
    x, xi = elementary(ring, n, beta, bf), elementary(ring, n, beta, -bf)
    return h * x * hi * xi == elementary(ring, n, beta, f)


def telescope_pairs(ring, units):
    """(u1, u2), (u2 u1, u3), ..., whose commutator product is
    (u1 ... ur)(ur ... u1)^-1."""
    out = []
    acc = units[0]
    for u in units[1:]:
        out.append((acc, u))
        acc = u * acc
    return out


def close_telescope(ring, pairs):
    """Append (t, r) with [t, r] = tau(r)/r cancelling the commutator product."""
    c = commutator_product(ring, pairs)
    if c.is_one():
        return list(pairs)
    if c.m != 0:  # pragma: no cover - commutators have degree 0
        raise NotAdmissible("commutator product has nonzero degree")
    target = ring.inv(c.s)
    try:
        units = list(ring.units())
    except NotEnumerable:
        raise NotAdmissible("cannot close a telescope over an infinite field")
    t = SkewLaurent.t(ring)
    for r in units:
        if ring.div(ring.tau(r), r) == target:
            return list(pairs) + [(t, SkewLaurent.const(ring, r))]
    raise NotAdmissible("commutator product is not of the form tau(r)/r")
