"""Affine Weyl group of type A_{n-1}^(1) acting on affine roots.

A classical root eps_i - eps_j is the index pair ``(i, j)`` (1-based); an
affine root is ``AffineRoot(i, j, m)``.

An element w of W_a is stored as ``(perm, trans)`` and acts by

    (eps_i - eps_j, m)  ->  (eps_perm(i) - eps_perm(j), m + trans_i - trans_j).

This is exactly conjugation by the monomial matrix whose column i carries a
unit of degree trans_i in row perm(i), so composition of elements matches
matrix multiplication.  The sum of ``trans`` is zero for elements of W_a.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class AffineRoot(NamedTuple):
    i: int
    j: int
    m: int

    @property
    def root(self):
        return (self.i, self.j)

    def __neg__(self):
        return AffineRoot(self.j, self.i, -self.m)

    def __str__(self):
        return f"(e{self.i}-e{self.j},{self.m})"


def pairing(gamma, beta) -> int:
    """<gamma, beta> = 2(gamma, beta)/(beta, beta) for type A roots."""
    k, l = gamma[0], gamma[1]
    i, j = beta[0], beta[1]
    return (k == i) - (k == j) - (l == i) + (l == j)


def _swap(x, i, j):
    return j if x == i else i if x == j else x


def root_reflect(b: AffineRoot, g: AffineRoot) -> AffineRoot:
    """sigma_b(g) = (sigma_beta(gamma), level(g) - <gamma, beta> level(b))."""
    return AffineRoot(_swap(g.i, b.i, b.j), _swap(g.j, b.i, b.j), g.m - pairing(g, b) * b.m)


def xi_apply(b: AffineRoot, g: AffineRoot) -> AffineRoot:
    return AffineRoot(g.i, g.j, g.m + pairing(g, b) * b.m)


def is_positive(g: AffineRoot) -> bool:
    if g.i < g.j:
        return g.m >= 0
    return g.m > 0


def simple_roots(n: int) -> list[AffineRoot]:
    """Pi_a, indexed so that entry 0 is alpha_0 = (-theta, 1)."""
    return [AffineRoot(n, 1, 1)] + [AffineRoot(i, i + 1, 0) for i in range(1, n)]


def classical_roots(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


@dataclass(frozen=True)
class WeylElement:
    perm: tuple  # perm[i-1] = image of i
    trans: tuple

    @property
    def n(self):
        return len(self.perm)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)), (0,) * n)

    def __matmul__(self, other):
        return compose(self, other)

    def is_identity(self):
        return self == WeylElement.identity(self.n)

    def inverse(self):
        n = self.n
        inv = [0] * n
        tr = [0] * n
        for i in range(n):
            inv[self.perm[i] - 1] = i + 1
        # w^-1 sends column perm(i) degree -trans_i
        for i in range(n):
            tr[self.perm[i] - 1] = -self.trans[i]
        return WeylElement(tuple(inv), tuple(tr))

    def apply(self, g: AffineRoot) -> AffineRoot:
        return weyl_apply(self, g)

    def as_dict(self):
        return {"perm": list(self.perm), "trans": list(self.trans)}

    def __str__(self):
        return f"perm={list(self.perm)} trans={list(self.trans)}"


def compose(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """w1 o w2 (apply w2 first)."""
    p1, t1 = w1.perm, w1.trans
    perm = tuple(p1[x - 1] for x in w2.perm)
    trans = tuple(w2.trans[i] + t1[w2.perm[i] - 1] for i in range(len(p1)))
    return WeylElement(perm, trans)


def weyl_apply(w: WeylElement, g: AffineRoot) -> AffineRoot:
    p, t = w.perm, w.trans
    return AffineRoot(p[g.i - 1], p[g.j - 1], g.m + t[g.i - 1] - t[g.j - 1])


def reflection(n: int, b: AffineRoot) -> WeylElement:
    """sigma_b as a (perm, trans) pair."""
    perm = list(range(1, n + 1))
    perm[b.i - 1], perm[b.j - 1] = b.j, b.i
    trans = [0] * n
    trans[b.i - 1] = -b.m
    trans[b.j - 1] = b.m
    return WeylElement(tuple(perm), tuple(trans))


def xi(n: int, b: AffineRoot) -> WeylElement:
    """xi_b = sigma_b sigma_beta, a pure translation."""
    return compose(reflection(n, b), reflection(n, AffineRoot(b.i, b.j, 0)))


def translation(trans) -> WeylElement:
    n = len(trans)
    return WeylElement(tuple(range(1, n + 1)), tuple(trans))


def simple_reflection(n: int, idx: int) -> WeylElement:
    return reflection(n, simple_roots(n)[idx])


def weyl_compose_split(n: int, roots) -> WeylElement:
    """Product sigma_{r1} sigma_{r2} ... in list order."""
    w = WeylElement.identity(n)
    for r in roots:
        w = compose(w, reflection(n, r))
    return w


def weyl_length(w: WeylElement) -> int:
    """Number of positive affine roots sent to negative ones.

    For the ordered pair (i, j) the positive roots are (i, j, m) with
    m >= [i > j]; the image level is m + t_i - t_j and is negative below
    [perm(i) > perm(j)].  Counting the integers in between gives the sum.
    """
    p, t = w.perm, w.trans
    n = len(p)
    total = 0
    for i in range(n):
        for j in range(n):
            if i != j:
                c = (p[i] > p[j]) - (i > j) + t[j] - t[i]
                if c > 0:
                    total += c
    return total


def brute_force_length(w: WeylElement, bound=None) -> int:
    """Oracle: enumerate positive affine roots up to a level bound."""
    n = w.n
    if bound is None:
        bound = 2 * max((abs(x) for x in w.trans), default=0) + 2
    count = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for m in range(-bound, bound + 1):
                g = AffineRoot(i, j, m)
                if is_positive(g) and not is_positive(weyl_apply(w, g)):
                    count += 1
    return count


def reduced_word(w: WeylElement) -> list[int]:
    """Indices into :func:`simple_roots` with product equal to w.

    Greedy: strip the lowest-index simple reflection s with l(s w) < l(w).
    """
    n = w.n
    simples = [simple_reflection(n, k) for k in range(n)]
    word = []
    length = weyl_length(w)
    while length:
        for k, s in enumerate(simples):
            sw = compose(s, w)
            lsw = weyl_length(sw)
            if lsw < length:
                word.append(k)
                w, length = sw, lsw
                break
        else:  # pragma: no cover - would contradict the exchange property
            raise RuntimeError("no descent found")
    return word


def word_element(n: int, word) -> WeylElement:
    w = WeylElement.identity(n)
    for k in word:
        w = compose(w, simple_reflection(n, k))
    return w


def elements_up_to_length(n: int, max_len: int) -> list[WeylElement]:
    """Breadth-first enumeration of W_a by length."""
    seen = {WeylElement.identity(n): 0}
    frontier = [WeylElement.identity(n)]
    simples = [simple_reflection(n, k) for k in range(n)]
    for depth in range(1, max_len + 1):
        nxt = []
        for w in frontier:
            for s in simples:
                sw = compose(s, w)
                if sw not in seen and weyl_length(sw) == depth:
                    seen[sw] = depth
                    nxt.append(sw)
        frontier = nxt
    return list(seen)
