"""Sampled checks of the Tits axioms for (E(n, D_tau), B^+-, N, S).

T1: s B w is contained in B w B  union  B s w B.
T2: s B s is not contained in B.

Representatives of simple reflections are w_a(1) for the simple affine
roots a; a Weyl element is represented by the product over its reduced word.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .elim import mirror_matrix
from .factorize import bruhat_cell
from .matrix import GeneratorApp, GroupMatrix, build
from .weyl import AffineRoot, WeylElement, compose, reduced_word, simple_reflection, simple_roots


def mirror_weyl(w: WeylElement) -> WeylElement:
    """Cell of the mirrored monomial matrix."""
    n = w.n
    perm = [0] * n
    trans = [0] * n
    for j in range(n):
        perm[n - 1 - j] = n + 1 - w.perm[j]
        trans[n - 1 - j] = -w.trans[j]
    return WeylElement(tuple(perm), tuple(trans))


def cell(g: GroupMatrix, sign="+", rule="first") -> WeylElement:
    if sign == "+":
        return bruhat_cell(g, rule=rule)
    return mirror_weyl(bruhat_cell(mirror_matrix(g), rule=rule))


def simple_app(n, k) -> GeneratorApp:
    return GeneratorApp("w", tuple(simple_roots(n)[k]), None)


def simple_rep(ring, n, k) -> GroupMatrix:
    return build(ring, n, [GeneratorApp("w", tuple(simple_roots(n)[k]), ring.one)])


def weyl_rep(ring, n, w: WeylElement) -> GroupMatrix:
    apps = [GeneratorApp("w", tuple(simple_roots(n)[k]), ring.one) for k in reduced_word(w)]
    return build(ring, n, apps)


def random_borel_apps(ring, n, rng, sign="+", max_len=4, max_level=2):
    """A random element of B^sign as a generator list: torus part h_(b,0)(s)
    followed by x_b(f) for affine roots b on the requested side."""
    apps = []
    for _ in range(rng.randint(0, 2)):
        i, j = rng.sample(range(1, n + 1), 2)
        apps.append(GeneratorApp("h", (i, j, 0), ring.random(rng, nonzero=True)))
    for _ in range(rng.randint(1, max_len)):
        i, j = rng.sample(range(1, n + 1), 2)
        lo = 0 if i < j else 1
        m = rng.randint(lo, max_level)
        if sign == "-":
            i, j, m = j, i, -m
        apps.append(GeneratorApp("x", (i, j, m), ring.random(rng, nonzero=True)))
    return apps


@dataclass
class TitsReport:
    axiom: str
    s: int
    w: WeylElement
    ok: bool
    samples: int = 0
    cells: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)
    witness: dict | None = None

    def as_dict(self):
        return {
            "axiom": self.axiom,
            "s": self.s,
            "w": self.w.as_dict(),
            "ok": self.ok,
            "samples": self.samples,
            "cells": {k: v for k, v in sorted(self.cells.items())},
            "failures": self.failures[:3],
            "witness": self.witness,
        }


def tits_axiom_check(axiom, ring, n, s, w=None, samples=100, rng=None, sign="+") -> TitsReport:
    """Run T1 (sampled) or T2 (explicit witness) for the simple reflection
    with index ``s`` (0 is alpha_0) and, for T1, the Weyl element ``w``."""
    sw_rep = simple_rep(ring, n, s)
    s_elem = simple_reflection(n, s)
    if axiom == "T2":
        root = simple_roots(n)[s]
        if sign == "-":
            root = -root
        b = build(ring, n, [GeneratorApp("x", tuple(root), ring.one)])
        c = cell(sw_rep * b * sw_rep, sign)
        witness = {"b": f"x[{root.i},{root.j};{root.m}](1)", "cell": c.as_dict()}
        return TitsReport("T2", s, s_elem, not c.is_identity(), 1, Counter({str(c): 1}), [], witness)
    if axiom != "T1":
        raise ValueError(f"unknown axiom {axiom!r}")
    if w is None:
        w = WeylElement.identity(n)
    if rng is None:
        import random

        rng = random.Random(0)
    w_rep = weyl_rep(ring, n, w)
    allowed = {w, compose(s_elem, w)}
    report = TitsReport("T1", s, w, True, samples)
    for idx in range(samples):
        apps = random_borel_apps(ring, n, rng, sign)
        g = sw_rep * build(ring, n, apps) * w_rep
        c = cell(g, sign)
        report.cells[str(c)] += 1
        if c not in allowed:
            report.ok = False
            report.failures.append({"sample": idx, "cell": c.as_dict()})
    return report
