import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import RINGS, polys, ring_and, units
from skewlin.elim import NotInvertible, membership_pattern_check, monomialize
from skewlin.field import make_instance
from skewlin.laurent import SkewLaurent
from skewlin.matrix import (
    GeneratorApp,
    GroupMatrix,
    build,
    deg_vector,
    diagonal,
    elementary,
    expand_e,
    is_monomial,
    weyl_representative,
)
from skewlin.relations import CASES, FAMILIES, MIN_RANK, check_relation, sample_instance
from skewlin.verify import random_e_word
from skewlin.weyl import WeylElement

F5 = make_instance("F5")
F9 = make_instance("F9:frob^1")


def M(F, rows):
    return GroupMatrix.from_entries(F, rows)


def test_build_examples():
    assert build(F5, 2, [GeneratorApp("e", (1, 2), SkewLaurent.const(F5, 2))]) == M(F5, [[1, 2], [0, 1]])
    assert build(F5, 2, [GeneratorApp("w", (1, 2, 0), 1)]) == M(F5, [[0, 1], [4, 0]])
    assert build(F5, 2, [GeneratorApp("h", (1, 2, 0), 2)]) == M(F5, [[2, 0], [0, 3]])


def test_witness_is_recorded():
    apps = [GeneratorApp("x", (1, 2, 1), 3), GeneratorApp("w", (2, 1, -1), 2)]
    g = build(F5, 2, apps)
    assert g.witness == apps
    assert (g * g).witness == apps + apps


def test_affine_generator_levels():
    t = SkewLaurent.t(F9)
    i = F9.generator_element()
    x = build(F9, 2, [GeneratorApp("x", (2, 1, 1), i)])
    # x_(-a,1)(c) = e_21(t c) = e_21(tau(c) t)
    assert x.rows[1][0] == t * SkewLaurent.const(F9, i)


def test_r2_example_n3():
    two, four = SkewLaurent.const(F5, 2), SkewLaurent.const(F5, 4)
    rep = check_relation("R2", F5, 3, (1, 2), (2, 3), two, four)
    assert rep.ok
    assert rep.rhs == elementary(F5, 3, (1, 3), SkewLaurent.const(F5, 3))


def test_r1_zero_parameters():
    z = SkewLaurent.zero(F5)
    rep = check_relation("R1", F5, 2, (1, 2), (1, 2), z, z)
    assert rep.ok and rep.lhs.is_identity()


def test_r4_orthogonal_fixes():
    u, f = SkewLaurent.t(F9), SkewLaurent.const(F9, 2)
    rep = check_relation("R4", F9, 4, (1, 2), (3, 4), u, f)
    assert rep.ok and rep.rhs == elementary(F9, 4, (3, 4), f)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("F", RINGS, ids=str)
def test_relation_rows_sampled(family, F):
    rng = random.Random(f"{family}:{F}")
    for case in CASES[family]:
        for _ in range(25):
            n, b, g, p, q = sample_instance(family, case, F, rng, (max(MIN_RANK[case], 2), 4))
            rep = check_relation(family, F, n, b, g, p, q)
            assert rep.ok, (family, case, rep.discrepancy())


def test_discrepancy_report_lists_entries():
    u, s = SkewLaurent.t(F9), SkewLaurent.const(F9, F9.generator_element())
    rep = check_relation("R6", F9, 2, (1, 2), (1, 2), u, s)
    assert rep.ok and rep.discrepancy() is None


def test_deg_vector_examples():
    d = diagonal(F5, [SkewLaurent(F5, {3: 2}), SkewLaurent.t(F5, -3)])
    assert deg_vector(d) == (3, -3)
    assert deg_vector(GroupMatrix.identity(F5, 3)) == (0, 0, 0)
    h = build(F5, 2, [GeneratorApp("h", (1, 2, 1), 1)])
    assert deg_vector(h) == (1, -1)


def test_monomialize_examples():
    d = diagonal(F5, [SkewLaurent.t(F5), SkewLaurent.t(F5, -1)])
    assert monomialize(d) == ([], d, [])
    g = elementary(F5, 2, (1, 2), SkewLaurent.const(F5, 2)) * d
    left, mono, right = monomialize(g)
    assert build(F5, 2, left) * g * build(F5, 2, right) == mono
    assert is_monomial(mono)
    with pytest.raises(NotInvertible):
        monomialize(M(F5, [[1, 2], [0, 0]]))


@given(st.integers(0, 10**6), st.sampled_from(RINGS), st.sampled_from([2, 3]))
def test_monomialize_random_words(seed, F, n):
    rng = random.Random(seed)
    g = build(F, n, random_e_word(F, n, rng, 10))
    left, mono, right = monomialize(g)
    assert build(F, n, left) * g * build(F, n, right) == mono
    assert is_monomial(mono) is not None


def test_membership_examples():
    f = SkewLaurent(F5, {0: 1, 2: 3})
    assert membership_pattern_check(build(F5, 2, [GeneratorApp("x", (1, 2, 0), 2)]), "U+")
    assert membership_pattern_check(elementary(F5, 2, (1, 2), f), "U+")
    assert not membership_pattern_check(elementary(F5, 2, (2, 1), f), "U+")
    assert not membership_pattern_check(elementary(F5, 2, (2, 1), f), "U-")
    assert membership_pattern_check(elementary(F5, 2, (2, 1), SkewLaurent(F5, {0: 1, -2: 3})), "U-")
    for side in ("U+", "U-", "B+", "B-"):
        assert membership_pattern_check(GroupMatrix.identity(F5, 3), side)


@given(ring_and(lambda F: st.tuples(polys(F), st.integers(1, 3), st.integers(1, 3))))
def test_expand_e_matches_matrix(arg):
    F, (f, i, j) = arg
    if i == j:
        return
    app = GeneratorApp("e", (i, j), f)
    assert build(F, 3, expand_e(F, app)) == app.matrix(F, 3)


@given(ring_and(lambda F: st.tuples(units(F), st.integers(0, 2), st.integers(-2, 2))))
def test_inverse_apps(arg):
    F, (u, kind_idx, m) = arg
    kind = "xwh"[kind_idx]
    (_, c), = u.terms.items()
    for root in [(1, 2, m), (2, 1, m)]:
        app = GeneratorApp(kind, root, c)
        assert (app.matrix(F, 2) * app.inverse(F).matrix(F, 2)).is_identity()


def test_weyl_representative_has_trivial_sign():
    for perm in [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 2, 1)]:
        w = WeylElement(perm, (1, 0, -1))
        rep = weyl_representative(F5, w)
        mono = is_monomial(rep)
        assert mono[0] == perm and tuple(u.m for u in mono[1]) == (1, 0, -1)
