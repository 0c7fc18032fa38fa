import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from helpers import polys, ring_and, units
from skewlin.field import make_instance
from skewlin.laurent import (
    NotAUnit,
    SkewLaurent,
    UnitMonomial,
    as_unit,
    degree_span,
    divide,
    poly_inverse,
    slp_arith,
    unit_commutator,
    unit_inverse,
)

F5 = make_instance("F5")
F9 = make_instance("F9:frob^1")
I = F9.generator_element()


def P(F, d):
    return SkewLaurent(F, d)


def test_twisted_product_it_times_it():
    it = P(F9, {1: I})
    assert it * it == SkewLaurent.t(F9, 2)


def test_commutative_expansion_over_f5():
    assert slp_arith("mul", P(F5, {1: 1, 0: 1}), P(F5, {1: 1, 0: 4})) == P(F5, {2: 1, 0: 4})


def test_adding_zero():
    f = P(F9, {2: I, -1: 1})
    assert slp_arith("add", f, SkewLaurent.zero(F9)) == f


def test_degree_span_examples():
    assert degree_span(P(F5, {3: 2})) == (3, 3)
    assert degree_span(SkewLaurent.zero(F5)) == "zero"
    assert degree_span(P(F9, {-1: 1, 2: I})) == (-1, 2)


def test_as_unit_examples():
    u = as_unit(P(F5, {3: 2}))
    assert (u.s, u.m) == (2, 3)
    assert as_unit(P(F5, {0: 1, 1: 1})) is None
    assert as_unit(SkewLaurent.zero(F5)) is None
    with pytest.raises(NotAUnit):
        poly_inverse(P(F5, {0: 1, 1: 1}))


def test_unit_inverse_examples():
    u = unit_inverse(UnitMonomial(F5, 2, 0))
    assert (u.s, u.m) == (3, 0)
    u = unit_inverse(UnitMonomial(F5, 1, 1))
    assert (u.s, u.m) == (1, -1)
    it = UnitMonomial(F9, I, 1)
    assert (it * unit_inverse(it)).is_one()
    assert (unit_inverse(it) * it).is_one()


def test_divide_examples():
    q, r = divide("right", P(F5, {2: 1, 0: 1}), P(F5, {1: 1, 0: 1}))
    assert q == P(F5, {1: 1, 0: 4}) and r == P(F5, {0: 2})
    q, r = divide("right", SkewLaurent.t(F9, 2), P(F9, {1: I}))
    assert q == P(F9, {1: I}) and r.is_zero()
    g = P(F9, {0: 1, 3: I})
    q, r = divide("left", g, g)
    assert q.is_one() and r.is_zero()


def test_unit_commutator_examples():
    t, i = UnitMonomial(F9, 1, 1), UnitMonomial(F9, I, 0)
    assert unit_commutator(t, i).poly() == P(F9, {0: 2})
    assert unit_commutator(t, t).is_one()
    assert (unit_commutator(t, i) * unit_commutator(i, t)).is_one()


@given(ring_and(lambda F: st.tuples(polys(F), polys(F), polys(F))))
def test_ring_axioms(arg):
    F, (f, g, h) = arg
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert f - f == SkewLaurent.zero(F)
    assert f * SkewLaurent.one(F) == f == SkewLaurent.one(F) * f


@given(ring_and(lambda F: st.tuples(polys(F), polys(F, nonzero=True))))
def test_division_identities(arg):
    F, (f, g) = arg
    q, r = divide("right", f, g)
    assert q * g + r == f
    assert r.is_zero() or r.span() < g.span()
    q, r = divide("left", f, g)
    assert g * q + r == f
    assert r.is_zero() or r.span() < g.span()


@given(ring_and(lambda F: st.tuples(units(F), units(F))))
def test_unit_group_laws(arg):
    F, (u, v) = arg
    a, b = as_unit(u), as_unit(v)
    assert (a * unit_inverse(a)).is_one()
    c = unit_commutator(a, b)
    assert c.m == 0
    assert (c * unit_commutator(b, a)).is_one()
    assert u * v == (a * b).poly()


@given(ring_and(lambda F: polys(F, nonzero=True)))
def test_units_are_exactly_monomials(arg):
    F, f = arg
    assume(len(f.terms) > 1)
    with pytest.raises(NotAUnit):
        poly_inverse(f)
