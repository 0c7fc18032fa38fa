import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import polys, ring_and
from skewlin.field import make_instance
from skewlin.laurent import SkewLaurent, format_poly
from skewlin.matrix import GroupMatrix
from skewlin.parse import (
    ParseError,
    parse_matrix,
    parse_pairs,
    parse_reflections,
    parse_scalar,
    parse_scalar_poly,
    parse_script,
)
from skewlin.weyl import AffineRoot

F5 = make_instance("F5")
F9 = make_instance("F9:frob^1")
Q = make_instance("Q")
I = F9.generator_element()


def test_poly_examples():
    assert parse_scalar_poly("2*t^-1 + 1", F5).terms == {-1: 2, 0: 1}
    assert parse_scalar_poly("i*t^2", F9).terms == {2: I}
    assert parse_scalar_poly(" t ^ ( -2 ) - t + 3 ", F5).terms == {-2: 1, 1: 4, 0: 3}
    assert parse_scalar_poly("(2i+1)*t", F9).terms == {1: F9.add(F9.mul(2, I), 1)}
    assert parse_scalar_poly("3/4*t", Q).terms == {1: Q.coerce(0.75)}


def test_unknown_literal_reports_position():
    with pytest.raises(ParseError, match="unknown literal 'i'") as err:
        parse_scalar_poly("1 + i", F5)
    assert err.value.pos == 4


@pytest.mark.parametrize("text", ["", "2*", "t^", "1 +", "2 3", "3/4", "(1+2"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_scalar_poly(text, F5)


def test_matrix_examples():
    g = parse_matrix("1,2;0,1", 2, F5)
    assert g.to_lists() == GroupMatrix.from_entries(F5, [[1, 2], [0, 1]]).to_lists()
    d = parse_matrix("t,0;0,t^-1", 2, F5)
    assert d.rows[0][0] == SkewLaurent.t(F5) and d.rows[1][1] == SkewLaurent.t(F5, -1)
    assert d.rows[0][1].is_zero()
    with pytest.raises(ParseError, match="row 2"):
        parse_matrix("1,2;0", 2, F5)
    with pytest.raises(ParseError, match="rows"):
        parse_matrix("1,0;0,1;1,1", 2, F5)


def test_script():
    apps = parse_script("e[1,2](1+t) x[2,1;1](i) * w[1,2;0](2) h[1,2;-1](i)", 2, F9)
    assert [a.kind for a in apps] == ["e", "x", "w", "h"]
    assert apps[1].root == (2, 1, 1) and apps[1].param == I
    assert apps[3].root == (1, 2, -1)
    with pytest.raises(ParseError):
        parse_script("x[1,1;0](1)", 2, F5)
    with pytest.raises(ParseError):
        parse_script("w[1,2;0](0)", 2, F5)


def test_reflections():
    assert parse_reflections("s(1,0) s(-theta,1) s(e1-e3,2)", 3) == [
        AffineRoot(1, 2, 0),
        AffineRoot(3, 1, 1),
        AffineRoot(1, 3, 2),
    ]
    with pytest.raises(ParseError):
        parse_reflections("s(3,0)", 3)


def test_pairs():
    pairs = parse_pairs("(t,i);(i,t)", F9)
    assert pairs[0] == (SkewLaurent.t(F9), SkewLaurent.const(F9, I))
    assert parse_pairs("", F9) == []
    with pytest.raises(ParseError):
        parse_pairs("(t)", F9)


def test_scalar():
    assert parse_scalar("2i+1", F9) == F9.add(F9.mul(2, I), 1)
    assert parse_scalar("i^2", F9) == F9.neg(1)


@given(ring_and(polys))
def test_poly_round_trip(arg):
    F, f = arg
    assert parse_scalar_poly(format_poly(f), F) == f


@given(ring_and(lambda F: st.lists(polys(F), min_size=4, max_size=4)))
def test_matrix_round_trip(arg):
    F, entries = arg
    g = GroupMatrix(F, [entries[:2], entries[2:]])
    assert parse_matrix(str(g), 2, F) == g
