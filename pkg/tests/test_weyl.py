import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewlin.weyl import (
    AffineRoot,
    WeylElement,
    brute_force_length,
    compose,
    elements_up_to_length,
    is_positive,
    reduced_word,
    reflection,
    root_reflect,
    simple_reflection,
    simple_roots,
    translation,
    weyl_apply,
    weyl_compose_split,
    weyl_length,
    word_element,
    xi,
    xi_apply,
)

A1 = AffineRoot(1, 2, 0)


def test_root_reflect_examples():
    assert root_reflect(AffineRoot(1, 2, 1), A1) == AffineRoot(2, 1, -2)
    assert root_reflect(AffineRoot(2, 1, 1), A1) == AffineRoot(2, 1, 2)
    assert root_reflect(AffineRoot(1, 2, 5), AffineRoot(3, 4, 1)) == AffineRoot(3, 4, 1)


def test_xi_apply_examples():
    assert xi_apply(AffineRoot(1, 2, 1), A1) == AffineRoot(1, 2, 2)
    assert xi_apply(AffineRoot(1, 2, 1), AffineRoot(2, 3, 0)) == AffineRoot(2, 3, -1)
    assert xi_apply(AffineRoot(1, 3, 0), AffineRoot(2, 3, 4)) == AffineRoot(2, 3, 4)


def test_weyl_apply_examples():
    assert weyl_apply(WeylElement.identity(3), AffineRoot(2, 3, 7)) == AffineRoot(2, 3, 7)
    assert weyl_apply(translation((1, -1)), A1) == AffineRoot(1, 2, 2)
    assert weyl_apply(WeylElement((2, 1), (0, 0)), A1) == AffineRoot(2, 1, 0)


def test_compose_split_examples():
    assert weyl_compose_split(2, [A1, A1]).is_identity()
    xi1 = weyl_compose_split(2, [AffineRoot(1, 2, 1), A1])
    assert xi1 == WeylElement((1, 2), (1, -1)) == xi(2, AffineRoot(1, 2, 1))
    s = reflection(2, AffineRoot(1, 2, 1))
    assert s.perm == (2, 1)
    for g in [A1, AffineRoot(2, 1, 3), AffineRoot(1, 2, -2)]:
        assert weyl_apply(s, g) == root_reflect(AffineRoot(1, 2, 1), g)


def test_length_and_word_examples():
    assert weyl_length(WeylElement.identity(3)) == 0
    assert reduced_word(WeylElement.identity(3)) == []
    assert weyl_length(reflection(2, A1)) == 1
    assert reduced_word(reflection(2, A1)) == [1]
    x = xi(2, AffineRoot(1, 2, 1))
    assert weyl_length(x) == 2 == brute_force_length(x)
    assert sorted(reduced_word(x)) == [0, 1]
    assert word_element(2, reduced_word(x)) == x


def test_positivity_examples():
    assert is_positive(A1)
    assert is_positive(AffineRoot(2, 1, 1))
    assert not is_positive(AffineRoot(1, 2, -1))
    assert simple_roots(3) == [AffineRoot(3, 1, 1), AffineRoot(1, 2, 0), AffineRoot(2, 3, 0)]


def test_ball_sizes():
    # affine A1 is infinite dihedral: 1 + 2L elements of length <= L
    assert len(elements_up_to_length(2, 4)) == 9
    assert len(elements_up_to_length(3, 4)) == 31


@pytest.mark.parametrize("n", [2, 3])
def test_length_exhaustive_small_box(n):
    for perm in itertools.permutations(range(1, n + 1)):
        for v in itertools.product(range(-2, 3), repeat=n):
            if sum(v) == 0:
                w = WeylElement(perm, v)
                assert weyl_length(w) == brute_force_length(w)


def elements(n):
    vec = st.lists(st.integers(-3, 3), min_size=n - 1, max_size=n - 1).map(lambda v: tuple(v) + (-sum(v),))
    return st.builds(WeylElement, st.permutations(range(1, n + 1)).map(tuple), vec)


@given(st.sampled_from([2, 3, 4]).flatmap(elements))
def test_reduced_word_recomposes(w):
    word = reduced_word(w)
    assert len(word) == weyl_length(w)
    assert word_element(w.n, word) == w


@given(st.sampled_from([2, 3, 4]).flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_group_laws(ws):
    a, b, c = ws
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, a.inverse()).is_identity()
    g = AffineRoot(1, 2, 1)
    assert weyl_apply(compose(a, b), g) == weyl_apply(a, weyl_apply(b, g))
    assert weyl_length(a) == weyl_length(a.inverse())


@given(st.sampled_from([2, 3, 4]).flatmap(lambda n: st.tuples(elements(n), st.integers(0, n - 1))))
def test_length_changes_by_one_under_simple_reflection(arg):
    w, k = arg
    diff = weyl_length(compose(simple_reflection(w.n, k), w)) - weyl_length(w)
    assert abs(diff) == 1
