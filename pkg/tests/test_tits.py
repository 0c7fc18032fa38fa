import random

import pytest

from skewlin.field import make_instance
from skewlin.tits import tits_axiom_check
from skewlin.weyl import WeylElement, elements_up_to_length, simple_reflection

F5 = make_instance("F5")
F9 = make_instance("F9:frob^1")


@pytest.mark.parametrize("sign", "+-")
@pytest.mark.parametrize("n", [2, 3])
def test_t2_witnesses(n, sign):
    for s in range(n):
        rep = tits_axiom_check("T2", F9, n, s, sign=sign)
        assert rep.ok
        assert not WeylElement(tuple(rep.witness["cell"]["perm"]), tuple(rep.witness["cell"]["trans"])).is_identity()


def test_t2_reports_reflection_cell():
    rep = tits_axiom_check("T2", F5, 2, 1)
    assert rep.witness["b"] == "x[1,2;0](1)"
    assert rep.witness["cell"] == simple_reflection(2, 1).as_dict()


def test_t1_identity_and_s():
    s = simple_reflection(2, 1)
    rep = tits_axiom_check("T1", F5, 2, 1, WeylElement.identity(2), samples=100, rng=random.Random(1))
    assert rep.ok and set(rep.cells) <= {str(WeylElement.identity(2)), str(s)}
    rep = tits_axiom_check("T1", F5, 2, 1, s, samples=100, rng=random.Random(2))
    assert rep.ok and set(rep.cells) <= {str(WeylElement.identity(2)), str(s)}


@pytest.mark.parametrize("sign", "+-")
def test_t1_small_ball(sign):
    rng = random.Random(3)
    for w in elements_up_to_length(3, 2):
        for s in range(3):
            assert tits_axiom_check("T1", F9, 3, s, w, samples=15, rng=rng, sign=sign).ok
