import json
import random

import pytest

from skewlin.field import make_instance
from skewlin.verify import SUITES, run_verify, suite_tits

F5 = make_instance("F5")
F9 = make_instance("F9:frob^1")


@pytest.mark.parametrize("suite", SUITES)
def test_every_suite_passes_small(suite):
    ok, reports = run_verify(suite, make_instance("F25:frob^1"), samples=5, seed=3)
    assert ok, reports[0]["first_counterexample"]
    assert reports[0]["first_counterexample"] is None


def test_constants_suite_fails_cleanly_without_constants():
    ok, reports = run_verify("constants", make_instance("F3"), samples=5)
    assert not ok
    assert reports[0]["first_counterexample"]["check"] == "constants_found"


def test_reports_are_deterministic():
    a = json.dumps(run_verify("relations", F5, 3, 20, seed=11))
    b = json.dumps(run_verify("relations", F5, 3, 20, seed=11))
    assert a == b
    bad = [json.dumps(run_verify("freeproduct", F9, samples=10, seed=s, corrupt=True)) for s in (1, 1, 2)]
    assert bad[0] == bad[1] != bad[2]


def test_rank_restriction_skips_rows():
    ok, reports = run_verify("relations", F5, 3, 5)
    assert ok
    assert "skipped" in reports[0]["checks"]["R3/orth"]


def test_t2_witness_reported():
    rep = suite_tits(F5, 2, samples=3, rng=random.Random(0))
    assert rep["ok"] and rep["checks"]["T2/n=2"]["pass"] == 2


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_verify("nope", F5)
