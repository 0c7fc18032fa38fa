"""Acceptance criteria 1-9 at full size.

Each criterion prints one ``CRITERION k: PASS|FAIL`` line (also repeated in
the pytest terminal summary).  Run standalone with
``python tests/test_acceptance.py`` or through pytest.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from skewlin.field import make_instance  # noqa: E402
from skewlin.k1 import k1_structure, k1_structure_oracle  # noqa: E402
from skewlin.steinberg import find_universality_constants  # noqa: E402
from skewlin.verify import (  # noqa: E402
    suite_constants,
    suite_decompositions,
    suite_freeproduct,
    suite_k1,
    suite_k2,
    suite_relations,
    suite_steinberg,
    suite_tits,
    suite_weyl,
)

RESULTS: dict[int, str] = {}
SEED = 20261018


def rng(tag):
    return random.Random(f"{SEED}:{tag}")


def _counts(reports):
    passes = sum(c["pass"] for r in reports for c in r["checks"].values())
    fails = sum(c["fail"] for r in reports for c in r["checks"].values())
    return passes, fails


def _first_failure(reports):
    for r in reports:
        if not r["ok"]:
            return f"{r['suite']} on {r['ring']}: {r['first_counterexample']}"
    return ""


def _finish(k, title, ok, detail, started):
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} - {title}: {detail} ({time.time() - started:.1f}s)"
    RESULTS[k] = line
    print(line, flush=True)
    return ok


def _per_row_minimum(report):
    return min(c["pass"] + c["fail"] for c in report["checks"].values() if "skipped" not in c)


# -- criteria ---------------------------------------------------------------------------------


def criterion_1():
    t0 = time.time()
    reports = []
    for spec in ("F5", "F7", "F9:frob^1", "F25:frob^1", "Q"):
        reports.append(suite_relations(make_instance(spec), None, 1000, rng(f"c1:{spec}")))
    p, f = _counts(reports)
    rows = sum(1 for r in reports for c in r["checks"].values() if "skipped" not in c)
    least = min(_per_row_minimum(r) for r in reports)
    ok = f == 0 and least >= 1000
    detail = f"{rows} case rows over 5 instances, >= {least} draws each, {p} passed, {f} failed {_first_failure(reports)}"
    return _finish(1, "relations R1-R6", ok, detail.strip(), t0)


def criterion_2():
    t0 = time.time()
    reports = []
    for spec in ("F5", "F9:frob^1", "F25:frob^1", "Q"):
        reports.append(suite_steinberg(make_instance(spec), None, 1000, rng(f"c2:{spec}"), rhat6_samples=140))
    p, f = _counts(reports)
    st = min(r["checks"][k]["pass"] + r["checks"][k]["fail"] for r in reports for k in ("ST1", "ST2", "ST2'"))
    rh = min(sum(v["pass"] + v["fail"] for k, v in r["checks"].items() if k.startswith("Rhat6")) for r in reports)
    ok = f == 0 and st >= 1000 and rh >= 100
    detail = f"ST1/ST2/ST2' >= {st} draws, Rhat6 >= {rh} draws per instance, {f} failures {_first_failure(reports)}"
    return _finish(2, "Steinberg consistency", ok, detail.strip(), t0)


def criterion_3():
    t0 = time.time()
    reports = []
    for spec, sign in (("F5", "+"), ("F5", "-"), ("F9:frob^1", "+")):
        reports.append(suite_tits(make_instance(spec), None, 500, rng(f"c3:{spec}{sign}"), max_len=4, sign=sign))
    p, f = _counts(reports)
    t2 = sum(r["checks"][f"T2/n={n}"]["pass"] for r in reports for n in (2, 3))
    t1_pairs = sum(r["checks"][f"T1/n={n}"]["pass"] for r in reports for n in (2, 3))
    ok = f == 0 and t2 == 3 * (2 + 3)
    detail = f"T2 witnesses {t2}/15, T1 pairs (s,w) passing {t1_pairs} with 500 samples each, {f} failures {_first_failure(reports)}"
    return _finish(3, "Tits axioms", ok, detail.strip(), t0)


def criterion_4():
    t0 = time.time()
    plan = (("F9:frob^1", 1000), ("F5", 200), ("Q", 100))
    reports = [suite_decompositions(make_instance(s), None, k, rng(f"c4:{s}")) for s, k in plan]
    p, f = _counts(reports)
    words = sum(r["checks"]["bruhat+/recompose"]["pass"] + r["checks"]["bruhat+/recompose"]["fail"] for r in reports) // 2
    ok = f == 0 and words >= 1000
    detail = f"{words} E-words (<= 20 letters), {p} checks passed, {f} failed {_first_failure(reports)}"
    return _finish(4, "decompositions", ok, detail.strip(), t0)


def criterion_5():
    t0 = time.time()
    reports = [suite_freeproduct(make_instance(s), 1000, rng(f"c5:{s}")) for s in ("F5", "F9:frob^1", "Q")]
    neg = suite_freeproduct(make_instance("F5"), 50, rng("c5:neg"), corrupt=True)
    p, f = _counts(reports)
    caught = neg["checks"]["degree_chain"]["fail"]
    ok = f == 0 and caught == 50
    detail = f"3 x 1000 alternating words, {p} checks passed, {f} failed; corrupted oracle caught {caught}/50 {_first_failure(reports)}"
    return _finish(5, "free product", ok, detail.strip(), t0)


def criterion_6():
    t0 = time.time()
    f9, f5 = make_instance("F9:frob^1"), make_instance("F5")
    s9, s5 = k1_structure(f9), k1_structure(f5)
    groups_ok = (
        s9["group"] == "Z x Z/2"
        and s5["group"] == "Z x Z/4"
        and s9 == k1_structure_oracle(f9)
        and s5 == k1_structure_oracle(f5)
    )
    reports = [suite_k1(R, None, 1000, rng(f"c6:{R}"), h1_samples=100) for R in (f9, f5)]
    p, f = _counts(reports)
    ok = groups_ok and f == 0
    detail = f"F9/frob {s9['group']}, F5 {s5['group']} (oracle agrees: {groups_ok}); {p} class/additivity/h1 checks passed, {f} failed {_first_failure(reports)}"
    return _finish(6, "K1", ok, detail.strip(), t0)


def criterion_7():
    t0 = time.time()
    reports = [suite_k2(make_instance(s), None, 100, rng(f"c7:{s}"), 1000) for s in ("F9:frob^1", "F25:frob^1", "F5")]
    p, f = _counts(reports)
    rejected = sum(r["checks"]["reject"]["pass"] for r in reports)
    accepted = min(r["checks"]["accept"]["pass"] for r in reports)
    ok = f == 0 and accepted >= 100 and rejected > 0
    detail = f">= {accepted} admissible lists per instance, {rejected} non-admissible lists rejected, {p} checks passed, {f} failed {_first_failure(reports)}"
    return _finish(7, "K2", ok, detail.strip(), t0)


def criterion_8():
    t0 = time.time()
    good = [suite_constants(make_instance(s), None, 1000, rng(f"c8:{s}")) for s in ("F5", "F7", "F25:frob^1")]
    p, f = _counts(good)
    hyp = all(r["constants"]["hypothesis_ok"] for r in good)
    f9 = find_universality_constants(make_instance("F9"))
    f9_ok = f9.found and not f9.hypothesis_ok
    fails = {s: find_universality_constants(make_instance(s)) for s in ("F2", "F3", "F4")}
    fail_ok = all(not c.found for c in fails.values())
    ok = f == 0 and hyp and f9_ok and fail_ok and p >= 3 * 1001
    detail = (
        f"F5/F7/F25 constants found with hypothesis, {p - 3} perfectness draws passed, {f} failed; "
        f"F9 found={f9.found} hypothesis_ok={f9.hypothesis_ok}; F2/F3/F4 fail={fail_ok}"
    )
    return _finish(8, "universality constants", ok, detail, t0)


def criterion_9():
    t0 = time.time()
    rep = suite_weyl(None, 10000, rng("c9"), bound=3)
    p, f = _counts([rep])
    sizes = {k: v["pass"] + v["fail"] for k, v in rep["checks"].items() if k.startswith("length")}
    ok = f == 0 and sizes.get("length/n=4", 0) >= 10000
    detail = f"elements checked {sizes}, {f} failures {_first_failure([rep])}"
    return _finish(9, "Weyl length and reduced words", ok, detail.strip(), t0)


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 10)}


@pytest.mark.slow
@pytest.mark.parametrize("k", list(CRITERIA))
def test_criterion(k):
    assert CRITERIA[k](), RESULTS[k]


if __name__ == "__main__":
    outcomes = [CRITERIA[k]() for k in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
