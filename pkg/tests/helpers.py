from fractions import Fraction  # noqa: F401

from hypothesis import strategies as st

from skewlin.field import make_instance
from skewlin.laurent import SkewLaurent

RING_NAMES = ("F5", "F7", "F9:frob^1", "F25:frob^1", "Q")
RINGS = [make_instance(r) for r in RING_NAMES]


def scalars(ring, nonzero=False):
    if ring.kind == "rational":
        s = st.fractions(min_value=-5, max_value=5, max_denominator=4)
        return s.filter(bool) if nonzero else s
    return st.integers(1 if nonzero else 0, ring.order - 1)


def polys(ring, lo=-3, hi=3, max_terms=4, nonzero=False):
    terms = st.dictionaries(st.integers(lo, hi), scalars(ring, nonzero=True), min_size=1 if nonzero else 0, max_size=max_terms)
    return terms.map(lambda d: SkewLaurent(ring, d))


def units(ring, lo=-3, hi=3):
    return st.builds(lambda m, c: SkewLaurent(ring, {m: c}), st.integers(lo, hi), scalars(ring, nonzero=True))


def ring_and(draw_fn):
    """Strategy producing (ring, value) with value drawn from draw_fn(ring)."""
    return st.sampled_from(RINGS).flatmap(lambda R: st.tuples(st.just(R), draw_fn(R)))
