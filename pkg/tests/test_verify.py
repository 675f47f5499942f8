import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mptg.families import FIGURE5_PRINTED, figure5_graph, fixtures, g1_graph
from mptg.graph import Graph, complement, make_complete_bipartite, make_cycle, make_wheel
from mptg.reps import IntervalPointRep, ToleranceRep
from mptg.verify import (
    Mismatch,
    certify,
    describe_rep,
    induced_maxtol,
    induced_mptg,
    is_proper,
    is_unit,
    overlap,
)


def test_printed_column_induces_the_matrix():
    assert induced_mptg(FIGURE5_PRINTED) == figure5_graph()
    assert is_unit(FIGURE5_PRINTED) == (1, 12, 8)
    assert FIGURE5_PRINTED.lengths() == (12, 8, 13, 14, 12, 13, 10)
    # v2 = [2, 10] sits inside v1 = [1, 13]
    assert is_proper(FIGURE5_PRINTED) == (1, 0)


def test_w4_and_c6bar_point_reps():
    w4 = IntervalPointRep.build([(20, 120, 50), (10, 100, 70), (60, 150, 90),
                                 (40, 140, 110), (30, 130, 80)])
    assert induced_mptg(w4) == make_wheel(4)
    c6 = IntervalPointRep.build([(20, 40, 39), (15, 38, 30), (32, 46, 33),
                                 (25, 42, 27), (28, 44, 37), (10, 36, 34)])
    assert induced_mptg(c6) == complement(make_cycle(6))


def test_maxtol_examples():
    g1 = ToleranceRep.build([(10, 25, 5), (45, 53, 8), (65, 75, 10), (20, 40, 5),
                             (30, 70, 10), (45, 60, 8), (60, 80, 10)])
    assert induced_maxtol(g1) == g1_graph()
    assert overlap(g1.a[0], g1.b[0], g1.a[3], g1.b[3]) == 5
    # v6 and v7 touch at 60: zero overlap, no edge
    assert overlap(g1.a[5], g1.b[5], g1.a[6], g1.b[6]) == 0
    c5 = ToleranceRep.build([(1, 6, "0.25"), ("1.2", 8, "4.7"), (3, 10, "4.8"),
                             (5, 12, 4), ("5.5", 13, "0.35")])
    assert induced_maxtol(c5) == make_cycle(5)
    assert is_proper(c5) is None
    k23 = ToleranceRep.build([(-20, 0, 1), (0, 20, 1), (-2, 2, 1), (-6, 6, 5), (-20, 20, 19)])
    assert induced_maxtol(k23) == make_complete_bipartite(2, 3)


def test_c6bar_proper_maxtol():
    r = ToleranceRep.build([(2, 8, "2.9"), (4, 10, "4.5"), (1, "7.1", 1),
                            (5, 11, 3), (3, 9, "4.1"), ("5.2", 12, "1.5")])
    assert is_proper(r) is None
    assert induced_maxtol(r) == complement(make_cycle(6))
    assert r.b[2] == Fraction(71, 10)


def test_equal_intervals_are_proper():
    r = IntervalPointRep.build([(0, 2, 1), (0, 2, 2)])
    assert is_proper(r) is None
    assert is_unit(r) is None
    assert is_unit(IntervalPointRep.build([(0, 0, 0)])) is None


def test_oversized_tolerance_warns():
    r = ToleranceRep.build([(0, 1, 5), (0, 10, 1)])
    with pytest.warns(UserWarning):
        g = induced_maxtol(r)
    assert g.m == 0


def test_certify_lists_mismatches():
    rep = fixtures()["figure5"].representation
    assert certify(rep, figure5_graph()) == []
    mism = certify(rep, make_cycle(7))
    assert mism
    m = mism[0]
    assert isinstance(m, Mismatch) and m.expected != m.got
    assert "expected" in str(m)
    with pytest.raises(ValueError):
        certify(rep, make_cycle(5))


def test_describe_rep():
    text = describe_rep(fixtures()["c6bar_proper_maxtol"].representation)
    assert "v3: [1, 71/10] t=1" in text


coords = st.integers(min_value=-20, max_value=20)
point_reps = st.lists(st.tuples(coords, st.integers(0, 10), st.integers(0, 10)), min_size=1, max_size=7)


@settings(max_examples=150, deadline=None)
@given(point_reps, st.fractions(min_value=-5, max_value=5), st.integers(1, 9))
def test_mptg_translation_and_scaling(rows, shift, scale):
    rep = IntervalPointRep.build([(p - l, p + r, p) for p, l, r in rows])
    g = induced_mptg(rep)
    assert induced_mptg(rep.map(lambda x: x + shift)) == g
    assert induced_mptg(rep.map(lambda x: x * scale / 3)) == g
    triples = list(zip(rep.a, rep.b, rep.p))
    assert oracles.induced_mptg_edges(triples) == oracles.edge_set(g)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(coords, st.integers(1, 10), st.integers(1, 10)), min_size=1, max_size=7),
       st.fractions(min_value=-5, max_value=5), st.integers(1, 9))
def test_maxtol_translation_and_scaling(rows, shift, scale):
    rep = ToleranceRep.build([(a, a + L, min(t, L)) for a, L, t in rows])
    g = induced_maxtol(rep)
    moved = ToleranceRep(tuple(x + shift for x in rep.a), tuple(x + shift for x in rep.b), rep.t)
    assert induced_maxtol(moved) == g
    c = Fraction(scale, 4)
    scaled = ToleranceRep(tuple(x * c for x in rep.a), tuple(x * c for x in rep.b),
                          tuple(x * c for x in rep.t))
    assert induced_maxtol(scaled) == g
    assert oracles.induced_maxtol_edges(list(zip(rep.a, rep.b, rep.t))) == oracles.edge_set(g)


def test_unit_with_distinct_endpoints_is_proper():
    rng = random.Random(1)
    for _ in range(100):
        starts = rng.sample(range(50), 6)
        rep = IntervalPointRep.build([(s, s + 7, s + rng.randint(0, 7)) for s in starts])
        assert is_unit(rep) is None and is_proper(rep) is None
