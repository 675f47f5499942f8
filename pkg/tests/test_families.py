import itertools
from fractions import Fraction

import pytest

from mptg.families import (
    CORE_FIXTURES,
    PROPER_MPTG,
    fixtures,
    gen_caterpillar_proper_mptg,
    gen_Kmn_mptg,
    gen_Kn_proper_mptg,
    get_fixture,
)
from mptg.graph import make_caterpillar, make_complete, make_complete_bipartite
from mptg.verify import certify, induced_mptg, is_proper


def test_kn_examples():
    r = gen_Kn_proper_mptg(3)
    assert r.a == (Fraction(4, 3), Fraction(5, 3), 2)
    assert r.b == (4, 5, 6)
    assert r.p == (2, Fraction(5, 2), 3)
    assert induced_mptg(r) == make_complete(3) and is_proper(r) is None
    assert gen_Kn_proper_mptg(1).n == 1
    with pytest.raises(ValueError):
        gen_Kn_proper_mptg(0)


@pytest.mark.parametrize("n", range(1, 9))
def test_kn_certifies(n):
    r = gen_Kn_proper_mptg(n)
    assert not certify(r, make_complete(n)) and is_proper(r) is None


def test_kmn_example():
    r = gen_Kmn_mptg(2, 3)
    assert r.a == (1, 2, Fraction(1, 6), Fraction(1, 3), Fraction(1, 2))
    assert r.b == (Fraction(21, 4), Fraction(11, 2), 3, 4, 5)
    assert r.p == (1, 2, 3, 4, 5)
    assert induced_mptg(gen_Kmn_mptg(1, 1)) == make_complete_bipartite(1, 1)


@pytest.mark.parametrize("m, n", list(itertools.product(range(1, 6), repeat=2)))
def test_kmn_certifies(m, n):
    assert not certify(gen_Kmn_mptg(m, n, "1/2"), make_complete_bipartite(m, n))
    assert not certify(gen_Kmn_mptg(m, n, "0.9"), make_complete_bipartite(m, n))


@pytest.mark.parametrize("eps", [0, 1, "3/2", -1])
def test_kmn_eps_range(eps):
    with pytest.raises(ValueError):
        gen_Kmn_mptg(2, 2, eps)


def test_caterpillar_examples():
    r = gen_caterpillar_proper_mptg([0, 0])
    assert (r.a, r.b, r.p) == ((-1, 1), (4, 6), (2, 4))
    leaf = gen_caterpillar_proper_mptg([1])
    assert leaf.n == 2 and not certify(leaf, make_caterpillar([1]))
    assert not certify(gen_caterpillar_proper_mptg([2, 0, 1]), make_caterpillar([2, 0, 1]))
    with pytest.raises(ValueError):
        gen_caterpillar_proper_mptg([])


def test_caterpillar_profiles():
    count = 0
    for k in range(1, 5):
        for legs in itertools.product(range(5), repeat=k):
            if k + sum(legs) <= 8:
                r = gen_caterpillar_proper_mptg(legs)
                assert not certify(r, make_caterpillar(legs)), legs
                assert is_proper(r) is None, legs
                count += 1
    assert count >= 10


def test_fixtures_self_certify():
    fx = fixtures()
    for name in CORE_FIXTURES:
        assert name in fx
    for f in fx.values():
        assert f.certify() == []


def test_fixture_properties():
    fx = fixtures()
    assert fx["c5_proper_maxtol"].is_proper() is None
    assert fx["figure5"].is_proper() is None
    assert fx["figure5_printed"].is_proper() is not None
    for name, f in fx.items():
        if PROPER_MPTG in f.tags:
            assert f.is_proper() is None, name
    f5 = fx["figure5"].extra
    assert f5["P1"][0] == "b2" and len(f5["P"]) == 21 and f5["table"]["b7"] == 21


def test_fixture_lookup_aliases():
    assert get_fixture("g1-maxtol") is get_fixture("g1_maxtol")
    with pytest.raises(KeyError):
        get_fixture("nope")


def test_fixtures_are_immutable():
    with pytest.raises(TypeError):
        fixtures()["x"] = None
