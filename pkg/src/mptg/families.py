"""Explicit representations: parametrised generators and fixed numeric fixtures."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .graph import Graph, augmented, complement, make_complete_bipartite, make_cycle, make_wheel
from .reps import IntervalPointRep, Representation, ToleranceRep, q
from .verify import Mismatch, certify, is_proper

# class tags carried by fixtures
MPTG = "mptg"
PROPER_MPTG = "proper-mptg"
UNIT_MPTG = "unit-mptg"
MAXTOL = "maxtol"
PROPER_MAXTOL = "proper-maxtol"


def gen_Kn_proper_mptg(n: int) -> IntervalPointRep:
    """Containment-free representation of K_n."""
    if n < 1:
        raise ValueError("K_n needs n >= 1")
    triples = []
    for i in range(1, n + 1):
        lo = 1 + Fraction(i, n)
        p = {1: Fraction(2), 2: Fraction(5, 2)}.get(i, Fraction(i))
        triples.append((lo, Fraction(n + i), p))
    return IntervalPointRep.build(triples)


def gen_Kmn_mptg(m: int, n: int, eps=Fraction(1, 2)) -> IntervalPointRep:
    """K_{m,n}: parts ``0..m-1`` (x) and ``m..m+n-1`` (y); needs 0 < eps < 1."""
    if m < 1 or n < 1:
        raise ValueError("both parts need at least one vertex")
    eps = q(eps)
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie strictly between 0 and 1, got {eps}")
    xs = [(i, m + n + i * eps / m, i) for i in range(1, m + 1)]
    ys = [(j * eps / n, j + m, j + m) for j in range(1, n + 1)]
    return IntervalPointRep.build(xs + ys)


def gen_caterpillar_proper_mptg(leg_counts: Sequence[int]) -> IntervalPointRep:
    """Caterpillar numbered like :func:`mptg.graph.make_caterpillar`.

    Spine vertex i (1-based) gets ``[2i-3, 2i+2]`` with point ``2i``; its
    j-th of c leaves gets ``[2i-3-(c-j+1)/(c+1), 2i+2j/(2c+1)]`` with point
    ``2i+(2j-1)/(2c+1)``.
    """
    if len(leg_counts) < 1:
        raise ValueError("caterpillar needs a spine of at least one vertex")
    if any(c < 0 for c in leg_counts):
        raise ValueError("leg counts must be non-negative")
    spine = [(2 * i - 3, 2 * i + 2, 2 * i) for i in range(1, len(leg_counts) + 1)]
    leaves = []
    for i, c in enumerate(leg_counts, start=1):
        for j in range(1, c + 1):
            leaves.append((
                2 * i - 3 - Fraction(c - j + 1, c + 1),
                2 * i + Fraction(2 * j, 2 * c + 1),
                2 * i + Fraction(2 * j - 1, 2 * c + 1),
            ))
    return IntervalPointRep.build(spine + leaves)


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    representation: Representation
    tags: frozenset
    note: str = ""
    extra: Mapping = field(default_factory=lambda: MappingProxyType({}))

    def certify(self) -> list[Mismatch]:
        return certify(self.representation, self.graph)

    def is_proper(self):
        return is_proper(self.representation)


FIGURE5_ROWS = (
    "1101000",
    "1110000",
    "0111110",
    "1011111",
    "0011100",
    "0011010",
    "0001001",
)

FIGURE5_P1 = ("b2", "b1", "b5", "b6", "b4", "b3", "b7")

FIGURE5_SEQUENCE = tuple(
    "a2 a1 a5 a6 a4 p1 a3 p2 p3 b2 a7 p4 b1 p5 b5 p6 b6 p7 b4 b3 b7".split())

# value of every tag in the integer realisation: its 1-based place in the sequence
FIGURE5_TABLE = MappingProxyType({tag: k for k, tag in enumerate(FIGURE5_SEQUENCE, start=1)})

# the interval column printed beside the matrix; v2 lies inside v1 there
FIGURE5_PRINTED = IntervalPointRep.build([
    (1, 13, 6), (2, 10, 8), (7, 20, 9), (5, 19, 12),
    (3, 15, 14), (4, 17, 16), (11, 21, 18),
])

G1_EDGES = ((0, 3), (3, 4), (4, 5), (5, 1), (4, 6), (6, 2))


def figure5_graph() -> Graph:
    return Graph.from_matrix(np.array([[c == "1" for c in r] for r in FIGURE5_ROWS]))


def g1_graph() -> Graph:
    """Spider with three legs of length two; centre 4, feet 0, 1, 2."""
    return Graph(7, G1_EDGES)


def _figure5_rep() -> IntervalPointRep:
    t = FIGURE5_TABLE
    return IntervalPointRep.build([(t[f"a{v}"], t[f"b{v}"], t[f"p{v}"]) for v in range(1, 8)])


def _g1_mptg_rep() -> IntervalPointRep:
    # no coordinates are printed for this one; derive it from an ordering
    from .builder import realize_mptg
    from .recognition import find_mptg_ordering

    g = g1_graph()
    res = find_mptg_ordering(g)
    return realize_mptg(augmented(g, res.ordering))


def _raw_fixtures() -> list[Fixture]:
    proper_mptg = frozenset({MPTG, PROPER_MPTG, UNIT_MPTG})
    return [
        Fixture(
            "figure5", figure5_graph(), _figure5_rep(), proper_mptg,
            "integer realisation of the 7-vertex matrix, identity ordering",
            MappingProxyType({
                "sigma": tuple(range(7)),
                "rows": FIGURE5_ROWS,
                "P1": FIGURE5_P1,
                "P": FIGURE5_SEQUENCE,
                "table": FIGURE5_TABLE,
            })),
        Fixture(
            "w4_proper_mptg", make_wheel(4),
            IntervalPointRep.build([
                (20, 120, 50), (10, 100, 70), (60, 150, 90), (40, 140, 110), (30, 130, 80),
            ]),
            proper_mptg, "rim 0-1-2-3, centre 4"),
        Fixture(
            "c6bar_proper_mptg", complement(make_cycle(6)),
            IntervalPointRep.build([
                (20, 40, 39), (15, 38, 30), (32, 46, 33),
                (25, 42, 27), (28, 44, 37), (10, 36, 34),
            ]),
            proper_mptg),
        Fixture(
            "c5_proper_maxtol", make_cycle(5),
            ToleranceRep.build([
                (1, 6, "0.25"), ("1.2", 8, "4.7"), (3, 10, "4.8"),
                (5, 12, 4), ("5.5", 13, "0.35"),
            ]),
            frozenset({MAXTOL, PROPER_MAXTOL})),
        Fixture(
            "c6bar_proper_maxtol", complement(make_cycle(6)),
            ToleranceRep.build([
                (2, 8, "2.9"), (4, 10, "4.5"), (1, "7.1", 1),
                (5, 11, 3), (3, 9, "4.1"), ("5.2", 12, "1.5"),
            ]),
            frozenset({MAXTOL, PROPER_MAXTOL})),
        Fixture(
            "g1_maxtol", g1_graph(),
            ToleranceRep.build([
                (10, 25, 5), (45, 53, 8), (65, 75, 10), (20, 40, 5),
                (30, 70, 10), (45, 60, 8), (60, 80, 10),
            ]),
            frozenset({MAXTOL, MPTG}),
            "edge 1-4 holds with equality: overlap 5 equals both tolerances"),
        Fixture(
            "k23_maxtol", make_complete_bipartite(2, 3),
            ToleranceRep.build([
                (-20, 0, 1), (0, 20, 1), (-2, 2, 1), (-6, 6, 5), (-20, 20, 19),
            ]),
            frozenset({MAXTOL}),
            "parts {1, 2} and {3, 4, 5}; 1 and 2 touch with overlap 0"),
        # extras, not among the printed numeric witnesses
        Fixture(
            "figure5_printed", figure5_graph(), FIGURE5_PRINTED, frozenset({MPTG}),
            "interval column printed beside the matrix; nests v2 inside v1"),
        Fixture(
            "c4_proper_mptg", make_cycle(4),
            IntervalPointRep.build([
                (3, "6.4", 4), ("3.6", "6.8", 6), ("4.5", "7.8", "5.5"), ("2.2", "5.9", "5.2"),
            ]),
            proper_mptg, "coordinates read off the C4 drawing"),
        Fixture("g1_mptg", g1_graph(), _g1_mptg_rep(), frozenset({MPTG}),
                "derived from the least MPTG ordering"),
    ]


CORE_FIXTURES = (
    "figure5", "w4_proper_mptg", "c6bar_proper_mptg", "c5_proper_maxtol",
    "c6bar_proper_maxtol", "g1_maxtol", "k23_maxtol",
)


@lru_cache(maxsize=None)
def fixtures() -> Mapping[str, Fixture]:
    """All fixtures by name.  Each one is certified here, so loading fails loudly."""
    out = {}
    for fx in _raw_fixtures():
        bad = fx.certify()
        if bad:
            raise AssertionError(f"fixture {fx.name} does not certify: {[str(m) for m in bad]}")
        out[fx.name] = fx
    return MappingProxyType(out)


def get_fixture(name: str) -> Fixture:
    """Look up a fixture; hyphens and underscores are interchangeable."""
    key = name.strip().lower().replace("-", "_")
    table = fixtures()
    if key not in table:
        raise KeyError(f"unknown fixture {name!r}; have {', '.join(table)}")
    return table[key]
