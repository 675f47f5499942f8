"""Graphs induced by representations, and checks against a target graph.

All comparisons are exact and non-strict: intervals are closed, and a
max-tolerance edge needs ``|I_u & I_v| >= max(t_u, t_v)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph
from .reps import IntervalPointRep, Representation, ToleranceRep, fmt

MPTG = "mptg"
MAXTOL = "maxtol"


def induced_mptg(rep: IntervalPointRep) -> Graph:
    a, b, p = rep.a, rep.b, rep.p
    edges = [
        (u, v) for u, v in combinations(range(rep.n), 2)
        if a[u] <= p[v] <= b[u] and a[v] <= p[u] <= b[v]
    ]
    return Graph(rep.n, edges)


def overlap(lo1: Fraction, hi1: Fraction, lo2: Fraction, hi2: Fraction) -> Fraction:
    """Length of the intersection of two closed intervals (0 if disjoint)."""
    return max(Fraction(0), min(hi1, hi2) - max(lo1, lo2))


def induced_maxtol(rep: ToleranceRep) -> Graph:
    oversized = rep.oversized_tolerances()
    if oversized:
        warnings.warn(
            f"tolerance exceeds interval length for vertices {[v + 1 for v in oversized]}; "
            "they are isolated", stacklevel=2)
    a, b, t = rep.a, rep.b, rep.t
    edges = [
        (u, v) for u, v in combinations(range(rep.n), 2)
        if overlap(a[u], b[u], a[v], b[v]) >= max(t[u], t[v])
    ]
    return Graph(rep.n, edges)


def induced_graph(rep: Representation) -> Graph:
    if isinstance(rep, ToleranceRep):
        return induced_maxtol(rep)
    return induced_mptg(rep)


def is_proper(rep: Representation) -> tuple[int, int] | None:
    """``None`` if no interval strictly contains another, else ``(inner, outer)``.

    Equal intervals do not count as containment.
    """
    a, b = rep.a, rep.b
    for u in range(rep.n):
        for v in range(rep.n):
            if u == v:
                continue
            if a[v] <= a[u] and b[u] <= b[v] and (a[u], b[u]) != (a[v], b[v]):
                return (u, v)
    return None


def is_unit(rep: Representation) -> tuple[int, Fraction, Fraction] | None:
    """``None`` if all intervals have the same length.

    Otherwise ``(v, expected, got)`` for the first vertex whose length
    differs from vertex 0's.
    """
    lengths = rep.lengths()
    for v, L in enumerate(lengths):
        if L != lengths[0]:
            return (v, lengths[0], L)
    return None


@dataclass(frozen=True)
class Mismatch:
    u: int
    v: int
    expected: bool
    got: bool

    def __str__(self) -> str:
        want = "edge" if self.expected else "non-edge"
        got = "edge" if self.got else "non-edge"
        return f"{self.u + 1}-{self.v + 1}: expected {want}, representation gives {got}"


def certify(rep: Representation, g: Graph) -> list[Mismatch]:
    """Pairs whose adjacency differs between ``g`` and the induced graph.

    An empty list means the representation realises ``g`` exactly.
    """
    if rep.n != g.n:
        raise ValueError(f"representation has {rep.n} vertices, graph has {g.n}")
    h = induced_graph(rep)
    diff = h.adj ^ g.adj
    return [
        Mismatch(u, v, g.has_edge(u, v), h.has_edge(u, v))
        for u, v in combinations(range(g.n), 2) if diff[u, v]
    ]


def describe_rep(rep: Representation) -> str:
    third = rep.p if isinstance(rep, IntervalPointRep) else rep.t
    label = "p" if isinstance(rep, IntervalPointRep) else "t"
    return "\n".join(
        f"v{v + 1}: [{fmt(lo)}, {fmt(hi)}] {label}={fmt(x)}"
        for v, (lo, hi, x) in enumerate(zip(rep.a, rep.b, third))
    )
