"""Independent brute-force oracles written straight from the definitions.

Nothing here touches the package kernels; graphs are plain edge sets.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx


def edge_set(g) -> set[frozenset]:
    return {frozenset(e) for e in g.edges()}


def adj_fn(g, perm):
    """E(i, j) on sigma positions with a reflexive diagonal."""
    es = edge_set(g)
    return lambda i, j: i == j or frozenset((perm[i], perm[j])) in es


def four_point(g, perm) -> bool:
    E = adj_fn(g, perm)
    for x, u, v, y in itertools.combinations(range(g.n), 4):
        if E(x, v) and E(u, y) and not E(u, v):
            return False
    return True


def nonedge(g, perm) -> bool:
    E = adj_fn(g, perm)
    n = g.n
    for u, v in itertools.combinations(range(n), 2):
        if E(u, v):
            continue
        right_clear = all(not E(u, w) for w in range(v + 1, n))
        up_clear = all(not E(w, v) for w in range(u))
        if not (right_clear or up_clear):
            return False
    return True


def matrix_zero(g, perm) -> bool:
    E = adj_fn(g, perm)
    n = g.n
    for i in range(n):
        for j in range(i + 1, n):
            if E(i, j):
                continue
            right_open = not any(E(i, k) for k in range(j + 1, n))
            up_open = not any(E(k, j) for k in range(i))
            if not (right_open or up_open):
                return False
    return True


def three_point(g, perm) -> bool:
    E = adj_fn(g, perm)
    return all(not E(a, c) or E(a, b) or E(b, c)
               for a, b, c in itertools.combinations(range(g.n), 3))


def five_point_1(g, perm) -> bool:
    E = adj_fn(g, perm)
    for v1, v2, v3, v4, v5 in itertools.combinations(range(g.n), 5):
        if E(v1, v4) and E(v2, v5) and (E(v1, v2) or E(v4, v5)):
            if not (E(v1, v3) or E(v3, v5)):
                return False
    return True


def five_point_2(g, perm) -> bool:
    E = adj_fn(g, perm)
    for v1, v2, v3, v4, v5 in itertools.combinations(range(g.n), 5):
        if E(v1, v3) and E(v3, v5) and not (E(v1, v2) or E(v2, v4) or E(v4, v5)):
            return False
    return True


def six_point(g, perm) -> bool:
    E = adj_fn(g, perm)
    n = g.n
    for v1, v2, v5, v6 in itertools.combinations(range(n), 4):
        mids = range(v2 + 1, v5)
        for j, k in itertools.permutations(mids, 2):
            if E(v1, j) and E(j, v5) and E(v2, k) and E(k, v6):
                if not (E(v1, v2) or E(v2, v5) or E(v5, v6)):
                    return False
    return True


def proper_maxtol_cond(g, perm) -> bool:
    E = adj_fn(g, perm)
    for v1, v2, v3, v4 in itertools.combinations(range(g.n), 4):
        if E(v1, v3) and E(v2, v4):
            if not (E(v2, v3) and (E(v1, v2) or E(v3, v4))):
                return False
    return True


def proper_mptg_ordering(g, perm) -> bool:
    return (four_point(g, perm) and three_point(g, perm) and five_point_1(g, perm)
            and five_point_2(g, perm) and six_point(g, perm))


def exists_ordering(g, pred) -> tuple | None:
    for perm in itertools.permutations(range(g.n)):
        if pred(g, perm):
            return perm
    return None


def induced_mptg_edges(triples) -> set[frozenset]:
    """triples of (a, b, p) as Fractions; closed intervals."""
    out = set()
    for u, v in itertools.combinations(range(len(triples)), 2):
        au, bu, pu = triples[u]
        av, bv, pv = triples[v]
        lo, hi = max(au, av), min(bu, bv)
        if lo <= pu <= hi and lo <= pv <= hi:
            out.add(frozenset((u, v)))
    return out


def induced_maxtol_edges(triples) -> set[frozenset]:
    out = set()
    for u, v in itertools.combinations(range(len(triples)), 2):
        au, bu, tu = triples[u]
        av, bv, tv = triples[v]
        inter = min(bu, bv) - max(au, av)
        if inter < 0:
            inter = Fraction(0)
        if inter >= max(tu, tv):
            out.add(frozenset((u, v)))
    return out


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def asteroidal_triples(g) -> list[tuple[int, int, int]]:
    h = to_nx(g)
    found = []
    for t in itertools.combinations(range(g.n), 3):
        if any(h.has_edge(x, y) for x, y in itertools.combinations(t, 2)):
            continue
        ok = True
        for w in t:
            rest = [x for x in t if x != w]
            blocked = set(h[w]) | {w}
            sub = h.subgraph([x for x in h if x not in blocked])
            if not nx.has_path(sub, rest[0], rest[1]):
                ok = False
                break
        if ok:
            found.append(t)
    return found


def _colourable(h: nx.Graph, k: int) -> bool:
    nodes = sorted(h, key=lambda v: -h.degree(v))
    colour = {}

    def place(i):
        if i == len(nodes):
            return True
        v = nodes[i]
        used = {colour[u] for u in h[v] if u in colour}
        for c in range(k):
            if c not in used:
                colour[v] = c
                if place(i + 1):
                    return True
                del colour[v]
        return False

    return place(0)


def chromatic(h: nx.Graph) -> int:
    if h.number_of_nodes() == 0:
        return 0
    k = 1
    while not _colourable(h, k):
        k += 1
    return k


def clique(h: nx.Graph) -> int:
    if h.number_of_nodes() == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(h))


def is_perfect(g) -> bool:
    h = to_nx(g)
    for r in range(1, g.n + 1):
        for vs in itertools.combinations(range(g.n), r):
            s = h.subgraph(vs)
            if chromatic(s) != clique(s):
                return False
    return True
