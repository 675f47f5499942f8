"""Exhaustive recognition by ordering search, AT-freeness and a perfection oracle."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .graph import Graph, augmented
from .kernels import codes
from .orderings import (
    check_proper_maxtol_ordering,
    is_mptg_ordering,
    is_proper_mptg_ordering,
)

DEFAULT_SEARCH_BOUND = 11
DEFAULT_PERFECT_BOUND = 10


class SizeBoundError(ValueError):
    """The graph is larger than the exhaustive search is allowed to handle."""

    def __init__(self, n: int, bound: int, what: str):
        super().__init__(f"{what} refuses graphs with more than {bound} vertices (got {n})")
        self.n = n
        self.bound = bound


@dataclass(frozen=True)
class RecognitionResult:
    member: bool
    ordering: tuple[int, ...] | None
    nodes: int = 0
    prunes: int = 0
    # set when membership only means a necessary condition is satisfiable
    necessary_only: bool = False

    @property
    def verdict(self) -> str:
        return "member" if self.member else "non-member"


_REPLAY = {
    codes.MPTG: is_mptg_ordering,
    codes.PROPER_MPTG: is_proper_mptg_ordering,
    codes.PROPER_MAXTOL: lambda a: check_proper_maxtol_ordering(a) is None,
}


def _search(g: Graph, code: int, bound: int, workers: int, what: str) -> RecognitionResult:
    if g.n > bound:
        raise SizeBoundError(g.n, bound, what)
    a = g.adj
    if workers <= 1 or g.n < 2:
        found, perm, nodes, prunes = kernels.search(a, code)
    else:
        # split by first vertex; the least successful branch wins
        def branch(v):
            return kernels.search(a, code, v, v + 1)

        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(branch, range(g.n)))
        nodes = sum(r[2] for r in results)
        prunes = sum(r[3] for r in results)
        hits = [r for r in results if r[0]]
        found = bool(hits)
        perm = hits[0][1] if hits else ()
    if not found:
        return RecognitionResult(False, None, nodes, prunes)
    perm = tuple(perm)
    assert _REPLAY[code](augmented(g, perm)), "search returned an ordering that does not replay"
    return RecognitionResult(True, perm, nodes, prunes)


def find_mptg_ordering(g: Graph, bound: int = DEFAULT_SEARCH_BOUND, workers: int = 1) -> RecognitionResult:
    return _search(g, codes.MPTG, bound, workers, "MPTG search")


def find_proper_mptg_ordering(g: Graph, bound: int = DEFAULT_SEARCH_BOUND,
                              workers: int = 1) -> RecognitionResult:
    return _search(g, codes.PROPER_MPTG, bound, workers, "proper MPTG search")


def find_proper_maxtol_ordering(g: Graph, bound: int = DEFAULT_SEARCH_BOUND,
                                workers: int = 1) -> RecognitionResult:
    res = _search(g, codes.PROPER_MAXTOL, bound, workers, "proper max-tolerance condition search")
    return RecognitionResult(res.member, res.ordering, res.nodes, res.prunes, necessary_only=True)


def _component_of(g: Graph, start: int, allowed: int) -> int:
    """Bit mask of the component of ``start`` inside the vertex set ``allowed``."""
    seen = 1 << start
    frontier = seen
    masks = g.masks
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_at_free(g: Graph) -> tuple[int, int, int] | None:
    """``None`` if ``g`` has no asteroidal triple, else the least one found.

    Checked straight from the definition: an independent triple where each
    pair lies in one component of the graph minus the closed neighbourhood
    of the third vertex.
    """
    n = g.n
    full = (1 << n) - 1
    masks = g.masks
    # comp[w][u]: component of u avoiding N[w]
    comp: dict[tuple[int, int], int] = {}

    def joined(u, v, w):
        key = (w, u)
        if key not in comp:
            allowed = full & ~(masks[w] | (1 << w))
            comp[key] = _component_of(g, u, allowed)
        return bool(comp[key] >> v & 1)

    for u, v, w in combinations(range(n), 3):
        if masks[u] >> v & 1 or masks[u] >> w & 1 or masks[v] >> w & 1:
            continue
        if joined(u, v, w) and joined(u, w, v) and joined(v, w, u):
            return (u, v, w)
    return None


def is_perfect_bruteforce(g: Graph, bound: int = DEFAULT_PERFECT_BOUND) -> tuple[int, ...] | None:
    """``None`` if every induced subgraph has chromatic number equal to clique number.

    Otherwise returns the vertex set of a smallest imperfect induced
    subgraph (ties broken by least bit mask).  Both numbers are exact, from a
    dynamic programme over all vertex subsets.
    """
    if g.n > bound:
        raise SizeBoundError(g.n, bound, "perfection check")
    if g.n == 0:
        return None
    omega, chi = kernels.subset_omega_chi(g.masks)
    bad = [s for s in range(1, 1 << g.n) if chi[s] != omega[s]]
    if not bad:
        return None
    s = min(bad, key=lambda s: (bin(s).count("1"), s))
    return tuple(v for v in range(g.n) if s >> v & 1)


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    omega, _ = kernels.subset_omega_chi(g.masks)
    return int(omega[-1])


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    _, chi = kernels.subset_omega_chi(g.masks)
    return int(chi[-1])
