"""Graph value type, ordered augmented matrices and the edge-list format.

Edge-list grammar (one record per line)::

    n <count>          first non-comment line, count >= 0
    <u> <v>            one edge, 0 <= u, v < count, u != v

Blank lines and lines starting with ``#`` are ignored.  Duplicate edges
collapse; ``u v`` and ``v u`` denote the same edge.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Raised for malformed edge-list documents."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    The adjacency matrix is stored as a read-only boolean array; row bit
    masks are kept alongside for the set-based algorithms.  Equality is
    label sensitive.
    """

    __slots__ = ("n", "adj", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = np.zeros((n, n), dtype=np.bool_)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        self.n = n
        self.adj = _frozen(adj)

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        m = np.array(matrix, dtype=np.bool_)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(m, m.T):
            raise ValueError("adjacency matrix must be symmetric")
        np.fill_diagonal(m, False)
        g = cls.__new__(cls)
        g.n = m.shape[0]
        g.adj = _frozen(m)
        return g

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighbourhood of each vertex as an int bit mask."""
        return tuple(
            sum(1 << int(j) for j in np.flatnonzero(row)) for row in self.adj
        )

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, v in zip(*np.nonzero(np.triu(self.adj, 1))):
            yield int(u), int(v)

    @property
    def m(self) -> int:
        return int(np.count_nonzero(self.adj)) // 2

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.adj[v])]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self.adj).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


class AugmentedMatrix:
    """Adjacency matrix of a graph permuted by an ordering, diagonal forced to one.

    ``a[i, j]`` refers to sigma positions, so ``a[i, j]`` is true iff
    ``i == j`` or ``{perm[i], perm[j]}`` is an edge.
    """

    __slots__ = ("a", "perm", "__dict__")

    def __init__(self, a: np.ndarray, perm: Sequence[int] | None = None):
        a = np.array(a, dtype=np.bool_)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("augmented matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("augmented matrix must be symmetric")
        np.fill_diagonal(a, True)
        self.a = _frozen(a)
        self.perm = tuple(range(a.shape[0])) if perm is None else tuple(perm)

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @cached_property
    def u8(self) -> np.ndarray:
        """Contiguous uint8 copy handed to the kernels."""
        return np.ascontiguousarray(self.a, dtype=np.uint8)

    def graph(self) -> Graph:
        """The graph this matrix describes, labelled by sigma position."""
        return Graph.from_matrix(self.a)

    def first_one(self, i: int) -> int:
        return int(np.argmax(self.a[i]))

    def last_one(self, i: int) -> int:
        return self.n - 1 - int(np.argmax(self.a[i, ::-1]))

    def __getitem__(self, key):
        return self.a[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AugmentedMatrix):
            return NotImplemented
        return np.array_equal(self.a, other.a)

    def __hash__(self) -> int:
        return hash(np.packbits(self.a).tobytes())

    def __str__(self) -> str:
        return "\n".join(" ".join("1" if x else "0" for x in row) for row in self.a)


def check_ordering(perm: Sequence[int], n: int) -> tuple[int, ...]:
    perm = tuple(int(v) for v in perm)
    if len(perm) != n:
        raise ValueError(f"ordering has length {len(perm)}, graph has {n} vertices")
    if sorted(perm) != list(range(n)):
        raise ValueError(f"ordering {perm} is not a permutation of 0..{n - 1}")
    return perm


def augmented(g: Graph, perm: Sequence[int] | None = None) -> AugmentedMatrix:
    """A*(G) with rows and columns arranged by ``perm`` (identity if omitted)."""
    perm = tuple(range(g.n)) if perm is None else check_ordering(perm, g.n)
    idx = np.asarray(perm, dtype=np.intp)
    a = g.adj[np.ix_(idx, idx)].copy()
    np.fill_diagonal(a, True)
    return AugmentedMatrix(a, perm)


# ---------------------------------------------------------------------------
# edge-list I/O
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError(lineno, f"expected 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(lineno, f"bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise GraphFormatError(lineno, "vertex count must be non-negative")
            continue
        if len(parts) != 2:
            raise GraphFormatError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(lineno, f"non-integer vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(lineno, f"vertex index out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(lineno, f"self-loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError(1, "missing 'n <count>' header")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def make_complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts ``0..m-1`` and ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise ValueError("both parts need at least one vertex")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def make_wheel(n: int) -> Graph:
    """W_n: rim cycle on ``0..n-1`` plus centre ``n``."""
    if n < 3:
        raise ValueError("wheel needs n >= 3")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n + 1, rim + [(i, n) for i in range(n)])


def make_caterpillar(leg_counts: Sequence[int]) -> Graph:
    """Spine ``0..k-1``; the leaves of spine vertex i follow, in spine order."""
    k = len(leg_counts)
    if k < 1:
        raise ValueError("caterpillar needs a spine of at least one vertex")
    if any(c < 0 for c in leg_counts):
        raise ValueError("leg counts must be non-negative")
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, c in enumerate(leg_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def complement(g: Graph) -> Graph:
    m = ~g.adj
    np.fill_diagonal(m, False)
    return Graph.from_matrix(m)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled ``0..k-1`` in ascending order."""
    vs = sorted(set(int(v) for v in vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    idx = np.asarray(vs, dtype=np.intp)
    return Graph.from_matrix(g.adj[np.ix_(idx, idx)])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex i is vertex ``perm[i]`` of ``g``."""
    perm = check_ordering(perm, g.n)
    idx = np.asarray(perm, dtype=np.intp)
    return Graph.from_matrix(g.adj[np.ix_(idx, idx)])


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices, by edge bit pattern."""
    pairs = list(combinations(range(n), 2))
    iu = np.triu_indices(n, 1)
    for code in range(1 << len(pairs)):
        m = np.zeros((n, n), dtype=np.bool_)
        bits = np.array([(code >> k) & 1 for k in range(len(pairs))], dtype=np.bool_)
        m[iu] = bits
        m |= m.T
        g = Graph.__new__(Graph)
        g.n = n
        g.adj = _frozen(m)
        yield g
