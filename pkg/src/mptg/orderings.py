"""Vertex-ordering conditions on augmented adjacency matrices.

Every checker returns ``None`` when the ordered matrix satisfies the
condition and a :class:`Witness` otherwise.  Tuples are sigma positions
(0-based) and are the lexicographically least violating ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .graph import AugmentedMatrix
from .kernels import codes

FOUR_POINT = "4point"
NONEDGE = "nonedge"
MATRIX_ZERO = "matrix-zero"
THREE_POINT = "3point"
FIVE_POINT_1 = "5point-1"
FIVE_POINT_2 = "5point-2"
SIX_POINT = "6point"
PROPER_MAXTOL = "proper-maxtol"

_FLAG = {
    THREE_POINT: codes.THREE_POINT,
    FOUR_POINT: codes.FOUR_POINT,
    FIVE_POINT_1: codes.FIVE_POINT_1,
    FIVE_POINT_2: codes.FIVE_POINT_2,
    SIX_POINT: codes.SIX_POINT,
    PROPER_MAXTOL: codes.PROPER_MAXTOL,
}


@dataclass(frozen=True)
class Witness:
    """A violated condition.

    ``cells`` lists the matrix entries that make the violation, as
    ``((row, col), value)`` pairs over sigma positions.
    """

    condition: str
    positions: tuple[int, ...]
    cells: tuple[tuple[tuple[int, int], bool], ...] = field(default=())

    def vertices(self, a: AugmentedMatrix) -> tuple[int, ...]:
        """Graph labels of the offending positions."""
        return tuple(a.perm[i] for i in self.positions)

    def replays(self, a: AugmentedMatrix) -> bool:
        """True iff the stored cells still read as recorded in ``a``."""
        return bool(self.cells) and all(bool(a.a[r, c]) == v for (r, c), v in self.cells)

    def describe(self, one_based: bool = True) -> str:
        off = 1 if one_based else 0
        pos = ", ".join(str(p + off) for p in self.positions)
        return f"{self.condition} violated at positions ({pos})"


def _as_matrix(a) -> AugmentedMatrix:
    return a if isinstance(a, AugmentedMatrix) else AugmentedMatrix(a)


def _cells(a: np.ndarray, pairs_true, pairs_false):
    out = [((r, c), True) for r, c in pairs_true]
    out += [((r, c), False) for r, c in pairs_false]
    assert all(bool(a[r, c]) == v for (r, c), v in out)
    return tuple(out)


def _kernel_check(a, name: str) -> Witness | None:
    a = _as_matrix(a)
    t = kernels.first_violation(a.u8, _FLAG[name])
    if t is None:
        return None
    A = a.a
    if name == THREE_POINT:
        v1, v2, v3 = t
        cells = _cells(A, [(v1, v3)], [(v1, v2), (v2, v3)])
    elif name == FOUR_POINT:
        x, u, v, y = t
        cells = _cells(A, [(x, v), (u, y)], [(u, v)])
    elif name == FIVE_POINT_1:
        v1, v2, v3, v4, v5 = t
        side = (v1, v2) if A[v1, v2] else (v4, v5)
        cells = _cells(A, [(v1, v4), (v2, v5), side], [(v1, v3), (v3, v5)])
    elif name == FIVE_POINT_2:
        v1, v2, v3, v4, v5 = t
        cells = _cells(A, [(v1, v3), (v3, v5)], [(v1, v2), (v2, v4), (v4, v5)])
    elif name == SIX_POINT:
        v1, v2, j, k, v5, v6 = t
        cells = _cells(A, [(v1, j), (j, v5), (v2, k), (k, v6)],
                       [(v1, v2), (v2, v5), (v5, v6)])
    else:
        v1, v2, v3, v4 = t
        if not A[v2, v3]:
            cells = _cells(A, [(v1, v3), (v2, v4)], [(v2, v3)])
        else:
            cells = _cells(A, [(v1, v3), (v2, v4), (v2, v3)], [(v1, v2), (v3, v4)])
    return Witness(name, t, cells)


def check_4point(a) -> Witness | None:
    """x < u < v < y with xv, uy edges forces uv to be an edge."""
    return _kernel_check(a, FOUR_POINT)


def check_3point(a) -> Witness | None:
    return _kernel_check(a, THREE_POINT)


def check_5point_1(a) -> Witness | None:
    return _kernel_check(a, FIVE_POINT_1)


def check_5point_2(a) -> Witness | None:
    return _kernel_check(a, FIVE_POINT_2)


def check_6point(a) -> Witness | None:
    """Six positions v1 < v2 < {j, k} < v5 < v6 with j != k in either order."""
    return _kernel_check(a, SIX_POINT)


def check_proper_maxtol_ordering(a) -> Witness | None:
    """Necessary condition for proper max-tolerance graphs.

    Passing does not certify membership; failing for every ordering rules it
    out.
    """
    return _kernel_check(a, PROPER_MAXTOL)


def _zero_blockers(A: np.ndarray):
    """For every cell, the first one to its right and the first one above it."""
    n = A.shape[0]
    right = np.full((n, n), -1, dtype=np.int64)
    above = np.full((n, n), -1, dtype=np.int64)
    for j in range(n - 2, -1, -1):
        right[:, j] = np.where(A[:, j + 1], j + 1, right[:, j + 1])
    for i in range(1, n):
        above[i] = np.where(A[i - 1] & (above[i - 1] < 0), i - 1, above[i - 1])
    return right, above


def check_nonedge_condition(a) -> Witness | None:
    """uv not an edge (u < v) needs uw absent for all w > v or wv absent for all w < u.

    The witness is ``(u, v, w1, w2)`` with w1 > v adjacent to u and w2 < u
    adjacent to v, both the least such.
    """
    a = _as_matrix(a)
    A = a.a
    n = a.n
    right, _ = _zero_blockers(A)
    for u in range(n):
        for v in range(u + 1, n):
            if A[u, v] or right[u, v] < 0:
                continue
            above = np.flatnonzero(A[:u, v])
            if above.size:
                w1, w2 = int(right[u, v]), int(above[0])
                cells = _cells(A, [(u, w1), (w2, v)], [(u, v)])
                return Witness(NONEDGE, (u, v, w1, w2), cells)
    return None


def check_matrix_zero_condition(a) -> Witness | None:
    """Every zero above the diagonal must be right open or up open.

    The witness is the stuck zero ``(i, j)``; its cells also record the
    nearest one to the right and the nearest one above.
    """
    a = _as_matrix(a)
    A = a.a
    right, above = _zero_blockers(A)
    stuck = (~A) & (right >= 0) & (above >= 0)
    stuck = np.triu(stuck, 1)
    hits = np.argwhere(stuck)
    if not hits.size:
        return None
    i, j = (int(x) for x in hits[0])
    k_right, k_above = int(right[i, j]), int(above[i, j])
    cells = _cells(A, [(i, k_right), (k_above, j)], [(i, j)])
    return Witness(MATRIX_ZERO, (i, j), cells)


def is_mptg_ordering(a) -> bool:
    return check_4point(a) is None


_PROPER_CHECKS = (check_3point, check_4point, check_5point_2, check_5point_1, check_6point)


def proper_mptg_violation(a) -> Witness | None:
    """First failing condition among those defining a proper MPTG ordering."""
    a = _as_matrix(a)
    for check in _PROPER_CHECKS:
        w = check(a)
        if w is not None:
            return w
    return None


def is_proper_mptg_ordering(a) -> bool:
    return proper_mptg_violation(a) is None


CHECKERS = {
    FOUR_POINT: check_4point,
    NONEDGE: check_nonedge_condition,
    MATRIX_ZERO: check_matrix_zero_condition,
    THREE_POINT: check_3point,
    FIVE_POINT_1: check_5point_1,
    FIVE_POINT_2: check_5point_2,
    SIX_POINT: check_6point,
    PROPER_MAXTOL: check_proper_maxtol_ordering,
    "proper-mptg": proper_mptg_violation,
}
