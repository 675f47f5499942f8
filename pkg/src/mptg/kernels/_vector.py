"""Pure-numpy kernels: each condition is one broadcast boolean tensor.

Tuple axes are laid out in witness order, so the first set element of the
C-ordered tensor is the lexicographically least violating tuple.
"""

import numpy as np

from . import codes


class _Full:
    """Index algebra over the whole matrix: ``d`` free tuple positions."""

    def __init__(self, a, d):
        self.A = np.asarray(a, dtype=np.bool_)
        n = self.A.shape[0]
        self.d = d
        self.lt = np.less.outer(np.arange(n), np.arange(n))

    def _place(self, M, i, j, d):
        shape = [1] * d
        if i > j:
            M, i, j = M.T, j, i
        shape[i] = shape[j] = M.shape[0]
        return M.reshape(shape)

    def E(self, i, j):
        return self._place(self.A, i, j, self.d)

    def less(self, i, j):
        return self._place(self.lt, i, j, self.d)

    def neq(self, i, j):
        return ~self._place(np.eye(self.A.shape[0], dtype=np.bool_), i, j, self.d)


class _Tail(_Full):
    """Index algebra with the last tuple position pinned to the newest vertex."""

    def __init__(self, b, m, d):
        b = np.asarray(b, dtype=np.bool_)
        super().__init__(b[:m, :m], d - 1)
        self.col = b[:m, m]
        self.last = d - 1

    def _vec(self, i):
        shape = [1] * self.d
        shape[i] = self.col.shape[0]
        return self.col.reshape(shape)

    def E(self, i, j):
        if j == self.last:
            return self._vec(i)
        if i == self.last:
            return self._vec(j)
        return super().E(i, j)

    def less(self, i, j):
        if self.last in (i, j):
            return True
        return super().less(i, j)


def _chain(x, d):
    mask = True
    for i in range(d - 1):
        mask = mask & x.less(i, i + 1)
    return mask


def _three(x):
    return _chain(x, 3) & x.E(0, 2) & ~x.E(0, 1) & ~x.E(1, 2)


def _four(x):
    return _chain(x, 4) & x.E(0, 2) & x.E(1, 3) & ~x.E(1, 2)


def _five_1(x):
    return (_chain(x, 5) & x.E(0, 3) & x.E(1, 4) & (x.E(0, 1) | x.E(3, 4))
            & ~x.E(0, 2) & ~x.E(2, 4))


def _five_2(x):
    return (_chain(x, 5) & x.E(0, 2) & x.E(2, 4)
            & ~x.E(0, 1) & ~x.E(1, 3) & ~x.E(3, 4))


def _six(x):
    # axes: v1, v2, j, k, v5, v6 with v2 < j, k < v5 and j != k
    order = (x.less(0, 1) & x.less(1, 2) & x.less(1, 3) & x.less(2, 4)
             & x.less(3, 4) & x.less(4, 5) & x.neq(2, 3))
    return (order & x.E(0, 2) & x.E(2, 4) & x.E(1, 3) & x.E(3, 5)
            & ~x.E(0, 1) & ~x.E(1, 4) & ~x.E(4, 5))


def _proper_maxtol(x):
    return _chain(x, 4) & x.E(0, 2) & x.E(1, 3) & ~(x.E(1, 2) & (x.E(0, 1) | x.E(2, 3)))


_CONDITIONS = {
    codes.THREE_POINT: _three,
    codes.FOUR_POINT: _four,
    codes.FIVE_POINT_1: _five_1,
    codes.FIVE_POINT_2: _five_2,
    codes.SIX_POINT: _six,
    codes.PROPER_MAXTOL: _proper_maxtol,
}


def _first(code, a):
    d = codes.ARITY[code]
    n = np.asarray(a).shape[0]
    if n < d:
        return np.empty(0, dtype=np.int64)
    t = np.broadcast_to(_CONDITIONS[code](_Full(a, d)), (n,) * d)
    flat = np.flatnonzero(t)
    if flat.size == 0:
        return np.empty(0, dtype=np.int64)
    return np.array(np.unravel_index(flat[0], t.shape), dtype=np.int64)


def first_3point(a):
    return _first(codes.THREE_POINT, a)


def first_4point(a):
    return _first(codes.FOUR_POINT, a)


def first_5point_1(a):
    return _first(codes.FIVE_POINT_1, a)


def first_5point_2(a):
    return _first(codes.FIVE_POINT_2, a)


def first_6point(a):
    return _first(codes.SIX_POINT, a)


def first_proper_maxtol(a):
    return _first(codes.PROPER_MAXTOL, a)


def tail_ok(b, m, code):
    for flag in codes.ORDER:
        if not code & flag:
            continue
        d = codes.ARITY[flag]
        if m + 1 < d:
            continue
        if np.any(_CONDITIONS[flag](_Tail(b, m, d))):
            return False
    return True


def search(a, code, first_lo, first_hi):
    a = np.asarray(a, dtype=np.bool_)
    n = a.shape[0]
    perm = np.full(n, -1, dtype=np.int64)
    if n == 0:
        return True, perm, 0, 0
    b = np.zeros((n, n), dtype=np.bool_)
    used = np.zeros(n, dtype=np.bool_)
    stats = [0, 0]

    def extend(depth):
        lo, hi = (first_lo, first_hi) if depth == 0 else (0, n)
        for v in range(lo, hi):
            if used[v]:
                continue
            perm[depth] = v
            b[depth, :depth] = b[:depth, depth] = a[perm[:depth], v]
            b[depth, depth] = True
            stats[0] += 1
            if not tail_ok(b[: depth + 1, : depth + 1], depth, code):
                stats[1] += 1
                continue
            if depth == n - 1:
                return True
            used[v] = True
            if extend(depth + 1):
                return True
            used[v] = False
        perm[depth] = -1
        return False

    found = extend(0)
    return found, perm, stats[0], stats[1]


def subset_omega_chi(masks):
    masks = [int(x) for x in masks]
    n = len(masks)
    size = 1 << n
    omega = np.zeros(size, dtype=np.int64)
    chi = np.zeros(size, dtype=np.int64)
    indep = np.zeros(size, dtype=np.bool_)
    indep[0] = True
    low_index = {1 << v: v for v in range(n)}
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        nb = masks[low_index[low]]
        omega[s] = max(omega[rest], 1 + omega[rest & nb])
        indep[s] = indep[rest] and not rest & nb
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        best = n + 1
        sub = rest
        while True:
            ind = sub | low
            if indep[ind]:
                best = min(best, 1 + chi[s ^ ind])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return omega, chi
