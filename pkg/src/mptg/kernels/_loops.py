"""Loop kernels, compiled with numba when it is importable.

Every function here is plain Python over ``uint8`` matrices so it also runs
(slowly) uninterpreted; the dispatcher only selects this module when numba
compiled it.
"""

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


_jit = njit(cache=True, nogil=True)

# flags duplicated from codes.py: numba needs them as globals of this module
C3 = 1
C4 = 2
C51 = 4
C52 = 8
C6 = 16
CPM = 32


@_jit
def first_3point(a):
    n = a.shape[0]
    for v1 in range(n):
        for v2 in range(v1 + 1, n):
            if a[v1, v2]:
                continue
            for v3 in range(v2 + 1, n):
                if a[v1, v3] and not a[v2, v3]:
                    return np.array([v1, v2, v3], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


@_jit
def first_4point(a):
    n = a.shape[0]
    for x in range(n):
        for u in range(x + 1, n):
            for v in range(u + 1, n):
                if not a[x, v] or a[u, v]:
                    continue
                for y in range(v + 1, n):
                    if a[u, y]:
                        return np.array([x, u, v, y], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


@_jit
def first_5point_1(a):
    n = a.shape[0]
    for v1 in range(n):
        for v2 in range(v1 + 1, n):
            for v3 in range(v2 + 1, n):
                if a[v1, v3]:
                    continue
                for v4 in range(v3 + 1, n):
                    if not a[v1, v4]:
                        continue
                    for v5 in range(v4 + 1, n):
                        if (a[v2, v5] and not a[v3, v5]
                                and (a[v1, v2] or a[v4, v5])):
                            return np.array([v1, v2, v3, v4, v5], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


@_jit
def first_5point_2(a):
    n = a.shape[0]
    for v1 in range(n):
        for v2 in range(v1 + 1, n):
            if a[v1, v2]:
                continue
            for v3 in range(v2 + 1, n):
                if not a[v1, v3]:
                    continue
                for v4 in range(v3 + 1, n):
                    if a[v2, v4]:
                        continue
                    for v5 in range(v4 + 1, n):
                        if a[v3, v5] and not a[v4, v5]:
                            return np.array([v1, v2, v3, v4, v5], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


@_jit
def first_6point(a):
    n = a.shape[0]
    for v1 in range(n):
        for v2 in range(v1 + 1, n):
            if a[v1, v2]:
                continue
            for j in range(v2 + 1, n):
                if not a[v1, j]:
                    continue
                for k in range(v2 + 1, n):
                    if k == j or not a[v2, k]:
                        continue
                    for v5 in range(max(j, k) + 1, n):
                        if not a[j, v5] or a[v2, v5]:
                            continue
                        for v6 in range(v5 + 1, n):
                            if a[k, v6] and not a[v5, v6]:
                                return np.array([v1, v2, j, k, v5, v6], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


@_jit
def first_proper_maxtol(a):
    n = a.shape[0]
    for v1 in range(n):
        for v2 in range(v1 + 1, n):
            for v3 in range(v2 + 1, n):
                if not a[v1, v3]:
                    continue
                for v4 in range(v3 + 1, n):
                    if a[v2, v4] and not (a[v2, v3] and (a[v1, v2] or a[v3, v4])):
                        return np.array([v1, v2, v3, v4], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


# ---------------------------------------------------------------------------
# tail checks: only tuples whose last member is position m
# ---------------------------------------------------------------------------


@_jit
def _tail_3point(b, m):
    for v1 in range(m):
        if not b[v1, m]:
            continue
        for v2 in range(v1 + 1, m):
            if not b[v1, v2] and not b[v2, m]:
                return False
    return True


@_jit
def _tail_4point(b, m):
    for u in range(m):
        if not b[u, m]:
            continue
        for v in range(u + 1, m):
            if b[u, v]:
                continue
            for x in range(u):
                if b[x, v]:
                    return False
    return True


@_jit
def _tail_5point_1(b, m):
    for v2 in range(m):
        if not b[v2, m]:
            continue
        for v3 in range(v2 + 1, m):
            if b[v3, m]:
                continue
            for v4 in range(v3 + 1, m):
                for v1 in range(v2):
                    if (b[v1, v4] and not b[v1, v3]
                            and (b[v1, v2] or b[v4, m])):
                        return False
    return True


@_jit
def _tail_5point_2(b, m):
    for v4 in range(m):
        if b[v4, m]:
            continue
        for v3 in range(v4):
            if not b[v3, m]:
                continue
            for v2 in range(v3):
                if b[v2, v4]:
                    continue
                for v1 in range(v2):
                    if b[v1, v3] and not b[v1, v2]:
                        return False
    return True


@_jit
def _tail_6point(b, m):
    for v5 in range(m):
        if b[v5, m]:
            continue
        for k in range(v5):
            if not b[k, m]:
                continue
            for j in range(v5):
                if j == k or not b[j, v5]:
                    continue
                lo = min(j, k)
                for v2 in range(lo):
                    if b[v2, v5] or not b[v2, k]:
                        continue
                    for v1 in range(v2):
                        if b[v1, j] and not b[v1, v2]:
                            return False
    return True


@_jit
def _tail_proper_maxtol(b, m):
    for v2 in range(m):
        if not b[v2, m]:
            continue
        for v3 in range(v2 + 1, m):
            for v1 in range(v2):
                if b[v1, v3] and not (b[v2, v3] and (b[v1, v2] or b[v3, m])):
                    return False
    return True


@_jit
def tail_ok(b, m, code):
    if code & C3 and not _tail_3point(b, m):
        return False
    if code & C4 and not _tail_4point(b, m):
        return False
    if code & CPM and not _tail_proper_maxtol(b, m):
        return False
    if code & C52 and not _tail_5point_2(b, m):
        return False
    if code & C51 and not _tail_5point_1(b, m):
        return False
    if code & C6 and not _tail_6point(b, m):
        return False
    return True


@_jit
def search(a, code, first_lo, first_hi):
    """Depth-first search for an ordering of ``a``'s vertices passing ``code``.

    Vertices are tried in ascending label order, so the first ordering found
    is the lexicographically least valid one whose first vertex lies in
    ``[first_lo, first_hi)``.  Returns ``(found, perm, nodes, prunes)``.
    """
    n = a.shape[0]
    perm = np.full(n, -1, dtype=np.int64)
    if n == 0:
        return True, perm, 0, 0
    b = np.zeros((n, n), dtype=np.uint8)
    used = np.zeros(n, dtype=np.uint8)
    cand = np.zeros(n, dtype=np.int64)
    nodes = 0
    prunes = 0
    depth = 0
    cand[0] = first_lo
    while depth >= 0:
        hi = first_hi if depth == 0 else n
        placed = False
        while cand[depth] < hi:
            v = cand[depth]
            cand[depth] += 1
            if used[v]:
                continue
            perm[depth] = v
            for i in range(depth):
                b[i, depth] = a[perm[i], v]
                b[depth, i] = b[i, depth]
            b[depth, depth] = 1
            nodes += 1
            if tail_ok(b, depth, code):
                placed = True
                break
            prunes += 1
        if not placed:
            perm[depth] = -1
            depth -= 1
            if depth >= 0:
                used[perm[depth]] = 0
            continue
        used[perm[depth]] = 1
        if depth == n - 1:
            return True, perm, nodes, prunes
        depth += 1
        cand[depth] = 0
    return False, perm, nodes, prunes


# ---------------------------------------------------------------------------
# clique number / chromatic number of every vertex subset
# ---------------------------------------------------------------------------


@_jit
def subset_omega_chi(masks):
    """Clique and chromatic numbers of every induced subgraph, by subset DP.

    ``masks[v]`` is the open neighbourhood bit mask of v.  Index s of the
    returned arrays is the subgraph induced by the set bits of s.
    """
    n = masks.shape[0]
    size = 1 << n
    omega = np.zeros(size, dtype=np.int64)
    indep = np.zeros(size, dtype=np.uint8)
    chi = np.zeros(size, dtype=np.int64)
    indep[0] = 1
    for s in range(1, size):
        low = s & -s
        v = 0
        while (1 << v) != low:
            v += 1
        rest = s ^ low
        a = omega[rest]
        b = 1 + omega[rest & masks[v]]
        omega[s] = a if a > b else b
        indep[s] = 1 if indep[rest] and (rest & masks[v]) == 0 else 0
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        best = n + 1
        # independent sets I with low in I and I subset of s
        sub = rest
        while True:
            ind = sub | low
            if indep[ind]:
                c = 1 + chi[s ^ ind]
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return omega, chi
