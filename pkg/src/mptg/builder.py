"""Representations from orderings.

The proper construction works on right endpoints first: two witness
relations on the matrix decide, for each pair of rows, whose interval ends
first.  The resulting total order fixes both the right-endpoint sequence
and, identically, the left-endpoint sequence; each endpoint is then dropped
into the gap between consecutive points dictated by the first or last one
of its row.  Numbering the merged sequence 1..3n gives an integer
representation with no nested intervals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .graph import AugmentedMatrix, Graph, augmented
from .orderings import Witness, is_mptg_ordering, proper_mptg_violation
from .reps import IntervalPointRep, q
from .verify import certify, is_proper

log = logging.getLogger(__name__)


class ContractError(ValueError):
    """A precondition of the construction does not hold."""


class NotProperOrderingError(ContractError):
    def __init__(self, witness: Witness):
        super().__init__(f"not a proper MPTG ordering: {witness.describe()}")
        self.witness = witness


class InconsistentOrderError(ValueError):
    """The right-endpoint relation is not a total order on this input.

    ``kind`` is ``"cycle"`` (``witness`` is a 3-cycle of positions),
    ``"sanity"`` (``witness`` is ``(i, j)``: a zero at ``(i, j)`` yet
    ``b_j`` placed first) or ``"sequence"`` (the merged sequence lost the
    endpoint orders).
    """

    def __init__(self, kind: str, witness: tuple[int, ...], message: str):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class InfeasibleWindowError(ValueError):
    def __init__(self, step: int, lower: Fraction, upper: Fraction):
        super().__init__(
            f"unit realisation: empty window at step {step}: ({lower}, {upper})")
        self.step = step


# ---------------------------------------------------------------------------
# endpoint relations
# ---------------------------------------------------------------------------


def _require_mptg(a: AugmentedMatrix) -> None:
    ok = a.__dict__.get("_mptg_ok")
    if ok is None:
        ok = a.__dict__["_mptg_ok"] = is_mptg_ordering(a)
    if not ok:
        raise ContractError("matrix ordering violates the 4-point condition")


def _matrix(a) -> AugmentedMatrix:
    return a if isinstance(a, AugmentedMatrix) else AugmentedMatrix(a)


def relation_R1(a, i: int, j: int) -> bool:
    """b_j R1 b_i: some column k > j has a zero in row j and a one in row i."""
    a = _matrix(a)
    if not 0 <= i < j < a.n:
        raise ContractError(f"need 0 <= i < j < n, got i={i}, j={j}")
    _require_mptg(a)
    A = a.a
    return bool(np.any(~A[j, j + 1:] & A[i, j + 1:]))


def relation_R2(a, i: int, j: int) -> bool:
    """b_j R2 b_i: some row k < i has a zero in column i and a one in column j."""
    a = _matrix(a)
    if not 0 <= i < j < a.n:
        raise ContractError(f"need 0 <= i < j < n, got i={i}, j={j}")
    _require_mptg(a)
    A = a.a
    return bool(np.any(~A[:i, i] & A[:i, j]))


R1 = "R1"
R2 = "R2"
R1R2 = "R1*R2"
DEFAULT = "default"


@dataclass(frozen=True)
class PrecedenceRelation:
    """Order on right endpoints: ``before[i, j]`` iff b_i precedes b_j.

    ``tags[(i, j)]`` (for i < j) lists every clause that put b_j first, or
    ``("default",)`` when none did.
    """

    before: np.ndarray
    tags: dict

    @property
    def n(self) -> int:
        return self.before.shape[0]

    def precedes(self, i: int, j: int) -> bool:
        return bool(self.before[i, j])

    def order(self) -> tuple[int, ...]:
        """Positions sorted by right endpoint (first = leftmost)."""
        preds = self.before.sum(axis=0)
        return tuple(int(v) for v in np.argsort(preds, kind="stable"))


def _relation_tables(A: np.ndarray):
    n = A.shape[0]
    r1 = np.zeros((n, n), dtype=np.bool_)
    r2 = np.zeros((n, n), dtype=np.bool_)
    for i in range(n):
        for j in range(i + 1, n):
            r1[i, j] = np.any(~A[j, j + 1:] & A[i, j + 1:])
            r2[i, j] = np.any(~A[:i, i] & A[:i, j])
    return r1, r2


def precedes(a) -> PrecedenceRelation:
    a = _matrix(a)
    _require_mptg(a)
    A = a.a
    n = a.n
    r1, r2 = _relation_tables(A)
    before = np.zeros((n, n), dtype=np.bool_)
    tags = {}
    for i in range(n):
        for j in range(i + 1, n):
            why = []
            if r1[i, j]:
                why.append(R1)
            if r2[i, j]:
                why.append(R2)
            # b_j R1 b_k and b_k R2 b_i with i < k < j
            if any(r1[k, j] and r2[i, k] for k in range(i + 1, j)):
                why.append(R1R2)
            if why:
                before[j, i] = True
            else:
                before[i, j] = True
                why.append(DEFAULT)
            tags[(i, j)] = tuple(why)

    for i in range(n):
        for j in range(i + 1, n):
            if not A[i, j] and before[j, i]:
                raise InconsistentOrderError(
                    "sanity", (i, j),
                    f"zero at ({i + 1}, {j + 1}) but b{j + 1} precedes b{i + 1} "
                    f"via {'/'.join(tags[(i, j)])}; not a proper MPTG ordering")

    B = before.astype(np.int64)
    broken = (B @ B > 0) & ~before
    np.fill_diagonal(broken, False)
    if broken.any():
        x, z = (int(v) for v in np.argwhere(broken)[0])
        y = int(np.flatnonzero(before[x] & before[:, z])[0])
        raise InconsistentOrderError(
            "cycle", (x, y, z),
            f"b{x + 1} < b{y + 1} < b{z + 1} < b{x + 1}: relation is not transitive")
    before.flags.writeable = False
    return PrecedenceRelation(before, tags)


# ---------------------------------------------------------------------------
# canonical sequence
# ---------------------------------------------------------------------------


class EndpointTag(NamedTuple):
    kind: str  # "A", "P" or "B"
    vertex: int  # sigma position

    def __str__(self) -> str:
        return f"{self.kind.lower()}{self.vertex + 1}"


@dataclass(frozen=True)
class CanonicalSequence:
    entries: tuple[EndpointTag, ...]
    right_order: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.right_order)
        if len(self.entries) != 3 * n or set(self.entries) != {
                EndpointTag(k, v) for k in "APB" for v in range(n)}:
            raise ValueError("sequence must hold one A, P and B tag per vertex")
        pos = self.positions()
        for v in range(n):
            if not pos[EndpointTag("A", v)] < pos[EndpointTag("P", v)] < pos[EndpointTag("B", v)]:
                raise InconsistentOrderError(
                    "sequence", (v,), f"a{v + 1} < p{v + 1} < b{v + 1} fails in the sequence")
        for kind in "AB":
            got = tuple(e.vertex for e in self.entries if e.kind == kind)
            if got != self.right_order:
                raise InconsistentOrderError(
                    "sequence", got, f"{kind.lower()}-endpoints out of the right-endpoint order")

    @property
    def n(self) -> int:
        return len(self.right_order)

    def positions(self) -> dict[EndpointTag, int]:
        return {e: k for k, e in enumerate(self.entries)}

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))


def canonical_sequence(a, prec: PrecedenceRelation | None = None) -> CanonicalSequence:
    """Merge left endpoints, points and right endpoints into one sequence.

    Points go in sigma order.  Left endpoints are placed from the last in
    the order backwards, each right before the point of the first one in
    its row, or in its successor's gap if that is further left.  Right
    endpoints mirror this from the front using the last one of each row.
    Several endpoints in one gap keep the order; right endpoints come
    before left ones.
    """
    a = _matrix(a)
    if prec is None:
        prec = precedes(a)
    n = a.n
    order = prec.order()
    first = [a.first_one(i) for i in range(n)]
    last = [a.last_one(i) for i in range(n)]

    # gap g = slot preceded by exactly g points
    gap_a = [0] * n
    gap_b = [0] * n
    if n:
        gap_a[order[-1]] = first[order[-1]]
        for k in range(n - 2, -1, -1):
            v, nxt = order[k], order[k + 1]
            gap_a[v] = min(gap_a[nxt], first[v])
        gap_b[order[0]] = last[order[0]] + 1
        for k in range(1, n):
            v, prv = order[k], order[k - 1]
            gap_b[v] = max(gap_b[prv], last[v] + 1)

    entries = []
    for g in range(n + 1):
        entries += [EndpointTag("B", v) for v in order if gap_b[v] == g]
        entries += [EndpointTag("A", v) for v in order if gap_a[v] == g]
        if g < n:
            entries.append(EndpointTag("P", g))
    return CanonicalSequence(tuple(entries), order, a.perm)


# ---------------------------------------------------------------------------
# realisations
# ---------------------------------------------------------------------------


def _to_rep(seq: CanonicalSequence, value: dict[EndpointTag, Fraction]) -> IntervalPointRep:
    n = seq.n
    a = [Fraction(0)] * n
    b = [Fraction(0)] * n
    p = [Fraction(0)] * n
    for tag, x in value.items():
        vertex = seq.perm[tag.vertex]
        {"A": a, "B": b, "P": p}[tag.kind][vertex] = x
    return IntervalPointRep(tuple(a), tuple(b), tuple(p))


def realize_integer(seq: CanonicalSequence) -> IntervalPointRep:
    """Number the sequence 1..3n; the result is indexed by graph vertex."""
    return _to_rep(seq, {tag: Fraction(k) for k, tag in enumerate(seq.entries, start=1)})


def realize_unit(seq: CanonicalSequence, length=1) -> IntervalPointRep:
    """Representation with every interval of length ``length``, same endpoint order.

    Left endpoints are assigned in sequence order; each lands at the middle
    of the open window left by earlier right endpoints that must precede it
    and those that must follow it.
    """
    length = q(length)
    if length <= 0:
        raise ValueError("unit length must be positive")
    pos = seq.positions()
    lefts = [e.vertex for e in seq.entries if e.kind == "A"]
    alpha: dict[int, Fraction] = {}
    for i, v in enumerate(lefts):
        if i == 0:
            alpha[v] = Fraction(0)
            continue
        here = pos[EndpointTag("A", v)]
        lows = [alpha[u] + length for u in lefts[:i] if pos[EndpointTag("B", u)] < here]
        highs = [alpha[u] + length for u in lefts[:i] if here < pos[EndpointTag("B", u)]]
        lower = max([alpha[lefts[i - 1]]] + lows)
        if highs:
            upper = min(highs)
            if lower >= upper:
                raise InfeasibleWindowError(i + 1, lower, upper)
            alpha[v] = (lower + upper) / 2
        else:
            alpha[v] = lower + length / 2

    value: dict[EndpointTag, Fraction] = {}
    for v, x in alpha.items():
        value[EndpointTag("A", v)] = x
        value[EndpointTag("B", v)] = x + length
    # points spread evenly over the run between their valued neighbours
    entries = seq.entries
    k = 0
    while k < len(entries):
        if entries[k].kind != "P":
            k += 1
            continue
        start = k
        while k < len(entries) and entries[k].kind == "P":
            k += 1
        lo = value[entries[start - 1]] if start > 0 else None
        hi = value[entries[k]] if k < len(entries) else None
        if lo is None:
            lo = hi - 1
        if hi is None:
            hi = lo + 1
        run = k - start
        for t in range(run):
            value[entries[start + t]] = lo + (hi - lo) * (t + 1) / (run + 1)

    ordered = [value[e] for e in entries]
    if any(x >= y for x, y in zip(ordered, ordered[1:])):
        raise InconsistentOrderError("sequence", (), "unit values do not follow the sequence")
    return _to_rep(seq, value)


def realize_mptg(a) -> IntervalPointRep:
    """MPTG representation straight from an ordering passing the 4-point condition.

    Vertex at position i gets point i + 1 and the interval spanning the
    first and last one of its row.  Nested intervals are allowed here.
    """
    a = _matrix(a)
    _require_mptg(a)
    n = a.n
    triples = [None] * n
    for i in range(n):
        triples[a.perm[i]] = (a.first_one(i) + 1, a.last_one(i) + 1, i + 1)
    return IntervalPointRep.build(triples)


def normalize_distinct_points(rep: IntervalPointRep) -> IntervalPointRep:
    """Make all points distinct without changing the induced graph.

    Sweeps shared point values left to right.  For a value x shared by
    points, with eps below the distance from x to the next point, left
    endpoint and right endpoint beyond x: the sharing points move to
    ``x + eps / (m - l + 2)`` (l-th of m), and right endpoints sitting at x
    move to ``x + eps``.  Left endpoints at x stay.
    """
    a, b, p = list(rep.a), list(rep.b), list(rep.p)
    n = rep.n
    while True:
        counts: dict[Fraction, list[int]] = {}
        for v in range(n):
            counts.setdefault(p[v], []).append(v)
        shared = sorted(x for x, vs in counts.items() if len(vs) > 1)
        if not shared:
            break
        x = shared[0]
        group = sorted(counts[x])
        ahead = [y for y in p + a + b if y > x]
        eps = (min(ahead) - x) / 2 if ahead else Fraction(1)
        m = len(group)
        for l, v in enumerate(group, start=1):
            p[v] = x + eps / (m - l + 2)
        for v in range(n):
            if b[v] == x:
                b[v] = x + eps
    return IntervalPointRep(tuple(a), tuple(b), tuple(p))


# ---------------------------------------------------------------------------
# pipeline
# ---------------------------------------------------------------------------


def build_proper_rep(g: Graph, perm: Sequence[int] | None = None,
                     unit_length=None) -> IntervalPointRep:
    """Proper (or unit, if ``unit_length`` is given) representation of ``g`` from ``perm``.

    Raises :class:`NotProperOrderingError` if ``perm`` is not a proper MPTG
    ordering.  The output is certified against ``g`` before returning.
    """
    a = augmented(g, perm)
    bad = proper_mptg_violation(a)
    if bad is not None:
        raise NotProperOrderingError(bad)
    seq = canonical_sequence(a, precedes(a))
    log.debug("canonical sequence: %s", seq)
    rep = realize_integer(seq) if unit_length is None else realize_unit(seq, unit_length)
    mism = certify(rep, g)
    if mism:
        raise AssertionError(f"construction failed to certify: {[str(x) for x in mism]}")
    if is_proper(rep) is not None:
        raise AssertionError("construction produced nested intervals")
    return rep
