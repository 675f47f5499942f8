"""Exact-rational representation types and their JSON documents.

Interval-point document::

    {"vertices": [{"id": 1, "a": "13/2", "b": "21", "p": "18"}, ...]}

Tolerance documents replace ``"p"`` with ``"t"``.  ``id`` is the 1-based
vertex label; entries may appear in any order but ids must be exactly
``1..n``.  Coordinates are strings holding an integer, a decimal
(``"7.1"``) or a fraction (``"13/2"``); bare JSON numbers are accepted on
input.  Output always uses integers or reduced ``num/den`` strings, so
``dump(load(doc))`` is stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Number = Union[int, str, Fraction]


class RepresentationError(ValueError):
    pass


def q(x) -> Fraction:
    """Exact rational from an int, Fraction, or decimal/fraction string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise RepresentationError(f"not a number: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        # JSON floats: go through repr so 7.1 stays 71/10
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise RepresentationError(f"bad rational {x!r}") from None
    raise RepresentationError(f"not a number: {x!r}")


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class IntervalPointRep:
    """Closed interval ``[a[v], b[v]]`` and point ``p[v]`` for each vertex."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    p: tuple[Fraction, ...]

    def __post_init__(self):
        if not len(self.a) == len(self.b) == len(self.p):
            raise RepresentationError("a, b, p must have equal length")
        for v, (lo, hi, pt) in enumerate(zip(self.a, self.b, self.p)):
            if not lo <= pt <= hi:
                raise RepresentationError(
                    f"vertex {v + 1}: need a <= p <= b, got a={fmt(lo)} p={fmt(pt)} b={fmt(hi)}")

    @classmethod
    def build(cls, triples: Sequence[tuple[Number, Number, Number]]) -> "IntervalPointRep":
        """From ``(a, b, p)`` triples."""
        a, b, p = zip(*[(q(x), q(y), q(z)) for x, y, z in triples]) if triples else ((), (), ())
        return cls(tuple(a), tuple(b), tuple(p))

    @property
    def n(self) -> int:
        return len(self.a)

    def lengths(self) -> tuple[Fraction, ...]:
        return tuple(hi - lo for lo, hi in zip(self.a, self.b))

    def map(self, f) -> "IntervalPointRep":
        """Apply a coordinate map to every endpoint and point."""
        return IntervalPointRep(tuple(map(f, self.a)), tuple(map(f, self.b)), tuple(map(f, self.p)))

    def to_json(self) -> dict:
        return {"vertices": [
            {"id": v + 1, "a": fmt(lo), "b": fmt(hi), "p": fmt(pt)}
            for v, (lo, hi, pt) in enumerate(zip(self.a, self.b, self.p))
        ]}


@dataclass(frozen=True)
class ToleranceRep:
    """Interval ``[a[v], b[v]]`` with a > 0 tolerance ``t[v]``."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    t: tuple[Fraction, ...]

    def __post_init__(self):
        if not len(self.a) == len(self.b) == len(self.t):
            raise RepresentationError("a, b, t must have equal length")
        for v, (lo, hi, tol) in enumerate(zip(self.a, self.b, self.t)):
            if not lo < hi:
                raise RepresentationError(f"vertex {v + 1}: need a < b")
            if tol <= 0:
                raise RepresentationError(f"vertex {v + 1}: tolerance must be positive")

    @classmethod
    def build(cls, triples: Sequence[tuple[Number, Number, Number]]) -> "ToleranceRep":
        """From ``(a, b, t)`` triples."""
        a, b, t = zip(*[(q(x), q(y), q(z)) for x, y, z in triples]) if triples else ((), (), ())
        return cls(tuple(a), tuple(b), tuple(t))

    @property
    def n(self) -> int:
        return len(self.a)

    def lengths(self) -> tuple[Fraction, ...]:
        return tuple(hi - lo for lo, hi in zip(self.a, self.b))

    def oversized_tolerances(self) -> list[int]:
        """Vertices whose tolerance exceeds their interval length (isolated)."""
        return [v for v, (L, tol) in enumerate(zip(self.lengths(), self.t)) if tol > L]

    def to_json(self) -> dict:
        return {"vertices": [
            {"id": v + 1, "a": fmt(lo), "b": fmt(hi), "t": fmt(tol)}
            for v, (lo, hi, tol) in enumerate(zip(self.a, self.b, self.t))
        ]}


Representation = Union[IntervalPointRep, ToleranceRep]


def from_json(doc: dict) -> Representation:
    try:
        entries = doc["vertices"]
    except (KeyError, TypeError):
        raise RepresentationError("document needs a 'vertices' list") from None
    if not isinstance(entries, list):
        raise RepresentationError("'vertices' must be a list")
    if not entries:
        return IntervalPointRep((), (), ())
    kinds = {"p" in e for e in entries}
    if len(kinds) != 1:
        raise RepresentationError("mixed interval-point and tolerance entries")
    third = "p" if kinds.pop() else "t"
    rows = {}
    for e in entries:
        try:
            vid = int(e["id"])
            rows[vid] = (q(e["a"]), q(e["b"]), q(e[third]))
        except KeyError as exc:
            raise RepresentationError(f"entry {e!r} misses field {exc}") from None
    if sorted(rows) != list(range(1, len(entries) + 1)):
        raise RepresentationError("vertex ids must be exactly 1..n")
    triples = [rows[i] for i in range(1, len(entries) + 1)]
    return (IntervalPointRep if third == "p" else ToleranceRep).build(triples)


def dumps(rep: Representation) -> str:
    return json.dumps(rep.to_json(), indent=1)


def loads(text: str) -> Representation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepresentationError(f"invalid JSON: {exc}") from None
    return from_json(doc)


def read(path) -> Representation:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
