"""``mptg`` command line.

Graph and representation arguments are file paths, ``-`` for stdin, or
``fixture:<name>`` to use a built-in fixture.  Data goes to stdout,
diagnostics to stderr.  Vertex labels and orderings are 1-based on the
command line.

Exit codes: 0 pass/member, 1 fail/non-member/mismatch, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from dataclasses import asdict, dataclass, field

from . import kernels
from .builder import ContractError, InconsistentOrderError, InfeasibleWindowError, build_proper_rep
from .families import (
    fixtures,
    gen_caterpillar_proper_mptg,
    gen_Kmn_mptg,
    gen_Kn_proper_mptg,
    get_fixture,
)
from .graph import Graph, GraphFormatError, augmented, check_ordering, format_graph, parse_graph
from .orderings import CHECKERS
from .recognition import (
    DEFAULT_PERFECT_BOUND,
    DEFAULT_SEARCH_BOUND,
    SizeBoundError,
    find_mptg_ordering,
    find_proper_maxtol_ordering,
    find_proper_mptg_ordering,
    is_at_free,
    is_perfect_bruteforce,
)
from .reps import RepresentationError, ToleranceRep, dumps, loads
from .svg import render_svg
from .verify import certify, is_proper, is_unit

log = logging.getLogger("mptg")

MEMBER = "member"
NON_MEMBER = "non-member"
UNKNOWN = "unknown"


class UsageError(Exception):
    pass


def _one_based(vs) -> list[int]:
    return [int(v) + 1 for v in vs]


def _read_text(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    with open(src, encoding="utf-8") as fh:
        return fh.read()


def load_graph(src: str) -> Graph:
    if src.startswith("fixture:"):
        return get_fixture(src[len("fixture:"):]).graph
    return parse_graph(_read_text(src))


def load_rep(src: str):
    if src.startswith("fixture:"):
        return get_fixture(src[len("fixture:"):]).representation
    return loads(_read_text(src))


def parse_order(text: str | None, n: int) -> tuple[int, ...]:
    """``"2,1,3"`` (1-based, commas or spaces) to a 0-based ordering."""
    if text is None:
        return tuple(range(n))
    try:
        vals = [int(t) - 1 for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad ordering {text!r}") from None
    try:
        return check_ordering(vals, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


@dataclass
class ClassVerdict:
    verdict: str
    witness: object = None
    note: str = ""


@dataclass
class ClassificationReport:
    n: int
    classes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"n": self.n, "classes": {k: asdict(v) for k, v in self.classes.items()}}

    def to_text(self) -> str:
        lines = [f"graph on {self.n} vertices"]
        for name, v in self.classes.items():
            extra = ""
            if v.witness is not None:
                extra = f"  witness={v.witness}"
            if v.note:
                extra += f"  ({v.note})"
            lines.append(f"  {name:<24}{v.verdict}{extra}")
        return "\n".join(lines)


def _search_verdict(finder, g: Graph, bound: int) -> ClassVerdict:
    try:
        res = finder(g, bound=bound)
    except SizeBoundError as exc:
        return ClassVerdict(UNKNOWN, note=str(exc))
    if res.member:
        return ClassVerdict(MEMBER, {"ordering": _one_based(res.ordering)})
    return ClassVerdict(NON_MEMBER, note=f"no ordering among all {g.n}! ({res.nodes} nodes)")


def classify(g: Graph, bound: int = DEFAULT_SEARCH_BOUND,
             perfect_bound: int = DEFAULT_PERFECT_BOUND) -> ClassificationReport:
    rep = ClassificationReport(g.n)
    c = rep.classes
    c["mptg"] = _search_verdict(find_mptg_ordering, g, bound)
    c["proper-mptg"] = _search_verdict(find_proper_mptg_ordering, g, bound)
    pm = c["proper-mptg"]
    if pm.verdict == MEMBER:
        order = [v - 1 for v in pm.witness["ordering"]]
        unit = build_proper_rep(g, order, unit_length=1)
        c["unit-mptg"] = ClassVerdict(MEMBER, unit.to_json())
    else:
        c["unit-mptg"] = ClassVerdict(pm.verdict, note="coincides with proper-mptg")
    at = is_at_free(g)
    c["at-free"] = ClassVerdict(MEMBER) if at is None else ClassVerdict(
        NON_MEMBER, {"asteroidal_triple": _one_based(at)})
    if g.n > perfect_bound:
        c["perfect"] = ClassVerdict(UNKNOWN, note=f"more than {perfect_bound} vertices")
    else:
        bad = is_perfect_bruteforce(g, bound=perfect_bound)
        c["perfect"] = ClassVerdict(MEMBER) if bad is None else ClassVerdict(
            NON_MEMBER, {"imperfect_subgraph": _one_based(bad)})
    nec = _search_verdict(find_proper_maxtol_ordering, g, bound)
    if nec.verdict == MEMBER:
        nec.note = "necessary condition only"
    c["proper-maxtol-necessary"] = nec

    # containments the verdicts must respect
    if pm.verdict == MEMBER:
        assert c["mptg"].verdict == MEMBER
        assert c["at-free"].verdict == MEMBER
    return rep


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        print(text)


def cmd_classify(args) -> int:
    g = load_graph(args.graph)
    report = classify(g, args.bound, args.perfect_bound)
    _emit(args, report.to_json(), report.to_text())
    return 0


def cmd_recognize(args) -> int:
    g = load_graph(args.graph)
    cls = args.cls
    payload = {"class": cls}
    if cls in ("mptg", "proper-mptg", "proper-maxtol-cond"):
        finder = {"mptg": find_mptg_ordering, "proper-mptg": find_proper_mptg_ordering,
                  "proper-maxtol-cond": find_proper_maxtol_ordering}[cls]
        res = finder(g, bound=args.bound, workers=args.workers)
        member = res.member
        payload.update(ordering=_one_based(res.ordering) if member else None,
                       nodes=res.nodes, prunes=res.prunes)
        if cls == "proper-maxtol-cond":
            payload["necessary_only"] = True
        text = f"{cls}: {res.verdict}"
        if member:
            text += f"  ordering {' '.join(map(str, payload['ordering']))}"
        text += f"  [{res.nodes} nodes, {res.prunes} prunes]"
    elif cls == "at-free":
        at = is_at_free(g)
        member = at is None
        payload["asteroidal_triple"] = None if member else _one_based(at)
        text = "at-free: member" if member else f"at-free: non-member  triple {_one_based(at)}"
    else:
        bad = is_perfect_bruteforce(g, bound=args.perfect_bound)
        member = bad is None
        payload["imperfect_subgraph"] = None if member else _one_based(bad)
        text = "perfect: member" if member else f"perfect: non-member  subgraph {_one_based(bad)}"
    payload["verdict"] = MEMBER if member else NON_MEMBER
    _emit(args, payload, text)
    return 0 if member else 1


def cmd_check_ordering(args) -> int:
    g = load_graph(args.graph)
    order = parse_order(args.order, g.n)
    a = augmented(g, order)
    w = CHECKERS[args.condition](a)
    payload = {"condition": args.condition, "ordering": _one_based(order), "pass": w is None}
    if w is None:
        text = f"{args.condition}: pass"
    else:
        payload["witness"] = {
            "condition": w.condition,
            "positions": _one_based(w.positions),
            "vertices": _one_based(w.vertices(a)),
            "cells": [[r + 1, c + 1, int(v)] for (r, c), v in w.cells],
        }
        text = f"{args.condition}: fail  {w.describe()}  vertices {_one_based(w.vertices(a))}"
    _emit(args, payload, text)
    return 0 if w is None else 1


def cmd_build(args) -> int:
    g = load_graph(args.graph)
    if args.search:
        res = find_proper_mptg_ordering(g, bound=args.bound)
        if not res.member:
            print("error: graph has no proper MPTG ordering", file=sys.stderr)
            return 1
        order = res.ordering
    else:
        order = parse_order(args.order, g.n)
    length = args.length if args.length is not None else ("1" if args.unit else None)
    try:
        rep = build_proper_rep(g, order, unit_length=length)
    except (ContractError, InconsistentOrderError, InfeasibleWindowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    log.info("ordering %s certified", _one_based(order))
    print(dumps(rep))
    return 0


def cmd_verify(args) -> int:
    rep = load_rep(args.rep)
    g = load_graph(args.graph)
    kind = "maxtol" if isinstance(rep, ToleranceRep) else "mptg"
    if args.semantics and args.semantics != kind:
        raise UsageError(f"representation is a {kind} document, not {args.semantics}")
    mism = certify(rep, g)
    prop = is_proper(rep)
    unit = is_unit(rep)
    payload = {
        "semantics": kind,
        "pass": not mism,
        "mismatches": [{"u": m.u + 1, "v": m.v + 1, "expected": m.expected, "got": m.got}
                       for m in mism],
        "proper": prop is None,
        "containment": None if prop is None else {"inner": prop[0] + 1, "outer": prop[1] + 1},
        "unit": unit is None,
    }
    lines = [f"{kind}: {'pass' if not mism else 'mismatch'}"]
    lines += [f"  {m}" for m in mism]
    lines.append("proper: yes" if prop is None else f"proper: no (v{prop[0] + 1} inside v{prop[1] + 1})")
    lines.append("unit: yes" if unit is None else "unit: no")
    _emit(args, payload, "\n".join(lines))
    return 0 if not mism else 1


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "kn":
        if args.n is None:
            raise UsageError("--n is required for kn")
        rep = gen_Kn_proper_mptg(args.n)
    elif fam == "kmn":
        if args.m is None or args.n is None:
            raise UsageError("--m and --n are required for kmn")
        rep = gen_Kmn_mptg(args.m, args.n, args.eps)
    elif fam == "caterpillar":
        if not args.legs:
            raise UsageError("--legs is required for caterpillar")
        try:
            legs = [int(t) for t in args.legs.replace(",", " ").split()]
        except ValueError:
            raise UsageError(f"bad leg counts {args.legs!r}") from None
        rep = gen_caterpillar_proper_mptg(legs)
    elif fam.startswith("fixture:"):
        fx = get_fixture(fam[len("fixture:"):])
        if args.graph_out:
            with open(args.graph_out, "w", encoding="utf-8") as fh:
                fh.write(format_graph(fx.graph))
        rep = fx.representation
    else:
        raise UsageError(
            f"unknown family {fam!r}; use kn, kmn, caterpillar or fixture:<name> "
            f"({', '.join(fixtures())})")
    print(dumps(rep))
    return 0


def cmd_render(args) -> int:
    rep = load_rep(args.rep)
    svg = render_svg(rep, title=args.title)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND,
                        help="largest graph the ordering search accepts (default %(default)s)")
    common.add_argument("--perfect-bound", type=int, default=DEFAULT_PERFECT_BOUND,
                        help="largest graph the perfection check accepts (default %(default)s)")
    common.add_argument("--seed", type=int, default=None, help="seed for randomised helpers")
    common.add_argument("--backend", choices=("numba", "numpy"), default=None,
                        help="kernel backend (default: numba when installed)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="mptg", description="Max-point-tolerance graph toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="report every class verdict")
    s.add_argument("graph")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("recognize", parents=[common], help="decide one class")
    s.add_argument("graph")
    s.add_argument("--class", dest="cls", required=True,
                   choices=("mptg", "proper-mptg", "proper-maxtol-cond", "at-free", "perfect"))
    s.add_argument("--workers", type=int, default=1, help="threads for the ordering search")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("check-ordering", parents=[common], help="test one ordering condition")
    s.add_argument("graph")
    s.add_argument("--condition", required=True, choices=sorted(CHECKERS))
    s.add_argument("--order", help="1-based vertex ordering, e.g. '2,1,3' (default identity)")
    s.set_defaults(func=cmd_check_ordering)

    s = sub.add_parser("build-rep", parents=[common],
                       help="proper representation from a proper MPTG ordering")
    s.add_argument("graph")
    s.add_argument("--order", help="1-based vertex ordering (default identity)")
    s.add_argument("--search", action="store_true", help="use the least ordering found by search")
    s.add_argument("--unit", action="store_true", help="equal-length intervals")
    s.add_argument("--length", default=None, help="interval length for --unit (rational, default 1)")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify-rep", parents=[common], help="check a representation against a graph")
    s.add_argument("rep")
    s.add_argument("graph")
    s.add_argument("--semantics", choices=("mptg", "maxtol"), default=None)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", parents=[common], help="emit a generated representation")
    s.add_argument("--family", required=True, help="kn, kmn, caterpillar or fixture:<name>")
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--eps", default="1/2")
    s.add_argument("--legs", help="leg counts along the spine, e.g. '2,0,1'")
    s.add_argument("--graph-out", help="also write the fixture's graph here")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("render-svg", parents=[common], help="draw a representation")
    s.add_argument("rep")
    s.add_argument("-o", "--output")
    s.add_argument("--title")
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.seed is not None:
        random.seed(args.seed)
    if args.backend:
        try:
            kernels.set_backend(args.backend)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, RepresentationError, SizeBoundError,
            KeyError, OSError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
