"""Command-line interface: one subcommand per library operation.

Quandle arguments accept either a JSON file ({"order": m, "table": [[...]]})
or a constructor expression: "T m", "R m", or "P n (cycles)". Exit codes:
0 success, 1 domain error, 2 usage error. ``--json`` switches every
subcommand to machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cohomology as coh
from . import invariants, links, morphisms
from .limits import search_cap
from .quiver import cocycle_invariant, quiver as build_quiver, quiver_dot
from .permutations import parse_cycles
from .quandle import Quandle, dihedral, p_quandle, trivial


def load_quandle(source: str) -> Quandle:
    """A quandle from a JSON file path or a T/R/P constructor expression."""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return Quandle.from_json(fh.read())
    fields = source.split(None, 2)
    if not fields:
        raise ValueError("empty quandle argument")
    kind = fields[0].upper()
    if kind == "T" and len(fields) == 2:
        return trivial(int(fields[1]))
    if kind == "R" and len(fields) == 2:
        return dihedral(int(fields[1]))
    if kind == "P" and len(fields) >= 2:
        n = int(fields[1])
        cycles = fields[2] if len(fields) > 2 else "()"
        return p_quandle(n, parse_cycles(cycles, n))
    raise ValueError(f"not a file or constructor expression: {source!r}")


def load_diagram(path: str) -> links.LinkDiagram:
    with open(path, encoding="utf-8") as fh:
        return links.parse_diagram(fh.read())


def parse_cycles_0based(text: str, m: int) -> tuple:
    """Cycle notation over quandle elements 0..m-1 (0 is an ordinary point)."""
    shifted = "".join(str(int(tok) + 1) if tok.isdigit() else tok
                      for tok in _tokenize(text))
    perm = parse_cycles(shifted, m)
    return tuple(v - 1 for v in perm.image)


def format_cycles_0based(image) -> str:
    seen = set()
    parts = []
    for start in range(len(image)):
        if start in seen or image[start] == start:
            seen.add(start)
            continue
        cyc = [start]
        seen.add(start)
        nxt = image[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = image[nxt]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def _tokenize(text: str):
    token = ""
    for ch in text:
        if ch.isdigit():
            token += ch
        else:
            if token:
                yield token
                token = ""
            yield ch
    if token:
        yield token


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_show(args) -> int:
    q = load_quandle(args.quandle)
    _emit(args, {"order": q.m, "table": [list(r) for r in q.table]}, q.show())
    return 0


def _cmd_verify(args) -> int:
    q = load_quandle(args.quandle)
    _emit(args, {"ok": True, "order": q.m}, f"quandle: OK (order {q.m})")
    return 0


def _cmd_iso(args) -> int:
    x, y = load_quandle(args.x), load_quandle(args.y)
    f = morphisms.is_isomorphic(x, y, cap=search_cap())
    payload = {"isomorphic": f is not None,
               "map": list(f.image) if f else None}
    text = (f"isomorphic via {list(f.image)}" if f else "not isomorphic")
    _emit(args, payload, text)
    return 0


def _cmd_aut(args) -> int:
    q = load_quandle(args.quandle)
    maps, group = morphisms.automorphism_group(q, cap=search_cap())
    payload = {"order": group.order, "maps": [list(f.image) for f in maps]}
    lines = [f"|Aut| = {group.order}"]
    lines += [format_cycles_0based(f.image) for f in maps]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_inn(args) -> int:
    q = load_quandle(args.quandle)
    group = morphisms.inner_group(q)
    payload = {"order": group.order, "cyclic": group.is_cyclic(),
               "element_orders": sorted(group.element_orders())}
    _emit(args, payload,
          f"|Inn| = {group.order}, cyclic: {'yes' if group.is_cyclic() else 'no'}")
    return 0


def _cmd_homs(args) -> int:
    x, y = load_quandle(args.x), load_quandle(args.y)
    maps = morphisms.homs(x, y, cap=search_cap())
    payload = {"count": len(maps), "maps": [list(f.image) for f in maps]}
    lines = [f"{len(maps)} homomorphisms"]
    lines += [" ".join(map(str, f.image)) for f in maps]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_homquandle(args) -> int:
    x, a = load_quandle(args.x), load_quandle(args.a)
    hom_q, labels = morphisms.hom_quandle(x, a, cap=search_cap())
    payload = {"order": hom_q.m, "table": [list(r) for r in hom_q.table],
               "labels": [list(t) for t in labels]}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, sort_keys=True) + "\n")
        _emit(args, payload, f"Hom quandle of order {hom_q.m} written to {args.out}")
    else:
        _emit(args, payload, f"Hom quandle of order {hom_q.m}\n{hom_q.show()}")
    return 0


def _cmd_poly(args) -> int:
    q = load_quandle(args.quandle)
    poly = invariants.quandle_polynomial(q)
    terms = sorted([s, t, c] for (s, t), c in poly.terms.items())
    _emit(args, {"terms": terms}, str(poly))
    return 0


def _cmd_goodinv(args) -> int:
    q = load_quandle(args.quandle)
    found = invariants.good_involutions(q)
    payload = {"count": len(found), "involutions": [list(s.rho) for s in found]}
    lines = [f"{len(found)} good involutions"]
    lines += [format_cycles_0based(s.rho) for s in found]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_cohomology(args) -> int:
    q = load_quandle(args.quandle)
    coeff = coh.Coeff.parse(args.coeff)
    if args.rho is not None:
        rho = parse_cycles_0based(args.rho, q.m)
        summary = coh.symmetric_cohomology(q, rho, args.degree, coeff)
    else:
        summary = coh.cohomology_Q(q, args.degree, coeff)
    payload = {"group": str(summary), "rank": summary.rank,
               "torsion": list(summary.torsion), "coeff": str(coeff)}
    _emit(args, payload, str(summary))
    return 0


def _cmd_color(args) -> int:
    d = load_diagram(args.diagram)
    q = load_quandle(args.quandle)
    found = links.colorings(d, q, cap=search_cap())
    payload = {"count": len(found), "colorings": [list(c.colors) for c in found]}
    lines = [f"{len(found)} colorings"]
    lines += [" ".join(map(str, c.colors)) for c in found]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_lk(args) -> int:
    d = load_diagram(args.diagram)
    graph = links.linking_graph(d)
    text = "\n".join(" ".join(map(str, row)) for row in graph.weights)
    _emit(args, {"m": graph.m, "weights": [list(r) for r in graph.weights]}, text)
    return 0


def _cmd_synth(args) -> int:
    with open(args.graph, encoding="utf-8") as fh:
        graph = links.LinkingGraph.from_json(fh.read())
    d = links.synthesize_link(graph)
    payload = {"arcs": d.n_arcs, "crossings": len(d.crossings),
               "components": d.n_components, "text": d.to_text()}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(d.to_text())
        _emit(args, payload,
              f"{d.n_components}-component diagram with "
              f"{len(d.crossings)} crossings written to {args.out}")
    else:
        _emit(args, payload, d.to_text().rstrip("\n"))
    return 0


def _load_endos(q: Quandle, source: str):
    if source == "all":
        return morphisms.endomorphisms(q, cap=search_cap())
    with open(source, encoding="utf-8") as fh:
        images = json.loads(fh.read())
    return [morphisms.QuandleMap(q, q, tuple(img)) for img in images]


def _cmd_quiver(args) -> int:
    d = load_diagram(args.diagram)
    q = load_quandle(args.quandle)
    s = _load_endos(q, args.endos)
    qv = build_quiver(d, q, s, cap=search_cap())
    dot = quiver_dot(qv)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    payload = {"vertices": qv.n_vertices, "edges": len(qv.edges),
               "labels": [list(l) for l in qv.labels],
               "edge_list": [list(e) for e in qv.edges]}
    _emit(args, payload,
          f"quiver with {qv.n_vertices} vertices and {len(qv.edges)} edges"
          + (f", DOT written to {args.dot}" if args.dot else ""))
    return 0


def _cmd_phi(args) -> int:
    d = load_diagram(args.diagram)
    q = load_quandle(args.quandle)
    theta = coh.theta_cocycle(args.theta)
    value = cocycle_invariant(d, q, theta, cap=search_cap())
    payload = {"coeffs": {str(k): v for k, v in sorted(value.coeffs.items())},
               "at_one": value.evaluate_at_one()}
    _emit(args, payload, str(value))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandle",
        description="Finite quandles, their invariants, and link colorings.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for pos in positionals:
            p.add_argument(pos)
        p.set_defaults(fn=fn)
        return p

    add("show", _cmd_show, "print a Cayley table", "quandle")
    add("verify", _cmd_verify, "validate the quandle axioms", "quandle")
    add("iso", _cmd_iso, "decide isomorphism", "x", "y")
    add("aut", _cmd_aut, "automorphism group", "quandle")
    add("inn", _cmd_inn, "inner automorphism group", "quandle")
    add("homs", _cmd_homs, "enumerate homomorphisms", "x", "y")

    p = add("homquandle", _cmd_homquandle,
            "pointwise quandle on Hom(X, A), A abelian", "x", "a")
    p.add_argument("--out", default=None)

    add("poly", _cmd_poly, "two-variable quandle polynomial", "quandle")
    add("goodinv", _cmd_goodinv, "good involutions", "quandle")

    p = add("cohomology", _cmd_cohomology, "cohomology groups", "quandle")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--coeff", default="Z", help="Z, Q, or Zp (e.g. Z2)")
    p.add_argument("--rho", default=None,
                   help="good involution in cycle notation, e.g. \"(1 2)\"")

    add("color", _cmd_color, "enumerate colorings", "diagram", "quandle")
    add("lk", _cmd_lk, "pairwise linking numbers", "diagram")

    p = add("synth", _cmd_synth,
            "synthesize a link with a given linking graph", "graph")
    p.add_argument("--out", default=None)

    p = add("quiver", _cmd_quiver, "coloring quiver", "diagram", "quandle")
    p.add_argument("--endos", default="all", help="'all' or a JSON file of images")
    p.add_argument("--dot", default=None, help="write Graphviz output here")

    p = add("phi", _cmd_phi, "2-cocycle invariant", "diagram", "quandle")
    p.add_argument("--theta", type=int, required=True,
                   help="exponent cocycle of the order-(n+1) one-column quandle")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except (ValueError, RuntimeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
