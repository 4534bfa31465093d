"""Coloring quivers under endomorphism sets, and the 2-cocycle link invariant.

Quiver vertices are the colorings of a diagram in canonical (sorted) order;
for each coloring c and each map f in S there is one directed edge c -> f.c,
where f.c recolors every arc through f. The invariant Phi sums, over all
colorings, a formal power of t whose exponent accumulates the signed cocycle
weight of every crossing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cohomology import Cocycle2, is_2cocycle
from .links import Coloring, LinkDiagram, colorings
from .morphisms import QuandleMap
from .quandle import Quandle

MAX_QUIVER_VERTICES = 24


class GroupRingElement:
    """A finite integer combination of powers of t (element of Z[t, t^-1])."""

    def __init__(self, coeffs=()):
        data = dict(coeffs)
        self.coeffs = {k: v for k, v in data.items() if v}

    @classmethod
    def constant(cls, c: int) -> "GroupRingElement":
        return cls({0: c})

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return GroupRingElement(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRingElement) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def evaluate_at_one(self) -> int:
        return sum(self.coeffs.values())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if k == 0:
                parts.append(str(c))
            else:
                tpow = "t" if k == 1 else f"t^{k}"
                parts.append(tpow if c == 1 else f"{c}*{tpow}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GroupRingElement({self})"


@dataclass(frozen=True)
class Quiver:
    """Directed multigraph on colorings; edges has one (source, target) per
    (coloring, endomorphism) pair, in endomorphism order within each source."""

    vertices: tuple
    labels: tuple
    edges: tuple

    @cached_property
    def multiplicity(self) -> dict:
        mult: dict = {}
        for e in self.edges:
            mult[e] = mult.get(e, 0) + 1
        return mult

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)


def quiver(d: LinkDiagram, q: Quandle, s, cap: int | None = None) -> Quiver:
    """The coloring quiver of d under the endomorphism set s."""
    for f in s:
        if not isinstance(f, QuandleMap) or f.source != q or f.target != q:
            raise ValueError("S must consist of endomorphisms of the coloring quandle")
        if not f.verify():
            raise ValueError(f"map {f.image} is not an endomorphism")
    verts = colorings(d, q, cap)
    index = {v.colors: i for i, v in enumerate(verts)}
    edges = []
    for i, v in enumerate(verts):
        for f in s:
            moved = tuple(f(c) for c in v.colors)
            j = index.get(moved)
            if j is None:
                raise RuntimeError("endomorphism image is not a coloring")
            edges.append((i, j))
    labels = tuple(v.base_colors(d) for v in verts)
    return Quiver(tuple(verts), labels, tuple(edges))


def _vertex_signature(qv: Quiver):
    n = qv.n_vertices
    out_m = [[] for _ in range(n)]
    in_m = [[] for _ in range(n)]
    loops = [0] * n
    for (a, b), k in qv.multiplicity.items():
        out_m[a].append(k)
        in_m[b].append(k)
        if a == b:
            loops[a] += k
    return [(loops[v], tuple(sorted(out_m[v])), tuple(sorted(in_m[v])))
            for v in range(n)]


def quiver_isomorphic(q1: Quiver, q2: Quiver,
                      max_vertices: int = MAX_QUIVER_VERTICES) -> bool:
    """Exact search for a vertex bijection matching edge multiplicities."""
    if q1.n_vertices != q2.n_vertices or len(q1.edges) != len(q2.edges):
        return False
    n = q1.n_vertices
    if n > max_vertices:
        raise ValueError(f"{n} vertices exceed the bound {max_vertices}")
    sig1, sig2 = _vertex_signature(q1), _vertex_signature(q2)
    if sorted(sig1) != sorted(sig2):
        return False
    candidates = [[w for w in range(n) if sig2[w] == sig1[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    m1, m2 = q1.multiplicity, q2.multiplicity
    mapping = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for prev in order[:pos]:
                pw = mapping[prev]
                if (m1.get((v, prev), 0) != m2.get((w, pw), 0)
                        or m1.get((prev, v), 0) != m2.get((pw, w), 0)):
                    ok = False
                    break
            if ok and m1.get((v, v), 0) == m2.get((w, w), 0):
                mapping[v] = w
                used[w] = True
                if extend(pos + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if not extend(0):
        return False
    # re-verify the induced edge bijection edge by edge
    remapped: dict = {}
    for a, b in q1.edges:
        key = (mapping[a], mapping[b])
        remapped[key] = remapped.get(key, 0) + 1
    assert remapped == m2
    return True


def quiver_dot(qv: Quiver) -> str:
    """Graphviz digraph with deterministic vertex and edge order."""
    lines = ["digraph quiver {"]
    for i, label in enumerate(qv.labels):
        text = "(" + ", ".join(map(str, label)) + ")"
        lines.append(f'  v{i} [label="{text}"];')
    for a, b in qv.edges:
        lines.append(f"  v{a} -> v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def theta_weight(d: LinkDiagram, q: Quandle, phi: Cocycle2, coloring: Coloring) -> int:
    """Summed exponent of the coloring: +phi(under_in, over) at positive
    crossings, -phi(under_out, over) at negative ones."""
    col = coloring.colors
    total = 0
    for c in d.crossings:
        if c.sign > 0:
            total += phi(col[c.under_in], col[c.over])
        else:
            total -= phi(col[c.under_out], col[c.over])
    return total


def cocycle_invariant(d: LinkDiagram, q: Quandle, phi: Cocycle2,
                      cap: int | None = None) -> GroupRingElement:
    """Formal sum over colorings of t^(theta-weight)."""
    if not is_2cocycle(q, phi):
        raise ValueError("phi is not a 2-cocycle of the quandle")
    coeffs: dict = {}
    for coloring in colorings(d, q, cap):
        e = theta_weight(d, q, phi, coloring)
        coeffs[e] = coeffs.get(e, 0) + 1
    return GroupRingElement(coeffs)
