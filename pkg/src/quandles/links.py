"""Combinatorial oriented link diagrams, colorings, and linking numbers.

A diagram is signed Gauss data: arcs are labelled 0..A-1 and cut at
undercrossings only, so each crossing is a record (under_in, over, under_out,
sign). Every arc occurs exactly once as an under_in and once as an under_out,
except arcs declared as free loops (closed circles with no undercrossing,
which may still pass over other strands). Planarity is not checked.

Text format (.lnk): one crossing per line "X <under_in> <over> <under_out> <+|->",
free loops "O <arc>", comments "#".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .limits import SearchCapError, search_cap
from .quandle import Quandle


class DiagramError(ValueError):
    """Structurally invalid link diagram data."""


@dataclass(frozen=True)
class Crossing:
    under_in: int
    over: int
    under_out: int
    sign: int


class LinkDiagram:
    """Signed Gauss data with its component partition."""

    def __init__(self, crossings, free_loops=()):
        self.crossings = tuple(
            c if isinstance(c, Crossing) else Crossing(*c) for c in crossings)
        self.free_loops = tuple(sorted(free_loops))
        self._validate()

    def _validate(self) -> None:
        used = set(self.free_loops)
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise DiagramError(f"crossing sign must be +1 or -1, got {c.sign}")
            used.update((c.under_in, c.over, c.under_out))
        if not used:
            raise DiagramError("empty diagram")
        if any(a < 0 for a in used):
            raise DiagramError("negative arc label")
        self.n_arcs = max(used) + 1
        missing = set(range(self.n_arcs)) - used
        if missing:
            raise DiagramError(f"arc labels must be contiguous; missing {sorted(missing)}")
        if len(set(self.free_loops)) != len(self.free_loops):
            raise DiagramError("duplicate free loop declaration")

        ins = {}
        outs = {}
        for idx, c in enumerate(self.crossings):
            if c.under_in in ins:
                raise DiagramError(f"arc {c.under_in} used twice as under_in")
            if c.under_out in outs:
                raise DiagramError(f"arc {c.under_out} used twice as under_out")
            ins[c.under_in] = idx
            outs[c.under_out] = idx
        free = set(self.free_loops)
        for a in free:
            if a in ins or a in outs:
                raise DiagramError(f"free loop {a} also appears at an undercrossing")
        for a in range(self.n_arcs):
            if a in free:
                continue
            if a not in ins or a not in outs:
                raise DiagramError(f"dangling arc {a}: needs one under_in and one under_out")

    @cached_property
    def components(self) -> tuple:
        """Arc cycles under the under_in -> under_out successor, plus free loops,
        sorted by least arc."""
        succ = {c.under_in: c.under_out for c in self.crossings}
        comps = [(a,) for a in self.free_loops]
        seen = set()
        for start in sorted(succ):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = succ[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = succ[nxt]
            comps.append(tuple(cyc))
        return tuple(sorted(comps, key=min))

    @cached_property
    def component_of(self) -> tuple:
        owner = [0] * self.n_arcs
        for i, comp in enumerate(self.components):
            for a in comp:
                owner[a] = i
        return tuple(owner)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def to_text(self) -> str:
        lines = [f"X {c.under_in} {c.over} {c.under_out} {'+' if c.sign > 0 else '-'}"
                 for c in self.crossings]
        lines.extend(f"O {a}" for a in self.free_loops)
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return (f"LinkDiagram(arcs={self.n_arcs}, crossings={len(self.crossings)}, "
                f"components={self.n_components})")


def parse_diagram(text: str) -> LinkDiagram:
    """Parse the .lnk text format."""
    crossings = []
    loops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if fields[0] == "X" and len(fields) == 5:
                sign = {"+": 1, "-": -1}[fields[4]]
                crossings.append(Crossing(int(fields[1]), int(fields[2]),
                                          int(fields[3]), sign))
            elif fields[0] == "O" and len(fields) == 2:
                loops.append(int(fields[1]))
            else:
                raise KeyError
        except (KeyError, ValueError):
            raise DiagramError(f"line {lineno}: cannot parse {raw!r}") from None
    return LinkDiagram(crossings, loops)


@dataclass(frozen=True)
class LinkingGraph:
    """Symmetric integer pairwise-linking weights with zero diagonal."""

    weights: tuple

    def __post_init__(self):
        w = tuple(tuple(row) for row in self.weights)
        object.__setattr__(self, "weights", w)
        m = len(w)
        for i, row in enumerate(w):
            if len(row) != m:
                raise ValueError("weight matrix must be square")
            if row[i] != 0:
                raise ValueError("diagonal weights must be zero")
            for j in range(m):
                if row[j] != w[j][i]:
                    raise ValueError("weight matrix must be symmetric")

    @property
    def m(self) -> int:
        return len(self.weights)

    def to_json(self) -> str:
        import json
        return json.dumps({"m": self.m, "weights": [list(r) for r in self.weights]})

    @classmethod
    def from_json(cls, text: str) -> "LinkingGraph":
        import json
        data = json.loads(text)
        graph = cls(tuple(tuple(r) for r in data["weights"]))
        if graph.m != data["m"]:
            raise ValueError("m field does not match weight matrix size")
        return graph


def linking_number(d: LinkDiagram, i: int, j: int) -> int:
    """Half the signed count of crossings between components i and j."""
    if i == j:
        raise ValueError("linking number needs two distinct components")
    owner = d.component_of
    total = 0
    for c in d.crossings:
        pair = {owner[c.under_in], owner[c.over]}
        if pair == {i, j}:
            total += c.sign
    if total % 2:
        raise DiagramError(f"odd signed crossing count {total} between {i} and {j}")
    return total // 2


def linking_graph(d: LinkDiagram) -> LinkingGraph:
    m = d.n_components
    w = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            w[i][j] = w[j][i] = linking_number(d, i, j)
    return LinkingGraph(tuple(tuple(r) for r in w))


@dataclass(frozen=True)
class Coloring:
    """An arc coloring satisfying the crossing rule everywhere."""

    colors: tuple

    def base_colors(self, d: LinkDiagram) -> tuple:
        """One color per component, read at its least arc."""
        return tuple(self.colors[min(comp)] for comp in d.components)

    def verify(self, d: LinkDiagram, q: Quandle) -> bool:
        col = self.colors
        for c in d.crossings:
            expected = (q.op(col[c.under_in], col[c.over]) if c.sign > 0
                        else q.bar(col[c.under_in], col[c.over]))
            if col[c.under_out] != expected:
                return False
        return True


def colorings(d: LinkDiagram, q: Quandle, cap: int | None = None):
    """All colorings, by backtracking with crossing-rule propagation,
    sorted by color tuple."""
    budget = search_cap(cap)
    nodes = 0
    color = [None] * d.n_arcs
    by_arc = [[] for _ in range(d.n_arcs)]
    for c in d.crossings:
        for a in {c.under_in, c.over, c.under_out}:
            by_arc[a].append(c)
    out = []

    def propagate(queue, trail) -> bool:
        while queue:
            c = queue.pop()
            ci, co, cu = color[c.under_in], color[c.over], color[c.under_out]
            if ci is None or co is None:
                continue
            val = q.op(ci, co) if c.sign > 0 else q.bar(ci, co)
            if cu is None:
                color[c.under_out] = val
                trail.append(c.under_out)
                queue.extend(by_arc[c.under_out])
            elif cu != val:
                return False
        return True

    def assign(arc, value, trail) -> bool:
        color[arc] = value
        trail.append(arc)
        return propagate(list(by_arc[arc]), trail)

    def search():
        nonlocal nodes
        arc = next((a for a in range(d.n_arcs) if color[a] is None), None)
        if arc is None:
            out.append(Coloring(tuple(color)))
            return
        for value in q.elements:
            nodes += 1
            if nodes > budget:
                raise SearchCapError(f"coloring search exceeded {budget} nodes")
            trail = []
            if assign(arc, value, trail):
                search()
            for a in trail:
                color[a] = None

    search()
    out.sort(key=lambda s: s.colors)
    return out


def synthesize_link(g: LinkingGraph, edge_order=None) -> LinkDiagram:
    """A diagram whose linking graph is g.

    Each component is a circle; every nonzero edge (i, j, w) becomes a twist
    region of 2|w| crossings of sign sgn(w), the two strands alternating which
    one passes over. Regions are threaded along each component in edge order.
    """
    m = g.m
    if edge_order is None:
        edge_order = [(i, j) for i in range(m) for j in range(i + 1, m)
                      if g.weights[i][j] != 0]
    else:
        edge_order = list(edge_order)
        for i, j in edge_order:
            if i == j or g.weights[i][j] == 0:
                raise ValueError(f"edge ({i},{j}) is not a weighted edge of the graph")
        if len(set(map(frozenset, edge_order))) != len(edge_order):
            raise ValueError("duplicate edge in edge_order")
        needed = {frozenset((i, j)) for i in range(m) for j in range(i + 1, m)
                  if g.weights[i][j] != 0}
        if {frozenset(e) for e in edge_order} != needed:
            raise ValueError("edge_order must cover exactly the nonzero edges")

    under_total = [0] * m
    for i, j in edge_order:
        k = abs(g.weights[i][j])
        under_total[i] += k
        under_total[j] += k

    arc_base = [0] * m
    n_arcs = 0
    free = []
    for comp in range(m):
        arc_base[comp] = n_arcs
        if under_total[comp] == 0:
            free.append(n_arcs)
            n_arcs += 1
        else:
            n_arcs += under_total[comp]

    consumed = [0] * m  # under events threaded so far, per component

    def current_arc(comp: int) -> int:
        return arc_base[comp] + (consumed[comp] % under_total[comp])

    def go_under(comp: int) -> tuple:
        a_in = current_arc(comp)
        consumed[comp] += 1
        return a_in, current_arc(comp)

    crossings = []
    for i, j in edge_order:
        w = g.weights[i][j]
        sign = 1 if w > 0 else -1
        for step in range(2 * abs(w)):
            under_comp, over_comp = (i, j) if step % 2 == 0 else (j, i)
            over_arc = current_arc(over_comp)
            a_in, a_out = go_under(under_comp)
            crossings.append(Crossing(a_in, over_arc, a_out, sign))
    return LinkDiagram(crossings, free)
