"""Quandle homomorphisms: enumeration, Aut/Inn groups, isomorphism, Hom quandles.

The hom search assigns images in element order and prunes on every operation
constraint whose three participants are already assigned, so the returned
lists are complete and lexicographically sorted by image tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .limits import SearchCapError, search_cap
from .quandle import Quandle


@dataclass(frozen=True)
class QuandleMap:
    """A map between quandles satisfying f(x*y) = f(x)*f(y)."""

    source: Quandle
    target: Quandle
    image: tuple

    def __call__(self, x: int) -> int:
        return self.image[x]

    def verify(self) -> bool:
        s, t = self.source.table, self.target.table
        f = self.image
        return all(f[s[x][y]] == t[f[x]][f[y]]
                   for x in range(self.source.m) for y in range(self.source.m))

    def is_bijective(self) -> bool:
        return (self.source.m == self.target.m
                and len(set(self.image)) == self.source.m)

    def compose(self, other: "QuandleMap") -> "QuandleMap":
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("composition domain mismatch")
        return QuandleMap(other.source, self.target,
                          tuple(self.image[v] for v in other.image))


class FiniteGroupTable:
    """A finite group as a multiplication table, validated exhaustively."""

    def __init__(self, table):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.identity = self._find_identity()
        self._validate()

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(n)):
                return e
        raise ValueError("no identity element")

    def _validate(self) -> None:
        n = self.order
        t = self.table
        for row in t:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ValueError("table entries must index elements")
        for x in range(n):
            if all(t[x][y] != self.identity for y in range(n)):
                raise ValueError(f"element {x} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise ValueError(f"associativity fails at ({a},{b},{c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def element_orders(self):
        return [self.element_order(a) for a in range(self.order)]

    def is_cyclic(self) -> bool:
        return any(self.element_order(a) == self.order for a in range(self.order))

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.order) for b in range(self.order))


@dataclass
class _Budget:
    cap: int
    nodes: int = field(default=0)

    def spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.cap:
            raise SearchCapError(f"hom search exceeded {self.cap} nodes")


def _search(x: Quandle, y: Quandle, bijective: bool, budget: _Budget):
    """Backtracking enumeration of homs X -> Y in lex order of image tuples."""
    m = x.m
    sx, ty = x.table, y.table
    # pairs (a, b) with a, b < k and a*b == k, checkable once f(k) is set
    hit = [[] for _ in range(m)]
    for a in range(m):
        for b in range(m):
            c = sx[a][b]
            if c > max(a, b):
                hit[c].append((a, b))
    f = [0] * m
    used = [False] * (y.m if bijective else 0)
    out = []

    def consistent(k: int) -> bool:
        fk = f[k]
        for a in range(k + 1):
            c = sx[a][k]
            if c <= k and f[c] != ty[f[a]][fk]:
                return False
            c = sx[k][a]
            if c <= k and f[c] != ty[fk][f[a]]:
                return False
        for a, b in hit[k]:
            if fk != ty[f[a]][f[b]]:
                return False
        return True

    def extend(k: int) -> None:
        if k == m:
            out.append(QuandleMap(x, y, tuple(f)))
            return
        for v in range(y.m):
            if bijective and used[v]:
                continue
            budget.spend()
            f[k] = v
            if consistent(k):
                if bijective:
                    used[v] = True
                extend(k + 1)
                if bijective:
                    used[v] = False
        f[k] = 0

    extend(0)
    return out


def homs(x: Quandle, y: Quandle, cap: int | None = None):
    """All quandle homomorphisms X -> Y, sorted by image tuple."""
    return _search(x, y, bijective=False, budget=_Budget(search_cap(cap)))


def endomorphisms(q: Quandle, cap: int | None = None):
    return homs(q, q, cap)


def is_isomorphic(x: Quandle, y: Quandle, cap: int | None = None) -> QuandleMap | None:
    """A bijective homomorphism X -> Y if one exists, else None."""
    if x.m != y.m:
        return None
    budget = _Budget(search_cap(cap))
    found = _search(x, y, bijective=True, budget=budget)
    return found[0] if found else None


def _group_from_maps(maps):
    """Composition table of a list of bijective maps, which must be closed."""
    index = {f.image: i for i, f in enumerate(maps)}
    table = []
    for f in maps:
        row = []
        for g in maps:
            h = f.compose(g)
            if h.image not in index:
                raise ValueError("set of maps is not closed under composition")
            row.append(index[h.image])
        table.append(row)
    return FiniteGroupTable(table)


def automorphism_group(q: Quandle, cap: int | None = None):
    """All bijective endomorphisms with their composition table."""
    budget = _Budget(search_cap(cap))
    maps = _search(q, q, bijective=True, budget=budget)
    return maps, _group_from_maps(maps)


def inner_group(q: Quandle) -> FiniteGroupTable:
    """Closure of the column bijections S_y under composition."""
    gens = {q.column_perm(y) for y in q.elements}
    elems = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = tuple(a[v] for v in b)
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    ordered = sorted(elems)
    index = {p: i for i, p in enumerate(ordered)}
    table = [[index[tuple(a[v] for v in b)] for b in ordered] for a in ordered]
    return FiniteGroupTable(table)


def hom_quandle(x: Quandle, a: Quandle, cap: int | None = None):
    """The quandle on Hom(X, A) under (f*g)(t) = f(t)*g(t), for abelian A.

    Returns the quandle together with the image tuples labelling its elements
    (element i of the result is the map labels[i]).
    """
    if not a.is_abelian():
        raise ValueError("target quandle is not abelian")
    maps = homs(x, a, cap)
    index = {f.image: i for i, f in enumerate(maps)}
    ta = a.table
    table = []
    for f in maps:
        row = []
        for g in maps:
            prod = tuple(ta[fv][gv] for fv, gv in zip(f.image, g.image))
            row.append(index[prod])
        table.append(row)
    return Quandle(table), [f.image for f in maps]


def relabel_quandle(q: Quandle, order) -> Quandle:
    """The same quandle with element i renamed from old label order[i]."""
    order = list(order)
    if sorted(order) != list(range(q.m)):
        raise ValueError("order must be a permutation of the elements")
    pos = {old: new for new, old in enumerate(order)}
    table = [[pos[q.table[order[i]][order[j]]] for j in range(q.m)] for i in range(q.m)]
    return Quandle(table)
