"""Finite quandles as validated Cayley tables on {0, ..., m-1}.

``table[x][y]`` is x*y. Construction checks all three axioms exhaustively:
idempotence, bijective columns, and right self-distributivity
(x*y)*z = (x*z)*(y*z). The inverse column operation is written bar(x, y),
the unique z with z*y = x.
"""

from __future__ import annotations

import json
from functools import cached_property

from .permutations import Permutation


class AxiomError(ValueError):
    """A Cayley table violating a quandle axiom, with a witness."""

    def __init__(self, axiom: str, witness, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class Quandle:
    """An order-m quandle given by its Cayley table."""

    def __init__(self, table):
        table = tuple(tuple(row) for row in table)
        _validate(table)
        self.table = table
        self.m = len(table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    @cached_property
    def _bar_table(self):
        m = len(self.table)
        bar = [[0] * m for _ in range(m)]
        for z in range(m):
            for y in range(m):
                bar[self.table[z][y]][y] = z
        return tuple(tuple(row) for row in bar)

    def bar(self, x: int, y: int) -> int:
        """The unique z with z*y = x."""
        return self._bar_table[x][y]

    def column_perm(self, y: int) -> tuple:
        """The bijection x -> x*y as an image tuple on {0..m-1}."""
        return tuple(self.table[x][y] for x in range(self.m))

    @property
    def elements(self) -> range:
        return range(self.m)

    def is_abelian(self) -> bool:
        """Medial law (x*y)*(z*w) = (x*z)*(y*w), checked over all quadruples."""
        t = self.table
        rng = range(self.m)
        for x in rng:
            for y in rng:
                xy = t[x][y]
                for z in rng:
                    xz = t[x][z]
                    for w in rng:
                        if t[xy][t[z][w]] != t[xz][t[y][w]]:
                            return False
        return True

    def __eq__(self, other) -> bool:
        return isinstance(other, Quandle) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"Quandle(order={self.m})"

    def show(self) -> str:
        """The Cayley table, one row per line, entries space-separated."""
        width = len(str(self.m - 1))
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.table)

    def to_json(self) -> str:
        return json.dumps({"order": self.m, "table": [list(r) for r in self.table]})

    @classmethod
    def from_json(cls, text: str) -> "Quandle":
        data = json.loads(text)
        q = cls(data["table"])
        if q.m != data["order"]:
            raise ValueError("order field does not match table size")
        return q


def _validate(table) -> None:
    m = len(table)
    for x, row in enumerate(table):
        if len(row) != m:
            raise AxiomError("shape", x, f"row {x} has length {len(row)}, expected {m}")
        for y, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < m:
                raise AxiomError("range", (x, y), f"entry {v} at ({x},{y}) outside 0..{m - 1}")
    for x in range(m):
        if table[x][x] != x:
            raise AxiomError("idempotence", x, f"{x}*{x} = {table[x][x]} != {x}")
    for y in range(m):
        col = [table[x][y] for x in range(m)]
        if len(set(col)) != m:
            raise AxiomError("column-bijection", y, f"column {y} is not a bijection: {col}")
    for x in range(m):
        for y in range(m):
            xy = table[x][y]
            for z in range(m):
                if table[xy][z] != table[table[x][z]][table[y][z]]:
                    raise AxiomError(
                        "self-distributivity", (x, y, z),
                        f"({x}*{y})*{z} = {table[xy][z]} but "
                        f"({x}*{z})*({y}*{z}) = {table[table[x][z]][table[y][z]]}")


def from_table(table) -> Quandle:
    """Validate and wrap an explicit Cayley table."""
    return Quandle(table)


def trivial(m: int) -> Quandle:
    """T_m: x*y = x."""
    if m < 1:
        raise ValueError("order must be positive")
    return Quandle([[x] * m for x in range(m)])


def dihedral(m: int) -> Quandle:
    """R_m on Z_m: x*y = 2y - x mod m."""
    if m < 1:
        raise ValueError("order must be positive")
    return Quandle([[(2 * y - x) % m for y in range(m)] for x in range(m)])


def p_quandle(n: int, sigma: Permutation) -> Quandle:
    """The order-(n+1) quandle on {0..n} whose only non-identity column is column 0.

    x*y = x for y != 0, 0*0 = 0, and x*0 = sigma(x) for positive x, so column 0
    acts on the positive elements as the degree-n permutation sigma.
    """
    if sigma.n != n:
        raise ValueError(f"permutation degree {sigma.n} != n = {n}")
    table = []
    for x in range(n + 1):
        row = [x] * (n + 1)
        row[0] = sigma(x) if x else 0
        table.append(row)
    return Quandle(table)


def bar_op(q: Quandle, x: int, y: int) -> int:
    return q.bar(x, y)


def column_perm(q: Quandle, y: int) -> tuple:
    return q.column_perm(y)


def is_abelian(q: Quandle) -> bool:
    return q.is_abelian()
