"""Shared test utilities: independent brute-force oracles and raw constructors."""

from itertools import permutations, product
from pathlib import Path

from quandles import Coloring, LinkDiagram, Quandle, parse_diagram

FIXTURES = Path(__file__).parent / "fixtures"


def load_diagram(name: str) -> LinkDiagram:
    return parse_diagram((FIXTURES / name).read_text())


def raw_quandle(table):
    """A Quandle instance that skips axiom validation (negative-test inputs)."""
    q = object.__new__(Quandle)
    q.table = tuple(tuple(row) for row in table)
    q.m = len(q.table)
    return q


def brute_force_homs(x: Quandle, y: Quandle):
    """Every set map checked against the homomorphism law directly."""
    found = []
    for image in product(range(y.m), repeat=x.m):
        if all(image[x.table[a][b]] == y.table[image[a]][image[b]]
               for a in range(x.m) for b in range(x.m)):
            found.append(image)
    return found


def brute_force_automorphisms(q: Quandle):
    return [img for img in map(tuple, permutations(range(q.m)))
            if img in set(brute_force_homs(q, q))]


def brute_force_colorings(d: LinkDiagram, q: Quandle):
    """Filter all |Q|^arcs assignments by the crossing rule."""
    found = []
    for colors in product(range(q.m), repeat=d.n_arcs):
        ok = True
        for c in d.crossings:
            want = (q.op(colors[c.under_in], colors[c.over]) if c.sign > 0
                    else q.bar(colors[c.under_in], colors[c.over]))
            if colors[c.under_out] != want:
                ok = False
                break
        if ok:
            found.append(Coloring(colors))
    return found


def group_mul_table(perms):
    """Multiplication table of a list of permutations (as image tuples),
    product = left-then-right composition a;b = b after a."""
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(b[v] for v in a)] for b in perms] for a in perms]


def conjugation_quandle(perms):
    """g*h = h^-1 g h on a closed set of permutations given as image tuples."""
    index = {p: i for i, p in enumerate(perms)}

    def inv(p):
        out = [0] * len(p)
        for i, v in enumerate(p):
            out[v] = i
        return tuple(out)

    table = []
    for g in perms:
        row = []
        for h in perms:
            hi = inv(h)
            conj = tuple(hi[g[h[x]]] for x in range(len(g)))
            row.append(index[conj])
        table.append(row)
    return Quandle(table)


def symmetric_group_elements(n: int):
    """All image tuples of S_n acting on {0..n-1}, sorted."""
    return sorted(map(tuple, permutations(range(n))))


def p_coloring_tuple_predicate(sigma, weights, combo):
    """Whether a component color tuple extends to a coloring of a link with the
    given pairwise linking numbers, for the one-column quandle of sigma.

    Traversing a positively colored component applies one power of sigma per
    undercrossing below a 0-colored component, so the closure condition is that
    the color's orbit length divides the SUM of the linking numbers into the
    0-colored components (per-pair divisibility is not necessary when several
    0-colored components contribute).
    """
    m = len(combo)
    for j in range(m):
        if combo[j] == 0:
            continue
        twist = sum(weights[i][j] for i in range(m) if i != j and combo[i] == 0)
        if twist % len(sigma.orbit_of(combo[j])):
            return False
    return True
