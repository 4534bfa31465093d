"""The two-variable quandle polynomial and good involutions (symmetric quandles)."""

from __future__ import annotations

from dataclasses import dataclass

from .permutations import Permutation
from .quandle import Quandle


class TwoVarPolynomial:
    """Sum of c * s^i t^j terms with integer coefficients."""

    def __init__(self, terms):
        collected = {}
        for (i, j), c in dict(terms).items():
            if c:
                collected[(i, j)] = c
        self.terms = collected

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoVarPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "TwoVarPolynomial") -> "TwoVarPolynomial":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return TwoVarPolynomial(out)

    def total(self) -> int:
        return sum(self.terms.values())

    def __str__(self) -> str:
        # descending t-degree, then descending s-degree
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda st: (-st[1], -st[0]))
        parts = []
        for s_exp, t_exp in keys:
            c = self.terms[(s_exp, t_exp)]
            factors = "".join(_power("s", s_exp) + _power("t", t_exp))
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(factors)
            elif c == -1:
                parts.append("-" + factors)
            else:
                parts.append(f"{c}{factors}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TwoVarPolynomial({self})"


def _power(var: str, exp: int) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return var
    return f"{var}^{exp}"


def quandle_polynomial(q: Quandle) -> TwoVarPolynomial:
    """qp(s,t) = sum over x of s^r(x) t^c(x) with r(x) = #{y : x*y = x} and
    c(x) = #{y : y*x = y}."""
    t = q.table
    rng = range(q.m)
    terms = {}
    for x in rng:
        r = sum(1 for y in rng if t[x][y] == x)
        c = sum(1 for y in rng if t[y][x] == y)
        terms[(r, c)] = terms.get((r, c), 0) + 1
    return TwoVarPolynomial(terms)


def p_polynomial_formula(n: int, sigma: Permutation) -> TwoVarPolynomial:
    """Closed form for the polynomial of the one-column quandle on {0..n}:
    a s^{n+1}t^{n+1} + (n-a) s^n t^{n+1} + s^{n+1} t^{1+a}, a = #fixed points."""
    if sigma.n != n:
        raise ValueError(f"permutation degree {sigma.n} != n = {n}")
    alpha = len(sigma.fixed_points())
    terms = {}
    for key, c in (((n + 1, n + 1), alpha), ((n, n + 1), n - alpha), ((n + 1, 1 + alpha), 1)):
        if c:
            terms[key] = terms.get(key, 0) + c
    return TwoVarPolynomial(terms)


@dataclass(frozen=True)
class SymmetricQuandle:
    """A quandle with a good involution rho: rho is involutive,
    rho(x*y) = rho(x)*y, and x*rho(y) = bar(x, y)."""

    quandle: Quandle
    rho: tuple

    def __post_init__(self):
        q, rho = self.quandle, tuple(self.rho)
        object.__setattr__(self, "rho", rho)
        if sorted(rho) != list(range(q.m)):
            raise ValueError("rho is not a permutation of the elements")
        for x in q.elements:
            if rho[rho[x]] != x:
                raise ValueError(f"rho is not an involution at {x}")
        witness = _good_involution_defect(q, rho)
        if witness is not None:
            law, x, y = witness
            raise ValueError(f"{law} fails at ({x},{y})")


def _good_involution_defect(q: Quandle, rho):
    t = q.table
    for x in q.elements:
        for y in q.elements:
            if rho[t[x][y]] != t[rho[x]][y]:
                return ("rho(x*y) = rho(x)*y", x, y)
            if t[x][rho[y]] != q.bar(x, y):
                return ("x*rho(y) = bar(x,y)", x, y)
    return None


def _involutions(m: int):
    """All involutive self-maps of {0..m-1}, identity included, sorted."""
    out = []

    def build(remaining, image):
        if not remaining:
            out.append(tuple(image))
            return
        x = remaining[0]
        image[x] = x
        build(remaining[1:], image)
        for y in remaining[1:]:
            image[x], image[y] = y, x
            build([z for z in remaining[1:] if z != y], image)
            image[x], image[y] = x, y

    build(list(range(m)), [0] * m)
    return sorted(out)


def good_involutions(q: Quandle):
    """All good involutions of q, found by filtering every involution of the set."""
    found = []
    for rho in _involutions(q.m):
        if _good_involution_defect(q, rho) is None:
            found.append(SymmetricQuandle(q, rho))
    return found
