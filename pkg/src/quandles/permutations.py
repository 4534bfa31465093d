"""Exact arithmetic in the symmetric group S_n on the points {1, ..., n}.

Permutations are immutable; ``image[i]`` is the image of the point ``i + 1``.
Composition is function composition: ``compose(a, b)`` maps x to a(b(x)).
"""

from __future__ import annotations

import itertools
import json
import math
import re
from functools import cached_property

CENTRALIZER_BOUND = 8

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A bijection of {1, ..., n}, stored as a tuple of images."""

    def __init__(self, image):
        image = tuple(image)
        n = len(image)
        if sorted(image) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {image}")
        self.n = n
        self.image = image

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.n:
            raise ValueError(f"point {point} outside 1..{self.n}")
        return self.image[point - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation.parse({format_cycles(self)!r}, n={self.n})"

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        return parse_cycles(text, n)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))

    @cached_property
    def orbit_list(self):
        return orbits(self)

    @cached_property
    def cycle_type(self) -> tuple:
        """Cycle lengths in decreasing order, fixed points included."""
        return tuple(sorted((len(o) for o in self.orbit_list), reverse=True))

    def fixed_points(self):
        return [i + 1 for i, v in enumerate(self.image) if v == i + 1]

    def orbit_of(self, point: int) -> tuple:
        for orb in self.orbit_list:
            if point in orb:
                return tuple(orb)
        raise ValueError(f"point {point} outside 1..{self.n}")

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "image": list(self.image)})

    @classmethod
    def from_json(cls, text: str) -> "Permutation":
        data = json.loads(text)
        perm = cls(data["image"])
        if perm.n != data["n"]:
            raise ValueError("degree field does not match image length")
        return perm


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse disjoint cycle notation like "(1 2 3)(4 5)"; "()" or "" is the identity."""
    stripped = text.strip()
    leftover = _CYCLE_RE.sub("", stripped).strip()
    if leftover:
        raise ValueError(f"malformed cycle notation: {text!r}")
    image = list(range(1, n + 1))
    seen = set()
    for body in _CYCLE_RE.findall(stripped):
        points = [int(tok) for tok in body.split()]
        if not points:
            continue
        for p in points:
            if not 1 <= p <= n:
                raise ValueError(f"point {p} exceeds degree {n}")
            if p in seen:
                raise ValueError(f"point {p} repeated across cycles")
            seen.add(p)
        for a, b in zip(points, points[1:] + points[:1]):
            image[a - 1] = b
    return Permutation(image)


def format_cycles(a: Permutation) -> str:
    """Cycle notation with fixed points omitted; identity renders as "()"."""
    cycles = [o for o in orbits(a) if len(o) > 1]
    if not cycles:
        return "()"
    parts = []
    for orb in cycles:
        cyc = [orb[0]]
        while True:
            nxt = a(cyc[-1])
            if nxt == cyc[0]:
                break
            cyc.append(nxt)
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The permutation x -> a(b(x))."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    return Permutation(a.image[v - 1] for v in b.image)


def inverse(a: Permutation) -> Permutation:
    image = [0] * a.n
    for i, v in enumerate(a.image):
        image[v - 1] = i + 1
    return Permutation(image)


def order(a: Permutation) -> int:
    """Least m >= 1 with a^m = id; the lcm of the cycle lengths."""
    return math.lcm(*(len(o) for o in a.orbit_list)) if a.n else 1


def orbits(a: Permutation):
    """Partition of {1..n} into cycles, each sorted, listed by least element."""
    seen = [False] * a.n
    out = []
    for start in range(1, a.n + 1):
        if seen[start - 1]:
            continue
        orb = []
        p = start
        while not seen[p - 1]:
            seen[p - 1] = True
            orb.append(p)
            p = a(p)
        out.append(sorted(orb))
    return out


def is_conjugate(a: Permutation, b: Permutation) -> bool:
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    return a.cycle_type == b.cycle_type


def conjugator(a: Permutation, b: Permutation) -> Permutation | None:
    """Some h with a = h^-1 b h, or None if the cycle types differ.

    Cycles of equal length are aligned in least-element order, which makes the
    witness deterministic.
    """
    if not is_conjugate(a, b):
        return None

    def cycles_in_order(p):
        by_len = {}
        for orb in p.orbit_list:
            cyc = [orb[0]]
            while len(cyc) < len(orb):
                cyc.append(p(cyc[-1]))
            by_len.setdefault(len(orb), []).append(cyc)
        return by_len

    ca, cb = cycles_in_order(a), cycles_in_order(b)
    image = [0] * a.n
    for length, acycles in ca.items():
        for acyc, bcyc in zip(acycles, cb[length]):
            for x, y in zip(acyc, bcyc):
                image[x - 1] = y
    h = Permutation(image)
    assert compose(compose(inverse(h), b), h) == a
    return h


def all_permutations(n: int):
    """All of S_n in lexicographic image order."""
    return [Permutation(img) for img in itertools.permutations(range(1, n + 1))]


def centralizer(a: Permutation, bound: int = CENTRALIZER_BOUND):
    """All g in S_n commuting with a, by exhaustive filtration of S_n."""
    if a.n > bound:
        raise ValueError(f"degree {a.n} exceeds centralizer enumeration bound {bound}")
    return [g for g in all_permutations(a.n)
            if compose(g, a) == compose(a, g)]


def conjugacy_class_representatives(n: int):
    """One permutation per cycle type of S_n, built from integer partitions."""
    reps = []
    for partition in _partitions(n):
        image = list(range(1, n + 1))
        start = 1
        for length in partition:
            pts = list(range(start, start + length))
            for x, y in zip(pts, pts[1:] + pts[:1]):
                image[x - 1] = y
            start += length
        reps.append(Permutation(image))
    return reps


def _partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest
