"""Seeded instance generators used by the self-test and the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .errors import GeometryError
from .norms import Vec, cross2, vec, vsub
from .spectrum import PointSet


def convex_hull(points: list[Vec]) -> list[Vec]:
    """Exact monotone-chain convex hull, counterclockwise, collinear dropped."""
    pts = sorted(set(points))
    if len(pts) < 3:
        raise GeometryError("hull needs at least three distinct points")

    def build(seq):
        out: list[Vec] = []
        for p in seq:
            while len(out) >= 2 and cross2(vsub(out[-1], out[-2]),
                                           vsub(p, out[-2])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(reversed(pts))
    return lower[:-1] + upper[:-1]


def random_symmetric_polygon(rng: random.Random, nmin: int = 6,
                             nmax: int = 12) -> list[Vec]:
    """Centrally symmetric strictly convex polygon with rational vertices."""
    while True:
        raw = [vec(Fraction(rng.randint(-40, 40), rng.choice((1, 2, 4))),
                   Fraction(rng.randint(-40, 40), rng.choice((1, 2, 4))))
               for _ in range(rng.randint(8, 16))]
        pts = [p for p in raw if p != (0, 0)]
        sym = pts + [tuple(-a for a in p) for p in pts]
        try:
            hull = convex_hull(sym)
        except GeometryError:
            continue
        if nmin <= len(hull) <= nmax:
            return hull


def random_lattice_subset(rng: random.Random, d: int, side: int,
                          size: int) -> PointSet:
    """Random subset of the lattice cube {0..side}^d with the given size."""
    cells = list(product(range(side + 1), repeat=d))
    chosen = rng.sample(cells, k=min(size, len(cells)))
    return PointSet(d, tuple(vec(*c) for c in chosen))


def clustered_lattice_set(rng: random.Random, d: int,
                          spread: int = 1000) -> PointSet:
    """Translated lattice clusters with a huge distance ratio.

    Clusters are copies of a small pattern orthogonal to axis 0, translated
    along axis 0 by multiples of `spread`; under l-infinity all
    cross-cluster distances are exact multiples of `spread`, so the total
    distance count stays small while rho_k / rho_1 is large.
    """
    if d == 1:
        base = [vec(0), vec(1)]
        offs = [0, spread]
        pts = {vec(p[0] + o) for p in base for o in offs}
        return PointSet(1, tuple(sorted(pts)))
    while True:
        pattern = set()
        for _ in range(rng.randint(2, 4)):
            pattern.add(vec(0, *[rng.randint(0, 2) for _ in range(d - 1)]))
        if len(pattern) < 2:
            continue
        positions = sorted(rng.sample((0, 1, 2, 3, 5), k=rng.randint(2, 3)))
        pts = {tuple((p[0] + pos * spread,) + p[1:]) for p in pattern
               for pos in positions}
        return PointSet(d, tuple(sorted(pts)))


def half_open_grid_set(n: int, d: int = 2) -> PointSet:
    """An n-point set strictly between {0..c-2}^d and {0..c-1}^d, c = ceil(n^{1/d}).

    Attains equality in the distinct-distance witness bound: exactly c - 1
    distinct l-infinity distances.
    """
    c = 1
    while c ** d < n:
        c += 1
    inner = [vec(*p) for p in product(range(c - 1), repeat=d)]
    shell = sorted(vec(*p) for p in product(range(c), repeat=d)
                   if max(p) == c - 1)
    need = n - len(inner)
    if need < 1 or need > len(shell):
        raise GeometryError(f"no half-open grid set with n={n}, d={d}")
    return PointSet(d, tuple(inner + shell[:need]))


def integer_ceil_root(n: int, d: int) -> int:
    """ceil(n^{1/d}) in exact integer arithmetic."""
    c = 1
    while c ** d < n:
        c += 1
    return c
