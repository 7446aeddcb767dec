"""Greedy separated sets on the unit sphere and the generic cone cover.

A maximal set C of unit vectors with pairwise ||c_i - c_j||, ||c_i + c_j||
>= 1/5 has at most (11^d - 9^d)/2 elements (a packing argument), covers
the sphere by the 1/5-neighbourhoods of +-C, and generates acute cones in
which every unit vector stays within 1/2 of the center.  Together these
give the general bound min(2^{kd}, (k+1)^{(11^d-9^d)/2}).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CertificateError, InputError
from .norms import (FLOAT_EPS, NormSpec, Vec, is_unit, norm_eval,
                    polygon_vertices_2d, vadd, vneg, vscale, vsub)

SEPARATION = Fraction(1, 5)
HALF_WIDTH = Fraction(1, 2)
COEFF_SUM_LIMIT = Fraction(5, 4)


def separated_set_capacity(d: int) -> int:
    """Packing cap (11^d - 9^d)/2 on the size of a 1/5-separated set."""
    return (11 ** d - 9 ** d) // 2


def general_bound(k: int, d: int) -> int:
    """min(2^{kd}, (k+1)^{(11^d-9^d)/2}) in exact integer arithmetic."""
    if k < 1 or d < 1:
        raise InputError("general_bound requires k >= 1 and d >= 1")
    return min(2 ** (k * d), (k + 1) ** separated_set_capacity(d))


# ---------------------------------------------------------------------------
# sphere sampling

def sphere_samples(spec: NormSpec, count: int, seed: int = 0) -> list[Vec]:
    """Unit vectors of the norm's sphere.

    2D exact kinds: rational subdivision of the unit polygon's edges (exact
    unit vectors).  Higher dimensions: random rational directions scaled by
    the exact reciprocal norm.  lp: normalized random float directions.
    """
    if count < 1:
        raise InputError("need at least one sample")
    rng = random.Random(seed)
    if spec.exact and spec.dim == 2:
        verts = polygon_vertices_2d(spec)
        m = len(verts)
        per_edge = max(1, -(-count // m))
        out = []
        for i in range(m):
            u, v = verts[i], verts[(i + 1) % m]
            step = vsub(v, u)
            for j in range(per_edge):
                out.append(vadd(u, vscale(Fraction(j, per_edge), step)))
        return out[:max(count, m)]
    if spec.exact:
        out = []
        while len(out) < count:
            v = tuple(Fraction(rng.randint(-64, 64), 64) for _ in range(spec.dim))
            n = norm_eval(spec, v)
            if n == 0:
                continue
            out.append(vscale(1 / n, v))
        return out
    out = []
    while len(out) < count:
        v = tuple(rng.gauss(0.0, 1.0) for _ in range(spec.dim))
        n = norm_eval(spec, v)
        if n < 1e-12:
            continue
        out.append(tuple(a / n for a in v))
    return out


# ---------------------------------------------------------------------------
# greedy separated set

@dataclass(frozen=True)
class SeparatedSet:
    """Unit vectors pairwise 1/5-separated in both +- combinations."""

    centers: tuple[Vec, ...]
    separation: Fraction = SEPARATION


def _far_enough(spec: NormSpec, c: Vec, x: Vec) -> bool:
    sep = SEPARATION if spec.exact else float(SEPARATION)
    return (norm_eval(spec, vsub(c, x)) >= sep
            and norm_eval(spec, vadd(c, x)) >= sep)


def greedy_separated_set(spec: NormSpec, samples) -> SeparatedSet:
    """Greedy pass in input order keeping every sample far from all kept ones.

    The result is maximal with respect to the sample set.  A float
    prefilter keeps the pass cheap; accepted centers are re-validated with
    exact arithmetic for exact kinds.
    """
    samples = list(samples)
    if not samples:
        raise InputError("samples must be nonempty")
    for s in samples:
        if not is_unit(spec, s):
            raise InputError(f"sample {s} is not a unit vector")

    sep_f = float(SEPARATION)
    kept: list[Vec] = []
    kept_f: list[tuple[float, ...]] = []
    for s in samples:
        sf = tuple(float(a) for a in s)
        ok = True
        for c, cf in zip(kept, kept_f):
            # NormSpec evaluation is generic over floats; cheap prefilter.
            dm = norm_eval(spec, tuple(a - b for a, b in zip(cf, sf)))
            dp = norm_eval(spec, tuple(a + b for a, b in zip(cf, sf)))
            closest = min(dm, dp)
            if closest < sep_f - 1e-9:
                ok = False
                break
            if closest < sep_f + 1e-9 and spec.exact:
                # Too close to the threshold for floats; decide exactly.
                if not _far_enough(spec, c, s):
                    ok = False
                    break
        if ok:
            kept.append(s)
            kept_f.append(sf)

    if spec.exact:
        for i, c in enumerate(kept):
            for c2 in kept[i + 1:]:
                if not _far_enough(spec, c, c2):
                    raise CertificateError("greedy output violates separation")
    return SeparatedSet(tuple(kept))


# ---------------------------------------------------------------------------
# covering and generated cones

@dataclass
class CoverReport:
    """Assignment of test vectors to separated-set indices."""

    assignments: list  # index or None per test vector
    unassigned: list[Vec] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unassigned


def cover_assignment(sep: SeparatedSet, spec: NormSpec, test_vectors) -> CoverReport:
    """Assign each unit test vector an index i with ||c_i -+ x|| <= 1/5.

    The non-strict threshold follows the maximality clause: a vector at
    distance exactly 1/5 from every center could not extend the set.
    """
    sepval = SEPARATION if spec.exact else float(SEPARATION)
    assignments = []
    unassigned = []
    for x in test_vectors:
        if not is_unit(spec, x):
            raise InputError(f"test vector {x} is not a unit vector")
        found = None
        for i, c in enumerate(sep.centers):
            if (norm_eval(spec, vsub(c, x)) <= sepval
                    or norm_eval(spec, vadd(c, x)) <= sepval):
                found = i
                break
        assignments.append(found)
        if found is None:
            unassigned.append(x)
    return CoverReport(assignments, unassigned)


@dataclass(frozen=True)
class GeneratedCone:
    """Cone generated by the unit vectors within 1/5 of a center."""

    center: Vec
    generators: tuple[Vec, ...]


def generated_cones(sep: SeparatedSet, spec: NormSpec, samples) -> list[GeneratedCone]:
    """The cones of the construction: generators are samples strictly within 1/5."""
    sepval = SEPARATION if spec.exact else float(SEPARATION)
    cones = []
    for c in sep.centers:
        gens = tuple(x for x in samples if norm_eval(spec, vsub(c, x)) < sepval)
        cones.append(GeneratedCone(c, gens if gens else (c,)))
    return cones


@dataclass
class HalfwidthReport:
    """Sampled check that a generated cone has half-width below 1/2."""

    trials: int
    max_distance: object
    max_coeff_sum: object
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def cone_halfwidth_check(cone: GeneratedCone, spec: NormSpec,
                         trials: int = 1000, seed: int = 0) -> HalfwidthReport:
    """Random conic combinations of the generators, normalized to unit norm,
    must stay within 1/2 of the center and have coefficient sum below 5/4.
    """
    if not cone.generators:
        raise InputError("cone has no generators")
    rng = random.Random(seed)
    gens = list(cone.generators)
    max_dist = Fraction(0) if spec.exact else 0.0
    max_sum = Fraction(0) if spec.exact else 0.0
    failures = []
    half = HALF_WIDTH if spec.exact else float(HALF_WIDTH)
    limit = COEFF_SUM_LIMIT if spec.exact else float(COEFF_SUM_LIMIT)
    for _ in range(trials):
        chosen = rng.sample(gens, k=rng.randint(1, min(6, len(gens))))
        if spec.exact:
            coeffs = [Fraction(rng.randint(1, 8), rng.randint(1, 8)) for _ in chosen]
        else:
            coeffs = [rng.uniform(0.05, 2.0) for _ in chosen]
        acc = tuple(0 * a for a in chosen[0])
        for lam, x in zip(coeffs, chosen):
            acc = vadd(acc, vscale(lam, x))
        n = norm_eval(spec, acc)
        if n == 0:
            continue
        unit = vscale(1 / n if spec.exact else 1.0 / n, acc)
        dist = norm_eval(spec, vsub(cone.center, unit))
        coeff_sum = sum(coeffs) / n
        max_dist = max(max_dist, dist)
        max_sum = max(max_sum, coeff_sum)
        if dist >= half or coeff_sum >= limit:
            failures.append({"coeffs": coeffs, "generators": chosen,
                             "distance": dist, "coeff_sum": coeff_sum})
    return HalfwidthReport(trials, max_dist, max_sum, failures)


def packing_bound_check(sep: SeparatedSet, spec: NormSpec) -> bool:
    """Verify m <= (11^d - 9^d)/2 and the pairwise separation on C itself.

    Separation >= 1/5 makes the radius-1/10 balls at +-c_i interior-disjoint,
    which is what the packing argument packs into B(0, 11/10).
    """
    m = len(sep.centers)
    if m > separated_set_capacity(spec.dim):
        raise CertificateError(
            f"separated set of size {m} exceeds the packing cap "
            f"{separated_set_capacity(spec.dim)} in dimension {spec.dim}")
    for i, c in enumerate(sep.centers):
        for c2 in sep.centers[i + 1:]:
            if not _far_enough(spec, c, c2):
                raise CertificateError("separated-set invariant violated")
    return True
