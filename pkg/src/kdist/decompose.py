"""Cluster decomposition, the volume-ratio bound, and the 2^{kd} recursion.

If the largest-to-smallest distance ratio of a k-distance set exceeds
2^{k-1}, some threshold distance turns "within rho_i" into an equivalence
relation; splitting there and recursing multiplies an i-level bound with a
(k-i)-level bound, giving 2^{kd}.  When the ratio is small, a volume
packing argument (via Brunn-Minkowski) bounds the set directly by
(1 + rho_k/rho_1)^d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import FalsificationError, InputError
from .norms import NormSpec, Vec, norm_eval, vsub
from .spectrum import DistanceSpectrum, PointSet, distance_spectrum


# ---------------------------------------------------------------------------
# equivalence thresholds and clusters

def clusters_at(spec: NormSpec, ps: PointSet, rho) -> list[list[Vec]] | None:
    """Components of the "distance <= rho" graph, or None if not an equivalence.

    The relation is an equivalence iff every component is a clique under
    the threshold, which is checked on all intra-component pairs.
    """
    pts = sorted(ps.points)
    parent = list(range(len(pts)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if norm_eval(spec, vsub(pts[j], pts[i])) <= rho:
                parent[find(i)] = find(j)
    comps: dict[int, list[int]] = {}
    for i in range(len(pts)):
        comps.setdefault(find(i), []).append(i)
    clusters = [sorted(idx) for idx in comps.values()]
    for cluster in clusters:
        for a in range(len(cluster)):
            for b in range(a + 1, len(cluster)):
                if norm_eval(spec, vsub(pts[cluster[b]], pts[cluster[a]])) > rho:
                    return None
    clusters.sort(key=lambda c: pts[c[0]])
    return [[pts[i] for i in cluster] for cluster in clusters]


def find_equivalence_threshold(sp: DistanceSpectrum, ps: PointSet,
                               spec: NormSpec) -> int | None:
    """Smallest i (1-based, 1 <= i <= k-1) whose threshold relation is transitive.

    Guaranteed to exist when rho_k / rho_1 > 2^{k-1}.
    """
    if sp.k < 2:
        raise InputError("threshold search requires a k-distance set with k >= 2")
    for i in range(1, sp.k):
        if clusters_at(spec, ps, sp.distances[i - 1]) is not None:
            return i
    return None


# ---------------------------------------------------------------------------
# the 2^{kd} recursion

@dataclass
class DecompositionNode:
    """One node of the recursive bound trace."""

    kind: str                    # "leaf" | "volume" | "split"
    size: int
    k: int
    bound: object                # exact rational (or int) cardinality bound
    claim: int                   # the 2^{kd} claim at this node
    threshold: int | None = None
    children: list["DecompositionNode"] = field(default_factory=list)
    representatives: "DecompositionNode | None" = None

    def to_json(self) -> dict:
        obj = {"kind": self.kind, "size": self.size, "k": self.k,
               "bound": float(self.bound), "claim": self.claim}
        if self.threshold is not None:
            obj["threshold"] = self.threshold
        if self.children:
            obj["clusters"] = [c.to_json() for c in self.children]
        if self.representatives is not None:
            obj["representatives"] = self.representatives.to_json()
        return obj


def volume_ratio_bound(sp: DistanceSpectrum, d: int):
    """(1 + rho_k/rho_1)^d; exact rational for exact spectra."""
    if sp.k < 1:
        raise InputError("volume bound requires at least one distance")
    return (1 + sp.ratio) ** d


def decompose_recursive_bound(ps: PointSet, spec: NormSpec) -> DecompositionNode:
    """Certify |S| <= 2^{kd} by the volume bound or the cluster recursion.

    Raises FalsificationError if any intermediate bound is violated or if
    the ratio condition promises a threshold that does not exist.
    """
    d = spec.dim
    sp = distance_spectrum(spec, ps)
    k, m = sp.k, len(ps)
    claim = 2 ** (k * d)
    if k == 0:
        return DecompositionNode("leaf", m, 0, 1, 1)

    ratio = sp.ratio
    if 1 + ratio <= 2 ** k:
        vb = volume_ratio_bound(sp, d)
        if m > vb:
            raise FalsificationError(
                f"{m} points exceed the volume bound {vb} (k={k}, d={d})")
        return DecompositionNode("volume", m, k, vb, claim)

    i = find_equivalence_threshold(sp, ps, spec)
    if i is None:
        raise FalsificationError(
            f"distance ratio {ratio} > 2^{k - 1} but no equivalence threshold exists")
    clusters = clusters_at(spec, ps, sp.distances[i - 1])
    children = [decompose_recursive_bound(PointSet(d, tuple(c)), spec)
                for c in clusters]
    reps = PointSet(d, tuple(c[0] for c in clusters))
    rep_node = decompose_recursive_bound(reps, spec)
    bound = rep_node.bound * max((c.bound for c in children), default=1)
    if m > bound or bound > claim:
        raise FalsificationError(
            f"cluster recursion bound {bound} fails for {m} points (claim {claim})")
    node = DecompositionNode("split", m, k, bound, claim, threshold=i,
                             children=children, representatives=rep_node)
    return node


# ---------------------------------------------------------------------------
# volumes

def unit_ball_volume(spec: NormSpec):
    """Volume of the unit ball; exact rational where elementary."""
    d = spec.dim
    if spec.kind == "linf":
        return Fraction(2) ** d
    if spec.kind == "l1":
        return Fraction(2 ** d, math.factorial(d))
    if spec.kind == "polytopal":
        if d != 2:
            raise InputError("polytopal ball volume implemented for d = 2 only")
        from .norms import polygon_vertices_2d, cross2
        verts = polygon_vertices_2d(spec)
        area = Fraction(0)
        for i in range(len(verts)):
            area += cross2(verts[i], verts[(i + 1) % len(verts)])
        return area / 2
    # lp: (2 Gamma(1 + 1/p))^d / Gamma(1 + d/p)
    p = spec.p
    return (2.0 * math.gamma(1.0 + 1.0 / p)) ** d / math.gamma(1.0 + d / p)


def exact_box_union_area(centers, half) -> Fraction:
    """Exact area of a union of axis-aligned squares (l-infinity balls, d=2)."""
    half = Fraction(half)
    boxes = [(c[0] - half, c[0] + half, c[1] - half, c[1] + half) for c in centers]
    xs = sorted({x for b in boxes for x in (b[0], b[1])})
    ys = sorted({y for b in boxes for y in (b[2], b[3])})
    area = Fraction(0)
    for i in range(len(xs) - 1):
        mx = (xs[i] + xs[i + 1]) / 2
        for j in range(len(ys) - 1):
            my = (ys[j] + ys[j + 1]) / 2
            if any(b[0] <= mx <= b[1] and b[2] <= my <= b[3] for b in boxes):
                area += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j])
    return area


# ---------------------------------------------------------------------------
# Monte Carlo Brunn-Minkowski sanity check

@dataclass
class MCVolumeReport:
    """Monte Carlo volume estimates for V and V - V with a 99% half-width."""

    trials: int
    vol_v: float
    vol_v_halfwidth: float
    vol_v_formula: float          # m (rho_1/2)^d vol(B); exact (balls disjoint)
    vol_vv: float
    vol_vv_halfwidth: float
    vol_vv_upper: float           # (rho_1 + rho_k)^d vol(B)
    brunn_minkowski_ok: bool
    formula_ok: bool
    upper_ok: bool
    budget_ok: bool

    @property
    def ok(self) -> bool:
        return self.brunn_minkowski_ok and self.formula_ok and self.upper_ok


def _norm_array(spec: NormSpec, pts: np.ndarray) -> np.ndarray:
    if spec.kind == "linf":
        return np.max(np.abs(pts), axis=1)
    if spec.kind == "l1":
        return np.sum(np.abs(pts), axis=1)
    if spec.kind == "polytopal":
        A = np.array([[float(a) for a in f] for f in spec.functionals])
        return np.max(np.abs(pts @ A.T), axis=1)
    return np.sum(np.abs(pts) ** spec.p, axis=1) ** (1.0 / spec.p)


def _mc_union_volume(spec: NormSpec, centers: np.ndarray, radius: float,
                     trials: int, rng: np.random.Generator):
    d = centers.shape[1]
    lo = centers.min(axis=0) - radius
    hi = centers.max(axis=0) + radius
    boxvol = float(np.prod(hi - lo))
    pts = rng.uniform(lo, hi, size=(trials, d))
    inside = np.zeros(trials, dtype=bool)
    for c in centers:
        inside |= _norm_array(spec, pts - c) <= radius
    p = inside.mean()
    vol = p * boxvol
    halfwidth = 2.576 * math.sqrt(max(p * (1 - p), 0.0) / trials) * boxvol
    return vol, halfwidth


def brunn_minkowski_mc_check(spec: NormSpec, ps: PointSet,
                             trials: int = 200_000, seed: int = 0) -> MCVolumeReport:
    """Estimate vol(V) and vol(V-V) for V = union of balls B(x_i, rho_1/2).

    V - V is itself a union of balls B(x_i - x_j, rho_1), which makes
    membership exact.  Checks, within the reported Monte Carlo confidence:
    the Brunn-Minkowski consequence vol(V-V)^{1/d} >= 2 vol(V)^{1/d}, the
    exact formula vol(V) = m (rho_1/2)^d vol(B) (the balls have disjoint
    interiors by definition of rho_1), and the containment upper bound
    vol(V-V) <= (rho_1 + rho_k)^d vol(B).
    """
    d = spec.dim
    if d not in (2, 3):
        raise InputError("Monte Carlo volume check supports d in {2, 3}")
    sp = distance_spectrum(spec, ps)
    m = len(ps)
    volB = float(unit_ball_volume(spec))
    centers = np.array([[float(a) for a in p] for p in ps.points])
    rng = np.random.default_rng(seed)

    if sp.k == 0:
        rho1 = rho_k = 1.0  # single point: any radius; pick 1 for the report
    else:
        rho1, rho_k = float(sp.distances[0]), float(sp.distances[-1])

    vol_v, hw_v = _mc_union_volume(spec, centers, rho1 / 2, trials, rng)
    formula = m * (rho1 / 2) ** d * volB

    diff_centers = np.unique(
        (centers[:, None, :] - centers[None, :, :]).reshape(-1, d), axis=0)
    vol_vv, hw_vv = _mc_union_volume(spec, diff_centers, rho1, trials, rng)
    upper = (rho1 + rho_k) ** d * volB

    bm_ok = (vol_vv + hw_vv) ** (1 / d) >= 2 * max(vol_v - hw_v, 0.0) ** (1 / d)
    formula_ok = abs(vol_v - formula) <= max(3 * hw_v, 0.02 * formula)
    upper_ok = vol_vv - hw_vv <= upper * (1 + 1e-9)
    budget_ok = hw_v <= 0.05 * max(formula, 1e-12)
    return MCVolumeReport(trials, vol_v, hw_v, formula, vol_vv, hw_vv, upper,
                          bm_ok, formula_ok, upper_ok, budget_ok)
