"""Planar normalization and the two-quadrant-cone (k+1)^2 certificate.

Any symmetric convex polygon can be mapped by an invertible linear map to
a polygon C' squeezed between the cross-polytope and the square, with
every boundary segment inside one closed coordinate quadrant.  The closed
first and second quadrants, with some open boundary rays removed, then
form a two-cone family valid for the gauge of C', which yields the
(k+1)^2 bound for planar k-distance sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import HeightCertificate, PolyhedralCone, chain_certificate, \
    check_cone_conditions, ConeConditionReport
from .errors import GeometryError, InputError
from .norms import (NormSpec, Vec, cross2, polygon_vertices_2d, polytopal,
                    vec, vsub)
from .spectrum import PointSet, distance_spectrum

Matrix2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def apply_matrix(T: Matrix2, v: Vec) -> Vec:
    return (T[0][0] * v[0] + T[0][1] * v[1],
            T[1][0] * v[0] + T[1][1] * v[1])


def _validate_polygon(verts: list[Vec]) -> None:
    if len(verts) < 4 or len(verts) % 2 != 0:
        raise GeometryError("need an even number (>= 4) of vertices")
    vset = set(verts)
    if len(vset) != len(verts):
        raise GeometryError("repeated polygon vertex")
    if any(tuple(-a for a in v) not in vset for v in verts):
        raise GeometryError("polygon is not centrally symmetric")
    n = len(verts)
    for i in range(n):
        u, v, w = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
        turn = cross2(vsub(v, u), vsub(w, v))
        if turn <= 0:
            raise GeometryError("polygon is not strictly convex counterclockwise")


def polygon_contains(verts: list[Vec], p: Vec) -> bool:
    """Closed containment test for a convex CCW polygon."""
    n = len(verts)
    return all(cross2(vsub(verts[(i + 1) % n], verts[i]), vsub(p, verts[i])) >= 0
               for i in range(n))


def polygon_gauge(verts: list[Vec]) -> NormSpec:
    """Facet-functional gauge whose unit ball is the given symmetric polygon."""
    n = len(verts)
    funcs = []
    for i in range(n):
        u, v = verts[i], verts[(i + 1) % n]
        det = cross2(u, v)
        if det == 0:
            raise GeometryError("polygon edge collinear with the origin")
        # a . u = a . v = 1 on the supporting line of the edge.
        funcs.append(((v[1] - u[1]) / det, (u[0] - v[0]) / det))
    return polytopal(funcs)


_QUADRANT_SIGNS = ((1, 1), (-1, 1), (-1, -1), (1, -1))


def _segment_quadrants(u: Vec, v: Vec) -> list[int]:
    """Indices of closed quadrants (Q1..Q4 as 0..3) containing both endpoints."""
    out = []
    for q, (sx, sy) in enumerate(_QUADRANT_SIGNS):
        if sx * u[0] >= 0 and sy * u[1] >= 0 and sx * v[0] >= 0 and sy * v[1] >= 0:
            out.append(q)
    return out


@dataclass(frozen=True)
class Normalization2D:
    """Result of the max-area normalization of a symmetric polygon."""

    x0: Vec
    y0: Vec
    matrix: Matrix2              # T with T x0 = e1, T y0 = e2
    vertices: tuple[Vec, ...]    # image polygon C', counterclockwise


def max_area_normalization(polygon) -> Normalization2D:
    """Map a symmetric convex polygon onto a normalized polygon C'.

    Chooses boundary points x0, y0 among the vertices maximizing the area
    |cross(x0, y0)| (ties: lexicographically smallest vertex index pair;
    orientation fixed so that cross(x0, y0) > 0), and applies the inverse
    of the matrix with columns x0, y0.  The three normalization invariants
    (B1 inside C', C' inside the square, single-quadrant boundary segments)
    are verified exactly and failures raise GeometryError.
    """
    verts = [vec(*v) for v in polygon]
    _validate_polygon(verts)
    best = None  # (|area|, i, j)
    for i, u in enumerate(verts):
        for j in range(i + 1, len(verts)):
            area = abs(cross2(u, verts[j]))
            if best is None or area > best[0]:
                best = (area, i, j)
    area, i, j = best
    if area == 0:
        raise GeometryError("polygon is degenerate (zero maximal triangle area)")
    x0, y0 = verts[i], verts[j]
    if cross2(x0, y0) < 0:
        x0, y0 = y0, x0
    det = cross2(x0, y0)
    T: Matrix2 = ((y0[1] / det, -y0[0] / det),
                  (-x0[1] / det, x0[0] / det))
    image = tuple(apply_matrix(T, v) for v in verts)

    for p in image:
        if abs(p[0]) > 1 or abs(p[1]) > 1:
            raise GeometryError(f"normalized vertex {p} escapes the unit square")
    img_list = list(image)
    for e in (vec(1, 0), vec(0, 1), vec(-1, 0), vec(0, -1)):
        if not polygon_contains(img_list, e):
            raise GeometryError("cross-polytope vertex outside normalized polygon")
    n = len(image)
    for a in range(n):
        if not _segment_quadrants(image[a], image[(a + 1) % n]):
            raise GeometryError(
                f"boundary segment {image[a]}-{image[(a + 1) % n]} crosses quadrants")
    return Normalization2D(x0, y0, T, image)


@dataclass(frozen=True)
class QuadrantCones:
    """First- and second-quadrant cones with their removed boundary rays."""

    p1: PolyhedralCone
    p2: PolyhedralCone
    removed: tuple[tuple[str, Vec], ...]
    condition_report: ConeConditionReport


def quadrant_cones(vertices) -> QuadrantCones:
    """Build the two-cone family for a normalized polygon C'.

    For every axis-parallel boundary segment of C' lying in the first
    (resp. second) closed quadrant, the corresponding open axis ray is
    removed from that cone.  Conditions (coverage and the equal-norm
    condition) are then verified on all vertex-pair differences under the
    gauge of C' and returned in the report.
    """
    verts = [vec(*v) for v in vertices]
    _validate_polygon(verts)
    n = len(verts)
    removed: dict[tuple[str, Vec], bool] = {}
    for a in range(n):
        u, v = verts[a], verts[(a + 1) % n]
        quads = _segment_quadrants(u, v)
        if not quads:
            raise GeometryError(
                f"segment {u}-{v} crosses two quadrants; input is not normalized")
        x_parallel = u[1] == v[1]
        y_parallel = u[0] == v[0]
        if 0 in quads:  # first quadrant
            if x_parallel:
                removed[("p1", vec(1, 0))] = True
            if y_parallel:
                removed[("p1", vec(0, 1))] = True
        if 1 in quads:  # second quadrant
            if x_parallel:
                removed[("p2", vec(-1, 0))] = True
            if y_parallel:
                removed[("p2", vec(0, 1))] = True

    # A ray removed from both cones would leave it uncovered; the
    # normalization invariant rules this out.
    if ("p1", vec(0, 1)) in removed and ("p2", vec(0, 1)) in removed:
        raise GeometryError(
            "y-parallel boundary segments in both upper quadrants; not normalized")
    if ("p1", vec(1, 0)) in removed and ("p2", vec(-1, 0)) in removed:
        raise GeometryError(
            "x-parallel boundary segments in both upper quadrants; not normalized")

    p1 = PolyhedralCone(
        facets=(vec(1, 0), vec(0, 1)),
        excluded_rays=tuple(r for c, r in removed if c == "p1"))
    p2 = PolyhedralCone(
        facets=(vec(-1, 0), vec(0, 1)),
        excluded_rays=tuple(r for c, r in removed if c == "p2"))

    gauge = polygon_gauge(verts)
    diffs = [vsub(verts[b], verts[a])
             for a in range(n) for b in range(n) if a != b]
    report = check_cone_conditions((p1, p2), gauge, diffs)
    return QuadrantCones(p1, p2, tuple(removed), report)


@dataclass
class PlanarCertificate:
    """(k+1)^2 bound certificate for a planar k-distance set."""

    normalization: Normalization2D
    cones: QuadrantCones
    chain: HeightCertificate
    k: int
    claimed: int

    @property
    def ok(self) -> bool:
        return (self.chain.ok and self.chain.h <= self.k
                and self.chain.bound <= self.claimed)


def planar_bound_certificate(spec: NormSpec, ps: PointSet, k: int) -> PlanarCertificate:
    """Compose normalization, quadrant cones, and the chain certificate.

    The point set is transformed by the normalization map (gauge covariance
    makes distances under the gauge of C' equal to the original distances),
    and the chain certificate is run with the two quadrant cones.
    """
    if spec.dim != 2 or not spec.exact:
        raise InputError("planar bound requires a 2-dimensional exact norm")
    if distance_spectrum(spec, ps).k != k:
        raise InputError(f"point set is not a {k}-distance set under the given norm")
    verts = polygon_vertices_2d(spec)
    nrm = max_area_normalization(verts)
    qc = quadrant_cones(nrm.vertices)
    gauge = polygon_gauge(list(nrm.vertices))
    image = PointSet(2, tuple(apply_matrix(nrm.matrix, p) for p in ps.points))
    cert = chain_certificate(gauge, image, (qc.p1, qc.p2))
    return PlanarCertificate(nrm, qc, cert, k, (k + 1) ** 2)
