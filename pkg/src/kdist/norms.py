"""Minkowski norms with exact rational evaluation.

Supported gauges: l-infinity, l1, polytopal gauges given by facet
functionals (evaluated as ``max_i |a_i . x|``), and a float lp fallback.
The exact kinds evaluate in :class:`fractions.Fraction`, so equality of
distances is decidable; lp is the only inexact kind and is quarantined
behind the relative tolerance used by spectrum grouping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .errors import GeometryError, InputError

Vec = tuple[Fraction, ...]

#: Relative tolerance for the float lp path (distance grouping, unit checks).
FLOAT_EPS = 1e-9

EXACT_KINDS = ("linf", "l1", "polytopal")
KINDS = EXACT_KINDS + ("lp",)


# ---------------------------------------------------------------------------
# rational vectors

def vec(*coords) -> Vec:
    """Build an exact rational vector from ints, Fractions or strings."""
    return tuple(Fraction(c) for c in coords)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(v: Vec) -> Vec:
    return tuple(-a for a in v)


def vscale(q, v: Vec) -> Vec:
    return tuple(q * a for a in v)


def dot(a: Vec, v: Vec):
    return sum(x * y for x, y in zip(a, v))


def cross2(u: Vec, v: Vec):
    return u[0] * v[1] - u[1] * v[0]


def is_zero(v: Vec) -> bool:
    return all(a == 0 for a in v)


def rat_to_pair(q: Fraction) -> list[int]:
    q = Fraction(q)
    return [q.numerator, q.denominator]


def rat_from_pair(obj) -> Fraction:
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        num, den = obj
        if isinstance(num, int) and isinstance(den, int) and den != 0:
            return Fraction(num, den)
    raise InputError(f"not a rational [num, den] pair: {obj!r}")


def vec_to_json(v: Vec) -> list[list[int]]:
    return [rat_to_pair(a) for a in v]


def vec_from_json(obj) -> Vec:
    if not isinstance(obj, (list, tuple)):
        raise InputError(f"not a vector: {obj!r}")
    return tuple(rat_from_pair(a) for a in obj)


# ---------------------------------------------------------------------------
# norm specifications

@dataclass(frozen=True)
class NormSpec:
    """A symmetric gauge on R^dim.

    kind is one of "linf", "l1", "polytopal", "lp".  Polytopal gauges carry
    facet functionals a_i and evaluate as max_i |a_i . x|; "lp" carries the
    exponent p > 1 and is the only inexact kind.
    """

    dim: int
    kind: str
    functionals: tuple[Vec, ...] = ()
    p: float = 0.0

    def __post_init__(self):
        if self.dim < 1:
            raise InputError(f"dimension must be >= 1, got {self.dim}")
        if self.kind not in KINDS:
            raise InputError(f"unknown norm kind {self.kind!r}")
        if self.kind == "polytopal":
            if not self.functionals:
                raise InputError("polytopal gauge needs at least one functional")
            for a in self.functionals:
                if len(a) != self.dim:
                    raise InputError("functional length does not match dimension")
        if self.kind == "lp" and not self.p > 1:
            raise InputError(f"lp exponent must be > 1, got {self.p}")

    @property
    def exact(self) -> bool:
        return self.kind != "lp"


def linf(dim: int) -> NormSpec:
    return NormSpec(dim, "linf")


def l1(dim: int) -> NormSpec:
    return NormSpec(dim, "l1")


def polytopal(functionals) -> NormSpec:
    funcs = tuple(vec(*a) for a in functionals)
    if not funcs:
        raise InputError("polytopal gauge needs at least one functional")
    return NormSpec(len(funcs[0]), "polytopal", funcs)


def lp(dim: int, p: float) -> NormSpec:
    return NormSpec(dim, "lp", p=float(p))


def hexagon_gauge() -> NormSpec:
    """The planar gauge max(|x|, |y|, |x - y|); a regular-hexagon unit ball."""
    return polytopal([(1, 0), (0, 1), (1, -1)])


def norm_eval(spec: NormSpec, v: Vec):
    """Evaluate the gauge; Fraction for exact kinds, float for lp."""
    if len(v) != spec.dim:
        raise InputError(f"vector has dimension {len(v)}, expected {spec.dim}")
    if spec.kind == "linf":
        return max(abs(a) for a in v)
    if spec.kind == "l1":
        return sum(abs(a) for a in v)
    if spec.kind == "polytopal":
        return max(abs(dot(a, v)) for a in spec.functionals)
    return sum(abs(float(a)) ** spec.p for a in v) ** (1.0 / spec.p)


def is_unit(spec: NormSpec, v: Vec) -> bool:
    n = norm_eval(spec, v)
    if spec.exact:
        return n == 1
    return abs(n - 1.0) <= FLOAT_EPS


# ---------------------------------------------------------------------------
# axiom validation

_HOMOGENEITY_SCALARS = (Fraction(2), Fraction(-3), Fraction(1, 2))


def validate_norm(spec: NormSpec, samples) -> list[dict]:
    """Check norm axioms on a finite sample; returns a list of violations.

    Checks positive definiteness, symmetry, homogeneity (rational scalars)
    and the triangle inequality on all sample pairs.  Violations are report
    entries, not errors.
    """
    samples = list(samples)
    if not samples:
        raise InputError("samples must be nonempty")
    tol = 0.0 if spec.exact else FLOAT_EPS
    out: list[dict] = []

    norms = [norm_eval(spec, v) for v in samples]
    for v, n in zip(samples, norms):
        if not is_zero(v) and n == 0:
            out.append({"kind": "positive-definiteness", "vector": v})
        m = norm_eval(spec, vneg(v))
        if abs(m - n) > tol * max(abs(n), 1):
            out.append({"kind": "symmetry", "vector": v})
        for lam in _HOMOGENEITY_SCALARS:
            s = norm_eval(spec, vscale(lam, v))
            expect = abs(lam) * n
            if abs(s - expect) > tol * max(abs(expect), 1):
                out.append({"kind": "homogeneity", "vector": v, "scalar": lam})
    for i, u in enumerate(samples):
        for v, nv in zip(samples[i + 1:], norms[i + 1:]):
            s = norm_eval(spec, vadd(u, v))
            if s > norms[i] + nv + tol * max(abs(s), 1):
                out.append({"kind": "triangle", "u": u, "v": v})
    return out


# ---------------------------------------------------------------------------
# unit-ball polygon (d = 2, exact kinds only)

def _gauge_functionals_2d(spec: NormSpec) -> tuple[Vec, ...]:
    if spec.kind == "linf":
        return (vec(1, 0), vec(0, 1))
    if spec.kind == "l1":
        return (vec(1, 1), vec(1, -1))
    return spec.functionals


def _ccw_cmp(p: Vec, q: Vec) -> int:
    # Angular order starting at the positive x-axis, counterclockwise.
    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    hp, hq = half(p), half(q)
    if hp != hq:
        return -1 if hp < hq else 1
    c = cross2(p, q)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def polygon_vertices_2d(spec: NormSpec) -> list[Vec]:
    """Vertices of the unit ball of a 2D exact gauge, counterclockwise.

    The list is centrally symmetric and starts at the smallest nonnegative
    angle from the positive x-axis.
    """
    if spec.dim != 2:
        raise InputError("polygon_vertices_2d requires dimension 2")
    if not spec.exact:
        raise InputError("polygon_vertices_2d requires an exact norm kind")
    funcs = _gauge_functionals_2d(spec)
    if any(is_zero(a) for a in funcs):
        raise GeometryError("zero functional in gauge")
    if all(cross2(funcs[0], a) == 0 for a in funcs):
        raise GeometryError("functionals do not span the plane; unit ball unbounded")

    lines = [a for a in funcs] + [vneg(a) for a in funcs]
    verts: set[Vec] = set()
    for i, a in enumerate(lines):
        for b in lines[i + 1:]:
            det = cross2(a, b)
            if det == 0:
                continue
            # Solve a.x = 1, b.x = 1.
            x = (b[1] - a[1]) / det
            y = (a[0] - b[0]) / det
            p = (x, y)
            if all(abs(dot(c, p)) <= 1 for c in funcs):
                verts.add(p)
    if len(verts) < 3:
        raise GeometryError("degenerate facet set; unit ball has empty interior")
    return sorted(verts, key=cmp_to_key(_ccw_cmp))


# ---------------------------------------------------------------------------
# JSON schema

def norm_to_json(spec: NormSpec) -> dict:
    obj: dict = {"dim": spec.dim, "kind": spec.kind}
    if spec.kind == "polytopal":
        obj["functionals"] = [vec_to_json(a) for a in spec.functionals]
    if spec.kind == "lp":
        obj["p"] = spec.p
    return obj


def norm_from_json(obj) -> NormSpec:
    if not isinstance(obj, dict):
        raise InputError("norm spec must be a JSON object")
    try:
        dim = int(obj["dim"])
        kind = obj["kind"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"norm spec missing dim/kind: {exc}") from exc
    if kind == "polytopal":
        funcs = tuple(vec_from_json(a) for a in obj.get("functionals", []))
        return NormSpec(dim, "polytopal", funcs)
    if kind == "lp":
        return NormSpec(dim, "lp", p=float(obj.get("p", 0.0)))
    return NormSpec(dim, kind)
