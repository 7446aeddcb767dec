from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kdist import (GeometryError, InputError, hexagon_gauge, l1, linf, lp,
                   norm_eval, polygon_vertices_2d, polytopal, validate_norm,
                   vec)
from kdist.norms import norm_from_json, norm_to_json, vadd, vscale, vsub

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=8)


def rvec(dim):
    return st.tuples(*([rationals] * dim))


def test_norm_eval_examples():
    assert norm_eval(linf(2), vec(3, -4)) == 4
    assert norm_eval(l1(2), vec(3, -4)) == 7
    assert norm_eval(hexagon_gauge(), vec(2, -1)) == 3


def test_norm_eval_lp():
    assert norm_eval(lp(2, 2.0), (3.0, 4.0)) == pytest.approx(5.0)


def test_dimension_mismatch():
    with pytest.raises(InputError):
        norm_eval(linf(2), vec(1, 2, 3))


def test_validate_norm_clean():
    samples = [vec(1, 2), vec(-3, 5), vec(0, 0), vec(7, -7)]
    assert validate_norm(linf(2), samples) == []
    assert validate_norm(l1(2), samples) == []


def test_validate_norm_positive_definiteness_violation():
    bad = polytopal([(1, 0)])  # d=2 gauge that kills (0, 1)
    report = validate_norm(bad, [vec(0, 1), vec(1, 0)])
    assert any(v["kind"] == "positive-definiteness" for v in report)


def test_validate_norm_lp_float():
    import random
    rng = random.Random(0)
    samples = [tuple(rng.uniform(-5, 5) for _ in range(2)) for _ in range(100)]
    assert validate_norm(lp(2, 2.0), samples) == []


def test_polygon_vertices_square():
    assert polygon_vertices_2d(linf(2)) == [
        vec(1, 1), vec(-1, 1), vec(-1, -1), vec(1, -1)]


def test_polygon_vertices_diamond():
    assert polygon_vertices_2d(l1(2)) == [
        vec(1, 0), vec(0, 1), vec(-1, 0), vec(0, -1)]


def test_polygon_vertices_hexagon():
    assert polygon_vertices_2d(hexagon_gauge()) == [
        vec(1, 0), vec(1, 1), vec(0, 1), vec(-1, 0), vec(-1, -1), vec(0, -1)]


def test_polygon_vertices_unbounded():
    with pytest.raises(GeometryError):
        polygon_vertices_2d(polytopal([(1, 0), (2, 0)]))


@pytest.mark.parametrize("spec", [linf(2), l1(2), hexagon_gauge()])
def test_polygon_vertices_on_sphere(spec):
    verts = polygon_vertices_2d(spec)
    assert all(norm_eval(spec, v) == 1 for v in verts)
    assert set(verts) == {tuple(-a for a in v) for v in verts}
    n = len(verts)
    for i in range(n):
        mid = vscale(Fraction(1, 2), vadd(verts[i], verts[(i + 1) % n]))
        assert norm_eval(spec, mid) <= 1


@pytest.mark.parametrize("spec", [linf(3), l1(3), hexagon_gauge()])
@settings(max_examples=60)
@given(data=st.data())
def test_norm_axioms(spec, data):
    u = data.draw(rvec(spec.dim))
    v = data.draw(rvec(spec.dim))
    q = data.draw(rationals)
    assert norm_eval(spec, tuple(-a for a in u)) == norm_eval(spec, u)
    assert norm_eval(spec, vscale(q, u)) == abs(q) * norm_eval(spec, u)
    assert norm_eval(spec, vadd(u, v)) <= norm_eval(spec, u) + norm_eval(spec, v)
    if any(a != 0 for a in u):
        assert norm_eval(spec, u) > 0


@pytest.mark.parametrize("spec", [linf(2), l1(3), hexagon_gauge(), lp(2, 2.5)])
def test_norm_json_round_trip(spec):
    assert norm_from_json(norm_to_json(spec)) == spec
