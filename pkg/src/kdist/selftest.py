"""Scaled-down, fast versions of the acceptance criteria for `kdist selftest`.

The full-scale criteria live in the pytest suite (tests/test_acceptance.py);
this module reuses the same generators with smaller counts so a user can
sanity-check an installation in well under a minute.
"""

from __future__ import annotations

import random
from itertools import product

from .chains import chain_certificate, linf_cone_family
from .cover import (cone_halfwidth_check, cover_assignment, general_bound,
                    generated_cones, greedy_separated_set, packing_bound_check,
                    separated_set_capacity, sphere_samples)
from .decompose import (brunn_minkowski_mc_check, decompose_recursive_bound,
                        exact_box_union_area, find_equivalence_threshold,
                        volume_ratio_bound)
from .errors import KdistError
from .gen import (clustered_lattice_set, half_open_grid_set, integer_ceil_root,
                  random_lattice_subset, random_symmetric_polygon)
from .norms import hexagon_gauge, l1, linf, polygon_vertices_2d, vec
from .planar import max_area_normalization, planar_bound_certificate
from .search import (SearchProblem, branch_and_bound, brute_force_oracle,
                     extremal_grid, verify_extremal_uniqueness)
from .spectrum import PointSet, best_distinct_witness, distance_spectrum


def _check_grid_extremality() -> str:
    for d, k in ((1, 3), (2, 1), (2, 2)):
        ground = PointSet(d, tuple(vec(*c) for c in product(range(k + 2), repeat=d)))
        result = branch_and_bound(SearchProblem(linf(d), ground, k))
        assert result.size == (k + 1) ** d, (d, k, result.size)
    return "grid optimum (k+1)^d on small lattices"


def _check_height_certificates() -> str:
    rng = random.Random(7)
    for _ in range(30):
        d = rng.choice((1, 2, 3))
        ps = random_lattice_subset(rng, d, 5, rng.randint(2, 10))
        k = distance_spectrum(linf(d), ps).k
        cert = chain_certificate(linf(d), ps, linf_cone_family(d))
        assert cert.injective and cert.h <= k and len(ps) <= (k + 1) ** d
    return "30 random height certificates injective with h <= k"


def _check_distinct_witness() -> str:
    rng = random.Random(11)
    for _ in range(30):
        d = rng.choice((1, 2, 3))
        n = rng.randint(2, 30)
        ps = random_lattice_subset(rng, d, 7, n)
        _, count = best_distinct_witness(linf(d), ps)
        assert count >= integer_ceil_root(len(ps), d) - 1
    for n in range(5, 17):
        ps = half_open_grid_set(n, 2)
        _, count = best_distinct_witness(linf(2), ps)
        assert count == integer_ceil_root(n, 2) - 1
    return "witness bound on 30 random sets; equality on the half-open grids"


def _check_planar_bound() -> str:
    hexa = hexagon_gauge()
    verts = polygon_vertices_2d(hexa)
    ground = PointSet(2, tuple(verts) + (vec(0, 0),))
    best = branch_and_bound(SearchProblem(hexa, ground, 1))
    assert best.size == 3
    cert = planar_bound_certificate(hexa, PointSet(2, best.points), 1)
    assert cert.ok and cert.claimed == 4
    for spec in (linf(2), l1(2)):
        grid = extremal_grid(2, 2)
        k = distance_spectrum(spec, grid).k
        cert = planar_bound_certificate(spec, grid, k)
        assert cert.ok
    return "hexagon optimum 3 < 4; planar certificates pass"


def _check_cluster_equivalence() -> str:
    rng = random.Random(13)
    done = 0
    while done < 15:
        d = rng.choice((1, 2, 3))
        ps = clustered_lattice_set(rng, d)
        spec = linf(d)
        sp = distance_spectrum(spec, ps)
        if not (2 <= sp.k <= 4 and sp.ratio > 2 ** (sp.k - 1)):
            continue
        assert find_equivalence_threshold(sp, ps, spec) is not None
        node = decompose_recursive_bound(ps, spec)
        assert len(ps) <= node.bound <= 2 ** (sp.k * d)
        done += 1
    return "threshold found and 2^{kd} certified on 15 clustered sets"


def _check_volume_bound() -> str:
    spec = linf(2)
    ps = PointSet(2, (vec(0, 0), vec(1, 0)))
    sp = distance_spectrum(spec, ps)
    assert len(ps) <= volume_ratio_bound(sp, 2)
    exact = exact_box_union_area(ps.points, sp.distances[0] / 2)
    assert exact == 2  # two touching unit squares
    report = brunn_minkowski_mc_check(spec, ps, trials=50_000, seed=3)
    assert report.ok
    return "volume bound, exact box union, and MC agreement"


def _check_cone_cover() -> str:
    spec = hexagon_gauge()
    samples = sphere_samples(spec, 2000, seed=5)
    sep = greedy_separated_set(spec, samples)
    packing_bound_check(sep, spec)
    assert len(sep.centers) <= separated_set_capacity(2) == 20
    fresh = sphere_samples(spec, 200, seed=6)
    assert cover_assignment(sep, spec, fresh).ok
    for cone in generated_cones(sep, spec, samples):
        assert cone_halfwidth_check(cone, spec, trials=100, seed=5).ok
    assert general_bound(2, 2) == 16
    return "greedy cover of the hexagon sphere with half-width < 1/2"


def _check_oracle_equivalence() -> str:
    rng = random.Random(17)
    for _ in range(10):
        d = rng.choice((1, 2))
        ps = random_lattice_subset(rng, d, 4, rng.randint(3, 10))
        k = rng.randint(1, 3)
        problem = SearchProblem(linf(d), ps, k)
        assert branch_and_bound(problem).size == brute_force_oracle(problem).size
    return "branch-and-bound matches the oracle on 10 instances"


def _check_extremal_uniqueness() -> str:
    for k, m in ((1, 2), (2, 3)):
        report = verify_extremal_uniqueness(2, k, m)
        assert report.ok and report.optima
    return "only grid homothets among desk-scale optima"


CHECKS = (
    ("1 grid extremality", _check_grid_extremality),
    ("2 height certificates", _check_height_certificates),
    ("3 distinct-distance witness", _check_distinct_witness),
    ("4 planar bound", _check_planar_bound),
    ("5 cluster equivalence + 2^{kd}", _check_cluster_equivalence),
    ("6 volume bound + MC", _check_volume_bound),
    ("7 cone cover", _check_cone_cover),
    ("8 oracle equivalence", _check_oracle_equivalence),
    ("9 extremal uniqueness", _check_extremal_uniqueness),
    ("10 normalization", lambda: _check_normalization()),
)


def _check_normalization() -> str:
    rng = random.Random(19)
    for _ in range(10):
        max_area_normalization(random_symmetric_polygon(rng))
    return "10 random symmetric polygons normalized with exact invariants"


def run_selftest() -> int:
    failures = 0
    for name, check in CHECKS:
        try:
            detail = check()
            status = "PASS"
        except (AssertionError, KdistError) as exc:
            detail = str(exc)
            status = "FAIL"
            failures += 1
        print(f"{status}  {name:32s} {detail}")
    print(f"{len(CHECKS) - failures}/{len(CHECKS)} checks passed")
    return 0 if failures == 0 else 2
