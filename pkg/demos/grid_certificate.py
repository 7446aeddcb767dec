"""Walkthrough: the (k+1)^d bound for k-distance sets under l-infinity.

The grid {0, ..., k}^d realizes exactly k distances and the chain-height
certificate shows no k-distance set can be larger: each point gets a
vector of longest-chain heights in the 2d coordinate cones, the map is
injective, and every height is at most k.
"""

from kdist import (PointSet, SearchProblem, branch_and_bound,
                   chain_certificate, distance_spectrum, linf,
                   linf_cone_family, vec)
from kdist.search import extremal_grid

k, d = 2, 2
grid = extremal_grid(k, d)
spec = linf(d)

sp = distance_spectrum(spec, grid)
print(f"grid {{0..{k}}}^{d}: {len(grid)} points, "
      f"distances {[str(x) for x in sp.distances]}")

cert = chain_certificate(spec, grid, linf_cone_family(d))
print(f"chain certificate: h = {cert.h}, bound (h+1)^{d} = {cert.bound}, "
      f"injective = {cert.injective}")

# Exhaustive search over a strictly larger lattice confirms the grid is
# a maximum 2-distance set.
ground = PointSet.of([vec(x, y) for x in range(k + 2) for y in range(k + 2)])
result = branch_and_bound(SearchProblem(spec, ground, k))
print(f"search over {{0..{k + 1}}}^2: optimum size {result.size} "
      f"= (k+1)^d = {(k + 1) ** d}")
print(f"an optimum: {[tuple(int(a) for a in p) for p in result.points]}")
