"""Command-line interface: JSON in, JSON certificates out.

Subcommands: spectrum, chains, normalize2d, conecover, decompose, search,
bound, selftest.  Exit status: 0 on success/pass, 1 on input errors, 2 on
a falsification alarm (a verified computation contradicting a bound).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .chains import chain_certificate, linf_cone_family
from .cover import (cone_halfwidth_check, cover_assignment, general_bound,
                    generated_cones, greedy_separated_set, packing_bound_check,
                    separated_set_capacity, sphere_samples)
from .decompose import decompose_recursive_bound
from .errors import CertificateError, FalsificationError, InputError, KdistError
from .norms import (NormSpec, norm_from_json, norm_to_json, rat_to_pair,
                    vec_to_json)
from .planar import max_area_normalization, planar_bound_certificate, \
    polygon_vertices_2d, quadrant_cones
from .search import SearchProblem, branch_and_bound, enumerate_optimal_subsets
from .spectrum import (PointSet, distance_spectrum, pointset_from_json,
                       pointset_to_json, spectrum_to_json)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _load_norm(path: str) -> NormSpec:
    return norm_from_json(_load_json(path))


def _load_points(path: str) -> PointSet:
    return pointset_from_json(_load_json(path))


def _digest(*objs) -> str:
    blob = json.dumps(objs, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _scalar_json(spec: NormSpec, value):
    return rat_to_pair(value) if spec.exact else float(value)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_spectrum(args) -> int:
    spec = _load_norm(args.norm)
    ps = _load_points(args.points)
    sp = distance_spectrum(spec, ps)
    _emit(spectrum_to_json(spec, sp))
    return 0


def _cmd_chains(args) -> int:
    spec = _load_norm(args.norm)
    if spec.kind != "linf":
        raise InputError("chains subcommand uses the coordinate cones of linf")
    ps = _load_points(args.points)
    cert = chain_certificate(spec, ps, linf_cone_family(spec.dim))
    sp = distance_spectrum(spec, ps)
    out = cert.to_json()
    out["k"] = sp.k
    out["observed"] = len(ps)
    _emit(out)
    if not cert.ok or cert.h > sp.k or len(ps) > cert.bound:
        raise FalsificationError("chain certificate failed on a k-distance set")
    return 0


def _cmd_normalize2d(args) -> int:
    spec = _load_norm(args.norm)
    verts = polygon_vertices_2d(spec)
    nrm = max_area_normalization(verts)
    qc = quadrant_cones(nrm.vertices)
    _emit({
        "x0": vec_to_json(nrm.x0),
        "y0": vec_to_json(nrm.y0),
        "matrix": [[rat_to_pair(a) for a in row] for row in nrm.matrix],
        "vertices": [vec_to_json(v) for v in nrm.vertices],
        "removed_rays": [{"cone": c, "ray": vec_to_json(r)} for c, r in qc.removed],
        "conditions_ok": qc.condition_report.ok,
        "uncovered": [vec_to_json(v) for v in qc.condition_report.uncovered],
        "equal_norm_violations": len(qc.condition_report.equal_norm_violations),
    })
    return 0 if qc.condition_report.ok else 2


def _cmd_conecover(args) -> int:
    spec = _load_norm(args.norm)
    samples = sphere_samples(spec, args.samples, seed=args.seed)
    sep = greedy_separated_set(spec, samples)
    packing_bound_check(sep, spec)
    fresh = sphere_samples(spec, max(args.samples // 10, 10), seed=args.seed + 1)
    report = cover_assignment(sep, spec, fresh)
    cones = generated_cones(sep, spec, samples)
    halfwidths = [cone_halfwidth_check(c, spec, trials=args.trials, seed=args.seed)
                  for c in cones]
    _emit({
        "centers": [vec_to_json(c) if spec.exact else list(c)
                    for c in sep.centers],
        "m": len(sep.centers),
        "capacity": separated_set_capacity(spec.dim),
        "fresh_tested": len(fresh),
        "unassigned": len(report.unassigned),
        "halfwidth_ok": all(h.ok for h in halfwidths),
        "max_halfwidth": max((float(h.max_distance) for h in halfwidths),
                             default=0.0),
    })
    if report.unassigned or not all(h.ok for h in halfwidths):
        raise FalsificationError("cone cover construction check failed")
    return 0


def _cmd_decompose(args) -> int:
    spec = _load_norm(args.norm)
    ps = _load_points(args.points)
    node = decompose_recursive_bound(ps, spec)
    _emit(node.to_json())
    return 0


def _cmd_search(args) -> int:
    spec = _load_norm(args.norm)
    ground = _load_points(args.ground)
    problem = SearchProblem(spec, ground, args.k)
    result = branch_and_bound(problem, use_bound_pruning=args.use_bound_pruning)
    out = {
        "size": result.size,
        "points": [vec_to_json(p) if spec.exact else list(p)
                   for p in result.points],
        "spectrum": spectrum_to_json(spec, result.spectrum),
        "nodes": result.nodes,
        "optimal": result.optimal,
    }
    if args.enumerate_optima:
        optima = enumerate_optimal_subsets(problem, result.size)
        out["optima"] = [[vec_to_json(p) for p in s] for s in optima] \
            if spec.exact else [[list(p) for p in s] for s in optima]
    _emit(out)
    return 0


def _cmd_bound(args) -> int:
    spec = _load_norm(args.norm)
    ps = _load_points(args.points)
    sp = distance_spectrum(spec, ps)
    k, d, observed = sp.k, spec.dim, len(ps)
    witnesses: dict = {}
    if k == 0:
        name, claimed = "single-point", 1
    elif spec.kind == "linf":
        name = "parallelotope-chain"
        cert = chain_certificate(spec, ps, linf_cone_family(d))
        claimed = (k + 1) ** d
        witnesses = {"chain": cert.to_json()}
        if not cert.ok or cert.h > k:
            raise FalsificationError("chain certificate failed under linf")
    elif d == 2 and spec.exact:
        name = "planar-two-cones"
        cert = planar_bound_certificate(spec, ps, k)
        claimed = cert.claimed
        witnesses = {
            "chain": cert.chain.to_json(),
            "removed_rays": [{"cone": c, "ray": vec_to_json(r)}
                             for c, r in cert.cones.removed],
        }
        if not cert.ok:
            raise FalsificationError("planar certificate failed")
    else:
        name = "general-minkowski"
        claimed = general_bound(k, d)
        node = decompose_recursive_bound(ps, spec)
        witnesses = {"decomposition": node.to_json()}
    passed = observed <= claimed
    _emit({
        "bound": name,
        "version": __version__,
        "inputs_digest": _digest(norm_to_json(spec), pointset_to_json(ps)),
        "k": k,
        "dim": d,
        "claimed": claimed,
        "observed": observed,
        "pass": passed,
        "witnesses": witnesses,
    })
    if not passed:
        raise FalsificationError(
            f"observed cardinality {observed} exceeds the proved bound {claimed}")
    return 0


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest
    return run_selftest()


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kdist",
        description="Bounds and certificates for k-distance sets in Minkowski spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="distance spectrum of a point set")
    p.add_argument("--norm", required=True)
    p.add_argument("--points", required=True)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("chains", help="linf chain-height certificate")
    p.add_argument("--norm", required=True)
    p.add_argument("--points", required=True)
    p.set_defaults(func=_cmd_chains)

    p = sub.add_parser("normalize2d", help="planar max-area normalization")
    p.add_argument("--norm", required=True)
    p.set_defaults(func=_cmd_normalize2d)

    p = sub.add_parser("conecover", help="greedy separated set and cone cover")
    p.add_argument("--norm", required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_conecover)

    p = sub.add_parser("decompose", help="cluster decomposition bound trace")
    p.add_argument("--norm", required=True)
    p.add_argument("--points", required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("search", help="maximum k-distance subset search")
    p.add_argument("--norm", required=True)
    p.add_argument("--ground", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--use-bound-pruning", action="store_true")
    p.add_argument("--enumerate-optima", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("bound", help="tightest applicable cardinality certificate")
    p.add_argument("--norm", required=True)
    p.add_argument("--points", required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("selftest", help="run the scaled-down acceptance checks")
    p.set_defaults(func=_cmd_selftest)
    return parser


def run_command(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except (FalsificationError, CertificateError) as exc:
        print(f"falsification alarm: {exc}", file=sys.stderr)
        return 2
    except KdistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
