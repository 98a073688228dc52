"""Command-line front end.

Every command prints one JSON document (or TSV with --tsv) with sorted keys
and sorted face/pair lists, so identical configurations produce byte-identical
output.  Exit codes: 0 success, 1 domain error (with error.kind), 2 parse
error.
"""

import argparse
import json
import sys

from . import fileio, hilbert, oracle, relax, stdpairs
from .errors import DomainError, ParseError
from .fileio import face_key, face_out, frac_out
from .groebner import CostOrder, cached_groebner, solve_ip
from .linalg import dot
from .stdpairs import initial_ideal
from .triangulation import regular_subdivision, unimodularity_report


def _emit(args, payload):
    if getattr(args, "tsv", False):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, list):
                value = ";".join(json.dumps(v, separators=(",", ":")) for v in value)
            elif isinstance(value, dict):
                value = ";".join(f"{k}={json.dumps(v, separators=(',', ':'))}"
                                 for k, v in sorted(value.items()))
            print(f"{key}\t{value}")
    else:
        print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))


def _triangulation_payload(a, delta, tdi):
    return {
        "maximal_faces": [face_out(f) for f in delta.maximal_faces],
        "certificates": {
            face_key(f): [frac_out(v) for v in y]
            for f, y in zip(delta.maximal_faces, delta.certificates)
        },
        "triangulation": delta.is_triangulation,
        "tdi": tdi,
    }


def cmd_triangulate(args):
    a = fileio.read_matrix(args.matrix)
    cost = fileio.read_vector(args.cost)
    delta = regular_subdivision(a, cost)
    tdi = unimodularity_report(a, delta).tdi if delta.is_triangulation else False
    _emit(args, _triangulation_payload(a, delta, tdi))


def cmd_groebner(args):
    a = fileio.read_matrix(args.matrix)
    cost = fileio.read_vector(args.cost)
    gb = cached_groebner(a, CostOrder.from_cost(cost))
    _emit(args, {
        "elements": [{"plus": list(b.head), "minus": list(b.tail)} for b in gb.elements],
        "generic": gb.generic,
    })


def cmd_solve(args):
    a = fileio.read_matrix(args.matrix)
    cost = fileio.read_vector(args.cost)
    b = fileio.read_vector(args.rhs)
    opt = solve_ip(a, CostOrder.from_cost(cost), b)
    _emit(args, {"optimum": list(opt), "value": dot(cost, opt)})


def cmd_relax(args):
    a = fileio.read_matrix(args.matrix)
    cost = fileio.read_vector(args.cost)
    b = fileio.read_vector(args.rhs)
    tau = fileio.read_face(args.face)
    delta = regular_subdivision(a, cost)
    rel = relax.build_relaxation(a, cost, delta, tau, b)
    out = relax.solve_relaxation(rel)
    _emit(args, {
        "face": face_out(tau),
        "z": list(out.z),
        "x": list(out.x),
        "solves_ip": out.solves_ip,
        "value": out.value,
    })


def cmd_solve_sp(args):
    a = fileio.read_matrix(args.matrix)
    cost = fileio.read_vector(args.cost)
    b = fileio.read_vector(args.rhs)
    _, _, decomp, _ = stdpairs.decomposition_for(a, cost)
    opt, pair = relax.solve_via_standard_pairs(decomp, a, b)
    _emit(args, {
        "optimum": list(opt),
        "value": dot(cost, opt),
        "pair": {"root": list(pair.root), "face": face_out(pair.face)},
    })


def _decomposition_payload(decomp, delta, a):
    report = stdpairs.associated_report(decomp, delta)
    return {
        "pairs": [
            {"root": list(p.root), "face": face_out(p.face)} for p in decomp.pairs
        ],
        "multiplicities": {face_key(f): c for f, c in report.multiplicities},
        "arithmetic_degree": decomp.arithmetic_degree,
        "associated_sets": [face_out(f) for f in report.associated_sets],
        "gomory_family": stdpairs.is_gomory_family(decomp, delta),
        "max_chain": [face_out(f) for f in report.max_chain],
    }


def cmd_stdpairs(args):
    a = fileio.read_matrix(args.matrix)
    cost = fileio.read_vector(args.cost)
    delta, gb, decomp, refined = stdpairs.decomposition_for(a, cost)
    if args.oracle:
        box = [max(e - 1, 0) for e in initial_ideal(gb).max_exponents()]
        decomp = oracle.brute_force_standard_pairs(a, cost, delta, root_box=box, margin=1)
        payload = _decomposition_payload(decomp, delta, a)
        payload["oracle"] = True
    else:
        payload = _decomposition_payload(decomp, delta, a)
    if refined:
        payload["refined"] = True
    _emit(args, payload)


def cmd_assoc(args):
    a = fileio.read_matrix(args.matrix)
    cost = fileio.read_vector(args.cost)
    delta, gb, decomp, refined = stdpairs.decomposition_for(a, cost)
    report = stdpairs.associated_report(decomp, delta)
    _emit(args, {
        "associated_sets": [face_out(f) for f in report.associated_sets],
        "multiplicities": {face_key(f): c for f, c in report.multiplicities},
        "arithmetic_degree": report.arithmetic_degree,
        "max_chain": [face_out(f) for f in report.max_chain],
        "max_chain_length": report.max_chain_length,
        "length_bound": report.length_bound,
    })


def cmd_gomory(args):
    a = fileio.read_matrix(args.matrix)
    cost = fileio.read_vector(args.cost)
    delta, _, decomp, _ = stdpairs.decomposition_for(a, cost)
    _emit(args, {"gomory_family": stdpairs.is_gomory_family(decomp, delta)})


def cmd_hilbert(args):
    mat = fileio.read_matrix(args.generators)
    gens = [mat.column(j) for j in range(mat.n)]
    basis = hilbert.hilbert_basis(gens)
    _emit(args, {"basis": [list(h) for h in basis.elements]})


def cmd_normality(args):
    a = fileio.read_matrix(args.matrix)
    delta = fileio.read_faces_json(args.triangulation) if args.triangulation else None
    report = hilbert.normality_report(a, delta, check_super=args.super)
    payload = {
        "normal": report.normal,
        "witness": list(report.witness) if report.witness else None,
    }
    if delta is not None:
        payload["delta_normal"] = report.delta_normal
        payload["per_face"] = {face_key(f): flag for f, flag in report.per_face}
    if args.super:
        payload["supernormal"] = report.supernormal
    _emit(args, payload)


def cmd_gomory_cost(args):
    a = fileio.read_matrix(args.matrix)
    faces = fileio.read_faces_json(args.triangulation)
    result = hilbert.gomory_cost(a, faces)
    _emit(args, {
        "cost": list(result.cost),
        "pairs": [
            {"root": list(p.root), "face": face_out(p.face)}
            for p in sorted(result.pairs, key=lambda p: (len(p.face), p.face, p.root))
        ],
    })


def cmd_sharp_family(args):
    a, cost = hilbert.sharp_family(args.m)
    _emit(args, {
        "matrix": [list(r) for r in a.entries],
        "cost": list(cost),
        "d": a.d,
        "n": a.n,
    })


def cmd_oracle(args):
    if args.oracle_cmd == "points":
        rows = fileio.read_raw_matrix(args.rows)
        offs = fileio.read_vector(args.offsets)
        poly = oracle.IneqPolytope.from_rows(list(zip(rows, offs)))
        pts = oracle.enumerate_lattice_points(poly)
        _emit(args, {"points": [list(p) for p in pts], "oracle": True})
    elif args.oracle_cmd == "fiber":
        a = fileio.read_matrix(args.matrix)
        cost = fileio.read_vector(args.cost)
        b = fileio.read_vector(args.rhs)
        opt, fiber = oracle.fiber_solve(a, cost, b, with_fiber=True)
        _emit(args, {
            "optimum": list(opt) if opt else None,
            "fiber": [list(x) for x in fiber],
            "oracle": True,
        })
    else:  # stdpairs
        args.oracle = True
        cmd_stdpairs(args)


def build_parser():
    p = argparse.ArgumentParser(prog="toricip", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, matrix=True, cost=True, rhs=False):
        if matrix:
            sp.add_argument("--matrix", required=True)
        if cost:
            sp.add_argument("--cost", required=True)
        if rhs:
            sp.add_argument("--rhs", required=True)
        sp.add_argument("--json", action="store_true", default=True)
        sp.add_argument("--tsv", action="store_true", default=False)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("triangulate")
    common(sp)
    sp.set_defaults(func=cmd_triangulate)

    sp = sub.add_parser("groebner")
    common(sp)
    sp.set_defaults(func=cmd_groebner)

    sp = sub.add_parser("solve")
    common(sp, rhs=True)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("relax")
    common(sp, rhs=True)
    sp.add_argument("--face", default="")
    sp.set_defaults(func=cmd_relax)

    sp = sub.add_parser("solve-sp")
    common(sp, rhs=True)
    sp.set_defaults(func=cmd_solve_sp)

    sp = sub.add_parser("stdpairs")
    common(sp)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_stdpairs)

    sp = sub.add_parser("assoc")
    common(sp)
    sp.set_defaults(func=cmd_assoc)

    sp = sub.add_parser("gomory")
    common(sp)
    sp.set_defaults(func=cmd_gomory)

    sp = sub.add_parser("hilbert")
    sp.add_argument("--generators", required=True)
    sp.add_argument("--tsv", action="store_true", default=False)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("normality")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--triangulation", default=None)
    sp.add_argument("--super", action="store_true")
    sp.add_argument("--tsv", action="store_true", default=False)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_normality)

    sp = sub.add_parser("gomory-cost")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--triangulation", required=True)
    sp.add_argument("--tsv", action="store_true", default=False)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gomory_cost)

    sp = sub.add_parser("sharp-family")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--tsv", action="store_true", default=False)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_sharp_family)

    sp = sub.add_parser("oracle")
    osub = sp.add_subparsers(dest="oracle_cmd", required=True)
    op = osub.add_parser("points")
    op.add_argument("--rows", required=True, help="matrix file of inequality normals")
    op.add_argument("--offsets", required=True, help="vector of right-hand sides")
    op.add_argument("--tsv", action="store_true", default=False)
    op.add_argument("--seed", type=int, default=0)
    op.set_defaults(func=cmd_oracle)
    for name in ("fiber", "stdpairs"):
        op = osub.add_parser(name)
        op.add_argument("--matrix", required=True)
        op.add_argument("--cost", required=True)
        if name == "fiber":
            op.add_argument("--rhs", required=True)
        op.add_argument("--tsv", action="store_true", default=False)
        op.add_argument("--seed", type=int, default=0)
        op.set_defaults(func=cmd_oracle)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
        return 0
    except ParseError as exc:
        print(json.dumps({"error": {"kind": "parse", "message": str(exc)}}))
        return 2
    except DomainError as exc:
        print(json.dumps({"error": {"kind": exc.kind, "message": str(exc)}}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
