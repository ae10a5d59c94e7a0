"""Command-line interface.

Subcommands operate on JSON inputs and print deterministic JSON (or a
human-readable pretty form).  Exit status: 0 on success, 1 on a domain error
(reported as {"error": {"code", "detail"}}), 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks as checks_mod
from .errors import DomainError
from .fixtures import run_fixtures
from .groupring import GroupRingElement
from .mixed import limit_mixed_hstar, local_limit_mixed_hstar, refined_hstar, refined_table
from .monodromy import (
    MonodromyProblem,
    NewtonData,
    affine_refined_hd,
    eigenvalue_multiplicities,
    intersection_hd,
    jordan_blocks,
    limit_mixed_hodge,
    motivic_nearby_fiber,
    refined_hd_torus,
    weight_dimensions,
)
from .polynomials import Polynomial
from .polytopes import hull
from .posets import Poset
from .subdivisions import lower_hull, trivial_heights
from .wehrhart import ehrhart_polynomial, local_weighted_hstar, weighted_hstar


class InputError(Exception):
    """Malformed input; maps to exit status 2."""


def _load_input(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc


def _graph_from_input(data):
    try:
        poly_data = data["polytope"]
        vertices = [tuple(v) for v in poly_data["vertices"]]
        dim = int(poly_data["dim"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad polytope input: {exc}") from exc
    unknown = set(data) - {"polytope", "heights"}
    if unknown:
        raise InputError(f"unknown fields {sorted(unknown)}")
    polytope = hull(vertices, dim)
    if "heights" in data:
        try:
            heights = {tuple(h["point"]): int(h["value"]) for h in data["heights"]}
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad heights input: {exc}") from exc
    else:
        heights = trivial_heights(polytope)
    try:
        return lower_hull(polytope, heights)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _newton_from_input(data):
    try:
        n = int(data["n"])
        monomials = [tuple(m) for m in data["monomials"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad monomial input: {exc}") from exc
    unknown = set(data) - {"n", "monomials"}
    if unknown:
        raise InputError(f"unknown fields {sorted(unknown)}")
    try:
        return NewtonData.from_monomials(n, monomials)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _emit(args, document, pretty_lines=None):
    if args.format == "pretty" and pretty_lines is not None:
        text = "\n".join(pretty_lines) + "\n"
    else:
        text = json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _poly_doc(p: Polynomial):
    return p.to_json()


def _run_checks(check_results):
    failures = [name for name, ok, _ in check_results if not ok]
    doc = [{"name": name, "ok": ok} for name, ok, _ in check_results]
    return doc, failures


# -- subcommand implementations ----------------------------------------------------


def cmd_hstar(args):
    cg = _graph_from_input(_load_input(args.input))
    h = weighted_hstar(cg)
    doc = {"hstar": _poly_doc(h)}
    lines = [f"h* = {h.pretty()}"]
    if args.check:
        results = checks_mod.check_wehrhart(cg) + checks_mod.check_subdivision_identities(cg)
        doc["checks"], failures = _run_checks(results)
        lines += [f"check {name}: {'ok' if ok else 'FAIL'}" for name, ok, _ in results]
        if failures:
            _emit(args, doc, lines)
            return 1
    _emit(args, doc, lines)
    return 0


def cmd_local_hstar(args):
    cg = _graph_from_input(_load_input(args.input))
    l = local_weighted_hstar(cg)
    doc = {"local_hstar": _poly_doc(l)}
    _emit(args, doc, [f"l* = {l.pretty()}"])
    return 0


def cmd_ehrhart(args):
    cg = _graph_from_input(_load_input(args.input))
    ep = ehrhart_polynomial(cg)
    doc = {"ehrhart": ep.to_json()}
    lines = []
    for cls, coeffs in ep.components:
        body = " + ".join(
            f"({c})*m^{i}" if i else f"({c})" for i, c in enumerate(coeffs) if c
        )
        lines.append(f"f_{cls}(m) = {body}")
    _emit(args, doc, lines)
    return 0


def cmd_refined_hstar(args):
    cg = _graph_from_input(_load_input(args.input))
    r = refined_hstar(cg)
    doc = {
        "refined_hstar": _poly_doc(r),
        "coefficients": refined_table(cg).to_json(),
    }
    lines = [f"h*(u,v,w) = {r.pretty()}"]
    if args.check:
        results = checks_mod.check_mixed(cg)
        doc["checks"], failures = _run_checks(results)
        lines += [f"check {name}: {'ok' if ok else 'FAIL'}" for name, ok, _ in results]
        if failures:
            _emit(args, doc, lines)
            return 1
    _emit(args, doc, lines)
    return 0


def cmd_subdivide(args):
    cg = _graph_from_input(_load_input(args.input))
    cells = []
    for cell, dim in sorted(cg.cells().items(), key=lambda c: (c[1], sorted(c[0]))):
        if not cell:
            continue
        sigma = cg.complex.sigma[cell]
        cells.append(
            {
                "points": [list(v) for v in sorted(cell)],
                "dim": dim,
                "sigma_dim": cg.complex.faces[sigma],
            }
        )
    nu = []
    for cell in cg.maximal_cells():
        lin, const = cg.nu_affine[cell]
        nu.append(
            {
                "cell": [list(v) for v in sorted(cell)],
                "linear": [[c.numerator, c.denominator] for c in lin],
                "constant": [const.numerator, const.denominator],
            }
        )
    doc = {"cells": cells, "nu_affine": nu}
    lines = [f"{len(cells)} cells, {len(nu)} maximal"]
    _emit(args, doc, lines)
    return 0


def cmd_g_poly(args):
    data = _load_input(args.input)
    cg = _graph_from_input(data)
    faces = sorted(cg.polytope.face_lattice(), key=lambda f: (len(f), sorted(f)))
    poset = Poset(faces, lambda a, b: a <= b)
    g = poset.g_polynomial()
    gstar = poset.dual().g_polynomial()
    doc = {"g": list(g), "g_dual": list(gstar)}
    _emit(args, doc, [f"g = {list(g)}", f"g* = {list(gstar)}"])
    return 0


def _jordan_lines(jb):
    lines = []
    for size, cls, count in jb.blocks:
        lines.append(f"{count} block(s) of size {size} with eigenvalue {cls}")
    return lines


def cmd_monodromy(args, kind):
    newton = _newton_from_input(_load_input(args.input))
    problem = getattr(MonodromyProblem, kind)(newton)
    eig = eigenvalue_multiplicities(problem)
    jb = jordan_blocks(problem)
    doc = {
        "eigenvalues": eig.to_json(),
        "betti": eig.forget(),
        **jb.to_json(),
    }
    lines = [f"eigenvalues: {eig}", f"middle betti number: {eig.forget()}"]
    lines += _jordan_lines(jb)
    if kind == "at_zero":
        dims = weight_dimensions(problem)
        doc["weight_dims"] = {str(r): v.to_json() for r, v in dims.items()}
        lines += [f"weight {r}: {v}" for r, v in dims.items()]
    else:
        ne1, e1 = limit_mixed_hodge(problem)
        doc["hodge_not_one"] = _poly_doc(ne1)
        doc["hodge_one"] = _poly_doc(e1)
    if args.check:
        results = checks_mod.check_monodromy(problem)
        doc["checks"], failures = _run_checks(results)
        lines += [f"check {name}: {'ok' if ok else 'FAIL'}" for name, ok, _ in results]
        if failures:
            _emit(args, doc, lines)
            return 1
    _emit(args, doc, lines)
    return 0


def cmd_motivic(args):
    data = _load_input(args.input)
    if "monomials" in data:
        newton = _newton_from_input(data)
        kind = "at_zero" if args.at == "zero" else "at_infinity"
        problem = getattr(MonodromyProblem, kind)(newton)
        terms = motivic_nearby_fiber(problem, "affine")
    else:
        cg = _graph_from_input(data)
        terms = motivic_nearby_fiber(cg, "torus")
    doc = {"terms": [t.to_json() for t in terms]}
    lines = [
        f"[V({len(t.cell)} pts) ~ {tuple(str(a) for a in t.action)}] (1-L)^{t.lefschetz_power}"
        for t in terms
    ]
    _emit(args, doc, lines)
    return 0


def cmd_hodge_deligne(args):
    cg = _graph_from_input(_load_input(args.input))
    e_torus = refined_hd_torus(cg)
    e_int = intersection_hd(cg)
    doc = {"torus": _poly_doc(e_torus), "intersection": _poly_doc(e_int)}
    lines = [f"E(torus family) = {e_torus.pretty()}", f"E(intersection) = {e_int.pretty()}"]
    if args.check:
        results = checks_mod.check_torus_routes(cg)
        doc["checks"], failures = _run_checks(results)
        lines += [f"check {name}: {'ok' if ok else 'FAIL'}" for name, ok, _ in results]
        if failures:
            _emit(args, doc, lines)
            return 1
    _emit(args, doc, lines)
    return 0


def cmd_fixtures(args):
    report = run_fixtures(args.select)
    doc = {}
    lines = []
    ok_all = True
    for fixture, results in report.items():
        doc[fixture] = [
            {"check": name, "ok": ok} for name, ok, _, _ in results
        ]
        for name, ok, got, want in results:
            status = "pass" if ok else "FAIL"
            lines.append(f"{fixture}/{name}: {status}")
            if not ok:
                ok_all = False
                lines.append(f"  got      {got}")
                lines.append(f"  expected {want}")
    _emit(args, doc, lines)
    return 0 if ok_all else 1


# -- entry point -----------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ehrmono",
        description="Exact weighted lattice-point invariants and monodromy data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **extra):
        p = sub.add_parser(name)
        p.add_argument("--input", default="-", help="input JSON path (default stdin)")
        p.add_argument("--output", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=["json", "pretty"], default="json")
        p.add_argument("--check", action="store_true", help="run the invariant suite")
        for key, val in extra.items():
            p.add_argument(key, **val)
        p.set_defaults(fn=fn)
        return p

    add("hstar", cmd_hstar)
    add("local-hstar", cmd_local_hstar)
    add("ehrhart", cmd_ehrhart)
    add("refined-hstar", cmd_refined_hstar)
    add("subdivide", cmd_subdivide)
    add("g-poly", cmd_g_poly)
    add("monodromy-at-zero", lambda a: cmd_monodromy(a, "at_zero"))
    add("monodromy-at-infinity", lambda a: cmd_monodromy(a, "at_infinity"))
    add("milnor", lambda a: cmd_monodromy(a, "milnor"))
    add(
        "motivic-fiber",
        cmd_motivic,
        **{"--at": {"choices": ["zero", "infinity"], "default": "infinity"}},
    )
    add("hodge-deligne", cmd_hodge_deligne)
    add("fixtures", cmd_fixtures, **{"--select": {"default": None}})
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        sys.stderr.write(
            json.dumps({"error": {"code": "parse-error", "detail": str(exc)}}) + "\n"
        )
        return 2
    except DomainError as exc:
        sys.stderr.write(
            json.dumps({"error": {"code": exc.code, "detail": str(exc)}}) + "\n"
        )
        return 1
    except ValueError as exc:
        sys.stderr.write(
            json.dumps({"error": {"code": "domain-error", "detail": str(exc)}}) + "\n"
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
