"""
Command line interface.

    planar-arcs arc validate ARC.json
    planar-arcs arc tangents ARC.json
    planar-arcs arc lemma-check ARC.json|TANGENTS.json
    planar-arcs arc dual ARC.json
    planar-arcs arc socle --degree r ARC.json
    planar-arcs arc ttform ARC.json
    planar-arcs arc rho ARC.json|TTFORM.json
    planar-arcs arc curves ARC.json
    planar-arcs arc classify --q n --size k [--complete] [--jobs j]
    planar-arcs arc kestenband --q n
    planar-arcs bounds --q n --p p --t t [--curve-degree d]

Every result is a single JSON document (JSON lines for ``classify``) written
to stdout or ``-o FILE``; identical inputs give byte-identical output.  Any
document carrying an ``"arc"`` member is accepted wherever an arc is expected,
so the output of one subcommand can be fed to the next.

Exit status: 0 success, 1 mathematical failure (the JSON says which), 2 input
error (a JSON record ``{"error": ..., "message": ...}``).
"""

import argparse
import json
import platform
import sys
import time

from . import __version__
from .bounds import compute_bounds
from .curvefinder import ConicContainment, almost_phi, coprime_certificate, rho_system
from .dualcurve import build_dual_curve, verify_dual
from .errors import ArcsError, InvalidArc
from .gf import field_of_order
from .plane import Violation, validate_arc
from .search import classify, extensions, find_kestenband_spec, kestenband
from .serialize import (arc_from_json, arc_to_json, dumps, fe_to_json, field_to_json,
                        point_from_json, point_to_json, points_from_json, poly_from_json, poly_to_json,
                        ttform_from_json, ttform_to_json)
from .socle import socle, vanishing_space
from .tangents import TangentSystem, build_tangent_system, check_lemma_of_tangents
from .ttform import build_F, select_S, verify_F


class InputError(Exception):
    """Malformed command line input (exit status 2)."""


class Failure(Exception):
    """A mathematical check failed (exit status 1); ``doc`` is still emitted."""

    def __init__(self, doc):
        super().__init__(doc.get("detail", "check failed"))
        self.doc = doc


# -- input ---------------------------------------------------------------------


def _read_doc(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _arc_doc(doc):
    if isinstance(doc, dict) and "points" in doc:
        return doc
    if isinstance(doc, dict) and isinstance(doc.get("arc"), dict):
        return doc["arc"]
    raise InputError("document has neither 'points' nor an 'arc' member")


def _load_arc(doc):
    try:
        return arc_from_json(_arc_doc(doc))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed arc document: {exc!r}") from exc


def _field_arg(args):
    modulus = [int(c) for c in args.modulus.split(",")] if args.modulus else None
    return field_of_order(args.q, modulus)


# -- subcommands ------------------------------------------------------------------


def cmd_validate(args):
    doc = _read_doc(args.input)
    try:
        F, pts = points_from_json(_arc_doc(doc))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed arc document: {exc!r}") from exc
    result = validate_arc(F, pts)
    if isinstance(result, Violation):
        raise Failure({"valid": False, **result.to_json(F)})
    return {"valid": True, "t": result.t, "size": len(result), "complete": not extensions(result),
            "arc": arc_to_json(result)}


def _tangents_doc(S: TangentSystem):
    F = S.field
    return {"arc": arc_to_json(S.arc), "t": S.t, "e": point_to_json(F, S.e),
            "tangents": [{"point": point_to_json(F, a),
                          "lines": [point_to_json(F, u) for u in S.factors[a]],
                          "form": poly_to_json(S.forms[a])} for a in S.arc.points]}


def _tangents_from_doc(A, doc):
    """Rebuild a tangent system, keeping any forms stored in the document."""
    F = A.field
    e = point_from_json(F, doc["e"]) if "e" in doc else None
    S = build_tangent_system(A, e)
    for entry in doc.get("tangents", []):
        a = point_from_json(F, entry["point"])
        S = S.with_form(a, poly_from_json(F, entry["form"]))
    return S


def cmd_tangents(args):
    A = _load_arc(_read_doc(args.input))
    F = A.field
    e = point_from_json(F, json.loads(args.base)) if args.base else None
    return _tangents_doc(build_tangent_system(A, e))


def cmd_lemma_check(args):
    doc = _read_doc(args.input)
    A = _load_arc(doc)
    S = _tangents_from_doc(A, doc)
    report = check_lemma_of_tangents(S)
    out = {"ok": report.ok, "t": S.t, "sign": 1 if S.t % 2 else -1}
    if not report.ok:
        x, y = report.witness
        out["witness"] = [point_to_json(A.field, x), point_to_json(A.field, y)]
        out["detail"] = report.detail
        raise Failure(out)
    return out


def cmd_dual(args):
    doc = _read_doc(args.input)
    A = _load_arc(doc)
    S = _tangents_from_doc(A, doc)
    D = build_dual_curve(S)
    report = verify_dual(S, D)
    out = {"m": D.m, "degree": D.degree, "E": [point_to_json(A.field, x) for x in D.E],
           "phi": poly_to_json(D.phi, dual=True), "verified": report.ok}
    if not report.ok:
        out["detail"] = report.detail
        raise Failure(out)
    return out


def cmd_socle(args):
    A = _load_arc(_read_doc(args.input))
    F = A.field
    if args.degree < 0:
        raise InputError("--degree must be non-negative")
    S = socle(F, A.points, args.degree)
    V = vanishing_space(F, A.points, args.degree)
    return {"degree": args.degree, "size": len(S), "socle": [point_to_json(F, x) for x in S.points],
            "vanishing_dim": V.dim, "vanishing_basis": [poly_to_json(f) for f in V.basis]}


def cmd_ttform(args):
    A = _load_arc(_read_doc(args.input))
    F = A.field
    S = build_tangent_system(A)
    S0, Sx = select_S(A, S.e)
    G = build_F(A, S, S0, Sx)
    report = verify_F(A, S, G, Sx)
    out = {"arc": arc_to_json(A), "t": A.t, "e": point_to_json(F, S.e),
           "S0": [point_to_json(F, x) for x in S0.points], "S": [point_to_json(F, x) for x in Sx],
           "F": ttform_to_json(G), "terms": len(G), "verified": report.ok}
    if not report.ok:
        out["detail"] = report.detail
        raise Failure(out)
    return out


def cmd_rho(args):
    doc = _read_doc(args.input)
    A = _load_arc(doc)
    F = A.field
    if isinstance(doc.get("F"), dict):
        G = ttform_from_json(F, doc["F"])
    else:
        S = build_tangent_system(A)
        G = build_F(A, S)
    B = compute_bounds(F.q, F.p, A.t)
    R = rho_system(G, B)
    rhos = []
    vanish = True
    for w in R.W:
        r = R.rhos[w]
        ok = not r.evaluate_many(A.points).any()
        vanish = vanish and ok
        rhos.append({"w": list(w), "rho": poly_to_json(r), "vanishes_on_arc": ok})
    out = {"t": A.t, "pe": B.pe, "rhos": rhos, "all_vanish": vanish}
    if F.p != 2:
        out["phi"] = poly_to_json(almost_phi(A, R, vanishing_space(F, A.points, A.t)))
    if not vanish:
        raise Failure(out)
    return out


def cmd_curves(args):
    A = _load_arc(_read_doc(args.input))
    cert = coprime_certificate(A, run_pipeline=not args.no_pipeline)
    if isinstance(cert, ConicContainment):
        return {"on_conic": True, "conic": poly_to_json(cert.conic), "arc": arc_to_json(A)}
    out = cert.to_json()
    out.update({"on_conic": False, "bounds": cert.bounds.to_json(),
                "common_zeros": cert.common_zero_count, "vanish_on_arc": cert.vanish_on_arc,
                "coprime": cert.coprime, "degrees_ok": cert.degrees_ok})
    if cert.phi is not None:
        out["phi"] = poly_to_json(cert.phi)
    if not cert.checked:
        raise Failure(out)
    return out


def cmd_classify(args):
    F = _field_arg(args)
    res = classify(F, args.size, complete_only=args.complete, allow_large=args.allow_large,
                   jobs=args.jobs)
    doc = res.to_json()
    reps = doc.pop("representatives")
    doc["field"] = field_to_json(F)
    return [doc] + [{"representative": i, "arc": r} for i, r in enumerate(reps)]


def cmd_kestenband(args):
    F = _field_arg(args)
    spec = find_kestenband_spec(F)
    A = kestenband(F, spec)
    f, g = spec.forms()
    return {"arc": arc_to_json(A), "size": len(A), "complete": not extensions(A),
            "H": [[fe_to_json(F, c) for c in row] for row in spec.H],
            "forms": [poly_to_json(f), poly_to_json(g)]}


def cmd_bounds(args):
    p = args.p if args.p is not None else field_of_order(args.q).p
    return compute_bounds(args.q, p, args.t, args.curve_degree).to_json()


# -- parser ------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="planar-arcs", description="Exact computations with arcs in PG(2,q).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write the result here instead of stdout")
    common.add_argument("--meta", action="store_true",
                        help="also emit provenance (to OUTPUT.meta.json, or stderr)")
    top = parser.add_subparsers(dest="group", required=True)

    arc = top.add_parser("arc", help="commands taking an arc").add_subparsers(dest="command", required=True)

    def with_input(name, func, help_):
        p = arc.add_parser(name, parents=[common], help=help_)
        p.add_argument("input", help="arc JSON (or '-' for stdin)")
        p.set_defaults(func=func)
        return p

    with_input("validate", cmd_validate, "check that a point set is an arc")
    p = with_input("tangents", cmd_tangents, "scaled tangent forms")
    p.add_argument("--base", help="base point e as a JSON point, default the first arc point")
    with_input("lemma-check", cmd_lemma_check, "verify the lemma of tangents")
    with_input("dual", cmd_dual, "the dual curve through all tangents")
    p = with_input("socle", cmd_socle, "socle and vanishing space in a given degree")
    p.add_argument("--degree", type=int, required=True)
    with_input("ttform", cmd_ttform, "the (t,t)-form F")
    with_input("rho", cmd_rho, "the rho_w system and its gcd with the degree-t curves")
    p = with_input("curves", cmd_curves, "two coprime low degree curves through the arc")
    p.add_argument("--no-pipeline", action="store_true",
                   help="search the vanishing spaces without building F first")

    def with_field(name, func, help_):
        p = arc.add_parser(name, parents=[common], help=help_)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--modulus", help="comma separated modulus coefficients, constant term first")
        p.set_defaults(func=func)
        return p

    p = with_field("classify", cmd_classify, "projective classes of arcs of a given size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--complete", action="store_true", help="keep only complete arcs")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-large", action="store_true", help="permit q above the exhaustive limit")
    with_field("kestenband", cmd_kestenband, "the Kestenband arc for odd square q")

    p = top.add_parser("bounds", parents=[common], help="degree budget for deficiency t")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--curve-degree", type=int)
    p.set_defaults(func=cmd_bounds)
    return parser


def _render(result):
    if isinstance(result, list):
        return "".join(dumps(doc) + "\n" for doc in result)
    return dumps(result) + "\n"


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_meta(args, started, status):
    meta = {"argv": sys.argv[1:], "version": __version__, "python": platform.python_version(),
            "started": started, "seconds": round(time.time() - started, 3), "status": status}
    if args.output:
        with open(args.output + ".meta.json", "w") as fh:
            fh.write(dumps(meta) + "\n")
    else:
        sys.stderr.write(dumps(meta) + "\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.time()
    try:
        result = args.func(args)
        status = 0
    except Failure as exc:
        result, status = exc.doc, 1
    except (InputError, InvalidArc, ValueError) as exc:
        # mathematical preconditions that fail on the given input are input errors
        result = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, InvalidArc):
            result["violation"] = exc.violation.kind
        status = 2
    except ArcsError as exc:
        result = {"error": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "bounds", None) is not None:
            result["bounds"] = exc.bounds.to_json()
        status = 1
    _emit(args, _render(result))
    if args.meta:
        _emit_meta(args, started, status)
    return status


if __name__ == "__main__":
    sys.exit(main())
