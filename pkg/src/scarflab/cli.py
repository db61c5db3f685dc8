"""Command-line entry point: ``scarflab <command> ...``.

Exit codes: 0 ok, 1 a cross-check or verified property failed, 2 bad
usage, 3 a resource cap was hit. JSON results follow
``schemas/result.v1.json``; integers that can outgrow 64 bits are written
as decimal strings. Points are written ``1,0,2`` and faces as
whitespace-separated points.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import bounds, morse, r3, scarfgeo
from .errors import DomainError, InvariantViolation, ResourceLimitError
from .ideal import extremal_power, is_scarf_face_by_labels
from .lattice import Face, check_point, enumerate_points

SCHEMA_ID = "scarflab.result.v1"
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class Usage(Exception):
    pass


def parse_point(text: str, q: int, r: int) -> tuple:
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise Usage(f"cannot parse point {text!r}") from None
    try:
        return check_point(coords, q, r)
    except DomainError as exc:
        raise Usage(str(exc)) from None


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise Usage(f"cannot parse degree range {text!r}") from None


def ratio(num: int, den: int):
    if den == 0:
        return None
    f = Fraction(num, den)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def threads() -> int:
    raw = os.environ.get("SCARFLAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise Usage(f"SCARFLAB_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise Usage(f"SCARFLAB_THREADS must be a positive integer, got {raw!r}")
    return n


def write_csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _positive(name, value):
    if value < 1:
        raise Usage(f"--{name} must be positive, got {value}")


# --- commands: each returns (exit_code, result dict or CSV text) -----------

def cmd_points(args):
    _positive("q", args.q)
    if args.r < 0:
        raise Usage("--r must be nonnegative")
    pts = enumerate_points(args.q, args.r)
    if args.format == "csv":
        header = ["k"] + [f"a{i + 1}" for i in range(args.q)]
        return EXIT_OK, write_csv([(k,) + p for k, p in enumerate(pts)], header)
    return EXIT_OK, {"count": len(pts), "points": [list(p) for p in pts]}


def cmd_check_face(args):
    _positive("q", args.q)
    _positive("r", args.r)
    pts = [parse_point(v, args.q, args.r) for v in args.vertices]
    if len(set(pts)) != len(pts):
        raise Usage("repeated vertex")
    face = Face(pts, args.q, args.r)
    methods = ["geometric", "labels", "catalog"] if args.method == "all" else [args.method]
    if args.r != 3 and "catalog" in methods:
        if args.method == "catalog":
            raise Usage("the catalog method needs r = 3")
        methods.remove("catalog")
    verdicts, out = {}, {"face": [list(p) for p in face]}
    if "geometric" in methods:
        rep = scarfgeo.find_witness(face)
        verdicts["geometric"] = rep is None
        if rep is not None:
            out["witness"] = {"point": list(rep.witness), "subset": [list(face.points[k]) for k in rep.subset]}
    if "labels" in methods:
        ideal = extremal_power(args.q, args.r)
        index = {p: k for k, p in enumerate(enumerate_points(args.q, args.r))}
        verdicts["labels"] = is_scarf_face_by_labels(ideal, [index[p] for p in face])
    if "catalog" in methods:
        verdicts["catalog"] = r3.is_face_r3(face)
    agree = len(set(verdicts.values())) == 1
    out.update(verdicts=verdicts, agree=agree, is_face=next(iter(verdicts.values())))
    return (EXIT_OK if agree else EXIT_VIOLATION), out


def cmd_facets(args):
    _positive("q", args.q)
    if args.r != 3:
        raise Usage("the facet catalog exists for r = 3 only")
    out = []
    for desc, face in r3.facets_r3(args.q):
        is_w = desc.family == "W_{P,a}"
        if args.family == "W" and not is_w or args.family == "U" and is_w:
            continue
        params = [list(x) if isinstance(x, tuple) else x for x in desc.params]
        out.append({"family": desc.family, "params": params, "vertices": [list(p) for p in face]})
    return EXIT_OK, {"count": len(out), "facets": out}


def cmd_bounds(args):
    _positive("q", args.q)
    if args.r not in (1, 2, 3):
        raise Usage(f"no Scarf bound for r = {args.r}")
    degrees = parse_range(args.i)
    if degrees.start < 0 or len(degrees) == 0:
        raise Usage("degree range must be nonempty and nonnegative")
    rows = []
    for i in degrees:
        s = bounds.beta_bound(args.q, args.r, i)
        row = {"i": i, "scarf": str(s)}
        if args.compare:
            lval = bounds.l_bound(args.q, 3, i) if args.r == 3 else None
            t = bounds.taylor_bound(args.q, args.r, i)
            row.update(
                l=None if lval is None else str(lval),
                taylor=str(t),
                taylor_over_scarf=ratio(t, s),
                l_over_scarf=None if lval is None else ratio(lval, s),
            )
        rows.append(row)
    if args.format == "csv":
        header = list(rows[0])
        return EXIT_OK, write_csv([["" if row[h] is None else row[h] for h in header] for row in rows], header)
    return EXIT_OK, {"q": args.q, "r": args.r, "rows": rows}


def cmd_fvector(args):
    _positive("q", args.q)
    out, code = {}, EXIT_OK
    if args.method in ("formula", "both"):
        bv = bounds.betti_vector(args.q, 3)
        out["formula"] = [str(v) for v in bv.values]
        out.update(log_concave=bv.log_concave, unimodal=bv.unimodal, top_value=str(bv.top_value))
    if args.method in ("enumerate", "both"):
        fv = r3.f_vector_enumerated(args.q)
        out["enumerated"] = [str(v) for v in fv]
        out.setdefault("log_concave", bounds.is_log_concave(fv))
        out.setdefault("unimodal", bounds.is_unimodal(fv))
    if args.method == "both":
        out["match"] = out["formula"] == out["enumerated"]
        if args.q <= 4:
            uf = scarfgeo.closure_f_vector(scarfgeo.u_complex_facets(args.q, 3))
            out["u_complex_match"] = [str(v) for v in uf] == out["enumerated"]
        if not out["match"] or not out.get("u_complex_match", True):
            code = EXIT_VIOLATION
    return code, out


def cmd_morse_verify(args):
    _positive("q", args.q)
    if args.r != 3:
        raise Usage("the matching is built for r = 3")
    if args.scale == "full":
        if math.comb(args.q + 2, 3) > morse.FULL_VERTEX_CAP:
            raise ResourceLimitError(f"full scale needs C(q+2,3) <= {morse.FULL_VERTEX_CAP}")
        v = morse.verify_matching(morse.build_matching(args.q))
        out = {
            "scale": "full",
            "homogeneous": v.homogeneous,
            "acyclic": v.acyclic,
            "perfect_on_nonfaces": v.perfect,
            "critical_equals_scarf": v.critical_equals_scarf,
            "cells": v.cells,
            "matched_pairs": v.matched_pairs,
            "critical_nonempty": v.critical,
            "scarf_faces": v.scarf_faces,
        }
        return (EXIT_OK if v.ok else EXIT_VIOLATION), out
    _positive("samples", args.samples)
    if args.q > morse.MASK_Q_CAP:
        raise ResourceLimitError(f"sampling works on int64 masks, q <= {morse.MASK_Q_CAP}")
    cells = morse.sample_nonfaces(args.q, args.samples, args.seed)
    ok = morse.class_stability(args.q, cells)
    passed = int(ok.sum())
    out = {
        "scale": "sampled",
        "samples": args.samples,
        "seed": args.seed,
        "passed": passed,
        "pass_rate": ratio(passed, args.samples),
    }
    return (EXIT_OK if passed == args.samples else EXIT_VIOLATION), out


def _log10(n: int) -> str:
    return f"{math.log10(n):.6f}" if n > 0 else ""


def cmd_plot_data(args):
    if args.r != 3:
        raise Usage("plot data is tabulated for r = 3")
    rows = []
    for q in args.qs:
        _positive("q", q)
        for i in range(math.comb(q + 2, 3)):
            s, lv, t = bounds.beta_bound(q, 3, i), bounds.l_bound(q, 3, i), bounds.taylor_bound(q, 3, i)
            rows.append((q, i, s, lv, t, _log10(s), _log10(lv), _log10(t)))
    header = ["q", "i", "scarf", "l", "taylor", "log10_scarf", "log10_l", "log10_taylor"]
    text = write_csv(rows, header)
    if args.out is None:
        return EXIT_OK, text
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return EXIT_OK, {"out": args.out, "rows": len(rows), "columns": header}


COMMANDS = {
    "points": cmd_points,
    "check-face": cmd_check_face,
    "facets": cmd_facets,
    "bounds": cmd_bounds,
    "fvector": cmd_fvector,
    "morse-verify": cmd_morse_verify,
    "plot-data": cmd_plot_data,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scarflab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("points", help="list N^r_q, largest first")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--format", choices=["json", "csv"], default="json")

    s = sub.add_parser("check-face", help="decide whether a vertex set is a Scarf face")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--method", choices=["geometric", "labels", "catalog", "all"], default="all")
    s.add_argument("vertices", nargs="+", metavar="POINT")

    s = sub.add_parser("facets", help="facets of the Scarf complex of E_q^3")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--r", type=int, default=3)
    s.add_argument("--family", choices=["all", "U", "W"], default="all")

    s = sub.add_parser("bounds", help="betti bounds, optionally against Taylor and L counts")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--i", default="0", help="degree or range a..b")
    s.add_argument("--compare", action="store_true")
    s.add_argument("--format", choices=["json", "csv"], default="json")

    s = sub.add_parser("fvector", help="f-vector of the Scarf complex of E_q^3")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--method", choices=["formula", "enumerate", "both"], default="formula")

    s = sub.add_parser("morse-verify", help="check the omega matching")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--r", type=int, default=3)
    s.add_argument("--scale", choices=["full", "sampled"], default="full")
    s.add_argument("--samples", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("plot-data", help="CSV of Scarf, L and Taylor counts for plotting")
    s.add_argument("qs", type=int, nargs="+", metavar="Q")
    s.add_argument("--r", type=int, default=3)
    s.add_argument("--out")
    return p


def _envelope(command, params, code, result, error=None) -> str:
    doc = {
        "schema": SCHEMA_ID,
        "command": command,
        "exit_code": code,
        "params": params,
        "result": result,
        "error": error,
    }
    return json.dumps(doc, indent=2) + "\n"


def run(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k != "command"}
    kinds = {EXIT_USAGE: "usage", EXIT_VIOLATION: "violation", EXIT_RESOURCE: "resource"}
    try:
        threads()
        code, result = COMMANDS[args.command](args)
    except (Usage, DomainError) as exc:
        code, result, msg = EXIT_USAGE, None, str(exc)
    except ResourceLimitError as exc:
        code, result, msg = EXIT_RESOURCE, None, str(exc)
    except InvariantViolation as exc:
        code, result, msg = EXIT_VIOLATION, None, str(exc)
    else:
        if isinstance(result, str):
            stdout.write(result)
        else:
            stdout.write(_envelope(args.command, params, code, result))
        return code
    print(f"scarflab {args.command}: {msg}", file=sys.stderr)
    stdout.write(_envelope(args.command, params, code, None, {"kind": kinds[code], "message": msg}))
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
