"""qdyn command-line interface.

Subcommands: classify, roots, coxeter, entropy-ss, phases, density,
kronecker.  Domain errors exit 1 with the module's message; usage errors
exit 2.  Output is byte-stable: fixed JSON key order and 12-significant-
digit floats.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .coxeter import coxeter_data, serre_entropy
from .errors import DomainError
from .kronecker import DEFAULT_MAX_VERTICES, find_kronecker_pair
from .phases import (
    DenseArc,
    Finite,
    TwoLimitPoints,
    density_verdict,
    parse_charge,
    phase_superset,
    report_to_json_obj,
)
from .quiver import classify_graph, parse_quiver
from .roots import (
    enumerate_dynkin,
    enumerate_euclidean,
    enumerate_kronecker,
    root_class,
    roots_to_csv,
    roots_to_json_obj,
)
from .semisimple import entropy_curve, parse_laurent_matrix, spectral_curve_poly
from .serialize import to_json
from .svgplot import curve_svg, unit_circle_svg

QUIVER_FORMAT = ('quiver JSON: {"vertices": [name...], '
                 '"arrows": [[source, target]...]}, multiplicity by repetition')
CHARGE_FORMAT = ('charge JSON: {"charges": {vertex: {"r": modulus > 0, '
                 '"s": phase/pi in (0, 1]}}}')
MATRIX_FORMAT = ('matrix JSON: {"size": n, "entries": [cell x n*n row-major]}, '
                 'each cell a list of {"exp": int, "coef": int >= 0} terms')


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise DomainError(f"cannot read {path}: {e.strerror}") from None


def _write(path: str, content: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content)
    except OSError as e:
        raise DomainError(f"cannot write {path}: {e.strerror}") from None


def _emit(obj) -> None:
    sys.stdout.write(to_json(obj) + "\n")


def _cmd_classify(args) -> int:
    q = parse_quiver(_read(args.quiver))
    gc = classify_graph(q)
    out: dict = {"tag": {"dynkin": "Dynkin", "euclidean": "Euclidean",
                         "kronecker": "Kronecker", "wild": "Wild"}[gc.kind]}
    if gc.is_kronecker:
        out["l"] = gc.index
    elif not gc.is_wild:
        out["diagram"] = gc.label
    out["acyclic"] = gc.acyclic
    out["connected"] = gc.connected
    _emit(out)
    return 0


def _collect_roots(q, depth: int):
    gc = classify_graph(q)
    if gc.is_dynkin:
        roots = [(r, root_class(q, r)) for r in enumerate_dynkin(q)]
    elif gc.is_euclidean:
        sys_a = enumerate_euclidean(q)
        roots = [(r, root_class(q, r)) for r in sys_a.roots_up_to(depth)]
    elif gc.is_kronecker:
        src = next(s for s, _ in q.arrows)
        si = q.index(src)
        roots = []
        for (n, m), cls in enumerate_kronecker(gc.index, depth):
            vec = [0, 0]
            vec[si] = n
            vec[1 - si] = m
            roots.append((tuple(vec), cls))
        roots.sort()
    else:
        raise DomainError("root enumeration covers Dynkin, Euclidean, and "
                          "Kronecker quivers only")
    return roots


def _cmd_roots(args) -> int:
    q = parse_quiver(_read(args.quiver))
    if args.depth < 1:
        raise DomainError("--depth must be >= 1")
    roots = _collect_roots(q, args.depth)
    if args.format == "csv":
        sys.stdout.write(roots_to_csv(q, roots))
    else:
        _emit(roots_to_json_obj(q, roots))
    return 0


def _cmd_coxeter(args) -> int:
    q = parse_quiver(_read(args.quiver))
    data = coxeter_data(q)
    line = serre_entropy(q)
    out = data.to_json_obj()
    out["entropy"] = {"slope": line.slope, "intercept": line.intercept}
    _emit(out)
    return 0


def _cmd_entropy_ss(args) -> int:
    p = parse_laurent_matrix(_read(args.matrix))
    if args.samples < 2:
        raise DomainError("--samples must be >= 2")
    if not args.t_min < args.t_max:
        raise DomainError("--t-min must be smaller than --t-max")
    curve = entropy_curve(p, args.t_min, args.t_max, args.samples)
    out: dict = {
        "t_min": curve.t_min,
        "t_max": curve.t_max,
        "samples": curve.count,
        "curve": [list(s) for s in curve.samples],
    }
    if args.curve_poly:
        out["curve_poly"] = spectral_curve_poly(p).to_json_obj()
    if args.csv:
        _write(args.csv, curve.to_csv())
    if args.svg:
        _write(args.svg, curve_svg(list(curve.samples)))
    _emit(out)
    return 0


def _cmd_phases(args) -> int:
    q = parse_quiver(_read(args.quiver))
    z = parse_charge(_read(args.charge))
    if args.depth < 1:
        raise DomainError("--depth must be >= 1")
    points = phase_superset(q, z, args.depth)
    if args.svg:
        _write(args.svg, unit_circle_svg(list(points)))
    _emit({"depth": args.depth, "phases": list(points)})
    return 0


def _cmd_density(args) -> int:
    q = parse_quiver(_read(args.quiver))
    z = parse_charge(_read(args.charge))
    if args.depth < 1:
        raise DomainError("--depth must be >= 1")
    report = density_verdict(q, z, args.depth)
    if args.svg:
        v = report.verdict
        if isinstance(v, Finite):
            svg = unit_circle_svg(list(v.points))
        elif isinstance(v, TwoLimitPoints):
            svg = unit_circle_svg(list(v.samples))
        else:
            import math

            pts = [s / math.pi for s in v.samples]
            pts += [p - 1.0 if p > 0 else p + 1.0 for p in pts]
            svg = unit_circle_svg(pts, arc=(v.u, v.v))
        _write(args.svg, svg)
    _emit(report_to_json_obj(report))
    return 0


def _cmd_kronecker(args) -> int:
    q = parse_quiver(_read(args.quiver))
    w = find_kronecker_pair(q, max_vertices=args.max_vertices)
    _emit({"witness": None if w is None else w.to_json_obj(q)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdyn",
        description="Quiver invariants: root systems, Coxeter spectral radii, "
                    "semisimple entropy curves, stability phase sets, and "
                    "Kronecker-pair witnesses.",
    )
    parser.add_argument("--version", action="version", version=f"qdyn {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the underlying graph",
                       description=f"Classify Gamma(Q) against the Dynkin / extended "
                                   f"Dynkin / Kronecker catalogues. Input {QUIVER_FORMAT}.")
    p.add_argument("quiver", help="path to the quiver JSON file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("roots", help="enumerate positive roots",
                       description=f"Positive roots with real/imaginary class. "
                                   f"Input {QUIVER_FORMAT}. Depth bounds the "
                                   f"enumeration where the root system is infinite: "
                                   f"beta + n*delta with n <= depth (Euclidean), "
                                   f"max(n, m) <= depth (Kronecker).")
    p.add_argument("quiver", help="path to the quiver JSON file")
    p.add_argument("--depth", type=int, default=50, help="enumeration depth (default 50)")
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="output format: JSON array of {dims, class} or CSV with "
                        "one vertex column per coordinate (default json)")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("coxeter", help="Serre/Coxeter matrices and spectral radius",
                       description=f"Euler matrix C, [S] = C^-1 C^T, [Phi] = -[S], "
                                   f"rho([Phi]), and the Serre-functor entropy line. "
                                   f"Input {QUIVER_FORMAT}.")
    p.add_argument("quiver", help="path to the quiver JSON file")
    p.set_defaults(func=_cmd_coxeter)

    p = sub.add_parser("entropy-ss", help="semisimple entropy curve",
                       description=f"Entropy h_t = log rho(P(e^-t)) sampled on a "
                                   f"uniform grid. Input {MATRIX_FORMAT}.")
    p.add_argument("matrix", help="path to the Laurent matrix JSON file")
    p.add_argument("--t-min", type=float, required=True, help="grid start")
    p.add_argument("--t-max", type=float, required=True, help="grid end")
    p.add_argument("--samples", type=int, required=True, help="number of grid points (>= 2)")
    p.add_argument("--csv", metavar="OUT", help="also write the curve as CSV (columns t,h)")
    p.add_argument("--svg", metavar="OUT", help="also write an SVG line plot")
    p.add_argument("--curve-poly", action="store_true",
                   help="include the cleared spectral-curve polynomial det(lambda I - P(x))")
    p.set_defaults(func=_cmd_entropy_ss)

    p = sub.add_parser("phases", help="phase superset R_{v,Delta+}",
                       description=f"Phases +-(v,r)/|(v,r)| over the enumerated "
                                   f"positive roots, as parameters in (-1, 1] "
                                   f"(units of pi). Inputs: {QUIVER_FORMAT}; "
                                   f"{CHARGE_FORMAT}.")
    p.add_argument("quiver", help="path to the quiver JSON file")
    p.add_argument("--charge", required=True, help="path to the charge JSON file")
    p.add_argument("--depth", type=int, default=200, help="root enumeration depth (default 200)")
    p.add_argument("--svg", metavar="OUT", help="also write a unit-circle SVG plot")
    p.set_defaults(func=_cmd_phases)

    p = sub.add_parser("density", help="density classification of the phase set",
                       description=f"Finite (Dynkin), finite or two limit points "
                                   f"(Euclidean), dense arc (Kronecker l >= 3, in the "
                                   f"chamber arg Z(source) > arg Z(sink)). Inputs: "
                                   f"{QUIVER_FORMAT}; {CHARGE_FORMAT}.")
    p.add_argument("quiver", help="path to the quiver JSON file")
    p.add_argument("--charge", required=True, help="path to the charge JSON file")
    p.add_argument("--depth", type=int, default=200, help="sampling depth (default 200)")
    p.add_argument("--svg", metavar="OUT", help="also write a unit-circle SVG plot")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("kronecker", help="find a Kronecker-pair witness",
                       description=f"Search for a Kronecker pair; emits "
                                   f"{{\"witness\": null}} on Dynkin/Euclidean input "
                                   f"(none exists there). Input {QUIVER_FORMAT}.")
    p.add_argument("quiver", help="path to the quiver JSON file")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES,
                   help=f"cap on the exponential subset search "
                        f"(default {DEFAULT_MAX_VERTICES})")
    p.set_defaults(func=_cmd_kronecker)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
