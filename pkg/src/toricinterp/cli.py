"""Command-line front end: ``toric-interp <command> ...``.

Exit codes: 0 success, 1 malformed input, 2 violated precondition (named on
stderr), 3 when ``verify`` finds a point where the interpolant property fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from .binomials import binomial_generators, hypersurface_equation
from .errors import FormatError, PreconditionError
from .exact import Matrix, is_positroid
from .invariants import dual_degree_normal, dual_degree_projected, surface_report
from .osculation import build_Ak, build_Ak_tilde, jet_matrix, verify_interpolant
from .polygon import (
    P_polygon,
    boundary_length,
    canonical_form_polygon,
    cyclic_volume,
    euler_obstruction_vertex,
    lattice_point_count,
    lattice_points,
    liu_lattice_count,
    normalized_area,
    parse_polygon,
    vertex_multiplicity,
)
from .toric_config import curve_matrix, format_matrix, normalize, parse_matrix

EXIT_OK, EXIT_FORMAT, EXIT_PRECONDITION, EXIT_NEGATIVE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise FormatError(message)


# -- argument helpers ---------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise FormatError(f"expected comma-separated integers, got {text!r}") from None


def _point(text: str) -> list[Fraction]:
    try:
        return [Fraction(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"expected comma-separated rationals, got {text!r}") from None


def _d_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise FormatError(f"expected a range like 3..8, got {text!r}") from None
    if a > b:
        raise FormatError(f"empty range {text!r}")
    return range(a, b + 1)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _matrix(args) -> Matrix:
    if args.matrix:
        return parse_matrix(_read(args.matrix))
    # inline form: rows separated by ';', entries by ',' or spaces
    rows = [r.replace(",", " ").split() for r in args.inline.split(";") if r.strip()]
    if not rows:
        raise FormatError("empty inline matrix")
    body = "\n".join(" ".join(r) for r in rows)
    return parse_matrix(f"{len(rows)} {len(rows[0])}\n{body}")


def _polygon(args):
    if getattr(args, "pd", None) is not None:
        return P_polygon(args.pd)
    return parse_polygon(_read(args.file))


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _matrix_doc(M: Matrix) -> list[list]:
    return [[_num(x) for x in row] for row in M.rows]


def _sample_points(m: int, n: int, seed: int) -> list[list[Fraction]]:
    """``n`` torus points with numerators and denominators uniform in [1, 100]."""
    rng = random.Random(seed)
    return [[Fraction(rng.randint(1, 100), rng.randint(1, 100)) for _ in range(m)] for _ in range(n)]


# -- commands -----------------------------------------------------------------
# each returns (document, text, exit code)


def cmd_interpolant(args):
    A = _matrix(args)
    B = build_Ak_tilde(A, args.k) if args.tilde else build_Ak(A, args.k)
    return {"k": args.k, "tilde": args.tilde, "matrix": _matrix_doc(B)}, format_matrix(B), EXIT_OK


def cmd_jet(args):
    A = _matrix(args)
    t = _point(args.point) if args.point else 1
    J = jet_matrix(A, args.k, t)
    doc = {"k": args.k, "point": [_num(x) for x in J.point], "matrix": _matrix_doc(J.entries)}
    return doc, format_matrix(J.entries), EXIT_OK


def cmd_verify(args):
    A = _matrix(args)
    m = A.nrows - 1
    points = [_point(args.point)] if args.point else [[Fraction(1)] * m]
    points += _sample_points(m, args.samples, args.seed)
    results, lines = [], []
    for t in points:
        rep = verify_interpolant(A, args.k, t)
        results.append(
            {
                "point": [_num(x) for x in t],
                "contains": rep.contains,
                "tangent_equals_osculating": rep.tangent_equals_osculating,
                "osculating_dim": rep.osculating_dim,
            }
        )
        pt = ",".join(str(x) for x in t)
        lines.append(
            f"t=({pt}) contains={rep.contains} tangent_equals_osculating={rep.tangent_equals_osculating}"
            f" osculating_dim={rep.osculating_dim}"
        )
    ok = all(r["contains"] and r["tangent_equals_osculating"] for r in results)
    doc = {"k": args.k, "seed": args.seed, "ok": ok, "points": results}
    lines.append("ok" if ok else "FAILED")
    return doc, "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_NEGATIVE


def cmd_binomials(args):
    A = _matrix(args)
    if args.hypersurface:
        rep = hypersurface_equation(A)
        doc = {"binomials": [str(rep.binomial)], "equation_degree": rep.degree, "torus_only": True}
        return doc, f"{rep.binomial}\nequation degree {rep.degree}\n", EXIT_OK
    bs = [str(b) for b in binomial_generators(A)]
    doc = {"binomials": bs, "torus_only": True}
    return doc, "".join(b + "\n" for b in bs), EXIT_OK


def cmd_curve(args):
    ell = _int_list(args.ell)
    A = curve_matrix(ell)
    Ak, Akt = build_Ak(A, args.k), build_Ak_tilde(A, args.k)
    if args.k == 1:
        volume = ell[-1] - ell[0]
    elif args.k == 2:
        volume = cyclic_volume(ell)
    else:
        volume = None
    count = liu_lattice_count(ell, args.k) if args.k <= 2 else None
    # positroid checks need at least as many columns as rows
    square = Ak.nrows <= Ak.ncols
    doc = {
        "ell": ell,
        "k": args.k,
        "A_k": _matrix_doc(Ak),
        "A_k_tilde": _matrix_doc(Akt),
        "volume": volume,
        "lattice_count": count,
        "positroid": is_positroid(Ak) if square else None,
        "positroid_tilde": is_positroid(Akt) if square else None,
    }
    text = (
        f"A^({args.k}):\n{format_matrix(Ak)}Ã^({args.k}):\n{format_matrix(Akt)}"
        f"volume {volume}\nlattice count {count}\n"
        f"positroid {doc['positroid']}\npositroid tilde {doc['positroid_tilde']}\n"
    )
    return doc, text, EXIT_OK


def cmd_polygon(args):
    P = _polygon(args)
    doc = {
        "vertices": [list(v) for v in P.vertices],
        "area": normalized_area(P),
        "boundary": boundary_length(P),
        "lattice_points": lattice_point_count(P),
    }
    lines = [f"area {doc['area']}", f"boundary {doc['boundary']}", f"lattice points {doc['lattice_points']}"]
    if args.all:
        verts = []
        for v in P.vertices:
            mult, eu = vertex_multiplicity(P, v), euler_obstruction_vertex(P, v)
            verts.append({"vertex": list(v), "multiplicity": mult, "euler_obstruction": eu})
            lines.append(f"vertex {v[0]},{v[1]} multiplicity {mult} Eu {eu}")
        doc["vertex_data"] = verts
        doc["points"] = [list(p) for p in lattice_points(P)]
    return doc, "\n".join(lines) + "\n", EXIT_OK


def cmd_canonical_form(args):
    cf = canonical_form_polygon(_polygon(args))
    return {"canonical_form": str(cf)}, f"{cf}\n", EXIT_OK


def cmd_dual_degree(args):
    normal = dual_degree_normal(P_polygon(args.pd))
    doc = {"d": args.pd, "dual_degree_normal": normal}
    text = f"normal {normal}\n"
    if args.projected:
        proj = dual_degree_projected(args.pd)
        doc["dual_degree_projected"] = proj
        text += f"projected {proj}\n"
    return doc, text, EXIT_OK


def cmd_report(args):
    reports = [surface_report(d).to_dict() for d in _d_range(args.d_range)]
    blocks = []
    for r in reports:
        blocks.append("\n".join(f"{k}: {json.dumps(v)}" for k, v in r.items()))
    return {"reports": reports}, "\n\n".join(blocks) + "\n", EXIT_OK


def cmd_normalize(args):
    conf = normalize(_matrix(args))
    return {"matrix": _matrix_doc(conf.matrix)}, format_matrix(conf.matrix), EXIT_OK


# -- parser -------------------------------------------------------------------


def _add_matrix_input(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix", metavar="FILE", help="matrix text file ('rows cols' header, then rows)")
    g.add_argument("--inline", metavar="ROWS", help="rows separated by ';', e.g. '1,1,1;0,1,2'")


def _add_polygon_input(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--file", metavar="FILE", help="polygon file, one 'x y' vertex per line, counterclockwise")
    g.add_argument("--pd", type=int, metavar="D", help="use the polygon P(D)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toric-interp", description="Exact toric interpolants and polygon invariants.")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    # --format is accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("interpolant", parents=[common], help="print A^(k) or Ã^(k)")
    _add_matrix_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tilde", action="store_true", help="power rows instead of binomial rows")
    p.set_defaults(func=cmd_interpolant)

    p = sub.add_parser("jet", parents=[common], help="print the jet matrix at a torus point")
    _add_matrix_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--point", help="comma-separated rationals (default: all ones)")
    p.set_defaults(func=cmd_jet)

    p = sub.add_parser("verify", parents=[common], help="check the interpolant property at torus points")
    _add_matrix_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--point", help="comma-separated rationals (default: all ones)")
    p.add_argument("--samples", type=int, default=0, help="extra random rational points")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("binomials", parents=[common], help="binomials from the kernel lattice")
    _add_matrix_input(p)
    p.add_argument("--hypersurface", action="store_true", help="require corank 1 and report the degree")
    p.set_defaults(func=cmd_binomials)

    p = sub.add_parser("curve", parents=[common], help="interpolant matrices of a monomial curve")
    p.add_argument("--ell", required=True, help="strictly increasing exponents starting at 0")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("polygon", parents=[common], help="area, boundary and lattice points of a polygon")
    _add_polygon_input(p)
    p.add_argument("--all", action="store_true", help="add per-vertex multiplicity and Euler obstruction")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("canonical-form", parents=[common], help="canonical rational function of a polygon")
    _add_polygon_input(p)
    p.set_defaults(func=cmd_canonical_form)

    p = sub.add_parser("dual-degree", parents=[common], help="dual degrees of the surfaces of P(d)")
    p.add_argument("--pd", type=int, required=True, metavar="D")
    p.add_argument("--projected", action="store_true", help="also the non-normal surface")
    p.set_defaults(func=cmd_dual_degree)

    p = sub.add_parser("report", parents=[common], help="surface reports for a range of d")
    p.add_argument("--d-range", required=True, metavar="A..B")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("normalize", parents=[common], help="unimodular row change making the first row all-ones")
    _add_matrix_input(p)
    p.set_defaults(func=cmd_normalize)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        doc, text, code = args.func(args)
    except FormatError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except PreconditionError as exc:
        print(f"error: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.format == "json":
        print(json.dumps({"command": args.command, **doc}, indent=2))
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
