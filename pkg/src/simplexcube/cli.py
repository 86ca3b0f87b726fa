"""``simplexcube`` command-line front end.

Exit status: 0 on success, 2 on invalid input, 3 when a computation limit
(dimension cap, missing ``--allow-long``) is hit.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Any, Optional, Sequence

from . import ball as ballmod
from . import cube, families, legendre, tables
from .errors import ComputationLimit, DomainError, SimplexCubeError
from .exact import parse_rational
from .hadamard import det_relations, h_search, hadamard_simplex, maxdet_diagnostic
from .serialize import dumps, encode, format_float, report_to_csv, rows_to_csv
from .simplex import Simplex, format_simplex, parse_simplex

WORKERS_ENV = "SIMPLEXCUBE_WORKERS"


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# input / output helpers


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _read_simplex(path: str) -> Simplex:
    return parse_simplex(_read_text(path))


def _read_matrix(path: str) -> list[list[int]]:
    rows = []
    for line in _read_text(path).splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(tok) for tok in line.replace(",", " ").split()])
    if not rows:
        raise ValueError("empty matrix")
    return rows


def _parse_point(text: Optional[str], n: int) -> tuple[float, ...]:
    if not text:
        return tuple([0.0] * n)
    vals = tuple(float(x) for x in text.replace(",", " ").split())
    if len(vals) != n:
        raise ValueError(f"--center needs {n} coordinates, got {len(vals)}")
    return vals


def _text_value(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return format_float(v)
    if isinstance(v, list):
        return " ".join(_text_value(x) for x in v)
    return str(v)


def _render_text(data: Any) -> str:
    data = encode(data)
    if not isinstance(data, dict):
        return _text_value(data) + "\n"
    out = []
    for k, v in data.items():
        if isinstance(v, list) and v and isinstance(v[0], list):
            out.append(f"{k}:")
            for i, item in enumerate(v):
                if item and isinstance(item[0], list):
                    out.append(f"  [{i}] " + " | ".join(_text_value(x) for x in item))
                else:
                    out.append("  " + _text_value(item))
        elif isinstance(v, dict):
            out.append(f"{k}:")
            for kk, vv in v.items():
                out.append(f"  {kk}: {_text_value(vv)}")
        else:
            out.append(f"{k}: {_text_value(v)}")
    return "\n".join(out) + "\n"


def _emit(args, data: Any, rows: bool = False) -> None:
    fmt = args.format or ("csv" if rows else "text")
    if fmt == "json":
        text = dumps(data) + "\n"
    elif fmt == "csv":
        text = rows_to_csv(data) if rows else report_to_csv(data)
    elif rows:
        text = rows_to_csv(data)
    else:
        text = _render_text(data)
    sys.stdout.write(text)


def _emit_simplex(args, S: Simplex) -> None:
    if args.format == "json":
        sys.stdout.write(dumps({"n": S.n, "vertices": S.vertices}) + "\n")
    else:
        sys.stdout.write(format_simplex(S))


# ---------------------------------------------------------------------------
# subcommands


def cmd_xi(args) -> None:
    S = _read_simplex(args.file)
    r = cube.xi_cube(S, workers=args.workers, max_dim=args.max_dim)
    verts = sorted({v for ws in r.witnesses for v in ws})
    _emit(args, {
        "xi": r.xi,
        "alpha": r.alpha,
        "axial_diameters": r.axial_diameters,
        "circumscribed": r.circumscribed,
        "contains_cube": r.contains_cube,
        "per_face_max": r.per_face_max,
        "witness_vertices": verts,
        "witnesses_per_face": r.witnesses,
    })


def cmd_alpha(args) -> None:
    S = _read_simplex(args.file)
    if args.domain == "ball":
        chk = ballmod.alpha_ball_formulas(S)
        _emit(args, {"alpha_ball": chk.from_coefficients, "from_heights": chk.from_heights,
                     "from_inradius": chk.from_inradius, "from_surface": chk.from_surface,
                     "agree": chk.agree()})
        return
    r = cube.xi_cube(S, workers=args.workers, max_dim=args.max_dim) if S.n <= args.max_dim else None
    _emit(args, {"alpha": cube.alpha_cube(S), "alpha_prime": cube.alpha_cube_prime(S),
                 "alpha_from_face_maxima": cube.alpha_from_face_maxima(r) if r else None})


def cmd_diam(args) -> None:
    S = _read_simplex(args.file)
    _emit(args, {"axial_diameters": cube.axial_diameters(S)})


def cmd_norm_cube(args) -> None:
    S = _read_simplex(args.file)
    r = cube.projector_norm_cube(S, workers=args.workers, max_dim=args.max_dim)
    b = cube.check_bilateral(S, workers=args.workers, max_dim=args.max_dim)
    _emit(args, {"norm": r.norm, "witness_vertex": r.witness_vertex, "one_point": r.one_point,
                 "xi": b.xi, "bilateral_lower": b.lower, "bilateral_upper": b.upper,
                 "right_equality": b.right_equality})


def _ball(args, S: Simplex) -> ballmod.Ball:
    return ballmod.Ball(_parse_point(args.center, S.n), args.radius)


def cmd_norm_ball(args) -> None:
    S = _read_simplex(args.file)
    B = _ball(args, S)
    norm, f = ballmod.projector_norm_ball(S, B, max_dim=args.max_dim)
    _emit(args, {"norm": norm, "sign_vector": f})


def cmd_ball_report(args) -> None:
    S = _read_simplex(args.file)
    _emit(args, ballmod.ball_report(S, _ball(args, S)))


def cmd_psi(args) -> None:
    p = ballmod.psi_norm(args.n)
    _emit(args, {"n": args.n, "norm": p.norm, "exact": p.exact, "a": p.a,
                 "psi_a": p.psi_a, "psi_a1": p.psi_a1,
                 "status": "theta_n(B_n)" if args.n <= 4 else "upper bound for theta_n(B_n)"})


def cmd_d_series(args) -> None:
    _emit(args, [{"n": n, "d_n": d} for n, d in ballmod.d_n_series(args.max)], rows=True)


def cmd_theta_lower(args) -> None:
    n = args.n
    if args.ball:
        b = legendre.theta_lower_ball(n)
        _emit(args, {"n": n, "ball_lower_bound": b,
                     "asymptotic_floor": legendre.BALL_BOUND_CONSTANT * math.sqrt(n)})
        return
    if args.nu is not None:
        nu = parse_rational(args.nu)
    elif args.h is not None:
        nu = det_relations(n, args.h)[1]
    else:
        nu, _ = tables.known_nu(n)
        if nu is None:
            raise DomainError(f"nu_{n} is not known here; pass --h (max (0,1)-determinant) or --nu")
    _emit(args, legendre.theta_lower_cube(n, nu))


def cmd_slice_measure(args) -> None:
    out: dict[str, Any] = {"n": args.n, "gamma": args.gamma,
                           "measure": legendre.slice_measure(args.n, args.gamma)}
    if args.mc:
        est, se = legendre.slice_measure_mc(args.n, args.gamma, samples=args.mc, seed=args.seed)
        out.update(mc_estimate=est, mc_standard_error=se)
    _emit(args, out)


def cmd_hadamard_simplex(args) -> None:
    _emit_simplex(args, hadamard_simplex(args.n))


def cmd_maxdet_check(args) -> None:
    _emit(args, maxdet_diagnostic(_read_matrix(args.file)))


def cmd_h_search(args) -> None:
    h, w = h_search(args.n, allow_long=args.allow_long)
    _emit(args, {"n": args.n, "h_n": h, "witness": w})


def cmd_catalog(args) -> None:
    if args.name == "list":
        sys.stdout.write("\n".join(families.CATALOG_NAMES) + "\n")
        return
    _emit_simplex(args, families.catalog(args.name))


def cmd_cut_volumes(args) -> None:
    S = _read_simplex(args.file)
    cv = families.cut_volumes(S, check_inside=not args.no_check_inside)
    _emit(args, {"v": cv.v, "equisecting": cv.is_equisecting if S.exact else cv.equisecting_within(1e-12)})


def cmd_perfect_check(args) -> None:
    S = _read_simplex(args.file)
    r = families.is_perfect(S, workers=args.workers)
    _emit(args, {"xi": r.xi, "is_perfect": r.is_perfect,
                 "incident_vertices": r.incident_vertices,
                 "per_vertex_face": {k: sorted(v) for k, v in r.per_vertex_face.items()}})


def cmd_search_01(args) -> None:
    def progress(done, total):
        print(f"search-01: {done}/{total}", file=sys.stderr, flush=True)

    r = families.search_01(args.n, args.objective, allow_long=args.allow_long, workers=args.workers,
                           progress=progress if args.progress else None)
    _emit(args, {"n": r.n, "objective": r.objective, "value": r.value,
                 "witness": r.witness.vertices, "candidates": r.candidates})


def cmd_table(args) -> None:
    rows = tables.build_table(args.name, allow_long=args.allow_long, workers=args.workers)
    _emit(args, rows, rows=True)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=None,
                        help="output format (default: text; csv for tables and series)")
    common.add_argument("--workers", type=int, default=_default_workers(),
                        help=f"worker processes (default: ${WORKERS_ENV} or 1)")
    common.add_argument("--max-dim", type=int, default=cube.DEFAULT_MAX_DIM,
                        help="cap on n for 2^n enumerations (default: 24)")

    ap = argparse.ArgumentParser(prog="simplexcube",
                                 description="Simplices, cubes, balls and linear interpolation.")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_, file_arg=False):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        if file_arg:
            p.add_argument("file", nargs="?", default="-", help="simplex file ('-' for stdin)")
        p.set_defaults(func=fn)
        return p

    add("xi", cmd_xi, "absorption index of the unit cube, with witness vertices", True)
    p = add("alpha", cmd_alpha, "alpha(Q_n; S) or alpha(B_n; S)", True)
    p.add_argument("--domain", choices=("cube", "ball"), default="cube")
    add("diam", cmd_diam, "axial diameters d_i(S)", True)
    add("norm-cube", cmd_norm_cube, "interpolation projector norm on the unit cube", True)
    for name, fn, h in (("norm-ball", cmd_norm_ball, "interpolation projector norm on a ball"),
                        ("ball-report", cmd_ball_report, "inradius, circumradius, alpha and xi for a ball")):
        p = add(name, fn, h, True)
        p.add_argument("--center", default=None, help="ball center, comma separated (default: origin)")
        p.add_argument("--radius", type=float, default=1.0)
    p = add("psi", cmd_psi, "projector norm of the regular simplex inscribed in B_n")
    p.add_argument("-n", type=int, required=True)
    p = add("d-series", cmd_d_series, "d_n = sqrt(n+1) - ||P*|| for n = 1..max")
    p.add_argument("--max", type=int, required=True)
    p = add("theta-lower", cmd_theta_lower, "Legendre lower bounds for theta_n")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cube", action="store_true")
    g.add_argument("--ball", action="store_true")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--h", type=int, default=None, help="maximal (0,1)-determinant of order n")
    p.add_argument("--nu", default=None, help="maximal simplex volume in Q_n as p/q")
    p = add("slice-measure", cmd_slice_measure, "measure of {sum|x_j| + |1 - sum x_j| <= gamma}")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--mc", type=int, default=0, help="also run a Monte-Carlo check with this many samples")
    p.add_argument("--seed", type=int, default=0)
    p = add("hadamard-simplex", cmd_hadamard_simplex, "regular (0,1)-simplex from a Hadamard matrix")
    p.add_argument("-n", type=int, required=True)
    p = add("maxdet-check", cmd_maxdet_check, "row-sum test on a (0,1)-matrix file")
    p.add_argument("file", nargs="?", default="-")
    p = add("h-search", cmd_h_search, "exhaustive maximal (0,1)-determinant")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--allow-long", action="store_true")
    p = add("catalog", cmd_catalog, "print a named simplex (s1, s2, s-star(n), v(s,t), hadamard(n), list)")
    p.add_argument("name")
    p = add("cut-volumes", cmd_cut_volumes, "volumes cut off the cube by each face hyperplane", True)
    p.add_argument("--no-check-inside", action="store_true")
    add("perfect-check", cmd_perfect_check, "which cube vertices lie on the boundary of xi(S) S", True)
    p = add("search-01", cmd_search_01, "minimal xi or norm over simplices with vertices at cube vertices")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--objective", choices=families.SEARCH_OBJECTIVES, default="xi")
    p.add_argument("--allow-long", action="store_true")
    p.add_argument("--progress", action="store_true")
    p = add("table", cmd_table, "reference tables")
    p.add_argument("--name", choices=tables.TABLE_NAMES, required=True)
    p.add_argument("--allow-long", action="store_true")
    return ap


def run(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.func(args)
    except ComputationLimit as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (SimplexCubeError, ValueError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
