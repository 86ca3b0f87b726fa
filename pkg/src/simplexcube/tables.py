"""Row builders for the reference tables, shared by the CLI and scripts."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .cube import projector_norm_cube, xi_cube
from .errors import UnsupportedOrder
from .families import family_v, s_star, search_01
from .fixtures import (
    H_N,
    IMPORTED_BOUNDS,
    LEGENDRE_PRINTED,
    SMALL_N_VALUES,
    THETA_UPPER_SMALL,
    XI_SMALL,
    g54_ehlich_bound,
    nu_from_g,
)
from .hadamard import det_relations, hadamard_h, hadamard_simplex, is_hadamard_order_supported
from .legendre import theta_lower_cube

TABLE_NAMES = ("xi-small", "theta-upper-small", "theta-lower", "t6")

# printed bounds carry four decimals with an unstated rounding rule
PRINTED_TOLERANCE = 5e-4


def known_nu(n: int) -> tuple[Optional[Fraction], str]:
    """``nu_n`` when it is known exactly here, with a provenance tag."""
    if n in H_N:
        return det_relations(n, H_N[n])[1], "h_n fixture"
    m = n + 1
    if (m <= 2 or m % 4 == 0) and is_hadamard_order_supported(m):
        return det_relations(n, hadamard_h(n))[1], "Hadamard order"
    if n == 53:
        return nu_from_g(53, g54_ehlich_bound()), "Ehlich-Wojtas bound (attained)"
    return None, "printed"


def theta_lower_rows(n_max: int = 54) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        nu, src = known_nu(n)
        computed = theta_lower_cube(n, nu).legendre_bound if nu is not None else None
        printed = LEGENDRE_PRINTED.get(n)
        linear = 3 - 4 / (n + 1)
        leg = computed if computed is not None else printed
        rows.append({
            "n": n,
            "legendre_computed": computed,
            "legendre_printed": printed,
            "linear": linear,
            "max": None if leg is None else max(leg, linear),
            "source": src,
            "deviates": computed is not None and printed is not None
            and abs(computed - printed) > PRINTED_TOLERANCE,
        })
    return rows


def crossover_n(rows: Optional[list[dict]] = None) -> Optional[int]:
    """First ``n`` where the Legendre bound beats ``3 - 4/(n+1)``."""
    for r in rows or theta_lower_rows():
        leg = r["legendre_computed"] if r["legendre_computed"] is not None else r["legendre_printed"]
        if leg is not None and leg > r["linear"]:
            return r["n"]
    return None


def seventh_dimension_certificate() -> dict:
    """``xi'_7 = xi_7 = 7`` and ``theta'_7 = theta_7 = 5/2`` from the Hadamard simplex.

    ``xi_n >= n`` and the right bilateral inequality give
    ``theta_n >= 2 (xi_n - 1)/(n + 1) + 1``; the simplex attains both.
    """
    n = 7
    S = hadamard_simplex(n)
    xi = xi_cube(S).xi
    norm = projector_norm_cube(S).norm
    theta_lower = Fraction(2 * (n - 1), n + 1) + 1
    return {
        "xi": xi,
        "xi_lower": Fraction(n),
        "norm": norm,
        "theta_lower": theta_lower,
        "xi_tight": xi == n,
        "theta_tight": norm == theta_lower,
    }


def t6_rows(allow_long: bool = False, workers: int = 1) -> list[dict]:
    rows = []
    for n in range(1, 8):
        xi_n, xi_p_ref, theta_n, th_p_ref = SMALL_N_VALUES[n]
        row = {"n": n, "xi_n": xi_n, "xi_prime_printed": xi_p_ref,
               "theta_n": theta_n, "theta_prime_printed": th_p_ref}
        if n <= 5 or (n == 6 and allow_long):
            row["xi_prime"] = search_01(n, "xi", allow_long=allow_long, workers=workers).value
            row["theta_prime"] = search_01(n, "norm", allow_long=allow_long, workers=workers).value
            row["method"] = "exhaustive (0,1) search"
        elif n == 7:
            cert = seventh_dimension_certificate()
            row["xi_prime"] = cert["xi"] if cert["xi_tight"] else None
            row["theta_prime"] = cert["norm"] if cert["theta_tight"] else None
            row["method"] = "Hadamard simplex + bilateral bound"
        else:
            row["xi_prime"] = None
            row["theta_prime"] = None
            row["method"] = "computed-if-enabled (--allow-long)"
        rows.append(row)
    return rows


def xi_small_rows() -> list[dict]:
    rows = []
    for n in range(1, 11):
        lo, hi = XI_SMALL[n]
        cands = [("S*", xi_cube(s_star(n)).xi)]
        try:
            cands.append(("Hadamard", xi_cube(hadamard_simplex(n)).xi))
        except UnsupportedOrder:
            pass
        if n == 5:
            cands.append(("V(1/2,1/2)", xi_cube(family_v(Fraction(1, 2), Fraction(1, 2))).xi))
        name, best = min(cands, key=lambda c: c[1])
        rows.append({"n": n, "xi_lower": lo, "xi_upper_imported": hi,
                     "construction": name, "xi_construction": best})
    return rows


def theta_upper_rows(max_compute: int = 19, workers: int = 1) -> list[dict]:
    rows = []
    for n in range(1, 28):
        ref, count = THETA_UPPER_SMALL[n]
        computed = None
        m = n + 1
        if n <= max_compute and (m <= 2 or m % 4 == 0):
            try:
                computed = projector_norm_cube(hadamard_simplex(n), workers=workers).norm
            except UnsupportedOrder:
                computed = None
        rows.append({"n": n, "min_norm_imported": ref, "matrices_examined": count,
                     "hadamard_norm": computed})
    return rows


def imported_bounds() -> dict[str, float]:
    return dict(IMPORTED_BOUNDS)


def build_table(name: str, **kw) -> list[dict]:
    if name == "t6":
        return t6_rows(allow_long=kw.get("allow_long", False), workers=kw.get("workers", 1))
    if name == "xi-small":
        return xi_small_rows()
    if name == "theta-upper-small":
        return theta_upper_rows(max_compute=kw.get("max_compute", 19), workers=kw.get("workers", 1))
    if name == "theta-lower":
        return theta_lower_rows()
    raise ValueError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")
