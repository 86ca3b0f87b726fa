"""Standardized Legendre polynomials and the lower bounds built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError

__all__ = [
    "BoundsRow",
    "legendre_eval",
    "legendre_deriv",
    "legendre_inv",
    "legendre_coefficients",
    "slice_measure",
    "slice_measure_mc",
    "theta_lower_cube",
    "theta_lower_ball",
    "ball_volume",
    "regular_simplex_volume",
    "chi_inv_lower_closed_form",
    "BALL_BOUND_CONSTANT",
]

# cbrt(pi) / (sqrt(12 e) * 3^(1/6))
BALL_BOUND_CONSTANT = math.pi ** (1 / 3) / (math.sqrt(12 * math.e) * 3 ** (1 / 6))


def legendre_eval(n: int, t: float) -> float:
    """``chi_n(t)`` by ``(k+1) chi_{k+1} = (2k+1) t chi_k - k chi_{k-1}``."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    p0, p1 = 1.0, float(t)
    if n == 0:
        return p0
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * t * p1 - k * p0) / (k + 1)
    return p1


def legendre_deriv(n: int, t: float) -> float:
    if n == 0:
        return 0.0
    if t == 1.0:
        return n * (n + 1) / 2.0
    return n * (t * legendre_eval(n, t) - legendre_eval(n - 1, t)) / (t * t - 1.0)


def legendre_coefficients(n: int) -> list[Fraction]:
    """Exact power-basis coefficients from the Rodrigues formula (ascending)."""
    # (t^2 - 1)^n = sum_k C(n,k) (-1)^(n-k) t^(2k); differentiate n times
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        p = 2 * k
        if p < n:
            continue
        falling = math.perm(p, n)
        coeffs[p - n] += Fraction(math.comb(n, k) * (-1) ** (n - k) * falling, 2**n * math.factorial(n))
    return coeffs


def legendre_inv(n: int, s: float, rtol: float = 1e-12) -> float:
    """Inverse of ``chi_n`` on ``[1, inf)``: doubling bracket, then safeguarded Newton."""
    if s < 1:
        raise DomainError(f"chi_n^-1 is defined for s >= 1, got {s}")
    if n < 1:
        raise DomainError("chi_0 is constant; no inverse")
    if s == 1:
        return 1.0
    tol = rtol * max(1.0, s)
    lo, hi = 1.0, 2.0
    while legendre_eval(n, hi) < s:
        lo, hi = hi, 2.0 * hi
    t = 0.5 * (lo + hi)
    for _ in range(200):
        f = legendre_eval(n, t) - s
        if abs(f) <= tol:
            return t
        if f > 0:
            hi = t
        else:
            lo = t
        d = legendre_deriv(n, t)
        step = t - f / d if d > 0 else None
        t = step if step is not None and lo < step < hi else 0.5 * (lo + hi)
        if hi - lo <= 4 * np.finfo(float).eps * hi:
            return t
    return t


def slice_measure(n: int, gamma: float) -> float:
    """Lebesgue measure of ``E_{n,gamma} = {sum|x_j| + |1 - sum x_j| <= gamma}``."""
    if gamma < 1:
        raise DomainError(f"gamma must be >= 1, got {gamma}")
    return legendre_eval(n, gamma) / math.factorial(n)


def slice_measure_mc(n: int, gamma: float, samples: int = 1_000_000, seed: int = 0,
                     batch: int = 250_000) -> tuple[float, float]:
    """Rejection-sampling estimate and its standard error.

    ``E_{n,gamma}`` lies in the box ``[(1-gamma)/2, (1+gamma)/2]^n``, since
    the triangle inequality gives ``|x_j| + |1 - x_j| <= gamma`` for each j.
    """
    rng = np.random.default_rng(seed)
    lo, hi = (1 - gamma) / 2, (1 + gamma) / 2
    box = (hi - lo) ** n
    hits = 0
    done = 0
    while done < samples:
        m = min(batch, samples - done)
        x = rng.uniform(lo, hi, size=(m, n))
        val = np.abs(x).sum(axis=1) + np.abs(1 - x.sum(axis=1))
        hits += int((val <= gamma).sum())
        done += m
    p = hits / samples
    return box * p, box * math.sqrt(p * (1 - p) / samples)


@dataclass(frozen=True)
class BoundsRow:
    n: int
    legendre_bound: float
    linear_bound: float
    max_bound: float


def theta_lower_cube(n: int, nu_n) -> BoundsRow:
    """``max[3 - 4/(n+1), chi_n^-1(1/nu_n)]`` with ``nu_n`` the max simplex volume in ``Q_n``."""
    nu = Fraction(nu_n)
    if nu <= 0:
        raise DomainError("nu_n must be positive")
    leg = legendre_inv(n, float(1 / nu))
    lin = 3 - 4 / (n + 1)
    return BoundsRow(n, leg, lin, max(leg, lin))


def ball_volume(n: int) -> float:
    """``kappa_n`` via the even/odd factorial forms (no gamma function)."""
    k, odd = divmod(n, 2)
    if not odd:
        return math.pi**k / math.factorial(k)
    return 2 * math.factorial(k) * (4 * math.pi) ** k / math.factorial(2 * k + 1)


def regular_simplex_volume(n: int) -> float:
    """``sigma_n``: volume of the regular simplex inscribed in ``B_n``."""
    return math.sqrt(n + 1) * ((n + 1) / n) ** (n / 2) / math.factorial(n)


def theta_lower_ball(n: int) -> float:
    """``chi_n^-1(kappa_n / sigma_n)``, a lower bound for the minimal projector norm on ``B_n``."""
    if n < 1:
        raise DomainError("n must be >= 1")
    # kappa_n / sigma_n with n! moved to the numerator to avoid underflow
    log_ratio = (
        math.log(ball_volume(n)) + math.lgamma(n + 1)
        - 0.5 * math.log(n + 1) - (n / 2) * math.log((n + 1) / n)
    )
    return legendre_inv(n, math.exp(log_ratio))


def chi_inv_lower_closed_form(k: int, s: float, parity: str) -> float:
    """Closed-form lower bounds for ``chi_{2k}^-1(s)`` or ``chi_{2k+1}^-1(s)``."""
    if s < 1:
        raise DomainError("s must be >= 1")
    if parity == "even":
        if k < 1:
            raise DomainError("even degree needs k >= 1")
        return (math.factorial(k) ** 2 * s / math.factorial(2 * k)) ** (1 / (2 * k))
    if parity == "odd":
        return (math.factorial(k + 1) * math.factorial(k) * s / math.factorial(2 * k + 1)) ** (1 / (2 * k + 1))
    raise ValueError("parity must be 'even' or 'odd'")
