"""Simplex versus a Euclidean ball (binary64 throughout).

Tolerances: 1e-9 for cross-checks between independent formulas, 1e-12 for
constructions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionTooLarge
from .simplex import Simplex, build_simplex, metrics

DEFAULT_MAX_DIM = 24
CROSS_TOL = 1e-9
BUILD_TOL = 1e-12


@dataclass(frozen=True)
class Ball:
    center: tuple[float, ...]
    radius: float = 1.0

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    @classmethod
    def unit(cls, n: int) -> "Ball":
        return cls(tuple([0.0] * n), 1.0)

    @property
    def n(self) -> int:
        return len(self.center)


def _normals(S: Simplex) -> tuple[np.ndarray, np.ndarray]:
    """Columns ``a_j`` of ``A^{-1}`` (without constant row) and the constants."""
    L = S.L_float()
    return L[:-1, :], L[-1, :]


def _norms(S: Simplex) -> np.ndarray:
    a, _ = _normals(S)
    return np.sqrt((a * a).sum(axis=0))


def alpha_ball(S: Simplex, B: Optional[Ball] = None) -> float:
    """``alpha(B; S) = rho * sum_j |a_j|`` (independent of the ball center)."""
    rho = 1.0 if B is None else B.radius
    return rho * float(_norms(S).sum())


def _face_distance(S: Simplex, j: int, x: np.ndarray) -> float:
    """Distance from ``x`` to the affine hull of face ``j``, by least squares."""
    V = np.array(S.vertices, dtype=float)
    pts = np.delete(V, j, axis=0)
    base = pts[0]
    E = (pts[1:] - base).T
    if E.shape[1] == 0:
        return float(np.linalg.norm(x - base))
    coef, *_ = np.linalg.lstsq(E, x - base, rcond=None)
    return float(np.linalg.norm(x - base - E @ coef))


@dataclass(frozen=True)
class AlphaBallCheck:
    from_coefficients: float
    from_heights: float
    from_inradius: float
    from_surface: float

    @property
    def values(self) -> tuple[float, float, float, float]:
        return (self.from_coefficients, self.from_heights, self.from_inradius, self.from_surface)

    def agree(self, tol: float = CROSS_TOL) -> bool:
        v = self.values
        return max(v) - min(v) <= tol * max(1.0, abs(v[0]))


def alpha_ball_formulas(S: Simplex) -> AlphaBallCheck:
    """``alpha(B_n; S)`` four ways.

    Heights and the inradius are measured geometrically (least-squares
    distances to face hulls), not from ``A^{-1}``, so agreement is a real
    cross-check.
    """
    n = S.n
    V = np.array(S.vertices, dtype=float)
    heights = [_face_distance(S, j, V[j]) for j in range(n + 1)]
    z, r, _ = incenter_inradius(S)
    dists = [_face_distance(S, j, np.array(z)) for j in range(n + 1)]
    r_geo = float(np.mean(dists))
    m = metrics(S)
    return AlphaBallCheck(
        from_coefficients=alpha_ball(S),
        from_heights=float(sum(1.0 / h for h in heights)),
        from_inradius=1.0 / r_geo,
        from_surface=m.total_surface / (n * float(m.volume)),
    )


def incenter_inradius(S: Simplex) -> tuple[tuple[float, ...], float, list[tuple[float, ...]]]:
    """Incenter ``z``, inradius ``r`` and the tangent points ``y^(k)`` on each face."""
    a, _ = _normals(S)
    norms = np.sqrt((a * a).sum(axis=0))
    r = 1.0 / float(norms.sum())
    V = np.array(S.vertices, dtype=float)
    z = r * (norms[:, None] * V).sum(axis=0)
    tangents = [tuple(z - (r / norms[k]) * a[:, k]) for k in range(S.n + 1)]
    return tuple(z), r, tangents


def xi_ball(S: Simplex, B: Optional[Ball] = None) -> float:
    """Absorption index of a ball by ``S``; 1 when the ball already lies in ``S``."""
    n = S.n
    B = B or Ball.unit(n)
    a, c = _normals(S)
    norms = np.sqrt((a * a).sum(axis=0))
    x0 = np.array(B.center, dtype=float)
    lam0 = a.T @ x0 + c
    excess = B.radius * norms - lam0
    if np.all(excess <= 0):
        return 1.0
    return (n + 1) * float(excess.max()) + 1.0


# ---------------------------------------------------------------------------
# minimum enclosing ball


def _support_ball(R: list[np.ndarray]) -> tuple[Optional[np.ndarray], float]:
    """Smallest sphere through all points of ``R`` with center in their affine hull."""
    if not R:
        return None, -1.0
    p0 = R[0]
    if len(R) == 1:
        return p0.copy(), 0.0
    E = np.array([p - p0 for p in R[1:]])
    G = E @ E.T
    b = 0.5 * (E * E).sum(axis=1)
    t, *_ = np.linalg.lstsq(G, b, rcond=None)
    c = p0 + t @ E
    return c, float(((c - p0) ** 2).sum())


def _mtf(points: list[np.ndarray], end: int, support: list[np.ndarray], dim: int):
    c, r2 = _support_ball(support)
    if len(support) == dim + 1:
        return c, r2
    i = 0
    while i < end:
        p = points[i]
        if c is None or ((p - c) ** 2).sum() > r2 * (1 + 1e-12) + 1e-15:
            c, r2 = _mtf(points, i, support + [p], dim)
            points.insert(0, points.pop(i))
        i += 1
    return c, r2


def min_enclosing_ball(points: Sequence[Sequence[float]]) -> tuple[tuple[float, ...], float]:
    """Welzl's move-to-front recursion; deterministic for a fixed point order."""
    pts = [np.array(p, dtype=float) for p in points]
    dim = len(pts[0])
    c, r2 = _mtf(pts, len(pts), [], dim)
    return tuple(float(x) for x in c), math.sqrt(max(r2, 0.0))


def min_enclosing_ball_bruteforce(points: Sequence[Sequence[float]]) -> float:
    """Smallest candidate sphere over all support subsets that covers every point."""
    pts = [np.array(p, dtype=float) for p in points]
    best = math.inf
    for k in range(1, len(pts) + 1):
        for sub in itertools.combinations(pts, k):
            c, r2 = _support_ball(list(sub))
            if all(((p - c) ** 2).sum() <= r2 * (1 + 1e-9) + 1e-12 for p in pts):
                best = min(best, r2)
    return math.sqrt(best)


def circumradius(S: Simplex) -> float:
    """Radius of the minimum ball containing ``S`` (not the circumsphere through all vertices)."""
    return min_enclosing_ball(S.vertices)[1]


# ---------------------------------------------------------------------------
# interpolation on a ball


def projector_norm_ball(S: Simplex, B: Optional[Ball] = None, max_dim: int = DEFAULT_MAX_DIM,
                        chunk_bits: int = 14) -> tuple[float, tuple[int, ...]]:
    """``max_f [R |sum_j f_j a_j| + |sum_j f_j lambda_j(x0)|]`` over sign vectors.

    ``f`` and ``-f`` give the same value, so the last sign is pinned to +1.
    """
    n = S.n
    if n > max_dim:
        raise DimensionTooLarge(f"n = {n} exceeds the sign-vector cap {max_dim}")
    B = B or Ball.unit(n)
    a, c = _normals(S)
    x0 = np.array(B.center, dtype=float)
    lam0 = a.T @ x0 + c
    best, best_f = -math.inf, None
    total = 1 << n
    step = 1 << min(n, chunk_bits)
    bit_idx = np.arange(n)
    for start in range(0, total, step):
        codes = np.arange(start, min(start + step, total), dtype=np.int64)
        F = np.ones((codes.size, n + 1))
        F[:, :n] = 1 - 2 * ((codes[:, None] >> bit_idx) & 1)
        vec = F @ a.T
        vals = B.radius * np.sqrt((vec * vec).sum(axis=1)) + np.abs(F @ lam0)
        k = int(np.argmax(vals))
        if vals[k] > best:
            best, best_f = float(vals[k]), tuple(int(x) for x in F[k])
    return best, best_f


def projector_norm_ball_sampled(S: Simplex, B: Optional[Ball] = None, samples: int = 100_000,
                                seed: int = 0) -> float:
    """``max sum_j |lambda_j(x)|`` over random boundary points; a lower estimate."""
    n = S.n
    B = B or Ball.unit(n)
    rng = np.random.default_rng(seed)
    u = rng.standard_normal((samples, n))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    x = np.array(B.center) + B.radius * u
    L = S.L_float()
    lam = x @ L[:-1, :] + L[-1, :]
    return float(np.abs(lam).sum(axis=1).max())


def regular_simplex(n: int, B: Optional[Ball] = None) -> Simplex:
    """Regular simplex inscribed in ``B`` (unit ball by default).

    The centered basis vectors ``e_k - 1/(n+1)`` of ``R^{n+1}`` are written in
    the Helmert orthonormal basis of the hyperplane ``sum x = 0``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    B = B or Ball.unit(n)
    H = np.zeros((n, n + 1))
    for i in range(1, n + 1):
        H[i - 1, :i] = 1.0
        H[i - 1, i] = -float(i)
        H[i - 1] /= math.sqrt(i * (i + 1))
    scale = B.radius * math.sqrt((n + 1) / n)
    center = np.array(B.center, dtype=float)
    verts = [center + scale * H[:, k] for k in range(n + 1)]
    return build_simplex([list(map(float, v)) for v in verts])


def _sqrt_exact_or_float(k: int):
    s = math.isqrt(k)
    return Fraction(s) if s * s == k else math.sqrt(k)


def psi(n: int, t: int):
    """``psi(t)`` at an integer ``t``; exact (a Fraction) when the radical is rational."""
    root = _sqrt_exact_or_float(n * t * (n + 1 - t))
    rest = Fraction(abs(n + 1 - 2 * t), n + 1)
    if isinstance(root, Fraction):
        return 2 * root / (n + 1) + rest
    return 2 * root / (n + 1) + float(rest)


@dataclass(frozen=True)
class PsiNorm:
    norm: float
    a: int
    psi_a: float
    psi_a1: float
    exact: Optional[Fraction] = None


def psi_norm(n: int) -> PsiNorm:
    """Projector norm of a regular simplex inscribed in a ball: ``max(psi(a), psi(a+1))``.

    ``a = floor((n+1)/2 - sqrt(n+1)/2)`` is computed in integers.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n + 1
    # a = floor((m - sqrt(m)) / 2): largest a with 2a <= m - sqrt(m)
    a = (m - math.isqrt(m)) // 2
    while 2 * (a + 1) <= m and (m - 2 * (a + 1)) ** 2 >= m:
        a += 1
    while a > 0 and (m - 2 * a < 0 or (m - 2 * a) ** 2 < m):
        a -= 1
    pa, pa1 = psi(n, a), psi(n, a + 1)
    best = pa if pa >= pa1 else pa1
    norm = float(best)
    assert math.sqrt(n) - BUILD_TOL <= norm <= math.sqrt(n + 1) + BUILD_TOL
    return PsiNorm(norm, a, float(pa), float(pa1), best if isinstance(best, Fraction) else None)


def d_n(n: int):
    """``sqrt(n+1) - ||P*||``; an exact zero whenever ``n + 1`` is a perfect square."""
    p = psi_norm(n)
    root = _sqrt_exact_or_float(n + 1)
    if isinstance(root, Fraction) and p.exact is not None:
        return root - p.exact
    return float(root) - p.norm


def d_n_series(n_max: int) -> list[tuple[int, object]]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [(n, d_n(n)) for n in range(1, n_max + 1)]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BallReport:
    alpha: float
    xi: float
    inradius: float
    incenter: tuple[float, ...]
    tangent_points: tuple[tuple[float, ...], ...]
    circumradius: float
    euler_ratio: float


def ball_report(S: Simplex, B: Optional[Ball] = None) -> BallReport:
    B = B or Ball.unit(S.n)
    z, r, tangents = incenter_inradius(S)
    R = circumradius(S)
    return BallReport(
        alpha=alpha_ball(S, B),
        xi=xi_ball(S, B),
        inradius=r,
        incenter=z,
        tangent_points=tuple(tangents),
        circumradius=R,
        euler_ratio=R / (S.n * r),
    )
