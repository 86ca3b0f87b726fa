"""The simplex type: vertex matrix, basic Lagrange polynomials, metrics.

A simplex in R^n is stored with its vertex matrix ``A`` (row ``k`` is the
k-th vertex followed by a 1) and ``L = A^{-1}``.  Column ``j`` of ``L`` holds
the coefficients of the j-th basic Lagrange polynomial

    lambda_j(x) = L[0][j] x_1 + ... + L[n-1][j] x_n + L[n][j],

so ``lambda_j(x^(k)) = delta_jk``.  Indices are 0-based throughout the code.

Exact simplices keep fractions everywhere.  A simplex with any float
coordinate is built in float mode (numpy inverse); this is what the ball
routines use for regular simplices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateSimplex, DimensionMismatch
from .exact import RationalMatrix, as_fraction, bareiss_det, det, parse_rational

__all__ = [
    "Simplex",
    "SimplexMetrics",
    "build_simplex",
    "lagrange_eval",
    "barycentric",
    "metrics",
    "parse_simplex",
    "format_simplex",
]


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True, eq=False)
class Simplex:
    vertices: tuple[tuple, ...]
    L: tuple[tuple, ...]
    det_A: object
    exact: bool
    _L_array: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.vertices) - 1

    @property
    def A(self):
        rows = [tuple(v) + (1,) for v in self.vertices]
        return RationalMatrix(rows) if self.exact else np.array(rows, dtype=float)

    @property
    def L_matrix(self) -> RationalMatrix:
        if not self.exact:
            raise TypeError("float simplex has no exact inverse")
        return RationalMatrix(self.L)

    def L_float(self) -> np.ndarray:
        return self._L_array

    def coefficients(self, j: int) -> tuple:
        """``a_j``: the linear part of ``lambda_j``."""
        return tuple(self.L[i][j] for i in range(self.n))

    def constant(self, j: int):
        return self.L[self.n][j]

    @property
    def volume(self):
        vol = abs(self.det_A) / math.factorial(self.n)
        return vol

    def centroid(self) -> tuple:
        k = self.n + 1
        if self.exact:
            return tuple(sum(v[i] for v in self.vertices) / Fraction(k) for i in range(self.n))
        return tuple(float(sum(v[i] for v in self.vertices)) / k for i in range(self.n))

    def permuted(self, perm: Sequence[int]) -> "Simplex":
        return build_simplex([self.vertices[p] for p in perm])

    def __eq__(self, other):
        if not isinstance(other, Simplex):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)


def build_simplex(vertices: Iterable[Sequence]) -> Simplex:
    """Build a simplex from ``n + 1`` points of ``R^n``.

    Integer, fraction and ``"p/q"`` string coordinates give an exact simplex;
    any float coordinate switches to float mode.
    """
    pts = [list(v) for v in vertices]
    if not pts:
        raise DimensionMismatch("no vertices")
    n = len(pts) - 1
    for k, v in enumerate(pts):
        if len(v) != n:
            raise DimensionMismatch(
                f"vertex {k} has {len(v)} coordinates; {n + 1} vertices need dimension {n}"
            )
    if n < 1:
        raise DimensionMismatch("need dimension n >= 1")
    exact = all(_is_exact(x) or isinstance(x, str) for v in pts for x in v)
    if exact:
        verts = tuple(tuple(as_fraction(x) for x in v) for v in pts)
        A = RationalMatrix([v + (1,) for v in verts])
        d = det(A)
        if d == 0:
            raise DegenerateSimplex("vertex matrix is singular")
        L = A.inverse().entries
        arr = np.array([[float(x) for x in r] for r in L])
        return Simplex(verts, L, d, True, arr)
    verts = tuple(tuple(float(x) for x in v) for v in pts)
    A = np.array([v + (1.0,) for v in verts])
    d = float(np.linalg.det(A))
    scale = max(1.0, float(np.abs(A).max())) ** (n + 1)
    if abs(d) <= 1e-13 * scale:
        raise DegenerateSimplex("vertex matrix is numerically singular")
    arr = np.linalg.inv(A)
    L = tuple(tuple(float(x) for x in r) for r in arr)
    return Simplex(verts, L, d, False, arr)


def lagrange_eval(S: Simplex, j: int, x: Sequence):
    """``lambda_j(x)`` for 0-based ``j``."""
    if not 0 <= j <= S.n:
        raise IndexError(f"face index {j} out of range 0..{S.n}")
    if len(x) != S.n:
        raise DimensionMismatch(f"point has {len(x)} coordinates, expected {S.n}")
    if S.exact and all(_is_exact(t) for t in x):
        total = S.L[S.n][j]
        for i, t in enumerate(x):
            total += S.L[i][j] * t
        return total
    col = S.L_float()[:, j]
    return float(np.dot(col[:-1], np.asarray(x, dtype=float)) + col[-1])


def barycentric(S: Simplex, x: Sequence) -> tuple:
    return tuple(lagrange_eval(S, j, x) for j in range(S.n + 1))


@dataclass(frozen=True)
class SimplexMetrics:
    volume: object
    heights: tuple[float, ...]
    heights_sq: tuple
    face_measures: tuple[float, ...]
    face_measures_sq: tuple
    total_surface: float


def _gram_det(edges: list[list]) -> object:
    m = len(edges)
    if m == 0:
        return 1
    G = [[sum(a * b for a, b in zip(edges[p], edges[q])) for q in range(m)] for p in range(m)]
    if all(_is_exact(x) for r in G for x in r):
        # Gram entries are rational; rescale to integers for Bareiss
        c = 1
        for r in G:
            for x in r:
                c = math.lcm(c, Fraction(x).denominator)
        K = [[int(Fraction(x) * c) for x in r] for r in G]
        return Fraction(bareiss_det(K), c**m)
    return float(np.linalg.det(np.array(G, dtype=float)))


def metrics(S: Simplex) -> SimplexMetrics:
    """Volume, heights ``h_j = 1/|a_j|`` and (n-1)-measures of the faces."""
    n = S.n
    heights_sq = []
    for j in range(n + 1):
        a = S.coefficients(j)
        heights_sq.append(1 / sum(x * x for x in a) if S.exact else 1.0 / float(sum(x * x for x in a)))
    faces_sq = []
    for j in range(n + 1):
        pts = [S.vertices[k] for k in range(n + 1) if k != j]
        base = pts[0]
        edges = [[p[i] - base[i] for i in range(n)] for p in pts[1:]]
        g = _gram_det(edges)
        faces_sq.append(g / math.factorial(n - 1) ** 2)
    heights = tuple(math.sqrt(float(h)) for h in heights_sq)
    faces = tuple(math.sqrt(max(float(s), 0.0)) for s in faces_sq)
    return SimplexMetrics(
        volume=S.volume,
        heights=heights,
        heights_sq=tuple(heights_sq),
        face_measures=faces,
        face_measures_sq=tuple(faces_sq),
        total_surface=float(sum(faces)),
    )


def parse_simplex(text: str) -> Simplex:
    """Parse the plain-text simplex format: one vertex per line, '#' comments."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append([_parse_coord(tok) for tok in line.split()])
    return build_simplex(rows)


def _parse_coord(tok: str):
    try:
        return parse_rational(tok)
    except ValueError:
        return float(tok)


def format_simplex(S: Simplex) -> str:
    def fmt(x):
        if isinstance(x, Fraction):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return repr(float(x))

    return "\n".join(" ".join(fmt(x) for x in v) for v in S.vertices) + "\n"
