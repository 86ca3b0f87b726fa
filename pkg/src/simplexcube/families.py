"""Named simplices, the perfect-simplex test, cut volumes and the (0,1)-simplex search."""

from __future__ import annotations

import itertools
import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .cube import DEFAULT_MAX_DIM, inside_cube, mask_to_vertex, sweep, xi_cube
from .errors import DimensionTooLarge, NotInsideCube, PieceBoundary, UnknownName, ZeroNormal
from .exact import as_fraction
from .hadamard import hadamard_simplex
from .simplex import Simplex, build_simplex


def s_star(n: int) -> Simplex:
    """The ``n`` cube vertices adjacent to ``(1,...,1)``, then the origin.

    For ``n = 1`` that recipe collapses to a point; the segment ``[0, 1]``
    is returned instead.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return build_simplex([[1], [0]])
    verts = [[0 if i == k else 1 for i in range(n)] for k in range(n)]
    verts.append([0] * n)
    return build_simplex(verts)


def s_star_xi(n: int) -> Fraction:
    """Known closed form for ``xi(S*)``."""
    if n == 1:
        return Fraction(1)
    if n == 2:
        return Fraction(4)
    return Fraction(n * n - 3, n - 1)


_S1 = [[0, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]]
_S2 = [["1/2", 0, 0], ["1/2", 1, 0], [0, "1/2", 1], [1, "1/2", 1]]


def family_v(s, t) -> Simplex:
    """Five-dimensional two-parameter family; volume ``1/120`` for every ``s, t``.

    Float parameters give a float simplex.
    """
    s, t = (x if isinstance(x, float) else as_fraction(x) for x in (s, t))
    third = Fraction(1, 3)
    verts = [
        [s, 1, third, 1, 1],
        [s, 0, third, 1, 1],
        [s, 2 - 3 * t, third, 0, 1],
        [2 - 3 * s, t, 0, third, 0],
        [0, t, 1, third, 0],
        [1, t, 1, third, 0],
    ]
    return build_simplex(verts)


_V_RE = re.compile(r"^v\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)$")
_H_RE = re.compile(r"^hadamard\(\s*(\d+)\s*\)$")


def catalog(name: str) -> Simplex:
    """Look up a named simplex: ``S1``, ``S2``, ``s-star(n)``, ``v(s,t)``, ``hadamard(n)``."""
    key = name.strip().lower().replace(" ", "")
    if key == "s1":
        return build_simplex(_S1)
    if key == "s2":
        return build_simplex(_S2)
    if key == "s-star":
        return s_star(3)
    m = re.match(r"^s-star\((\d+)\)$", key)
    if m:
        return s_star(int(m.group(1)))
    m = _V_RE.match(key)
    if m:
        return family_v(m.group(1), m.group(2))
    m = _H_RE.match(key)
    if m:
        return hadamard_simplex(int(m.group(1)))
    raise UnknownName(
        f"unknown simplex {name!r}; try s1, s2, s-star, s-star(n), v(s,t), hadamard(n)"
    )


CATALOG_NAMES = ("s1", "s2", "s-star", "s-star(n)", "v(s,t)", "hadamard(n)")


# ---------------------------------------------------------------------------
# perfect simplices


@dataclass(frozen=True)
class PerfectReport:
    xi: Fraction
    per_vertex_face: dict[tuple[int, ...], frozenset[int]]
    is_perfect: bool

    @property
    def incident_vertices(self) -> list[tuple[int, ...]]:
        return sorted(v for v, faces in self.per_vertex_face.items() if faces)


def is_perfect(S: Simplex, workers: int = 1, max_dim: int = 16) -> PerfectReport:
    """Which cube vertices lie on the boundary of ``xi(S) S``.

    A cube vertex is on face ``j`` of ``xi(S) S`` exactly when ``-lambda_j``
    attains its global maximum there.
    """
    if not inside_cube(S):
        raise NotInsideCube("simplex is not contained in the unit cube")
    n = S.n
    if n > max_dim:
        raise DimensionTooLarge(f"per-vertex report lists 2^{n} vertices; cap is {max_dim}")
    part, D = sweep(S, workers=workers, max_dim=max_dim)
    top = max(part.face_max)
    faces: dict[int, set[int]] = {m: set() for m in range(1 << n)}
    for j, (fm, wits) in enumerate(zip(part.face_max, part.face_witnesses)):
        if fm == top:
            for m in wits:
                faces[m].add(j)
    per_vertex = {mask_to_vertex(m, n): frozenset(f) for m, f in sorted(faces.items())}
    xi = (n + 1) * Fraction(top, D) + 1
    return PerfectReport(xi, per_vertex, all(per_vertex.values()))


# ---------------------------------------------------------------------------
# cut volumes


def halfspace_cube_volume(a: Sequence, b, max_dim: int = 20):
    """``vol([0,1]^n ∩ {a·x <= b})`` by the signed-vertex formula.

    Negative coefficients are flipped by ``x_i -> 1 - x_i`` and zero
    coefficients are dropped (their coordinate contributes a factor 1), so
    the formula only ever divides by positive numbers.  Exact for rational
    input, binary64 if any input is a float.
    """
    exact = all(not isinstance(x, float) for x in list(a) + [b])
    conv = as_fraction if exact else float
    a = [conv(x) for x in a]
    b = conv(b)
    shift = sum((x for x in a if x < 0), conv(0))
    coef = [abs(x) for x in a if x != 0]
    if not coef:
        raise ZeroNormal("halfspace normal is zero")
    m = len(coef)
    if m > max_dim:
        raise DimensionTooLarge(f"{m} active coordinates exceed the cap {max_dim}")
    rhs = b - shift
    total = sum(coef)
    if rhs <= 0:
        return conv(0)
    if rhs >= total:
        return conv(1)
    acc = conv(0)
    for mask in range(1 << m):
        s = rhs
        bits = 0
        for i in range(m):
            if (mask >> i) & 1:
                s -= coef[i]
                bits += 1
        if s > 0:
            term = s**m
            acc += -term if bits & 1 else term
    return acc / (math.factorial(m) * math.prod(coef))


@dataclass(frozen=True)
class CutVolumes:
    v: tuple

    @property
    def is_equisecting(self) -> bool:
        return len(set(self.v)) == 1

    def equisecting_within(self, tol: float) -> bool:
        vals = [float(x) for x in self.v]
        return max(vals) - min(vals) <= tol


def cut_volumes(S: Simplex, check_inside: bool = True) -> CutVolumes:
    """``v_j = vol(Q_n ∩ {lambda_j <= 0})`` for every face.

    ``check_inside=False`` evaluates the same volumes for simplices that
    stick out of the cube (the closed forms are stated for all real ``t``).
    """
    if check_inside and not inside_cube_any(S):
        raise NotInsideCube("simplex is not contained in the unit cube")
    n = S.n
    vols = []
    for j in range(n + 1):
        a = [S.L[i][j] for i in range(n)]
        vols.append(halfspace_cube_volume(a, -S.L[n][j]))
    return CutVolumes(tuple(vols))


def inside_cube_any(S: Simplex, tol: float = 1e-12) -> bool:
    if S.exact:
        return inside_cube(S)
    return all(-tol <= x <= 1 + tol for v in S.vertices for x in v)


def cut_volumes_mc(S: Simplex, samples: int = 1_000_000, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Monte-Carlo estimates of the cut volumes and their standard errors."""
    rng = np.random.default_rng(seed)
    L = S.L_float()
    x = rng.random((samples, S.n))
    lam = x @ L[:-1, :] + L[-1, :]
    p = (lam <= 0).mean(axis=0)
    return p, np.sqrt(p * (1 - p) / samples)


_V1_BREAKS = (Fraction(1, 3), Fraction(4, 9), Fraction(2, 3), Fraction(7, 9))
_V2_BREAKS = (Fraction(2, 9), Fraction(1, 3), Fraction(5, 9), Fraction(2, 3))


def _v1_pieces(t):
    return (
        lambda: (81 * t - 35) / (1458 * t * t - 1620 * t + 432) + Fraction(1, 2),
        lambda: -t / 2 + 2 / (54 - 81 * t) + Fraction(4, 9),
        lambda: Fraction(1, 3),
        lambda: t / 2 + 2 / (81 * t - 36) - Fraction(1, 9),
        lambda: (55 - 81 * t) / (1458 * t * t - 1620 * t + 432) + Fraction(1, 2),
    )


def _v2_pieces(t):
    return (
        lambda: (81 * t - 26) / (1458 * t * t - 1296 * t + 270) + Fraction(1, 2),
        lambda: -t / 2 + 2 / (45 - 81 * t) + Fraction(7, 18),
        lambda: Fraction(1, 3),
        lambda: (81 * t * t - 36 * t + 7) / (162 * t - 54),
        lambda: (46 - 81 * t) / (1458 * t * t - 1296 * t + 270) + Fraction(1, 2),
    )


def _piecewise(t: Fraction, breaks, pieces, label: str) -> Fraction:
    for k, br in enumerate(breaks):
        if t == br:
            left = _safe(pieces(t)[k])
            right = _safe(pieces(t)[k + 1])
            raise PieceBoundary(f"{label}: t = {t} is a piece boundary", left=left, right=right)
    k = sum(t > br for br in breaks)
    return pieces(t)[k]()


def _safe(f: Callable[[], Fraction]) -> Optional[Fraction]:
    try:
        return f()
    except ZeroDivisionError:
        return None


def v1(t) -> Fraction:
    return _piecewise(as_fraction(t), _V1_BREAKS, _v1_pieces, "v1")


def v2(t) -> Fraction:
    return _piecewise(as_fraction(t), _V2_BREAKS, _v2_pieces, "v2")


def v_closed_form(t) -> tuple[Fraction, Fraction]:
    """Closed-form cut volumes ``(v1(t), v2(t))`` of the five-dimensional family.

    At a piece boundary the expressions on both sides are evaluated at the
    boundary and attached to the raised :class:`PieceBoundary`.
    """
    t = as_fraction(t)
    a, b = v1(t), v2(t)
    assert b == v1(t + Fraction(1, 9))
    return a, b


# ---------------------------------------------------------------------------
# (0,1)-simplex search

SEARCH_OBJECTIVES = ("xi", "norm")


@dataclass(frozen=True)
class SearchResult:
    n: int
    objective: str
    value: Fraction
    witness: Simplex
    candidates: int
    nonsingular: int


def _cube_points(n: int) -> np.ndarray:
    return np.array([mask_to_vertex(m, n) for m in range(1 << n)], dtype=np.int64)


def _score_block(block: np.ndarray, n: int, X: np.ndarray, objective: str):
    """Best exact value in a block of combinations; ``None`` if all singular.

    For rows ``B`` (chosen nonzero vertices) and the origin as last vertex,
    ``lambda_1..n(x) = x B^{-1}`` and ``lambda_0 = 1 - sum``.  With the
    integer adjugate ``adj = det * B^{-1}`` everything stays integral.
    """
    B = ((block[:, :, None] >> np.arange(n)) & 1).astype(np.float64)
    det = np.rint(np.linalg.det(B)).astype(np.int64)
    ok = det != 0
    if not ok.any():
        return None, 0
    B, det, idx = B[ok], det[ok], np.nonzero(ok)[0]
    adj = np.rint(np.linalg.inv(B) * det[:, None, None]).astype(np.int64)
    Bi = B.astype(np.int64)
    eye = np.eye(n, dtype=np.int64)
    if not np.array_equal(Bi @ adj, det[:, None, None] * eye):
        raise ArithmeticError("integer adjugate check failed")
    sgn = np.sign(det)[:, None, None]
    vals = np.einsum("pi,kij->kpj", X, adj) * sgn  # |det| * lambda_1..n
    absd = np.abs(det)
    last = absd[:, None] - vals.sum(axis=2)  # |det| * lambda_0
    if objective == "xi":
        num = np.maximum((-vals).max(axis=(1, 2)), (-last).max(axis=1))
    else:
        num = np.abs(vals).sum(axis=2) + np.abs(last)
        num = num.max(axis=1)
    # minimize num/absd exactly: cross-multiplied comparison on candidates
    ratio = num / absd
    cand = np.nonzero(ratio <= ratio.min() * (1 + 1e-9))[0]
    best = None
    for c in cand:
        f = Fraction(int(num[c]), int(absd[c]))
        k = int(idx[c])
        if best is None or f < best[0] or (f == best[0] and k < best[1]):
            best = (f, k)
    return (best[0], tuple(int(x) for x in block[best[1]])), int(ok.sum())


def _search_first(n: int, first: int, objective: str, chunk: int):
    X = _cube_points(n)
    it = itertools.combinations(range(first + 1, 1 << n), n - 1)
    best, count, nonsing = None, 0, 0
    while True:
        rest = list(itertools.islice(it, chunk))
        if not rest:
            break
        block = np.empty((len(rest), n), dtype=np.int64)
        block[:, 0] = first
        block[:, 1:] = np.array(rest, dtype=np.int64).reshape(len(rest), n - 1)
        count += len(rest)
        res, ns = _score_block(block, n, X, objective)
        nonsing += ns
        if res is not None and (best is None or res < best):
            best = res
    return best, count, nonsing


def search_01(n: int, objective: str = "xi", allow_long: bool = False, workers: int = 1,
              chunk: int = 50_000, progress: Optional[Callable[[int, int], None]] = None) -> SearchResult:
    """Exact minimum of ``xi(S)`` or ``||P||`` over simplices with vertices at cube vertices.

    One vertex is pinned at the origin (both objectives are invariant under
    the cube's symmetries, which act transitively on vertices); the other
    ``n`` run over all ``C(2^n - 1, n)`` sets of nonzero vertices.  The
    witness is the lexicographically least optimal mask tuple, listed
    first, with the origin as the last vertex.
    """
    if objective not in SEARCH_OBJECTIVES:
        raise ValueError(f"objective must be one of {SEARCH_OBJECTIVES}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 6 or (n == 6 and not allow_long):
        raise DimensionTooLarge(f"search_01(n={n}) needs n <= 5 (n = 6 with allow_long)")
    firsts = list(range(1, (1 << n) - n + 1))
    results = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futs = [ex.submit(_search_first, n, f, objective, chunk) for f in firsts]
            for f, fut in zip(firsts, futs):
                results.append(fut.result())
                if progress:
                    progress(sum(r[1] for r in results), math.comb((1 << n) - 1, n))
    else:
        for f in firsts:
            results.append(_search_first(n, f, objective, chunk))
            if progress:
                progress(sum(r[1] for r in results), math.comb((1 << n) - 1, n))
    total = sum(r[1] for r in results)
    expected = math.comb((1 << n) - 1, n)
    if total != expected:
        raise ArithmeticError(f"visited {total} candidates, expected {expected}")
    best = min(r[0] for r in results if r[0] is not None)
    value, masks = best
    if objective == "xi":
        value = (n + 1) * value + 1
    verts = [list(mask_to_vertex(m, n)) for m in masks] + [[0] * n]
    return SearchResult(n, objective, value, build_simplex(verts), total, sum(r[2] for r in results))
