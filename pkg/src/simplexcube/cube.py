"""Simplex versus the unit cube ``Q_n = [0, 1]^n``.

All quantities here are exact.  The cube-vertex sweep works on the integer
forms ``D * lambda_j`` where ``D`` is the common denominator of ``A^{-1}``.
Vertices are encoded as bitmasks (bit ``i`` set means ``x_{i+1} = 1``).

The sweep visits vertices in Gray-code order in two layers: a table for the
low ``k`` coordinates is built once by single-bit increments, then the high
coordinates are walked in Gray order, each step adding one row of ``D * L``
to an offset vector.  The high range can be split into contiguous blocks and
reduced across worker processes; the result does not depend on the split.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionTooLarge, NotInsideCube
from .simplex import Simplex, build_simplex, lagrange_eval

DEFAULT_MAX_DIM = 24
_LOW_BITS = 12
_INT64_SAFE = 2**62


def mask_to_vertex(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def vertex_to_mask(v: Sequence[int]) -> int:
    return sum(int(x) << i for i, x in enumerate(v))


def gray(k: int) -> int:
    return k ^ (k >> 1)


def _require_exact(S: Simplex) -> None:
    if not S.exact:
        raise TypeError("cube computations need an exact (rational) simplex")


def _check_dim(n: int, max_dim: int) -> None:
    if n > max_dim:
        raise DimensionTooLarge(f"n = {n} exceeds the enumeration cap {max_dim}; raise max_dim to force")


def inside_cube(S: Simplex) -> bool:
    return all(0 <= x <= 1 for v in S.vertices for x in v)


# ---------------------------------------------------------------------------
# sweep engine


def integer_forms(S: Simplex) -> tuple[list[list[int]], int]:
    """``(K, D)`` with ``K[i][j] = D * L[i][j]`` integral and ``D > 0``."""
    _require_exact(S)
    D = 1
    for r in S.L:
        for x in r:
            D = math.lcm(D, x.denominator)
    return [[int(x * D) for x in r] for r in S.L], D


@dataclass
class _Partial:
    face_max: list[int]
    face_witnesses: list[list[int]]
    norm_max: int
    norm_witness: int
    one_points: list[int]
    perfect_ok: Optional[bool] = None


def _low_table(K: np.ndarray, n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Values ``sum_i K[i] x_i`` over the low ``k`` bits, built in Gray order."""
    size = 1 << k
    masks = np.empty(size, dtype=np.int64)
    vals = np.empty((size, K.shape[1]), dtype=np.int64)
    cur = np.zeros(K.shape[1], dtype=np.int64)
    m = 0
    masks[0] = 0
    vals[0] = cur
    for t in range(1, size):
        b = (t & -t).bit_length() - 1
        if (m >> b) & 1:
            cur = cur - K[b]
        else:
            cur = cur + K[b]
        m ^= 1 << b
        masks[t] = m
        vals[t] = cur
    return masks, vals


def _sweep_range(K_list, n: int, k: int, start: int, stop: int, want_perfect_max: Optional[int]) -> _Partial:
    K = np.array(K_list, dtype=np.int64)
    low_masks, low_vals = _low_table(K, n, k)
    m = n + 1
    face_max = [None] * m
    face_wit: list[list[int]] = [[] for _ in range(m)]
    norm_max = None
    norm_wit = None
    one_pts: list[int] = []
    perfect_ok = True
    hi = gray(start)
    offset = K[n].copy()
    for i in range(k, n):
        if (hi >> (i - k)) & 1:
            offset = offset + K[i]
    for t in range(start, stop):
        if t != start:
            b = (t & -t).bit_length() - 1
            if (hi >> b) & 1:
                offset = offset - K[k + b]
            else:
                offset = offset + K[k + b]
            hi ^= 1 << b
        block = low_vals + offset
        masks = low_masks | (hi << k)
        neg = -block
        col_max = neg.max(axis=0)
        for j in range(m):
            c = int(col_max[j])
            if face_max[j] is None or c > face_max[j]:
                face_max[j] = c
                face_wit[j] = masks[neg[:, j] == c].tolist()
            elif c == face_max[j]:
                face_wit[j].extend(masks[neg[:, j] == c].tolist())
        sums = np.abs(block).sum(axis=1)
        smax = int(sums.max())
        sel = sums == smax
        cand = int(masks[sel].min())
        ones = masks[sel & ((block < 0).sum(axis=1) == 1)].tolist()
        if norm_max is None or smax > norm_max:
            norm_max, norm_wit, one_pts = smax, cand, ones
        elif smax == norm_max:
            norm_wit = min(norm_wit, cand)
            one_pts.extend(ones)
        if want_perfect_max is not None and perfect_ok:
            on_face = (neg == want_perfect_max).any(axis=1)
            if not on_face.all():
                perfect_ok = False
    return _Partial(face_max, face_wit, norm_max, norm_wit, one_pts,
                    perfect_ok if want_perfect_max is not None else None)


def _sweep_python(K, n: int, want_perfect_max: Optional[int]) -> _Partial:
    """Pure-integer Gray sweep for forms too large for int64."""
    m = n + 1
    cur = list(K[n])
    mask = 0
    face_max = [-x for x in cur]
    face_wit = [[0] for _ in range(m)]
    s = sum(abs(x) for x in cur)
    norm_max, norm_wit = s, 0
    one_pts = [0] if sum(x < 0 for x in cur) == 1 else []
    perfect_ok = want_perfect_max is None or any(-x == want_perfect_max for x in cur)
    for t in range(1, 1 << n):
        b = (t & -t).bit_length() - 1
        row = K[b]
        if (mask >> b) & 1:
            cur = [c - r for c, r in zip(cur, row)]
        else:
            cur = [c + r for c, r in zip(cur, row)]
        mask ^= 1 << b
        for j in range(m):
            v = -cur[j]
            if v > face_max[j]:
                face_max[j] = v
                face_wit[j] = [mask]
            elif v == face_max[j]:
                face_wit[j].append(mask)
        s = sum(abs(x) for x in cur)
        if s > norm_max:
            norm_max, norm_wit = s, mask
            one_pts = [mask] if sum(x < 0 for x in cur) == 1 else []
        elif s == norm_max:
            norm_wit = min(norm_wit, mask)
            if sum(x < 0 for x in cur) == 1:
                one_pts.append(mask)
        if want_perfect_max is not None and perfect_ok:
            perfect_ok = any(-x == want_perfect_max for x in cur)
    return _Partial(face_max, face_wit, norm_max, norm_wit, one_pts,
                    perfect_ok if want_perfect_max is not None else None)


def _merge(parts: list[_Partial]) -> _Partial:
    out = parts[0]
    for p in parts[1:]:
        for j in range(len(out.face_max)):
            if p.face_max[j] > out.face_max[j]:
                out.face_max[j] = p.face_max[j]
                out.face_witnesses[j] = p.face_witnesses[j]
            elif p.face_max[j] == out.face_max[j]:
                out.face_witnesses[j] = out.face_witnesses[j] + p.face_witnesses[j]
        if p.norm_max > out.norm_max:
            out.norm_max, out.norm_witness, out.one_points = p.norm_max, p.norm_witness, p.one_points
        elif p.norm_max == out.norm_max:
            out.norm_witness = min(out.norm_witness, p.norm_witness)
            out.one_points = out.one_points + p.one_points
        if out.perfect_ok is not None:
            out.perfect_ok = out.perfect_ok and p.perfect_ok
    for j in range(len(out.face_witnesses)):
        out.face_witnesses[j] = sorted(set(out.face_witnesses[j]))
    out.one_points = sorted(set(out.one_points))
    return out


def sweep(S: Simplex, workers: int = 1, max_dim: int = DEFAULT_MAX_DIM,
          perfect_level: Optional[int] = None) -> tuple[_Partial, int]:
    """Reduce over all ``2^n`` cube vertices.  Returns ``(partial, D)``."""
    _require_exact(S)
    n = S.n
    _check_dim(n, max_dim)
    K, D = integer_forms(S)
    bound = max(sum(abs(K[i][j]) for i in range(n + 1)) for j in range(n + 1)) * (n + 1)
    if bound >= _INT64_SAFE:
        part = _sweep_python(K, n, perfect_level)
        return _merge([part]), D
    k = min(n, _LOW_BITS)
    n_hi = 1 << (n - k)
    workers = max(1, min(workers, n_hi))
    if workers == 1:
        parts = [_sweep_range(K, n, k, 0, n_hi, perfect_level)]
    else:
        edges = [n_hi * w // workers for w in range(workers + 1)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futs = [ex.submit(_sweep_range, K, n, k, edges[w], edges[w + 1], perfect_level)
                    for w in range(workers)]
            parts = [f.result() for f in futs]
    return _merge(parts), D


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class AbsorptionReport:
    xi: Fraction
    alpha: Fraction
    axial_diameters: tuple[Fraction, ...]
    circumscribed: bool
    per_face_max: tuple[Fraction, ...]
    witnesses: tuple[tuple[tuple[int, ...], ...], ...]
    contains_cube: bool = False


@dataclass(frozen=True)
class CubeNormReport:
    norm: Fraction
    witness_vertex: tuple[int, ...]
    one_point: Optional[tuple[int, ...]]
    one_points: tuple[tuple[int, ...], ...] = field(default=())


def axial_diameters(S: Simplex) -> tuple[Fraction, ...]:
    """``d_i`` from ``1/d_i = (1/2) sum_j |l_ij|``."""
    _require_exact(S)
    n = S.n
    return tuple(2 / sum(abs(S.L[i][j]) for j in range(n + 1)) for i in range(n))


def alpha_cube(S: Simplex) -> Fraction:
    """``alpha(S) = (1/2) sum_ij |l_ij|``; see :func:`alpha_cube_prime` for [-1,1]^n."""
    _require_exact(S)
    n = S.n
    return sum((abs(S.L[i][j]) for i in range(n) for j in range(n + 1)), Fraction(0)) / 2


def alpha_cube_prime(S: Simplex) -> Fraction:
    return 2 * alpha_cube(S)


def xi_cube(S: Simplex, workers: int = 1, max_dim: int = DEFAULT_MAX_DIM) -> AbsorptionReport:
    part, D = sweep(S, workers=workers, max_dim=max_dim)
    n = S.n
    per_face = tuple(Fraction(v, D) for v in part.face_max)
    top = max(per_face)
    if top <= 0:
        xi = Fraction(1)
        contains = True
    else:
        xi = (n + 1) * top + 1
        contains = False
    wit = tuple(tuple(mask_to_vertex(m, n) for m in ws) for ws in part.face_witnesses)
    return AbsorptionReport(
        xi=xi,
        alpha=alpha_cube(S),
        axial_diameters=axial_diameters(S),
        circumscribed=len(set(per_face)) == 1,
        per_face_max=per_face,
        witnesses=wit,
        contains_cube=contains,
    )


def face_maxima_closed_form(S: Simplex) -> tuple[Fraction, ...]:
    """``max over Q_n of -lambda_j`` read off the coefficient signs (no sweep)."""
    _require_exact(S)
    n = S.n
    return tuple(
        -S.L[n][j] + sum((-S.L[i][j] for i in range(n) if S.L[i][j] < 0), Fraction(0))
        for j in range(n + 1)
    )


def alpha_from_face_maxima(report: AbsorptionReport) -> Fraction:
    """``alpha(S) = sum_j max_x(-lambda_j(x)) + 1``, independent of ``d_i``."""
    return sum(report.per_face_max, Fraction(0)) + 1


def projector_norm_cube(S: Simplex, workers: int = 1, max_dim: int = DEFAULT_MAX_DIM) -> CubeNormReport:
    part, D = sweep(S, workers=workers, max_dim=max_dim)
    n = S.n
    ones = tuple(mask_to_vertex(m, n) for m in part.one_points)
    return CubeNormReport(
        norm=Fraction(part.norm_max, D),
        witness_vertex=mask_to_vertex(part.norm_witness, n),
        one_point=ones[0] if ones else None,
        one_points=ones,
    )


def projector_norm_cube_naive(S: Simplex, max_dim: int = 16) -> Fraction:
    """Direct per-vertex substitution, ``max_x sum_j |lambda_j(x)|``; oracle only."""
    _require_exact(S)
    n = S.n
    _check_dim(n, max_dim)
    best = None
    for mask in range(1 << n):
        x = mask_to_vertex(mask, n)
        s = sum(abs(lagrange_eval(S, j, x)) for j in range(n + 1))
        if best is None or s > best:
            best = s
    return best


def xi_cube_naive(S: Simplex, max_dim: int = 16) -> Fraction:
    _require_exact(S)
    n = S.n
    _check_dim(n, max_dim)
    top = max(-lagrange_eval(S, j, mask_to_vertex(m, n)) for m in range(1 << n) for j in range(n + 1))
    return Fraction(1) if top <= 0 else (n + 1) * top + 1


@dataclass(frozen=True)
class BilateralCheck:
    lower: Fraction
    xi: Fraction
    upper: Fraction
    holds: bool
    one_point: Optional[tuple[int, ...]]
    right_equality: bool


def check_bilateral(S: Simplex, workers: int = 1, max_dim: int = DEFAULT_MAX_DIM) -> BilateralCheck:
    """Lower and upper bounds of ``xi(S)`` in terms of ``||P||``.

    When a 1-point exists the upper bound is attained; the converse is not
    claimed, so ``right_equality`` is reported independently.
    """
    part, D = sweep(S, workers=workers, max_dim=max_dim)
    n = S.n
    norm = Fraction(part.norm_max, D)
    top = max(Fraction(v, D) for v in part.face_max)
    xi = Fraction(1) if top <= 0 else (n + 1) * top + 1
    lower = Fraction(n + 1, 2 * n) * (norm - 1) + 1
    upper = Fraction(n + 1, 2) * (norm - 1) + 1
    one = mask_to_vertex(part.one_points[0], n) if part.one_points else None
    holds = lower <= xi <= upper and (one is None or xi == upper)
    return BilateralCheck(lower, xi, upper, holds, one, xi == upper)


# ---------------------------------------------------------------------------
# simplices with S in Q_n in nS


@dataclass(frozen=True)
class TightInclusionReport:
    precondition_met: bool
    xi: Fraction
    conditions: dict

    @property
    def all_pass(self) -> bool:
        return self.precondition_met and all(self.conditions.values())


def tight_inclusion_diagnostics(S: Simplex) -> TightInclusionReport:
    """Check the identities that hold for any ``S`` with ``S in Q_n in nS``.

    If ``xi(S) != n`` or ``S`` is not inside the cube, the report carries
    ``precondition_met = False`` and the conditions are still evaluated.
    """
    _require_exact(S)
    n = S.n
    face_neg = list(face_maxima_closed_form(S))
    top = max(face_neg)
    xi = Fraction(1) if top <= 0 else (n + 1) * top + 1
    pre = inside_cube(S) and xi == n
    L = S.L
    # max lambda_j over cube vertices: reflect x_i -> 1 - x_i turns max into -min
    face_pos = []
    for j in range(n + 1):
        face_pos.append(L[n][j] + sum((L[i][j] for i in range(n) if L[i][j] > 0), Fraction(0)))
    target_neg = Fraction(n - 1, n + 1)
    half = Fraction(1, 2)
    conditions = {
        "max_lambda_is_1": all(v == 1 for v in face_pos),
        "max_minus_lambda_is_(n-1)/(n+1)": all(v == target_neg for v in face_neg),
        "centroid_is_cube_center": all(c == half for c in S.centroid()),
        "row_abs_sums_are_2": all(sum(abs(L[i][j]) for j in range(n + 1)) == 2 for i in range(n)),
        "col_abs_sums_are_2n/(n+1)": all(
            sum(abs(L[i][j]) for i in range(n)) == Fraction(2 * n, n + 1) for j in range(n + 1)
        ),
        "positive_split_is_1-l_(n+1)j": all(
            sum((L[i][j] for i in range(n) if L[i][j] >= 0), Fraction(0)) == 1 - L[n][j]
            for j in range(n + 1)
        ),
        "negative_split_is_(n-1)/(n+1)+l_(n+1)j": all(
            sum((-L[i][j] for i in range(n) if L[i][j] < 0), Fraction(0)) == target_neg + L[n][j]
            for j in range(n + 1)
        ),
        # with max lambda_j = 1 and max(-lambda_j) = (n-1)/(n+1) the cube lies in every D_j
        "cube_inside_all_D_j": all(p <= 1 for p in face_pos) and all(v <= target_neg for v in face_neg),
    }
    return TightInclusionReport(pre, xi, conditions)


@dataclass(frozen=True)
class QuasiRigidityResult:
    applicable: bool
    passed: bool
    trials: int
    counterexample: Optional[tuple] = None


def quasi_rigidity_probe(S: Simplex, trials: int = 1000, rng_seed: int = 0,
                         grid: int = 12) -> QuasiRigidityResult:
    """Replace a random vertex by a random point of ``Q_n`` and compare volumes.

    Points are drawn on the rational grid ``{0, 1/grid, ..., 1}^n`` with
    half the draws forced to cube vertices, so comparisons stay exact.
    """
    _require_exact(S)
    n = S.n
    pre = tight_inclusion_diagnostics(S).precondition_met
    if not pre:
        return QuasiRigidityResult(False, True, 0)
    rng = random.Random(rng_seed)
    base = abs(S.det_A)
    from .exact import RationalMatrix, det

    for t in range(trials):
        j = rng.randrange(n + 1)
        if rng.random() < 0.5:
            y = tuple(Fraction(rng.randrange(2)) for _ in range(n))
        else:
            y = tuple(Fraction(rng.randrange(grid + 1), grid) for _ in range(n))
        rows = [tuple(v) + (1,) for v in S.vertices]
        rows[j] = y + (1,)
        if abs(det(RationalMatrix(rows))) > base:
            return QuasiRigidityResult(True, False, t + 1, (j, y))
    return QuasiRigidityResult(True, True, trials)


def unit_simplex(n: int) -> Simplex:
    verts = [[0] * n] + [[int(i == k) for i in range(n)] for k in range(n)]
    return build_simplex(verts)
