"""Hadamard matrices, the regular (0,1)-simplex they produce, and (0,1)-maxdet tools."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionTooLarge, NonBinaryEntry, NonSquareMatrix, SingularMatrix, UnsupportedOrder
from .exact import RationalMatrix, integer_adjugate
from .simplex import Simplex, build_simplex


@dataclass(frozen=True)
class HadamardMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def is_orthogonal(self) -> bool:
        m = self.order
        for a in range(m):
            for b in range(a, m):
                dot = sum(x * y for x, y in zip(self.rows[a], self.rows[b]))
                if dot != (m if a == b else 0):
                    return False
        return True

    def is_normalized(self) -> bool:
        return all(x == 1 for x in self.rows[0]) and all(r[0] == 1 for r in self.rows)

    def normalized(self) -> "HadamardMatrix":
        rows = [list(r) for r in self.rows]
        for j, s in enumerate(rows[0]):
            if s == -1:
                for r in rows:
                    r[j] = -r[j]
        for r in rows:
            if r[0] == -1:
                r[:] = [-x for x in r]
        return HadamardMatrix(tuple(tuple(r) for r in rows))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, math.isqrt(q) + 1))


def _paley1(q: int) -> list[list[int]]:
    """Paley construction I, order ``q + 1`` for a prime ``q = 3 (mod 4)``."""
    residues = {(x * x) % q for x in range(1, q)}

    def chi(a: int) -> int:
        a %= q
        return 0 if a == 0 else (1 if a in residues else -1)

    m = q + 1
    S = [[0] * m for _ in range(m)]
    for j in range(1, m):
        S[0][j] = 1
        S[j][0] = -1
    for i in range(q):
        for j in range(q):
            S[i + 1][j + 1] = chi(j - i)
    return [[S[i][j] + (i == j) for j in range(m)] for i in range(m)]


def _kron(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    return np.kron(np.array(A), np.array(B)).tolist()


def _construct(m: int) -> list[list[int]] | None:
    if m == 1:
        return [[1]]
    if m == 2:
        return [[1, 1], [1, -1]]
    if m % 4:
        return None
    if _is_prime(m - 1) and (m - 1) % 4 == 3:
        return _paley1(m - 1)
    if m % 2 == 0:
        half = _construct(m // 2)
        if half is not None:
            return _kron([[1, 1], [1, -1]], half)
    for a in range(4, math.isqrt(m) + 1, 4):
        if m % a == 0:
            A, B = _construct(a), _construct(m // a)
            if A is not None and B is not None:
                return _kron(A, B)
    return None


def hadamard(m: int) -> HadamardMatrix:
    """Sylvester doubling, Paley I and Kronecker products of those.

    Covers 1, 2, 4, 8, 12, 16, 20, 24, 32, ...  Orders that are not 1, 2 or a
    multiple of 4 never carry a Hadamard matrix.
    """
    if m < 1 or (m > 2 and m % 4):
        raise UnsupportedOrder(f"no Hadamard matrix of order {m}: orders above 2 are multiples of 4")
    rows = _construct(m)
    if rows is None:
        raise UnsupportedOrder(f"order {m} is not reachable by Sylvester/Paley I/Kronecker")
    H = HadamardMatrix(tuple(tuple(int(x) for x in r) for r in rows))
    assert H.is_orthogonal()
    return H


def is_hadamard_order_supported(m: int) -> bool:
    try:
        hadamard(m)
    except UnsupportedOrder:
        return False
    return True


def hadamard_simplex(n: int) -> Simplex:
    """Regular simplex with vertices at cube vertices, built from ``H_{n+1}``.

    The normalized matrix has its columns reversed so the all-ones column is
    last; the first ``n`` entries of each row are vertices of ``[-1, 1]^n``,
    mapped to ``[0, 1]^n`` by ``x -> (x + 1) / 2``.
    """
    H = hadamard(n + 1).normalized()
    verts = [[(x + 1) // 2 for x in reversed(r)][:n] for r in H.rows]
    return build_simplex(verts)


# ---------------------------------------------------------------------------
# (0,1)-matrices with maximal determinant


class Verdict(str, Enum):
    CONSISTENT_WITH_MAXIMAL = "ConsistentWithMaximal"
    PROVABLY_NON_MAXIMAL = "ProvablyNonMaximal"


@dataclass(frozen=True)
class MaxdetDiagnostic:
    """Row sums of ``|A^{-1}|`` for the bordered matrix.

    ``ConsistentWithMaximal`` is only a necessary condition for
    ``|det M| = h_n``; it never proves maximality.
    """

    row_sums: tuple[Fraction, ...]
    verdict: Verdict
    axial_diameters: tuple[Fraction, ...]
    det: int
    failing_rows: tuple[int, ...]


def _as_int_rows(M) -> list[list[int]]:
    rows = M.entries if isinstance(M, RationalMatrix) else M
    out = []
    for r in rows:
        row = []
        for x in r:
            if Fraction(x) not in (0, 1):
                raise NonBinaryEntry(f"entry {x} is not 0 or 1")
            row.append(int(x))
        out.append(row)
    if any(len(r) != len(out) for r in out):
        raise NonSquareMatrix("matrix must be square")
    return out


def maxdet_diagnostic(M) -> MaxdetDiagnostic:
    """Border ``M`` with the row ``(0,...,0,1)`` and an all-ones column, invert,
    and compare each row sum ``sum_j |l_ij|`` against 2."""
    rows = _as_int_rows(M)
    n = len(rows)
    A = [r + [1] for r in rows] + [[0] * n + [1]]
    try:
        adj, d = integer_adjugate(A)
    except SingularMatrix:
        raise SingularMatrix("matrix is singular") from None
    sums = tuple(Fraction(sum(abs(x) for x in adj[i]), abs(d)) for i in range(n))
    failing = tuple(i for i, s in enumerate(sums) if s > 2)
    verdict = Verdict.PROVABLY_NON_MAXIMAL if failing else Verdict.CONSISTENT_WITH_MAXIMAL
    return MaxdetDiagnostic(sums, verdict, tuple(2 / s for s in sums), abs(d), failing)


def _batched_abs_dets(combos: np.ndarray, n: int) -> np.ndarray:
    bits = ((combos[:, :, None] >> np.arange(n)) & 1).astype(np.float64)
    return np.rint(np.abs(np.linalg.det(bits))).astype(np.int64)


def mask_rows(masks: Sequence[int], n: int) -> list[list[int]]:
    return [[(m >> i) & 1 for i in range(n)] for m in masks]


def h_search(n: int, allow_long: bool = False, chunk: int = 200_000) -> tuple[int, list[list[int]]]:
    """Exhaustive maximum of ``|det|`` over (0,1)-matrices of order ``n``.

    Row order and duplicate/zero rows do not matter for ``|det|``, so only
    strictly increasing tuples of nonzero row bitmasks are visited
    (``C(2^n - 1, n)`` candidates).  The witness is the lexicographically
    least maximizing tuple.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > 6 or (n == 6 and not allow_long):
        raise DimensionTooLarge(f"h_search(n={n}) needs n <= 5 (n = 6 with allow_long)")
    best, best_combo = -1, None
    it = itertools.combinations(range(1, 1 << n), n)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            break
        arr = np.array(block, dtype=np.int64)
        dets = _batched_abs_dets(arr, n)
        k = int(np.argmax(dets))
        if dets[k] > best:
            best, best_combo = int(dets[k]), block[k]
    witness = mask_rows(best_combo, n)
    # confirm exactly: float determinants are only used for the scan
    from .exact import bareiss_det

    assert abs(bareiss_det(witness)) == best
    return best, witness


def det_relations(n: int, h_n: int) -> tuple[int, Fraction]:
    """``(g_{n+1}, nu_n)`` from ``g_{n+1} = 2^n h_n`` and ``h_n = n! nu_n``."""
    if h_n <= 0:
        raise ValueError("h_n must be positive")
    return 2**n * h_n, Fraction(h_n, math.factorial(n))


def hadamard_h(n: int) -> int:
    """``h_n`` when ``n + 1`` is a Hadamard order: ``(n+1)^((n+1)/2) / 2^n``."""
    m = n + 1
    if m > 2 and m % 4:
        raise UnsupportedOrder(f"{m} is not a Hadamard order")
    g = math.isqrt(m**m) if m % 2 else m ** (m // 2)
    if m % 2 and g * g != m**m:
        raise UnsupportedOrder(f"{m} is not a Hadamard order")
    h, r = divmod(g, 2**n)
    assert r == 0
    return h
