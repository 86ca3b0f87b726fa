"""Exact rational scalars and dense exact linear algebra.

Scalars are :class:`fractions.Fraction` (always reduced, denominator > 0).
Matrices are immutable row-major grids of fractions.  Determinants use
Bareiss fraction-free elimination on an integer rescaling of the matrix, and
inverses use the Gauss-Jordan form of the same scheme, so intermediate
values stay integral.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonSquareMatrix, SingularMatrix

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``.  Decimal literals are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def _lcm_denominators(values: Iterable[Fraction]) -> int:
    d = 1
    for v in values:
        d = math.lcm(d, v.denominator)
    return d


@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_fraction(x) for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.entries))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.entries))
        return RationalMatrix(
            [sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
            for r in self.entries
        )

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def scale(self, c) -> "RationalMatrix":
        c = as_fraction(c)
        return RationalMatrix([x * c for x in r] for r in self.entries)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def det(self) -> Fraction:
        return det(self)

    def inverse(self) -> "RationalMatrix":
        return inverse(self)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([int(i == j) for j in range(n)] for i in range(n))


def _integer_form(M: RationalMatrix) -> tuple[list[list[int]], int]:
    """Return integer matrix ``K`` and scale ``c`` with ``M = K / c``."""
    c = _lcm_denominators(x for r in M.entries for x in r)
    return [[int(x * c) for x in r] for r in M.entries], c


def _require_square(M: RationalMatrix) -> int:
    if M.rows != M.cols:
        raise NonSquareMatrix(f"matrix is {M.rows}x{M.cols}, not square")
    return M.rows


def bareiss_det(K: list[list[int]]) -> int:
    """Determinant of an integer matrix by Bareiss elimination (copies ``K``)."""
    a = [list(r) for r in K]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def det(M: RationalMatrix) -> Fraction:
    n = _require_square(M)
    K, c = _integer_form(M)
    return Fraction(bareiss_det(K), c**n)


def integer_adjugate(K: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Fraction-free Gauss-Jordan on ``[K | I]``.

    Returns ``(adj, d)`` with ``d = det(K)`` and ``K @ adj = d * I``.
    Raises :class:`SingularMatrix` when ``d == 0``.
    """
    n = len(K)
    a = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(K)]
    width = 2 * n
    sign = 1
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                raise SingularMatrix("matrix is singular")
        pk = a[k][k]
        rk = a[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            aik = ri[k]
            for j in range(width):
                if j == k:
                    continue
                q, r = divmod(pk * ri[j] - aik * rk[j], prev)
                assert r == 0, "Bareiss division must be exact"
                ri[j] = q
            ri[k] = 0
        prev = pk
    # left block is now prev * I; right block is prev * K^{-1}
    d = prev * sign
    adj = [[x * sign for x in a[i][n:]] for i in range(n)]
    return adj, d


def inverse(M: RationalMatrix) -> RationalMatrix:
    _require_square(M)
    K, c = _integer_form(M)
    adj, d = integer_adjugate(K)
    # M = K / c  =>  M^{-1} = c * K^{-1} = c * adj / d
    return RationalMatrix([Fraction(c * x, d) for x in r] for r in adj)


def cofactor_det(M: RationalMatrix) -> Fraction:
    """Laplace expansion along the first row; exponential, used as an oracle."""
    rows = M.entries
    n = _require_square(M)

    def rec(rs: tuple[tuple[Fraction, ...], ...]) -> Fraction:
        if len(rs) == 1:
            return rs[0][0]
        total = Fraction(0)
        for j, x in enumerate(rs[0]):
            if x == 0:
                continue
            minor = tuple(r[:j] + r[j + 1:] for r in rs[1:])
            total += (-1) ** j * x * rec(minor)
        return total

    return rec(rows) if n else Fraction(1)
