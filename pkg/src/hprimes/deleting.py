"""
The (m,p) deleting-derivations algorithm at q = 1, over exact rationals.

Index pairs are totally ordered by the (m,p)-ordering: the pairs with row <= m
come first, by decreasing column and then decreasing row; the pairs with
row > m follow in lexicographic order. Steps run through

    E = ([1,n]^2 + {(n, n+1)}) minus {(m, n)}

from the top element (n, n+1) downwards. A step with pivot (j, b) replaces

    Y[i,a] <- Y[i,a] - Y[i,b] * Y[j,b]^-1 * Y[j,a]

when j < i <= m and b < a, or when i < j, a < b and j > m.

The ordering as printed in the source reads ``i < m`` in its second branch.
That reading makes (m, a) incomparable with itself, so ``i <= m`` is used
here; pass ``printed=True`` to :func:`mp_leq` to get the literal version.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "StepIndex", "ZeroPivotError", "RationalMatrix",
    "mp_leq", "mp_less", "enumerate_E", "successor", "pivot_sequence",
    "dd_step", "dd_inverse_step", "dd_run", "dd_trace", "dd_inverse_run",
    "as_matrix", "diagonal_product", "bareiss_det", "random_generic_matrix",
]

RationalMatrix = tuple[tuple[Fraction, ...], ...]


class StepIndex(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


class ZeroPivotError(ZeroDivisionError):
    """The pivot entry vanished; the input matrix is not generic enough."""

    def __init__(self, pivot: StepIndex):
        super().__init__(f"zero pivot at {StepIndex(*pivot)}")
        self.pivot = StepIndex(*pivot)


def mp_leq(a: Sequence[int], b: Sequence[int], m: int, printed: bool = False) -> bool:
    """(i,a) <=_m (j,b)."""
    i, al = a
    j, be = b
    if j > m:
        return i < j or (i == j and al <= be)
    row_ok = i < m if printed else i <= m
    return row_ok and (al > be or (al == be and i >= j))


def mp_less(a: Sequence[int], b: Sequence[int], m: int, printed: bool = False) -> bool:
    return tuple(a) != tuple(b) and mp_leq(a, b, m, printed)


def _cmp(m: int):
    def cmp(a, b):
        if a == b:
            return 0
        return -1 if mp_leq(a, b, m) else 1
    return cmp


def enumerate_E(m: int, p: int) -> list[StepIndex]:
    """E sorted ascending; first element (m-1, n), last (n, n+1)."""
    if m < 2 or p < 2:
        raise ValueError(f"m and p must both be >= 2 (got m={m}, p={p})")
    n = m + p
    pts = [StepIndex(i, a) for i in range(1, n + 1) for a in range(1, n + 1) if (i, a) != (m, n)]
    pts.append(StepIndex(n, n + 1))
    return sorted(pts, key=cmp_to_key(_cmp(m)))


def successor(step: Sequence[int], m: int, p: int) -> StepIndex:
    """(j,b)^+ : the smallest element of E strictly above ``step``."""
    n = m + p
    if tuple(step) == (n, n + 1):
        raise ValueError("(n, n+1) has no successor")
    return min((e for e in enumerate_E(m, p) if mp_less(step, e, m)), key=cmp_to_key(_cmp(m)))


def pivot_sequence(m: int, p: int, target: Sequence[int]) -> list[StepIndex]:
    """Pivots strictly below (n, n+1), descending, down to ``target`` inclusive."""
    order = enumerate_E(m, p)
    target = StepIndex(*target)
    if target not in order:
        raise ValueError(f"target {target} is not in E")
    k = order.index(target)
    return order[k:-1][::-1]


def as_matrix(rows) -> RationalMatrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if any(len(r) != len(out) for r in out):
        raise ValueError("matrix must be square")
    return out


def _update(Y: RationalMatrix, pivot: Sequence[int], m: int, sign: int) -> RationalMatrix:
    n = len(Y)
    j, b = pivot
    if not (1 <= j <= n and 1 <= b <= n):
        raise ValueError(f"pivot {tuple(pivot)} is not a matrix position (n={n})")
    piv = Y[j - 1][b - 1]
    if piv == 0:
        raise ZeroPivotError(StepIndex(j, b))
    rows = [list(r) for r in Y]
    for i in range(1, n + 1):
        for a in range(1, n + 1):
            if (j < i <= m and b < a) or (i < j and a < b and j > m):
                corr = Y[i - 1][b - 1] * Y[j - 1][a - 1] / piv
                rows[i - 1][a - 1] = Y[i - 1][a - 1] - sign * corr
    return tuple(tuple(r) for r in rows)


def dd_step(Y: RationalMatrix, pivot: Sequence[int], m: int) -> RationalMatrix:
    return _update(Y, pivot, m, +1)


def dd_inverse_step(Y: RationalMatrix, pivot: Sequence[int], m: int) -> RationalMatrix:
    # the pivot row and column are untouched by a step, so the update inverts exactly
    return _update(Y, pivot, m, -1)


def dd_trace(Y: RationalMatrix, m: int, target: Sequence[int]) -> Iterator[tuple[StepIndex, RationalMatrix]]:
    """Yield (step, Y^(step)) from (n, n+1) down to ``target``."""
    Y = as_matrix(Y)
    n = len(Y)
    yield StepIndex(n, n + 1), Y
    for r in pivot_sequence(m, n - m, target):
        Y = dd_step(Y, r, m)
        yield r, Y


def dd_run(Y: RationalMatrix, m: int, target: Sequence[int]) -> RationalMatrix:
    for _, Y in dd_trace(Y, m, target):
        pass
    return Y


def dd_inverse_run(Y: RationalMatrix, m: int, start: Sequence[int]) -> RationalMatrix:
    """Undo :func:`dd_run`: inverse steps ascending from ``start`` up to (n, n)."""
    Y = as_matrix(Y)
    for r in reversed(pivot_sequence(m, len(Y) - m, start)):
        Y = dd_inverse_step(Y, r, m)
    return Y


def diagonal_product(Y: RationalMatrix) -> Fraction:
    out = Fraction(1)
    for k in range(len(Y)):
        out *= Y[k][k]
    return out


def bareiss_det(Y: RationalMatrix) -> Fraction:
    """Determinant by fraction-free elimination after clearing denominators."""
    M = as_matrix(Y)
    n = len(M)
    if n == 0:
        return Fraction(1)
    scale = 1
    for row in M:
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
    A = [[int(x * scale) for x in row] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k]), None)
            if swap is None:
                return Fraction(0)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for jj in range(k + 1, n):
                A[i][jj] = (A[i][jj] * A[k][k] - A[i][k] * A[k][jj]) // prev
        prev = A[k][k]
    return Fraction(sign * A[n - 1][n - 1], scale ** n)


def random_generic_matrix(n: int, m: int, rng: random.Random, target: Sequence[int] | None = None,
                          low: int = -9, high: int = 9, max_tries: int = 10_000) -> RationalMatrix:
    """Random integer matrix whose run down to ``target`` meets no zero pivot."""
    if target is None:
        target = (m - 1, n)
    for _ in range(max_tries):
        Y = as_matrix([[rng.randint(low, high) for _ in range(n)] for _ in range(n)])
        try:
            dd_run(Y, m, target)
        except ZeroPivotError:
            continue
        return Y
    raise RuntimeError(f"no generic {n}x{n} matrix found in {max_tries} draws")
