"""
Exact counting formulas for restricted permutations and H-primes.

Everything is computed with Python integers. Signed alternating sums are
allowed internally; every public count is checked nonnegative before it is
returned.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

__all__ = [
    "CountingInconsistency",
    "stirling2", "poly_bernoulli_neg", "vesztergombi_count", "hspec_count",
    "rank_count", "u_helper",
]


class CountingInconsistency(ArithmeticError):
    """Two formulas that must agree returned different values."""


def _count(value: int, what: str) -> int:
    if value < 0:
        raise CountingInconsistency(f"{what} evaluated to a negative count {value}")
    return value


@lru_cache(maxsize=None)
def _stirling_row(l: int) -> tuple[int, ...]:
    # row l of the triangle: S(l, 0..l), via S(l,k) = k S(l-1,k) + S(l-1,k-1)
    if l == 0:
        return (1,)
    prev = _stirling_row(l - 1) + (0,)
    return tuple((k * prev[k] if k else 0) + (prev[k - 1] if k else 0) for k in range(l + 1))


def stirling2(l: int, k: int) -> int:
    """Stirling number of the second kind S(l, k)."""
    if l < 0 or k < 0:
        raise ValueError("stirling2 needs l, k >= 0")
    if k > l:
        return 0
    # build rows bottom-up so deep requests never recurse far
    for r in range(0, l, 256):
        _stirling_row(r)
    return _stirling_row(l)[k]


def poly_bernoulli_neg(p: int, m: int) -> int:
    """B_p^(-m) = (-1)^p sum_{i=0}^{p} (-1)^i i! (i+1)^m S(p, i)."""
    if p < 1 or m < 1:
        raise ValueError("poly_bernoulli_neg needs p, m >= 1")
    total = sum((-1) ** i * factorial(i) * (i + 1) ** m * stirling2(p, i) for i in range(p + 1))
    return _count((-1) ** p * total, f"B_{p}^(-{m})")


def _vesztergombi_binomial_form(m: int, p: int) -> int:
    return 2 * sum(
        (-1) ** (p - 1 + i) * factorial(i) * comb(2 + i, i) * (2 + i) ** (m - 1) * stirling2(p, i + 1)
        for i in range(p)
    )


def _vesztergombi_simplified_form(m: int, p: int) -> int:
    return sum(
        (-1) ** (p - 1 + i) * factorial(i + 1) * (2 + i) ** m * stirling2(p, i + 1)
        for i in range(p)
    )


def vesztergombi_count(m: int, p: int) -> int:
    """Number of n-permutations with -p <= i - sigma(i) <= m.

    Both the binomial form and its (i+1)! simplification are evaluated; a
    mismatch raises :class:`CountingInconsistency`.
    """
    _check_mp(m, p)
    a = _vesztergombi_binomial_form(m, p)
    b = _vesztergombi_simplified_form(m, p)
    if a != b:
        raise CountingInconsistency(
            f"binomial and simplified displacement counts disagree for (m,p)=({m},{p}): {a} != {b}")
    return _count(a, "vesztergombi_count")


def hspec_count(m: int, p: int) -> int:
    """Count of H-invariant primes of the m x p quantum matrices, as a double alternating sum."""
    _check_mp(m, p)
    total = sum(
        k ** m * sum((-1) ** (j - 1) * comb(k - 1, j) * j ** p for j in range(1, k))
        for k in range(2, p + 2)
    )
    return _count((-1) ** (p - 1) * total, "hspec_count")


def rank_count(m: int, r: int) -> int:
    """Number of rank-r H-primes in the m x m case: (r! S(m+1, r+1))^2."""
    if m < 2:
        raise ValueError("rank_count needs m >= 2")
    if not 0 <= r <= m:
        raise ValueError(f"rank r={r} outside [0,{m}]")
    return (factorial(r) * stirling2(m + 1, r + 1)) ** 2


@lru_cache(maxsize=None)
def _u(m: int, t: int) -> int:
    if t == 0:
        return 1
    if t > m:
        return 0
    return (m - t + 1) * _u(m - 1, t - 1) + _u(m - 1, t)


def u_helper(m: int, t: int) -> int:
    """u(m,t) = (m-t+1) u(m-1,t-1) + u(m-1,t), with u(m,0) = 1."""
    if m < 1:
        raise ValueError("u_helper needs m >= 1")
    if not 0 <= t <= m:
        raise ValueError(f"t={t} outside [0,{m}]")
    return _u(m, t)


def _check_mp(m: int, p: int) -> None:
    if m < 2 or p < 2:
        raise ValueError(f"m and p must both be >= 2 (got m={m}, p={p})")
