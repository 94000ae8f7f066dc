"""
Permutations of [1, n] in one-line notation and the reverse Bruhat order.

The order is oriented so that the identity is the minimum and the longest
element ``w0`` is the maximum. Two permutations are compared level by level:
``a <=_j b`` when the sorted images of the first ``j`` positions of ``a`` are
componentwise below those of ``b``.

>>> s0 = sigma_zero(2, 2)
>>> s0
Permutation(3, 4, 1, 2)
>>> bruhat_leq(Permutation((2, 1, 4, 3)), s0)
True
>>> in_S(Permutation((4, 1, 2, 3)), 2, 2)
False
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "PairW",
    "identity", "longest_element", "sigma_zero",
    "leq_j", "bruhat_leq", "in_S", "length", "compose", "inverse",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of [1, n]; ``images[i-1]`` is the image of ``i``."""
    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if not images:
            raise ValueError("a permutation needs n >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of [1,{len(images)}]: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1,{self.n}]")
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __repr__(self) -> str:
        return f"Permutation{self.images!r}"

    def __str__(self) -> str:
        return ",".join(map(str, self.images))

    def prefix(self, j: int) -> list[int]:
        """Sorted images of positions 1..j."""
        return sorted(self.images[:j])

    def to_json(self) -> list[int]:
        return list(self.images)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"3,4,1,2"`` (brackets and spaces tolerated)."""
        text = text.strip().strip("[]()")
        return cls(int(tok) for tok in text.replace(" ", "").split(",") if tok)


@dataclass(frozen=True)
class PairW:
    """An element (w+, w-) of S_n x S_n."""
    plus: Permutation
    minus: Permutation

    def __post_init__(self):
        _check_same_size(self.plus, self.minus)


def _check_same_size(a: Permutation, b: Permutation) -> None:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Permutation(range(n, 0, -1))


def sigma_zero(m: int, p: int) -> Permutation:
    """Maximum of the restricted sub-poset: i -> p+i on [1,m], i -> i-m after."""
    if m < 2 or p < 2:
        raise ValueError(f"m and p must both be >= 2 (got m={m}, p={p})")
    n = m + p
    return Permutation([p + i if i <= m else i - m for i in range(1, n + 1)])


def dominated(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise a_k <= b_k for two sorted sequences of equal length."""
    return all(x <= y for x, y in zip(a, b))


def leq_j(a: Permutation, b: Permutation, j: int) -> bool:
    _check_same_size(a, b)
    if not 1 <= j <= a.n - 1:
        raise IndexError(f"level j={j} outside [1,{a.n - 1}]")
    return dominated(a.prefix(j), b.prefix(j))


def bruhat_leq(a: Permutation, b: Permutation) -> bool:
    """Reverse Bruhat order, checked on every level j in [1, n-1]."""
    _check_same_size(a, b)
    pa: list[int] = []
    pb: list[int] = []
    for j in range(a.n - 1):
        insort(pa, a.images[j])
        insort(pb, b.images[j])
        if not dominated(pa, pb):
            return False
    return True


def in_S(sigma: Permutation, m: int, p: int) -> bool:
    """Displacement test -p <= i - sigma(i) <= m for every position i."""
    if sigma.n != m + p:
        raise ValueError(f"expected a permutation of size {m + p}, got {sigma.n}")
    return all(-p <= i - s <= m for i, s in enumerate(sigma.images, start=1))


def length(sigma: Permutation) -> int:
    """Number of inversions."""
    im = sigma.images
    return sum(1 for i in range(len(im)) for k in range(i + 1, len(im)) if im[i] > im[k])


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a o b)(i) = a(b(i))."""
    _check_same_size(a, b)
    return Permutation(a.images[x - 1] for x in b.images)


def inverse(a: Permutation) -> Permutation:
    out = [0] * a.n
    for i, x in enumerate(a.images, start=1):
        out[x - 1] = i
    return Permutation(out)
