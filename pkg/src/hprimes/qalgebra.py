"""
Quantized coordinate ring of u x v matrices over Z[q, q^-1].

Elements are kept in PBW normal form: every monomial is a nondecreasing word
in the generators Z[i,a] ordered lexicographically by (i, a). Products are
straightened with the 2x2 relations

    y x = q^-1 x y,   z x = q^-1 x z,   z y = y z,
    t y = q^-1 y t,   t z = q^-1 z t,   t x = x t - (q - q^-1) y z,

for every submatrix [[x, y], [z, t]], always moving the lex-smaller generator
to the left.

>>> A = QuantumMatrixAlgebra(2, 2)
>>> A.normalize([(2, 2), (1, 1)])
Z11*Z22 + (-q + q^-1)*Z12*Z21
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Sequence

from .perms import Permutation, length

__all__ = [
    "LaurentQ", "QPoly", "MinorSpec", "QuantumMatrixAlgebra",
    "quantum_minor", "quantum_det", "is_central",
    "check_relations", "check_delta_central", "check_confluence", "check_laplace_first_row",
]


class LaurentQ:
    """Integer Laurent polynomial in q. Immutable; zero coefficients are never stored."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {e: c for e, c in sorted(coeffs.items()) if c}
        self._hash = None

    @classmethod
    def q(cls, power: int = 1) -> "LaurentQ":
        return cls({power: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentQ(other)
        return isinstance(other, LaurentQ) and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __add__(self, other) -> "LaurentQ":
        if not isinstance(other, (LaurentQ, int)):
            return NotImplemented
        other = _as_laurent(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentQ(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQ":
        return LaurentQ({e: -c for e, c in self._c.items()})

    def __sub__(self, other) -> "LaurentQ":
        if not isinstance(other, (LaurentQ, int)):
            return NotImplemented
        return self + (-_as_laurent(other))

    def __rsub__(self, other) -> "LaurentQ":
        return _as_laurent(other) - self

    def __mul__(self, other) -> "LaurentQ":
        if not isinstance(other, (LaurentQ, int)):
            return NotImplemented
        other = _as_laurent(other)
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentQ(out)

    __rmul__ = __mul__

    def evaluate(self, x):
        """Value at q = x (x may be an int or a Fraction)."""
        return sum(c * x ** e for e, c in self._c.items())

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items(), reverse=True):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _as_laurent(x) -> LaurentQ:
    if isinstance(x, LaurentQ):
        return x
    if isinstance(x, int):
        return LaurentQ(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial in q")


_ONE = LaurentQ(1)
_QINV = LaurentQ.q(-1)
_MINUS_Q_PLUS_QINV = LaurentQ({1: -1, -1: 1})  # -(q - q^-1)

Word = tuple[int, ...]


class QuantumMatrixAlgebra:
    """O_q(M_{u,v}); generator (i, a) has internal index (i-1)*v + (a-1)."""

    def __init__(self, u: int, v: int):
        if u < 1 or v < 1:
            raise ValueError("algebra dimensions must be >= 1")
        self.u = u
        self.v = v
        # per-instance memo of word -> normal form, one table per rewriting strategy
        self._nf_left = lru_cache(maxsize=None)(lambda w: self._straighten(w, leftmost=True))
        self._nf_right = lru_cache(maxsize=None)(lambda w: self._straighten(w, leftmost=False))

    def __repr__(self) -> str:
        return f"QuantumMatrixAlgebra({self.u}, {self.v})"

    def __eq__(self, other) -> bool:
        return isinstance(other, QuantumMatrixAlgebra) and (self.u, self.v) == (other.u, other.v)

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    @property
    def ngens(self) -> int:
        return self.u * self.v

    def index(self, i: int, a: int) -> int:
        if not (1 <= i <= self.u and 1 <= a <= self.v):
            raise IndexError(f"generator Z[{i},{a}] outside the {self.u}x{self.v} matrix")
        return (i - 1) * self.v + (a - 1)

    def position(self, g: int) -> tuple[int, int]:
        return divmod(g, self.v)[0] + 1, g % self.v + 1

    def generators(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.u + 1):
            for a in range(1, self.v + 1):
                yield (i, a)

    # -- construction ---------------------------------------------------

    def zero(self) -> "QPoly":
        return QPoly(self, {})

    def one(self) -> "QPoly":
        return QPoly(self, {(): _ONE})

    def scalar(self, c) -> "QPoly":
        return QPoly(self, {(): _as_laurent(c)})

    def gen(self, i: int, a: int) -> "QPoly":
        return QPoly(self, {(self.index(i, a),): _ONE})

    def normalize(self, word: Iterable[tuple[int, int]], coeff=1, strategy: str = "left") -> "QPoly":
        """Straighten a word of generator positions into PBW normal form.

        ``strategy`` picks which out-of-order adjacent pair is rewritten first
        ("left" or "right"); both must give the same result.
        """
        w = tuple(self.index(i, a) for i, a in word)
        coeff = _as_laurent(coeff)
        if not coeff:
            return self.zero()
        nf = self._table(strategy)(w)
        return QPoly(self, {mono: c * coeff for mono, c in nf.items()})

    def _table(self, strategy: str):
        if strategy == "left":
            return self._nf_left
        if strategy == "right":
            return self._nf_right
        raise ValueError(f"unknown rewriting strategy {strategy!r}")

    # -- rewriting --------------------------------------------------------

    def _swap(self, a: int, b: int) -> list[tuple[LaurentQ, Word]]:
        """Rewrite b*a for a < b into normal-ordered pieces (pairs of coefficient, word)."""
        ib, ab = divmod(b, self.v)
        ia, aa = divmod(a, self.v)
        if ib == ia or ab == aa:
            # same row or same column
            return [(_QINV, (a, b))]
        if ab > aa:
            # b = t, a = x: t x = x t - (q - q^-1) y z
            y = ia * self.v + ab
            z = ib * self.v + aa
            return [(_ONE, (a, b)), (_MINUS_Q_PLUS_QINV, (y, z))]
        # b = z (lower-left), a = y (upper-right): they commute
        return [(_ONE, (a, b))]

    def _straighten(self, word: Word, leftmost: bool) -> dict[Word, LaurentQ]:
        positions = range(len(word) - 1) if leftmost else range(len(word) - 2, -1, -1)
        k = next((k for k in positions if word[k] > word[k + 1]), None)
        if k is None:
            return {word: _ONE}
        table = self._nf_left if leftmost else self._nf_right
        out: dict[Word, LaurentQ] = {}
        for c, pair in self._swap(word[k + 1], word[k]):
            for mono, c2 in table(word[:k] + pair + word[k + 2:]).items():
                out[mono] = out.get(mono, LaurentQ()) + c * c2
        return {mono: c for mono, c in out.items() if c}


class QPoly:
    """An element of a QuantumMatrixAlgebra in normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QuantumMatrixAlgebra, terms: Mapping[Word, LaurentQ]):
        self.algebra = algebra
        self.terms = {w: c for w, c in sorted(terms.items()) if c}

    def _check(self, other: "QPoly") -> None:
        if self.algebra != other.algebra:
            raise ValueError(f"dimension mismatch: {self.algebra} vs {other.algebra}")

    def _lift(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            self._check(other)
            return other
        return self.algebra.scalar(other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, tuple(self.terms.items())))

    def __add__(self, other) -> "QPoly":
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, LaurentQ()) + c
        return QPoly(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "QPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "QPoly":
        return self._lift(other) - self

    def mul(self, other, strategy: str = "left") -> "QPoly":
        other = self._lift(other)
        table = self.algebra._table(strategy)
        out: dict[Word, LaurentQ] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for mono, c3 in table(w1 + w2).items():
                    out[mono] = out.get(mono, LaurentQ()) + c * c3
        return QPoly(self.algebra, out)

    def __mul__(self, other) -> "QPoly":
        return self.mul(other)

    def __rmul__(self, other) -> "QPoly":
        return self._lift(other).mul(self)

    def evaluate_q(self, x) -> dict[tuple[tuple[int, int], ...], object]:
        """Coefficients at q = x, keyed by monomials spelled as generator positions."""
        out = {}
        for w, c in self.terms.items():
            val = c.evaluate(x)
            if val:
                out[tuple(self.algebra.position(g) for g in w)] = val
        return out

    def monomials(self) -> list[tuple[tuple[int, int], ...]]:
        return [tuple(self.algebra.position(g) for g in w) for w in self.terms]

    def coefficient(self, word: Sequence[tuple[int, int]]) -> LaurentQ:
        key = tuple(sorted(self.algebra.index(i, a) for i, a in word))
        return self.terms.get(key, LaurentQ())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            mono = "*".join(f"Z{i}{a}" if max(i, a) < 10 else f"Z[{i},{a}]"
                            for i, a in (self.algebra.position(g) for g in w))
            if not mono:
                parts.append(f"({c!r})")
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"({c!r})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class MinorSpec:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if not rows:
            raise ValueError("empty minor")
        if len(rows) != len(cols):
            raise ValueError(f"row set {rows} and column set {cols} differ in size")
        for name, idx in (("rows", rows), ("cols", cols)):
            if any(x >= y for x, y in zip(idx, idx[1:])):
                raise ValueError(f"{name} must be strictly increasing: {idx}")


def quantum_minor(algebra: QuantumMatrixAlgebra, spec: MinorSpec) -> QPoly:
    """sum over sigma in S_t of (-q)^l(sigma) Z[i1, a_sigma(1)] ... Z[it, a_sigma(t)]."""
    t = len(spec.rows)
    total = algebra.zero()
    for perm in permutations(range(t)):
        ell = length(Permutation(k + 1 for k in perm))
        coeff = LaurentQ({ell: (-1) ** ell})
        word = [(spec.rows[k], spec.cols[perm[k]]) for k in range(t)]
        total = total + algebra.normalize(word, coeff)
    return total


def quantum_det(algebra: QuantumMatrixAlgebra) -> QPoly:
    if algebra.u != algebra.v:
        raise ValueError(f"quantum determinant needs a square algebra, got {algebra.u}x{algebra.v}")
    full = tuple(range(1, algebra.u + 1))
    return quantum_minor(algebra, MinorSpec(full, full))


def is_central(x: QPoly) -> bool:
    A = x.algebra
    return all((x * A.gen(i, a) - A.gen(i, a) * x).is_zero() for i, a in A.generators())


# -- identity checks used by the CLI and the test-suite -----------------------
# Each returns a list of failure descriptions; an empty list means success.

def check_relations(n: int) -> list[dict]:
    """Every defining relation on every 2x2 submatrix of the n x n generator matrix."""
    A = QuantumMatrixAlgebra(n, n)
    failures = []
    qi = LaurentQ.q(-1)
    corr = LaurentQ({1: 1, -1: -1})
    for i, k in combinations(range(1, n + 1), 2):
        for a, b in combinations(range(1, n + 1), 2):
            x, y, z, t = A.gen(i, a), A.gen(i, b), A.gen(k, a), A.gen(k, b)
            rels = {
                "yx=q^-1 xy": (y * x, qi * (x * y)),
                "zx=q^-1 xz": (z * x, qi * (x * z)),
                "zy=yz": (z * y, y * z),
                "ty=q^-1 yt": (t * y, qi * (y * t)),
                "tz=q^-1 zt": (t * z, qi * (z * t)),
                "tx=xt-(q-q^-1)yz": (t * x, x * t - corr * (y * z)),
            }
            for name, (lhs, rhs) in rels.items():
                if lhs != rhs:
                    failures.append({"identity": name, "rows": [i, k], "cols": [a, b],
                                     "difference": repr(lhs - rhs)})
    return failures


def check_delta_central(n: int) -> list[dict]:
    A = QuantumMatrixAlgebra(n, n)
    delta = quantum_det(A)
    failures = []
    for i, a in A.generators():
        g = A.gen(i, a)
        comm = delta * g - g * delta
        if not comm.is_zero():
            failures.append({"identity": f"Delta*Z{i}{a} = Z{i}{a}*Delta", "difference": repr(comm)})
    return failures


def random_word(algebra: QuantumMatrixAlgebra, length_: int, rng: random.Random) -> list[tuple[int, int]]:
    return [(rng.randint(1, algebra.u), rng.randint(1, algebra.v)) for _ in range(length_)]


def check_confluence(count: int = 1000, max_n: int = 3, max_len: int = 6, seed: int = 0) -> list[dict]:
    """Normalize random words with leftmost-first and rightmost-first rewriting; compare."""
    rng = random.Random(seed)
    algebras = {n: QuantumMatrixAlgebra(n, n) for n in range(2, max_n + 1)}
    failures = []
    for _ in range(count):
        A = algebras[rng.randint(2, max_n)]
        word = random_word(A, rng.randint(1, max_len), rng)
        left = A.normalize(word, strategy="left")
        right = A.normalize(word, strategy="right")
        if left != right:
            failures.append({"identity": "confluence", "algebra": [A.u, A.v], "word": word})
    return failures


def check_laplace_first_row(n: int) -> list[dict]:
    """det_q = sum_k (-q)^(k-1) Z[1,k] * det_q(rows 2..n, cols without k)."""
    A = QuantumMatrixAlgebra(n, n)
    rest = tuple(range(2, n + 1))
    expansion = A.zero()
    for k in range(1, n + 1):
        cols = tuple(c for c in range(1, n + 1) if c != k)
        sub = quantum_minor(A, MinorSpec(rest, cols)) if n > 1 else A.one()
        expansion = expansion + LaurentQ({k - 1: (-1) ** (k - 1)}) * (A.gen(1, k) * sub)
    delta = quantum_det(A)
    if expansion != delta:
        return [{"identity": "first-row q-Laplace expansion", "n": n, "difference": repr(expansion - delta)}]
    return []
