"""
Generator descriptors for the H-primes I_w of O_q(SL_n) and the catalog
sigma -> I_(w0, w0 sigma) over the restricted poset S.

A quantum minor c+_{j,y} only depends on y through the set y([1,j]), and
c-_{j,y} only through y([j+1,n]); generators are therefore indexed by
(sign, j, row set). Containment between descriptors is containment of these
generator sets. It implies containment of the ideals, not conversely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from . import counting
from .perms import (PairW, Permutation, bruhat_leq, compose, dominated, in_S,
                    longest_element, sigma_zero)
from .poset import barrier_count, enumerate_S

__all__ = [
    "MinorIndex", "IdealDescriptor", "CatalogEntry",
    "gens_plus", "gens_minus", "xi_descriptor", "build_catalog",
    "criterion_check", "lemma_conditions_check", "nesting_check", "transfer_spotcheck",
    "verify_catalog", "catalog_json",
]

Sign = Literal["plus", "minus"]


@dataclass(frozen=True, order=True)
class MinorIndex:
    sign: Sign
    j: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if any(a >= b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows must be strictly increasing: {rows}")
        if self.sign == "plus":
            ok = cols == tuple(range(1, self.j + 1)) and len(rows) == self.j
        elif self.sign == "minus":
            ok = len(rows) == len(cols) and cols == tuple(range(self.j + 1, self.j + 1 + len(cols)))
        else:
            raise ValueError(f"unknown sign {self.sign!r}")
        if not ok:
            raise ValueError(f"inconsistent minor index {self}")

    def to_json(self) -> dict:
        return {"sign": self.sign, "j": self.j, "rows": list(self.rows), "cols": list(self.cols)}


@dataclass(frozen=True)
class IdealDescriptor:
    w: PairW
    generators: tuple[MinorIndex, ...]

    def generator_set(self) -> frozenset[MinorIndex]:
        return frozenset(self.generators)


@dataclass(frozen=True)
class CatalogEntry:
    sigma: Permutation
    descriptor: IdealDescriptor
    rank: int | None = None

    def to_json(self) -> dict:
        doc = {"sigma": self.sigma.to_json(), "wMinus": self.descriptor.w.minus.to_json()}
        if self.rank is not None:
            doc["rank"] = self.rank
        doc["generators"] = [g.to_json() for g in self.descriptor.generators]
        return doc


def gens_plus(wplus: Permutation) -> frozenset[MinorIndex]:
    """c+_{j,y} with y not <=_j w+, for every j."""
    n = wplus.n
    out = set()
    for j in range(1, n):
        bound = wplus.prefix(j)
        cols = tuple(range(1, j + 1))
        for rows in combinations(range(1, n + 1), j):
            if not dominated(rows, bound):
                out.add(MinorIndex("plus", j, rows, cols))
    return frozenset(out)


def gens_minus(wminus: Permutation) -> frozenset[MinorIndex]:
    """c-_{j,y} with y not <=_j w-; the row set is the complement of y([1,j])."""
    n = wminus.n
    everything = set(range(1, n + 1))
    out = set()
    for j in range(1, n):
        bound = wminus.prefix(j)
        cols = tuple(range(j + 1, n + 1))
        for head in combinations(range(1, n + 1), j):
            if not dominated(head, bound):
                out.add(MinorIndex("minus", j, tuple(sorted(everything - set(head))), cols))
    return frozenset(out)


def xi_descriptor(sigma: Permutation, m: int, p: int) -> CatalogEntry:
    """Catalog entry for sigma: the descriptor of I_(w0, w0 sigma)."""
    if not in_S(sigma, m, p):
        raise ValueError(f"sigma = {sigma} is not in S for (m,p) = ({m},{p})")
    w0 = longest_element(m + p)
    w = PairW(w0, compose(w0, sigma))
    gens = gens_plus(w.plus) | gens_minus(w.minus)
    rank = m - barrier_count(sigma, m) if m == p else None
    return CatalogEntry(sigma, IdealDescriptor(w, tuple(sorted(gens))), rank)


def build_catalog(m: int, p: int, bound: int | None = None) -> list[CatalogEntry]:
    return [xi_descriptor(s, m, p) for s in enumerate_S(m, p, bound)]


def _minor_passes(g: MinorIndex, m: int) -> bool:
    return any(i <= m and a >= m + 1 for i, a in zip(g.rows, g.cols))


def criterion_check(entry: CatalogEntry, m: int) -> bool:
    """Every generator pairs some row <= m with some column >= m+1 (positionally)."""
    return all(_minor_passes(g, m) for g in entry.descriptor.generators)


def lemma_conditions_check(wminus: Permutation, m: int, p: int) -> bool:
    n = m + p
    if wminus.n != n:
        raise ValueError(f"expected a permutation of size {n}, got {wminus.n}")
    right = all(wminus(n - t) <= m + 1 + t for t in range(0, p - 1))
    left = all(wminus(t) >= m + 1 - t for t in range(1, m))
    return right and left


def nesting_check(sigma: Permutation, sigma2: Permutation, m: int, p: int) -> bool:
    """sigma <= sigma2 implies the generators of sigma are among those of sigma2."""
    if not bruhat_leq(sigma, sigma2):
        return True
    a = xi_descriptor(sigma, m, p).descriptor.generator_set()
    b = xi_descriptor(sigma2, m, p).descriptor.generator_set()
    return a <= b


def transfer_spotcheck(m: int, bound: int | None = None) -> bool:
    """Rank strata by barrier count match the rank-count formula, and sigma0 is alone in S_m."""
    return not _stratification_failures(m, build_catalog(m, m, bound))


def _stratification_failures(m: int, entries: list[CatalogEntry]) -> list[dict]:
    failures = []
    sizes: dict[int, int] = {}
    for e in entries:
        t = barrier_count(e.sigma, m)
        if e.rank != m - t:
            failures.append({"check": "rank", "sigma": e.sigma.to_json(), "rank": e.rank, "expected": m - t})
        sizes[t] = sizes.get(t, 0) + 1
    for t in range(m + 1):
        want = counting.rank_count(m, m - t)
        if sizes.get(t, 0) != want:
            failures.append({"check": "stratum size", "t": t, "found": sizes.get(t, 0), "expected": want})
    top = [e.sigma for e in entries if barrier_count(e.sigma, m) == m]
    if top != [sigma_zero(m, m)]:
        failures.append({"check": "top stratum", "found": [s.to_json() for s in top]})
    return failures


@dataclass
class CatalogReport:
    m: int
    p: int
    size: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_catalog(m: int, p: int, bound: int | None = None) -> CatalogReport:
    """Criterion, lemma, nesting and (square case) stratification checks."""
    entries = build_catalog(m, p, bound)
    report = CatalogReport(m, p, len(entries))
    n = m + p
    if gens_plus(longest_element(n)):
        report.failures.append({"check": "gens_plus(w0) is empty"})
    expected = counting.poly_bernoulli_neg(p, m)
    if len(entries) != expected:
        report.failures.append({"check": "catalog size", "found": len(entries), "expected": expected})
    for e in entries:
        for g in e.descriptor.generators:
            if not _minor_passes(g, m):
                report.failures.append({"check": "criterion", "sigma": e.sigma.to_json(), "generator": g.to_json()})
        if not lemma_conditions_check(e.descriptor.w.minus, m, p):
            report.failures.append({"check": "lemma conditions", "sigma": e.sigma.to_json()})
    gensets = [e.descriptor.generator_set() for e in entries]
    for a, ea in enumerate(entries):
        for b, eb in enumerate(entries):
            if a != b and bruhat_leq(ea.sigma, eb.sigma) and not gensets[a] <= gensets[b]:
                report.failures.append({"check": "nesting", "sigma": ea.sigma.to_json(), "sigma2": eb.sigma.to_json()})
    if m == p:
        report.failures.extend(_stratification_failures(m, entries))
    return report


def catalog_json(m: int, p: int, entries: list[CatalogEntry]) -> str:
    doc = {"m": m, "p": p, "entries": [e.to_json() for e in entries]}
    return json.dumps(doc, separators=(",", ":")) + "\n"
