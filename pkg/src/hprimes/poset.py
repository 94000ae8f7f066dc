"""
The restricted sub-poset S of S_{m+p}, its rank strata, and its Hasse diagram.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import permutations

from .perms import Permutation, bruhat_leq, in_S

__all__ = [
    "DEFAULT_SIZE_BOUND", "SizeBoundError", "PosetGraph",
    "size_bound", "enumerate_S", "barrier_count", "enumerate_S_t",
    "hasse", "export_dot", "export_json",
]

DEFAULT_SIZE_BOUND = 10
SIZE_BOUND_ENV = "HPRIMES_SIZE_BOUND"

# above this n, enumeration switches from filtering S_n to backtracking
_FILTER_MAX_N = 8
_HARD_MAX_N = 12


class SizeBoundError(ValueError):
    pass


def size_bound(override: int | None = None) -> int:
    """Active bound on n = m + p: explicit override, then the env variable, then 10."""
    if override is not None:
        return override
    env = os.environ.get(SIZE_BOUND_ENV)
    return int(env) if env else DEFAULT_SIZE_BOUND


def _check_size(m: int, p: int, bound: int | None) -> int:
    if m < 2 or p < 2:
        raise ValueError(f"m and p must both be >= 2 (got m={m}, p={p})")
    n = m + p
    limit = min(size_bound(bound), _HARD_MAX_N)
    if n > limit:
        raise SizeBoundError(f"n = m+p = {n} exceeds the size bound {limit}")
    return n


def _backtrack(m: int, p: int) -> list[Permutation]:
    n = m + p
    out: list[Permutation] = []
    used = [False] * (n + 2)
    current: list[int] = []

    def extend(i: int) -> None:
        if i > n:
            out.append(Permutation(current))
            return
        # -p <= i - s <= m  <=>  i - m <= s <= i + p
        for s in range(max(1, i - m), min(n, i + p) + 1):
            if not used[s]:
                used[s] = True
                current.append(s)
                extend(i + 1)
                current.pop()
                used[s] = False

    extend(1)
    return out


def enumerate_S(m: int, p: int, bound: int | None = None) -> list[Permutation]:
    """All sigma with -p <= i - sigma(i) <= m, in lexicographic order."""
    n = _check_size(m, p, bound)
    if n <= _FILTER_MAX_N:
        found = (Permutation(t) for t in permutations(range(1, n + 1)))
        return [s for s in found if in_S(s, m, p)]
    return _backtrack(m, p)


def barrier_count(sigma: Permutation, m: int) -> int:
    """How many values <= m sit at positions m+1..2m."""
    if sigma.n % 2 or sigma.n != 2 * m:
        raise ValueError(f"barrier_count needs a permutation of size 2m={2 * m}, got {sigma.n}")
    return sum(1 for j in range(m + 1, 2 * m + 1) if sigma(j) <= m)


def enumerate_S_t(m: int, t: int, bound: int | None = None) -> list[Permutation]:
    if not 0 <= t <= m:
        raise ValueError(f"t={t} outside [0,{m}]")
    return [s for s in enumerate_S(m, m, bound) if barrier_count(s, m) == t]


@dataclass(frozen=True)
class PosetGraph:
    """Hasse diagram; ``edges`` holds (child, parent) index pairs, child covered by parent."""
    nodes: tuple[Permutation, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()
    m: int | None = None
    p: int | None = None

    def sources(self) -> list[int]:
        has_child = {parent for _, parent in self.edges}
        return [i for i in range(len(self.nodes)) if i not in has_child]

    def sinks(self) -> list[int]:
        has_parent = {child for child, _ in self.edges}
        return [i for i in range(len(self.nodes)) if i not in has_parent]

    def reachability(self) -> list[int]:
        """Bitmask per node of everything reachable upward (node included)."""
        order = _topological(len(self.nodes), self.edges)
        up = [1 << i for i in range(len(self.nodes))]
        parents: dict[int, list[int]] = {}
        for c, par in self.edges:
            parents.setdefault(c, []).append(par)
        for v in reversed(order):
            for par in parents.get(v, ()):
                up[v] |= up[par]
        return up


def _topological(count: int, edges) -> list[int]:
    indeg = [0] * count
    out: dict[int, list[int]] = {}
    for c, par in edges:
        indeg[par] += 1
        out.setdefault(c, []).append(par)
    ready = [i for i in range(count) if indeg[i] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in out.get(v, ()):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != count:
        raise ValueError("edge set contains a cycle")
    return order


def hasse(m: int, p: int, bound: int | None = None) -> PosetGraph:
    nodes = enumerate_S(m, p, bound)
    count = len(nodes)
    # strict up-sets as bitmasks
    above = [0] * count
    for a in range(count):
        for c in range(count):
            if a != c and bruhat_leq(nodes[a], nodes[c]):
                above[a] |= 1 << c
    edges = []
    for a in range(count):
        implied = 0
        rest = above[a]
        while rest:
            b = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            implied |= above[b]
        covers = above[a] & ~implied
        while covers:
            c = (covers & -covers).bit_length() - 1
            covers &= covers - 1
            edges.append((a, c))
    return PosetGraph(tuple(nodes), tuple(sorted(edges)), m, p)


# one fill colour per barrier-count stratum in the square case
_PALETTE = ("#e8f1fa", "#cfe3d4", "#f6e3b4", "#f2c6c2", "#d9cdea", "#c9e7e8", "#eed5e6")


def export_dot(g: PosetGraph) -> str:
    square = g.m is not None and g.m == g.p
    lines = ["digraph S {", "  rankdir=BT;", "  node [shape=box, style=filled, fillcolor=white];"]
    for i, s in enumerate(g.nodes):
        attrs = f'label="{s}"'
        if square:
            t = barrier_count(s, g.m)
            attrs += f', fillcolor="{_PALETTE[t % len(_PALETTE)]}", class="stratum{t}"'
        lines.append(f"  n{i} [{attrs}];")
    for c, par in sorted(g.edges):
        lines.append(f"  n{c} -> n{par};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: PosetGraph) -> str:
    doc = {
        "m": g.m,
        "p": g.p,
        "nodes": [s.to_json() for s in g.nodes],
        "edges": [list(e) for e in sorted(g.edges)],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"
