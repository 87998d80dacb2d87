"""Vertices of the level-1 network polytopes BME(n, k) and linear minimisation.

Vertex vectors have one integer component per unordered leaf pair, in
lexicographic pair order.  Here ``k`` always counts *nontrivial* bridges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exceptions import InputError
from .metrics import DistanceVector, WeightedNetwork, pair_list, s_w
from .pctree import PCTree, enumerate_binary_one_nested
from .splits import CircularOrder, consistent_orders


@dataclass(frozen=True)
class PolytopeVector:
    n: int
    components: tuple

    def __post_init__(self):
        if len(self.components) != self.n * (self.n - 1) // 2:
            raise InputError("wrong number of components")

    def __getitem__(self, pair):
        i, j = sorted(pair)
        return self.components[pair_list(self.n).index((i, j))]

    def dot(self, d: DistanceVector) -> Fraction:
        if d.n != self.n:
            raise InputError(f"dimension mismatch: vector n={self.n}, distances n={d.n}")
        return sum((x * y for x, y in zip(self.components, d.entries)), Fraction(0))

    def __add__(self, other):
        return PolytopeVector(self.n, tuple(a + b for a, b in zip(self.components, other.components)))

    def __str__(self):
        return "(" + ",".join(map(str, self.components)) + ")"


def incidence_vector(c: CircularOrder) -> PolytopeVector:
    """1 for pairs adjacent in ``c``, 0 otherwise."""
    adjacent = set(c.adjacent_pairs())
    return PolytopeVector(c.n, tuple(int(p in adjacent) for p in pair_list(c.n)))


def network_vector(t: PCTree) -> PolytopeVector:
    """Sum of the incidence vectors of every order consistent with ``t``."""
    total = [0] * (t.n * (t.n - 1) // 2)
    for c in consistent_orders(t.splits()):
        for k, x in enumerate(incidence_vector(c).components):
            total[k] += x
    return PolytopeVector(t.n, tuple(total))


def binary_vector_closed_form(t: PCTree) -> PolytopeVector:
    """x_ij = 2^(k - b_ij) when i, j can be adjacent in a consistent order, else 0.

    ``k`` is the number of nontrivial bridges and ``b_ij`` the number of them
    on the path from i to j.  Leaves i and j can be made adjacent iff at every
    C-node on their path the two arms used by the path are neighbours in its
    cyclic order.
    """
    if not t.is_binary:
        raise InputError("closed form applies to binary networks only")
    k = t.nontrivial_bridges
    kinds, adj, _ = t.unrooted()
    out = []
    for i, j in pair_list(t.n):
        prev = {i: None}
        queue = deque([i])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in prev:
                    prev[u] = v
                    queue.append(u)
        path = [j]
        while path[-1] != i:
            path.append(prev[path[-1]])
        inner = path[1:-1]
        possible = True
        for p in range(1, len(path) - 1):
            v = path[p]
            if kinds[v] == "C":
                ring = adj[v]
                gap = abs(ring.index(path[p - 1]) - ring.index(path[p + 1]))
                if gap not in (1, len(ring) - 1):
                    possible = False
                    break
        b = len(inner) - 1
        out.append(2 ** (k - b) if possible else 0)
    return PolytopeVector(t.n, tuple(out))


@lru_cache(maxsize=None)
def _vertices(n, k):
    return tuple((t, network_vector(t)) for t in enumerate_binary_one_nested(n, k))


def bme_vertices(n: int, k: int) -> list[tuple[PCTree, PolytopeVector]]:
    """One (class, vector) pair per binary 1-nested class with k nontrivial bridges."""
    if n > 8:
        from .exceptions import BoundExceededError

        raise BoundExceededError("BME vertex enumeration", n, 8)
    return list(_vertices(n, k))


def minimize(d: DistanceVector, n: int, k: int) -> tuple[list[PCTree], Fraction]:
    """Minimise x(N) . d over the vertices of BME(n, k).

    Returns every minimising class (ties kept, canonical order) and the value.
    """
    if d.n != n:
        raise InputError(f"dimension mismatch: n={n} but distance vector has n={d.n}")
    best = None
    argmin = []
    for t, x in bme_vertices(n, k):
        v = x.dot(d)
        if best is None or v < best:
            best, argmin = v, [t]
        elif v == best:
            argmin.append(t)
    return sorted(argmin), best


def face_vertices(t: PCTree, k: int) -> list[PCTree]:
    """Vertices of the face F_k(t): binary k-bridge classes refining ``t``.

    Raises
    ------
    InputError
        If k exceeds the number m of nontrivial bridges of ``t``; the face is
        only defined for 0 <= k <= m.
    """
    m = t.nontrivial_bridges
    if not 0 <= k <= m:
        raise InputError(f"F_k(N) needs 0 <= k <= m = {m} nontrivial bridges, got k={k}")
    mine = t.splits().splits
    return [v for v, _ in bme_vertices(t.n, k) if mine <= v.splits().splits]


def predicted_minimizers(wn: WeightedNetwork, k: int) -> list[PCTree]:
    """Binary k-bridge classes displaying every split of S_w(wn)."""
    wanted = set(s_w(wn).weights)
    return [v for v, _ in bme_vertices(wn.n, k) if wanted <= v.splits().splits]


def vertex_table(d: DistanceVector, n: int, k: int) -> list[tuple[str, str, Fraction]]:
    """Rows (class, vector, dot product) for CSV export."""
    return [(t.key, str(x), x.dot(d)) for t, x in bme_vertices(n, k)]
