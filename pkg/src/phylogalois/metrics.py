"""Weighted networks, distance vectors and the weighted maps S_w and L_w.

All arithmetic is exact (:class:`fractions.Fraction`).  Two distance vectors
are equal only if every entry is equal, which is what the Galois identities
need.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping

import networkx as nx

from .circular import exterior_network, is_circular
from .exceptions import BoundExceededError, InputError, KalmansonError, NotCircularError
from .networks import (
    PhyloNetwork,
    classify,
    consistent_orders_network,
    displayed_splits,
    edge_key,
    random_one_nested_network,
)
from .splits import (
    ORDER_SCAN_BOUND,
    CircularOrder,
    PosetRelation,
    Split,
    SplitSystem,
    all_circular_orders,
    trivial_split,
)


def as_rational(x) -> Fraction:
    """Exact rational from an int, Fraction, or text such as ``'3/2'`` or ``'21.5'``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(str(x))
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {x!r}") from exc


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def pair_list(n: int) -> list[tuple[int, int]]:
    """Unordered pairs of {1..n} in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), 2))


class DistanceVector:
    """Pairwise distances d_ij (i < j) in lexicographic pair order."""

    __slots__ = ("n", "entries", "_index")

    def __init__(self, n: int, entries: Iterable):
        entries = tuple(as_rational(x) for x in entries)
        if n < 3:
            raise InputError("n must be >= 3")
        if len(entries) != n * (n - 1) // 2:
            raise InputError(f"expected {n * (n - 1) // 2} entries for n={n}, got {len(entries)}")
        if any(x < 0 for x in entries):
            raise InputError("distances must be nonnegative")
        self.n = n
        self.entries = entries
        self._index = {p: k for k, p in enumerate(pair_list(n))}

    @classmethod
    def from_mapping(cls, n: int, values: Mapping) -> "DistanceVector":
        def get(i, j):
            return values[(i, j)] if (i, j) in values else values[(j, i)]

        return cls(n, [get(i, j) for i, j in pair_list(n)])

    @classmethod
    def zero(cls, n):
        return cls(n, [0] * (n * (n - 1) // 2))

    def __call__(self, i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(0)
        return self.entries[self._index[(i, j) if i < j else (j, i)]]

    def items(self):
        return zip(pair_list(self.n), self.entries)

    def __eq__(self, other):
        return isinstance(other, DistanceVector) and self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, self.entries))

    def __repr__(self):
        return f"DistanceVector(n={self.n}, [{', '.join(map(fmt_rational, self.entries))}])"


class WeightedSplitSystem:
    """Splits with strictly positive rational weights; weight zero means absent."""

    __slots__ = ("n", "weights")

    def __init__(self, n: int, weights: Mapping[Split, object]):
        clean = {}
        for s, w in weights.items():
            if s.n != n:
                raise InputError(f"split {s} is not on 1..{n}")
            w = as_rational(w)
            if w < 0:
                raise InputError(f"negative weight {w} on split {s}")
            if w > 0:
                clean[s] = w
        self.n = n
        self.weights = dict(sorted(clean.items()))

    @property
    def split_system(self) -> SplitSystem:
        return SplitSystem(self.n, self.weights, add_trivial=False)

    @property
    def all_trivial_present(self) -> bool:
        return all(trivial_split(t, self.n) in self.weights for t in range(1, self.n + 1))

    def __eq__(self, other):
        return isinstance(other, WeightedSplitSystem) and self.n == other.n and self.weights == other.weights

    def __hash__(self):
        return hash((self.n, tuple(self.weights.items())))

    def __repr__(self):
        body = "; ".join(f"{s}:{fmt_rational(w)}" for s, w in self.weights.items())
        return f"WeightedSplitSystem(n={self.n}, [{body}])"


class WeightedNetwork:
    """A phylogenetic network with a nonnegative rational weight on every edge."""

    __slots__ = ("network", "weights")

    def __init__(self, network: PhyloNetwork, weights: Mapping):
        clean = {}
        for (u, v), w in weights.items():
            w = as_rational(w)
            if w < 0:
                raise InputError(f"negative weight on edge {u}-{v}")
            clean[edge_key(u, v)] = w
        missing = [e for e in network.edges if e not in clean]
        if missing:
            raise InputError(f"edge {missing[0]} has no weight")
        extra = set(clean) - set(network.edges)
        if extra:
            raise InputError(f"weight given for unknown edge {sorted(extra, key=str)[0]}")
        self.network = network
        self.weights = {e: clean[e] for e in network.edges}

    @property
    def n(self):
        return self.network.n

    def weight(self, u, v) -> Fraction:
        return self.weights[edge_key(u, v)]

    def __eq__(self, other):
        return isinstance(other, WeightedNetwork) and self.network == other.network and self.weights == other.weights

    def __repr__(self):
        return f"WeightedNetwork({self.network!r})"


def distance_from_splits(ws: WeightedSplitSystem) -> DistanceVector:
    """d_s(i, j): total weight of the splits separating i and j."""
    n = ws.n
    out = []
    for i, j in pair_list(n):
        total = Fraction(0)
        for s, w in ws.weights.items():
            if (s.mask >> (i - 1) ^ s.mask >> (j - 1)) & 1:
                total += w
        out.append(total)
    return DistanceVector(n, out)


def distance_from_network(wn: WeightedNetwork) -> DistanceVector:
    """d_N(i, j): minimum total edge weight over leaf-to-leaf paths."""
    g = wn.network.graph
    leaf = wn.network.leaf_node

    def w(u, v, _):
        return wn.weights[edge_key(u, v)]

    out = []
    for i in range(1, wn.n + 1):
        lengths = nx.single_source_dijkstra_path_length(g, leaf[i], weight=w)
        out.extend(as_rational(lengths[leaf[j]]) for j in range(i + 1, wn.n + 1))
    return DistanceVector(wn.n, out)


def is_additive(d: DistanceVector) -> bool:
    """Four-point condition over every quadruple and every pairing."""
    for i, j, k, l in itertools.combinations(range(1, d.n + 1), 4):
        a = d(i, j) + d(k, l)
        b = d(i, k) + d(j, l)
        c = d(i, l) + d(j, k)
        if a > max(b, c) or b > max(a, c) or c > max(a, b):
            return False
    return True


def kalmanson_violation(d: DistanceVector, c: CircularOrder):
    """First quadruple (i, j, k, l) in circular position violating the
    Kalmanson inequality, or None."""
    if d.n != c.n:
        raise InputError("distance vector and order on different taxon sets")
    seq = c.sequence
    for p, q, r, t in itertools.combinations(range(d.n), 4):
        i, j, k, l = seq[p], seq[q], seq[r], seq[t]
        if max(d(i, j) + d(k, l), d(j, k) + d(i, l)) > d(i, k) + d(j, l):
            return (i, j, k, l)
    return None


def is_kalmanson(d: DistanceVector, c: CircularOrder) -> bool:
    return kalmanson_violation(d, c) is None


def find_kalmanson_orders(d: DistanceVector) -> list[CircularOrder]:
    if d.n > ORDER_SCAN_BOUND:
        raise BoundExceededError("Kalmanson order scan", d.n, ORDER_SCAN_BOUND)
    return [c for c in all_circular_orders(d.n) if is_kalmanson(d, c)]


def circular_decompose(d: DistanceVector, c: CircularOrder) -> WeightedSplitSystem:
    """Unique weighted circular split system with d_s = d, splits arcs of ``c``.

    The arc x_i..x_j of ``c`` gets weight
    (d(x_{i-1}, x_j) + d(x_i, x_{j+1}) - d(x_{i-1}, x_{j+1}) - d(x_i, x_j)) / 2.

    Raises
    ------
    KalmansonError
        If ``d`` is not Kalmanson for ``c``; the offending quadruple is named.
    """
    bad = kalmanson_violation(d, c)
    if bad is not None:
        raise KalmansonError(f"Kalmanson inequality fails on quadruple {bad} in order {c}", bad)
    n = d.n
    seq = c.sequence
    weights = {}
    # each split has one side avoiding seq[0]: the arc at positions i..j with 1 <= i <= j <= n-1
    for i in range(1, n):
        for j in range(i, n):
            before, after = seq[i - 1], seq[(j + 1) % n]
            w = (d(before, seq[j]) + d(seq[i], after) - d(before, after) - d(seq[i], seq[j])) / 2
            if w < 0:
                raise KalmansonError(f"negative weight {w} on arc {seq[i:j + 1]}")
            if w:
                m = 0
                for t in seq[i:j + 1]:
                    m |= 1 << (t - 1)
                weights[Split(n, m)] = w
    return WeightedSplitSystem(n, weights)


def s_w(wn: WeightedNetwork) -> WeightedSplitSystem:
    """The upper adjoint S_w: the unique weighted circular system with d_s = d_N."""
    orders = consistent_orders_network(wn.network)
    return circular_decompose(distance_from_network(wn), orders[0])


def l_w(ws: WeightedSplitSystem) -> WeightedNetwork:
    """The lower adjoint L_w: exterior network of ``ws`` with summed split weights.

    Each split contributes its weight to the bridge displaying it, or else to
    both edges of the cycle-edge pair displaying it.
    """
    base = ws.split_system
    if is_circular(base) is None:
        raise NotCircularError("weighted split system is not circular")
    net, assign = exterior_network(base)
    weights = {e: sum((ws.weights[x] for x in xs), Fraction(0)) for e, xs in assign.items()}
    return WeightedNetwork(net, weights)


def total_weight(ws: WeightedSplitSystem) -> Fraction:
    return sum(ws.weights.values(), Fraction(0))


def bridge_weights(wn: WeightedNetwork) -> dict[Split, Fraction]:
    """Split displayed by each bridge of ``wn`` -> that bridge's weight."""
    st = classify(wn.network)
    return {s: wn.weights[e] for e, s in st.bridge_splits.items()}


def weighted_poset_compare(a: WeightedNetwork, b: WeightedNetwork) -> PosetRelation:
    """Order on weighted networks: comparable only when d_N agrees exactly."""
    if distance_from_network(a) != distance_from_network(b):
        return PosetRelation.INCOMPARABLE
    return PosetRelation.of_sets(displayed_splits(a.network).splits, displayed_splits(b.network).splits)


def random_weights(network: PhyloNetwork, rng, max_num: int = 12, denominators=(1, 2, 3, 4)) -> dict:
    """Strictly positive random rational weight for every edge."""
    return {e: Fraction(rng.randint(1, max_num), rng.choice(denominators)) for e in network.edges}


def random_weighted_network(n: int, rng, binary: bool = False, contract: float = 0.0) -> WeightedNetwork:
    net = random_one_nested_network(n, rng, binary=binary, contract=contract)
    return WeightedNetwork(net, random_weights(net, rng))
