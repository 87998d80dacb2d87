"""Unrooted phylogenetic networks, their displayed splits and PC-tree forms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

import networkx as nx

from .exceptions import InvalidNetworkError, InputError, NotOneNestedError
from .pctree import (
    PCTree,
    binary_one_nested_count,
    count_one_nested_classes,
    enumerate_binary_one_nested,
    enumerate_pc_trees,
)
from .splits import (
    CircularOrder,
    PosetRelation,
    Split,
    SplitSystem,
    consistent_orders,
)

__all__ = [
    "PhyloNetwork",
    "NetworkStats",
    "validate_network",
    "classify",
    "minimal_cuts",
    "displayed_splits",
    "consistent_orders_network",
    "to_pc_tree",
    "from_pc_tree",
    "network_poset_compare",
    "enumerate_binary_one_nested",
    "binary_one_nested_count",
    "count_one_nested_classes",
    "enumerate_pc_trees",
]

Edge = tuple


def _node_key(v):
    return (type(v).__name__, str(v))


def edge_key(u, v) -> Edge:
    """Canonical (sorted) form of an undirected edge."""
    return (u, v) if _node_key(u) <= _node_key(v) else (v, u)


class PhyloNetwork:
    """A validated, leaf-labelled simple connected graph.

    Build instances with :func:`validate_network`; the constructor assumes
    its arguments have already been checked.
    """

    __slots__ = ("n", "edges", "leaf_node", "_graph", "_stats", "_cuts")

    def __init__(self, n: int, edges: Iterable[Edge], leaf_node: Mapping[int, Hashable]):
        self.n = n
        self.edges = tuple(sorted({edge_key(u, v) for u, v in edges}, key=lambda e: (_node_key(e[0]), _node_key(e[1]))))
        self.leaf_node = dict(sorted(leaf_node.items()))
        self._graph = None
        self._stats = None
        self._cuts = None

    @property
    def graph(self) -> nx.Graph:
        if self._graph is None:
            g = nx.Graph()
            g.add_edges_from(self.edges)
            self._graph = nx.freeze(g)
        return self._graph

    @property
    def nodes(self) -> list:
        return sorted(self.graph.nodes, key=_node_key)

    @property
    def label_of(self) -> dict:
        return {v: t for t, v in self.leaf_node.items()}

    def leaf_mask(self, nodes) -> int:
        lab = self.label_of
        m = 0
        for v in nodes:
            if v in lab:
                m |= 1 << (lab[v] - 1)
        return m

    def __eq__(self, other):
        return (
            isinstance(other, PhyloNetwork)
            and self.n == other.n
            and self.edges == other.edges
            and self.leaf_node == other.leaf_node
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"PhyloNetwork(n={self.n}, nodes={self.graph.number_of_nodes()}, edges={len(self.edges)})"


def validate_network(edges: Iterable[Edge], labels: Mapping[int, Hashable], n: int | None = None) -> PhyloNetwork:
    """Check the definition of an unrooted phylogenetic network.

    Parameters
    ----------
    edges : iterable of node pairs
    labels : mapping taxon -> node, a bijection from {1..n} onto the leaves
    n : optional expected taxon count

    Raises
    ------
    InvalidNetworkError
        On loops, multi-edges, disconnection, unlabeled leaves, labeled
        internal nodes or unlabeled nodes of degree 2.
    """
    edges = list(edges)
    labels = dict(labels)
    if n is None:
        n = len(labels)
    if n < 3:
        raise InvalidNetworkError("need at least 3 taxa")
    if sorted(labels) != list(range(1, n + 1)):
        raise InvalidNetworkError(f"labels must be exactly 1..{n}")
    if len(set(labels.values())) != n:
        raise InvalidNetworkError("two taxa label the same node")
    seen = set()
    for u, v in edges:
        if u == v:
            raise InvalidNetworkError(f"loop at node {u!r}")
        k = frozenset((u, v))
        if k in seen:
            raise InvalidNetworkError(f"multi-edge between {u!r} and {v!r}")
        seen.add(k)
    g = nx.Graph()
    g.add_edges_from(edges)
    for v in labels.values():
        if v not in g:
            raise InvalidNetworkError(f"labeled node {v!r} has no edges")
    if not nx.is_connected(g):
        raise InvalidNetworkError("graph is disconnected")
    leaf_nodes = set(labels.values())
    for v, d in g.degree:
        if v in leaf_nodes:
            if d != 1:
                raise InvalidNetworkError(f"labeled node {v!r} has degree {d}")
        elif d == 1:
            raise InvalidNetworkError(f"unlabeled node {v!r} has degree 1")
        elif d == 2:
            raise InvalidNetworkError(f"unlabeled node {v!r} has degree 2")
    return PhyloNetwork(n, edges, labels)


@dataclass(frozen=True)
class NetworkStats:
    bridges: frozenset
    nontrivial_bridges: frozenset
    cut_point_nodes: frozenset
    cycles: tuple
    is_one_nested: bool
    is_binary: bool
    bridge_splits: dict = field(compare=False, repr=False)

    def summary_lines(self):
        return [
            f"bridges: {len(self.bridges)}",
            f"nontrivial bridges: {len(self.nontrivial_bridges)}",
            f"cycles: {len(self.cycles)} (lengths {sorted(len(c) for c in self.cycles)})",
            f"cut-point nodes: {len(self.cut_point_nodes)}",
            f"one-nested: {str(self.is_one_nested).lower()}",
            f"binary: {str(self.is_binary).lower()}",
        ]


def _cycle_sequence(sub: nx.Graph) -> list:
    start = min(sub.nodes, key=_node_key)
    seq = [start]
    prev, cur = None, start
    while True:
        nxt = [u for u in sorted(sub[cur], key=_node_key) if u != prev]
        u = nxt[0]
        if u == start:
            break
        seq.append(u)
        prev, cur = cur, u
    return seq


def classify(N: PhyloNetwork) -> NetworkStats:
    """Bridges, cycles and the 1-nested / binary flags of a network.

    A network is 1-nested iff every biconnected component with more than one
    edge is a simple cycle of length at least 4.
    """
    if N._stats is not None:
        return N._stats
    g = N.graph
    bridges = frozenset(edge_key(u, v) for u, v in nx.bridges(g))
    bridge_splits = {}
    for u, v in bridges:
        h = g.copy()
        h.remove_edge(u, v)
        m = N.leaf_mask(nx.node_connected_component(h, u))
        bridge_splits[(u, v)] = Split(N.n, m)
    nontrivial = frozenset(e for e, s in bridge_splits.items() if not s.trivial)
    cycles = []
    one_nested = True
    for comp in nx.biconnected_component_edges(g):
        if len(comp) < 2:
            continue
        sub = g.edge_subgraph(comp)
        if sub.number_of_edges() != sub.number_of_nodes() or any(d != 2 for _, d in sub.degree):
            one_nested = False
            continue
        if len(comp) < 4:
            one_nested = False
        cycles.append(tuple(_cycle_sequence(sub)))
    cycles.sort(key=lambda c: [_node_key(v) for v in c])
    count = {}
    for c in cycles:
        for v in c:
            count[v] = count.get(v, 0) + 1
    cut_points = frozenset(v for v, k in count.items() if k >= 2)
    leaves = set(N.leaf_node.values())
    binary = all(d == 3 for v, d in g.degree if v not in leaves)
    stats = NetworkStats(bridges, nontrivial, cut_points, tuple(cycles), one_nested, binary, bridge_splits)
    N._stats = stats
    return stats


def _require_one_nested(N):
    st = classify(N)
    if not st.is_one_nested:
        raise NotOneNestedError("network is not 1-nested")
    return st


def minimal_cuts(N: PhyloNetwork) -> dict[Split, list[tuple[Edge, ...]]]:
    """Every minimal cut of a 1-nested network, grouped by the split it displays.

    Minimal cuts of a 1-nested network are single bridges and pairs of edges
    lying on one cycle.
    """
    if N._cuts is not None:
        return N._cuts
    st = _require_one_nested(N)
    g = N.graph
    cuts: dict[Split, list] = {}
    for e, s in sorted(st.bridge_splits.items(), key=lambda kv: kv[1]):
        cuts.setdefault(s, []).append((e,))
    for cyc in st.cycles:
        d = len(cyc)
        cyc_edges = [(cyc[i], cyc[(i + 1) % d]) for i in range(d)]
        h = g.copy()
        h.remove_edges_from(cyc_edges)
        # leaves hanging off each cycle vertex once the cycle is removed
        hang = [N.leaf_mask(nx.node_connected_component(h, v)) for v in cyc]
        for a, b in itertools.combinations(range(d), 2):
            # deleting edges a and b leaves the arc of vertices a+1..b
            m = 0
            for i in range(a + 1, b + 1):
                m |= hang[i]
            s = Split(N.n, m)
            cuts.setdefault(s, []).append((edge_key(*cyc_edges[a]), edge_key(*cyc_edges[b])))
    N._cuts = cuts
    return cuts


def displayed_splits(N: PhyloNetwork) -> SplitSystem:
    """The splits displayed by a 1-nested network (bridges and cycle-edge pairs)."""
    return SplitSystem(N.n, minimal_cuts(N).keys())


def consistent_orders_network(N: PhyloNetwork) -> list[CircularOrder]:
    return consistent_orders(displayed_splits(N))


def network_poset_compare(N1: PhyloNetwork, N2: PhyloNetwork) -> PosetRelation:
    if N1.n != N2.n:
        raise InputError("networks on different taxon sets")
    return PosetRelation.of_sets(displayed_splits(N1).splits, displayed_splits(N2).splits)


def to_pc_tree(N: PhyloNetwork) -> PCTree:
    """PC-tree of the equivalence class of a 1-nested network.

    Every unlabeled vertex becomes a hub joined to its bridges and to one
    C-node per cycle through it.  Hubs of degree two are smoothed, which is
    exactly the representative with as many nontrivial bridges as possible.
    """
    st = _require_one_nested(N)
    label = N.label_of
    kinds: dict = {}
    adj: dict = {}
    for v in N.graph.nodes:
        kinds[("v", v)] = "L" if v in label else "P"
        adj[("v", v)] = []
    for u, v in sorted(st.bridges, key=lambda e: (_node_key(e[0]), _node_key(e[1]))):
        adj[("v", u)].append(("v", v))
        adj[("v", v)].append(("v", u))
    for i, cyc in enumerate(st.cycles):
        c = ("c", i)
        kinds[c] = "C"
        adj[c] = [("v", v) for v in cyc]
        for v in cyc:
            adj[("v", v)].append(c)
    for h in [x for x in kinds if kinds[x] == "P"]:
        if len(adj[h]) == 2:
            a, b = adj[h]
            adj[a][adj[a].index(h)] = b
            adj[b][adj[b].index(h)] = a
            del adj[h], kinds[h]
    labels = {("v", v): t for v, t in label.items()}
    return PCTree.from_graph(kinds, adj, labels)


def from_pc_tree(t: PCTree) -> PhyloNetwork:
    """Expand a PC-tree into its canonical 1-nested network.

    Leaves become nodes ``"l<i>"``, P-nodes ``"p<j>"`` and each C-node of
    degree d a d-cycle on nodes ``"c<j>_<a>"`` (one per arm, in cyclic order).
    """
    kinds, adj, labels = t.unrooted()
    attach = {}
    edges = []
    for v, kind in kinds.items():
        if kind == "L":
            attach[v] = {adj[v][0]: f"l{v}"}
        elif kind == "P":
            attach[v] = {u: f"p{v - t.n}" for u in adj[v]}
        else:
            ring = [f"c{v - t.n}_{a}" for a in range(len(adj[v]))]
            attach[v] = dict(zip(adj[v], ring))
            edges.extend((ring[a], ring[(a + 1) % len(ring)]) for a in range(len(ring)))
    for v in kinds:
        for u in adj[v]:
            if v < u:
                edges.append((attach[v][u], attach[u][v]))
    return validate_network(edges, {i: f"l{i}" for i in range(1, t.n + 1)}, t.n)


def _random_pc_root(n, rng, binary):
    from .pctree import _insertions, _canon

    root = ("P", 2, 3)
    for x in range(4, n + 1):
        options = list(_insertions(root, x, binary))
        root = _canon(rng.choice(options))
    return root


def random_pc_tree(n: int, rng, binary: bool = False) -> PCTree:
    """A PC-tree grown by inserting leaves 4..n at uniformly chosen spots."""
    return PCTree(n, _random_pc_root(n, rng, binary))


def contract_bridge(N: PhyloNetwork, edge: Edge) -> PhyloNetwork:
    """Merge the endpoints of a bridge (the second endpoint into the first)."""
    u, v = edge
    if v in N.label_of or u in N.label_of:
        raise InputError("cannot contract a pendant edge")
    edges = []
    for a, b in N.edges:
        if {a, b} == {u, v}:
            continue
        edges.append((u if a == v else a, u if b == v else b))
    return validate_network(edges, N.leaf_node, N.n)


def random_one_nested_network(n: int, rng, binary: bool = False, contract: float = 0.0) -> PhyloNetwork:
    """Random 1-nested network: expand a random PC-tree, then repeatedly
    contract nontrivial bridges into cycles with probability ``contract``.

    A bridge is contracted only into a cycle node whose sole non-cycle edge
    is that bridge, so the displayed splits are kept and the result is an
    equivalent but non-canonical representative (cycles may share nodes).
    """
    N = from_pc_tree(random_pc_tree(n, rng, binary))
    if contract <= 0:
        return N
    while True:
        st = classify(N)
        on = {}
        for c in st.cycles:
            for v in c:
                on[v] = on.get(v, 0) + 1
        g = N.graph

        def anchor(v):
            return v in on and g.degree(v) - 2 * on[v] == 1

        candidates = sorted(
            (e for e in st.nontrivial_bridges if anchor(e[0]) or anchor(e[1])),
            key=lambda e: (_node_key(e[0]), _node_key(e[1])),
        )
        candidates = [e for e in candidates if rng.random() < contract]
        if not candidates:
            return N
        e = candidates[0]
        N = contract_bridge(N, e if anchor(e[0]) else (e[1], e[0]))
