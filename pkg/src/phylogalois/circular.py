"""Circular split systems and the lower adjoint ``ell`` (exterior network).

``ell`` is realised combinatorially: the closure of a circular system (the
splits contiguous in every consistent order) is the split set of a unique
PC-tree, which is built directly from the splits and one witness order.
No planar drawing is involved.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

import networkx as nx
import numpy as np

from .exceptions import BoundExceededError, NotCircularError
from .networks import PhyloNetwork, from_pc_tree, minimal_cuts
from .pctree import PCTree
from .splits import (
    CircularOrder,
    Split,
    SplitSystem,
    compatible,
    consistent_orders,
    is_contiguous,
    nontrivial_splits,
    order_bit_table,
    separates,
    _TABLE_BOUND,
)

COUNT_BOUND = 6


@dataclass(frozen=True)
class CircularSystem:
    """A split system together with one order in which every split is contiguous."""

    base: SplitSystem
    witness_order: CircularOrder

    def __post_init__(self):
        bad = [x for x in self.base.splits if not is_contiguous(x, self.witness_order)]
        if bad:
            raise NotCircularError(f"split {bad[0]} is not contiguous in {self.witness_order}")

    @classmethod
    def of(cls, s: SplitSystem) -> "CircularSystem":
        c = is_circular(s)
        if c is None:
            raise NotCircularError("split system admits no consistent circular order")
        return cls(s, c)

    @property
    def n(self):
        return self.base.n


def _as_system(s):
    return s.base if isinstance(s, CircularSystem) else s


def is_circular(s: SplitSystem) -> Optional[CircularOrder]:
    """First consistent circular order of ``s`` (lexicographically), or None."""
    orders = consistent_orders(_as_system(s))
    return orders[0] if orders else None


def closure(s) -> SplitSystem:
    """Splits contiguous in every order consistent with ``s``.

    Always contains ``s`` and all trivial splits; equals the split set of
    ``ell(s)``.
    """
    base = _as_system(s)
    n = base.n
    orders = consistent_orders(base)
    if not orders:
        raise NotCircularError("split system admits no consistent circular order")
    if n <= _TABLE_BOUND:
        seqs, masks = order_bit_table(n)
        lookup = dict(zip(seqs, masks))
        bits = -1
        for c in orders:
            bits &= lookup[c.sequence]
        return SplitSystem.from_bits(n, bits & ((1 << len(nontrivial_splits(n))) - 1))
    keep = [x for x in nontrivial_splits(n) if all(is_contiguous(x, c) for c in orders)]
    return SplitSystem(n, keep)


def pc_tree_from_closed(closed: SplitSystem, witness: CircularOrder) -> PCTree:
    """PC-tree whose split set is ``closed``.

    ``closed`` must already be closed (a closure of some circular system).
    Splits compatible with all others give the tree edges; every node at
    which some incompatible split is a union of two or more arms becomes a
    C-node, its arms ordered as they appear in ``witness``.
    """
    n = closed.n
    full = (1 << n) - 1
    splits = closed.sorted()
    edge_splits = [x for x in splits if all(compatible(x, y) for y in splits)]
    edge_set = set(edge_splits)
    arcs = [x for x in splits if x not in edge_set]

    # clusters: the side away from taxon 1 of each edge split
    clusters = sorted({x.side_without(1) for x in edge_splits}, key=lambda m: (bin(m).count("1"), m))
    root_cluster = full ^ 1
    if root_cluster not in clusters:
        raise RuntimeError("closure lacks the trivial split of taxon 1")

    def lowest_containing(m):
        for c in clusters:
            if c & m == m:
                return c
        raise RuntimeError("no cluster contains the given set")

    children = {c: [] for c in clusters}
    for c in clusters:
        if c == root_cluster:
            continue
        parent = next(p for p in clusters if p != c and p & c == c)
        children[parent].append(c)

    cyclic = {lowest_containing(x.side_without(1)) for x in arcs}
    pos = witness.positions()

    def first_pos(m):
        return min(pos[t] for t in range(1, n + 1) if m >> (t - 1) & 1)

    def build(c):
        if bin(c).count("1") == 1:
            return c.bit_length()
        kids = children[c]
        if c in cyclic:
            kids = sorted(kids, key=first_pos)
            return ("C", *(build(k) for k in kids))
        return ("P", *(build(k) for k in kids))

    tree = PCTree(n, build(root_cluster))
    if tree.splits() != closed:
        raise RuntimeError("closure is not realisable by a PC-tree; this is a bug")
    return tree


def ell(s) -> PCTree:
    """The lower adjoint: the 1-nested class displaying exactly ``closure(s)``."""
    base = _as_system(s)
    witness = s.witness_order if isinstance(s, CircularSystem) else is_circular(base)
    if witness is None:
        raise NotCircularError("split system admits no consistent circular order")
    return pc_tree_from_closed(closure(base), witness)


def exterior_network(s) -> tuple[PhyloNetwork, dict]:
    """Network of ``ell(s)`` with each split of ``s`` assigned to edges.

    A split displayed by a bridge goes to that bridge; otherwise it goes to
    both edges of the unique cycle-edge pair displaying it.  Returns the
    network and a map edge -> list of splits.
    """
    base = _as_system(s)
    net = from_pc_tree(ell(s))
    cuts = minimal_cuts(net)
    assign = {e: [] for e in net.edges}
    for x in base.sorted():
        options = cuts[x]
        bridge = [c for c in options if len(c) == 1]
        chosen = bridge[0] if bridge else options[0]
        for e in chosen:
            assign[e].append(x)
    return net, assign


def is_outer_path(s) -> bool:
    """True iff every leaf pair is joined in ``ell(s)`` by a path crossing
    exactly the splits of ``s`` that separate it, each once.

    This is the weight-free form of "exterior shortest paths preserve d_s":
    with all split weights positive, such a path exists iff the exterior
    network reproduces d_s for every weighting.
    """
    base = _as_system(s)
    net, assign = exterior_network(s)
    g = net.graph
    leaf = net.leaf_node
    for i in range(1, base.n + 1):
        for j in range(i + 1, base.n + 1):
            want = Counter(x for x in base.splits if separates(x, i, j))
            ok = False
            for path in nx.all_simple_edge_paths(g, leaf[i], leaf[j]):
                got = Counter()
                for u, v in path:
                    e = (u, v) if (u, v) in assign else (v, u)
                    got.update(assign[e])
                if got == want:
                    ok = True
                    break
            if not ok:
                return False
    return True


def count_circular_systems(n: int, chunk: int = 1 << 22) -> int:
    """Number of split systems on {1..n} (all trivial splits included) that
    admit a consistent circular order.

    Each system is a bitmask over the nontrivial splits; it is circular iff
    it is a subset of the arc mask of some order.  The scan runs over bitmask
    ranges of size ``chunk``.
    """
    if n < 3:
        raise NotCircularError("n must be >= 3")
    if n > COUNT_BOUND:
        raise BoundExceededError("circular system count", n, COUNT_BOUND)
    width = len(nontrivial_splits(n))
    if width == 0:
        return 1
    _, masks = order_bit_table(n)
    full = (1 << width) - 1
    complements = [np.uint32(full ^ m) for m in sorted(set(masks))]
    total = 0
    for start in range(0, 1 << width, chunk):
        arr = np.arange(start, min(start + chunk, 1 << width), dtype=np.uint32)
        ok = np.zeros(arr.shape, dtype=bool)
        for comp in complements:
            ok |= (arr & comp) == 0
        total += int(ok.sum())
    return total


def circular_systems(n: int) -> list[SplitSystem]:
    """All circular split systems on {1..n}, ordered by nontrivial bitmask."""
    if n > COUNT_BOUND:
        raise BoundExceededError("circular system listing", n, COUNT_BOUND)
    _, masks = order_bit_table(n)
    found = set()
    for m in set(masks):
        sub = m
        while True:
            found.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return [SplitSystem.from_bits(n, b) for b in sorted(found)]
