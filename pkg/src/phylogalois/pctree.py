"""PC-trees: canonical forms of 1-nested network classes.

A PC-tree is stored rooted at the leaf labelled 1.  ``root`` is the node
adjacent to that leaf and every node is one of

* an ``int`` leaf label,
* ``("P", child, child, ...)``: a permutable node, children unordered,
* ``("C", child, child, ...)``: a cyclic node; the cyclic order of its arms
  is ``parent, child_1, ..., child_m`` up to reflection.

Construction canonicalises recursively (P children sorted by key, C children
oriented to the smaller of the two readings), so equality of two ``PCTree``
values is plain tuple equality.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator

from .exceptions import BoundExceededError, InputError
from .splits import CircularOrder, Split, SplitSystem, canonical_mask, _check_n

#: Largest n for which all PC-trees are generated.
PCTREE_ENUM_BOUND = 7
#: Largest n for which binary 1-nested classes are generated.
BINARY_ENUM_BOUND = 9


@lru_cache(maxsize=None)
def node_key(node) -> str:
    if isinstance(node, int):
        return str(node)
    return node[0] + "(" + ",".join(node_key(c) for c in node[1:]) + ")"


def _canon(node):
    if isinstance(node, int):
        return node
    kind = node[0]
    kids = [_canon(c) for c in node[1:]]
    if kind == "P":
        kids.sort(key=node_key)
    else:
        rev = kids[::-1]
        if [node_key(c) for c in rev] < [node_key(c) for c in kids]:
            kids = rev
    return (kind, *kids)


def _leaves(node):
    if isinstance(node, int):
        yield node
    else:
        for c in node[1:]:
            yield from _leaves(c)


def _internal(node):
    if not isinstance(node, int):
        yield node
        for c in node[1:]:
            yield from _internal(c)


class PCTree:
    """Canonical PC-tree on leaves {1..n}."""

    __slots__ = ("n", "root", "_key")

    def __init__(self, n: int, root):
        _check_n(n)
        self._validate(n, root)
        self.n = n
        self.root = _canon(root)
        self._key = None

    @staticmethod
    def _validate(n, root):
        if isinstance(root, int):
            raise InputError("a PC-tree needs at least one internal node")
        for node in _internal(root):
            if node[0] not in ("P", "C"):
                raise InputError(f"unknown node tag {node[0]!r}")
            if node[0] == "P" and len(node) < 3:
                raise InputError("P-node of degree < 3")
            if node[0] == "C" and len(node) < 4:
                raise InputError("C-node of degree < 4")
        if sorted(_leaves(root)) != list(range(2, n + 1)):
            raise InputError(f"leaves must be exactly 1..{n}")

    @classmethod
    def parse(cls, text: str) -> "PCTree":
        """Parse the ``str()`` form, e.g. ``'1:P(2,C(3,4,5,6))'``."""
        text = "".join(text.split())
        head, _, body = text.partition(":")
        if head != "1" or not body:
            raise InputError(f"PC-tree text must start with '1:': {text!r}")
        pos = 0

        def node():
            nonlocal pos
            if body[pos] in "PC":
                kind = body[pos]
                if body[pos + 1] != "(":
                    raise InputError(f"expected '(' at {pos + 1} in {body!r}")
                pos += 2
                kids = [node()]
                while body[pos] == ",":
                    pos += 1
                    kids.append(node())
                if body[pos] != ")":
                    raise InputError(f"expected ')' at {pos} in {body!r}")
                pos += 1
                return (kind, *kids)
            start = pos
            while pos < len(body) and body[pos].isdigit():
                pos += 1
            if start == pos:
                raise InputError(f"unexpected character at {pos} in {body!r}")
            return int(body[start:pos])

        try:
            root = node()
        except IndexError:
            raise InputError(f"truncated PC-tree text {text!r}") from None
        if pos != len(body):
            raise InputError(f"trailing text in {text!r}")
        n = max(_leaves(root)) if not isinstance(root, int) else 1
        return cls(n, root)

    @classmethod
    def from_graph(cls, kinds: dict, adj: dict, labels: dict) -> "PCTree":
        """Canonical tree from an unrooted description.

        ``kinds`` maps node -> 'L' | 'P' | 'C'; ``adj`` maps node -> neighbour
        list (cyclic order for C-nodes); ``labels`` maps leaf node -> taxon.
        """
        leaf1 = next(v for v, t in labels.items() if t == 1)

        def build(v, parent):
            kind = kinds[v]
            if kind == "L":
                return labels[v]
            nbrs = adj[v]
            if kind == "C":
                k = nbrs.index(parent)
                seq = nbrs[k + 1:] + nbrs[:k]
            else:
                seq = [u for u in nbrs if u != parent]
            return (kind, *(build(u, v) for u in seq))

        (start,) = adj[leaf1]
        return cls(len(labels), build(start, leaf1))

    # -- identity -----------------------------------------------------------

    @property
    def key(self) -> str:
        if self._key is None:
            self._key = "1:" + node_key(self.root)
        return self._key

    def __eq__(self, other):
        return isinstance(other, PCTree) and self.n == other.n and self.root == other.root

    def __hash__(self):
        return hash((self.n, self.root))

    def __lt__(self, other):
        return (self.n, self.key) < (other.n, other.key)

    def __str__(self):
        return self.key

    def __repr__(self):
        return f"PCTree({self.key!r})"

    # -- structure ----------------------------------------------------------

    def internal_nodes(self) -> list:
        return list(_internal(self.root))

    @property
    def nontrivial_bridges(self) -> int:
        """Internal edges of the tree (nontrivial bridges of the expanded network)."""
        return len(self.internal_nodes()) - 1

    @property
    def is_binary(self) -> bool:
        return all(v[0] == "C" or len(v) == 3 for v in _internal(self.root))

    def degree_profile(self) -> list[tuple[str, int]]:
        return sorted((v[0], len(v)) for v in _internal(self.root))

    def splits(self) -> SplitSystem:
        """Splits displayed by the tree: one per edge plus every arc of a C-node."""
        n = self.n
        out = set()

        def walk(node):
            if isinstance(node, int):
                m = 1 << (node - 1)
                out.add(m)
                return m
            masks = [walk(c) for c in node[1:]]
            total = 0
            for m in masks:
                total |= m
            if node[0] == "C":
                size = len(masks)
                for a in range(size):
                    acc = masks[a]
                    for b in range(a + 1, size):
                        acc |= masks[b]
                        if b - a + 1 <= size - 1:
                            out.add(acc)
            out.add(total)
            return total

        walk(self.root)
        full = (1 << n) - 1
        return SplitSystem(n, (Split(n, m) for m in out if 0 < m < full))

    def orders(self) -> set[CircularOrder]:
        """Circular orders consistent with the tree, read off its embeddings."""

        def arrangements(node):
            if isinstance(node, int):
                return [(node,)]
            kid_arrs = [arrangements(c) for c in node[1:]]
            if node[0] == "P":
                perms = itertools.permutations(range(len(kid_arrs)))
            else:
                ident = tuple(range(len(kid_arrs)))
                perms = (ident, ident[::-1])
            out = []
            for perm in perms:
                for combo in itertools.product(*(kid_arrs[i] for i in perm)):
                    out.append(tuple(itertools.chain.from_iterable(combo)))
            return out

        return {CircularOrder((1,) + arr) for arr in arrangements(self.root)}

    def unrooted(self):
        """(kinds, adj, labels) with leaves numbered by their taxon.

        Internal nodes get ids ``n+1, n+2, ...`` in pre-order; C-node
        neighbour lists are in cyclic order.
        """
        kinds = {t: "L" for t in range(1, self.n + 1)}
        adj = {t: [] for t in range(1, self.n + 1)}
        labels = {t: t for t in range(1, self.n + 1)}
        counter = itertools.count(self.n + 1)

        def build(node, parent):
            if isinstance(node, int):
                adj[node].append(parent)
                return node
            v = next(counter)
            kinds[v] = node[0]
            adj[v] = [parent]
            for c in node[1:]:
                adj[v].append(build(c, v))
            return v

        r = build(self.root, 1)
        adj[1].append(r)
        return kinds, adj, labels

    def leaf_path(self, i: int, j: int):
        """Nodes on the tree path from leaf ``i`` to leaf ``j`` plus the graph."""
        kinds, adj, _ = self.unrooted()
        prev = {i: None}
        frontier = [i]
        while frontier:
            nxt = []
            for v in frontier:
                for u in adj[v]:
                    if u not in prev:
                        prev[u] = v
                        nxt.append(u)
            frontier = nxt
        path = [j]
        while path[-1] != i:
            path.append(prev[path[-1]])
        return path[::-1], kinds, adj


# -- enumeration -----------------------------------------------------------


def _insertions(node, x, binary):
    """Variants of subtree ``node`` with new leaf ``x`` placed inside it or on
    the edge above it."""
    yield ("P", node, x)
    if isinstance(node, int):
        return
    kind, kids = node[0], node[1:]
    if kind == "P":
        if not binary:
            yield ("P", *kids, x)
        if len(kids) == 2:
            a, b = kids
            yield ("C", a, b, x)
            yield ("C", a, x, b)
            yield ("C", x, a, b)
    else:
        for pos in range(len(kids) + 1):
            yield ("C", *kids[:pos], x, *kids[pos:])
    for i, kid in enumerate(kids):
        for v in _insertions(kid, x, binary):
            yield (kind, *kids[:i], v, *kids[i + 1:])


@lru_cache(maxsize=None)
def _pc_roots(n, binary):
    if n == 3:
        return frozenset([("P", 2, 3)])
    out = set()
    for root in _pc_roots(n - 1, binary):
        for v in _insertions(root, n, binary):
            out.add(_canon(v))
    return frozenset(out)


def enumerate_pc_trees(n: int) -> list[PCTree]:
    """All PC-trees with leaves {1..n}, sorted by canonical key."""
    _check_n(n)
    if n > PCTREE_ENUM_BOUND:
        raise BoundExceededError("PC-tree enumeration", n, PCTREE_ENUM_BOUND)
    return sorted(PCTree(n, r) for r in _pc_roots(n, False))


def binary_one_nested_count(n: int, k: int) -> int:
    """C(n-3, k) (n+k-1)! / (2k+2)!!, the number of binary classes with k bridges."""
    _check_n(n)
    if not 0 <= k <= n - 3:
        raise InputError(f"k must lie in 0..{n - 3}")
    double_fact = 2 ** (k + 1) * math.factorial(k + 1)
    return math.comb(n - 3, k) * math.factorial(n + k - 1) // double_fact


def enumerate_binary_one_nested(n: int, k: int) -> Iterator[PCTree]:
    """Binary 1-nested classes on {1..n} with exactly ``k`` nontrivial bridges.

    Every degree-3 node is a P-node and every node of higher degree is a
    C-node; each distinct cyclic order is a distinct class.  Output is sorted
    by canonical key.
    """
    _check_n(n)
    if not 0 <= k <= n - 3:
        raise InputError(f"k must lie in 0..{n - 3}, got {k}")
    if n > BINARY_ENUM_BOUND:
        raise BoundExceededError("binary 1-nested enumeration", n, BINARY_ENUM_BOUND)
    trees = [PCTree(n, r) for r in _pc_roots(n, True)]
    yield from sorted(t for t in trees if t.nontrivial_bridges == k)


def count_one_nested_classes(n: int) -> int:
    """Number of distinct split systems displayed by 1-nested networks on {1..n}.

    Counted by generating every PC-tree and deduplicating by split system.
    """
    _check_n(n)
    if n > 6:
        raise BoundExceededError("1-nested class count", n, 6)
    return len({t.splits() for t in enumerate_pc_trees(n)})
