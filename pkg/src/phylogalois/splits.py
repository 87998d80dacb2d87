"""Splits, split systems and circular orders of the taxon set {1..n}.

Splits are stored as bitmasks: taxon ``i`` is bit ``i - 1``.  The stored
block of a split is always the side that does *not* contain taxon ``n``, so
``A|B`` and ``B|A`` produce identical values.

Split systems that contain every trivial split are also addressable by an
integer ("nontrivial bits") over the fixed lexicographic enumeration returned
by :func:`nontrivial_splits`.  Exhaustive scans over all systems on ``n``
taxa work directly on those integers.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .exceptions import BoundExceededError, InputError

#: Largest n for which circular orders are scanned exhaustively.
ORDER_SCAN_BOUND = 10
#: Largest n for which every split system can be enumerated.
SYSTEM_ENUM_BOUND = 6
# Per-order contiguity tables are precomputed only up to this n.
_TABLE_BOUND = 8


def _check_n(n):
    if not isinstance(n, int) or n < 3:
        raise InputError(f"taxon count must be an integer >= 3, got {n!r}")


def _popcount(x):
    return bin(x).count("1")


def mask_of(taxa: Iterable[int]) -> int:
    m = 0
    for t in taxa:
        m |= 1 << (t - 1)
    return m


def taxa_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def canonical_mask(mask: int, n: int) -> int:
    if mask >> (n - 1) & 1:
        return ((1 << n) - 1) ^ mask
    return mask


@dataclass(frozen=True)
class Split:
    """A bipartition of {1..n}, stored by the block that excludes taxon n."""

    n: int
    mask: int

    def __post_init__(self):
        _check_n(self.n)
        full = (1 << self.n) - 1
        if self.mask <= 0 or self.mask >= full or self.mask & ~full:
            raise InputError(f"block must be a nonempty proper subset of 1..{self.n}")
        object.__setattr__(self, "mask", canonical_mask(self.mask, self.n))

    @property
    def block(self) -> tuple[int, ...]:
        return taxa_of(self.mask)

    @property
    def complement(self) -> tuple[int, ...]:
        return taxa_of(((1 << self.n) - 1) ^ self.mask)

    @property
    def size(self) -> int:
        """Size of the stored block."""
        return _popcount(self.mask)

    @property
    def trivial(self) -> bool:
        k = self.size
        return k == 1 or k == self.n - 1

    def side_without(self, taxon: int) -> int:
        """Mask of the side of the split that does not contain ``taxon``."""
        if self.mask >> (taxon - 1) & 1:
            return ((1 << self.n) - 1) ^ self.mask
        return self.mask

    def sort_key(self):
        return (self.size, self.block)

    def __lt__(self, other):
        return (self.n, self.sort_key()) < (other.n, other.sort_key())

    def __str__(self):
        return ",".join(map(str, self.block)) + "|" + ",".join(map(str, self.complement))

    def __repr__(self):
        return f"Split({self})"


def canonical_split(block: Iterable[int], n: int) -> Split:
    """Build the canonical split with one side equal to ``block``.

    Raises
    ------
    InputError
        If ``block`` is empty, covers all of {1..n}, or names a taxon outside it.
    """
    _check_n(n)
    block = list(block)
    for t in block:
        if not isinstance(t, int) or not 1 <= t <= n:
            raise InputError(f"taxon {t!r} outside 1..{n}")
    return Split(n, mask_of(block))


def trivial_split(taxon: int, n: int) -> Split:
    return Split(n, 1 << (taxon - 1))


def separates(split: Split, i: int, j: int) -> bool:
    """True iff exactly one of ``i``, ``j`` lies in the block of ``split``."""
    if i == j:
        raise InputError("separates() needs two distinct taxa")
    for t in (i, j):
        if not 1 <= t <= split.n:
            raise InputError(f"taxon {t} outside 1..{split.n}")
    return bool((split.mask >> (i - 1) ^ split.mask >> (j - 1)) & 1)


def compatible(a: Split, b: Split) -> bool:
    """Standard pairwise compatibility: some quadrant of the two splits is empty."""
    if a.n != b.n:
        raise InputError("splits on different taxon sets")
    full = (1 << a.n) - 1
    ca, cb = full ^ a.mask, full ^ b.mask
    return not (a.mask & b.mask and a.mask & cb and ca & b.mask and ca & cb)


class CircularOrder:
    """A cyclic order of {1..n} up to rotation and reflection.

    The stored ``sequence`` starts at taxon 1 and has its second entry smaller
    than its last one.  Any rotation or reflection passed to the constructor
    is normalised to that form.
    """

    __slots__ = ("sequence",)

    def __init__(self, sequence: Iterable[int]):
        seq = tuple(sequence)
        n = len(seq)
        if n < 3 or sorted(seq) != list(range(1, n + 1)):
            raise InputError(f"not a permutation of 1..{n}: {seq}")
        k = seq.index(1)
        seq = seq[k:] + seq[:k]
        if seq[1] > seq[-1]:
            seq = (1,) + tuple(reversed(seq[1:]))
        self.sequence = seq

    @classmethod
    def _trusted(cls, seq):
        obj = cls.__new__(cls)
        obj.sequence = seq
        return obj

    @property
    def n(self) -> int:
        return len(self.sequence)

    def positions(self) -> dict[int, int]:
        return {t: p for p, t in enumerate(self.sequence)}

    def adjacent_pairs(self) -> list[tuple[int, int]]:
        s = self.sequence
        return sorted(tuple(sorted((s[p], s[(p + 1) % len(s)]))) for p in range(len(s)))

    def __eq__(self, other):
        return isinstance(other, CircularOrder) and self.sequence == other.sequence

    def __lt__(self, other):
        return self.sequence < other.sequence

    def __hash__(self):
        return hash(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def __len__(self):
        return len(self.sequence)

    def __repr__(self):
        return f"CircularOrder({self.sequence})"

    def __str__(self):
        return "(" + ",".join(map(str, self.sequence)) + ")"


def all_circular_orders(n: int) -> list[CircularOrder]:
    """All (n-1)!/2 circular orders of {1..n}, in lexicographic order."""
    _check_n(n)
    if n > ORDER_SCAN_BOUND:
        raise BoundExceededError("circular order scan", n, ORDER_SCAN_BOUND)
    return [CircularOrder._trusted(seq) for seq in _order_tuples(n)]


@lru_cache(maxsize=None)
def _order_tuples(n):
    return tuple(
        (1,) + tail
        for tail in itertools.permutations(range(2, n + 1))
        if tail[0] < tail[-1]
    )


def _is_contiguous_mask(mask, seq):
    # count boundaries between in-block and out-of-block positions
    n = len(seq)
    flips = 0
    prev = mask >> (seq[-1] - 1) & 1
    for t in seq:
        cur = mask >> (t - 1) & 1
        flips += cur != prev
        prev = cur
    return flips <= 2


def is_contiguous(split: Split, order: CircularOrder) -> bool:
    """True iff the block of ``split`` is a contiguous arc of ``order``."""
    if split.n != order.n:
        raise InputError("split and order on different taxon sets")
    return _is_contiguous_mask(split.mask, order.sequence)


@lru_cache(maxsize=None)
def nontrivial_splits(n: int) -> tuple[Split, ...]:
    """The 2^(n-1)-n-1 nontrivial splits of {1..n} in lexicographic block order."""
    _check_n(n)
    blocks = []
    for size in range(2, n - 1):
        for block in itertools.combinations(range(1, n), size):
            blocks.append(block)
    blocks.sort()
    return tuple(Split(n, mask_of(b)) for b in blocks)


@lru_cache(maxsize=None)
def split_bit_index(n: int) -> dict[int, int]:
    """Map canonical split mask -> bit position in the nontrivial enumeration."""
    return {s.mask: i for i, s in enumerate(nontrivial_splits(n))}


def arc_masks(order_seq) -> list[int]:
    """Canonical masks of all nontrivial splits contiguous in an order."""
    n = len(order_seq)
    out = set()
    for start in range(n):
        m = 0
        for length in range(1, n - 1):
            m |= 1 << (order_seq[(start + length - 1) % n] - 1)
            if length >= 2:
                out.add(canonical_mask(m, n))
    return sorted(out)


@lru_cache(maxsize=None)
def order_bit_table(n: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Order sequences paired with the nontrivial-bit mask of their arcs."""
    if n > _TABLE_BOUND:
        raise BoundExceededError("order contiguity table", n, _TABLE_BOUND)
    index = split_bit_index(n)
    seqs = _order_tuples(n)
    masks = []
    for seq in seqs:
        b = 0
        for m in arc_masks(seq):
            b |= 1 << index[m]
        masks.append(b)
    return seqs, tuple(masks)


class PosetRelation(enum.Enum):
    LESS_THAN = "LessThan"
    GREATER_THAN = "GreaterThan"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    @classmethod
    def of_sets(cls, a, b) -> "PosetRelation":
        a, b = set(a), set(b)
        if a == b:
            return cls.EQUAL
        if a < b:
            return cls.LESS_THAN
        if a > b:
            return cls.GREATER_THAN
        return cls.INCOMPARABLE

    def __str__(self):
        return self.value


class SplitSystem:
    """An immutable set of splits on {1..n}.

    By default every trivial split is added, matching the usual convention
    that split systems contain all of them.  Pass ``add_trivial=False`` to keep
    exactly the splits given (used for decomposition outputs).
    """

    __slots__ = ("n", "splits", "_bits")

    def __init__(self, n: int, splits: Iterable[Split] = (), add_trivial: bool = True):
        _check_n(n)
        splits = set(splits)
        for s in splits:
            if s.n != n:
                raise InputError(f"split {s} is not on 1..{n}")
        if add_trivial:
            splits.update(trivial_split(t, n) for t in range(1, n + 1))
        self.n = n
        self.splits = frozenset(splits)
        self._bits = None

    @classmethod
    def from_blocks(cls, n, blocks, add_trivial=True):
        return cls(n, (canonical_split(b, n) for b in blocks), add_trivial)

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "SplitSystem":
        ordered = nontrivial_splits(n)
        chosen = []
        i = 0
        while bits:
            if bits & 1:
                chosen.append(ordered[i])
            bits >>= 1
            i += 1
        return cls(n, chosen)

    @property
    def includes_trivial(self) -> bool:
        return all(trivial_split(t, self.n) in self.splits for t in range(1, self.n + 1))

    @property
    def nontrivial(self) -> list[Split]:
        return sorted(s for s in self.splits if not s.trivial)

    @property
    def nontrivial_bits(self) -> int:
        """Bitmask of the nontrivial splits over :func:`nontrivial_splits`."""
        if self._bits is None:
            index = split_bit_index(self.n)
            b = 0
            for s in self.splits:
                if not s.trivial:
                    b |= 1 << index[s.mask]
            self._bits = b
        return self._bits

    def sorted(self) -> list[Split]:
        return sorted(self.splits)

    def __contains__(self, split):
        return split in self.splits

    def __iter__(self) -> Iterator[Split]:
        return iter(self.sorted())

    def __len__(self):
        return len(self.splits)

    def __le__(self, other):
        return self.n == other.n and self.splits <= other.splits

    def __eq__(self, other):
        return isinstance(other, SplitSystem) and self.n == other.n and self.splits == other.splits

    def __hash__(self):
        return hash((self.n, self.splits))

    def __repr__(self):
        return f"SplitSystem(n={self.n}, [{'; '.join(map(str, self.sorted()))}])"


def consistent_orders(s: SplitSystem) -> list[CircularOrder]:
    """Every circular order in which all splits of ``s`` are contiguous.

    The scan covers all (n-1)!/2 orders and refuses n above
    :data:`ORDER_SCAN_BOUND`.  An empty result means ``s`` is not circular.
    """
    n = s.n
    if n > ORDER_SCAN_BOUND:
        raise BoundExceededError("consistent order scan", n, ORDER_SCAN_BOUND)
    if n <= _TABLE_BOUND:
        seqs, masks = order_bit_table(n)
        bits = s.nontrivial_bits
        return [CircularOrder._trusted(q) for q, m in zip(seqs, masks) if not bits & ~m]
    wanted = [x.mask for x in s.splits if not x.trivial]
    return [
        CircularOrder._trusted(q)
        for q in _order_tuples(n)
        if all(_is_contiguous_mask(m, q) for m in wanted)
    ]


def poset_compare(s1: SplitSystem, s2: SplitSystem) -> PosetRelation:
    """Relation between two split systems ordered by inclusion."""
    if s1.n != s2.n:
        raise InputError("split systems on different taxon sets")
    return PosetRelation.of_sets(s1.splits, s2.splits)


def count_split_systems(n: int) -> int:
    _check_n(n)
    return 2 ** (2 ** (n - 1) - n - 1)


def enumerate_split_systems(n: int) -> Iterator[SplitSystem]:
    """Yield every split system on {1..n} that contains all trivial splits."""
    _check_n(n)
    if n > SYSTEM_ENUM_BOUND:
        raise BoundExceededError("split system enumeration", n, SYSTEM_ENUM_BOUND)
    for bits in range(1 << len(nontrivial_splits(n))):
        yield SplitSystem.from_bits(n, bits)
