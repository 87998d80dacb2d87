"""Plain-text formats for split systems, networks and distance vectors.

Split systems::

    n=5
    split: 1 2
    split: 1 2 3 : 3/2

Trivial splits are implied unless the header says ``trivial=absent``.  A
file is weighted when any split line carries ``: w``; then every line must,
and no split is implied (trivial splits are listed with their weights).

Networks::

    n=4
    node a
    leaf x1 1
    edge x1 a : 2

Metrics: ``n=<int>`` followed by lower-triangular rows 2..n, row i listing
d(i,1) ... d(i,i-1).

Blank lines and text after ``#`` are ignored everywhere.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Optional

from .exceptions import InputError
from .metrics import DistanceVector, WeightedNetwork, WeightedSplitSystem, as_rational, fmt_rational
from .networks import PhyloNetwork, classify, validate_network
from .splits import SplitSystem, canonical_split, trivial_split


def read_text(path: str) -> str:
    """Contents of ``path``; ``-`` reads standard input."""
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _lines(text):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _header(lines):
    """Parse ``n=<int>`` plus any ``key=value`` tokens on the first line."""
    try:
        no, first = next(lines)
    except StopIteration:
        raise InputError("empty input") from None
    opts = {}
    for tok in first.split():
        key, eq, val = tok.partition("=")
        if not eq:
            raise InputError(f"line {no}: expected key=value header, got {tok!r}")
        opts[key] = val
    if "n" not in opts:
        raise InputError(f"line {no}: header must start with n=<int>")
    try:
        n = int(opts["n"])
    except ValueError:
        raise InputError(f"line {no}: bad taxon count {opts['n']!r}") from None
    if n < 3:
        raise InputError(f"line {no}: n must be >= 3")
    return n, opts


def _split_weight(rest, no):
    body, sep, w = rest.partition(":")
    return body, (as_rational(w.strip()) if sep else None)


def _taxa(body, n, no):
    try:
        taxa = [int(t) for t in body.split()]
    except ValueError:
        raise InputError(f"line {no}: taxa must be integers") from None
    if not taxa:
        raise InputError(f"line {no}: empty split")
    if any(not 1 <= t <= n for t in taxa):
        raise InputError(f"line {no}: taxon outside 1..{n}")
    if len(set(taxa)) != len(taxa):
        raise InputError(f"line {no}: repeated taxon")
    return taxa


@dataclass
class SplitFile:
    n: int
    splits: SplitSystem
    weights: Optional[WeightedSplitSystem]


def parse_splits(text: str) -> SplitFile:
    lines = _lines(text)
    n, opts = _header(lines)
    trivial = opts.get("trivial", "present")
    if trivial not in ("present", "absent"):
        raise InputError(f"trivial= must be 'present' or 'absent', got {trivial!r}")
    for key in opts:
        if key not in ("n", "trivial"):
            raise InputError(f"unknown header key {key!r}")
    found = {}
    for no, line in lines:
        head, _, rest = line.partition(":")
        if head.strip() != "split":
            raise InputError(f"line {no}: expected 'split: ...', got {line!r}")
        body, w = _split_weight(rest, no)
        taxa = _taxa(body, n, no)
        try:
            s = canonical_split(taxa, n)
        except InputError as exc:
            raise InputError(f"line {no}: {exc}") from None
        if s in found:
            raise InputError(f"line {no}: split {s} listed twice")
        found[s] = w
    weighted = [w is not None for w in found.values()]
    if any(weighted):
        if not all(weighted):
            raise InputError("either every split line has a weight or none does")
        ws = WeightedSplitSystem(n, found)
        return SplitFile(n, ws.split_system, ws)
    return SplitFile(n, SplitSystem(n, found, add_trivial=trivial == "present"), None)


def _side(x):
    """The smaller side of a split (the canonical block on ties)."""
    side = x.block if len(x.block) <= len(x.complement) else x.complement
    return " ".join(map(str, side))


def format_splits(s: SplitSystem, weights: Optional[WeightedSplitSystem] = None) -> str:
    """Inverse of :func:`parse_splits` (canonical blocks, sorted)."""
    if weights is not None:
        out = [f"n={weights.n}"]
        out += [f"split: {_side(x)} : {fmt_rational(w)}" for x, w in weights.weights.items()]
        return "\n".join(out) + "\n"
    if s.includes_trivial:
        out = [f"n={s.n}"]
        body = [x for x in s.sorted() if not x.trivial]
    else:
        out = [f"n={s.n} trivial=absent"]
        body = s.sorted()
    out += [f"split: {_side(x)}" for x in body]
    return "\n".join(out) + "\n"


@dataclass
class NetworkFile:
    network: PhyloNetwork
    weights: Optional[WeightedNetwork]


def parse_network(text: str) -> NetworkFile:
    lines = _lines(text)
    n, opts = _header(lines)
    if set(opts) != {"n"}:
        raise InputError("network header takes only n=<int>")
    declared = set()
    labels = {}
    edges = []
    weights = {}
    for no, line in lines:
        body, sep, w = line.partition(":")
        parts = body.split()
        kind = parts[0]
        if kind == "node" and len(parts) == 2 and not sep:
            declared.add(parts[1])
        elif kind == "leaf" and len(parts) == 3 and not sep:
            try:
                taxon = int(parts[2])
            except ValueError:
                raise InputError(f"line {no}: leaf label must be an integer") from None
            if taxon in labels:
                raise InputError(f"line {no}: taxon {taxon} labels two nodes")
            labels[taxon] = parts[1]
            declared.add(parts[1])
        elif kind == "edge" and len(parts) == 3:
            u, v = parts[1], parts[2]
            edges.append((u, v))
            if sep:
                weights[(u, v)] = as_rational(w.strip())
        else:
            raise InputError(f"line {no}: cannot parse {line!r}")
    used = {x for e in edges for x in e}
    unknown = used - declared
    if unknown:
        raise InputError(f"edge uses undeclared node {sorted(unknown)[0]!r}")
    isolated = declared - used
    if isolated:
        raise InputError(f"node {sorted(isolated)[0]!r} has no edges")
    net = validate_network(edges, labels, n)
    if weights:
        if len(weights) != len(edges):
            raise InputError("either every edge has a weight or none does")
        return NetworkFile(net, WeightedNetwork(net, weights))
    return NetworkFile(net, None)


def format_network(N: PhyloNetwork, weights: Optional[WeightedNetwork] = None) -> str:
    label = N.label_of
    out = [f"n={N.n}"]
    out += [f"node {v}" for v in N.nodes if v not in label]
    out += [f"leaf {v} {t}" for t, v in N.leaf_node.items()]
    for u, v in N.edges:
        line = f"edge {u} {v}"
        if weights is not None:
            line += f" : {fmt_rational(weights.weight(u, v))}"
        out.append(line)
    return "\n".join(out) + "\n"


def parse_metric(text: str) -> DistanceVector:
    lines = _lines(text)
    n, opts = _header(lines)
    if set(opts) != {"n"}:
        raise InputError("metric header takes only n=<int>")
    rows = list(lines)
    if len(rows) != n - 1:
        raise InputError(f"expected {n - 1} rows for n={n}, got {len(rows)}")
    values = {}
    for i, (no, line) in enumerate(rows, 2):
        entries = line.split()
        if len(entries) != i - 1:
            raise InputError(f"line {no}: row {i} needs {i - 1} entries, got {len(entries)}")
        for j, x in enumerate(entries, 1):
            values[(j, i)] = as_rational(x)
    return DistanceVector.from_mapping(n, values)


def format_metric(d: DistanceVector) -> str:
    out = [f"n={d.n}"]
    for i in range(2, d.n + 1):
        out.append(" ".join(fmt_rational(d(j, i)) for j in range(1, i)))
    return "\n".join(out) + "\n"


def to_dot(N: PhyloNetwork, weights: Optional[WeightedNetwork] = None, name: str = "network") -> str:
    """Graphviz DOT: leaves are labelled boxes, cycle edges drawn bold."""
    label = N.label_of
    st = classify(N)
    cycle_edges = set()
    for cyc in st.cycles:
        for a in range(len(cyc)):
            u, v = cyc[a], cyc[(a + 1) % len(cyc)]
            cycle_edges.add(frozenset((u, v)))
    out = [f"graph {name} {{"]
    for v in N.nodes:
        if v in label:
            out.append(f'  "{v}" [shape=box, label="{label[v]}"];')
        else:
            out.append(f'  "{v}" [shape=point];')
    for u, v in N.edges:
        attrs = []
        if weights is not None:
            attrs.append(f'label="{fmt_rational(weights.weight(u, v))}"')
        if frozenset((u, v)) in cycle_edges:
            attrs.append("style=bold")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        out.append(f'  "{u}" -- "{v}"{suffix};')
    out.append("}")
    return "\n".join(out) + "\n"


def trivial_weights(n: int, w=1) -> dict:
    """Weight ``w`` on each trivial split, a convenience for building inputs."""
    return {trivial_split(t, n): as_rational(w) for t in range(1, n + 1)}


__all__ = [
    "read_text",
    "SplitFile",
    "parse_splits",
    "format_splits",
    "NetworkFile",
    "parse_network",
    "format_network",
    "parse_metric",
    "format_metric",
    "to_dot",
    "trivial_weights",
]
