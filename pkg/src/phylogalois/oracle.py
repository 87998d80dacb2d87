"""Slow, definition-literal reference implementations and verification suites.

Everything here deliberately avoids the fast paths it is used to check:
displayed splits come from scanning edge subsets, circular decomposition
from a square linear solve, and minimal networks from a scan over all
classes.  The suites return a :class:`Report` instead of raising.
"""

from __future__ import annotations

import csv
import io
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from .circular import circular_systems, closure, ell, is_outer_path
from .exceptions import BoundExceededError, InputError, KalmansonError
from .metrics import (
    DistanceVector,
    WeightedSplitSystem,
    bridge_weights,
    circular_decompose,
    distance_from_network,
    distance_from_splits,
    l_w,
    random_weighted_network,
    s_w,
    total_weight,
)
from .networks import PhyloNetwork, consistent_orders_network, displayed_splits, to_pc_tree
from .pctree import PCTree, enumerate_pc_trees
from .polytope import (
    binary_vector_closed_form,
    bme_vertices,
    face_vertices,
    minimize,
    predicted_minimizers,
)
from .splits import CircularOrder, Split, SplitSystem

ORACLE_CUT_BOUND = 8
ORACLE_CLASS_BOUND = 6


@dataclass
class Check:
    count: int = 0
    violations: list = field(default_factory=list)

    def record(self, ok: bool, detail: str = ""):
        self.count += 1
        if not ok:
            self.violations.append(detail)


@dataclass
class Report:
    """Named checks with their counts and violation details."""

    title: str
    params: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def check(self, name: str) -> Check:
        return self.checks.setdefault(name, Check())

    @property
    def ok(self) -> bool:
        return all(not c.violations for c in self.checks.values())

    def summary(self) -> str:
        head = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.title} ({head})" if head else self.title]
        for name, c in self.checks.items():
            status = "ok" if not c.violations else "FAIL"
            lines.append(f"  {status:4} {name}: {c.count} checked, {len(c.violations)} violations")
        lines.extend(f"  note: {x}" for x in self.notes)
        lines.append("result: " + ("all checks passed" if self.ok else "violations found"))
        return "\n".join(lines)

    def violations_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "detail"])
        for name, c in self.checks.items():
            for v in c.violations:
                w.writerow([name, v])
        return buf.getvalue()


# -- literal definitions ----------------------------------------------------


def oracle_displayed_splits(N: PhyloNetwork, max_cut: int = 3) -> SplitSystem:
    """Splits produced by minimal edge cuts, scanned over all edge subsets of
    size <= ``max_cut``."""
    if N.n > ORACLE_CUT_BOUND:
        raise BoundExceededError("oracle cut scan", N.n, ORACLE_CUT_BOUND)
    g = N.graph
    edges = list(N.edges)
    full = (1 << N.n) - 1
    found = {}
    for size in range(1, max_cut + 1):
        for cut in itertools.combinations(edges, size):
            h = nx.Graph(g)
            h.remove_edges_from(cut)
            comps = list(nx.connected_components(h))
            if len(comps) != 2:
                continue
            mask = N.leaf_mask(comps[0])
            if mask in (0, full):
                continue
            # minimal: no proper nonempty sub-cut already gives the same split
            key = Split(N.n, mask).mask
            cset = set(cut)
            if any(set(c) < cset for c in found.get(key, [])):
                continue
            found.setdefault(key, []).append(cut)
    return SplitSystem(N.n, (Split(N.n, m) for m in found))


def oracle_decompose(d: DistanceVector, c: CircularOrder) -> WeightedSplitSystem:
    """Solve the square system mapping arc weights of ``c`` to distances.

    Unknowns are the n(n-1)/2 arcs avoiding the first element of ``c``;
    the equation for pair (i, j) sums the arcs separating i and j.
    """
    n = d.n
    seq = c.sequence
    arcs = []
    for i in range(1, n):
        for j in range(i, n):
            arcs.append(sum(1 << (t - 1) for t in seq[i:j + 1]))
    rows = []
    for (a, b), dist in d.items():
        row = [Fraction(int(bool((m >> (a - 1) ^ m >> (b - 1)) & 1))) for m in arcs]
        rows.append(row + [dist])
    size = len(arcs)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular arc system; this indicates a bug")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    weights = {Split(n, m): rows[k][size] for k, m in enumerate(arcs)}
    bad = {s: w for s, w in weights.items() if w < 0}
    if bad:
        s, w = min(bad.items())
        raise KalmansonError(f"negative solution weight {w} on split {s}: not Kalmanson for {c}")
    return WeightedSplitSystem(n, weights)


def oracle_min_network(s: SplitSystem) -> PCTree:
    """Least 1-nested class displaying ``s``, by scanning every class."""
    if s.n > ORACLE_CLASS_BOUND:
        raise BoundExceededError("oracle class scan", s.n, ORACLE_CLASS_BOUND)
    above = [t for t in enumerate_pc_trees(s.n) if s.splits <= t.splits().splits]
    if not above:
        raise InputError("no 1-nested class displays this split system")
    least = min(above, key=lambda t: len(t.splits()))
    mine = least.splits().splits
    if not all(mine <= t.splits().splits for t in above):
        raise ArithmeticError("no least class exists; this contradicts the adjunction")
    return least


# -- suites -------------------------------------------------------------------


def oracle_galois_check(n: int, seed: int = 0, samples: int = 10_000) -> Report:
    """Unweighted Galois connection checks.

    For n <= 5 every (system, class) pair is checked; for n = 6 ``samples``
    seeded pairs.  Also checks ell(Sigma(N)) = N, injectivity of Sigma,
    surjectivity of ell and (n = 6) the non-injectivity witness.
    """
    if n > ORACLE_CLASS_BOUND:
        raise BoundExceededError("Galois check", n, ORACLE_CLASS_BOUND)
    rng = random.Random(seed)
    report = Report("unweighted Galois connection", {"n": n, "seed": seed})
    systems = circular_systems(n)
    classes = enumerate_pc_trees(n)
    sigma = {t: t.splits().splits for t in classes}
    ell_cache = {}

    def ell_splits(s):
        if s not in ell_cache:
            ell_cache[s] = ell(s).splits().splits
        return ell_cache[s]

    if n <= 5:
        pairs = ((s, t) for s in systems for t in classes)
        report.params["pairs"] = f"{len(systems)}x{len(classes)}"
    else:
        pairs = ((rng.choice(systems), rng.choice(classes)) for _ in range(samples))
        report.params["pairs"] = f"{samples} sampled"
    adj = report.check("L(s) <= N iff s <= Sigma(N)")
    for s, t in pairs:
        left = ell_splits(s) <= sigma[t]
        right = s.splits <= sigma[t]
        adj.record(left == right, f"{s!r} vs {t.key}")

    ident = report.check("L(Sigma(N)) = N")
    for t in classes:
        got = ell(t.splits())
        ident.record(got == t, f"{t.key} -> {got.key}")

    inj = report.check("Sigma injective")
    seen = {}
    for t in classes:
        prev = seen.setdefault(frozenset(sigma[t]), t)
        inj.record(prev == t, f"{prev.key} and {t.key} share splits")

    if n <= 5:
        surj = report.check("L surjective")
        hit = {ell(s) for s in systems}
        for t in classes:
            surj.record(t in hit, f"{t.key} not reached")

    if n == 6:
        wit = report.check("L not injective (witness)")
        two_arcs = SplitSystem.from_blocks(6, [(i, i % 6 + 1) for i in range(1, 7)])
        full = closure(two_arcs)
        target = PCTree(6, ("C", 2, 3, 4, 5, 6))
        ok = two_arcs != full and ell(two_arcs) == ell(full) == target
        wit.record(ok, "2-arc system and its closure should both map to the 6-cycle")
        report.notes.append(f"witness: {len(two_arcs)} vs {len(full)} splits, both -> {target.key}")
    return report


def _instance(rng, ns):
    n = rng.choice(ns)
    binary = rng.random() < 0.5
    contract = rng.choice((0.0, 0.5))
    return random_weighted_network(n, rng, binary=binary, contract=contract)


def weighted_suite(instances: int = 200, seed: int = 0, ns=(5, 6, 7, 8)) -> Report:
    """Randomised checks of the weighted maps S_w and L_w."""
    rng = random.Random(seed)
    report = Report("weighted Galois connection", {"instances": instances, "seed": seed, "n": ",".join(map(str, ns))})
    names = [
        "d_{S_w(N)} = d_N",
        "S_w(N) outer-path",
        "L_w(S_w(N)) <= N",
        "S_w(L_w(s)) = s",
        "bridge weight non-decreasing",
        "decomposition order-independent",
        "closed form = linear solve",
    ]
    for name in names:
        report.check(name)
    for idx in range(instances):
        wn = _instance(rng, ns)
        tag = f"instance {idx} n={wn.n}"
        dn = distance_from_network(wn)
        sw = s_w(wn)
        report.check(names[0]).record(distance_from_splits(sw) == dn, tag)
        report.check(names[1]).record(is_outer_path(sw.split_system), tag)
        back = l_w(sw)
        le = distance_from_network(back) == dn and displayed_splits(back.network).splits <= displayed_splits(wn.network).splits
        report.check(names[2]).record(le, tag)
        report.check(names[3]).record(s_w(back) == sw, tag)
        bw = bridge_weights(wn)
        report.check(names[4]).record(all(sw.weights.get(x, 0) >= w for x, w in bw.items()), tag)
        orders = consistent_orders_network(wn.network)
        report.check(names[5]).record(all(circular_decompose(dn, c) == sw for c in orders), tag)
        report.check(names[6]).record(oracle_decompose(dn, orders[-1]) == sw, tag)
    return report


def polytope_suite(instances: int = 100, seed: int = 0, ns=(5, 6)) -> Report:
    """Checks of the BME(n, k) minimisation results on random weighted networks.

    The minimiser theorem is checked for every k.  Where some binary k-bridge
    class refines S_w(N), the argmin must equal those classes and the minimum
    must be 2^(k+1) W; where none does, the minimum must exceed 2^(k+1) W.
    The smallest-unique-k statement is checked when L(S_w(N)) is binary;
    otherwise no k may have a single minimiser.
    """
    rng = random.Random(seed)
    report = Report("BME polytope", {"instances": instances, "seed": seed, "n": ",".join(map(str, ns))})
    cf = report.check("closed-form vector = order-sum vector")
    for n in ns:
        for k in range(n - 2):
            for t, x in bme_vertices(n, k):
                cf.record(binary_vector_closed_form(t) == x, f"{t.key} k={k}")
    names = [
        "argmin = predicted minimisers",
        "min = 2^(k+1) W",
        "min > 2^(k+1) W when no refinement exists",
        "face F_k(N) inside F_k(L(S_w(N)))",
        "smallest unique k = bridges of L(S_w(N))",
        "no unique minimiser when L(S_w(N)) is not binary",
    ]
    for name in names:
        report.check(name)
    covered = uncovered = 0
    for idx in range(instances):
        wn = _instance(rng, ns)
        n = wn.n
        d = distance_from_network(wn)
        sw = s_w(wn)
        bound = 2 * total_weight(sw)
        under = to_pc_tree(wn.network)
        ext = ell(sw.split_system)
        first_unique = None
        for k in range(n - 2):
            tag = f"instance {idx} n={n} k={k}"
            argmin, value = minimize(d, n, k)
            pred = predicted_minimizers(wn, k)
            if pred:
                covered += 1
                report.check(names[0]).record(argmin == sorted(pred), tag)
                report.check(names[1]).record(value == bound, f"{tag}: {value} vs {bound}")
            else:
                uncovered += 1
                report.check(names[2]).record(value > bound, f"{tag}: {value} vs {bound}")
            if first_unique is None and len(argmin) == 1:
                first_unique = k
            if k <= under.nontrivial_bridges:
                try:
                    inside = set(face_vertices(under, k)) <= set(face_vertices(ext, k))
                except InputError as exc:
                    inside = False
                    tag += f": {exc}"
                report.check(names[3]).record(inside, tag)
            bound *= 2
        tag = f"instance {idx} n={n}: {ext.key}, first unique k={first_unique}"
        if ext.is_binary:
            report.check(names[4]).record(first_unique == ext.nontrivial_bridges, tag)
        else:
            report.check(names[5]).record(first_unique is None, tag)
    report.notes.append(f"(instance, k) pairs with a refining class: {covered}, without: {uncovered}")
    return report


def displayed_splits_agreement(n: int) -> Report:
    """Fast displayed splits against the cut scan on every class at ``n``."""
    from .networks import from_pc_tree

    report = Report("displayed splits vs cut scan", {"n": n})
    c = report.check("displayed_splits = oracle")
    for t in enumerate_pc_trees(n):
        N = from_pc_tree(t)
        c.record(displayed_splits(N) == oracle_displayed_splits(N), t.key)
    return report
