"""Command-line interface: ``phylogalois <subcommand> ...``.

Exit codes: 0 success, 1 the checked property is false (including inputs
that are well formed but not 1-nested, not circular or not Kalmanson),
2 malformed input or usage, 3 a size bound was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import io as pio
from .circular import circular_systems, count_circular_systems, ell
from .exceptions import (
    BoundExceededError,
    InputError,
    KalmansonError,
    NotCircularError,
    NotOneNestedError,
)
from .metrics import (
    circular_decompose,
    distance_from_network,
    distance_from_splits,
    find_kalmanson_orders,
    fmt_rational,
    is_additive,
    kalmanson_violation,
    l_w,
    s_w,
)
from .networks import classify, displayed_splits, from_pc_tree, to_pc_tree
from .oracle import (
    displayed_splits_agreement,
    oracle_displayed_splits,
    oracle_galois_check,
    polytope_suite,
    weighted_suite,
)
from .pctree import (
    binary_one_nested_count,
    count_one_nested_classes,
    enumerate_binary_one_nested,
    enumerate_pc_trees,
)
from .polytope import bme_vertices, face_vertices, minimize, vertex_table
from .splits import CircularOrder, count_split_systems, enumerate_split_systems

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


def _kind(text):
    for line in text.splitlines():
        word = line.split("#", 1)[0].strip().split(":")[0].split()
        if not word or word[0].startswith("n="):
            continue
        if word[0] == "split":
            return "splits"
        if word[0] in ("node", "leaf", "edge"):
            return "network"
        return "metric"
    return "splits"


def _network(path, weighted=False):
    nf = pio.parse_network(pio.read_text(path))
    if weighted and nf.weights is None:
        raise InputError("this command needs edge weights (edge u v : w)")
    return nf


def _splits(path, weighted=False):
    sf = pio.parse_splits(pio.read_text(path))
    if weighted and sf.weights is None:
        raise InputError("this command needs split weights (split: ... : w)")
    return sf


def _order(text, n):
    try:
        seq = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad order {text!r}") from None
    c = CircularOrder(seq)
    if c.n != n:
        raise InputError(f"order has {c.n} taxa, metric has {n}")
    return c


def _line_of(s):
    parts = [str(x) for x in s.nontrivial]
    return " ".join(parts) if parts else "-"


def _bool(flag):
    return "true" if flag else "false"


# -- subcommands ------------------------------------------------------------


def cmd_validate(a, out):
    nf = _network(a.file)
    st = classify(nf.network)
    out.write(f"valid network: n={nf.network.n}, nodes={len(nf.network.nodes)}, edges={len(nf.network.edges)}\n")
    for line in st.summary_lines():
        out.write(line + "\n")
    return EXIT_OK if st.is_one_nested else EXIT_FALSE


def cmd_sigma(a, out):
    net = _network(a.file).network
    s = oracle_displayed_splits(net) if a.oracle else displayed_splits(net)
    out.write(pio.format_splits(s))
    return EXIT_OK


def cmd_ell(a, out):
    sf = _splits(a.file)
    t = ell(sf.splits)
    out.write(f"# pc-tree {t.key}\n")
    out.write(pio.format_network(from_pc_tree(t)))
    return EXIT_OK


def cmd_ellw(a, out):
    sf = _splits(a.file, weighted=True)
    wn = l_w(sf.weights)
    out.write(f"# pc-tree {to_pc_tree(wn.network).key}\n")
    out.write(pio.format_network(wn.network, wn))
    return EXIT_OK


def cmd_sw(a, out):
    wn = _network(a.file, weighted=True).weights
    ws = s_w(wn)
    out.write(pio.format_splits(ws.split_system, ws))
    return EXIT_OK


def cmd_dist(a, out):
    text = pio.read_text(a.file)
    if _kind(text) == "network":
        nf = pio.parse_network(text)
        if nf.weights is None:
            raise InputError("dist needs edge weights")
        d = distance_from_network(nf.weights)
    else:
        sf = pio.parse_splits(text)
        if sf.weights is None:
            raise InputError("dist needs split weights")
        d = distance_from_splits(sf.weights)
    out.write(pio.format_metric(d))
    return EXIT_OK


def cmd_check_additive(a, out):
    ok = is_additive(pio.parse_metric(pio.read_text(a.file)))
    out.write(f"additive: {_bool(ok)}\n")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_check_kalmanson(a, out):
    d = pio.parse_metric(pio.read_text(a.file))
    if a.order:
        c = _order(a.order, d.n)
        bad = kalmanson_violation(d, c)
        out.write(f"kalmanson for {c}: {_bool(bad is None)}\n")
        if bad is not None:
            out.write(f"violated by quadruple {' '.join(map(str, bad))}\n")
        return EXIT_OK if bad is None else EXIT_FALSE
    orders = find_kalmanson_orders(d)
    out.write(f"kalmanson orders: {len(orders)}\n")
    for c in orders:
        out.write(f"{c}\n")
    return EXIT_OK if orders else EXIT_FALSE


def cmd_decompose(a, out):
    d = pio.parse_metric(pio.read_text(a.file))
    if a.order:
        c = _order(a.order, d.n)
    else:
        orders = find_kalmanson_orders(d)
        if not orders:
            raise KalmansonError("no circular order is Kalmanson for this metric")
        c = orders[0]
    ws = circular_decompose(d, c)
    out.write(f"# order {c}\n")
    out.write(pio.format_splits(ws.split_system, ws))
    return EXIT_OK


def cmd_enumerate(a, out):
    n = a.n
    if a.what == "pctrees":
        for t in enumerate_pc_trees(n):
            out.write(t.key + "\n")
    elif a.what == "binary":
        ks = [a.k] if a.k is not None else range(n - 2)
        for k in ks:
            for t in enumerate_binary_one_nested(n, k):
                out.write(f"{k} {t.key}\n")
    elif a.what == "circular":
        for s in circular_systems(n):
            out.write(_line_of(s) + "\n")
    else:
        for s in enumerate_split_systems(n):
            out.write(_line_of(s) + "\n")
    return EXIT_OK


def cmd_count(a, out):
    n = a.n
    if a.what == "networks":
        value = count_one_nested_classes(n)
    elif a.what == "circular":
        value = count_circular_systems(n)
    elif a.what == "systems":
        value = count_split_systems(n)
    else:
        if a.k is None:
            raise InputError("count binary needs -k")
        value = binary_one_nested_count(n, a.k)
    out.write(f"{value}\n")
    return EXIT_OK


def cmd_bme_vertices(a, out):
    rows = bme_vertices(a.n, a.k)
    if a.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["network", "vector"])
        for t, x in rows:
            w.writerow([t.key, str(x)])
    else:
        for t, x in rows:
            out.write(f"{t.key} {x}\n")
    return EXIT_OK


def cmd_bme_minimize(a, out):
    d = pio.parse_metric(pio.read_text(a.file))
    if a.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["network", "vector", "dot"])
        for key, vec, dot in vertex_table(d, a.n, a.k):
            w.writerow([key, vec, fmt_rational(dot)])
        return EXIT_OK
    argmin, value = minimize(d, a.n, a.k)
    out.write(f"value: {fmt_rational(value)}\n")
    out.write(f"minimisers: {len(argmin)}\n")
    for t in argmin:
        out.write(t.key + "\n")
    return EXIT_OK


def cmd_face(a, out):
    t = to_pc_tree(_network(a.file).network)
    verts = face_vertices(t, a.k)
    out.write(f"# face of {t.key}, k={a.k}: {len(verts)} vertices\n")
    for v in verts:
        out.write(v.key + "\n")
    return EXIT_OK


def cmd_verify(a, out):
    if a.suite == "galois":
        report = oracle_galois_check(a.n or 5, seed=a.seed, samples=a.samples)
    elif a.suite == "cuts":
        report = displayed_splits_agreement(a.n or 5)
    elif a.suite == "wgalois":
        ns = (a.n,) if a.n else (5, 6, 7, 8)
        report = weighted_suite(a.instances or 200, seed=a.seed, ns=ns)
    else:
        ns = (a.n,) if a.n else (5, 6)
        report = polytope_suite(a.instances or 100, seed=a.seed, ns=ns)
    out.write(report.summary() + "\n")
    if a.csv:
        with open(a.csv, "w", encoding="utf-8") as fh:
            fh.write(report.violations_csv())
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_export_dot(a, out):
    text = pio.read_text(a.file)
    if _kind(text) == "network":
        nf = pio.parse_network(text)
        out.write(pio.to_dot(nf.network, nf.weights))
    else:
        sf = pio.parse_splits(text)
        if sf.weights is not None:
            wn = l_w(sf.weights)
            out.write(pio.to_dot(wn.network, wn))
        else:
            out.write(pio.to_dot(from_pc_tree(ell(sf.splits))))
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="phylogalois", description="1-nested networks, circular split systems and BME polytopes.")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised suites (default 0)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file_help=None):
        sp = sub.add_parser(name, help=help_)
        if file_help:
            sp.add_argument("file", help=file_help + " ('-' for stdin)")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a network file and report its structure", "network file")
    sp = add("sigma", cmd_sigma, "displayed splits of a 1-nested network", "network file")
    sp.add_argument("--oracle", action="store_true", help="use the edge-cut scan (any network)")
    add("ell", cmd_ell, "exterior 1-nested network of a circular split system", "split-system file")
    add("ellw", cmd_ellw, "weighted exterior network L_w", "weighted split-system file")
    add("sw", cmd_sw, "weighted circular split system S_w of a weighted network", "weighted network file")
    add("dist", cmd_dist, "distance vector of a weighted network or split system", "weighted network or split file")
    add("check-additive", cmd_check_additive, "four-point condition", "metric file")
    sp = add("check-kalmanson", cmd_check_kalmanson, "Kalmanson condition for an order, or list orders", "metric file")
    sp.add_argument("--order", help="circular order, e.g. 1,2,3,4")
    sp = add("decompose", cmd_decompose, "weighted circular split system of a Kalmanson metric", "metric file")
    sp.add_argument("--order", help="circular order to use (default: first Kalmanson order)")

    sp = add("enumerate", cmd_enumerate, "list classes or split systems")
    sp.add_argument("what", choices=["pctrees", "binary", "circular", "systems"])
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int)
    sp = add("count", cmd_count, "count classes or split systems")
    sp.add_argument("what", choices=["networks", "circular", "systems", "binary"])
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int)

    sp = add("bme-vertices", cmd_bme_vertices, "vertices of BME(n, k)")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--csv", action="store_true")
    sp = add("bme-minimize", cmd_bme_minimize, "minimise x . d over BME(n, k)", "metric file")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--csv", action="store_true", help="print every vertex with its dot product")
    sp = add("face", cmd_face, "vertices of the face F_k of a network", "network file")
    sp.add_argument("-k", type=int, required=True)

    sp = add("verify", cmd_verify, "run a verification suite")
    sp.add_argument("suite", choices=["galois", "wgalois", "polytope", "cuts"])
    sp.add_argument("-n", type=int)
    sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sp.add_argument("--instances", type=int)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--csv", help="write violations as CSV to this path")

    add("export-dot", cmd_export_dot, "Graphviz DOT of a network (or of L of a split system)", "network or split file")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    out = sys.stdout
    try:
        return a.func(a, out)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (NotOneNestedError, NotCircularError, KalmansonError) as exc:
        print(f"false: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
