import io
import sys
from pathlib import Path

import pytest

from phylogalois.cli import main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_circular(capsys):
    assert run(capsys, "count", "circular", "-n", 5)[:2] == (0, "218\n")


def test_count_bound(capsys):
    code, _, err = run(capsys, "count", "networks", "-n", 9)
    assert code == 3 and "bound" in err


def test_sigma_quartet(capsys):
    code, out, _ = run(capsys, "sigma", DATA / "quartet.net")
    assert code == 0
    assert out == "n=4\nsplit: 1 2\n"


def test_bme_minimize_quartet(capsys):
    code, out, _ = run(capsys, "bme-minimize", DATA / "quartet.metric", "-n", 4, "-k", 1)
    assert code == 0
    assert out.splitlines()[:2] == ["value: 20", "minimisers: 1"]


def test_ell_then_sigma_round_trip(capsys, monkeypatch, tmp_path):
    code, out, _ = run(capsys, "ell", DATA / "two_arcs6.splits")
    assert code == 0 and out.startswith("# pc-tree 1:C(2,3,4,5,6)")
    code, out2, _ = run(capsys, "sigma", "-", stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and len(out2.splitlines()) == 10


def test_sigma_then_ell_reproduces_tree(capsys, monkeypatch):
    _, splits, _ = run(capsys, "sigma", DATA / "four_cycle.net")
    _, out, _ = run(capsys, "ell", "-", stdin=splits, monkeypatch=monkeypatch)
    assert out.startswith("# pc-tree 1:C(2,3,4)")


def test_weighted_maps(capsys, monkeypatch):
    _, splits, _ = run(capsys, "sw", DATA / "four_cycle.net")
    assert "split: 1 2 : 1" in splits
    code, net, _ = run(capsys, "ellw", "-", stdin=splits, monkeypatch=monkeypatch)
    assert code == 0 and net.count(": 1") == 8


def test_decompose_five_cycle(capsys):
    code, out, _ = run(capsys, "decompose", DATA / "five_cycle.metric")
    assert code == 0
    assert out.count(": 1/2") == 5 and out.count(": 1\n") == 5


def test_property_false_exit(capsys):
    assert run(capsys, "check-additive", DATA / "four_cycle.metric")[0] == 1
    assert run(capsys, "check-additive", DATA / "quartet.metric")[0] == 0
    code, out, _ = run(capsys, "check-kalmanson", DATA / "four_cycle.metric", "--order", "1,3,2,4")
    assert code == 1 and "violated" in out


def test_input_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.net"
    bad.write_text("n=4\nnonsense\n")
    assert run(capsys, "sigma", bad)[0] == 2
    assert run(capsys, "sigma", tmp_path / "missing.net")[0] == 2


def test_face_k_too_large(capsys):
    code, _, err = run(capsys, "face", DATA / "quartet.net", "-k", 2)
    assert code == 2 and "k <= m" in err


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "polytope", "-n", 5, "--instances", 3, "--seed", 4)
    second = run(capsys, "verify", "polytope", "-n", 5, "--instances", 3, "--seed", 4)
    assert first == second and first[0] == 0


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", DATA / "four_cycle.net")
    assert code == 0 and out.startswith("graph network {")


def test_enumerate_binary(capsys):
    code, out, _ = run(capsys, "enumerate", "binary", "-n", 5, "-k", 2)
    assert code == 0 and len(out.splitlines()) == 15
