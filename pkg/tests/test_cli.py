import itertools
import json

import pytest

from almostplanar import cli
from almostplanar import verify as verify_mod
from almostplanar.families import gen_bicycle, gen_k33_chain, gen_mobius
from almostplanar.graph import Graph, are_isomorphic, format_edge_list, parse_edge_list


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_bicycle_stdout(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family", "bicycle", "--n", "5")
    assert code == 0
    g = parse_edge_list(out)
    assert g.n == 5 and g.m == 10  # K5


def test_gen_mobius_counts(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family", "mobius", "--k", "3")
    assert code == 0
    g = parse_edge_list(out)
    assert g.n == 6 and g.m == 9


def test_gen_h1_writes_files(tmp_path, capsys):
    prefix = tmp_path / "h"
    code, _, err = run_cli(
        capsys,
        "gen", "--family", "h1", "--p", "1", "--q", "1", "--r", "1",
        "--out", str(prefix), "--dot",
    )
    assert code == 0
    g = parse_edge_list((tmp_path / "h.edges").read_text())
    assert g.n == 6 and g.m == 12  # K33 plus all three chords
    roles = json.loads((tmp_path / "h.roles.json").read_text())
    assert roles["schema"] == 1
    assert roles["family"] == {"family": "h1", "p": 1, "q": 1, "r": 1, "deleted": []}
    dot = (tmp_path / "h.dot").read_text()
    assert dot.startswith("graph G {")


def test_gen_invalid_spec_exits_2(capsys):
    code, _, err = run_cli(capsys, "gen", "--family", "mobius", "--k", "1")
    assert code == 2
    assert "k >= 3" in err


def test_gen_roundtrip_isomorphic(tmp_path, capsys):
    prefix = tmp_path / "g"
    code, _, _ = run_cli(
        capsys,
        "gen", "--family", "bicycle", "--n", "8",
        "--remove-s", "2,4", "--remove-t", "3",
        "--out", str(prefix),
    )
    assert code == 0
    g = parse_edge_list((tmp_path / "g.edges").read_text())
    want = gen_bicycle(8, {2, 4}, {3}).graph
    assert are_isomorphic(g, want)


def test_spectrum_oracle(tmp_path, capsys):
    path = tmp_path / "v8.edges"
    path.write_text(format_edge_list(gen_mobius(4).graph))
    code, out, _ = run_cli(capsys, "spectrum", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["lengths"] == [4, 5, 6, 7, 8]
    assert data["pancyclic"] is False and data["hamiltonian"] is True


def test_spectrum_both_agreement(tmp_path, capsys):
    from almostplanar.families import gen_a_graph

    path = tmp_path / "a8.edges"
    path.write_text(format_edge_list(gen_a_graph(8).graph))
    code, out, _ = run_cli(capsys, "spectrum", str(path), "--method", "both")
    assert code == 0
    data = json.loads(out)
    assert data["lengths"] == [4, 6, 8]
    assert data["constructive_lengths"] == [4, 6, 8]
    assert data["agreement"] is True


def test_spectrum_constructive_witnesses_in_input_labels(tmp_path, capsys):
    from almostplanar.oracle import validate_cycle

    g = gen_mobius(4).graph.relabel({v: (v * 3) % 8 + 1 for v in range(1, 9)})
    path = tmp_path / "shuffled.edges"
    path.write_text(format_edge_list(g))
    code, out, _ = run_cli(
        capsys, "spectrum", str(path), "--method", "constructive", "--witnesses"
    )
    assert code == 0
    data = json.loads(out)
    assert data["lengths"] == [4, 5, 6, 7, 8]
    for length, seq in data["witnesses"].items():
        assert validate_cycle(g, seq, int(length))


def test_spectrum_both_mismatch_exit_1(tmp_path, capsys, monkeypatch):
    # a broken oracle must be caught by the constructive comparison
    from almostplanar.families import gen_a_graph
    from almostplanar.oracle import CycleSpectrum

    monkeypatch.setattr(
        cli, "cycle_spectrum", lambda g, **kw: CycleSpectrum(g.n, frozenset({4, 8}))
    )
    path = tmp_path / "a8.edges"
    path.write_text(format_edge_list(gen_a_graph(8).graph))
    code, out, err = run_cli(capsys, "spectrum", str(path), "--method", "both")
    assert code == 1
    assert json.loads(out)["agreement"] is False
    assert "mismatch" in err


def test_spectrum_unclassifiable_exit_4(tmp_path, capsys):
    path = tmp_path / "w.edges"
    from almostplanar.families import gen_wheel

    path.write_text(format_edge_list(gen_wheel(6).graph))
    code, _, err = run_cli(capsys, "spectrum", str(path), "--method", "constructive")
    assert code == 4
    assert "gate" in err


def test_spectrum_cap_exit_3(tmp_path, capsys):
    path = tmp_path / "big.edges"
    path.write_text(format_edge_list(Graph(19, frozenset())))
    code, _, err = run_cli(capsys, "spectrum", str(path))
    assert code == 3
    assert "too large" in err


def test_classify_k33(tmp_path, capsys, k33):
    path = tmp_path / "k33.edges"
    path.write_text(format_edge_list(k33))
    code, out, _ = run_cli(capsys, "classify", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["gate"] == "almost-planar"
    assert data["spec"] == {"family": "mobius", "k": 3}
    assert data["predicted"]["pancyclic"] is False


def test_classify_k6(tmp_path, capsys, k6):
    path = tmp_path / "k6.edges"
    path.write_text(format_edge_list(k6))
    code, out, _ = run_cli(capsys, "classify", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["gate"] == "not-almost-planar"


def test_export_dot(tmp_path, capsys, k4):
    path = tmp_path / "k4.edges"
    path.write_text(format_edge_list(k4))
    code, out, _ = run_cli(capsys, "export", str(path))
    assert code == 0
    assert out.startswith("graph G {")
    assert "1 -- 2;" in out


def test_verify_small_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "mobius", "--max-n", "10")
    assert code == 0
    assert "PASS  mobius-spectra" in out


def test_verify_theorems_suite_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "theorems", "--max-n", "8")
    assert code == 0
    assert "PASS  pancyclic-iff-triangle" in out
    assert "PASS  almost-planarity" in out
    assert "PASS  builder-oracle-equivalence" in out
    assert "PASS  errata-ledger" in out


def test_verify_mutation_writes_counterexample(tmp_path, capsys, monkeypatch):
    # fault injection: a corrupted Möbius generator must fail the suite
    # and leave a counterexample file behind
    real = verify_mod.families.gen_mobius

    def corrupted(k):
        # adding chord (1,3) to V_2k (k >= 4) creates a triangle 1-2-3,
        # which no Möbius ladder spectrum allows
        inst = real(k)
        g = inst.graph
        broken = Graph(g.n, g.edges | {(1, 3)})
        return type(inst)(broken, inst.family, inst.vertex_roles, inst.edge_roles)

    monkeypatch.setattr(verify_mod.families, "gen_mobius", corrupted)
    code, out, err = run_cli(
        capsys,
        "verify", "--suite", "mobius", "--max-n", "8", "--out-dir", str(tmp_path),
    )
    assert code == 1
    assert "FAIL" in out
    files = list(tmp_path.glob("counterexample_*.edges"))
    assert files
    parse_edge_list(files[0].read_text())  # well-formed


def test_edge_list_round_trip_across_families(tmp_path):
    from almostplanar.families import (
        H2,
        Mobius,
        Wheel,
        a_graph_spec,
        generate,
    )

    specs = [
        Mobius(6),
        a_graph_spec(11),
        Wheel(9),
        H2(3, 2, 2, frozenset({"ab", "bc", "ac"})),
    ]
    for spec in specs:
        g = generate(spec).graph
        path = tmp_path / "g.edges"
        path.write_text(format_edge_list(g))
        assert parse_edge_list(path.read_text()) == g


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["gen", "--family", "mobius", "--k", "3", "--bogus"])
    assert exc.value.code == 2
