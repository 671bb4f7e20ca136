from pathlib import Path

import pytest

from dcnconn.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_dcell_matches_fixture(capsys):
    code, out, _ = run(capsys, "gen", "dcell", "--m", "1", "--n", "4")
    assert code == 0
    assert out == (FIXTURES / "dcell_m1_n4.edgelist").read_text()


def test_gen_bcdc_matches_fixture(capsys):
    code, out, _ = run(capsys, "gen", "bcdc", "--n", "3")
    assert code == 0
    assert out == (FIXTURES / "bcdc_n3.edgelist").read_text()


def test_gen_cq2_edges(capsys):
    code, out, _ = run(capsys, "gen", "cq", "--n", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "# graph cq n=2"
    assert set(lines[1:]) == {"00\t01", "00\t10", "01\t11", "10\t11"}


def test_gen_deterministic(capsys):
    _, first, _ = run(capsys, "gen", "bcdc", "--n", "4")
    _, second, _ = run(capsys, "gen", "bcdc", "--n", "4", "--seed", "7")
    assert first == second


def test_gen_dot(capsys, tmp_path):
    out_file = tmp_path / "g.dot"
    code, _, _ = run(capsys, "gen", "cq", "--n", "2", "--format", "dot", "--out", str(out_file))
    assert code == 0
    assert '"00" -- "01";' in out_file.read_text()


def test_gen_budget_rejected(capsys):
    code, _, err = run(capsys, "gen", "dcell", "--m", "2", "--n", "5", "--max-vertices", "100")
    assert code == 2
    assert "requires" in err


def test_cut_dcell_star(capsys, tmp_path):
    out_file = tmp_path / "cut.txt"
    code, out, _ = run(
        capsys, "cut", "dcell", "--m", "1", "--n", "4", "--shape", "star", "--t", "1",
        "--out", str(out_file),
    )
    assert code == 0
    assert "dcell,m=1 n=4,K1_1,structure,3,3,5,2,1,pass" in out
    assert out_file.read_text().startswith("# cut dcell m=1 n=4 shape=K1_1")


def test_cut_bcdc_cycle_k5_rejected(capsys):
    # exhaustive search refuted the 3-member cut; the CLI reports the truth
    code, _, err = run(capsys, "cut", "bcdc", "--n", "5", "--shape", "cycle", "--k", "5")
    assert code == 2
    assert "minimum is 4" in err


def test_cut_bcdc_cycle_k6(capsys):
    code, out, _ = run(capsys, "cut", "bcdc", "--n", "5", "--shape", "cycle", "--k", "6")
    assert code == 0
    assert ",C6,structure,2,2," in out


def test_cut_out_of_range_exit2(capsys):
    code, _, err = run(capsys, "cut", "bcdc", "--n", "5", "--shape", "cycle", "--k", "4")
    assert code == 2
    assert "no known construction" in err


def test_cut_star_range_named(capsys):
    code, _, err = run(capsys, "cut", "bcdc", "--n", "5", "--shape", "star", "--t", "8")
    assert code == 2
    assert "2n-3" in err


def test_oracle_prove_min_dcell_clique(capsys):
    code, out, _ = run(
        capsys, "oracle", "dcell", "--m", "0", "--n", "5",
        "--shape", "clique", "--s", "3", "--prove-min", "--jobs", "1",
    )
    assert code == 0
    assert "value=2" in out


def test_oracle_g_extra_b3(capsys):
    code, out, _ = run(capsys, "oracle", "bcdc", "--n", "3", "--g-extra", "0", "--jobs", "1")
    assert code == 0
    assert "value=4" in out


def test_oracle_bound_no(capsys):
    code, out, _ = run(
        capsys, "oracle", "dcell", "--m", "1", "--n", "4",
        "--shape", "star", "--t", "1", "--bound", "2", "--jobs", "1",
    )
    assert code == 0
    assert "status=no" in out


def test_oracle_certify_with_constructor(capsys):
    code, out, _ = run(
        capsys, "oracle", "bcdc", "--n", "4", "--shape", "path", "--k", "7",
        "--certify", "1", "--witness-from-constructor", "--jobs", "1",
    )
    assert code == 0
    assert "status=certified" in out


def test_oracle_budget_exit3(capsys):
    code, out, _ = run(
        capsys, "oracle", "bcdc", "--n", "4", "--shape", "star", "--t", "1",
        "--prove-min", "--max-checks", "10", "--jobs", "1",
    )
    assert code == 3
    assert "budget" in out


def test_table_quick(capsys, tmp_path):
    out_file = tmp_path / "table.csv"
    manifest = tmp_path / "manifest.json"
    code, _, _ = run(
        capsys, "table", "--oracle", "off", "--out", str(out_file),
        "--manifest", str(manifest),
    )
    assert code == 0
    text = out_file.read_text()
    assert text.splitlines()[0].endswith(",oracle")
    assert "# summary pass=" in text
    assert "fail=0" in text.splitlines()[-1]
    import json

    man = json.loads(manifest.read_text())
    assert man["totals"]["fail"] == 0
    assert all(c["status"] in ("pass", "fail", "rejected", "skipped") for c in man["cases"])


def test_table_deterministic_output(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "table", "--oracle", "off", "--out", str(a))
    run(capsys, "table", "--oracle", "off", "--out", str(b), "--seed", "3")
    assert a.read_text() == b.read_text()
