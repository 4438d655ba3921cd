import subprocess
import sys

import pytest

from triv9.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_classify(capsys):
    code, out = run_cli(["classify", "e123+e456+e789"], capsys)
    assert code == 0
    assert "kind=semisimple" in out
    assert "rank=9" in out


def test_classify_machine_round_trip(capsys):
    code, out = run_cli(["--format=machine", "classify", "e123"], capsys)
    assert code == 0
    fields = dict(kv.split("=", 1) for kv in out.split())
    assert fields["kind"] == "nilpotent"
    from triv9.trivector import parse_trivector

    assert parse_trivector(fields["nilpotent_part"]) == parse_trivector("e123")


def test_rank_and_usage_errors(capsys):
    code, out = run_cli(["rank", "e123+e456"], capsys)
    assert code == 0 and "6" in out
    code, _ = run_cli(["rank", "e1x"], capsys)
    assert code == 2
    code, _ = run_cli([], capsys)
    assert code == 2


def test_jordan_and_sl2(capsys):
    code, out = run_cli(["jordan", "e123+e456+e789+e147"], capsys)
    assert code == 0
    assert "semisimple_part = e123+e456+e789" in out
    code, out = run_cli(["sl2", "e678"], capsys)
    assert code == 0
    assert "h =" in out


def test_weyl_order(capsys):
    code, out = run_cli(["weyl", "--order"], capsys)
    assert code == 0
    assert "155520" in out


def test_canonical(capsys):
    code, out = run_cli(["canonical", "1,2,-3,5"], capsys)
    assert code == 0 and "1" in out
    code, out = run_cli(["canonical", "0,0,0,0"], capsys)
    assert code == 0 and "7" in out
    code, _ = run_cli(["canonical", "1,2"], capsys)
    assert code == 2


def test_h1_command(tmp_path, capsys):
    f = tmp_path / "g.ggr"
    f.write_text("[finite]\nm1 = [[-1]]\ngenerators = m1\n[sigma]\nkind = plain\n")
    code, out = run_cli(["h1", str(f)], capsys)
    assert code == 0
    assert "classes = 2" in out
    f2 = tmp_path / "t.ggr"
    f2.write_text("[torus]\nrank = 1\ninvolution = [[-1]]\n[sigma]\nkind = plain\n")
    code, out = run_cli(["h1", str(f2)], capsys)
    assert code == 0 and "classes = 2" in out


def test_h2_command(tmp_path, capsys):
    f = tmp_path / "t.ggr"
    f.write_text("[torus]\nrank = 1\ninvolution = [[1]]\n[sigma]\nkind = plain\n")
    code, out = run_cli(["h2", str(f), "--element", "1"], capsys)
    assert code == 0 and "False" in out


def test_dump_structure_stable(capsys):
    code1, out1 = run_cli(["dump", "structure"], capsys)
    code2, out2 = run_cli(["dump", "structure"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.startswith("[h[1]") or out1.startswith("[")


def test_verify_family_subset(capsys):
    code, out = run_cli(["verify", "--family", "2_1", "--points", "1"], capsys)
    assert code == 0
    assert "PASS" in out


def test_verify_catalog_file(tmp_path, capsys):
    f = tmp_path / "records.txt"
    f.write_text("orbit 2_1 2 : e168 ; centralizer=t\n")
    code, out = run_cli(["verify", "--catalog", str(f), "--points", "1"], capsys)
    assert code == 0
    # a failing record flips the exit code
    f.write_text("orbit 2_1 2 : e168 ; centralizer=u\n")
    code, out = run_cli(["verify", "--catalog", str(f), "--points", "1"], capsys)
    assert code == 1


def test_solve_cocycle_command(tmp_path, capsys):
    f = tmp_path / "a.mat"
    # diag(-1, -1, 1, ..., 1): a real involutive cocycle with determinant 1
    diag = ["-1", "-1"] + ["1"] * 7
    lines = "[[" + "],[".join(
        ",".join(diag[i] if i == j else "0" for j in range(9)) for i in range(9)
    ) + "]]"
    f.write_text(lines)
    code, out = run_cli(["--seed=5", "solve-cocycle", str(f)], capsys)
    assert code == 0
    assert out.count("\n") == 9
