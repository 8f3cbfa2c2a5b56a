import json

from hopfkit.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_construct_and_report(tmp_path, capsys):
    f = str(tmp_path / "taft.hopf")
    code, out = run(["construct", "taft", "--p", "3", "--q", "1", "--out", f], capsys)
    assert code == 0
    assert "dim=9" in out and "ordS=6" in out
    code, out = run(["report", f, "--coradical"], capsys)
    assert code == 0
    assert "corad=[3,6,9]" in out
    code, out = run(["report", f, "--integrals"], capsys)
    assert code == 0
    assert "epsLambda=0" in out and "radford_s4=pass" in out
    code, out = run(["report", f, "--census"], capsys)
    assert code == 0
    assert "G=3 type=(3) certified=yes" in out
    code, out = run(["construct", "uq_sl2", "--p", "3", "--q", "1"], capsys)
    assert code == 0 and "type=(3;1)" in out
    fr = str(tmp_path / "r.hopf")
    code, out = run(["construct", "r", "--out", fr], capsys)
    assert code == 0 and "type=(9;3)" in out


def test_construct_bad_params(capsys):
    code, _ = run(["construct", "uq_sl2", "--p", "4"], capsys)
    assert code == 2
    code, _ = run(["construct", "group_algebra", "--group", "nope"], capsys)
    assert code == 2


def test_report_deterministic(tmp_path, capsys):
    f = str(tmp_path / "uq.hopf")
    run(["construct", "uq_sl2", "--out", f], capsys)
    code1, out1 = run(["report", f, "--all"], capsys)
    code2, out2 = run(["report", f, "--all"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_qt_pipeline(tmp_path, capsys):
    f = str(tmp_path / "uq.hopf")
    code, _ = run(["construct", "uq_sl2", "--rmatrix", "uq_standard",
                   "--out", f], capsys)
    assert code == 0
    code, out = run(["qt-verify", f], capsys)
    assert code == 0
    for axiom in ("QT.1", "QT.2", "QT.3", "QT.4", "QT.5"):
        assert f"{axiom}=pass" in out
    assert "minimal=yes" in out
    code, out = run(["ribbon", f], capsys)
    assert code == 0
    assert "ribbon_count=1" in out
    code, out = run(["report", f, "--qt", f], capsys)
    assert code == 0
    assert "ribbon_count=1" in out and "drinfeld_identities=clean" in out


def test_dual_tensor_double(tmp_path, capsys):
    f = str(tmp_path / "t.hopf")
    f2 = str(tmp_path / "d.hopf")
    run(["construct", "taft", "--out", f], capsys)
    code, out = run(["dual", f, "--out", f2], capsys)
    assert code == 0 and "dim=9" in out
    code, out = run(["tensor", f, f2, "--out", str(tmp_path / "tt.hopf")], capsys)
    assert code == 0 and "dim=81" in out
    code, out = run(["double", f, "--out", str(tmp_path / "dt.hopf")], capsys)
    assert code == 0 and "dim=81" in out and "semisimple=no" in out


def test_quotient_command(tmp_path, capsys):
    f = str(tmp_path / "z9.hopf")
    run(["construct", "group_algebra", "--group", "z9xz3", "--out", f], capsys)
    # kill the first factor's cube: generator g^3 (x) 1 - 1 (x) 1
    gens = [["0"] * 27]
    gens[0][9] = "1"   # (3,0) in the (9,3) mixed-radix ordering
    gens[0][0] = "-1"
    gf = str(tmp_path / "gens.json")
    with open(gf, "w", encoding="utf-8") as fh:
        json.dump(gens, fh)
    code, out = run(["quotient", f, gf, "--out", str(tmp_path / "q.hopf")], capsys)
    assert code == 0
    assert "dim=9" in out


def test_papercheck_commands(capsys):
    code, out = run(["papercheck", "spectra", "--p", "3", "--n", "1"], capsys)
    assert code == 0
    assert "trace_zero=2" in out and "all_conform=yes" in out
    code, out = run(["papercheck", "dim27"], capsys)
    assert code == 0
    assert "bound=30" in out and "bound=27" in out
    assert "bound=39" in out and "bound=36" in out
    assert "all_eliminated=yes" in out


def test_import_corrupted_exit_code(tmp_path, capsys):
    f = str(tmp_path / "t.hopf")
    run(["construct", "taft", "--out", f], capsys)
    obj = json.loads(open(f, encoding="utf-8").read())
    i, j, k, s = obj["mult"][0]
    obj["mult"][0] = [i, j, k, "2" if s != "2" else "3"]
    bad = str(tmp_path / "bad.hopf")
    with open(bad, "w", encoding="utf-8") as fh:
        json.dump(obj, fh)
    code = main(["import", bad])
    assert code == 1
    # parse garbage: exit 2
    garbage = str(tmp_path / "garbage.hopf")
    with open(garbage, "w", encoding="utf-8") as fh:
        fh.write("{]")
    code = main(["import", garbage])
    assert code == 2


def test_export_canonicalizes(tmp_path, capsys):
    f = str(tmp_path / "t.hopf")
    run(["construct", "taft", "--out", f], capsys)
    out2 = str(tmp_path / "t2.hopf")
    code, _ = run(["export", f, "--out", out2], capsys)
    assert code == 0
    assert open(f, "rb").read() == open(out2, "rb").read()


def test_golden_report_taft(tmp_path):
    # byte-identical across processes, locked against the committed golden
    import pathlib
    import subprocess
    import sys
    f = str(tmp_path / "taft.hopf")
    subprocess.run([sys.executable, "-m", "hopfkit.cli", "construct", "taft",
                    "--out", f], check=True, capture_output=True)
    r1 = subprocess.run([sys.executable, "-m", "hopfkit.cli", "report", f,
                         "--all"], check=True, capture_output=True)
    r2 = subprocess.run([sys.executable, "-m", "hopfkit.cli", "report", f,
                         "--all"], check=True, capture_output=True)
    assert r1.stdout == r2.stdout
    golden = pathlib.Path(__file__).parent / "golden" / "taft_report_all.txt"
    assert r1.stdout == golden.read_bytes()


def test_golden_papercheck_dim27():
    import pathlib
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "hopfkit.cli", "papercheck",
                        "dim27"], check=True, capture_output=True)
    golden = pathlib.Path(__file__).parent / "golden" / "papercheck_dim27.txt"
    assert r.stdout == golden.read_bytes()


def test_bicharacter_rmatrix_cli(tmp_path, capsys):
    f = str(tmp_path / "z3.hopf")
    code, _ = run(["construct", "group_algebra", "--group", "z3",
                   "--rmatrix", "bicharacter:1", "--out", f], capsys)
    assert code == 0
    code, out = run(["qt-verify", f], capsys)
    assert code == 0
    assert "QT.1=pass" in out


def test_op_cop_cli(tmp_path, capsys):
    f = str(tmp_path / "t.hopf")
    run(["construct", "taft", "--out", f], capsys)
    code, out = run(["op", f, "--out", str(tmp_path / "op.hopf")], capsys)
    assert code == 0 and "ordS=6" in out
    code, out = run(["cop", f], capsys)
    assert code == 0 and "dim=9" in out
