"""End-to-end CLI behavior: CSV output, SVG, figures, exit codes,
determinism."""
import math

import pytest

from minktrig import cli
from minktrig.reproduce import CriterionResult


def run_cli(args, capsys=None):
    code = cli.main(args)
    return code


def test_sine_example_row(capsys):
    code = cli.main(["sine", "kind=lp", "p=inf", "x=1,0", "y=1,1"])
    out = capsys.readouterr().out
    assert code == 0
    assert out == "0.5,,antinorm-formula\n"


def test_direct_method_reports_t_star(capsys):
    code = cli.main(["sine", "x=1,0", "y=1,1", "method=direct"])
    out = capsys.readouterr().out.strip().split(",")
    assert code == 0
    assert float(out[0]) == pytest.approx(math.sin(math.pi / 4), abs=1e-9)
    assert out[2] == "direct"
    assert float(out[1]) == pytest.approx(-math.sqrt(0.5), abs=1e-6)


def test_radon_hexagon_row(tmp_path):
    out = tmp_path / "radon.csv"
    code = cli.main([
        "radon", "kind=polygon",
        "vertices=1,0; 0.5,0.8660254037844386; -0.5,0.8660254037844386",
        "--output", str(out)])
    assert code == 0
    text = out.read_text()
    assert text.startswith("radon,true,0.866025403784")
    # report path renders the companion figure next to the CSV
    assert (tmp_path / "radon.png").exists()


def test_constants_octagon_c_r_row(capsys):
    code = cli.main(["constants", "kind=polygon",
                     "vertices=1,0; 0.70710678118654757,0.70710678118654746;"
                     " 0,1; -0.70710678118654746,0.70710678118654757",
                     "grid=256"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    names = [ln.split(",")[0] for ln in lines]
    assert names == ["c_E", "c_R", "D"]
    c_r_row = lines[1].split(",")
    assert c_r_row[1].startswith("0.146446609")
    assert c_r_row[-2:] == ["256", "true"]


def test_birkhoff_and_bool_commands(capsys):
    assert cli.main(["birkhoff", "x=1,0", "y=0,1"]) == 0
    row = capsys.readouterr().out.strip().split(",")
    assert row[0] == "true"
    assert float(row[2]) == pytest.approx(1.0)
    assert cli.main(["isosceles", "kind=lp", "p=inf", "x=1,0", "y=1,1"]) == 0
    assert capsys.readouterr().out == "false\n"
    assert cli.main(["roberts", "x=1,0", "y=0,1"]) == 0
    assert capsys.readouterr().out == "true\n"


def test_conformal_command(capsys):
    assert cli.main(["conformal", "map=0,-1,1,0"]) == 0
    assert capsys.readouterr().out == "true\n"
    assert cli.main(["conformal", "map=2,0,0,1"]) == 0
    assert capsys.readouterr().out == "false\n"


def test_conjugates_rows(capsys):
    assert cli.main(["conjugates", "kind=lp", "p=inf"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    for ln in lines:
        fields = ln.split(",")
        assert len(fields) == 5
        assert fields[4] == "true"


def test_emit_circle_csv_and_svg(tmp_path):
    svg = tmp_path / "circle.svg"
    out = tmp_path / "circle.csv"
    code = cli.main(["emit-circle", "kind=lp", "p=1", "n=8", "which=unit",
                     "--svg", str(svg), "--output", str(out)])
    assert code == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "x,y"
    assert len(rows) == 9
    assert rows[1] == "1,0"
    doc = svg.read_text()
    assert doc.startswith('<svg xmlns="http://www.w3.org/2000/svg" '
                          'viewBox="-2 -2 4 4">')
    assert "<polygon points=" in doc
    assert 'fill="none"' in doc
    assert doc.count(",") >= 8
    assert (tmp_path / "circle.png").exists()


def test_determinism_byte_identical(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    args = ["constants", "kind=lp", "p=3", "grid=256"]
    assert cli.main(args + ["--output", str(a)]) == 0
    assert cli.main(args + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_config_file_plus_overrides(tmp_path, capsys):
    cfgfile = tmp_path / "run.cfg"
    cfgfile.write_text("[norm]\nkind = lp\np = inf\n\n"
                       "[run]\ncommand = sine\nx = 1,0\ny = 1,1\n")
    assert cli.main(["--config", str(cfgfile)]) == 0
    assert capsys.readouterr().out == "0.5,,antinorm-formula\n"
    # override the norm from the command line
    assert cli.main(["--config", str(cfgfile), "p=2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("0.7071067811")


def test_exit_code_1_on_bad_config(capsys):
    assert cli.main(["sine", "kind=lp", "p=0.3", "x=1,0", "y=0,1"]) == 1
    err = capsys.readouterr().err
    assert "p must be >= 1" in err
    assert cli.main(["frobnicate"]) == 1
    assert "unknown command" in capsys.readouterr().err
    assert cli.main(["sine", "x=1,0"]) == 1
    assert "needs key 'y'" in capsys.readouterr().err
    assert cli.main(["sine", "extra", "x=1,0", "y=0,1"]) == 1
    assert "unexpected extra token" in capsys.readouterr().err


def test_exit_code_1_on_runtime_error(capsys):
    assert cli.main(["antinorm", "x=0,0"]) == 1
    assert "error:" in capsys.readouterr().err


def test_missing_config_file(capsys):
    assert cli.main(["--config", "/nonexistent/x.cfg", "radon"]) == 1
    assert "cannot read config" in capsys.readouterr().err


def test_reproduce_single_row(capsys):
    assert cli.main(["reproduce", "rows=1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("1,pass,euclidean sine closed form,")


def test_reproduce_failure_exit_code(monkeypatch, capsys):
    def fake_run_all(rows=None, seed=0):
        return [CriterionResult(3, "stub", False, "forced failure")]

    monkeypatch.setattr(cli, "run_all", fake_run_all)
    assert cli.main(["reproduce"]) == 2
    assert "3,fail,stub,forced failure" in capsys.readouterr().out
