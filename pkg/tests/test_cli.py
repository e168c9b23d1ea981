"""CLI tests: exit codes, CSV formats, determinism, config precedence."""

import json
import shutil
import subprocess

import pytest

from salpeter_bounds import SystemSpec, e_of_m, lower_bound, p_of_m, upper_bound
from salpeter_bounds.cli import main
from salpeter_bounds.pfunction import binding_energy_of_m


def test_one_body_output(capsys):
    assert main(["one-body", "--mass", "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("e(1) = ")
    assert out[1].startswith("P(1) = ")
    assert float(out[0].split("=")[1]) == pytest.approx(e_of_m(1.0), rel=1e-8)
    assert float(out[1].split("=")[1]) == pytest.approx(p_of_m(1.0), rel=1e-8)


def test_one_body_requires_mass(capsys):
    assert main(["one-body"]) == 1
    assert "needs --mass" in capsys.readouterr().err


def test_usage_errors_exit_1(capsys):
    assert main(["pfunction", "--mass-grid", "0:1:0:linear", "-o", "x.csv"]) == 1
    assert main(["pfunction", "--mass-grid", "1:2:5:cubic", "-o", "x.csv"]) == 1
    assert main(["pfunction", "--mass-grid", "0:1:5:log", "-o", "x.csv"]) == 1
    assert main(["figure2", "--n-range", "1:3", "-o", "x.csv"]) == 1
    assert main(["bounds", "--mass", "-1", "--N", "2"]) == 1
    assert main(["bounds", "--mass", "1", "--gamma", "-2"]) == 1
    assert main(["one-body", "--mass", "0", "--tol", "1e-15"]) == 1
    assert main(["pfunction", "--config", "/no/such/config.json"]) == 1
    capsys.readouterr()


def test_unknown_subcommand_exits_1():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_no_subcommand_exits_1(capsys):
    assert main([]) == 1
    assert "no command" in capsys.readouterr().err


def test_io_failure_exits_2(capsys):
    code = main(
        ["figure1", "--mass-grid", "1", "--output", "/nonexistent-dir/out.csv"]
    )
    assert code == 2
    capsys.readouterr()


def test_verify_exits_0(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "all" in out and "passed" in out
    assert "FAIL" not in out


def test_pfunction_csv(tmp_path, capsys):
    target = tmp_path / "pf.csv"
    assert main(["pfunction", "--mass-grid", "0,1", "-o", str(target)]) == 0
    capsys.readouterr()
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "m,e,e_minus_m,P"
    assert len(lines) == 3
    m, e, binding, p = (float(v) for v in lines[2].split(","))
    assert m == 1.0
    assert e == pytest.approx(e_of_m(1.0), rel=1e-8)
    assert binding == pytest.approx(e_of_m(1.0) - 1.0, rel=1e-7)
    assert p == pytest.approx(p_of_m(1.0), rel=1e-8)


def test_figure1_csv_schema_and_roundtrip(tmp_path, capsys):
    target = tmp_path / "fig1.csv"
    assert main(["figure1", "--mass-grid", "0:2:5:linear", "-o", str(target)]) == 0
    capsys.readouterr()
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "m,e_minus_m,P"
    assert len(lines) == 6
    rows = [tuple(float(v) for v in line.split(",")) for line in lines[1:]]
    bindings = [row[1] for row in rows]
    ps = [row[2] for row in rows]
    assert all(a > b for a, b in zip(bindings, bindings[1:]))
    assert all(a <= b for a, b in zip(ps, ps[1:]))
    # Re-parsing reproduces values to the printed 9 significant digits.
    m0, b0, p0 = rows[3]
    assert b0 == pytest.approx(binding_energy_of_m(m0), rel=1e-8)
    assert p0 == pytest.approx(p_of_m(m0), rel=1e-8)


def test_figure2_and_3_csv_schema(tmp_path, capsys):
    f2 = tmp_path / "fig2.csv"
    f3 = tmp_path / "fig3.csv"
    args = ["--mass-grid", "0,1", "--n-range", "2:3"]
    assert main(["figure2", *args, "-o", str(f2)]) == 0
    assert main(["figure3", *args, "-o", str(f3)]) == 0
    capsys.readouterr()

    lines2 = f2.read_text(encoding="utf-8").splitlines()
    lines3 = f3.read_text(encoding="utf-8").splitlines()
    assert lines2[0] == "m,N,E_lower_const,E_upper"
    assert lines3[0] == "m,N,E_lower_running,E_upper"
    assert len(lines2) == len(lines3) == 5  # 2 masses x 2 N values

    for line in lines2[1:] + lines3[1:]:
        m, n, low, up = (float(v) for v in line.split(","))
        assert low <= up
    # The running-P lower curve dominates the constant-P one.
    for l2, l3 in zip(lines2[1:], lines3[1:]):
        assert float(l2.split(",")[2]) <= float(l3.split(",")[2]) + 1e-9


def test_figure3_spot_value(tmp_path, capsys):
    target = tmp_path / "fig3.csv"
    assert main(["figure3", "--mass-grid", "1", "--n-range", "2,4", "-o", str(target)]) == 0
    capsys.readouterr()
    rows = target.read_text(encoding="utf-8").splitlines()[1:]
    for row, n in zip(rows, (2, 4)):
        m, n_read, low, up = (float(v) for v in row.split(","))
        spec = SystemSpec(int(n_read), m, 1.0)
        assert n_read == n
        assert low == pytest.approx(lower_bound(spec), rel=1e-8)
        assert up == pytest.approx(upper_bound(spec), rel=1e-8)


def test_subtract_rest_mass(capsys):
    assert main(["bounds", "--N", "2", "--mass", "1"]) == 0
    plain = capsys.readouterr().out.splitlines()
    assert main(["bounds", "--N", "2", "--mass", "1", "--subtract-rest-mass"]) == 0
    shifted = capsys.readouterr().out.splitlines()
    low_plain = float(plain[0].split("=")[1])
    low_shift = float(shifted[0].split("=")[1])
    assert low_shift == pytest.approx(low_plain - 2.0, abs=1e-7)


def test_bounds_output_names_p_values(capsys):
    assert main(["bounds", "--N", "3", "--mass", "0"]) == 0
    out = capsys.readouterr().out
    assert "lower = " in out and "upper = " in out
    assert "mu = 0" in out
    assert "P_upper = 1.5" in out


def test_determinism_byte_identical(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    args = ["figure3", "--mass-grid", "0:1:3:linear", "--n-range", "2:4"]
    assert main([*args, "-o", str(a)]) == 0
    assert main([*args, "-o", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps({"gamma": 2.0, "mass_grid": [1.0], "N_range": [2]}),
        encoding="utf-8",
    )
    from_cfg = tmp_path / "from_cfg.csv"
    overridden = tmp_path / "overridden.csv"
    direct = tmp_path / "direct.csv"
    assert main(["figure3", "--config", str(cfg), "-o", str(from_cfg)]) == 0
    assert main(
        ["figure3", "--config", str(cfg), "--gamma", "3", "-o", str(overridden)]
    ) == 0
    assert main(
        ["figure3", "--mass-grid", "1", "--n-range", "2", "--gamma", "3",
         "-o", str(direct)]
    ) == 0
    capsys.readouterr()

    row_cfg = from_cfg.read_text(encoding="utf-8").splitlines()[1]
    low_cfg = float(row_cfg.split(",")[2])
    assert low_cfg == pytest.approx(lower_bound(SystemSpec(2, 1.0, 2.0)), rel=1e-8)
    assert overridden.read_text(encoding="utf-8") == direct.read_text(encoding="utf-8")


def test_bad_config_rejected(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text("[1, 2, 3]", encoding="utf-8")
    assert main(["pfunction", "--config", str(cfg)]) == 1
    cfg.write_text("{not json", encoding="utf-8")
    assert main(["pfunction", "--config", str(cfg)]) == 1
    capsys.readouterr()


def test_console_script_installed():
    exe = shutil.which("salpeter-bounds")
    assert exe is not None
    proc = subprocess.run(
        [exe, "one-body", "--mass", "0"], capture_output=True, text=True, timeout=300
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("e(0) = 2.33810741")
