import io
import subprocess
import sys

import numpy as np
import pytest

from filmplasmon import cli, sweep
from filmplasmon.exceptions import QuadratureAccuracyError
from filmplasmon.sweep import (
    SweepSpec, read_rows_csv, run_dispersion_sweep, run_table, write_rows_csv,
)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def csv_body(text):
    return [line for line in text.splitlines() if not line.startswith("#")]


def test_grid_contract_two_points():
    spec = SweepSpec(d_nm=(5, 10), p=(1.0,), eps=(1e-3,), omega_min=0.1, omega_max=1.5,
                     omega_steps=2)
    rows = list(run_dispersion_sweep(spec))
    assert len(rows) == 4
    assert [(r.d_nm, r.Omega) for r in rows] == [(5, 0.1), (5, 1.5), (10, 0.1), (10, 1.5)]


def test_csv_round_trip_and_determinism():
    spec = SweepSpec(d_nm=(3, 30), p=(0.0, 1.0), eps=(1e-3, 0.1), omega_steps=7,
                     omega_min=0.2, omega_max=1.8)
    rows = list(run_dispersion_sweep(spec))
    buf = io.StringIO()
    write_rows_csv(buf, spec, rows)
    assert read_rows_csv(io.StringIO(buf.getvalue())) == rows
    again = io.StringIO()
    write_rows_csv(again, spec, list(run_dispersion_sweep(spec)))
    assert again.getvalue() == buf.getvalue()


def test_threads_preserve_order():
    kwargs = dict(d_nm=(1, 2, 4, 8), p=(0.1, 0.5), eps=(0.01,), omega_steps=9)
    serial = list(run_dispersion_sweep(SweepSpec(**kwargs)))
    parallel = list(run_dispersion_sweep(SweepSpec(threads=4, **kwargs)))
    assert serial == parallel


def test_resonance_rows_are_flagged_not_fatal():
    code, out, _ = run_cli("--eps", "0", "--omega-min", "0.5", "--omega-max", "1.5",
                           "--omega-steps", "3")
    assert code == cli.EXIT_OK
    rows = read_rows_csv(io.StringIO(out))
    assert len(rows) == 3
    bad = rows[1]
    assert bad.Omega == 1.0 and bad.error == "ResonanceSingularityError"
    assert bad.re_k is None and bad.exists is None
    assert rows[0].error is None and rows[2].error is None


def test_default_reproduces_fig1_setup():
    code, out, _ = run_cli("--omega-steps", "5")
    assert code == 0
    rows = read_rows_csv(io.StringIO(out))
    assert {(r.d_nm, r.p, r.eps) for r in rows} == {(10.0, 1.0, 1e-5)}


def test_zratio_fig1():
    code, out, _ = run_cli("--mode", "zratio", "--omega-min", "0.1", "--omega-max", "0.5",
                           "--omega-steps", "2")
    assert code == 0
    body = csv_body(out)
    assert body[0] == "Omega,eps,d_nm,p,z_ratio,error"
    z = [float(line.split(",")[4]) for line in body[1:]]
    assert z[0] == pytest.approx(2.1e4, rel=0.1)
    assert z[1] == pytest.approx(3.8e4, rel=0.1)


def test_fig4_ordering_in_sweep():
    spec = SweepSpec(d_nm=(10, 25, 50, 100), p=(0.5,), eps=(1e-3,), omega_steps=40,
                     omega_min=0.02, omega_max=0.98)
    rows = list(run_dispersion_sweep(spec))
    re_k = np.array([r.re_k for r in rows]).reshape(4, 40)
    assert np.all(np.diff(re_k, axis=0) < 0)


def test_table1_text():
    code, out, _ = run_cli("--mode", "table1")
    assert code == 0
    lines = out.splitlines()
    row = next(line for line in lines if line.split()[:1] == ["1"])
    assert row.split()[3] == "0.101"


def test_table2_rows():
    text, rows = run_table(SweepSpec(mode="table2"))
    assert len(rows) == 10
    by_d = {r.d_nm: r for r in rows}
    assert (round(by_d[1].omega0, 3), round(by_d[1].omega1, 3)) == (0.168, 0.904)
    assert (round(by_d[9].omega0, 3), round(by_d[9].omega1, 3)) == (0.041, 0.936)
    assert "0.168" in text and "0.904" in text


def test_table_csv_to_file(tmp_path):
    path = tmp_path / "t1.csv"
    code, out, _ = run_cli("--mode", "table1", "--out", str(path))
    assert code == 0
    body = csv_body(path.read_text())
    assert body[0].startswith("d_nm,p,eps,omega0,omega1")
    assert len(body) == 10
    assert "Omega0" in out


def test_critical_mode(tmp_path):
    path = tmp_path / "c.csv"
    code, _, _ = run_cli("--mode", "critical", "--d-nm", "5", "--p", "0.1", "--eps", "0.1",
                         "--out", str(path))
    assert code == 0
    rec = csv_body(path.read_text())[1].split(",")
    assert float(rec[3]) == pytest.approx(0.098, abs=0.005)
    assert float(rec[4]) == pytest.approx(0.934, abs=0.005)


def test_with_omega_column():
    code, out, _ = run_cli("--omega-steps", "2", "--with-omega")
    body = csv_body(out)
    assert body[0].endswith(",omega_rad_s")
    first = body[1].split(",")
    assert float(first[-1]) == pytest.approx(0.01 * 6.5e15)


def test_nu_ratio_alias_and_custom_material():
    code, out, _ = run_cli("--material", "custom", "--omega-p", "1.4e16", "--v-f", "1.4e8",
                           "--nu-ratio", "0.01", "--omega-steps", "2")
    assert code == 0
    assert "omega_p=14000000000000000" in out
    assert read_rows_csv(io.StringIO(out))[0].eps == 0.01


def test_metadata_header():
    _, out, _ = run_cli("--omega-steps", "2")
    lines = out.splitlines()
    assert lines[0].startswith("# filmplasmon ")
    assert lines[1].startswith("# material: sodium")
    assert lines[3].startswith("Omega,eps,d_nm,p,re_k,im_k,re_alpha,im_alpha,exists,error")


@pytest.mark.parametrize("argv", [
    ["--p", "1.5"],
    ["--omega-max", "3"],
    ["--omega-steps", "1"],
    ["--eps", "0", "--p", "0.5"],
    ["--material", "custom"],
    ["--omega-p", "1e16"],
    ["--d-nm", "-1"],
])
def test_spec_errors(argv):
    code, _, err = run_cli(*argv)
    assert code == cli.EXIT_SPEC
    assert "error" in err


def test_unparseable_list_is_usage_error():
    with pytest.raises(SystemExit) as info:
        run_cli("--d-nm", "ten")
    assert info.value.code == 2


def test_unwritable_output_fails_before_compute(monkeypatch, tmp_path):
    def boom(spec):
        raise AssertionError("computation started")

    monkeypatch.setattr(cli, "run_dispersion_sweep", boom)
    code, _, err = run_cli("--out", str(tmp_path / "missing" / "x.csv"))
    assert code == cli.EXIT_IO
    assert "cannot write" in err


def test_numerical_failure_exit_code(monkeypatch):
    def fail(*args, **kwargs):
        raise QuadratureAccuracyError("nope")

    monkeypatch.setattr(sweep, "find_critical_band", fail)
    code, out, err = run_cli("--mode", "table2")
    assert code == cli.EXIT_NUMERIC
    assert "QuadratureAccuracyError" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "filmplasmon", "--omega-steps", "2"],
                          capture_output=True, text=True, check=True)
    assert len(csv_body(proc.stdout)) == 3
