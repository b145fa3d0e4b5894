"""End-to-end tests of the command-line harness."""

import csv
import math
import os
import subprocess

import pytest

CLI = os.environ.get("FOUREX_CLI")
if CLI is None or not os.path.exists(CLI):
    pytest.skip("FOUREX_CLI not set", allow_module_level=True)


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, f"{args}: rc={proc.returncode}\n{proc.stderr}"
    return proc


def read_csv(path):
    with open(path) as fh:
        reader = csv.reader(fh)
        header = next(reader)
        return header, [row for row in reader]


def test_approximate_function_and_roundtrip(tmp_path):
    out = tmp_path / "wave"
    proc = run("approximate", "--function", "exp_iomega", "--omega", "20", "--M", "500",
               "--output", str(out))
    assert "max_error" in proc.stdout
    err = float(proc.stdout.split("max_error = ")[1])
    assert err <= 1e-11

    header, coeffs = read_csv(f"{out}.coeffs.csv")
    assert header == ["k", "re", "im"]
    assert len(coeffs) == 1121  # 2M + L/2 - m + 1 samples -> N_p + 1 modes

    header, dense = read_csv(f"{out}.dense.csv")
    assert header == ["t", "re", "im"]
    assert len(dense) == 2 * 10 * 500 + 1
    assert float(dense[0][0]) == -1.0
    assert float(dense[-1][0]) == 1.0

    # the dense output is itself a valid samples file (round-trip property)
    out2 = tmp_path / "roundtrip"
    proc2 = run("approximate", "--input", f"{out}.dense.csv", "--output", str(out2))
    assert "M = 5000" in proc2.stdout


def test_approximate_json(tmp_path):
    out = tmp_path / "wave"
    run("approximate", "--function", "f3", "--M", "100", "--format", "json",
        "--output", str(out))
    import json

    with open(f"{out}.json") as fh:
        doc = json.load(fh)
    assert doc["M"] == 100
    assert doc["max_error"] <= 1e-9
    assert len(doc["coefficients"]) > 0


def test_approximate_rejects_nonuniform(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("t,re,im\n-1.0,1.0,0\n0.1,1.0,0\n1.0,1.0,0\n")
    proc = subprocess.run([CLI, "approximate", "--input", str(bad), "--output",
                           str(tmp_path / "x")], capture_output=True, text=True)
    assert proc.returncode == 2
    assert "uniform" in proc.stderr


def test_approximate_refined_function(tmp_path):
    out = tmp_path / "refined"
    proc = run("approximate", "--function", "exp_iomega", "--omega", "300", "--M", "500",
               "--R", "4", "--output", str(out))
    err_r4 = float(proc.stdout.split("max_error = ")[1])
    proc = run("approximate", "--function", "exp_iomega", "--omega", "300", "--M", "500",
               "--output", str(out))
    err_r1 = float(proc.stdout.split("max_error = ")[1])
    assert err_r4 < err_r1


def test_refined_file_input_needs_fine_samples(tmp_path):
    out = tmp_path / "w"
    run("approximate", "--function", "f3", "--M", "50", "--output", str(out))
    proc = subprocess.run([CLI, "approximate", "--input", f"{out}.dense.csv", "--R", "2",
                           "--output", str(tmp_path / "y")], capture_output=True, text=True)
    assert proc.returncode == 2
    assert "fine-input" in proc.stderr


def test_refined_file_input_with_companion_file(tmp_path):
    # coarse samples of f3 at M = 100 plus the R = 2 fine boundary file:
    # m^R = 2*(25-1)+1 = 49 nodes per side at spacing 1/(R*M),
    # left block ascending from -1, then right block ascending to 1.
    m_half, refine, m_fine = 100, 2, 49
    rm = refine * m_half

    def f3(t):
        return math.exp(math.sin(2.7 * math.pi * t) + math.cos(math.pi * t))

    coarse = tmp_path / "coarse.csv"
    with open(coarse, "w") as fh:
        fh.write("t,re,im\n")
        for l in range(-m_half, m_half + 1):
            t = l / m_half
            fh.write(f"{t!r},{f3(t)!r},0\n")

    fine = tmp_path / "fine.csv"
    with open(fine, "w") as fh:
        fh.write("t,re,im\n")
        for j in range(m_fine):
            t = (-rm + j) / rm
            fh.write(f"{t!r},{f3(t)!r},0\n")
        for j in range(m_fine):
            t = (rm - m_fine + 1 + j) / rm
            fh.write(f"{t!r},{f3(t)!r},0\n")

    proc = run("approximate", "--input", str(coarse), "--fine-input", str(fine),
               "--R", "2", "--output", str(tmp_path / "ref"))
    assert "M = 100" in proc.stdout

    # same run driven by the built-in catalog must agree on the coefficients
    run("approximate", "--function", "f3", "--M", "100", "--R", "2",
        "--output", str(tmp_path / "cat"))
    _, rows_file = read_csv(tmp_path / "ref.coeffs.csv")
    _, rows_cat = read_csv(tmp_path / "cat.coeffs.csv")
    assert len(rows_file) == len(rows_cat)
    worst = max(abs(float(a[1]) - float(b[1])) + abs(float(a[2]) - float(b[2]))
                for a, b in zip(rows_file, rows_cat))
    assert worst <= 1e-12


def test_resolution_fulldata():
    proc = run("resolution", "--method", "fulldata", "--omega", "5", "--delta", "1e-10",
               "--Mmin", "10", "--Mmax", "60", "--T", "2", "--gammaF", "2")
    m_star = int(proc.stdout.strip())
    assert 15 <= m_star <= 25  # resolution constant T*gamma = 4 per unit omega


def test_sweep_with_failed_rows(tmp_path):
    out = tmp_path / "sweep.csv"
    # gamma = 0.5 with mdelta = 100 is unresolvable below T ~ 2 -> nan rows
    run("sweep", "--param", "Tdelta", "--values", "1.5,2.5,6", "--gamma", "0.5",
        "--mdelta", "100", "--omega", "5", "--M", "300", "--output", str(out))
    header, rows = read_csv(out)
    assert header == ["value", "max_error", "seconds"]
    assert len(rows) == 3
    assert rows[0][1] == "nan"
    assert float(rows[2][1]) < 1e-10


def test_sweep_validates_order():
    proc = subprocess.run([CLI, "sweep", "--param", "Tdelta", "--values", "6,5"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "increasing" in proc.stderr


def test_resolution_boundary():
    proc = run("resolution", "--omega", "20", "--delta", "1e-10", "--Mmin", "20",
               "--Mmax", "300")
    m_star = int(proc.stdout.strip())
    assert 20 <= m_star <= 140


def test_resolution_no_solution_exit_code():
    proc = subprocess.run([CLI, "resolution", "--omega", "300", "--delta", "1e-12",
                           "--Mmin", "10", "--Mmax", "40"], capture_output=True, text=True)
    assert proc.returncode == 3


def test_bench_csv(tmp_path):
    out = tmp_path / "bench.csv"
    run("bench", "--Ms", "4096,8192", "--repeats", "3", "--output", str(out))
    header, rows = read_csv(out)
    assert header == ["M", "seconds"]
    assert [int(r[0]) for r in rows] == [4096, 8192]
    assert all(float(r[1]) > 0 for r in rows)


def test_cache_save_load_and_tamper(tmp_path):
    path = tmp_path / "op.cache"
    run("cache", "save", "--output", str(path))
    run("cache", "load", "--input", str(path))

    # mismatched config is a validation error
    proc = subprocess.run([CLI, "cache", "load", "--input", str(path), "--mdelta", "30"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "mismatch" in proc.stderr

    # tampering trips the checksum
    text = path.read_text()
    mid = len(text) // 2
    idx = text.find("5", mid)
    tampered = text[:idx] + "6" + text[idx + 1:]
    path.write_text(tampered)
    proc = subprocess.run([CLI, "cache", "load", "--input", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "checksum" in proc.stderr


def test_compare(tmp_path):
    out = tmp_path / "cmp.csv"
    run("compare", "--function", "f1", "--M", "150", "--T", "2", "--gammaF", "2",
        "--output", str(out))
    header, rows = read_csv(out)
    assert header[0] == "function"
    b_err = float(rows[0][3])
    f_err = float(rows[0][4])
    assert b_err <= 1e-10
    assert f_err <= 1e-8
    assert math.isfinite(b_err) and math.isfinite(f_err)


def test_unknown_function_is_validation_error():
    proc = subprocess.run([CLI, "approximate", "--function", "nope", "--M", "50",
                           "--output", "/tmp/x"], capture_output=True, text=True)
    assert proc.returncode == 2
