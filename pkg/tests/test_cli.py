import math
import subprocess
import sys

import pytest

from faddeeva.harness.cli import main
from faddeeva.oracle import reference_w


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_origin(capsys):
    code, out, _ = _run(capsys, "eval", "--x", "0", "--y", "0")
    assert code == 0
    assert out.strip() == "1.0000000000000000e0 0.0000000000000000e0"


def test_eval_voigt_k(capsys):
    code, out, _ = _run(capsys, "eval", "--x", "2", "--y", "0", "--func", "voigt_k")
    assert code == 0
    assert float(out.split()[0]) == pytest.approx(math.exp(-4), rel=1e-16)
    assert out.split()[0] == "1.8315638888734179e-2"


def test_eval_matches_reference(capsys):
    _, out, _ = _run(capsys, "eval", "--x", "1", "--y", "0.5")
    re, im = map(float, out.split())
    ref = reference_w(1 + 0.5j)
    assert abs(complex(re, im) - ref) <= 1e-14 * abs(ref)


@pytest.mark.parametrize("func", ["w", "dawson", "erf", "voigt_k", "voigt_l", "z", "fresnel", "phi"])
def test_eval_all_functions(capsys, func):
    code, out, _ = _run(capsys, "eval", "--x", "0.7", "--y", "0.2", "--func", func)
    assert code == 0 and len(out.split()) == 2


def test_eval_unknown_function(capsys):
    with pytest.raises(SystemExit) as info:
        main(["eval", "--x", "1", "--y", "1", "--func", "gamma"])
    assert info.value.code == 2


def test_eval_parameter_error(capsys):
    code, _, err = _run(capsys, "eval", "--x", "1", "--y", "-1", "--func", "voigt_k")
    assert code == 2 and "error" in err
    code, _, _ = _run(capsys, "eval", "--x", "nan", "--y", "0")
    assert code == 2


def test_missing_flag_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["grid", "--xmin", "0"])
    assert info.value.code == 2


def test_grid_value_output(capsys, tmp_path):
    out = tmp_path / "v.csv"
    code, _, _ = _run(capsys, "grid", "--xmin", "0", "--xmax", "1", "--ymin", "0", "--ymax", "1",
                      "--nx", "2", "--ny", "2", "--method", "dispatch", "--out", str(out))
    assert code == 0
    assert out.read_text().splitlines()[0] == "x,y,re,im"


@pytest.mark.parametrize("compare", ["quadrature", "salzer"])
def test_grid_error_output(capsys, tmp_path, compare):
    out = tmp_path / "e.csv"
    code, stdout, _ = _run(capsys, "grid", "--xmin", "0", "--xmax", "2", "--ymin", "0", "--ymax", "0.09",
                           "--nx", "5", "--ny", "3", "--method", "small_y", "--compare", compare,
                           "--out", str(out))
    assert code == 0
    assert "delta_re" in stdout
    assert out.read_text().splitlines()[0] == "x,y,delta_re,delta_im,skip"


def test_grid_cf_deep(capsys, tmp_path):
    out = tmp_path / "e.csv"
    args = ["grid", "--xmin", "9", "--xmax", "12", "--ymin", "0.5", "--ymax", "3", "--nx", "3",
            "--ny", "3", "--method", "laplace_cf", "--compare", "cf_deep", "--out", str(out)]
    assert _run(capsys, *args)[0] == 0
    args[2] = "0"  # now inside the circle, outside the deep fraction's domain
    assert _run(capsys, *args)[0] == 2


def test_grid_bad_spec(capsys, tmp_path):
    code, _, _ = _run(capsys, "grid", "--xmin", "1", "--xmax", "0", "--ymin", "0", "--ymax", "1",
                      "--nx", "2", "--ny", "2", "--method", "dispatch", "--out", str(tmp_path / "x"))
    assert code == 2


def test_grid_io_failure(capsys, tmp_path):
    code, _, _ = _run(capsys, "grid", "--xmin", "0", "--xmax", "1", "--ymin", "0", "--ymax", "1",
                      "--nx", "2", "--ny", "2", "--method", "dispatch",
                      "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 3


def test_grid_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        _run(capsys, "grid", "--xmin", "0", "--xmax", "8", "--ymin", "0", "--ymax", "0.09",
             "--nx", "9", "--ny", "4", "--method", "dispatch", "--compare", "quadrature", "--out", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_bench(capsys):
    code, out, _ = _run(capsys, "bench", "--count", "20000", "--domain", "band", "--seed", "1")
    assert code == 0
    assert "seed=1" in out and "SECONDARY_BAND" in out and "ratio" in out


def test_bench_bad_count(capsys):
    assert _run(capsys, "bench", "--count", "0", "--domain", "box15", "--seed", "1")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "faddeeva", "eval", "--x", "0", "--y", "0"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.strip() == "1.0000000000000000e0 0.0000000000000000e0"
