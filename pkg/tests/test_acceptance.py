"""Acceptance criteria, one test each, at the stated tolerances.

Each test records its measured figure with ``record_property("measured", ...)``;
``conftest.py`` prints a PASS/FAIL line per criterion at the end of the run.
"""
import math

import numpy as np
import pytest

from faddeeva import DomainTag, classify, dawson_rational, faddeeva, voigt_l, w
from faddeeva import kernel
from faddeeva.harness import GridSpec, bench, compare_paths, error_map
from faddeeva.oracle import OracleConfig, OracleMethod, SalzerParams, cf_deep_w, quadrature_w

QUAD = OracleConfig(method=OracleMethod.QUADRATURE, abs_tol=1e-15)

# 0 <= y < 0.1 with 200 rows, step 5e-4; |z| <= 8 is applied as a mask
BAND = GridSpec(0.0, 8.0, 0.0, 0.0995, 2000, 200)
BOX = GridSpec(0.0, 10.0, 0.0, 10.0, 500, 500)


def _in_circle(spec):
    return np.abs(spec.points()) <= 8.0


def _masked_max(delta, skip, mask):
    sel = mask & ~skip
    return float(delta[sel].max()), float(delta[sel].mean())


@pytest.fixture(scope="module")
def band_map():
    return error_map(BAND, "dispatch", QUAD)


@pytest.mark.criterion("1 identity anchor: w(0) = 1 within 1e-15 per part")
def test_criterion_01_origin(record_property):
    v = faddeeva(0j).value
    err = max(abs(v.real - 1.0), abs(v.imag))
    record_property("measured", f"max abs error {err:.3e}")
    assert abs(v.real - 1.0) <= 1e-15
    assert abs(v.imag) <= 1e-15


@pytest.mark.criterion("2 band accuracy: max delta <= 5e-14 on 2000x200 band grid, x=0 abs <= 1e-14")
def test_criterion_02_band(band_map, record_property):
    mask = _in_circle(BAND)
    re_max, _ = _masked_max(band_map.delta_re, band_map.skip_re, mask)
    im_max, _ = _masked_max(band_map.delta_im, band_map.skip_im, mask)
    col0_im = band_map.delta_im[0, :]
    col0_ok = bool(np.all(band_map.skip_im[0, :] | (col0_im <= 1e-14)))
    col0_abs = float(np.where(band_map.skip_im[0, :], col0_im, 0.0).max())
    record_property("measured", f"max delta_re {re_max:.3e}, max delta_im {im_max:.3e}, "
                                f"x=0 abs im {col0_abs:.3e}")
    assert band_map.absolute_check_passed(1e-14)
    assert col0_ok
    assert re_max <= 5e-14
    assert im_max <= 5e-14


@pytest.fixture(scope="module")
def box_map():
    return error_map(BOX, "dispatch", QUAD)


def _primary_mask():
    return classify(BOX.points()) == DomainTag.PRIMARY_INNER


@pytest.mark.criterion("3a primary subdomain: max delta <= 1e-14 on 500x500 grid of [0,10]^2")
def test_criterion_03a_primary_max(box_map, record_property):
    mask = _primary_mask()
    re_max, _ = _masked_max(box_map.delta_re, box_map.skip_re, mask)
    im_max, _ = _masked_max(box_map.delta_im, box_map.skip_im, mask)
    record_property("measured", f"max delta_re {re_max:.3e}, max delta_im {im_max:.3e}")
    assert re_max <= 1e-14
    assert im_max <= 1e-14


@pytest.mark.criterion("3b primary subdomain: mean delta <= 5e-15")
def test_criterion_03b_primary_mean(box_map, record_property):
    mask = _primary_mask()
    _, re_mean = _masked_max(box_map.delta_re, box_map.skip_re, mask)
    _, im_mean = _masked_max(box_map.delta_im, box_map.skip_im, mask)
    record_property("measured", f"mean delta_re {re_mean:.3e}, mean delta_im {im_mean:.3e}")
    assert re_mean <= 5e-15
    assert im_mean <= 5e-15


@pytest.mark.criterion("4 external domain: dispatch vs depth-40 fraction within 1e-14 per part")
def test_criterion_04_external(record_property):
    rng = np.random.default_rng(4)
    # uniform over the half annulus 8 < |z| <= 1000
    r = np.maximum(np.sqrt(rng.uniform(64.0, 1e6, 10_000)), np.nextafter(8.0, 9.0))
    z = r * np.exp(1j * rng.uniform(0.0, math.pi, r.size))
    got = w(z)
    ref = cf_deep_w(z, 40)
    d_re = np.abs(got.real - ref.real) / np.abs(ref.real)
    d_im = np.abs(got.imag - ref.imag) / np.abs(ref.imag)
    record_property("measured", f"max delta_re {d_re.max():.3e}, max delta_im {d_im.max():.3e}")
    assert d_re.max() <= 1e-14
    assert d_im.max() <= 1e-14


@pytest.mark.criterion("5 reflection identity: |w(z)+w(-z)-2exp(-z^2)| <= 1e-13 |2exp(-z^2)|")
def test_criterion_05_reflection(record_property):
    rng = np.random.default_rng(5)
    r = 6.0 * np.sqrt(rng.uniform(0.0, 1.0, 10_000))
    z = r * np.exp(1j * rng.uniform(-math.pi, math.pi, r.size))
    g = 2.0 * np.exp(-(z * z))
    ratio = np.abs(w(z) + w(-z) - g) / np.abs(g)
    bad = int((ratio > 1e-13).sum())
    record_property("measured", f"max ratio {ratio.max():.3e}, {bad} of {z.size} above 1e-13")
    assert ratio.max() <= 1e-13


@pytest.mark.criterion("6 ODE residual: |w' + 2zw - 2i/sqrt(pi)| <= 1e-6 relative")
def test_criterion_06_ode(record_property):
    rng = np.random.default_rng(6)
    z = rng.uniform(-5.0, 5.0, 100) + 1j * rng.uniform(0.1, 5.0, 100)
    h = 1e-6
    deriv = (w(z + h) - w(z - h)) / (2 * h)
    rhs = 2j / math.sqrt(math.pi)
    res = np.abs(deriv + 2 * z * w(z) - rhs) / abs(rhs)
    record_property("measured", f"max residual {res.max():.3e}")
    assert res.max() <= 1e-6


def _salzer_worst(a, band_ref_spec=BAND):
    grid = error_map(band_ref_spec, "salzer", QUAD, salzer_params=SalzerParams(a=a, n_terms=23))
    mask = _in_circle(band_ref_spec)
    re_max, _ = _masked_max(grid.delta_re, grid.skip_re, mask)
    im_max, _ = _masked_max(grid.delta_im, grid.skip_im, mask)
    return max(re_max, im_max)


@pytest.mark.criterion("7 Salzer: worst band error a=0.5 within a decade of 1e-8, a=0.56 of 1e-14")
def test_criterion_07_salzer(record_property):
    spec = GridSpec(0.0, 8.0, 0.0, 0.0995, 1000, 200)
    worst_50 = _salzer_worst(0.5, spec)
    worst_56 = _salzer_worst(0.56, spec)
    record_property("measured", f"a=0.5: {worst_50:.3e}, a=0.56: {worst_56:.3e}")
    assert 1e-9 <= worst_50 <= 1e-7
    assert 1e-15 <= worst_56 <= 1e-13


def _rel(a, b):
    return np.abs(a - b) / np.abs(b)


@pytest.mark.criterion("8 boundary continuity: branch jump <= 1e-12 relative, branches within 1e-13 of oracle")
def test_criterion_08_seams(record_property):
    half = 5e-4
    phi = math.pi * (np.arange(100) + 0.5) / 100
    ray = np.exp(1j * phi)
    circ_in, circ_out = (8.0 - half) * ray, (8.0 + half) * ray
    xs = np.linspace(-7.9, 7.9, 100)
    line_lo, line_hi = xs + 1j * (0.1 - half), xs + 1j * (0.1 + half)

    # the inner side of the circle is band or primary depending on y
    inner_val = np.where(circ_in.imag < 0.1, kernel.w_small_y(circ_in), kernel.w_rational(circ_in))
    pairs = {
        "circle": (circ_in, inner_val, circ_out, kernel.w_laplace_cf(circ_out)),
        "line": (line_lo, kernel.w_small_y(line_lo), line_hi, kernel.w_rational(line_hi)),
    }
    worst_jump = worst_oracle = 0.0
    for a, va, b, vb in pairs.values():
        ra, rb = quadrature_w(a), quadrature_w(b)
        worst_oracle = max(worst_oracle, _rel(va, ra).max(), _rel(vb, rb).max())
        jump = np.abs((vb - va) - (rb - ra)) / np.abs(ra)
        worst_jump = max(worst_jump, jump.max())
    record_property("measured", f"max jump mismatch {worst_jump:.3e}, max oracle error {worst_oracle:.3e}")
    assert worst_oracle <= 1e-13
    assert worst_jump <= 1e-12


@pytest.mark.criterion("9 route equivalence: dawson_rational vs (sqrt(pi)/2) L(x,0) within 1e-13")
def test_criterion_09_dawson_routes(record_property):
    x = np.random.default_rng(9).uniform(-8.0, 8.0, 1000)
    a = dawson_rational(x)
    b = 0.5 * math.sqrt(math.pi) * voigt_l(x, np.zeros_like(x))
    rel = np.abs(a - b) / np.abs(b)
    record_property("measured", f"max relative difference {rel.max():.3e}")
    assert rel.max() <= 1e-13


@pytest.mark.criterion("10 performance: small-y path <= 2x rational path per eval on 1e6 points")
def test_criterion_10_speed(record_property, capsys):
    cmp = compare_paths(10**6, seed=1, repeats=3)
    report = bench(10**6, "band", seed=1)
    with capsys.disabled():
        print()
        for line in report.lines():
            print("    " + line)
    record_property("measured", f"ratio {cmp.ratio:.3f}")
    assert report.seed == 1 and report.count == 10**6
    assert sum(n for n, _ in report.per_region_breakdown.values()) == report.count
    assert cmp.ratio <= 2.0
