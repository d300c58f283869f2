"""Quadrature references for ``w(z)`` in the closed upper half-plane.

:func:`quadrature_w` integrates the principal-value forms of the Voigt and
L-functions,

    K(x, y) = (y/pi)  int exp(-t^2) / (y^2 + (x-t)^2) dt,
    L(x, y) = (1/pi) PV int exp(-t^2) (x-t) / (y^2 + (x-t)^2) dt,

after folding them about ``t = x`` so both integrands are non-negative::

    K = (y/pi) int_0^inf [g(x-s) + g(x+s)] / (y^2 + s^2) ds
    L = (1/pi) int_0^inf s g(x-s) (1 - exp(-4xs)) / (y^2 + s^2) ds,   g(u) = exp(-u^2).

With no sign cancellation, each part is resolved to a relative accuracy close to
machine precision even where it is tiny compared with ``|w|``, e.g. the real part
next to the real axis.  Below ``s = 1`` the Lorentzian peak is
flattened by ``s = y tan(phi)`` on ``[0, y]`` and ``s = exp(u)`` above it.

:func:`fourier_quadrature_w` integrates the Fourier-Laplace form
``(1/sqrt(pi)) int_0^inf exp(-t^2/4 - y t + i x t) dt``.  Its error is absolute,
about ``1e-16`` relative to ``|w|``, so it is only a cross-check.
"""
import math

import numpy as np

from ..errors import DomainError, OracleError, ParameterError
from ._gk import integrate

TAIL = 40.0
_CHUNK = 8192
_S_MIN = 1e-30


def _prepare_upper(z):
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise ParameterError("z must be finite")
    if np.any(arr.imag < 0):
        raise DomainError("quadrature needs Im(z) >= 0; reflect with w(z) = 2exp(-z^2) - w(-z)")
    return arr


def _check_tols(abs_tol, rel_tol):
    if not abs_tol >= 1e-15 * (1 - 1e-12):
        raise ParameterError(f"abs_tol must be >= 1e-15, got {abs_tol!r}")
    if not rel_tol > 0:
        raise ParameterError(f"rel_tol must be positive, got {rel_tol!r}")


def _near_integrand(x, y):
    def f(phi, owner):
        xo = x[owner][:, None]
        tp = np.tan(phi)
        s = y[owner][:, None] * tp
        g_minus = np.exp(-((xo - s) ** 2))
        k = g_minus + np.exp(-((xo + s) ** 2))
        l = tp * g_minus * -np.expm1(-4.0 * xo * s)
        return np.stack([k, l])
    return f


def _log_integrand(x, y):
    with np.errstate(divide="ignore"):
        log_y = np.log(y)

    def f(u, owner):
        xo = x[owner][:, None]
        s = np.exp(u)
        # r = y/s <= 1; via logs so subnormal y and s keep full precision
        r = np.exp(log_y[owner][:, None] - u)
        g_minus = np.exp(-((xo - s) ** 2))
        den = 1.0 + r * r
        k = r * (g_minus + np.exp(-((xo + s) ** 2))) / den
        l = g_minus * -np.expm1(-4.0 * xo * s) / den
        return np.stack([k, l])
    return f


def _linear_integrand(x, y):
    def f(s, owner):
        xo = x[owner][:, None]
        yo = y[owner][:, None]
        g_minus = np.exp(-((xo - s) ** 2))
        den = yo * yo + s * s
        k = yo * (g_minus + np.exp(-((xo + s) ** 2))) / den
        l = s / den * g_minus * -np.expm1(-4.0 * xo * s)
        return np.stack([k, l])
    return f


def _breaks(lo, hi, *interior):
    """Rows ``[lo, sorted interior points strictly inside (lo, hi), hi]``."""
    cols = [np.where((p > lo) & (p < hi), p, np.nan) for p in interior]
    inner = np.sort(np.column_stack(cols), axis=1)  # NaN sorts last
    brk = np.column_stack([lo, inner, hi])
    # forward-fill the NaN gaps so every row is non-decreasing
    for j in range(1, brk.shape[1] - 1):
        bad = ~np.isfinite(brk[:, j])
        brk[bad, j] = brk[bad, j - 1]
    return brk


def _voigt_chunk(x, y, abs_tol, rel_tol):
    # s in [0, a] with s = y tan(phi), a = min(y, 1); [a, 1] with s = exp(u);
    # [1, x + 40] directly.  Keeping the mapped pieces below s = 1 bounds the
    # effect of rounding in s inside exp(-(x - s)^2).
    n = x.size
    val = np.zeros((2, n))
    err = np.zeros((2, n))
    # every piece of K and of L is non-negative, so per-piece relative
    # targets add up to the same relative target for the sum
    tol = rel_tol
    one = np.ones(n)
    a = np.minimum(y, 1.0)

    def add(mask, integrand, brk):
        if np.any(mask):
            idx = np.nonzero(mask)[0]
            try:
                v, e = integrate(integrand(x[idx], y[idx]), brk[idx], abs_tol=abs_tol, rel_tol=tol)
            except OracleError as exc:
                k = idx[exc.index] if exc.index is not None else None
                raise OracleError(str(exc), index=k) from exc
            val[:, idx] += v
            err[:, idx] += e

    with np.errstate(divide="ignore", invalid="ignore"):
        phi_hi = np.arctan2(a, y)
        add(y > 0, _near_integrand,
            _breaks(np.zeros(n), phi_hi, np.arctan2(x, y), 0.5 * phi_hi))
        lo = np.log(np.where(y > 0, a, _S_MIN))
        # the Lorentzian factor is a unit-width bump in u just above log(y)
        add(lo < 0, _log_integrand,
            _breaks(lo, np.zeros(n), np.log(x), 0.5 * lo, lo + 2.0, lo + 6.0, lo + 18.0, lo + 54.0))
        add(x + TAIL > 1.0, _linear_integrand,
            _breaks(one, x + TAIL, x - 3.0, x, x + 3.0))

    K, L = val / math.pi
    errK, errL = err / math.pi
    on_axis = y == 0
    K[on_axis] = np.exp(-(x[on_axis] ** 2))
    errK[on_axis] = 0.0
    return K, L, errK, errL


def quadrature_w(z, abs_tol=1e-15, rel_tol=1e-15, return_error=False):
    """Reference ``w(z)`` for ``Im z >= 0`` by adaptive quadrature.

    Each component is refined until its error estimate is at most
    ``min(abs_tol, rel_tol*|component|)``.  With ``return_error`` the estimate
    is returned too, as a complex number ``errK + i errL``.

    Raises :class:`~faddeeva.errors.OracleError` when refinement stalls.
    """
    _check_tols(abs_tol, rel_tol)
    zarr = _prepare_upper(z)
    flat = zarr.ravel()
    x = np.abs(flat.real)
    sign = np.where(flat.real < 0, -1.0, 1.0)
    y = flat.imag.copy()
    val = np.empty(flat.size, dtype=complex)
    err = np.empty(flat.size, dtype=complex)
    for start in range(0, flat.size, _CHUNK):
        sl = slice(start, start + _CHUNK)
        try:
            K, L, eK, eL = _voigt_chunk(x[sl], y[sl], abs_tol, rel_tol)
        except OracleError as exc:
            if exc.index is None:
                raise
            k = start + exc.index
            raise OracleError(f"quadrature failed at z={complex(flat[k])!r}: {exc}", index=k) from exc
        val[sl] = K + 1j * sign[sl] * L
        err[sl] = eK + 1j * eL
    val = val.reshape(zarr.shape)
    err = err.reshape(zarr.shape)
    if zarr.ndim == 0:
        val, err = complex(val), complex(err)
    return (val, err) if return_error else val


def _fourier_integrand(x, y):
    def f(t, owner):
        xo = x[owner][:, None]
        env = np.exp(-0.25 * t * t - y[owner][:, None] * t)
        return np.stack([env * np.cos(xo * t), env * np.sin(xo * t)])
    return f


def fourier_quadrature_w(z, abs_tol=1e-15, return_error=False):
    """Reference ``w(z)`` from ``(1/sqrt(pi)) int_0^40 exp(-t^2/4 - y t) exp(i x t) dt``.

    The Gaussian factor is below ``1e-170`` past ``t = 40``.  Only the absolute
    error is controlled.
    """
    _check_tols(abs_tol, 1.0)
    zarr = _prepare_upper(z)
    flat = zarr.ravel()
    x, y = flat.real.copy(), flat.imag.copy()
    val = np.empty(flat.size, dtype=complex)
    err = np.empty(flat.size, dtype=complex)
    scale = 1.0 / math.sqrt(math.pi)
    for start in range(0, flat.size, _CHUNK):
        sl = slice(start, start + _CHUNK)
        n = x[sl].size
        brk = np.tile(np.linspace(0.0, TAIL, 17), (n, 1))
        v, e = integrate(_fourier_integrand(x[sl], y[sl]), brk,
                         abs_tol=abs_tol * math.sqrt(math.pi), rel_tol=None)
        val[sl] = scale * (v[0] + 1j * v[1])
        err[sl] = scale * (e[0] + 1j * e[1])
    val = val.reshape(zarr.shape)
    err = err.reshape(zarr.shape)
    if zarr.ndim == 0:
        val, err = complex(val), complex(err)
    return (val, err) if return_error else val
