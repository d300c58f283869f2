"""Special functions expressed through ``w(z)``.

Everything here routes through :func:`faddeeva.dispatcher.w`, except
:func:`dawson_rational`, which evaluates the explicit rational form of Dawson's
integral directly from the coefficient table.

Functions that rotate or scale their argument (``erf_complex``, ``fresnel``,
``normal_phi``) can push it deep into the lower half-plane where the reflection
term overflows.  At double precision the safe box for ``erf_complex`` is
``|Re z|, |Im z| <= 26``; beyond it the results may be infinite or NaN, as
flagged by the dispatcher.
"""
import math

import numpy as np

from .dispatcher import w
from .errors import ParameterError
from .kernel import _finish, _prepare, default_coeffs

_SQRT_PI = math.sqrt(math.pi)
_SQRT2 = math.sqrt(2.0)


def _real_input(x, name="x"):
    arr = np.asarray(x)
    if np.iscomplexobj(arr):
        raise ParameterError(f"{name} must be real")
    arr = arr.astype(float)
    if not np.all(np.isfinite(arr)):
        raise ParameterError(f"{name} must be finite")
    return arr, arr.ndim == 0


def dawson(z):
    """Dawson's integral ``exp(-z^2) int_0^z exp(t^2) dt``.

    Uses ``daw(z) = (sqrt(pi)/(2i)) (w(z) - exp(-z^2))``; on the real axis this
    is taken as ``(sqrt(pi)/2) Im w(x)`` so the exponential never has to be
    subtracted back out.
    """
    zarr, scalar = _prepare(z)
    wz = np.asarray(w(zarr))
    with np.errstate(over="ignore", invalid="ignore"):
        general = (_SQRT_PI / 2j) * (wz - np.exp(-(zarr * zarr)))
    on_axis = (0.5 * _SQRT_PI * wz.imag).astype(complex)
    out = np.where(zarr.imag == 0, on_axis, general)
    return _finish(out, scalar)


def dawson_rational(x, coeffs=None):
    """Rational approximation of Dawson's integral for real ``x``::

        daw(x) ~ (sqrt(pi) x / 2) [2 e^{s^2} h / (x^2 + s^2)
                 + sum_n (2 A_n s + B_n (x^2 + s^2 - C_n^2))
                         / (C_n^4 + 2 C_n^2 (s^2 - x^2) + (x^2 + s^2)^2)]
    """
    c = default_coeffs() if coeffs is None else coeffs
    xarr, scalar = _real_input(x)
    s2 = c.sigma * c.sigma
    x2 = xarr * xarr
    u = x2 + s2
    acc = c.scale / u
    for a, b, g in zip(c.A, c.B, c.gamma):
        acc = acc + (2.0 * a * c.sigma + b * (u - g)) / (g * g + 2.0 * g * (s2 - x2) + u * u)
    out = 0.5 * _SQRT_PI * xarr * acc
    return float(out) if scalar else out


def _upper_half(x, y):
    xarr, xs = _real_input(x, "x")
    yarr, ys = _real_input(y, "y")
    if np.any(yarr < 0):
        raise ParameterError("y must be >= 0 (K and L are defined on the upper half-plane)")
    return xarr + 1j * yarr, xs and ys


def voigt_k(x, y):
    """Voigt function ``K(x, y) = Re w(x + iy)`` for ``y >= 0``."""
    z, scalar = _upper_half(x, y)
    out = w(z).real
    return float(out) if scalar else out


def voigt_l(x, y):
    """L-function ``L(x, y) = Im w(x + iy)`` for ``y >= 0``."""
    z, scalar = _upper_half(x, y)
    out = w(z).imag
    return float(out) if scalar else out


def erf_complex(z):
    """Error function of complex argument, ``1 - exp(-z^2) w(iz)``.

    Loses relative accuracy as ``|z| -> 0`` where the result is computed as a
    difference from one.
    """
    zarr, scalar = _prepare(z)
    with np.errstate(over="ignore", invalid="ignore"):
        out = 1.0 - np.exp(-(zarr * zarr)) * w(1j * zarr)
    return _finish(out, scalar)


def plasma_dispersion(z):
    """Plasma dispersion function ``Z(z) = i sqrt(pi) w(z)``."""
    zarr, scalar = _prepare(z)
    return _finish(1j * _SQRT_PI * w(zarr), scalar)


def fresnel(z):
    """Fresnel integral ``F(z) = int_0^z exp(i pi t^2 / 2) dt``.

    Evaluated as ``(1 + i) [1 - exp(i pi z^2 / 2) w(sqrt(pi) (1 + i) z / 2)] / 2``.
    Validated for moderate ``|z|``; for large complex ``z`` the exponential
    factor grows and no accuracy is claimed.
    """
    zarr, scalar = _prepare(z)
    with np.errstate(over="ignore", invalid="ignore"):
        arg = 0.5 * _SQRT_PI * (1 + 1j) * zarr
        out = (1 + 1j) * (1.0 - np.exp(0.5j * math.pi * (zarr * zarr)) * w(arg)) / 2.0
    return _finish(out, scalar)


def normal_phi(z):
    """Normal distribution integral ``Phi(z) = (1/2) [1 - exp(-z^2/2) w(iz/sqrt(2))]``.

    This is ``int_0^z exp(-t^2/2) dt / sqrt(2 pi)``, i.e. ``erf(z/sqrt(2))/2``.
    """
    zarr, scalar = _prepare(z)
    u = zarr / _SQRT2
    with np.errstate(over="ignore", invalid="ignore"):
        out = 0.5 * (1.0 - np.exp(-(u * u)) * w(1j * u))
    return _finish(out, scalar)
