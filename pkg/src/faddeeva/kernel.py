"""Core approximations of the Faddeeva function ``w(z) = exp(-z**2) erfc(-iz)``.

Three kernels cover the closed upper half-plane between them:

* :func:`w_rational` -- the shifted rational series, accurate for ``y >= 0.1``
  inside the circle ``|z| <= 8``;
* :func:`w_small_y` -- ``exp(-z**2)`` plus a rational approximation of Dawson's
  integral, accurate in the band ``0 <= y < 0.1``;
* :func:`w_laplace_cf` -- the truncated Laplace continued fraction for
  ``|z| > 8``.

The kernels evaluate wherever they are asked.  Choosing the right one is the
job of :mod:`faddeeva.dispatcher`.  All of them accept a scalar or an array of
complex arguments and return the same shape.
"""
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _dd
from .errors import ParameterError

DEFAULT_N_TERMS = 23
DEFAULT_SIGMA = 1.5
CF_DEPTH = 11

_SQRT_PI = math.sqrt(math.pi)
_MU0 = 1j / _SQRT_PI

# indirection so tests can count complex exponentials in w_small_y
_cexp = np.exp


def default_step(n_terms=DEFAULT_N_TERMS):
    """Fourier step ``h = 6 / (2 pi N)``, which places the last node at 6."""
    return 6.0 / (2.0 * math.pi * n_terms)


@dataclass(frozen=True, eq=False)
class CoeffSet:
    """Expansion coefficients for fixed ``N``, ``sigma`` and ``h``.

    ``A``, ``B`` and ``C`` feed the rational series; ``alpha``, ``beta`` and
    ``gamma`` feed the theta function of the small-y approximation.  Arrays are
    read-only, so one instance can be shared freely.
    """

    n_terms: int
    sigma: float
    step: float
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    scale: float  # 2 h exp(sigma**2)
    theta_shift: np.ndarray  # 4 sigma**2 gamma_n

    def __repr__(self):
        return (f"CoeffSet(n_terms={self.n_terms}, sigma={self.sigma!r}, "
                f"step={self.step!r})")


def _check_positive(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, float, np.floating, np.integer)):
        raise ParameterError(f"{name} must be a real number, got {value!r}")
    if not math.isfinite(value) or value <= 0:
        raise ParameterError(f"{name} must be finite and positive, got {value!r}")


def precompute_coeffs(n_terms=DEFAULT_N_TERMS, sigma=DEFAULT_SIGMA, step=None):
    """Tabulate the coefficients for ``n = 1..n_terms``.

    ``step`` defaults to :func:`default_step`.  The exponent and trigonometric
    arguments are carried in double-double so the stored values are within a
    few ulp of the exact ones; ``exp(-gamma_n)`` at ``gamma_n ~ 36`` and
    ``sin``/``cos`` near their zeros amplify argument rounding by two to
    three orders of magnitude otherwise.
    """
    if isinstance(n_terms, bool) or not isinstance(n_terms, (int, np.integer)):
        raise ParameterError(f"n_terms must be an integer, got {n_terms!r}")
    if n_terms < 1:
        raise ParameterError(f"n_terms must be >= 1, got {n_terms}")
    _check_positive("sigma", sigma)
    if step is None:
        step = default_step(n_terms)
    _check_positive("step", step)
    n_terms, sigma, step = int(n_terms), float(sigma), float(step)

    two_pi_h = _dd.mul(_dd.mul(_dd.PI, _dd.dd(2.0)), _dd.dd(step))
    sigma2 = _dd.two_prod(sigma, sigma)
    four_h = _dd.dd(4.0 * step)

    A, B, C, alpha, beta = (np.empty(n_terms) for _ in range(5))
    for i, n in enumerate(range(1, n_terms + 1)):
        c = _dd.mul(two_pi_h, _dd.dd(n))
        g = _dd.mul(c, c)
        arg = _dd.mul(_dd.dd(2.0 * sigma), c)  # 4 pi h n sigma
        s, co = _dd.sin(arg), _dd.cos(arg)
        e_shift = _dd.exp(_dd.add(sigma2, _dd.neg(g)))  # exp(sigma^2 - C^2)
        e_plain = _dd.exp(_dd.neg(g))

        # A = 8 pi h^2 n E sin = 4h C E sin;  B = 4h E cos
        A[i] = _dd.to_float(_dd.mul(_dd.mul(four_h, c), _dd.mul(e_shift, s)))
        B[i] = _dd.to_float(_dd.mul(four_h, _dd.mul(e_shift, co)))
        C[i] = _dd.to_float(c)
        # alpha = sigma A / (h e^{sigma^2}) = 4 sigma C e^{-C^2} sin;  beta = 2 e^{-C^2} cos
        alpha[i] = _dd.to_float(_dd.mul(_dd.mul(_dd.dd(4.0 * sigma), c), _dd.mul(e_plain, s)))
        beta[i] = _dd.to_float(_dd.mul(_dd.dd(2.0), _dd.mul(e_plain, co)))

    gamma = C * C
    theta_shift = 4.0 * sigma * sigma * gamma
    for arr in (A, B, C, alpha, beta, gamma, theta_shift):
        arr.flags.writeable = False
    return CoeffSet(n_terms=n_terms, sigma=sigma, step=step, A=A, B=B, C=C,
                    alpha=alpha, beta=beta, gamma=gamma,
                    scale=2.0 * step * math.exp(sigma * sigma),
                    theta_shift=theta_shift)


@lru_cache(maxsize=None)
def default_coeffs():
    """The shared operating-point table ``N=23, sigma=1.5, h=6/(2 pi N)``."""
    return precompute_coeffs()


def _prepare(z):
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise ParameterError("z must be finite (NaN and Inf are rejected)")
    return arr, arr.ndim == 0


def _finish(out, scalar):
    return complex(out) if scalar else out


def w_rational(z, coeffs=None):
    """Rational approximation ``psi(z + i sigma)``.

    ``psi(t) = 2 i h exp(sigma^2)/t + sum_n (A_n - i t B_n) / (C_n^2 - t^2)``.
    Intended for ``y >= 0.1``; the shift keeps every denominator away from zero
    in the upper half-plane.
    """
    c = default_coeffs() if coeffs is None else coeffs
    zarr, scalar = _prepare(z)
    t = zarr + 1j * c.sigma
    tt = t * t
    it = 1j * t
    acc = 1j * c.scale / t
    for a, b, g in zip(c.A, c.B, c.gamma):
        acc = acc + (a - it * b) / (g - tt)
    return _finish(acc, scalar)


def theta(u, coeffs=None):
    """Theta function ``1/u + sum_n (alpha_n + beta_n (u - gamma_n)) / (4 sigma^2 gamma_n + (gamma_n - u)^2)``.

    Summed in index order without compensation.
    """
    c = default_coeffs() if coeffs is None else coeffs
    u = np.asarray(u, dtype=complex)
    acc = 1.0 / u
    for al, be, g, d in zip(c.alpha, c.beta, c.gamma, c.theta_shift):
        acc = acc + (al + be * (u - g)) / (d + (g - u) ** 2)
    return acc


def w_small_y(z, coeffs=None):
    """Small-y approximation ``exp(-z^2) + 2 i h exp(sigma^2) z theta(z^2 + sigma^2)``.

    Intended for the band ``0 <= y < 0.1``, ``|z| <= 8``.  The only
    transcendental call is the single ``exp(-z^2)``.
    """
    c = default_coeffs() if coeffs is None else coeffs
    zarr, scalar = _prepare(z)
    zz = zarr * zarr
    th = theta(zz + c.sigma * c.sigma, c)
    out = _cexp(-zz) + 1j * c.scale * zarr * th
    return _finish(out, scalar)


def w_laplace_cf(z, depth=CF_DEPTH):
    """Laplace continued fraction ``(i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))``.

    ``depth`` half-integer coefficients ``1/2 .. depth/2`` are used, evaluated
    from the bottom up.  Accurate for ``|z| > 8`` at the default depth.
    """
    if isinstance(depth, bool) or not isinstance(depth, (int, np.integer)) or depth < 1:
        raise ParameterError(f"depth must be a positive integer, got {depth!r}")
    zarr, scalar = _prepare(z)
    coeff = np.arange(1, depth + 1) / 2.0
    with np.errstate(divide="ignore", invalid="ignore"):
        inner = coeff[-1] / zarr
        for k in coeff[-2::-1]:
            inner = k / (zarr - inner)
        out = _MU0 / (zarr - inner)
    return _finish(out, scalar)
