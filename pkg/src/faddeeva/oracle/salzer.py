"""Salzer's Poisson-summation approximation of ``w(x + iy)``.

Two equivalent arrangements are provided: the split real/imaginary form
(:func:`salzer_w`), which is the one that should be trusted numerically, and the
unsplit complex form (:func:`salzer_w_complexform`), kept as an algebraic
cross-check.  Both cost ``N`` hyperbolic evaluations per point, which is fine
for a test fixture.

The real-argument ``exp(y^2) erfc(y)`` comes from :func:`scipy.special.erfcx`.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from ..errors import DomainError, ParameterError


@dataclass(frozen=True)
class SalzerParams:
    """Fitting parameter ``a`` and number of summation terms ``n_terms``."""

    a: float = 0.56
    n_terms: int = 23

    def __post_init__(self):
        if not (isinstance(self.a, (int, float)) and math.isfinite(self.a) and self.a > 0):
            raise ParameterError(f"a must be finite and positive, got {self.a!r}")
        if isinstance(self.n_terms, bool) or not isinstance(self.n_terms, (int, np.integer)) \
                or self.n_terms < 1:
            raise ParameterError(f"n_terms must be a positive integer, got {self.n_terms!r}")


def _inputs(x, y, params):
    p = SalzerParams() if params is None else params
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if not (np.all(np.isfinite(xa)) and np.all(np.isfinite(ya))):
        raise ParameterError("x and y must be finite")
    if np.any(ya < 0):
        raise DomainError("Salzer's form needs y >= 0")
    xa, ya = np.broadcast_arrays(xa, ya)
    return xa, ya, p, xa.ndim == 0


def _sinc(t):
    # sin(t)/t with sinc(0) = 1; numpy's sinc is the normalised variant
    return np.sinc(t / math.pi)


def salzer_w(x, y, params=None):
    """Real and imaginary parts of Salzer's approximation, summed separately.

    ``cosh(2anx) - cos(2xy)`` is evaluated as
    ``2 sinh^2(anx) + 2 sin^2(xy)`` to avoid cancellation near the origin.
    """
    xa, ya, p, scalar = _inputs(x, y, params)
    a = p.a
    two_xy = 2.0 * xa * ya
    ex = special.erfcx(ya)
    c2, s2 = np.cos(two_xy), np.sin(two_xy)
    sum_re = np.zeros(xa.shape)
    sum_im = np.zeros(xa.shape)
    for n in range(1, p.n_terms + 1):
        an = a * n
        weight = math.exp(-an * an) / (an * an + ya * ya)
        sum_re += weight * (2.0 * np.sinh(an * xa) ** 2 + 2.0 * np.sin(xa * ya) ** 2)
        sum_im += weight * (ya * s2 + an * np.sinh(2.0 * an * xa))
    gx = np.exp(-xa * xa)
    k = 2.0 * a / math.pi
    re = gx * (ex * c2 + k * (xa * np.sin(xa * ya) * _sinc(xa * ya) + ya * sum_re))
    im = gx * (-ex * s2 + k * (xa * _sinc(two_xy) + sum_im))
    out = re + 1j * im
    return complex(out) if scalar else out


def salzer_w_complexform(x, y, params=None):
    """Salzer's approximation in the unsplit complex arrangement.

    ``w ~ exp(-z^2) {erfc(y) - (a/pi) exp(-y^2) [f(y, -x)
    + 2 sum_n exp(-a^2 n^2)/(a^2 n^2 + y^2) (y - exp(2ixy)(y cosh(2anx) + i an sinh(2anx)))]}``
    with ``f(y, -x) = (1 - exp(2ixy))/y``, or ``-2ix`` at ``y = 0``.
    """
    xa, ya, p, scalar = _inputs(x, y, params)
    a = p.a
    rot = np.exp(2j * xa * ya)
    with np.errstate(divide="ignore", invalid="ignore"):
        f = np.where(ya != 0, (1.0 - rot) / ya, -2j * xa)
    acc = np.zeros(xa.shape, dtype=complex)
    for n in range(1, p.n_terms + 1):
        an = a * n
        weight = math.exp(-an * an) / (an * an + ya * ya)
        acc += weight * (ya - rot * (ya * np.cosh(2.0 * an * xa) + 1j * an * np.sinh(2.0 * an * xa)))
    z = xa + 1j * ya
    bracket = f + 2.0 * acc
    out = np.exp(-(z * z)) * (special.erfc(ya) - (a / math.pi) * np.exp(-ya * ya) * bracket)
    return complex(out) if scalar else out
