"""Chiarella-Reichel series for ``w(z)``.

    w(z) ~ i h/(pi z) - i (2 h z/pi) sum_{n>=1} exp(-n^2 h^2)/(n^2 h^2 - z^2)
           + 2 exp(-z^2)/(1 - exp(-2 pi i z/h)) {1 - H(y - pi/h)}

The neglected remainder carries a factor ``exp(-pi^2/h^2)``, so ``h`` is kept
below one.  Individual terms are singular at ``z = kh`` for every integer
``k``; the singularities cancel in exact arithmetic but not in floating point.
"""
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..errors import DomainError, ParameterError, PoleError

POLE_TOL = 1e-6
_TERM_TOL = 1e-20


@dataclass(frozen=True)
class ChiarellaResult:
    """``value`` plus ``near_pole``, set when ``min_k |z - kh| < 1e-6``."""

    value: Union[complex, np.ndarray]
    near_pole: Union[bool, np.ndarray]


def heaviside(t):
    """Step function with ``H(0) = 1/2``."""
    t = np.asarray(t, dtype=float)
    return np.where(t > 0, 1.0, np.where(t < 0, 0.0, 0.5))


def chiarella_reichel_w(z, step=0.4):
    """Evaluate the series at ``z`` (``Im z >= 0``) with spacing ``step`` in (0, 1).

    Raises :class:`PoleError` if any ``z`` is exactly ``kh``.
    """
    if isinstance(step, bool) or not isinstance(step, (int, float)) or not 0 < step < 1:
        raise ParameterError(f"step must lie in (0, 1), got {step!r}")
    h = float(step)
    zarr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(zarr)):
        raise ParameterError("z must be finite")
    if np.any(zarr.imag < 0):
        raise DomainError("the series is used for Im(z) >= 0")

    k = np.round(zarr.real / h)
    dist = np.abs(zarr - k * h)
    if np.any(dist == 0):
        raise PoleError(f"z lies on a pole z = kh (h = {h})")
    near = dist < POLE_TOL

    zz = zarr * zarr
    n_max = int(math.ceil(math.sqrt(-math.log(_TERM_TOL)) / h))
    acc = np.zeros(zarr.shape, dtype=complex)
    for n in range(1, n_max + 1):
        nh2 = (n * h) ** 2
        acc += math.exp(-nh2) / (nh2 - zz)
    with np.errstate(over="ignore", invalid="ignore"):
        gate = 1.0 - heaviside(zarr.imag - math.pi / h)
        tail = np.where(gate > 0,
                        2.0 * np.exp(-zz) / (1.0 - np.exp(-2j * math.pi * zarr / h)),
                        0.0)
    value = 1j * h / (math.pi * zarr) - 2j * h * zarr / math.pi * acc + gate * tail
    if zarr.ndim == 0:
        return ChiarellaResult(complex(value), bool(near))
    return ChiarellaResult(value, near)
