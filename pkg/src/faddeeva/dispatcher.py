"""Full-plane evaluation of ``w(z)``.

Arguments in the lower half-plane are first conjugated into the upper one,
classified into one of three regions, routed to the matching kernel, and
finally mapped back with ``w(z) = 2 exp(-z^2) - w(-z)``.
"""
import enum
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError
from .kernel import _prepare, default_coeffs, w_laplace_cf, w_rational, w_small_y

INNER_RADIUS = 8.0
BAND_HEIGHT = 0.1


class DomainTag(enum.IntEnum):
    EXTERNAL = 0
    PRIMARY_INNER = 1
    SECONDARY_BAND = 2


@dataclass(frozen=True)
class FaddeevaResult:
    """Value of ``w(z)`` together with how it was obtained.

    For array input every field is an array of the input's shape; ``region``
    then holds :class:`DomainTag` integer codes.
    """

    value: Union[complex, np.ndarray]
    region: Union[DomainTag, np.ndarray]
    reflected: Union[bool, np.ndarray]
    overflow: Union[bool, np.ndarray]


def _classify_array(z):
    if np.any(z.imag < 0):
        raise DomainError("classify expects Im(z) >= 0; reflect first")
    region = np.full(z.shape, DomainTag.PRIMARY_INNER, dtype=np.int8)
    inner = np.abs(z) <= INNER_RADIUS
    region[~inner] = DomainTag.EXTERNAL
    region[inner & (z.imag < BAND_HEIGHT)] = DomainTag.SECONDARY_BAND
    return region


def classify(z):
    """Region of an upper-half-plane point.

    ``|z| > 8`` is external; otherwise ``y < 0.1`` is the band and the rest is
    the primary subdomain.  The circle itself and the line ``y = 0.1`` belong
    to the inner side and to the primary subdomain respectively.
    """
    zarr, scalar = _prepare(z)
    region = _classify_array(zarr)
    return DomainTag(int(region)) if scalar else region


def faddeeva(z, coeffs=None):
    """Evaluate ``w(z)`` anywhere in the finite complex plane.

    Returns a :class:`FaddeevaResult`.  On the real axis outside the circle
    the real part is set to ``exp(-x^2)``, which the continued fraction cannot
    represent.  Deep in the lower half-plane the
    reflection term ``2 exp(-z^2)`` overflows; such entries come back infinite
    (or NaN) with ``overflow`` set instead of raising.
    """
    c = default_coeffs() if coeffs is None else coeffs
    zarr, scalar = _prepare(z)
    neg = zarr.imag < 0
    zu = np.where(neg, np.conj(zarr), zarr)
    region = _classify_array(zu)

    value = np.empty(zu.shape, dtype=complex)
    for tag, kernel in ((DomainTag.EXTERNAL, lambda v: w_laplace_cf(v)),
                        (DomainTag.PRIMARY_INNER, lambda v: w_rational(v, c)),
                        (DomainTag.SECONDARY_BAND, lambda v: w_small_y(v, c))):
        sel = region == tag
        if np.any(sel):
            value[sel] = kernel(zu[sel])

    # the truncated fraction has no real part on the real axis; K(x, 0) = exp(-x^2) exactly
    axis = (region == DomainTag.EXTERNAL) & (zu.imag == 0)
    if np.any(axis):
        value[axis] = np.exp(-(zu.real[axis] ** 2)) + 1j * value[axis].imag

    if np.any(neg):
        zn = zu[neg]
        with np.errstate(over="ignore", invalid="ignore"):
            value[neg] = np.conj(2.0 * np.exp(-(zn * zn)) - value[neg])
    overflow = ~np.isfinite(value)

    if scalar:
        return FaddeevaResult(complex(value), DomainTag(int(region)), bool(neg), bool(overflow))
    return FaddeevaResult(value, region, neg, overflow)


def w(z, coeffs=None):
    """Shorthand for ``faddeeva(z).value``."""
    return faddeeva(z, coeffs).value
