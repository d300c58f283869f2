"""Power series ``w(z) = sum_n (iz)^n / Gamma(n/2 + 1)`` for small ``|z|``."""
import math

import numpy as np

from ..errors import DomainError, ParameterError

MAX_RADIUS = 1.5


def maclaurin_w(z, max_terms=200):
    """Sum the series until a term drops below ``1e-17`` of the partial sum.

    Even and odd powers run as two chains, each advanced by ``(iz)^2/(n/2 + 1)``.
    Raises :class:`DomainError` for ``|z| > 1.5``, where cancellation between
    terms would eat into double precision.
    """
    if isinstance(max_terms, bool) or not isinstance(max_terms, (int, np.integer)) or max_terms < 1:
        raise ParameterError(f"max_terms must be a positive integer, got {max_terms!r}")
    zarr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(zarr)):
        raise ParameterError("z must be finite")
    if np.any(np.abs(zarr) > MAX_RADIUS):
        raise DomainError(f"maclaurin_w needs |z| <= {MAX_RADIUS}")
    iz = 1j * zarr
    iz2 = iz * iz
    even = np.ones(zarr.shape, dtype=complex)
    odd = iz * (2.0 / math.sqrt(math.pi))
    total = even + odd
    n = 0
    while n + 3 < max_terms:
        even = even * iz2 / (n / 2.0 + 1.0)
        odd = odd * iz2 / ((n + 1) / 2.0 + 1.0)
        total = total + even + odd
        n += 2
        if np.all(np.maximum(np.abs(even), np.abs(odd)) <= 1e-17 * np.abs(total)):
            break
    return complex(total) if zarr.ndim == 0 else total
