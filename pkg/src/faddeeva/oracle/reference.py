"""Routing between the reference evaluators."""
import enum
import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, ParameterError
from .maclaurin import MAX_RADIUS, maclaurin_w
from .quadrature import quadrature_w
from .salzer import SalzerParams, salzer_w

CF_DEEP_DEPTH = 40
CF_MIN_RADIUS = 8.0
AUTO_RADIUS = 8.0


class OracleMethod(enum.Enum):
    AUTO = "auto"
    QUADRATURE = "quadrature"
    MACLAURIN = "maclaurin"
    SALZER = "salzer"
    CF_DEEP = "cf_deep"


@dataclass(frozen=True)
class OracleConfig:
    """Reference method and quadrature tolerances.

    ``AUTO`` uses quadrature for ``|z| <= 8`` and the depth-40 continued
    fraction beyond.
    """

    method: OracleMethod = OracleMethod.AUTO
    abs_tol: float = 1e-15
    rel_tol: float = 1e-15
    salzer: SalzerParams = SalzerParams()

    def __post_init__(self):
        if not isinstance(self.method, OracleMethod):
            raise ParameterError(f"unknown oracle method {self.method!r}")
        for name in ("abs_tol", "rel_tol"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ParameterError(f"{name} must be positive, got {v!r}")


def cf_deep_w(z, depth=CF_DEEP_DEPTH):
    """Laplace continued fraction of ``depth`` half-integer coefficients, contracted.

    Pairs of levels of ``1/(z - c_1/(z - c_2/(z - ...)))`` with ``c_j = j/2``
    are merged into one fraction in ``z^2``::

        w = (i z/sqrt(pi)) / (z^2 - c_1 - c_1 c_2/(z^2 - c_2 - c_3 - c_3 c_4/(...)))

    with ``c_j = 0`` beyond ``depth``, which reproduces the truncated fraction
    exactly.  Evaluated from the bottom up.
    """
    if isinstance(depth, bool) or not isinstance(depth, (int, np.integer)) or depth < 1:
        raise ParameterError(f"depth must be a positive integer, got {depth!r}")
    zarr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(zarr)):
        raise ParameterError("z must be finite")

    def c(j):
        return j / 2.0 if j <= depth else 0.0

    z2 = zarr * zarr
    tail = np.zeros(zarr.shape, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        for k in range((depth + 1) // 2, 0, -1):
            tail = (c(2 * k - 1) * c(2 * k)) / (z2 - (c(2 * k) + c(2 * k + 1)) - tail)
        out = (1j / math.sqrt(math.pi)) * zarr / (z2 - c(1) - tail)
    return complex(out) if zarr.ndim == 0 else out


def _upper(z, config):
    m = config.method
    r = np.abs(z)
    if m is OracleMethod.QUADRATURE:
        return quadrature_w(z, abs_tol=config.abs_tol, rel_tol=config.rel_tol)
    if m is OracleMethod.MACLAURIN:
        return maclaurin_w(z)
    if m is OracleMethod.SALZER:
        return salzer_w(z.real, z.imag, config.salzer)
    if m is OracleMethod.CF_DEEP:
        if np.any(r < CF_MIN_RADIUS):
            raise DomainError(f"the deep continued fraction reference needs |z| >= {CF_MIN_RADIUS}")
        return cf_deep_w(z)
    out = np.empty(z.shape, dtype=complex)
    inner = r <= AUTO_RADIUS
    if np.any(inner):
        out[inner] = quadrature_w(z[inner], abs_tol=config.abs_tol, rel_tol=config.rel_tol)
    if np.any(~inner):
        out[~inner] = cf_deep_w(z[~inner])
    return out


def reference_w(z, config=None):
    """Reference value of ``w(z)`` for any finite ``z``.

    Lower half-plane points use ``w(z) = 2 exp(-z^2) - w(-z)``.
    """
    cfg = OracleConfig() if config is None else config
    zarr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(zarr)):
        raise ParameterError("z must be finite")
    flat = zarr.ravel()
    neg = flat.imag < 0
    zu = np.where(neg, -flat, flat)
    out = np.asarray(_upper(zu, cfg), dtype=complex).reshape(flat.shape)
    if np.any(neg):
        zn = flat[neg]
        with np.errstate(over="ignore", invalid="ignore"):
            out[neg] = 2.0 * np.exp(-(zn * zn)) - out[neg]
    out = out.reshape(zarr.shape)
    return complex(out) if zarr.ndim == 0 else out
