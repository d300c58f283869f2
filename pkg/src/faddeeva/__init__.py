"""Faddeeva function ``w(z) = exp(-z^2) erfc(-iz)`` and related special functions."""
from .dispatcher import DomainTag, FaddeevaResult, classify, faddeeva, w
from .errors import DomainError, FaddeevaError, OracleError, ParameterError, PoleError
from .family import (dawson, dawson_rational, erf_complex, fresnel, normal_phi,
                     plasma_dispersion, voigt_k, voigt_l)
from .kernel import (CoeffSet, default_coeffs, precompute_coeffs, theta, w_laplace_cf,
                     w_rational, w_small_y)

__version__ = "0.1.0"

__all__ = [
    "CoeffSet", "DomainError", "DomainTag", "FaddeevaError", "FaddeevaResult", "OracleError",
    "ParameterError", "PoleError", "classify", "dawson", "dawson_rational", "default_coeffs",
    "erf_complex", "faddeeva", "fresnel", "normal_phi", "plasma_dispersion",
    "precompute_coeffs", "theta", "voigt_k", "voigt_l", "w", "w_laplace_cf", "w_rational",
    "w_small_y",
]
