"""Independent reference evaluators of ``w(z)`` used for validation."""
from .chiarella import ChiarellaResult, chiarella_reichel_w, heaviside
from .maclaurin import maclaurin_w
from .quadrature import fourier_quadrature_w, quadrature_w
from .reference import OracleConfig, OracleMethod, cf_deep_w, reference_w
from .salzer import SalzerParams, salzer_w, salzer_w_complexform

__all__ = [
    "ChiarellaResult", "OracleConfig", "OracleMethod", "SalzerParams",
    "cf_deep_w", "chiarella_reichel_w", "fourier_quadrature_w", "heaviside",
    "maclaurin_w", "quadrature_w", "reference_w", "salzer_w", "salzer_w_complexform",
]
