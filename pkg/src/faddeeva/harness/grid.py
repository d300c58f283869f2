"""Error maps and value grids over rectangular point lattices."""
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from .. import kernel
from ..dispatcher import w as dispatch_w
from ..errors import OracleError, ParameterError
from ..oracle import OracleConfig, SalzerParams, chiarella_reichel_w, reference_w, salzer_w

METHODS = ("dispatch", "rational", "small_y", "laplace_cf", "salzer", "chiarella")

UNDERFLOW = 1e-280
ABS_CHECK = 1e-14
SKIP_UNDERFLOW = "ref_underflow"
SKIP_ZERO_IM = "ref_zero_im"
SKIP_UNDERFLOW_IM = "ref_underflow_im"
SKIP_POLE = "pole"

CHIARELLA_STEP = 0.4


def format_float(v):
    """17 significant digits with a bare exponent, e.g. ``1.0000000000000000e0``."""
    v = float(v)
    if not math.isfinite(v):
        return repr(v)
    mant, exp = f"{v:.16e}".split("e")
    return f"{mant}e{int(exp)}"


@dataclass(frozen=True)
class GridSpec:
    """Lattice ``x_i = x_min + i (x_max - x_min)/(nx - 1)``, likewise for ``y``."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    def __post_init__(self):
        for name in ("x_min", "x_max", "y_min", "y_max"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ParameterError(f"{name} must be a finite number, got {v!r}")
        for name in ("nx", "ny"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v < 2:
                raise ParameterError(f"{name} must be an integer >= 2, got {v!r}")
        if not self.x_min < self.x_max:
            raise ParameterError("x_min must be below x_max")
        if not self.y_min < self.y_max:
            raise ParameterError("y_min must be below y_max")

    @property
    def x(self):
        return self.x_min + np.arange(self.nx) * ((self.x_max - self.x_min) / (self.nx - 1))

    @property
    def y(self):
        return self.y_min + np.arange(self.ny) * ((self.y_max - self.y_min) / (self.ny - 1))

    def points(self):
        """Complex lattice of shape ``(nx, ny)``; entry ``[i, j]`` is ``x_i + i y_j``."""
        return self.x[:, None] + 1j * self.y[None, :]


@dataclass
class PartSummary:
    max: float
    mean: float
    argmax: Optional[Tuple[float, float]]
    n_checked: int
    n_skipped: int
    abs_max_skipped: float

    def line(self, label):
        loc = "n/a" if self.argmax is None else f"({self.argmax[0]:.6g}, {self.argmax[1]:.6g})"
        return (f"{label}: max {self.max:.3e} at {loc}, mean {self.mean:.3e}, "
                f"checked {self.n_checked}, skipped {self.n_skipped} "
                f"(max abs error {self.abs_max_skipped:.3e})")


@dataclass
class ErrorGrid:
    """Componentwise relative errors on a lattice, indexed ``[i, j]`` like :meth:`GridSpec.points`.

    Where the reference component is zero or below ``1e-280`` the relative
    error is undefined.  Such entries are flagged in ``skip_re``/``skip_im``,
    hold the absolute error instead, and their reason token is collected in
    ``skipped``.
    """

    spec: GridSpec
    delta_re: np.ndarray
    delta_im: np.ndarray
    skip_re: np.ndarray
    skip_im: np.ndarray
    skipped: Dict[Tuple[int, int], str] = field(default_factory=dict)
    method: str = ""
    reference: str = ""

    def _part(self, delta, skip):
        checked = ~skip
        n_checked = int(checked.sum())
        if n_checked:
            masked = np.where(checked, delta, -np.inf)
            flat = int(np.argmax(masked))
            i, j = np.unravel_index(flat, delta.shape)
            loc = (float(self.spec.x[i]), float(self.spec.y[j]))
            mx, mean = float(masked.flat[flat]), float(delta[checked].mean())
        else:
            loc, mx, mean = None, 0.0, 0.0
        abs_max = float(delta[skip].max()) if skip.any() else 0.0
        return PartSummary(mx, mean, loc, n_checked, int(skip.sum()), abs_max)

    def summary(self):
        """``{"re": PartSummary, "im": PartSummary}``."""
        return {"re": self._part(self.delta_re, self.skip_re),
                "im": self._part(self.delta_im, self.skip_im)}

    def absolute_check_passed(self, tol=ABS_CHECK):
        """True when every skipped component has absolute error ``<= tol``."""
        s = self.summary()
        return s["re"].abs_max_skipped <= tol and s["im"].abs_max_skipped <= tol

    def summary_lines(self):
        s = self.summary()
        head = f"method={self.method} reference={self.reference} grid={self.spec.nx}x{self.spec.ny}"
        return [head, s["re"].line("delta_re"), s["im"].line("delta_im")]


@dataclass
class ValueGrid:
    spec: GridSpec
    values: np.ndarray
    method: str = ""


def _evaluate(method, z, salzer_params=None):
    """Method under test on an array of points; also returns a pole mask."""
    pole = np.zeros(z.shape, dtype=bool)
    if method == "dispatch":
        return dispatch_w(z), pole
    if method == "rational":
        return kernel.w_rational(z), pole
    if method == "small_y":
        return kernel.w_small_y(z), pole
    if method == "laplace_cf":
        return kernel.w_laplace_cf(z), pole
    if method == "salzer":
        return salzer_w(z.real, z.imag, salzer_params), pole
    if method == "chiarella":
        k = np.round(z.real / CHIARELLA_STEP)
        pole = z == k * CHIARELLA_STEP
        safe = np.where(pole, z + 0.5 * CHIARELLA_STEP, z)
        out = np.asarray(chiarella_reichel_w(safe, CHIARELLA_STEP).value, dtype=complex)
        out[pole] = np.nan
        return out, pole
    raise ParameterError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def value_grid(spec, method="dispatch", salzer_params=None):
    """Evaluate ``method`` at every lattice point."""
    vals, _ = _evaluate(method, spec.points(), salzer_params)
    return ValueGrid(spec, vals, method)


def error_map(spec, method="dispatch", reference=None, salzer_params=None):
    """Relative errors ``|(ref - value)/ref|`` of ``method`` per component.

    Raises :class:`OracleError` naming the point if the reference fails.
    """
    if method not in METHODS:
        raise ParameterError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    cfg = OracleConfig() if reference is None else reference
    z = spec.points()
    vals, pole = _evaluate(method, z, salzer_params)
    try:
        ref = np.asarray(reference_w(z, cfg), dtype=complex)
    except OracleError as exc:
        raise OracleError(f"reference {cfg.method.value} failed: {exc}") from exc

    abs_re = np.abs(vals.real - ref.real)
    abs_im = np.abs(vals.imag - ref.imag)
    under_re = np.abs(ref.real) < UNDERFLOW
    zero_im = ref.imag == 0
    under_im = ~zero_im & (np.abs(ref.imag) < UNDERFLOW)
    skip_re = under_re | pole
    skip_im = zero_im | under_im | pole
    with np.errstate(divide="ignore", invalid="ignore"):
        d_re = np.where(skip_re, abs_re, abs_re / np.abs(ref.real))
        d_im = np.where(skip_im, abs_im, abs_im / np.abs(ref.imag))
    d_re = np.where(pole, np.inf, d_re)
    d_im = np.where(pole, np.inf, d_im)

    skipped = {}
    for idx in zip(*np.nonzero(skip_re | skip_im)):
        i, j = int(idx[0]), int(idx[1])
        if pole[i, j]:
            skipped[(i, j)] = SKIP_POLE
            continue
        tokens = []
        if under_re[i, j]:
            tokens.append(SKIP_UNDERFLOW)
        if zero_im[i, j]:
            tokens.append(SKIP_ZERO_IM)
        if under_im[i, j]:
            tokens.append(SKIP_UNDERFLOW_IM)
        skipped[(i, j)] = "|".join(tokens)
    ref_label = cfg.method.value
    return ErrorGrid(spec, d_re, d_im, skip_re, skip_im, skipped, method, ref_label)


def emit_csv(grid, path):
    """Write a value grid (``x,y,re,im``) or error grid (``x,y,delta_re,delta_im,skip``).

    Rows run over ``x`` within each ``y``, starting at ``y_min``.
    """
    if not isinstance(grid, (ErrorGrid, ValueGrid)):
        raise ParameterError(f"cannot write {type(grid).__name__} as CSV")
    spec = grid.spec
    xs = [format_float(v) for v in spec.x]
    ys = [format_float(v) for v in spec.y]
    lines = []
    if isinstance(grid, ErrorGrid):
        lines.append("x,y,delta_re,delta_im,skip")
        for j in range(spec.ny):
            for i in range(spec.nx):
                reason = grid.skipped.get((i, j), "")
                lines.append(f"{xs[i]},{ys[j]},{format_float(grid.delta_re[i, j])},"
                             f"{format_float(grid.delta_im[i, j])},{reason}")
    else:
        lines.append("x,y,re,im")
        for j in range(spec.ny):
            for i in range(spec.nx):
                v = grid.values[i, j]
                lines.append(f"{xs[i]},{ys[j]},{format_float(v.real)},{format_float(v.imag)}")
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
