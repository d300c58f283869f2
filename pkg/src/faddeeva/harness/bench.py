"""Throughput measurements for the dispatcher and its kernels."""
import time
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from .. import kernel
from ..dispatcher import DomainTag, _classify_array, faddeeva
from ..errors import ParameterError

DOMAINS = {
    "band": (0.0, 6.0, 0.0, 0.1),
    "box15": (0.0, 15.0, 0.0, 15.0),
    "box10k": (0.0, 10000.0, 0.0, 10000.0),
}

_KERNELS = {
    DomainTag.EXTERNAL: lambda z, c: kernel.w_laplace_cf(z),
    DomainTag.PRIMARY_INNER: kernel.w_rational,
    DomainTag.SECONDARY_BAND: kernel.w_small_y,
}


@dataclass
class BenchReport:
    """Timing of one batch.  ``per_region_breakdown`` maps region name to ``(count, seconds)``."""

    count: int
    domain_label: str
    seed: int
    elapsed_seconds: float
    evals_per_second: float
    per_region_breakdown: Dict[str, Tuple[int, float]] = field(default_factory=dict)

    @property
    def seconds_per_eval(self):
        return self.elapsed_seconds / self.count

    def lines(self):
        out = [f"domain={self.domain_label} count={self.count} seed={self.seed}",
               f"elapsed {self.elapsed_seconds:.6f} s, {self.evals_per_second:.4g} evals/s, "
               f"{1e9 * self.seconds_per_eval:.2f} ns/eval"]
        for name, (n, sec) in self.per_region_breakdown.items():
            per = 1e9 * sec / n if n else 0.0
            out.append(f"  {name}: {n} points, {sec:.6f} s ({per:.2f} ns/eval)")
        return out


def sample_points(count, domain_label, seed):
    """``count`` uniform points over the labelled box from a seeded PCG64 stream."""
    if isinstance(count, bool) or not isinstance(count, (int, np.integer)) or count < 1:
        raise ParameterError(f"count must be a positive integer, got {count!r}")
    if domain_label not in DOMAINS:
        raise ParameterError(f"unknown domain {domain_label!r}; expected one of {', '.join(DOMAINS)}")
    x0, x1, y0, y1 = DOMAINS[domain_label]
    rng = np.random.default_rng(seed)
    x = rng.uniform(x0, x1, count)
    y = rng.uniform(y0, y1, count)
    return x + 1j * y


def bench(count, domain_label, seed):
    """Time :func:`faddeeva.dispatcher.faddeeva` on ``count`` random points.

    Point generation and the coefficient table are set up before the clock
    starts.  The per-region seconds come from running each kernel alone on the
    points the dispatcher sends it.
    """
    z = sample_points(count, domain_label, seed)
    coeffs = kernel.default_coeffs()
    start = time.perf_counter()
    faddeeva(z, coeffs)
    elapsed = time.perf_counter() - start

    region = _classify_array(z)
    breakdown = {}
    for tag in DomainTag:
        sub = z[region == tag]
        t0 = time.perf_counter()
        if sub.size:
            _KERNELS[tag](sub, coeffs)
        breakdown[tag.name] = (int(sub.size), time.perf_counter() - t0)
    return BenchReport(int(count), domain_label, int(seed), elapsed,
                       count / elapsed if elapsed > 0 else float("inf"), breakdown)


@dataclass
class PathComparison:
    count: int
    small_y_seconds: float
    rational_seconds: float

    @property
    def ratio(self):
        return self.small_y_seconds / self.rational_seconds


def compare_paths(count=10**6, seed=1, repeats=3):
    """Per-batch time of the small-y kernel on band points against the rational kernel on
    primary-subdomain points, best of ``repeats``."""
    rng = np.random.default_rng(seed)
    band = rng.uniform(0.0, 6.0, count) + 1j * rng.uniform(0.0, 0.1, count)
    # PrimaryInner points: |z| <= 8, y >= 0.1
    r = 8.0 * np.sqrt(rng.uniform(0.0, 1.0, 4 * count))
    phi = rng.uniform(0.0, np.pi, 4 * count)
    inner = r * np.exp(1j * phi)
    inner = inner[inner.imag >= 0.1][:count]
    coeffs = kernel.default_coeffs()

    def best(fn, pts):
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn(pts, coeffs)
            times.append(time.perf_counter() - t0)
        return min(times)

    return PathComparison(count, best(kernel.w_small_y, band), best(kernel.w_rational, inner))
