"""Error maps, value grids, CSV output and benchmarks."""
from .bench import BenchReport, PathComparison, bench, compare_paths, sample_points
from .grid import (METHODS, ErrorGrid, GridSpec, ValueGrid, emit_csv, error_map,
                   format_float, value_grid)

__all__ = [
    "BenchReport", "ErrorGrid", "GridSpec", "METHODS", "PathComparison", "ValueGrid",
    "bench", "compare_paths", "emit_csv", "error_map", "format_float", "sample_points",
    "value_grid",
]
