"""Command-line front end: ``eval``, ``grid`` and ``bench``."""
import argparse
import sys

from .. import family
from ..dispatcher import w
from ..errors import DomainError, FaddeevaError, OracleError, ParameterError
from ..oracle import OracleConfig, OracleMethod
from .bench import DOMAINS, bench, compare_paths
from .grid import METHODS, GridSpec, emit_csv, error_map, format_float, value_grid

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3

FUNCS = {
    "w": lambda z: w(z),
    "dawson": family.dawson,
    "erf": family.erf_complex,
    "voigt_k": lambda z: family.voigt_k(z.real, z.imag),
    "voigt_l": lambda z: family.voigt_l(z.real, z.imag),
    "z": family.plasma_dispersion,
    "fresnel": family.fresnel,
    "phi": family.normal_phi,
}

COMPARE = {
    "quadrature": OracleMethod.QUADRATURE,
    "salzer": OracleMethod.SALZER,
    "cf_deep": OracleMethod.CF_DEEP,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    p = _Parser(prog="faddeeva", description="Evaluate w(z) and related functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate one function at x + iy")
    e.add_argument("--x", type=float, required=True)
    e.add_argument("--y", type=float, required=True)
    e.add_argument("--func", choices=sorted(FUNCS), default="w")

    g = sub.add_parser("grid", help="value grid or error map written as CSV")
    for name in ("--xmin", "--xmax", "--ymin", "--ymax"):
        g.add_argument(name, type=float, required=True)
    g.add_argument("--nx", type=int, required=True)
    g.add_argument("--ny", type=int, required=True)
    g.add_argument("--method", choices=METHODS, required=True)
    g.add_argument("--compare", choices=sorted(COMPARE))
    g.add_argument("--out", required=True)

    b = sub.add_parser("bench", help="time the dispatcher on random points")
    b.add_argument("--count", type=int, required=True)
    b.add_argument("--domain", choices=sorted(DOMAINS), required=True)
    b.add_argument("--seed", type=int, required=True)
    return p


def _cmd_eval(args):
    z = complex(args.x, args.y)
    val = complex(FUNCS[args.func](z))
    print(f"{format_float(val.real)} {format_float(val.imag)}")


def _cmd_grid(args):
    spec = GridSpec(args.xmin, args.xmax, args.ymin, args.ymax, args.nx, args.ny)
    if args.compare is None:
        grid = value_grid(spec, args.method)
        lines = [f"method={args.method} grid={spec.nx}x{spec.ny} (values)"]
    else:
        grid = error_map(spec, args.method, OracleConfig(method=COMPARE[args.compare]))
        lines = grid.summary_lines()
    emit_csv(grid, args.out)
    for line in lines:
        print(line)


def _cmd_bench(args):
    report = bench(args.count, args.domain, args.seed)
    for line in report.lines():
        print(line)
    if args.domain == "band":
        cmp = compare_paths(args.count, args.seed, repeats=1)
        print(f"small_y/rational time ratio {cmp.ratio:.3f} "
              f"({cmp.small_y_seconds:.6f} s vs {cmp.rational_seconds:.6f} s)")


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = {"eval": _cmd_eval, "grid": _cmd_grid, "bench": _cmd_bench}[args.command]
    try:
        handler(args)
    except (ParameterError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OracleError, FaddeevaError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
