"""Command-line driver for dispersion sweeps and critical-frequency tables.

Exit codes: 0 success, 2 invalid arguments, 3 numerical failure, 4 output error.
"""
import argparse
import sys

from .exceptions import DomainError, FilmPlasmonError
from .material import MATERIALS, MaterialParams
from .sweep import (
    MODES, SweepSpec, run_dispersion_sweep, run_table, write_critical_csv,
    write_rows_csv, write_zratio_csv,
)

EXIT_OK = 0
EXIT_SPEC = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def _floats(text):
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="filmplasmon",
        description="Surface plasmon dispersion in thin metal films (antisymmetric mode).",
    )
    parser.add_argument("--mode", choices=MODES, default="dispersion")
    parser.add_argument("--d-nm", type=_floats, default=(10.0,), help="film thicknesses in nm, comma-separated")
    parser.add_argument("--p", type=_floats, default=(1.0,), help="specularity coefficients, comma-separated")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--eps", type=_floats, help="collision ratios nu / omega_p, comma-separated")
    group.add_argument("--nu-ratio", type=_floats, help="alias of --eps")
    parser.add_argument("--omega-min", type=float, default=0.01)
    parser.add_argument("--omega-max", type=float, default=0.99)
    parser.add_argument("--omega-steps", type=int, default=99)
    parser.add_argument("--material", choices=sorted(MATERIALS) + ["custom"], default="sodium")
    parser.add_argument("--omega-p", type=float, help="plasma frequency in rad/s (custom material)")
    parser.add_argument("--v-f", type=float, help="Fermi velocity in cm/s (custom material)")
    parser.add_argument("--out", help="output CSV path (default: standard output)")
    parser.add_argument("--tol", type=float, default=1e-10, help="relative tolerance for phi")
    parser.add_argument("--root-tol", type=float, default=1e-6, help="bisection tolerance on Omega")
    parser.add_argument("--grid-n", type=int, default=2048, help="scan points for critical modes")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--with-omega", action="store_true", help="add an omega [rad/s] column")
    return parser


def _material(args):
    if args.material == "custom":
        if args.omega_p is None or args.v_f is None:
            raise DomainError("--material custom needs --omega-p and --v-f")
        return MaterialParams(args.omega_p, args.v_f, "custom")
    if args.omega_p is not None or args.v_f is not None:
        raise DomainError("--omega-p/--v-f only apply to --material custom")
    return MATERIALS[args.material]


def spec_from_args(args):
    eps = args.eps or args.nu_ratio or (1e-5,)
    return SweepSpec(
        mode=args.mode, material=_material(args), d_nm=args.d_nm, p=args.p, eps=eps,
        omega_min=args.omega_min, omega_max=args.omega_max, omega_steps=args.omega_steps,
        out=args.out, tol=args.tol, root_tol=args.root_tol, grid_n=args.grid_n,
        threads=args.threads, with_omega=args.with_omega,
    )


def run(spec, stdout):
    # open the output before computing so an unwritable path fails fast
    handle = open(spec.out, "w", newline="") if spec.out else stdout
    try:
        if spec.mode == "dispersion":
            rows = list(run_dispersion_sweep(spec))
            write_rows_csv(handle, spec, rows)
            return any(r.error for r in rows)
        if spec.mode == "zratio":
            rows = list(run_dispersion_sweep(spec))
            write_zratio_csv(handle, spec, rows)
            return any(r.error for r in rows)
        text, rows = run_table(spec)
        stdout.write(text)
        if handle is stdout:
            stdout.write("\n")
        write_critical_csv(handle, spec, rows)
        return any(r.error for r in rows)
    finally:
        if handle is not stdout:
            handle.close()


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = spec_from_args(args)
    except DomainError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_SPEC
    try:
        had_errors = run(spec, stdout)
    except OSError as exc:
        stderr.write(f"error: cannot write output: {exc}\n")
        return EXIT_IO
    except FilmPlasmonError as exc:
        stderr.write(f"numerical failure: {exc}\n")
        return EXIT_NUMERIC
    if had_errors and spec.mode in ("table1", "table2", "critical"):
        stderr.write("numerical failure in at least one table row\n")
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
