"""Parameter sweeps, table reproduction and CSV serialization."""
import csv
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Optional, Tuple

import numpy as np

from . import __version__
from .conductivity import DEFAULT_TOL
from .critical import DEFAULT_GRID, DEFAULT_ROOT_TOL, find_critical_band
from .dispersion import damping_alpha, k_general, k_general_array
from .exceptions import DomainError, FilmPlasmonError
from .material import SODIUM, FilmConfig, MaterialParams, point_from_ratio

MODES = ("dispersion", "critical", "table1", "table2", "zratio")

TABLE_SETTINGS = {
    "table1": dict(eps=(0.1,), p=(1.0,), d_nm=tuple(float(d) for d in range(1, 10))),
    "table2": dict(eps=(0.1,), p=(0.1,), d_nm=tuple(float(d) for d in range(1, 11))),
}

ROW_FIELDS = ("Omega", "eps", "d_nm", "p", "re_k", "im_k", "re_alpha", "im_alpha", "exists", "error")


@dataclass(frozen=True)
class SweepSpec:
    mode: str = "dispersion"
    material: MaterialParams = SODIUM
    d_nm: Tuple[float, ...] = (10.0,)
    p: Tuple[float, ...] = (1.0,)
    eps: Tuple[float, ...] = (1e-5,)
    omega_min: float = 0.01
    omega_max: float = 0.99
    omega_steps: int = 99
    out: Optional[str] = None
    tol: float = DEFAULT_TOL
    root_tol: float = DEFAULT_ROOT_TOL
    grid_n: int = DEFAULT_GRID
    threads: int = 1
    with_omega: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode in TABLE_SETTINGS:
            for key, value in TABLE_SETTINGS[self.mode].items():
                object.__setattr__(self, key, value)
        for name in ("d_nm", "p", "eps"):
            values = tuple(float(v) for v in getattr(self, name))
            if not values:
                raise DomainError(f"{name} must list at least one value")
            object.__setattr__(self, name, values)
        if not 0 < self.omega_min < self.omega_max <= 2:
            raise DomainError("Omega range must satisfy 0 < omega_min < omega_max <= 2")
        if self.omega_steps < 2:
            raise DomainError("omega_steps must be at least 2")
        if self.threads < 1:
            raise DomainError("threads must be at least 1")
        for d, p, eps in self.tuples():
            FilmConfig.from_dimensionless(d, p, eps, self.material)
            if eps == 0 and p < 1:
                raise DomainError("eps = 0 is only supported with p = 1")

    def tuples(self):
        return list(product(self.d_nm, self.p, self.eps))

    def grid(self):
        return np.linspace(self.omega_min, self.omega_max, self.omega_steps)

    def film(self, d_nm, p, eps):
        return FilmConfig.from_dimensionless(d_nm, p, eps, self.material)

    def echo(self):
        data = asdict(self)
        data["material"] = asdict(self.material)
        return json.dumps(data, sort_keys=True)


@dataclass(frozen=True)
class SweepRow:
    Omega: float
    eps: float
    d_nm: float
    p: float
    re_k: Optional[float] = None
    im_k: Optional[float] = None
    re_alpha: Optional[float] = None
    im_alpha: Optional[float] = None
    exists: Optional[bool] = None
    error: Optional[str] = None


def _row(Omega, d_nm, p, eps, k, mat):
    alpha = damping_alpha(k, Omega * mat.plasma_frequency)
    return SweepRow(float(Omega), eps, d_nm, p, float(k.real), float(k.imag),
                    float(alpha.real), float(alpha.imag), bool(k.imag < k.real))


def _tuple_rows(spec, d_nm, p, eps):
    mat = spec.material
    film = spec.film(d_nm, p, eps)
    grid = spec.grid()
    try:
        ks = k_general_array(grid, film, mat, spec.tol)
    except FilmPlasmonError:
        ks = None
    rows = []
    for i, Omega in enumerate(grid):
        if ks is not None and np.isfinite(ks[i]):
            rows.append(_row(Omega, d_nm, p, eps, ks[i], mat))
            continue
        # fall back to a point evaluation to get the specific failure
        try:
            k = k_general(point_from_ratio(mat, film, Omega), film, mat, spec.tol).k
            rows.append(_row(Omega, d_nm, p, eps, k, mat))
        except FilmPlasmonError as exc:
            rows.append(SweepRow(float(Omega), eps, d_nm, p, error=type(exc).__name__))
    return rows


def _map(spec, fn, items):
    if spec.threads > 1:
        with ThreadPoolExecutor(max_workers=spec.threads) as pool:
            return list(pool.map(lambda args: fn(spec, *args), items))
    return [fn(spec, *args) for args in items]


def run_dispersion_sweep(spec):
    """Yield one :class:`SweepRow` per (d, p, eps, Omega) in grid order.

    Resonance and accuracy failures become rows with ``error`` set.
    """
    for rows in _map(spec, _tuple_rows, spec.tuples()):
        yield from rows


@dataclass(frozen=True)
class CriticalRow:
    d_nm: float
    p: float
    eps: float
    omega0: Optional[float] = None
    omega1: Optional[float] = None
    extra_crossings: Tuple[float, ...] = field(default=())
    error: Optional[str] = None


def _critical_row(spec, d_nm, p, eps):
    try:
        band = find_critical_band(spec.film(d_nm, p, eps), spec.material, spec.grid_n,
                                  spec.root_tol, phi_tol=spec.tol)
    except FilmPlasmonError as exc:
        return CriticalRow(d_nm, p, eps, error=type(exc).__name__)
    return CriticalRow(d_nm, p, eps, band.omega0, band.omega1, band.extra_crossings)


def run_critical(spec):
    return _map(spec, _critical_row, spec.tuples())


def format_table(spec, rows):
    """Human-readable critical-frequency table with 3 decimals."""
    show_second = spec.mode != "table1"
    title = {
        "table1": "Critical frequencies, specular boundary",
        "table2": "Critical frequencies, specular-diffuse boundary",
    }.get(spec.mode, "Critical frequencies")

    def fmt(x):
        return "-" if x is None else f"{x:.3f}"

    lines = [f"{title} ({spec.material.label})"]
    header = f"{'d [nm]':>8} {'eps':>8} {'p':>6} {'Omega0':>8}"
    lines.append(header + (f" {'Omega1':>8}" if show_second else ""))
    for r in rows:
        line = f"{r.d_nm:>8g} {r.eps:>8g} {r.p:>6g} {fmt(r.omega0):>8}"
        if show_second:
            line += f" {fmt(r.omega1):>8}"
        if r.error:
            line += f"  [{r.error}]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def run_table(spec):
    """Return ``(text, rows)`` for the table1/table2/critical modes."""
    rows = run_critical(spec)
    return format_table(spec, rows), rows


# CSV -------------------------------------------------------------------

def _num(x):
    return "" if x is None else format(x, ".17g")


def _flag(x):
    return "" if x is None else ("1" if x else "0")


def metadata_lines(spec):
    mat = spec.material
    return [
        f"# filmplasmon {__version__}",
        f"# material: {mat.label} omega_p={_num(mat.plasma_frequency)} v_F={_num(mat.fermi_velocity)}",
        f"# spec: {spec.echo()}",
    ]


def write_rows_csv(handle, spec, rows):
    """Write sweep rows with '#' metadata lines and a one-line header."""
    for line in metadata_lines(spec):
        handle.write(line + "\n")
    writer = csv.writer(handle, lineterminator="\n")
    fields = list(ROW_FIELDS) + (["omega_rad_s"] if spec.with_omega else [])
    writer.writerow(fields)
    for r in rows:
        values = [_num(r.Omega), _num(r.eps), _num(r.d_nm), _num(r.p), _num(r.re_k),
                  _num(r.im_k), _num(r.re_alpha), _num(r.im_alpha), _flag(r.exists),
                  r.error or ""]
        if spec.with_omega:
            values.append(_num(r.Omega * spec.material.plasma_frequency))
        writer.writerow(values)


def read_rows_csv(handle):
    """Parse a CSV written by :func:`write_rows_csv` back into SweepRows."""
    lines = (line for line in handle if not line.startswith("#"))
    rows = []
    for rec in csv.DictReader(lines):
        def num(key):
            return float(rec[key]) if rec[key] != "" else None
        exists = None if rec["exists"] == "" else rec["exists"] == "1"
        rows.append(SweepRow(float(rec["Omega"]), float(rec["eps"]), float(rec["d_nm"]),
                             float(rec["p"]), num("re_k"), num("im_k"), num("re_alpha"),
                             num("im_alpha"), exists, rec["error"] or None))
    return rows


def write_critical_csv(handle, spec, rows):
    for line in metadata_lines(spec):
        handle.write(line + "\n")
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(["d_nm", "p", "eps", "omega0", "omega1", "extra_crossings", "error"])
    for r in rows:
        writer.writerow([_num(r.d_nm), _num(r.p), _num(r.eps), _num(r.omega0), _num(r.omega1),
                         " ".join(_num(x) for x in r.extra_crossings), r.error or ""])


def write_zratio_csv(handle, spec, rows):
    for line in metadata_lines(spec):
        handle.write(line + "\n")
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(["Omega", "eps", "d_nm", "p", "z_ratio", "error"])
    for r in rows:
        z = None if r.error else r.re_k / r.im_k if r.im_k else float("inf")
        writer.writerow([_num(r.Omega), _num(r.eps), _num(r.d_nm), _num(r.p), _num(z),
                         r.error or ""])
