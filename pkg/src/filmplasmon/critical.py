"""Critical frequencies bounding the band where the surface wave propagates.

A surface plasmon is taken to exist where Im k < Re k.  The crossings of
g(Omega) = Im k - Re k are located by a uniform scan followed by bisection.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .conductivity import DEFAULT_TOL
from .dispersion import k_general, k_general_array
from .exceptions import AmbiguousCrossingError, DomainError
from .material import point_from_ratio

OMEGA_MIN = 1e-3
OMEGA_MAX = 1.0 - 1e-3
DEFAULT_GRID = 2048
DEFAULT_ROOT_TOL = 1e-6


@dataclass(frozen=True)
class CriticalBand:
    """Existence band (omega0, omega1) in units of the plasma frequency.

    ``omega0 == 0.0`` means the band already starts at the low end of the
    scan; ``omega1 is None`` means it runs to the high end.  Crossings past
    the first band (a narrow re-entry just below the resonance appears for
    eps ~ 0.1) are kept in ``extra_crossings``.
    """

    omega0: Optional[float]
    omega1: Optional[float]
    band_nonempty: bool
    crossings: Tuple[float, ...] = ()
    extra_crossings: Tuple[float, ...] = ()


def _gap(Omega, film, mat, phi_tol):
    k = k_general(point_from_ratio(mat, film, Omega), film, mat, phi_tol)
    return k.k.imag - k.k.real


def _bisect(lo, hi, g_lo, film, mat, tol, phi_tol):
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        g_mid = _gap(mid, film, mat, phi_tol)
        if g_mid == 0.0:
            return mid
        if np.sign(g_mid) == np.sign(g_lo):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def scan_gap(film, mat, grid_n=DEFAULT_GRID, omega_min=OMEGA_MIN, omega_max=OMEGA_MAX,
             phi_tol=DEFAULT_TOL):
    """Return the scan grid and g = Im k - Re k on it (NaN at the resonance)."""
    grid = np.linspace(omega_min, omega_max, grid_n)
    k = k_general_array(grid, film, mat, phi_tol)
    return grid, k.imag - k.real


def find_critical_band(film, mat, grid_n=DEFAULT_GRID, tol=DEFAULT_ROOT_TOL,
                       omega_min=OMEGA_MIN, omega_max=OMEGA_MAX, phi_tol=DEFAULT_TOL,
                       strict=False):
    """Locate the critical frequencies of a film.

    Sign changes of Im k - Re k on a uniform ``grid_n`` scan of
    [omega_min, omega_max] are refined by bisection to ``tol``.  The first
    interval with Im k < Re k defines the band.  With ``strict=True`` more
    than two crossings raise :class:`AmbiguousCrossingError`.
    """
    if grid_n < 64:
        raise DomainError("grid_n must be at least 64")
    if not tol > 0:
        raise DomainError("tol must be positive")
    if not 0 < omega_min < omega_max:
        raise DomainError("need 0 < omega_min < omega_max")
    if film.collision_rate == 0 and film.specularity < 1:
        raise DomainError("a collisionless film needs p = 1")

    grid, g = scan_gap(film, mat, grid_n, omega_min, omega_max, phi_tol)
    # resonance points are skipped; exact zeros are bracketed by their neighbours
    keep = np.isfinite(g) & (g != 0.0)
    nodes, values = grid[keep], g[keep]
    if nodes.size == 0:
        return CriticalBand(None, None, False)

    crossings = []
    for i in np.flatnonzero(np.sign(values[:-1]) != np.sign(values[1:])):
        crossings.append(_bisect(nodes[i], nodes[i + 1], values[i], film, mat, tol, phi_tol))
    crossings = tuple(float(c) for c in crossings)
    if strict and len(crossings) > 2:
        raise AmbiguousCrossingError(
            f"{len(crossings)} critical crossings found: {crossings}", crossings
        )

    if values[0] < 0:
        omega0 = 0.0
        omega1 = crossings[0] if crossings else None
        used = 1
    elif crossings:
        omega0 = crossings[0]
        omega1 = crossings[1] if len(crossings) > 1 else None
        used = 2
    else:
        return CriticalBand(None, None, False, crossings)
    return CriticalBand(omega0, omega1, True, crossings, crossings[used:])


def existence_predicate(point, film, mat, tol=DEFAULT_TOL):
    """True iff the surface wave exists (Im k < Re k) at ``point``."""
    return k_general(point, film, mat, tol).exists_as_surface_wave
