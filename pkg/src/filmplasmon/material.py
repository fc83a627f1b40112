"""Material and film parameters, and conversion to dimensionless variables.

Everything is in CGS-Gaussian units: lengths in cm, frequencies in rad/s.
"""
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DomainError

SPEED_OF_LIGHT = 2.99792458e10  # cm/s
NM = 1e-7  # cm


@dataclass(frozen=True)
class MaterialParams:
    """Free-electron metal described by its plasma frequency and Fermi velocity."""

    plasma_frequency: float
    fermi_velocity: float
    label: str = "custom"

    def __post_init__(self):
        if not (np.isfinite(self.plasma_frequency) and self.plasma_frequency > 0):
            raise DomainError(f"plasma_frequency must be positive, got {self.plasma_frequency!r}")
        if not (np.isfinite(self.fermi_velocity) and self.fermi_velocity > 0):
            raise DomainError(f"fermi_velocity must be positive, got {self.fermi_velocity!r}")
        if self.fermi_velocity >= SPEED_OF_LIGHT:
            raise DomainError("fermi_velocity must be below the speed of light")

    @property
    def skin_depth(self):
        return skin_depth(self)


SODIUM = MaterialParams(plasma_frequency=6.5e15, fermi_velocity=8.52e7, label="sodium")

MATERIALS = {"sodium": SODIUM}


@dataclass(frozen=True)
class FilmConfig:
    """Film thickness ``d`` (cm), specularity ``p`` and collision rate ``nu`` (rad/s)."""

    thickness: float
    specularity: float = 1.0
    collision_rate: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.thickness) and self.thickness > 0):
            raise DomainError(f"thickness must be positive, got {self.thickness!r}")
        if not 0.0 <= self.specularity <= 1.0:
            raise DomainError(f"specularity must lie in [0, 1], got {self.specularity!r}")
        if not (np.isfinite(self.collision_rate) and self.collision_rate >= 0):
            raise DomainError(f"collision_rate must be non-negative, got {self.collision_rate!r}")

    @property
    def half_thickness(self):
        return 0.5 * self.thickness

    @classmethod
    def from_dimensionless(cls, thickness_nm, specularity, eps, material=SODIUM):
        """Build a film from thickness in nm and the collision ratio eps = nu / omega_p."""
        if not eps >= 0:
            raise DomainError(f"eps must be non-negative, got {eps!r}")
        return cls(thickness_nm * NM, specularity, eps * material.plasma_frequency)


@dataclass(frozen=True)
class DimensionlessPoint:
    """Evaluation point: Omega = omega/omega_p, eps = nu/omega_p, and the
    complex thickness-to-mean-free-path ratio ``w_complex``."""

    Omega: float
    eps: float
    w_complex: complex = field(default=0j)


def skin_depth(mat):
    """Infrared skin depth c / omega_p in cm."""
    return SPEED_OF_LIGHT / mat.plasma_frequency


def thickness_scale(mat, film):
    """d * omega_p / v_F, the thickness in units of v_F / omega_p."""
    return film.thickness * mat.plasma_frequency / mat.fermi_velocity


def make_dimensionless(mat, film, omega):
    """Convert an angular frequency ``omega`` (rad/s) into a DimensionlessPoint.

    The complex ratio w = d / l uses the frequency-dependent mean free path
    l = v_F tau / (1 - i omega tau), so w = (d omega_p / v_F) (eps - i Omega).
    """
    if not (np.isfinite(omega) and omega > 0):
        raise DomainError(f"omega must be positive, got {omega!r}")
    Omega = omega / mat.plasma_frequency
    eps = film.collision_rate / mat.plasma_frequency
    return DimensionlessPoint(Omega, eps, thickness_scale(mat, film) * complex(eps, -Omega))


def point_from_ratio(mat, film, Omega):
    """Same as :func:`make_dimensionless` but takes Omega = omega / omega_p."""
    return make_dimensionless(mat, film, Omega * mat.plasma_frequency)
