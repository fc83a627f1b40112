"""Surface impedance and wave number of the antisymmetric film mode.

With the field antisymmetric in H_y across a film thinner than the skin
depth, the surface impedance is

    Z = -2 i c / (omega d D),    D = 1 - phi(w) / (Omega (Omega + i eps)),

and matching it to the exterior impedance i alpha c / omega with
alpha^2 = k^2 - omega^2 / c^2 gives

    k^2 = (omega_p Omega / c)^2 + 4 / (d^2 D^2).

For p = 1 (phi = 1) this collapses to the closed form

    k = (omega_p / c) Omega sqrt(1 + c^2 (Omega + i eps)^2
                                   / ((omega_p d/2)^2 (Omega^2 - 1 + i eps Omega)^2)).

All square roots use the principal branch, flipped if needed so that the
real part is non-negative (ties go to Im >= 0).
"""
from dataclasses import dataclass

import numpy as np

from .conductivity import DEFAULT_TOL, phi_values
from .exceptions import DomainError, ResonanceSingularityError
from .material import SPEED_OF_LIGHT

RESONANCE_GUARD = 1e-12


@dataclass(frozen=True)
class ComplexWaveNumber:
    k: complex  # 1/cm
    alpha: complex  # 1/cm
    exists_as_surface_wave: bool

    @property
    def z_ratio(self):
        """Re k / Im k, the propagation-to-damping ratio."""
        return self.k.real / self.k.imag


@dataclass(frozen=True)
class ImpedanceValue:
    Z2: complex


def branch(z):
    """Square-root branch with Re >= 0; purely imaginary values get Im >= 0."""
    z = np.asarray(z, dtype=complex)
    flip = (z.real < 0) | ((z.real == 0) & (z.imag < 0))
    out = np.where(flip, -z, z)
    # normalize a possible negative zero in the real part
    out = out.real + 0.0 + 1j * out.imag
    return out if out.ndim else complex(out)


def damping_alpha(k, omega):
    """Exterior decay constant alpha = sqrt(k^2 - omega^2/c^2), Re alpha >= 0."""
    k = getattr(k, "k", k)
    return branch(np.sqrt(np.asarray(k, dtype=complex) ** 2 - (omega / SPEED_OF_LIGHT) ** 2))


def _check_point(point):
    if not (np.isfinite(point.Omega) and point.Omega > 0):
        raise DomainError(f"Omega must be positive, got {point.Omega!r}")
    if not (np.isfinite(point.eps) and point.eps >= 0):
        raise DomainError(f"eps must be non-negative, got {point.eps!r}")


def impedance_denominator(Omega, eps, w, p, tol=DEFAULT_TOL, method="series"):
    """D(Omega) = 1 - phi(w) / (Omega (Omega + i eps)), vectorized over Omega/w."""
    Omega = np.asarray(Omega, dtype=float)
    w = np.broadcast_to(np.asarray(w, dtype=complex), Omega.shape)
    phi = phi_values(w.ravel(), p, tol, method)[0].reshape(Omega.shape)
    return 1.0 - phi / (Omega * (Omega + 1j * eps))


def _denominator(point, film, tol, method):
    _check_point(point)
    D = complex(impedance_denominator(point.Omega, point.eps, point.w_complex,
                                      film.specularity, tol, method))
    if abs(D) < RESONANCE_GUARD:
        raise ResonanceSingularityError(
            f"plasma resonance at Omega={point.Omega!r}, eps={point.eps!r}: |D|={abs(D):.3g}"
        )
    return D


def impedance_antisymmetric(point, film, mat, tol=DEFAULT_TOL, method="series"):
    """Surface impedance Z = -2ic / (omega d D) of the antisymmetric configuration."""
    D = _denominator(point, film, tol, method)
    omega = point.Omega * mat.plasma_frequency
    return ImpedanceValue(-2j * SPEED_OF_LIGHT / (omega * film.thickness * D))


def k_from_denominator(Omega, D, thickness, mat):
    """Vectorized k = sqrt((omega_p Omega / c)^2 + 4 / (d^2 D^2)) on the Re k >= 0 branch."""
    k0 = mat.plasma_frequency * np.asarray(Omega) / SPEED_OF_LIGHT
    return branch(np.sqrt(k0**2 + 4.0 / (thickness**2 * np.asarray(D) ** 2) + 0j))


def _wave_number(k, point, mat):
    omega = point.Omega * mat.plasma_frequency
    k = complex(k)
    return ComplexWaveNumber(k, complex(damping_alpha(k, omega)), bool(k.imag < k.real))


def k_general(point, film, mat, tol=DEFAULT_TOL, method="series"):
    """Complex wave number with the size-dependent conductivity factor phi(w)."""
    D = _denominator(point, film, tol, method)
    return _wave_number(k_from_denominator(point.Omega, D, film.thickness, mat), point, mat)


def k_specular_closed_form(point, film, mat):
    """Wave number for specular reflection (p = 1), no quadrature involved."""
    _check_point(point)
    Omega, eps = point.Omega, point.eps
    resonance = Omega**2 - 1.0 + 1j * eps * Omega
    if abs(resonance) < RESONANCE_GUARD:
        raise ResonanceSingularityError(f"plasma resonance at Omega={Omega!r}, eps={eps!r}")
    ratio = SPEED_OF_LIGHT / (mat.plasma_frequency * film.half_thickness)
    radicand = 1.0 + ratio**2 * (Omega + 1j * eps) ** 2 / resonance**2
    k = mat.plasma_frequency / SPEED_OF_LIGHT * Omega * branch(np.sqrt(complex(radicand)))
    return _wave_number(k, point, mat)


def dispersion_residual(wave, point, film, mat, tol=DEFAULT_TOL, method="series"):
    """Relative residual of 2c / (omega d D) + sqrt(c^2 k^2 - omega^2) / omega = 0.

    The square root is taken as ``c * alpha`` with the sign that matches the
    impedance relation alpha = -2 / (d D); the dispersion relation fixes
    only alpha^2, so the returned k carries no information about that sign.
    See :func:`is_bound_mode` for whether alpha = -2/(dD) also decays.
    """
    D = _denominator(point, film, tol, method)
    omega = point.Omega * mat.plasma_frequency
    impedance_term = 2.0 * SPEED_OF_LIGHT / (omega * film.thickness * D)
    root = np.sqrt(complex(SPEED_OF_LIGHT**2 * wave.k**2 - omega**2))
    residual = min(abs(impedance_term + root / omega), abs(impedance_term - root / omega))
    return residual / abs(impedance_term)


def is_bound_mode(point, film, mat, tol=DEFAULT_TOL, method="series"):
    """True when alpha = -2 / (d D) has a positive real part (exterior fields decay)."""
    D = _denominator(point, film, tol, method)
    return bool((-2.0 / (film.thickness * D)).real > 0)


def k_general_array(Omega, film, mat, tol=DEFAULT_TOL, method="series"):
    """Vectorized :func:`k_general` over an array of Omega values.

    Points within the resonance guard come back as NaN instead of raising.
    """
    Omega = np.asarray(Omega, dtype=float)
    if np.any(~np.isfinite(Omega) | (Omega <= 0)):
        raise DomainError("all Omega values must be positive")
    eps = film.collision_rate / mat.plasma_frequency
    scale = film.thickness * mat.plasma_frequency / mat.fermi_velocity
    D = impedance_denominator(Omega, eps, scale * (eps - 1j * Omega), film.specularity, tol, method)
    with np.errstate(divide="ignore", invalid="ignore"):
        k = np.asarray(k_from_denominator(Omega, D, film.thickness, mat), dtype=complex)
    return np.where(np.abs(D) < RESONANCE_GUARD, complex(np.nan, np.nan), k)
