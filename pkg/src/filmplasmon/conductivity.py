"""Thickness-averaged film conductivity with specular-diffuse surface scattering.

The film conductivity is the (complexified) bulk Drude value times

    phi(w) = 1 - (3 / 2w) (1 - p) int_1^inf (1/t^3 - 1/t^5)
                 (1 - exp(-w t)) / (1 - p exp(-w t)) dt

with w = d / l the thickness over the mean free path.  At finite frequency
``l -> v_F tau / (1 - i omega tau)`` so w is complex with Re w = d nu / v_F.

Two independent evaluation routes are provided:

``"series"`` (default)
    Expanding 1 / (1 - p e^{-wt}) geometrically gives

        int = p^N / 4 - (1 - p) sum_{n=1}^{N} p^{n-1} [G(nw) - 1/4]

    with G = E_3 - E_5, truncated by a rigorous tail bound.  Each term is an
    exponential integral, so oscillatory integrands (small Re w, large
    Im w) cost nothing extra.
``"quad"``
    Adaptive Gauss-Kronrod quadrature (QUADPACK) after mapping t = 1/s
    onto (0, 1].
"""
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .exceptions import DomainError, NonConvergentIntegralError, QuadratureAccuracyError
from .expint import SERIES_RADIUS, expn_complex

DEFAULT_TOL = 1e-10
MAX_TERMS = 2_000_000
_CHUNK = 1_000_000


@dataclass(frozen=True)
class ConductivityFactor:
    phi: complex
    w_used: complex
    quad_error_estimate: float


def _check_args(w, p, tol):
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"specularity must lie in [0, 1], got {p!r}")
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if p < 1.0 and np.any(np.real(w) <= 0):
        raise NonConvergentIntegralError(
            "conductivity integral diverges for Re w <= 0 unless p = 1"
        )


def _g_shifted(z):
    """E_3(z) - E_5(z) - 1/4, accurate for small |z| as well."""
    out = np.empty_like(z)
    small = np.abs(z) <= SERIES_RADIUS
    if small.any():
        zs = z[small]
        out[small] = expn_complex(3, zs, shifted=True) - expn_complex(5, zs, shifted=True)
    if (~small).any():
        zb = z[~small]
        e5 = expn_complex(5, zb)
        ez = np.exp(-zb)
        e4 = (ez - 4.0 * e5) / zb
        e3 = (ez - 3.0 * e4) / zb
        out[~small] = e3 - e5 - 0.25
    return out


def _tail_bound(w, p, N):
    """Bound on |phi - phi_N| after N series terms; the smaller of two bounds.

    (a) |E_m(z)| <= E_m(Re z) <= exp(-Re z) / (Re z + m - 1), and by parts
        G(z) = (5 E_6(z) - 3 E_4(z)) / z, so |G(nw)| <= min(3/4, 2/(n|w|)) e^{-na}.
    (b) The dropped integrand is (1-p) p^N x^{N+1} / (1 - p x) with x = e^{-wt},
        |1 - p x| >= 1 - p, and int_1^inf (t^-3 - t^-5) dt = 1/4.
    """
    a = w.real
    q = p * np.exp(-a)
    prefactor = 1.5 / np.abs(w) * (1.0 - p)
    # 1 / (1 - q) written without cancellation
    inv_one_minus_q = 1.0 / ((1.0 - p) - p * np.expm1(-a))
    decay = np.minimum(0.75, 2.0 / ((N + 1) * np.abs(w)))
    bound_a = decay * np.exp(-a) * q**N * inv_one_minus_q
    bound_b = 0.25 * np.exp(-a) * q**N
    return prefactor * np.minimum(bound_a, bound_b)


def _terms_needed(w, p, target, max_terms):
    """Smallest per-element N whose tail bound is below ``target`` (capped)."""
    lo = np.ones(w.shape, dtype=np.int64)
    if p == 0.0:
        return lo
    hi = np.full(w.shape, max_terms, dtype=np.int64)
    ok = _tail_bound(w, p, lo) <= target
    hi[ok] = 1
    while np.any(hi - lo > 0):
        mid = (lo + hi) // 2
        good = _tail_bound(w, p, mid) <= target
        hi = np.where(good, mid, hi)
        lo = np.where(good, lo, np.minimum(mid + 1, hi))
    return hi


def _series_sum(w, p, N):
    """Sum the first N[i] terms for each w[i].  Returns (integral, rounding scale)."""
    total = np.zeros(w.shape, dtype=complex)
    scale = np.zeros(w.shape)
    n_max = int(N.max())
    start = 1
    while start <= n_max:
        cols = np.flatnonzero(N >= start)
        rows = max(1, _CHUNK // cols.size)
        n = np.arange(start, min(start + rows, n_max + 1))
        weights = p ** (n - 1.0) if p > 0 else (n == 1).astype(float)
        mask = n[:, None] <= N[cols][None, :]
        g = _g_shifted(np.outer(n, w[cols]))
        contrib = np.where(mask, weights[:, None] * g, 0.0)
        total[cols] += contrib.sum(axis=0)
        scale[cols] += np.abs(contrib).sum(axis=0)
        start = n[-1] + 1
    integral = 0.25 * p**N - (1.0 - p) * total
    return integral, scale


def phi_series(w, p, tol=DEFAULT_TOL, max_terms=MAX_TERMS):
    """Vectorized series evaluation of phi.  Returns ``(phi, error_bound)`` arrays."""
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    _check_args(w, p, tol)
    if p == 1.0:
        return np.ones(w.shape, dtype=complex), np.zeros(w.shape)

    target = np.full(w.shape, tol)
    for _ in range(4):
        N = _terms_needed(w, p, target, max_terms)
        integral, scale = _series_sum(w, p, N)
        phi = 1.0 - 1.5 / w * (1.0 - p) * integral
        err = _tail_bound(w, p, N) + 1.5 / np.abs(w) * (1.0 - p) * scale * 1e-15
        bad = err > tol * np.abs(phi)
        if not bad.any():
            return phi, err
        if np.all(N[bad] >= max_terms):
            break
        target = 0.5 * tol * np.maximum(np.abs(phi), 1e-300)
    raise QuadratureAccuracyError(
        f"series for phi did not reach rel. tol {tol:g} within {max_terms} terms",
        estimate=phi, error=err,
    )


def _phi_quad_scalar(w, p, tol):
    # int_1^inf (t^-3 - t^-5) f(t) dt == int_0^1 (s - s^3) f(1/s) ds
    def integrand(s):
        if s == 0.0:
            return 0j
        e = np.exp(-w / s)
        return (s - s**3) * (1.0 - e) / (1.0 - p * e)

    parts, errs = [], []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        for part in (np.real, np.imag):
            val, err = integrate.quad(
                lambda s: part(integrand(s)), 0.0, 1.0,
                epsabs=1e-15, epsrel=min(tol, 1e-13), limit=2000,
            )
            parts.append(val)
            errs.append(err)
    integral = complex(parts[0], parts[1])
    phi = 1.0 - 1.5 / w * (1.0 - p) * integral
    return phi, 1.5 / abs(w) * (1.0 - p) * float(np.hypot(*errs))


def phi_quad(w, p, tol=DEFAULT_TOL):
    """Vectorized adaptive-quadrature evaluation of phi.  Returns ``(phi, error)``."""
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    _check_args(w, p, tol)
    if p == 1.0:
        return np.ones(w.shape, dtype=complex), np.zeros(w.shape)
    phi = np.empty(w.shape, dtype=complex)
    err = np.empty(w.shape)
    for i, wi in enumerate(w):
        phi[i], err[i] = _phi_quad_scalar(complex(wi), p, tol)
    bad = err > tol * np.abs(phi)
    if bad.any():
        raise QuadratureAccuracyError(
            f"quadrature for phi did not reach rel. tol {tol:g}", estimate=phi, error=err
        )
    return phi, err


_METHODS = {"series": phi_series, "quad": phi_quad}


def phi_values(w, p, tol=DEFAULT_TOL, method="series"):
    try:
        fn = _METHODS[method]
    except KeyError:
        raise DomainError(f"unknown method {method!r}; choose from {sorted(_METHODS)}") from None
    return fn(w, p, tol)


def phi_factor(w, p, tol=DEFAULT_TOL, method="series"):
    """Evaluate the size-effect factor phi(w) at a single complex ``w``.

    For ``p == 1`` the integral term vanishes and exactly 1 is returned
    without any numerical work.  Raises :class:`NonConvergentIntegralError`
    for ``Re w <= 0`` with ``p < 1`` and :class:`QuadratureAccuracyError`
    (carrying the best estimate) when ``tol`` cannot be met.
    """
    w = complex(w)
    try:
        phi, err = phi_values(w, p, tol, method)
    except QuadratureAccuracyError as exc:
        exc.estimate = complex(np.ravel(exc.estimate)[0])
        exc.error = float(np.ravel(exc.error)[0])
        raise
    return ConductivityFactor(complex(phi[0]), w, float(err[0]))


def sigma_ratio(point, p, tol=DEFAULT_TOL, method="series"):
    """Film conductivity over the complexified bulk conductivity sigma_0 / (1 - i omega tau).

    This is phi evaluated at the point's complex thickness ratio.
    """
    return phi_factor(point.w_complex, p, tol, method).phi
