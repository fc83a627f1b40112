"""Generalized exponential integral E_n(z) for complex z with Re z >= 0.

    E_n(z) = int_1^inf exp(-z t) / t**n dt

Small arguments use the power series, larger ones the continued fraction
evaluated with the modified Lentz method (Numerical Recipes, sec. 6.3),
both carried over to complex arithmetic and vectorized over z.
"""
import numpy as np

EULER_GAMMA = 0.5772156649015329
_EPS = 1e-16
_TINY = 1e-300
_MAXIT = 10000
SERIES_RADIUS = 2.0


def _series(n, z, shifted):
    # sum_{k>=0, k != n-1} -(-z)^k / ((k-n+1) k!) + the log term at k = n-1
    nm1 = n - 1
    if shifted:
        # drop the k = 0 term 1/(n-1), i.e. return E_n(z) - E_n(0)
        ans = np.zeros_like(z)
    elif nm1 == 0:
        ans = -np.log(z) - EULER_GAMMA
    else:
        ans = np.full_like(z, 1.0 / nm1)
    fact = np.ones_like(z)
    psi_n = -EULER_GAMMA + sum(1.0 / m for m in range(1, nm1 + 1))
    for i in range(1, _MAXIT):
        fact = fact * (-z / i)
        if i != nm1:
            delta = -fact / (i - nm1)
        else:
            delta = fact * (-np.log(z) + psi_n)
        ans = ans + delta
        if i > nm1 and np.all(np.abs(delta) <= _EPS * np.abs(ans)):
            return ans
    raise ArithmeticError("exponential integral series failed to converge")


def _continued_fraction(n, z):
    # all elements iterate together; converged ones see delta == 1 to rounding
    b = z + n
    c = np.full_like(z, 1.0 / _TINY)
    d = 1.0 / b
    h = d.copy()
    done = np.zeros(z.shape, dtype=bool)
    for i in range(1, _MAXIT):
        a = -i * (n - 1 + i)
        b = b + 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        done |= np.abs(delta - 1.0) <= _EPS
        if done.all():
            return h * np.exp(-z)
    raise ArithmeticError("exponential integral continued fraction failed to converge")


def _cf_bucketed(n, z):
    # iteration count falls quickly with |z|; bucket so small |z| do not
    # hold up the rest
    out = np.empty_like(z)
    r = np.abs(z)
    edges = (SERIES_RADIUS, 4.0, 8.0, 20.0, np.inf)
    for lo, hi in zip(edges[:-1], edges[1:]):
        sel = (r > lo) & (r <= hi)
        if sel.any():
            out[sel] = _continued_fraction(n, z[sel])
    return out


def expn_complex(n, z, shifted=False):
    """E_n(z) for integer ``n >= 1`` and complex array ``z`` with Re z >= 0.

    With ``shifted=True`` returns E_n(z) - 1/(n-1) (requires n >= 2), which
    keeps full relative accuracy near z = 0 where E_n(z) -> 1/(n-1).
    """
    z, scalar = _prepare(n, z, shifted)
    out = np.empty_like(z)
    small = np.abs(z) <= SERIES_RADIUS
    zero = z == 0
    if zero.any():
        if n == 1 and not shifted:
            out[zero] = np.inf
        else:
            out[zero] = 0.0 if shifted else 1.0 / (n - 1)
    sel = small & ~zero
    if sel.any():
        out[sel] = _series(n, z[sel], shifted)
    if (~small).any():
        big = _cf_bucketed(n, z[~small])
        out[~small] = big - 1.0 / (n - 1) if shifted else big
    return out[0] if scalar else out


def expn_downward(n, m, z):
    """E_n(z) computed from E_m(z), m > n, by downward recurrence.

    E_{k}(z) = (exp(-z) - k E_{k+1}(z)) / z is stable downward for |z| >
    SERIES_RADIUS, the regime where it is used here.
    """
    z = np.asarray(z, dtype=complex)
    e = expn_complex(m, z)
    ez = np.exp(-z)
    for k in range(m - 1, n - 1, -1):
        e = (ez - k * e) / z
    return e


def _prepare(n, z, shifted):
    if n < 1 or int(n) != n:
        raise ValueError("n must be a positive integer")
    if shifted and n < 2:
        raise ValueError("shifted form needs n >= 2")
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    if np.any(z.real < 0):
        raise ValueError("E_n is only implemented for Re z >= 0")
    return z, scalar
