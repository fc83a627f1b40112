"""Exit criteria.  Each test records one PASS/FAIL line in the terminal summary."""
import time

import numpy as np

from filmplasmon import (
    SODIUM, FilmConfig, dispersion_residual, find_critical_band, k_general, k_general_array,
    k_specular_closed_form, phi_factor, point_from_ratio,
)

TABLE1 = {1: 0.101, 2: 0.100, 3: 0.097, 4: 0.092, 5: 0.086, 6: 0.078, 7: 0.067, 8: 0.051, 9: 0.023}
TABLE2 = {
    1: (0.168, 0.904), 2: (0.130, 0.924), 3: (0.116, 0.929), 4: (0.107, 0.932),
    5: (0.098, 0.934), 6: (0.089, 0.935), 7: (0.077, 0.935), 8: (0.063, 0.936),
    9: (0.041, 0.936), 10: (0.000, 0.937),
}
TABLE_TOL = 0.005


def film(d_nm, p, eps):
    return FilmConfig.from_dimensionless(d_nm, p, eps)


def random_tuples(seed, n, p=None):
    rng = np.random.default_rng(seed)
    Omega = rng.uniform(0.01, 2.0, n)
    eps = 10 ** rng.uniform(-5, np.log10(0.3), n)
    d = 10 ** rng.uniform(0, 2, n)
    ps = rng.uniform(0, 1, n) if p is None else np.full(n, p)
    return list(zip(Omega, eps, d, ps))


def test_criterion_1_table1(acceptance_report):
    start = time.perf_counter()
    worst = 0.0
    for d, want in TABLE1.items():
        worst = max(worst, abs(find_critical_band(film(d, 1.0, 0.1), SODIUM).omega0 - want))
    elapsed = time.perf_counter() - start
    ok = worst <= TABLE_TOL and elapsed < 10
    acceptance_report(1, "Table 1 reproduction", ok,
                      f"max |dOmega0| = {worst:.4f} (tol {TABLE_TOL}), {elapsed:.1f} s (< 10 s)")
    assert ok


def test_criterion_2_table2(acceptance_report):
    start = time.perf_counter()
    worst = 0.0
    for d, (w0, w1) in TABLE2.items():
        b = find_critical_band(film(d, 0.1, 0.1), SODIUM)
        worst = max(worst, abs(b.omega0 - w0), abs(b.omega1 - w1))
    elapsed = time.perf_counter() - start
    ok = worst <= TABLE_TOL and elapsed < 60
    acceptance_report(2, "Table 2 reproduction", ok,
                      f"max deviation = {worst:.4f} (tol {TABLE_TOL}), {elapsed:.1f} s (< 60 s)")
    assert ok


def test_criterion_3_z_ratio(acceptance_report):
    f = film(10, 1.0, 1e-5)
    details, ok = [], True
    for Omega, want in ((0.1, 2.1e4), (0.5, 3.8e4)):
        z = k_general(point_from_ratio(SODIUM, f, Omega), f, SODIUM).z_ratio
        rel = abs(z - want) / want
        ok &= rel <= 0.10
        details.append(f"Z({Omega})={z:.3g} vs {want:.2g} ({100 * rel:.1f}%)")
    acceptance_report(3, "Z-ratio spot checks", ok, "; ".join(details))
    assert ok


def test_criterion_4_collisionless(acceptance_report):
    worst = 0.0
    Omega = np.linspace(0.005, 0.995, 100)
    for d in (1, 10, 100):
        f = film(d, 1.0, 0.0)
        for x in Omega:
            k = k_general(point_from_ratio(SODIUM, f, x), f, SODIUM).k
            worst = max(worst, abs(k.imag) / abs(k))
    ok = worst <= 1e-12
    acceptance_report(4, "Collisionless no-damping", ok, f"max |Im k|/|k| = {worst:.2e} (<= 1e-12)")
    assert ok


def test_criterion_5_closed_form_oracle(acceptance_report):
    worst = {1.0: 0.0, 1 - 1e-12: 0.0}
    for Omega, eps, d, _ in random_tuples(2024, 1000):
        closed = None
        for p in worst:
            f = film(d, p, eps)
            pt = point_from_ratio(SODIUM, f, Omega)
            if closed is None:
                closed = k_specular_closed_form(pt, f, SODIUM).k
            k = k_general(pt, f, SODIUM).k
            worst[p] = max(worst[p], abs(k - closed) / abs(closed))
    ok = max(worst.values()) <= 1e-6
    acceptance_report(5, "Closed form vs general path", ok,
                      f"p=1: {worst[1.0]:.2e}, p=1-1e-12: {worst[1 - 1e-12]:.2e} (<= 1e-6)")
    assert ok


def test_criterion_6_dispersion_residual(acceptance_report):
    worst = 0.0
    for Omega, eps, d, p in random_tuples(77, 500):
        f = film(d, p, eps)
        pt = point_from_ratio(SODIUM, f, Omega)
        worst = max(worst, dispersion_residual(k_general(pt, f, SODIUM), pt, f, SODIUM))
    ok = worst <= 1e-8
    acceptance_report(6, "Dispersion-relation residual", ok, f"max residual = {worst:.2e} (<= 1e-8)")
    assert ok


def test_criterion_7_conductivity(acceptance_report):
    asym = 0.0
    for w in (50.0, 100.0, 500.0):
        for p in (0.0, 0.3, 0.7):
            want = 1 - 3 * (1 - p) / (8 * w)
            asym = max(asym, abs(phi_factor(w, p).phi - want) / want)
    dual = 0.0
    for w in (0.1, 1.0, 10.0):
        for p in (0.0, 0.3, 0.7):
            a = phi_factor(w, p, method="series").phi
            b = phi_factor(w, p, method="quad").phi
            dual = max(dual, abs(a - b) / abs(a))
    ok = asym <= 0.01 and dual <= 1e-8
    acceptance_report(7, "Conductivity asymptote and dual backend", ok,
                      f"asymptote {asym:.2e} (<= 1e-2), backends {dual:.2e} (<= 1e-8)")
    assert ok


def test_criterion_8_figure_properties(acceptance_report):
    below = np.linspace(0.01, 0.95, 95)
    # Re k falls with thickness at fixed frequency (eps=1e-3, p=0.5)
    re_k = np.array([k_general_array(below, film(d, 0.5, 1e-3), SODIUM).real
                     for d in (10, 25, 50, 100)])
    thickness_ok = bool(np.all(np.diff(re_k, axis=0) < 0))
    # more specular reflection, less damping (d=1 nm, eps=1e-3)
    im_k = np.array([k_general_array(below, film(1, p, 1e-3), SODIUM).imag for p in (0.0, 0.5, 1.0)])
    specular_ok = bool(np.all(np.diff(im_k, axis=0) < 0))
    # Im k turns negative somewhere above the plasma frequency
    above = np.linspace(1.01, 2.0, 100)
    negative_ok = all(np.any(k_general_array(above, film(d, 0.5, 1e-3), SODIUM).imag < 0)
                      for d in (10, 25, 50, 100))
    ok = thickness_ok and specular_ok and negative_ok
    acceptance_report(8, "Qualitative figure properties", ok,
                      f"Re k decreasing in d: {thickness_ok}; Im k decreasing in p: {specular_ok}; "
                      f"Im k < 0 above resonance: {negative_ok}")
    assert ok
