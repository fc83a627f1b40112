"""scikit-learn style front end: parameters in the constructor, Omega as X."""
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .conductivity import DEFAULT_TOL
from .critical import DEFAULT_GRID, DEFAULT_ROOT_TOL, find_critical_band
from .dispersion import damping_alpha, k_general_array
from .exceptions import DomainError
from .material import MATERIALS, FilmConfig, MaterialParams
from .validation import check_fraction, check_frequencies, check_non_negative, check_positive


class SurfacePlasmonDispersion(TransformerMixin, BaseEstimator):
    """Wave number of the antisymmetric surface plasmon of a thin metal film.

    ``X`` holds frequencies in units of the plasma frequency, one per row.
    ``transform`` returns columns (Re k, Im k, Re alpha, Im alpha) in 1/cm and
    ``predict`` whether a surface wave exists (Im k < Re k).  Points at the
    plasma resonance come back as NaN and predict False.

    Parameters
    ----------
    thickness_nm : float
        Film thickness in nm.
    specularity : float
        Specular reflection coefficient p in [0, 1].
    eps : float
        Collision rate over plasma frequency.
    material : str or MaterialParams
        Preset name (``"sodium"``) or explicit parameters.
    tol : float
        Relative tolerance for the conductivity factor.
    """

    def __init__(self, thickness_nm=10.0, specularity=1.0, eps=1e-5, material="sodium",
                 tol=DEFAULT_TOL):
        self.thickness_nm = thickness_nm
        self.specularity = specularity
        self.eps = eps
        self.material = material
        self.tol = tol

    def _resolve_material(self):
        if isinstance(self.material, MaterialParams):
            return self.material
        try:
            return MATERIALS[self.material]
        except (KeyError, TypeError):
            raise DomainError(f"unknown material {self.material!r}") from None

    def fit(self, X=None, y=None):
        """Validate the parameters.  ``X`` is optional and only checked."""
        d = check_positive(self.thickness_nm, "thickness_nm")
        p = check_fraction(self.specularity, "specularity")
        eps = check_non_negative(self.eps, "eps")
        check_positive(self.tol, "tol")
        if eps == 0 and p < 1:
            raise DomainError("eps = 0 is only supported with specularity = 1")
        self.material_ = self._resolve_material()
        self.film_ = FilmConfig.from_dimensionless(d, p, eps, self.material_)
        if X is not None:
            check_frequencies(X)
        self.n_features_in_ = 1
        return self

    def wave_number(self, X):
        """Complex k (1/cm) for each Omega in ``X``."""
        check_is_fitted(self, "film_")
        Omega = check_frequencies(X)
        return k_general_array(Omega, self.film_, self.material_, self.tol)

    def transform(self, X):
        Omega = check_frequencies(X)
        k = self.wave_number(Omega)
        alpha = damping_alpha(k, Omega * self.material_.plasma_frequency)
        return np.column_stack([k.real, k.imag, np.real(alpha), np.imag(alpha)])

    def predict(self, X):
        k = self.wave_number(X)
        return k.imag < k.real

    def critical_band(self, grid_n=DEFAULT_GRID, tol=DEFAULT_ROOT_TOL):
        """Critical frequencies of the fitted film, see :func:`find_critical_band`."""
        check_is_fitted(self, "film_")
        return find_critical_band(self.film_, self.material_, grid_n, tol, phi_tol=self.tol)

    def get_feature_names_out(self, input_features=None):
        return np.array(["re_k", "im_k", "re_alpha", "im_alpha"], dtype=object)
