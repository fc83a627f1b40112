"""Surface plasmons in thin metal films with size-dependent conductivity."""

__version__ = "0.1.0"

from .conductivity import ConductivityFactor, phi_factor, phi_values, sigma_ratio
from .critical import CriticalBand, existence_predicate, find_critical_band
from .dispersion import (
    ComplexWaveNumber,
    ImpedanceValue,
    damping_alpha,
    dispersion_residual,
    impedance_antisymmetric,
    k_general,
    k_general_array,
    k_specular_closed_form,
)
from .estimator import SurfacePlasmonDispersion
from .exceptions import (
    AmbiguousCrossingError,
    DomainError,
    FilmPlasmonError,
    NonConvergentIntegralError,
    QuadratureAccuracyError,
    ResonanceSingularityError,
)
from .material import (
    SODIUM,
    DimensionlessPoint,
    FilmConfig,
    MaterialParams,
    make_dimensionless,
    point_from_ratio,
    skin_depth,
)
