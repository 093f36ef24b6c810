"""Degree models, closed-form densities and series oracles."""

from indexdens.core.arith import gcd_infty
from indexdens.density.engine import (
    CharacterTerm,
    DensityReport,
    DensityRequest,
    character_coefficient,
    degree,
    dens,
    density_table,
    positivity,
    rho,
)
from indexdens.density.model import (
    BUILTIN_MODELS,
    GENERIC_R1,
    Q_SQRT5_GOLDEN,
    Q_SQRT5_SECOND,
    DegreeModel,
    DegreeModelBuilder,
    resolve_model,
)
from indexdens.density.series import (
    artin_ratio,
    dens_series_oracle,
    index_density_series,
    reciprocal_tail,
    rho_artin_series,
    rho_partial,
)

__all__ = [
    # Models
    "DegreeModel",
    "DegreeModelBuilder",
    "GENERIC_R1",
    "Q_SQRT5_GOLDEN",
    "Q_SQRT5_SECOND",
    "BUILTIN_MODELS",
    "resolve_model",
    # Closed form
    "DensityRequest",
    "DensityReport",
    "CharacterTerm",
    "character_coefficient",
    "degree",
    "dens",
    "density_table",
    "rho",
    "positivity",
    "gcd_infty",
    # Series
    "dens_series_oracle",
    "rho_partial",
    "rho_artin_series",
    "index_density_series",
    "artin_ratio",
    "reciprocal_tail",
]
