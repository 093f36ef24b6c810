"""
indexdens - densities of primes with prescribed multiplicative index.

For a finitely generated group G of a number field K, the index of G modulo
a prime p is (N(p) - 1) / |G mod p|. This package computes the density of
primes whose index lies in a residue class a mod d, both in closed form
(a finite combination of Dirichlet characters and Artin-type constants
B_chi(r), each carried with a rigorous error radius) and empirically, by
reducing G modulo every prime ideal of Q or Q(sqrt D) up to a norm bound.

Example:
    >>> from indexdens import Q_SQRT5_GOLDEN, dens, find_character, b_chi
    >>>
    >>> psi = find_character(5, "chi(2)=i")
    >>> result = b_chi(psi, 1, n_terms=10**4)
    >>>
    >>> report = dens(1, 5, Q_SQRT5_GOLDEN, n_terms=10**4)
    >>> float(report.density)
    0.418205...
"""

from indexdens.analytic import (
    artin_constant,
    artin_constant_raw,
    dirichlet_L,
    dirichlet_L_direct,
    hurwitz_zeta,
    prime_zeta,
    riemann_zeta,
)
from indexdens.characters import (
    CyclotomicValue,
    DirichletCharacter,
    ExactRootOfUnity,
    build_character_group,
    find_character,
    h_chi,
    principal_character,
)
from indexdens.constants import BChiResult, b_chi, b_chi_raw, b_chi_single_l, c_chi, cap_c_chi
from indexdens.core import (
    BigComplexValue,
    BigRealValue,
    ComputeSettings,
    ExclusionConvention,
    IndexDensError,
    OutputFormat,
    Positivity,
    gcd_infty,
)
from indexdens.density import (
    BUILTIN_MODELS,
    GENERIC_R1,
    Q_SQRT5_GOLDEN,
    Q_SQRT5_SECOND,
    DegreeModel,
    DegreeModelBuilder,
    DensityReport,
    dens,
    dens_series_oracle,
    density_table,
    index_density_series,
    positivity,
    resolve_model,
    rho,
    rho_artin_series,
)
from indexdens.harness import CountReport, GroupSpec, QuadraticFieldSpec, count, index_at_prime
from indexdens.validation import ModelRules, ModelRulesBuilder, ValidationReport

__version__ = "0.1.0"

__all__ = [
    # Values and settings
    "BigRealValue",
    "BigComplexValue",
    "ComputeSettings",
    "IndexDensError",
    # Types
    "Positivity",
    "ExclusionConvention",
    "OutputFormat",
    # Characters
    "ExactRootOfUnity",
    "CyclotomicValue",
    "DirichletCharacter",
    "build_character_group",
    "principal_character",
    "find_character",
    "h_chi",
    # Analytic
    "hurwitz_zeta",
    "riemann_zeta",
    "dirichlet_L",
    "dirichlet_L_direct",
    "prime_zeta",
    "artin_constant",
    "artin_constant_raw",
    # Constants
    "BChiResult",
    "b_chi",
    "b_chi_raw",
    "b_chi_single_l",
    "c_chi",
    "cap_c_chi",
    # Density
    "DegreeModel",
    "DegreeModelBuilder",
    "GENERIC_R1",
    "Q_SQRT5_GOLDEN",
    "Q_SQRT5_SECOND",
    "BUILTIN_MODELS",
    "resolve_model",
    "DensityReport",
    "dens",
    "density_table",
    "rho",
    "positivity",
    "gcd_infty",
    "dens_series_oracle",
    "rho_artin_series",
    "index_density_series",
    # Harness
    "QuadraticFieldSpec",
    "GroupSpec",
    "CountReport",
    "count",
    "index_at_prime",
    # Validation
    "ModelRules",
    "ModelRulesBuilder",
    "ValidationReport",
]
