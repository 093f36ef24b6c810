"""Zeta functions, L-values and Artin constants with error radii."""

from indexdens.analytic.hurwitz import bernoulli_number, hurwitz_zeta, riemann_zeta
from indexdens.analytic.lseries import dirichlet_L, dirichlet_L_direct
from indexdens.analytic.primezeta import (
    artin_constant,
    artin_constant_raw,
    artin_log_coefficient,
    prime_zeta,
    prime_zeta_tail,
)

__all__ = [
    "bernoulli_number",
    "hurwitz_zeta",
    "riemann_zeta",
    "dirichlet_L",
    "dirichlet_L_direct",
    "prime_zeta",
    "prime_zeta_tail",
    "artin_constant",
    "artin_constant_raw",
    "artin_log_coefficient",
]
