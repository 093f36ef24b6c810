"""Artin-type constants B_chi(r) and the finite factors c_chi, C_chi."""

from indexdens.constants.bchi import (
    BChiResult,
    b_chi,
    b_chi_raw,
    b_chi_single_l,
    check_validity,
    principal_b_chi,
)
from indexdens.constants.euler import c_chi, cap_c_chi
from indexdens.core.arith import squarefree_kernel

__all__ = [
    "BChiResult",
    "b_chi",
    "b_chi_raw",
    "b_chi_single_l",
    "check_validity",
    "principal_b_chi",
    "c_chi",
    "cap_c_chi",
    "squarefree_kernel",
]
