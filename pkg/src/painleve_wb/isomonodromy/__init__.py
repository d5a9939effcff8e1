"""Deformation equations derived from the zero-curvature identity."""

from .lax import (
    DeformationResult,
    HamiltonianCheck,
    NoLaxData,
    NotAffineInP,
    derive_deformation,
    derive_second_order,
    hamiltonian_check,
    hamiltonian_drift_identity,
    second_order_difference,
    total_t_derivative,
    verify_hamiltonian,
    verify_second_order,
    verify_zero_curvature,
    zero_curvature_residual,
)

__all__ = [
    "DeformationResult",
    "HamiltonianCheck",
    "NoLaxData",
    "NotAffineInP",
    "derive_deformation",
    "derive_second_order",
    "hamiltonian_check",
    "hamiltonian_drift_identity",
    "second_order_difference",
    "total_t_derivative",
    "verify_hamiltonian",
    "verify_second_order",
    "verify_zero_curvature",
    "zero_curvature_residual",
]
