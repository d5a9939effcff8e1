"""Numerical flows, linear transport and monodromy invariance."""

from .flow import DriftReport, Trajectory, hamiltonian_drift, integrate_flow, propagate
from .model import CompiledFamily, DomainViolation, theta_values
from .monodromy import (
    IDENTITY,
    MonodromyRun,
    PathTooClose,
    TrajectoryBlowup,
    default_clearance,
    isomonodromy_invariance,
    linear_transport,
    local_trace,
    loop_monodromy,
    mat_det,
    mat_inv,
    mat_mul,
    product_relation,
    square_loop,
    trace_formula,
)
from .rk import RKResult, StepUnderflow, dopri5

__all__ = [
    "CompiledFamily",
    "DomainViolation",
    "DriftReport",
    "IDENTITY",
    "MonodromyRun",
    "PathTooClose",
    "RKResult",
    "StepUnderflow",
    "Trajectory",
    "TrajectoryBlowup",
    "default_clearance",
    "dopri5",
    "hamiltonian_drift",
    "integrate_flow",
    "isomonodromy_invariance",
    "linear_transport",
    "local_trace",
    "loop_monodromy",
    "mat_det",
    "mat_inv",
    "mat_mul",
    "product_relation",
    "propagate",
    "square_loop",
    "theta_values",
    "trace_formula",
]
