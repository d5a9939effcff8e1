"""Monodromy cubic surfaces, their singular fibres and smoothness checks."""

from .classify import (
    NotADE,
    NotIsolated,
    NotSingular,
    classify_local,
    classify_singularity,
    permute_coordinates,
)
from .elimination import EliminationInconclusive, SingularSearch, find_singular_points, resultant
from .surfaces import (
    CubicSurface,
    DomainViolation,
    all_surfaces,
    eval_and_gradient,
    pv_r1,
    pv_singular_locus_identity,
    pvi_s_from_a,
    pvi_surface_in_a,
    surface,
)
from .tables import (
    ProbeResult,
    RowResult,
    SingularRow,
    displayed_discriminant,
    singularity_rows,
    smoothness_probe,
    smoothness_samples,
    verify_row,
    verify_singularity_table,
)

__all__ = [
    "CubicSurface",
    "DomainViolation",
    "EliminationInconclusive",
    "NotADE",
    "NotIsolated",
    "NotSingular",
    "ProbeResult",
    "RowResult",
    "SingularRow",
    "SingularSearch",
    "all_surfaces",
    "classify_local",
    "classify_singularity",
    "displayed_discriminant",
    "eval_and_gradient",
    "find_singular_points",
    "permute_coordinates",
    "pv_r1",
    "pv_singular_locus_identity",
    "pvi_s_from_a",
    "pvi_surface_in_a",
    "resultant",
    "singularity_rows",
    "smoothness_probe",
    "smoothness_samples",
    "surface",
    "verify_row",
    "verify_singularity_table",
]
