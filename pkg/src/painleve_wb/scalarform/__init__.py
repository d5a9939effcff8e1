"""Cyclic vectors, scalar operators and apparent singularities."""

from .core import (
    ApparentReport,
    CyclicCount,
    DegenerateSample,
    MultipleZeros,
    NotCyclic,
    ScalarOperator,
    ZeroWedge,
    a1_pole_structure,
    apparent_b_polynomial,
    eigenvectors,
    good_cyclic_count,
    pole_order,
    random_sample,
    recover_pq,
    recover_pq_family,
    residue,
    scalar_operator,
    wedge_polynomial,
)

__all__ = [
    "ApparentReport",
    "CyclicCount",
    "DegenerateSample",
    "MultipleZeros",
    "NotCyclic",
    "ScalarOperator",
    "ZeroWedge",
    "a1_pole_structure",
    "apparent_b_polynomial",
    "eigenvectors",
    "good_cyclic_count",
    "pole_order",
    "random_sample",
    "recover_pq",
    "recover_pq_family",
    "residue",
    "scalar_operator",
    "wedge_polynomial",
]
