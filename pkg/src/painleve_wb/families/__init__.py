"""Registry of the ten families and the dimension-count enumerator."""

from .enumerate import BadKatz, KatzSignature, enumerate_families, katz_contribution, table_one
from .registry import (
    DISPLAY_NAMES,
    FAMILY_IDS,
    LAX_FAMILY_IDS,
    ExponentDescriptor,
    FamilySpec,
    KatzEntry,
    UnknownFamily,
    all_families,
    get_family,
    lax_families,
    pole_order_bound,
    template_respects_bounds,
)
from .serialize import SCHEMA_VERSION, family_to_json

__all__ = [
    "BadKatz",
    "DISPLAY_NAMES",
    "ExponentDescriptor",
    "FAMILY_IDS",
    "FamilySpec",
    "KatzEntry",
    "KatzSignature",
    "LAX_FAMILY_IDS",
    "SCHEMA_VERSION",
    "UnknownFamily",
    "all_families",
    "enumerate_families",
    "family_to_json",
    "get_family",
    "katz_contribution",
    "lax_families",
    "pole_order_bound",
    "table_one",
    "template_respects_bounds",
]
