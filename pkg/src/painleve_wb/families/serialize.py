"""JSON encoding of registry entries."""

from __future__ import annotations

from fractions import Fraction

from ..exactalg import Matrix2, Poly, RatFunc
from .registry import FamilySpec

SCHEMA_VERSION = 1


def _frac(r: Fraction | None):
    return None if r is None else [r.numerator, r.denominator]


def encode(obj):
    if isinstance(obj, (Poly, RatFunc, Matrix2)):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return _frac(obj)
    return obj


def family_to_json(fam: FamilySpec) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "id": fam.id,
        "name": fam.name,
        "dynkin": fam.dynkin,
        "katz": [{"point": k.point, "r": _frac(k.r)} for k in fam.katz],
        "dimP": fam.dimP,
        "exponents": [
            {"point": e.point, "text": e.text, "irregular_degree": _frac(e.irregular_degree())}
            for e in fam.exponents
        ],
        "has_lax": fam.has_lax,
    }
    if fam.has_lax:
        out.update(
            singular_points=[_frac(c) for c in fam.singular_points],
            derivation_weight=encode(fam.weight),
            A=encode(fam.A),
            B=encode(fam.B),
            B_powers=list(fam.B_powers),
            F_factor=encode(fam.F),
            flow={"qprime": encode(fam.qprime), "pprime": encode(fam.pprime)},
            second_order=encode(fam.second_order),
            H=encode(fam.H),
            good_cyclic=fam.good_cyclic,
            errata={k: encode(v) for k, v in sorted(fam.errata.items())},
        )
    return out
