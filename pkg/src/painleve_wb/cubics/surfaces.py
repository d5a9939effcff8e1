"""The ten monodromy surfaces as parameterized affine cubics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ..exactalg import CUBIC, Poly, RatFunc, parse
from ..families.registry import FAMILY_IDS, UnknownFamily


class DomainViolation(ValueError):
    pass


@dataclass(frozen=True)
class CubicSurface:
    family: str
    F: Poly
    params: tuple[str, ...]
    nonzero: tuple[str, ...] = ()

    def check_domain(self, values: Mapping[str, object]) -> dict[str, Fraction]:
        vals = {}
        for name in self.params:
            if name not in values:
                raise DomainViolation(f"missing parameter {name}")
            vals[name] = Fraction(values[name])
        for name in self.nonzero:
            if vals[name] == 0:
                raise DomainViolation(f"parameter {name} must be nonzero")
        return vals

    def specialize(self, values: Mapping[str, object]) -> Poly:
        """F with parameters substituted; a polynomial in x1, x2, x3 only."""
        vals = self.check_domain(values)
        return self.F.subs(vals)

    def gradient(self) -> tuple[Poly, Poly, Poly]:
        return tuple(self.F.diff(v) for v in ("x1", "x2", "x3"))


def _P(text: str) -> Poly:
    return parse(CUBIC, text)


_SURFACES = {
    "pvi": CubicSurface(
        "pvi", _P("x1*x2*x3 + x1^2 + x2^2 + x3^2 - s1*x1 - s2*x2 - s3*x3 + s4"),
        ("s1", "s2", "s3", "s4")),
    "pv": CubicSurface(
        "pv", _P("x1*x2*x3 + x1^2 + x2^2 - (s1 + s2*s3)*x1 - (s2 + s1*s3)*x2 - s3*x3 + s3^2 + s1*s2*s3 + 1"),
        ("s1", "s2", "s3"), ("s3",)),
    "pv_deg": CubicSurface(
        "pv_deg", _P("x1*x2*x3 + x1^2 + x2^2 + s0*x1 + s1*x2 + 1"), ("s0", "s1")),
    "piii_d6": CubicSurface(
        "piii_d6", _P("x1*x2*x3 + x1^2 + x2^2 + (1 + alpha*beta)*x1 + (alpha + beta)*x2 + alpha*beta"),
        ("alpha", "beta"), ("alpha", "beta")),
    "piii_d7": CubicSurface(
        "piii_d7", _P("x1*x2*x3 + x1^2 + x2^2 + alpha*x1 + x2"), ("alpha",), ("alpha",)),
    "piii_d8": CubicSurface("piii_d8", _P("x1*x2*x3 + x1^2 - x2^2 - 1"), ()),
    "piv": CubicSurface(
        "piv", _P("x1*x2*x3 + x1^2 - (s2^2 + s1*s2)*x1 - s2^2*x2 - s2^2*x3 + s2^2 + s1*s2^3"),
        ("s1", "s2"), ("s2",)),
    "pii_fn": CubicSurface("pii_fn", _P("x1*x2*x3 + x1 - x2 + x3 + s"), ("s",)),
    "pii": CubicSurface(
        "pii", _P("x1*x2*x3 - x1 - alpha*x2 - x3 + alpha + 1"), ("alpha",), ("alpha",)),
    "pi": CubicSurface("pi", _P("x1*x2*x3 + x1 + x2 + 1"), ()),
}


def surface(fam_id: str) -> CubicSurface:
    if fam_id not in _SURFACES:
        raise UnknownFamily(fam_id)
    return _SURFACES[fam_id]


def all_surfaces() -> list[CubicSurface]:
    return [surface(f) for f in FAMILY_IDS]


def pvi_s_from_a(a: Sequence) -> dict[str, Fraction]:
    """Parameters s1..s4 of the PVI cubic from the local traces a1..a4."""
    a1, a2, a3, a4 = (Fraction(x) for x in a)
    return {
        "s1": a1 * a4 + a2 * a3,
        "s2": a2 * a4 + a3 * a1,
        "s3": a3 * a4 + a1 * a2,
        "s4": a1 * a2 * a3 * a4 + a1**2 + a2**2 + a3**2 + a4**2 - 4,
    }


def pvi_surface_in_a() -> Poly:
    a1, a2, a3, a4 = (CUBIC.var(f"a{i}") for i in range(1, 5))
    smap = {
        "s1": a1 * a4 + a2 * a3,
        "s2": a2 * a4 + a3 * a1,
        "s3": a3 * a4 + a1 * a2,
        "s4": a1 * a2 * a3 * a4 + a1**2 + a2**2 + a3**2 + a4**2 - 4,
    }
    return surface("pvi").F.subs(smap)


def eval_and_gradient(surf: CubicSurface, params: Mapping[str, object], point: Sequence):
    """Exact value of F and its gradient at a rational point."""
    vals = surf.check_domain(params)
    x = {f"x{i + 1}": Fraction(c) for i, c in enumerate(point)}
    vals.update(x)
    value = surf.F.evaluate(vals)
    grad = tuple(g.evaluate(vals) for g in surf.gradient())
    return value, grad


def pv_r1(s1, s2, s3) -> Fraction:
    s1, s2, s3 = Fraction(s1), Fraction(s2), Fraction(s3)
    u = s3 + 1 / s3
    return u * u - s1 * s2 * u + s1 * s1 + s2 * s2 - 4


def _singular_locus_residuals(x3_slot) -> list[RatFunc]:
    F = surface("pv").F
    x1 = RatFunc.var(CUBIC, "x1")
    x2 = RatFunc.var(CUBIC, "x2")
    smap = {
        "x3": x3_slot(x1, x2),
        "s1": x1 + 1 / x1,
        "s2": x2 + 1 / x2,
        "s3": x1 * x2,
    }
    polys = [F] + [F.diff(v) for v in ("x1", "x2", "x3")]
    return [RatFunc(P).subs(smap) for P in polys]


def pv_singular_locus_identity(x3_slot=None) -> bool:
    """Check that the two-parameter map of singular points lies in F = grad F = 0."""
    if x3_slot is None:
        x3_slot = lambda x1, x2: x1 * x2 + 1 / (x1 * x2)  # noqa: E731
    return all(r.is_zero() for r in _singular_locus_residuals(x3_slot))
