"""Fractions of sparse polynomials.

No multivariate gcd is ever computed.  Equality and zero tests go through
cross-multiplication; normalization only strips rational content, common
monomial factors, and cancels when one side divides the other exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .poly import NotDivisible, Poly, Ring


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, normalize: bool = True):
        if den is None:
            den = num.ring.one()
        if den.ring is not num.ring:
            raise ValueError("numerator and denominator live in different rings")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def ring(self) -> Ring:
        return self.num.ring

    @classmethod
    def const(cls, ring: Ring, c) -> "RatFunc":
        return cls(Poly.const(ring, c), ring.one(), normalize=False)

    @classmethod
    def var(cls, ring: Ring, name: str) -> "RatFunc":
        return cls(ring.var(name), ring.one(), normalize=False)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other, other.ring.one(), normalize=False)
        return RatFunc.const(self.ring, other)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def free_of(self, var: str) -> bool:
        return self.num.free_of(var) and self.den.free_of(var)

    def __eq__(self, other):
        if not isinstance(other, (RatFunc, Poly, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        if self.den == other.den:
            return self.num == other.num
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None  # equality is not structural

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __add__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if other.den.is_constant():
            c = other.den.constant_value()
            return RatFunc(self.num + self.den * (other.num * (1 / c)), self.den)
        if self.den.is_constant():
            c = self.den.constant_value()
            return RatFunc(other.num + other.den * (self.num * (1 / c)), other.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc(self.ring.zero(), self.ring.one(), normalize=False)
        a, b, c, d = self.num, self.den, other.num, other.den
        # cheap cross cancellation
        if a == d:
            a, d = a.ring.one(), a.ring.one()
        if c == b:
            c, b = c.ring.one(), c.ring.one()
        return RatFunc(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n)

    # -- calculus & substitution -------------------------------------------
    def diff(self, var: str) -> "RatFunc":
        n, d = self.num, self.den
        if d.free_of(var):
            return RatFunc(n.diff(var), d)
        return RatFunc(n.diff(var) * d - n * d.diff(var), d * d)

    def subs(self, mapping: Mapping[str, object]) -> "RatFunc":
        """Substitute polynomials, rational functions or exact scalars."""
        poly_map = {}
        rat_map = {}
        for v, val in mapping.items():
            if isinstance(val, RatFunc):
                if val.den.is_constant():
                    poly_map[v] = val.num * (1 / val.den.constant_value())
                else:
                    rat_map[v] = val
            else:
                poly_map[v] = val
        num = self.num.subs(poly_map)
        den = self.den.subs(poly_map)
        if not rat_map:
            return RatFunc(num, den)
        return _subs_rational(num, rat_map) / _subs_rational(den, rat_map)

    def evaluate(self, values: Mapping[str, object]):
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(values) / d

    def coeffs_in(self, var: str) -> dict[int, "RatFunc"]:
        """Coefficients in ``var``; requires a denominator free of ``var``."""
        if not self.den.free_of(var):
            raise ValueError(f"denominator depends on {var}")
        return {k: RatFunc(c, self.den) for k, c in self.num.coeffs_in(var).items()}

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, ring: Ring, data: dict) -> "RatFunc":
        return cls(Poly.from_json(ring, data["num"]), Poly.from_json(ring, data["den"]))


def _subs_rational(poly: Poly, rat_map: Mapping[str, RatFunc]) -> RatFunc:
    # Horner in each substituted variable in turn.
    result = RatFunc(poly)
    for v, val in rat_map.items():
        acc = None
        num = result.num
        parts = num.coeffs_in(v)
        if not parts:
            continue
        for k in range(max(parts), -1, -1):
            c = RatFunc(parts.get(k, num.ring.zero()))
            acc = c if acc is None else acc * val + c
        result = acc / RatFunc(result.den)
    return result


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    ring = num.ring
    if num.is_zero():
        return num, ring.one()
    if den.is_constant():
        c = den.constant_value()
        if c == 1:
            return num, den
        return num * (1 / c), ring.one()
    # common monomial factor
    m = tuple(min(a, b) for a, b in zip(num.monomial_content(), den.monomial_content()))
    if any(m):
        neg = tuple(-k for k in m)
        num = num.shift_exponents(neg)
        den = den.shift_exponents(neg)
    # exact cancellation when one side divides the other
    if len(den) <= len(num) and num.degree() >= den.degree():
        try:
            return num.divexact(den), ring.one()
        except NotDivisible:
            pass
    elif len(num) < len(den) and den.degree() >= num.degree() and not num.is_constant():
        try:
            q = den.divexact(num)
            num, den = ring.one(), q
        except NotDivisible:
            pass
    if den.is_constant():
        c = den.constant_value()
        return num * (1 / c), ring.one()
    # scale so the denominator is primitive with positive leading coefficient
    cont = den.content()
    _, lc = den.lex_leading()
    scale = 1 / cont if lc > 0 else -1 / cont
    if scale != 1:
        num = num * scale
        den = den * scale
    return num, den


def ratfunc_is_zero(a: RatFunc) -> bool:
    return a.num.is_zero()


def as_ratfunc(ring: Ring, value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc(value)
    return RatFunc.const(ring, value)
