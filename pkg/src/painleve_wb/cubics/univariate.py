"""Dense univariate polynomials over Q as coefficient lists (low degree first)."""

from __future__ import annotations

from fractions import Fraction
import math
from math import lcm
from typing import Sequence

import numpy as np

from ..exactalg import Poly

UPoly = list  # list[Fraction]


def trim(a: Sequence[Fraction]) -> UPoly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def from_poly(P: Poly, var: str) -> UPoly:
    parts = P.coeffs_in(var)
    if not parts:
        return []
    out = [Fraction(0)] * (max(parts) + 1)
    for k, c in parts.items():
        if not c.is_constant():
            raise ValueError(f"polynomial is not univariate in {var}")
        out[k] = c.constant_value()
    return trim(out)


def degree(a: UPoly) -> int:
    return len(a) - 1


def monic(a: UPoly) -> UPoly:
    a = trim(a)
    if not a:
        return a
    lc = a[-1]
    return [c / lc for c in a]


def divmod_(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = r[-1] / b[-1]
        q[k] = c
        for i, bc in enumerate(b):
            r[i + k] -= c * bc
        r = trim(r)
    return trim(q), r


def _primitive(a: UPoly) -> UPoly:
    """Integer primitive part, kept as Fractions; tames coefficient growth."""
    a = trim(a)
    if not a:
        return a
    ints = _integer_coeffs(a)
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [Fraction(c // g) for c in ints]


def gcd(a: UPoly, b: UPoly) -> UPoly:
    a, b = _primitive(a), _primitive(b)
    while b:
        a, b = b, _primitive(divmod_(a, b)[1])
    return monic(a)


def derivative(a: UPoly) -> UPoly:
    return trim([i * c for i, c in enumerate(a)][1:])


def squarefree(a: UPoly) -> UPoly:
    a = trim(a)
    if len(a) <= 2:
        return monic(a)
    g = gcd(a, derivative(a))
    return monic(divmod_(a, g)[0])


def evaluate(a: UPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _integer_coeffs(a: UPoly) -> list[int]:
    d = lcm(*(c.denominator for c in a)) if a else 1
    return [int(c * d) for c in a]


def numeric_roots(a: UPoly) -> list[complex]:
    a = trim(a)
    if len(a) <= 1:
        return []
    ints = _integer_coeffs(monic(a))
    scale = max(abs(c) for c in ints) or 1
    coeffs = [c / scale for c in reversed(ints)]
    return [complex(r) for r in np.roots(coeffs)]


def rational_roots(a: UPoly, max_den: int = 10**6) -> list[Fraction]:
    """Exact rational roots, found from numerical approximations and verified."""
    a = squarefree(a)
    found: list[Fraction] = []
    while len(a) > 1:
        if len(a) == 2:
            found.append(-a[0] / a[1])
            break
        hit = None
        for r in numeric_roots(a):
            if abs(r.imag) > 1e-6 * (1 + abs(r)):
                continue
            for den in (1, 10, 100, 10**4, max_den):
                cand = Fraction(r.real).limit_denominator(den)
                if evaluate(a, cand) == 0:
                    hit = cand
                    break
            if hit is not None:
                break
        if hit is None:
            break
        found.append(hit)
        a = divmod_(a, [-hit, Fraction(1)])[0]
    return sorted(set(found))
