"""Dimension count for fibres of the Riemann-Hilbert map.

A configuration is a set S of singular points on the projective line with
a Katz invariant r(p) in (1/2)Z at each.  The fibre dimension is

    max(#S - 3, 0) + sum_p contrib(r(p)) - g(#S)

where g removes the automorphisms still acting once fewer than three points
are fixed: g(2) = 1 for z -> a z and g(1) = 2 for z -> a z + b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .registry import all_families


class BadKatz(ValueError):
    pass


def katz_contribution(r) -> int:
    r = Fraction(r)
    if r < 0 or (2 * r).denominator != 1:
        raise BadKatz(f"Katz invariant must lie in (1/2)Z>=0, got {r}")
    return int(r) if r.denominator == 1 else int(r + Fraction(1, 2))


def _group_dim(n_points: int) -> int:
    return {1: 2, 2: 1}.get(n_points, 0)


def fibre_dimension(rs) -> int:
    n = len(rs)
    return max(n - 3, 0) + sum(katz_contribution(r) for r in rs) - _group_dim(n)


@dataclass(frozen=True, order=True)
class KatzSignature:
    """Katz invariants placed at (0, 1, inf, t); ``None`` marks an absent point."""

    r0: Fraction | None
    r1: Fraction | None
    rinf: Fraction | None
    rt: Fraction | None

    @property
    def n_points(self) -> int:
        return sum(r is not None for r in self.row())

    def row(self) -> tuple:
        return (self.r0, self.r1, self.rinf, self.rt)

    @property
    def dimP(self) -> int:
        # singular points with integral Katz invariant carry one parameter each
        return sum(1 for r in self.row() if r is not None and r.denominator == 1)

    def __str__(self):
        return "(" + ", ".join("-" if r is None else str(r) for r in self.row()) + ")"

    def sort_key(self):
        return tuple((-1, 0) if r is None else (0, r) for r in self.row())


def _place(rs: tuple[Fraction, ...]) -> KatzSignature:
    rs = tuple(sorted(rs))
    n = len(rs)
    if n == 4:
        return KatzSignature(*rs)
    if n == 3:
        # the irregular point sits at infinity
        return KatzSignature(rs[0], rs[1], rs[2], None)
    if n == 2:
        return KatzSignature(rs[0], None, rs[1], None)
    if n == 1:
        return KatzSignature(None, None, rs[0], None)
    raise ValueError("unsupported number of points")


def enumerate_families(max_r=Fraction(3), max_points: int = 4) -> list[KatzSignature]:
    """All configurations with one-dimensional fibres, canonically placed."""
    max_r = Fraction(max_r)
    values = [Fraction(k, 2) for k in range(int(2 * max_r) + 1)]
    found = set()
    for n in range(1, max_points + 1):
        for rs in combinations_with_replacement(values, n):
            if fibre_dimension(rs) == 1:
                found.add(_place(rs))
    return sorted(found, key=KatzSignature.sort_key)


def table_one() -> list[KatzSignature]:
    """Katz signatures of the registry, in the same canonical order."""
    sigs = [KatzSignature(*f.katz_row()) for f in all_families()]
    return sorted(sigs, key=KatzSignature.sort_key)
