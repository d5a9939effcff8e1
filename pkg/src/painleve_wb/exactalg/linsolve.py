"""Fraction-free (Bareiss) elimination over the field of rational functions.

Every row is first cleared of denominators, so elimination runs on
polynomials and each Bareiss step ends with an exact polynomial division.
"""

from __future__ import annotations

from typing import Sequence

from .poly import Poly
from .ratfunc import RatFunc, as_ratfunc


class SingularSystem(ArithmeticError):
    """The system has no unique solution."""


class InconsistentSystem(ArithmeticError):
    """Rows beyond the rank are not satisfied."""


def _lcm_den(row: Sequence[RatFunc]) -> Poly:
    # product of distinct denominators; no gcd, but exact duplicates are shared
    ring = row[0].ring
    dens: list[Poly] = []
    for x in row:
        if x.is_zero() or x.den.is_constant():
            continue
        if not any(x.den.divides(d) for d in dens):
            dens = [d for d in dens if not d.divides(x.den)]
            dens.append(x.den)
    out = ring.one()
    for d in dens:
        out = out * d
    return out


def _clear_row(row: Sequence[RatFunc]) -> list[Poly]:
    m = _lcm_den(row)
    out = []
    for x in row:
        if x.is_zero():
            out.append(m.ring.zero())
            continue
        num = x.num * m
        out.append(num.divexact(x.den) if not x.den.is_constant() else num * (1 / x.den.constant_value()))
    return out


def _pivot_row(rows: list[list[Poly]], col: int, start: int) -> int | None:
    best, best_size = None, None
    for i in range(start, len(rows)):
        e = rows[i][col]
        if e.is_zero():
            continue
        size = (len(e), e.degree())
        if best is None or size < best_size:
            best, best_size = i, size
    return best


def bareiss_det(M: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix by Bareiss elimination."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    ring = next(x.ring for row in M for x in row if hasattr(x, "ring"))
    rows = [[x if isinstance(x, Poly) else Poly.const(ring, x) for x in r] for r in M]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        piv = _pivot_row(rows, k, k)
        if piv is None:
            return ring.zero()
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (pk * rows[i][j] - rows[i][k] * rows[k][j]).divexact(prev)
            rows[i][k] = ring.zero()
        prev = pk
    det = rows[n - 1][n - 1]
    return det if sign > 0 else -det


def linsolve_fraction_free(M: Sequence[Sequence], rhs: Sequence) -> list[RatFunc]:
    """Solve ``M x = rhs`` for a square or overdetermined consistent system.

    Raises :class:`SingularSystem` when the column rank is deficient and
    :class:`InconsistentSystem` when surplus rows disagree.  The returned
    solution is checked against every original row before returning.
    """
    if not M:
        raise SingularSystem("empty system")
    nrows, ncols = len(M), len(M[0])
    if len(rhs) != nrows:
        raise ValueError("row count mismatch")
    ring = next(x.ring for row in M for x in row if hasattr(x, "ring"))
    M_r = [[as_ratfunc(ring, x) for x in row] for row in M]
    b_r = [as_ratfunc(ring, x) for x in rhs]
    if nrows < ncols:
        raise SingularSystem(f"{nrows} equations for {ncols} unknowns")

    rows = [_clear_row(row + [b]) for row, b in zip(M_r, b_r)]
    rows = [r for r in rows if not all(x.is_zero() for x in r[:ncols]) or not r[ncols].is_zero()]
    for r in rows:
        if all(x.is_zero() for x in r[:ncols]):
            raise InconsistentSystem("row with zero coefficients and nonzero right-hand side")

    prev = ring.one()
    n = ncols
    for k in range(n):
        piv = _pivot_row(rows, k, k)
        if piv is None:
            raise SingularSystem(f"no pivot in column {k}")
        rows[k], rows[piv] = rows[piv], rows[k]
        pk = rows[k][k]
        for i in range(k + 1, len(rows)):
            rik = rows[i][k]
            for j in range(k + 1, n + 1):
                rows[i][j] = (pk * rows[i][j] - rik * rows[k][j]).divexact(prev)
            rows[i][k] = ring.zero()
        prev = pk

    for r in rows[n:]:
        if not r[n].is_zero():
            raise InconsistentSystem("surplus equation not satisfied")

    # rows[k][j] (j >= k) is now a leading minor-type entry; D = rows[n-1][n-1]
    D = rows[n - 1][n - 1]
    y: list[Poly] = [ring.zero()] * n
    for k in range(n - 1, -1, -1):
        acc = D * rows[k][n]
        for j in range(k + 1, n):
            if not rows[k][j].is_zero():
                acc = acc - rows[k][j] * y[j]
        y[k] = acc.divexact(rows[k][k])
    x = [RatFunc(yk, D) for yk in y]

    for row, b in zip(M_r, b_r):
        s = RatFunc.const(ring, 0)
        for a, xv in zip(row, x):
            if not a.is_zero():
                s = s + a * xv
        if not (s - b).is_zero():
            raise InconsistentSystem("solution fails back-substitution")
    return x


def cramer_solve(M: Sequence[Sequence], rhs: Sequence) -> list[RatFunc]:
    """Independent solver by Cramer's rule with cofactor determinants."""
    ring = next(x.ring for row in M for x in row if hasattr(x, "ring"))
    M_r = [[as_ratfunc(ring, x) for x in row] for row in M]
    b_r = [as_ratfunc(ring, x) for x in rhs]
    d = cofactor_det(M_r)
    if d.is_zero():
        raise SingularSystem("zero determinant")
    out = []
    for j in range(len(M_r)):
        Mj = [row[:j] + [b] + row[j + 1:] for row, b in zip(M_r, b_r)]
        out.append(cofactor_det(Mj) / d)
    return out


def cofactor_det(M: Sequence[Sequence[RatFunc]]) -> RatFunc:
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = None
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return RatFunc.const(M[0][0].ring, 0)
    return total
