"""Exact search for the singular points of a specialized cubic.

The Jacobian ideal I = (F, dF/dx1, dF/dx2, dF/dx3) is generated by
quadrics once F is replaced by F - (x . grad F)/3.  Resultants of random
combinations of these quadrics are elements of I, so the gcd of the
resulting polynomials in x1 is a multiple of the generator of I ∩ Q[x1].
A constant gcd therefore certifies that the fibre is smooth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..exactalg import CUBIC, Poly, bareiss_det
from . import univariate as up

VARS = ("x1", "x2", "x3")


class EliminationInconclusive(RuntimeError):
    def __init__(self, message: str, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)


@dataclass
class SingularSearch:
    smooth: bool
    points: list[tuple[Fraction, Fraction, Fraction]]
    eliminant_degree: int


def resultant(f: Poly, g: Poly, var: str) -> Poly:
    m, n = f.degree(var), g.degree(var)
    if f.is_zero() or g.is_zero():
        return f.ring.zero()
    if m == 0:
        return f**n
    if n == 0:
        return g**m
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    zero = f.ring.zero()
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = fc.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = gc.get(k, zero)
        rows.append(row)
    return bareiss_det(rows)


def jacobian_quadrics(F: Poly) -> list[Poly]:
    grads = [F.diff(v) for v in VARS]
    x = [CUBIC.var(v) for v in VARS]
    euler = F - (x[0] * grads[0] + x[1] * grads[1] + x[2] * grads[2]) * Fraction(1, 3)
    return [euler] + grads


def _combo(polys: list[Poly], rng: random.Random) -> Poly:
    out = CUBIC.zero()
    for P in polys:
        c = rng.randint(-7, 7) or 1
        out = out + P * c
    return out


def _eliminant(polys: list[Poly], elim: tuple[str, ...], keep: str, rng: random.Random, trials: int) -> up.UPoly:
    """gcd of several elements of the ideal that only involve ``keep``."""
    polys = [P for P in polys if not P.is_zero()]
    g: up.UPoly | None = None
    direct = [P for P in polys if all(P.free_of(v) for v in elim)]
    for P in direct:
        u = up.from_poly(P, keep)
        g = u if g is None else up.gcd(g, u)
    for _ in range(trials):
        if g is not None and len(g) <= 1:
            break
        if len(elim) == 0:
            break
        if len(elim) == 1:
            a, b = _combo(polys, rng), _combo(polys, rng)
            e = resultant(a, b, elim[0])
        else:
            a, b, c = _combo(polys, rng), _combo(polys, rng), _combo(polys, rng)
            ra = resultant(a, b, elim[0])
            rb = resultant(a, c, elim[0])
            e = resultant(ra, rb, elim[1])
        if e.is_zero():
            continue
        u = up.from_poly(e, keep)
        g = u if g is None else up.gcd(g, u)
    if g is None:
        raise EliminationInconclusive(f"every eliminant in {keep} vanished identically")
    return up.monic(g)


def _random_frame(rng: random.Random):
    """A random integer matrix M with nonzero determinant and its exact inverse."""
    while True:
        M = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        aug = [row[:] + [Fraction(int(i == j)) for j in range(3)] for i, row in enumerate(M)]
        ok = True
        for c in range(3):
            piv = next((r for r in range(c, 3) if aug[r][c] != 0), None)
            if piv is None:
                ok = False
                break
            aug[c], aug[piv] = aug[piv], aug[c]
            aug[c] = [v / aug[c][c] for v in aug[c]]
            for r in range(3):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
        if ok:
            return M, [row[3:] for row in aug]


def _search(quads: list[Poly], rng: random.Random, trials: int):
    g1 = _eliminant(quads, ("x3", "x2"), "x1", rng, trials)
    if len(g1) <= 1:
        return g1, []
    points = []
    for a in up.rational_roots(g1):
        q1 = [P.subs({"x1": a}) for P in quads]
        g2 = _eliminant(q1, ("x3",), "x2", rng, trials)
        for b in up.rational_roots(g2):
            q2 = [P.subs({"x2": b}) for P in q1]
            g3 = _eliminant(q2, (), "x3", rng, 0)
            for c in up.rational_roots(g3):
                pt = (a, b, c)
                vals = dict(zip(VARS, pt))
                if all(P.evaluate(vals) == 0 for P in quads):
                    points.append(pt)
    return g1, points


def find_singular_points(F: Poly, seed: int = 0, trials: int = 4) -> SingularSearch:
    """Exact singular points of the surface F = 0 (F with rational coefficients).

    Elimination runs in a random linear frame x = M y so that no eliminant
    picks up spurious roots from vanishing leading coefficients.
    """
    rng = random.Random(seed)
    M, Minv = _random_frame(rng)
    y = [CUBIC.var(v) for v in VARS]
    frame = {VARS[i]: sum((y[j] * M[i][j] for j in range(3)), CUBIC.zero()) for i in range(3)}
    quads = jacobian_quadrics(F)
    g1, ypts = _search([Q.subs(frame) for Q in quads], rng, trials)
    if len(g1) <= 1:
        return SingularSearch(True, [], 0)
    points = []
    for yp in ypts:
        pt = tuple(sum((M[i][j] * yp[j] for j in range(3)), Fraction(0)) for i in range(3))
        vals = dict(zip(VARS, pt))
        if all(Q.evaluate(vals) == 0 for Q in quads):
            points.append(pt)
    if not points:
        raise EliminationInconclusive(
            "eliminant has roots but no rational singular point was found",
            candidates=up.numeric_roots(g1),
        )
    return SingularSearch(False, sorted(points), up.degree(g1))
