"""A_n classification of isolated surface singularities by the splitting lemma."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exactalg import CUBIC, Poly

VARS = ("x1", "x2", "x3")


class NotADE(ValueError):
    pass


class NotIsolated(ValueError):
    pass


class NotSingular(ValueError):
    pass


def _truncate(P: Poly, var: str, deg: int) -> Poly:
    i = P.ring.pos(var)
    return Poly(P.ring, {e: c for e, c in P.terms.items() if e[i] <= deg})


def hessian_at_origin(G: Poly) -> list[list[Fraction]]:
    zero = {v: 0 for v in VARS}
    return [[G.diff(a).diff(b).evaluate(zero) for b in VARS] for a in VARS]


def rank(M: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(map(Fraction, r)) for r in M]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / rows[r][c]
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def diagonalize_form(H: Sequence[Sequence[Fraction]]):
    """Return (P, d) with P^T H P = diag(d), by symmetric elimination over Q."""
    n = len(H)
    S = [list(map(Fraction, r)) for r in H]
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def col_add(dst, src, f):
        # column op on P and congruence on S: e_dst <- e_dst + f e_src
        for i in range(n):
            P[i][dst] += f * P[i][src]
        for i in range(n):
            S[i][dst] += f * S[i][src]
        for j in range(n):
            S[dst][j] += f * S[src][j]

    def swap(a, b):
        for row in P:
            row[a], row[b] = row[b], row[a]
        S[a], S[b] = S[b], S[a]
        for row in S:
            row[a], row[b] = row[b], row[a]

    for k in range(n):
        piv = next((i for i in range(k, n) if S[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if S[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            col_add(i, j, Fraction(1))
            piv = i
        if piv != k:
            swap(piv, k)
        for j in range(k + 1, n):
            if S[k][j] != 0:
                col_add(j, k, -S[k][j] / S[k][k])
    return P, [S[i][i] for i in range(n)]


def translate(F: Poly, point: Sequence) -> Poly:
    return F.subs({v: CUBIC.var(v) + Fraction(c) for v, c in zip(VARS, point)})


def classify_local(G: Poly, max_degree: int = 8) -> str:
    """Type of the singularity of G at the origin (G(0) = 0, grad G(0) = 0)."""
    zero = {v: 0 for v in VARS}
    if G.evaluate(zero) != 0 or any(G.diff(v).evaluate(zero) != 0 for v in VARS):
        raise NotSingular("the origin is not a singular point")
    H = hessian_at_origin(G)
    r = rank(H)
    if r == 3:
        return "A1"
    if r <= 1:
        raise NotADE(f"quadratic part has rank {r}")
    P, d = diagonalize_form(H)
    y = [CUBIC.var(v) for v in VARS]
    lin = {VARS[i]: sum((y[j] * P[i][j] for j in range(3)), CUBIC.zero()) for i in range(3)}
    G2 = G.subs(lin)
    # after the change of basis the form is d0 y1^2 + d1 y2^2 with d2 = 0
    d0, d1 = d[0] / 2, d[1] / 2
    g1, g2 = G2.diff("x1"), G2.diff("x2")
    phi1, phi2 = CUBIC.zero(), CUBIC.zero()
    for _ in range(max_degree + 2):
        sub = {"x1": phi1, "x2": phi2}
        n1 = phi1 - g1.subs(sub) * (1 / (2 * d0))
        n2 = phi2 - g2.subs(sub) * (1 / (2 * d1))
        phi1, phi2 = _truncate(n1, "x3", max_degree), _truncate(n2, "x3", max_degree)
    g = _truncate(G2.subs({"x1": phi1, "x2": phi2}), "x3", max_degree)
    if g.is_zero():
        raise NotIsolated(f"residual vanishes to degree {max_degree}")
    m = g.min_degree("x3")
    return f"A{m - 1}"


def classify_singularity(F: Poly, point: Sequence, max_degree: int = 8) -> str:
    """A_n label of the singular point ``point`` of the specialized surface F = 0."""
    return classify_local(translate(F, point), max_degree)


def permute_coordinates(F: Poly, perm: Sequence[int]) -> Poly:
    """F with x_i replaced by x_perm[i]."""
    return F.subs({VARS[i]: CUBIC.var(VARS[perm[i]]) for i in range(3)})
