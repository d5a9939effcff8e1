"""Scalar form of a rank-2 connection and its apparent singularities.

For ``d/dz + Ahat`` with ``Ahat = ((a, b), (c, -a))`` and the first basis
vector as cyclic vector, the scalar operator is

    L = (d/dz)^2 - (c'/c) d/dz - a' - a^2 - b c + a c'/c.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ..exactalg import LAX, Matrix2, Poly, RatFunc
from ..families.registry import FamilySpec


class NotCyclic(ValueError):
    pass


class ZeroWedge(ValueError):
    pass


class DegenerateSample(RuntimeError):
    pass


class MultipleZeros(ValueError):
    pass


@dataclass
class ScalarOperator:
    a1: RatFunc
    a0: RatFunc


@dataclass
class ApparentReport:
    b_poly: Poly
    apparent_points: int
    stripped: dict  # singular point -> multiplicity removed


def scalar_operator(A_full: Matrix2) -> ScalarOperator:
    a, b, c, _ = A_full.entries()
    if c.is_zero():
        raise NotCyclic("the first basis vector is not cyclic (c = 0)")
    dc = c.diff("z")
    a1 = -dc / c
    a0 = -a.diff("z") - a * a - b * c + a * dc / c
    return ScalarOperator(a1, a0)


# -- poles and residues in z ---------------------------------------------------

def _strip_root(poly: Poly, root: Poly, var: str = "z") -> tuple[Poly, int]:
    k = 0
    if poly.is_zero():
        raise ValueError("zero polynomial has no finite order")
    while True:
        quo, rem = poly.div_linear(var, root)
        if not rem.is_zero():
            return poly, k
        poly, k = quo, k + 1


def pole_order(expr: RatFunc, root, var: str = "z") -> int:
    """Order of the pole of ``expr`` at ``var = root`` (negative for zeros)."""
    root = root if isinstance(root, Poly) else Poly.const(LAX, root)
    if expr.is_zero():
        return 0
    _, kd = _strip_root(expr.den, root, var)
    _, kn = _strip_root(expr.num, root, var)
    return kd - kn


def residue(expr: RatFunc, root, var: str = "z") -> RatFunc:
    """Residue at a pole of order at most one."""
    root = root if isinstance(root, Poly) else Poly.const(LAX, root)
    if expr.is_zero():
        return RatFunc.const(LAX, 0)
    den, kd = _strip_root(expr.den, root, var)
    num, kn = _strip_root(expr.num, root, var)
    order = kd - kn
    if order <= 0:
        return RatFunc.const(LAX, 0)
    if order > 1:
        raise ValueError(f"pole of order {order}; only simple poles are supported")
    return RatFunc(num.subs({var: root}), den.subs({var: root}))


def zero_of_linear(c: RatFunc, var: str = "z") -> Poly | RatFunc:
    if not c.den.free_of(var):
        # zeros of c are zeros of its numerator off the denominator's zeros
        pass
    parts = c.num.coeffs_in(var)
    deg = max(parts, default=0)
    if deg == 0:
        raise MultipleZeros("c has no zero in z")
    if deg > 1:
        raise MultipleZeros(f"c has {deg} zeros in z")
    root = RatFunc(-parts.get(0, LAX.zero()), parts[1])
    return root.num * (1 / root.den.constant_value()) if root.is_polynomial() else root


def recover_pq(A_full: Matrix2, F: Poly | None = None) -> tuple[RatFunc, RatFunc]:
    """(q, p): q the zero of c, p = F(q) times the residue of a0 at q."""
    op = scalar_operator(A_full)
    c = A_full.c
    q0 = zero_of_linear(RatFunc(c.num), "z")
    if not isinstance(q0, Poly):
        raise MultipleZeros("zero of c is not polynomial in the parameters")
    res = residue(op.a0, q0)
    Fq = RatFunc(F.subs({"q": q0})) if F is not None else RatFunc.const(LAX, 1)
    return RatFunc(q0), Fq * res


def recover_pq_family(fam: FamilySpec) -> tuple[RatFunc, RatFunc]:
    return recover_pq(fam.A_full, fam.F)


def a1_pole_structure(fam: FamilySpec) -> dict:
    """Pole orders of a1 at q, at each singular point, and any leftover factor."""
    op = scalar_operator(fam.A_full)
    den = op.a1.den
    num = op.a1.num
    orders = {}
    qpoly = LAX.var("q")
    for label, root in [("q", qpoly)] + [(str(s), Poly.const(LAX, s)) for s in fam.singular_points]:
        den, kd = _strip_root(den, root)
        num, kn = _strip_root(num, root)
        orders[label] = kd - kn
    orders["other"] = 0 if den.free_of("z") else den.degree("z")
    return orders


# -- apparent singularities ----------------------------------------------------

def wedge_polynomial(A: Matrix2, v: Sequence) -> Poly:
    """v ∧ A v for the polynomial-numerator matrix A (entries over a z-free denominator)."""
    v1, v2 = (RatFunc.const(LAX, x) for x in v)
    Av1, Av2 = A.apply((v1, v2))
    W = v1 * Av2 - v2 * Av1
    if not W.den.free_of("z"):
        raise ValueError("matrix entries must have z-free denominators")
    return W.num * (1 / W.den.constant_value()) if W.den.is_constant() else W.num


def apparent_b_polynomial(A: Matrix2, v: Sequence, singular_points: Sequence = ()) -> ApparentReport:
    if all(Fraction(x) == 0 for x in v):
        raise ValueError("v must be nonzero")
    W = wedge_polynomial(A, v)
    if W.is_zero():
        raise ZeroWedge("v is an eigenvector of the whole connection")
    stripped = {}
    for s in singular_points:
        W, k = _strip_root(W, Poly.const(LAX, s))
        if k:
            stripped[Fraction(s)] = k
    return ApparentReport(W, W.degree("z"), stripped)


# -- good cyclic vectors -------------------------------------------------------

def _top_and_residues(A: Matrix2, singular_points) -> list[Matrix2]:
    """Constant matrices whose eigenvectors are the good cyclic candidates."""
    entries = A.entries()
    deg = max(e.num.degree("z") for e in entries)
    top = Matrix2(*(RatFunc(e.num.coeff("z", deg), e.den) for e in entries), ring=LAX)
    mats = [top]
    for s in singular_points:
        mats.append(A.subs({"z": s}))
    return mats


def _is_square(r: Fraction) -> Fraction | None:
    if r < 0:
        return None
    from math import isqrt

    n, d = r.numerator, r.denominator
    sn, sd = isqrt(n), isqrt(d)
    if sn * sn == n and sd * sd == d:
        return Fraction(sn, sd)
    return None


def eigenvectors(M) -> list[tuple[Fraction, Fraction]]:
    """Rational eigenvectors of a traceless 2x2 rational matrix, one per eigenline.

    Raises :class:`DegenerateSample` when the eigenvalues are irrational or the
    matrix is scalar.
    """
    (a, b), (c, d) = M
    if b == 0 and c == 0 and a == d:
        raise DegenerateSample("scalar residue matrix")
    tr = a + d
    disc = tr * tr - 4 * (a * d - b * c)
    root = _is_square(disc)
    if root is None:
        raise DegenerateSample("irrational eigenvalues")
    lams = {(tr + root) / 2, (tr - root) / 2}
    out = []
    for lam in sorted(lams):
        if b != 0:
            vec = (b, lam - a)
        elif c != 0:
            vec = (lam - d, c)
        else:
            vec = (Fraction(1), Fraction(0)) if lam == a else (Fraction(0), Fraction(1))
        out.append(_normalize_vec(vec))
    return out


def _normalize_vec(v) -> tuple[Fraction, Fraction]:
    x, y = Fraction(v[0]), Fraction(v[1])
    s = x if x != 0 else y
    return (x / s, y / s)


@dataclass
class CyclicCount:
    family: str
    sample: dict
    candidates: list
    good: int
    apparent_counts: list
    generic_apparent: int
    attempts: int


SAMPLE_VARS = ("p", "q", "t", "th0", "th1", "thinf")


def random_sample(rng: random.Random) -> dict[str, Fraction]:
    def val():
        num = rng.randint(1, 40) * rng.choice((-1, 1))
        return Fraction(num, rng.randint(1, 9))

    return {v: val() for v in SAMPLE_VARS}


def _generic_structure(A: Matrix2, singular_points) -> list[bool]:
    """For each candidate matrix: True when it is nilpotent for all parameters."""
    out = []
    for M in _top_and_residues(A, singular_points):
        out.append(M.det().is_zero() and M.trace().is_zero())
    return out


def good_cyclic_count(fam: FamilySpec, sample: Mapping | None = None, *, seed: int = 0,
                      max_tries: int = 25) -> CyclicCount:
    rng = random.Random(seed)
    nilpotent = _generic_structure(fam.A, fam.singular_points)
    last_err = None
    for attempt in range(1, max_tries + 1):
        s = dict(sample) if (sample is not None and attempt == 1) else random_sample(rng)
        try:
            return _count_at(fam, s, nilpotent, attempt)
        except (DegenerateSample, ZeroDivisionError) as exc:
            last_err = exc
            if sample is not None and attempt == 1:
                sample = None
    raise DegenerateSample(f"no usable sample for {fam.id} after {max_tries} tries: {last_err}")


def _count_at(fam: FamilySpec, s: Mapping, nilpotent: list[bool], attempt: int) -> CyclicCount:
    vals = {k: Fraction(v) for k, v in s.items()}
    # denominators of A must not vanish at the sample
    for e in fam.A.entries():
        if e.den.subs(vals).is_zero():
            raise ZeroDivisionError("sample hits a denominator of A")
    A = fam.A.subs(vals)
    mats = _top_and_residues(A, fam.singular_points)
    candidates: list[tuple[Fraction, Fraction]] = []
    for M, nil in zip(mats, nilpotent):
        Mq = [[x.num.constant_value() / x.den.constant_value() for x in row] for row in M.rows()]
        vecs = eigenvectors(Mq)
        if len(vecs) != (1 if nil else 2):
            raise DegenerateSample("eigenvalue collision at this sample")
        for v in vecs:
            if v not in candidates:
                candidates.append(v)
    counts = []
    for v in candidates:
        try:
            rep = apparent_b_polynomial(A, v, fam.singular_points)
            counts.append(rep.apparent_points)
        except ZeroWedge:
            raise DegenerateSample("candidate is a global eigenvector at this sample")
    generic = apparent_b_polynomial(A, (Fraction(1), Fraction(1, 3)), fam.singular_points).apparent_points
    good = sum(1 for k in counts if k == 1)
    return CyclicCount(fam.id, {k: str(v) for k, v in sorted(vals.items())}, candidates, good,
                       counts, generic, attempt)
