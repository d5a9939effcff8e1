"""Zero-curvature derivation and the symbolic identities of each family.

With ``Ahat = A / w`` the plain d/dz coefficient, the operators ``d/dz + Ahat``
and ``d/dt + B`` commute iff

    R := dAhat/dt - dB/dz + B*Ahat - Ahat*B = 0,

where ``dAhat/dt`` is the total derivative along the flow (p', q').
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exactalg import LAX, Matrix2, RatFunc, linsolve_fraction_free
from ..families.registry import FamilySpec


class NotAffineInP(ValueError):
    pass


class NoLaxData(ValueError):
    pass


@dataclass
class DeformationResult:
    family: str
    B: Matrix2
    qprime: RatFunc
    pprime: RatFunc
    residual: Matrix2
    n_equations: int
    n_unknowns: int


def _require_lax(fam: FamilySpec):
    if not fam.has_lax:
        raise NoLaxData(f"{fam.id} carries no Lax pair")


def total_t_derivative(expr: RatFunc, qprime: RatFunc, pprime: RatFunc) -> RatFunc:
    return expr.diff("t") + expr.diff("q") * qprime + expr.diff("p") * pprime


def zero_curvature_residual(fam: FamilySpec, B: Matrix2, qprime: RatFunc, pprime: RatFunc) -> Matrix2:
    Ahat = fam.A_full
    dA = Ahat.map(lambda x: total_t_derivative(x, qprime, pprime))
    return dA - B.diff("z") + B.commutator(Ahat)


def verify_zero_curvature(fam: FamilySpec) -> Matrix2:
    """Residual of the identity using the registry's own B and flow."""
    _require_lax(fam)
    return zero_curvature_residual(fam, fam.B, fam.qprime, fam.pprime)


# -- derivation ----------------------------------------------------------------

_ENTRY = ((0, 0), (0, 1), (1, 0), (1, 1))


def _unit(i: int, j: int) -> Matrix2:
    e = [[0, 0], [0, 0]]
    e[i][j] = 1
    return Matrix2.from_rows(e, ring=LAX)


def derive_deformation(fam: FamilySpec) -> DeformationResult:
    """Solve for B (on the family's template) and the flow (q', p').

    The residual is cleared by ``z**(m+1) * w`` where ``m`` is the pole order
    of the template at 0, leaving a matrix polynomial in z

        N = z^(m+1) A_t - w (z Bp' - m Bp) + z [Bp, A],   Bp = z^m B.

    ``N`` is affine in the unknowns; every z-coefficient of every entry gives
    one linear equation.  Trace conditions on each B_k are appended rows.
    """
    _require_lax(fam)
    A = fam.A
    w = RatFunc(fam.weight)
    zz = RatFunc.var(LAX, "z")
    powers = fam.B_powers
    m = max(0, -min(powers))
    zm1 = zz ** (m + 1)

    # columns: 4 entries per template power, then q', p'
    columns: list[Matrix2] = []
    for k in powers:
        zk = zz ** (m + k)
        for i, j in _ENTRY:
            E = _unit(i, j)
            col = E * (-w * k * zk) + E.commutator(A) * (zk * zz)
            columns.append(col)
    columns.append(A.diff("q") * zm1)
    columns.append(A.diff("p") * zm1)
    const = A.diff("t") * zm1

    rows: list[list[RatFunc]] = []
    rhs: list[RatFunc] = []
    zero = RatFunc.const(LAX, 0)
    for e in range(4):
        col_coeffs = [c.entries()[e].coeffs_in("z") for c in columns]
        const_coeffs = const.entries()[e].coeffs_in("z")
        degs = set(const_coeffs)
        for cc in col_coeffs:
            degs.update(cc)
        for d in sorted(degs):
            row = [cc.get(d, zero) for cc in col_coeffs]
            if all(x.is_zero() for x in row) and d not in const_coeffs:
                continue
            rows.append(row)
            rhs.append(-const_coeffs.get(d, zero))
    n = len(columns)
    for b in range(len(powers)):
        row = [zero] * n
        row[4 * b] = RatFunc.const(LAX, 1)
        row[4 * b + 3] = RatFunc.const(LAX, 1)
        rows.append(row)
        rhs.append(zero)

    x = linsolve_fraction_free(rows, rhs)
    B = Matrix2.zero(LAX)
    for b, k in enumerate(powers):
        Bk = Matrix2(*x[4 * b: 4 * b + 4], ring=LAX)
        B = B + Bk * (zz**k if k >= 0 else RatFunc(LAX.one(), zz.num ** (-k)))
    qp, pp = x[-2], x[-1]
    residual = zero_curvature_residual(fam, B, qp, pp)
    if not residual.is_zero():
        raise ArithmeticError(f"derived deformation for {fam.id} leaves a nonzero residual")
    return DeformationResult(fam.id, B, qp, pp, residual, len(rows), n)


# -- Hamiltonian structure -----------------------------------------------------

@dataclass
class HamiltonianCheck:
    pprime_ok: bool
    qprime_ok: bool
    drift_ok: bool

    @property
    def ok(self) -> bool:
        return self.pprime_ok and self.qprime_ok and self.drift_ok


def hamiltonian_check(fam: FamilySpec) -> HamiltonianCheck:
    _require_lax(fam)
    F = RatFunc(fam.F)
    H = fam.H
    p_ok = (fam.pprime - F * H.diff("q")).is_zero()
    q_ok = (fam.qprime + F * H.diff("p")).is_zero()
    return HamiltonianCheck(p_ok, q_ok, hamiltonian_drift_identity(fam))


def verify_hamiltonian(fam: FamilySpec) -> bool:
    c = hamiltonian_check(fam)
    return c.pprime_ok and c.qprime_ok


def hamiltonian_drift_identity(fam: FamilySpec) -> bool:
    """dH/dt along the flow equals the explicit partial derivative in t."""
    H = fam.H
    total = total_t_derivative(H, fam.qprime, fam.pprime)
    return (total - H.diff("t")).is_zero()


# -- second-order equation -----------------------------------------------------

def derive_second_order(fam: FamilySpec) -> RatFunc:
    """q'' in terms of (q, dq, t, theta) obtained by eliminating p."""
    _require_lax(fam)
    g = fam.qprime
    if not g.den.free_of("p") or g.num.degree("p") > 1:
        raise NotAffineInP(f"q' of {fam.id} is not affine in p")
    parts = g.coeffs_in("p")
    alpha = parts.get(1)
    if alpha is None or alpha.is_zero():
        raise NotAffineInP(f"q' of {fam.id} does not depend on p")
    beta = parts.get(0, RatFunc.const(LAX, 0))
    dq = RatFunc.var(LAX, "dq")
    p_of_dq = (dq - beta) / alpha
    qpp = g.diff("t") + g.diff("q") * g + g.diff("p") * fam.pprime
    return qpp.subs({"p": p_of_dq})


def verify_second_order(fam: FamilySpec, *, use_errata: bool = False) -> bool:
    target = fam.errata.get("second_order", fam.second_order) if use_errata else fam.second_order
    return (derive_second_order(fam) - target).is_zero()


def second_order_difference(fam: FamilySpec) -> RatFunc:
    return derive_second_order(fam) - fam.second_order
