from __future__ import annotations

import pytest
import sympy

from oracles import SYMS, is_zero, matrix_to_sympy, to_sympy
from painleve_wb.exactalg import LAX, Matrix2, RatFunc
from painleve_wb.families import LAX_FAMILY_IDS, get_family
from painleve_wb.isomonodromy import (
    NoLaxData,
    derive_deformation,
    derive_second_order,
    hamiltonian_check,
    verify_second_order,
    verify_zero_curvature,
    zero_curvature_residual,
)

z, p, q, t, th0 = (SYMS[v] for v in ("z", "p", "q", "t", "th0"))


@pytest.mark.parametrize("fid", LAX_FAMILY_IDS)
def test_derivation_reproduces_registry(fid):
    fam = get_family(fid)
    res = derive_deformation(fam)
    assert res.B == fam.B
    assert res.qprime == fam.qprime and res.pprime == fam.pprime
    assert res.residual.is_zero()
    assert res.B.trace().is_zero()


@pytest.mark.parametrize("fid", LAX_FAMILY_IDS)
def test_zero_curvature_against_sympy(fid):
    """Recompute dA/dt - dB/dz + [B, A] along the flow with sympy."""
    fam = get_family(fid)
    assert verify_zero_curvature(fam).is_zero()
    A = matrix_to_sympy(fam.A_full)
    B = matrix_to_sympy(fam.B)
    qp, pp = to_sympy(fam.qprime), to_sympy(fam.pprime)
    dA = A.diff(t) + A.diff(q) * qp + A.diff(p) * pp
    residual = dA - B.diff(z) + B * A - A * B
    assert all(is_zero(x) for x in residual)


@pytest.mark.parametrize("fid", LAX_FAMILY_IDS)
def test_hamiltonian_form_against_sympy(fid):
    fam = get_family(fid)
    c = hamiltonian_check(fam)
    assert c.ok
    F, H = to_sympy(fam.F), to_sympy(fam.H)
    assert is_zero(to_sympy(fam.pprime) - F * H.diff(q))
    assert is_zero(to_sympy(fam.qprime) + F * H.diff(p))
    total = H.diff(t) + H.diff(q) * to_sympy(fam.qprime) + H.diff(p) * to_sympy(fam.pprime)
    assert is_zero(total - H.diff(t))


@pytest.mark.parametrize("fid", LAX_FAMILY_IDS)
def test_second_order_against_sympy(fid):
    """Eliminate p with sympy: solve q' = g for p, differentiate along the flow."""
    fam = get_family(fid)
    dq = SYMS["dq"]
    g, h = to_sympy(fam.qprime), to_sympy(fam.pprime)
    (p_sol,) = sympy.solve(sympy.Eq(dq, g), p)
    qpp = (g.diff(t) + g.diff(q) * g + g.diff(p) * h).subs(p, p_sol)
    assert is_zero(qpp - to_sympy(derive_second_order(fam)))


@pytest.mark.parametrize("fid", [f for f in LAX_FAMILY_IDS if f != "pv"])
def test_printed_second_order_equations(fid):
    assert verify_second_order(get_family(fid))


def test_pv_printed_second_order_differs_and_corrected_form_holds():
    fam = get_family("pv")
    assert not verify_second_order(fam)
    assert verify_second_order(fam, use_errata=True)


def test_pi_explicit_data():
    fam = get_family("pi")
    res = derive_deformation(fam)
    assert matrix_to_sympy(res.B) == sympy.Matrix([[0, z + 2 * q], [1, 0]])
    assert to_sympy(res.qprime) == 2 * p
    assert sympy.expand(to_sympy(res.pprime) - (3 * q ** 2 + t)) == 0
    assert sympy.expand(to_sympy(derive_second_order(fam)) - (6 * q ** 2 + 2 * t)) == 0


def test_flow_examples():
    assert is_zero(to_sympy(derive_deformation(get_family("pv")).qprime) - 2 * p / t)
    assert is_zero(to_sympy(derive_deformation(get_family("piii_d6")).qprime) - (4 * p + q) / t)


def test_wrong_flow_leaves_nonzero_residual():
    fam = get_family("piv")
    bad = fam.pprime + RatFunc.const(LAX, 1)
    assert not zero_curvature_residual(fam, fam.B, fam.qprime, bad).is_zero()
    zero = Matrix2.zero(LAX)
    assert not zero_curvature_residual(fam, zero, fam.qprime, fam.pprime).is_zero()


def test_pvi_has_no_lax_data():
    with pytest.raises(NoLaxData):
        derive_deformation(get_family("pvi"))
