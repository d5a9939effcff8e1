from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import solve_ivp

from painleve_wb.families import LAX_FAMILY_IDS, get_family
from painleve_wb.numerics import (
    IDENTITY,
    CompiledFamily,
    DomainViolation,
    PathTooClose,
    StepUnderflow,
    default_clearance,
    dopri5,
    hamiltonian_drift,
    integrate_flow,
    isomonodromy_invariance,
    linear_transport,
    local_trace,
    mat_det,
    product_relation,
    square_loop,
    trace_formula,
)
from painleve_wb.numerics.benchmarks import FLOW_BENCHMARKS, MONODROMY_BENCHMARKS, THETA


def dist(A, B):
    return max(abs(a - b) for a, b in zip(A, B))


# -- integrator ------------------------------------------------------------------

def test_dopri5_exponential():
    lam = -0.7 + 2.0j
    res = dopri5(lambda s, y: [lam * y[0]], 0.0, 3.0, [1 + 0j], 1e-12)
    assert res.status == "completed"
    assert abs(res.y[0] - cmath.exp(3 * lam)) < 1e-10


def test_dopri5_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        dopri5(lambda s, y: y, 0.0, 1.0, [1 + 0j], 0.0)


def test_dopri5_step_underflow():
    # y' = y^2 from y(0) = 1 blows up at s = 1
    with pytest.raises(StepUnderflow):
        dopri5(lambda s, y: [y[0] * y[0]], 0.0, 2.0, [1 + 0j], 1e-10)


def test_dopri5_stop_callback_halts():
    res = dopri5(lambda s, y: [y[0] * y[0]], 0.0, 2.0, [1 + 0j], 1e-10, stop=lambda s, y: abs(y[0]) > 1e3)
    assert res.status == "halted" and res.s < 1.0


def test_dopri5_against_scipy():
    model = CompiledFamily.build(get_family("pii_fn"), THETA)

    def f(t, y):
        return list(model.flow(t, y[0], y[1]))

    ours = dopri5(f, 1.0, 1.5, [0.3 + 0.1j, 0.1 + 0j], 1e-12).y
    ref = solve_ivp(f, (1.0, 1.5), np.array([0.3 + 0.1j, 0.1 + 0j]), method="DOP853", rtol=1e-13, atol=1e-14)
    assert ref.success
    assert dist(ours, ref.y[:, -1]) < 1e-9


@settings(max_examples=25, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(0.1, 2))
def test_dopri5_linear_systems(re, im, span):
    lam = complex(re, im)
    res = dopri5(lambda s, y: [lam * y[0], -lam * y[1]], 0.0, span, [1 + 0j, 1 + 0j], 1e-11)
    assert abs(res.y[0] - cmath.exp(lam * span)) < 1e-8 * max(1, abs(res.y[0]))
    # the product y0*y1 is conserved
    assert abs(res.y[0] * res.y[1] - 1) < 1e-8 * max(1, abs(res.y[0]))


# -- flows -----------------------------------------------------------------------

def _taylor_pi(h: Fraction, n_terms: int = 6) -> Fraction:
    """q(h) for q'' = 6 q^2 + 2t with q(0) = q'(0) = 0, from the series recursion."""
    a = [Fraction(0), Fraction(0)]
    while sum(1 for c in a if c) < n_terms and len(a) < 60:
        n = len(a) - 2
        conv = sum(a[i] * a[n - i] for i in range(n + 1))
        a.append((6 * conv + (2 if n == 1 else 0)) / ((n + 2) * (n + 1)))
    return sum(c * h ** k for k, c in enumerate(a))


def test_pi_matches_taylor_oracle():
    h = 1e-3
    traj = integrate_flow(get_family("pi"), None, [0, h], 0, 0, tol=1e-12)
    assert traj.status == "completed"
    t, q, p = traj.end
    assert abs(t - h) < 1e-18
    assert abs(q - float(_taylor_pi(Fraction(1, 1000)))) <= 1e-15


def test_pii_equilibrium():
    traj = integrate_flow(get_family("pii"), {"thinf": -1}, [1, 2], 0, 0, tol=1e-10)
    assert traj.status == "completed"
    assert all(abs(q) == 0 and abs(p) == 0 for _, q, p, _ in traj.samples)


def test_trajectory_samples_and_csv(tmp_path):
    b = FLOW_BENCHMARKS["piv"]
    traj = integrate_flow(get_family("piv"), b.theta, b.t_path, b.q0, b.p0, 1e-10)
    ts = [s[0].real for s in traj.samples]
    assert ts == sorted(ts) and len(set(ts)) == len(ts)
    path = tmp_path / "piv.csv"
    traj.write_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "t_re,t_im,q_re,q_im,p_re,p_im,H_re,H_im"
    assert len(lines) == len(traj.samples) + 1


def test_flow_through_t_zero_is_rejected():
    with pytest.raises(DomainViolation):
        integrate_flow(get_family("pv"), THETA, [-1, 1], 0.3, 0.1)


def test_flow_at_singular_q_is_rejected():
    with pytest.raises(DomainViolation):
        integrate_flow(get_family("pv"), THETA, [1, 1.5], 0, 0.1)


def test_blowup_is_detected():
    traj = integrate_flow(get_family("pi"), None, [0, 5], 2.0, 2.0, blowup=1e6)
    assert traj.status == "blowup_detected"
    assert abs(traj.samples[-1][1]) > 1e6 or abs(traj.samples[-1][2]) > 1e6


@pytest.mark.parametrize("fid", LAX_FAMILY_IDS)
def test_hamiltonian_drift(fid):
    b = FLOW_BENCHMARKS[fid]
    fam = get_family(fid)
    traj = integrate_flow(fam, b.theta, b.t_path, b.q0, b.p0, 1e-10)
    assert traj.status == "completed"
    report = hamiltonian_drift(fam, b.theta, traj, 1e-10)
    assert report.ok and report.max_deviation <= 1e3 * 1e-10


def test_drift_detects_a_mismatched_hamiltonian():
    fam = get_family("piv")
    b = FLOW_BENCHMARKS["piv"]
    traj = integrate_flow(fam, b.theta, b.t_path, b.q0, b.p0, 1e-10)
    model = CompiledFamily.build(fam, b.theta)
    H = model.H
    model.H = lambda t, q, p: H(t, q, p) + 1e-3 * q * q
    assert not hamiltonian_drift(fam, b.theta, traj, 1e-10, model=model).ok


# -- transport and monodromy -----------------------------------------------------

PIV = get_family("piv")
PIV_THETA = {"th0": 1 / 3, "thinf": 0.3}


def test_zero_length_path_returns_y0():
    Y0 = [2 + 0j, 1j, 0j, 0.5 + 0j]
    assert linear_transport(PIV, PIV_THETA, 1.0, 0.3, 0.2, [1 + 1j, 1 + 1j], Y0) == Y0


def test_contractible_loop_is_trivial():
    loop = square_loop(2 + 2j, 0.5)
    M = linear_transport(PIV, PIV_THETA, 1.0, 0.3 + 0.1j, 0.2, loop, IDENTITY, 1e-11)
    assert dist(M, IDENTITY) < 1e-8


def test_path_too_close():
    with pytest.raises(PathTooClose):
        linear_transport(PIV, PIV_THETA, 1.0, 0.3, 0.2, [-1, 1], IDENTITY)


@pytest.mark.parametrize("th0", [1 / 3, 1 / 5])
def test_piv_local_trace(th0):
    tr = local_trace(PIV, {"th0": th0, "thinf": 0.3}, 1.0, 0.3 + 0.1j, 0.2, 0, 1e-10)
    assert abs(tr - trace_formula(th0)) <= 1e-8
    assert trace_formula(1 / 3) == pytest.approx(1.0)


LOOP_FAMILIES = ["pv", "pv_deg", "piii_d6", "piii_d7", "piii_d8", "piv", "pii_fn"]


@pytest.mark.parametrize("fid", LOOP_FAMILIES)
def test_monodromy_is_unimodular(fid):
    tol = 1e-10
    fam = get_family(fid)
    rho = default_clearance(fam)
    M = linear_transport(fam, THETA, 1.0, -1.0, 0.3, square_loop(0, rho), IDENTITY, tol)
    assert abs(mat_det(M) - 1) <= 100 * tol
    # det drift per unit path length
    assert abs(mat_det(M) - 1) <= 10 * tol * (8 * rho)


@pytest.mark.parametrize("fid", LOOP_FAMILIES)
def test_det_error_is_bounded_by_conditioning(fid):
    # near an irregular point the entries can reach 1e5; then det = ad - bc
    # loses digits to cancellation and only a relative bound is meaningful
    tol = 1e-10
    fam = get_family(fid)
    M = linear_transport(fam, THETA, 1.0, 0.3 + 0.1j, 0.1, square_loop(0, default_clearance(fam)), IDENTITY, tol)
    scale = max(1.0, max(abs(x) for x in M)) ** 2
    assert abs(mat_det(M) - 1) <= 100 * tol + 1e4 * 2.2e-16 * scale


@pytest.mark.parametrize("fid", ["pv", "piii_d6", "piv"])
def test_monodromy_homotopy_invariance(fid):
    fam = get_family(fid)
    rho = default_clearance(fam)
    square = square_loop(0, rho)
    diamond = [rho, 1j * rho, -rho, -1j * rho, rho]
    wide = [rho, rho + 0.4j * rho, -0.6 * rho + 0.4j * rho, -0.6 * rho - 1.5j * rho, rho - 1.5j * rho, rho]
    Ms = [linear_transport(fam, THETA, 1.0, 0.3 + 0.1j, 0.1, L, IDENTITY, 1e-11) for L in (square, diamond, wide)]
    scale = max(1.0, max(abs(x) for x in Ms[0]))
    assert dist(Ms[0], Ms[1]) < 1e-8 * scale and dist(Ms[0], Ms[2]) < 1e-8 * scale


def test_product_relation():
    b = MONODROMY_BENCHMARKS["pv"]
    assert product_relation(get_family("pv"), b.theta, 1.0, b.q0, b.p0, 1e-10) < 1e-7


@pytest.mark.parametrize("fid", sorted(MONODROMY_BENCHMARKS))
def test_isomonodromy_benchmarks(fid):
    b = MONODROMY_BENCHMARKS[fid]
    fam = get_family(fid)
    assert abs(b.t_range[1] - b.t_range[0]) >= 0.5
    run = isomonodromy_invariance(fam, b.theta, b.t_range, b.q0, b.p0, b.point, b.n_samples, 1e-10)
    assert run.residual <= 1e-6
    assert run.det_deviation <= 100 * 1e-10 * 10
    neg = isomonodromy_invariance(fam, b.theta, b.t_range, b.q0, b.p0, b.point, b.n_samples, 1e-10, co_evolve=False)
    assert neg.residual >= 1e-2


def test_monodromy_run_json_is_stable():
    b = MONODROMY_BENCHMARKS["pv"]
    runs = [isomonodromy_invariance(get_family("pv"), b.theta, b.t_range, b.q0, b.p0, n_samples=3).dumps()
            for _ in range(2)]
    assert runs[0] == runs[1]


def _pv_residual(tol):
    b = MONODROMY_BENCHMARKS["pv"]
    return isomonodromy_invariance(get_family("pv"), b.theta, b.t_range, b.q0, b.p0, b.point, b.n_samples,
                                   tol).residual


def test_halving_tol_reduces_residual_fourfold():
    # Order-of-accuracy invariant as stated.  With per-step error control the
    # global error of a 5(4) pair scales like tol**(4/5), so halving tol gains
    # roughly 2x and this check is expected to fail.
    r1, r2 = _pv_residual(1e-10), _pv_residual(5e-11)
    assert r1 / r2 >= 4, f"residual {r1:.3e} -> {r2:.3e}, ratio {r1 / r2:.2f}"


def test_residual_tracks_tolerance():
    r = [_pv_residual(tol) for tol in (1e-8, 1e-8 / 16)]
    expected = 16 ** 0.8
    assert r[0] / r[1] >= 4
    assert r[0] / r[1] >= expected / 3
    assert all(x <= 10 * tol for x, tol in zip(r, (1e-8, 1e-8 / 16)))
    assert math.isfinite(r[1])
