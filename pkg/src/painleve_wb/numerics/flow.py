"""Integration of the Painlevé Hamiltonian systems along polygonal t-paths."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..families.registry import FamilySpec
from .model import CompiledFamily, DomainViolation
from .rk import StepUnderflow, dopri5


@dataclass
class Trajectory:
    family: str
    theta: dict
    samples: list[tuple[complex, complex, complex, complex]] = field(default_factory=list)
    status: str = "completed"  # completed / blowup_detected / step_underflow

    def csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t_re", "t_im", "q_re", "q_im", "p_re", "p_im", "H_re", "H_im"])
        for row in self.samples:
            w.writerow([repr(x) for v in row for x in (v.real, v.imag)])
        return buf.getvalue()

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write(self.csv_text())

    @property
    def end(self) -> tuple[complex, complex, complex]:
        t, q, p, _ = self.samples[-1]
        return t, q, p


def _segments(t_path: Sequence[complex]):
    pts = [complex(x) for x in t_path]
    if len(pts) < 2:
        raise ValueError("t_path needs at least two vertices")
    return list(zip(pts, pts[1:]))


def _segment_distance(a: complex, b: complex, x: complex) -> float:
    d = b - a
    if d == 0:
        return abs(x - a)
    s = ((x - a) * d.conjugate()).real / abs(d) ** 2
    s = min(1.0, max(0.0, s))
    return abs(a + s * d - x)


def _has_t_pole(fam: FamilySpec) -> bool:
    return any(not r.den.free_of("t") for r in (fam.qprime, fam.pprime))


def integrate_flow(
    fam: FamilySpec,
    theta: Mapping[str, complex] | None,
    t_path: Sequence[complex],
    q0: complex,
    p0: complex,
    tol: float = 1e-10,
    blowup: float = 1e8,
    model: CompiledFamily | None = None,
) -> Trajectory:
    """Integrate (q', p') along the polygonal path, recording every accepted step.

    The run halts cleanly with status ``blowup_detected`` when |q| or |p|
    exceeds ``blowup`` (a movable pole is near) and ``step_underflow`` when the
    step size collapses.
    """
    model = model or CompiledFamily.build(fam, theta)
    segs = _segments(t_path)
    if _has_t_pole(fam) and any(_segment_distance(a, b, 0j) < 1e-12 for a, b in segs):
        raise DomainViolation("t-path passes through t = 0 where the flow is singular")
    traj = Trajectory(fam.id, {k: complex(v) for k, v in dict(theta or {}).items()})
    q, p = complex(q0), complex(p0)
    t = segs[0][0]
    traj.samples.append((t, q, p, model.H(t, q, p)))

    for a, b in segs:
        d = b - a

        def rhs(s, y, a=a, d=d):
            qp, pp = model.flow(a + s * d, y[0], y[1])
            return [d * qp, d * pp]

        def record(s, y, a=a, d=d):
            tt = a + s * d
            traj.samples.append((tt, y[0], y[1], model.H(tt, y[0], y[1])))

        def big(s, y):
            return abs(y[0]) > blowup or abs(y[1]) > blowup

        try:
            res = dopri5(rhs, 0.0, 1.0, [q, p], tol, on_step=record, stop=big)
        except StepUnderflow:
            traj.status = "step_underflow"
            return traj
        if res.status == "halted":
            traj.status = "blowup_detected"
            return traj
        q, p = res.y
    return traj


def propagate(model: CompiledFamily, t0: complex, t1: complex, q: complex, p: complex, tol: float):
    """State (q, p) at t1 starting from (q, p) at t0 along the straight segment."""
    d = t1 - t0
    if d == 0:
        return q, p

    def rhs(s, y):
        qp, pp = model.flow(t0 + s * d, y[0], y[1])
        return [d * qp, d * pp]

    res = dopri5(rhs, 0.0, 1.0, [q, p], tol)
    return res.y[0], res.y[1]


@dataclass
class DriftReport:
    family: str
    max_deviation: float
    checked: int
    bound: float

    @property
    def ok(self) -> bool:
        return self.max_deviation <= self.bound


def hamiltonian_drift(
    fam: FamilySpec,
    theta: Mapping[str, complex] | None,
    traj: Trajectory,
    tol: float,
    delta: float = 3e-4,
    max_points: int = 40,
    model: CompiledFamily | None = None,
) -> DriftReport:
    """Compare a finite-difference dH/dt with the symbolic partial derivative.

    dH/dt at a sample is a Richardson-extrapolated central difference with
    steps delta and delta/2 taken along the local path direction, using
    states obtained by short integrations from the sample.
    """
    model = model or CompiledFamily.build(fam, theta)
    pts = traj.samples
    if len(pts) > max_points:
        stride = (len(pts) - 1) / (max_points - 1)
        pts = [pts[round(i * stride)] for i in range(max_points)]
    worst = 0.0
    full = traj.samples
    for i, (t, q, p, _) in enumerate(pts):
        j = full.index(pts[i])
        nb = full[j + 1][0] if j + 1 < len(full) else full[j - 1][0]
        direction = (nb - t) / abs(nb - t) if nb != t else 1.0
        if j + 1 >= len(full):
            direction = -direction

        def Hat(h):
            tt = t + h * direction
            qq, pp = propagate(model, t, tt, q, p, tol * 1e-2)
            return model.H(tt, qq, pp)

        hs = {h: Hat(h) for h in (delta, -delta, delta / 2, -delta / 2)}
        d1 = (hs[delta] - hs[-delta]) / (2 * delta)
        d2 = (hs[delta / 2] - hs[-delta / 2]) / delta
        dH = (4 * d2 - d1) / 3 / direction
        worst = max(worst, abs(dH - model.dH_dt_partial(t, q, p)))
    return DriftReport(fam.id, worst, len(pts), 1e3 * tol)
