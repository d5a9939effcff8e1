"""Linear transport in the z-plane, loop monodromy and the isomonodromy check.

Conventions: the fundamental solution satisfies dY/dz = -A_hat Y and
dY/dt = -B Y, which is the pair compatible with the zero-curvature identity
used by the exact verifier.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..families.registry import FamilySpec
from .flow import _segment_distance
from .model import CompiledFamily
from .rk import dopri5

Mat = list  # 2x2 as flat [a, b, c, d]


class PathTooClose(ValueError):
    pass


class TrajectoryBlowup(RuntimeError):
    pass


def mat_mul(X: Mat, Y: Mat) -> Mat:
    a, b, c, d = X
    e, f, g, h = Y
    return [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h]


def mat_inv(X: Mat) -> Mat:
    a, b, c, d = X
    det = a * d - b * c
    return [d / det, -b / det, -c / det, a / det]


def mat_det(X: Mat) -> complex:
    return X[0] * X[3] - X[1] * X[2]


IDENTITY = [1 + 0j, 0j, 0j, 1 + 0j]


def default_clearance(fam: FamilySpec) -> float:
    """Half the least distance between finite singular points, capped at 0.25."""
    pts = [complex(x) for x in fam.singular_points]
    dists = [abs(a - b) for i, a in enumerate(pts) for b in pts[i + 1:]]
    return min([0.25] + [d / 2 for d in dists])


def square_loop(center: complex, rho: float) -> list[complex]:
    """Counterclockwise square of half-width rho, starting and ending at center + rho."""
    c = complex(center)
    return [c + rho, c + rho + 1j * rho, c - rho + 1j * rho, c - rho - 1j * rho, c + rho - 1j * rho, c + rho]


def check_clearance(fam: FamilySpec, z_path: Sequence[complex], eps: float) -> None:
    for a, b in zip(z_path, z_path[1:]):
        for s in fam.singular_points:
            if _segment_distance(complex(a), complex(b), complex(s)) < eps:
                raise PathTooClose(f"path segment {a}->{b} passes within {eps} of z = {s}")


def linear_transport(
    fam: FamilySpec,
    theta: Mapping[str, complex] | None,
    t: complex,
    q: complex,
    p: complex,
    z_path: Sequence[complex],
    Y0: Mat = IDENTITY,
    tol: float = 1e-10,
    eps: float = 1e-2,
    model: CompiledFamily | None = None,
) -> Mat:
    """Continue Y along the polygonal z-path for frozen (t, q, p)."""
    model = model or CompiledFamily.build(fam, theta)
    z_path = [complex(x) for x in z_path]
    check_clearance(fam, z_path, eps)
    Y = [complex(x) for x in Y0]
    for a, b in zip(z_path, z_path[1:]):
        d = b - a
        if d == 0:
            continue

        def rhs(s, y, a=a, d=d):
            A = model.A_hat(a + s * d, t, q, p)
            AY = mat_mul(A, y)
            return [-d * v for v in AY]

        Y = dopri5(rhs, 0.0, 1.0, Y, tol).y
    return Y


def loop_monodromy(
    fam: FamilySpec,
    theta,
    t: complex,
    q: complex,
    p: complex,
    loop: Sequence[complex],
    frame: Mat = IDENTITY,
    tol: float = 1e-10,
    model: CompiledFamily | None = None,
) -> Mat:
    """Monodromy of the loop in the basis given by ``frame`` at the base point."""
    T = linear_transport(fam, theta, t, q, p, loop, IDENTITY, tol, model=model)
    return mat_mul(mat_inv(frame), mat_mul(T, frame))


def local_trace(fam: FamilySpec, theta, t, q, p, point: complex = 0, tol: float = 1e-10, rho: float | None = None) -> complex:
    rho = default_clearance(fam) if rho is None else rho
    M = linear_transport(fam, theta, t, q, p, square_loop(point, rho), IDENTITY, tol)
    return M[0] + M[3]


@dataclass
class MonodromyRun:
    family: str
    theta: dict
    point: complex
    loop: list[complex]
    t_values: list[complex] = field(default_factory=list)
    states: list[tuple[complex, complex]] = field(default_factory=list)
    matrices: list[Mat] = field(default_factory=list)
    co_evolved: bool = True
    tol: float = 1e-10

    @property
    def base_point(self) -> complex:
        return self.loop[0]

    @property
    def residual(self) -> float:
        M0 = self.matrices[0]
        return max((abs(a - b) for M in self.matrices for a, b in zip(M, M0)), default=0.0)

    @property
    def det_deviation(self) -> float:
        return max((abs(mat_det(M) - 1) for M in self.matrices), default=0.0)

    def to_json(self) -> dict:
        c = lambda v: [v.real, v.imag]  # noqa: E731
        return {
            "family": self.family,
            "theta": {k: c(v) for k, v in sorted(self.theta.items())},
            "point": c(self.point),
            "loop": [c(v) for v in self.loop],
            "co_evolved": self.co_evolved,
            "tol": self.tol,
            "samples": [
                {"t": c(t), "q": c(s[0]), "p": c(s[1]), "monodromy": [c(v) for v in M]}
                for t, s, M in zip(self.t_values, self.states, self.matrices)
            ],
            "residual": self.residual,
            "det_deviation": self.det_deviation,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def isomonodromy_invariance(
    fam: FamilySpec,
    theta: Mapping[str, complex] | None,
    t_range: tuple[complex, complex],
    q0: complex,
    p0: complex,
    point: complex = 0,
    n_samples: int = 6,
    tol: float = 1e-10,
    co_evolve: bool = True,
    rho: float | None = None,
    blowup: float = 1e6,
    max_steps: int = 20_000,
) -> MonodromyRun:
    """Monodromy around ``point`` at several t along a Painlevé trajectory.

    The frame Y(z0, t) at the base point starts at the identity and is carried
    by dY/dt = -B(z0, t) Y together with (q, p).  With ``co_evolve=False`` the
    frame stays the identity, a negative control that should not be invariant.
    """
    model = CompiledFamily.build(fam, theta)
    rho = default_clearance(fam) if rho is None else rho
    loop = square_loop(point, rho)
    z0 = loop[0]
    t0, t1 = complex(t_range[0]), complex(t_range[1])
    run = MonodromyRun(fam.id, {k: complex(v) for k, v in dict(theta or {}).items()}, complex(point), loop,
                       co_evolved=co_evolve, tol=tol)
    ts = [t0 + (t1 - t0) * k / (n_samples - 1) for k in range(n_samples)]
    state = [complex(q0), complex(p0)] + list(IDENTITY)

    def rhs_factory(ta, d):
        def rhs(s, y):
            t = ta + s * d
            qp, pp = model.flow(t, y[0], y[1])
            out = [d * qp, d * pp]
            if co_evolve:
                BY = mat_mul(model.B(z0, t, y[0], y[1]), y[2:])
                out += [-d * v for v in BY]
            else:
                out += [0j, 0j, 0j, 0j]
            return out
        return rhs

    def big(s, y):
        return abs(y[0]) > blowup or abs(y[1]) > blowup

    for k, t in enumerate(ts):
        if k:
            d = t - ts[k - 1]
            res = dopri5(rhs_factory(ts[k - 1], d), 0.0, 1.0, state, tol, stop=big, max_steps=max_steps)
            if res.status == "halted":
                raise TrajectoryBlowup(f"|q| or |p| exceeded {blowup:g} before t = {t}")
            state = res.y
        q, p, frame = state[0], state[1], state[2:]
        M = loop_monodromy(fam, theta, t, q, p, loop, frame, tol, model=model)
        run.t_values.append(t)
        run.states.append((q, p))
        run.matrices.append(M)
    return run


def trace_formula(theta0: float) -> float:
    return 2 * math.cos(math.pi * theta0)


def product_relation(fam: FamilySpec, theta, t, q, p, tol: float = 1e-10) -> float:
    """Entrywise gap between the loop around 0 and 1 and the product of the two loops.

    All loops start at b = 1/2 - i/2.  The large loop is homotopic to the loop
    around 1 followed by the loop around 0, so its transport is T0 * T1.
    """
    if tuple(complex(x) for x in fam.singular_points) != (0j, 1 + 0j):
        raise ValueError("product relation needs finite singular points 0 and 1")
    b = 0.5 - 0.5j
    loop0 = [b, 0.5 + 0.5j, -0.5 + 0.5j, -0.5 - 0.5j, b]
    loop1 = [b, 1.5 - 0.5j, 1.5 + 0.5j, 0.5 + 0.5j, b]
    big = [b, 1.5 - 0.5j, 1.5 + 0.5j, -0.5 + 0.5j, -0.5 - 0.5j, b]
    model = CompiledFamily.build(fam, theta)
    T0, T1, Tb = (linear_transport(fam, theta, t, q, p, L, IDENTITY, tol, model=model) for L in (loop0, loop1, big))
    return max(abs(x - y) for x, y in zip(Tb, mat_mul(T0, T1)))
