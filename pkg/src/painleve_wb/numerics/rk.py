"""Dormand-Prince 5(4) embedded pair with adaptive steps for complex systems.

The independent variable is a real parameter s; complex paths are handled by
the callers, which parameterize each straight segment by s in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

Vector = list  # list[complex]


class StepUnderflow(RuntimeError):
    pass


# Butcher tableau
C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)
E = tuple(b5 - b4 for b5, b4 in zip(B5, B4))


@dataclass
class RKResult:
    s: float
    y: Vector
    status: str  # completed / halted
    steps: int
    rejected: int


def _axpy(y: Sequence[complex], h: float, coeffs, ks) -> Vector:
    out = list(y)
    for a, k in zip(coeffs, ks):
        if a:
            ha = h * a
            for i, v in enumerate(k):
                out[i] += ha * v
    return out


def dopri5(
    f: Callable[[float, Vector], Vector],
    s0: float,
    s1: float,
    y0: Sequence[complex],
    tol: float,
    h0: float | None = None,
    on_step: Callable[[float, Vector], None] | None = None,
    stop: Callable[[float, Vector], bool] | None = None,
    max_steps: int = 2_000_000,
) -> RKResult:
    """Integrate y' = f(s, y) from s0 to s1 (s1 > s0).

    The local error estimate of every accepted step satisfies
    max_i |err_i| / (1 + |y_i|) <= tol.  ``stop`` may halt the run after an
    accepted step (status "halted").
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    span = s1 - s0
    y = list(complex(v) for v in y0)
    s = s0
    if span == 0:
        return RKResult(s, y, "completed", 0, 0)
    h = h0 if h0 is not None else min(span, 0.01 * span + 1e-3)
    hmin = 1e-14 * max(abs(s0), abs(s1), span)
    k1 = f(s, y)
    steps = rejected = 0
    while s < s1:
        if steps + rejected > max_steps:
            raise StepUnderflow("step budget exhausted")
        last = False
        if s + h >= s1:
            h = s1 - s
            last = True
        ks = [k1]
        for stage in range(1, 7):
            ks.append(f(s + C[stage] * h, _axpy(y, h, A[stage], ks)))
        y_new = _axpy(y, h, B5, ks)
        err = 0.0
        for i in range(len(y)):
            e = h * sum(E[j] * ks[j][i] for j in range(7))
            sc = 1.0 + max(abs(y[i]), abs(y_new[i]))
            err = max(err, abs(e) / sc)
        err /= tol
        if err != err:  # NaN
            err = float("inf")
        if err <= 1.0:
            s = s1 if last else s + h
            y = y_new
            k1 = ks[6]  # FSAL
            steps += 1
            if on_step is not None:
                on_step(s, y)
            if stop is not None and stop(s, y):
                return RKResult(s, y, "halted", steps, rejected)
            fac = 5.0 if err == 0 else min(5.0, max(0.2, 0.9 * err ** -0.2))
        else:
            rejected += 1
            fac = max(0.1, 0.9 * err ** -0.2) if err != float("inf") else 0.1
        h *= fac
        if s < s1 and h < hmin:
            raise StepUnderflow(f"step size {h:.3e} below minimum at s = {s:.6g}")
    return RKResult(s, y, "completed", steps, rejected)
