"""Floating-point evaluators compiled from the exact family data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from ..exactalg import RatFunc
from ..families.registry import FamilySpec
from ..isomonodromy.lax import NoLaxData

ARGS = ("z", "p", "q", "t", "th0", "th1", "thinf")
THETA_NAMES = ("th0", "th1", "thinf")


class DomainViolation(ValueError):
    pass


def _compile(r: RatFunc) -> tuple[Callable, Callable]:
    return r.num.compile(ARGS), r.den.compile(ARGS)


def theta_values(theta: Mapping[str, complex] | None) -> tuple[complex, complex, complex]:
    theta = dict(theta or {})
    unknown = set(theta) - set(THETA_NAMES)
    if unknown:
        raise KeyError(f"unknown parameters {sorted(unknown)}")
    return tuple(complex(theta.get(n, 0)) for n in THETA_NAMES)


@dataclass
class CompiledFamily:
    """Fast complex evaluation of the flow, Hamiltonian, A_hat and B."""

    fam: FamilySpec
    theta: tuple[complex, complex, complex]

    def __post_init__(self):
        fam = self.fam
        if fam.qprime is None:
            raise NoLaxData(f"{fam.id} has no flow")
        self._qp = _compile(fam.qprime)
        self._pp = _compile(fam.pprime)
        self._H = _compile(fam.H)
        self._Ht = _compile(fam.H.diff("t"))
        self._A = [_compile(e) for e in fam.A_full.entries()]
        self._B = [_compile(e) for e in fam.B.entries()]
        # scale for denominator checks along the flow
        self.den_floor = 1e-12

    @classmethod
    def build(cls, fam: FamilySpec, theta: Mapping[str, complex] | None = None) -> "CompiledFamily":
        return cls(fam, theta_values(theta))

    def _args(self, z, p, q, t):
        return (z, p, q, t) + self.theta

    def _eval(self, pair, args, what: str):
        n, d = pair
        dv = d(*args)
        if abs(dv) < self.den_floor:
            raise DomainViolation(f"{what} is singular at q = {args[2]:.6g}, t = {args[3]:.6g}")
        return n(*args) / dv

    def flow(self, t: complex, q: complex, p: complex) -> tuple[complex, complex]:
        a = self._args(0j, p, q, t)
        return self._eval(self._qp, a, "flow"), self._eval(self._pp, a, "flow")

    def H(self, t, q, p) -> complex:
        return self._eval(self._H, self._args(0j, p, q, t), "Hamiltonian")

    def dH_dt_partial(self, t, q, p) -> complex:
        return self._eval(self._Ht, self._args(0j, p, q, t), "Hamiltonian")

    def A_hat(self, z, t, q, p) -> list[complex]:
        a = self._args(z, p, q, t)
        return [self._eval(e, a, "connection") for e in self._A]

    def B(self, z, t, q, p) -> list[complex]:
        a = self._args(z, p, q, t)
        return [self._eval(e, a, "deformation") for e in self._B]
