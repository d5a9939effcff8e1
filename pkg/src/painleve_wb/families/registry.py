"""Exact data of the ten rank-2 isomonodromic families.

Each connection is stored as ``d/dz + A(z)/w(z)`` where ``A`` is a polynomial
matrix in ``z`` (its entries may have denominators free of ``z``) and ``w`` is
the derivation weight: 1, z, z**2 or z*(z-1).  The plain d/dz coefficient is
``A_full = A / w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactalg import LAX, Matrix2, Poly, RatFunc

FAMILY_IDS = ("pvi", "pv", "pv_deg", "piii_d6", "piii_d7", "piii_d8", "piv", "pii_fn", "pii", "pi")
LAX_FAMILY_IDS = FAMILY_IDS[1:]

DISPLAY_NAMES = {
    "pvi": "PVI",
    "pv": "PV",
    "pv_deg": "PVdeg",
    "piii_d6": "PIII(D6)",
    "piii_d7": "PIII(D7)",
    "piii_d8": "PIII(D8)",
    "piv": "PIV",
    "pii_fn": "PIIFN",
    "pii": "PII",
    "pi": "PI",
}


class UnknownFamily(KeyError):
    pass


@dataclass(frozen=True)
class ExponentDescriptor:
    """Generalized local exponent ``±(sum of coeff * u**e)`` at a point.

    ``u`` is ``z`` at infinity and at finite points the local coordinate, so
    a term ``z**(-1/2)`` at 0 has exponent -1/2.  The irregular degree is the
    largest exponent measured towards the singularity.
    """

    point: str
    text: str
    terms: tuple[tuple[str, Fraction], ...]

    def irregular_degree(self) -> Fraction:
        sign = 1 if self.point == "inf" else -1
        return max((sign * e for _, e in self.terms), default=Fraction(0))


@dataclass(frozen=True)
class KatzEntry:
    point: str  # "0", "1", "inf", "t"
    r: Fraction | None  # None marks an absent point


@dataclass
class FamilySpec:
    id: str
    name: str
    dynkin: str
    katz: tuple[KatzEntry, ...]
    dimP: int
    singular_points: tuple[Fraction, ...] = ()
    weight: Poly | None = None
    A: Matrix2 | None = None
    B: Matrix2 | None = None
    B_powers: tuple[int, ...] = ()
    F: Poly | None = None
    qprime: RatFunc | None = None
    pprime: RatFunc | None = None
    second_order: RatFunc | None = None
    H: RatFunc | None = None
    exponents: tuple[ExponentDescriptor, ...] = ()
    good_cyclic: int | None = None
    # corrected values where a printed formula fails its own consistency check
    errata: dict = field(default_factory=dict)

    @property
    def has_lax(self) -> bool:
        return self.A is not None

    @property
    def A_full(self) -> Matrix2:
        w = RatFunc(self.weight)
        return self.A.map(lambda x: x / w)

    @property
    def flow(self) -> tuple[RatFunc, RatFunc]:
        return (self.qprime, self.pprime)

    def katz_signature(self) -> tuple[tuple[str, Fraction], ...]:
        return tuple((k.point, k.r) for k in self.katz if k.r is not None)

    def katz_row(self) -> tuple:
        """(r(0), r(1), r(inf), r(t)) with None for absent points."""
        d = {k.point: k.r for k in self.katz}
        return tuple(d.get(pt) for pt in ("0", "1", "inf", "t"))


# -- symbols -------------------------------------------------------------------

def _sym(name: str) -> RatFunc:
    return RatFunc.var(LAX, name)


z, p, q, t = (_sym(n) for n in ("z", "p", "q", "t"))
th0, th1, thinf, dq = (_sym(n) for n in ("th0", "th1", "thinf", "dq"))
half = Fraction(1, 2)
quarter = Fraction(1, 4)


def _M(a, b, c, d) -> Matrix2:
    return Matrix2(a, b, c, d, ring=LAX)


def _diag(x) -> Matrix2:
    return _M(x, 0, 0, -x)


def _katz(**kw) -> tuple[KatzEntry, ...]:
    keys = {"0": "p0", "1": "p1", "inf": "oo", "t": "t"}
    out = []
    for pt, key in keys.items():
        r = kw.get(key)
        out.append(KatzEntry(pt, None if r is None else Fraction(r)))
    return tuple(out)


def _exp(point, text, *terms) -> ExponentDescriptor:
    return ExponentDescriptor(point, text, tuple((c, Fraction(e)) for c, e in terms))


def _poly(r: RatFunc) -> Poly:
    assert r.is_polynomial()
    return r.num * (1 / r.den.constant_value())


# -- the families --------------------------------------------------------------

def _pvi() -> FamilySpec:
    return FamilySpec(
        id="pvi", name="PVI", dynkin="D4~",
        katz=_katz(p0=0, p1=0, oo=0, t=0), dimP=4,
        exponents=tuple(_exp(pt, "±θ/2", ("θ/2", 0)) for pt in ("0", "1", "inf", "t")),
    )


def _pv() -> FamilySpec:
    X0 = p + q * (q * t - t + thinf) / 2
    A0 = _M(-X0, (q - 1) * (X0**2 - th0**2 / 4) / q, -q / (q - 1), X0)
    X1 = p + (q - 1) * (q * t + thinf) / 2
    A1 = _M(X1, th1**2 / 4 - X1**2, 1, -X1)
    Ainf = _diag(-t / 2)
    A = Ainf * (z * (z - 1)) + A0 * (z - 1) + A1 * z
    b11 = -p / (q - 1) - (q - 1) * t / 2 - thinf / 2
    b12 = -((p + (q - 1) * q * t / 2) ** 2 - th1**2 / 4
            + (q - 1) * (th0**2 / 4 - th1**2 / 4 - q * thinf**2 / 4)) / q
    B = _diag(-half) * z + _M(b11, b12, -1 / (q - 1), -b11) * (1 / t)
    qp = 2 * p / t
    pp = ((2 * q - 1) * p**2 / ((q - 1) * q * t)
          + (th0**2 * (q - 1) ** 2 - th1**2 * q**2) / (4 * q * (q - 1) * t)
          + (q - 1) * q * (2 * q * t - t + 2 * thinf - 2) / 4)
    head = (2 * q - 1) * dq**2 / (2 * (q - 1) * q) - dq / t + (q - 1) * q * (2 * q * t - t + 2 * thinf - 2) / (2 * t)
    printed = head + th0**2 / (2 * q * t**2) + th1**2 / (2 * (q - 1) * t**2)
    corrected = head + th0**2 * (q - 1) / (2 * q * t**2) - th1**2 * q / (2 * (q - 1) * t**2)
    H = (-p**2 / ((q - 1) * q * t) - th0**2 / (4 * q * t) + th1**2 / (4 * (q - 1) * t)
         + q * (q * t - t + 2 * thinf - 2) / 4)
    return FamilySpec(
        id="pv", name="PV", dynkin="D5~",
        katz=_katz(p0=0, p1=0, oo=1), dimP=3,
        singular_points=(Fraction(0), Fraction(1)),
        weight=_poly(z * (z - 1)), A=A, B=B, B_powers=(1, 0),
        F=_poly(q * (q - 1)), qprime=qp, pprime=pp, second_order=printed, H=H,
        exponents=(
            _exp("0", "±θ0/2", ("θ0/2", 0)),
            _exp("1", "±θ1/2", ("θ1/2", 0)),
            _exp("inf", "±(t/2·z + θ∞/2)", ("t/2", 1), ("θ∞/2", 0)),
        ),
        good_cyclic=6,
        errata={"second_order": corrected},
    )


def _pv_deg() -> FamilySpec:
    A0 = _M(-p, (th0**2 - 4 * p**2) / (4 * q), q, p)
    A1 = _M(p, (4 * p**2 - th1**2) / (4 * (q - 1)), 1 - q, -p)
    Ainf = _M(0, t**2, 0, 0)
    A = Ainf * (z * (z - 1)) + A0 * (z - 1) + A1 * z
    B = _M(0, 2 * t, 0, 0) * z + _M(
        0,
        2 * p**2 / ((q - 1) * q * t) + th0**2 / (2 * q * t) - th1**2 / (2 * (q - 1) * t) + 2 * (q - 1) * t,
        2 / t,
        0,
    )
    qp = 4 * p / t
    pp = (2 * (2 * q - 1) * p**2 / ((q - 1) * q * t) + (q - 1) * th0**2 / (2 * q * t)
          - q * th1**2 / (2 * (q - 1) * t) + 2 * q * (q - 1) * t)
    so = ((2 * q - 1) * dq**2 / (2 * (q - 1) * q) - dq / t + 2 * (q - 1) * th0**2 / (q * t**2)
          - 2 * q * th1**2 / ((q - 1) * t**2) + 8 * (q - 1) * q)
    H = -2 * p**2 / ((q - 1) * q * t) - th0**2 / (2 * q * t) + th1**2 / (2 * (q - 1) * t) + 2 * q * t
    return FamilySpec(
        id="pv_deg", name="PVdeg", dynkin="D6~",
        katz=_katz(p0=0, p1=0, oo=half), dimP=2,
        singular_points=(Fraction(0), Fraction(1)),
        weight=_poly(z * (z - 1)), A=A, B=B, B_powers=(1, 0),
        F=_poly(q * (q - 1)), qprime=qp, pprime=pp, second_order=so, H=H,
        exponents=(
            _exp("0", "±θ0/2", ("θ0/2", 0)),
            _exp("1", "±θ1/2", ("θ1/2", 0)),
            _exp("inf", "±t·z^(1/2)", ("t", half)),
        ),
        good_cyclic=5,
    )


def _piii_d6() -> FamilySpec:
    a0 = (-t * q**2 - thinf * q + 2 * p) / 2
    A0 = _M(a0, (t**2 * q**4 + 2 * t * thinf * q**3 + thinf**2 * q**2 - 4 * p * t * q**2
                 - 4 * p * thinf * q + 4 * p**2 - t**2) / (4 * q), -q, -a0)
    a1_12 = (t**2 * q**4 - thinf**2 * q**2 - 4 * p * t * q**2 - 2 * t * th0 * q + 4 * p**2 - t**2) / (4 * q**2)
    A1 = _M(thinf / 2, a1_12, 1, -thinf / 2)
    A2 = _diag(t / 2)
    A = A0 + A1 * z + A2 * z**2
    b1 = q + thinf / (2 * t)
    B1 = _M(b1, a1_12 / t, 1 / t, -b1)
    b2 = (t * q**2 + thinf * q - 2 * p) / (2 * t)
    B2 = _M(b2, (-4 * p**2 + (1 - q**4) * t**2 + 2 * q**2 * t * (2 * p - q * thinf)
                 + q * thinf * (4 * p - q * thinf)) / (4 * q * t), q / t, -b2)
    B = _diag(half) * z + B1 + B2 * (1 / z)
    qp = (4 * p + q) / t
    pp = 4 * p**2 / (q * t) + p / t + t * q**3 + q**2 - t / q - th0 + q**2 * thinf
    so = dq**2 / q - dq / t - 4 * th0 / t + 4 * (thinf + 1) * q**2 / t + 4 * q**3 - 4 / q
    H = -2 * p**2 / (q**2 * t) - p / (q * t) + q + q**2 * t / 2 + t / (2 * q**2) + th0 / q + q * thinf
    return FamilySpec(
        id="piii_d6", name="PIII(D6)", dynkin="D6~",
        katz=_katz(p0=1, oo=1), dimP=2,
        singular_points=(Fraction(0),),
        weight=_poly(z**2), A=A, B=B, B_powers=(1, 0, -1),
        F=_poly(q**2), qprime=qp, pprime=pp, second_order=so, H=H,
        exponents=(
            _exp("0", "±(t/2·z^-1 + θ0/2)", ("t/2", -1), ("θ0/2", 0)),
            _exp("inf", "±(t/2·z + θ∞/2)", ("t/2", 1), ("θ∞/2", 0)),
        ),
        good_cyclic=4,
    )


def _piii_d7() -> FamilySpec:
    a0 = (-t * q**2 - thinf * q + 2 * p) / 2
    A0 = _M(a0, (t * q**2 + thinf * q - 2 * p) ** 2 / (4 * q), -q, -a0)
    a1_12 = (t**2 * q**4 - thinf**2 * q**2 - 4 * p * t * q**2 - 4 * q + 4 * p**2) / (4 * q**2)
    A1 = _M(thinf / 2, a1_12, 1, -thinf / 2)
    A2 = _diag(t / 2)
    A = A0 + A1 * z + A2 * z**2
    b1 = q / 2 + thinf / (2 * t)
    B = _diag(half) * z + _M(b1, a1_12 / t, 1 / t, -b1)
    qp = 2 * p / t
    pp = 2 * p**2 / (t * q) + t * q**3 / 2 + (thinf + 1) * q**2 / 2 - 1 / t
    so = dq**2 / q - dq / t + (thinf + 1) * q**2 / t + q**3 - 2 / t**2
    H = -p**2 / (q**2 * t) + q**2 * t / 4 + q * (thinf + 1) / 2 + 1 / (q * t)
    return FamilySpec(
        id="piii_d7", name="PIII(D7)", dynkin="D7~",
        katz=_katz(p0=half, oo=1), dimP=1,
        singular_points=(Fraction(0),),
        weight=_poly(z**2), A=A, B=B, B_powers=(1, 0),
        F=_poly(q**2), qprime=qp, pprime=pp, second_order=so, H=H,
        exponents=(
            _exp("0", "±z^(-1/2)", ("1", -half)),
            _exp("inf", "±(t/2·z + θ∞/2)", ("t/2", 1), ("θ∞/2", 0)),
        ),
        good_cyclic=3,
    )


def _piii_d8() -> FamilySpec:
    A = _M(p * z / q, z * (q * z - t) / q, z - q, -p * z / q)
    B = _M(0, 1 / q, 0, 0) + _M(0, 0, q / t, 0) * (1 / z)
    qp = (2 * p + q) / t
    pp = 2 * p**2 / (q * t) + p / t + q**2 / t - 1
    so = dq**2 / q - dq / t + 2 * q**2 / t**2 - 2 / t
    H = -p**2 / (q**2 * t) - p / (q * t) + 1 / q + q / t
    return FamilySpec(
        id="piii_d8", name="PIII(D8)", dynkin="D8~",
        katz=_katz(p0=half, oo=half), dimP=0,
        singular_points=(Fraction(0),),
        weight=_poly(z**2), A=A, B=B, B_powers=(0, -1),
        F=_poly(q**2), qprime=qp, pprime=pp, second_order=so, H=H,
        exponents=(
            _exp("0", "±√t·z^(-1/2)", ("√t", -half)),
            _exp("inf", "±z^(1/2)", ("1", half)),
        ),
        good_cyclic=2,
    )


def _piv() -> FamilySpec:
    a0 = -q**2 - t * q / 2 + p
    A0 = _M(a0, (q**4 + t * q**3 + t**2 * q**2 / 4 - 2 * p * q**2 - t * p * q + p**2 - th0**2 / 4) / q, -q, -a0)
    A1 = _M(t / 2, 2 * q**2 + t * q - 2 * p + thinf, 1, -t / 2)
    A2 = _diag(RatFunc.const(LAX, 1))
    A = A0 + A1 * z + A2 * z**2
    b = q / 2 + t / 4
    B = _diag(half) * z + _M(b, q**2 + t * q / 2 - p + thinf / 2, half, -b)
    qp = p
    pp = 3 * q**3 / 2 + t * q**2 + (t**2 + 4 * thinf + 4) * q / 8 + (4 * p**2 - th0**2) / (8 * q)
    so = dq**2 / (2 * q) + 3 * q**3 / 2 + t * q**2 + (t**2 + 4 * thinf + 4) * q / 8 - th0**2 / (8 * q)
    H = -p**2 / (2 * q) + q**3 / 2 + t * q**2 / 2 + (t**2 + 4 * thinf + 4) * q / 8 + th0**2 / (8 * q)
    return FamilySpec(
        id="piv", name="PIV", dynkin="E6~",
        katz=_katz(p0=0, oo=2), dimP=2,
        singular_points=(Fraction(0),),
        weight=_poly(z), A=A, B=B, B_powers=(1, 0),
        F=_poly(q), qprime=qp, pprime=pp, second_order=so, H=H,
        exponents=(
            _exp("0", "±θ0/2", ("θ0/2", 0)),
            _exp("inf", "±(z^2 + t/2·z + θ∞/2)", ("1", 2), ("t/2", 1), ("θ∞/2", 0)),
        ),
        good_cyclic=4,
    )


def _pii_fn() -> FamilySpec:
    A0 = _M(p, (p**2 - th0**2 / 4) / q, -q, -p)
    A1 = _M(0, q + t, 1, 0)
    A2 = _M(0, 1, 0, 0)
    A = A0 + A1 * z + A2 * z**2
    B = _M(0, 2 * q + t, 1, 0) + _M(0, 1, 0, 0) * z
    qp = 2 * p
    pp = 2 * q**2 + t * q + (p**2 - th0**2 / 4) / q
    so = dq**2 / (2 * q) + 4 * q**2 + 2 * t * q - th0**2 / (2 * q)
    H = -(p**2 - th0**2 / 4) / q + q**2 + t * q
    return FamilySpec(
        id="pii_fn", name="PIIFN", dynkin="E7~",
        katz=_katz(p0=0, oo=Fraction(3, 2)), dimP=1,
        singular_points=(Fraction(0),),
        weight=_poly(z), A=A, B=B, B_powers=(0, 1),
        F=_poly(q), qprime=qp, pprime=pp, second_order=so, H=H,
        exponents=(
            _exp("0", "±θ0/2", ("θ0/2", 0)),
            _exp("inf", "±(z^(3/2) + t/2·z^(1/2))", ("1", Fraction(3, 2)), ("t/2", half)),
        ),
        good_cyclic=3,
    )


def _pii() -> FamilySpec:
    A0 = _M(p - q**2, 2 * q**3 - 2 * p * q + t * q + thinf, -q, q**2 - p)
    A1 = _M(0, 2 * q**2 - 2 * p + t, 1, 0)
    A2 = _diag(RatFunc.const(LAX, 1))
    A = A0 + A1 * z + A2 * z**2
    B = _M(q / 2, q**2 - p + t / 2, half, -q / 2) + _diag(half) * z
    qp = p
    pp = 2 * q**3 + t * q + (thinf + 1) / 2
    so = 2 * q**3 + q * t + (thinf + 1) / 2
    H = (-p**2 + q**4 + t * q**2 + (thinf + 1) * q) / 2
    return FamilySpec(
        id="pii", name="PII", dynkin="E7~",
        katz=_katz(oo=3), dimP=1,
        weight=LAX.one(), A=A, B=B, B_powers=(0, 1),
        F=LAX.one(), qprime=qp, pprime=pp, second_order=so, H=H,
        exponents=(_exp("inf", "±(z^3 + t/2·z + θ∞/2)", ("1", 3), ("t/2", 1), ("θ∞/2", 0)),),
        good_cyclic=2,
    )


def _pi() -> FamilySpec:
    A = _M(p, q**2 + z * q + z**2 + t, z - q, -p)
    B = _M(0, 2 * q, 1, 0) + _M(0, 1, 0, 0) * z
    return FamilySpec(
        id="pi", name="PI", dynkin="E8~",
        katz=_katz(oo=Fraction(5, 2)), dimP=0,
        weight=LAX.one(), A=A, B=B, B_powers=(0, 1),
        F=LAX.one(), qprime=2 * p, pprime=3 * q**2 + t, second_order=6 * q**2 + 2 * t,
        H=-p**2 + q**3 + t * q,
        exponents=(_exp("inf", "±(z^(5/2) + t/2·z^(1/2))", ("1", Fraction(5, 2)), ("t/2", half)),),
        good_cyclic=1,
    )


_BUILDERS = {
    "pvi": _pvi, "pv": _pv, "pv_deg": _pv_deg, "piii_d6": _piii_d6, "piii_d7": _piii_d7,
    "piii_d8": _piii_d8, "piv": _piv, "pii_fn": _pii_fn, "pii": _pii, "pi": _pi,
}
_CACHE: dict[str, FamilySpec] = {}


def get_family(fam_id: str) -> FamilySpec:
    if fam_id not in _BUILDERS:
        raise UnknownFamily(fam_id)
    if fam_id not in _CACHE:
        _CACHE[fam_id] = _BUILDERS[fam_id]()
    return _CACHE[fam_id]


def all_families() -> list[FamilySpec]:
    return [get_family(f) for f in FAMILY_IDS]


def lax_families() -> list[FamilySpec]:
    return [get_family(f) for f in LAX_FAMILY_IDS]


def pole_order_bound(r: Fraction) -> int:
    """Lower bound for the order of B at a point with Katz invariant r.

    Uses the weaker bound -r for integral r (top coefficient allowed to
    depend on t) and -m-1 for r = m + 1/2.
    """
    if r == 0:
        return 0
    if r.denominator == 1:
        return -int(r)
    return -(int(r - half)) - 1


def template_respects_bounds(fam: FamilySpec) -> bool:
    kmin, kmax = min(fam.B_powers), max(fam.B_powers)
    for entry in fam.katz:
        if entry.r is None:
            continue
        if entry.point == "inf":
            if -kmax < pole_order_bound(entry.r):
                return False
        elif entry.point == "0":
            if kmin < pole_order_bound(entry.r):
                return False
    return True
