"""Claimed singular fibres and their verification.

Each row stores the printed parameter condition, the printed singular
points and the printed type.  Verification samples rational parameters on
the stratum, checks F = grad F = 0 at every printed point, classifies it,
and compares the printed point set with the exact singular locus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .classify import NotADE, NotIsolated, NotSingular, classify_singularity
from .elimination import EliminationInconclusive, find_singular_points
from .surfaces import eval_and_gradient, pv_r1, surface

Point = tuple  # coordinates; None marks a coordinate to be derived


def rand_rat(rng: random.Random, exclude=(), lo: int = 1, hi: int = 30) -> Fraction:
    bad = {Fraction(x) for x in exclude}
    while True:
        v = Fraction(rng.randint(lo, hi) * rng.choice((-1, 1)), rng.randint(1, 7))
        if v not in bad:
            return v


@dataclass(frozen=True)
class SingularRow:
    family: str
    label: str
    condition: str
    sample: Callable[[random.Random], dict]
    points: Callable[[dict], list]
    claimed_type: str
    anchor: str
    corrected: Callable[[dict], list] | None = None

    def point_types(self) -> list[str]:
        return self.claimed_type.split("+")


# -- PV ------------------------------------------------------------------------

def _pv_sample(s1=None, s2=None, r1_zero=None, s2_is_u=None):
    """Sampler for a PV stratum.

    ``s1``/``s2`` fix values (±2) or are None (generic, not ±2).  ``r1_zero``
    selects R1 = 0 (True) or R1 != 0 (False).  ``s2_is_u`` lets the caller
    give s2 (or s1) as a function of u = s3 + 1/s3 on R1 = 0 strata.
    """

    def draw(rng):
        while True:
            s3 = rand_rat(rng, exclude=(0, 1, -1))
            u = s3 + 1 / s3
            a = Fraction(s1) if s1 is not None else rand_rat(rng, exclude=(2, -2))
            b = Fraction(s2) if s2 is not None else rand_rat(rng, exclude=(2, -2))
            if s2_is_u is not None:
                a, b = s2_is_u(a, b, u)
            vals = {"s1": a, "s2": b, "s3": s3}
            if a in (2, -2) and s1 is None or b in (2, -2) and s2 is None:
                continue
            if r1_zero is False and pv_r1(a, b, s3) == 0:
                continue
            if r1_zero is True and pv_r1(a, b, s3) != 0:
                continue
            return vals

    return draw


def _fixed(**vals):
    fixed = {k: Fraction(v) for k, v in vals.items()}
    return lambda rng: dict(fixed)


def _pv_rows() -> list[SingularRow]:
    A = "PV singular-fibre table"

    def row(n, cond, sample, pts, typ, corrected=None):
        return SingularRow("pv", f"{A} row {n}", cond, sample, pts, typ, f"{A}, row {n}", corrected)

    def ab(s):
        # the two roots of x^2 - s1 x + 1, rational on the sampled strata
        from .univariate import rational_roots

        roots = rational_roots([Fraction(1), -s["s1"], Fraction(1)])
        return max(roots), min(roots)

    def uv_sample(sign):
        def draw(rng):
            u = rand_rat(rng, exclude=(0, 1, -1))
            s1 = u + 1 / u
            return {"s1": s1, "s2": sign * s1, "s3": Fraction(sign)}
        return draw

    def xy_sample(rng):
        while True:
            X = rand_rat(rng, exclude=(0, 1, -1))
            Y = rand_rat(rng, exclude=(0, 1, -1))
            if X * Y in (1, -1):
                continue
            return {"s1": X + 1 / X, "s2": Y + 1 / Y, "s3": X * Y}

    def a123(s):
        s1, s2, s3 = s["s1"], s["s2"], s["s3"]
        return [((s3**2 - 1) / (s2 * s3 - s1), s3 * (s2 * s3 - s1) / (s3**2 - 1), s3 + 1 / s3)]

    u_of = lambda s: s["s3"] + 1 / s["s3"]  # noqa: E731
    return [
        row(1, "s1=2, s2!=±2, R1!=0", _pv_sample(2, None, False),
            lambda s: [(1, s["s3"], s["s2"])], "A1"),
        row(2, "s1=2, s2=2, R1!=0", _pv_sample(2, 2, False),
            lambda s: [(1, s["s3"], 2), (s["s3"], 1, 2)], "A1+A1"),
        row(3, "s1=2, s2=2, R1=0", _fixed(s1=2, s2=2, s3=1), lambda s: [(1, 1, 2)], "A3"),
        row(4, "s1=2, s2=-2, R1!=0", _pv_sample(2, -2, False),
            lambda s: [(-s["s3"], -1, -2), (1, s["s3"], -2)], "A1+A1"),
        row(5, "s1=2, s2=-2, R1=0", _fixed(s1=2, s2=-2, s3=-1), lambda s: [(1, -1, -2)], "A3"),
        row(6, "s1=2, s2!=±2, R1=0", _pv_sample(2, None, True, lambda a, b, u: (a, u)),
            lambda s: [(1, s["s3"], u_of(s))], "A2"),
        row(7, "s1=-2, s2!=±2, R1!=0", _pv_sample(-2, None, False),
            lambda s: [(-1, -s["s3"], -s["s2"])], "A1"),
        row(8, "s1=-2, s2=2, R1!=0", _pv_sample(-2, 2, False),
            lambda s: [(-1, -s["s3"], -2), (s["s3"], 1, -2)], "A1+A1"),
        row(9, "s1=-2, s2=2, R1=0", _fixed(s1=-2, s2=2, s3=-1), lambda s: [(-1, -1, -2)], "A3",
            corrected=lambda s: [(-1, 1, -2)]),
        row(10, "s1=-2, s2=-2, R1!=0", _pv_sample(-2, -2, False),
            lambda s: [(-1, -s["s3"], 2), (-s["s3"], -1, -2)], "A1+A1",
            corrected=lambda s: [(-1, -s["s3"], 2), (-s["s3"], -1, 2)]),
        row(11, "s1=-2, s2=-2, R1=0", _fixed(s1=-2, s2=-2, s3=1), lambda s: [(-1, -1, 2)], "A3"),
        row(12, "s1=-2, s2!=±2, R1=0", _pv_sample(-2, None, True, lambda a, b, u: (a, -u)),
            lambda s: [(-1, -s["s3"], u_of(s))], "A2"),
        row(13, "s1!=±2, s2=2, R1!=0", _pv_sample(None, 2, False),
            lambda s: [(s["s3"], 1, None)], "A1",
            corrected=lambda s: [(s["s3"], 1, s["s1"])]),
        row(14, "s1!=±2, s2=2, R1=0", _pv_sample(None, 2, True, lambda a, b, u: (u, b)),
            lambda s: [(s["s3"], 1, u_of(s))], "A2"),
        row(15, "s1!=±2, s2=-2, R1!=0", _pv_sample(None, -2, False),
            lambda s: [(-s["s3"], -1, -s["s1"])], "A1"),
        row(16, "s1!=±2, s2=-2, R1=0", _pv_sample(None, -2, True, lambda a, b, u: (-u, b)),
            lambda s: [(-s["s3"], -1, u_of(s))], "A2"),
        row(17, "s1!=±2, s2!=±2, R1=0", xy_sample, a123, "A1"),
        row(18, "s1!=±2, s2=s1, R1=0", uv_sample(1),
            lambda s: [(ab(s)[0], ab(s)[1], 2), (ab(s)[1], ab(s)[0], 2)], "A1+A1"),
        row(19, "s1!=±2, s2=-s1, R1=0", uv_sample(-1),
            lambda s: [(ab(s)[0], -ab(s)[1], 2), (-ab(s)[1], ab(s)[0], 2)], "A1+A1",
            corrected=lambda s: [(ab(s)[0], -ab(s)[1], -2), (ab(s)[1], -ab(s)[0], -2)]),
    ]


# -- PIV -----------------------------------------------------------------------

def _piv_rows() -> list[SingularRow]:
    A = "PIV singular-fibre table"

    def s2_draw(s1_of, exclude):
        def draw(rng):
            s2 = rand_rat(rng, exclude=exclude)
            return {"s1": s1_of(s2), "s2": s2}
        return draw

    return [
        SingularRow("piv", f"{A} D1+ not Dred", "s=(2,s2), s2!=1",
                    s2_draw(lambda s2: Fraction(2), (0, 1)),
                    lambda s: [(s["s2"],) * 3], "A1", f"{A}, row D1+"),
        SingularRow("piv", f"{A} D1- not Dred", "s=(-2,s2), s2!=-1",
                    s2_draw(lambda s2: Fraction(-2), (0, -1)),
                    lambda s: [(-s["s2"],) * 3], "A1", f"{A}, row D1-"),
        SingularRow("piv", f"{A} Dred not D1", "s=(s2+1/s2,s2), s2!=±1",
                    s2_draw(lambda s2: s2 + 1 / s2, (0, 1, -1)),
                    lambda s: [(s["s2"] ** 2, 1, 1)], "A1", f"{A}, row Dred"),
        SingularRow("piv", f"{A} D1+ and Dred", "s=(2,1)", _fixed(s1=2, s2=1),
                    lambda s: [(1, 1, 1)], "A2", f"{A}, row D1+ ∩ Dred"),
        SingularRow("piv", f"{A} D1- and Dred", "s=(-2,-1)", _fixed(s1=-2, s2=-1),
                    lambda s: [(1, 1, 1)], "A2", f"{A}, row D1- ∩ Dred"),
    ]


# -- PIII(D6) ------------------------------------------------------------------

def _d6_rows() -> list[SingularRow]:
    A = "PIII(D6) singular lines"

    def line(kind):
        def draw(rng):
            a = rand_rat(rng, exclude=(0, 1, -1))
            return {"alpha": a, "beta": a if kind == 1 else 1 / a}
        return draw

    return [
        SingularRow("piii_d6", f"{A} L1", "alpha=beta", line(1),
                    lambda s: [(0, -s["alpha"], s["alpha"] + 1 / s["alpha"])], "A1", f"{A}, L1"),
        SingularRow("piii_d6", f"{A} L2", "alpha*beta=1", line(2),
                    lambda s: [(-1, 0, s["alpha"] + 1 / s["alpha"])], "A1", f"{A}, L2"),
        SingularRow("piii_d6", f"{A} L1 and L2 at +1", "alpha=beta=1", _fixed(alpha=1, beta=1),
                    lambda s: [(0, -1, 2), (-1, 0, 2)], "A1+A1", f"{A}, alpha=beta=1"),
        SingularRow("piii_d6", f"{A} L1 and L2 at -1", "alpha=beta=-1", _fixed(alpha=-1, beta=-1),
                    lambda s: [(0, 1, -2), (-1, 0, -2)], "A1+A1", f"{A}, alpha=beta=-1"),
    ]


# -- PVdeg ---------------------------------------------------------------------

def _pv_deg_rows() -> list[SingularRow]:
    A = "PVdeg resonance strata"
    rows = []
    for e0 in (1, -1):
        def draw(rng, e0=e0):
            return {"s0": Fraction(2 * e0), "s1": rand_rat(rng, exclude=(2, -2))}
        rows.append(SingularRow("pv_deg", f"{A} s0={2 * e0}", f"s0={2 * e0}, s1!=±2", draw,
                                lambda s, e0=e0: [(-e0, 0, e0 * s["s1"])], "A1", f"{A}, s0={2 * e0}"))
    for e1 in (1, -1):
        def draw(rng, e1=e1):
            return {"s0": rand_rat(rng, exclude=(2, -2)), "s1": Fraction(2 * e1)}
        rows.append(SingularRow("pv_deg", f"{A} s1={2 * e1}", f"s1={2 * e1}, s0!=±2", draw,
                                lambda s, e1=e1: [(0, -e1, e1 * s["s0"])], "A1", f"{A}, s1={2 * e1}"))
    for e0 in (1, -1):
        for e1 in (1, -1):
            rows.append(SingularRow(
                "pv_deg", f"{A} corner ({2 * e0},{2 * e1})", f"s0={2 * e0}, s1={2 * e1}",
                _fixed(s0=2 * e0, s1=2 * e1),
                lambda s, e0=e0, e1=e1: [(-e0, 0, 2 * e0 * e1), (0, -e1, 2 * e0 * e1)], "A1+A1",
                f"{A}, corner ({2 * e0},{2 * e1})"))
    return rows


def _misc_rows() -> list[SingularRow]:
    return [
        SingularRow("pii_fn", "PIIFN resonance s=2", "s=2", _fixed(s=2),
                    lambda s: [(-1, 1, -1)], "A1", "PIIFN singular point, s=2"),
        SingularRow("pii_fn", "PIIFN resonance s=-2", "s=-2", _fixed(s=-2),
                    lambda s: [(1, -1, 1)], "A1", "PIIFN singular point, s=-2"),
        SingularRow("pii", "PII Cayley point", "alpha=1", _fixed(alpha=1),
                    lambda s: [(1, 1, 1)], "A1", "PII extra singular point, alpha=1"),
    ]


def singularity_rows(fam_id: str | None = None) -> list[SingularRow]:
    rows = _pv_rows() + _piv_rows() + _d6_rows() + _pv_deg_rows() + _misc_rows()
    if fam_id is None or fam_id == "all":
        return rows
    return [r for r in rows if r.family == fam_id]


# -- verification --------------------------------------------------------------

@dataclass
class SampleCheck:
    params: dict
    points: list
    on_surface: list[bool]
    singular: list[bool]
    types: list[str | None]
    actual: list | None  # exact singular locus, when the search is conclusive
    actual_types: list | None
    derived: list = field(default_factory=list)

    @property
    def ok_points(self) -> bool:
        return all(self.on_surface) and all(self.singular)


@dataclass
class RowResult:
    row: SingularRow
    samples: list[SampleCheck]
    status: str  # pass / fail
    reason: str
    corrected_ok: bool | None

    def witness(self) -> dict:
        s = self.samples[0]
        return {
            "params": {k: str(v) for k, v in sorted(s.params.items())},
            "printed_points": [[str(c) for c in p] for p in s.points],
            "singular_locus": None if s.actual is None else [[str(c) for c in p] for p in s.actual],
            "types": s.actual_types,
            "derived": [[str(c) for c in p] for p in s.derived],
        }


def _type_of(F, pt) -> str | None:
    try:
        return classify_singularity(F, pt)
    except (NotADE, NotIsolated, NotSingular):
        return None


def _singular_locus(F):
    try:
        actual = find_singular_points(F).points
    except EliminationInconclusive:
        return None, None
    return actual, [_type_of(F, p) for p in actual]


def _check_points(row: SingularRow, params: dict, pts: list, locus=None) -> SampleCheck:
    surf = surface(row.family)
    F = surf.specialize(params)
    actual, actual_types = locus if locus is not None else _singular_locus(F)
    derived = []
    resolved = []
    for p in pts:
        if any(c is None for c in p):
            if actual is None:
                resolved.append(p)
                continue
            match = [a for a in actual if all(c is None or Fraction(c) == ac for c, ac in zip(p, a))]
            derived.extend(match)
            resolved.append(match[0] if len(match) == 1 else p)
        else:
            resolved.append(tuple(Fraction(c) for c in p))
    on, sing, types = [], [], []
    for p in resolved:
        if any(c is None for c in p):
            on.append(False)
            sing.append(False)
            types.append(None)
            continue
        val, grad = eval_and_gradient(surf, params, p)
        on.append(val == 0)
        sing.append(val == 0 and all(g == 0 for g in grad))
        types.append(_type_of(F, p) if sing[-1] else None)
    return SampleCheck(params, resolved, on, sing, types, actual, actual_types, derived)


def verify_row(row: SingularRow, samples: int, rng: random.Random) -> RowResult:
    checks = []
    claimed = row.point_types()
    bad = None
    corrected_ok = None if row.corrected is None else True
    for _ in range(samples):
        params = row.sample(rng)
        chk = _check_points(row, params, row.points(params))
        checks.append(chk)
        if bad is None:
            if not chk.ok_points:
                bad = "printed point is not a singular point of the fibre"
            elif sorted(chk.types) != sorted(claimed):
                bad = f"type mismatch: found {chk.types}, claimed {claimed}"
            elif chk.actual is not None and sorted(chk.actual) != sorted(chk.points):
                bad = "printed points differ from the singular locus of the fibre"
        if row.corrected is not None:
            fix = _check_points(row, params, row.corrected(params), (chk.actual, chk.actual_types))
            if not (fix.ok_points and sorted(fix.types) == sorted(claimed)
                    and (fix.actual is None or sorted(fix.actual) == sorted(fix.points))):
                corrected_ok = False
    status = "fail" if bad else "pass"
    return RowResult(row, checks, status, bad or "", corrected_ok)


def verify_singularity_table(fam_id: str = "all", samples_per_row: int = 10, seed: int = 0) -> list[RowResult]:
    out = []
    for i, row in enumerate(singularity_rows(fam_id)):
        rng = random.Random(f"{seed}:{row.label}")
        out.append(verify_row(row, samples_per_row, rng))
    return out


# -- smoothness ----------------------------------------------------------------

def displayed_discriminant(fam_id: str, params: dict) -> Fraction | None:
    """Value of the discriminant shown for the family (None when none is shown)."""
    v = {k: Fraction(x) for k, x in params.items()}
    if fam_id == "piii_d6":
        a, b = v["alpha"], v["beta"]
        return (a - b) ** 2 * (a * b - 1) ** 2
    if fam_id == "piv":
        s1, s2 = v["s1"], v["s2"]
        return (s1 - 2) * (s1 + 2) * (s2**2 - s1 * s2 + 1)
    if fam_id == "pv":
        return (v["s1"] ** 2 - 4) * (v["s2"] ** 2 - 4) * pv_r1(v["s1"], v["s2"], v["s3"])
    if fam_id in ("piii_d7", "piii_d8", "pi"):
        return Fraction(1)
    return None


@dataclass
class ProbeResult:
    family: str
    params: dict
    smooth: bool
    points: list
    discriminant: Fraction | None

    @property
    def agrees(self) -> bool | None:
        if self.discriminant is None:
            return None
        return self.smooth == (self.discriminant != 0)


def smoothness_probe(fam_id: str, params: dict, seed: int = 0) -> ProbeResult:
    surf = surface(fam_id)
    F = surf.specialize(params)
    res = find_singular_points(F, seed=seed)
    return ProbeResult(fam_id, dict(params), res.smooth, res.points, displayed_discriminant(fam_id, params))


def smoothness_samples(fam_id: str, n: int, seed: int = 0) -> list[dict]:
    """Rational parameter samples alternating off and on the displayed divisors."""
    rng = random.Random(f"{seed}:{fam_id}")
    out = []
    for i in range(n):
        on = i % 2 == 1
        if fam_id == "piii_d6":
            a = rand_rat(rng, exclude=(0,))
            if on:
                b = a if rng.random() < 0.5 else 1 / a
            else:
                b = rand_rat(rng, exclude=(0, a, 1 / a))
            out.append({"alpha": a, "beta": b})
        elif fam_id == "piv":
            s2 = rand_rat(rng, exclude=(0,))
            if on:
                s1 = rng.choice((Fraction(2), Fraction(-2), s2 + 1 / s2))
            else:
                s1 = rand_rat(rng, exclude=(2, -2, s2 + 1 / s2))
            out.append({"s1": s1, "s2": s2})
        elif fam_id == "piii_d7":
            out.append({"alpha": rand_rat(rng, exclude=(0,))})
        elif fam_id in ("piii_d8", "pi"):
            out.append({})
        else:
            raise ValueError(f"no smoothness sampler for {fam_id}")
    return out
