"""Verification suites aggregating the module checks into reports."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..cubics import (
    pv_singular_locus_identity,
    smoothness_probe,
    smoothness_samples,
    verify_singularity_table,
)
from ..families import DISPLAY_NAMES, LAX_FAMILY_IDS, enumerate_families, get_family, table_one
from ..isomonodromy import (
    derive_deformation,
    hamiltonian_check,
    second_order_difference,
    verify_second_order,
    verify_zero_curvature,
)
from ..numerics import (
    hamiltonian_drift,
    integrate_flow,
    isomonodromy_invariance,
    local_trace,
    product_relation,
    trace_formula,
)
from ..numerics.benchmarks import FLOW_BENCHMARKS, MONODROMY_BENCHMARKS, PIV_TRACE_STATE, PIV_TRACE_THETAS
from ..scalarform import good_cyclic_count
from .report import VerificationReport

SUITES = ("lax", "hamiltonian", "second-order", "cubics", "cyclic", "enumerate", "numeric-isomonodromy", "all")


class UsageError(ValueError):
    pass


@dataclass
class Options:
    seed: int = 0
    tol: float = 1e-10
    samples: int = 10
    smooth_samples: int = 50
    cyclic_samples: int = 20
    budget: float = 1e-6
    families: tuple[str, ...] = LAX_FAMILY_IDS

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "tol": self.tol,
            "samples": self.samples,
            "smooth_samples": self.smooth_samples,
            "cyclic_samples": self.cyclic_samples,
            "budget": self.budget,
            "families": list(self.families),
        }


def _name(fam_id: str) -> str:
    return DISPLAY_NAMES[fam_id]


def suite_lax(opts: Options) -> VerificationReport:
    rep = VerificationReport("lax")
    for fid in opts.families:
        fam = get_family(fid)
        res = derive_deformation(fam)
        same_B = res.B == fam.B
        same_flow = (res.qprime - fam.qprime).is_zero() and (res.pprime - fam.pprime).is_zero()
        rep.add(f"lax/{fid}/derivation", same_B and same_flow, f"{_name(fid)} deformation matrix B and flow",
                qprime=str(res.qprime), pprime=str(res.pprime),
                equations=res.n_equations, unknowns=res.n_unknowns)
        R = verify_zero_curvature(fam)
        rep.add(f"lax/{fid}/zero-curvature", R.is_zero(), f"{_name(fid)} zero-curvature identity",
                residual="0" if R.is_zero() else str(R))
    return rep


def suite_hamiltonian(opts: Options) -> VerificationReport:
    rep = VerificationReport("hamiltonian")
    for fid in opts.families:
        fam = get_family(fid)
        c = hamiltonian_check(fam)
        rep.add(f"hamiltonian/{fid}", c.pprime_ok and c.qprime_ok, f"{_name(fid)} Hamiltonian system",
                F=str(fam.F), H=str(fam.H), pprime_ok=c.pprime_ok, qprime_ok=c.qprime_ok)
        rep.add(f"hamiltonian/{fid}/drift-identity", c.drift_ok, f"{_name(fid)} Hamiltonian time dependence")
    return rep


def suite_second_order(opts: Options) -> VerificationReport:
    rep = VerificationReport("second-order")
    for fid in opts.families:
        fam = get_family(fid)
        ok = verify_second_order(fam)
        detail = {"printed": str(fam.second_order)}
        if not ok:
            detail["difference"] = str(second_order_difference(fam))
        rep.add(f"second-order/{fid}", ok, f"{_name(fid)} second-order equation", **detail)
        if "second_order" in fam.errata:
            rep.add(f"second-order/{fid}/corrected", verify_second_order(fam, use_errata=True),
                    f"{_name(fid)} second-order equation, corrected form",
                    corrected=str(fam.errata["second_order"]))
    return rep


def suite_cubics(opts: Options) -> VerificationReport:
    rep = VerificationReport("cubics")
    for res in verify_singularity_table("all", opts.samples, opts.seed):
        detail = {"condition": res.row.condition, "claimed_type": res.row.claimed_type,
                  "samples": len(res.samples)}
        if res.status == "fail":
            detail["reason"] = res.reason
            detail["witness"] = res.witness()
        if res.corrected_ok is not None:
            detail["corrected_points_verify"] = res.corrected_ok
        derived = [p for s in res.samples for p in s.derived]
        if derived:
            detail["derived_points"] = [[str(c) for c in p] for p in derived[:3]]
        rep.add(f"cubics/{res.row.family}/{res.row.label}", res.status == "pass", res.row.anchor, **detail)
    for fid in ("piii_d6", "piv", "piii_d7", "piii_d8", "pi"):
        n = opts.smooth_samples if fid in ("piii_d6", "piv", "piii_d7") else 1
        probes = [smoothness_probe(fid, s, seed=opts.seed) for s in smoothness_samples(fid, n, opts.seed)]
        agree = all(p.agrees for p in probes)
        rep.add(f"cubics/{fid}/smoothness", agree, f"{_name(fid)} smoothness and discriminant",
                samples=len(probes), singular_fibres=sum(not p.smooth for p in probes))
    rep.add("cubics/pv/singular-locus", pv_singular_locus_identity(), "PV singular-locus parameterization")
    return rep


def suite_cyclic(opts: Options) -> VerificationReport:
    rep = VerificationReport("cyclic")
    for fid in opts.families:
        fam = get_family(fid)
        counts = [good_cyclic_count(fam, seed=opts.seed * 1000 + k).good for k in range(opts.cyclic_samples)]
        rep.add(f"cyclic/{fid}", set(counts) == {fam.good_cyclic}, f"{_name(fid)} good cyclic vectors",
                expected=fam.good_cyclic, observed=sorted(set(counts)), samples=len(counts))
    return rep


def suite_enumerate(opts: Options) -> VerificationReport:
    rep = VerificationReport("enumerate")
    found = enumerate_families()
    table = table_one()
    fset = {s.row() for s in found}
    for sig in table:
        match = next((s for s in found if s.row() == sig.row()), None)
        ok = match is not None and match.dimP == sig.dimP
        rep.add(f"enumerate/{sig}", ok, "Katz signature table", dimP=sig.dimP)
    extra = sorted(str(s) for s in found if s.row() not in {t.row() for t in table})
    rep.add("enumerate/no-extra-rows", not extra and len(fset) == len(table), "Katz signature table",
            extra=extra)
    return rep


def suite_numeric(opts: Options) -> VerificationReport:
    rep = VerificationReport("numeric-isomonodromy")
    tol = opts.tol
    for fid, b in sorted(MONODROMY_BENCHMARKS.items()):
        fam = get_family(fid)
        run = isomonodromy_invariance(fam, b.theta, b.t_range, b.q0, b.p0, b.point, b.n_samples, tol)
        rep.add(f"mono/{fid}", run.residual <= opts.budget, f"{_name(fid)} isomonodromy",
                residual=run.residual, det_deviation=run.det_deviation, t_range=list(b.t_range))
        neg = isomonodromy_invariance(fam, b.theta, b.t_range, b.q0, b.p0, b.point, b.n_samples, tol,
                                      co_evolve=False)
        rep.add(f"mono/{fid}/negative-control", neg.residual >= 1e-2, f"{_name(fid)} isomonodromy",
                residual=neg.residual)
    pv = get_family("pv")
    bench = MONODROMY_BENCHMARKS["pv"]
    gap = product_relation(pv, bench.theta, 1.0, bench.q0, bench.p0, tol)
    rep.add("mono/pv/product-relation", gap <= opts.budget, "PV loop relation", gap=gap)
    piv = get_family("piv")
    st = PIV_TRACE_STATE
    for th0 in PIV_TRACE_THETAS:
        tr = local_trace(piv, {"th0": th0, "thinf": st["thinf"]}, st["t"], st["q"], st["p"], 0, tol)
        err = abs(tr - trace_formula(th0))
        rep.add(f"trace/piv/th0={th0:.6g}", err <= 1e-8, "PIV local exponents at z = 0", trace=tr, error=err)
    for fid in opts.families:
        b = FLOW_BENCHMARKS[fid]
        fam = get_family(fid)
        traj = integrate_flow(fam, b.theta, b.t_path, b.q0, b.p0, tol)
        if traj.status != "completed":
            rep.add(f"drift/{fid}", None, f"{_name(fid)} Hamiltonian drift", status=traj.status)
            continue
        d = hamiltonian_drift(fam, b.theta, traj, tol)
        rep.add(f"drift/{fid}", d.ok, f"{_name(fid)} Hamiltonian drift", max_deviation=d.max_deviation,
                bound=d.bound, points=d.checked)
    return rep


_RUNNERS = {
    "lax": suite_lax,
    "hamiltonian": suite_hamiltonian,
    "second-order": suite_second_order,
    "cubics": suite_cubics,
    "cyclic": suite_cyclic,
    "enumerate": suite_enumerate,
    "numeric-isomonodromy": suite_numeric,
}


def run_suite(name: str, options: Options | None = None) -> VerificationReport:
    opts = options or Options()
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    random.seed(opts.seed)
    if name == "all":
        rep = VerificationReport("all")
        for key in _RUNNERS:
            rep.extend(_RUNNERS[key](opts))
    else:
        rep = _RUNNERS[name](opts)
    rep.options = opts.to_json()
    return rep
