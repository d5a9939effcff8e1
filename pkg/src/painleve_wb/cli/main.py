"""Command-line entry point: ``painleve-wb <command> ...``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage errors.
Defaults for the global flags can be set with PAINLEVE_WB_FORMAT,
PAINLEVE_WB_SEED, PAINLEVE_WB_TOL and PAINLEVE_WB_OUT.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from ..cubics import eval_and_gradient, surface, verify_singularity_table
from ..cubics.surfaces import DomainViolation
from ..families import FAMILY_IDS, LAX_FAMILY_IDS, UnknownFamily, family_to_json, get_family
from ..isomonodromy import derive_deformation
from ..numerics import StepUnderflow, TrajectoryBlowup, integrate_flow, isomonodromy_invariance
from ..scalarform import good_cyclic_count, scalar_operator
from .report import VerificationReport, jsonable
from .suites import SUITES, Options, UsageError, run_suite, suite_hamiltonian, suite_lax, suite_second_order


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def _env(name: str, default):
    return os.environ.get(f"PAINLEVE_WB_{name}", default)


def _families(value: str, allowed) -> tuple[str, ...]:
    if value == "all":
        return tuple(allowed)
    if value not in allowed:
        raise UsageError(f"unknown family {value!r}")
    return (value,)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload) -> None:
    _emit(args, json.dumps(jsonable(payload), sort_keys=True, indent=2) + "\n")


def _emit_report(args, rep: VerificationReport) -> int:
    _emit(args, rep.render(args.format))
    return rep.exit_code


def _options(args, **kw) -> Options:
    opts = Options(seed=args.seed, tol=args.tol)
    for k, v in kw.items():
        setattr(opts, k, v)
    return opts


# -- commands ------------------------------------------------------------------

def cmd_families(args) -> int:
    fams = _families(args.family, FAMILY_IDS)
    _emit_json(args, {f: family_to_json(get_family(f)) for f in fams})
    return 0


def cmd_verify(args) -> int:
    fams = _families(args.family, LAX_FAMILY_IDS)
    runner = {"lax": suite_lax, "hamiltonian": suite_hamiltonian, "second-order": suite_second_order}[args.what]
    rep = runner(_options(args, families=fams))
    return _emit_report(args, rep)


def cmd_derive(args) -> int:
    (fid,) = _families(args.family, LAX_FAMILY_IDS)
    res = derive_deformation(get_family(fid))
    payload = {
        "family": fid,
        "B": res.B.to_json(),
        "B_text": [[str(x) for x in row] for row in res.B.rows()],
        "qprime": str(res.qprime),
        "pprime": str(res.pprime),
        "equations": res.n_equations,
        "unknowns": res.n_unknowns,
    }
    if args.format == "json":
        _emit_json(args, payload)
    else:
        _emit(args, f"q' = {payload['qprime']}\np' = {payload['pprime']}\nB = {payload['B_text']}\n")
    return 0


def cmd_cyclic(args) -> int:
    (fid,) = _families(args.family, LAX_FAMILY_IDS)
    fam = get_family(fid)
    if args.what == "count":
        c = good_cyclic_count(fam, seed=args.seed)
        payload = {"family": fid, "good": c.good, "expected": fam.good_cyclic, "sample": c.sample,
                   "apparent_counts": c.apparent_counts, "generic_apparent": c.generic_apparent,
                   "attempts": c.attempts}
        if args.format == "json":
            _emit_json(args, payload)
        else:
            _emit(args, f"{fid}: {c.good} good cyclic vectors (expected {fam.good_cyclic})\n")
        return 0 if c.good == fam.good_cyclic else 1
    op = scalar_operator(fam.A_full)
    payload = {"family": fid, "a1": op.a1.to_json(), "a0": op.a0.to_json(),
               "a1_text": str(op.a1), "a0_text": str(op.a0)}
    if args.format == "json":
        _emit_json(args, payload)
    else:
        _emit(args, f"a1 = {op.a1}\na0 = {op.a0}\n")
    return 0


def _parse_values(text: str) -> dict[str, Fraction]:
    out = {}
    for part in filter(None, (text or "").split(",")):
        if "=" not in part:
            raise UsageError(f"expected name=value, got {part!r}")
        k, v = part.split("=", 1)
        out[k.strip()] = Fraction(v.strip())
    return out


def cmd_cubic(args) -> int:
    if args.what == "verify":
        fams = _families(args.family, FAMILY_IDS)
        rep = VerificationReport("cubic-verify")
        for fid in fams:
            for res in verify_singularity_table(fid, args.samples, args.seed):
                detail = {"condition": res.row.condition, "claimed_type": res.row.claimed_type}
                if res.status == "fail":
                    detail["reason"] = res.reason
                    detail["witness"] = res.witness()
                if res.corrected_ok is not None:
                    detail["corrected_points_verify"] = res.corrected_ok
                rep.add(f"cubics/{fid}/{res.row.label}", res.status == "pass", res.row.anchor, **detail)
        rep.options = {"samples": args.samples, "seed": args.seed, "family": args.family}
        return _emit_report(args, rep)
    (fid,) = _families(args.family, FAMILY_IDS)
    params = _parse_values(args.params)
    point = [Fraction(x) for x in args.point.split(",")]
    if len(point) != 3:
        raise UsageError("--point needs three coordinates")
    value, grad = eval_and_gradient(surface(fid), params, point)
    payload = {"family": fid, "params": params, "point": point, "F": value, "gradient": list(grad),
               "singular": value == 0 and all(g == 0 for g in grad)}
    if args.format == "json":
        _emit_json(args, payload)
    else:
        _emit(args, f"F = {value}\ngrad F = ({', '.join(map(str, grad))})\n")
    return 0


def _theta(args) -> dict:
    return {"th0": args.theta0, "th1": args.theta1, "thinf": args.thetainf}


def cmd_flow(args) -> int:
    (fid,) = _families(args.family, LAX_FAMILY_IDS)
    traj = integrate_flow(get_family(fid), _theta(args), [args.t0, args.t1],
                          complex(args.q0_re, args.q0_im), complex(args.p0_re, args.p0_im), args.tol)
    _emit(args, traj.csv_text())
    if args.out:
        sys.stderr.write(f"{fid}: {traj.status}, {len(traj.samples)} samples\n")
    return 0 if traj.status == "completed" else 1


def cmd_mono(args) -> int:
    (fid,) = _families(args.family, LAX_FAMILY_IDS)
    fam = get_family(fid)
    if not fam.singular_points:
        raise UsageError(f"{fid} has no finite singular point to loop around")
    point = complex(args.loops)
    if point not in [complex(x) for x in fam.singular_points]:
        raise UsageError(f"z = {args.loops} is not a finite singular point of {fid}")
    run = isomonodromy_invariance(fam, _theta(args), (args.t0, args.t1),
                                  complex(args.q0_re, args.q0_im), complex(args.p0_re, args.p0_im),
                                  point, args.samples, args.tol, co_evolve=not args.no_frame)
    payload = run.to_json()
    payload["budget"] = args.budget
    _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return 0 if run.residual <= args.budget else 1


def cmd_suite(args) -> int:
    rep = run_suite(args.name, _options(args, samples=args.samples))
    return _emit_report(args, rep)


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def global_flags(p, defaults: bool):
        d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
        p.add_argument("--format", choices=("json", "text"), default=d(_env("FORMAT", "text")))
        p.add_argument("--seed", type=int, default=d(int(_env("SEED", 0))))
        p.add_argument("--tol", type=float, default=d(float(_env("TOL", 1e-10))))
        p.add_argument("--out", default=d(_env("OUT", None)))

    # the flags are accepted before or after the subcommand; only the top-level
    # parser supplies defaults so a later occurrence never masks an earlier one
    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, defaults=False)
    parser = _Parser(prog="painleve-wb", description=__doc__.splitlines()[0])
    global_flags(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("families", parents=[common], help="registry data")
    p.add_argument("what", choices=("dump",))
    p.add_argument("--family", default="all")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("verify", parents=[common], help="exact identities")
    p.add_argument("what", choices=("lax", "hamiltonian", "second-order"))
    p.add_argument("--family", default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("derive", parents=[common], help="derive B and the flow")
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("cyclic", parents=[common], help="cyclic vectors and scalar form")
    p.add_argument("what", choices=("count", "scalar-op"))
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("cubic", parents=[common], help="monodromy cubic surfaces")
    p.add_argument("what", choices=("verify", "eval"))
    p.add_argument("--family", default="all")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--params", default="")
    p.add_argument("--point", default="0,0,0")
    p.set_defaults(func=cmd_cubic)

    def numeric_args(p):
        p.add_argument("--family", required=True)
        p.add_argument("--theta0", type=complex, default=0j)
        p.add_argument("--theta1", type=complex, default=0j)
        p.add_argument("--thetainf", type=complex, default=0j)
        p.add_argument("--t0", type=complex, default=1 + 0j)
        p.add_argument("--t1", type=complex, default=1.5 + 0j)
        p.add_argument("--q0-re", type=float, default=0.3)
        p.add_argument("--q0-im", type=float, default=0.1)
        p.add_argument("--p0-re", type=float, default=0.1)
        p.add_argument("--p0-im", type=float, default=0.0)

    p = sub.add_parser("flow", parents=[common], help="integrate a Painlevé flow")
    p.add_argument("what", choices=("integrate",))
    numeric_args(p)
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("mono", parents=[common], help="monodromy invariance along a trajectory")
    p.add_argument("what", choices=("check",))
    numeric_args(p)
    p.add_argument("--loops", default="0", help="finite singular point to encircle")
    p.add_argument("--samples", type=int, default=6)
    p.add_argument("--budget", type=float, default=1e-6)
    p.add_argument("--no-frame", action="store_true", help="negative control: do not co-evolve the frame")
    p.set_defaults(func=cmd_mono)

    p = sub.add_parser("suite", parents=[common], help="run a verification suite")
    p.add_argument("name", help=", ".join(SUITES))
    p.add_argument("--samples", type=int, default=10)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnknownFamily, DomainViolation, ValueError) as exc:
        sys.stderr.write(f"painleve-wb: error: {exc}\n")
        return 2
    except (TrajectoryBlowup, StepUnderflow) as exc:
        sys.stderr.write(f"painleve-wb: integration failed: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
