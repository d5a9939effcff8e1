"""Fixed benchmark runs shared by the CLI suites and the acceptance tests."""

from __future__ import annotations

from dataclasses import dataclass

THETA = {"th0": 1 / 3, "th1": 1 / 5, "thinf": 1 / 7}


@dataclass(frozen=True)
class FlowBenchmark:
    family: str
    theta: dict
    t_path: tuple
    q0: complex
    p0: complex


@dataclass(frozen=True)
class MonodromyBenchmark:
    family: str
    theta: dict
    t_range: tuple
    q0: complex
    p0: complex
    point: complex = 0
    n_samples: int = 6


FLOW_BENCHMARKS = {
    fam: FlowBenchmark(fam, THETA, (1.0, 1.5), 0.3 + 0.1j, 0.1)
    for fam in ("pv", "pv_deg", "piii_d6", "piii_d7", "piii_d8", "piv", "pii_fn", "pii", "pi")
}

# (q0, p0) for PIII(D6) keeps the monodromy entries of moderate size (about 1e2);
# see the decision ledger for the run at the generic flow benchmark data.
MONODROMY_BENCHMARKS = {
    "pv": MonodromyBenchmark("pv", THETA, (1.0, 2.0), 0.3 + 0.1j, 0.1),
    "piii_d6": MonodromyBenchmark("piii_d6", {"th0": 1 / 3, "thinf": 1 / 7}, (1.0, 1.5), -1.0, 0.3),
}

PIV_TRACE_THETAS = (1 / 3, 1 / 5)
PIV_TRACE_STATE = dict(t=1.0, q=0.3 + 0.1j, p=0.2, thinf=0.3)
