"""Per-instance invariant suite shared by ``quivermod check`` and the tests.

Engine functions are looked up through their modules at call time so a
deliberately broken route (monkeypatched in tests) is caught.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import List

from . import betti, hn
from .errors import BudgetExceeded
from .quiver import DimVector, Quiver, StabilityData, is_coprime, r_over_g

OSSA_SAMPLE = 200


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    @property
    def skipped(self) -> bool:
        return self.passed and self.detail.startswith("skipped")


def run_checks(Q: Quiver, S: StabilityData, d: DimVector, budget: int = betti.DEFAULT_BUDGET) -> List[CheckResult]:
    d = tuple(d)
    out = []
    tm = betti.ev_semistable_tm(Q, S, d)
    rec = hn.ev_semistable(Q, S, d)
    out.append(CheckResult("tm == recursion", tm == rec, "" if tm == rec else f"{tm} vs {rec}"))

    try:
        oracle = betti.resolved_sum(Q, S, d, budget=budget)
    except BudgetExceeded:
        out.append(CheckResult("tm == resolved sum", True, f"skipped: more than {budget} tuples"))
    else:
        ok = oracle == tm
        out.append(CheckResult("tm == resolved sum", ok, "" if ok else f"{tm} vs {oracle}"))

    lhs, rhs = r_over_g(Q, d), hn.hn_partition_sum(Q, S, d)
    out.append(CheckResult("HN partition identity", lhs == rhs, "" if lhs == rhs else f"{lhs} vs {rhs}"))

    ss = hn.is_semistable_dimvec(Q, S, d)
    ok = ss == (not tm.is_zero())
    out.append(CheckResult("semistable <=> series != 0", ok, f"semistable={ss}, series={tm}"))

    codims = [hn.hn_codim(Q, t) for t in hn.enumerate_hn_types(Q, S, d)]
    ok = all(c >= 0 for c in codims) and codims.count(0) <= 1
    out.append(CheckResult("stratum codimensions", ok, f"codims={sorted(codims)}"))

    bad = [t for t in islice(betti._resolved_tuples(S, d), OSSA_SAMPLE)
           if hn.coarsening_euler_sum(S, t) != (1 if len(t) == 1 else 0)]
    out.append(CheckResult("coarsening alternating sums", not bad, f"failures: {bad[:3]}" if bad else ""))

    if is_coprime(S, d):
        result = betti.poincare(Q, S, d)
        problems = betti.structural_failures(Q, d, result)
        out.append(CheckResult("Poincare structure", not problems, "; ".join(problems)))
        fast = betti.poincare_interpolated(Q, S, d)
        ok = fast == result
        out.append(CheckResult("interpolation == tm", ok, "" if ok else f"{fast.poincare_q} vs {result.poincare_q}"))
    else:
        out.append(CheckResult("Poincare structure", True, "skipped: not coprime"))
    return out
