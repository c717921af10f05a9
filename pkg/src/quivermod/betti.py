"""Counting series #R_d^ss/#G_d and Poincare polynomials of quiver moduli.

Three independent routes compute the counting series:

* :func:`ev_semistable_tm` -- back-substitution on the unitriangular
  transfer matrix over the lattice I(d) (the production route);
* :func:`resolved_sum` -- literal enumeration of the resolved alternating
  sum over tuples (exponential; the brute-force oracle);
* :func:`quivermod.hn.ev_semistable` -- the HN recursion.

For coprime d, (q - 1) times the counting series is the Poincare
polynomial of the moduli space in q = v^2.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from . import hn
from .errors import BudgetExceeded, NonPolynomial, NotCoprime, ZeroDimVector
from .qseries import PolyQ, RationalFunctionQ, format_poly, interpolate, poly_eval, ratfun_to_poly
from .quiver import (
    DimVector,
    Quiver,
    StabilityData,
    dv_add,
    dv_leq,
    dv_sub,
    euler_form,
    gl_order,
    is_coprime,
    is_zero,
    moduli_dimension,
    r_exponent,
    r_over_g,
    slope,
)

METHODS = ("tm", "recursion", "oracle", "interp")
DEFAULT_BUDGET = 10**5

Q_MINUS_ONE = RationalFunctionQ(PolyQ([-1, 1]))


@dataclass(frozen=True)
class LatticeId:
    """I(d) in a fixed linear extension of the componentwise order."""

    points: Tuple[DimVector, ...]

    @property
    def zero(self) -> DimVector:
        return self.points[0]

    @property
    def top(self) -> DimVector:
        return self.points[-1]

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class BettiResult:
    poincare_q: PolyQ
    moduli_dim: int
    coprime: bool
    empty: bool
    warnings: Tuple[str, ...] = field(default=())

    @property
    def poincare_v(self) -> List[int]:
        """Coefficients by v-degree (q^i sits at v^{2i})."""
        out = []
        for c in self.poincare_q.coeffs:
            out.extend((c, 0))
        return out[:-1]

    @property
    def betti(self) -> List[int]:
        return self.poincare_v

    @property
    def euler(self) -> int:
        return euler_characteristic(self)

    def poincare_str(self, var: str = "v") -> str:
        if var == "q":
            return format_poly(self.poincare_q.coeffs, "q")
        return format_poly(self.poincare_q.coeffs, var, step=2)

    def to_dict(self) -> dict:
        return {
            "coprime": self.coprime,
            "empty": self.empty,
            "moduli_dimension": self.moduli_dim,
            "poincare_v": self.poincare_v,
            "betti": self.betti,
            "euler": self.euler,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BettiResult":
        return cls(
            poincare_q=PolyQ(data["poincare_v"][::2]),
            moduli_dim=data["moduli_dimension"],
            coprime=data["coprime"],
            empty=data["empty"],
            warnings=tuple(data.get("warnings", ())),
        )


def lattice_points(Q: Quiver, S: StabilityData, d: DimVector) -> LatticeId:
    if is_zero(d):
        raise ZeroDimVector("lattice of the zero dimension vector")
    d = tuple(d)
    mu = slope(S, d)
    zero = tuple(0 for _ in d)
    pts = [zero, d]
    pts += [e for e in hn.subvectors(d) if e != d and slope(S, e) > mu]
    pts.sort(key=lambda e: (sum(e), e))
    return LatticeId(tuple(pts))


def _entry(Q: Quiver, e: DimVector, f: DimVector) -> RationalFunctionQ:
    diff = dv_sub(f, e)
    return RationalFunctionQ.monomial(euler_form(Q, dv_sub(e, f), e)) * r_over_g(Q, diff)


def transfer_matrix(Q: Quiver, S: StabilityData, d: DimVector) -> Dict[DimVector, Dict[DimVector, RationalFunctionQ]]:
    """Sparse rows ``T[e][f]`` for e <= f in I(d); the diagonal is 1."""
    lat = lattice_points(Q, S, d)
    T = {}
    for k, e in enumerate(lat.points):
        row = {e: RationalFunctionQ(1)}
        for f in lat.points[k + 1:]:
            if f != e and dv_leq(e, f):
                row[f] = _entry(Q, e, f)
        T[e] = row
    return T


def _back_substitute(points: Sequence[DimVector], entry: Callable, one, zero):
    # solve T x = unit vector at the last point; return x at the first point
    x = {points[-1]: one}
    for k in range(len(points) - 2, -1, -1):
        e = points[k]
        acc = zero
        for f in points[k + 1:]:
            if dv_leq(e, f):
                t = entry(e, f)
                if t:
                    acc = acc + t * x[f]
        x[e] = -acc
    return x


def corner_inverse(T: Dict, lattice: LatticeId) -> RationalFunctionQ:
    """(T^{-1})_{0,d} by back-substitution on the single column d."""
    def entry(e, f):
        return T[e].get(f, 0)

    x = _back_substitute(lattice.points, entry, RationalFunctionQ(1), RationalFunctionQ(0))
    return x[lattice.zero]


def solve_column(T: Dict, lattice: LatticeId) -> Dict[DimVector, RationalFunctionQ]:
    """The whole column d of T^{-1}, keyed by lattice point."""
    return _back_substitute(lattice.points, lambda e, f: T[e].get(f, 0),
                            RationalFunctionQ(1), RationalFunctionQ(0))


def ev_semistable_tm(Q: Quiver, S: StabilityData, d: DimVector) -> RationalFunctionQ:
    if is_zero(d):
        raise ZeroDimVector("counting series of the zero dimension vector")
    d = tuple(d)
    lat = lattice_points(Q, S, d)
    x = _back_substitute(lat.points, lambda e, f: _entry(Q, e, f),
                         RationalFunctionQ(1), RationalFunctionQ(0))
    return -x[lat.zero]


def count_resolved_tuples(S: StabilityData, d: DimVector, budget: int = DEFAULT_BUDGET) -> int:
    """Number of tuples in the resolved sum, stopping once it exceeds budget."""
    count = 0
    for _ in _resolved_tuples(S, tuple(d)):
        count += 1
        if count > budget:
            break
    return count


def _resolved_tuples(S: StabilityData, d: DimVector):
    mu = slope(S, d)
    zero = tuple(0 for _ in d)

    def extend(acc, parts):
        rem = dv_sub(d, acc)
        for p in hn.subvectors(rem):
            nxt = dv_add(acc, p)
            if nxt == d:
                yield parts + (p,)
            elif slope(S, nxt) > mu:
                yield from extend(nxt, parts + (p,))

    yield from extend(zero, ())


def resolved_sum(Q: Quiver, S: StabilityData, d: DimVector, budget: int = DEFAULT_BUDGET) -> RationalFunctionQ:
    """Sum over tuples with proper partial sums of slope > mu(d) of
    (-1)^(s-1) q^(-<d*>) prod_k #R_{d^k}/#G_{d^k}.

    Terms are grouped by the multiset of parts so the product of point
    counts is formed once per group; the q-power bookkeeping stays exact.
    """
    if is_zero(d):
        raise ZeroDimVector("counting series of the zero dimension vector")
    d = tuple(d)
    groups: Dict[tuple, Dict[int, int]] = defaultdict(lambda: defaultdict(int))
    count = 0
    for dstar in _resolved_tuples(S, d):
        count += 1
        if count > budget:
            raise BudgetExceeded(f"more than {budget} tuples for d={d}")
        sign = -1 if len(dstar) % 2 == 0 else 1
        groups[tuple(sorted(dstar))][-hn.bracket_type(Q, dstar)] += sign
    total = RationalFunctionQ(0)
    for parts, laurent in sorted(groups.items()):
        lo = min(laurent)
        coeffs = [0] * (max(laurent) - lo + 1)
        for k, c in laurent.items():
            coeffs[k - lo] += c
        if not any(coeffs):
            continue
        term = RationalFunctionQ(PolyQ(coeffs)) * RationalFunctionQ.monomial(lo)
        for part in parts:
            term = term * r_over_g(Q, part)
        total = total + term
    return total


def counting_series(Q: Quiver, S: StabilityData, d: DimVector, method: str = "tm",
                    budget: int = DEFAULT_BUDGET) -> RationalFunctionQ:
    """#R_d^ss/#G_d by the chosen route; ``interp`` uses the transfer matrix."""
    if method in ("tm", "interp"):
        return ev_semistable_tm(Q, S, d)
    if method == "recursion":
        return hn.ev_semistable(Q, S, tuple(d))
    if method == "oracle":
        return resolved_sum(Q, S, d, budget=budget)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def _result_from_poly(Q: Quiver, S: StabilityData, d: DimVector, P: PolyQ) -> BettiResult:
    return BettiResult(
        poincare_q=P,
        moduli_dim=moduli_dimension(Q, d),
        coprime=True,
        empty=P.is_zero(),
    )


def _require_coprime(S: StabilityData, d: DimVector):
    if is_zero(d):
        raise ZeroDimVector("Poincare polynomial of the zero dimension vector")
    if not is_coprime(S, d):
        raise NotCoprime(
            f"d={tuple(d)} is not coprime: gcd(theta(d), dim d) = "
            f"gcd({S(d)}, {sum(d)}) != 1"
        )


def poincare(Q: Quiver, S: StabilityData, d: DimVector, method: str = "tm",
             budget: int = DEFAULT_BUDGET) -> BettiResult:
    """Poincare polynomial (q = v^2) of the moduli space for coprime d."""
    if method == "interp":
        return poincare_interpolated(Q, S, d)
    d = tuple(d)
    _require_coprime(S, d)
    series = counting_series(Q, S, d, method, budget=budget)
    P = ratfun_to_poly(Q_MINUS_ONE * series)
    return _result_from_poly(Q, S, d, P)


def euler_characteristic(r: BettiResult) -> int:
    return poly_eval(r.poincare_q, 1)


def _series_at(Q: Quiver, S: StabilityData, lat: LatticeId, q: int) -> Fraction:
    gl = {}

    def r_over_g_at(v):
        den = 1
        for x in v:
            if x:
                if x not in gl:
                    gl[x] = poly_eval(gl_order(x), q)
                den *= gl[x]
        return Fraction(q ** r_exponent(Q, v), den)

    def entry(e, f):
        return Fraction(q) ** euler_form(Q, dv_sub(e, f), e) * r_over_g_at(dv_sub(f, e))

    x = _back_substitute(lat.points, entry, Fraction(1), Fraction(0))
    return -x[lat.zero]


def poincare_interpolated(Q: Quiver, S: StabilityData, d: DimVector) -> BettiResult:
    """Same result as :func:`poincare`, via exact sampling at q = 2, 3, ...

    With D the moduli dimension, D+1 samples fix a polynomial of degree <= D
    and one more sample verifies it. Any inconsistency falls back to the
    symbolic back-substitution.
    """
    d = tuple(d)
    _require_coprime(S, d)
    D = max(moduli_dimension(Q, d), 0)
    lat = lattice_points(Q, S, d)
    samples = [(q, (q - 1) * _series_at(Q, S, lat, q)) for q in range(2, D + 4)]
    try:
        P = interpolate(samples[:-1])
    except NonPolynomial:
        P = None
    if P is not None:
        check_q, check_val = samples[-1]
        if poly_eval(P, check_q) == check_val:
            return _result_from_poly(Q, S, d, P)
    return poincare(Q, S, d, method="tm")


def structural_failures(Q: Quiver, d: DimVector, r: BettiResult) -> List[str]:
    """Violated structural properties of a nonempty coprime Poincare polynomial."""
    if r.empty:
        return []
    problems = []
    coeffs = r.poincare_q.coeffs
    if any(c < 0 for c in coeffs):
        problems.append("negative Betti number")
    if coeffs[0] != 1:
        problems.append(f"b_0 = {coeffs[0]} != 1")
    if any(r.betti[1::2]):
        problems.append("nonzero odd Betti number")
    if not r.poincare_q.is_palindromic():
        problems.append("even Betti sequence not palindromic")
    top = 2 * moduli_dimension(Q, d)
    if len(r.betti) - 1 != top:
        problems.append(f"top degree {len(r.betti) - 1} != 2*dim = {top}")
    return problems
