"""Acyclic quivers, dimension vectors, weights and point counts over F_q.

Dimension vectors are plain tuples of nonnegative ints aligned with
``Quiver.vertices``. Arrows are stored only through their multiplicities
``r[i][j]``, since the Euler form and the point counts depend on nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping, Sequence, Tuple

from .errors import CyclicQuiver, InvalidInput, ZeroDimVector
from .qseries import PolyQ, RationalFunctionQ

DimVector = Tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    r: Tuple[Tuple[int, ...], ...]
    topological_order: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise InvalidInput("vertex names must be unique")
        if len(self.r) != n or any(len(row) != n for row in self.r):
            raise InvalidInput("arrow matrix must be square over the vertices")
        if any(c < 0 for row in self.r for c in row):
            raise InvalidInput("arrow multiplicities must be nonnegative")
        object.__setattr__(self, "topological_order", _topological_order(self.r))

    @classmethod
    def from_arrows(cls, vertices: Sequence[str], arrows: Mapping[Tuple[str, str], int]) -> "Quiver":
        """Build from ``{(source, target): count}`` keyed by vertex name."""
        vertices = tuple(str(v) for v in vertices)
        index = {v: k for k, v in enumerate(vertices)}
        r = [[0] * len(vertices) for _ in vertices]
        for (src, dst), count in arrows.items():
            if src not in index or dst not in index:
                raise InvalidInput(f"arrow {src}->{dst} references an undeclared vertex")
            r[index[src]][index[dst]] += int(count)
        return cls(vertices, tuple(tuple(row) for row in r))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def arrows(self):
        """Yield (i, j, r_ij) for every nonzero multiplicity."""
        for i, row in enumerate(self.r):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    def dimvec(self, values: Mapping[str, int]) -> DimVector:
        return tuple(int(values.get(v, 0)) for v in self.vertices)


@dataclass(frozen=True)
class StabilityData:
    theta: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(int(t) for t in self.theta))

    def __call__(self, d: DimVector) -> int:
        return sum(t * x for t, x in zip(self.theta, d))


def _topological_order(r) -> Tuple[int, ...]:
    # Kahn's algorithm; a leftover vertex means an oriented cycle
    n = len(r)
    indeg = [sum(1 for i in range(n) if r[i][j]) for j in range(n)]
    ready = [j for j in range(n) if indeg[j] == 0]
    order = []
    while ready:
        i = ready.pop(0)
        order.append(i)
        for j in range(n):
            if r[i][j]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
    if len(order) != n:
        raise CyclicQuiver("quiver has an oriented cycle")
    return tuple(order)


def validate_quiver(Q: Quiver) -> Tuple[int, ...]:
    """Return a topological vertex order; raise CyclicQuiver otherwise."""
    return _topological_order(Q.r)


def dim(d: DimVector) -> int:
    return sum(d)


def is_zero(d: DimVector) -> bool:
    return not any(d)


def dv_add(d: DimVector, e: DimVector) -> DimVector:
    return tuple(a + b for a, b in zip(d, e))


def dv_sub(d: DimVector, e: DimVector) -> DimVector:
    return tuple(a - b for a, b in zip(d, e))


def dv_leq(d: DimVector, e: DimVector) -> bool:
    return all(a <= b for a, b in zip(d, e))


def support(d: DimVector):
    return [i for i, x in enumerate(d) if x]


def euler_form(Q: Quiver, d: DimVector, e: DimVector) -> int:
    """<d, e> = sum_i d_i e_i - sum_{i,j} r_ij d_i e_j."""
    val = sum(a * b for a, b in zip(d, e))
    for i, j, c in Q.arrows():
        val -= c * d[i] * e[j]
    return val


def slope(S: StabilityData, d: DimVector) -> Fraction:
    total = dim(d)
    if total == 0:
        raise ZeroDimVector("slope of the zero dimension vector")
    return Fraction(S(d), total)


def is_coprime(S: StabilityData, d: DimVector) -> bool:
    total = dim(d)
    if total == 0:
        raise ZeroDimVector("coprimality of the zero dimension vector")
    return gcd(abs(S(d)), total) == 1


def moduli_dimension(Q: Quiver, d: DimVector) -> int:
    if is_zero(d):
        raise ZeroDimVector("moduli dimension of the zero dimension vector")
    return 1 - euler_form(Q, d, d)


def r_exponent(Q: Quiver, d: DimVector) -> int:
    return sum(c * d[i] * d[j] for i, j, c in Q.arrows())


@lru_cache(maxsize=None)
def _gl_factors(n: int) -> PolyQ:
    """prod_{k=1}^{n} (q^k - 1)."""
    out = PolyQ.constant(1)
    for k in range(1, n + 1):
        out = out * (PolyQ.monomial(k) - 1)
    return out


def gl_order(n: int) -> PolyQ:
    """|GL_n(F_q)| = q^{n(n-1)/2} prod_{k=1}^{n} (q^k - 1)."""
    return _gl_factors(n).shift(n * (n - 1) // 2)


def count_R(Q: Quiver, d: DimVector) -> RationalFunctionQ:
    return RationalFunctionQ.monomial(r_exponent(Q, d))


def count_G(Q: Quiver, d: DimVector) -> RationalFunctionQ:
    out = PolyQ.constant(1)
    for x in d:
        if x:
            out = out * gl_order(x)
    return RationalFunctionQ.from_poly(out)


@lru_cache(maxsize=None)
def _r_over_g(r, d: DimVector) -> RationalFunctionQ:
    a = sum(r[i][j] * d[i] * d[j] for i in range(len(d)) for j in range(len(d)))
    a -= sum(x * (x - 1) // 2 for x in d)
    den = PolyQ.constant(1)
    for x in sorted(d):
        if x:
            den = den * _gl_factors(x)
    # q^a and a product of (q^k - 1) are coprime, so no gcd is needed
    if a >= 0:
        return RationalFunctionQ._raw(PolyQ.monomial(a).coeffs, den.coeffs)
    return RationalFunctionQ._raw((1,), den.shift(-a).coeffs)


def r_over_g(Q: Quiver, d: DimVector) -> RationalFunctionQ:
    """count_R(d) / count_G(d), built directly in reduced form."""
    return _r_over_g(Q.r, tuple(d))
