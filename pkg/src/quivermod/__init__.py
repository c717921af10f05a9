"""Exact Betti numbers of quiver moduli via Harder-Narasimhan combinatorics."""

from .betti import (
    BettiResult,
    counting_series,
    ev_semistable_tm,
    euler_characteristic,
    lattice_points,
    poincare,
    poincare_interpolated,
    resolved_sum,
)
from .errors import (
    BudgetExceeded,
    CyclicQuiver,
    InvalidInput,
    NonPolynomial,
    NotCoprime,
    QuiverModError,
    ZeroDimVector,
)
from .hn import enumerate_hn_types, ev_semistable, hn_codim, is_semistable_dimvec
from .qseries import PolyQ, RationalFunctionQ, q_binomial, q_factorial, q_integer
from .quiver import Quiver, StabilityData, euler_form, is_coprime, moduli_dimension, slope

__version__ = "0.1.0"
