"""Polynomial rings, Gröbner bases and syzygies."""

from .groebner import (GroebnerBasis, buchberger, coefficients_wrt, ideal_membership, reduce,
                       s_polynomial, split_coefficients, syzygy_basis)
from .modgb import BudgetExceeded, ModuleGB, pair_budget, set_pair_budget
from .polynomial import ORDERS, Polynomial, PolynomialRing
from .span import RowSpan
