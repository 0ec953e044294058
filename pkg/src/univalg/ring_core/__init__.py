"""Exact rings, matrices and Smith-normal-form linear algebra."""

from .matrix import Matrix, block_diag, hstack, kron, vstack
from .rings import (EUCLIDEAN, FIELD, GF, GROEBNER, QQ, ZZ, CapabilityError, GFElement,
                    IntegerRing, PrimeField, RationalField, Ring, is_prime)
from .snf import (LinearSolution, SmithForm, gcd_bezout, smith_decomposition, smith_normal_form,
                  solve_linear)
