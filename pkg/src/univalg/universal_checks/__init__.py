from .finite import (CheckResult, FiniteFunction, FiniteRelation, FiniteSet, Partition, QuotientCheck,
                     canonical_product, check_natural_type, check_pair_constructor, check_projections,
                     check_set_quotient, constructor_from_projections, equivalence_closure,
                     projections_from_constructor, quotient_set, structure_from_json)
from .naturals import (add, add_bits, bits_of, check_semiring_iso, from_binary, mul, mul_bits, render,
                       to_binary, value_of)

__all__ = [
    "CheckResult", "FiniteFunction", "FiniteRelation", "FiniteSet", "Partition", "QuotientCheck",
    "canonical_product", "check_natural_type", "check_pair_constructor", "check_projections",
    "check_set_quotient", "constructor_from_projections", "equivalence_closure",
    "projections_from_constructor", "quotient_set", "structure_from_json",
    "add", "add_bits", "bits_of", "check_semiring_iso", "from_binary", "mul", "mul_bits", "render",
    "to_binary", "value_of",
]
