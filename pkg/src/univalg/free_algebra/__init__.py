"""Free monoids and free groups, finite groups and their quotients, abelianization."""

from .finite import (AxiomError, FiniteGroup, FiniteMonoid, GroupHom, Quotient, congruence_closure,
                     cyclic_group, first_iso_check, is_congruence, normal_closure, quotient_group,
                     quotient_monoid, symmetric_group)
from .presentations import Abelianization, FpGroupPresentation, abelianization, describe_abelian
from .words import (exponent_sums, free_monoid_extend, inverse, is_reduced, multiply, parse_word,
                    power, reduce_word, render_word)

__all__ = [
    "AxiomError", "FiniteGroup", "FiniteMonoid", "GroupHom", "Quotient", "congruence_closure",
    "cyclic_group", "first_iso_check", "is_congruence", "normal_closure", "quotient_group",
    "quotient_monoid", "symmetric_group",
    "Abelianization", "FpGroupPresentation", "abelianization", "describe_abelian",
    "exponent_sums", "free_monoid_extend", "inverse", "is_reduced", "multiply", "parse_word",
    "power", "reduce_word", "render_word",
]
