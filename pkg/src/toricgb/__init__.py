"""Groebner bases of toric ideals of monomial curves from almost arithmetic sequences."""

from .closedform import G, PATIL, PATIL_SINGH, build_generators, check_conditions
from .groebner import buchberger, interreduce, is_groebner, normal_form, s_polynomial
from .polycore import ASC, DESC, Binomial, MonomialOrder, make_binomial
from .semigroup import compute_params, validate_input
from .verify import cross_check, verify_variant

__version__ = "0.1.0"
