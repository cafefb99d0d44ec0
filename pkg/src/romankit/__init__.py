"""Generalized factorials and binomial coefficients in exact arithmetic."""
from .coefficients import (
    GAMMA,
    binomial_extended,
    gamma_coeff,
    knuth_coeff,
    lower_factorial,
    parse_scheme,
    roman_coeff,
    scheme_coeff,
)
from .cube import level_resistance, resistance_direct, resistance_via_roman
from .errors import DivergenceError, DomainError, PoleError, RangeError, RomanKitError
from .factorials import (
    KNUTH,
    ROMAN,
    TRIVIAL,
    FactorialScheme,
    knuth_factorial,
    q_bracket,
    q_factorial,
    q_scheme,
    roman_bracket,
    roman_factorial,
    roman_factorial_real,
)
from .multinomial import MultiIndex, multinomial_gamma, multinomial_knuth, multinomial_roman
from .numerics import EpsLaurent, parse_eps, parse_rational, render
from .regions import Region, classify_region, region_all_forms, region_closed_form

__version__ = "0.1.0"
