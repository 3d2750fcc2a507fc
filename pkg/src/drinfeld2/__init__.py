"""Exact arithmetic for a rank-one Drinfeld module over F2[x,y]/(y^2+y = x^3+x+1).

The package computes, with no floating point anywhere:

* the coordinate ring A and its fraction field K (``curvering``),
* the twisted polynomial ring K{tau} with tau*c = c^2*tau (``twisted``),
* the module generators and the images rho_a by three routes (``drinfeld``),
* exponential/logarithm coefficient recursions (``series``),
* the additive vanishing polynomials e_k, the degree products D_k, and
  the identities tying d_k, l_k and D_k together (``ekpoly``),
* a Carlitz-module baseline over F2[t] (``carlitz``),
* a command-line front-end (``cli``).
"""

from .errors import ExactnessError, VerificationError
from .f2poly import NEG_INF, BinaryPoly
from .curvering import (
    AElem,
    KElem,
    bracket_x,
    degree_basis,
    elements_below,
    elements_of_degree,
    parse_a,
    parse_k,
    t_elem,
)
from .twisted import TwistedPoly
from .drinfeld import (
    DrinfeldGenerators,
    derive_generators,
    rho_agreement_table,
    rho_from_commutation,
    rho_from_generators,
)
from .series import (
    QSeries,
    compose_scaled,
    exp_denominators,
    exp_series,
    log_denominators,
    log_series,
    rho_coefficient_poly,
    scale_series,
)
from .ekpoly import (
    AddPoly,
    OneBasisPoly,
    bracket_to_power,
    bracket_w,
    degree_product,
    division_identity_check,
    power_coeffs,
    power_to_bracket,
    product_formula_table,
    twisted_symmetric_sum,
    bracket_coeffs,
    vanishing_poly,
    vanishing_poly_product,
)

__all__ = [
    "AElem",
    "AddPoly",
    "BinaryPoly",
    "DrinfeldGenerators",
    "ExactnessError",
    "KElem",
    "NEG_INF",
    "OneBasisPoly",
    "QSeries",
    "TwistedPoly",
    "VerificationError",
    "bracket_coeffs",
    "bracket_to_power",
    "bracket_w",
    "bracket_x",
    "compose_scaled",
    "degree_basis",
    "degree_product",
    "derive_generators",
    "division_identity_check",
    "elements_below",
    "elements_of_degree",
    "exp_denominators",
    "exp_series",
    "log_denominators",
    "log_series",
    "parse_a",
    "parse_k",
    "power_coeffs",
    "power_to_bracket",
    "product_formula_table",
    "rho_agreement_table",
    "rho_coefficient_poly",
    "rho_from_commutation",
    "rho_from_generators",
    "scale_series",
    "t_elem",
    "twisted_symmetric_sum",
    "vanishing_poly",
    "vanishing_poly_product",
]
