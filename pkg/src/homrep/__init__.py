"""Complete homogeneous symmetric polynomials ``h_m(y^[kappa])`` and Schur
polynomials with repeated variables, by several independent routes."""

from .combinat import MultiplicityVector, binomial, expand_points, gamma, rho, weak_compositions
from .coeffs import coeff_A, coeff_B, coefficient_table, partial_fraction_monic, partial_fraction_unital
from .expansions import (
    ExpansionTable,
    expansion_polynomials,
    hom_rep_bialternant,
    hom_rep_expansion_A,
    hom_rep_expansion_B,
    schur_rep_bialternant,
)
from .homcore import hom_combinatorial, hom_recurrence, hom_rep_combinatorial
from .vandermonde import build_G, build_V, inverse_V_moucouf

__version__ = "0.1.0"
