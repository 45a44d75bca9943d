"""Pairs of 10x10 matrices with identical pseudospectra and simultaneously
large ratios ``||f(A)|| / ||f(B)||`` and ``||g(A)|| / ||g(B)||``."""

from .algebra import Poly, cauchy_root_bound, poly_divmod, poly_eval, poly_gcd_degree, poly_rem
from .chain import ChainValues, ClearedChain, chain_cleared, chain_numeric, leading_audit, p1_p2
from .conditions import (DerivJet, h_tilde, p_poly, powers_identity_checks, q_poly, r_poly,
                         s_poly, schwarzian_bracket, star_identity_residual, star_value)
from .construct import (ConstructionInput, CounterexamplePair, assemble_pair, build_pair,
                        chain_audit, choose_u, mu_lower_bound, solve_c_system, t_search)
from .nilpotent import (CtParams, Jet, ShiftPoly, ct_build, materialize, polynomial_jet,
                        power_jet, resolvent_neumann, series_apply)
from .spectral import (GridSpec, kreiss_sanity, lemma_lower_bound_check, norm_comparison_check,
                       operator_norm, pseudospectra_equal_sampled, pseudospectrum_grid,
                       resolvent_norm)

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "cauchy_root_bound",
    "poly_divmod",
    "poly_eval",
    "poly_gcd_degree",
    "poly_rem",
    "ChainValues",
    "ClearedChain",
    "chain_cleared",
    "chain_numeric",
    "leading_audit",
    "p1_p2",
    "DerivJet",
    "h_tilde",
    "p_poly",
    "powers_identity_checks",
    "q_poly",
    "r_poly",
    "s_poly",
    "schwarzian_bracket",
    "star_identity_residual",
    "star_value",
    "ConstructionInput",
    "CounterexamplePair",
    "assemble_pair",
    "build_pair",
    "chain_audit",
    "choose_u",
    "mu_lower_bound",
    "solve_c_system",
    "t_search",
    "CtParams",
    "Jet",
    "ShiftPoly",
    "ct_build",
    "materialize",
    "polynomial_jet",
    "power_jet",
    "resolvent_neumann",
    "series_apply",
    "GridSpec",
    "kreiss_sanity",
    "lemma_lower_bound_check",
    "norm_comparison_check",
    "operator_norm",
    "pseudospectra_equal_sampled",
    "pseudospectrum_grid",
    "resolvent_norm",
]
