"""Weight combinatorics and characters of sheaf cohomology for Q(n) and GL(n|n)."""
from .root_data import (Kind, RootDatum, SuperType, Weight, WeylElement, act, build_root_datum,
                        dominant_rep_dot, dot_act, pairing, parse_word, reduced_word, root_datum,
                        weyl_elements)
from .char_ring import Character, LaurentPoly, bbw_even, euler_chi, weyl_character
from .super_comb import exterior_weights, f_module, is_distinct_negative_sum, poincare_polynomial
from .regions import (in_omega_w, is_generic, is_very_dominant, omega_w_inequalities,
                      very_dominant_bound)
from .coh_engine import (classify_weight, euler_character, gamma_multiset, generic_cohomology,
                         h1_socle_report, kempf_character, q2_h0_analysis, q2_h1_character,
                         q2_simple_character)

__all__ = [
    "Kind", "RootDatum", "SuperType", "Weight", "WeylElement", "act", "build_root_datum",
    "dominant_rep_dot", "dot_act", "pairing", "parse_word", "reduced_word", "root_datum",
    "weyl_elements",
    "Character", "LaurentPoly", "bbw_even", "euler_chi", "weyl_character",
    "exterior_weights", "f_module", "is_distinct_negative_sum", "poincare_polynomial",
    "in_omega_w", "is_generic", "is_very_dominant", "omega_w_inequalities", "very_dominant_bound",
    "classify_weight", "euler_character", "gamma_multiset", "generic_cohomology",
    "h1_socle_report", "kempf_character", "q2_h0_analysis", "q2_h1_character",
    "q2_simple_character",
]

__version__ = "0.1.0"
