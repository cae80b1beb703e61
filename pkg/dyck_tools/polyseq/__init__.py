from .polyseq import (FamilyKind, SequenceFamily, discrete_antidifference, sheffer_family,
                      basic_poly, s_poly, p_poly, q_poly, family_poly, interpolate,
                      interpolated_family_check, sheffer_binomial_check, operator_identity_check,
                      row_sum_identity, abelization_check, integer_valued_check)
