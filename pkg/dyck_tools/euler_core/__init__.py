from .euler_core import (general_binomial, euler_coeff, euler_or_zero, euler_row,
                         catalan, euler_table, verify_euler_identities)
