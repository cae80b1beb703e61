from dyck_tools.math_tools import TruncatedSeries
from .series_engine import (sheffer_gf, gen_func_factor, gen_func_down, dyck_diagonal_series,
                            dyck_gf_functional_check, motzkin_peakless, conjecture_phi,
                            conjecture_series, conjecture_check)
