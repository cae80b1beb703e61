"""Exact counts of lattice paths that avoid r consecutive equal steps."""
__version__ = '0.1.0'

from .logger import custom_logger
from .euler_core import euler_coeff, euler_table
from .path_formulas import (ballot_avoid_east, ballot_avoid_north, sheffer_q, dyck_avoid_down,
                            dyck_avoid_up)
from .polyseq import SequenceFamily, s_poly, p_poly, q_poly
from .series_engine import gen_func_down, conjecture_series
from .oracle import brute_force_count
