from .count_table import CountTable, TableKind
from .recurrence_tables import (build_s_table, build_t_table, build_tprime_table, build_p_table,
                                build_q_table, build_dyck_table)
from .printed_tables import PRINTED_TABLES, ERRATA, load_printed_table, printed_check
