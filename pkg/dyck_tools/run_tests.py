import sys
import unittest

from dyck_tools.cli.cli_test import CliTest
from dyck_tools.cli.config_test import ConfigTest
from dyck_tools.euler_core.euler_core_test import EulerCoreTest
from dyck_tools.logger.logger_test import LoggerTest
from dyck_tools.math_tools.exact_test import ExactTest
from dyck_tools.math_tools.polynomial_test import DensePolynomialTest
from dyck_tools.math_tools.series_test import TruncatedSeriesTest
from dyck_tools.oracle.oracle_test import OracleTest
from dyck_tools.path_formulas.path_formulas_test import PathFormulasTest
from dyck_tools.polyseq.polyseq_test import PolyseqTest
from dyck_tools.recurrence_tables.count_table_test import CountTableTest
from dyck_tools.recurrence_tables.printed_tables_test import PrintedTablesTest
from dyck_tools.recurrence_tables.recurrence_tables_test import RecurrenceTablesTest
from dyck_tools.series_engine.series_engine_test import SeriesEngineTest
from dyck_tools.verify.report_test import VerificationReportTest
from dyck_tools.verify.suites_test import SuitesTest

CASES = [
    LoggerTest,
    ExactTest,
    DensePolynomialTest,
    TruncatedSeriesTest,
    VerificationReportTest,
    EulerCoreTest,
    PathFormulasTest,
    CountTableTest,
    RecurrenceTablesTest,
    PrintedTablesTest,
    PolyseqTest,
    SeriesEngineTest,
    OracleTest,
    SuitesTest,
    ConfigTest,
    CliTest,
]

loader = unittest.TestLoader()
suite = unittest.TestSuite()

for case in CASES:
    suite.addTests(loader.loadTestsFromTestCase(case))

if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    result = runner.run(suite)
    sys.exit(0 if result.wasSuccessful() else 1)
