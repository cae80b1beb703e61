import unittest

from dyck_tools.euler_core import catalan
from dyck_tools.oracle import (CompositionSide, brute_force_count, enumerate_paths,
                               count_restricted_compositions, motzkin_peakless_bruteforce)
from dyck_tools.path_formulas import (Direction, Boundary, BallotPoint, DyckPoint, RunRestriction,
                                      ballot_avoid_east, ballot_avoid_north, dyck_avoid_down,
                                      dyck_avoid_up)
from dyck_tools.recurrence_tables import build_p_table, build_q_table

MOTZKIN_PEAKLESS = [1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212, 438, 910]

EAST_4 = RunRestriction(Direction.EAST, 4)
NORTH_4 = RunRestriction(Direction.NORTH, 4)


class OracleTest(unittest.TestCase):

    ########## paths ##########

    def test_catalan(self):
        """A run bound longer than the path changes nothing"""
        self.assertEqual(brute_force_count(BallotPoint(3, 3), RunRestriction(Direction.EAST, 10)), 5)
        for n in range(8):
            self.assertEqual(brute_force_count(BallotPoint(n, n), RunRestriction('north', 30)),
                             catalan(n))

    def test_printed_cells(self):
        """Cells of the printed tables by enumeration"""
        self.assertEqual(brute_force_count(DyckPoint(12, 0), RunRestriction(Direction.UP, 4),
                                           Boundary.DYCK), 104)
        self.assertEqual(brute_force_count(BallotPoint(2, 5), NORTH_4), 10)
        self.assertEqual(brute_force_count(DyckPoint(13, 7), RunRestriction(Direction.DOWN, 4),
                                           'dyck'), 208)
        self.assertEqual(brute_force_count(BallotPoint(7, 7), EAST_4), 309)

    def test_unreachable(self):
        """Targets below the boundary or out of reach have no paths"""
        self.assertEqual(brute_force_count(BallotPoint(3, 2), EAST_4), 0)
        self.assertEqual(brute_force_count(DyckPoint(2, 4), EAST_4, Boundary.DYCK), 0)
        self.assertEqual(brute_force_count(BallotPoint(0, 4), NORTH_4), 0)
        self.assertEqual(brute_force_count(BallotPoint(0, 0), NORTH_4), 1)

    def test_against_ballot_formulas(self):
        """Enumeration agrees with the closed forms"""
        for r in (2, 3, 4, 5):
            for n in range(7):
                for m in range(n, 13 - n):
                    point = BallotPoint(n, m)
                    self.assertEqual(brute_force_count(point, RunRestriction(Direction.EAST, r)),
                                     ballot_avoid_east(n, m, r))
                    self.assertEqual(brute_force_count(point, RunRestriction(Direction.NORTH, r)),
                                     ballot_avoid_north(n, m, r))

    def test_against_dyck_formulas(self):
        """Same in Dyck coordinates"""
        for r in (2, 3, 4):
            for x in range(13):
                for y in range(x % 2, x + 1, 2):
                    point = DyckPoint(x, y)
                    self.assertEqual(brute_force_count(point, RunRestriction(Direction.DOWN, r),
                                                       Boundary.DYCK),
                                     dyck_avoid_down(x, y, r))
                    self.assertEqual(brute_force_count(point, RunRestriction(Direction.UP, r),
                                                       Boundary.DYCK),
                                     dyck_avoid_up(x, y, r))

    def test_enumerate(self):
        """Explicit words, counted by the memoized walk"""
        self.assertEqual(list(enumerate_paths(BallotPoint(2, 2), RunRestriction('east', 5))),
                         ['NENE', 'NNEE'])
        self.assertEqual(list(enumerate_paths(BallotPoint(2, 2), RunRestriction('north', 2))),
                         ['NENE'])
        self.assertEqual(list(enumerate_paths(DyckPoint(4, 0), RunRestriction(Direction.DOWN, 2),
                                              Boundary.DYCK)), ['udud'])
        for n, m in ((3, 5), (4, 4), (2, 7)):
            words = list(enumerate_paths(BallotPoint(n, m), EAST_4))
            self.assertEqual(len(words), brute_force_count(BallotPoint(n, m), EAST_4))
            self.assertTrue(all('EEEE' not in word for word in words))

    def test_dyck_words(self):
        """Dyck words are walked as heights and never dip below zero"""
        self.assertEqual(list(enumerate_paths(DyckPoint(3, 1), RunRestriction(Direction.UP, 5),
                                              Boundary.DYCK)), ['udu', 'uud'])
        self.assertEqual(list(enumerate_paths(DyckPoint(3, 1), RunRestriction(Direction.UP, 2),
                                              Boundary.DYCK)), ['udu'])
        words = list(enumerate_paths(DyckPoint(10, 2), RunRestriction(Direction.DOWN, 3), Boundary.DYCK))
        self.assertEqual(len(words), brute_force_count(DyckPoint(10, 2), RunRestriction(Direction.DOWN, 3),
                                                       Boundary.DYCK))
        for word in words:
            heights = [word[:i].count('u') - word[:i].count('d') for i in range(1, len(word) + 1)]
            self.assertTrue(min(heights) >= 0)
            self.assertEqual(heights[-1], 2)
            self.assertTrue('ddd' not in word)

    def test_refusals(self):
        """Bad targets and oversized walks are refused"""
        self.assertRaises(ValueError, brute_force_count, DyckPoint(1, 0), EAST_4, Boundary.DYCK)
        self.assertRaises(ValueError, brute_force_count, BallotPoint(14, 14), EAST_4)
        self.assertRaises(ValueError, brute_force_count, BallotPoint(2, 2), RunRestriction('east', 0))
        self.assertRaises(ValueError, brute_force_count, BallotPoint(2, 2), EAST_4, Boundary.DYCK)
        self.assertRaises(ValueError, brute_force_count, BallotPoint(-1, 2), EAST_4)

    ########## compositions ##########

    def test_compositions(self):
        """Small cases"""
        self.assertEqual(count_restricted_compositions(2, 3, 1, CompositionSide.P), 8)
        self.assertEqual(count_restricted_compositions(2, 3, 1, 'Q'), 8)
        for c in (1, 2, 3):
            for side in CompositionSide:
                self.assertEqual(count_restricted_compositions(c, 0, 0, side), 1)
        self.assertEqual(count_restricted_compositions(2, 1, 3, 'P'), 0)

    def test_reflection(self):
        """P_n^alpha = Q_n^alpha"""
        for c in (1, 2, 3):
            for n in range(9):
                for alpha in range(min(c * n, 6) + 1):
                    self.assertEqual(count_restricted_compositions(c, n, alpha, 'P'),
                                     count_restricted_compositions(c, n, alpha, 'Q'))

    def test_compositions_against_tables(self):
        """P and Q are cells of the p- and q-tables"""
        for r in (3, 4, 5):
            c = r - 2
            p = build_p_table(c * 7, 7, r)
            for alpha in range(4):
                q = build_q_table(7 + alpha, 7, alpha, r)
                for n in range(-(-alpha // c), 8):
                    self.assertEqual(count_restricted_compositions(c, n, alpha, 'P'),
                                     p.cell(c * n - alpha, n))
                    self.assertEqual(count_restricted_compositions(c, n, alpha, 'Q'),
                                     q.cell(n + alpha, n))

    ########## Motzkin ##########

    def test_motzkin_peakless(self):
        """Printed sequence"""
        self.assertEqual([motzkin_peakless_bruteforce(n) for n in range(13)], MOTZKIN_PEAKLESS)
        self.assertRaises(ValueError, motzkin_peakless_bruteforce, 25)


if __name__ == '__main__':
    unittest.main()
