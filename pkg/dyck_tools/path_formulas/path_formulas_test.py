import unittest

from dyck_tools.euler_core import catalan, general_binomial
from dyck_tools.path_formulas import (ballot_avoid_east, ballot_avoid_north, sheffer_q,
                                      dyck_avoid_down, dyck_avoid_up, dyck_to_ballot,
                                      ballot_to_dyck, BallotPoint, DyckPoint)

# printed r = 4 diagonal s_n(n), the Dyck paths to (2n, 0)
DIAGONAL = [1, 1, 2, 5, 13, 36, 104, 309]

# printed s-table row m = -1, n = 0..8
S_ROW_MINUS_1 = [1, -1, -1, -1, 3, -1, -1, -1, 3]


class PathFormulasTest(unittest.TestCase):

    ########## avoiding east runs ##########

    def test_east_printed(self):
        """Cells of the printed s-table"""
        self.assertEqual(ballot_avoid_east(4, 4, 4), 13)
        self.assertEqual(ballot_avoid_east(2, 7, 4), 27)

    def test_east_extension(self):
        """Polynomial extension below the diagonal"""
        self.assertEqual(ballot_avoid_east(6, 4, 4), -27)

    def test_east_root(self):
        """s_n(n - 1) = 0 for n > 0"""
        for n in range(1, 10):
            self.assertEqual(ballot_avoid_east(n, n - 1, 4), 0)

    def test_east_singular_row(self):
        """m = -1 falls back to the polynomial"""
        self.assertEqual([ballot_avoid_east(n, -1, 4) for n in range(9)], S_ROW_MINUS_1)

    def test_east_diagonal(self):
        """Diagonal gives the Dyck paths to (2n, 0)"""
        self.assertEqual([ballot_avoid_east(n, n, 4) for n in range(8)], DIAGONAL)

    def test_east_saturation(self):
        """r > n leaves the Catalan numbers"""
        for n in range(8):
            for r in range(max(2, n + 1), n + 4):
                self.assertEqual(ballot_avoid_east(n, n, r), catalan(n))

    def test_east_ballot_numbers(self):
        """r = 2 gives (m - n + 1)/(m + 1) binom(m + 1, n)"""
        for m in range(8):
            for n in range(m + 1):
                expected = general_binomial(m + 1, n) * (m - n + 1) / (m + 1)
                self.assertEqual(ballot_avoid_east(n, m, 2), expected)

    def test_east_bad_args(self):
        """r < 2 and n < 0 are refused"""
        self.assertRaises(ValueError, ballot_avoid_east, 2, 3, 1)
        self.assertRaises(ValueError, ballot_avoid_east, -1, 3, 4)

    ########## avoiding north runs ##########

    def test_north_printed(self):
        """Cells of the printed t-table"""
        self.assertEqual(ballot_avoid_north(2, 5, 4), 10)
        self.assertEqual(ballot_avoid_north(3, 9, 4), 19)
        self.assertEqual(ballot_avoid_north(3, 5, 4), 23)
        self.assertEqual(ballot_avoid_north(7, 8, 4), 939)

    def test_north_diagonal(self):
        """Diagonal agrees with the east count"""
        self.assertEqual(ballot_avoid_north(6, 6, 4), 104)
        for n in range(8):
            for r in (2, 3, 5):
                self.assertEqual(ballot_avoid_north(n, n, r), ballot_avoid_east(n, n, r))

    def test_north_last_path(self):
        """A single path reaches (n - 1, (r - 1) n)"""
        for r in (2, 3, 4, 5):
            for n in range(1, 6):
                self.assertEqual(ballot_avoid_north(n - 1, (r - 1) * n, r), 1)

    def test_north_unreachable(self):
        """Past (r - 1)(n + 1) north steps nothing is left"""
        self.assertEqual(ballot_avoid_north(2, 10, 4), 0)
        self.assertEqual(ballot_avoid_north(0, 4, 4), 0)

    def test_north_first_column(self):
        """t_0(m) = 1 for m < r"""
        self.assertEqual([ballot_avoid_north(0, m, 4) for m in range(4)], [1, 1, 1, 1])

    def test_north_below_diagonal(self):
        """m < n is a usage error"""
        self.assertRaises(ValueError, ballot_avoid_north, 3, 2, 4)

    ########## q family ##########

    def test_q_printed(self):
        """Cells of the printed q-table, alpha = 2"""
        self.assertEqual(sheffer_q(7, 5, 2, 4), 101)
        self.assertEqual(sheffer_q(2, 2, 2, 4), 3)
        self.assertEqual(sheffer_q(5, 3, 2, 4), 10)
        self.assertEqual(sheffer_q(8, 6, 2, 4), 321)

    def test_q_extension(self):
        """Extension region of the printed q-table"""
        self.assertEqual(sheffer_q(8, 4, 2, 4), -70)

    def test_q_roots(self):
        """q_n(n - alpha - 1) = 0 for n > alpha"""
        for alpha in range(4):
            for n in range(alpha + 1, alpha + 8):
                self.assertEqual(sheffer_q(n, n - alpha - 1, alpha, 4), 0)

    def test_q_initial_values(self):
        """q_n(0) = delta_{n,0} for n <= alpha"""
        self.assertEqual([sheffer_q(n, 0, 3, 4) for n in range(4)], [1, 0, 0, 0])

    def test_q_singular(self):
        """Singular arguments are read off the polynomial"""
        self.assertEqual([sheffer_q(n, -1, 2, 4) for n in range(5)], [1, -1, 0, 0, 1])

    ########## Dyck paths ##########

    def test_transforms(self):
        """Coordinate transforms are inverse to each other"""
        self.assertEqual(dyck_to_ballot(DyckPoint(13, 7)), BallotPoint(3, 10))
        self.assertEqual(ballot_to_dyck(BallotPoint(3, 10)), DyckPoint(13, 7))

    def test_down_printed(self):
        """Cells of the printed dddd table"""
        self.assertEqual(dyck_avoid_down(13, 7, 4), 208)
        self.assertEqual(dyck_avoid_down(12, 0, 4), 104)
        self.assertEqual(dyck_avoid_down(12, 4, 4), 270)
        self.assertEqual(dyck_avoid_down(0, 0, 4), 1)

    def test_up_printed(self):
        """Cells of the printed uuuu table"""
        self.assertEqual(dyck_avoid_up(13, 7, 4), 10)
        self.assertEqual(dyck_avoid_up(11, 7, 4), 1)
        self.assertEqual(dyck_avoid_up(12, 0, 4), 104)
        self.assertEqual(dyck_avoid_up(0, 0, 4), 1)

    def test_up_axis(self):
        """On the axis both patterns give the same count"""
        for x in range(0, 16, 2):
            self.assertEqual(dyck_avoid_up(x, 0, 3), dyck_avoid_down(x, 0, 3))

    def test_dyck_usage(self):
        """Parity and cone violations are usage errors"""
        self.assertRaises(ValueError, dyck_avoid_down, 1, 0, 4)
        self.assertRaises(ValueError, dyck_avoid_up, 1, 0, 4)
        self.assertRaises(ValueError, dyck_avoid_down, 2, 4, 4)
        self.assertRaises(ValueError, dyck_avoid_down, 2, -2, 4)


if __name__ == '__main__':
    unittest.main()
