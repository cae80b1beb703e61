from collections import namedtuple
from enum import Enum

# Error Strings
BAD_R = 'run bound r must be an integer >= 2, got {0}'
BAD_N = 'n must be a nonnegative integer, got {0}'
BAD_ALPHA = 'alpha must be a nonnegative integer, got {0}'
BELOW_DIAGONAL = 'ballot point ({0}, {1}) needs m >= n'
BAD_PARITY = 'Dyck point ({0}, {1}) needs x and y of equal parity'
OUT_OF_CONE = 'Dyck point ({0}, {1}) needs 0 <= y <= x'

# Fallback Strings
SINGULAR_S = 's_{0}({1}) is singular in quotient form, evaluating the polynomial'
SINGULAR_Q = 'q_{0}({1};{2}) is singular in quotient form, evaluating the polynomial'


class Direction(Enum):
    """Step direction of the forbidden run; Dyck down is ballot east"""
    EAST = 'east'
    NORTH = 'north'
    DOWN = 'east'
    UP = 'north'


class Boundary(Enum):
    BALLOT = 'ballot'
    DYCK = 'dyck'


# n east steps and m north steps
BallotPoint = namedtuple('BallotPoint', 'n m')

# x steps ending at height y
DyckPoint = namedtuple('DyckPoint', 'x y')

RunRestriction = namedtuple('RunRestriction', 'direction r')


def check_r(r):
    if not isinstance(r, int) or r < 2:
        raise ValueError(BAD_R.format(r))


def dyck_to_ballot(point):
    """Dyck (x, y) -> ballot ((x - y)/2, (x + y)/2); parity is checked, never rounded"""
    x, y = point
    if (x - y) % 2:
        raise ValueError(BAD_PARITY.format(x, y))
    if not 0 <= y <= x:
        raise ValueError(OUT_OF_CONE.format(x, y))

    return BallotPoint((x - y) // 2, (x + y) // 2)


def ballot_to_dyck(point):
    n, m = point
    return DyckPoint(n + m, m - n)
