"""Brute-force counts by walking the paths one step at a time.

Nothing here calls a closed form or a recurrence table; the walks only
know the step set, the boundary and the run restriction.
"""
from collections import namedtuple
from enum import Enum
from functools import lru_cache

from dyck_tools.logger import custom_logger
from dyck_tools.path_formulas.path_constants import (Direction, Boundary, BallotPoint, DyckPoint,
                                                     RunRestriction)

logger = custom_logger(__name__)

MAX_STEPS = 26
MAX_PARTS = 16
MAX_MOTZKIN = 24

# Error Strings
TOO_LARGE = '{0} needs {1} steps, the brute-force limit is {2}'
BAD_RUN = 'run bound must be an integer >= 1, got {0}'
BAD_TARGET = 'target {0} is not a point for the {1} boundary'
BAD_PARITY = 'Dyck point ({0}, {1}) needs x and y of equal parity'
BAD_COUNT = '{0} must be a nonnegative integer, got {1}'

LETTERS = {
    Boundary.BALLOT: {Direction.EAST: 'E', Direction.NORTH: 'N'},
    Boundary.DYCK: {Direction.EAST: 'd', Direction.NORTH: 'u'},
}

# position is (east, north) for ballot walks and (x, height) for Dyck walks;
# run_length counts the trailing restricted steps
WalkState = namedtuple('WalkState', 'position run_direction run_length')


class CompositionSide(Enum):
    P = 'P'
    Q = 'Q'


def _check_count(name, value):
    if not isinstance(value, int) or value < 0:
        raise ValueError(BAD_COUNT.format(name, value))


def _restriction(restriction):
    direction, r = restriction
    if not isinstance(r, int) or r < 1:
        raise ValueError(BAD_RUN.format(r))
    return RunRestriction(Direction(direction), r)


def _target(target, boundary):
    """Validated target in the native coordinates of the boundary, or None
    when no path can end there"""
    boundary = Boundary(boundary)
    if boundary is Boundary.DYCK:
        if isinstance(target, BallotPoint):
            raise ValueError(BAD_TARGET.format(target, boundary.value))
        x, y = target
        _check_count('x', x)
        if (x - y) % 2:
            raise ValueError(BAD_PARITY.format(x, y))
        steps, reachable = x, 0 <= y <= x
    else:
        if isinstance(target, DyckPoint):
            raise ValueError(BAD_TARGET.format(target, boundary.value))
        n, m = target
        _check_count('n', n)
        _check_count('m', m)
        steps, reachable = n + m, n <= m
    if steps > MAX_STEPS:
        raise ValueError(TOO_LARGE.format(target, steps, MAX_STEPS))
    return tuple(target) if reachable else None


def _moves(position, target, boundary):
    """(step, position) pairs that stay on or above the boundary and can
    still reach the target, east/down before north/up"""
    if boundary is Boundary.DYCK:
        # position is (x, height)
        x, height = position
        goal_x, goal_y = target
        moves = []
        for step, rise in ((Direction.DOWN, -1), (Direction.UP, 1)):
            after = (x + 1, height + rise)
            if after[1] >= 0 and abs(goal_y - after[1]) <= goal_x - after[0]:
                moves.append((step, after))
        return moves

    # position is (east, north)
    east, north = position
    n, m = target
    moves = []
    if east < n and east < north:
        moves.append((Direction.EAST, (east + 1, north)))
    if north < m:
        moves.append((Direction.NORTH, (east, north + 1)))
    return moves


def _advance(state, step, position, restriction):
    """The state after one step, or None when it completes a forbidden run"""
    if step is restriction.direction:
        run = state.run_length + 1
        if run >= restriction.r:
            return None
        return WalkState(position, step, run)
    return WalkState(position, None, 0)


def brute_force_count(target, restriction, boundary=Boundary.BALLOT):
    """Paths to target that stay above the boundary and never take
    restriction.r consecutive steps in restriction.direction"""
    boundary = Boundary(boundary)
    goal = _target(target, boundary)
    restriction = _restriction(restriction)
    if goal is None:
        return 0
    logger.debug('brute force %s %s to %s', boundary.value, restriction, target)

    @lru_cache(maxsize=None)
    def completions(state):
        if state.position == goal:
            return 1
        total = 0
        for step, position in _moves(state.position, goal, boundary):
            following = _advance(state, step, position, restriction)
            if following is not None:
                total += completions(following)
        return total

    return completions(WalkState((0, 0), None, 0))


def enumerate_paths(target, restriction, boundary=Boundary.BALLOT):
    """Yield every admissible path to target as a word, E/N for ballot
    paths and d/u for Dyck paths, in lexicographic order of the steps"""
    boundary = Boundary(boundary)
    goal = _target(target, boundary)
    restriction = _restriction(restriction)
    if goal is None:
        return
    letters = LETTERS[boundary]

    def walk(state, word):
        if state.position == goal:
            yield ''.join(word)
            return
        for step, position in _moves(state.position, goal, boundary):
            following = _advance(state, step, position, restriction)
            if following is not None:
                word.append(letters[step])
                for path in walk(following, word):
                    yield path
                word.pop()

    for path in walk(WalkState((0, 0), None, 0), []):
        yield path


def count_restricted_compositions(c, n, alpha, side):
    """P_n^alpha or Q_n^alpha: compositions into n parts from {0, ..., c + 1}

    P sums to cn - alpha with every proper prefix of k parts at most ck,
    Q sums to n + alpha with every proper prefix at most k + alpha.
    """
    if not isinstance(c, int) or c < 1:
        raise ValueError('c must be an integer >= 1, got {0}'.format(c))
    _check_count('n', n)
    _check_count('alpha', alpha)
    side = CompositionSide(side)
    if n > MAX_PARTS:
        raise ValueError(TOO_LARGE.format('composition', n, MAX_PARTS))

    if side is CompositionSide.P:
        total = c * n - alpha

        def bound(k):
            return c * k
    else:
        total = n + alpha

        def bound(k):
            return k + alpha
    if total < 0:
        return 0
    logger.debug('compositions side %s, c=%s n=%s alpha=%s', side.value, c, n, alpha)

    @lru_cache(maxsize=None)
    def count(k, partial):
        # k parts placed so far, summing to partial
        if k == n:
            return 1 if partial == total else 0
        if k > 0 and partial > bound(k):
            return 0
        return sum(count(k + 1, partial + part) for part in range(c + 2))

    return count(0, 0)


def motzkin_peakless_bruteforce(n):
    """Motzkin paths of length n that never take uu or ud"""
    _check_count('n', n)
    if n > MAX_MOTZKIN:
        raise ValueError(TOO_LARGE.format('Motzkin path', n, MAX_MOTZKIN))

    @lru_cache(maxsize=None)
    def completions(i, height, after_up):
        if height < 0 or height > n - i:
            return 0
        if i == n:
            return 1 if height == 0 else 0
        total = completions(i + 1, height, False)
        if not after_up:
            total += completions(i + 1, height + 1, True)
            total += completions(i + 1, height - 1, False)
        return total

    return completions(0, 0, False)
