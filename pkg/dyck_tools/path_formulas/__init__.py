from .path_formulas import (ballot_avoid_east, ballot_avoid_north, sheffer_q,
                            dyck_avoid_down, dyck_avoid_up)
from .path_constants import (Direction, Boundary, BallotPoint, DyckPoint, RunRestriction,
                             dyck_to_ballot, ballot_to_dyck)
