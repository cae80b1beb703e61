from .oracle import (WalkState, CompositionSide, brute_force_count, enumerate_paths,
                     count_restricted_compositions, motzkin_peakless_bruteforce, MAX_STEPS)
