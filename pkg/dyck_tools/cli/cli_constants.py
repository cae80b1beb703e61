# Defaults
DEFAULT_R = 4
DEFAULT_ORDER = 64
DEFAULT_LOG_LEVEL = 'WARNING'
DEFAULT_ROWS = '0..8'
DEFAULT_COLS = '0..8'
DEFAULT_MAX_N = 12
DEFAULT_R_SET = '2,3,4,5'

# Environment
CONFIG_ENV = 'DYCK_TOOLS_CONFIG'
ORDER_ENV = 'DYCK_TOOLS_ORDER'
CONFIG_KEYS = ('r', 'order', 'log_level')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

# Record status
OK = 'ok'
VERIFIED = 'verified'
REFUTED = 'refuted'
USAGE_ERROR = 'usage-error'

# Exit codes
EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2

# Choices
BOUNDARIES = ('ballot', 'dyck')
PATTERNS = ('up', 'down')
TABLE_KINDS = ('s', 't', 'tprime', 'p', 'q', 'euler', 'dyck-up', 'dyck-down')
FORMATS = ('json', 'csv')
SERIES = ('down-gf', 'dyck-f', 'conjecture')
SUITES = ('identities', 'tables', 'bridge', 'oracle', 'conjecture', 'all')

# Error Strings
BAD_RANGE = 'range must read A..B with integers A <= B, got {0}'
BAD_R_SET = 'r-set must be a comma separated list of integers, got {0}'
BAD_LINE = '{0}:{1}: expected key=value, got {2!r}'
BAD_INT = '{0} must be an integer, got {1!r}'
BAD_LEVEL = 'log_level must be one of {0}, got {1!r}'
NO_CONFIG = 'config file {0} does not exist'
UNKNOWN_KEY = '{0}:{1}: ignoring unknown key {2!r}'
ORACLE_DOMAIN = '--oracle counts paths, which need m >= n; ({0}, {1}) is a polynomial extension cell'
