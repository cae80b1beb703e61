from collections import OrderedDict, namedtuple

from dyck_tools.logger import custom_logger
from dyck_tools.math_tools.exact import is_exact, exact_json

logger = custom_logger(__name__)

VERIFIED = 'verified'
REFUTED = 'refuted'

CheckResult = namedtuple('CheckResult', 'identity arguments expected actual passed whitelisted')


def _jsonable(value):
    if is_exact(value):
        return exact_json(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if value is None or isinstance(value, (bool, str)):
        return value
    return str(value)


class VerificationReport(object):
    """Every identity instance checked, with pass/fail and its arguments.

    A failed instance is a finding, not a fault: it is recorded (and
    logged) and the caller decides what it means.  Whitelisted instances
    are known errata of printed data; they are kept apart from failures.
    """
    def __init__(self, name):
        self._name = name
        self._results = []
        self._notes = []

    @property
    def name(self):
        return self._name

    @property
    def results(self):
        return tuple(self._results)

    @property
    def checked(self):
        return len(self._results)

    @property
    def failures(self):
        return [res for res in self._results if not res.passed and not res.whitelisted]

    @property
    def errata(self):
        return [res for res in self._results if not res.passed and res.whitelisted]

    @property
    def notes(self):
        return tuple(self._notes)

    @property
    def passed(self):
        return not self.failures

    @property
    def status(self):
        return VERIFIED if self.passed else REFUTED

    def record(self, identity, arguments, expected, actual, whitelisted=False):
        """Compare expected and actual exactly and keep the instance"""
        passed = expected == actual
        self._results.append(CheckResult(identity, OrderedDict(arguments), expected,
                                         actual, passed, whitelisted))
        if not passed and not whitelisted:
            logger.warning('%s: %s failed at %s (expected %s, got %s)',
                           self._name, identity, dict(arguments), expected, actual)
        return passed

    def note(self, text):
        self._notes.append(text)

    def extend(self, other):
        """Merge the instances and notes of another report into this one"""
        self._results.extend(other.results)
        self._notes.extend(other.notes)
        return self

    def by_identity(self):
        """identity -> (checked, failed, whitelisted) in first-seen order"""
        counts = OrderedDict()
        for res in self._results:
            checked, failed, errata = counts.get(res.identity, (0, 0, 0))
            if not res.passed:
                if res.whitelisted:
                    errata += 1
                else:
                    failed += 1
            counts[res.identity] = (checked + 1, failed, errata)
        return counts

    def _result_json(self, res):
        return OrderedDict([
            ('identity', res.identity),
            ('arguments', OrderedDict((k, _jsonable(v)) for k, v in res.arguments.items())),
            ('expected', _jsonable(res.expected)),
            ('actual', _jsonable(res.actual)),
            ('passed', res.passed),
        ])

    def to_json(self, include_instances=False):
        data = OrderedDict([
            ('name', self._name),
            ('status', self.status),
            ('checked', self.checked),
            ('identities', OrderedDict(
                (name, OrderedDict([('checked', c), ('failed', f), ('whitelisted', w)]))
                for name, (c, f, w) in self.by_identity().items())),
            ('failures', [self._result_json(res) for res in self.failures]),
            ('errata', [self._result_json(res) for res in self.errata]),
            ('notes', list(self._notes)),
        ])
        if include_instances:
            data['instances'] = [self._result_json(res) for res in self._results]
        return data
