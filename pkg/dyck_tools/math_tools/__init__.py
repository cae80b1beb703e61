from .polynomial import DensePolynomial
from .series import TruncatedSeries
from .exact import as_integer, exact_json, rational_sqrt
