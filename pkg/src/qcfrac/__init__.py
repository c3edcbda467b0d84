"""Exact truncated q-series, theta products, q-continued fractions and the
identities, partition theorems and dissections built on them."""

__version__ = "0.1.0"

from .errors import (DissectionError, DivergentProductError, EmptyWindowError, GridError,
                     NonInvertibleError, QSeriesError, TruncationError)
from .series import LaurentSeries, from_coefficients, make_monomial, one, zero
from .theta import SignedMonomial, chi, f_neg, mono, phi, pochhammer, pochhammer_multi, psi, \
    theta_product, theta_sum
from .cfrac import CFSpec, auto_depth, convergent, named_cf, named_product
from .identities import CheckResult, IdentityCheck, SUITES, check, run

__all__ = [
    "__version__", "DissectionError", "DivergentProductError", "EmptyWindowError", "GridError",
    "NonInvertibleError", "QSeriesError", "TruncationError", "LaurentSeries", "from_coefficients",
    "make_monomial", "one", "zero", "SignedMonomial", "chi", "f_neg", "mono", "phi", "pochhammer",
    "pochhammer_multi", "psi", "theta_product", "theta_sum", "CFSpec", "auto_depth", "convergent",
    "named_cf", "named_product", "CheckResult", "IdentityCheck", "SUITES", "check", "run",
]
