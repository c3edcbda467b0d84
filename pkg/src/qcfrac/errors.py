"""Exception types raised across the package."""


class QSeriesError(Exception):
    """Base class for every error raised by qcfrac."""


class EmptyWindowError(QSeriesError):
    pass


class TruncationError(QSeriesError):
    """A coefficient or precision was requested beyond the truncation order."""


class NonInvertibleError(QSeriesError, ZeroDivisionError):
    pass


class GridError(QSeriesError):
    """Operation undefined on the exponent grid of its operand."""


class DivergentProductError(QSeriesError):
    pass


class DissectionError(QSeriesError):
    pass
