"""
Continued fractions of Ramanujan's general Entry-12 shape

    (a^2 q^3; q^4)(b^2 q^3; q^4) / ((a^2 q; q^4)(b^2 q; q^4))
        = 1/(1 - ab + (a - bq)(b - aq)/((1 - ab)(q^2 + 1) + (a - bq^3)(b - aq^3)/(...)))

evaluated as exact truncated series, together with the named order-14
(S1, S2, S3) and order-28 (V1, V2, V3) instances and the Rogers-Ramanujan
fraction R(q).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional

from .errors import NonInvertibleError, QSeriesError
from .series import LaurentSeries, RationalLike, as_rational, one
from .theta import SignedMonomial, mono, pochhammer_multi, theta_sum

log = logging.getLogger(__name__)

NAMES = ("R", "S1", "S2", "S3", "V1", "V2", "V3")


@dataclass(frozen=True)
class NamedCF:
    prefactor: Fraction          # leading power of q
    num: tuple                   # f(-q^num[0], -q^num[1]) ...
    den: tuple                   # ... over f(-q^den[0], -q^den[1])
    entry12: Optional[tuple]     # (q_power, a exponent, b exponent); None for R


_NAMED = {
    "R": NamedCF(Fraction(1, 5), (1, 4), (2, 3), None),
    "S1": NamedCF(Fraction(1, 4), (3, 11), (4, 10), (Fraction(7, 2), Fraction(1, 4), Fraction(13, 4))),
    "S2": NamedCF(Fraction(3, 4), (2, 12), (5, 9), (Fraction(7, 2), Fraction(3, 4), Fraction(11, 4))),
    "S3": NamedCF(Fraction(5, 4), (1, 13), (6, 8), (Fraction(7, 2), Fraction(5, 4), Fraction(9, 4))),
    "V1": NamedCF(Fraction(3), (1, 27), (13, 15), (Fraction(7), Fraction(3), Fraction(4))),
    "V2": NamedCF(Fraction(2), (3, 25), (11, 17), (Fraction(7), Fraction(2), Fraction(5))),
    "V3": NamedCF(Fraction(1), (5, 23), (9, 19), (Fraction(7), Fraction(1), Fraction(6))),
}


@dataclass(frozen=True)
class CFSpec:
    """Either raw Entry-12 parameters (after q -> q^q_power) or a named fraction."""

    kind: str
    a: Optional[SignedMonomial] = None
    b: Optional[SignedMonomial] = None
    q_power: Fraction = Fraction(1)
    name: Optional[str] = None

    @classmethod
    def entry12(cls, a: SignedMonomial, b: SignedMonomial, q_power: RationalLike = 1) -> "CFSpec":
        q_power = as_rational(q_power)
        if q_power <= 0:
            raise ValueError("q_power must be positive")
        return cls("entry12", a, b, q_power)

    @classmethod
    def named(cls, name: str) -> "CFSpec":
        if name not in _NAMED:
            raise ValueError(f"unknown continued fraction {name!r}; expected one of {NAMES}")
        return cls("named", name=name)

    def as_entry12(self) -> Optional["CFSpec"]:
        """The raw Entry-12 parameters behind this spec (None for R)."""
        if self.kind == "entry12":
            return self
        data = _NAMED[self.name].entry12
        if data is None:
            return None
        p, ea, eb = data
        return CFSpec.entry12(mono(ea), mono(eb), p)

    def __str__(self):
        if self.kind == "named":
            return self.name
        return f"Entry12(a={self.a}, b={self.b}, q->q^{self.q_power})"


@dataclass
class ConvergentReport:
    depth_used: int
    stabilized: bool
    series: LaurentSeries


# -- Entry 12 ----------------------------------------------------------------

def _entry12_factors(spec: CFSpec):
    """Numerator and denominator first terms of the Entry-12 products, and their base."""
    p = spec.q_power
    a2, b2 = spec.a ** 2, spec.b ** 2
    num = (a2 * mono(3 * p), b2 * mono(3 * p))
    den = (a2 * mono(p), b2 * mono(p))
    return num, den, mono(4 * p)


def entry12_product(spec: CFSpec, order: RationalLike) -> LaurentSeries:
    """Left-hand product of Entry 12 for the given parameters."""
    spec = spec.as_entry12() if spec.kind == "named" else spec
    if spec is None:
        raise QSeriesError("R(q) is not an Entry-12 instance")
    num, den, base = _entry12_factors(spec)
    factors = [(m, base, 1) for m in num] + [(m, base, -1) for m in den]
    return pochhammer_multi(factors, order)


def _reduce(m: SignedMonomial, base: SignedMonomial):
    """Shift (m; base) down until its first exponent is at most base's.

    Returns the reduced first term and the exact polynomial P with
    (m; base) = (m'; base) / P.
    """
    poly = one()
    while m.sign and m.exp > base.exp:
        m = m / base
        poly = poly * (1 - m.series())
    return m, poly


def normalization(name: str):
    """Reduced Entry-12 first exponents and the polynomial ratio for a named S/V fraction.

    Returns ``(num_exps, den_exps, top, bottom)`` such that
    named product = q^prefactor * (top / bottom) * entry12_product.
    """
    spec = CFSpec.named(name).as_entry12()
    num, den, base = _entry12_factors(spec)
    top, bottom = one(), one()
    num_exps, den_exps = [], []
    for m in num:
        m2, poly = _reduce(m, base)
        num_exps.append(m2.exp)
        top = top * poly
    for m in den:
        m2, poly = _reduce(m, base)
        den_exps.append(m2.exp)
        bottom = bottom * poly
    return tuple(sorted(num_exps)), tuple(sorted(den_exps)), top, bottom


# -- convergents -------------------------------------------------------------

def _levels(spec: CFSpec):
    """(prefactor top, prefactor bottom, partial denominator D_k, partial numerator N_k).

    The fraction is (top/bottom) / (D_1 + N_1/(D_2 + N_2/(D_3 + ...))); top and
    bottom are exact Laurent polynomials.
    """
    if spec.kind == "named" and spec.name == "R":
        return (mono(Fraction(1, 5)).series(), one(),
                lambda k: one(),
                lambda k: mono(k).series())
    raw = spec.as_entry12()
    a, b, p = raw.a, raw.b, raw.q_power
    one_minus_ab = 1 - (a * b).series()
    aa, bb = a.series(), b.series()

    def denominator(k):
        if k == 1:
            return one_minus_ab
        return one_minus_ab * (1 + mono((2 * k - 2) * p).series())

    def numerator(k):
        Q = mono((2 * k - 1) * p).series()
        return (aa - bb * Q) * (bb - aa * Q)

    top, bottom = one(), one()
    if spec.kind == "named":
        _, _, top, bottom = normalization(spec.name)
        top = mono(_NAMED[spec.name].prefactor).series() * top
    return top, bottom, denominator, numerator


def convergent(spec: CFSpec, depth: int, order: RationalLike) -> LaurentSeries:
    """Evaluate the fraction truncated after ``depth`` partial quotients, bottom-up."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    order = as_rational(order)
    top, bottom, denominator, numerator = _levels(spec)
    target = order - (top.valuation or 0) + (bottom.valuation or 0)
    x = denominator(depth)
    for k in range(depth - 1, 0, -1):
        try:
            tail = x.inverse(order=target)
        except NonInvertibleError as exc:
            raise NonInvertibleError(f"level {k + 1}: {exc}") from exc
        x = denominator(k) + numerator(k) * tail
    try:
        value = x.inverse(order=target)
    except NonInvertibleError as exc:
        raise NonInvertibleError(f"level 1: {exc}") from exc
    if not bottom == 1:
        value = value * bottom.inverse(order=target)
    return (top * value).truncate(order)


entry12_convergent = convergent


def _seed_depth(spec: CFSpec, order: Fraction) -> int:
    numerator = _levels(spec)[3]
    total, k = Fraction(0), 1
    while total < order:
        v = numerator(k).valuation
        if v is None or v <= 0:
            return 2
        total += v
        k += 1
    return k + 1


def auto_depth(spec: CFSpec, order: RationalLike, cap: Optional[int] = None) -> ConvergentReport:
    """Smallest depth whose convergent agrees with the next one strictly below ``order``."""
    order = as_rational(order)
    if cap is None:
        cap = max(2, ceil(4 * order))
    cache = {}

    def conv(d):
        if d not in cache:
            cache[d] = convergent(spec, d, order)
        return cache[d]

    def stable(d):
        return conv(d).first_mismatch(conv(d + 1), below=order) is None

    hi = min(_seed_depth(spec, order), cap)
    lo = 0  # largest depth known not to stabilize
    while not stable(hi):
        if hi >= cap:
            log.warning("%s did not stabilize below order %s by depth %d", spec, order, cap)
            return ConvergentReport(hi, False, conv(hi))
        lo, hi = hi, min(2 * hi, cap)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if stable(mid):
            hi = mid
        else:
            lo = mid
    return ConvergentReport(hi, True, conv(hi))


# -- named fractions ---------------------------------------------------------

def named_product(name: str, order: RationalLike) -> LaurentSeries:
    """q^c f(-q^alpha, -q^beta) / f(-q^gamma, -q^delta)."""
    info = _NAMED[name]
    order = as_rational(order)
    inner = order - info.prefactor
    num = theta_sum(mono(info.num[0], -1), mono(info.num[1], -1), inner)
    den = theta_sum(mono(info.den[0], -1), mono(info.den[1], -1), inner)
    return mono(info.prefactor).series() * num * den.inverse()


def named_cf(name: str, form: str = "product", order: RationalLike = 20) -> LaurentSeries:
    if name not in _NAMED:
        raise ValueError(f"unknown continued fraction {name!r}; expected one of {NAMES}")
    if form == "product":
        return named_product(name, order)
    if form == "cf":
        report = auto_depth(CFSpec.named(name), order)
        if not report.stabilized:
            log.warning("%s convergents not stabilized; returning depth %d", name, report.depth_used)
        return report.series
    raise ValueError(f"form must be 'product' or 'cf', not {form!r}")


def prefactor_exponent(name: str) -> Fraction:
    return _NAMED[name].prefactor
