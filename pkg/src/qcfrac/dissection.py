"""
Andrews-Bressoud p-dissection of theta-type quotients and vanishing
coefficient scans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DissectionError, DivergentProductError
from .identities import CheckResult, compare
from .series import LaurentSeries, RationalLike, as_rational, one
from .theta import mono, pochhammer_multi


@dataclass(frozen=True)
class DissectionSpec:
    t: int
    r: int
    s: int
    p: int

    def __post_init__(self):
        if min(self.t, self.r, self.s, self.p) < 1:
            raise DissectionError("t, r, s, p must be positive")
        if gcd(self.r, self.p) != 1:
            raise DissectionError(f"gcd(r, p) = gcd({self.r}, {self.p}) != 1")
        if not (self.r < self.t and self.s < self.t):
            raise DissectionError("need r < t and s < t")


def lift(first: int, step: int):
    """Rewrite (q^first; q^step)_inf as poly * (q^first'; q^step)_inf with first' > 0.

    Uses (q^-k; q^M) = (1 - q^-k)(q^(M-k); q^M).  Returns ``(None, 0)`` when a
    factor (1 - q^0) makes the product vanish.
    """
    poly = one()
    while first <= 0:
        if first == 0:
            return None, 0
        poly = poly * (1 - mono(first).series())
        first += step
    return poly, first


def product_quotient(num: Sequence[int], den: Sequence[int], step: int,
                     order: RationalLike) -> LaurentSeries:
    """prod (q^n; q^step)_inf over ``num`` divided by prod over ``den``.

    First exponents may be zero or negative; the result is then a Laurent
    series with a finite principal part.
    """
    order = as_rational(order)
    top, bottom, factors = one(), one(), []
    for e in num:
        poly, e = lift(e, step)
        if poly is None:
            return LaurentSeries({}, order)
        top = top * poly
        factors.append((mono(e), step, 1))
    for e in den:
        poly, e = lift(e, step)
        if poly is None:
            raise DivergentProductError("division by (1; q^M)_inf = 0")
        bottom = bottom * poly
        factors.append((mono(e), step, -1))
    # bottom's inverse has valuation -bottom.valuation and loses 2*|valuation| of precision
    working = order - top.valuation + 3 * abs(bottom.valuation)
    out = top * pochhammer_multi(factors, working)
    if not bottom == 1:
        out = out * bottom.inverse(order=working)
    return out.truncate(order)


def dissection_lhs(spec: DissectionSpec, order: RationalLike) -> LaurentSeries:
    t, r, s = spec.t, spec.r, spec.s
    return product_quotient([t, t, r + s, t - r - s], [s, t - s, r, t - r], t, order)


def component_exponents(spec: DissectionSpec, j: int) -> Tuple[List[int], List[int]]:
    t, r, s, p = spec.t, spec.r, spec.s, spec.p
    num = [p * t, p * t, p * r + s + j * t, (p - j) * t - p * r - s]
    den = [j * t + s, (p - j) * t - s, p * r, (t - r) * p]
    return num, den


def check_side_condition(spec: DissectionSpec) -> None:
    for j in range(spec.p):
        num, den = component_exponents(spec, j)
        for e in num + den:
            if e % spec.p:
                raise DissectionError(f"component {j}: exponent {e} is not a multiple of p={spec.p}")


def p_dissect(spec: DissectionSpec, order: RationalLike):
    """Components q^(jr) * (...; q^(pt)) / (...; q^(pt)) for 0 <= j < p, and their sum."""
    order = as_rational(order)
    check_side_condition(spec)
    components = []
    for j in range(spec.p):
        num, den = component_exponents(spec, j)
        if 0 in num:
            components.append(LaurentSeries({}, order))
            continue
        prefactor = j * spec.r
        body = product_quotient(num, den, spec.p * spec.t, order - prefactor)
        components.append(mono(prefactor).series() * body)
    combined = components[0]
    for c in components[1:]:
        combined = combined + c
    return components, combined


def verify_dissection(spec: DissectionSpec, order: RationalLike) -> CheckResult:
    _, combined = p_dissect(spec, order)
    return compare(f"dissection(t={spec.t},r={spec.r},s={spec.s},p={spec.p})",
                   combined, dissection_lhs(spec, order), order)


# -- the seven-fold dissection of 1/S1* ----------------------------------------

def inverse_s1_star(order: RationalLike) -> LaurentSeries:
    """(q^4, q^10; q^14)_inf / (q^3, q^11; q^14)_inf."""
    return product_quotient([4, 10], [3, 11], 14, order)


def _term(shift: int, sign: int, num: Sequence[int], den: Sequence[int], num_sq: Sequence[int],
          den_sq: Sequence[int], order: Fraction) -> LaurentSeries:
    factors = ([(mono(e), 98, 1) for e in num] + [(mono(e), 98, 2) for e in num_sq]
               + [(mono(e), 98, -1) for e in den] + [(mono(e), 98, -2) for e in den_sq])
    return mono(shift, sign).series() * pochhammer_multi(factors, order - shift)


# (prefactor exponent, sign, numerator, denominator, squared numerator, squared denominator)
PRINTED_DISS_TERMS = [
    (0, 1, (7, 21, 77, 91), (28, 70), (35, 49, 63), (14, 42, 56, 84)),
    (3, 1, (), (42, 56), (7, 35, 49, 63, 91), (14, 28, 70, 84)),
    (6, 1, (21, 35, 63, 77), (42, 56), (7, 49, 91), (14, 28, 70, 84)),
    (9, 1, (21, 77), (28, 70), (7, 35, 63, 91), (14, 42, 56, 84)),
    (12, 1, (21, 35, 63, 77), (14, 84), (7, 49, 91), (28, 42, 56, 70)),
    (4, 1, (), (14, 84), (35, 49, 63), (42, 56, 70, 84)),
]

# the last term recomputed from the j = 6 component: (q^112; q^98) = (q^14; q^98)/(1 - q^14)
# and (q^-14; q^98) = -q^-14 (1 - q^14)(q^84; q^98) leave -q^4 times the product below
DERIVED_DISS_TERMS = PRINTED_DISS_TERMS[:5] + [
    (4, -1, (7, 21, 77, 91), (14, 84), (35, 49, 63), (28, 42, 56, 70)),
]


def diss_rhs(order: RationalLike, terms=None) -> LaurentSeries:
    order = as_rational(order)
    terms = PRINTED_DISS_TERMS if terms is None else terms
    out = LaurentSeries({}, order)
    for shift, sign, num, den, num_sq, den_sq in terms:
        out = out + _term(shift, sign, num, den, num_sq, den_sq, order)
    return out


def verify_diss_expansion(order: RationalLike, form: str = "printed") -> CheckResult:
    """The six-term expansion of 1/S1* against its direct product expansion.

    ``form='printed'`` uses the terms exactly as originally stated; ``'derived'``
    replaces the last term by the one recomputed from the dissection.
    """
    terms = {"printed": PRINTED_DISS_TERMS, "derived": DERIVED_DISS_TERMS}[form]
    order = as_rational(order)
    return compare(f"diss.{form}", inverse_s1_star(order), diss_rhs(order, terms), order)


def diss_via_components(order: RationalLike) -> LaurentSeries:
    """Components of the (14, 3, 7, 7) dissection times (q^7; q^14)^2 / (q^14; q^14)^2."""
    order = as_rational(order)
    spec = DissectionSpec(14, 3, 7, 7)
    # the multiplier has valuation 0, so the dissection is needed to the same order
    _, combined = p_dissect(spec, order)
    multiplier = pochhammer_multi([(mono(7), 14, 2), (mono(14), 14, -2)], order)
    return combined * multiplier


# -- vanishing coefficients ----------------------------------------------------

@dataclass(frozen=True)
class VanishingFamily:
    name: str
    num: Tuple[int, ...]
    den: Tuple[int, ...]
    step: int
    modulus: int
    residue: int
    label: str

    def series(self, order: RationalLike) -> LaurentSeries:
        return product_quotient(self.num, self.den, self.step, order)


FAMILIES: Dict[str, VanishingFamily] = {
    f.name: f for f in (
        VanishingFamily("S1*", (4, 10), (3, 11), 14, 7, 1, "alpha_{7n+1}"),
        VanishingFamily("S2*", (2, 12), (5, 9), 14, 7, 6, "beta_{7n+6}"),
        VanishingFamily("S3*", (6, 8), (1, 13), 14, 7, 6, "gamma_{7n+6}"),
        VanishingFamily("V1*", (1, 27), (13, 15), 28, 14, 7, "alpha'_{14n+7}"),
        VanishingFamily("V2*", (3, 25), (11, 17), 28, 14, 4, "beta'_{14n+4}"),
        VanishingFamily("V3*", (5, 23), (9, 19), 28, 14, 11, "gamma'_{14n+11}"),
    )
}


def family(name: str) -> VanishingFamily:
    key = name if name.endswith("*") else name + "*"
    if key not in FAMILIES:
        raise KeyError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")
    return FAMILIES[key]


@dataclass
class VanishingReport:
    result: CheckResult
    family: VanishingFamily
    checked: int
    max_off_class: int
    first_nonzero: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    def summary(self) -> str:
        f = self.family
        if self.result.passed:
            return f"{f.label}=0 verified, {self.checked} classes checked"
        e, c, _ = self.result.first_mismatch
        return f"{f.label}=0 FAILS: coefficient of q^{e} is {c}"


def vanishing_scan(fam: VanishingFamily, n_max: int, residue: Optional[int] = None) -> VanishingReport:
    """Check every coefficient at exponents = residue (mod modulus), up to and including n_max."""
    residue = fam.residue if residue is None else residue
    if n_max < residue:
        raise ValueError("n_max must be at least the residue")
    s = fam.series(n_max + 1)
    mismatch = None
    checked = 0
    max_off = 0
    first_nonzero = {}
    for n in range(n_max + 1):
        c = s.coefficient(n)
        k = n % fam.modulus
        if k == residue:
            checked += 1
            if c and mismatch is None:
                mismatch = (Fraction(n), c, 0)
        else:
            max_off = max(max_off, abs(c))
            if c and k not in first_nonzero:
                first_nonzero[k] = (n, c)
    status = "pass" if mismatch is None else "fail"
    result = CheckResult(f"vanish.{fam.name}.{fam.modulus}n+{residue}", Fraction(n_max), status, mismatch)
    return VanishingReport(result, fam, checked, max_off, first_nonzero)
