"""
q-Pochhammer products and Ramanujan theta functions with signed-monomial
arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, lcm
from typing import Iterable, Optional, Sequence, Union

from .errors import DivergentProductError, QSeriesError
from .series import LaurentSeries, RationalLike, as_rational


@dataclass(frozen=True)
class SignedMonomial:
    """The term ``sign * q**exp`` with sign in {-1, 0, 1} (0 is the zero element)."""

    sign: int
    exp: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        object.__setattr__(self, "exp", as_rational(self.exp))

    def __mul__(self, other: "SignedMonomial") -> "SignedMonomial":
        return SignedMonomial(self.sign * other.sign, self.exp + other.exp)

    def __truediv__(self, other: "SignedMonomial") -> "SignedMonomial":
        if other.sign == 0:
            raise ZeroDivisionError("division by the zero monomial")
        return SignedMonomial(self.sign * other.sign, self.exp - other.exp)

    def __pow__(self, n: int) -> "SignedMonomial":
        if n < 0 and self.sign == 0:
            raise ZeroDivisionError("negative power of the zero monomial")
        return SignedMonomial(self.sign ** n if n else 1, self.exp * n)

    def __neg__(self) -> "SignedMonomial":
        return SignedMonomial(-self.sign, self.exp)

    def series(self, order: Optional[RationalLike] = None) -> LaurentSeries:
        return LaurentSeries({self.exp: self.sign} if self.sign else {}, order)

    def __str__(self):
        if self.sign == 0:
            return "0"
        body = "q" if self.exp == 1 else f"q^{self.exp}"
        if self.exp == 0:
            body = "1"
        return ("-" if self.sign < 0 else "") + body


def mono(exp: RationalLike, sign: int = 1) -> SignedMonomial:
    return SignedMonomial(sign, as_rational(exp))


def _as_mono(x: Union[SignedMonomial, RationalLike]) -> SignedMonomial:
    """Accept a SignedMonomial, or a bare exponent k meaning q^k."""
    return x if isinstance(x, SignedMonomial) else mono(x)


# -- products ---------------------------------------------------------------

def _apply_factors(coeffs: list, factors: Iterable, top: int) -> None:
    # each factor is (sign, grid exponent, power): (1 - sign q^e)^power, in place
    for s, e, power in factors:
        if e >= top:
            continue
        if power > 0:
            for _ in range(power):
                for n in range(top - 1, e - 1, -1):
                    if coeffs[n - e]:
                        coeffs[n] -= s * coeffs[n - e]
        else:
            for _ in range(-power):
                for n in range(e, top):
                    if coeffs[n - e]:
                        coeffs[n] += s * coeffs[n - e]


def _factor_list(m: SignedMonomial, base: SignedMonomial, scale: int, top: int) -> list:
    """Expand (m; base)_inf into its factors (sign, grid exponent) below ``top``."""
    if base.sign == 0 or base.exp <= 0:
        raise DivergentProductError(f"divergent product: base {base}")
    if m.exp <= 0:
        raise DivergentProductError(f"divergent product: first factor 1 - ({m})")
    out = []
    e = int(m.exp * scale)
    step = int(base.exp * scale)
    t = 0
    while e < top:
        out.append((m.sign * base.sign ** t, e))
        e += step
        t += 1
    return out


def _step_mono(step) -> SignedMonomial:
    if isinstance(step, SignedMonomial):
        return step
    return mono(step)


def pochhammer(m: SignedMonomial, step, order: RationalLike) -> LaurentSeries:
    """(m; q^step)_inf = prod_{t>=0} (1 - m * q^(step t)), truncated below ``order``.

    ``step`` may be a positive rational or a SignedMonomial base such as -q.
    """
    return pochhammer_multi([(m, step, 1)], order)


def pochhammer_multi(factors: Sequence, order: RationalLike) -> LaurentSeries:
    """Product of (m; base)_inf ** power over ``(m, base, power)`` triples.

    Negative powers divide; every factor has constant term 1 so the
    division is exact term by term.
    """
    order = as_rational(order)
    scale = 1
    live = []
    for m, step, power in factors:
        m, base = _as_mono(m), _step_mono(step)
        if power == 0 or m.sign == 0:
            continue
        if base.sign == 0 or base.exp <= 0:
            raise DivergentProductError(f"divergent product: base {base}")
        if m.exp <= 0:
            raise DivergentProductError(f"divergent product: first factor 1 - ({m})")
        scale = lcm(scale, m.exp.denominator, base.exp.denominator)
        live.append((m, base, power))
    top = ceil(order * scale)
    if top <= 0:
        return LaurentSeries({}, order)
    coeffs = [0] * top
    coeffs[0] = 1
    expanded = []
    for m, base, power in live:
        expanded.extend((s, e, power) for s, e in _factor_list(m, base, scale, top))
    _apply_factors(coeffs, expanded, top)
    return LaurentSeries._from_dense(scale, 0, coeffs, order)


# -- theta functions --------------------------------------------------------

def theta_sum(a: SignedMonomial, b: SignedMonomial, order: RationalLike) -> LaurentSeries:
    """f(a, b) = sum over all integers t of a^(t(t+1)/2) b^(t(t-1)/2)."""
    a, b = _as_mono(a), _as_mono(b)
    order = as_rational(order)
    if a.sign == 0 or b.sign == 0:
        raise QSeriesError("theta arguments must be nonzero monomials")
    if a.exp + b.exp <= 0:
        raise DivergentProductError("|ab| >= 1 formally: exponent of ab must be positive")
    scale = lcm(a.exp.denominator, b.exp.denominator)
    ga, gb = int(a.exp * scale), int(b.exp * scale)
    top = ceil(order * scale)
    # exponent E(t) is a convex quadratic; its minimum sits at t = (gb - ga) / (2(ga + gb))
    vertex = Fraction(gb - ga, 2 * (ga + gb))
    terms = {}
    for direction in (1, -1):
        t = 0 if direction == 1 else -1
        while True:
            tri_a, tri_b = t * (t + 1) // 2, t * (t - 1) // 2
            e = ga * tri_a + gb * tri_b
            if e >= top and (t - vertex) * direction > 0:
                break
            if e < top:
                sign = (a.sign ** (tri_a % 2)) * (b.sign ** (tri_b % 2))
                terms[e] = terms.get(e, 0) + sign
            t += direction
    return LaurentSeries._build(scale, terms.items(), order)


def theta_product(a: SignedMonomial, b: SignedMonomial, order: RationalLike) -> LaurentSeries:
    """Jacobi triple product (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf."""
    a, b = _as_mono(a), _as_mono(b)
    if a.exp <= 0 or b.exp <= 0:
        raise DivergentProductError("triple product needs positive exponents on a and b")
    ab = a * b
    return pochhammer_multi([(-a, ab, 1), (-b, ab, 1), (ab, ab, 1)], order)


f = theta_sum


def phi(x, order: RationalLike) -> LaurentSeries:
    """phi(x) = f(x, x); ``x`` is a SignedMonomial or a bare exponent."""
    x = _as_mono(x)
    return theta_sum(x, x, order)


def psi(x, order: RationalLike) -> LaurentSeries:
    """psi(x) = f(x, x^3)."""
    x = _as_mono(x)
    return theta_sum(x, x ** 3, order)


def f_neg(x, order: RationalLike) -> LaurentSeries:
    """f(-x) = f(-x, -x^2); with a bare exponent k this is f(-q^k) = (q^k; q^k)_inf."""
    x = _as_mono(x)
    return theta_sum(-x, -(x ** 2), order)


def chi(x, order: RationalLike) -> LaurentSeries:
    """chi(x) = (-x; x^2)_inf."""
    x = _as_mono(x)
    return pochhammer(-x, x ** 2, order)
