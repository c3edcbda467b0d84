"""
Exact truncated Laurent series in q^(1/D) with arbitrary-precision integer
coefficients.

A series carries an ``order``: every coefficient of q^e with e < order is
exact, nothing at or above it is known.  ``order=None`` marks an exact
Laurent polynomial (monomials, factors like 1 - q^3).  Operations compute
the tightest order the inputs justify.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, gcd, lcm
from typing import Iterable, Iterator, Optional, Union

from .errors import (EmptyWindowError, GridError, NonInvertibleError,
                     TruncationError)

RationalLike = Union[int, Fraction, str]


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exponents or orders")
    return Fraction(x)


def _min_order(a: Optional[Fraction], b: Optional[Fraction]) -> Optional[Fraction]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def format_exponent(e: Fraction) -> str:
    if e.denominator == 1 and e >= 0:
        return str(e.numerator)
    return "{%s}" % e


class LaurentSeries:
    """Immutable truncated Laurent series.

    Storage is dense from the lowest nonzero grid exponent: coefficient
    ``coeffs[i]`` belongs to q^((min_exp + i) / scale).  The grid is always
    reduced to the coarsest one carrying every nonzero term.
    """

    __slots__ = ("scale", "min_exp", "coeffs", "order")

    def __init__(self, terms=None, order: Optional[RationalLike] = None):
        """Build from a mapping ``{exponent: coefficient}`` with rational exponents."""
        terms = dict(terms or {})
        exps = [as_rational(e) for e in terms]
        scale = 1
        for e in exps:
            scale = lcm(scale, e.denominator)
        items = [(int(as_rational(e) * scale), c) for e, c in terms.items()]
        self._init(scale, items, None if order is None else as_rational(order))

    @classmethod
    def _build(cls, scale: int, items: Iterable, order: Optional[Fraction]) -> "LaurentSeries":
        obj = cls.__new__(cls)
        obj._init(scale, items, order)
        return obj

    @classmethod
    def _from_dense(cls, scale: int, lo: int, arr: list, order: Optional[Fraction]) -> "LaurentSeries":
        return cls._build(scale, ((lo + i, c) for i, c in enumerate(arr) if c), order)

    def _init(self, scale, items, order):
        top = None if order is None else ceil(order * scale)
        acc = {}
        for e, c in items:
            if c and (top is None or e < top):
                acc[e] = acc.get(e, 0) + c
        acc = {e: c for e, c in acc.items() if c}
        g = scale
        for e in acc:
            g = gcd(g, e)
            if g == 1:
                break
        if g > 1:
            scale //= g
            acc = {e // g: c for e, c in acc.items()}
        self.scale = scale
        self.order = order
        if acc:
            lo, hi = min(acc), max(acc)
            self.min_exp = lo
            self.coeffs = tuple(acc.get(e, 0) for e in range(lo, hi + 1))
        else:
            self.min_exp = 0
            self.coeffs = ()

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_exact(self) -> bool:
        return self.order is None

    @property
    def valuation(self) -> Optional[Fraction]:
        """Lowest exponent with a nonzero coefficient (None for the zero series)."""
        if not self.coeffs:
            return None
        return Fraction(self.min_exp, self.scale)

    def _effective_valuation(self) -> Optional[Fraction]:
        # a zero series with finite order is only known to vanish below its order
        return self.order if not self.coeffs else self.valuation

    def _pairs(self, scale: Optional[int] = None) -> list:
        k = 1 if scale is None else scale // self.scale
        lo = self.min_exp
        return [((lo + i) * k, c) for i, c in enumerate(self.coeffs) if c]

    def terms(self) -> Iterator[tuple]:
        """Yield ``(exponent, coefficient)`` for every nonzero term, ascending."""
        for e, c in self._pairs():
            yield Fraction(e, self.scale), c

    def coefficient(self, e: RationalLike) -> int:
        e = as_rational(e)
        if self.order is not None and e >= self.order:
            raise TruncationError(f"beyond truncation: q^{e} with order {self.order}")
        x = e * self.scale
        if x.denominator != 1:
            return 0
        i = x.numerator - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __getitem__(self, e):
        return self.coefficient(e)

    def dense(self, scale: Optional[int] = None, start: Optional[RationalLike] = None,
              stop: Optional[RationalLike] = None) -> list:
        """Coefficients on the grid 1/scale for exponents in [start, stop)."""
        scale = self.scale if scale is None else scale
        if scale % self.scale:
            raise GridError(f"grid 1/{scale} does not refine 1/{self.scale}")
        if stop is None:
            if self.order is None:
                raise TruncationError("an exact series needs an explicit stop")
            stop = self.order
        if start is None:
            start = self.valuation if self.coeffs else Fraction(0)
        lo = ceil(as_rational(start) * scale)
        hi = ceil(as_rational(stop) * scale)
        if self.order is not None and hi > ceil(self.order * scale):
            raise TruncationError("dense window reaches beyond truncation")
        out = [0] * max(0, hi - lo)
        for e, c in self._pairs(scale):
            if lo <= e < hi:
                out[e - lo] = c
        return out

    def truncate(self, order: RationalLike) -> "LaurentSeries":
        order = _min_order(self.order, as_rational(order))
        return LaurentSeries._build(self.scale, self._pairs(), order)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentSeries":
        if isinstance(x, LaurentSeries):
            return x
        if isinstance(x, int):
            return LaurentSeries._build(1, [(0, x)], None)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        D = lcm(self.scale, other.scale)
        return LaurentSeries._build(D, self._pairs(D) + other._pairs(D),
                                    _min_order(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries._build(self.scale, [(e, -c) for e, c in self._pairs()], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentSeries._build(self.scale, [(e, c * other) for e, c in self._pairs()],
                                        self.order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        a, b = self, other
        if (a.is_zero and a.is_exact) or (b.is_zero and b.is_exact):
            return LaurentSeries._build(1, [], None)
        order = None
        if a.order is not None:
            order = a.order + b._effective_valuation()
        if b.order is not None:
            order = _min_order(order, b.order + a._effective_valuation())
        D = lcm(a.scale, b.scale)
        pa, pb = a._pairs(D), b._pairs(D)
        if len(pa) > len(pb):
            pa, pb = pb, pa
        if not pa or not pb:
            return LaurentSeries._build(D, [], order)
        lo = pa[0][0] + pb[0][0]
        top = ceil(order * D) if order is not None else pa[-1][0] + pb[-1][0] + 1
        if top <= lo:
            return LaurentSeries._build(D, [], order)
        acc = [0] * (top - lo)
        for ea, ca in pa:
            base = ea - lo
            lim = top - ea
            for eb, cb in pb:
                if eb >= lim:
                    break
                acc[base + eb] += ca * cb
        return LaurentSeries._from_dense(D, lo, acc, order)

    __rmul__ = __mul__

    def inverse(self, order: Optional[RationalLike] = None) -> "LaurentSeries":
        """Multiplicative inverse; the lowest nonzero coefficient must be +1 or -1.

        ``order`` caps the result order and is required when ``self`` is an
        exact series with more than one term.
        """
        if self.is_zero:
            raise NonInvertibleError("non-invertible leading term: zero series")
        lead = self.coeffs[0]
        if lead not in (1, -1):
            raise NonInvertibleError(f"non-invertible leading term: coefficient {lead}")
        v = self.valuation
        pairs = self._pairs()
        if len(pairs) == 1 and self.order is None and order is None:
            return LaurentSeries._build(self.scale, [(-self.min_exp, lead)], None)
        out = None if self.order is None else self.order - 2 * v
        if order is not None:
            out = _min_order(out, as_rational(order))
        if out is None:
            raise TruncationError("inverse of an exact non-monomial series needs an order")
        D = self.scale
        n = ceil((out + v) * D)
        if n <= 0:
            return LaurentSeries._build(D, [], out)
        lo = self.min_exp
        u = [(e - lo, c * lead) for e, c in pairs[1:] if e - lo < n]
        w = [0] * n
        w[0] = 1
        for i in range(1, n):
            s = 0
            for k, c in u:
                if k > i:
                    break
                s += c * w[i - k]
            w[i] = -s
        if lead == -1:
            w = [-x for x in w]
        return LaurentSeries._from_dense(D, -lo, w, out)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = LaurentSeries._coerce(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentSeries._build(1, [(0, 1)], None)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- substitutions ------------------------------------------------------

    def substitute_power(self, k: RationalLike) -> "LaurentSeries":
        """q -> q^k for a positive rational k."""
        k = as_rational(k)
        if k <= 0:
            raise ValueError("substitution power must be positive")
        D = self.scale * k.denominator
        return LaurentSeries._build(D, [(e * k.numerator, c) for e, c in self._pairs()],
                                    None if self.order is None else self.order * k)

    def substitute_negate(self) -> "LaurentSeries":
        """q -> -q; defined only when every nonzero term has an integer exponent."""
        if self.scale != 1:
            raise GridError("negation undefined on fractional grid")
        return LaurentSeries._build(1, [(e, -c if e % 2 else c) for e, c in self._pairs()],
                                    self.order)

    def extract_progression(self, m: int, r: int) -> "LaurentSeries":
        """Sum of c_{m n + r} q^n over n."""
        if m <= 0 or not 0 <= r < m:
            raise ValueError("need m > 0 and 0 <= r < m")
        if self.scale != 1:
            raise GridError("progression extraction needs an integer grid")
        order = None if self.order is None else Fraction(self.order - r, m)
        items = [((e - r) // m, c) for e, c in self._pairs() if (e - r) % m == 0]
        return LaurentSeries._build(1, items, order)

    # -- comparison and display ---------------------------------------------

    def first_mismatch(self, other, below: Optional[RationalLike] = None):
        """First ``(exponent, self_coeff, other_coeff)`` that differs below the common order."""
        other = self._coerce(other)
        bound = _min_order(_min_order(self.order, other.order),
                           None if below is None else as_rational(below))
        D = lcm(self.scale, other.scale)
        da, db = dict(self._pairs(D)), dict(other._pairs(D))
        for e in sorted(set(da) | set(db)):
            if bound is not None and Fraction(e, D) >= bound:
                break
            ca, cb = da.get(e, 0), db.get(e, 0)
            if ca != cb:
                return Fraction(e, D), ca, cb
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.first_mismatch(other) is None

    __hash__ = None

    def __str__(self):
        parts = []
        for e, c in self.terms():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else "q^" + format_exponent(e)
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def render(self, show_order: bool = True) -> str:
        text = str(self)
        if show_order and self.order is not None:
            text += " + O(q^%s)" % format_exponent(self.order)
        return text

    def __repr__(self):
        return f"LaurentSeries({self.render()!r})"


# -- functional surface ----------------------------------------------------

def make_monomial(c: int, e: RationalLike, order: Optional[RationalLike] = None) -> LaurentSeries:
    e = as_rational(e)
    if order is not None and as_rational(order) <= e:
        raise EmptyWindowError(f"empty window: q^{e} at order {order}")
    return LaurentSeries({e: c}, order)


def one() -> LaurentSeries:
    return make_monomial(1, 0)


def zero(order: Optional[RationalLike] = None) -> LaurentSeries:
    return LaurentSeries({}, order)


def from_coefficients(coeffs: Iterable[int], order: Optional[RationalLike] = None,
                      start: int = 0) -> LaurentSeries:
    """Integer-grid series with ``coeffs[i]`` at q^(start + i)."""
    coeffs = list(coeffs)
    if order is None:
        order = start + len(coeffs)
    return LaurentSeries._from_dense(1, start, coeffs, as_rational(order))


def add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def inverse(a: LaurentSeries, order: Optional[RationalLike] = None) -> LaurentSeries:
    return a.inverse(order)


def substitute_power(a: LaurentSeries, k: RationalLike) -> LaurentSeries:
    return a.substitute_power(k)


def substitute_negate(a: LaurentSeries) -> LaurentSeries:
    return a.substitute_negate()


def coefficient(a: LaurentSeries, e: RationalLike) -> int:
    return a.coefficient(e)


def extract_progression(a: LaurentSeries, m: int, r: int) -> LaurentSeries:
    return a.extract_progression(m, r)
