"""
Executable checks for the theta-function identities of the order-14 and
order-28 continued fractions, and for the auxiliary theta identities they
rest on.

Every check evaluates both sides as truncated series and compares them
exactly below the requested order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, List, Optional

from .cfrac import named_product
from .errors import GridError, QSeriesError, TruncationError
from .series import LaurentSeries, RationalLike, as_rational
from .theta import SignedMonomial, chi, f_neg, mono, phi, psi, theta_sum

Side = Callable[[Fraction], LaurentSeries]

ROMAN = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")


@dataclass
class IdentityCheck:
    id: str
    lhs: Side
    rhs: Side
    grid_scale: int = 1
    note: str = ""


@dataclass
class CheckResult:
    id: str
    order: Fraction
    status: str
    first_mismatch: Optional[tuple] = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "order": {"num": self.order.numerator, "den": self.order.denominator},
            "status": self.status,
        }
        if self.first_mismatch is not None:
            e, lhs, rhs = self.first_mismatch
            e = as_rational(e)
            out["first_mismatch"] = {"exp": {"num": e.numerator, "den": e.denominator},
                                     "lhs": lhs, "rhs": rhs}
        return out


def compare(id: str, lhs: LaurentSeries, rhs: LaurentSeries, order: RationalLike,
            note: str = "") -> CheckResult:
    order = as_rational(order)
    mismatch = lhs.first_mismatch(rhs, below=order)
    return CheckResult(id, order, "pass" if mismatch is None else "fail", mismatch, note)


def evaluate_to(side: Side, order: Fraction, pad: Optional[Fraction] = None) -> LaurentSeries:
    """Evaluate ``side`` at a padded working order until it is certified below ``order``."""
    pad = pad if pad is not None else max(Fraction(8), order / 4)
    for _ in range(8):
        s = side(order + pad)
        if s.order is None or s.order >= order:
            return s
        pad = 2 * pad + (order - s.order)
    raise TruncationError(f"could not certify the series below order {order}")


def check(identity: IdentityCheck, order: RationalLike) -> CheckResult:
    order = as_rational(order)
    if order <= 0:
        raise ValueError("order must be positive")
    try:
        lhs = evaluate_to(identity.lhs, order)
        rhs = evaluate_to(identity.rhs, order)
    except QSeriesError as exc:
        raise type(exc)(f"{identity.id}: {exc}") from exc
    grid = lcm(lhs.scale, rhs.scale)
    if identity.grid_scale % grid:
        raise GridError(f"{identity.id}: sides live on grid 1/{grid}, expected 1/{identity.grid_scale}")
    return compare(identity.id, lhs, rhs, order, identity.note)


def run(checks: List[IdentityCheck], order: RationalLike) -> List[CheckResult]:
    return [check(c, order) for c in checks]


# -- building blocks ---------------------------------------------------------

def q(e: RationalLike) -> LaurentSeries:
    return mono(e).series()


def m(e: RationalLike, sign: int = 1) -> SignedMonomial:
    return mono(e, sign)


@lru_cache(maxsize=256)
def cf(name: str, order: Fraction, power: int = 1, negate: bool = False) -> LaurentSeries:
    """Named continued fraction at q^power (or -q when ``negate``), certified below ``order``."""
    s = named_product(name, Fraction(order, power)).substitute_power(power) if power != 1 \
        else named_product(name, order)
    return s.substitute_negate() if negate else s


def f(a, b, W):
    return theta_sum(a, b, W)


def _h(x):
    return Fraction(x)


# -- Theorem 2.1: S1, S2, S3 --------------------------------------------------

# name -> (q-power prefactor, theta args u v of the numerator, f(-q^g1, -q^g2) denominator)
_S_DATA = {
    "S1": (Fraction(1, 4), Fraction(1, 2), Fraction(13, 2), 3, 4),
    "S2": (Fraction(3, 4), Fraction(3, 2), Fraction(11, 2), 2, 5),
    "S3": (Fraction(5, 4), Fraction(5, 2), Fraction(9, 2), 1, 6),
}

_V_DATA = {
    "V1": (3, 6, 8, 1, 13),
    "V2": (2, 4, 10, 3, 11),
    "V3": (1, 2, 12, 5, 9),
}


def _minus_plus_checks(prefix, data, base, psi_arg, grid):
    """The 1/X - X and 1/X + X parts for a family of three fractions."""
    checks = []
    for i, (name, (c, u, v, g1, g2)) in enumerate(data.items()):
        def den(W, c=c, g1=g1, g2=g2):
            return q(c) * psi(psi_arg, W) * f(m(g1, -1), m(g2, -1), W)

        def minus_lhs(W, name=name):
            s = cf(name, W)
            return 1 / s - s

        def plus_lhs(W, name=name):
            s = cf(name, W)
            return 1 / s + s

        def minus_rhs(W, u=u, v=v, den=den):
            return phi(base, W) * f(m(u, -1), m(v, -1), W) / den(W)

        def plus_rhs(W, u=u, v=v, den=den):
            return phi(m(base, -1), W) * f(m(u), m(v), W) / den(W)

        checks.append(IdentityCheck(f"{prefix}.{ROMAN[2 * i]}", minus_lhs, minus_rhs, grid))
        checks.append(IdentityCheck(f"{prefix}.{ROMAN[2 * i + 1]}", plus_lhs, plus_rhs, grid))
    return checks


def _triple(names, sign, W, power=1):
    out = 1
    for name in names:
        s = cf(name, W, power)
        out = out * (1 / s + sign * s)
    return out


def thm21_checks() -> List[IdentityCheck]:
    checks = _minus_plus_checks("thm2.1", _S_DATA, Fraction(7, 2), 7, 4)
    names = tuple(_S_DATA)

    def vii_rhs(W):
        return phi(7, W) ** 3 * psi(7, W) / (q(_h("9/2")) * psi(14, W) ** 3 * psi(1, W))

    def viii_rhs(W):
        return (phi(m(7, -1), W) ** 3 * psi(m(7, -1), W)
                / (q(_h("9/2")) * psi(14, W) ** 3 * psi(1, W)))

    checks.append(IdentityCheck("thm2.1.vii", lambda W: _triple(names, -1, W, 2), vii_rhs, 2))
    checks.append(IdentityCheck("thm2.1.viii", lambda W: _triple(names, 1, W, 2), viii_rhs, 2))
    return checks


def thm22_checks() -> List[IdentityCheck]:
    checks = _minus_plus_checks("thm2.2", _V_DATA, 7, 14, 1)
    names = tuple(_V_DATA)

    def vii_rhs(W):
        return phi(7, W) ** 3 * psi(1, W) / (q(6) * psi(14, W) ** 3 * psi(7, W))

    def viii_rhs(W):
        return (phi(m(7, -1), W) ** 3 * phi(m(14, -1), W)
                / (q(6) * psi(14, W) ** 3 * psi(7, W) * chi(m(2, -1), W) * chi(m(1, -1), W)))

    checks.append(IdentityCheck("thm2.2.vii", lambda W: _triple(names, -1, W), vii_rhs, 1))
    checks.append(IdentityCheck("thm2.2.viii", lambda W: _triple(names, 1, W), viii_rhs, 1))
    return checks


# -- Theorem 2.3: V(q)^n V(-q)^n = +-V(q^2)^n ----------------------------------

THM23_SIGN = {
    "V1": lambda n: -1 if n % 2 else 1,
    "V2": lambda n: 1,
    "V3": lambda n: -1 if n % 2 else 1,
}


def thm23_checks(n_max: int) -> List[IdentityCheck]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    checks = []
    for n in range(1, n_max + 1):
        for part, name in zip(("i", "ii", "iii"), THM23_SIGN):
            sign = THM23_SIGN[name](n)

            def lhs(W, name=name, n=n):
                return cf(name, W) ** n * cf(name, W, negate=True) ** n

            def rhs(W, name=name, n=n, sign=sign):
                return cf(name, W, 2) ** n * sign

            checks.append(IdentityCheck(f"thm2.3.{part}.n{n}", lhs, rhs, 1,
                                        note=f"sign {'+' if sign > 0 else '-'}"))
    return checks


# -- auxiliary theta identities -----------------------------------------------

def entry30_split(a: SignedMonomial, b: SignedMonomial, id: str) -> IdentityCheck:
    """f(a,b) = f(a^3 b, a b^3) + a f(b/a, a^5 b^3)."""
    return IdentityCheck(
        id,
        lambda W: f(a, b, W),
        lambda W: f(a ** 3 * b, a * b ** 3, W) + a.series() * f(b / a, a ** 5 * b ** 3, W),
        lcm(a.exp.denominator, b.exp.denominator))


def entry30_product(a: SignedMonomial, b: SignedMonomial, id: str) -> IdentityCheck:
    """f(a, ab^2) f(b, a^2 b) = f(a, b) psi(ab)."""
    return IdentityCheck(
        id,
        lambda W: f(a, a * b ** 2, W) * f(b, a ** 2 * b, W),
        lambda W: f(a, b, W) * psi(a * b, W),
        lcm(a.exp.denominator, b.exp.denominator))


def entry30_conjugate(a: SignedMonomial, b: SignedMonomial, id: str) -> IdentityCheck:
    """f(a, b) f(-a, -b) = f(-a^2, -b^2) phi(-ab)."""
    return IdentityCheck(
        id,
        lambda W: f(a, b, W) * f(-a, -b, W),
        lambda W: f(-(a ** 2), -(b ** 2), W) * phi(-(a * b), W),
        lcm(a.exp.denominator, b.exp.denominator))


def entry30_square(a: SignedMonomial, b: SignedMonomial, id: str) -> IdentityCheck:
    """f(a, b)^2 = f(a^2, b^2) phi(ab) + 2a f(b/a, a^3 b) psi(a^2 b^2)."""
    return IdentityCheck(
        id,
        lambda W: f(a, b, W) ** 2,
        lambda W: (f(a ** 2, b ** 2, W) * phi(a * b, W)
                   + a.series() * f(b / a, a ** 3 * b, W) * psi(a ** 2 * b ** 2, W) * 2),
        lcm(a.exp.denominator, b.exp.denominator))


def _s1_theta_den(W):
    return q(_h("1/4")) * f(m(3, -1), m(11, -1), W) * f(m(4, -1), m(10, -1), W)


def auxiliary_checks() -> List[IdentityCheck]:
    quarter, half = _h("1/4"), _h("13/4")
    checks = [
        entry30_split(m(quarter, -1), m(half), "s2"),
        entry30_split(m(quarter), m(half, -1), "s3"),
        IdentityCheck("s2.printed",
                      lambda W: f(m(quarter, -1), m(half), W),
                      lambda W: f(m(4, -1), m(10, -1), W) - q(quarter) * f(m(3, -1), m(11, -1), W), 4),
        IdentityCheck("s3.printed",
                      lambda W: f(m(quarter), m(half, -1), W),
                      lambda W: f(m(4, -1), m(10, -1), W) + q(quarter) * f(m(3, -1), m(11, -1), W), 4),
        entry30_split(m(_h("3/4"), -1), m(_h("11/4")), "fa1.S2-"),
        entry30_split(m(_h("3/4")), m(_h("11/4"), -1), "fa1.S2+"),
        entry30_split(m(_h("5/4"), -1), m(_h("9/4")), "fa1.S3-"),
        entry30_split(m(_h("5/4")), m(_h("9/4"), -1), "fa1.S3+"),
        # (s4), (s5) carry square roots of S1; compared after squaring
        IdentityCheck("s4.squared",
                      lambda W: 1 / cf("S1", W) - 2 + cf("S1", W),
                      lambda W: f(m(quarter, -1), m(half), W) ** 2 / _s1_theta_den(W), 4),
        IdentityCheck("s5.squared",
                      lambda W: 1 / cf("S1", W) + 2 + cf("S1", W),
                      lambda W: f(m(quarter), m(half, -1), W) ** 2 / _s1_theta_den(W), 4),
        IdentityCheck("s6",
                      lambda W: 1 / cf("S1", W) - cf("S1", W),
                      lambda W: (f(m(quarter, -1), m(half), W) * f(m(quarter), m(half, -1), W)
                                 / _s1_theta_den(W)), 4),
        entry30_product(m(3, -1), m(4, -1), "s7"),
        IdentityCheck("s7.printed",
                      lambda W: f(m(3, -1), m(11, -1), W) * f(m(4, -1), m(10, -1), W),
                      lambda W: f(m(3, -1), m(4, -1), W) * psi(7, W), 1),
        entry30_conjugate(m(quarter, -1), m(half), "s8"),
        IdentityCheck("s8.printed",
                      lambda W: f(m(quarter, -1), m(half), W) * f(m(quarter), m(half, -1), W),
                      lambda W: f(m(_h("1/2"), -1), m(_h("13/2"), -1), W) * phi(_h("7/2"), W), 2),
        IdentityCheck("s9",
                      lambda W: 1 / cf("S1", W) + cf("S1", W),
                      lambda W: f(m(quarter), m(half, -1), W) ** 2 / _s1_theta_den(W) - 2, 4),
        entry30_square(m(quarter), m(half, -1), "s10"),
        IdentityCheck("s10.printed",
                      lambda W: f(m(quarter), m(half, -1), W) ** 2,
                      lambda W: (f(m(_h("1/2")), m(_h("13/2")), W) * phi(m(_h("7/2"), -1), W)
                                 + q(quarter) * f(m(3, -1), m(4, -1), W) * psi(7, W) * 2), 4),
        IdentityCheck("y40",
                      lambda W: f(m(1), m(6), W) * f(m(2), m(5), W) * f(m(3), m(4), W),
                      lambda W: f_neg(7, W) ** 2 * phi(m(7, -1), W) / chi(m(1, -1), W), 1),
        IdentityCheck("y41",
                      lambda W: f(m(1, -1), m(6, -1), W) * f(m(2, -1), m(5, -1), W) * f(m(3, -1), m(4, -1), W),
                      lambda W: f_neg(1, W) * f_neg(7, W) ** 2, 1),
        IdentityCheck("y42",
                      lambda W: f(m(1), m(13), W) * f(m(3), m(11), W) * f(m(5), m(9), W),
                      lambda W: chi(1, W) * psi(m(7, -1), W) * f_neg(14, W) ** 2, 1),
        IdentityCheck("y43",
                      lambda W: _triple(tuple(_S_DATA), -1, W, 2),
                      lambda W: (phi(7, W) ** 3 * f(m(1, -1), m(13, -1), W) * f(m(3, -1), m(11, -1), W)
                                 * f(m(5, -1), m(9, -1), W)
                                 / (q(_h("9/2")) * psi(14, W) ** 3 * f(m(6, -1), m(8, -1), W)
                                    * f(m(4, -1), m(10, -1), W) * f(m(2, -1), m(12, -1), W))), 2),
        IdentityCheck("y44",
                      lambda W: _triple(tuple(_S_DATA), -1, W, 2),
                      lambda W: (phi(7, W) ** 3 * psi(7, W) * chi(m(1, -1), W)
                                 / (q(_h("9/2")) * psi(14, W) ** 3 * f_neg(2, W))), 2),
        IdentityCheck("thm2.1.vii.from-parts",
                      lambda W: _thm21_minus_rhs_product(W),
                      lambda W: phi(7, W) ** 3 * psi(7, W) / (q(_h("9/2")) * psi(14, W) ** 3 * psi(1, W)), 2),
        entry30_conjugate(m(1), m(27), "Vabc"),
        entry30_conjugate(m(13), m(15), "Vabcd"),
        IdentityCheck("Vabc.printed",
                      lambda W: f(m(1), m(27), W) * f(m(1, -1), m(27, -1), W),
                      lambda W: f(m(2, -1), m(54, -1), W) * phi(m(28, -1), W), 1),
        IdentityCheck("Vabcd.printed",
                      lambda W: f(m(13), m(15), W) * f(m(13, -1), m(15, -1), W),
                      lambda W: f(m(26, -1), m(30, -1), W) * phi(m(28, -1), W), 1),
    ]
    for e in (1, 2, _h("1/2")):
        checks.append(IdentityCheck(f"entry8.f(-1,q^{e})",
                                    lambda W, e=e: f(m(0, -1), m(e), W),
                                    lambda W: LaurentSeries({}), Fraction(e).denominator))
    return checks


def _thm21_minus_rhs_product(W):
    # right sides of parts (i), (iii), (v) with q -> q^2, multiplied together
    out = 1
    for c, u, v, g1, g2 in _S_DATA.values():
        rhs = (phi(7, W) * f(m(2 * u, -1), m(2 * v, -1), W)
               / (q(2 * c) * psi(14, W) * f(m(2 * g1, -1), m(2 * g2, -1), W)))
        out = out * rhs
    return out


# -- corrections to misprinted statements --------------------------------------

def errata_checks() -> List[IdentityCheck]:
    """Corrected forms of printed statements that fail as printed."""
    names = tuple(_S_DATA)

    def viii_rhs(W):
        return (phi(m(7, -1), W) ** 3 * psi(m(7, -1), W)
                / (q(_h("9/2")) * psi(14, W) ** 3 * psi(m(1, -1), W)))

    return [IdentityCheck("thm2.1.viii.corrected", lambda W: _triple(names, 1, W, 2), viii_rhs, 2,
                          note="psi(q) in the denominator replaced by psi(-q)")]


# -- suites -------------------------------------------------------------------

def suite_thm21(order: RationalLike) -> List[CheckResult]:
    return run(thm21_checks(), order)


def suite_thm22(order: RationalLike) -> List[CheckResult]:
    return run(thm22_checks(), order)


def suite_thm23(n_max: int, order: RationalLike) -> List[CheckResult]:
    return run(thm23_checks(n_max), order)


def suite_auxiliary(order: RationalLike) -> List[CheckResult]:
    return run(auxiliary_checks(), order)


def suite_errata(order: RationalLike) -> List[CheckResult]:
    return run(errata_checks(), order)


SUITES = {
    "thm21": suite_thm21,
    "thm22": suite_thm22,
    "thm23": lambda order: suite_thm23(4, order),
    "aux": suite_auxiliary,
    "errata": suite_errata,
}
