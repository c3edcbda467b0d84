"""
Colour partitions restricted to residue classes: counting by generating
function and by direct enumeration, and the two partition theorems read off
the order-14 and order-28 theta identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .identities import CheckResult, compare
from .series import LaurentSeries, from_coefficients
from .theta import mono, pochhammer_multi


@dataclass(frozen=True)
class PartitionSpec:
    """Parts congruent to listed residues mod ``modulus``, each with a number of colours.

    With ``symmetric`` every residue r also stands for modulus - r.  A
    self-paired class (r = modulus - r, e.g. 14 mod 28) is then listed twice,
    matching the product (q^r, q^(m-r); q^m), so its colours double.
    """

    modulus: int
    classes: Tuple[Tuple[int, int], ...]
    symmetric: bool = True

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        for r, c in self.classes:
            if not 0 < r <= self.modulus:
                raise ValueError(f"residue {r} outside 1..{self.modulus}")
            if c < 1:
                raise ValueError("colour counts must be >= 1")

    def expanded(self) -> List[Tuple[int, int]]:
        """Distinct residues in 1..modulus with their total colour counts."""
        acc = {}
        for r, c in self.classes:
            pair = (r, self.modulus - r) if self.symmetric else (r,)
            for x in pair:
                x = x or self.modulus
                acc[x] = acc.get(x, 0) + c
        return sorted(acc.items())

    def part_types(self, n_max: int) -> List[Tuple[int, int]]:
        """(part size, colours) for every admissible part size <= n_max."""
        out = []
        for r, c in self.expanded():
            for p in range(r, n_max + 1, self.modulus):
                out.append((p, c))
        return sorted(out)


def pm(modulus: int, *groups: Tuple[Sequence[int], int]) -> PartitionSpec:
    """Spec from groups of (residues, colours) using the +-r convention."""
    return PartitionSpec(modulus, tuple((r, c) for rs, c in groups for r in rs), True)


NAMED_SPECS = {
    "C1": pm(28, ((1, 13), 1), ((6, 14), 2)),
    "C2": pm(28, ((1, 13), 1), ((8, 14), 2)),
    "C3": pm(28, ((6, 7, 8), 2)),
    "D1": pm(28, ((6, 8), 1), ((1, 14), 2)),
    "D2": pm(28, ((6, 8), 1), ((13, 14), 2)),
    "D3": pm(28, ((1, 7, 13), 2)),
}


def colour_spec(r: int) -> PartitionSpec:
    """Unrestricted partitions with every part in r colours: generating function 1/(q;q)^r."""
    return PartitionSpec(1, ((1, r),), False)


@dataclass
class CountTable:
    spec: PartitionSpec
    counts: List[int]

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        return self.counts[n]


def gf_counts(spec: PartitionSpec, n_max: int) -> CountTable:
    """Coefficients of prod (q^r; q^m)^(-c) through q^n_max, by series inversion."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    order = n_max + 1
    product = pochhammer_multi([(mono(r), spec.modulus, c) for r, c in spec.expanded()], order)
    gf = product.inverse()
    return CountTable(spec, [gf.coefficient(n) for n in range(order)])


def enum_counts(spec: PartitionSpec, n_max: int) -> CountTable:
    """Bounded knapsack over part types (part size, colour); independent of the series code."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    ways = [1] + [0] * n_max
    for p, colours in spec.part_types(n_max):
        for _ in range(colours):
            for n in range(p, n_max + 1):
                ways[n] += ways[n - p]
    return CountTable(spec, ways)


def partition_count_brute(n: int) -> int:
    """Number of partitions of n by listing them (parts in non-increasing order)."""
    def count(rest, largest):
        if rest == 0:
            return 1
        return sum(count(rest - p, p) for p in range(min(rest, largest), 0, -1))
    return count(n, n)


def _relation(id: str, n_max: int, first: str, second: str, third: str, shift: int,
              start: int) -> CheckResult:
    """X1(n) - X2(n - shift) - X3(n) = 0 for start <= n <= n_max, both counting methods."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    tables = {}
    for key in (first, second, third):
        spec = NAMED_SPECS[key]
        gf, en = gf_counts(spec, n_max), enum_counts(spec, n_max)
        if gf.counts != en.counts:
            n = next(i for i, (x, y) in enumerate(zip(gf.counts, en.counts)) if x != y)
            return CheckResult(id, Fraction(n_max), "fail", (Fraction(n), gf.counts[n], en.counts[n]),
                               note=f"{key}: generating function and enumeration disagree")
        tables[key] = gf
    a, b, c = tables[first], tables[second], tables[third]
    for n in range(start, n_max + 1):
        lhs, rhs = a[n], b[n - shift] + c[n]
        if lhs != rhs:
            return CheckResult(id, Fraction(n_max), "fail", (Fraction(n), lhs, rhs))
    return CheckResult(id, Fraction(n_max), "pass")


def verify_thm31(n_max: int) -> CheckResult:
    """C1(n) - C2(n-1) - C3(n) = 0 for 1 <= n <= n_max."""
    return _relation("thm3.1", n_max, "C1", "C2", "C3", 1, 1)


def verify_thm32(n_max: int) -> CheckResult:
    """D1(n) - D2(n-6) - D3(n) = 0 for 6 <= n <= n_max."""
    return _relation("thm3.2", n_max, "D1", "D2", "D3", 6, 6)


def thm32_small_cases(n_max: int = 5) -> List[Tuple[int, int]]:
    """D1(n) - D3(n) for 1 <= n <= n_max; reported only, outside the theorem's range."""
    d1, d3 = gf_counts(NAMED_SPECS["D1"], n_max), gf_counts(NAMED_SPECS["D3"], n_max)
    return [(n, d1[n] - d3[n]) for n in range(1, n_max + 1)]


def _pm_product(residues, power, order):
    return [(mono(x), 28, power) for r in residues for x in (r, 28 - r)]


def _quotient(num, den, order, num_sq=(), den_sq=()):
    factors = (_pm_product(num, 1, order) + _pm_product(num_sq, 2, order)
               + _pm_product(den, -1, order) + _pm_product(den_sq, -2, order))
    return pochhammer_multi(factors, order)


def y3_terms(order) -> Tuple[LaurentSeries, LaurentSeries, LaurentSeries]:
    """The three product terms of the order-28 form of 1/S1 - S1."""
    return (_quotient((8,), (6,), order),
            mono(1).series() * _quotient((6,), (8,), order),
            _quotient((1, 13), (6, 8), order, num_sq=(14,), den_sq=(7,)))


def y4_terms(order):
    return (_quotient((), (1, 13), order, den_sq=(6, 14)),
            mono(1).series() * _quotient((), (1, 13), order, den_sq=(8, 14)),
            _quotient((), (), order, den_sq=(6, 7, 8)))


def y13_terms(order):
    return (_quotient((), (6, 8), order, den_sq=(1, 14)),
            mono(6).series() * _quotient((), (6, 8), order, den_sq=(13, 14)),
            _quotient((), (), order, den_sq=(1, 7, 13)))


def three_term_check(id: str, terms, order) -> CheckResult:
    first, second, third = terms
    return compare(id, first - second - third, LaurentSeries({}), order)


def verify_gf_identities(order) -> List[CheckResult]:
    return [three_term_check("y3", y3_terms(order), order),
            three_term_check("y4", y4_terms(order), order),
            three_term_check("y13", y13_terms(order), order)]


def counts_as_series(table: CountTable) -> LaurentSeries:
    return from_coefficients(table.counts)
