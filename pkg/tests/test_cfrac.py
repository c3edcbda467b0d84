from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qcfrac.cfrac import (NAMES, CFSpec, auto_depth, convergent, entry12_product, named_cf,
                          named_product, normalization, prefactor_exponent)
from qcfrac.errors import NonInvertibleError, QSeriesError
from qcfrac.series import LaurentSeries, one
from qcfrac.theta import SignedMonomial, mono, pochhammer_multi

from oracles import rogers_ramanujan_cf

F = Fraction


def quotient(num, den, step, order):
    return pochhammer_multi([(mono(e), step, 1) for e in num] + [(mono(e), step, -1) for e in den],
                            order)


# -- Entry 12 products ----------------------------------------------------------------

def test_entry12_product_s1():
    # (q^11, q^17; q^14) / (q^4, q^10; q^14) and (q^17; q^14) = (q^3; q^14) / (1 - q^3)
    got = entry12_product(CFSpec.named("S1"), 40)
    expect = quotient([3, 11], [4, 10], 14, 40) * LaurentSeries({0: 1, 3: -1}).inverse(order=40)
    assert got == expect
    assert got * LaurentSeries({0: 1, 3: -1}) == named_product("S1", 40) * mono(F(-1, 4)).series()


def test_entry12_product_v1():
    got = entry12_product(CFSpec.named("V1"), 60)
    expect = quotient([1, 27], [13, 15], 28, 60) * LaurentSeries({0: 1, 1: -1}).inverse(order=60)
    assert got == expect


def test_entry12_degenerate():
    zero = SignedMonomial(0, F(1))
    assert entry12_product(CFSpec.entry12(zero, zero), 10) == one().truncate(10)


def test_normalization_tables():
    num, den, top, bottom = normalization("S1")
    assert (num, den) == ((3, 11), (4, 10))
    assert top == LaurentSeries({0: 1, 3: -1}) and bottom == 1
    num, den, top, bottom = normalization("V3")
    assert (num, den) == ((5, 23), (9, 19))


def test_r_is_not_entry12():
    with pytest.raises(QSeriesError):
        entry12_product(CFSpec.named("R"), 10)


# -- convergents ------------------------------------------------------------------------

def test_depth_one():
    a, b = mono(1), mono(2)
    spec = CFSpec.entry12(a, b)
    assert convergent(spec, 1, 20) == LaurentSeries({0: 1, 3: -1}).inverse(order=20)


def test_rogers_ramanujan_convergents():
    n = 30
    rep = auto_depth(CFSpec.named("R"), n)
    assert rep.stabilized
    assert rep.series == named_product("R", n)
    body = rep.series * mono(F(-1, 5)).series()
    assert [body[k] for k in range(n - 1)] == rogers_ramanujan_cf(n)[:n - 1]


def test_s2_cross_form():
    assert named_cf("S2", "cf", 20) == named_cf("S2", "product", 20)


def test_named_leading_terms():
    s1 = named_cf("S1", "product", 10)
    assert s1.valuation == F(1, 4) and s1[F(1, 4)] == 1
    v3 = named_cf("V3", "product", 10)
    assert v3.valuation == 1 and v3[1] == 1


@pytest.mark.parametrize("name", NAMES)
def test_product_over_prefactor_has_unit_constant(name):
    body = named_product(name, 30) * mono(-prefactor_exponent(name)).series()
    assert body.valuation == 0 and body[0] == 1


@pytest.mark.parametrize("name", NAMES)
def test_named_cross_form_order_60(name):
    rep = auto_depth(CFSpec.named(name), 60)
    assert rep.stabilized
    assert rep.series == named_product(name, 60)


def test_auto_depth_small_order():
    assert auto_depth(CFSpec.named("S1"), F(1, 100)).depth_used == 1


def test_auto_depth_examples():
    rep = auto_depth(CFSpec.named("S1"), 20)
    assert rep.stabilized and rep.series == named_product("S1", 20)
    assert auto_depth(CFSpec.named("V1"), 50).stabilized


def test_auto_depth_cap():
    rep = auto_depth(CFSpec.named("S1"), 60, cap=2)
    assert not rep.stabilized and rep.depth_used == 2


@pytest.mark.parametrize("name", ["R", "S1", "V2"])
def test_stabilization_is_monotone(name):
    spec = CFSpec.named(name)
    rep = auto_depth(spec, 30)
    for d in range(rep.depth_used + 1, rep.depth_used + 5):
        assert convergent(spec, d, 30) == rep.series


def test_level_error():
    spec = CFSpec.entry12(mono(0), mono(0))
    with pytest.raises(NonInvertibleError, match="level 1"):
        convergent(spec, 1, 10)


def test_named_cf_bad_input():
    with pytest.raises(ValueError):
        named_cf("S4", "product", 10)
    with pytest.raises(ValueError):
        named_cf("S1", "sum", 10)


# -- Entry 12 with random monomial parameters ------------------------------------------

EXPS = [F(1, 4), F(1, 2), 1, F(3, 2), 2, 3]


@settings(max_examples=30)
@given(st.sampled_from(EXPS), st.sampled_from(EXPS), st.sampled_from([1, -1]),
       st.sampled_from([1, -1]), st.sampled_from([F(1, 2), 1, 2, F(7, 2)]))
def test_entry12_random(ea, eb, sa, sb, p):
    spec = CFSpec.entry12(mono(ea, sa), mono(eb, sb), p)
    rep = auto_depth(spec, 15)
    assert rep.stabilized
    assert rep.series == entry12_product(spec, 15)
