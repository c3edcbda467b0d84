from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from qcfrac.errors import DivergentProductError
from qcfrac.identities import check, entry30_conjugate, entry30_product, entry30_split, entry30_square
from qcfrac.series import LaurentSeries, one
from qcfrac.theta import (SignedMonomial, chi, f_neg, mono, phi, pochhammer, pochhammer_multi, psi,
                          theta_product, theta_sum)

from oracles import as_dict, pochhammer_oracle, product_expand, rogers_ramanujan_cf, theta_oracle

F = Fraction


# -- pochhammer ----------------------------------------------------------------------

def test_pochhammer_examples():
    got = pochhammer(mono(1, -1), 1, 4)
    assert as_dict(got) == product_expand([(1, 1), (1, 2), (1, 3)], 4) == {0: 1, 1: 1, 2: 1, 3: 2}
    assert as_dict(pochhammer(mono(1), 1, 8)) == {0: 1, 1: -1, 2: -1, 5: 1, 7: 1}
    assert as_dict(pochhammer(mono(2), 2, 3)) == {0: 1, 2: -1}


@pytest.mark.parametrize("sign,exp,step,order", [
    (1, 1, 1, 30), (-1, 1, 1, 30), (1, F(1, 4), F(7, 2), 20), (-1, F(3, 2), 2, 25), (1, 6, 28, 90),
])
def test_pochhammer_matches_factor_listing(sign, exp, step, order):
    assert as_dict(pochhammer(mono(exp, sign), step, order)) == pochhammer_oracle(sign, exp, step, order)


def test_pochhammer_multi_examples():
    n = 12
    r = pochhammer_multi([(mono(1), 5, 1), (mono(4), 5, 1), (mono(2), 5, -1), (mono(3), 5, -1)], n)
    assert [r[k] for k in range(n)] == rogers_ramanujan_cf(n)
    assert pochhammer_multi([], 10) == one().truncate(10)
    six = pochhammer_multi([(mono(6), 28, 1), (mono(22), 28, 1)], 30)
    assert as_dict(six) == {0: 1, 6: -1, 22: -1, 28: 1}


def test_pochhammer_divergent():
    with pytest.raises(DivergentProductError, match="divergent product"):
        pochhammer(mono(0), 1, 10)
    with pytest.raises(DivergentProductError):
        pochhammer(mono(-1), 1, 10)


# -- theta functions --------------------------------------------------------------------

def test_theta_sum_examples():
    assert as_dict(theta_sum(mono(1), mono(1), 10)) == {0: 1, 1: 2, 4: 2, 9: 2}
    assert as_dict(theta_sum(mono(1), mono(3), 11)) == {0: 1, 1: 1, 3: 1, 6: 1, 10: 1}
    for a in (mono(1), mono(2), mono(F(1, 2))):
        assert theta_sum(mono(0, -1), a, 40).is_zero


def test_theta_sum_divergent():
    with pytest.raises(DivergentProductError):
        theta_sum(mono(1), mono(-1), 10)


def test_theta_product_examples():
    assert theta_product(mono(1), mono(1), 40) == theta_sum(mono(1), mono(1), 40)
    assert theta_product(mono(1, -1), mono(2, -1), 40) == pochhammer(mono(1), 1, 40)
    a, b = mono(F(1, 4)), mono(F(13, 4), -1)
    assert theta_product(a, b, 20) == theta_sum(a, b, 20)


def test_special_function_examples():
    assert as_dict(phi(1, 10)) == {0: 1, 1: 2, 4: 2, 9: 2}
    assert [e for e, _ in psi(7, 50).terms()] == [0, 7, 21, 42]
    assert as_dict(chi(1, 5)) == product_expand([(1, 1), (1, 3)], 5) == {0: 1, 1: 1, 3: 1, 4: 1}
    assert f_neg(1, 30) == pochhammer(mono(1), 1, 30)
    assert psi(mono(7, -1), 40) == theta_sum(mono(7, -1), mono(21, -1), 40)


def test_signed_monomial_arithmetic():
    a = SignedMonomial(-1, F(1, 4))
    assert a ** 3 == SignedMonomial(-1, F(3, 4))
    assert a ** 2 == SignedMonomial(1, F(1, 2))
    assert a / a == mono(0)
    assert str(-a) == "q^1/4"
    with pytest.raises(ValueError):
        SignedMonomial(2, F(1))


# -- properties ----------------------------------------------------------------------

EXPONENTS = [F(1, 4), F(1, 2), F(3, 4), 1, F(3, 2), 2, F(5, 2), 3, 4, 5, 6, 7]
monos = st.builds(lambda e, s: mono(e, s), st.sampled_from(EXPONENTS), st.sampled_from([1, -1]))


@given(monos, monos)
def test_jacobi_triple_product(a, b):
    assert theta_sum(a, b, 50) == theta_product(a, b, 50)


@given(monos, monos)
def test_theta_sum_matches_brute_force(a, b):
    expect = theta_oracle(a.sign, a.exp, b.sign, b.exp, 30)
    assert as_dict(theta_sum(a, b, 30)) == expect


@given(monos, monos)
def test_theta_symmetric(a, b):
    assert theta_sum(a, b, 40) == theta_sum(b, a, 40)


@given(monos, monos)
def test_entry30_split(a, b):
    assume((b / a).exp > 0)
    assert check(entry30_split(a, b, "split"), 40).passed


@given(monos, monos)
def test_entry30_product_and_conjugate(a, b):
    assert check(entry30_product(a, b, "product"), 40).passed
    assert check(entry30_conjugate(a, b, "conjugate"), 40).passed


@given(monos, monos)
def test_entry30_square(a, b):
    assume((b / a).exp > 0)
    assert check(entry30_square(a, b, "square"), 40).passed


def test_entry30_printed_instances():
    quarter, thirteen = F(1, 4), F(13, 4)
    for a, b in [(mono(quarter, -1), mono(thirteen)), (mono(quarter), mono(thirteen, -1))]:
        assert check(entry30_split(a, b, "s2/s3"), 60).passed
    assert check(entry30_product(mono(3, -1), mono(4, -1), "s7"), 60).passed
    assert check(entry30_conjugate(mono(quarter, -1), mono(thirteen), "s8"), 60).passed
    assert check(entry30_square(mono(quarter), mono(thirteen, -1), "s10"), 60).passed
    assert check(entry30_conjugate(mono(1), mono(27), "Vabc"), 100).passed
    assert check(entry30_conjugate(mono(13), mono(15), "Vabcd"), 100).passed


def test_exact_zero_theta_order():
    z = theta_sum(mono(0, -1), mono(1), 25)
    assert z == LaurentSeries({}, 25)
    assert z.order == 25
