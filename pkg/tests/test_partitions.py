import pytest
from hypothesis import given, strategies as st

from qcfrac.partitions import (NAMED_SPECS, PartitionSpec, colour_spec, counts_as_series,
                               enum_counts, gf_counts, partition_count_brute, pm,
                               thm32_small_cases, verify_gf_identities, verify_thm31, verify_thm32,
                               y4_terms, three_term_check)
from qcfrac.series import LaurentSeries

from oracles import colour_partitions, partitions_listed, pm_part_colours

GROUPS = {
    "C1": [((1, 13), 1), ((6, 14), 2)],
    "C2": [((1, 13), 1), ((8, 14), 2)],
    "C3": [((6, 7, 8), 2)],
    "D1": [((6, 8), 1), ((1, 14), 2)],
    "D2": [((6, 8), 1), ((13, 14), 2)],
    "D3": [((1, 7, 13), 2)],
}


def test_two_colour_partitions_of_three():
    assert gf_counts(colour_spec(2), 3)[3] == 10
    assert enum_counts(colour_spec(2), 3)[3] == 10
    assert len(colour_partitions(3, {1: 2, 2: 2, 3: 2})) == 10


@pytest.mark.parametrize("name,n,value", [
    ("C1", 7, 3), ("C2", 6, 1), ("C3", 7, 2), ("D1", 6, 8), ("D2", 0, 1), ("D3", 6, 7),
])
def test_table_values(name, n, value):
    spec = NAMED_SPECS[name]
    assert gf_counts(spec, n)[n] == value
    assert enum_counts(spec, n)[n] == value


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_counts_match_explicit_listing(name):
    n_max = 30
    colours = pm_part_colours(28, GROUPS[name], n_max)
    expect = [len(colour_partitions(n, colours)) for n in range(n_max + 1)]
    assert gf_counts(NAMED_SPECS[name], n_max).counts == expect


def test_table_listings():
    # C1(7): 6 in two colours plus 1, or seven 1s
    listed = colour_partitions(7, pm_part_colours(28, GROUPS["C1"], 7))
    assert sorted(tuple(p for p, _ in x) for x in listed) == [(1,) * 7, (6, 1), (6, 1)]
    # D1(6): the part 6 alone, or six 1s in two colours (7 ways)
    assert len(colour_partitions(6, pm_part_colours(28, GROUPS["D1"], 6))) == 8


@pytest.mark.parametrize("name", sorted(NAMED_SPECS))
def test_gf_equals_enum_through_200(name):
    spec = NAMED_SPECS[name]
    assert gf_counts(spec, 200).counts == enum_counts(spec, 200).counts


def test_empty_partition():
    for spec in NAMED_SPECS.values():
        assert enum_counts(spec, 0).counts == [1]
        assert gf_counts(spec, 0).counts == [1]


def test_self_paired_class_doubles():
    assert dict(NAMED_SPECS["C1"].expanded())[14] == 4
    assert dict(NAMED_SPECS["C3"].expanded()) == {6: 2, 7: 2, 8: 2, 20: 2, 21: 2, 22: 2}


def test_spec_validation():
    with pytest.raises(ValueError):
        PartitionSpec(28, ((0, 1),))
    with pytest.raises(ValueError):
        PartitionSpec(28, ((3, 0),))
    with pytest.raises(ValueError):
        gf_counts(NAMED_SPECS["C1"], -1)


def test_theorem_31():
    assert verify_thm31(7).passed
    c1, c2, c3 = (gf_counts(NAMED_SPECS[k], 7) for k in ("C1", "C2", "C3"))
    assert c1[1] - c2[0] - c3[1] == 1 - 1 - 0 == 0
    assert c1[7] - c2[6] - c3[7] == 3 - 1 - 2 == 0
    assert verify_thm31(200).passed


def test_theorem_32():
    d1, d2, d3 = (gf_counts(NAMED_SPECS[k], 7) for k in ("D1", "D2", "D3"))
    assert d1[6] - d2[0] - d3[6] == 8 - 1 - 7 == 0
    assert d1[7] - d2[1] - d3[7] == 0
    assert verify_thm32(200).passed


def test_theorem_32_small_cases_reported():
    cases = thm32_small_cases(5)
    assert [n for n, _ in cases] == [1, 2, 3, 4, 5]
    assert all(diff == 0 for _, diff in cases)


def test_gf_identities():
    assert all(r.passed for r in verify_gf_identities(100))


def test_perturbed_y4_fails():
    a, b, c = y4_terms(60)
    r = three_term_check("y4.fault", (a + LaurentSeries({5: 1}), b, c), 60)
    assert r.status == "fail" and r.first_mismatch[0] == 5


def test_partition_numbers():
    for n in range(15):
        assert partition_count_brute(n) == len(partitions_listed(n))
    assert counts_as_series(gf_counts(colour_spec(1), 10)).coefficient(9) == 30


@given(st.lists(st.tuples(st.integers(1, 12), st.integers(1, 3)), min_size=1, max_size=4,
                unique_by=lambda t: t[0]),
       st.integers(12, 13), st.booleans())
def test_gf_enum_agree_random(classes, modulus, symmetric):
    spec = PartitionSpec(modulus, tuple(classes), symmetric)
    assert gf_counts(spec, 60).counts == enum_counts(spec, 60).counts


@given(st.lists(st.tuples(st.integers(1, 10), st.integers(1, 2)), min_size=1, max_size=3,
                unique_by=lambda t: t[0]), st.integers(0, 9))
def test_adding_colour_never_decreases(classes, which):
    spec = PartitionSpec(10, tuple(classes), False)
    i = which % len(classes)
    more = list(classes)
    more[i] = (more[i][0], more[i][1] + 1)
    base, bigger = enum_counts(spec, 40), enum_counts(PartitionSpec(10, tuple(more), False), 40)
    assert all(x >= 0 for x in base.counts)
    assert all(y >= x for x, y in zip(base.counts, bigger.counts))


def test_pm_helper():
    assert pm(28, ((6, 14), 2)) == PartitionSpec(28, ((6, 2), (14, 2)), True)
