# tests/test_feng_rao.py
# Feng-Rao counts and the order bound table

import pytest

from codes.feng_rao import build_table, d_ord, goppa_floor, horizon, nu
from semigroups.errors import FullSemigroupError
from semigroups.numerical_semigroup import NumericalSemigroup
from semigroups.oracles import brute_force_nu
from semigroups.suzuki_semigroups import nonrational_point_semigroup, rational_point_semigroup

GENERIC_Q8_NU = [2, 2, 2, 2, 3, 4, 2, 4, 4, 5, 2, 4, 4, 7, 6, 7, 6, 7, 6, 8, 10, 12, 12, 12, 12]
GENERIC_Q8_D_ORD = [2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 4, 6, 6, 6, 6, 6, 6, 8, 10, 12, 12, 12, 12]


def test_nu_counts_ordered_pairs():
    semigroup = NumericalSemigroup.from_generators([2, 3])
    # rho_2 = 2 -> (0, 2), (2, 0)
    assert nu(semigroup, 1) == 2
    assert nu(semigroup, 2) == 2
    # rho_4 = 4 -> (0, 4), (2, 2), (4, 0)
    assert nu(semigroup, 3) == 3


def test_nu_rejects_zero_index():
    with pytest.raises(ValueError):
        nu(NumericalSemigroup.from_generators([2, 3]), 0)


def test_nu_at_index_21_q8(params_8):
    assert nu(rational_point_semigroup(params_8), 21) == 8
    assert nu(nonrational_point_semigroup(params_8), 21) == 10


def test_generic_table_q8(params_8):
    table = build_table(nonrational_point_semigroup(params_8))
    assert table.horizon_L == 25
    assert list(table.nu_values) == GENERIC_Q8_NU
    assert list(table.d_ord_values) == GENERIC_Q8_D_ORD
    assert table.rows()[20] == (21, 34, 10, 10)


def test_rational_table_q8(params_8):
    table = build_table(rational_point_semigroup(params_8))
    assert table.horizon_L == 41
    assert table.rows()[20] == (21, 34, 8, 8)
    assert table.d_ord_at(41) == 28


@pytest.mark.parametrize("gens", [[2, 3], [3, 5], [3, 5, 7], [4, 6, 9], [5, 7, 11, 13]])
def test_table_agrees_with_direct_definition(gens):
    semigroup = NumericalSemigroup.from_generators(gens)
    table = build_table(semigroup)
    last = horizon(semigroup)
    for ell in range(1, last + 15):
        tail = min(brute_force_nu(semigroup, m) for m in range(ell, last + 15))
        assert d_ord(semigroup, ell) == table.d_ord_at(ell)
        assert table.d_ord_at(ell) == tail
        assert table.nu_at(ell) == brute_force_nu(semigroup, ell)
        assert table.rho_at(ell) == semigroup.element_at_index(ell)


@pytest.mark.parametrize("gens", [[3, 5], [3, 5, 7], [6, 7, 8, 17]])
def test_nu_is_linear_past_horizon(gens):
    semigroup = NumericalSemigroup.from_generators(gens)
    last = horizon(semigroup)
    for ell in range(last, last + 20):
        assert nu(semigroup, ell) == goppa_floor(semigroup, ell)
        assert d_ord(semigroup, ell) == ell + 1 - semigroup.genus


def test_d_ord_is_non_decreasing(params_8):
    table = build_table(rational_point_semigroup(params_8))
    values = [table.d_ord_at(ell) for ell in range(1, 60)]
    assert values == sorted(values)


def test_full_semigroup_has_no_table():
    with pytest.raises(FullSemigroupError):
        build_table(NumericalSemigroup.from_generators([1]))


def test_nu_of_full_semigroup():
    assert nu(NumericalSemigroup.from_generators([1]), 1) == 2


@pytest.mark.parametrize("build", [rational_point_semigroup, nonrational_point_semigroup])
def test_q8_tables_match_double_loop(params_8, build):
    semigroup = build(params_8)
    table = build_table(semigroup)
    for ell in range(1, table.horizon_L + 1):
        assert table.nu_at(ell) == brute_force_nu(semigroup, ell)
        assert table.d_ord_at(ell) >= goppa_floor(semigroup, ell)
        assert table.nu_at(ell) >= 2


@pytest.mark.parametrize("build", [rational_point_semigroup, nonrational_point_semigroup])
def test_q8_stabilization_past_horizon(params_8, build):
    semigroup = build(params_8)
    g, c = semigroup.genus, semigroup.conductor
    last = horizon(semigroup)
    for ell in range(last, last + 10):
        rho_next = semigroup.element_at_index(ell + 1)
        assert rho_next >= 2 * c - 1
        assert brute_force_nu(semigroup, ell) == rho_next + 1 - 2 * g
        assert nu(semigroup, ell) == rho_next + 1 - 2 * g
        assert d_ord(semigroup, ell) == ell + 1 - g
