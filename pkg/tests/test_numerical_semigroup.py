# tests/test_numerical_semigroup.py
# Construction, invariants and queries of NumericalSemigroup

import numpy as np
import pytest

from semigroups.errors import (
    EmptyGeneratorsError,
    FullSemigroupError,
    GcdNotOneError,
    InvalidGeneratorError,
    NotAnElementError,
    SemigroupTooLargeError,
)
from semigroups.numerical_semigroup import NumericalSemigroup


@pytest.mark.parametrize(
    "gens, gaps, conductor",
    [
        ([2, 3], [1], 2),
        ([3, 5], [1, 2, 4, 7], 8),
        ([3, 5, 7], [1, 2, 4], 5),
        ([4, 6, 9], [1, 2, 3, 5, 7, 11], 12),
        ([8, 12, 14, 15, 21, 25], [1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 13, 17, 18, 19], 20),
        ([8, 10, 12, 13], [1, 2, 3, 4, 5, 6, 7, 9, 11, 14, 15, 17, 19, 27], 28),
    ],
)
def test_gaps_and_conductor(gens, gaps, conductor):
    semigroup = NumericalSemigroup.from_generators(gens)
    assert semigroup.gaps() == gaps
    assert semigroup.genus == len(gaps)
    assert semigroup.conductor == conductor
    assert semigroup.frobenius == conductor - 1


def test_full_semigroup():
    semigroup = NumericalSemigroup.from_generators([1])
    assert semigroup.genus == 0
    assert semigroup.conductor == 0
    assert semigroup.frobenius == -1
    assert semigroup.gaps() == []
    assert semigroup.small_elements == []
    with pytest.raises(FullSemigroupError):
        semigroup.is_symmetric()


def test_generator_normalization():
    semigroup = NumericalSemigroup.from_generators([5, 3, 5, 3])
    assert semigroup.generators == [3, 5]
    assert semigroup.multiplicity == 3
    assert semigroup == NumericalSemigroup.from_generators([3, 5])


@pytest.mark.parametrize(
    "gens, error",
    [
        ([], EmptyGeneratorsError),
        ([0, 3], InvalidGeneratorError),
        ([-2, 3], InvalidGeneratorError),
        ([4, 6], GcdNotOneError),
    ],
)
def test_invalid_generators(gens, error):
    with pytest.raises(error):
        NumericalSemigroup.from_generators(gens)


def test_gcd_error_carries_divisor():
    with pytest.raises(GcdNotOneError) as excinfo:
        NumericalSemigroup.from_generators([6, 10, 14])
    assert excinfo.value.gcd == 2


def test_max_bound_is_enforced(monkeypatch, fresh_settings):
    monkeypatch.setenv("SUZUKI_MAX_BOUND", "10")
    with pytest.raises(SemigroupTooLargeError):
        NumericalSemigroup.from_generators([7, 11])


def test_contains_beyond_table():
    semigroup = NumericalSemigroup.from_generators([3, 5])
    assert 7 not in semigroup
    assert 8 in semigroup
    assert semigroup.contains(10 ** 9)
    assert not semigroup.contains(-3)


def test_membership_upto_extends_past_bound():
    semigroup = NumericalSemigroup.from_generators([3, 5])
    table = semigroup.membership_upto(semigroup.bound + 20)
    assert len(table) == semigroup.bound + 21
    assert table[semigroup.conductor:].all()
    np.testing.assert_array_equal(table[:8], [True, False, False, True, False, True, True, False])


def test_membership_is_read_only():
    semigroup = NumericalSemigroup.from_generators([3, 5])
    with pytest.raises(ValueError):
        semigroup.membership[1] = True


@pytest.mark.parametrize(
    "gens, symmetric",
    [
        ([3, 5], True),
        ([3, 5, 7], False),
        ([8, 10, 12, 13], True),
        ([8, 12, 14, 15, 21, 25], False),
    ],
)
def test_symmetry(gens, symmetric):
    assert NumericalSemigroup.from_generators(gens).is_symmetric() is symmetric


@pytest.mark.parametrize(
    "gens, minimal",
    [
        ([3, 5, 6, 8, 9, 10], [3, 5]),
        ([3, 5, 7], [3, 5, 7]),
        ([8, 12, 14, 15, 16, 20, 21, 25], [8, 12, 14, 15, 21, 25]),
    ],
)
def test_minimal_generating_set(gens, minimal):
    assert NumericalSemigroup.from_generators(gens).minimal_generating_set() == minimal


def test_element_index_round_trip():
    semigroup = NumericalSemigroup.from_generators([3, 5])
    assert [semigroup.element_at_index(ell) for ell in range(1, 8)] == [0, 3, 5, 6, 8, 9, 10]
    for ell in range(1, 40):
        assert semigroup.index_of(semigroup.element_at_index(ell)) == ell


def test_index_of_gap_raises():
    semigroup = NumericalSemigroup.from_generators([3, 5])
    with pytest.raises(NotAnElementError):
        semigroup.index_of(7)
    with pytest.raises(ValueError):
        semigroup.element_at_index(0)


def test_bound_request_is_honoured():
    semigroup = NumericalSemigroup.from_generators([3, 5], bound=500)
    assert semigroup.bound == 500
    assert semigroup.genus == 4


def test_index_examples_q8_rational():
    semigroup = NumericalSemigroup.from_generators([8, 10, 12, 13])
    assert semigroup.index_of(34) == 21
    assert semigroup.index_of(8) == 2
    assert semigroup.index_of(0) == 1
    assert semigroup.element_at_index(21) == 34
    assert semigroup.element_at_index(2) == 8
