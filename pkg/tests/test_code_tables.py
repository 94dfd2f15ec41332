# tests/test_code_tables.py
# Generic versus rational point comparison rows

import pytest

from codes.code_tables import code_length, compare, compare_with_diagnostics
from handlers.reference_handler import ReferenceTableHandler
from semigroups.errors import CodeLengthError
from state.semigroup_state import CodeRecord

TABLE_Q8 = [
    (34, 4124, 4103, 10, 8),
    (35, 4124, 4102, 12, 10),
    (36, 4124, 4101, 12, 10),
]


def test_code_length(params_8, params_32):
    assert code_length(params_8) == 4124
    assert code_length(params_32) == 1048824
    assert code_length(params_8, 5000) == 5000


def test_table_q8(params_8):
    assert [record.as_row() for record in compare(params_8)] == TABLE_Q8


def test_diagnostics_q8(params_8):
    comparison = compare_with_diagnostics(params_8)
    assert comparison.n == 4124
    assert comparison.scan_limit == 41
    assert comparison.mismatched_indices == 11
    assert comparison.suppressed_records == 0
    assert [record.ell for record in comparison.records] == [21, 22, 23]


def test_length_override_moves_dimension(params_8):
    rows = [record.as_row() for record in compare(params_8, 5000)]
    assert rows == [(34, 5000, 4979, 10, 8), (35, 5000, 4978, 12, 10), (36, 5000, 4977, 12, 10)]


def test_table_q32_matches_published_rows(params_32):
    comparison = compare_with_diagnostics(params_32)
    rows = [record.as_row() for record in comparison.records]
    assert len(rows) == 69
    assert rows[0] == (261, 1048824, 1048686, 38, 32)
    assert rows[-1] == (390, 1048824, 1048557, 145, 144)
    assert rows == sorted(rows)
    assert comparison.suppressed_records == 0
    assert ReferenceTableHandler().diff(32, comparison.records).matches


def test_every_row_improves_the_bound(params_32):
    for record in compare(params_32):
        assert record.d1 > record.d2
        assert record.d2 >= record.ell + 1 - params_32.genus_g
        assert record.dim == record.n - record.ell


def test_record_rejects_inconsistent_dimension():
    with pytest.raises(ValueError):
        CodeRecord(q=8, ell=21, rho_ell=34, n=4124, dim=4100, d1=10, d2=8)


@pytest.mark.parametrize("length", [1, 10, 41])
def test_length_must_exceed_scan_limit(params_8, length):
    with pytest.raises(CodeLengthError):
        compare(params_8, length)


def test_shortest_accepted_length(params_8):
    rows = [record.as_row() for record in compare(params_8, 42)]
    assert rows[0] == (34, 42, 21, 10, 8)
    assert all(row[2] >= 1 for row in rows)


def test_record_rejects_non_positive_dimension():
    with pytest.raises(ValueError):
        CodeRecord(q=8, ell=21, rho_ell=34, n=10, dim=-11, d1=10, d2=8)
