import pytest

from jugglingsp.errors import GoldenMismatch, RankTooLarge
from jugglingsp.mutations import check_golden, golden_mismatches, statistics
from jugglingsp.mutations.stats import histogram, poly_str, symplectic_grassmannian_euler, to_csv


def test_histogram_and_poly():
    assert histogram([0, 2, 2, 3]) == [1, 0, 2, 1]
    assert poly_str([1, 4, 6, 4]) == "4t^3 + 6t^2 + 4t + 1"


def test_small_statistics():
    s = statistics(2, 4)
    assert (s.chi, s.chi_sp, s.P, s.P_sp) == (33, 13, [1, 4, 10, 12, 6], [1, 3, 5, 4])
    assert s.top_dim_sp == 3 and s.n_top_cells_sp == 4 and not s.warnings
    check_golden(s)


def test_golden_mismatch_is_reported():
    s = statistics(1, 4)
    s.P_sp = [1, 4, 6, 5]
    assert golden_mismatches(s) == ["P_sp"]
    with pytest.raises(GoldenMismatch):
        check_golden(s)


def test_closed_form_counts():
    assert [symplectic_grassmannian_euler(k, 8) for k in range(5)] == [1, 8, 24, 32, 16]


def test_rank_too_large():
    with pytest.raises(RankTooLarge):
        statistics(3, 4)


def test_warning_for_38():
    s = statistics(3, 8)
    assert s.P_sp[-1] == 33 and s.n_top_cells_sp == 32
    assert any("33" in w and "32" in w for w in s.warnings)
    assert golden_mismatches(s) == []
    assert "WARNING" in to_csv([s])
