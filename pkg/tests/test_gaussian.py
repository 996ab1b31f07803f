import pytest

from gaussian_partitions.exact import IntPolynomial
from gaussian_partitions.gaussian import (
    GaussianTable,
    OutOfTheoremRange,
    check_convolution_residual,
    compare_tables,
    corollary1_check,
    gaussian_by_division,
    gaussian_by_oracle,
    gaussian_by_recurrence,
    theorem1_violations,
    theorem2_branches,
    theorem2_piecewise,
)
from gaussian_partitions.partitions import count_consecutive
from oracles import brute_p, pascal

GOLDEN = [1, 1, 2, 2, 2, 1, 1]


def test_division_golden():
    t = gaussian_by_division(3, 2)
    assert t.values() == GOLDEN
    assert t.method == "division"
    assert (t.mu1, t.mu2) == (2, 3)


def test_division_single_row():
    for m in range(1, 8):
        assert gaussian_by_division(1, m).values() == [1] * (m + 1)


def test_division_midpoint():
    assert brute_p(8, 4, 4) == 8
    assert gaussian_by_division(4, 4)[8] == 8


def test_recurrence_examples():
    assert gaussian_by_recurrence(2, 2).values() == [brute_p(s, 2, 2) for s in range(5)] == [1, 1, 2, 1, 1]
    assert gaussian_by_recurrence(1, 1).values() == [1, 1]
    assert gaussian_by_recurrence(3, 2).values() == GOLDEN


def test_bad_args():
    with pytest.raises(ValueError):
        gaussian_by_division(0, 3)
    with pytest.raises(ValueError):
        gaussian_by_recurrence(2, -1)


@pytest.mark.parametrize("n", range(1, 9))
def test_routes_agree(n):
    for m in range(1, 9):
        tables = [gaussian_by_division(n, m), gaussian_by_recurrence(n, m), gaussian_by_oracle(n, m)]
        assert compare_tables(tables, n * m) == []
        assert sum(tables[0].values()) == pascal(n + m, n)
        assert theorem1_violations(tables[0], gaussian_by_division(m, n)) == []


def test_theorem1_violations_detected():
    bad = GaussianTable(2, 2, IntPolynomial((1, 2, 1, 1, 1)), "test")
    names = theorem1_violations(bad, gaussian_by_division(2, 2))
    assert "palindrome" in names and "n<->m symmetry" in names
    dip = GaussianTable(2, 2, IntPolynomial((1, 0, 1, 0, 1)), "test")
    assert "unimodality" in theorem1_violations(dip)
    long = GaussianTable(1, 1, IntPolynomial((1, 1, 1)), "test")
    assert any(v.startswith("vanishing") for v in theorem1_violations(long))


def test_theorem2_examples():
    w = count_consecutive
    assert w(4, 3) + w(4, 2) - w(4, 5) == 4 + 3 - 5 == 2
    assert theorem2_piecewise(3, 2, 4) == 2
    assert theorem2_piecewise(3, 2, 1) == 1
    assert all(theorem2_piecewise(n, m, 0) == 1 for n in range(1, 5) for m in range(1, 5))


def test_theorem2_range():
    with pytest.raises(OutOfTheoremRange):
        theorem2_piecewise(3, 2, 6)


def test_theorem2_matches_table():
    for n in range(1, 11):
        for m in range(1, 11):
            t = gaussian_by_recurrence(n, m)
            assert [theorem2_piecewise(n, m, g) for g in range(n + m + 1)] == t.values(n + m)


def test_theorem2_branches_agree_at_boundaries():
    for n in range(1, 11):
        for m in range(1, 11):
            for g in {min(n, m), max(n, m)}:
                vals = theorem2_branches(n, m, g)
                assert len(vals) >= 2 and len(set(vals.values())) == 1


def test_residual_examples():
    assert check_convolution_residual(3, 2, 6).deltas[6] == 0
    assert check_convolution_residual(1, 1, 0).deltas == [0]
    assert check_convolution_residual(2, 2, 12).ok


def test_residual_sweep():
    for n in range(1, 7):
        for m in range(1, 7):
            rep = check_convolution_residual(n, m, 2 * n * m)
            assert rep.ok, rep.nonzero()


def test_residual_flags_bad_table():
    bad = GaussianTable(3, 2, IntPolynomial((1, 1, 2, 3, 2, 1, 1)), "test")
    rep = check_convolution_residual(3, 2, 8, table=bad)
    assert not rep.ok
    assert rep.nonzero()[0][0] == 3


def test_corollary1_examples():
    rep = corollary1_check(3, 4, 4, 12)
    assert rep.ok and rep.expected == 4 and sorted(rep.values) == list(range(4, 13))
    assert corollary1_check(5, 0, 1).expected == 1
    assert corollary1_check(2, 5, 5).ok and corollary1_check(2, 5, 5).expected == 3


def test_corollary1_sweep():
    for n in range(1, 7):
        for s in range(11):
            assert corollary1_check(n, s, 1, 20).ok


def test_corollary1_needs_m_at_least_s():
    # Below the threshold the part bound still bites: P_2^2(3) = 1 but W_2(3) = 2.
    assert gaussian_by_division(2, 2)[3] == 1
    assert count_consecutive(3, 2) == 2
