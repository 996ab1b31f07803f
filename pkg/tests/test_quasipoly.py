from fractions import Fraction
from math import factorial

import pytest

from gaussian_partitions.exact import PeriodicRational
from gaussian_partitions.partitions import consecutive_table
from gaussian_partitions.quasipoly import (
    NonIntegralValue,
    QuasiPolynomial,
    UnsupportedOrder,
    builtin_w,
    evaluate,
    fit_consecutive,
    reference_residual,
    reference_value,
    trig_sqrt5,
)
from oracles import brute_w


@pytest.mark.parametrize("m", [2, 3, 5])
def test_builtin_matches_dp(m):
    q = builtin_w(m)
    table = consecutive_table(m, 200)
    assert [q.evaluate(s) for s in range(201)] == list(table)


def test_builtin_spot_values():
    assert brute_w(6, (1, 2)) == 4
    assert builtin_w(2).evaluate(6) == 4
    assert builtin_w(3).evaluate(0) == 1
    assert builtin_w(5).evaluate(5) == 7
    assert evaluate(builtin_w(2), 1) == 1
    assert builtin_w(3)(3) == 3
    assert builtin_w(5)(0) == 1


def test_w2_literal_terms():
    # s/2 + 3/4 + cos(pi s)/4 at s=6 and s=1
    assert Fraction(6, 2) + Fraction(3, 4) + Fraction(1, 4) == 4
    assert Fraction(1, 2) + Fraction(3, 4) - Fraction(1, 4) == 1


@pytest.mark.parametrize("m", [2, 3, 5])
def test_leading_coefficient(m):
    q = builtin_w(m)
    assert q.degree == m - 1
    assert q.poly_coeffs[m - 1] == Fraction(1, factorial(m - 1) * factorial(m))


def test_polynomial_parts_match_tabulated():
    assert builtin_w(2).poly_coeffs == (Fraction(3, 4), Fraction(1, 2))
    assert builtin_w(3).poly_coeffs == (Fraction(47, 72), Fraction(1, 2), Fraction(1, 12))
    assert builtin_w(5).poly_coeffs == (
        Fraction(50651, 86400), Fraction(85, 192), Fraction(31, 288), Fraction(1, 96), Fraction(1, 2880),
    )


def test_w5_linear_coefficient_alternates():
    q = builtin_w(5)
    assert q.periodic_parts[1] == PeriodicRational(2, (Fraction(1, 64), Fraction(-1, 64)))
    # Second differences of W_5 against the quasi-polynomial at s and s+2.
    table = consecutive_table(5, 60)
    for s in range(55):
        assert q.evaluate(s + 2) - q.evaluate(s) == table[s + 2] - table[s]


def test_detected_periods():
    assert builtin_w(2).period == 2
    assert builtin_w(3).period == 6
    # Period-4, period-3 and period-5 components force the full lcm.
    assert builtin_w(5).period == 60
    assert builtin_w(5).coeffs[0].period == 60


def test_w5_constant_term_components():
    k0 = builtin_w(5).coeffs[0]
    assert k0.mean() == Fraction(50651, 86400)
    # Averaging over residues congruent mod 4 keeps the period-4 and
    # period-2 components: (cos(pi s/2) + sin(pi s/2))/16 + (15/128) cos(pi s).
    quarter = PeriodicRational.cos_turns(1, 4) + PeriodicRational.sin_turns(1, 4)
    half = PeriodicRational.cos_turns(1, 2)
    proj = PeriodicRational.from_function(
        4, lambda c: sum(k0(c + 4 * j) for j in range(15)) / 15 - k0.mean()
    )
    assert proj == quarter * Fraction(1, 16) + half * Fraction(15, 128)


@pytest.mark.parametrize("m", [2, 3])
def test_reference_forms_exact(m):
    for s in range(100):
        assert reference_residual(m, s) == (0, 0)


def test_w5_reference_form_misses_companion_term():
    # The tabulated W_5 carries (2/25) cos(4 pi s/5) alone, which is
    # irrational at s = 1; the true count needs (2/25) cos(2 pi s/5) too.
    assert reference_value(5, 1)[1] != 0
    for s in range(100):
        ca, cb = trig_sqrt5("cos", Fraction(s, 5))
        assert reference_residual(5, s) == (-Fraction(2, 25) * ca, -Fraction(2, 25) * cb)


@pytest.mark.parametrize("m", [1, 4, 6, 7])
def test_fit_other_orders(m):
    q = fit_consecutive(m)
    table = consecutive_table(m, 150)
    assert [q.evaluate(s) for s in range(151)] == list(table)
    assert q.poly_coeffs[-1] == Fraction(1, factorial(m - 1) * factorial(m))


def test_unsupported_order():
    with pytest.raises(UnsupportedOrder):
        builtin_w(4)


def test_non_integral_detected():
    bad = QuasiPolynomial((PeriodicRational(1, (Fraction(1, 2),)),))
    with pytest.raises(NonIntegralValue):
        bad.evaluate(3)
