from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gaussian_partitions.exact import (
    IntPolynomial,
    NonExactDivision,
    NonUnitConstantTerm,
    PeriodicRational,
    poly_add,
    poly_div_exact,
    poly_mul,
    poly_prod,
    rational_cos_turn,
    series_inverse_trunc,
    solve_exact,
)
from oracles import brute_w, poly_eval

P = IntPolynomial
coeff_lists = st.lists(st.integers(-100, 100), max_size=17)
polys = coeff_lists.map(lambda c: P(tuple(c)))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_normal_form_strips_trailing_zeros():
    assert P((1, 2, 0, 0)).coeffs == (1, 2)
    assert P((0, 0)).coeffs == ()
    assert P(()).degree == -1


def test_mul_difference_of_squares():
    assert poly_mul(P((1, -1)), P((1, 1))) == P((1, 0, -1))


def test_mul_identity():
    assert poly_mul(P((1, 1, 1)), P((1,))) == P((1, 1, 1))


def test_mul_cube():
    x = P((1, 1))
    assert x * x * x == P((1, 3, 3, 1))


def test_mul_degree():
    a, b = P((1, 2, 3)), P((0, 0, 5))
    assert poly_mul(a, b).degree == a.degree + b.degree
    assert poly_mul(a, P()).is_zero()


@given(polys, polys)
def test_mul_matches_pointwise_evaluation(a, b):
    prod = poly_mul(a, b)
    for x in (-3, -1, 0, 2, 7):
        assert poly_eval(prod.coeffs, x) == poly_eval(a.coeffs, x) * poly_eval(b.coeffs, x)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, nonzero_polys)
def test_division_round_trip(a, b):
    assert poly_div_exact(poly_mul(a, b), b) == a


def test_div_geometric():
    assert poly_div_exact(P((1, 0, -1)), P((1, -1))) == P((1, 1))


def test_div_perfect_square():
    assert poly_div_exact(P((1, 2, 1)), P((1, 1))) == P((1, 1))


def test_div_gaussian_three_two():
    num = poly_prod(P.one_minus_t_pow(i) for i in range(1, 6))
    den = poly_prod([P.one_minus_t_pow(u) for u in (1, 2, 3)] + [P.one_minus_t_pow(v) for v in (1, 2)])
    assert poly_div_exact(num, den) == P((1, 1, 2, 2, 2, 1, 1))


def test_div_with_power_of_t_factor():
    assert poly_div_exact(P((0, 0, 1, 1)), P((0, 1))) == P((0, 1, 1))


def test_div_reports_first_bad_index():
    # (1 + t + t^2) / (1 + t) leaves remainder at t^2
    with pytest.raises(NonExactDivision) as e:
        poly_div_exact(P((1, 1, 1)), P((1, 1)))
    assert e.value.index == 2
    with pytest.raises(NonExactDivision) as e:
        poly_div_exact(P((3, 1)), P((2, 1)))
    assert e.value.index == 0


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_div_exact(P((1,)), P())


def test_inverse_geometric():
    assert series_inverse_trunc(P((1, -1)), 4) == [1, 1, 1, 1, 1]


def test_inverse_parts_one_two():
    p = poly_mul(P.one_minus_t_pow(1), P.one_minus_t_pow(2))
    expected = [brute_w(s, (1, 2)) for s in range(6)]
    assert expected == [1, 1, 2, 2, 3, 3]
    assert series_inverse_trunc(p, 5) == expected


def test_inverse_order_zero():
    assert series_inverse_trunc(P((1, 5, -7)), 0) == [1]


def test_inverse_rejects_non_unit():
    with pytest.raises(NonUnitConstantTerm):
        series_inverse_trunc(P((2, 1)), 3)


@given(coeff_lists, st.integers(0, 20), st.integers(0, 20))
def test_inverse_truncation_is_prefix(tail, k1, k2):
    p = P((1, *tail))
    lo, hi = sorted((k1, k2))
    assert series_inverse_trunc(p, hi)[: lo + 1] == series_inverse_trunc(p, lo)


@given(coeff_lists, st.integers(0, 15))
def test_inverse_times_p_is_one(tail, k):
    p = P((-1, *tail))
    inv = series_inverse_trunc(p, k)
    prod = poly_mul(p, P(tuple(inv)))
    assert [prod[i] for i in range(k + 1)] == [1] + [0] * k


def test_periodic_from_cos_pi():
    cos_pi = PeriodicRational.cos_turns(1, 2)
    table = PeriodicRational(2, (1, -1))
    assert cos_pi == table
    assert all(cos_pi(s) == (-1) ** s for s in range(51))


def test_periodic_validation():
    with pytest.raises(ValueError):
        PeriodicRational(0, ())
    with pytest.raises(ValueError):
        PeriodicRational(3, (1, 2))


def test_periodic_equality_over_lcm():
    assert PeriodicRational(2, (1, 0)) == PeriodicRational(4, (1, 0, 1, 0))
    assert PeriodicRational(2, (1, 0)) != PeriodicRational(3, (1, 0, 1))
    assert PeriodicRational(6, (5,) * 6).minimal().period == 1


def test_periodic_arithmetic_and_mean():
    a = PeriodicRational.cos_turns(1, 4) + PeriodicRational.sin_turns(1, 4)
    assert a.values == (1, 1, -1, -1)
    assert a.mean() == 0
    b = a * Fraction(1, 16) + Fraction(3, 4)
    assert b(2) == Fraction(11, 16)


def test_rational_cos_only_for_rational_values():
    assert rational_cos_turn(Fraction(1, 3)) == Fraction(-1, 2)
    assert rational_cos_turn(Fraction(7, 6)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        rational_cos_turn(Fraction(1, 5))


def test_solve_exact():
    assert solve_exact([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]


def test_poly_str():
    assert str(P((1, 1, 2, 2, 2, 1, 1))) == "1 + t + 2t^2 + 2t^3 + 2t^4 + t^5 + t^6"
    assert str(P((0, -1))) == "-t"
    assert str(poly_add(P((1,)), P((-1,)))) == "0"
