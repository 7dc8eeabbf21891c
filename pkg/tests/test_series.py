import json
import random
from fractions import Fraction

import pytest

from planarps import scalars
from planarps.series import (TruncatedPlanarSeries, add, catalan,
                             classical_image, constant_series, eval_series,
                             g_majorants, g_series, h_series, left_inverse,
                             majorants, monomial_series, mul2, mulk,
                             pow_series, right_inverse, scale,
                             scale_substitute, series_from_json,
                             series_to_json, sqrt_solve, unit_series,
                             x_series, zero_series)
from planarps.trees import LEAF, UNIT, enumerate_trees, parse


def test_constructor_drops_zeros_and_validates():
    f = TruncatedPlanarSeries({UNIT: Fraction(0), LEAF: Fraction(2)}, 3)
    assert f.terms == {LEAF: Fraction(2)}
    with pytest.raises(ValueError):
        TruncatedPlanarSeries({parse("(x,x)"): Fraction(1)}, 1)


def test_coeff_above_truncation_errors_unless_polynomial():
    f = x_series(2)
    assert f.coeff(parse("(x,(x,x))")) == 0  # polynomial: known zero
    g = g_series(2)
    with pytest.raises(ValueError):
        g.coeff(parse("(x,(x,x))"))


def test_addition_aligns_truncation():
    f = g_series(5)
    g = x_series(3)
    h = add(f, g)
    assert h.trunc == 3
    assert h.coeff(LEAF) == 2


def test_mul2_unit_absorption():
    two = constant_series(Fraction(2), 4)
    f = mul2(two, x_series(4))
    assert f.terms == {LEAF: Fraction(2)}
    assert mul2(unit_series(4), g_series(4)) == g_series(4)


def test_mul2_is_not_associative():
    x = x_series(3)
    left = mul2(mul2(x, x), x)
    right = mul2(x, mul2(x, x))
    assert left != right
    assert left.terms == {parse("((x,x),x)"): Fraction(1)}
    assert right.terms == {parse("(x,(x,x))"): Fraction(1)}


def test_mulk_builds_corollas_with_absorption():
    x = x_series(4)
    one = unit_series(4)
    f = mulk([x, x, x])
    assert f.terms == {parse("(x,x,x)"): Fraction(1)}
    g = mulk([x, one, x])
    assert g.terms == {parse("(x,x)"): Fraction(1)}


def test_pow_series_expands_shifted_leaf():
    f = add(unit_series(2), x_series(2))
    sq = pow_series(f, 2)
    assert sq.coeff(UNIT) == 1
    assert sq.coeff(LEAF) == 2
    assert sq.coeff(parse("(x,x)")) == 1


def test_distributivity_random():
    rng = random.Random(7)
    pool = [t for d in range(4) for t in enumerate_trees(d)]

    def rand_series():
        terms = {t: Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                 for t in rng.sample(pool, 4)}
        return TruncatedPlanarSeries(terms, 3)

    for _ in range(20):
        f, g, h = rand_series(), rand_series(), rand_series()
        assert mul2(f, add(g, h)) == add(mul2(f, g), mul2(f, h))
        assert mul2(add(f, g), h) == add(mul2(f, h), mul2(g, h))


def test_left_and_right_inverse_random():
    rng = random.Random(11)
    pool = [t for d in range(1, 6) for t in enumerate_trees(d)]
    one = unit_series(5)
    for _ in range(10):
        terms = {UNIT: Fraction(rng.randint(1, 5))}
        for t in rng.sample(pool, 6):
            terms[t] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        f = TruncatedPlanarSeries(terms, 5)
        assert mul2(left_inverse(f), f) == one
        assert mul2(f, right_inverse(f)) == one


def test_inverse_needs_nonzero_constant():
    with pytest.raises(ValueError):
        left_inverse(x_series(3))


def test_g_series_solves_its_quadratic():
    g = g_series(8)
    assert mul2(g, g) == g - x_series(8)


def test_h_is_g_with_scaled_argument():
    h = h_series(6)
    expect = scale_substitute(g_series(6), Fraction(-1, 4))
    assert h == expect


def test_sqrt_solve_recovers_one_minus_two_h():
    # (1 - 2h)^2 = 1 + x, so sqrt(1 + x) with root 1 is 1 - 2h
    n = 8
    u = add(unit_series(n), x_series(n))
    root = sqrt_solve(u, Fraction(1))
    assert root == unit_series(n) - scale(2, h_series(n))
    assert pow_series(root, 2) == u


def test_sqrt_solve_validates_constant_term():
    with pytest.raises(ValueError):
        sqrt_solve(x_series(3), Fraction(0))
    with pytest.raises(ValueError):
        sqrt_solve(unit_series(3), Fraction(2))


def test_eval_series_partial_sum():
    g = g_series(4)
    # 1*a + 1*a^2 + 2*a^3 + 5*a^4 at a = 1/2
    a = Fraction(1, 2)
    assert eval_series(g, a) == a + a ** 2 + 2 * a ** 3 + 5 * a ** 4


def test_classical_image_of_g_is_catalan():
    cats = classical_image(g_series(8))
    assert cats == [Fraction(v) for v in
                    (0, 1, 1, 2, 5, 14, 42, 132, 429)]


def test_majorants_and_closed_form_agree():
    assert majorants(g_series(9)) == g_majorants(9)
    f = TruncatedPlanarSeries({LEAF: -2 + 0j, parse("(x,x)"): 3j}, 2,
                              scalars.COMPLEX)
    assert majorants(f) == [0.0, 2.0, 3.0]


def test_catalan_values():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_scale_substitute_grades_by_degree():
    f = scale_substitute(g_series(4), Fraction(3))
    assert f.coeff(LEAF) == 3
    assert f.coeff(parse("(x,x)")) == 9


def test_json_round_trip_rational():
    f = g_series(4) - scale(Fraction(1, 3), x_series(4))
    data = series_to_json(f)
    assert json.loads(json.dumps(data)) == data
    assert series_from_json(data) == f


def test_json_round_trip_complex():
    f = TruncatedPlanarSeries({UNIT: 1.5 - 2j, LEAF: 0.25j}, 3, scalars.COMPLEX)
    back = series_from_json(series_to_json(f))
    assert back == f


def test_json_rejects_unknown_scalar():
    with pytest.raises(ValueError):
        series_from_json({"trunc": 1, "scalar": "decimal", "terms": []})


def test_zero_and_monomial_constructors():
    z = zero_series(4)
    assert z.terms == {} and z.is_polynomial
    m = monomial_series(parse("(x,x)"), 4, coefficient=Fraction(5))
    assert m.coeff(parse("(x,x)")) == 5
