import math
from fractions import Fraction

import pytest

from planarps.expfam import (coefficient_table, shift_identity_check, exp_coeff,
                             exp_coeff_float, exp_degree_sum, exp_majorants,
                             exp_rebase_terms, exp_series, npow,
                             translation_check)
from planarps.series import classical_image, majorants, mulk, scale_substitute
from planarps.trees import LEAF, UNIT, enumerate_trees, parse


def test_small_coefficients_by_hand():
    assert exp_coeff(UNIT, 2) == 1
    assert exp_coeff(LEAF, 2) == 1
    assert exp_coeff(parse("(x,x)"), 2) == Fraction(1, 2)
    # degree 3 binary: 1 * (1/2) / (2^3 - 2) = 1/12
    assert exp_coeff(parse("(x,(x,x))"), 2) == Fraction(1, 12)
    assert exp_coeff(parse("((x,x),x)"), 2) == Fraction(1, 12)
    # arity above k vanishes
    assert exp_coeff(parse("(x,x,x)"), 2) == 0
    assert exp_coeff(parse("(x,x,x)"), 3) == Fraction(1, 24)


def test_float_coefficients_track_exact():
    for d in range(7):
        for t in enumerate_trees(d):
            for k in (2, 3):
                assert exp_coeff_float(t, k) == pytest.approx(
                    float(exp_coeff(t, k)), rel=1e-12)


def test_degree_sums_are_inverse_factorials():
    for k in (2, 3, 4):
        for n in range(9):
            assert exp_degree_sum(k, n) == Fraction(1, math.factorial(n))


def test_exp_series_support_respects_arity():
    f = exp_series(2, 5)
    assert all(t.max_arity() <= 2 for t in f.terms)
    g = exp_series(3, 5)
    assert g.coeff(parse("(x,x,x)")) == Fraction(1, 24)


def test_classical_image_is_the_exponential():
    img = classical_image(exp_series(2, 7))
    assert img == [Fraction(1, math.factorial(n)) for n in range(8)]


def test_exp_majorants_match_materialized_series():
    assert majorants(exp_series(2, 8)) == pytest.approx(exp_majorants(2, 8))
    assert majorants(exp_series(4, 7)) == pytest.approx(exp_majorants(4, 7))


def test_defining_equation_exactly():
    # exp_k(x)^k = exp_k(k x) through the truncation
    for k in (2, 3):
        n = 6
        f = exp_series(k, n)
        lhs = mulk([f] * k).truncate(n)
        rhs = scale_substitute(f, Fraction(k)).truncate(n)
        assert lhs == rhs


def test_shift_identity():
    for t in enumerate_trees(3):
        for m in (0, 1, 2):
            assert shift_identity_check(t, m, 2)
    assert shift_identity_check(parse("(x,(x,x))"), 1, 3)


def test_invalid_arity_rejected():
    with pytest.raises(ValueError):
        exp_coeff(LEAF, 1)
    with pytest.raises(ValueError):
        exp_series(1, 3)


def test_translation_report_small():
    rep = translation_check(2, 0.25, 4, 1e-9, source_degree=12)
    assert rep.passed
    assert rep.max_discrepancy < 1e-9


def test_folded_rebase_matches_materialized_rebase():
    # the per-degree convolution must reproduce rebasing the materialized
    # series term for term
    from planarps import scalars
    from planarps.rebase import rebase_series
    lam = 0.3 - 0.1j
    k, n_out, source = 2, 4, 8
    folded = exp_rebase_terms(k, lam, n_out, source)
    f = exp_series(k, source, scalar=scalars.COMPLEX)
    direct = rebase_series(f, lam, n_out).series.terms
    assert set(folded) == set(direct)
    for t in folded:
        assert abs(folded[t] - direct[t]) < 1e-12


def test_npow_classical_image():
    # summing coefficients degree-wise gives (log n)^d / d!
    f = npow(5, 2, 6)
    img = classical_image(f)
    for d, v in enumerate(img):
        assert v == pytest.approx(math.log(5) ** d / math.factorial(d))


def test_coefficient_table_order_and_content():
    table = coefficient_table(2, 3)
    assert [str(t) for t, _ in table] == \
        ["1", "x", "(x,x)", "(x,(x,x))", "((x,x),x)"]
    assert dict((str(t), v) for t, v in table)["(x,x)"] == Fraction(1, 2)
