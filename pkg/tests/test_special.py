import math

import numpy as np
import pytest
from scipy.special import zeta as scipy_zeta

from planarps.expfam import exp_coeff_float
from planarps.special import (GammaGermSpec, ZetaGermSpec, gamma_deriv,
                              gamma_deriv_polygamma, gamma_germ,
                              gamma_shift_probe, zeta_continue,
                              zeta_continue_deep, zeta_deriv, zeta_germ,
                              zeta_majorants)
from planarps.trees import enumerate_trees, parse


def test_zeta_values_against_scipy():
    assert zeta_deriv(0, 2) == pytest.approx(math.pi ** 2 / 6, abs=1e-12)
    for r in (1.5, 2.0, 3.0, 4.5):
        assert zeta_deriv(0, r) == pytest.approx(float(scipy_zeta(r, 1)),
                                                 abs=1e-11)


def test_zeta_derivative_against_finite_differences():
    h = 1e-5
    for r in (2.0, 3.0):
        for d in (1, 2, 3):
            fd = (zeta_deriv(d - 1, r + h) - zeta_deriv(d - 1, r - h)) / (2 * h)
            # S_d = -d/dr S_{d-1}
            assert zeta_deriv(d, r) == pytest.approx(-fd, abs=1e-6)


def test_zeta_cutoff_independence():
    # the tail integral plus corrections must absorb the cutoff choice
    for r in (2 + 0.5j, 1.3, 3.0):
        for d in (0, 1, 2):
            a = zeta_deriv(d, r, cutoff=100_000)
            b = zeta_deriv(d, r, cutoff=25_000)
            assert abs(a - b) < 1e-10 * max(1.0, abs(a))


def test_zeta_domain_validation():
    with pytest.raises(ValueError):
        zeta_deriv(0, 1.0)
    with pytest.raises(ValueError):
        zeta_deriv(-1, 2.0)


def test_gamma_quadrature_matches_polygamma():
    for d in range(5):
        for r in (0.5, 1.5, 2.5):
            q = gamma_deriv(d, r)
            p = gamma_deriv_polygamma(d, r)
            assert abs(q - p) <= 1e-8 * abs(p)


def test_gamma_known_values():
    assert gamma_deriv(0, 1.0).real == pytest.approx(1.0, abs=1e-10)
    assert gamma_deriv(0, 0.5).real == pytest.approx(math.sqrt(math.pi),
                                                     rel=1e-10)
    # Gamma'(1) = -euler_gamma
    assert gamma_deriv(1, 1.0).real == pytest.approx(-np.euler_gamma,
                                                     rel=1e-8)


def test_gamma_domain_validation():
    with pytest.raises(ValueError):
        gamma_deriv(0, 0.0)
    with pytest.raises(ValueError):
        GammaGermSpec(r=-1.0, trunc=3)


def test_germ_coefficients_factor():
    spec = ZetaGermSpec(r=3.0, trunc=4)
    germ = zeta_germ(spec)
    for d in range(5):
        s = zeta_deriv(d, 3.0)
        for t in enumerate_trees(d, max_arity=2):
            assert complex(germ.series.terms.get(t, 0)) == pytest.approx(
                exp_coeff_float(t, 2) * s)


def test_zeta_majorants_match_germ():
    from planarps.series import majorants
    germ = zeta_germ(ZetaGermSpec(r=3.0, trunc=6))
    assert majorants(germ.series) == pytest.approx(zeta_majorants(3.0, 6))


def test_zeta_spec_validation():
    with pytest.raises(ValueError):
        ZetaGermSpec(r=0.5, trunc=3)
    with pytest.raises(ValueError):
        ZetaGermSpec(r=2.0, trunc=3, k=1)


def test_continuation_disk_guard():
    germ = zeta_germ(ZetaGermSpec(r=3.0, trunc=4))
    with pytest.raises(ValueError):
        zeta_continue(germ, 0.9, 4)
    with pytest.raises(ValueError):
        zeta_continue_deep(3.0, 0.9, 4, 8)


def test_continuation_deep_matches_generic_rebase():
    # the folded path must equal rebasing the materialized germ
    germ = zeta_germ(ZetaGermSpec(r=3.0, trunc=8))
    generic = zeta_continue(germ, 2.5, 3)
    deep = zeta_continue_deep(3.0, 2.5, 3, 8)
    assert deep.series.max_discrepancy(generic.series) < 1e-10


def test_continuation_converges_to_direct_germ():
    deep = zeta_continue_deep(3.0, 2.2, 4, 16)
    direct = zeta_germ(ZetaGermSpec(r=2.2, trunc=4))
    assert deep.series.max_discrepancy(direct.series) < 1e-3


def test_gamma_shift_probe_structure():
    rep = gamma_shift_probe(1.5, 3)
    assert rep.max_rel_difference(0) < 1e-8
    assert rep.max_rel_difference(1) < 1e-8
    assert rep.max_rel_difference(2) < 1e-8
    left = rep.differences[parse("((x,x),x)")][2]
    right = rep.differences[parse("(x,(x,x))")][2]
    assert left > 1e-3 and right > 1e-3


def test_gamma_germ_constant_term():
    germ = gamma_germ(GammaGermSpec(r=2.5, trunc=2))
    want = gamma_deriv_polygamma(0, 2.5)
    got = complex(germ.series.terms[enumerate_trees(0)[0]])
    assert got.real == pytest.approx(want, rel=1e-10)
