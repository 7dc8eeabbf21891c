"""Verification suites behind the CLI `check` command and the acceptance tests.

Each suite returns a CheckResult; the detail string carries the measured
quantity so failures are diagnosable from the command line.  Randomized
suites use fixed seeds so output is reproducible run to run.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import scalars
from .analytic import sqrt_germ_majorants
from .expfam import (shift_identity_check, exp_coeff, exp_degree_sum,
                     exp_majorants, translation_check)
from .radius import estimate_radius
from .rebase import (check_composition_identity, check_counting_identity,
                     rebase_between, rebase_polynomial)
from .series import (TruncatedPlanarSeries, classical_image, g_majorants,
                     g_series, h_series, left_inverse,
                     mul2, pow_series, scale, unit_series, x_series)
from .special import (ZetaGermSpec, gamma_deriv, gamma_deriv_polygamma,
                      gamma_shift_probe, zeta_continue_deep, zeta_deriv,
                      zeta_germ, zeta_majorants)
from .trees import LEAF, UNIT, binom, comb, enumerate_trees, parse


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self):
        return "%-14s %s  (%.2fs)  %s" % (
            self.name, "PASS" if self.passed else "FAIL", self.seconds, self.detail)


def _timed(name, fn):
    t0 = time.perf_counter()
    passed, detail = fn()
    return CheckResult(name, passed, detail, time.perf_counter() - t0)


# -- 1: the worked degree-4 example -------------------------------------------

def check_degree4_example():
    def run():
        t = parse("(x,(x,x))")
        us = [parse(s) for s in ("(x,(x,(x,x)))", "(x,((x,x),x))",
                                 "((x,x),(x,x))", "((x,(x,x)),x)",
                                 "(((x,x),x),x)")]
        binoms = [binom(u, t) for u in us]
        ok = binoms == [4, 3, 2, 1, 0]
        coeffs = [exp_coeff(u, 2) for u in us]
        want = [Fraction(1, 168)] * 5
        want[2] = Fraction(3, 168)
        ok = ok and coeffs == want
        instance = sum(b * c for b, c in zip(binoms, coeffs))
        ok = ok and instance == Fraction(14, 168) == Fraction(1, 12)
        ok = ok and instance == exp_coeff(t, 2)
        ok = ok and shift_identity_check(t, 1, 2)
        return ok, "binoms=%s coeff_sum=%s" % (binoms, instance)
    return _timed("degree4", run)


# -- 2: exponential degree sums -----------------------------------------------

def check_exp_sums():
    def run():
        for k in (2, 3, 4):
            for n in range(9):
                if exp_degree_sum(k, n) != Fraction(1, math.factorial(n)):
                    return False, "failed at k=%d n=%d" % (k, n)
        # cross-validation against the worked example: degree 4, arity 2
        total = sum(exp_coeff(u, 2) for u in enumerate_trees(4, max_arity=2))
        if total != Fraction(7, 24 * 7):
            return False, "degree-4 cross-check failed"
        return True, "sum A_T(k) = 1/n! for n<=8, k in {2,3,4}"
    return _timed("expsum", run)


# -- 3: the square-root series identities -------------------------------------

def check_sqrt_identities():
    def run():
        n = 10
        g = g_series(n)
        h = h_series(n)
        x = x_series(n)
        one = unit_series(n)
        if mul2(g, g) != g - x:
            return False, "g^2 != g - x"
        if pow_series(one - scale(2, g), 2) != one - scale(4, x):
            return False, "(1-2g)^2 != 1-4x"
        if pow_series(one - scale(2, h), 2) != one + x:
            return False, "(1-2h)^2 != 1+x"
        cats = classical_image(g_series(6))
        if cats != [Fraction(c) for c in (0, 1, 1, 2, 5, 14, 42)]:
            return False, "classical image of g is not Catalan"
        return True, "g^2=g-x, (1-2g)^2=1-4x, (1-2h)^2=1+x, [[g]]=Catalan @ trunc %d" % n
    return _timed("sqrtids", run)


# -- 4: composition and counting identities -----------------------------------

def _random_fraction(rng, span=9):
    num = rng.randint(-span, span)
    den = rng.randint(1, span)
    return Fraction(num, den)


def check_composition(max_degree=6, min_pairs=100, seed=20260824):
    def run():
        rng = random.Random(seed)
        pairs = [(_random_fraction(rng), _random_fraction(rng))
                 for _ in range(max(min_pairs, 100))]
        all_s = [t for d in range(max_degree + 1) for t in enumerate_trees(d)]
        targets = {d: [t for dd in range(d + 1) for t in enumerate_trees(dd)]
                   for d in range(max_degree + 1)}
        i = 0
        checked = 0
        for s in all_s:
            for t in targets[s.degree]:
                a, b = pairs[i % len(pairs)]
                i += 1
                if not check_composition_identity(s, t, a, b):
                    return False, "composition failed at S=%s T=%s" % (s, t)
                for k in range(s.degree - t.degree + 1):
                    if not check_counting_identity(s, t, k):
                        return False, "counting failed at S=%s T=%s k=%d" % (s, t, k)
                checked += 1
        return True, "%d (S,T) combos, %d random (a,b) pairs" % (checked, len(pairs))
    return _timed("composition", run)


# -- 5: path independence of rebasing -----------------------------------------

def _random_polynomial(rng, max_degree=6, n_terms=15):
    pool = [t for d in range(max_degree + 1) for t in enumerate_trees(d)]
    terms = {}
    for t in rng.sample(pool, n_terms):
        v = _random_fraction(rng)
        if v:
            terms[t] = v
    return TruncatedPlanarSeries(terms, max_degree, scalars.RATIONAL,
                                 is_polynomial=True)


def check_path_independence(count=50, seed=1105):
    def run():
        rng = random.Random(seed)
        for i in range(count):
            f = _random_polynomial(rng)
            a = _random_fraction(rng, 5)
            b = _random_fraction(rng, 5)
            via_a = rebase_between(rebase_polynomial(f, a), b)
            direct = rebase_polynomial(f, b)
            if via_a.series != direct.series:
                return False, "mismatch at sample %d (a=%s, b=%s)" % (i, a, b)
            back = rebase_between(via_a, Fraction(0))
            if back.series != f:
                return False, "return to 0 not the identity at sample %d" % i
        return True, "%d random polynomials, two-step == direct, invertible" % count
    return _timed("pathindep", run)


# -- 6: the translation law of the exponential --------------------------------

def check_translation():
    def run():
        r1 = translation_check(2, 0.3, 6, 1e-6, source_degree=14)
        r2 = translation_check(3, -0.2, 5, 1e-6, source_degree=12)
        ok = r1.passed and r2.passed
        return ok, "k=2: %.3g, k=3: %.3g (tol 1e-6)" % (
            r1.max_discrepancy, r2.max_discrepancy)
    return _timed("translation", run)


# -- 7: inverse suites --------------------------------------------------------

def check_inverses(count=50, seed=407):
    def run():
        rng = random.Random(seed)
        trunc = 8
        pool = [t for d in range(1, trunc + 1) for t in enumerate_trees(d)]
        for i in range(count):
            terms = {UNIT: _random_fraction(rng) + 10}  # keep away from zero
            for t in rng.sample(pool, 12):
                v = _random_fraction(rng)
                if v:
                    terms[t] = v
            f = TruncatedPlanarSeries(terms, trunc, scalars.RATIONAL)
            if mul2(left_inverse(f), f) != unit_series(trunc):
                return False, "left inverse failed at sample %d" % i
        # reciprocal germ: comb closed form matches the recursion exactly
        for a in (Fraction(1), Fraction(-2), Fraction(3, 2)):
            shifted = TruncatedPlanarSeries({UNIT: a, LEAF: Fraction(1)}, 12,
                                            scalars.RATIONAL, is_polynomial=True)
            germ = left_inverse(shifted)
            want = {comb(n): Fraction(-1) ** n / a ** (n + 1) for n in range(13)}
            if germ.terms != {t: v for t, v in want.items() if v}:
                return False, "reciprocal closed form failed at a=%s" % a
        return True, "%d random inverses exact; comb closed form exact" % count
    return _timed("inverses", run)


# -- 8: radius estimates ------------------------------------------------------

def check_radius():
    def run():
        details = []
        est = estimate_radius(g_majorants(16))
        if est.is_infinite or not 0.20 <= est.estimate <= 0.30:
            return False, "g estimate %s outside [0.20, 0.30]" % est
        details.append("g=%.3f" % est.estimate)
        est = estimate_radius(exp_majorants(2, 16))
        if not est.is_infinite:
            return False, "exp_2 not flagged infinite: %s" % est
        details.append("exp2=inf")
        est = estimate_radius(sqrt_germ_majorants(1.0, 16))
        if est.is_infinite or not 0.85 <= est.estimate <= 1.15:
            return False, "sqrt estimate %s outside [0.85, 1.15]" % est
        details.append("sqrt@1=%.3f" % est.estimate)
        est = estimate_radius(zeta_majorants(3, 12))
        if est.is_infinite or not 1.7 <= est.estimate <= 2.3:
            return False, "zeta estimate %s outside [1.7, 2.3]" % est
        details.append("zeta@3=%.3f" % est.estimate)
        return True, " ".join(details)
    return _timed("radius", run)


# -- 9: special-function kernels ----------------------------------------------

def check_kernels():
    def run():
        s0 = zeta_deriv(0, 2)
        if abs(s0 - math.pi ** 2 / 6) > 1e-10:
            return False, "S_0(2) off by %.3g" % abs(s0 - math.pi ** 2 / 6)
        for d in range(5):
            for r in (0.5, 1.5, 2.5):
                q = gamma_deriv(d, r)
                p = gamma_deriv_polygamma(d, r)
                if abs(q - p) > 1e-8 * abs(p):
                    return False, "Gamma^(%d)(%g): quad %.12g vs polygamma %.12g" \
                        % (d, r, q.real, p)
        cont = zeta_continue_deep(3, 2.2, 4, 16)
        direct = zeta_germ(ZetaGermSpec(r=2.2, trunc=4))
        diff = cont.series.max_discrepancy(direct.series)
        if diff > 1e-3:
            return False, "zeta continuation off by %.3g" % diff
        return True, "S_0(2) ok; Gamma quad vs polygamma ok; continuation %.3g" % diff
    return _timed("kernels", run)


# -- 10: the Gamma functional-equation probe ----------------------------------

def check_gamma_shift():
    def run():
        rep = gamma_shift_probe(1.5, 3)
        for d in (0, 1, 2):
            rel = rep.max_rel_difference(d)
            if rel > 1e-8:
                return False, "degree %d disagrees: rel %.3g" % (d, rel)
        deg3_binary = [t for t in rep.differences
                       if t.degree == 3 and t.max_arity() == 2]
        if len(deg3_binary) != 2:
            return False, "expected 2 binary degree-3 trees, saw %d" % len(deg3_binary)
        rels = [rep.differences[t][2] for t in deg3_binary]
        if not all(r > 1e-3 for r in rels):
            return False, "degree-3 differences too small: %s" % rels
        return True, "degrees<=2 agree; degree-3 rel diffs %s" % \
            (["%.3g" % r for r in sorted(rels)],)
    return _timed("gammashift", run)


SUITES = {
    "degree4": check_degree4_example,
    "expsum": check_exp_sums,
    "sqrtids": check_sqrt_identities,
    "composition": check_composition,
    "pathindep": check_path_independence,
    "translation": check_translation,
    "inverses": check_inverses,
    "radius": check_radius,
    "kernels": check_kernels,
    "gammashift": check_gamma_shift,
}


def run_suite(name: str) -> CheckResult:
    if name not in SUITES:
        raise KeyError("unknown check suite %r" % name)
    return SUITES[name]()


def run_all():
    return [fn() for fn in SUITES.values()]
