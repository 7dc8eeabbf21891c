"""The k-ary planar exponential: exact coefficients and the translation law.

The coefficient on a tree T of degree n with root arity m and child subtrees
S_1..S_m is 0 if m > k and otherwise C(k, m) * prod_i A_{S_i} / (k^n - k),
with A = 1 on the unit and the leaf.  This recursion is forced by the
defining equation exp_k(x)^k = exp_k(k*x) together with the normalization
1 + x + ..., and its degree sums are 1/n!.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from . import scalars
from .series import TruncatedPlanarSeries, graftk_terms
from .trees import LEAF, UNIT, PlanarMonomial, binom, enumerate_trees
from .rebase import rebase_series

_EXACT: dict = {}
_FLOAT: dict = {}


def exp_coeff(tree: PlanarMonomial, k: int) -> Fraction:
    """Exact coefficient of the k-ary exponential on a tree monomial."""
    if k < 2:
        raise ValueError("exponential arity must be >= 2")
    memo = _EXACT.setdefault(k, {UNIT: Fraction(1), LEAF: Fraction(1)})
    return _exp_coeff(tree, k, memo, Fraction(1))


def exp_coeff_float(tree: PlanarMonomial, k: int) -> float:
    if k < 2:
        raise ValueError("exponential arity must be >= 2")
    memo = _FLOAT.setdefault(k, {UNIT: 1.0, LEAF: 1.0})
    return _exp_coeff(tree, k, memo, 1.0)


def _exp_coeff(tree, k, memo, one):
    got = memo.get(tree)
    if got is not None:
        return got
    m = tree.arity
    if m > k:
        value = one * 0
    else:
        value = one * math.comb(k, m)
        for child in tree.children:
            value *= _exp_coeff(child, k, memo, one)
        value /= k ** tree.degree - k
    memo[tree] = value
    return value


def exp_series(k: int, n: int, scalar=scalars.RATIONAL) -> TruncatedPlanarSeries:
    """The k-ary exponential through degree n (supported on arity <= k trees)."""
    if n < 0:
        raise ValueError("truncation must be >= 0")
    terms = {}
    for d in range(0, n + 1):
        for t in enumerate_trees(d, max_arity=k):
            if scalar == scalars.RATIONAL:
                terms[t] = exp_coeff(t, k)
            else:
                terms[t] = complex(exp_coeff_float(t, k))
    return TruncatedPlanarSeries(terms, n, scalar)


def exp_degree_sum(k: int, n: int) -> Fraction:
    """Exact sum of exponential coefficients over all trees of degree n."""
    total = Fraction(0)
    for t in enumerate_trees(n, max_arity=min(k, max(n, 1))):
        total += exp_coeff(t, k)
    return total


def exp_majorants(k: int, n: int):
    """Degree-wise coefficient sums 1/j! (all coefficients are positive).

    Computed from the factorial recurrence rather than by enumerating the
    support, which is what makes large n affordable.
    """
    out = [1.0]
    for j in range(1, n + 1):
        out.append(out[-1] / j)
    return out


def shift_identity_check(tree: PlanarMonomial, m: int, k: int) -> bool:
    """Exact check of alpha_T / m! = sum_{deg U = n+m} (U/T) alpha_U."""
    if m < 0:
        raise ValueError("shift m must be >= 0")
    n = tree.degree
    rhs = Fraction(0)
    for u in enumerate_trees(n + m, max_arity=min(k, max(n + m, 1))):
        c = binom(u, tree)
        if c:
            rhs += c * exp_coeff(u, k)
    return exp_coeff(tree, k) / math.factorial(m) == rhs


# -- translation law ----------------------------------------------------------

def exp_rebase_levels(k: int, lam, n_out: int, source_degree: int) -> list:
    """Per-degree sums sum_{deg U = n} A_U(k) * expand(x^U at lam), n = 0..source.

    The expansion operator is multilinear over grafting, so the coefficient
    recursion for A_T(k) folds directly into a per-degree convolution; the
    source support never has to be enumerated tree by tree.  Summing the
    levels gives exactly the rebase partial sums of the materialized series.
    """
    lam = complex(lam)
    levels = [{UNIT: 1 + 0j}]
    if source_degree >= 1:
        leaf_level = {LEAF: 1 + 0j}
        if lam != 0:
            leaf_level[UNIT] = lam
        levels.append(leaf_level)
    for n in range(2, source_degree + 1):
        acc: dict = {}
        for m in range(2, min(k, n) + 1):
            weight = math.comb(k, m)
            for comp in _compositions(n, m):
                prod = graftk_terms([levels[d] for d in comp], n_out)
                for t, v in prod.items():
                    acc[t] = acc.get(t, 0) + weight * v
        denom = k ** n - k
        levels.append({t: v / denom for t, v in acc.items()})
    return levels


def exp_rebase_terms(k: int, lam, n_out: int, source_degree: int) -> dict:
    """Partial-sum expansion of exp_k around lam (see exp_rebase_levels)."""
    total: dict = {}
    for level in exp_rebase_levels(k, lam, n_out, source_degree):
        for t, v in level.items():
            total[t] = total.get(t, 0) + v
    return {t: v for t, v in total.items() if v != 0}


def _compositions(n, parts):
    from .trees import _compositions as comps
    return comps(n, parts)


@dataclass(frozen=True)
class TranslationReport:
    k: int
    lam: complex
    trunc: int
    source_degree: int
    max_discrepancy: float
    tol: float

    @property
    def passed(self):
        return self.max_discrepancy <= self.tol


# materializing exp_k beyond this many support trees is pointless; use the
# folded recursion instead (identical sums, cross-checked in the tests)
_MATERIALIZE_LIMIT = 20000


def translation_check(k: int, lam, n: int, tol: float,
                      source_degree: int = 14) -> TranslationReport:
    """Compare the expansion of exp_k around lam with e^lam * exp_k."""
    lam = complex(lam)
    from .trees import count_trees
    support = sum(count_trees(d, max_arity=k) for d in range(source_degree + 1))
    if support <= _MATERIALIZE_LIMIT:
        f = exp_series(k, source_degree, scalar=scalars.COMPLEX)
        rebased = rebase_series(f, lam, n).series.terms
    else:
        rebased = exp_rebase_terms(k, lam, n, source_degree)
    factor = cmath.exp(lam)
    worst = 0.0
    for d in range(n + 1):
        for t in enumerate_trees(d, max_arity=k):
            want = factor * exp_coeff_float(t, k)
            got = complex(rebased.get(t, 0))
            worst = max(worst, abs(want - got))
    return TranslationReport(k, lam, n, source_degree, worst, tol)


# -- integer powers n^s -------------------------------------------------------

def npow(n: int, k: int, trunc: int) -> TruncatedPlanarSeries:
    """The planar series of n^s: coefficient alpha_T * (log n)^deg(T)."""
    if n < 1:
        raise ValueError("npow needs n >= 1")
    logn = math.log(n)
    terms = {}
    for d in range(0, trunc + 1):
        w = logn ** d
        for t in enumerate_trees(d, max_arity=k):
            v = exp_coeff_float(t, k) * w
            if v != 0:
                terms[t] = complex(v)
    return TruncatedPlanarSeries(terms, trunc, scalars.COMPLEX)


def coefficient_table(k: int, max_degree: int):
    """(tree, exact coefficient) pairs through max_degree, canonical order."""
    out = []
    for d in range(0, max_degree + 1):
        for t in enumerate_trees(d, max_arity=min(k, max(d, 1))):
            out.append((t, exp_coeff(t, k)))
    return out
