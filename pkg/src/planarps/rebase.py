"""Change of expansion base point for planar series.

Rebasing substitutes x = a*1 + (x - a) into every monomial and expands with
the grafting product (units absorbed).  The coefficient of T in the expansion
of x^U is then the planar binomial (U/T) times a^(deg U - deg T), which is the
finite basis-change sum; the whole rebase is the coefficient-weighted sum of
those expansions.  0^0 counts as 1 throughout (the deg U = deg T terms).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import scalars
from .series import TruncatedPlanarSeries, graftk_terms
from .trees import LEAF, UNIT, PlanarMonomial, binom, contraction_table


@dataclass(frozen=True)
class Germ:
    """A truncated planar series expanded around a base point."""
    base: object
    series: TruncatedPlanarSeries

    @property
    def trunc(self):
        return self.series.trunc


def shift_expand_terms(terms: dict, shift, n_out: int, one) -> dict:
    """Apply x -> shift*1 + x to a raw coefficient dict, truncated at n_out.

    Memoizes the expansion of each distinct subtree, so large supports with
    shared structure stay affordable.
    """
    leaf_exp = {LEAF: one}
    if shift != 0:
        leaf_exp[UNIT] = one * shift
    cache = {UNIT: {UNIT: one}, LEAF: leaf_exp}

    def phi(tree):
        got = cache.get(tree)
        if got is None:
            got = graftk_terms([phi(c) for c in tree.children], n_out)
            cache[tree] = got
        return got

    out: dict = {}
    for u, c in terms.items():
        for t, w in phi(u).items():
            v = c * w
            if t in out:
                out[t] += v
            else:
                out[t] = v
    return {t: v for t, v in out.items() if v != 0}


def _shift(f_scalar: str, a):
    scalar = scalars.join(f_scalar, scalars.domain_of(a))
    return scalar, scalars.coerce(a, scalar)


def rebase_polynomial(f: TruncatedPlanarSeries, a, trunc=None) -> Germ:
    """Exact expansion of a polynomial around a; invertible."""
    if not f.is_polynomial:
        raise ValueError("rebase_polynomial needs an exact polynomial")
    if trunc is None:
        trunc = f.trunc
    if trunc < f.degree():
        raise ValueError("output truncation %d below polynomial degree %d"
                         % (trunc, f.degree()))
    scalar, a = _shift(f.scalar, a)
    one = Fraction(1) if scalar == scalars.RATIONAL else 1 + 0j
    terms = shift_expand_terms(f.terms, a, trunc, one)
    return Germ(a, TruncatedPlanarSeries(terms, trunc, scalar, is_polynomial=True))


def rebase_series(f: TruncatedPlanarSeries, a, n_out: int) -> Germ:
    """Truncated expansion of f around a; partial sums over deg(U) <= f.trunc.

    The caller is responsible for |a| being inside the radius of convergence;
    nothing analytic is checked here.
    """
    if n_out > f.trunc:
        raise ValueError("output truncation %d exceeds source degree %d"
                         % (n_out, f.trunc))
    scalar, a = _shift(f.scalar, a)
    one = Fraction(1) if scalar == scalars.RATIONAL else 1 + 0j
    terms = shift_expand_terms(f.terms, a, n_out, one)
    return Germ(a, TruncatedPlanarSeries(terms, n_out, scalar, f.is_polynomial))


def rebase_between(germ: Germ, b, n_out=None) -> Germ:
    """Re-expand a germ at a around a new base point b (shift by b - a)."""
    if n_out is None:
        n_out = germ.trunc
    if n_out > germ.trunc:
        raise ValueError("output truncation %d exceeds source degree %d"
                         % (n_out, germ.trunc))
    scalar, b = _shift(germ.series.scalar, b)
    step = b - scalars.coerce(germ.base, scalar)
    one = Fraction(1) if scalar == scalars.RATIONAL else 1 + 0j
    terms = shift_expand_terms(germ.series.terms, step, n_out, one)
    return Germ(b, TruncatedPlanarSeries(terms, n_out, scalar,
                                         germ.series.is_polynomial))


def tail_diagnostic(majorant_tail, abs_a: float, n_out: int) -> float:
    """Crude bound on the discarded rebase tail from majorants beyond the
    source degree: sum of M_n * C(n, n_out) * |a|^(n - n_out).

    `majorant_tail` is a list of (degree, majorant) pairs for degrees above
    the source degree.  Not a certified bound, a diagnostic.
    """
    total = 0.0
    for n, m in majorant_tail:
        total += m * math.comb(n, n_out) * abs_a ** (n - n_out)
    return total


def check_composition_identity(s: PlanarMonomial, t: PlanarMonomial, a, b) -> bool:
    """Exact check of sum_U (S/U)(U/T) a^(n-deg U) (b-a)^(deg U - m) = (S/T) b^(n-m)."""
    a = scalars.coerce(a, scalars.RATIONAL)
    b = scalars.coerce(b, scalars.RATIONAL)
    n = s.degree
    m = t.degree
    if m > n:
        # both sides are empty sums / zero coefficients
        return True
    step = b - a
    lhs = Fraction(0)
    for u, s_over_u in contraction_table(s).items():
        if u.degree < m:
            continue
        u_over_t = binom(u, t)
        if u_over_t == 0:
            continue
        lhs += s_over_u * u_over_t * a ** (n - u.degree) * step ** (u.degree - m)
    rhs = binom(s, t) * b ** (n - m)
    return lhs == rhs


def check_counting_identity(s: PlanarMonomial, t: PlanarMonomial, k: int) -> bool:
    """Exact check of sum_{deg U = m+k} (S/U)(U/T) = (S/T) * C(n-m, k)."""
    n = s.degree
    m = t.degree
    if m + k > n:
        lhs = sum(s_over_u * binom(u, t)
                  for u, s_over_u in contraction_table(s).items()
                  if u.degree == m + k)
        return lhs == 0
    lhs = 0
    for u, s_over_u in contraction_table(s).items():
        if u.degree != m + k:
            continue
        lhs += s_over_u * binom(u, t)
    return lhs == binom(s, t) * math.comb(n - m, k)


# -- germ JSON ----------------------------------------------------------------

def germ_to_json(germ: Germ) -> dict:
    from .series import series_to_json
    data = series_to_json(germ.series)
    data["base"] = scalars.format_value(germ.base, germ.series.scalar)
    return data


def germ_from_json(data: dict) -> Germ:
    from .series import series_from_json
    f = series_from_json(data)
    base = scalars.parse_value(data["base"], f.scalar)
    return Germ(base, f)
