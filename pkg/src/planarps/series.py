"""Truncated formal planar power series over rational or complex scalars.

A series is a sparse map from tree monomials to coefficients together with
an explicit truncation degree; coefficients of degree above the truncation
are unknown (accessing them is an error) unless the series is flagged as a
polynomial, in which case they are known to vanish.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import scalars
from .scalars import COMPLEX, RATIONAL
from .trees import LEAF, UNIT, PlanarMonomial, enumerate_trees, node


class TruncatedPlanarSeries:
    __slots__ = ("terms", "trunc", "scalar", "is_polynomial")

    def __init__(self, terms, trunc, scalar=RATIONAL, is_polynomial=False):
        if trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        clean = {}
        for t, v in terms.items():
            if t.degree > trunc:
                raise ValueError("term %s exceeds truncation %d" % (t, trunc))
            v = scalars.coerce(v, scalar)
            if v != 0:
                clean[t] = v
        self.terms = clean
        self.trunc = trunc
        self.scalar = scalar
        self.is_polynomial = is_polynomial

    def coeff(self, tree: PlanarMonomial):
        """Coefficient on a monomial; error above the truncation degree
        unless the series is an exact polynomial."""
        if tree.degree > self.trunc and not self.is_polynomial:
            raise ValueError("coefficient of degree %d above truncation %d"
                             % (tree.degree, self.trunc))
        return self.terms.get(tree, self._zero())

    def _zero(self):
        return Fraction(0) if self.scalar == RATIONAL else 0j

    def _one(self):
        return Fraction(1) if self.scalar == RATIONAL else 1 + 0j

    def support(self):
        return sorted(self.terms, key=PlanarMonomial.sort_key)

    def terms_by_degree(self):
        out: dict = {}
        for t, v in self.terms.items():
            out.setdefault(t.degree, {})[t] = v
        return out

    def truncate(self, n: int) -> "TruncatedPlanarSeries":
        if n > self.trunc and not self.is_polynomial:
            raise ValueError("cannot extend truncation of a non-polynomial")
        terms = {t: v for t, v in self.terms.items() if t.degree <= n}
        return TruncatedPlanarSeries(terms, n, self.scalar, self.is_polynomial)

    def degree(self) -> int:
        """Largest degree with a stored nonzero coefficient."""
        return max((t.degree for t in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedPlanarSeries):
            return NotImplemented
        return (self.trunc == other.trunc and self.scalar == other.scalar
                and self.terms == other.terms)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __mul__(self, other):
        return mul2(self, other)

    def __repr__(self):
        items = ", ".join("%s: %s" % (t, v) for t, v in
                          sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))
        return "TruncatedPlanarSeries({%s}, trunc=%d, %s)" % (items, self.trunc, self.scalar)

    def approx_eq(self, other, tol=scalars.DEFAULT_TOL):
        n = min(self.trunc, other.trunc)
        for t in set(self.terms) | set(other.terms):
            if t.degree > n:
                continue
            if not scalars.approx_eq(self.terms.get(t, 0), other.terms.get(t, 0), tol):
                return False
        return True

    def max_discrepancy(self, other) -> float:
        n = min(self.trunc, other.trunc)
        worst = 0.0
        for t in set(self.terms) | set(other.terms):
            if t.degree > n:
                continue
            d = abs(complex(self.terms.get(t, 0)) - complex(other.terms.get(t, 0)))
            worst = max(worst, d)
        return worst


# -- constructors -------------------------------------------------------------

def zero_series(trunc, scalar=RATIONAL):
    return TruncatedPlanarSeries({}, trunc, scalar, is_polynomial=True)


def unit_series(trunc, scalar=RATIONAL):
    one = Fraction(1) if scalar == RATIONAL else 1 + 0j
    return TruncatedPlanarSeries({UNIT: one}, trunc, scalar, is_polynomial=True)


def constant_series(c, trunc, scalar=None):
    scalar = scalar or scalars.domain_of(c)
    return TruncatedPlanarSeries({UNIT: c}, trunc, scalar, is_polynomial=True)


def monomial_series(tree, trunc, scalar=RATIONAL, coefficient=1):
    return TruncatedPlanarSeries({tree: coefficient}, trunc, scalar, is_polynomial=True)


def x_series(trunc, scalar=RATIONAL):
    return monomial_series(LEAF, trunc, scalar)


# -- linear structure ---------------------------------------------------------

def _align(f, g):
    trunc = min(f.trunc, g.trunc)
    scalar = scalars.join(f.scalar, g.scalar)
    return trunc, scalar


def add(f, g):
    trunc, scalar = _align(f, g)
    terms = {}
    for t in set(f.terms) | set(g.terms):
        if t.degree > trunc:
            continue
        v = scalars.coerce(f.terms.get(t, 0), scalar) + scalars.coerce(g.terms.get(t, 0), scalar)
        if v != 0:
            terms[t] = v
    poly = f.is_polynomial and g.is_polynomial and \
        max(f.degree(), g.degree()) <= trunc
    return TruncatedPlanarSeries(terms, trunc, scalar, poly)


def scale(c, f):
    scalar = scalars.join(scalars.domain_of(c), f.scalar)
    c = scalars.coerce(c, scalar)
    terms = {t: scalars.coerce(v, scalar) * c for t, v in f.terms.items()}
    return TruncatedPlanarSeries(terms, f.trunc, scalar, f.is_polynomial)


# -- grafting products --------------------------------------------------------

def _degree_buckets(d: dict, nmax: int) -> dict:
    out: dict = {}
    for t, c in d.items():
        if t.degree <= nmax:
            out.setdefault(t.degree, []).append((t, c))
    return out


def graft2_terms(d1: dict, d2: dict, nmax: int) -> dict:
    """Binary grafting product on raw coefficient dicts, truncated at nmax.

    Terms are bucketed by degree so pairs beyond the truncation are never
    visited; with dense supports that is the difference between the output
    size and the full cross product.
    """
    out: dict = {}
    b1 = _degree_buckets(d1, nmax)
    b2 = _degree_buckets(d2, nmax)
    for deg1, items1 in b1.items():
        for deg2, items2 in b2.items():
            if deg1 + deg2 > nmax:
                continue
            for t1, c1 in items1:
                unit1 = t1.is_unit
                for t2, c2 in items2:
                    if unit1:
                        t = t2
                    elif t2.is_unit:
                        t = t1
                    else:
                        t = node((t1, t2))
                    v = c1 * c2
                    if t in out:
                        out[t] += v
                    else:
                        out[t] = v
    return {t: v for t, v in out.items() if v != 0}


def graftk_terms(dicts, nmax: int) -> dict:
    """k-ary grafting with unit absorption on raw coefficient dicts."""
    buckets = [_degree_buckets(d, nmax) for d in dicts]
    out: dict = {}

    def rec(i, deg, parts, coef):
        if i == len(buckets):
            if not parts:
                t = UNIT
            elif len(parts) == 1:
                t = parts[0]
            else:
                t = node(parts)
            if t in out:
                out[t] += coef
            else:
                out[t] = coef
            return
        for bdeg, items in buckets[i].items():
            d = deg + bdeg
            if d > nmax:
                continue
            for t, c in items:
                if t.is_unit:
                    rec(i + 1, d, parts, coef * c)
                else:
                    rec(i + 1, d, parts + (t,), coef * c)

    rec(0, 0, (), 1)
    return {t: v for t, v in out.items() if v != 0}


def mul2(f, g):
    trunc, scalar = _align(f, g)
    terms = graft2_terms(f.terms, g.terms, trunc)
    poly = f.is_polynomial and g.is_polynomial and \
        f.degree() + g.degree() <= trunc
    return TruncatedPlanarSeries(terms, trunc, scalar, poly)


def mulk(factors):
    """Multilinear k-ary grafting product of k >= 2 series."""
    factors = list(factors)
    if len(factors) < 2:
        raise ValueError("mulk needs at least 2 factors")
    trunc = min(f.trunc for f in factors)
    scalar = RATIONAL
    for f in factors:
        scalar = scalars.join(scalar, f.scalar)
    terms = graftk_terms([f.terms for f in factors], trunc)
    return TruncatedPlanarSeries(terms, trunc, scalar)


def pow_series(f, k: int):
    if k < 2:
        raise ValueError("planar power needs exponent >= 2")
    return mulk([f] * k)


# -- inverses and square roots ------------------------------------------------

def _nonunit_by_degree(f):
    out: dict = {}
    for t, v in f.terms.items():
        if not t.is_unit:
            out.setdefault(t.degree, []).append((t, v))
    return out


def _inverse(f, side):
    f0 = f.coeff(UNIT)
    if scalars.is_zero(f0):
        raise ValueError("series has (tolerance-)vanishing constant term")
    one = f._one()
    g0 = one / f0
    g = {UNIT: g0}
    g_by_deg = {0: [UNIT]}
    f_nonunit = _nonunit_by_degree(f)
    for d in range(1, f.trunc + 1):
        cand = set(t for t, _ in f_nonunit.get(d, ()))
        for d1 in range(1, d):
            d2 = d - d1
            if side == "left":
                lefts = g_by_deg.get(d1, ())
                rights = [t for t, _ in f_nonunit.get(d2, ())]
            else:
                lefts = [t for t, _ in f_nonunit.get(d1, ())]
                rights = g_by_deg.get(d2, ())
            for t1 in lefts:
                for t2 in rights:
                    cand.add(node((t1, t2)))
        level = []
        for t in cand:
            val = g0 * f.terms.get(t, 0)
            if t.arity == 2:
                c1, c2 = t.children
                if side == "left":
                    val += g.get(c1, 0) * f.terms.get(c2, 0)
                else:
                    val += f.terms.get(c1, 0) * g.get(c2, 0)
            if val != 0:
                g[t] = -val / f0
                level.append(t)
        if level:
            g_by_deg[d] = level
    return TruncatedPlanarSeries(g, f.trunc, f.scalar)


def left_inverse(f):
    """g with mul2(g, f) = 1 up to the truncation degree."""
    return _inverse(f, "left")


def right_inverse(f):
    """g with mul2(f, g) = 1 up to the truncation degree."""
    return _inverse(f, "right")


def sqrt_solve(u, root0):
    """The planar square root of u with constant term root0 (root0^2 = u_unit).

    Solved degree by degree from f^2 = u via
    2*root0*f_T = u_T - [binary root] f_{c1} * f_{c2}.
    """
    u0 = u.coeff(UNIT)
    if scalars.is_zero(u0):
        raise ValueError("series has (tolerance-)vanishing constant term")
    root0 = scalars.coerce(root0, u.scalar)
    if not scalars.approx_eq(root0 * root0, u0):
        raise ValueError("root0^2 = %r does not match the constant term %r"
                         % (root0 * root0, u0))
    f = {UNIT: root0}
    f_by_deg = {0: [UNIT]}
    two_root0 = root0 + root0
    for d in range(1, u.trunc + 1):
        cand = set(t for t in u.terms if t.degree == d and not t.is_unit)
        for d1 in range(1, d):
            for t1 in f_by_deg.get(d1, ()):
                for t2 in f_by_deg.get(d - d1, ()):
                    cand.add(node((t1, t2)))
        level = []
        for t in cand:
            val = u.terms.get(t, 0)
            if t.arity == 2:
                c1, c2 = t.children
                val = val - f.get(c1, 0) * f.get(c2, 0)
            if val != 0:
                f[t] = val / two_root0
                level.append(t)
        if level:
            f_by_deg[d] = [t for t in level if not t.is_unit]
    return TruncatedPlanarSeries(f, u.trunc, u.scalar)


# -- the square-root companion series g and h ---------------------------------

def g_series(n: int, scalar=RATIONAL):
    """Coefficient 1 on every binary tree of degree 1..n (the series g)."""
    if n < 1:
        raise ValueError("g_series needs truncation >= 1")
    one = Fraction(1) if scalar == RATIONAL else 1 + 0j
    terms = {}
    for d in range(1, n + 1):
        for t in enumerate_trees(d, max_arity=2):
            terms[t] = one
    return TruncatedPlanarSeries(terms, n, scalar)


def h_series(n: int, scalar=RATIONAL):
    """g with x -> -x/4: coefficient (-1/4)^deg on binary trees."""
    lam = Fraction(-1, 4) if scalar == RATIONAL else -0.25 + 0j
    return scale_substitute(g_series(n, scalar), lam)


def scale_substitute(f, lam):
    """Substitute x -> lam*x: every coefficient scales by lam^deg."""
    scalar = scalars.join(f.scalar, scalars.domain_of(lam))
    lam = scalars.coerce(lam, scalar)
    terms = {t: scalars.coerce(v, scalar) * lam ** t.degree
             for t, v in f.terms.items()}
    return TruncatedPlanarSeries(terms, f.trunc, scalar, f.is_polynomial)


# -- evaluation, classical image, majorants -----------------------------------

def eval_series(f, a):
    """Truncated partial sum sum_T coeff_T * a^deg(T)."""
    scalar = scalars.join(f.scalar, scalars.domain_of(a))
    a = scalars.coerce(a, scalar)
    total = scalars.coerce(0, scalar)
    for t, v in f.terms.items():
        total += scalars.coerce(v, scalar) * a ** t.degree
    return total


def classical_image(f):
    """Degree-wise coefficient sums: the ordinary power series [[f]]."""
    out = [f._zero() for _ in range(f.trunc + 1)]
    for t, v in f.terms.items():
        out[t.degree] += v
    return out


def majorants(f):
    """Degree-wise sums of coefficient absolute values, as floats."""
    out = [0.0] * (f.trunc + 1)
    for t, v in f.terms.items():
        out[t.degree] += scalars.abs_value(v)
    return out


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def g_majorants(n: int):
    """Degree majorants of g without enumerating its support: the binary
    trees of degree d all carry coefficient 1, so M_d = Catalan(d-1)."""
    return [0.0] + [float(catalan(d - 1)) for d in range(1, n + 1)]


# -- JSON wire format ---------------------------------------------------------

def series_to_json(f) -> dict:
    terms = []
    for t in f.support():
        v = f.terms[t]
        if f.scalar == RATIONAL:
            terms.append({"tree": str(t), "value": scalars.format_value(v, RATIONAL)})
        else:
            terms.append({"tree": str(t), "re": v.real, "im": v.imag})
    return {"trunc": f.trunc, "scalar": f.scalar, "terms": terms}


def series_from_json(data: dict) -> TruncatedPlanarSeries:
    from .trees import parse
    scalar = data["scalar"]
    if scalar not in (RATIONAL, COMPLEX):
        raise ValueError("unknown scalar domain %r" % (scalar,))
    terms = {}
    for entry in data["terms"]:
        t = parse(entry["tree"])
        if scalar == RATIONAL:
            v = scalars.parse_value(entry["value"], RATIONAL)
        else:
            v = complex(entry.get("re", 0.0), entry.get("im", 0.0))
        terms[t] = terms.get(t, 0) + v
    return TruncatedPlanarSeries(terms, data["trunc"], scalar,
                                 data.get("is_polynomial", False))
