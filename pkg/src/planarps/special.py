"""Numeric kernels for zeta and Gamma derivatives and the planar germ families.

The zeta kernel S_d(r) = sum_{n>=1} n^-r (-log n)^d is computed by direct
summation to a cutoff plus a closed-form incomplete-gamma tail integral and
Euler-Maclaurin corrections.  The Gamma kernel is the d-th derivative of
Euler's integral, computed with panel-doubling Gauss-Legendre quadrature,
split at t = 1 with the substitution t = e^-u on (0, 1].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import scalars
from .expfam import exp_coeff_float
from .rebase import Germ, rebase_between
from .series import TruncatedPlanarSeries, mul2
from .trees import LEAF, UNIT, enumerate_trees

DEFAULT_CUTOFF = 100_000


# -- zeta derivative sums -----------------------------------------------------

_POWER_CACHE: dict = {}


def _power_table(r: complex, cutoff: int):
    key = (r, cutoff)
    got = _POWER_CACHE.get(key)
    if got is None:
        n = np.arange(1, cutoff, dtype=float)
        logs = np.log(n)
        powers = np.exp(-r * logs)
        got = (logs, powers)
        _POWER_CACHE.clear()  # keep at most one table; they are large
        _POWER_CACHE[key] = got
    return got


def _upper_gamma_int(d: int, z: complex) -> complex:
    # Gamma(d+1, z) by the upward recurrence from Gamma(1, z) = e^-z
    ez = cmath.exp(-z)
    g = ez
    for j in range(1, d + 1):
        g = j * g + z ** j * ez
    return g


def _derivative_at(d: int, r: complex, x: float, order: int) -> complex:
    # derivatives of f(x) = x^-r (-log x)^d as a term list c * (log x)^j * x^-p
    terms = [(complex((-1) ** d), d, r)]
    for _ in range(order):
        new = []
        for c, j, p in terms:
            if j:
                new.append((c * j, j - 1, p + 1))
            new.append((-c * p, j, p + 1))
        terms = new
    lx = math.log(x)
    return sum(c * lx ** j * x ** (-p) for c, j, p in terms)


def zeta_deriv(d: int, r, cutoff: int = DEFAULT_CUTOFF) -> complex:
    """S_d(r) = sum_{n>=1} n^-r (-log n)^d, i.e. (-1)^d * zeta^(d)(r).

    Direct summation to the cutoff, then the exact tail integral
    (-1)^d Gamma(d+1, (r-1) log N) / (r-1)^(d+1) with Euler-Maclaurin
    corrections through the third derivative.
    """
    r = complex(r)
    if r.real <= 1:
        raise ValueError("direct summation needs Re(r) > 1, got %r" % (r,))
    if d < 0:
        raise ValueError("derivative order must be >= 0")
    logs, powers = _power_table(r, cutoff)
    direct = np.sum(powers * (-logs) ** d) if d else np.sum(powers)
    m = float(cutoff)
    z = (r - 1) * math.log(m)
    tail = (-1) ** d * _upper_gamma_int(d, z) / (r - 1) ** (d + 1)
    f_m = m ** (-r) * (-math.log(m)) ** d
    correction = f_m / 2 - _derivative_at(d, r, m, 1) / 12 \
        + _derivative_at(d, r, m, 3) / 720
    return complex(direct + tail + correction)


# -- Gamma derivatives by quadrature ------------------------------------------

_GL_NODES = np.polynomial.legendre.leggauss(16)


def _composite_gl(fn, a: float, b: float, panels: int) -> complex:
    xs, ws = _GL_NODES
    edges = np.linspace(a, b, panels + 1)
    mids = (edges[1:] + edges[:-1]) / 2
    half = (edges[1:] - edges[:-1]) / 2
    pts = (mids[:, None] + half[:, None] * xs[None, :]).ravel()
    vals = fn(pts).reshape(panels, -1)
    return complex(np.sum(vals @ ws * half))


def _adaptive(fn, a: float, b: float, tol: float) -> complex:
    panels = 4
    prev = _composite_gl(fn, a, b, panels)
    for _ in range(12):
        panels *= 2
        cur = _composite_gl(fn, a, b, panels)
        if abs(cur - prev) <= tol * max(1e-12, abs(cur)):
            return cur
        prev = cur
    raise ArithmeticError("quadrature did not converge on [%g, %g]" % (a, b))


def gamma_deriv(d: int, r, tol: float = 1e-8) -> complex:
    """Gamma^(d)(r) = int_0^inf e^-t t^(r-1) (log t)^d dt for Re(r) > 0."""
    r = complex(r)
    if r.real <= 0:
        raise ValueError("Gamma integral needs Re(r) > 0, got %r" % (r,))
    if d < 0:
        raise ValueError("derivative order must be >= 0")
    rr = r.real

    # (0, 1] with t = e^-u: (-1)^d int_0^inf exp(-e^-u) e^-ru u^d du
    upper_u = 20.0
    while upper_u ** d * math.exp(-rr * upper_u) > 1e-18:
        upper_u *= 1.25

    def low_integrand(u):
        return np.exp(-np.exp(-u)) * np.exp(-r * u) * u ** d

    low = (-1) ** d * _adaptive(low_integrand, 0.0, upper_u, tol / 4)

    # [1, T) directly
    upper_t = 40.0
    while math.exp(-upper_t) * upper_t ** (rr - 1) * math.log(upper_t) ** d > 1e-18:
        upper_t *= 1.25

    def high_integrand(t):
        return np.exp(-t) * np.exp((r - 1) * np.log(t)) * np.log(t) ** d

    high = _adaptive(high_integrand, 1.0, upper_t, tol / 4)
    return low + high


def gamma_deriv_polygamma(d: int, r: float) -> float:
    """Independent route to Gamma^(d)(r) for real r via the polygamma
    recursion Gamma^(j+1) = sum_i C(j,i) Gamma^(i) psi_(j-i)."""
    from scipy.special import gamma as _gamma, polygamma
    derivs = [float(_gamma(r))]
    for j in range(d):
        nxt = sum(math.comb(j, i) * derivs[i] * float(polygamma(j - i, r))
                  for i in range(j + 1))
        derivs.append(nxt)
    return derivs[d]


# -- germ assembly ------------------------------------------------------------

@dataclass(frozen=True)
class ZetaGermSpec:
    r: complex
    trunc: int
    k: int = 2
    cutoff: int = DEFAULT_CUTOFF

    def __post_init__(self):
        if complex(self.r).real <= 1:
            raise ValueError("zeta germ needs Re(r) > 1 for direct summation")
        if self.k < 2:
            raise ValueError("arity must be >= 2")


@dataclass(frozen=True)
class GammaGermSpec:
    r: complex
    trunc: int
    k: int = 2
    quad_tol: float = 1e-8

    def __post_init__(self):
        if complex(self.r).real <= 0:
            raise ValueError("Gamma germ needs Re(r) > 0")
        if self.k < 2:
            raise ValueError("arity must be >= 2")


def _assemble_germ(r, trunc, k, degree_factor) -> Germ:
    terms = {}
    for d in range(trunc + 1):
        s = degree_factor(d)
        if s == 0:
            continue
        for t in enumerate_trees(d, max_arity=k):
            v = exp_coeff_float(t, k) * s
            if v != 0:
                terms[t] = v
    f = TruncatedPlanarSeries(terms, trunc, scalars.COMPLEX)
    return Germ(complex(r), f)


def zeta_germ(spec: ZetaGermSpec) -> Germ:
    """Expansion of the planar zeta around spec.r: coefficient alpha_T * S_deg(r)."""
    return _assemble_germ(spec.r, spec.trunc, spec.k,
                          lambda d: zeta_deriv(d, spec.r, spec.cutoff))


def gamma_germ(spec: GammaGermSpec) -> Germ:
    """Expansion of the planar Gamma around spec.r: alpha_T * Gamma^(deg)(r)."""
    return _assemble_germ(spec.r, spec.trunc, spec.k,
                          lambda d: gamma_deriv(d, spec.r, spec.quad_tol))


def zeta_majorants(r, n: int, k: int = 2, cutoff: int = DEFAULT_CUTOFF):
    """Degree majorants |S_d(r)|/d! of the zeta germ, computed degree-wise."""
    return [abs(zeta_deriv(d, r, cutoff)) / math.factorial(d)
            for d in range(n + 1)]


def zeta_continue(germ: Germ, r1, n_out: int) -> Germ:
    """Rebase a zeta germ inside its convergence disk |r1 - r0| < |r0 - 1|.

    Experimental for targets left of Re = 1: the truncated rebase carries no
    certified remainder.
    """
    r0 = complex(germ.base)
    r1 = complex(r1)
    if abs(r1 - r0) >= abs(r0 - 1):
        raise ValueError("step |r1-r0| = %g outside the disk of radius %g"
                         % (abs(r1 - r0), abs(r0 - 1)))
    return rebase_between(germ, r1, n_out)


def zeta_continue_deep(r0, r1, n_out: int, source_degree: int,
                       k: int = 2, cutoff: int = DEFAULT_CUTOFF) -> Germ:
    """Continuation with a large source degree.

    The zeta germ coefficient on U is alpha_U * S_deg(U)(r0), so the rebase
    sum factors through the per-degree expansion levels of the exponential
    recursion (bilinearity); this gives the same partial sums as rebasing a
    materialized germ of that source degree without enumerating its support.
    """
    from .expfam import exp_rebase_levels
    r0 = complex(r0)
    r1 = complex(r1)
    if abs(r1 - r0) >= abs(r0 - 1):
        raise ValueError("step |r1-r0| = %g outside the disk of radius %g"
                         % (abs(r1 - r0), abs(r0 - 1)))
    levels = exp_rebase_levels(k, r1 - r0, n_out, source_degree)
    total: dict = {}
    for n, level in enumerate(levels):
        s = zeta_deriv(n, r0, cutoff)
        for t, v in level.items():
            total[t] = total.get(t, 0) + s * v
    total = {t: v for t, v in total.items() if v != 0}
    return Germ(r1, TruncatedPlanarSeries(total, n_out, scalars.COMPLEX))


# -- the Gamma shift probe ----------------------------------------------------

@dataclass(frozen=True)
class GammaShiftReport:
    r: complex
    trunc: int
    shifted: Germ            # germ of Gamma_P(s+1) at r
    product: Germ            # germ of s * Gamma_P(s) at r
    differences: dict        # tree -> (shifted coeff, product coeff, rel diff)

    def max_rel_difference(self, degree: int) -> float:
        vals = [rel for t, (_, _, rel) in self.differences.items()
                if t.degree == degree]
        return max(vals, default=0.0)


def gamma_shift_probe(r, n: int, k: int = 2, quad_tol: float = 1e-8) -> GammaShiftReport:
    """Compare the germ of Gamma_P(s+1) with the germ of s * Gamma_P(s) at r."""
    r = complex(r)
    spec = GammaGermSpec(r=r, trunc=n, k=k, quad_tol=quad_tol)
    shifted = _assemble_germ(r, n, k,
                             lambda d: gamma_deriv(d, r + 1, quad_tol))
    s_var = TruncatedPlanarSeries({UNIT: r, LEAF: 1 + 0j}, n, scalars.COMPLEX,
                                  is_polynomial=True)
    product = Germ(r, mul2(s_var, gamma_germ(spec).series))
    diffs = {}
    for t in set(shifted.series.terms) | set(product.series.terms):
        u = complex(shifted.series.terms.get(t, 0))
        v = complex(product.series.terms.get(t, 0))
        scale = max(abs(u), abs(v), 1e-300)
        diffs[t] = (u, v, abs(u - v) / scale)
    return GammaShiftReport(r, n, shifted, product, diffs)
