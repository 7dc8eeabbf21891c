"""Planar analytic functions as germ generators with compatibility checking.

A function here is nothing more than a domain predicate together with a
deterministic germ generator (base point, truncation) -> Germ, plus an
advisory radius hint.  Compatibility of germs under rebasing is the
operational criterion; no sheaf object is materialized.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Callable, Optional

from . import scalars, series
from .rebase import Germ, rebase_between, rebase_series
from .series import TruncatedPlanarSeries, left_inverse, sqrt_solve
from .trees import LEAF, UNIT


@dataclass(frozen=True)
class PlanarAnalyticFunction:
    name: str
    domain: Callable[[complex], bool]
    germ_at: Callable[[complex, int], Germ]
    radius_hint: Optional[Callable[[complex], float]] = None

    def germ(self, a, n: int) -> Germ:
        if not self.domain(complex(a)):
            raise ValueError("%s: base point %r outside the domain" % (self.name, a))
        return self.germ_at(a, n)


def _shifted_argument(a, n: int) -> TruncatedPlanarSeries:
    # a*1 + (x - a) as a series in the local variable
    return TruncatedPlanarSeries({UNIT: complex(a), LEAF: 1 + 0j}, n,
                                 scalars.COMPLEX, is_polynomial=True)


def reciprocal_function() -> PlanarAnalyticFunction:
    """x^{-1} on the punctured plane: germ = left inverse of a + (x-a).

    The germ is supported on right combs with coefficient (-1)^n a^{-(n+1)}.
    """
    def germ_at(a, n):
        return Germ(complex(a), left_inverse(_shifted_argument(a, n)))

    return PlanarAnalyticFunction(
        name="reciprocal",
        domain=lambda a: a != 0,
        germ_at=germ_at,
        radius_hint=lambda a: abs(a),
    )


def _off_negative_axis(a: complex) -> bool:
    return not (a.imag == 0 and a.real <= 0)


def sqrt_function() -> PlanarAnalyticFunction:
    """The planar square root with principal branch (positive on positive reals)."""
    def germ_at(a, n):
        a = complex(a)
        return Germ(a, sqrt_solve(_shifted_argument(a, n), cmath.sqrt(a)))

    return PlanarAnalyticFunction(
        name="sqrt",
        domain=_off_negative_axis,
        germ_at=germ_at,
        radius_hint=lambda a: abs(a),
    )


def from_entire_series(f: TruncatedPlanarSeries, radius_hint: float,
                       name: str = "series") -> PlanarAnalyticFunction:
    """Germ family of a single expansion at 0, produced by truncated rebasing."""
    def germ_at(a, n):
        return rebase_series(f, a, n)

    return PlanarAnalyticFunction(
        name=name,
        domain=lambda a: abs(a) < radius_hint,
        germ_at=germ_at,
        radius_hint=lambda a: radius_hint - abs(a),
    )


def inverse_family(base: PlanarAnalyticFunction, name=None) -> PlanarAnalyticFunction:
    """Pointwise left inverse of a germ family (needs nonvanishing constant terms)."""
    def germ_at(a, n):
        g = base.germ(a, n)
        return Germ(g.base, left_inverse(g.series))

    return PlanarAnalyticFunction(
        name=name or ("inverse(%s)" % base.name),
        domain=base.domain,
        germ_at=germ_at,
        radius_hint=base.radius_hint,
    )


@dataclass(frozen=True)
class CompatibilityReport:
    a: complex
    b: complex
    trunc: int
    source_degree: int
    max_discrepancy: float
    tol: float

    @property
    def passed(self):
        return self.max_discrepancy <= self.tol


def check_compatibility(func: PlanarAnalyticFunction, a, b, n: int, tol: float,
                        source_degree: Optional[int] = None) -> CompatibilityReport:
    """Rebase the germ at a over to b and compare with the germ at b.

    `source_degree` controls how far the germ at a is expanded before the
    truncated rebase; the discrepancy floor is set by its tail.
    """
    if source_degree is None:
        source_degree = 2 * n + 4
    moved = rebase_between(func.germ(a, source_degree), b, n)
    direct = func.germ(b, n)
    worst = moved.series.max_discrepancy(direct.series)
    return CompatibilityReport(complex(a), complex(b), n, source_degree, worst, tol)


def sqrt_germ_majorants(a, n: int):
    """Degree majorants of the square-root germ at a, degree-wise.

    The germ at a is sqrt(a) * (1 - 2h)((x-a)/a), so the degree-d sum of
    absolute coefficients is |sqrt(a)| * 2 * (4|a|)^-d * Catalan(d-1).
    """
    from .series import catalan
    mag = abs(cmath.sqrt(complex(a)))
    absa = abs(complex(a))
    out = [mag]
    for d in range(1, n + 1):
        out.append(mag * 2.0 * (4.0 * absa) ** (-d) * catalan(d - 1))
    return out


def coefficient_function(func: PlanarAnalyticFunction, tree, samples, n=None):
    """The coefficient map a -> <f_a, (x-a)^T> evaluated on sample points."""
    n = max(tree.degree, n or 0)
    return [func.germ(a, n).series.coeff(tree) for a in samples]
