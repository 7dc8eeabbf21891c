"""Radius-of-convergence estimation from degree majorant sequences.

The estimator is a root-test regression: least squares of log M_n against n
over the last third of the available degrees, radius = exp(-slope).  A
series is declared entire when the root-test values either drop below a hard
cutoff or decay steadily across the window (super-geometric majorants such
as 1/n! never reach the hard cutoff at desk-scale degrees, so the decay test
is what catches them; see the zero-radius caveat in the report fields).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

INFINITE_CUTOFF = 0.01
DECAY_SLOPE_CUTOFF = -0.02


@dataclass(frozen=True)
class RadiusEstimate:
    estimate: float          # point estimate; math.inf when flagged entire
    is_infinite: bool
    method: str              # "root-test-fit", "polynomial" or "decay"
    window: tuple            # (first degree, last degree) used
    residual: float          # rms residual of the log-majorant fit

    def __str__(self):
        if self.is_infinite:
            return "radius: infinite (%s)" % self.method
        return "radius: %.6g (window %d..%d, residual %.3g)" % (
            self.estimate, self.window[0], self.window[1], self.residual)


def estimate_radius(majorants,
                    infinite_cutoff: float = INFINITE_CUTOFF,
                    decay_slope_cutoff: float = DECAY_SLOPE_CUTOFF) -> RadiusEstimate:
    """Estimate the radius of convergence from majorants M_0..M_N.

    Needs N >= 8.  Zero entries inside the window are skipped (sparse
    supports); an all-zero window means a polynomial, radius infinite.
    """
    m = [float(v) for v in majorants]
    n_max = len(m) - 1
    if n_max < 8:
        raise ValueError("need majorants through degree >= 8, got %d" % n_max)
    if any(v < 0 for v in m):
        raise ValueError("majorants must be nonnegative")
    lo = (2 * n_max) // 3 + 1
    window = [(n, m[n]) for n in range(lo, n_max + 1) if m[n] > 0]
    if not window:
        return RadiusEstimate(math.inf, True, "polynomial", (lo, n_max), 0.0)
    degrees = np.array([n for n, _ in window], dtype=float)
    roots = np.array([v ** (1.0 / n) for n, v in window])

    if roots[-1] < infinite_cutoff:
        return RadiusEstimate(math.inf, True, "root-test-cutoff",
                              (lo, n_max), 0.0)
    if len(window) >= 3:
        t_slope = np.polyfit(degrees, np.log(roots), 1)[0]
        if t_slope < decay_slope_cutoff:
            return RadiusEstimate(math.inf, True, "decay", (lo, n_max), 0.0)

    logs = np.log([v for _, v in window])
    if len(window) == 1:
        return RadiusEstimate(1.0 / roots[0], False, "root-test-point",
                              (lo, n_max), 0.0)
    slope, intercept = np.polyfit(degrees, logs, 1)
    fit = slope * degrees + intercept
    residual = float(np.sqrt(np.mean((logs - fit) ** 2)))
    return RadiusEstimate(float(np.exp(-slope)), False, "root-test-fit",
                          (lo, n_max), residual)
