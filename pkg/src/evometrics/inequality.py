"""Inequality indices over distributions of nonnegative measurements.

Each index condenses the per-entity values of one metric (one version of one
package) into a single number: 0 means every entity holds the same share,
larger means the total is concentrated in fewer entities. All four indices
are scale-free, so they stay comparable across versions even when the
underlying metric drifts in magnitude.

Conventions: population denominators (n^2, not n(n-1)), so the upper bound
of Gini and Pietra for a single holder is exactly (n-1)/n; 0*ln(0) = 0 for
Theil; a single-element distribution has no internal inequality and scores 0
on every index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AnalysisError

DEFAULT_EPSILON = 0.5


@dataclass(frozen=True)
class InequalityReport:
    """All four indices of one distribution, with the inputs that shaped them."""

    gini: float
    pietra: float
    theil: float
    atkinson: float
    epsilon: float
    n: int


def _validate(values) -> np.ndarray:
    x = np.atleast_1d(np.asarray(values, dtype=float))
    if x.size == 0:
        raise AnalysisError("empty input")
    if not np.all(np.isfinite(x)):
        raise AnalysisError("non-finite value")
    if np.any(x < 0):
        raise AnalysisError("negative value")
    if float(x.mean()) <= 0.0:
        raise AnalysisError("degenerate mean")
    return x


def gini(values) -> float:
    """Gini index: half the mean absolute pairwise difference, over the mean.

    Ranges from 0 (perfect equality) to (n-1)/n (one entity holds
    everything). Computed in the sorted O(n log n) form; the O(n^2)
    pairwise definition serves as the oracle in the test suite.
    """
    x = _validate(values)
    n = x.size
    if n == 1:
        return 0.0
    xs = np.sort(x)
    ranks = np.arange(1, n + 1, dtype=float)
    total = float(xs.sum())
    return float((2.0 * float(np.dot(ranks, xs)) - (n + 1) * total) / (n * total))


def pietra(values) -> float:
    """Ricci-Schutz (Pietra) index: half the relative mean deviation.

    Equals the largest vertical gap between the Lorenz curve and the
    equality diagonal.
    """
    x = _validate(values)
    n = x.size
    if n == 1:
        return 0.0
    mu = float(x.mean())
    return float(np.abs(x - mu).sum() / (2.0 * n * mu))


def theil(values) -> float:
    """Theil T entropy index: (1/n) sum (x/mu) ln(x/mu).

    0 for equality, ln(n) when exactly one entity holds everything.
    Zero-valued entries contribute nothing (0*ln(0) = 0).
    """
    x = _validate(values)
    n = x.size
    if n == 1:
        return 0.0
    r = x[x > 0] / float(x.mean())
    return float(np.sum(r * np.log(r)) / n)


def atkinson(values, epsilon: float = DEFAULT_EPSILON) -> float:
    """Atkinson index with inequality-aversion parameter epsilon > 0.

    1 minus the ratio of the generalized mean of order 1-epsilon to the
    arithmetic mean; for epsilon = 1 the generalized mean is the geometric
    mean. Ranges over [0, 1]; any zero value forces 1 when epsilon >= 1.
    """
    x = _validate(values)
    if not epsilon > 0.0:
        raise AnalysisError("invalid aversion parameter")
    n = x.size
    if n == 1:
        return 0.0
    mu = float(x.mean())
    if epsilon == 1.0:
        if np.any(x == 0.0):
            return 1.0
        return 1.0 - float(np.exp(np.mean(np.log(x / mu))))
    if epsilon > 1.0 and np.any(x == 0.0):
        return 1.0
    m = float(np.mean((x / mu) ** (1.0 - epsilon)))
    return 1.0 - m ** (1.0 / (1.0 - epsilon))


def lorenz_points(values) -> list[tuple[float, float]]:
    """Cumulative-share curve of the sorted values.

    Returns n+1 points from (0, 0) to (1, 1); point k is (k/n, share of the
    total held by the k smallest entities). The Gini index equals one minus
    twice the trapezoidal area under this curve.
    """
    x = _validate(values)
    n = x.size
    cum = np.cumsum(np.sort(x))
    shares = cum / cum[-1]
    points = [(0.0, 0.0)]
    points.extend(((k + 1) / n, float(shares[k])) for k in range(n))
    return points


def inequality_report(values, epsilon: float = DEFAULT_EPSILON) -> InequalityReport:
    """All four indices of one distribution in a single pass."""
    x = _validate(values)
    return InequalityReport(
        gini=gini(x),
        pietra=pietra(x),
        theil=theil(x),
        atkinson=atkinson(x, epsilon),
        epsilon=epsilon,
        n=int(x.size),
    )
