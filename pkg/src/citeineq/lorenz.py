"""Discrete Lorenz curves and the Gini, Kolkata, and Hirsch indices.

The Lorenz curve of a citation vector is the piecewise-linear curve through
the vertices (i/n, C_i/C_n), where C_i is the running sum of the counts
sorted ascending.  Gini is twice the area between the curve and the equality
diagonal; Kolkata is the fixed point of the complementary curve 1 - L(p).

All functions are pure and hold no shared state; zero-citation publications
count as zero-wealth members of the population.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import EmptyInput, ValidationError, ZeroTotal


class IndexPair(NamedTuple):
    """A (gini, kolkata) value pair for one population."""

    g: float
    k: float


@dataclass(frozen=True)
class LorenzCurve:
    """Piecewise-linear cumulative-share curve of a citation vector.

    Attributes
    ----------
    p : np.ndarray
        Population fractions at the vertices, 0, 1/n, ..., 1.
    shares : np.ndarray
        Cumulative citation shares L(p) at the vertices; shares[0] == 0
        and shares[-1] == 1.
    n : int
        Population size.
    total : float
        Total citations over the population.
    """

    p: np.ndarray
    shares: np.ndarray
    n: int
    total: float

    def interpolate(self, q) -> np.ndarray | float:
        """Evaluate L(q) by linear interpolation between vertices."""
        return np.interp(q, self.p, self.shares)


def _as_counts(counts) -> np.ndarray:
    arr = np.asarray(counts)
    if arr.ndim != 1 or arr.size == 0:
        raise EmptyInput("citation vector must be a nonempty 1-d sequence")
    if np.any(arr < 0):
        raise ValidationError("citation counts must be nonnegative")
    return arr


def build_lorenz(counts) -> LorenzCurve:
    """Construct the discrete Lorenz curve of a citation vector.

    Parameters
    ----------
    counts : array-like
        Nonnegative per-publication citation counts. Integer input is
        accumulated exactly before normalization.

    Returns
    -------
    LorenzCurve
        Vertices (i/n, C_i/C_n) for i = 0..n over the ascending-sorted
        counts.

    Raises
    ------
    EmptyInput
        If the vector has no elements.
    ZeroTotal
        If every count is zero (shares are undefined).
    """
    arr = _as_counts(counts)
    n = arr.size
    ordered = np.sort(arr)
    if np.issubdtype(ordered.dtype, np.integer):
        ordered = ordered.astype(np.int64)
    cum = np.concatenate(([0], np.cumsum(ordered)))
    total = cum[-1]
    if total <= 0:
        raise ZeroTotal("all citation counts are zero")
    p = np.arange(n + 1) / n
    shares = cum / total
    return LorenzCurve(p=p, shares=shares, n=n, total=float(total))


def gini(curve: LorenzCurve) -> float:
    """Gini index of a Lorenz curve.

    Twice the area between the equality diagonal and the curve, computed
    as 1 minus twice the trapezoidal integral of the piecewise-linear
    L(p).  Equals the pairwise mean-absolute-difference form
    sum_ij |x_i - x_j| / (2 n^2 mean).
    """
    L = curve.shares
    g = 1.0 - np.sum(L[:-1] + L[1:]) / curve.n
    # round-off on near-equality input can undershoot 0 by ~1 ulp
    return float(min(max(g, 0.0), 1.0))


def kolkata(curve: LorenzCurve) -> float:
    """Kolkata index: the fixed point of the complementary Lorenz curve.

    Solves 1 - L(k) = k.  Since f(p) = 1 - L(p) - p falls strictly from
    +1 at p=0 to -1 at p=1, the fixed point exists, is unique, and lies
    in [0.5, 1].  The crossing segment is located by scanning vertex
    signs and solved exactly on that linear piece.
    """
    p, L, n = curve.p, curve.shares, curve.n
    f = 1.0 - L - p
    # first vertex at or below zero; f[0] = 1 > 0 and f[-1] = -1 < 0
    j = int(np.argmax(f <= 0.0))
    slope = (L[j] - L[j - 1]) * n
    k = (1.0 - L[j - 1] + slope * p[j - 1]) / (1.0 + slope)
    return float(min(max(k, 0.5), 1.0))


def hirsch(counts) -> int:
    """Hirsch index: the largest h such that h papers have >= h citations.

    Returns 0 when no paper has at least one citation.
    """
    arr = _as_counts(counts)
    ranked = np.sort(arr)[::-1]
    return int(np.sum(ranked >= np.arange(1, arr.size + 1)))


def index_pair(counts) -> IndexPair:
    """Gini and Kolkata indices of a citation vector in one pass."""
    curve = build_lorenz(counts)
    return IndexPair(g=gini(curve), k=kolkata(curve))
