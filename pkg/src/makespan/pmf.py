"""Finite discrete probability distributions over non-negative time values.

A :class:`Pmf` is the core value type of the package: an immutable, sorted
probability mass function.  Probabilities are double-precision floats.
Inputs are rejected when their mass deviates from 1 by more than 1e-6,
then rescaled to sum to 1; every derived distribution re-checks that the
drift stays below 1e-9.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    InvalidRangeError,
    MassNotOneError,
    NegativeValueError,
    NonPositiveProbabilityError,
    ZeroBinsError,
)

#: Acceptance tolerance on the total mass of raw input pairs.
MASS_INPUT_TOL = 1e-6
#: Drift tolerance asserted on every constructed distribution.
MASS_DRIFT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Pmf:
    """Probability mass function with strictly increasing support.

    Invariants checked at construction: support values finite, >= 0 and
    strictly increasing; probabilities all > 0; total mass within
    ``MASS_DRIFT_TOL`` of 1.  Instances are immutable and safe to share
    across threads.
    """

    support: np.ndarray
    probs: np.ndarray

    def __post_init__(self) -> None:
        support = np.asarray(self.support, dtype=np.float64)
        probs = np.asarray(self.probs, dtype=np.float64)
        if support.ndim != 1 or probs.shape != support.shape:
            raise ValueError("support and probs must be 1-D arrays of equal length")
        if support.size == 0:
            raise ValueError("a distribution needs at least one atom")
        if not np.all(np.isfinite(support)):
            raise NegativeValueError("support values must be finite")
        if support[0] < 0.0:
            raise NegativeValueError("support values must be >= 0")
        if support.size > 1 and not np.all(np.diff(support) > 0.0):
            raise ValueError("support must be strictly increasing")
        if not np.all(np.isfinite(probs)) or np.any(probs <= 0.0):
            raise NonPositiveProbabilityError("probabilities must be finite and > 0")
        total = float(np.sum(probs))
        if abs(total - 1.0) > MASS_DRIFT_TOL:
            raise MassNotOneError(f"probabilities sum to {total!r}, expected 1")
        cums = np.cumsum(probs)
        cums[-1] = 1.0  # within MASS_DRIFT_TOL by the check above
        cum0 = np.concatenate(([0.0], cums))
        for arr in (support, probs, cums, cum0):
            arr.setflags(write=False)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "_cums", cums)
        object.__setattr__(self, "_cum0", cum0)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]]) -> "Pmf":
        """Build a Pmf from (value, probability) pairs.

        Values need not be sorted or distinct; duplicates are merged by
        summing.  Raises ``NegativeValueError`` / ``NonPositiveProbabilityError``
        on bad atoms and ``MassNotOneError`` when the total mass is off by
        more than ``MASS_INPUT_TOL``; otherwise the mass is rescaled to
        exactly 1.
        """
        seq = list(pairs)
        if not seq:
            raise ValueError("at least one (value, probability) pair required")
        values = np.asarray([v for v, _ in seq], dtype=np.float64)
        masses = np.asarray([p for _, p in seq], dtype=np.float64)
        if not np.all(np.isfinite(values)) or np.any(values < 0.0):
            raise NegativeValueError("values must be finite and >= 0")
        if not np.all(np.isfinite(masses)) or np.any(masses <= 0.0):
            raise NonPositiveProbabilityError("probabilities must be finite and > 0")
        total = float(np.sum(masses))
        if abs(total - 1.0) > MASS_INPUT_TOL:
            raise MassNotOneError(f"probabilities sum to {total!r}, expected 1 within {MASS_INPUT_TOL}")
        uniq, inverse = np.unique(values, return_inverse=True)
        merged = np.bincount(inverse, weights=masses, minlength=uniq.size)
        merged = merged / np.sum(merged)
        return cls(uniq, merged)

    @classmethod
    def point(cls, value: float) -> "Pmf":
        """Distribution putting all mass on a single value."""
        return cls(np.asarray([value], dtype=np.float64), np.asarray([1.0]))

    @property
    def size(self) -> int:
        """Number of atoms in the support."""
        return int(self.support.size)

    @property
    def min_value(self) -> float:
        return float(self.support[0])

    @property
    def max_value(self) -> float:
        return float(self.support[-1])

    def cdf(self, t):
        """P(X <= t), right-continuous.  Accepts a scalar or an array."""
        t_arr = np.asarray(t, dtype=np.float64)
        idx = np.searchsorted(self.support, t_arr, side="right")
        out = self._cum0[idx]
        return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out

    def mean(self) -> float:
        """Expected value, sum of value * probability."""
        return float(self.support @ self.probs)

    def items(self) -> Iterator[tuple[float, float]]:
        """Iterate (value, probability) pairs as Python floats."""
        return ((float(v), float(p)) for v, p in zip(self.support, self.probs))

    def to_step_cdf(self) -> "StepCdf":
        return StepCdf(self.support, self._cums)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pmf):
            return NotImplemented
        return np.array_equal(self.support, other.support) and np.array_equal(
            self.probs, other.probs
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Pmf({self.size} atoms on [{self.min_value:g}, {self.max_value:g}])"


@dataclass(frozen=True, eq=False)
class StepCdf:
    """Right-continuous step-function view of a Pmf for deadline queries."""

    support: np.ndarray
    cums: np.ndarray

    def __post_init__(self) -> None:
        support = np.asarray(self.support, dtype=np.float64)
        cums = np.asarray(self.cums, dtype=np.float64)
        if support.ndim != 1 or cums.shape != support.shape or support.size == 0:
            raise ValueError("support and cums must be 1-D arrays of equal, nonzero length")
        if support.size > 1 and np.any(np.diff(cums) < 0.0):
            raise ValueError("cums must be non-decreasing")
        if abs(float(cums[-1]) - 1.0) > MASS_DRIFT_TOL:
            raise MassNotOneError(f"cums end at {float(cums[-1])!r}, expected 1")
        cum0 = np.concatenate(([0.0], cums))
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "cums", cums)
        object.__setattr__(self, "_cum0", cum0)

    @classmethod
    def from_pmf(cls, pmf: Pmf) -> "StepCdf":
        return pmf.to_step_cdf()

    def at(self, t):
        """Cumulative probability at t.  Accepts a scalar or an array."""
        t_arr = np.asarray(t, dtype=np.float64)
        idx = np.searchsorted(self.support, t_arr, side="right")
        out = self._cum0[idx]
        return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out

    def quantile(self, q: float) -> float:
        """Smallest support value whose cumulative probability is >= q."""
        if not 0.0 <= q <= 1.0:
            raise ValueError("q must lie in [0, 1]")
        idx = int(np.searchsorted(self.cums, q, side="left"))
        return float(self.support[min(idx, self.support.size - 1)])


def discretized_uniform(low: float, high: float, bins: int) -> Pmf:
    """Uniform distribution on [low, high] discretized to equal-mass midpoint atoms.

    Atom k sits at ``low + (k + 0.5) * (high - low) / bins`` with mass
    ``1 / bins``; the midpoint rule keeps the mean at ``(low + high) / 2``.
    """
    if isinstance(bins, bool) or not float(bins).is_integer():
        raise ZeroBinsError(f"bins must be a positive integer, got {bins!r}")
    bins = int(bins)
    if bins < 1:
        raise ZeroBinsError(f"bins must be >= 1, got {bins}")
    if not (np.isfinite(low) and np.isfinite(high)) or low < 0.0 or not low < high:
        raise InvalidRangeError(f"need 0 <= low < high, got [{low!r}, {high!r}]")
    width = (high - low) / bins
    support = low + (np.arange(bins) + 0.5) * width
    probs = np.full(bins, 1.0 / bins)
    return Pmf(support, probs)
