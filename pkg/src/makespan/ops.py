"""Distribution operators: support trimming, convolution, sequence and parallel composition.

``trim`` trades support size for a one-sided CDF error of at most ``eps``:
the upper variant merges runs of small atoms into the preceding kept atom
(the CDF can only grow), the lower variant mirrors the scan and merges
into the succeeding kept atom (the CDF can only shrink).  Folding
``trim(convolve(...))`` over a list of distributions keeps the support
below ``floor(1/eps) + 1`` atoms at a per-step cost of ``eps``.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence as SequenceT

import numpy as np

from .errors import InvalidEpsilonError, SupportCapExceededError
from .pmf import Pmf

#: Default limit on the number of atoms an exact convolution may produce.
DEFAULT_SUPPORT_CAP = 10_000_000


class BoundSide(enum.Enum):
    """Which side of the true CDF the produced distribution bounds.

    UPPER: the result's CDF dominates the true CDF (never below it).
    LOWER: the result's CDF is dominated by the true CDF.
    """

    UPPER = "upper"
    LOWER = "lower"


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not 0.0 < eps < 1.0:
        raise InvalidEpsilonError(f"eps must lie in (0, 1), got {eps!r}")
    return eps


def trim(pmf: Pmf, eps: float, side: BoundSide = BoundSide.UPPER) -> Pmf:
    """Compress the support, moving at most ``eps`` of mass across any deadline.

    Scans the support in time order (reverse order for ``LOWER``),
    accumulating a run of dropped atoms while the run mass plus the next
    atom stays <= eps; the run is then attached to the nearest kept atom
    on the early side (UPPER) or late side (LOWER).  The comparison is an
    exact float comparison with no fuzz factor; the boundary case
    ``run + atom == eps`` merges.

    The result satisfies ``0 <= cdf'(T) - cdf(T) <= eps`` for every T on
    the upper side (mirrored on the lower side) and has at most
    ``floor(1/eps)`` atoms for reciprocal-integer eps, ``floor(1/eps) + 1``
    in general.
    """
    eps = _check_eps(eps)
    if pmf.size == 1:
        return pmf
    vals = pmf.support.tolist()
    ps = pmf.probs.tolist()
    kept_v: list[float] = []
    kept_p: list[float] = []
    if side is BoundSide.UPPER:
        prev = 0
        acc = 0.0
        for j in range(1, len(vals)):
            if acc + ps[j] <= eps:
                acc = acc + ps[j]
            else:
                kept_v.append(vals[prev])
                kept_p.append(ps[prev] + acc)
                prev = j
                acc = 0.0
        kept_v.append(vals[prev])
        kept_p.append(ps[prev] + acc)
    elif side is BoundSide.LOWER:
        prev = len(vals) - 1
        acc = 0.0
        for j in range(len(vals) - 2, -1, -1):
            if acc + ps[j] <= eps:
                acc = acc + ps[j]
            else:
                kept_v.append(vals[prev])
                kept_p.append(ps[prev] + acc)
                prev = j
                acc = 0.0
        kept_v.append(vals[prev])
        kept_p.append(ps[prev] + acc)
        kept_v.reverse()
        kept_p.reverse()
    else:
        raise TypeError(f"side must be a BoundSide, got {side!r}")
    return Pmf(np.asarray(kept_v), np.asarray(kept_p))


def convolve(a: Pmf, b: Pmf, *, support_cap: int = DEFAULT_SUPPORT_CAP) -> Pmf:
    """Exact distribution of the sum of two independent variables.

    Every pair of atoms contributes ``(u + v, p * q)``; sums that are
    bitwise-equal floats are merged.  Raises ``SupportCapExceededError``
    when the pair count ``|a| * |b|`` (an upper bound on the result
    support, and the allocation actually needed) exceeds ``support_cap``.
    """
    pairs = a.size * b.size
    if pairs > support_cap:
        raise SupportCapExceededError(
            f"convolution may produce {pairs} atoms, above the cap of {support_cap}"
        )
    sums = np.add.outer(a.support, b.support).ravel()
    masses = np.multiply.outer(a.probs, b.probs).ravel()
    uniq, inverse = np.unique(sums, return_inverse=True)
    merged = np.bincount(inverse, weights=masses, minlength=uniq.size)
    keep = merged > 0.0  # products can underflow to zero; drop such atoms
    return Pmf(uniq[keep], merged[keep])


def sequence_approx(
    pmfs: SequenceT[Pmf] | Iterable[Pmf],
    eps: float,
    side: BoundSide = BoundSide.UPPER,
    *,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> Pmf:
    """One-sided approximation of the distribution of a sum of independent variables.

    Folds ``trim(convolve(acc, x), eps, side)`` over the inputs, trimming
    after every addition (including the first input on its own).  For
    exact inputs the result is within ``n * eps`` of the true sum's CDF on
    the requested side, with support kept at or below ``floor(1/eps) + 1``.
    """
    items = list(pmfs)
    if not items:
        raise ValueError("sequence_approx needs at least one distribution")
    acc = trim(items[0], eps, side)
    for x in items[1:]:
        acc = trim(convolve(acc, x, support_cap=support_cap), eps, side)
    return acc


def parallel_compose(pmfs: SequenceT[Pmf] | Iterable[Pmf]) -> Pmf:
    """Exact distribution of the maximum of independent variables.

    On the merged ascending union of supports, the CDF of the maximum is
    the product of the children's CDFs; atom masses are its increments,
    with zero-mass grid points dropped.
    """
    items = list(pmfs)
    if not items:
        raise ValueError("parallel_compose needs at least one distribution")
    if len(items) == 1:
        return items[0]
    grid = np.unique(np.concatenate([p.support for p in items]))
    total = np.ones(grid.size)
    for p in items:
        total *= p.cdf(grid)
    masses = np.diff(total, prepend=0.0)
    keep = masses > 0.0
    return Pmf(grid[keep], masses[keep])
