"""Ground-truth baselines: exact brute-force distribution and Monte-Carlo sampling.

The exact route composes distributions without trimming and declares
infeasibility (``SupportCapExceededError``) when supports outgrow the cap.
The sampler draws i.i.d. makespans with a named, reproducible generator
(PCG64); identical seeds give identical estimates on every platform.
Workers of a parallel run should derive their streams as
``seed + worker_index``; this module itself samples single-threaded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .ops import DEFAULT_SUPPORT_CAP, convolve, parallel_compose
from .pmf import Pmf
from .tree import Parallel, Primitive, TaskTree

#: Confidence level of the reported Hoeffding half-width.
CONFIDENCE = 0.99


def hoeffding_halfwidth(n_samples: int, confidence: float = CONFIDENCE) -> float:
    """Distribution-free half-width for a Bernoulli mean estimate."""
    return math.sqrt(math.log(2.0 / (1.0 - confidence)) / (2.0 * n_samples))


@dataclass(frozen=True)
class SampleEstimate:
    """Monte-Carlo deadline-probability estimate with seed provenance."""

    p_hat: float
    n_samples: int
    seed: int
    hoeffding_halfwidth: float


def exact_distribution(
    tree: TaskTree, *, support_cap: int = DEFAULT_SUPPORT_CAP
) -> Pmf:
    """Exact makespan distribution via untrimmed convolution and max-composition.

    Raises ``SupportCapExceededError`` when any intermediate support would
    exceed ``support_cap``; that mirrors exact computation timing out and
    signals infeasibility rather than failure.
    """
    if isinstance(tree, Primitive):
        return tree.pmf
    parts = [exact_distribution(c, support_cap=support_cap) for c in tree.children]
    if isinstance(tree, Parallel):
        return parallel_compose(parts)
    return reduce(lambda a, b: convolve(a, b, support_cap=support_cap), parts)


def sample_makespan(tree: TaskTree, rng: np.random.Generator) -> float:
    """Draw one makespan; children consume the stream in document order."""
    if isinstance(tree, Primitive):
        u = rng.random()
        idx = int(np.searchsorted(tree.pmf._cums, u, side="right"))
        return float(tree.pmf.support[min(idx, tree.pmf.size - 1)])
    draws = [sample_makespan(c, rng) for c in tree.children]
    if isinstance(tree, Parallel):
        return max(draws)
    return _left_sum(draws)


def _left_sum(xs: list[float]) -> float:
    # left-to-right addition, matching the association order of convolution folds
    total = xs[0]
    for x in xs[1:]:
        total = total + x
    return total


def _sample_batch(tree: TaskTree, n: int, rng: np.random.Generator) -> np.ndarray:
    """Vectorized makespan draws; each leaf consumes a block of n variates."""
    if isinstance(tree, Primitive):
        u = rng.random(n)
        idx = np.searchsorted(tree.pmf._cums, u, side="right")
        return tree.pmf.support[np.minimum(idx, tree.pmf.size - 1)]
    parts = [_sample_batch(c, n, rng) for c in tree.children]
    op = np.maximum if isinstance(tree, Parallel) else np.add
    return reduce(op, parts)


def estimate_deadline_probability(
    tree: TaskTree, deadline: float, n_samples: int, seed: int
) -> SampleEstimate:
    """Fraction of sampled makespans at or below the deadline.

    Deterministic given the seed: the generator is PCG64 and leaves are
    visited in document order, one block of ``n_samples`` variates each.
    """
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1, got {n_samples}")
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = _sample_batch(tree, int(n_samples), rng)
    p_hat = float(np.count_nonzero(draws <= deadline)) / float(n_samples)
    return SampleEstimate(
        p_hat=p_hat,
        n_samples=int(n_samples),
        seed=int(seed),
        hoeffding_halfwidth=hoeffding_halfwidth(int(n_samples)),
    )
