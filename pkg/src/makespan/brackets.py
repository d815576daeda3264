"""Certified CDF brackets for task trees.

The budgeted postorder traversal splits an accuracy budget ``eps`` across
a tree: sequence children receive shares proportional to their subtree
sizes and the sequence's own trimming takes the remaining ``eps / |tree|``;
parallel children get the same proportional share clamped so the exact
max-composition cannot amplify the error.  The result's CDF stays within
``eps`` of the truth on the requested side.  Running both sides yields a
bracket and certified deadline-probability intervals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidEpsilonError, MakespanError, NotCompositeError
from .ops import DEFAULT_SUPPORT_CAP, BoundSide, parallel_compose, sequence_approx
from .pmf import Pmf
from .tree import Parallel, Primitive, Sequence, TaskTree, node_count, subtree_sizes


@dataclass(frozen=True)
class ProbabilityInterval:
    """Certified interval for P(makespan <= deadline)."""

    lo: float
    hi: float
    deadline: float

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        if lo > hi:
            if lo - hi > 1e-12:
                raise ValueError(f"interval inverted: lo={lo!r} > hi={hi!r}")
            lo = hi  # rounding-scale inversion only
        if not (0.0 <= lo and hi <= 1.0):
            raise ValueError(f"probabilities out of range: [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "deadline", float(self.deadline))

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class CdfBracket:
    """Pair of distributions whose CDFs sandwich the true makespan CDF.

    ``upper`` dominates the true CDF and ``lower`` is dominated by it,
    each by at most ``eps``; the bracket width at any deadline is
    therefore at most ``2 * eps``.
    """

    upper: Pmf
    lower: Pmf
    eps: float

    def __post_init__(self) -> None:
        if not 0.0 < float(self.eps) < 1.0:
            raise InvalidEpsilonError(f"eps must lie in (0, 1), got {self.eps!r}")
        grid = np.unique(np.concatenate([self.upper.support, self.lower.support]))
        if np.any(self.lower.cdf(grid) > self.upper.cdf(grid) + 1e-12):
            raise MakespanError("bracket sides cross: lower CDF exceeds upper CDF")

    def interval_at(self, deadline: float) -> ProbabilityInterval:
        return ProbabilityInterval(
            lo=self.lower.cdf(deadline), hi=self.upper.cdf(deadline), deadline=deadline
        )

    def expectation_bounds(self) -> tuple[float, float]:
        """Bounds on the true expected makespan.

        The dominating CDF corresponds to the stochastically smaller
        variable, so its mean is the low end.  Valid whenever both sides
        bracket the true CDF; no per-eps accuracy is claimed.
        """
        return self.upper.mean(), self.lower.mean()


def child_budget(tree: TaskTree, eps: float, child_index: int) -> float:
    """Accuracy budget the traversal passes to one child of the root.

    Sequence: ``|child| * eps / |tree|``.  Parallel: the same, clamped at
    ``1 / (n * (|tree| * n + 1))`` where n is the number of children.
    """
    if isinstance(tree, Primitive):
        raise NotCompositeError("primitive nodes have no children to budget")
    if not 0.0 < float(eps) < 1.0:
        raise InvalidEpsilonError(f"eps must lie in (0, 1), got {eps!r}")
    child = tree.children[child_index]
    share = node_count(child) * eps / node_count(tree)
    if isinstance(tree, Sequence):
        return share
    n = len(tree.children)
    return min(share, 1.0 / (n * (node_count(tree) * n + 1)))


def sequence_trim_budget(tree: TaskTree, eps: float) -> float:
    """Trim parameter a Sequence root uses when folding its children."""
    if not isinstance(tree, Sequence):
        raise NotCompositeError("only sequence nodes trim during composition")
    if not 0.0 < float(eps) < 1.0:
        raise InvalidEpsilonError(f"eps must lie in (0, 1), got {eps!r}")
    return eps / (len(tree.children) * node_count(tree))


def network_approx(
    tree: TaskTree,
    eps: float,
    side: BoundSide = BoundSide.UPPER,
    *,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> Pmf:
    """One-sided eps-approximation of the makespan distribution of a tree.

    Primitive leaves pass through unchanged; sequence nodes fold their
    recursively approximated children with per-step trimming; parallel
    nodes compose exactly.  The output is deterministic: children are
    always processed in document order.
    """
    if not 0.0 < float(eps) < 1.0:
        raise InvalidEpsilonError(f"eps must lie in (0, 1), got {eps!r}")
    sizes = subtree_sizes(tree)

    def go(node: TaskTree, budget: float) -> Pmf:
        if isinstance(node, Primitive):
            return node.pmf
        size = sizes[id(node)]
        n = len(node.children)
        if isinstance(node, Sequence):
            kids = [go(c, sizes[id(c)] * budget / size) for c in node.children]
            return sequence_approx(
                kids, budget / (n * size), side, support_cap=support_cap
            )
        clamp = 1.0 / (n * (size * n + 1))
        kids = [
            go(c, min(sizes[id(c)] * budget / size, clamp)) for c in node.children
        ]
        return parallel_compose(kids)

    return go(tree, float(eps))


def bracket(
    tree: TaskTree, eps: float, *, support_cap: int = DEFAULT_SUPPORT_CAP
) -> CdfBracket:
    """Two-sided bracket: upper and lower runs of the budgeted traversal."""
    upper = network_approx(tree, eps, BoundSide.UPPER, support_cap=support_cap)
    lower = network_approx(tree, eps, BoundSide.LOWER, support_cap=support_cap)
    return CdfBracket(upper=upper, lower=lower, eps=float(eps))


def deadline_probability(
    tree: TaskTree,
    deadline: float,
    eps: float,
    *,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> ProbabilityInterval:
    """Certified interval for P(makespan <= deadline), width at most 2 * eps."""
    return bracket(tree, eps, support_cap=support_cap).interval_at(deadline)


def expectation_interval(br: CdfBracket) -> tuple[float, float]:
    """Bounds on the expected makespan derived from a CDF bracket."""
    return br.expectation_bounds()
