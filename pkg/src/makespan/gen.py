"""Deterministic benchmark-instance generators.

Four families:

* ``LINEAR`` -- one sequence over N-1 primitives with random uniform ranges.
* ``LOGISTICS_LIKE`` -- one parallel node over vehicle routes, each a
  sequence of load / drive / unload legs; load and unload get fixed
  ranges, drive ranges derive from a random distance at bounded speeds.
* ``RANDOM_MIXED`` -- random tree of an exact node count with composite
  kinds alternating by depth.
* ``ADVERSARIAL_TIGHT`` -- the worst-case sequence family on which
  per-step trimming at eps/n provably realizes almost the full error
  budget: one staircase variable whose atoms sit a hair above the trim
  threshold, plus n-1 near-point variables whose tiny off-mass pushes one
  staircase atom onto the threshold at every fold step.

All families are pure functions of their spec (PCG64 seeded streams).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpecError
from .pmf import Pmf, discretized_uniform
from .tree import Parallel, Primitive, Sequence, TaskTree

# Staircase atom masses are scaled down by this guard so that the
# downstream products that should land exactly on the trim threshold
# cannot round one ulp above it.  The shift (~4e-15 relative) is far
# below the 1e-9 mass tolerance and the renormalization noise already
# present in any constructed distribution.
_BOUNDARY_GUARD = 1.0 - 2.0**-48


class Family(enum.Enum):
    LINEAR = "linear"
    LOGISTICS_LIKE = "logistics_like"
    RANDOM_MIXED = "random_mixed"
    ADVERSARIAL_TIGHT = "adversarial_tight"


@dataclass(frozen=True)
class GenSpec:
    """Instance description; equal specs generate identical trees."""

    family: Family
    nodes: int = 10
    bins: int = 4
    branching: int = 4
    seed: int = 0
    # ADVERSARIAL_TIGHT only:
    adv_n: int = 10
    adv_eps: float = 0.1
    adv_delta: float = 1e-6

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))


def generate(spec: GenSpec) -> TaskTree:
    """Build the task tree described by ``spec``."""
    if spec.nodes < 1:
        raise InvalidSpecError(f"nodes must be >= 1, got {spec.nodes}")
    if spec.bins < 1:
        raise InvalidSpecError(f"bins must be >= 1, got {spec.bins}")
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    if spec.family is Family.LINEAR:
        return _linear(spec, rng)
    if spec.family is Family.LOGISTICS_LIKE:
        return _logistics(spec, rng)
    if spec.family is Family.RANDOM_MIXED:
        return _random_mixed(spec, rng)
    return _adversarial(spec)


def _linear(spec: GenSpec, rng: np.random.Generator) -> TaskTree:
    if spec.nodes < 2:
        raise InvalidSpecError("a linear plan needs at least 2 nodes")
    leaves = []
    for i in range(spec.nodes - 1):
        low = rng.uniform(0.0, 10.0)
        width = rng.uniform(1.0, 10.0)
        leaves.append(
            Primitive(discretized_uniform(low, low + width, spec.bins), label=f"step-{i}")
        )
    return Sequence(tuple(leaves), label="linear-plan")


def _logistics(spec: GenSpec, rng: np.random.Generator) -> TaskTree:
    routes = spec.branching
    leaf_total = spec.nodes - 1 - routes
    if routes < 1 or leaf_total < routes:
        raise InvalidSpecError(
            f"logistics needs nodes >= 1 + 2 * branching, got nodes={spec.nodes} branching={routes}"
        )
    per_route = [leaf_total // routes + (1 if i < leaf_total % routes else 0) for i in range(routes)]
    kinds = ("load", "drive", "unload")
    out = []
    for r, count in enumerate(per_route):
        legs = []
        for j in range(count):
            kind = kinds[j % 3]
            if kind == "drive":
                distance = rng.uniform(5.0, 50.0)
                low, high = 0.8 * distance, 1.25 * distance  # speed between 0.8 and 1.25
            else:
                low, high = 0.5, 1.5
            legs.append(
                Primitive(discretized_uniform(low, high, spec.bins), label=f"{kind}-{r}.{j}")
            )
        out.append(Sequence(tuple(legs), label=f"vehicle-{r}"))
    return Parallel(tuple(out), label="fleet")


def _random_mixed(spec: GenSpec, rng: np.random.Generator) -> TaskTree:
    if spec.branching < 2:
        raise InvalidSpecError(f"branching must be >= 2, got {spec.branching}")
    counter = iter(range(10**9))

    def leaf() -> Primitive:
        bins = int(rng.integers(1, spec.bins + 1))
        low = rng.uniform(0.0, 10.0)
        width = rng.uniform(0.5, 5.0)
        return Primitive(
            discretized_uniform(low, low + width, bins), label=f"task-{next(counter)}"
        )

    def build(kind: type, budget: int) -> TaskTree:
        if budget == 1:
            return leaf()
        other = Parallel if kind is Sequence else Sequence
        if budget == 2:
            return kind((leaf(),))
        max_children = min(spec.branching, budget - 1)
        n_children = int(rng.integers(2, max_children + 1)) if max_children >= 2 else 1
        parts = _composition(rng, budget - 1, n_children)
        return kind(tuple(build(other, p) for p in parts))

    root_kind = Sequence if rng.random() < 0.5 else Parallel
    if spec.nodes == 1:
        return leaf()
    return build(root_kind, spec.nodes)


def _composition(rng: np.random.Generator, total: int, parts: int) -> list[int]:
    """Split ``total`` into ``parts`` positive integers, uniformly at random."""
    if parts == 1:
        return [total]
    cuts = np.sort(rng.choice(np.arange(1, total), size=parts - 1, replace=False))
    edges = np.concatenate(([0], cuts, [total]))
    return np.diff(edges).tolist()


def _adversarial(spec: GenSpec) -> TaskTree:
    n, eps, delta = spec.adv_n, float(spec.adv_eps), float(spec.adv_delta)
    if n < 1:
        raise InvalidSpecError(f"adv_n must be >= 1, got {n}")
    if not 0.0 < eps < 1.0:
        raise InvalidSpecError(f"adv_eps must lie in (0, 1), got {eps}")
    if not 0.0 < delta < 1.0:
        raise InvalidSpecError(f"adv_delta must lie in (0, 1), got {delta}")
    if not 1.0 - eps > eps / n:
        raise InvalidSpecError(f"family needs 1 - eps > eps / n, got eps={eps} n={n}")
    staircase = [eps / (n * (1.0 - delta) ** x) * _BOUNDARY_GUARD for x in range(1, n + 1)]
    remainder = 1.0 - delta - sum(staircase)
    if remainder <= 0.0:
        raise InvalidSpecError(
            f"no probability left for the top atom (eps={eps}, n={n}, delta={delta})"
        )
    pairs = [(0.0, delta)]
    pairs += [(float(x), m) for x, m in zip(range(1, n + 1), staircase)]
    pairs.append((float(n + 1), remainder))
    first = Primitive(Pmf.from_pairs(pairs), label="staircase")
    spike = Pmf.from_pairs([(0.0, 1.0 - delta), (float(n * n), delta)])
    rest = [Primitive(spike, label=f"spike-{i}") for i in range(2, n + 1)]
    return Sequence(tuple([first] + rest), label=f"adversarial-n{n}")
