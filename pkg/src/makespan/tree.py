"""Series-parallel task trees.

A plan is a finite tree whose leaves carry completion-time distributions.
A Sequence node runs its children back to back (makespan = sum); a
Parallel node runs them concurrently (makespan = max).  Durations are
independent across leaves.  Trees are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .pmf import Pmf


@dataclass(frozen=True)
class Primitive:
    """Leaf task with a known duration distribution."""

    pmf: Pmf
    label: str | None = None


@dataclass(frozen=True)
class Sequence:
    """Task decomposed into children executed one after another."""

    children: tuple["TaskTree", ...]
    label: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        _check_children(self.children)


@dataclass(frozen=True)
class Parallel:
    """Task decomposed into children executed concurrently."""

    children: tuple["TaskTree", ...]
    label: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        _check_children(self.children)


TaskTree = Union[Primitive, Sequence, Parallel]


def _check_children(children: tuple[TaskTree, ...]) -> None:
    if not children:
        raise ValueError("composite nodes need at least one child")
    for c in children:
        if not isinstance(c, (Primitive, Sequence, Parallel)):
            raise TypeError(f"child must be a task-tree node, got {type(c).__name__}")


def node_count(tree: TaskTree) -> int:
    """Total number of nodes, counting the root and every leaf."""
    if isinstance(tree, Primitive):
        return 1
    return 1 + sum(node_count(c) for c in tree.children)


def subtree_sizes(tree: TaskTree) -> dict[int, int]:
    """Node count of every subtree, keyed by ``id`` of the subtree root.

    One prepass; reused by the budgeted traversal so sizes are not
    recomputed quadratically.
    """
    sizes: dict[int, int] = {}

    def walk(node: TaskTree) -> int:
        if isinstance(node, Primitive):
            sizes[id(node)] = 1
            return 1
        total = 1 + sum(walk(c) for c in node.children)
        sizes[id(node)] = total
        return total

    walk(tree)
    return sizes
