"""Guaranteed two-sided brackets on completion-time CDFs of series-parallel plans.

Plans are trees of primitive tasks with independent discrete duration
distributions, composed in sequence (durations add) or in parallel
(durations max).  Exact answers are NP-hard in general; this package
computes certified eps-brackets on the makespan CDF in polynomial time,
plus an exact brute-force oracle and a seeded Monte-Carlo sampler for
validation and benchmarking.
"""

from .baselines import (
    CONFIDENCE,
    SampleEstimate,
    estimate_deadline_probability,
    exact_distribution,
    hoeffding_halfwidth,
    sample_makespan,
)
from .brackets import (
    CdfBracket,
    ProbabilityInterval,
    bracket,
    child_budget,
    deadline_probability,
    expectation_interval,
    network_approx,
    sequence_trim_budget,
)
from .errors import (
    InvalidEpsilonError,
    InvalidRangeError,
    InvalidSpecError,
    MakespanError,
    MassNotOneError,
    NegativeValueError,
    NonPositiveProbabilityError,
    NotCompositeError,
    PlanParseError,
    PlanSchemaError,
    SupportCapExceededError,
    ZeroBinsError,
)
from .gen import Family, GenSpec, generate
from .ops import (
    DEFAULT_SUPPORT_CAP,
    BoundSide,
    convolve,
    parallel_compose,
    sequence_approx,
    trim,
)
from .planio import load_plan, save_plan
from .pmf import Pmf, StepCdf, discretized_uniform
from .tree import Parallel, Primitive, Sequence, TaskTree, node_count, subtree_sizes

__version__ = "0.1.0"

__all__ = [
    "BoundSide",
    "CONFIDENCE",
    "CdfBracket",
    "DEFAULT_SUPPORT_CAP",
    "Family",
    "GenSpec",
    "InvalidEpsilonError",
    "InvalidRangeError",
    "InvalidSpecError",
    "MakespanError",
    "MassNotOneError",
    "NegativeValueError",
    "NonPositiveProbabilityError",
    "NotCompositeError",
    "Parallel",
    "PlanParseError",
    "PlanSchemaError",
    "Pmf",
    "Primitive",
    "ProbabilityInterval",
    "SampleEstimate",
    "Sequence",
    "StepCdf",
    "SupportCapExceededError",
    "TaskTree",
    "ZeroBinsError",
    "bracket",
    "child_budget",
    "convolve",
    "deadline_probability",
    "discretized_uniform",
    "estimate_deadline_probability",
    "exact_distribution",
    "expectation_interval",
    "generate",
    "hoeffding_halfwidth",
    "load_plan",
    "network_approx",
    "node_count",
    "parallel_compose",
    "sample_makespan",
    "save_plan",
    "sequence_approx",
    "sequence_trim_budget",
    "subtree_sizes",
    "trim",
    "__version__",
]
