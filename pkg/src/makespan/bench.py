"""Benchmark harness: accuracy-versus-runtime matrices over generated plans.

A matrix crosses one instance family with bin counts, accuracy targets and
sample sizes.  Every (bins, eps, samples) cell emits two rows, one for the
certified approximation and one for sampling, each carrying the observed
error against the exact distribution when the exact route fits under the
support cap (columns ``exact_status`` / ``exact_wall_s`` record that
route's outcome).  Probabilities in the output are deterministic given the
matrix; only the wall-clock columns vary between runs.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .baselines import estimate_deadline_probability, exact_distribution
from .brackets import network_approx
from .errors import InvalidSpecError, MakespanError, SupportCapExceededError
from .gen import Family, GenSpec, generate
from .ops import DEFAULT_SUPPORT_CAP, BoundSide
from .pmf import Pmf

__all__ = ["BenchRow", "MatrixSpec", "PRESETS", "load_matrix", "run_matrix", "write_rows"]


@dataclass(frozen=True)
class MatrixSpec:
    family: Family
    nodes: int
    bins_list: tuple[int, ...]
    eps_list: tuple[float, ...]
    samples_list: tuple[int, ...]
    seed: int = 0
    branching: int = 4
    probes: int = 33
    support_cap: int = DEFAULT_SUPPORT_CAP


@dataclass
class BenchRow:
    family: str
    nodes: int
    bins: int
    eps: float | None
    n_samples: int | None
    method: str  # "approx" | "sample"
    status: str
    deadline: float | None
    value: float | None
    err_lo: float | None
    err_hi: float | None
    wall_s: float | None
    exact_status: str
    exact_wall_s: float | None


PRESETS: dict[str, MatrixSpec] = {
    "smoke": MatrixSpec(Family.LINEAR, nodes=4, bins_list=(2,), eps_list=(0.1,), samples_list=(1000,)),
    "seq10": MatrixSpec(
        Family.LINEAR, nodes=10, bins_list=(4, 10), eps_list=(0.1, 0.01), samples_list=(10**4, 10**6)
    ),
    "seq47": MatrixSpec(
        Family.LINEAR, nodes=47, bins_list=(10,), eps_list=(0.1, 0.01), samples_list=(10**4,)
    ),
    "logi45": MatrixSpec(
        Family.LOGISTICS_LIKE, nodes=45, bins_list=(4, 10), eps_list=(0.1, 0.01), samples_list=(10**4, 10**6)
    ),
}


def load_matrix(path: str | Path) -> MatrixSpec:
    """Read a matrix description from JSON (same fields as MatrixSpec)."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    try:
        return MatrixSpec(
            family=Family(raw["family"]),
            nodes=int(raw["nodes"]),
            bins_list=tuple(int(b) for b in raw["bins"]),
            eps_list=tuple(float(e) for e in raw["eps"]),
            samples_list=tuple(int(s) for s in raw["samples"]),
            seed=int(raw.get("seed", 0)),
            branching=int(raw.get("branching", 4)),
            probes=int(raw.get("probes", 33)),
            support_cap=int(raw.get("support_cap", DEFAULT_SUPPORT_CAP)),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise InvalidSpecError(f"{path}: bad matrix spec ({exc})") from exc


def run_matrix(spec: MatrixSpec) -> list[BenchRow]:
    rows: list[BenchRow] = []
    for mi, bins in enumerate(spec.bins_list):
        tree = generate(
            GenSpec(spec.family, nodes=spec.nodes, bins=bins, branching=spec.branching, seed=spec.seed)
        )
        t0 = time.perf_counter()
        exact: Pmf | None = None
        try:
            exact = exact_distribution(tree, support_cap=spec.support_cap)
            exact_status = "ok"
        except SupportCapExceededError:
            exact_status = "infeasible"
        exact_wall = time.perf_counter() - t0

        # One probe grid and one sampling deadline per instance.
        approx_cache: dict[float, tuple[str, Pmf | None, Pmf | None, float]] = {}
        for eps in spec.eps_list:
            approx_cache[eps] = _run_approx(tree, eps, spec.support_cap)
        if exact is not None:
            ts = np.linspace(exact.min_value - 1.0, exact.max_value + 1.0, spec.probes)
            deadline = exact.to_step_cdf().quantile(0.5)
        else:
            ref = next(
                (u for _, u, _, _ in approx_cache.values() if u is not None), None
            )
            ts = None
            deadline = ref.to_step_cdf().quantile(0.5) if ref is not None else 0.0

        sample_cache: dict[int, tuple[str, float | None, float]] = {}
        for si, n in enumerate(spec.samples_list):
            sample_cache[n] = _run_sample(tree, deadline, n, spec.seed + 1000 * mi + si)

        for eps in spec.eps_list:
            for n in spec.samples_list:
                a_status, upper, lower, a_wall = approx_cache[eps]
                err_lo = err_hi = None
                if upper is not None and lower is not None and exact is not None:
                    f_exact = exact.cdf(ts)
                    err_lo = float(np.min(lower.cdf(ts) - f_exact))
                    err_hi = float(np.max(upper.cdf(ts) - f_exact))
                rows.append(
                    BenchRow(
                        family=spec.family.value, nodes=spec.nodes, bins=bins,
                        eps=eps, n_samples=n, method="approx", status=a_status,
                        deadline=None, value=None, err_lo=err_lo, err_hi=err_hi,
                        wall_s=a_wall, exact_status=exact_status, exact_wall_s=exact_wall,
                    )
                )
                s_status, p_hat, s_wall = sample_cache[n]
                s_err = None
                if p_hat is not None and exact is not None:
                    s_err = p_hat - float(exact.cdf(deadline))
                rows.append(
                    BenchRow(
                        family=spec.family.value, nodes=spec.nodes, bins=bins,
                        eps=eps, n_samples=n, method="sample", status=s_status,
                        deadline=deadline, value=p_hat, err_lo=s_err, err_hi=s_err,
                        wall_s=s_wall, exact_status=exact_status, exact_wall_s=exact_wall,
                    )
                )
    return rows


def _run_approx(tree, eps, cap):
    t0 = time.perf_counter()
    try:
        upper = network_approx(tree, eps, BoundSide.UPPER, support_cap=cap)
        lower = network_approx(tree, eps, BoundSide.LOWER, support_cap=cap)
        return "ok", upper, lower, time.perf_counter() - t0
    except MakespanError as exc:
        return f"error:{type(exc).__name__}", None, None, time.perf_counter() - t0


def _run_sample(tree, deadline, n, seed):
    t0 = time.perf_counter()
    try:
        est = estimate_deadline_probability(tree, deadline, n, seed)
        return "ok", est.p_hat, time.perf_counter() - t0
    except MakespanError as exc:
        return f"error:{type(exc).__name__}", None, time.perf_counter() - t0


def write_rows(rows: list[BenchRow], path: str | Path) -> None:
    """Write rows as CSV with 17-significant-digit floats."""
    names = [f.name for f in fields(BenchRow)]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(names)
        for row in rows:
            writer.writerow([_fmt(getattr(row, n)) for n in names])


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)
