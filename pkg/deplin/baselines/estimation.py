"""Expected values of metrics over ensembles of arrangements or trees.

Exact mode averages over the whole ensemble with rational arithmetic. Monte
Carlo mode draws fixed-size blocks, each from its own child seed of the root
seed, and merges exact per-block sums in block order, so the estimate
depends only on the seed and the sample count.
"""
import logging
import math
import multiprocessing
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import partial

import numpy as np

from deplin.config import DEFAULT_LIMITS, LimitsConfig
from deplin.exceptions import EnsembleTooLargeError, KindMismatchError
from deplin.generate import (
    Constraint,
    TreeKind,
    count_arrangements,
    count_trees,
    exhaustive_arrangements,
    exhaustive_trees,
    make_rng,
    random_arrangement,
    random_tree,
)
from deplin.graphs import RootedTree, Tree
from deplin.io.features import Metric, get_metric

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1024


class EstimationMode(Enum):
    EXACT = "exact"
    MONTE_CARLO = "monte_carlo"


@dataclass(frozen=True)
class EstimationResult:
    mode: EstimationMode
    mean: Fraction | float
    variance: Fraction | float
    third_central_moment: Fraction | float
    fourth_central_moment: Fraction | float
    std_error: float | None
    samples: int
    seed: int | None = None
    ensemble_size: int | None = None


@dataclass
class _Sums:
    """Exact power sums: ``powers[k]`` is the sum of the (k+1)-th powers."""

    count: int = 0
    powers: list[Fraction] = field(default_factory=lambda: [Fraction(0)] * 4)

    def add(self, value: int | bool | Fraction) -> None:
        x = Fraction(value)
        self.count += 1
        term = x
        for k in range(4):
            self.powers[k] += term
            term *= x

    def merge(self, other: "_Sums") -> None:
        self.count += other.count
        self.powers = [a + b for a, b in zip(self.powers, other.powers)]

    def raw_moments(self) -> list[Fraction]:
        return [p / self.count for p in self.powers]

    def central_moments(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Mean and the second to fourth central moments, all over ``count``."""
        m1, m2, m3, m4 = self.raw_moments()
        return (
            m1,
            m2 - m1**2,
            m3 - 3 * m1 * m2 + 2 * m1**3,
            m4 - 4 * m1 * m3 + 6 * m1**2 * m2 - 3 * m1**4,
        )


def _exact_result(sums: _Sums) -> EstimationResult:
    mean, variance, third, fourth = sums.central_moments()
    return EstimationResult(
        mode=EstimationMode.EXACT,
        mean=mean,
        variance=variance,
        third_central_moment=third,
        fourth_central_moment=fourth,
        std_error=None,
        samples=sums.count,
        ensemble_size=sums.count,
    )


def _monte_carlo_result(sums: _Sums, seed: int) -> EstimationResult:
    n = sums.count
    mean, spread, third, fourth = sums.central_moments()
    # unbiased variance; the higher moments are those of the sample itself
    variance = spread * n / (n - 1) if n > 1 else Fraction(0)
    return EstimationResult(
        mode=EstimationMode.MONTE_CARLO,
        mean=float(mean),
        variance=float(variance),
        third_central_moment=float(third),
        fourth_central_moment=float(fourth),
        std_error=math.sqrt(variance / n),
        samples=n,
        seed=seed,
    )


def _block_sizes(samples: int) -> list[int]:
    full, rest = divmod(samples, BLOCK_SIZE)
    return [BLOCK_SIZE] * full + ([rest] if rest else [])


def _arrangement_block(
    job: tuple[np.random.SeedSequence, int], tree: Tree, metric_name: str, constraint: Constraint
) -> _Sums:
    child, size = job
    rng = np.random.Generator(np.random.PCG64(child))
    metric = get_metric(metric_name)
    sums = _Sums()
    for _ in range(size):
        sums.add(metric(tree, random_arrangement(tree, constraint, rng)))
    return sums


def _tree_block(
    job: tuple[np.random.SeedSequence, int], kind: TreeKind, n: int, metric_name: str
) -> _Sums:
    child, size = job
    rng = np.random.Generator(np.random.PCG64(child))
    metric = get_metric(metric_name)
    sums = _Sums()
    for _ in range(size):
        sums.add(metric(random_tree(kind, n, rng)))
    return sums


def _run_blocks(worker: partial, samples: int, seed: int | None, workers: int) -> EstimationResult:
    if samples < 1:
        raise ValueError(f"Monte Carlo needs at least one sample, got {samples}")
    _, seed = make_rng(seed)
    sizes = _block_sizes(samples)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = list(zip(children, sizes))
    logger.debug("monte carlo: %d samples in %d blocks, seed %d", samples, len(jobs), seed)

    results: Iterable[_Sums]
    if workers > 1 and len(jobs) > 1:
        with multiprocessing.Pool(min(workers, len(jobs))) as pool:
            results = pool.map(worker, jobs)
    else:
        results = map(worker, jobs)
    total = _Sums()
    for block in results:
        total.merge(block)
    return _monte_carlo_result(total, seed)


def _check_order_dependent(metric: Metric) -> None:
    if not metric.order_dependent:
        raise KindMismatchError(f"Metric '{metric.name}' does not depend on word order")


def estimate_over_arrangements(
    tree: Tree,
    metric: str,
    constraint: Constraint = Constraint.UNCONSTRAINED,
    mode: EstimationMode = EstimationMode.EXACT,
    samples: int = 10_000,
    seed: int | None = None,
    limits: LimitsConfig = DEFAULT_LIMITS,
    workers: int = 1,
) -> EstimationResult:
    """Mean, variance and third and fourth central moments of ``metric`` over
    the arrangements of ``tree``.

    Only arrangements satisfying ``constraint`` are counted.
    """
    chosen = get_metric(metric)
    _check_order_dependent(chosen)
    if chosen.needs_root and not isinstance(tree, RootedTree):
        raise KindMismatchError(f"Metric '{metric}' needs a rooted tree")

    if mode is EstimationMode.EXACT:
        size = count_arrangements(tree, constraint)
        if size > limits.max_arrangement_ensemble:
            raise EnsembleTooLargeError(
                f"{size} {constraint.value} arrangements exceed the limit of "
                f"{limits.max_arrangement_ensemble}"
            )
        sums = _Sums()
        for arrangement in exhaustive_arrangements(tree, constraint, max_n=tree.n):
            sums.add(chosen(tree, arrangement))
        return _exact_result(sums)

    worker = partial(_arrangement_block, tree=tree, metric_name=metric, constraint=constraint)
    return _run_blocks(worker, samples, seed, workers)


def estimate_over_trees(
    kind: TreeKind,
    n: int,
    metric: str,
    mode: EstimationMode = EstimationMode.EXACT,
    samples: int = 10_000,
    seed: int | None = None,
    limits: LimitsConfig = DEFAULT_LIMITS,
    workers: int = 1,
) -> EstimationResult:
    """Moments of an order-independent ``metric`` over all trees of a kind."""
    chosen = get_metric(metric)
    if chosen.order_dependent:
        raise KindMismatchError(f"Metric '{metric}' depends on word order")
    if chosen.needs_root and not kind.rooted:
        raise KindMismatchError(f"Metric '{metric}' needs rooted trees, got {kind}")

    if mode is EstimationMode.EXACT:
        size = count_trees(kind, n)
        if size > limits.max_tree_ensemble:
            raise EnsembleTooLargeError(
                f"{size} {kind} trees exceed the limit of {limits.max_tree_ensemble}"
            )
        sums = _Sums()
        for tree in exhaustive_trees(kind, n):
            sums.add(chosen(tree))
        return _exact_result(sums)

    worker = partial(_tree_block, kind=kind, n=n, metric_name=metric)
    return _run_blocks(worker, samples, seed, workers)
