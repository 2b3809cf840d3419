from fractions import Fraction

import pytest

from deplin.baselines import (
    BLOCK_SIZE,
    EstimationMode,
    estimate_over_arrangements,
    estimate_over_trees,
)
from deplin.config import LimitsConfig
from deplin.exceptions import EnsembleTooLargeError, KindMismatchError, UnknownMetricError
from deplin.generate import Constraint, TreeKind, exhaustive_trees
from deplin.graphs import RootedTree, path_tree, root_at, star_tree
from deplin.properties import expected_C_unconstrained, expected_D_unconstrained


class TestExactArrangements:
    def test_path_of_three(self) -> None:
        result = estimate_over_arrangements(path_tree(3), "D")
        assert result.mode is EstimationMode.EXACT
        assert result.mean == Fraction(8, 3)
        assert result.variance == Fraction(2, 9)
        assert result.ensemble_size == 6
        assert result.std_error is None

    def test_higher_moments(self) -> None:
        result = estimate_over_arrangements(path_tree(3), "D")
        assert result.third_central_moment == Fraction(-2, 27)
        assert result.fourth_central_moment == Fraction(2, 27)
        star = estimate_over_arrangements(root_at(star_tree(3), 1), "C")
        assert (star.variance, star.third_central_moment, star.fourth_central_moment) == (0, 0, 0)

    def test_closed_forms_over_all_small_trees(self) -> None:
        for n in range(2, 8):
            for tree in exhaustive_trees(TreeKind.UNLABELED_FREE, n):
                assert estimate_over_arrangements(tree, "D").mean == expected_D_unconstrained(tree)
                assert estimate_over_arrangements(tree, "C").mean == expected_C_unconstrained(tree)

    def test_star_projective(self) -> None:
        tree = root_at(star_tree(3), 1)
        result = estimate_over_arrangements(tree, "D", Constraint.PROJECTIVE)
        assert result.mean == Fraction(8, 3)
        assert result.samples == 6

    def test_crossings_match_closed_form(self) -> None:
        assert estimate_over_arrangements(path_tree(4), "C").mean == Fraction(1, 3)
        tree = RootedTree.from_head_vector("2 0 2 3 3 5")
        assert estimate_over_arrangements(tree, "C").mean == expected_C_unconstrained(tree)
        assert estimate_over_arrangements(tree, "D").mean == expected_D_unconstrained(tree)

    def test_projective_orders_never_cross(self) -> None:
        tree = RootedTree.from_head_vector("2 0 2 3 3 5")
        result = estimate_over_arrangements(tree, "C", Constraint.PROJECTIVE)
        assert result.mean == 0
        assert result.variance == 0

    def test_ensemble_limit(self) -> None:
        with pytest.raises(EnsembleTooLargeError):
            estimate_over_arrangements(
                path_tree(6), "D", limits=LimitsConfig(max_arrangement_ensemble=100)
            )


class TestExactTrees:
    def test_hierarchical_distance(self) -> None:
        assert estimate_over_trees(TreeKind.UNLABELED_ROOTED, 2, "MHD").mean == 1
        result = estimate_over_trees(TreeKind.LABELED_ROOTED, 3, "MHD")
        assert result.mean == Fraction(4, 3)
        assert result.ensemble_size == 9

    def test_hubiness(self) -> None:
        assert estimate_over_trees(TreeKind.UNLABELED_FREE, 4, "hubiness").mean == Fraction(1, 2)

    def test_moments_of_two_valued_metric(self) -> None:
        # unlabeled free trees on 4 vertices: the path (2 leaves) and the star (3 leaves)
        result = estimate_over_trees(TreeKind.UNLABELED_FREE, 4, "num_leaves")
        assert result.mean == Fraction(5, 2)
        assert result.variance == Fraction(1, 4)
        assert result.third_central_moment == 0
        assert result.fourth_central_moment == Fraction(1, 16)

    def test_ensemble_limit(self) -> None:
        with pytest.raises(EnsembleTooLargeError):
            estimate_over_trees(
                TreeKind.LABELED_FREE, 8, "diameter", limits=LimitsConfig(max_tree_ensemble=1000)
            )


class TestMonteCarlo:
    def test_reproducible(self) -> None:
        tree = path_tree(7)
        kwargs = {"mode": EstimationMode.MONTE_CARLO, "samples": 3000, "seed": 42}
        a = estimate_over_arrangements(tree, "D", **kwargs)
        b = estimate_over_arrangements(tree, "D", **kwargs)
        assert a == b
        assert a.seed == 42
        assert a.samples == 3000

    def test_workers_do_not_change_the_estimate(self) -> None:
        tree = path_tree(7)
        kwargs = {"mode": EstimationMode.MONTE_CARLO, "samples": 3 * BLOCK_SIZE + 5, "seed": 1}
        assert estimate_over_arrangements(tree, "D", workers=2, **kwargs) == (
            estimate_over_arrangements(tree, "D", workers=1, **kwargs)
        )

    def test_close_to_exact_value(self) -> None:
        tree = path_tree(7)
        result = estimate_over_arrangements(
            tree, "D", mode=EstimationMode.MONTE_CARLO, samples=5000, seed=3
        )
        assert result.std_error is not None
        assert abs(result.mean - 16) < 5 * result.std_error

    def test_hierarchical_distance_matches_enumeration(self) -> None:
        exact = estimate_over_trees(TreeKind.UNLABELED_ROOTED, 8, "MHD")
        assert exact.ensemble_size == 115
        sampled = estimate_over_trees(
            TreeKind.UNLABELED_ROOTED, 8, "MHD", mode=EstimationMode.MONTE_CARLO,
            samples=100_000, seed=2024,
        )
        assert sampled.std_error is not None
        assert abs(sampled.mean - exact.mean) <= 3 * sampled.std_error

    @pytest.mark.slow
    def test_seeded_runs_converge(self) -> None:
        tree = RootedTree.from_head_vector("2 3 0 3 2 7 5 4 3")
        close = 0
        for seed in range(100):
            result = estimate_over_arrangements(
                tree, "D", mode=EstimationMode.MONTE_CARLO, samples=2000, seed=seed
            )
            assert result.std_error is not None
            close += abs(result.mean - Fraction(80, 3)) <= 4 * result.std_error
        assert close >= 99

    def test_monte_carlo_moments(self) -> None:
        result = estimate_over_arrangements(
            path_tree(3), "D", mode=EstimationMode.MONTE_CARLO, samples=20_000, seed=5
        )
        assert isinstance(result.third_central_moment, float)
        assert abs(result.third_central_moment + 2 / 27) < 0.02
        assert abs(result.fourth_central_moment - 2 / 27) < 0.02

    def test_trees(self) -> None:
        result = estimate_over_trees(
            TreeKind.UNLABELED_FREE, 8, "num_leaves", mode=EstimationMode.MONTE_CARLO,
            samples=2000, seed=8,
        )
        assert 2 <= result.mean <= 7

    def test_seed_is_reported_when_drawn(self) -> None:
        result = estimate_over_arrangements(
            path_tree(4), "D", mode=EstimationMode.MONTE_CARLO, samples=10
        )
        assert result.seed is not None
        replay = estimate_over_arrangements(
            path_tree(4), "D", mode=EstimationMode.MONTE_CARLO, samples=10, seed=result.seed
        )
        assert replay == result

    def test_needs_samples(self) -> None:
        with pytest.raises(ValueError):
            estimate_over_arrangements(
                path_tree(4), "D", mode=EstimationMode.MONTE_CARLO, samples=0
            )


class TestMetricChecks:
    def test_order_independent_metric_over_arrangements(self) -> None:
        with pytest.raises(KindMismatchError):
            estimate_over_arrangements(path_tree(4), "Q")

    def test_rooted_metric_on_free_tree(self) -> None:
        with pytest.raises(KindMismatchError):
            estimate_over_arrangements(path_tree(4), "head_initial_ratio")

    def test_order_dependent_metric_over_trees(self) -> None:
        with pytest.raises(KindMismatchError):
            estimate_over_trees(TreeKind.LABELED_FREE, 4, "D")

    def test_rooted_metric_over_free_trees(self) -> None:
        with pytest.raises(KindMismatchError):
            estimate_over_trees(TreeKind.LABELED_FREE, 4, "MHD")

    def test_unknown_metric(self) -> None:
        with pytest.raises(UnknownMetricError):
            estimate_over_trees(TreeKind.LABELED_FREE, 4, "entropy")
