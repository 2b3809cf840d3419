"""Registry of per-sentence features.

Every feature is a named metric computed on a tree, optionally under an
arrangement. The same names are used by the CSV writer and by the baseline
estimators.
"""
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction

from deplin.exceptions import KindMismatchError, NoEdgesError, TooSmallError, UnknownMetricError
from deplin.graphs import Arrangement, RootedTree, Tree
from deplin.linarr import (
    classify_arrangement,
    flux,
    head_initial_ratio,
    is_one_endpoint_crossing,
    is_planar,
    is_root_covered,
    mean_dependency_distance,
    min_D_planar,
    min_D_projective,
    min_D_unconstrained,
    num_crossings,
    sum_edge_lengths,
)
from deplin.properties import (
    DegreeKind,
    degree_moment,
    diameter,
    expected_C_unconstrained,
    expected_D_unconstrained,
    hubiness,
    mean_hierarchical_distance,
    num_independent_edge_pairs,
    num_leaves,
)

Value = int | bool | Fraction


@dataclass(frozen=True)
class Metric:
    name: str
    compute: Callable[[Tree, Arrangement | None], Value]
    order_dependent: bool = False
    needs_root: bool = False
    default: bool = True
    description: str = ""

    def __call__(self, tree: Tree, arrangement: Arrangement | None = None) -> Value:
        if self.needs_root and not isinstance(tree, RootedTree):
            raise KindMismatchError(f"Metric '{self.name}' needs a rooted tree")
        if self.order_dependent:
            if arrangement is None:
                arrangement = Arrangement.identity(tree.n)
            return self.compute(tree, arrangement)
        return self.compute(tree, None)


def _rooted(tree: Tree) -> RootedTree:
    assert isinstance(tree, RootedTree)
    return tree


def _arr(arrangement: Arrangement | None) -> Arrangement:
    assert arrangement is not None
    return arrangement


_METRICS: dict[str, Metric] = {}


def register(metric: Metric) -> Metric:
    if metric.name in _METRICS:
        raise ValueError(f"Metric '{metric.name}' is already registered")
    _METRICS[metric.name] = metric
    return metric


for _metric in (
    Metric("n", lambda t, a: t.n, description="number of words"),
    Metric("D", lambda t, a: sum_edge_lengths(t, _arr(a)), order_dependent=True,
           description="sum of dependency distances"),
    Metric("C", lambda t, a: num_crossings(t, _arr(a)), order_dependent=True,
           description="number of edge crossings"),
    Metric("Q", lambda t, a: num_independent_edge_pairs(t),
           description="pairs of independent edges"),
    Metric("D_min_projective", lambda t, a: min_D_projective(_rooted(t)).value, needs_root=True,
           description="minimum D over projective orders"),
    Metric("D_min_planar", lambda t, a: min_D_planar(t).value,
           description="minimum D over planar orders"),
    Metric("D_min_unconstrained", lambda t, a: min_D_unconstrained(t).value, default=False,
           description="minimum D over all orders"),
    Metric("ED_unconstrained", lambda t, a: expected_D_unconstrained(t),
           description="expected D over random orders"),
    Metric("EC_unconstrained", lambda t, a: expected_C_unconstrained(t),
           description="expected C over random orders"),
    Metric("mean_D", lambda t, a: mean_dependency_distance(t, _arr(a)), order_dependent=True,
           description="mean dependency distance"),
    Metric("head_initial_ratio", lambda t, a: head_initial_ratio(_rooted(t), _arr(a)),
           order_dependent=True, needs_root=True,
           description="share of heads preceding their dependents"),
    Metric("MHD", lambda t, a: mean_hierarchical_distance(_rooted(t)), needs_root=True,
           description="mean hierarchical distance"),
    Metric("k2", lambda t, a: degree_moment(t, 2), description="second moment of degree"),
    Metric("k2_out", lambda t, a: degree_moment(t, 2, DegreeKind.OUT), needs_root=True,
           description="second moment of out-degree"),
    Metric("hubiness", lambda t, a: hubiness(t), description="hubiness coefficient"),
    Metric("flux_max_size", lambda t, a: flux(t, _arr(a)).max_size(), order_dependent=True,
           description="largest flux size"),
    Metric("flux_mean_size", lambda t, a: flux(t, _arr(a)).mean_size(), order_dependent=True,
           description="mean flux size"),
    Metric("flux_max_weight", lambda t, a: flux(t, _arr(a)).max_weight(), order_dependent=True,
           description="largest flux weight"),
    Metric("flux_mean_weight", lambda t, a: flux(t, _arr(a)).mean_weight(), order_dependent=True,
           description="mean flux weight"),
    Metric("projective", lambda t, a: classify_arrangement(_rooted(t), _arr(a)).projective,
           order_dependent=True, needs_root=True, description="arrangement is projective"),
    Metric("planar", lambda t, a: is_planar(t, _arr(a)), order_dependent=True,
           description="arrangement has no crossings"),
    Metric("one_endpoint_crossing", lambda t, a: is_one_endpoint_crossing(t, _arr(a)),
           order_dependent=True, description="arrangement is 1-endpoint-crossing"),
    Metric("root_covered", lambda t, a: is_root_covered(_rooted(t), _arr(a)),
           order_dependent=True, needs_root=True, description="some edge spans the root"),
    Metric("diameter", lambda t, a: diameter(t), description="longest path in edges"),
    Metric("num_leaves", lambda t, a: num_leaves(t), description="vertices of degree one"),
):
    register(_metric)


def metric_names() -> list[str]:
    return list(_METRICS)


def default_feature_names() -> list[str]:
    return [name for name, metric in _METRICS.items() if metric.default]


def get_metric(name: str) -> Metric:
    try:
        return _METRICS[name]
    except KeyError:
        raise UnknownMetricError(name, metric_names()) from None


@dataclass(frozen=True)
class FeatureSpec:
    """Ordered, duplicate-free feature names; ``n`` always comes first."""

    names: tuple[str, ...]

    @classmethod
    def from_names(cls, names: Iterable[str] | None = None) -> "FeatureSpec":
        requested = list(names) if names else default_feature_names()
        ordered = ["n"]
        for name in requested:
            get_metric(name)
            if name not in ordered:
                ordered.append(name)
        return cls(tuple(ordered))

    @classmethod
    def parse(cls, text: str) -> "FeatureSpec":
        return cls.from_names(n.strip() for n in text.split(",") if n.strip())

    def header(self) -> list[str]:
        return ["sentence_id", *self.names]

    def compute(
        self, tree: RootedTree, arrangement: Arrangement | None = None
    ) -> list[Value | None]:
        """Feature values in column order; undefined values are None."""
        values: list[Value | None] = []
        for name in self.names:
            try:
                values.append(get_metric(name)(tree, arrangement))
            except (NoEdgesError, TooSmallError):
                values.append(None)
        return values


def render_value(value: Value | None, exact: bool = False, digits: int = 6) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if value.denominator == 1:
        return str(value.numerator)
    if exact:
        return f"{value.numerator}/{value.denominator}"
    return f"{float(value):.{digits}f}"
