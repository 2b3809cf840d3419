from dataclasses import dataclass

from deplin.graphs import Arrangement, Edge, RootedTree, Tree, check_sizes


@dataclass(frozen=True)
class ArrangementFlags:
    projective: bool
    planar: bool
    one_endpoint_crossing: bool


def _crossing_lists(tree: Tree, arrangement: Arrangement) -> list[list[Edge]]:
    pos = arrangement.position
    edges = tree.edges
    spans = [(min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in edges]
    crossed: list[list[Edge]] = [[] for _ in edges]
    for i, (a, b) in enumerate(spans):
        for j in range(i + 1, len(edges)):
            c, d = spans[j]
            if a < c < b < d or c < a < d < b:
                crossed[i].append(edges[j])
                crossed[j].append(edges[i])
    return crossed


def _shares_endpoint(crossed: list[list[Edge]]) -> bool:
    for crossing in crossed:
        if crossing:
            common = set(crossing[0])
            for edge in crossing[1:]:
                common &= set(edge)
            if not common:
                return False
    return True


def is_planar(tree: Tree, arrangement: Arrangement) -> bool:
    check_sizes(tree, arrangement)
    return not any(_crossing_lists(tree, arrangement))


def is_one_endpoint_crossing(tree: Tree, arrangement: Arrangement) -> bool:
    """Every edge's crossing edges share a common vertex."""
    check_sizes(tree, arrangement)
    return _shares_endpoint(_crossing_lists(tree, arrangement))


def classify_arrangement(tree: RootedTree, arrangement: Arrangement) -> ArrangementFlags:
    check_sizes(tree, arrangement)
    crossed = _crossing_lists(tree, arrangement)
    planar = not any(crossed)
    pos = arrangement.position
    r = pos[tree.root]
    covered = any(min(pos[u], pos[v]) < r < max(pos[u], pos[v]) for u, v in tree.edges)
    return ArrangementFlags(
        projective=planar and not covered,
        planar=planar,
        one_endpoint_crossing=_shares_endpoint(crossed),
    )


def is_projective(tree: RootedTree, arrangement: Arrangement) -> bool:
    return classify_arrangement(tree, arrangement).projective
