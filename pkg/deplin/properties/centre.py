"""Central and centroidal vertices of a free tree."""
from dataclasses import dataclass

from deplin.graphs import FreeTree, RootedTree


@dataclass(frozen=True)
class CentreResult:
    """One vertex, or two adjacent vertices, in increasing order."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.vertices


def _free(tree: FreeTree | RootedTree) -> FreeTree:
    return tree.free if isinstance(tree, RootedTree) else tree


def centre(tree: FreeTree | RootedTree) -> CentreResult:
    """Vertices of minimum eccentricity, found by peeling leaves layer by layer."""
    free = _free(tree)
    if free.n <= 2:
        return CentreResult(tuple(free.vertices))
    degree = list(free.degrees)
    layer = [v for v in free.vertices if degree[v] == 1]
    remaining = free.n
    while remaining > 2:
        remaining -= len(layer)
        next_layer = []
        for leaf in layer:
            for w in free.adjacency[leaf]:
                degree[w] -= 1
                if degree[w] == 1:
                    next_layer.append(w)
        layer = next_layer
    return CentreResult(tuple(sorted(layer)))


def centroid(tree: FreeTree | RootedTree) -> CentreResult:
    """Vertices whose removal leaves components of at most n/2 vertices."""
    free = _free(tree)
    n = free.n
    parent = [0] * (n + 1)
    order = [1]
    seen = [False] * (n + 1)
    seen[1] = True
    for u in order:
        for w in free.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    size = [1] * (n + 1)
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]

    found = []
    for v in free.vertices:
        largest = n - size[v]
        for w in free.adjacency[v]:
            if w != parent[v]:
                largest = max(largest, size[w])
        if 2 * largest <= n:
            found.append(v)
    return CentreResult(tuple(found))
