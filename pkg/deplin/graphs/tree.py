"""Free and rooted trees over vertices 1..n."""
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from deplin.exceptions import (
    DuplicateEdgeError,
    NotATreeError,
    SelfLoopError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class FreeTree:
    """Undirected tree on vertices 1..n.

    ``adjacency[v]`` lists the neighbours of ``v`` in increasing order;
    ``adjacency[0]`` is an unused empty slot so vertices index directly.
    Build instances with :meth:`from_edge_list`, which validates.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Sequence[int]]) -> "FreeTree":
        return from_edge_list(n, edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def num_edges(self) -> int:
        return self.n - 1

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in self.vertices for v in self.adjacency[u] if u < v)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def num_leaves(self) -> int:
        if self.n == 1:
            return 0
        return sum(1 for v in self.vertices if self.degree(v) == 1)

    def distances_from(self, source: int) -> list[int]:
        """BFS distances from ``source``; index 0 is unused."""
        dist = [-1] * (self.n + 1)
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def diameter(self) -> int:
        far = self.distances_from(1)
        u = max(self.vertices, key=lambda v: far[v])
        return max(self.distances_from(u)[1:])

    def __str__(self) -> str:
        return " ".join(f"{u}-{v}" for u, v in self.edges)


@dataclass(frozen=True)
class RootedTree:
    """A free tree with a root; every other vertex has a parent (its head).

    ``parent[root]`` is 0 and ``parent[0]`` is unused.
    """

    free: FreeTree
    root: int
    parent: tuple[int, ...]

    @classmethod
    def from_head_vector(cls, heads: "Sequence[int] | str") -> "RootedTree":
        from deplin.graphs.head_vector import HeadVector, from_head_vector

        hv = HeadVector.parse(heads) if isinstance(heads, str) else HeadVector(tuple(heads))
        return from_head_vector(hv)

    @property
    def n(self) -> int:
        return self.free.n

    @property
    def vertices(self) -> range:
        return self.free.vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.free.edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self.free.adjacency

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.free.adjacency[v]

    def degree(self, v: int) -> int:
        return self.free.degree(v)

    @cached_property
    def _children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in range(self.n + 1)]
        for v in self.vertices:
            if v != self.root:
                kids[self.parent[v]].append(v)
        return tuple(tuple(k) for k in kids)

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def out_degree(self, v: int) -> int:
        return len(self._children[v])

    def in_degree(self, v: int) -> int:
        return 0 if v == self.root else 1

    @cached_property
    def arcs(self) -> tuple[Edge, ...]:
        """(head, dependent) pairs ordered by dependent."""
        return tuple((self.parent[v], v) for v in self.vertices if v != self.root)

    def preorder(self) -> Iterator[int]:
        stack = [self.root]
        while stack:
            v = stack.pop()
            yield v
            stack.extend(reversed(self._children[v]))

    @cached_property
    def depths(self) -> tuple[int, ...]:
        depth = [0] * (self.n + 1)
        for v in self.preorder():
            if v != self.root:
                depth[v] = depth[self.parent[v]] + 1
        return tuple(depth)

    @cached_property
    def subtree_sizes(self) -> tuple[int, ...]:
        size = [1] * (self.n + 1)
        size[0] = 0
        for v in reversed(list(self.preorder())):
            if v != self.root:
                size[self.parent[v]] += size[v]
        return tuple(size)

    def head_vector(self) -> tuple[int, ...]:
        return tuple(self.parent[1:])

    def __str__(self) -> str:
        return " ".join(str(h) for h in self.head_vector())


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> FreeTree:
    """Build a free tree from ``n - 1`` undirected edges over 1..n."""
    if n < 1:
        raise NotATreeError(f"A tree needs at least one vertex, got n={n}")
    neighbours: list[set[int]] = [set() for _ in range(n + 1)]
    count = 0
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        for w in (u, v):
            if not 1 <= w <= n:
                raise VertexOutOfRangeError(f"Vertex {w} outside 1..{n}")
        if u == v:
            raise SelfLoopError(f"Self-loop at vertex {u}")
        if v in neighbours[u]:
            raise DuplicateEdgeError(f"Duplicate edge {{{u}, {v}}}")
        neighbours[u].add(v)
        neighbours[v].add(u)
        count += 1
    if count != n - 1:
        raise NotATreeError(f"A tree on {n} vertices has {n - 1} edges, got {count}")

    seen = {1}
    stack = [1]
    while stack:
        u = stack.pop()
        for w in neighbours[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise NotATreeError(f"Edges contain a cycle and leave {n - len(seen)} vertices unreached")

    return FreeTree(n=n, adjacency=tuple(tuple(sorted(a)) for a in neighbours))


def root_at(tree: FreeTree, root: int) -> RootedTree:
    """Orient ``tree`` away from ``root``."""
    if not 1 <= root <= tree.n:
        raise VertexOutOfRangeError(f"Root {root} outside 1..{tree.n}")
    parent = [0] * (tree.n + 1)
    seen = [False] * (tree.n + 1)
    seen[root] = True
    stack = [root]
    while stack:
        u = stack.pop()
        for w in tree.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    return RootedTree(free=tree, root=root, parent=tuple(parent))


def to_free(tree: RootedTree) -> FreeTree:
    return tree.free


def relabel(tree: FreeTree, mapping: Sequence[int]) -> FreeTree:
    """Rename vertex ``v`` to ``mapping[v - 1]``."""
    return from_edge_list(tree.n, [(mapping[u - 1], mapping[v - 1]) for u, v in tree.edges])


def relabel_rooted(tree: RootedTree, mapping: Sequence[int]) -> RootedTree:
    return root_at(relabel(tree.free, mapping), mapping[tree.root - 1])


def path_tree(n: int) -> FreeTree:
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def star_tree(n: int) -> FreeTree:
    return from_edge_list(n, [(1, i) for i in range(2, n + 1)])
