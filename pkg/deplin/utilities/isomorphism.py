"""Tree isomorphism through AHU canonical codes.

Codes are strings over ``1`` and ``0``: a single vertex is ``10`` and any
other vertex is ``1`` followed by its children's codes in increasing string
order, then ``0``. Free trees are rooted at their centre; with two central
vertices the smaller of the two codes is taken.
"""
from enum import Enum

from deplin.graphs import FreeTree, RootedTree, root_at
from deplin.properties.centre import centre

CanonicalCode = str


class IsomorphismMode(Enum):
    ROOTED = "rooted"
    FREE = "free"


def canonical_code(tree: RootedTree) -> CanonicalCode:
    codes: list[str] = [""] * (tree.n + 1)
    for v in reversed(list(tree.preorder())):
        codes[v] = "1" + "".join(sorted(codes[c] for c in tree.children(v))) + "0"
    return codes[tree.root]


def free_canonical_code(tree: FreeTree | RootedTree) -> CanonicalCode:
    free = tree.free if isinstance(tree, RootedTree) else tree
    return min(canonical_code(root_at(free, c)) for c in centre(free).vertices)


def are_isomorphic(
    a: FreeTree | RootedTree,
    b: FreeTree | RootedTree,
    mode: IsomorphismMode = IsomorphismMode.FREE,
) -> bool:
    if a.n != b.n:
        return False
    if mode is IsomorphismMode.ROOTED:
        if not isinstance(a, RootedTree) or not isinstance(b, RootedTree):
            raise TypeError("Rooted isomorphism needs two rooted trees")
        return canonical_code(a) == canonical_code(b)
    if sorted(_free(a).degrees) != sorted(_free(b).degrees):
        return False
    return free_canonical_code(a) == free_canonical_code(b)


def _free(tree: FreeTree | RootedTree) -> FreeTree:
    return tree.free if isinstance(tree, RootedTree) else tree
