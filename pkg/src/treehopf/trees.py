"""Rooted trees, planar rooted trees, forests, and their enumeration.

Encoding: ``[]`` is a single vertex, ``[c1c2...ck]`` is a root whose child
subtrees have encodings c1..ck.  A rooted (unordered) tree stores its
children sorted by (size, encoding), so isomorphic trees get identical
encodings and encoding equality is isomorphism.  A planar tree keeps its
children exactly in written order.

Forests are multisets of rooted trees (stored sorted); ordered forests are
sequences of planar trees.  ``b_plus`` grafts the members of a forest onto a
new common root and ``b_minus`` removes the root again; the two are inverse
bijections between forests with n vertices and trees with n + 1.
"""

from functools import lru_cache
from itertools import groupby, permutations, product
from math import factorial


def _tree_key(t):
    return (t.size, t.encoding)


class RootedTree:
    """Unordered rooted tree in canonical form.

    The constructor accepts children in any order and sorts them, so every
    way of building an isomorphic tree produces the same object value.
    """

    __slots__ = ("children", "encoding", "size", "_hash")

    def __init__(self, children=()):
        kids = sorted(children, key=_tree_key)
        self.children = tuple(kids)
        self.encoding = "[%s]" % "".join(c.encoding for c in kids)
        self.size = 1 + sum(c.size for c in kids)
        self._hash = hash(self.encoding)

    @property
    def sort_key(self):
        return (self.size, self.encoding)

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.encoding == other.encoding

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"RootedTree({self.encoding!r})"


class PlanarTree:
    """Rooted tree whose children are ordered; written order is meaning."""

    __slots__ = ("children", "encoding", "size", "_hash")

    def __init__(self, children=()):
        self.children = tuple(children)
        self.encoding = "[%s]" % "".join(c.encoding for c in self.children)
        self.size = 1 + sum(c.size for c in self.children)
        self._hash = hash(("p", self.encoding))

    @property
    def sort_key(self):
        return (self.size, self.encoding)

    def __eq__(self, other):
        return isinstance(other, PlanarTree) and self.encoding == other.encoding

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PlanarTree({self.encoding!r})"


LEAF = RootedTree()
PLANAR_LEAF = PlanarTree()


class Forest:
    """Multiset of rooted trees, stored sorted by the canonical tree order."""

    __slots__ = ("trees", "degree", "_hash")

    def __init__(self, trees=()):
        ts = tuple(sorted(trees, key=_tree_key))
        self.trees = ts
        self.degree = sum(t.size for t in ts)
        self._hash = hash(tuple(t.encoding for t in ts))

    @property
    def sort_key(self):
        return (self.degree, tuple(t.sort_key for t in self.trees))

    def __eq__(self, other):
        return isinstance(other, Forest) and self.trees == other.trees

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Forest(%s)" % " ".join(t.encoding for t in self.trees)


class OrderedForest:
    """Sequence of planar trees; order carries meaning."""

    __slots__ = ("trees", "degree", "_hash")

    def __init__(self, trees=()):
        self.trees = tuple(trees)
        self.degree = sum(t.size for t in self.trees)
        self._hash = hash(("of",) + tuple(t.encoding for t in self.trees))

    @property
    def sort_key(self):
        return (self.degree, tuple(t.sort_key for t in self.trees))

    def __eq__(self, other):
        return isinstance(other, OrderedForest) and self.trees == other.trees

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "OrderedForest(%s)" % ",".join(t.encoding for t in self.trees)


EMPTY_FOREST = Forest()
EMPTY_ORDERED_FOREST = OrderedForest()


def b_plus(forest: Forest) -> RootedTree:
    """Graft all members of a forest onto a fresh common root."""
    return RootedTree(forest.trees)


def b_minus(tree: RootedTree) -> Forest:
    """Delete the root, leaving the forest of its child subtrees."""
    return Forest(tree.children)


def b_plus_planar(forest: OrderedForest) -> PlanarTree:
    return PlanarTree(forest.trees)


def b_minus_planar(tree: PlanarTree) -> OrderedForest:
    return OrderedForest(tree.children)


_SYM_ORDER: dict[RootedTree, int] = {}


def sym_order(t: RootedTree) -> int:
    """Order of the automorphism group of a rooted tree.

    Product over vertices of prod_i m_i! where the m_i are the multiplicities
    of the isomorphism classes among the vertex's child subtrees.
    """
    cached = _SYM_ORDER.get(t)
    if cached is not None:
        return cached
    order = 1
    for _, grp in groupby(t.children):
        block = list(grp)
        order *= factorial(len(block)) * sym_order(block[0]) ** len(block)
    _SYM_ORDER[t] = order
    return order


@lru_cache(maxsize=None)
def enumerate_rooted(n: int) -> tuple[RootedTree, ...]:
    """All rooted trees with n vertices, in canonical (size, encoding) order."""
    if n < 1:
        raise ValueError("a tree has at least one vertex")
    if n == 1:
        return (LEAF,)
    return tuple(
        sorted((RootedTree(ts) for ts in _tree_multisets(n - 1)), key=_tree_key)
    )


@lru_cache(maxsize=None)
def _tree_multisets(m: int) -> tuple[tuple[RootedTree, ...], ...]:
    """All multisets of rooted trees with m vertices total, each multiset as a
    tuple that is non-decreasing in the canonical order."""
    if m == 0:
        return ((),)
    pool = [t for s in range(1, m + 1) for t in enumerate_rooted(s)]
    out = []

    def grow(remaining, start, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(pool)):
            t = pool[idx]
            if t.size > remaining:
                break  # pool is sorted by size
            acc.append(t)
            grow(remaining - t.size, idx, acc)
            acc.pop()

    grow(m, 0, [])
    return tuple(out)


@lru_cache(maxsize=None)
def forests_of_degree(n: int) -> tuple[Forest, ...]:
    """All forests with n vertices total (n = 0 gives the empty forest)."""
    return tuple(
        sorted((Forest(ts) for ts in _tree_multisets(n)), key=lambda f: f.sort_key)
    )


@lru_cache(maxsize=None)
def enumerate_planar(n: int) -> tuple[PlanarTree, ...]:
    """All planar rooted trees with n vertices (Catalan(n-1) of them)."""
    if n < 1:
        raise ValueError("a tree has at least one vertex")
    if n == 1:
        return (PLANAR_LEAF,)
    return tuple(
        sorted(
            (PlanarTree(seq) for seq in _planar_sequences(n - 1)), key=_tree_key
        )
    )


@lru_cache(maxsize=None)
def _planar_sequences(m: int) -> tuple[tuple[PlanarTree, ...], ...]:
    """All sequences of planar trees with m vertices total."""
    if m == 0:
        return ((),)
    out = []
    for s in range(1, m + 1):
        for t in enumerate_planar(s):
            for rest in _planar_sequences(m - s):
                out.append((t,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def ordered_forests_of_degree(n: int) -> tuple[OrderedForest, ...]:
    return tuple(
        sorted(
            (OrderedForest(seq) for seq in _planar_sequences(n)),
            key=lambda f: f.sort_key,
        )
    )


def forget_order(t: PlanarTree) -> RootedTree:
    """Collapse a planar tree to its underlying rooted tree."""
    return RootedTree(forget_order(c) for c in t.children)


_FIBER: dict[RootedTree, tuple[PlanarTree, ...]] = {}


def planar_fiber(t: RootedTree) -> tuple[PlanarTree, ...]:
    """All distinct planar trees whose underlying rooted tree is t."""
    cached = _FIBER.get(t)
    if cached is not None:
        return cached
    options = {c: planar_fiber(c) for c in set(t.children)}
    results = set()
    for ordering in set(permutations(t.children)):
        for combo in product(*(options[c] for c in ordering)):
            results.add(PlanarTree(combo))
    out = tuple(sorted(results, key=_tree_key))
    _FIBER[t] = out
    return out


def ladder(i: int) -> RootedTree:
    """The chain with i vertices (single vertex for i = 1)."""
    if i < 1:
        raise ValueError("ladder length must be positive")
    t = LEAF
    for _ in range(i - 1):
        t = RootedTree((t,))
    return t


def planar_ladder(i: int) -> PlanarTree:
    if i < 1:
        raise ValueError("ladder length must be positive")
    t = PLANAR_LEAF
    for _ in range(i - 1):
        t = PlanarTree((t,))
    return t


def ladder_forest(parts) -> Forest:
    return Forest(ladder(i) for i in parts)


def planar_ladder_forest(parts) -> OrderedForest:
    return OrderedForest(planar_ladder(i) for i in parts)


def is_ladder(t) -> bool:
    """True when every vertex has at most one child (works for both kinds)."""
    k = t.size
    return t.encoding == "[" * k + "]" * k


def _parse_tree(text: str, pos: int, factory):
    if pos >= len(text) or text[pos] != "[":
        raise ValueError(f"expected '[' at position {pos}")
    pos += 1
    kids = []
    while pos < len(text) and text[pos] == "[":
        child, pos = _parse_tree(text, pos, factory)
        kids.append(child)
    if pos >= len(text) or text[pos] != "]":
        raise ValueError(f"expected ']' at position {pos}")
    return factory(kids), pos + 1


def rooted_from_string(text: str) -> RootedTree:
    """Parse bracket syntax into a rooted tree (auto-canonicalized)."""
    t, end = _parse_tree(text, 0, RootedTree)
    if end != len(text):
        raise ValueError(f"trailing input at position {end}")
    return t


def planar_from_string(text: str) -> PlanarTree:
    """Parse bracket syntax into a planar tree (written order kept)."""
    t, end = _parse_tree(text, 0, PlanarTree)
    if end != len(text):
        raise ValueError(f"trailing input at position {end}")
    return t
