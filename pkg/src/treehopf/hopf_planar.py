"""The two Hopf algebras on planar rooted trees.

KP (basis: planar trees, degree = vertices - 1) carries the ordered grafting
product.  A tree with m vertices exposes 2m - 1 attachment points, listed in
the natural recursive order: for a vertex v with children u_1..u_c the order
is gap_0(v), points(u_1), gap_1(v), points(u_2), ..., points(u_c), gap_c(v).
The product T ∘ T' assigns T's root subtrees T_1..T_n, in order, to a weakly
increasing sequence of attachment points of T'; subtrees sharing a point are
inserted adjacently in their original order.  That yields binomial(2m+n-2, n)
terms counted with multiplicity.  The coproduct cuts the ordered forest of
root subtrees at each of the n + 1 positions.

HF (basis: ordered forests, degree = total vertices) is the free associative
algebra on planar trees under concatenation, with the coproduct defined by
the same root-recursion as the unordered forest algebra.  KP and HF are
graded duals under the Kronecker pairing (planar trees are rigid).
"""

from itertools import combinations_with_replacement

from .foundations import LinComb
from .hopf import HopfAlgebra, tensor_mult
from .trees import (
    EMPTY_ORDERED_FOREST,
    OrderedForest,
    PLANAR_LEAF,
    PlanarTree,
    enumerate_planar,
    ordered_forests_of_degree,
)


def attachment_points(t: PlanarTree) -> list[tuple[int, int]]:
    """The 2m - 1 attachment points of a planar tree, in natural order.

    Each point is (preorder index of a vertex, gap position among its
    children); gap g sits just before the g-th child, with the final gap
    after the last child.
    """
    out = []

    def walk(node, idx):
        my = idx
        idx += 1
        out.append((my, 0))
        for g, child in enumerate(node.children):
            idx = walk(child, idx)
            out.append((my, g + 1))
        return idx

    walk(t, 0)
    return out


def _graft_planar(node, extra, idx):
    my = idx
    idx += 1
    kids = []
    for g, child in enumerate(node.children):
        more = extra.get((my, g))
        if more:
            kids.extend(more)
        sub, idx = _graft_planar(child, extra, idx)
        kids.append(sub)
    more = extra.get((my, len(node.children)))
    if more:
        kids.extend(more)
    return PlanarTree(kids), idx


class PlanarGraftingAlgebra(HopfAlgebra):
    """Planar-tree Hopf algebra with the ordered attachment product."""

    name = "kp"

    def unit_key(self):
        return PLANAR_LEAF

    def degree(self, t):
        return t.size - 1

    def basis(self, n):
        return enumerate_planar(n + 1)

    def key_str(self, t):
        return "p" + t.encoding

    def key_sort(self, t):
        return (t.size, t.encoding)

    def product_keys(self, t, tp):
        subs = t.children
        points = attachment_points(tp)
        acc = {}
        for choice in combinations_with_replacement(range(len(points)), len(subs)):
            extra = {}
            for sub, pi in zip(subs, choice):
                extra.setdefault(points[pi], []).append(sub)
            grafted, _ = _graft_planar(tp, extra, 0)
            acc[grafted] = acc.get(grafted, 0) + 1
        return LinComb(acc)

    def coproduct_key(self, t):
        kids = t.children
        acc = {}
        for cut in range(len(kids) + 1):
            pair = (PlanarTree(kids[:cut]), PlanarTree(kids[cut:]))
            acc[pair] = acc.get(pair, 0) + 1
        return LinComb(acc)


class OrderedForestAlgebra(HopfAlgebra):
    """Free associative Hopf algebra on planar trees (concatenation)."""

    name = "hf"

    def __init__(self):
        super().__init__()
        self._tree_cop_memo = {}

    def unit_key(self):
        return EMPTY_ORDERED_FOREST

    def degree(self, f):
        return f.degree

    def basis(self, n):
        return ordered_forests_of_degree(n)

    def key_str(self, f):
        if not f.trees:
            return "1"
        return "(%s)" % ",".join(t.encoding for t in f.trees)

    def key_sort(self, f):
        return f.sort_key

    def product_keys(self, f, g):
        return LinComb.single(OrderedForest(f.trees + g.trees))

    def coproduct_key(self, f):
        out = LinComb.single((EMPTY_ORDERED_FOREST, EMPTY_ORDERED_FOREST))
        for t in f.trees:
            out = tensor_mult(self, out, self._tree_coproduct(t))
        return out

    def _tree_coproduct(self, t):
        cached = self._tree_cop_memo.get(t)
        if cached is not None:
            return cached
        inner = self.coproduct_key(OrderedForest(t.children))
        acc = {(OrderedForest((t,)), EMPTY_ORDERED_FOREST): 1}
        for (u, v), c in inner.items():
            pair = (u, OrderedForest((PlanarTree(v.trees),)))
            acc[pair] = acc.get(pair, 0) + c
        out = LinComb(acc)
        self._tree_cop_memo[t] = out
        return out


KP = PlanarGraftingAlgebra()
HF = OrderedForestAlgebra()


def ordered_forest_b_plus(a: LinComb) -> LinComb:
    """Degree-preserving isomorphism from ordered forests onto planar trees."""
    return a.map_keys(lambda f: PlanarTree(f.trees))


def planar_tree_children(a: LinComb) -> LinComb:
    """Inverse of ordered_forest_b_plus."""
    return a.map_keys(lambda t: OrderedForest(t.children))
