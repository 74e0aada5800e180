"""The two Hopf algebras on unordered rooted trees.

KT (basis: rooted trees, degree = vertices - 1) carries the grafting
product: t ∘ t' sums, over all ways to send each child subtree of t's root
to a vertex of t', the tree obtained by grafting them there.  Its coproduct
splits the root's child subtrees into two subsets.  It is cocommutative and
the single vertex is the two-sided unit.

HK (basis: forests, degree = total vertices) is the polynomial algebra on
trees under disjoint union.  Its coproduct is defined on a tree t by

    Δ(t) = t ⊗ 1 + (id ⊗ b_plus) Δ(b_minus(t))

and extended multiplicatively to forests.  The two algebras are graded duals
of each other under the pairing in ``pairings``.

Also here: the degree-n tree sums weighted by inverse symmetry order
(``kappa``), the divided-power sequence obtained from them by the defining
alternating recursion (``epsilon``), the projection onto trees whose root
has a single child, and the root-removal operators in their various linear
extensions.
"""

from fractions import Fraction
from itertools import product as iter_product

from .foundations import LinComb
from .hopf import HopfAlgebra, tensor_mult
from .trees import (
    EMPTY_FOREST,
    Forest,
    LEAF,
    RootedTree,
    enumerate_rooted,
    forests_of_degree,
    ladder,
    sym_order,
)


def _graft(node, extra, idx):
    """Rebuild ``node`` with extra subtrees attached at preorder indices."""
    my = idx
    idx += 1
    kids = []
    for child in node.children:
        sub, idx = _graft(child, extra, idx)
        kids.append(sub)
    more = extra.get(my)
    if more:
        kids.extend(more)
    return RootedTree(kids), idx


class GraftingAlgebra(HopfAlgebra):
    """Rooted-tree Hopf algebra with the vertex-attachment product."""

    name = "kt"

    def unit_key(self):
        return LEAF

    def degree(self, t):
        return t.size - 1

    def basis(self, n):
        return enumerate_rooted(n + 1)

    def key_str(self, t):
        return t.encoding

    def key_sort(self, t):
        return (t.size, t.encoding)

    def product_keys(self, t, tp):
        """Sum over all |tp|^n attachments of t's root subtrees into tp."""
        subs = t.children
        m = tp.size
        acc = {}
        for assignment in iter_product(range(m), repeat=len(subs)):
            extra = {}
            for sub, v in zip(subs, assignment):
                extra.setdefault(v, []).append(sub)
            grafted, _ = _graft(tp, extra, 0)
            acc[grafted] = acc.get(grafted, 0) + 1
        return LinComb(acc)

    def coproduct_key(self, t):
        """Split the root's child subtrees over all 2^k two-colorings."""
        kids = t.children
        k = len(kids)
        acc = {}
        for mask in range(1 << k):
            left = [kids[i] for i in range(k) if mask >> i & 1]
            right = [kids[i] for i in range(k) if not mask >> i & 1]
            pair = (RootedTree(left), RootedTree(right))
            acc[pair] = acc.get(pair, 0) + 1
        return LinComb(acc)


class ForestAlgebra(HopfAlgebra):
    """Polynomial Hopf algebra on rooted trees (product: forest union)."""

    name = "ck"

    def __init__(self):
        super().__init__()
        self._tree_cop_memo = {}

    def unit_key(self):
        return EMPTY_FOREST

    def degree(self, f):
        return f.degree

    def basis(self, n):
        return forests_of_degree(n)

    def key_str(self, f):
        if not f.trees:
            return "1"
        return " ".join(t.encoding for t in f.trees)

    def key_sort(self, f):
        return f.sort_key

    def product_keys(self, f, g):
        return LinComb.single(Forest(f.trees + g.trees))

    def coproduct_key(self, f):
        out = LinComb.single((EMPTY_FOREST, EMPTY_FOREST))
        for t in f.trees:
            out = tensor_mult(self, out, self._tree_coproduct(t))
        return out

    def _tree_coproduct(self, t):
        cached = self._tree_cop_memo.get(t)
        if cached is not None:
            return cached
        # recurse on the strictly smaller forest of root-child subtrees
        inner = self.coproduct_key(Forest(t.children))
        acc = {(Forest((t,)), EMPTY_FOREST): 1}
        for (u, v), c in inner.items():
            pair = (u, Forest((RootedTree(v.trees),)))
            acc[pair] = acc.get(pair, 0) + c
        out = LinComb(acc)
        self._tree_cop_memo[t] = out
        return out


KT = GraftingAlgebra()
HK = ForestAlgebra()


_KAPPA: dict[int, LinComb] = {}
_EPSILON: dict[int, LinComb] = {}


def kappa(n: int) -> LinComb:
    """Sum of all degree-n trees, each weighted by 1/sym_order."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return KT.one()
    cached = _KAPPA.get(n)
    if cached is None:
        cached = LinComb(
            (t, Fraction(1, sym_order(t))) for t in enumerate_rooted(n + 1)
        )
        _KAPPA[n] = cached
    return cached


def epsilon(n: int) -> LinComb:
    """Divided-power sequence: alternating convolution inverse of kappa.

    epsilon(n) = kappa(1)∘epsilon(n-1) - kappa(2)∘epsilon(n-2) + ...
    ± kappa(n), with epsilon(0) the unit.  Equals 1/n! times the corolla
    with n leaf children.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return KT.one()
    cached = _EPSILON.get(n)
    if cached is None:
        acc = LinComb.zero()
        sign = 1
        for i in range(1, n + 1):
            acc += sign * KT.product(kappa(i), epsilon(n - i))
            sign = -sign
        _EPSILON[n] = cached = acc
    return cached


def primitive_projection(a: LinComb) -> LinComb:
    """Keep only the trees whose root has exactly one child."""
    return a.filter_keys(lambda t: len(t.children) == 1)


def strip_primitive_root(a: LinComb) -> LinComb:
    """Root removal on the grafting algebra: a tree whose root has exactly
    one child maps to that child subtree; every other tree maps to zero."""
    data = {}
    for t, c in a.items():
        if len(t.children) == 1:
            child = t.children[0]
            data[child] = data.get(child, 0) + c
    return LinComb(data)


def tree_b_plus(a: LinComb) -> LinComb:
    """Linear extension of t -> b_plus({t}) inside the grafting algebra."""
    return a.map_keys(lambda t: RootedTree((t,)))


def forest_b_plus(a: LinComb) -> LinComb:
    """Degree-preserving isomorphism from forests onto trees: f -> b_plus(f)."""
    return a.map_keys(lambda f: RootedTree(f.trees))


def tree_children_forest(a: LinComb) -> LinComb:
    """Inverse of forest_b_plus: t -> the forest of t's root subtrees."""
    return a.map_keys(lambda t: Forest(t.children))


def ck_b_plus(a: LinComb) -> LinComb:
    """b_plus as a map of the forest algebra into itself (forest to the
    one-tree forest on its grafting)."""
    return a.map_keys(lambda f: Forest((RootedTree(f.trees),)))


def ck_b_minus(a: LinComb) -> LinComb:
    """Root removal extended to forests as a derivation: replace one member
    tree at a time by the forest of its root subtrees."""
    data = {}
    for f, c in a.items():
        ts = f.trees
        for i, t in enumerate(ts):
            g = Forest(ts[:i] + t.children + ts[i + 1 :])
            cur = data.get(g, 0) + c
            if cur:
                data[g] = cur
            else:
                data.pop(g, None)
    return LinComb(data)


def corolla(n: int) -> RootedTree:
    """The tree whose root has n leaf children (n = 0 gives the vertex)."""
    return RootedTree([ladder(1)] * n)
