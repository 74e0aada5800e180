"""Shared machinery for graded connected Hopf algebras with a chosen basis.

Each concrete algebra supplies the combinatorics on basis keys (grading,
basis enumeration, product and coproduct of keys, printing); this base class
supplies the linear extensions, the counit, and the antipode.  Because every
algebra here is graded with a one-dimensional degree-0 part, one antipode
recursion serves all of them:

    S(1) = 1,   S(x) = -x - sum S(x') x''

where the sum runs over the middle (both-sides-positive-degree) terms of the
coproduct of x.  Products, coproducts, and antipodes of basis keys are
memoized per algebra instance; entries are only ever written once, so
reusing the singletons across threads is safe in CPython.
"""

from .foundations import LinComb


class HopfAlgebra:
    """Graded connected Hopf algebra presented by a combinatorial basis."""

    name = "?"

    def __init__(self):
        self._prod_memo = {}
        self._cop_memo = {}
        self._antipode_memo = {}

    # combinatorial structure, supplied by subclasses

    def unit_key(self):
        raise NotImplementedError

    def degree(self, key) -> int:
        raise NotImplementedError

    def basis(self, n: int):
        """All basis keys of degree n, in a fixed deterministic order."""
        raise NotImplementedError

    def product_keys(self, k1, k2) -> LinComb:
        raise NotImplementedError

    def coproduct_key(self, key) -> LinComb:
        """Coproduct of a basis key, as a LinComb over ordered key pairs."""
        raise NotImplementedError

    def key_str(self, key) -> str:
        raise NotImplementedError

    def key_sort(self, key):
        """Sort key implementing the global term order (degree first)."""
        raise NotImplementedError

    # linear structure, provided

    def one(self) -> LinComb:
        return LinComb.single(self.unit_key())

    def element(self, key) -> LinComb:
        return LinComb.single(key)

    def basis_upto(self, n: int):
        for d in range(n + 1):
            yield from self.basis(d)

    def _pk(self, k1, k2) -> LinComb:
        memo = self._prod_memo
        out = memo.get((k1, k2))
        if out is None:
            out = self.product_keys(k1, k2)
            memo[(k1, k2)] = out
        return out

    def _ck(self, key) -> LinComb:
        memo = self._cop_memo
        out = memo.get(key)
        if out is None:
            out = self.coproduct_key(key)
            memo[key] = out
        return out

    def product(self, a: LinComb, b: LinComb) -> LinComb:
        data = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                c = c1 * c2
                for key, ck in self._pk(k1, k2).items():
                    cur = data.get(key, 0) + c * ck
                    if cur:
                        data[key] = cur
                    else:
                        data.pop(key, None)
        return LinComb(data)

    def coproduct(self, a: LinComb) -> LinComb:
        return a.apply_linear(self._ck)

    def counit(self, a: LinComb):
        return a[self.unit_key()]

    def antipode_key(self, key) -> LinComb:
        memo = self._antipode_memo
        out = memo.get(key)
        if out is not None:
            return out
        unit = self.unit_key()
        if key == unit:
            out = self.one()
        else:
            acc = LinComb.single(key, -1)
            for (left, right), c in self._ck(key).items():
                if left == unit or right == unit:
                    continue
                acc -= c * self.product(self.antipode_key(left), LinComb.single(right))
            out = acc
        memo[key] = out
        return out

    def antipode(self, a: LinComb) -> LinComb:
        return a.apply_linear(self.antipode_key)

    # printing

    def format(self, a: LinComb) -> str:
        if not a:
            return "0"
        pieces = []
        for key in sorted(a.keys(), key=self.key_sort):
            c = a[key]
            neg = c < 0
            mag = -c if neg else c
            ks = self.key_str(key)
            if ks == "1":
                body = str(mag)
            elif mag == 1:
                body = ks
            else:
                body = f"{mag}*{ks}"
            if not pieces:
                pieces.append("-" + body if neg else body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)

    def tensor_key_str(self, pair) -> str:
        return f"{self.key_str(pair[0])} ⊗ {self.key_str(pair[1])}"

    def tensor_key_sort(self, pair):
        k1, k2 = pair
        return (
            self.degree(k1) + self.degree(k2),
            self.key_sort(k1),
            self.key_sort(k2),
        )

    def format_tensor(self, t: LinComb) -> str:
        if not t:
            return "0"
        pieces = []
        for pair in sorted(t.keys(), key=self.tensor_key_sort):
            c = t[pair]
            neg = c < 0
            mag = -c if neg else c
            ks = self.tensor_key_str(pair)
            body = ks if mag == 1 else f"{mag}*{ks}"
            if not pieces:
                pieces.append("-" + body if neg else body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)


def tensor_map(t: LinComb, left, right) -> LinComb:
    """Apply linear maps componentwise to a tensor: (left ⊗ right)(t).

    ``left`` and ``right`` send a basis key to a LinComb.
    """
    data = {}
    for (k1, k2), c in t.items():
        img1 = left(k1)
        img2 = right(k2)
        for x, cx in img1.items():
            ccx = c * cx
            for y, cy in img2.items():
                pair = (x, y)
                cur = data.get(pair, 0) + ccx * cy
                if cur:
                    data[pair] = cur
                else:
                    data.pop(pair, None)
    return LinComb(data)


def tensor_mult(algebra: HopfAlgebra, t1: LinComb, t2: LinComb) -> LinComb:
    """Componentwise product of two tensors over the same algebra."""
    data = {}
    for (a1, b1), c1 in t1.items():
        for (a2, b2), c2 in t2.items():
            c = c1 * c2
            for x, cx in algebra._pk(a1, a2).items():
                ccx = c * cx
                for y, cy in algebra._pk(b1, b2).items():
                    pair = (x, y)
                    cur = data.get(pair, 0) + ccx * cy
                    if cur:
                        data[pair] = cur
                    else:
                        data.pop(pair, None)
    return LinComb(data)


def swap_tensor(t: LinComb) -> LinComb:
    return LinComb(((k2, k1), c) for (k1, k2), c in t.items())
