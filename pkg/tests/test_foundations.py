"""Linear-combination container and integer-combinatorics helpers."""

import math
import random
from fractions import Fraction

from treehopf.foundations import (
    LinComb,
    compositions_of,
    partitions_of,
    pi_forget,
    rearrangements,
)


def test_lincomb_zero_pruning():
    a = LinComb.single("x") - LinComb.single("x")
    assert not a
    assert len(a) == 0
    assert a == LinComb.zero()
    assert a["x"] == 0


def test_lincomb_arithmetic():
    a = LinComb.single("x", 2) + LinComb.single("y", -1)
    b = LinComb.single("x", Fraction(1, 2))
    c = a + b
    assert c["x"] == Fraction(5, 2)
    assert c["y"] == -1
    assert (3 * b)["x"] == Fraction(3, 2)
    assert (b * 3)["x"] == Fraction(3, 2)
    assert (0 * a) == LinComb.zero()
    assert (-a)["y"] == 1
    assert (a - a) == LinComb.zero()


def test_lincomb_random_vector_axioms():
    rng = random.Random(4021)
    keys = "abcde"
    for _ in range(50):
        def rand():
            return sum(
                (LinComb.single(k, Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
                 for k in keys),
                LinComb.zero(),
            )
        u, v, w = rand(), rand(), rand()
        s = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        assert (u + v) + w == u + (v + w)
        assert u + v == v + u
        assert s * (u + v) == s * u + s * v
        assert u + LinComb.zero() == u


def test_lincomb_apply_linear():
    # send x to 2y + z, y to zero
    def img(key):
        if key == "x":
            return LinComb.single("y", 2) + LinComb.single("z")
        return LinComb.zero()

    a = LinComb.single("x", 3) + LinComb.single("y", 7)
    out = a.apply_linear(img)
    assert out == LinComb.single("y", 6) + LinComb.single("z", 3)


def test_lincomb_map_filter_tensor():
    a = LinComb.single("x") + LinComb.single("yy", 2)
    assert a.map_keys(len) == LinComb.single(1) + LinComb.single(2, 2)
    assert a.filter_keys(lambda k: k == "x") == LinComb.single("x")
    t = LinComb.tensor(LinComb.single("a", 2), LinComb.single("b", 3))
    assert t == LinComb.single(("a", "b"), 6)


def test_compositions_count_and_content():
    # 2^(n-1) compositions of n
    for n in range(1, 9):
        comps = compositions_of(n)
        assert len(comps) == 2 ** (n - 1)
        assert len(set(comps)) == len(comps)
        assert all(sum(c) == n and all(p >= 1 for p in c) for c in comps)
    assert compositions_of(0) == ((),)
    assert set(compositions_of(3)) == {(3,), (2, 1), (1, 2), (1, 1, 1)}


def test_partitions_count():
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, want in enumerate(expected):
        parts = partitions_of(n)
        assert len(parts) == want
        assert all(tuple(sorted(p, reverse=True)) == p for p in parts)
        assert all(sum(p) == n for p in parts)


def test_pi_forget():
    assert pi_forget((1, 3, 1, 2)) == (3, 2, 1, 1)
    assert pi_forget(()) == ()


def test_rearrangements_multinomial():
    # count of distinct orderings of a partition is the multinomial
    for part in [(2, 1), (1, 1, 1), (3, 2, 2, 1), (4,), (2, 2, 1, 1)]:
        seen = rearrangements(part)
        mult = {}
        for x in part:
            mult[x] = mult.get(x, 0) + 1
        want = math.factorial(len(part))
        for c in mult.values():
            want //= math.factorial(c)
        assert len(seen) == want
        assert len(set(seen)) == len(seen)
        assert all(pi_forget(c) == tuple(sorted(part, reverse=True)) for c in seen)
