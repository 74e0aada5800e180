"""Inner products, duality pairings, and the duality criterion checker.

Conventions.  An inner product lives on one algebra and vanishes across
degrees; a pairing couples an algebra with its graded dual.  The grafting
algebra pairs trees by symmetry order, and couples to the forest algebra
through rooting: pairing a tree t against a forest u gives the symmetry
order of t when t is u with a new root on top, else zero.  The planar
versions use plain Kronecker deltas, since planar trees are rigid.  On
compositions the pairing is Kronecker, and on the symmetric side the
elementary basis of one argument meets the monomial basis of the other.

check_duality_criterion machine-checks the three hypotheses under which a
degree-preserving linear map psi: A -> B exhibits B as the graded dual of
A: psi preserves inner products, and it exchanges product against
coproduct in both directions.
"""

from dataclasses import dataclass

from .foundations import LinComb
from .trees import Forest, OrderedForest, PlanarTree, RootedTree, sym_order
from .symfun import m_to_e


def _bilinear(pair_key):
    def pairing(a: LinComb, b: LinComb):
        acc = 0
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                v = pair_key(k1, k2)
                if v:
                    acc = acc + c1 * c2 * v
        return acc

    return pairing


def _ip_kt_key(t: RootedTree, u: RootedTree):
    return sym_order(t) if t == u else 0


def _ip_ck_key(f: Forest, g: Forest):
    # rooting both sides reduces to the tree case
    return sym_order(RootedTree(f.trees)) if f == g else 0


def _pair_kt_ck_key(t: RootedTree, f: Forest):
    return sym_order(t) if t == RootedTree(f.trees) else 0


def _kron(x, y):
    return 1 if x == y else 0


def _pair_kp_hf_key(t: PlanarTree, f: OrderedForest):
    return 1 if t == PlanarTree(f.trees) else 0


ip_kt = _bilinear(_ip_kt_key)
ip_ck = _bilinear(_ip_ck_key)
ip_kp = _bilinear(_kron)
ip_hf = _bilinear(_kron)
ip_qs = _bilinear(_kron)
ip_ns = _bilinear(_kron)
pair_kt_ck = _bilinear(_pair_kt_ck_key)
pair_ns_qs = _bilinear(_kron)
pair_kp_hf = _bilinear(_pair_kp_hf_key)


def ip_sym(a: LinComb, b: LinComb):
    """Inner product with (e_lam, m_mu) = delta: rewrite the left argument
    in the elementary basis and read off matching monomial coefficients."""
    ea = m_to_e(a)
    acc = 0
    for lam, c in ea.items():
        d = b[lam]
        if d:
            acc = acc + c * d
    return acc


def pair_tensor(pairing, s: LinComb, t: LinComb):
    """Componentwise pairing of two tensors: couple lefts with lefts and
    rights with rights, multiply, and sum."""
    acc = 0
    for (a1, a2), c1 in s.items():
        for (b1, b2), c2 in t.items():
            v1 = pairing(LinComb.single(a1), LinComb.single(b1))
            if not v1:
                continue
            v2 = pairing(LinComb.single(a2), LinComb.single(b2))
            if v2:
                acc = acc + c1 * c2 * v1 * v2
    return acc


@dataclass
class CriterionReport:
    ok: bool
    checked: int
    hypothesis: str | None = None
    counterexample: str | None = None

    def __str__(self):
        if self.ok:
            return f"duality criterion holds ({self.checked} checks)"
        return (
            f"duality criterion fails hypothesis ({self.hypothesis}) "
            f"at {self.counterexample} after {self.checked} checks"
        )


def check_duality_criterion(A, ip_A, B, ip_B, psi, max_degree: int) -> CriterionReport:
    """Verify, exhaustively on homogeneous basis triples through max_degree,
    that the degree-preserving linear map psi: A -> B satisfies

      (a) (a1, a2)_A = (psi a1, psi a2)_B
      (b) (a1 a2, a3)_A = (psi a1 (x) psi a2, coproduct(psi a3))_B
      (c) (a1 (x) a2, coproduct(a3))_A = (psi a1 . psi a2, psi a3)_B

    so that B realizes the graded dual of A.  Returns the first
    counterexample on failure.  Hypothesis (a) is checked within each
    degree; inner products vanish across degrees by definition.
    """
    checked = 0
    for n in range(max_degree + 1):
        keys = A.basis(n)
        singles = [LinComb.single(k) for k in keys]
        images = [psi(x) for x in singles]
        for i, x in enumerate(singles):
            for j in range(i, len(singles)):
                checked += 1
                if ip_A(x, singles[j]) != ip_B(images[i], images[j]):
                    return CriterionReport(
                        False, checked, "a",
                        f"degree {n}: {A.format(x)} , {A.format(singles[j])}",
                    )
    for n in range(max_degree + 1):
        triples_a3 = [(k, LinComb.single(k)) for k in A.basis(n)]
        psi_a3 = {k: psi(x) for k, x in triples_a3}
        cop_a3 = {k: A.coproduct(x) for k, x in triples_a3}
        cop_psi_a3 = {k: B.coproduct(psi_a3[k]) for k, _ in triples_a3}
        for i in range(n + 1):
            for k1 in A.basis(i):
                a1 = LinComb.single(k1)
                p1 = psi(a1)
                for k2 in A.basis(n - i):
                    a2 = LinComb.single(k2)
                    p2 = psi(a2)
                    prod_A = A.product(a1, a2)
                    prod_B = B.product(p1, p2)
                    left_tensor = LinComb.tensor(p1, p2)
                    a_tensor = LinComb.tensor(a1, a2)
                    for k3, a3 in triples_a3:
                        checked += 2
                        if ip_A(prod_A, a3) != pair_tensor(ip_B, left_tensor, cop_psi_a3[k3]):
                            return CriterionReport(
                                False, checked, "b",
                                f"{A.key_str(k1)} , {A.key_str(k2)} , {A.key_str(k3)}",
                            )
                        if pair_tensor(ip_A, a_tensor, cop_a3[k3]) != ip_B(prod_B, psi_a3[k3]):
                            return CriterionReport(
                                False, checked, "c",
                                f"{A.key_str(k1)} , {A.key_str(k2)} , {A.key_str(k3)}",
                            )
    return CriterionReport(True, checked)
