import subprocess
import sys
from math import comb, factorial

import pytest

from matroid_kl import _backend
from matroid_kl.character_oracle import character, oracle_multiplicity, oracle_product
from matroid_kl.errors import InvalidArgument
from matroid_kl.exact_poly import QPoly, gaussian_binomial
from matroid_kl.partitions import Partition, dim_symmetric, dim_unipotent, partitions_of
from matroid_kl.rep_ring import (
    V,
    VirtualRep,
    induce_product,
    lr_coefficient,
    product_expansion,
    rep_dim,
    rep_qdim,
)


def pairs(limit):
    for n in range(limit + 1):
        for k in range(n + 1):
            for mu in partitions_of(k):
                for nu in partitions_of(n - k):
                    yield n, k, mu, nu


# -- the oracle itself -------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_character_table_orthogonality(n):
    from matroid_kl.character_oracle import _class_table

    classes = _class_table(n)
    parts = partitions_of(n)
    for a in parts:
        for b in parts:
            s = sum(size * character(a, ct) * character(b, ct) for ct, _, size in classes)
            assert s == (factorial(n) if a == b else 0)
    for lam in parts:
        assert character(lam, (1,) * n) == dim_symmetric(lam)


# -- LR coefficients ----------------------------------------------------

@pytest.mark.parametrize(
    "lam,mu,nu",
    [((2,), (1,), (1,)), ((1, 1), (1,), (1,)), ((2, 2), (2, 1), (1,))],
)
def test_lr_examples_confirmed_by_oracle(lam, mu, nu):
    expected = oracle_multiplicity(lam, mu, nu)
    assert expected == 1
    assert lr_coefficient(lam, mu, nu) == expected


def test_lr_known_value():
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == oracle_multiplicity((3, 2, 1), (2, 1), (2, 1)) == 2


def test_lr_weight_mismatch():
    with pytest.raises(InvalidArgument):
        lr_coefficient((3,), (1,), (1,))


def test_lr_matches_oracle_up_to_weight_6():
    for n, k, mu, nu in pairs(6):
        assert dict(product_expansion(mu, nu)) == oracle_product(mu, nu), (mu, nu)


def test_lr_symmetry():
    for n, k, mu, nu in pairs(8):
        for lam in partitions_of(n):
            assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)


@pytest.mark.skipif(_backend.count_lr_compiled is None, reason="compiled kernel not built")
def test_kernels_agree():
    for n, k, mu, nu in pairs(9):
        for lam in partitions_of(n):
            args = (tuple(lam), tuple(mu), tuple(nu))
            assert _backend.count_lr_python(*args) == _backend.count_lr_compiled(*args)


def test_python_kernel_selected_by_env():
    out = subprocess.run(
        [sys.executable, "-c", "import matroid_kl; print(matroid_kl.BACKEND)"],
        env={"MATROID_KL_PURE": "1", "PATH": ""},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


# -- induction product --------------------------------------------------

def test_induce_examples():
    assert induce_product(V(1), V(1)) == V(2) + V(1, 1)
    assert induce_product(V(2), V(1)) == V(3) + V(2, 1)
    assert induce_product(VirtualRep.zero(2), V(2, 1)) == VirtualRep.zero(5)


def test_virtual_signs_multiply_through():
    a = V(2) - V(1, 1)
    assert induce_product(a, V(1)) == V(3) - V(1, 1, 1)


def test_dimension_identities():
    for n, k, mu, nu in pairs(10):
        prod = induce_product(VirtualRep.irreducible(mu), VirtualRep.irreducible(nu))
        assert rep_dim(prod) == comb(n, k) * dim_symmetric(mu) * dim_symmetric(nu)
        if n <= 8:
            assert rep_qdim(prod) == gaussian_binomial(n, k) * dim_unipotent(mu) * dim_unipotent(nu)


def test_associativity_and_unit():
    unit = VirtualRep.irreducible([])
    for n in range(8):
        for a in range(n + 1):
            for b in range(n - a + 1):
                for la in partitions_of(a):
                    A = VirtualRep.irreducible(la)
                    assert induce_product(unit, A) == A
                    for lb in partitions_of(b):
                        B = VirtualRep.irreducible(lb)
                        AB = induce_product(A, B)
                        for lc in partitions_of(n - a - b):
                            C = VirtualRep.irreducible(lc)
                            assert induce_product(AB, C) == induce_product(A, induce_product(B, C))


# -- dimensions and the container ---------------------------------------

def test_rep_dims():
    q = QPoly.monomial(1)
    assert rep_dim(V(5)) == 1 and rep_qdim(V(5)) == QPoly([1])
    assert rep_dim(V(2, 2)) == 2 and rep_qdim(V(2, 2)) == q**2 + q**4
    assert rep_dim(V(3) - V(2, 1)) == -1


def test_virtual_rep_invariants():
    r = V(3) + V(2, 1) - V(3)
    assert r.terms == {Partition([2, 1]): 1}
    assert not (V(3) - V(3))
    with pytest.raises(InvalidArgument):
        VirtualRep(3, {Partition([2]): 1})
    with pytest.raises(InvalidArgument):
        V(3) + V(2)


def test_virtual_rep_json():
    r = 3 * V(3, 1) - V(2, 2)
    data = r.to_json()
    assert data == {
        "n": 4,
        "terms": [{"partition": [2, 2], "mult": "-1"}, {"partition": [3, 1], "mult": "3"}],
    }
    assert VirtualRep.from_json(data) == r
