from math import factorial

import pytest

from matroid_kl.ekl_engine import (
    EKLTable,
    ekl_closed_form,
    ekl_q_closed_form,
    ekl_recursive,
    ekl_scalar_closed_form,
    ekl_unipotent,
    num_degrees,
)
from matroid_kl.errors import InvalidArgument
from matroid_kl.exact_poly import QPoly, evaluate, q_int
from matroid_kl.kl_engine import kl_polynomial
from matroid_kl.os_matroid import QNiform, Uniform
from matroid_kl.partitions import Partition, dim_unipotent
from matroid_kl.rep_ring import V, VirtualRep, rep_dim, rep_qdim

q = QPoly.monomial(1)


def test_recursive_examples():
    assert ekl_recursive(3, 1).entries == (V(3),)
    assert ekl_recursive(4, 1).entries == (V(4), V(2, 2))
    assert ekl_recursive(5, 2).entries == (V(5), V(3, 2))


def test_recursive_u61():
    # dims must reproduce P = 1 + 9t + 5t^2
    t = ekl_recursive(6, 1)
    assert t.dims() == [1, 9, 5]
    assert t[1] == V(4, 2)
    assert t[2] == V(2, 2, 2)


def test_closed_form_examples():
    assert ekl_closed_form(6, 1, 0) == V(6)
    assert ekl_closed_form(4, 1, 1) == V(2, 2)
    assert ekl_closed_form(6, 2, 2) == VirtualRep.zero(6)
    assert ekl_closed_form(8, 2, 2) == V(4, 2, 2) + V(3, 3, 2)


def test_closed_form_out_of_range():
    assert ekl_closed_form(5, 1, 2) == VirtualRep.zero(5)
    assert ekl_closed_form(5, 1, -1) == VirtualRep.zero(5)
    with pytest.raises(InvalidArgument):
        ekl_closed_form(2, 3, 0)


def test_scalar_and_q_closed_forms():
    assert ekl_scalar_closed_form(4, 1, 1) == 2
    assert ekl_q_closed_form(4, 1, 1) == q**2 + q**4
    assert ekl_scalar_closed_form(5, 2, 1) == 5
    assert ekl_q_closed_form(5, 2, 1) == q**2 * q_int(5)
    assert ekl_q_closed_form(5, 2, 1) == dim_unipotent(Partition([3, 2]))
    for n in range(1, 9):
        for i in range(1, num_degrees(n, 0)):
            assert ekl_scalar_closed_form(n, 0, i) == 0
            assert ekl_q_closed_form(n, 0, i) == QPoly()
    assert ekl_scalar_closed_form(7, 2, 0) == 1 and ekl_q_closed_form(7, 2, 0) == QPoly([1])


def test_scalar_closed_form_term_by_term():
    # each b-term is the hook-formula dimension of its shape
    for n in range(2, 13):
        for m in range(n + 1):
            for i in range(1, num_degrees(n, m)):
                rep = ekl_closed_form(n, m, i)
                assert ekl_scalar_closed_form(n, m, i) == rep_dim(rep)


def test_unipotent_examples():
    t = ekl_unipotent(4, 1)
    assert t.flavor == "unipotent"
    assert t.entries == (V(4), V(2, 2))
    assert t.qdims() == [QPoly([1]), q**2 + q**4]
    assert ekl_unipotent(3, 1).entries == (V(3),)


def test_unipotent_table_equals_symmetric():
    for n in range(11):
        for m in range(n + 1):
            assert ekl_unipotent(n, m).entries == ekl_recursive(n, m).entries


def test_recursion_matches_closed_form():
    for n in range(13):
        for m in range(n + 1):
            table = ekl_recursive(n, m)
            assert len(table) == num_degrees(n, m)
            for i, rep in enumerate(table.entries):
                assert rep == ekl_closed_form(n, m, i), (n, m, i)
                assert rep.is_honest()


def test_closed_form_shapes_valid():
    for n in range(13):
        for m in range(n + 1):
            for i in range(1, num_degrees(n, m)):
                for b in range(1, min(m, n - m - 2 * i) + 1):
                    assert b <= n / 2 - i


def test_dimension_bridges():
    for n in range(13):
        for m in range(n + 1):
            p = kl_polynomial(Uniform(n, m)).poly
            assert ekl_recursive(n, m).dims() == [p.coeff(i) for i in range(num_degrees(n, m))]
    for n in range(11):
        for m in range(n + 1):
            p = kl_polynomial(QNiform(n, m)).poly
            qd = ekl_unipotent(n, m).qdims()
            assert qd == [p.coeff(i) for i in range(num_degrees(n, m))]
            for i in range(num_degrees(n, m)):
                assert ekl_q_closed_form(n, m, i) == qd[i]
                assert evaluate(ekl_q_closed_form(n, m, i), 1) == ekl_scalar_closed_form(n, m, i)


def test_table_json():
    data = ekl_unipotent(4, 1).to_json()
    assert data["flavor"] == "unipotent" and data["n"] == 4
    row = data["coefficients"][1]
    assert row["i"] == 1
    assert row["dim"] == "2"
    assert row["qdim"] == {"ring": "int", "var": "q", "coeffs": ["0", "0", "1", "0", "1"]}
    assert row["rep"] == {"n": 4, "terms": [{"partition": [2, 2], "mult": "1"}]}
    assert ekl_unipotent(4, 1).to_json(q=2)["coefficients"][1]["qdim"] == "20"


def test_bad_flavor():
    with pytest.raises(InvalidArgument):
        EKLTable(1, 0, (V(1),), "weird")
