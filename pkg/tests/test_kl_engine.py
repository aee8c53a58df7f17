import pytest

from matroid_kl.errors import ConsistencyError, InvalidArgument
from matroid_kl.exact_poly import QPoly, RingPoly, substitute_q_one
from matroid_kl.kl_engine import (
    _solve,
    defect_verdict,
    kl_explicit_lattice,
    kl_polynomial,
    palindromic_defect,
)
from matroid_kl.os_matroid import Explicit, ExplicitLattice, QNiform, Uniform, uniform_lattice
from oracles import flats_from_rank, graphic_rank

q = QPoly.monomial(1)


def ip(*cs):
    return RingPoly(cs, "int")


def test_examples():
    assert kl_polynomial(Uniform(3, 3)).poly == ip(1)
    assert kl_polynomial(Uniform(0, 0)).poly == ip(1)
    assert kl_polynomial(Uniform(3, 1)).poly == ip(1)
    assert kl_polynomial(Uniform(4, 1)).poly == ip(1, 2)
    assert kl_polynomial(QNiform(4, 1)).poly == RingPoly([1, q**2 + q**4], "q")


def test_explicit_examples():
    assert kl_explicit_lattice(uniform_lattice(2, 1)).poly == ip(1)
    assert kl_explicit_lattice(uniform_lattice(4, 1)).poly == ip(1, 2)
    assert kl_explicit_lattice(uniform_lattice(5, 2)).poly == ip(1, 5)
    assert kl_polynomial(Explicit(uniform_lattice(5, 2))).poly == ip(1, 5)


def test_braid_matroids():
    # graphic matroids of K4 and K5, lattices built by closure
    for nv, expected in [(4, ip(1, 1)), (5, ip(1, 5))]:
        edges = [(a, b) for a in range(nv) for b in range(a + 1, nv)]
        lat = ExplicitLattice(len(edges), tuple(flats_from_rank(len(edges), graphic_rank(edges, nv))))
        assert kl_explicit_lattice(lat).poly == expected


def test_oracle_equivalence():
    for n in range(7):
        for m in range(n + 1):
            assert kl_explicit_lattice(uniform_lattice(n, m)).poly == kl_polynomial(Uniform(n, m)).poly


def test_palindromic_defect_examples():
    r, ok = palindromic_defect(Uniform(4, 1))
    assert ok and r == ip(-1, -2, 2, 1)
    r, ok = palindromic_defect(Uniform(3, 1))
    assert ok and r.coeff(1) == 0 and r == ip(-1, 0, 1)
    r, ok = palindromic_defect(Uniform(2, 1))
    assert ok and r == ip(-1, 1)
    with pytest.raises(InvalidArgument):
        palindromic_defect(Uniform(2, 2))


def test_defect_verdict_detects_breakage():
    assert defect_verdict(ip(-1, -2, 2, 1), 3)
    assert not defect_verdict(ip(-1, -2, 3, 1), 3)
    assert not defect_verdict(ip(-1, 1, 1), 2)  # nonzero middle coefficient


def test_solver_rejects_broken_defect():
    with pytest.raises(ConsistencyError):
        _solve(ip(-1, 1, 1), 2, "int", "test")


def test_invariants_sweep():
    for n in range(13):
        for m in range(n + 1):
            specs = [Uniform(n, m)] + ([QNiform(n, m)] if n <= 10 else [])
            for spec in specs:
                res = kl_polynomial(spec)
                p = res.poly
                assert p.coeff(0) == 1
                if spec.rank:
                    assert 2 * p.degree < spec.rank
                    _, ok = palindromic_defect(spec)
                    assert ok
                coeffs = p.coeffs if spec.ring == "int" else [x for c in p.coeffs for x in c.coeffs]
                assert all(c >= 0 for c in coeffs)


def test_explicit_defects():
    for n in range(1, 7):
        for m in range(n):
            _, ok = palindromic_defect(Explicit(uniform_lattice(n, m)))
            assert ok


@pytest.mark.parametrize("n", range(11))
def test_q_to_one(n):
    for m in range(n + 1):
        assert substitute_q_one(kl_polynomial(QNiform(n, m)).poly) == kl_polynomial(Uniform(n, m)).poly


def test_result_json():
    data = kl_polynomial(Uniform(4, 1)).to_json(Uniform(4, 1).to_json())
    assert data == {
        "matroid": {"type": "uniform", "n": 4, "m": 1},
        "rank": 3,
        "P": {"ring": "int", "var": "t", "coeffs": ["1", "2"]},
    }
