"""Invariant sweep behind ``matroid-kl verify``.

Each check walks a bounded range of cases and records failures with a
witness tuple. ``run_verify`` returns the results in registration order,
with failures within a check sorted by witness so output is deterministic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from . import _backend
from .character_oracle import oracle_product
from .ekl_engine import (
    ekl_closed_form,
    ekl_q_closed_form,
    ekl_recursive,
    ekl_scalar_closed_form,
    ekl_unipotent,
    num_degrees,
)
from .exact_poly import (
    QPoly,
    RingPoly,
    evaluate,
    gaussian_binomial,
    q_factorial,
    q_int,
    substitute_q_one,
)
from .kl_engine import kl_explicit_lattice, kl_polynomial, palindromic_defect
from .os_matroid import (
    Explicit,
    QNiform,
    Uniform,
    char_poly,
    full_os_rep,
    reduced_os_rep,
    uniform_lattice,
)
from .partitions import (
    Partition,
    conjugate,
    dim_symmetric,
    dim_unipotent,
    hook_lengths,
    partitions_of,
)
from .rep_ring import VirtualRep, induce_product, lr_coefficient, rep_dim, rep_qdim


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def case(self, cond: bool, witness: tuple, message: str = ""):
        self.cases += 1
        if not cond:
            self.failures.append((witness, message))

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "cases": self.cases,
            "ok": self.ok,
            "failures": [{"witness": list(map(str, w)), "message": m} for w, m in self.failures],
        }


CHECKS = []


def check(name):
    def deco(fn):
        CHECKS.append((name, fn))
        return fn
    return deco


def _qprod_k(k: int) -> RingPoly:
    out = RingPoly.one("q")
    for j in range(k):
        out = out * RingPoly([QPoly.monomial(j, -1), 1], "q")
    return out


def _all_nm(max_n):
    for n in range(max_n + 1):
        for m in range(n + 1):
            yield n, m


# -- exact_poly ---------------------------------------------------------

@check("q-integers and q-factorials specialize to k and k! at q=1")
def _(res, max_n, qs):
    for k in range(1, max(max_n, 12) + 1):
        res.case(evaluate(q_int(k), 1) == k, (k,))
        res.case(evaluate(q_factorial(k), 1) == factorial(k), (k,))


@check("Gaussian binomial symmetry, q-Pascal and non-negativity")
def _(res, max_n, qs):
    top = min(12, max_n)
    for n in range(top + 1):
        for k in range(n + 1):
            g = gaussian_binomial(n, k)
            res.case(g == gaussian_binomial(n, n - k), (n, k), "symmetry")
            res.case(all(c >= 0 for c in g.coeffs), (n, k), "negative coefficient")
            res.case(evaluate(g, 1) == comb(n, k), (n, k), "q=1 value")
            if 1 <= k < n:
                rhs = gaussian_binomial(n - 1, k - 1) + QPoly.monomial(k) * gaussian_binomial(n - 1, k)
                res.case(g == rhs, (n, k), "q-Pascal")


@check("Gaussian binomials count subspaces at numeric q")
def _(res, max_n, qs):
    for q in qs:
        for n in range(min(8, max_n) + 1):
            for k in range(n + 1):
                count = Fraction(1)
                for i in range(k):
                    count *= Fraction(q**n - q**i, q**k - q**i)
                res.case(evaluate(gaussian_binomial(n, k), q) == count, (n, k, q))


@check("polynomial ring axioms on random inputs")
def _(res, max_n, qs):
    rng = random.Random(20240601)

    def rq():
        return QPoly(rng.randint(-5, 5) for _ in range(rng.randint(0, 5)))

    def rt():
        return RingPoly([rq() for _ in range(rng.randint(0, 4))], "q")

    for trial in range(60):
        a, b, c = rt(), rt(), rt()
        res.case((a * b) * c == a * (b * c), (trial,), "associativity")
        res.case(a * (b + c) == a * b + a * c, (trial,), "distributivity")
        res.case(a + b == b + a and a * b == b * a, (trial,), "commutativity")
        if b:
            lead = b.coeffs[-1]
            if lead in (QPoly.const(1), QPoly.const(-1)):
                res.case((a * b).exact_div(b) == a, (trial,), "exact division")
        x, y = rq(), rq()
        for q in qs:
            res.case(evaluate(x * y, q) == evaluate(x, q) * evaluate(y, q), (trial, q), "evaluation")


# -- partitions ---------------------------------------------------------

@check("hook formulas: q=1 specialization, conjugation, lowest q-power")
def _(res, max_n, qs):
    for n in range(min(10, max_n) + 1):
        for lam in partitions_of(n):
            du = dim_unipotent(lam)
            res.case(evaluate(du, 1) == dim_symmetric(lam), (lam,), "q=1")
            res.case(dim_symmetric(lam) == dim_symmetric(conjugate(lam)), (lam,), "conjugate dim")
            res.case(sorted(hook_lengths(lam)) == sorted(hook_lengths(conjugate(lam))), (lam,), "hooks")
            res.case(all(c >= 0 for c in du.coeffs), (lam,), "negative coefficient")
            low = sum(k * p for k, p in enumerate(lam))
            res.case(du.low_degree() == low, (lam,), "lowest power")
            res.case((du.coeffs[0] if du.coeffs else 0) == (1 if len(lam) <= 1 else 0), (lam,), "constant term")


@check("sum of squared dimensions is n!")
def _(res, max_n, qs):
    for n in range(min(8, max_n) + 1):
        res.case(sum(dim_symmetric(l) ** 2 for l in partitions_of(n)) == factorial(n), (n,))


# -- rep_ring -----------------------------------------------------------

def _pairs(limit):
    for n in range(limit + 1):
        for k in range(n + 1):
            for mu in partitions_of(k):
                for nu in partitions_of(n - k):
                    yield n, k, mu, nu


@check("LR symmetry in the two factors")
def _(res, max_n, qs):
    for n, k, mu, nu in _pairs(min(8, max_n)):
        for lam in partitions_of(n):
            res.case(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu), (lam, mu, nu))


@check("induction dimension identities (Young and parabolic index)")
def _(res, max_n, qs):
    for n, k, mu, nu in _pairs(min(10, max_n)):
        prod = induce_product(VirtualRep.irreducible(mu), VirtualRep.irreducible(nu))
        res.case(
            rep_dim(prod) == comb(n, k) * dim_symmetric(mu) * dim_symmetric(nu), (mu, nu), "dim"
        )
        if n <= 8:
            rhs = gaussian_binomial(n, k) * dim_unipotent(mu) * dim_unipotent(nu)
            res.case(rep_qdim(prod) == rhs, (mu, nu), "qdim")


@check("induction product associativity and unit")
def _(res, max_n, qs):
    top = min(7, max_n)
    for n in range(top + 1):
        for a in range(n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                for la in partitions_of(a):
                    A = VirtualRep.irreducible(la)
                    res.case(induce_product(VirtualRep.irreducible([]), A) == A, (la,), "unit")
                    for lb in partitions_of(b):
                        B = VirtualRep.irreducible(lb)
                        AB = induce_product(A, B)
                        for lc in partitions_of(c):
                            C = VirtualRep.irreducible(lc)
                            res.case(
                                induce_product(AB, C) == induce_product(A, induce_product(B, C)),
                                (la, lb, lc),
                            )


@check("LR tableau counts match the character oracle")
def _(res, max_n, qs):
    from .rep_ring import product_expansion

    for n, k, mu, nu in _pairs(min(6, max_n)):
        res.case(dict(product_expansion(mu, nu)) == oracle_product(mu, nu), (mu, nu))


@check("compiled and pure-Python LR kernels agree")
def _(res, max_n, qs):
    if _backend.count_lr_compiled is None:
        return
    for n, k, mu, nu in _pairs(min(8, max_n)):
        for lam in partitions_of(n):
            a = _backend.count_lr_python(tuple(lam), tuple(mu), tuple(nu))
            b = _backend.count_lr_compiled(tuple(lam), tuple(mu), tuple(nu))
            res.case(a == b, (lam, mu, nu))


# -- os_matroid ---------------------------------------------------------

@check("chi of the full q-Boolean matroid factors as prod (t - q^j)")
def _(res, max_n, qs):
    for k in range(min(8, max_n) + 1):
        res.case(char_poly(QNiform(k, 0)) == _qprod_k(k), (k,))


@check("characteristic polynomials: chi(1) = 0, degree, q=1 pattern")
def _(res, max_n, qs):
    for n, m in _all_nm(max_n):
        cu, cq = char_poly(Uniform(n, m)), char_poly(QNiform(n, m))
        r = n - m
        res.case(cu.degree == r and cu.coeff(r) == 1, (n, m), "uniform degree/leading")
        res.case(cq.degree == r and cq.coeff(r) == 1, (n, m), "q-niform degree/leading")
        if r >= 1:
            res.case(cu(1) == 0, (n, m), "uniform chi(1)")
            res.case(cq(QPoly.const(1)) == 0, (n, m), "q-niform chi(1)")
        c1 = substitute_q_one(cq)
        res.case(c1.degree == cu.degree, (n, m), "q=1 degree")
        res.case(
            all((a > 0) == (b > 0) and (a < 0) == (b < 0) for a, b in zip(c1.coeffs, cu.coeffs)),
            (n, m),
            "q=1 sign pattern",
        )
        if m == 0:
            res.case(c1 == cu, (n, m), "Boolean q=1")


@check("Orlik-Solomon splitting at the dimension level")
def _(res, max_n, qs):
    for n, m in _all_nm(max_n):
        if n - m < 1:
            continue
        for i in range(n - m + 2):
            lhs = rep_dim(full_os_rep(n, m, i))
            rhs = rep_dim(reduced_os_rep(n, m, i)) + (rep_dim(reduced_os_rep(n, m, i - 1)) if i else 0)
            res.case(lhs == rhs, (n, m, i))


@check("explicit lattices of U(n,m) reproduce chi and P")
def _(res, max_n, qs):
    for n, m in _all_nm(min(6, max_n)):
        lat = uniform_lattice(n, m)
        res.case(char_poly(Explicit(lat)) == char_poly(Uniform(n, m)), (n, m), "chi")
        res.case(kl_explicit_lattice(lat).poly == kl_polynomial(Uniform(n, m)).poly, (n, m), "P")
        if n - m >= 1:
            _, ok = palindromic_defect(Explicit(lat))
            res.case(ok, (n, m), "defect")


# -- kl_engine ----------------------------------------------------------

def _kl_sanity(res, spec, witness):
    p = kl_polynomial(spec).poly
    r = spec.rank
    res.case(r == 0 and p == RingPoly.one(spec.ring) or 2 * p.degree < r, witness, "degree bound")
    res.case(p.coeff(0) == 1, witness, "constant term")
    if spec.ring == "int":
        res.case(all(c >= 0 for c in p.coeffs), witness, "negative coefficient")
    else:
        res.case(all(x >= 0 for c in p.coeffs for x in c.coeffs), witness, "negative coefficient")
    if r >= 1:
        _, ok = palindromic_defect(spec)
        res.case(ok, witness, "defect antisymmetry")


@check("KL polynomials: degree bound, constant term, positivity, defect")
def _(res, max_n, qs):
    for n, m in _all_nm(min(12, max_n)):
        _kl_sanity(res, Uniform(n, m), ("U", n, m))
        if n <= 10:
            _kl_sanity(res, QNiform(n, m), ("Uq", n, m))


@check("q=1 degeneration of q-niform KL polynomials")
def _(res, max_n, qs):
    for n, m in _all_nm(min(10, max_n)):
        pq = kl_polynomial(QNiform(n, m)).poly
        res.case(substitute_q_one(pq) == kl_polynomial(Uniform(n, m)).poly, (n, m))


# -- ekl_engine ---------------------------------------------------------

@check("equivariant recursion equals the closed form")
def _(res, max_n, qs):
    for n, m in _all_nm(min(12, max_n)):
        table = ekl_recursive(n, m)
        for i in range(num_degrees(n, m)):
            res.case(table[i] == ekl_closed_form(n, m, i), (n, m, i))


@check("closed-form shapes are partitions and multiplicities are non-negative")
def _(res, max_n, qs):
    for n, m in _all_nm(min(12, max_n)):
        for i in range(num_degrees(n, m)):
            rep = ekl_closed_form(n, m, i)
            res.case(all(isinstance(l, Partition) for l in rep.terms), (n, m, i), "shape")
            res.case(rep.is_honest(), (n, m, i), "closed form positivity")
            res.case(ekl_recursive(n, m)[i].is_honest(), (n, m, i), "recursion positivity")


@check("equivariant dimensions match scalar KL coefficients")
def _(res, max_n, qs):
    for n, m in _all_nm(min(12, max_n)):
        p = kl_polynomial(Uniform(n, m)).poly
        for i, rep in enumerate(ekl_recursive(n, m).entries):
            res.case(rep_dim(rep) == p.coeff(i), (n, m, i), "recursion dim")
            res.case(ekl_scalar_closed_form(n, m, i) == p.coeff(i), (n, m, i), "closed form")


@check("unipotent q-dimensions match q-niform KL coefficients and the q closed form")
def _(res, max_n, qs):
    for n, m in _all_nm(min(10, max_n)):
        p = kl_polynomial(QNiform(n, m)).poly
        table = ekl_unipotent(n, m)
        res.case(table.entries == ekl_recursive(n, m).entries, (n, m), "same partition table")
        for i, rep in enumerate(table.entries):
            qd = rep_qdim(rep)
            closed = ekl_q_closed_form(n, m, i)
            res.case(qd == p.coeff(i), (n, m, i), "recursion qdim vs KL")
            res.case(closed == rep_qdim(ekl_closed_form(n, m, i)), (n, m, i), "q closed form vs qdim")
            res.case(closed == p.coeff(i), (n, m, i), "q closed form vs KL")
            for q in qs:
                res.case(evaluate(closed, q) == evaluate(p.coeff(i), q), (n, m, i, q), "numeric q")


@check("q=1 specialization of the q closed form")
def _(res, max_n, qs):
    for n, m in _all_nm(min(12, max_n)):
        for i in range(num_degrees(n, m)):
            res.case(
                evaluate(ekl_q_closed_form(n, m, i), 1) == ekl_scalar_closed_form(n, m, i),
                (n, m, i),
            )


def run_verify(max_n: int = 8, q_values=(2, 3), progress=None) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        res = CheckResult(name)
        try:
            fn(res, max_n, tuple(q_values))
        except Exception as exc:  # a crash inside a check is a failed check
            res.failures.append((("exception",), f"{type(exc).__name__}: {exc}"))
        res.failures.sort(key=lambda f: tuple(map(str, f[0])))
        results.append(res)
        if progress is not None:
            progress(res)
    return results
