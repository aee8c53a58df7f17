"""Equivariant Kazhdan-Lusztig coefficients of uniform and q-niform matroids.

The recursion runs over flat orbits, one per rank k. A flat of rank k has
Boolean localization U_{k,0} and contraction U_{n-k,m}, so

    C^i_{n,m} = (-1)^i OS^i_{n,m}
              + sum_{k=1}^{n-m-1} sum_{j=0}^{k} (-1)^j OS^j_{k,0} * C^{n-m-k-i+j}_{n-k,m}

with ``*`` the induction product. The k = 0 orbit drops out because its
degree index n-m-i always lies past the degree bound.

On the GL_n(q) side the same identity holds with unipotent pieces and
Harish-Chandra induction, whose multiplicities agree with the symmetric
group ones. So the unipotent table reuses the symmetric computation and
differs only in how dimensions are read off.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import ConsistencyError, DivisibilityError, InvalidArgument
from .exact_poly import QPoly, evaluate, q_factorial, q_int
from .os_matroid import full_os_rep
from .partitions import InvalidPartition, Partition
from .rep_ring import VirtualRep, induce_product, rep_dim, rep_qdim

__all__ = [
    "EKLTable",
    "ekl_recursive",
    "ekl_unipotent",
    "ekl_closed_form",
    "ekl_scalar_closed_form",
    "ekl_q_closed_form",
    "num_degrees",
]

FLAVORS = ("symmetric", "unipotent")


def num_degrees(n: int, m: int) -> int:
    """How many coefficients P_{U_{n,m}} can have: degrees i < rank/2, or just 1 at rank 0."""
    r = n - m
    return 1 if r == 0 else (r + 1) // 2


@dataclass(frozen=True)
class EKLTable:
    n: int
    m: int
    entries: tuple  # VirtualRep per degree i
    flavor: str = "symmetric"

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise InvalidArgument(f"unknown flavor {self.flavor!r}")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i) -> VirtualRep:
        return self.entries[i]

    def dims(self) -> list[int]:
        return [rep_dim(c) for c in self.entries]

    def qdims(self) -> list[QPoly]:
        return [rep_qdim(c) for c in self.entries]

    def with_flavor(self, flavor: str) -> "EKLTable":
        return EKLTable(self.n, self.m, self.entries, flavor)

    def to_json(self, q: int | None = None) -> dict:
        rows = []
        for i, rep in enumerate(self.entries):
            qd = rep_qdim(rep)
            row = {"i": i, "rep": rep.to_json(), "dim": str(rep_dim(rep))}
            row["qdim"] = str(evaluate(qd, q)) if q is not None else qd.to_json()
            rows.append(row)
        return {"n": self.n, "m": self.m, "flavor": self.flavor, "coefficients": rows}


def _coefficient(table_of, n: int, m: int, d: int) -> VirtualRep:
    """C^d of U_{n,m}; zero outside the degree range."""
    if d < 0 or d >= num_degrees(n, m):
        return VirtualRep.zero(n)
    return table_of(n, m)[d]


@lru_cache(maxsize=None)
def _symmetric_entries(n: int, m: int) -> tuple:
    r = n - m
    if r == 0:
        return (VirtualRep.irreducible([n]) if n else VirtualRep.irreducible([]),)
    entries = []
    for i in range(num_degrees(n, m)):
        acc = full_os_rep(n, m, i) * (-1) ** i
        for k in range(1, r):
            for j in range(k + 1):
                d = r - k - i + j
                c = _coefficient(_symmetric_entries, n - k, m, d)
                if not c:
                    continue
                os_piece = full_os_rep(k, 0, j)
                if not os_piece:
                    continue
                term = induce_product(os_piece, c)
                acc = acc - term if j % 2 else acc + term
        if not acc.is_honest():
            raise ConsistencyError(f"C^{i} of U({n},{m}) has a negative multiplicity: {acc}")
        entries.append(acc)
    return tuple(entries)


def ekl_recursive(n: int, m: int) -> EKLTable:
    """S_n-equivariant KL coefficients of U_{n,m} from the orbit recursion."""
    if not 0 <= m <= n:
        raise InvalidArgument(f"need 0 <= m <= n, got n={n}, m={m}")
    return EKLTable(n, m, _symmetric_entries(n, m), "symmetric")


def ekl_unipotent(n: int, m: int) -> EKLTable:
    """GL_n(q)-equivariant coefficients of U_{n,m}(q), as unipotent multiplicities."""
    return ekl_recursive(n, m).with_flavor("unipotent")


def _closed_form_b_range(n: int, m: int, i: int) -> range:
    return range(1, min(m, n - m - 2 * i) + 1)


def _closed_form_shape(n: int, i: int, b: int) -> Partition:
    try:
        return Partition((n - 2 * i - b + 1, b + 1) + (2,) * (i - 1))
    except InvalidPartition as exc:
        raise ConsistencyError(f"closed form produced an invalid shape at n={n}, i={i}, b={b}: {exc}") from None


def ekl_closed_form(n: int, m: int, i: int) -> VirtualRep:
    """C^i_{n,m} in closed form: V[n] at i = 0, else a sum of three-block shapes."""
    if not 0 <= m <= n:
        raise InvalidArgument(f"need 0 <= m <= n, got n={n}, m={m}")
    if i < 0 or i >= num_degrees(n, m):
        return VirtualRep.zero(n)
    if i == 0:
        return VirtualRep.irreducible([n] if n else [])
    terms = {}
    for b in _closed_form_b_range(n, m, i):
        lam = _closed_form_shape(n, i, b)
        terms[lam] = terms.get(lam, 0) + 1
    return VirtualRep(n, terms)


def ekl_scalar_closed_form(n: int, m: int, i: int) -> int:
    """c^i_{n,m} from the factorial formula."""
    if not 0 <= m <= n:
        raise InvalidArgument(f"need 0 <= m <= n, got n={n}, m={m}")
    if i < 0 or i >= num_degrees(n, m):
        return 0
    if i == 0:
        return 1
    f = factorial
    total = 0
    for b in _closed_form_b_range(n, m, i):
        num = (n - 2 * i - 2 * b + 1) * f(n)
        den = (
            (n - i - b) * (n - i - b + 1) * (i + b) * (i + b - 1)
            * f(n - 2 * i - b) * f(b - 1) * f(i) * f(i - 1)
        )
        term, rem = divmod(num, den)
        if rem:
            raise DivisibilityError(f"scalar closed form not integral at n={n}, m={m}, i={i}, b={b}")
        total += term
    return total


def ekl_q_closed_form(n: int, m: int, i: int) -> QPoly:
    """c^i_{n,m}(q) from the q-integer formula."""
    if not 0 <= m <= n:
        raise InvalidArgument(f"need 0 <= m <= n, got n={n}, m={m}")
    if i < 0 or i >= num_degrees(n, m):
        return QPoly.const(0)
    if i == 0:
        return QPoly.const(1)
    qf = q_factorial
    total = QPoly.const(0)
    for b in _closed_form_b_range(n, m, i):
        num = q_int(n - 2 * i - 2 * b + 1) * qf(n)
        den = (
            q_int(n - i - b) * q_int(n - i - b + 1) * q_int(i + b) * q_int(i + b - 1)
            * qf(n - 2 * i - b) * qf(b - 1) * qf(i) * qf(i - 1)
        )
        total = total + num.exact_div(den) * QPoly.monomial(b - 1 + i * (i + 1))
    return total
