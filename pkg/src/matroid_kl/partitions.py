"""Integer partitions, hook lengths and the two dimension formulas."""
from __future__ import annotations

from functools import lru_cache
from math import factorial, prod

from .errors import DivisibilityError, InvalidPartition, ResourceLimit
from .exact_poly import QPoly, q_factorial, q_int

__all__ = [
    "Partition",
    "make_partition",
    "conjugate",
    "hook_lengths",
    "dim_symmetric",
    "dim_unipotent",
    "partitions_of",
    "hook_shape",
    "PARTITION_BOUND",
]

PARTITION_BOUND = 30


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Being a tuple, partitions hash and compare lexicographically, so they
    can be used directly as dictionary keys and sorted canonically.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise InvalidPartition(f"parts must be positive integers: {list(parts)}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidPartition(f"parts must be weakly decreasing: {list(parts)}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other) -> bool:
        """True if the Young diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"


def make_partition(parts) -> Partition:
    return Partition(parts)


def hook_shape(n: int, i: int) -> Partition:
    """The hook [n-i, 1^i]."""
    if not 0 <= i < n:
        raise InvalidPartition(f"no hook [{n}-{i},1^{i}]")
    return Partition((n - i,) + (1,) * i)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


@lru_cache(maxsize=None)
def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """Hook length arm + leg + 1 of every cell, in row-reading order."""
    lam = Partition(lam)
    lc = conjugate(lam)
    return tuple(
        lam[i] - j + lc[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    )


@lru_cache(maxsize=None)
def dim_symmetric(lam: Partition) -> int:
    """Dimension of the Specht module: n! over the product of hook lengths."""
    n = sum(lam)
    num = factorial(n)
    den = prod(hook_lengths(lam))
    d, r = divmod(num, den)
    if r:
        raise DivisibilityError(f"hook formula not integral for {lam}")
    return d


@lru_cache(maxsize=None)
def dim_unipotent(lam: Partition) -> QPoly:
    """Dimension of the unipotent representation as a polynomial in q.

    q^{sum (k-1) lam_k} [n]_q! / prod [h]_q, with rows indexed from 1.
    """
    lam = Partition(lam)
    n = lam.weight
    shift = sum(k * part for k, part in enumerate(lam))
    den = QPoly.const(1)
    for h in hook_lengths(lam):
        den = den * q_int(h)
    return q_factorial(n).exact_div(den) * QPoly.monomial(shift)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partitions_of(n: int, bound: int = PARTITION_BOUND) -> list[Partition]:
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        raise InvalidPartition(f"negative weight {n}")
    if n > bound:
        raise ResourceLimit(f"partitions_of({n}) exceeds bound {bound}")
    return list(_partitions(n, n))
