"""Brute-force character-theoretic oracle for induction multiplicities.

Used only by the verification suite and the tests: it must not share code
with the LR tableau counter. Irreducible characters come from the
Murnaghan-Nakayama rule (rim-hook removal on beta-sets); the induced
character from S_k x S_{n-k} is summed over actual permutations, and
multiplicities come from the character inner product. Practical for n <= 6.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .errors import ResourceLimit
from .partitions import Partition, partitions_of

ORACLE_BOUND = 7


def cycle_type(perm) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        k, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def character(lam: tuple, rho: tuple) -> int:
    """chi^lam evaluated at cycle type rho, by Murnaghan-Nakayama."""
    if sum(lam) != sum(rho):
        raise ValueError("weight mismatch")
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]  # strictly decreasing
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        sign = (-1) ** sum(1 for x in beta if nb < x < b)
        new_beta = sorted([x for x in beta if x != b] + [nb], reverse=True)
        parts = [x - (ell - 1 - i) for i, x in enumerate(new_beta)]
        total += sign * character(tuple(p for p in parts if p > 0), rest)
    return total


def _conjugacy_classes(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """(cycle type, representative permutation, class size) for S_n."""
    reps = {}
    counts = {}
    for perm in permutations(range(n)):
        ct = cycle_type(perm)
        counts[ct] = counts.get(ct, 0) + 1
        reps.setdefault(ct, perm)
    return [(ct, reps[ct], counts[ct]) for ct in sorted(reps, reverse=True)]


@lru_cache(maxsize=None)
def induced_character(mu: tuple, nu: tuple) -> dict[tuple, Fraction]:
    """Ind_{S_k x S_{n-k}}^{S_n}(chi^mu x chi^nu) on each class, by summing over all x in S_n."""
    k, n = sum(mu), sum(mu) + sum(nu)
    if n > ORACLE_BOUND:
        raise ResourceLimit(f"character oracle is limited to n <= {ORACLE_BOUND}")
    group = list(permutations(range(n)))
    order_h = factorial(k) * factorial(n - k)
    values = {}
    for ct, g, _ in _class_table(n):
        acc = 0
        for x in group:
            # h = x g x^{-1}: h(x(a)) = x(g(a))
            h = [0] * n
            for a in range(n):
                h[x[a]] = x[g[a]]
            if any(h[a] >= k for a in range(k)):
                continue  # does not preserve the first block
            first = cycle_type(h[:k])
            second = cycle_type([v - k for v in h[k:]])
            acc += character(mu, first) * character(nu, second)
        values[ct] = Fraction(acc, order_h)
    return values


def oracle_multiplicity(lam, mu, nu) -> int:
    """Multiplicity of V[lam] in V[mu] * V[nu] via <Ind, chi^lam>."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    n = sum(lam)
    if n != sum(mu) + sum(nu):
        raise ValueError("weight mismatch")
    ind = induced_character(mu, nu)
    total = Fraction(0)
    for ct, _, size in _class_table(n):
        total += size * ind[ct] * character(lam, ct)
    total /= factorial(n)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral multiplicity {total}")
    return int(total)


@lru_cache(maxsize=None)
def _class_table(n: int):
    return tuple(_conjugacy_classes(n))


def oracle_product(mu, nu) -> dict[Partition, int]:
    n = sum(mu) + sum(nu)
    out = {}
    for lam in partitions_of(n):
        c = oracle_multiplicity(lam, mu, nu)
        if c:
            out[lam] = c
    return out
