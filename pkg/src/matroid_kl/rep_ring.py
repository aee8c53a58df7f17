"""Virtual representations and the induction product.

A ``VirtualRep`` of weight n is a signed combination of partitions of n.
It stands for a virtual representation of the symmetric group S_n or,
equally, a unipotent virtual representation of GL_n(q): induction
multiplicities agree on both sides, only the dimension functions differ
(``rep_dim`` versus ``rep_qdim``).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from . import _backend
from .errors import InvalidArgument
from .exact_poly import QPoly
from .partitions import Partition, dim_symmetric, dim_unipotent, partitions_of

__all__ = [
    "VirtualRep",
    "V",
    "lr_coefficient",
    "induce_product",
    "product_expansion",
    "rep_dim",
    "rep_qdim",
]


class VirtualRep:
    __slots__ = ("weight", "terms")

    def __init__(self, weight: int, terms: Mapping | Iterable = ()):
        if weight < 0:
            raise InvalidArgument(f"negative weight {weight}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, int] = {}
        for lam, mult in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.weight != weight:
                raise InvalidArgument(f"{lam} has weight {lam.weight}, expected {weight}")
            total = clean.get(lam, 0) + mult
            if total:
                clean[lam] = total
            else:
                clean.pop(lam, None)
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("VirtualRep is immutable")

    @classmethod
    def zero(cls, weight: int) -> "VirtualRep":
        return cls(weight)

    @classmethod
    def irreducible(cls, parts) -> "VirtualRep":
        lam = Partition(parts)
        return cls(lam.weight, {lam: 1})

    def __getitem__(self, lam) -> int:
        return self.terms.get(Partition(lam), 0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Terms sorted by partition (descending lexicographic)."""
        return sorted(self.terms.items(), reverse=True)

    def __eq__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self.weight == other.weight and self.terms == other.terms

    def __hash__(self):
        return hash((self.weight, frozenset(self.terms.items())))

    def _check(self, other):
        if not isinstance(other, VirtualRep):
            raise InvalidArgument(f"expected VirtualRep, got {type(other).__name__}")
        if other.weight != self.weight:
            raise InvalidArgument(f"weight mismatch {self.weight} vs {other.weight}")

    def __add__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam, 0) + c
            if s:
                out[lam] = s
            else:
                del out[lam]
        return VirtualRep._trusted(self.weight, out)

    def __neg__(self):
        return VirtualRep._trusted(self.weight, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, int) or isinstance(c, bool):
            return NotImplemented
        if not c:
            return VirtualRep(self.weight)
        return VirtualRep._trusted(self.weight, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    @classmethod
    def _trusted(cls, weight, terms):
        r = object.__new__(cls)
        object.__setattr__(r, "weight", weight)
        object.__setattr__(r, "terms", terms)
        return r

    def is_honest(self) -> bool:
        """True if every multiplicity is non-negative."""
        return all(v > 0 for v in self.terms.values())

    def __repr__(self):
        if not self.terms:
            return f"VirtualRep.zero({self.weight})"
        return " + ".join(f"{v}*V{lam}" if v != 1 else f"V{lam}" for lam, v in self.items())

    def format(self, prefix: str = "V") -> str:
        if not self.terms:
            return "0"
        out = []
        for lam, v in self.items():
            name = f"{prefix}{lam}"
            if v == 1:
                term = name
            elif v == -1:
                term = f"-{name}"
            else:
                term = f"{v}{name}"
            out.append(term)
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "n": self.weight,
            "terms": [
                {"partition": list(lam), "mult": str(v)}
                for lam, v in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VirtualRep":
        return cls(int(data["n"]), ((Partition(t["partition"]), int(t["mult"])) for t in data["terms"]))


def V(*parts) -> VirtualRep:
    """Shorthand: ``V(2, 2)`` is the irreducible V[2,2]."""
    return VirtualRep.irreducible(parts)


@lru_cache(maxsize=None)
def _lr_cached(lam: tuple, mu: tuple, nu: tuple) -> int:
    return _backend.count_lr(lam, mu, nu)


def lr_coefficient(lam, mu, nu) -> int:
    """Multiplicity of V[lam] in V[mu] * V[nu] by LR-tableau counting."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.weight != mu.weight + nu.weight:
        raise InvalidArgument(f"|{lam}| != |{mu}| + |{nu}|")
    # c^lam_{mu,nu} = c^lam_{nu,mu}; count with the shorter content
    if (len(nu), nu) > (len(mu), mu):
        mu, nu = nu, mu
    return _lr_cached(tuple(lam), tuple(mu), tuple(nu))


@lru_cache(maxsize=None)
def product_expansion(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """{lam: c^lam_{mu,nu}} over all lam with a nonzero coefficient."""
    n = sum(mu) + sum(nu)
    out = {}
    for lam in partitions_of(n):
        if not (lam.contains(mu) and lam.contains(nu)):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return out


def induce_product(a: VirtualRep, b: VirtualRep) -> VirtualRep:
    """Induction product A * B from S_k x S_{n-k} (or the parabolic in GL_n(q))."""
    n = a.weight + b.weight
    out: dict[Partition, int] = {}
    for mu, x in a.terms.items():
        for nu, y in b.terms.items():
            xy = x * y
            for lam, c in product_expansion(mu, nu).items():
                s = out.get(lam, 0) + xy * c
                if s:
                    out[lam] = s
                else:
                    del out[lam]
    return VirtualRep._trusted(n, out)


def rep_dim(a: VirtualRep) -> int:
    return sum(v * dim_symmetric(lam) for lam, v in a.terms.items())


def rep_qdim(a: VirtualRep) -> QPoly:
    total = QPoly.const(0)
    for lam, v in a.terms.items():
        total = total + dim_unipotent(lam) * v
    return total
