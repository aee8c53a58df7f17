"""Matroid specifications, Orlik-Solomon pieces and characteristic polynomials.

Three kinds of matroid are supported:

* ``Uniform(n, m)``: rank n-m on n elements, acted on by S_n;
* ``QNiform(n, m)``: the rank n-m truncation of the matroid of all
  hyperplanes in F_q^n, acted on by GL_n(q); its invariants are polynomials
  in a formal q;
* ``Explicit(lattice)``: any matroid given by its lattice of flats.

For the first two families the graded pieces of the reduced Orlik-Solomon
algebra are the hooks V[n-i, 1^i] for i < n-m (unipotent hooks on the q
side), and flats of equal rank form a single group orbit.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Union

from .errors import InvalidArgument, LatticeError
from .exact_poly import QPoly, RingPoly, gaussian_binomial
from .partitions import hook_shape
from .rep_ring import VirtualRep, rep_dim, rep_qdim

__all__ = [
    "Uniform",
    "QNiform",
    "Explicit",
    "MatroidSpec",
    "ExplicitLattice",
    "FlatOrbit",
    "reduced_os_rep",
    "full_os_rep",
    "char_poly",
    "flat_orbit_profile",
    "mobius",
    "contraction_lattice",
    "localization_interval",
    "uniform_lattice",
    "load_lattice",
]


def _check_nm(n, m):
    if not (isinstance(n, int) and isinstance(m, int)) or not 0 <= m <= n:
        raise InvalidArgument(f"need 0 <= m <= n, got n={n}, m={m}")


@dataclass(frozen=True)
class Uniform:
    n: int
    m: int

    def __post_init__(self):
        _check_nm(self.n, self.m)

    @property
    def rank(self) -> int:
        return self.n - self.m

    ring = "int"

    def to_json(self) -> dict:
        return {"type": "uniform", "n": self.n, "m": self.m}

    def __str__(self):
        return f"U({self.n},{self.m})"


@dataclass(frozen=True)
class QNiform:
    n: int
    m: int

    def __post_init__(self):
        _check_nm(self.n, self.m)

    @property
    def rank(self) -> int:
        return self.n - self.m

    ring = "q"

    def to_json(self) -> dict:
        return {"type": "qniform", "n": self.n, "m": self.m}

    def __str__(self):
        return f"U({self.n},{self.m})(q)"


@dataclass(eq=False)
class ExplicitLattice:
    """A lattice of flats, validated on construction.

    ``flats`` are frozensets of 0-based ground elements sorted by
    (rank, elements); ``ranks[i]`` is the rank of ``flats[i]``.
    """

    ground_size: int
    flats: tuple
    ranks: tuple = field(init=False)
    bottom: int = field(init=False)
    top: int = field(init=False)
    _below: tuple = field(init=False, repr=False)
    _mobius: dict = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        n = self.ground_size
        if not isinstance(n, int) or n < 0:
            raise LatticeError(f"bad ground size {n!r}")
        raw = []
        for f in self.flats:
            elems = list(f)
            if any(not isinstance(e, int) or not 0 <= e < n for e in elems):
                raise LatticeError(f"flat {sorted(elems)} has elements outside 0..{n - 1}")
            if len(set(elems)) != len(elems):
                raise LatticeError(f"flat {elems} repeats an element")
            raw.append(frozenset(elems))
        if len(set(raw)) != len(raw):
            raise LatticeError("duplicate flats")
        full = frozenset(range(n))
        if full not in raw:
            raise LatticeError("the full ground set must be a flat")
        low = frozenset.intersection(*raw) if raw else full
        if low not in raw:
            raise LatticeError(f"no minimal flat: intersection of all flats {sorted(low)} is missing")
        present = set(raw)
        for a, b in combinations(raw, 2):
            if a & b not in present:
                raise LatticeError(
                    f"not meet-closed: {sorted(a)} and {sorted(b)} meet in {sorted(a & b)}, not a flat"
                )
        # heights from the bottom; graded means every cover adds exactly one
        order = sorted(raw, key=lambda f: (len(f), sorted(f)))
        height = {}
        covers = {}
        for f in order:
            lower = [g for g in order if g < f]
            maximal = [g for g in lower if not any(g < h for h in lower)]
            covers[f] = maximal
            height[f] = 0 if not maximal else 1 + max(height[g] for g in maximal)
        for f, lows in covers.items():
            for g in lows:
                if height[f] != height[g] + 1:
                    raise LatticeError(
                        f"rank does not increase by one along the cover {sorted(g)} < {sorted(f)}"
                    )
        order.sort(key=lambda f: (height[f], sorted(f)))
        self.flats = tuple(order)
        self.ranks = tuple(height[f] for f in order)
        index = {f: i for i, f in enumerate(order)}
        self.bottom = index[low]
        self.top = index[full]
        self._below = tuple(
            frozenset(j for j, g in enumerate(order) if g <= f) for f in order
        )

    @property
    def rank(self) -> int:
        return self.ranks[self.top]

    def index(self, flat) -> int:
        if isinstance(flat, int):
            return flat
        f = frozenset(flat)
        try:
            return self.flats.index(f)
        except ValueError:
            raise InvalidArgument(f"{sorted(f)} is not a flat") from None

    def leq(self, i: int, j: int) -> bool:
        return i in self._below[j]

    def interval(self, i: int, j: int) -> list[int]:
        """Indices of flats H with F_i <= H <= F_j, in rank order."""
        return [h for h in sorted(self._below[j]) if i in self._below[h]]

    def to_json(self) -> dict:
        return {"ground": self.ground_size, "flats": [sorted(f) for f in self.flats]}

    @classmethod
    def from_json(cls, data: dict) -> "ExplicitLattice":
        try:
            ground = data["ground"]
            flats = data["flats"]
        except (KeyError, TypeError):
            raise LatticeError('lattice JSON needs "ground" and "flats"') from None
        if not isinstance(flats, list) or not all(isinstance(f, list) for f in flats):
            raise LatticeError('"flats" must be a list of element arrays')
        for f in flats:
            if f != sorted(f):
                raise LatticeError(f"flat {f} is not a sorted array")
        return cls(ground, tuple(flats))


@dataclass(frozen=True, eq=False)
class Explicit:
    lattice: ExplicitLattice

    @property
    def rank(self) -> int:
        return self.lattice.rank

    ring = "int"

    def to_json(self) -> dict:
        return {"type": "explicit", **self.lattice.to_json()}

    def __str__(self):
        return f"Explicit(ground={self.lattice.ground_size}, flats={len(self.lattice.flats)})"


MatroidSpec = Union[Uniform, QNiform, Explicit]


@dataclass(frozen=True)
class FlatOrbit:
    """One orbit of flats: ``count`` flats of rank ``loc_rank``."""

    loc_rank: int
    count: Union[int, QPoly]
    localization: RingPoly  # characteristic polynomial of M_F
    contraction: MatroidSpec
    corank: int


def reduced_os_rep(n: int, m: int, i: int) -> VirtualRep:
    """Degree-i reduced Orlik-Solomon piece of U_{n,m}: a hook below the rank, else 0."""
    _check_nm(n, m)
    if 0 <= i < n - m:
        return VirtualRep.irreducible(hook_shape(n, i))
    return VirtualRep.zero(n)


def full_os_rep(n: int, m: int, i: int) -> VirtualRep:
    """Degree-i Orlik-Solomon piece, split as reduced(i) + reduced(i-1)."""
    _check_nm(n, m)
    if n - m < 1:
        raise InvalidArgument(f"Orlik-Solomon splitting needs positive rank; U({n},{m}) has rank 0")
    if i < 0:
        return VirtualRep.zero(n)
    if i == 0:
        return reduced_os_rep(n, m, 0)
    return reduced_os_rep(n, m, i) + reduced_os_rep(n, m, i - 1)


@lru_cache(maxsize=None)
def _family_char_poly(spec) -> RingPoly:
    r = spec.rank
    if r == 0:
        return RingPoly.one(spec.ring)
    dim = rep_dim if isinstance(spec, Uniform) else rep_qdim
    coeffs = [None] * (r + 1)
    for i in range(r + 1):
        d = dim(full_os_rep(spec.n, spec.m, i))
        coeffs[r - i] = -d if i % 2 else d
    return RingPoly(coeffs, spec.ring)


def char_poly(spec: MatroidSpec) -> RingPoly:
    """Characteristic polynomial chi_M(t), of degree rk M with leading coefficient 1."""
    if isinstance(spec, (Uniform, QNiform)):
        return _family_char_poly(spec)
    if isinstance(spec, Explicit):
        return lattice_char_poly(spec.lattice, spec.lattice.bottom, spec.lattice.top)
    raise InvalidArgument(f"not a matroid spec: {spec!r}")


def lattice_char_poly(lat: ExplicitLattice, lo: int, hi: int) -> RingPoly:
    """chi of the interval [lo, hi]: sum of mu(lo, H) t^(rk hi - rk H)."""
    r = lat.ranks[hi] - lat.ranks[lo]
    coeffs = [0] * (r + 1)
    for h in lat.interval(lo, hi):
        coeffs[lat.ranks[hi] - lat.ranks[h]] += mobius(lat, lo, h)
    return RingPoly(coeffs, "int")


def flat_orbit_profile(spec: MatroidSpec) -> list[FlatOrbit]:
    """Orbits of flats: proper ranks 0..rk-1, then the maximal flat."""
    r = spec.rank
    if r < 1:
        raise InvalidArgument(f"{spec} has rank 0; no proper flats to profile")
    if isinstance(spec, Explicit):
        lat = spec.lattice
        return [
            FlatOrbit(
                loc_rank=lat.ranks[f],
                count=1,
                localization=lattice_char_poly(lat, lat.bottom, f),
                contraction=Explicit(contraction_lattice(lat, f)),
                corank=r - lat.ranks[f],
            )
            for f in range(len(lat.flats))
        ]
    family = type(spec)
    n, m = spec.n, spec.m
    out = []
    for k in range(r):
        count = comb(n, k) if family is Uniform else gaussian_binomial(n, k)
        out.append(
            FlatOrbit(
                loc_rank=k,
                count=count,
                localization=char_poly(family(k, 0)),
                contraction=family(n - k, m),
                corank=r - k,
            )
        )
    one = 1 if family is Uniform else QPoly.const(1)
    out.append(FlatOrbit(r, one, char_poly(spec), family(0, 0), 0))
    return out


def mobius(lat: ExplicitLattice, f, g) -> int:
    """Moebius function mu(F, G) of the lattice, memoized per lattice and F."""
    i, j = lat.index(f), lat.index(g)
    if not lat.leq(i, j):
        raise InvalidArgument(f"flats {sorted(lat.flats[i])} and {sorted(lat.flats[j])} are not comparable as F <= G")
    row = lat._mobius.get(i)
    if row is None:
        row = {}
        for h in lat.interval(i, lat.top):  # rank order, so lower values are ready
            if h == i:
                row[h] = 1
            else:
                row[h] = -sum(row[x] for x in lat.interval(i, h) if x != h)
        lat._mobius[i] = row
    return row[j]


def _relabel(flats, elements) -> tuple:
    pos = {e: k for k, e in enumerate(sorted(elements))}
    return tuple(sorted(pos[e] for e in f) for f in flats)


def contraction_lattice(lat: ExplicitLattice, f) -> ExplicitLattice:
    """Upper interval [F, top], relabeled onto the complement of F."""
    i = lat.index(f)
    base = lat.flats[i]
    rest = frozenset(range(lat.ground_size)) - base
    uppers = [lat.flats[h] - base for h in lat.interval(i, lat.top)]
    return ExplicitLattice(len(rest), _relabel(uppers, rest))


def localization_interval(lat: ExplicitLattice, f) -> ExplicitLattice:
    """Lower interval [bottom, F], relabeled onto the elements of F."""
    i = lat.index(f)
    base = lat.flats[i]
    lowers = [lat.flats[h] for h in lat.interval(lat.bottom, i)]
    return ExplicitLattice(len(base), _relabel(lowers, base))


def uniform_lattice(n: int, m: int) -> ExplicitLattice:
    """Lattice of flats of U_{n,m} built from scratch: small subsets plus the full set."""
    _check_nm(n, m)
    flats = [list(c) for k in range(n - m) for c in combinations(range(n), k)]
    flats.append(list(range(n)))
    return ExplicitLattice(n, tuple(flats))


def load_lattice(path) -> ExplicitLattice:
    with Path(path).open() as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LatticeError(f"{path}: not valid JSON ({exc})") from None
    return ExplicitLattice.from_json(data)
