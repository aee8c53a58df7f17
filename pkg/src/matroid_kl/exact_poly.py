"""Exact polynomial arithmetic over arbitrary-precision integers.

Two types live here:

``QPoly``
    a dense polynomial in the formal variable ``q`` with integer
    coefficients (q-integers, q-factorials, Gaussian binomials, q-dimensions).
``RingPoly``
    a dense polynomial in ``t`` whose coefficients are either plain ``int``
    (ring tag ``"int"``) or ``QPoly`` (ring tag ``"q"``).

Both are immutable and kept in canonical form (no trailing zeros; the zero
polynomial has an empty coefficient tuple).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import DivisibilityError, InvalidArgument

__all__ = [
    "QPoly",
    "RingPoly",
    "q_int",
    "q_factorial",
    "gaussian_binomial",
    "evaluate",
    "substitute_q",
    "substitute_q_one",
]


def _trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class QPoly:
    """Polynomial in ``q`` with integer coefficients; ``coeffs[k]`` multiplies q^k."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidArgument(f"QPoly coefficient must be int, got {c!r}")
            cs.append(c)
        object.__setattr__(self, "coeffs", _trim(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "QPoly":
        # trusted constructor: coeffs already trimmed ints
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls._raw((c,) if c else ())

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        if k < 0:
            raise InvalidArgument("negative exponent")
        return cls._raw((0,) * k + (c,) if c else ())

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def low_degree(self) -> int:
        """Exponent of the lowest nonzero term; -1 for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(("QPoly", self.coeffs)))
        return self._hash

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return QPoly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if not other:
                return QPoly._raw(())
            return QPoly._raw(tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly._raw(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise InvalidArgument("negative power")
        result = QPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "QPoly | int") -> tuple["QPoly", "QPoly"]:
        """Long division over the integers.

        Raises DivisibilityError if some step needs a non-integral quotient
        coefficient (the leading coefficient of ``other`` must divide).
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero QPoly")
        rem = list(self.coeffs)
        d = other.coeffs
        lead = d[-1]
        dd = len(d) - 1
        if len(rem) - 1 < dd:
            return QPoly._raw(()), self
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            qk, r = divmod(c, lead)
            if r:
                raise DivisibilityError(f"leading coefficient {lead} does not divide {c}")
            quot[k - dd] = qk
            for j, y in enumerate(d):
                rem[k - dd + j] -= qk * y
        return QPoly._raw(_trim(quot)), QPoly._raw(_trim(rem))

    def exact_div(self, other: "QPoly | int") -> "QPoly":
        quot, rem = self.divmod(other)
        if rem:
            raise DivisibilityError(f"{self} is not divisible by {other}")
        return quot

    def __floordiv__(self, other):
        return self.exact_div(other)

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        return _format_terms(self.coeffs, "q")

    def to_json(self) -> dict:
        return {"ring": "int", "var": "q", "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "QPoly":
        return cls(int(c) for c in data["coeffs"])


def _format_terms(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = f"{var}^{k}"
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@lru_cache(maxsize=None)
def q_int(k: int) -> QPoly:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    if k < 1:
        raise InvalidArgument(f"q_int needs k >= 1, got {k}")
    return QPoly._raw((1,) * k)


@lru_cache(maxsize=None)
def q_factorial(k: int) -> QPoly:
    if k < 0:
        raise InvalidArgument(f"q_factorial needs k >= 0, got {k}")
    if k == 0:
        return QPoly.const(1)
    return q_factorial(k - 1) * q_int(k)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial [n choose k]_q by exact division of q-factorials."""
    if n < 0 or k < 0 or k > n:
        raise InvalidArgument(f"gaussian_binomial needs 0 <= k <= n, got n={n}, k={k}")
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def evaluate(p: QPoly, x: int) -> int:
    """Exact Horner evaluation of ``p`` at the integer ``x``."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


Coeff = Union[int, QPoly]
_RINGS = ("int", "q")


class RingPoly:
    """Polynomial in ``t`` over ``int`` (ring ``"int"``) or ``QPoly`` (ring ``"q"``)."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable[Coeff] = (), ring: str = "int"):
        if ring not in _RINGS:
            raise InvalidArgument(f"unknown ring {ring!r}")
        cs = []
        for c in coeffs:
            if ring == "int":
                if isinstance(c, QPoly):
                    raise InvalidArgument("QPoly coefficient in an int-ring RingPoly")
                if not isinstance(c, int) or isinstance(c, bool):
                    raise InvalidArgument(f"bad coefficient {c!r}")
            else:
                if isinstance(c, int) and not isinstance(c, bool):
                    c = QPoly.const(c)
                elif not isinstance(c, QPoly):
                    raise InvalidArgument(f"bad coefficient {c!r}")
            cs.append(c)
        object.__setattr__(self, "coeffs", _trim(cs))
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("RingPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple, ring: str) -> "RingPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "ring", ring)
        return p

    @classmethod
    def one(cls, ring: str = "int") -> "RingPoly":
        return cls([1], ring)

    @classmethod
    def t(cls, ring: str = "int") -> "RingPoly":
        return cls([0, 1], ring)

    def zero_coeff(self) -> Coeff:
        return 0 if self.ring == "int" else QPoly._raw(())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Coeff:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.zero_coeff()

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, RingPoly):
            if not self.coeffs and not other.coeffs:
                return True
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def _check(self, other: "RingPoly"):
        if not isinstance(other, RingPoly):
            raise InvalidArgument(f"expected RingPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise InvalidArgument(f"mixed rings {self.ring!r} and {other.ring!r}")

    def __add__(self, other):
        if not isinstance(other, RingPoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return RingPoly._raw(_trim(out), self.ring)

    def __neg__(self):
        return RingPoly._raw(tuple(-c for c in self.coeffs), self.ring)

    def __sub__(self, other):
        if not isinstance(other, RingPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coeff) -> "RingPoly":
        """Multiply every coefficient by the ring element ``c``."""
        if self.ring == "int" and isinstance(c, QPoly):
            raise InvalidArgument("cannot scale an int-ring RingPoly by a QPoly")
        return RingPoly._raw(_trim(x * c for x in self.coeffs), self.ring)

    def __mul__(self, other):
        if isinstance(other, (int, QPoly)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, RingPoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RingPoly._raw((), self.ring)
        out = [self.zero_coeff()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return RingPoly._raw(_trim(out), self.ring)

    def __rmul__(self, other):
        if isinstance(other, (int, QPoly)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def shift(self, k: int) -> "RingPoly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return RingPoly._raw((self.zero_coeff(),) * k + self.coeffs, self.ring)

    def divmod(self, other: "RingPoly") -> tuple["RingPoly", "RingPoly"]:
        self._check(other)
        if not other:
            raise ZeroDivisionError("division by zero RingPoly")
        rem = list(self.coeffs)
        d = other.coeffs
        lead = d[-1]
        dd = len(d) - 1
        if len(rem) - 1 < dd:
            return RingPoly._raw((), self.ring), self
        quot = [self.zero_coeff()] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            qk = _exact_coeff_div(c, lead)
            quot[k - dd] = qk
            for j, y in enumerate(d):
                rem[k - dd + j] = rem[k - dd + j] - qk * y
        return RingPoly._raw(_trim(quot), self.ring), RingPoly._raw(_trim(rem), self.ring)

    def exact_div(self, other: "RingPoly") -> "RingPoly":
        quot, rem = self.divmod(other)
        if rem:
            raise DivisibilityError(f"({self}) is not divisible by ({other})")
        return quot

    def __floordiv__(self, other):
        return self.exact_div(other)

    def reversed_to(self, rank: int) -> "RingPoly":
        """t^rank * p(1/t); requires degree <= rank."""
        if self.degree > rank:
            raise InvalidArgument(f"degree {self.degree} exceeds {rank}")
        padded = list(self.coeffs) + [self.zero_coeff()] * (rank + 1 - len(self.coeffs))
        return RingPoly._raw(_trim(reversed(padded)), self.ring)

    def __call__(self, t):
        acc = self.zero_coeff()
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __repr__(self):
        return f"RingPoly({[c if isinstance(c, int) else list(c.coeffs) for c in self.coeffs]}, ring={self.ring!r})"

    def __str__(self):
        if self.ring == "int":
            return _format_terms(self.coeffs, "t")
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(f"({c})" if len([x for x in c.coeffs if x]) > 1 else str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c}){mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        if self.ring == "int":
            coeffs = [str(c) for c in self.coeffs]
        else:
            coeffs = [[str(x) for x in c.coeffs] for c in self.coeffs]
        return {"ring": self.ring, "var": "t", "coeffs": coeffs}

    @classmethod
    def from_json(cls, data: dict) -> "RingPoly":
        ring = data["ring"]
        if ring == "int":
            return cls((int(c) for c in data["coeffs"]), "int")
        return cls((QPoly(int(x) for x in c) for c in data["coeffs"]), "q")


def _exact_coeff_div(c: Coeff, lead: Coeff) -> Coeff:
    if isinstance(c, QPoly):
        return c.exact_div(lead)
    qk, r = divmod(c, lead)
    if r:
        raise DivisibilityError(f"{lead} does not divide {c}")
    return qk


def substitute_q(p: RingPoly, x: int) -> RingPoly:
    """Evaluate every ``QPoly`` coefficient at ``q = x``."""
    if p.ring == "int":
        return p
    return RingPoly((evaluate(c, x) for c in p.coeffs), "int")


def substitute_q_one(p: RingPoly) -> RingPoly:
    return substitute_q(p, 1)
