"""Integer Laurent polynomials in ``t`` and the quantum-integer families.

Everything here is exact: coefficients are Python integers and no value is
ever evaluated numerically.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

INFINITY = math.inf


class LaurentPoly:
    """An element of Z[t, t^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so equality and hashing are
    coefficient-wise. Instances are treated as immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        c: dict[int, int] = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, v in items:
                if v:
                    e = int(e)
                    nv = c.get(e, 0) + int(v)
                    if nv:
                        c[e] = nv
                    else:
                        c.pop(e, None)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls.monomial(0, c)

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls._raw({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls._raw({0: 1})

    # -- inspection -------------------------------------------------------

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    @property
    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    @property
    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def at_one(self) -> int:
        return sum(self._c.values())

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            nv = c.get(e, 0) + v
            if nv:
                c[e] = nv
            else:
                del c[e]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero()
            return LaurentPoly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                if v in (1, -1):
                    return LaurentPoly.monomial(-e * (-k), v ** (-k))
            raise ValueError("only monomial units can be raised to negative powers")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """The image under ``t -> t**k``."""
        return LaurentPoly({e * k: v for e, v in self._c.items()})

    def exact_div_int(self, d: int) -> LaurentPoly:
        out = {}
        for e, v in self._c.items():
            q, r = divmod(v, d)
            if r:
                raise ArithmeticError(f"coefficient {v} not divisible by {d}")
            out[e] = q
        return LaurentPoly._raw(out)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(v))
            else:
                mono = ("" if abs(v) == 1 else f"{abs(v)}*") + ("t" if e == 1 else f"t^{e}")
            parts.append(("-" if v < 0 else "+") + mono)
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list[list]:
        """Sorted ``[exponent, "coefficient"]`` pairs."""
        return [[e, str(v)] for e, v in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        return cls((int(e), int(v)) for e, v in data)


T = LaurentPoly.monomial(1)


@dataclass(frozen=True)
class HPoly:
    """A polynomial in ``h = t - 1``; ``coeffs[d]`` multiplies ``h**d``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def at_zero(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def order(self):
        for d, x in enumerate(self.coeffs):
            if x:
                return d
        return INFINITY


def derivative(f: LaurentPoly) -> LaurentPoly:
    """Formal derivative with respect to ``t``."""
    return LaurentPoly((e - 1, e * v) for e, v in f.items() if e)


def _nonneg_coeffs(f: LaurentPoly) -> list[int]:
    """Dense coefficient list of ``t**m * f`` where ``m`` clears negative powers."""
    if f.is_zero():
        return []
    lo = min(0, f.min_degree)
    out = [0] * (f.max_degree - lo + 1)
    for e, v in f.items():
        out[e - lo] = v
    return out


def _divide_by_t_minus_one(c: list[int]) -> tuple[list[int], int]:
    """Synthetic division of ``sum c[i] t^i`` by ``t - 1``; returns (quotient, remainder)."""
    if not c:
        return [], 0
    q = [0] * (len(c) - 1)
    acc = 0
    for i in range(len(c) - 1, 0, -1):
        acc += c[i]
        q[i - 1] = acc
    return q, acc + c[0]


def expand_at_one(f: LaurentPoly) -> HPoly:
    """Taylor coefficients at ``t = 1`` of ``t**m * f`` (``m`` clears negative powers).

    For ``f`` without negative exponents this is exactly ``f(1 + h)``.
    """
    c = _nonneg_coeffs(f)
    out = []
    while c:
        c, r = _divide_by_t_minus_one(c)
        out.append(r)
        while c and c[-1] == 0:
            c.pop()
    return HPoly(tuple(out))


def order(f: LaurentPoly):
    """Multiplicity of ``t = 1`` as a zero of ``f``; infinite for ``f = 0``."""
    c = _nonneg_coeffs(f)
    if not c:
        return INFINITY
    d = 0
    while True:
        q, r = _divide_by_t_minus_one(c)
        if r:
            return d
        c = q
        d += 1


def mod_p_order(f: LaurentPoly, p: int):
    """Least ``d`` whose ``h**d`` Taylor coefficient is not divisible by ``p``."""
    c = _nonneg_coeffs(f)
    d = 0
    while c:
        c, r = _divide_by_t_minus_one(c)
        if r % p:
            return d
        while c and c[-1] == 0:
            c.pop()
        d += 1
    return INFINITY


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def quantum_int(k: int) -> LaurentPoly:
    """``[k] = (s^k - s^-k)/(s - s^-1)`` with ``s = t^2``."""
    if k < 0:
        return -quantum_int(-k)
    return LaurentPoly((2 * (k - 1 - 2 * i), 1) for i in range(k))


def framed_quantum_int(a: int, k: int) -> LaurentPoly:
    return quantum_int(k).shift(a * (k * k - 1))


def gauss_polynomial(k: int) -> LaurentPoly:
    """``<k> = (t^k - 1)/(t - 1)``, defined here for ``k >= 0``."""
    if k < 0:
        raise ValueError("Gauss polynomial needs k >= 0")
    return LaurentPoly((i, 1) for i in range(k))


def chebyshev_quantum_int(k: int) -> LaurentPoly:
    """``[k]`` for ``k >= 0`` as a polynomial in ``[2]`` (renormalized Chebyshev)."""
    q2 = quantum_int(2)
    total = LaurentPoly.zero()
    for j in range(k // 2 + 1):
        c = binom(k - j - 1, j)
        if c:
            total += (-1) ** j * c * q2 ** (k - 2 * j - 1)
    return total


def cabled_quantum_int(k: int, c: int) -> LaurentPoly:
    """``[k, c)``: the coefficient of the ``c``-cable in the ``k``-colored invariant."""
    if c < 0 or k == 0:
        return LaurentPoly.zero()
    if k < 0:
        return -cabled_quantum_int(-k, c)
    q2 = quantum_int(2)
    total = LaurentPoly.zero()
    for j in range(k // 2 + 1):
        a = binom(k - j - 1, j)
        b = binom(k - 2 * j - 1, c)
        if a and b:
            assert k - 2 * j - 1 - c >= 0
            total += (-1) ** j * a * b * q2 ** (k - 2 * j - 1 - c)
    return total
