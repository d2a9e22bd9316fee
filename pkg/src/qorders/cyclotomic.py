"""Cyclotomic integers Z[t]/(phi_p) in the ``h = t - 1`` basis.

An element is stored by its reduced form: the unique integer polynomial in
``h`` of degree at most ``p - 2`` representing it. The prime ideal over
``p`` is generated by ``h``, and :func:`p_order` is the corresponding
valuation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .laurent import (
    INFINITY,
    LaurentPoly,
    binom,
    cabled_quantum_int,
    framed_quantum_int,
    quantum_int,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def vp(x: int, p: int):
    """p-adic valuation of an integer (infinite at 0)."""
    if x == 0:
        return INFINITY
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def legendre(a: int, p: int) -> int:
    """Legendre symbol ``(a|p)`` for an odd prime ``p``."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


@dataclass(frozen=True)
class PrimeLevel:
    p: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and self.p >= 3 and is_prime(self.p)):
            raise ValueError(f"p must be an odd prime, got {self.p!r}")

    @property
    def n(self) -> int:
        return (self.p - 3) // 2

    @property
    def m(self) -> int:
        return (self.p - 1) // 2

    @cached_property
    def phi_h(self) -> tuple[int, ...]:
        """Cyclotomic polynomial in ``h``: ``p + C(p,2) h + ... + h^(p-1)``."""
        p = self.p
        return tuple(binom(p, k + 1) for k in range(p))

    @cached_property
    def _t_to_h(self) -> tuple[tuple[int, ...], ...]:
        # row e: coefficients of (1 + h)^e, e < p
        return tuple(tuple(binom(e, d) for d in range(e + 1)) for e in range(self.p))

    @cached_property
    def _h_to_t(self) -> tuple[tuple[int, ...], ...]:
        # row d: coefficients in t of (t - 1)^d
        return tuple(
            tuple((-1) ** (d - e) * binom(d, e) for e in range(d + 1)) for d in range(self.p)
        )

    def __repr__(self):
        return f"PrimeLevel(p={self.p})"


def _reduce_h(c: list[int], level: PrimeLevel) -> tuple[int, ...]:
    """Reduce a polynomial in ``h`` modulo the (monic) cyclotomic polynomial, top-down."""
    deg = level.p - 1
    phi = level.phi_h
    c = list(c)
    for top in range(len(c) - 1, deg - 1, -1):
        q = c[top]
        if q:
            off = top - deg
            for i in range(deg + 1):
                c[off + i] -= q * phi[i]
    c = c[:deg] + [0] * max(0, deg - len(c))
    return tuple(c)


class CycElem:
    """An element of Z[t, t^-1]/(phi_p), stored as its reduced form."""

    __slots__ = ("level", "reduced")

    def __init__(self, level: PrimeLevel, reduced):
        reduced = tuple(int(x) for x in reduced)
        if len(reduced) != level.p - 1:
            raise ValueError("reduced form must have length p - 1")
        self.level = level
        self.reduced = reduced

    @classmethod
    def from_h_poly(cls, coeffs, level: PrimeLevel) -> CycElem:
        return cls(level, _reduce_h(list(coeffs), level))

    @classmethod
    def const(cls, c: int, level: PrimeLevel) -> CycElem:
        return cls(level, (c,) + (0,) * (level.p - 2))

    @classmethod
    def one(cls, level: PrimeLevel) -> CycElem:
        return cls.const(1, level)

    @classmethod
    def zero(cls, level: PrimeLevel) -> CycElem:
        return cls.const(0, level)

    @classmethod
    def h(cls, level: PrimeLevel) -> CycElem:
        return cls.from_h_poly([0, 1], level)

    def is_zero(self) -> bool:
        return not any(self.reduced)

    def _check(self, other) -> CycElem | None:
        if isinstance(other, int):
            return CycElem.const(other, self.level)
        if isinstance(other, LaurentPoly):
            return reduce(other, self.level)
        if not isinstance(other, CycElem):
            return None
        if other.level != self.level:
            raise ValueError(f"level mismatch: p={self.level.p} vs p={other.level.p}")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return CycElem(self.level, (a + b for a, b in zip(self.reduced, o.reduced)))

    __radd__ = __add__

    def __neg__(self):
        return CycElem(self.level, (-a for a in self.reduced))

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return CycElem(self.level, (a - b for a, b in zip(self.reduced, o.reduced)))

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycElem(self.level, (a * other for a in self.reduced))
        o = self._check(other)
        if o is None:
            return NotImplemented
        x, y = self.reduced, o.reduced
        prod = [0] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] += a * b
        return CycElem(self.level, _reduce_h(prod, self.level))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return invert_unit(self) ** (-k)
        result = CycElem.one(self.level)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = self._check(other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.level == other.level and self.reduced == other.reduced

    def __hash__(self):
        return hash((self.level.p, self.reduced))

    def __repr__(self):
        return f"CycElem(p={self.level.p}, reduced={list(self.reduced)})"

    def to_laurent(self) -> LaurentPoly:
        """A representative in Z[t] of degree at most ``p - 2``."""
        rows = self.level._h_to_t
        out: dict[int, int] = {}
        for d, x in enumerate(self.reduced):
            if x:
                for e, c in enumerate(rows[d]):
                    out[e] = out.get(e, 0) + x * c
        return LaurentPoly(out)

    def to_json(self) -> dict:
        return {"p": self.level.p, "reduced": [str(x) for x in self.reduced]}

    @classmethod
    def from_json(cls, data) -> CycElem:
        return cls(PrimeLevel(int(data["p"])), [int(x) for x in data["reduced"]])


def reduce(f: LaurentPoly, level: PrimeLevel) -> CycElem:
    """Image of ``f`` in the cyclotomic ring: fold ``t^p = 1``, set ``t = 1 + h``, reduce."""
    p = level.p
    folded = [0] * p
    for e, v in f.items():
        folded[e % p] += v
    rows = level._t_to_h
    hc = [0] * p
    for e, v in enumerate(folded):
        if v:
            for d, c in enumerate(rows[e]):
                hc[d] += v * c
    return CycElem(level, _reduce_h(hc, level))


def p_order(x: CycElem):
    """``min_d((p-1) v_p(x_d) + d)`` over the reduced form; infinite at zero."""
    p = x.level.p
    best = INFINITY
    for d, c in enumerate(x.reduced):
        if c:
            best = min(best, (p - 1) * vp(c, p) + d)
    return best


@dataclass(frozen=True)
class NormalForm:
    """``sum(coeffs[d] * h^(order + d))`` with ``coeffs[0]`` prime to ``p``."""

    order: int
    coeffs: tuple[int, ...]

    def to_json(self) -> dict:
        return {"order": str(self.order), "coeffs": [str(c) for c in self.coeffs]}


def normal_form(x: CycElem) -> NormalForm:
    """Bottom-up normal form: shift out the largest power of ``h`` dividing ``x``."""
    k0 = p_order(x)
    if k0 == INFINITY:
        raise ZeroDivisionError("zero has infinite p-order and no normal form")
    y = div_h_power(x, k0)
    assert y.reduced[0] % x.level.p
    return NormalForm(k0, y.reduced)


def from_normal_form(nf: NormalForm, level: PrimeLevel) -> CycElem:
    return CycElem.from_h_poly([0] * nf.order + list(nf.coeffs), level)


def galois_conjugate(x: CycElem, k: int) -> CycElem:
    """Image under the automorphism ``t -> t^k``."""
    if k % x.level.p == 0:
        raise ValueError("k must be prime to p")
    return reduce(x.to_laurent().substitute_power(k % x.level.p), x.level)


@lru_cache(maxsize=None)
def _h_cofactor(p: int) -> CycElem:
    """``prod_{k=2}^{p-1} (t^k - 1)``, whose product with ``h`` is ``p``."""
    level = PrimeLevel(p)
    acc = CycElem.one(level)
    for k in range(2, p):
        acc = acc * reduce(LaurentPoly({k: 1, 0: -1}), level)
    return acc


def div_h_power(x: CycElem, m: int) -> CycElem:
    """Exact quotient ``x / h^m``; requires ``p_order(x) >= m``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0 or x.is_zero():
        return x
    if p_order(x) < m:
        raise ArithmeticError(f"p-order {p_order(x)} < {m}: not divisible by h^{m}")
    p = x.level.p
    y = x * _h_cofactor(p) ** m
    pm = p ** m
    out = []
    for c in y.reduced:
        q, r = divmod(c, pm)
        if r:
            raise ArithmeticError("non-integral quotient in division by a power of h")
        out.append(q)
    return CycElem(x.level, out)


def norm(x: CycElem) -> int:
    acc = x
    for k in range(2, x.level.p):
        acc = acc * galois_conjugate(x, k)
    assert not any(acc.reduced[1:])
    return acc.reduced[0]


def invert_unit(u: CycElem) -> CycElem:
    """Inverse of a unit via the product of its nontrivial Galois conjugates."""
    p = u.level.p
    conj = CycElem.one(u.level)
    for k in range(2, p):
        conj = conj * galois_conjugate(u, k)
    nm = u * conj
    if any(nm.reduced[1:]) or nm.reduced[0] not in (1, -1):
        raise ArithmeticError(f"not a unit (norm {nm.reduced[0] if not any(nm.reduced[1:]) else nm})")
    v = conj * nm.reduced[0]
    if u * v != CycElem.one(u.level):
        raise ArithmeticError("unit inversion failed verification")
    return v


def pi_d(x: CycElem, d: int) -> tuple[int, int]:
    """Projection to Z/p^k: the reduced coefficient of ``h^(d mod (p-1))`` mod ``p^k``.

    Returns ``(residue, modulus)`` with ``k = 1 + d // (p - 1)``.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    p = x.level.p
    k = 1 + d // (p - 1)
    mod = p ** k
    return x.reduced[d % (p - 1)] % mod, mod


# -- the closed-form sums -------------------------------------------------

def gauss_sum(a: int, level: PrimeLevel) -> CycElem:
    """``G_a = sum_{k=1}^p t^(a k^2)``; equals ``p`` when ``p | a``."""
    p = level.p
    return reduce(LaurentPoly((a * k * k % p, 1) for k in range(1, p + 1)), level)


def _z() -> LaurentPoly:
    return LaurentPoly({2: 1, -2: -1})


def quantum_factorial(k: int) -> LaurentPoly:
    acc = LaurentPoly.one()
    for i in range(1, k + 1):
        acc = acc * quantum_int(i)
    return acc


def gauss_sum_closed_form(a: int, level: PrimeLevel) -> CycElem:
    """``(a|p) (-1)^m [m]! z^m`` with ``z = s - s^-1``."""
    m = level.m
    f = quantum_factorial(m) * _z() ** m * (legendre(a, level.p) * (-1) ** m)
    return reduce(f, level)


def p_sum_laurent(a: int, c: int, p: int) -> LaurentPoly:
    """The p-sum ``(a|c) = sum_{k=1}^{(p-1)/2} (a,k] [k,c)`` in Z[t, t^-1]."""
    total = LaurentPoly.zero()
    for k in range(1, (p - 1) // 2 + 1):
        total += framed_quantum_int(a, k) * cabled_quantum_int(k, c)
    return total


@lru_cache(maxsize=None)
def p_sum(a: int, c: int, level: PrimeLevel) -> CycElem:
    """``(a|c)`` evaluated in Z[t, t^-1] and then reduced; depends on ``a`` mod ``p``."""
    return reduce(p_sum_laurent(a % level.p, c, level.p), level)


def unknot_bracket_b(a: int, level: PrimeLevel) -> CycElem:
    """``b_a``: the p-bracket of the ``a``-framed unknot, i.e. ``(a|0)``."""
    return p_sum(a, 0, level)


def bo_closed_form(level: PrimeLevel) -> CycElem:
    """``(-1)^n [m]!^2 z^(2n)``."""
    n, m = level.n, level.m
    return reduce(quantum_factorial(m) ** 2 * _z() ** (2 * n) * (-1) ** n, level)


def unknot_order_multiplier(a: int, p: int) -> int:
    return 2 if a % p == 0 else 1


def unit_u(a: int, level: PrimeLevel) -> CycElem:
    """The unit ``b_a / h^(r n)`` with ``r = 2`` if ``p | a`` else ``1``."""
    r = unknot_order_multiplier(a, level.p)
    return div_h_power(unknot_bracket_b(a, level), r * level.n)


def unit_v_o(level: PrimeLevel) -> CycElem:
    """``[m]! (z/h)^n``; its square times ``(-1)^n`` is ``u_o``."""
    zh = div_h_power(reduce(_z(), level), 1)
    return reduce(quantum_factorial(level.m), level) * zh ** level.n


def sum_s(j: int, level: PrimeLevel) -> CycElem:
    """``s_j = sum_k [jk][k]`` over ``1 <= k <= (p-1)/2``."""
    total = LaurentPoly.zero()
    for k in range(1, level.m + 1):
        total += quantum_int(j * k) * quantum_int(k)
    return reduce(total, level)


def sum_t(a: int, level: PrimeLevel) -> CycElem:
    """``t_a = sum_k s^(a(k^2-1)) [k^2]`` over ``1 <= k <= (p-1)/2``."""
    total = LaurentPoly.zero()
    for k in range(1, level.m + 1):
        total += quantum_int(k * k).shift(2 * a * (k * k - 1))
    return reduce(total, level)


def sum_u(level: PrimeLevel) -> CycElem:
    return CycElem.const(level.m, level)


def sum_v(level: PrimeLevel) -> CycElem:
    return CycElem.const(level.m * (level.m + 1) // 2, level)


def order_str(o) -> str:
    return "inf" if o == INFINITY else str(int(o))


def is_finite(o) -> bool:
    return not (isinstance(o, float) and math.isinf(o))
