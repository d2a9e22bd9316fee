"""Kauffman bracket, Jones, colored Jones and Ohtsuki polynomials.

Values are computed either exactly in ``Z[t, t^-1]`` (pass ``level=None``) or
directly in the cyclotomic ring ``Z[t]/(phi_p)`` (pass a :class:`PrimeLevel`).
The second mode is what the p-bracket uses; it keeps cable computations
small because the bracket is evaluated modulo ``A^p - 1``.

Skein variable: ``A = t**SIGMA``. The value of ``SIGMA`` is fixed by the
calibration tests (0-framed right trefoil and Whitehead p-brackets).
"""

from __future__ import annotations

import threading
from collections.abc import Iterable, Sequence
from itertools import product

from .cyclotomic import CycElem, PrimeLevel, reduce
from .laurent import LaurentPoly, binom, quantum_int
from .link import LinkDiagram, cable, distant_union, sublinks, unlink
from .statesum import Budget, BudgetExceeded, CyclicRing, brute_force_bracket, sweep_bracket

__all__ = [
    "SIGMA", "Budget", "BudgetExceeded", "LinkCombo",
    "raw_bracket", "jones_J", "colored_jones", "cable_jones", "cable_phi",
    "ohtsuki_phi", "jones_from_phi", "pi_projection", "delta_involution",
    "set_budget", "get_budget", "clear_cache",
]

SIGMA = 1

_cache: dict = {}
_cache_lock = threading.Lock()
_budget = Budget(max_crossings=None, max_width=None)


def set_budget(budget: Budget) -> None:
    global _budget
    _budget = budget


def get_budget() -> Budget:
    return _budget


def _a_power(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(SIGMA * e)


def _lift(f: LaurentPoly, level: PrimeLevel | None):
    return f if level is None else reduce(f, level)


def _zero(level):
    return LaurentPoly.zero() if level is None else CycElem.zero(level)


def _one(level):
    return LaurentPoly.one() if level is None else CycElem.one(level)


def _memo(key, compute):
    with _cache_lock:
        if key in _cache:
            return _cache[key]
    val = compute()
    with _cache_lock:
        _cache[key] = val
    return val


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def raw_bracket(D: LinkDiagram, level: PrimeLevel | None = None, engine: str = "sweep"):
    """Uncorrected bracket: sum over smoothings of ``A^(#A - #B) delta^loops``.

    ``delta = -(t^2 + t^-2)`` and the empty diagram has bracket 1. Framings
    are ignored. ``engine="brute"`` uses the exhaustive state sum.
    """
    key = ("raw", D.key, None if level is None else level.p, engine)
    return _memo(key, lambda: _raw_bracket(D, level, engine))


def _raw_bracket(D, level, engine):
    N = D.n_crossings
    if engine == "brute":
        if N > 20:
            raise BudgetExceeded("brute-force state sum is limited to 20 crossings")
        poly = LaurentPoly((SIGMA * e, c) for e, c in brute_force_bracket(D.pd, D.free_loops).items())
        return _lift(poly, level)
    bits = 2 * N + D.n_components + 12
    if level is None:
        spread = N + 2 * (N + D.n_components) + 2
        ring = CyclicRing(2 * spread + 1, bits)
    else:
        spread = None
        ring = CyclicRing(level.p, bits)
    coeffs = ring.coefficients(sweep_bracket(D.pd, D.free_loops, ring, _budget))
    M = ring.M
    if spread is None:
        poly = LaurentPoly((SIGMA * i, c) for i, c in enumerate(coeffs) if c)
    else:
        poly = LaurentPoly((SIGMA * (i if i <= spread else i - M), c)
                           for i, c in enumerate(coeffs) if c)
    return _lift(poly, level)


def _writhe_factor(writhes: Iterable[int], level):
    """``prod (-A^3)^(-w)`` removing the blackboard framing from a bracket."""
    e = sum(writhes)
    return _lift(_a_power(-3 * e) * (-1) ** (e % 2), level)


def jones_J(L: LinkDiagram, level: PrimeLevel | None = None, engine: str = "sweep"):
    """Unnormalized Jones polynomial ``J_L = (-1)^l K_L`` of the underlying link.

    ``K_L`` is the bracket of a diagram whose components each have zero
    self-writhe; crossings between different components are kept, so the
    total linking number enters through the bracket itself.
    """
    raw = raw_bracket(L, level, engine)
    sign = -1 if L.n_components % 2 else 1
    return raw * _writhe_factor(L.self_writhes(), level) * sign


def _twist_eigenvalue_power(k: int, w: int, level):
    """``mu(k)^(-w)`` with ``mu(k) = (-1)^(k-1) A^(k^2 - 1)``: kink on a k-colored strand."""
    sign = -1 if ((k - 1) * w) % 2 else 1
    return _lift(_a_power(-(k * k - 1) * w) * sign, level)


def _chebyshev_terms(k: int):
    """``(j, coefficient)`` pairs of Eq. (6) for one positive color ``k``."""
    return [(j, (-1) ** j * binom(k - j - 1, j)) for j in range(k // 2 + 1) if binom(k - j - 1, j)]


def colored_jones(L: LinkDiagram, k: Sequence[int], level: PrimeLevel | None = None,
                  method: str = "fast"):
    """Colored Jones polynomial ``J_{L,k}``; odd in each color, zero if any color is 0.

    ``method="cable"`` sums ``J`` of zero-framed cables as in the defining
    formula. ``method="fast"`` evaluates blackboard cables only and corrects
    the framing on each colored component by the twist eigenvalue, which
    needs far fewer crossings.
    """
    k = [int(x) for x in k]
    if len(k) != L.n_components:
        raise ValueError("one color per component is required")
    if any(x == 0 for x in k):
        return _zero(level)
    sign = -1 if sum(1 for x in k if x < 0) % 2 else 1
    k = [abs(x) for x in k]
    key = ("colored", L.key, tuple(k), None if level is None else level.p, method)
    val = _memo(key, lambda: _colored_jones(L, k, level, method))
    return val * sign


def _colored_jones(L, k, level, method):
    total = _zero(level)
    for js in product(*(_chebyshev_terms(x) for x in k)):
        coef = 1
        for _, a in js:
            coef *= a
        c = tuple(x - 2 * j - 1 for x, (j, _) in zip(k, js))
        if method == "cable":
            term = cable_jones(L, c, level, method="cable")
        else:
            term = _blackboard_cable_bracket(L, c, level) * (-1) ** (sum(c) % 2)
        total = total + term * coef
    if method != "cable":
        for x, w in zip(k, L.self_writhes()):
            if w:
                total = total * _twist_eigenvalue_power(x, w, level)
    return total


def _blackboard_cable_bracket(L, c, level):
    if all(x == 1 for x in c):
        return raw_bracket(L, level)
    return raw_bracket(cable(L, c, zero_framed=False), level)


def _cable_multiplicity(c: int, k: int) -> int:
    """Coefficient of ``S_{k-1}`` in ``z^c`` (Clebsch-Gordan multiplicity)."""
    if k < 1 or (c - k + 1) % 2:
        return 0
    i = (c - k + 1) // 2
    return binom(c, i) - binom(c, i - 1)


def cable_jones(L: LinkDiagram, c: Sequence[int], level: PrimeLevel | None = None,
                method: str = "fast"):
    """``J`` of the zero-framed cable ``L^c``; zero if some ``c_i`` is negative."""
    c = tuple(int(x) for x in c)
    if any(x < 0 for x in c):
        return _zero(level)
    if method == "cable":
        key = ("cable", L.key, c, None if level is None else level.p)
        return _memo(key, lambda: jones_J(cable(L, c), level))
    total = _zero(level)
    for ks in product(*(range(1, x + 2) for x in c)):
        coef = 1
        for x, kk in zip(c, ks):
            coef *= _cable_multiplicity(x, kk)
            if not coef:
                break
        if coef:
            total = total + colored_jones(L, ks, level, method) * coef
    return total


def _bracket_two(sign: int, level):
    return _lift(quantum_int(2) * sign, level)


def ohtsuki_phi(L: LinkDiagram, level: PrimeLevel | None = None, method: str = "fast"):
    """``phi_L = sum over sublinks S of [-2]^(l - s) J_S``."""
    total = _zero(level)
    m2 = _bracket_two(-1, level)
    for idx, S in sublinks(L):
        total = total + _power(m2, L.n_components - len(idx), level) * jones_J(S, level)
    return total


def jones_from_phi(L: LinkDiagram, level: PrimeLevel | None = None):
    """Rebuild ``J_L = sum over sublinks S of [2]^(l - s) phi_S``."""
    total = _zero(level)
    q2 = _bracket_two(1, level)
    for idx, S in sublinks(L):
        total = total + _power(q2, L.n_components - len(idx), level) * ohtsuki_phi(S, level)
    return total


def cable_phi(L: LinkDiagram, c: Sequence[int], level: PrimeLevel | None = None,
              method: str = "fast"):
    """``phi`` of the zero-framed cable ``L^c``.

    Every sublink of ``L^c`` is a cable ``L^c'`` with ``c' <= c``, occurring
    ``prod binom(c_i, c'_i)`` times.
    """
    c = tuple(int(x) for x in c)
    if any(x < 0 for x in c):
        return _zero(level)
    key = ("cphi", L.key, c, None if level is None else level.p, method)

    def compute():
        m2 = _bracket_two(-1, level)
        total = _zero(level)
        for cp in product(*(range(x + 1) for x in c)):
            mult = 1
            for x, y in zip(c, cp):
                mult *= binom(x, y)
            term = cable_jones(L, cp, level, method) * mult
            total = total + term * _power(m2, sum(c) - sum(cp), level)
        return total

    return _memo(key, compute)


def _power(x, e: int, level):
    out = _one(level)
    for _ in range(e):
        out = out * x
    return out


# -- formal combinations ----------------------------------------------------

class LinkCombo:
    """Formal integer combination of link diagrams (framings ignored)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[LinkDiagram, int] | None = None):
        self.terms = {}
        for D, c in (terms or {}).items():
            self._add(D, c)

    def _add(self, D: LinkDiagram, c: int):
        D = D.with_framings([0] * D.n_components).renamed("")
        v = self.terms.get(D, 0) + c
        if v:
            self.terms[D] = v
        else:
            self.terms.pop(D, None)

    @classmethod
    def of(cls, L: LinkDiagram) -> LinkCombo:
        return cls({L: 1})

    def __add__(self, other: LinkCombo) -> LinkCombo:
        out = LinkCombo(self.terms)
        for D, c in other.terms.items():
            out._add(D, c)
        return out

    def scale(self, k: int) -> LinkCombo:
        return LinkCombo({D: c * k for D, c in self.terms.items()})

    def linear_map(self, f) -> LinkCombo:
        out = LinkCombo()
        for D, c in self.terms.items():
            for E, d in f(D).terms.items():
                out._add(E, c * d)
        return out

    def sign_by_components(self) -> LinkCombo:
        """Multiply each term by ``(-1)^(number of its components)``."""
        return LinkCombo({D: c * (-1) ** D.n_components for D, c in self.terms.items()})

    def evaluate(self, f, level: PrimeLevel | None = None):
        total = _zero(level)
        for D, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0].key)):
            total = total + f(D) * c
        return total

    def jones(self, level: PrimeLevel | None = None):
        return self.evaluate(lambda D: jones_J(D, level), level)

    def __len__(self):
        return len(self.terms)


def pi_projection(L: LinkDiagram) -> LinkCombo:
    """``sum over S < L of (-1)^(l - s) S|L``; ``S|L`` pads ``S`` with distant unknots."""
    out = LinkCombo()
    n = L.n_components
    for idx, S in sublinks(L):
        pad = n - len(idx)
        out._add(distant_union(S, unlink(pad)) if pad else S, (-1) ** pad)
    return out


def delta_involution(L: LinkDiagram) -> LinkCombo:
    """``sum over S < L of (-1)^s S``."""
    out = LinkCombo()
    for idx, S in sublinks(L):
        out._add(S, (-1) ** len(idx))
    return out

