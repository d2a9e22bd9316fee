"""p-brackets of framed links and the quantum SO(3) invariant ``tau_p``.

``tau_p(M) = <L> / |L|`` for ``M`` obtained by surgery on ``L``, where the
p-norm ``|L| = u h^(n l)`` with ``u`` a unit, so the division is exact unit
inversion followed by division by a power of ``h``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .cyclotomic import (
    CycElem,
    PrimeLevel,
    div_h_power,
    invert_unit,
    p_order,
    p_sum,
    pi_d,
    reduce,
)
from .laurent import framed_quantum_int, order
from .link import LinkDiagram, homology, is_diagonal, linking_matrix, signature_triple
from .skein import cable_phi, colored_jones, ohtsuki_phi

INF = math.inf


def _require_level(level) -> PrimeLevel:
    return level if isinstance(level, PrimeLevel) else PrimeLevel(int(level))


def p_bracket_direct(L: LinkDiagram, level, method: str = "fast") -> CycElem:
    """Sum over colorings ``1 <= k_i <= m`` of ``prod (a_i, k_i] * J_{L,k}``."""
    level = _require_level(level)
    total = CycElem.zero(level)
    framed = [[reduce(framed_quantum_int(a, k), level) for k in range(1, level.m + 1)]
              for a in L.framings]
    for ks in product(range(1, level.m + 1), repeat=L.n_components):
        coef = CycElem.one(level)
        for i, k in enumerate(ks):
            coef = coef * framed[i][k - 1]
        total = total + coef * colored_jones(L, ks, level, method)
    return total


def p_bracket_via_phi(L: LinkDiagram, level, method: str = "cable") -> CycElem:
    """Sum over cablings ``0 <= c_i <= n`` of ``prod (a_i | c_i) * phi_{L^c}``.

    By default the cable Ohtsuki polynomials are computed from genuinely
    cabled, twist-corrected diagrams, so this path shares no colored-Jones
    shortcut with :func:`p_bracket_direct`.
    """
    level = _require_level(level)
    total = CycElem.zero(level)
    sums = [[p_sum(a, c, level) for c in range(level.n + 1)] for a in L.framings]
    for cs in product(range(level.n + 1), repeat=L.n_components):
        coef = CycElem.one(level)
        for i, c in enumerate(cs):
            coef = coef * sums[i][c]
        if coef.is_zero():
            continue
        total = total + coef * cable_phi(L, cs, level, method)
    return total


def p_norm(L: LinkDiagram, level) -> CycElem:
    """``b_1^(l+) b_-1^(l-) (b_0 / h^n)^(l0)`` from the signature of the linking matrix."""
    level = _require_level(level)
    pos, neg, zero = signature_triple(linking_matrix(L))
    b1, bm1 = p_sum(1, 0, level), p_sum(-1, 0, level)
    b0 = div_h_power(p_sum(0, 0, level), level.n)
    out = b1 ** pos * bm1 ** neg * b0 ** zero
    expected = level.n * L.n_components
    if p_order(out) != expected:
        raise ArithmeticError(f"p-norm has order {p_order(out)}, expected {expected}")
    return out


@dataclass(frozen=True)
class BoundCheck:
    name: str
    required: Fraction
    observed: int | float
    passed: bool
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "required": str(self.required),
            "observed": _num(self.observed),
            "pass": self.passed,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class InvariantReport:
    p: int
    tau: CycElem
    order: int | float
    bracket_order: int | float
    b: int
    b_p: int
    torsion_order: int | float
    projections: tuple[tuple[int, int, int], ...]
    bounds: tuple[BoundCheck, ...] = field(default=())
    skipped: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "tau": self.tau.to_json(),
            "order": _num(self.order),
            "bracket_order": _num(self.bracket_order),
            "b": str(self.b),
            "b_p": str(self.b_p),
            "torsion_order": _num(self.torsion_order),
            "projections": [[str(d), str(v), str(m)] for d, v, m in self.projections],
            "bounds": [bc.to_json() for bc in self.bounds],
            "skipped_bounds": list(self.skipped),
        }


def _num(x) -> str:
    return "inf" if x == INF else str(x)


def tau_from_bracket(bracket: CycElem, L: LinkDiagram, level: PrimeLevel) -> CycElem:
    nl = level.n * L.n_components
    if bracket.is_zero():
        return CycElem.zero(level)
    if p_order(bracket) < nl:
        raise ArithmeticError("p-bracket order below n*l: integrality violated")
    u = div_h_power(p_norm(L, level), nl)
    return div_h_power(bracket, nl) * invert_unit(u)


def tau_p(L: LinkDiagram, level, depth: int | None = None, bounds: bool = True,
          method: str = "fast") -> InvariantReport:
    """Full report for the manifold obtained by surgery on ``L``."""
    level = _require_level(level)
    bracket = p_bracket_direct(L, level, method)
    tau = tau_from_bracket(bracket, L, level)
    ob = p_order(bracket)
    o = ob - level.n * L.n_components if ob != INF else INF
    if p_order(tau) != o:
        raise ArithmeticError("order of tau disagrees with o_p<L> - n*l")
    A = linking_matrix(L)
    hom = homology(A, level.p)
    if depth is None:
        depth = level.p - 1
    projections = tuple((d, *pi_d(tau, d)) for d in range(depth + 1))
    checks, skipped = (), ()
    if bounds:
        checks, skipped = verify_bounds(L, level, bracket_order=ob, order_M=o, hom=hom)
    return InvariantReport(level.p, tau, o, ob, hom.betti, hom.betti_mod_p, hom.torsion_order,
                           projections, tuple(checks), tuple(skipped))


def tau_p_d(L: LinkDiagram, level, d: int) -> tuple[int, int]:
    level = _require_level(level)
    tau = tau_from_bracket(p_bracket_direct(L, level), L, level)
    return pi_d(tau, d)


def _check(name, required, observed, note=""):
    required = Fraction(required)
    return BoundCheck(name, required, observed, observed >= required, note)


def verify_bounds(L: LinkDiagram, level, bracket_order=None, order_M=None, hom=None,
                  phi_order=None):
    """Evaluate every applicable lower bound; returns ``(checks, skipped notices)``."""
    level = _require_level(level)
    n, ell, p = level.n, L.n_components, level.p
    if bracket_order is None:
        bracket_order = p_order(p_bracket_direct(L, level))
    if order_M is None:
        order_M = bracket_order - n * ell if bracket_order != INF else INF
    if hom is None:
        hom = homology(linking_matrix(L), p)
    checks, skipped = [], []
    d = L.milnor_degree
    divisible = sum(1 for a in L.framings if a % p == 0)
    if d is None:
        skipped.append("bracket_order_milnor: Milnor degree unknown")
    else:
        ratio = Fraction(1) if d == INF else Fraction(d - 1, d + 1)
        checks.append(_check("bracket_order_milnor", (ell + ratio * divisible) * n, bracket_order))
    diagonal = is_diagonal(L)
    if diagonal and divisible > 0:
        checks.append(_check("bracket_order_diagonal", (ell + 1) * n, bracket_order))
    checks.append(_check("betti_bound", Fraction(hom.betti_mod_p * n, 3), order_M))
    if hom.betti_mod_p > 0:
        checks.append(_check("positive_betti_bound", n, order_M))
    if ell:
        if phi_order is None:
            phi_order = order(ohtsuki_phi(L))
        if d is None:
            skipped.append("phi_order_milnor: Milnor degree unknown")
        else:
            req = Fraction(2 * ell) if d == INF else Fraction(2 * ell * d, d + 1)
            checks.append(_check("phi_order_milnor", req, phi_order))
        if diagonal and L.max_cabling_index is not None:
            checks.append(_check("phi_order_cabling", ell + L.max_cabling_index, phi_order))
        elif diagonal:
            skipped.append("phi_order_cabling: maximum cabling index unknown")
    if L.h1_bordant_to_unlink:
        checks.append(_check("h1_bordism_bound", Fraction(hom.betti * n, 2), order_M))
    return checks, skipped


__all__ = [
    "p_bracket_direct", "p_bracket_via_phi", "p_norm", "tau_p", "tau_p_d",
    "tau_from_bracket", "verify_bounds", "InvariantReport", "BoundCheck",
]
