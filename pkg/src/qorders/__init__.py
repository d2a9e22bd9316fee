"""Quantum SO(3) invariants of 3-manifolds and their p-orders, in exact arithmetic."""

from .cyclotomic import CycElem, NormalForm, PrimeLevel, normal_form, p_order, reduce
from .invariant import InvariantReport, p_bracket_direct, p_bracket_via_phi, tau_p
from .laurent import HPoly, LaurentPoly, T, order, quantum_int
from .link import LinkDiagram, catalog, catalog_names, load_link, parse_link
from .skein import Budget, BudgetExceeded, LinkCombo, colored_jones, jones_J, ohtsuki_phi

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "CycElem", "HPoly", "InvariantReport", "LaurentPoly",
    "LinkCombo", "LinkDiagram", "NormalForm", "PrimeLevel", "T", "catalog", "catalog_names",
    "colored_jones", "jones_J", "load_link", "normal_form", "ohtsuki_phi", "order",
    "p_bracket_direct", "p_bracket_via_phi", "p_order", "parse_link", "quantum_int",
    "reduce", "tau_p",
]
