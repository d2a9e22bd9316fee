import pytest

from qorders.cyclotomic import PrimeLevel, reduce
from qorders.laurent import LaurentPoly, T, order, quantum_int
from qorders.link import braid_closure, cable, catalog, distant_union, linking_matrix, mirror, unlink
from qorders.skein import (
    Budget,
    BudgetExceeded,
    LinkCombo,
    cable_jones,
    cable_phi,
    colored_jones,
    get_budget,
    delta_involution,
    jones_from_phi,
    jones_J,
    ohtsuki_phi,
    pi_projection,
    raw_bracket,
    set_budget,
)

V = T ** -4  # the textbook Jones variable
Q2 = quantum_int(2)


def from_textbook(L, jones_v):
    """Unnormalized J from a normalized Jones polynomial given as a function of ``v^(1/2)``."""
    lk = sum(linking_matrix(L)[i][j] for i in range(L.n_components)
             for j in range(i + 1, L.n_components))
    return (-1) ** (L.n_components - 1) * T ** (6 * lk) * Q2 * jones_v


def habiro_trefoil(N):
    """Cyclotomic expansion of the normalized N-colored Jones polynomial of the right trefoil."""
    total = LaurentPoly.zero()
    for n in range(N):
        term = V ** n
        for j in range(1, n + 1):
            term = term * (1 - V ** (N + j)) * (1 - V ** (j - N))
        total += term
    return total


def test_textbook_jones_polynomials():
    assert jones_J(catalog("trefoil_right")) == from_textbook(catalog("trefoil_right"),
                                                             V + V ** 3 - V ** 4)
    fig8 = braid_closure(3, [1, -2, 1, -2])
    assert jones_J(fig8) == from_textbook(fig8, V ** -2 - V ** -1 + 1 - V + V ** 2)
    sqrt_v = T ** -2
    hopf = catalog("hopf")
    assert jones_J(hopf) == from_textbook(hopf, -sqrt_v - sqrt_v ** 5)


def test_mirror_inverts_t():
    for name in ("trefoil_right", "whitehead", "borromean", "hopf"):
        L = catalog(name)
        J = jones_J(L)
        Jm = jones_J(mirror(L))
        assert Jm == LaurentPoly({-e: c for e, c in J.items()})
    assert jones_J(catalog("trefoil_left")) == jones_J(mirror(catalog("trefoil_right")))


def test_unknot_and_unlinks():
    assert jones_J(catalog("unknot")) == Q2
    for c in range(4):
        assert jones_J(unlink(c)) == Q2 ** c
    assert raw_bracket(unlink(0)) == 1


def test_split_union_is_multiplicative():
    a, b = catalog("trefoil_right"), catalog("hopf")
    assert jones_J(distant_union(a, b)) == jones_J(a) * jones_J(b)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_colored_trefoil_against_cyclotomic_expansion(N):
    want = habiro_trefoil(N) * quantum_int(N)
    K = catalog("trefoil_right")
    assert colored_jones(K, (N,)) == want
    assert colored_jones(K, (N,), method="cable") == want


def test_colored_unknot_and_hopf():
    for k in range(1, 7):
        assert colored_jones(catalog("unknot"), (k,)) == quantum_int(k)
    for j in range(1, 5):
        for k in range(1, 5):
            assert colored_jones(catalog("hopf"), (j, k)) == quantum_int(j * k)


def test_color_conventions():
    W = catalog("whitehead")
    assert colored_jones(W, (1, 3)) == quantum_int(3) * 1  # color 1 is the empty component
    assert colored_jones(W, (0, 2)) == 0
    assert colored_jones(W, (2, 2)) == jones_J(W)


@pytest.mark.parametrize("name, k", [("whitehead", (2, 3)), ("whitehead", (3, 3)),
                                     ("borromean", (2, 2, 3)), ("trefoil_left", (4,))])
def test_fast_and_cable_methods_agree(name, k):
    L = catalog(name)
    assert colored_jones(L, k) == colored_jones(L, k, method="cable")


def test_level_mode_agrees_with_exact_reduction():
    for p in (5, 7):
        lv = PrimeLevel(p)
        for name in ("whitehead", "borromean", "trefoil_right"):
            L = catalog(name)
            assert jones_J(L, lv) == reduce(jones_J(L), lv)
            k = (2,) * L.n_components
            assert colored_jones(L, k, lv) == reduce(colored_jones(L, k), lv)


def test_brute_engine_agrees():
    for name in ("whitehead", "borromean"):
        L = catalog(name)
        assert raw_bracket(L, engine="brute") == raw_bracket(L)


def test_cable_jones_of_zero_framed_cables():
    W = catalog("whitehead")
    C = cable(W, [2, 1])
    assert cable_jones(W, (2, 1)) == jones_J(C)
    assert cable_jones(W, (0, 0)) == 1


def test_phi_and_reconstruction():
    hopf = catalog("hopf")
    assert ohtsuki_phi(hopf) == quantum_int(4) - Q2 ** 2
    assert order(ohtsuki_phi(hopf)) == 2
    assert ohtsuki_phi(unlink(0)) == 1
    for name in ("whitehead", "borromean", "trefoil_left"):
        L = catalog(name)
        assert jones_from_phi(L) == jones_J(L)


def test_phi_of_split_union_vanishes_to_high_order():
    assert order(ohtsuki_phi(unlink(2))) >= 4
    assert ohtsuki_phi(unlink(1)) == 0  # J_unknot + [-2] J_empty
    tt = distant_union(catalog("trefoil_right"), catalog("trefoil_left"))
    assert order(ohtsuki_phi(tt)) >= 4


def test_cable_phi_matches_phi_of_the_cable():
    W = catalog("whitehead")
    assert cable_phi(W, (2, 1)) == ohtsuki_phi(cable(W, [2, 1]))
    assert cable_phi(W, (1, 1), method="cable") == ohtsuki_phi(W)


def test_projection_and_involution():
    B = catalog("borromean")
    P = pi_projection(B)
    # equal padded diagrams merge; the signs (-1)^(l-s) still sum to (1-1)^3
    assert 2 <= len(P) <= 8 and sum(P.terms.values()) == 0
    assert P.jones() == ohtsuki_phi(B)
    assert P.linear_map(pi_projection).jones() == P.jones()
    D = delta_involution(B)
    assert D.linear_map(delta_involution).jones() == jones_J(B)
    # X_L = sum over sublinks of Phi_S, multiplied through by [2]^l
    lhs = D.sign_by_components().evaluate(lambda S: ohtsuki_phi(S) * Q2 ** (3 - S.n_components))
    assert lhs == jones_J(B)


def test_link_combo_arithmetic():
    H = catalog("hopf")
    c = LinkCombo.of(H) + LinkCombo.of(H.with_framings([3, 1]))
    assert len(c) == 1 and c.terms[next(iter(c.terms))] == 2  # framings are ignored
    assert len(c + c.scale(-1)) == 0


def test_kink_invariance():
    base = jones_J(braid_closure(2, [1, 1, 1]))
    for word in ([1, 1, 1, 2], [1, 1, 1, -2], [2, 1, 1, 1, 2, -2]):
        assert jones_J(braid_closure(3, word)) == base


def test_budget_is_enforced():
    saved = get_budget()
    set_budget(Budget(max_crossings=10))
    try:
        with pytest.raises(BudgetExceeded):
            colored_jones(catalog("whitehead"), (3, 3), PrimeLevel(13))
    finally:
        set_budget(saved)
