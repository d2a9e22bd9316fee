import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qorders.laurent import (
    HPoly,
    LaurentPoly,
    T,
    binom,
    cabled_quantum_int,
    chebyshev_quantum_int,
    derivative,
    expand_at_one,
    framed_quantum_int,
    gauss_polynomial,
    mod_p_order,
    order,
    quantum_int,
)

H = T - 1


def lp(d):
    return LaurentPoly(d)


laurent = st.dictionaries(st.integers(-8, 8), st.integers(-20, 20), max_size=6).map(LaurentPoly)
nonzero_laurent = laurent.filter(lambda f: not f.is_zero())


def test_ring_basics():
    assert T * T ** -1 == 1
    assert (T + 1) * (T - 1) == lp({2: 1, 0: -1})
    assert quantum_int(2) * quantum_int(2) == lp({4: 1, 0: 2, -4: 1})
    assert LaurentPoly({1: 2, 3: -2}) + LaurentPoly({3: 2}) == 2 * T
    assert LaurentPoly({0: 0}).is_zero()
    assert (3 * T ** 2).exact_div_int(3) == T ** 2


def test_negative_power_of_non_monomial_rejected():
    with pytest.raises(ValueError):
        (T + 1) ** -1


def test_json_round_trip():
    f = lp({-3: -7, 0: 12345678901234567890, 5: 1})
    assert f.to_json() == [[-3, "-7"], [0, "12345678901234567890"], [5, "1"]]
    assert LaurentPoly.from_json(f.to_json()) == f


def test_derivative_examples():
    assert derivative(T ** 2) == 2 * T
    assert derivative(LaurentPoly.const(5)).is_zero()
    assert derivative(quantum_int(2)) == lp({1: 2, -3: -2})


def test_expand_at_one_examples():
    assert expand_at_one(T) == HPoly((1, 1))
    assert expand_at_one(T ** 2) == HPoly((1, 2, 1))
    g = expand_at_one(T + 2 * T ** -1)
    assert g.at_zero() == 3
    assert order(T + 2 * T ** -1) == 0


@given(st.dictionaries(st.integers(0, 8), st.integers(-20, 20), max_size=6))
def test_expand_at_one_is_substitution_for_polynomials(d):
    f = LaurentPoly(d)
    g = expand_at_one(f)
    back = LaurentPoly.zero()
    for k, c in enumerate(g.coeffs):
        back += c * H ** k
    assert back == f


def test_order_examples():
    assert order(LaurentPoly.zero()) == math.inf
    assert order(T ** 2 - 1) == 1
    phi_hopf = quantum_int(4) - quantum_int(2) ** 2
    assert order(phi_hopf) == 2


def test_mod_p_order_examples():
    assert mod_p_order(5 * H, 5) == math.inf
    assert mod_p_order(H, 5) == 1
    assert mod_p_order(H ** 2 + 5 * H, 5) == 2


def test_quantum_integers():
    assert quantum_int(0).is_zero()
    assert quantum_int(1) == 1
    assert quantum_int(2) == lp({2: 1, -2: 1})
    assert quantum_int(3) == lp({4: 1, 0: 1, -4: 1})
    assert quantum_int(-3) == -quantum_int(3)


def test_framed_quantum_integers():
    assert framed_quantum_int(0, 3) == quantum_int(3)
    assert framed_quantum_int(1, 2) == lp({5: 1, 1: 1})
    for a in range(-4, 5):
        assert framed_quantum_int(a, 1) == 1


def test_gauss_polynomials():
    assert gauss_polynomial(0).is_zero()
    assert gauss_polynomial(1) == 1
    assert gauss_polynomial(3) == lp({0: 1, 1: 1, 2: 1})
    with pytest.raises(ValueError):
        gauss_polynomial(-1)


def test_cabled_quantum_integers():
    assert cabled_quantum_int(5, -1).is_zero()
    assert cabled_quantum_int(2, 1) == 1
    assert cabled_quantum_int(3, 1) == 2 * quantum_int(2)
    for k in range(8):
        assert cabled_quantum_int(k, 0) == quantum_int(k)
        assert cabled_quantum_int(-k, 2) == -cabled_quantum_int(k, 2)


def test_cabled_quantum_int_expands_colored_in_cables():
    # sum_c [k,c) x^c = S_{k-1}([2] + x) for the Chebyshev S_n; compare at x = 1
    q2 = quantum_int(2)
    for k in range(1, 9):
        total = sum((cabled_quantum_int(k, c) for c in range(k)), LaurentPoly.zero())
        y = q2 + 1
        s_prev, s = LaurentPoly.zero(), LaurentPoly.one()
        for _ in range(k - 1):
            s_prev, s = s, y * s - s_prev
        assert total == s


def test_chebyshev_identity():
    for k in range(13):
        assert chebyshev_quantum_int(k) == quantum_int(k)


def test_three_term_recursion():
    for k in range(2, 13):
        assert quantum_int(k) == quantum_int(2) * quantum_int(k - 1) - quantum_int(k - 2)


def test_binomial_vanishing_conventions():
    assert binom(3, -1) == 0
    assert binom(3, 4) == 0
    assert binom(-1, 0) == 0
    assert binom(5, 2) == 10


@given(nonzero_laurent, nonzero_laurent)
def test_order_is_a_valuation(f, g):
    assert order(f * g) == order(f) + order(g)
    assert order(f + g) >= min(order(f), order(g))


@given(nonzero_laurent, st.integers(-10, 10))
def test_order_ignores_units(f, k):
    assert order(f.shift(k)) == order(f)
    assert order(-f) == order(f)


@settings(max_examples=50)
@given(nonzero_laurent, st.sampled_from([3, 5, 7]))
def test_mod_p_order_dominates_order(f, p):
    assert mod_p_order(f, p) >= order(f)
