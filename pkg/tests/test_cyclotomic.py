import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qorders.cyclotomic import (
    CycElem,
    NormalForm,
    PrimeLevel,
    bo_closed_form,
    div_h_power,
    from_normal_form,
    galois_conjugate,
    gauss_sum,
    gauss_sum_closed_form,
    invert_unit,
    legendre,
    normal_form,
    p_order,
    p_sum,
    pi_d,
    quantum_factorial,
    reduce,
    sum_s,
    sum_t,
    sum_u,
    sum_v,
    unit_u,
    unit_v_o,
    unknot_bracket_b,
)
from qorders.laurent import LaurentPoly, T, derivative, gauss_polynomial, mod_p_order, order, quantum_int

L3, L5, L7, L11, L13 = (PrimeLevel(p) for p in (3, 5, 7, 11, 13))
Z = T ** 2 - T ** -2


def test_level_validation():
    assert (L7.n, L7.m) == (2, 3)
    for bad in (1, 2, 4, 9, 15):
        with pytest.raises(ValueError, match="odd prime"):
            PrimeLevel(bad)


def test_reduce_examples():
    for lv in (L3, L5, L7, L11):
        phi = sum((T ** i for i in range(lv.p)), LaurentPoly.zero())
        assert reduce(phi, lv).is_zero()
    # by hand: t + 2t^2 = 3 + 5h + 2h^2, minus 2(3 + 3h + h^2) leaves -3 - h
    assert reduce(T + 2 * T ** -1, L3).reduced == (-3, -1)
    bo = reduce(3 + T ** 4 + T ** -4, L5)
    assert bo.reduced == (0, -5, -4, -1)
    assert p_order(bo) == 2


def test_normal_form_examples():
    nf = normal_form(reduce(T + 2 * T ** -1, L3))
    assert nf == NormalForm(1, (2, 1))
    nf5 = normal_form(reduce(3 + T ** 4 + T ** -4, L5))
    assert nf5.order == 2 and nf5.coeffs[0] == 6
    assert nf5.coeffs == (6, 9, 5, 1)
    assert normal_form(CycElem.one(L5)).order == 0
    with pytest.raises(ZeroDivisionError):
        normal_form(CycElem.zero(L5))


def test_p_order_examples():
    assert p_order(CycElem.zero(L7)) == math.inf
    assert p_order(reduce(T + 2 * T ** -1, L3)) == 1
    for lv in (L3, L5, L7, L11):
        assert p_order(CycElem.const(lv.p, lv)) == lv.p - 1


def test_factorial_identities():
    for lv in (L5, L7, L11):
        h = CycElem.h(lv)
        gfact = reduce(_product(gauss_polynomial(k) for k in range(1, lv.p)), lv)
        assert h ** (lv.p - 1) * gfact == lv.p
        z = reduce(Z, lv)
        assert z ** (lv.p - 1) * reduce(quantum_factorial(lv.p - 1), lv) == lv.p


def _product(fs):
    out = LaurentPoly.one()
    for f in fs:
        out = out * f
    return out


def test_galois_conjugation():
    x = reduce(3 * T ** 2 - T + 7, L7)
    assert galois_conjugate(x, 1) == x
    assert galois_conjugate(reduce(T, L7), 2) == reduce(T ** 2, L7)
    for lv in (L5, L7, L11):
        h = CycElem.h(lv)
        prod = CycElem.one(lv)
        for k in range(1, lv.p):
            prod = prod * galois_conjugate(h, k)
        assert prod == lv.p
    with pytest.raises(ValueError):
        galois_conjugate(x, 14)


def test_invert_unit():
    for lv in (L5, L7, L11):
        assert invert_unit(CycElem.one(lv)) == 1
        assert invert_unit(reduce(T, lv)) == reduce(T ** (lv.p - 1), lv)
        q2 = reduce(quantum_int(2), lv)
        assert q2 * invert_unit(q2) == 1
        # [k]^-1 = [k kbar]/[k] where k kbar = 1 mod p; for k = 2 the quotient is [kbar] in s^2
        kbar = pow(2, -1, lv.p)
        assert invert_unit(q2) == reduce(quantum_int(kbar).substitute_power(2), lv)
    with pytest.raises(ArithmeticError):
        invert_unit(CycElem.h(L7))


def test_div_h_power():
    for lv in (L5, L7):
        h = CycElem.h(lv)
        assert div_h_power(h * h, 1) == h
        gfact = reduce(_product(gauss_polynomial(k) for k in range(1, lv.p)), lv)
        assert div_h_power(CycElem.const(lv.p, lv), lv.p - 1) == gfact
        u = div_h_power(p_sum(0, 0, lv), 2 * lv.n)
        assert p_order(u) == 0
        assert u == unit_u(0, lv)
        with pytest.raises(ArithmeticError):
            div_h_power(h, 2)


def test_pi_d():
    assert pi_d(CycElem.one(L5), 0) == (1, 5)
    bo = p_sum(0, 0, L5)
    assert pi_d(bo, 1) == (0, 5)
    assert pi_d(bo, 2) == (1, 5)
    for d in range(p_order(bo)):
        assert pi_d(bo, d)[0] == 0
    assert pi_d(bo, 4) == (0, 25)


def test_gauss_sums():
    assert gauss_sum(1, L5) == reduce(1 + 2 * T + 2 * T ** 4, L5)
    assert gauss_sum(0, L7) == 7
    for lv in (L5, L7, L11, L13):
        for a in range(1, lv.p):
            g = gauss_sum(a, lv)
            assert g == gauss_sum_closed_form(a, lv)
            assert g * g == (-1) ** lv.m * lv.p


def test_legendre():
    assert legendre(1, 5) == 1
    assert legendre(0, 5) == 0
    assert legendre(2, 5) == -1
    assert [legendre(a, 7) for a in range(1, 7)] == [1, 1, -1, 1, -1, -1]


def test_p_sum_examples():
    for a in range(-3, 4):
        assert p_sum(a, 0, L3) == 1
        assert p_sum(a, -1, L7).is_zero()
    assert p_sum(0, 0, L5).reduced == (0, -5, -4, -1)
    assert p_sum(2, 1, L7) == p_sum(9, 1, L7)


def test_unknot_brackets():
    for lv in (L5, L7, L11, L13):
        for a in range(-3, 4):
            expected = 2 * lv.n if a % lv.p == 0 else lv.n
            assert p_order(unknot_bracket_b(a, lv)) == expected
        assert unknot_bracket_b(0, lv) == bo_closed_form(lv)
        assert unit_u(0, lv) == (-1) ** lv.n * unit_v_o(lv) ** 2
    assert unknot_bracket_b(2, L3) == 1


def test_sums_s_and_t():
    for lv in (L5, L7, L11):
        bo = unknot_bracket_b(0, lv)
        assert sum_s(1, lv) == bo
        assert sum_s(lv.p - 1, lv) == -bo
        for j in range(2, lv.p - 1):
            assert sum_s(j, lv).is_zero()
        assert p_order(sum_t(1, lv)) == lv.n
        assert p_order(sum_t(-1, lv)) == lv.n
        assert sum_t(1, lv) != sum_t(-1, lv)
        z = reduce(Z, lv)
        for a in (1, -1):
            lhs = 2 * z * reduce(T ** (2 * a), lv) * sum_t(a, lv)
            assert lhs == gauss_sum(2 * (a + 1), lv) - gauss_sum(2 * (a - 1), lv)
        assert sum_u(lv) == lv.m
        assert sum_v(lv) == lv.m * (lv.m + 1) // 2
        assert p_order(sum_u(lv)) == 0 and p_order(sum_v(lv)) == 0
    assert sum_s(2, L5).is_zero()
    assert sum_t(3, L7).is_zero()


@pytest.mark.parametrize("lv", [L5, L7, L11, L13], ids=lambda lv: f"p{lv.p}")
def test_p_sum_order_bounds(lv):
    for c in range(lv.n + 1):
        for a in range(lv.p):
            o = p_order(p_sum(a, c, lv))
            assert o >= lv.n - c
            if a == 0:
                assert o >= 2 * (lv.n - c)


def test_json_round_trip():
    x = reduce(T ** 3 - 5 * T + 11, L7)
    data = x.to_json()
    assert data == {"p": 7, "reduced": [str(v) for v in x.reduced]}
    assert CycElem.from_json(data) == x


def test_level_mismatch():
    with pytest.raises(ValueError):
        CycElem.one(L5) + CycElem.one(L7)


cyc_polys = st.dictionaries(st.integers(-6, 6), st.integers(-30, 30), max_size=5).map(LaurentPoly)
levels = st.sampled_from([L3, L5, L7, L11])


@given(cyc_polys, cyc_polys, levels)
def test_reduce_is_a_homomorphism(f, g, lv):
    assert reduce(f * g, lv) == reduce(f, lv) * reduce(g, lv)
    assert reduce(f + g, lv) == reduce(f, lv) + reduce(g, lv)


@given(cyc_polys, cyc_polys, levels)
def test_p_order_is_a_valuation(f, g, lv):
    x, y = reduce(f, lv), reduce(g, lv)
    assert p_order(x * y) == p_order(x) + p_order(y)
    assert p_order(x + y) >= min(p_order(x), p_order(y))


@given(cyc_polys, levels)
def test_normal_form_reassembles(f, lv):
    x = reduce(f, lv)
    if x.is_zero():
        return
    nf = normal_form(x)
    assert nf.coeffs[0] % lv.p != 0
    assert nf.order == p_order(x)
    assert from_normal_form(nf, lv) == x


@given(cyc_polys, cyc_polys, levels, st.integers(0, 25))
def test_pi_d_is_additive(f, g, lv, d):
    x, y = reduce(f, lv), reduce(g, lv)
    a, k = pi_d(x, d)
    b, _ = pi_d(y, d)
    assert pi_d(x + y, d) == ((a + b) % k, k)


@settings(max_examples=200)
@given(cyc_polys, levels)
def test_valuations_compare(f, lv):
    if f.is_zero():
        return
    o = order(f)
    op = p_order(reduce(f, lv))
    assert op >= o
    assert mod_p_order(f, lv.p) >= o
    for d in range(0, o + lv.p):
        assert (op >= d) == (mod_p_order(f, lv.p) >= d)
        if op >= d:
            assert p_order(reduce(derivative(f), lv)) >= d - 1
