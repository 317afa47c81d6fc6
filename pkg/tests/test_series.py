import random

import pytest

from qpartitions.series import LaurentSeries, NonInvertibleError, WindowError

LS = LaurentSeries


def geometric(order):
    # 1/(1-q) written out longhand
    return LS(0, (1,) * order, order)


def test_monomial_examples():
    one = LS.monomial(1, 0, 10)
    assert one.coeff(0) == 1 and all(one.coeff(e) == 0 for e in range(1, 10))
    m = LS.monomial(-1, 3, 10)
    assert m.coeff(3) == -1 and m.trunc_order == 10
    m = LS.monomial(2, -1, 5)
    assert m.coeff(-1) == 2 and m.min_exp == -1 and m.trunc_order == 5


def test_monomial_invalid_window():
    with pytest.raises(WindowError):
        LS.monomial(1, 5, 5)


def test_add_examples():
    one_plus_q = LS.from_coeffs([1, 1], 0, 4)
    one_minus_q = LS.from_coeffs([1, -1], 0, 4)
    s = one_plus_q.add(one_minus_q)
    assert s.coeff(0) == 2 and s.coeff(1) == 0

    a = LS.monomial(1, -1, 4)
    assert a.add(a.neg()).is_zero()

    a = LS.from_coeffs([1, -1, -1, 1], 0, 4)
    b = LS.from_coeffs([0, 1, 1], 0, 3)
    s = a.add(b)
    assert s.trunc_order == 3 and s.min_exp == 0
    assert [s.coeff(e) for e in range(3)] == [1, 0, 0]


def test_mul_examples():
    order = 12
    one_minus_q = LS.from_coeffs([1, -1], 0, order)
    geo = geometric(order)
    prod = one_minus_q.mul(geo)
    assert prod.coeff(0) == 1
    assert all(prod.coeff(e) == 0 for e in range(1, prod.trunc_order))
    assert prod.trunc_order == order  # window [0, N) retained

    # (1-q)(1-q^2)(1-q^3) expanded exactly
    f = LS.from_coeffs([1, -1], 0, 8)
    g = LS.from_coeffs([1, 0, -1], 0, 8)
    h = LS.from_coeffs([1, 0, 0, -1], 0, 8)
    prod = f.mul(g).mul(h).truncate(7)
    assert [prod.coeff(e) for e in range(7)] == [1, -1, -1, 0, 1, 1, -1]

    q_inv = LS.monomial(1, -1, 5)
    q = LS.monomial(1, 1, 5)
    assert q_inv.mul(q).coeff(0) == 1


def test_mul_window_rule():
    a = LS.from_coeffs([1, 2], min_exp=-1, order=4)   # window [-1, 4)
    b = LS.from_coeffs([3], min_exp=2, order=6)       # window [2, 6)
    prod = a.mul(b)
    assert prod.min_exp == 1
    assert prod.trunc_order == min(4 + 2, 6 + (-1))


def test_inverse_geometric():
    one_minus_q = LS.from_coeffs([1, -1], 0, 12)
    inv = one_minus_q.inverse(12)
    assert all(inv.coeff(e) == 1 for e in range(12))
    assert inv.coeff(7) == 1


def test_inverse_rejects_non_unit_and_zero():
    with pytest.raises(NonInvertibleError):
        LS.from_coeffs([2, 1], 0, 5).inverse(5)
    with pytest.raises(NonInvertibleError):
        LS.zero(5).inverse(5)


def test_inverse_needs_window():
    small = LS.from_coeffs([1, -1], 0, 2)  # exact polynomial, narrow window
    with pytest.raises(WindowError):
        small.inverse(10)
    assert small.extend(10).inverse(10).coeff(9) == 1


def test_inverse_negative_valuation():
    # q^2 * unit: inverse carries exponent -2
    a = LS.from_coeffs([1, 1], min_exp=2, order=12)
    inv = a.inverse(6)
    assert inv.min_exp == -2
    prod = a.mul(inv)
    assert prod.eq_to(LS.one(prod.trunc_order), prod.trunc_order)


def test_shift_examples():
    s = LS.from_coeffs([1, 1], 0, 4).shift(2)
    assert s.coeff(2) == 1 and s.coeff(3) == 1 and s.min_exp == 2
    assert LS.monomial(1, 3, 5).shift(-3).coeff(0) == 1
    a = LS.from_coeffs([7, -2, 5], -1, 4)
    assert a.shift(5).shift(-5) == a


def test_pos_nonpos_parts():
    a = LS.from_coeffs([-1, 2, 3], -1, 2)  # 2 - q^-1 + 3q
    pos = a.pos_part()
    non = a.nonpos_part()
    assert pos.coeff(1) == 3 and pos.coeff(0) == 0 and pos.coeff(-1) == 0
    assert non.coeff(-1) == -1 and non.coeff(0) == 2 and non.coeff(1) == 0
    assert pos.add(non) == a

    assert LS.monomial(1, -2, 3).pos_part().is_zero()
    assert LS.monomial(1, 5, 8).nonpos_part().is_zero()


def test_eq_to():
    geo = geometric(50)
    inv = LS.from_coeffs([1, -1], 0, 50).inverse(50)
    assert inv.eq_to(geo, 50)
    a = LS.from_coeffs([1, 1], 0, 4)
    b = LS.from_coeffs([1, -1], 0, 4)
    assert not a.eq_to(b, 2)
    with pytest.raises(WindowError):
        a.eq_to(b, 5)


def test_eq_ignores_leading_zero_padding():
    a = LS.from_coeffs([0, 0, 5], -2, 3)
    b = LS.from_coeffs([5], 0, 3)
    assert a.eq_to(b, 3)


def test_coeff_out_of_window():
    a = LS.from_coeffs([1, 2], 0, 2)
    with pytest.raises(WindowError):
        a.coeff(2)
    with pytest.raises(WindowError):
        a.coeff(-1)
    assert LS.zero(6).coeff(3) == 0


def _rand_series(rng, max_len=9):
    min_exp = rng.randint(-4, 3)
    length = rng.randint(0, max_len)
    coeffs = tuple(rng.randint(-5, 5) for _ in range(length))
    return LS(min_exp, coeffs, min_exp + length)


def test_ring_laws_random():
    rng = random.Random(20240811)
    for _ in range(500):
        a, b, c = (_rand_series(rng) for _ in range(3))
        assert a.add(b) == b.add(a)
        assert a.add(b).add(c) == a.add(b.add(c))
        assert a.mul(b) == b.mul(a)
        assert a.mul(b).mul(c) == a.mul(b.mul(c))
        assert a.mul(b.add(c)) == a.mul(b).add(a.mul(c))


def test_pos_nonpos_decomposition_random():
    rng = random.Random(7)
    for _ in range(500):
        a = _rand_series(rng)
        assert a.pos_part().add(a.nonpos_part()) == a


def test_inverse_law_random():
    rng = random.Random(99)
    for _ in range(500):
        v = rng.randint(-3, 3)
        n = rng.randint(1, 10)
        coeffs = [rng.choice((1, -1))] + [rng.randint(-4, 4) for _ in range(n + 4)]
        a = LS.from_coeffs(coeffs, min_exp=v)
        inv = a.inverse(n)
        prod = a.mul(inv)
        assert prod.eq_to(LS.one(prod.trunc_order), prod.trunc_order)


def test_window_soundness_recompute():
    rng = random.Random(5)
    for _ in range(200):
        # the same exact polynomials multiplied at two windows agree on the
        # smaller one
        a_coeffs = [rng.randint(-3, 3) for _ in range(6)]
        b_coeffs = [rng.randint(-3, 3) for _ in range(6)]
        small = LS.from_coeffs(a_coeffs, 0, 10).mul(LS.from_coeffs(b_coeffs, 0, 10))
        big = LS.from_coeffs(a_coeffs, 0, 25).mul(LS.from_coeffs(b_coeffs, 0, 25))
        assert big.eq_to(small, small.trunc_order)


def test_binomial_helpers_match_mul():
    rng = random.Random(12)
    for _ in range(200):
        a = _rand_series(rng)
        j = rng.randint(1, 4)
        c = rng.randint(-3, 3)
        binom = LS.from_coeffs([1] + [0] * (j - 1) + [-c], 0, a.trunc_order - a.min_exp + j + 1)
        via_mul = a.mul(binom).truncate(a.trunc_order)
        assert a.mul_binomial(c, j).eq_to(via_mul, via_mul.trunc_order)
        # divide then multiply restores the original on the window
        assert a.div_binomial(c, j).mul_binomial(c, j) == a
