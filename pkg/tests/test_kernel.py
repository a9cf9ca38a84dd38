import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import coeff_lists, polys
from eulerian_ode.kernel import (
    NEG_INF,
    ONE,
    ONE_MINUS_T,
    ZERO,
    IntPoly,
    IntSeries,
    binomial,
    geom_inverse_power,
    mul_kronecker,
    mul_schoolbook,
    poly_add,
    poly_eval_int,
    poly_mul,
    poly_pow,
    series_from_poly,
    series_mul,
)


def P(*c):
    return IntPoly(c)


def schoolbook_oracle(a, b):
    # deliberately naive: one dict entry per index pair
    out = {}
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out.get(i + j, 0) + x * y
    return IntPoly(tuple(out.get(k, 0) for k in range(max(out, default=-1) + 1)))


def pascal(n):
    rows = [[1]]
    for m in range(1, n + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, m)] + [1])
    return rows


class TestIntPoly:
    def test_canonical_zero(self):
        assert P(0, 0, 0) == ZERO
        assert ZERO.coeffs == ()
        assert ZERO.degree == NEG_INF
        assert ZERO.degree < -10**9

    def test_add(self):
        assert poly_add(P(1, 1), P(0, 1)) == P(1, 2)
        p = P(3, -2, 7)
        assert poly_add(p, ZERO) == p
        assert poly_add(P(1, 1), P(-1, -1)) == ZERO
        assert poly_add(P(1, 1), P(-1, -1)).coeffs == ()

    def test_mul(self):
        assert poly_mul(P(1, 1), P(1, -1)) == P(1, 0, -1)
        p = P(5, 0, -3, 2)
        assert poly_mul(p, ONE) == p

    def test_mul_against_schoolbook_oracle(self):
        p = P(1, 4, 1)
        q = poly_pow(ONE_MINUS_T, 4)
        assert poly_mul(p, q) == schoolbook_oracle(p.coeffs, q.coeffs)
        assert poly_mul(p, q) == P(1, 0, -9, 16, -9, 0, 1)

    def test_pow(self):
        assert poly_pow(ONE_MINUS_T, 2) == P(1, -2, 1)
        assert poly_pow(P(7, 3), 0) == ONE
        assert poly_pow(ZERO, 0) == ONE
        t_minus_1 = P(-1, 1)
        folded = ONE
        for _ in range(5):
            folded = poly_mul(folded, t_minus_1)
        assert poly_pow(t_minus_1, 5) == folded
        with pytest.raises(ValueError):
            poly_pow(ONE, -1)

    def test_eval(self):
        # sum of the Eulerian numbers 1, 4, 1 is 3!
        assert poly_eval_int(P(1, 4, 1), 1) == math.factorial(3) == 6
        assert poly_eval_int(P(9, 4, 1), 0) == 9
        assert poly_eval_int(ZERO, 12345) == 0

    def test_operators(self):
        t = P(0, 1)
        assert (1 + t) * (1 - t) == P(1, 0, -1)
        assert 3 * t == P(0, 3)
        assert (1 - t) ** 3 == P(1, -3, 3, -1)
        assert (1 + t)(2) == 3


class TestBinomial:
    def test_values(self):
        assert binomial(3, 1) == 3
        for n in range(10):
            assert binomial(n, 0) == 1
        assert binomial(4, -1) == 0
        assert binomial(4, 5) == 0

    def test_pascal_oracle(self):
        oracle = pascal(30)[30][15]
        assert oracle == 155117520
        assert binomial(30, 15) == oracle

    def test_pascal_rule(self):
        for n in range(1, 65):
            for k in range(n + 1):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)


class TestSeries:
    def test_from_poly(self):
        assert series_from_poly(P(1, 1), 3).coeffs == (1, 1, 0, 0)
        assert series_from_poly(ZERO, 2).coeffs == (0, 0, 0)
        assert series_from_poly(IntPoly.monomial(1, 5), 3).coeffs == (0, 0, 0, 0)

    def test_mul(self):
        a = IntSeries((1, 1, 1), 2)
        b = IntSeries((1, -1, 0), 2)
        assert series_mul(a, b).coeffs == (1, 0, 0)
        one = series_from_poly(ONE, 2)
        assert series_mul(a, one) == a

    def test_order_narrows(self):
        a = IntSeries((1, 2, 3, 4, 5), 4)
        b = IntSeries((1, 1, 1), 2)
        prod = series_mul(a, b)
        assert prod.order == 2
        assert (a + b).order == 2

    def test_bad_length(self):
        with pytest.raises(ValueError):
            IntSeries((1, 2), 2)

    def test_geom_inverse_power(self):
        assert geom_inverse_power(1, 3).coeffs == (1, 1, 1, 1)
        assert geom_inverse_power(2, 3).coeffs == (1, 2, 3, 4)
        g1 = geom_inverse_power(1, 8)
        assert geom_inverse_power(3, 8) == series_mul(series_mul(g1, g1), g1)
        with pytest.raises(ValueError):
            geom_inverse_power(0, 3)

    def test_geom_inverse_power_coefficients(self):
        for i in range(1, 8):
            s = geom_inverse_power(i, 20)
            assert s.coeffs == tuple(binomial(j + i - 1, i - 1) for j in range(21))

    @pytest.mark.parametrize("i", range(1, 13))
    def test_geom_inverse_power_inverts(self, i):
        K = 100
        prod = series_mul(geom_inverse_power(i, K), series_from_poly(poly_pow(ONE_MINUS_T, i), K))
        assert prod == series_from_poly(ONE, K)


# -- properties -------------------------------------------------------------


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@given(polys(), polys())
def test_degree_additive(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree
    else:
        assert (p * q).degree == NEG_INF


@given(coeff_lists(80), coeff_lists(80))
def test_kronecker_matches_schoolbook(a, b):
    assert mul_kronecker(a, b) == mul_schoolbook(a, b)


@given(coeff_lists(40, bound=3), coeff_lists(40, bound=3))
def test_kronecker_small_coefficients(a, b):
    # small magnitudes stress the borrow handling between packed digits
    assert mul_kronecker(a, b) == mul_schoolbook(a, b)


@given(polys(30), polys(30))
def test_poly_mul_matches_oracle(p, q):
    assert poly_mul(p, q) == schoolbook_oracle(p.coeffs, q.coeffs)


@given(polys(20, 2**40), polys(20, 2**40), st.integers(-(2**20), 2**20))
def test_eval_is_multiplicative(p, q, x):
    assert poly_eval_int(p * q, x) == poly_eval_int(p, x) * poly_eval_int(q, x)


@given(coeff_lists(60, 2**64), coeff_lists(60, 2**64), st.integers(0, 70))
def test_series_mul_matches_truncated_poly_mul(a, b, K):
    p, q = IntPoly(tuple(a)), IntPoly(tuple(b))
    want = series_from_poly(poly_mul(p, q), K)
    assert series_mul(series_from_poly(p, K), series_from_poly(q, K)) == want
