"""Tests for the composition-sum family and its closed forms."""

import random
from fractions import Fraction

import pytest

from sepsets.binomials import binom_gen
from sepsets.omega_phi import (
    OmegaQuery,
    SingularTermError,
    compositions,
    gould_check,
    hwang_wei_check,
    omega_closed_1,
    omega_closed_2,
    omega_closed_3,
    omega_direct,
    phi_closed,
    phi_direct,
)

F = Fraction


def q(lambdas, mu, k):
    return OmegaQuery(tuple(F(v) for v in lambdas), F(mu), k)


def random_query(rng, m_max=4, k_max=5, k_min=0):
    m = rng.randint(1, m_max)
    k = rng.randint(k_min, k_max)
    lambdas = tuple(
        F(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(m)
    )
    mu = F(rng.randint(-20, 20), rng.randint(1, 20))
    return OmegaQuery(lambdas, mu, k)


def phi_singular(query):
    return any(
        lam_i + query.mu * k_i == 0
        for parts in compositions(query.k, query.m)
        for lam_i, k_i in zip(query.lambdas, parts)
    )


class TestOmegaDirect:
    def test_integer_instance(self):
        # the three compositions contribute 1 + 9 + 1
        assert omega_direct(q((4, 4), -1, 2)) == 11

    def test_single_row_collapses_to_one_binomial(self):
        for lam, mu, k in [(F(5, 2), F(3), 3), (F(-1), F(1, 2), 4)]:
            assert omega_direct(q((lam,), mu, k)) == binom_gen(lam + mu * k, k)

    def test_k_zero(self):
        assert omega_direct(q((F(1, 3), F(-2)), F(7), 0)) == 1

    def test_rejects_bad_query(self):
        with pytest.raises(ValueError):
            OmegaQuery((), F(1), 2)
        with pytest.raises(ValueError):
            OmegaQuery((F(1),), F(1), -1)


class TestOmegaClosedForms:
    def test_first_expansion_instance(self):
        # binom(7,2) - 2*binom(7,1) + 4 = 11
        assert omega_closed_1(q((4, 4), -1, 2)) == 11

    def test_second_expansion_instance(self):
        # 21 - 70 + 60 = 11
        assert omega_closed_2(q((4, 4), -1, 2)) == 11

    def test_third_expansion_printed_vs_corrected(self):
        query = q((1, 1), 1, 2)
        assert omega_direct(query) == 10
        assert omega_closed_3(query, "printed") == 20
        assert omega_closed_3(query, "corrected") == 10

    def test_third_rejects_k_zero(self):
        with pytest.raises(ValueError):
            omega_closed_3(q((1,), 1, 0))

    def test_depends_only_on_lambda_sum_at_fixed_m(self):
        a = q((F(7, 2), F(1, 2)), F(-2, 3), 3)
        b = q((F(-1), F(5)), F(-2, 3), 3)
        assert omega_direct(a) == omega_direct(b) == omega_closed_1(a)

    def test_randomized_agreement(self):
        rng = random.Random(31)
        for _ in range(100):
            query = random_query(rng)
            direct = omega_direct(query)
            assert omega_closed_1(query) == direct
            assert omega_closed_2(query) == direct
            if query.k >= 1:
                assert omega_closed_3(query, "corrected") == direct


class TestPhi:
    def test_weighted_sum(self):
        assert phi_direct(q((1, 1), 1, 2)) == 3

    def test_closed_form(self):
        assert phi_closed(q((1, 1), 1, 2)) == 3

    def test_k_zero(self):
        assert phi_closed(q((F(2, 3), F(1, 3)), F(-5), 0)) == 1

    def test_single_row(self):
        query = q((F(3, 2),), F(1, 4), 3)
        assert phi_direct(query) == phi_closed(query)

    def test_direct_reports_singular_composition(self):
        # lambda_1 + mu*k_1 = -2 + 2 = 0 in the composition (2, 0)
        with pytest.raises(SingularTermError, match="composition"):
            phi_direct(q((-2, 5), 1, 2))

    def test_closed_rejects_singular_total(self):
        with pytest.raises(SingularTermError):
            phi_closed(q((1, 1), -1, 2))

    def test_randomized_agreement(self):
        rng = random.Random(32)
        checked = 0
        while checked < 100:
            query = random_query(rng)
            if phi_singular(query) or query.lambda_total + query.mu * query.k == 0:
                continue
            checked += 1
            assert phi_direct(query) == phi_closed(query)


class TestHwangWei:
    def test_two_rows_of_three(self):
        assert hwang_wei_check((3, 3), 2) == (11, 11)

    def test_k_zero(self):
        assert hwang_wei_check((4, 1, 2), 0) == (1, 1)

    def test_single_row(self):
        assert hwang_wei_check((2,), 1) == (2, 2)

    def test_randomized(self):
        rng = random.Random(33)
        for _ in range(60):
            m = rng.randint(1, 4)
            n_list = tuple(rng.randint(0, 10) for _ in range(m))
            k = rng.randint(0, 6)
            lhs, rhs = hwang_wei_check(n_list, k)
            assert lhs == rhs, (n_list, k)


class TestGould:
    def test_unit_instance(self):
        assert gould_check(1, 1, 1, 2) == (3, 3)

    def test_n_zero(self):
        assert gould_check(F(5, 7), F(2), F(-1, 3), 0) == (1, 1)

    def test_c_zero_is_vandermonde(self):
        assert gould_check(1, 2, 0, 2) == (3, 3)

    def test_rejects_singular_denominator(self):
        with pytest.raises(SingularTermError):
            gould_check(-2, 5, 1, 3)  # a + c*k = 0 at k = 2
        with pytest.raises(SingularTermError):
            gould_check(1, 1, -1, 2)  # a + b + c*n = 0

    def test_randomized(self):
        rng = random.Random(34)
        checked = 0
        while checked < 60:
            a = F(rng.randint(-8, 8), rng.randint(1, 8))
            b = F(rng.randint(-8, 8), rng.randint(1, 8))
            c = F(rng.randint(-8, 8), rng.randint(1, 8))
            n = rng.randint(0, 6)
            if a + b + c * n == 0:
                continue
            if any(a + c * j == 0 or b + c * (n - j) == 0 for j in range(n + 1)):
                continue
            checked += 1
            lhs, rhs = gould_check(a, b, c, n)
            assert lhs == rhs, (a, b, c, n)
