import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from defosc import DomainError, bracket_pq, bracket_q, bracket_sym

from conftest import assert_close


def geometric_sum(n, q):
    # independent route: [n]_q as the literal sum 1 + q + ... + q**(n-1)
    return sum(q**i for i in range(n))


class TestBracketQ:
    def test_empty_sum(self):
        assert bracket_q(0, 0.5) == 0.0
        assert bracket_q(0, 7.3) == 0.0

    def test_classical_limit_exact(self):
        assert bracket_q(5, 1.0) == 5.0

    def test_small_case_against_sum(self):
        # 1 + q + q**2 at q = 2
        assert bracket_q(3, 2.0) == 7.0

    @pytest.mark.parametrize("q", [0.3, 0.9, 1.2, 2.5])
    @pytest.mark.parametrize("n", [1, 2, 7, 20])
    def test_matches_geometric_sum(self, n, q):
        assert_close(bracket_q(n, q), geometric_sum(n, q), rel=1e-12)

    @given(st.integers(min_value=0, max_value=80),
           st.floats(min_value=0.2, max_value=2.0))
    def test_recursion(self, n, q):
        # [n+1]_q = 1 + q [n]_q
        assert_close(bracket_q(n + 1, q), 1.0 + q * bracket_q(n, q),
                     rel=1e-12, abs_tol=1e-12)

    @pytest.mark.parametrize("q", [0.0, -1.0, -0.5])
    def test_rejects_nonpositive(self, q):
        with pytest.raises(DomainError):
            bracket_q(3, q)

    def test_rejects_negative_level(self):
        with pytest.raises(DomainError):
            bracket_q(-1, 1.5)


class TestBracketPQ:
    def test_unit(self):
        assert bracket_pq(1, 0.7, 1.9) == 1.0

    def test_two_levels(self):
        # p + q at q = 1, p = 3
        assert bracket_pq(2, 1.0, 3.0) == 4.0

    def test_equal_parameter_limit(self):
        assert bracket_pq(3, 2.0, 2.0) == 12.0
        # cross-check the limit branch against a nearby generic evaluation
        assert_close(bracket_pq(3, 2.0, 2.0 + 1e-8), 12.0, rel=1e-7)

    @pytest.mark.parametrize("x", [0, 1, 2, 5, 12])
    def test_homogeneous_sum(self, x):
        q, p = 1.3, 0.8
        expected = sum(p ** (x - 1 - i) * q**i for i in range(x))
        assert_close(bracket_pq(x, q, p), expected, rel=1e-12, abs_tol=1e-15)

    @given(st.integers(min_value=0, max_value=40),
           st.floats(min_value=0.3, max_value=1.8),
           st.floats(min_value=0.3, max_value=1.8))
    def test_symmetric_in_q_p(self, x, q, p):
        assert bracket_pq(x, q, p) == bracket_pq(x, p, q)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            bracket_pq(2, -1.0, 1.0)
        with pytest.raises(DomainError):
            bracket_pq(2, 1.0, 0.0)


class TestBracketSym:
    def test_unit(self):
        assert bracket_sym(1, 0.4) == 1.0
        assert bracket_sym(1, cmath.exp(0.3j)) == pytest.approx(1.0)

    def test_real_case(self):
        # (q**2 - q**-2)/(q - 1/q) at q = 2
        assert bracket_sym(2, 2.0) == pytest.approx(2.5, rel=1e-15)

    def test_unit_circle_is_sine_ratio(self):
        theta = math.pi / 6
        value = bracket_sym(3, cmath.exp(1j * theta))
        assert value.imag == pytest.approx(0.0, abs=1e-12)
        assert value.real == pytest.approx(math.sin(3 * theta) / math.sin(theta), rel=1e-12)
        assert value.real == pytest.approx(2.0, rel=1e-12)

    def test_limits_at_plus_minus_one(self):
        assert bracket_sym(4, 1.0) == 4.0
        assert bracket_sym(4, -1.0) == -4.0  # x * q**(x-1) at q = -1
        assert bracket_sym(3, -1.0) == 3.0

    def test_inversion_symmetry(self):
        for q in (0.7, 1.6, cmath.exp(0.4j)):
            assert bracket_sym(5, q) == pytest.approx(bracket_sym(5, 1 / q), rel=1e-12)

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            bracket_sym(2, 0)
