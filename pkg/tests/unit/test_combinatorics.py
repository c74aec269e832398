"""Unit tests for the delta-power triangles and partition polynomials."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.combinatorics import (
    PartitionPoly,
    andre_triangle,
    clique_coefficient,
    delta_lambda_triangle,
    delta_power_from_f_sequence,
    delta_power_from_triangle,
    delta_triangle,
    f_sequence,
    f_sequence_closed_form,
    generalized_triangles,
    homogenize,
    integer_delta_power,
    known_sequences,
    mod_p_bridge,
    mod_p_collapse,
    quadratic_recursion_check,
    sequence_registry,
    tangent_reduced,
    triangle_matches_oracle,
    triangles_equal,
    weighted_factorial_identity,
    weighted_row_sums,
)
from src.ore import AlgebraContext, delta_power
from src.ore.element import re_equal
from src.utils.errors import PreconditionError


@pytest.mark.unit
class TestAndreTriangle:
    """Test the Andre array and its identities."""

    def setup_method(self):
        """Set up test fixtures."""
        self.A = andre_triangle(12)

    def test_first_rows(self):
        """Rows 1 to 4 start with the tabulated values."""
        assert self.A.row(0)[:4] == [1, 1, 1, 1]
        assert self.A.row(1)[:8] == [1, 4, 11, 26, 57, 120, 247, 502]
        assert self.A.row(2)[:6] == [4, 34, 180, 768, 2904, 10194]
        assert self.A.row(3)[:4] == [34, 496, 4288, 28768]
        assert self.A.row(4)[:1] == [496]

    def test_antidiagonals_are_euler_numbers(self):
        """Knight's-move antidiagonals sum to the zigzag numbers."""
        euler = sequence_registry("A000111")
        assert [self.A.antidiagonal_sum(n) for n in range(8)] == euler[1:9]

    def test_first_column_is_reduced_tangent(self):
        """A_(n,0) is the reduced tangent number."""
        assert [self.A.get(n, 0) for n in range(6)] == [tangent_reduced(n) for n in range(1, 7)]
        assert [tangent_reduced(n) for n in range(1, 6)] == sequence_registry("A002105")[:5]

    def test_quadratic_recursion(self):
        """The quadratic recursion reproduces every entry."""
        assert quadratic_recursion_check(andre_triangle(7)) == []

    @pytest.mark.parametrize("n", range(13))
    def test_weighted_factorial_identity(self, n):
        """n! = sum_j 2^(n-1-j) A_(j, n-1-2j)."""
        assert weighted_factorial_identity(n)

    def test_row_sums_for_a_two_are_factorials(self):
        """weighted_row_sums(2, n) lists 1!, ..., n!."""
        assert weighted_row_sums(2, 8) == [1, 2, 6, 24, 120, 720, 5040, 40320]

    def test_row_sums_for_a_four(self):
        """Base 4 matches the tabulated prefix."""
        assert weighted_row_sums(4, 5) == sequence_registry("A080795")[:5]

    def test_negative_bounds(self):
        """Bounds must be non-negative."""
        with pytest.raises(PreconditionError):
            andre_triangle(-1)

    def test_out_of_range_entries_are_zero(self):
        """Absent entries read as zero."""
        assert self.A.get(-1, 0) == 0
        assert self.A.get(0, -3) == 0


@pytest.mark.unit
class TestGeneralizedTriangles:
    """Test the T and U triangles for lambda = g^a."""

    def test_a_two_rows(self):
        """T for a = 2 has the tabulated rows."""
        T, _ = generalized_triangles(2, 4, 6)
        assert T.row(1)[:7] == [1, 5, 18, 58, 179, 543, 1636]
        assert T.row(2)[:2] == [5, 61]

    def test_a_one_is_andre(self):
        """T = A when a = 1."""
        T, _ = generalized_triangles(1, 6)
        A = andre_triangle(6)
        assert T.entries == A.entries

    def test_a_three_first_column(self):
        """The first column of T for a = 3 matches the tabulated sequence."""
        T, _ = generalized_triangles(3, 6)
        assert T.column(0)[1:6] == sequence_registry("A126151")

    @pytest.mark.parametrize("a", [2, 3, 4])
    def test_u_is_scaled_andre(self, a):
        """U_(n,k) = a^(n+k) A_(n,k)."""
        _, U = generalized_triangles(a, 8)
        A = andre_triangle(8)
        for n in range(9):
            for k in range(9 - n):
                assert U.get(n, k) == a ** (n + k) * A.get(n, k)

    @pytest.mark.parametrize("a", [1, 2, 3])
    def test_matches_integer_oracle(self, a):
        """Triangle entries are coefficients of delta^n in Z[x, g]."""
        T, U = generalized_triangles(a, 5, 8)
        assert triangle_matches_oracle(T, U, a, 8)

    def test_rejects_non_positive_a(self):
        """a must be positive."""
        with pytest.raises(PreconditionError):
            generalized_triangles(0, 3)

    def test_integer_oracle_small_values(self):
        """delta^2(g) = x^2 g + g^2 for lambda = g."""
        assert integer_delta_power("g", 2, 1) == {(2, 1): 1, (0, 2): 1}
        with pytest.raises(PreconditionError):
            integer_delta_power("y", 1, 1)


@pytest.mark.unit
class TestModPCollapse:
    """Test the reduction of the Andre array modulo p."""

    @pytest.mark.parametrize("p", [3, 5])
    def test_collapse_matches_delta_powers(self, p):
        """A_(j,k) mod p is the x^k g^(1+j) coefficient of delta^(k+2j)(g)."""
        ctx = AlgebraContext.create(p, 1, "g", m=1)
        A = andre_triangle(p, 2 * p)
        for n in range(2 * p):
            value = delta_power(ctx, "g", n)
            expected = mod_p_collapse(A, p, n)
            for j in range(n // 2 + 1):
                k = n - 2 * j
                got = int(value[k, (1 + j) % p]) if k < value.shape[0] else 0
                assert got == expected[k]

    def test_bridge_is_empty_for_p3(self):
        """C_(3,k) and C~_(1,k) agree mod 3 below column 2."""
        assert mod_p_bridge(3) == []


@pytest.mark.unit
class TestPartitionPolynomials:
    """Test F_n and the symbolic delta triangles."""

    def test_f_sequence_small(self):
        """F_2 = (2), F_3 = (3), F_4 = (4) + 3(2^2)."""
        assert str(f_sequence(2)) == "(2)"
        assert str(f_sequence(3)) == "(3)"
        assert f_sequence(4).coefficient([2, 2]) == 3
        assert f_sequence(4).coefficient([4]) == 1

    def test_coefficient_sums(self):
        """Coefficient sums count set partitions without singletons."""
        sums = [f_sequence(n).coefficient_sum() for n in range(2, 10)]
        assert sums == sequence_registry("A000296")[2:10]

    @pytest.mark.parametrize("n", range(2, 11))
    def test_closed_form(self, n):
        """The recursion agrees with the clique coefficients."""
        assert f_sequence(n) == f_sequence_closed_form(n)

    def test_clique_coefficient(self):
        """6! / (2!^3 3!) = 15 ways to split 6 points into pairs."""
        assert clique_coefficient([2, 2, 2]) == 15
        assert clique_coefficient([3, 3]) == 10

    def test_negative_index(self):
        """F_n needs n >= 0."""
        with pytest.raises(PreconditionError):
            f_sequence(-1)

    def test_homogenization(self):
        """Padding the delta(g) triangle gives the delta(lambda) triangle."""
        for n_max in (4, 6, 10):
            assert triangles_equal(homogenize(delta_triangle(n_max)), delta_lambda_triangle(n_max))

    def test_unit_poly(self):
        """The unit polynomial is the empty partition."""
        assert str(PartitionPoly.unit()) == "()"
        assert PartitionPoly().is_zero()

    @pytest.mark.parametrize("lam", ["g", "g - 1", "1 + g", "g^2 - g", "(t+1)*g + 2"])
    def test_triangle_evaluation_matches_delta(self, lam):
        """Evaluating C_(n,m) at lambda reproduces delta^n(g)."""
        ctx = AlgebraContext.create(3, 1, lam)
        for n in range(8):
            assert re_equal(delta_power_from_triangle(ctx, n), delta_power(ctx, "g", n))

    @pytest.mark.parametrize("lam", ["g", "g - 1", "1 + g"])
    def test_f_expansion_matches_delta(self, lam):
        """delta^n(g) = (sum_k C(n, k) F_k x^(n-k)) g."""
        ctx = AlgebraContext.create(5, 1, lam, m=2)
        for n in range(7):
            assert re_equal(delta_power_from_f_sequence(ctx, n), delta_power(ctx, "g", n))

    def test_rank_two_rejected(self, ctx_rank_two):
        """The triangle expansion describes r = 1."""
        with pytest.raises(PreconditionError):
            delta_power_from_triangle(ctx_rank_two, 2)


@pytest.mark.unit
class TestSequences:
    """Test the sequence registry."""

    def test_known(self):
        """Registry lists its ids."""
        assert "A000111" in known_sequences()

    def test_unknown(self):
        """Unknown ids raise PreconditionError."""
        with pytest.raises(PreconditionError):
            sequence_registry("A999999")

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=1, max_value=9))
    def test_tangent_reduced_is_first_column(self, n):
        """t_(2n-1)/2^(n-1) = A_(n-1, 0)."""
        assert tangent_reduced(n) == andre_triangle(n - 1, 0).get(n - 1, 0)
