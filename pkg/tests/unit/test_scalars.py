"""Unit tests for finite-field arithmetic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.scalars.field import (
    FieldParams,
    build_field,
    element_from_vector,
    element_to_vector,
    field_from_params,
    field_literal,
    field_ops,
    field_params,
    format_element,
    fq_generator,
    inv,
    pth_root,
    sqrt,
)
from src.utils.errors import FieldError, PreconditionError


@pytest.mark.unit
class TestBuildField:
    """Test field construction and parameters."""

    def test_prime_field(self):
        """F_p has order p and the trivial modulus."""
        F = build_field(5)
        assert F.order == 5
        assert field_params(F) == FieldParams(5, 1, (0, 1))

    def test_extension_uses_conway_polynomial(self):
        """Default modulus of F_9 is monic of degree 2."""
        F = build_field(3, 2)
        params = field_params(F)
        assert F.order == 9
        assert params.m == 2
        assert params.modulus[-1] == 1
        assert len(params.modulus) == 3

    def test_fields_are_cached(self):
        """Building the same field twice returns the same class."""
        assert build_field(3, 2) is build_field(3, 2)

    def test_params_roundtrip(self):
        """field_from_params rebuilds the same field."""
        F = build_field(7, 2)
        assert field_from_params(FieldParams.from_json(field_params(F).to_json())) is F

    @pytest.mark.parametrize("p", [1, 2, 4, 9, 15])
    def test_rejects_non_odd_primes(self, p):
        """Characteristic must be an odd prime."""
        with pytest.raises(FieldError):
            build_field(p)

    def test_rejects_reducible_modulus(self):
        """t^2 - 1 is reducible over F_3."""
        with pytest.raises(FieldError):
            build_field(3, 2, [2, 0, 1])

    def test_rejects_wrong_degree_modulus(self):
        """Modulus degree must equal m."""
        with pytest.raises(FieldError):
            build_field(3, 2, [1, 1])

    def test_custom_modulus(self):
        """t^2 + 1 is irreducible over F_3."""
        F = build_field(3, 2, [1, 0, 1])
        t = field_literal(F, "t")
        assert t * t == F(0) - F(1)


@pytest.mark.unit
class TestFieldElements:
    """Test element encoding, parsing and operations."""

    def setup_method(self):
        """Set up test fixtures."""
        self.F = build_field(3, 2, [1, 0, 1])

    def test_vector_encoding_low_degree_first(self):
        """2t + 1 encodes as [1, 2]."""
        a = field_literal(self.F, "2*t + 1")
        assert element_to_vector(a) == [1, 2]
        assert element_from_vector(self.F, [1, 2]) == a

    def test_format_element(self):
        """Formatting lists the highest power first."""
        assert format_element(field_literal(self.F, "2*t + 1")) == "2*t + 1"
        assert format_element(self.F(0)) == "0"
        assert format_element(field_literal(self.F, "t")) == "t"

    def test_literal_with_fraction(self):
        """1/2 is the inverse of 2."""
        half = field_literal(self.F, "1/2")
        assert half * self.F(2) == self.F(1)

    def test_literal_rejects_garbage(self):
        """Non-polynomial input raises FieldError."""
        with pytest.raises(FieldError):
            field_literal(self.F, "t +")

    def test_literal_rejects_vanishing_denominator(self):
        """1/3 does not exist in characteristic 3."""
        with pytest.raises(FieldError):
            field_literal(self.F, "1/3")

    def test_inverse_of_zero(self):
        """Zero has no inverse."""
        with pytest.raises(FieldError):
            inv(self.F(0))

    def test_field_ops_dispatch(self):
        """field_ops routes to the named operation."""
        a, b = self.F(2), field_literal(self.F, "t")
        assert field_ops("add", a, b) == a + b
        assert field_ops("mul", a, b) == a * b
        assert field_ops("frobenius", b) == b**3
        with pytest.raises(PreconditionError):
            field_ops("add", a)
        with pytest.raises(PreconditionError):
            field_ops("pow", a, b)

    def test_sqrt(self):
        """sqrt returns a root or None for non-squares."""
        F = build_field(5)
        root = sqrt(F(4))
        assert root is not None and root * root == F(4)
        assert sqrt(F(2)) is None
        assert sqrt(F(0)) == F(0)

    def test_fq_generator_order(self):
        """The F_9 generator has multiplicative order 8."""
        xi = fq_generator(self.F, 2)
        assert xi**8 == self.F(1)
        assert xi**4 != self.F(1)

    def test_fq_generator_requires_embedding(self):
        """F_27 does not embed in F_9."""
        with pytest.raises(PreconditionError):
            fq_generator(self.F, 3)


@pytest.mark.unit
class TestFieldProperties:
    """Property tests over F_9."""

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=1, max_value=8))
    def test_pth_root_inverts_frobenius(self, n):
        """pth_root(a)^p = a."""
        F = build_field(3, 2)
        a = F(n)
        assert pth_root(a) ** 3 == a

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
    def test_frobenius_is_additive(self, m, n):
        """(a + b)^p = a^p + b^p."""
        F = build_field(3, 2)
        a, b = F(m), F(n)
        assert (a + b) ** 3 == a**3 + b**3
