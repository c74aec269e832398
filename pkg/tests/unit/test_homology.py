"""Unit tests for the resolution templates and Ext dimensions."""

import pytest

from src.homology import (
    HMatrix,
    build_resolution,
    composite_report,
    cross_fiber_vanishing,
    euler_check,
    ext_between,
    ext_dims,
    hom_complex,
    in_copies,
    left_multiplication,
    reference_dims,
    singular_pair_condition,
    source_resolution,
    t1_singular_variant_report,
    weyl_annihilator_check,
    weyl_ext,
)
from src.ore import AlgebraContext, HElement
from src.reps import simple_module
from src.reps.verma import as_scalar
from src.utils.errors import ParameterMismatchError, PreconditionError

I_MAX = 4


def padded(head, value):
    return (head + [value] * (I_MAX + 1))[: I_MAX + 1]


@pytest.mark.unit
class TestHMatrix:
    """Test matrices over H_lambda."""

    def setup_method(self):
        """Set up test fixtures."""
        self.ctx = AlgebraContext.create(3, 1, "g")
        self.x = HElement.x(self.ctx)
        self.y = HElement.y(self.ctx)

    def test_product_is_commutator(self):
        """(x y) @ (y, -x)^T = x y - y x = lambda."""
        row = HMatrix(self.ctx, [[self.x, self.y]])
        column = HMatrix.column(self.ctx, [self.y, -self.x])
        product = row @ column
        assert product.shape == (1, 1)
        assert product[0, 0] == HElement.from_ga(self.ctx, self.ctx.lam)

    def test_integer_entries(self):
        """Integers become constants."""
        M = HMatrix(self.ctx, [[1, 0]])
        assert M[0, 0] == HElement.constant(self.ctx, 1)
        assert M.nonzero_entries() == [(0, 0, "1")]

    def test_shape_mismatch(self):
        """Ragged rows and incompatible products are rejected."""
        with pytest.raises(ParameterMismatchError):
            HMatrix(self.ctx, [[1, 0], [1]])
        with pytest.raises(ParameterMismatchError):
            HMatrix(self.ctx, [[1, 0]]) @ HMatrix(self.ctx, [[1, 0]])

    def test_to_json(self):
        """JSON lists the shape and formatted entries."""
        data = HMatrix.column(self.ctx, [self.x, 0]).to_json()
        assert data["shape"] == [2, 1]
        assert data["entries"] == [["x"], ["0"]]


@pytest.mark.unit
class TestResolutions:
    """Test that the templates are complexes."""

    def test_azumaya_composites(self, ctx_g):
        """All composites of the azumaya template vanish."""
        resolution = build_resolution("azumaya", ctx_g, 1, 0)
        assert resolution.composites_checked == resolution.default_depth()
        assert [resolution.rank(i) for i in range(5)] == [1, 3, 4, 4, 4]

    def test_azumaya_t1(self, ctx_g_minus_one):
        """With t = 1 the template uses D."""
        resolution = build_resolution("azumaya", ctx_g_minus_one, 1, 0, depth=3)
        assert resolution.composites_checked == 3

    @pytest.mark.parametrize("lam", ["g^2 - g", "g^2 - 2*g + 1"])
    def test_singular_composites(self, lam):
        """The singular template is a complex for lambda in the radical."""
        ctx = AlgebraContext.create(3, 1, lam)
        assert all(row["zero"] for row in composite_report(build_resolution("singular", ctx, 0, 0)))

    def test_weyl_composites(self, ctx_g):
        """T N = N T = 0."""
        resolution = build_resolution("weyl", ctx_g)
        assert resolution.rank(0) == 1
        assert resolution.composites_checked == 4

    def test_preconditions(self, ctx_g, ctx_one, ctx_singular, ctx_rank_two):
        """Templates refuse parameters outside their range."""
        with pytest.raises(PreconditionError):
            build_resolution("koszul", ctx_g)
        with pytest.raises(PreconditionError):
            build_resolution("azumaya", ctx_rank_two, 1, 0)
        with pytest.raises(PreconditionError):
            build_resolution("azumaya", ctx_singular, 0, 0)
        with pytest.raises(PreconditionError):
            build_resolution("azumaya", ctx_one, 0, 0)
        with pytest.raises(PreconditionError):
            build_resolution("singular", ctx_g, 0, 0)

    def test_source_resolution(self, ctx_g, ctx_singular):
        """alpha = 0 with lambda in the radical picks the singular template."""
        assert source_resolution(ctx_singular, 0, 0).kind == "singular"
        assert source_resolution(ctx_singular, 1, 0).kind == "azumaya"
        assert source_resolution(ctx_g, 0, 0).kind == "azumaya"

    def test_t1_variant_report(self, ctx_g_minus_one, ctx_g):
        """The variant is reported, not raised."""
        report = t1_singular_variant_report(ctx_g_minus_one)
        assert isinstance(report["composites_zero"], bool)
        assert len(report["composites"]) == 6
        with pytest.raises(PreconditionError):
            t1_singular_variant_report(ctx_g)

    def test_to_json(self, ctx_g):
        """JSON lists the prefix and the period."""
        data = build_resolution("azumaya", ctx_g, 1, 0).to_json()
        assert len(data["prefix"]) == 2
        assert len(data["period"]) == 2
        assert data["prefix"][0]["shape"] == [3, 1]


@pytest.mark.unit
class TestExt:
    """Test Ext dimensions between simples."""

    def setup_method(self):
        """Set up test fixtures."""
        self.g = AlgebraContext.create(3, 1, "g")
        self.radical = AlgebraContext.create(3, 1, "g^2 - g")
        self.square = AlgebraContext.create(3, 1, "g^2 - 2*g + 1")

    def test_azumaya_self(self):
        """Ext(S, S) at an Azumaya point has field dimensions 1, 2, 1, 0, ..."""
        table = ext_dims(build_resolution("azumaya", self.g, 1, 0), simple_module(1, 0, self.g), I_MAX)
        assert table.target_dim == 3
        assert table.field_dims == padded([1, 2, 1], 0)
        assert table.dims == padded([1, 2, 1], 0)
        assert table.case == "self"
        assert table.reference == padded([1, 3], 4)
        assert table.matches_reference is False
        assert table.mismatches() == [1, 2, 3, 4]

    def test_azumaya_self_units(self):
        """Degrees whose field dimension the target dimension does not divide stay in field units."""
        table = ext_dims(build_resolution("azumaya", self.g, 1, 0), simple_module(1, 0, self.g), I_MAX)
        assert table.units == ["field", "field", "field", "copies", "copies"]

    def test_in_copies(self):
        """Field dimensions divisible by the target dimension count copies."""
        assert in_copies([0, 3, 6, 4], 3) == [0, 1, 2, 4]
        assert in_copies([1, 2], 1) == [1, 2]

    def test_singular_c_nonzero(self):
        """Self-Ext at alpha = 0 with c != 0 stabilises at 2."""
        table = ext_dims(
            build_resolution("singular", self.radical, 0, 0), simple_module(0, 0, self.radical), I_MAX
        )
        assert table.dims == padded([1, 1], 2)
        assert table.case == "c_nonzero"
        assert table.matches_reference is False
        assert table.mismatches() == [3, 4]

    def test_singular_c_zero(self):
        """Self-Ext at alpha = 0 with c = 0 stabilises at 3."""
        table = ext_dims(
            build_resolution("singular", self.square, 0, 0), simple_module(0, 0, self.square), I_MAX
        )
        assert table.dims == padded([1, 2], 3)
        assert table.case == "c_zero"

    def test_singular_pair(self):
        """(beta' - beta)^2 = c gives nonzero Ext from degree 1."""
        table = ext_dims(
            build_resolution("singular", self.radical, 0, 0), simple_module(0, 1, self.radical), I_MAX
        )
        assert table.dims == padded([0], 1)
        assert table.case == "pair_condition"
        assert singular_pair_condition(self.radical, 0, 1)["condition"]

    def test_singular_pair_generic(self):
        """Other pairs have no Ext."""
        beta = as_scalar(self.radical, "t")
        table = ext_dims(
            build_resolution("singular", self.radical, 0, 0), simple_module(0, beta, self.radical), I_MAX
        )
        assert table.dims == padded([], 0)
        assert table.case == "pair_generic"
        assert table.matches_reference

    def test_cross_fiber(self):
        """Different central characters give vanishing Ext."""
        assert cross_fiber_vanishing(self.g, (1, 0), (2, 0), I_MAX)["vanishes"]
        assert cross_fiber_vanishing(self.g, (1, 0), (1, 1), I_MAX)["vanishes"]
        with pytest.raises(PreconditionError):
            cross_fiber_vanishing(self.g, (1, 0), (1, 0), I_MAX)

    def test_ext_between(self):
        """ext_between picks the template from the source."""
        table = ext_between(self.g, (1, 0), (1, 0), I_MAX)
        assert table.kind == "azumaya"
        assert table.dims[0] == 1

    def test_euler_and_complex(self):
        """The Hom complex squares to zero and its Euler characteristic balances."""
        resolution = build_resolution("azumaya", self.g, 1, 0)
        target = simple_module(1, 0, self.g)
        table = ext_dims(resolution, target, 3)
        chis = hom_complex(resolution, target, 3)
        report = euler_check(table, chis)
        assert report["euler"]
        assert report["complex"]

    def test_hom_complex_blocks(self):
        """Each entry of a differential becomes a full d x d block."""
        resolution = build_resolution("azumaya", self.g, 1, 0)
        chis = hom_complex(resolution, simple_module(1, 0, self.g), 1)
        d0 = resolution.differential(0)
        assert chis[0].shape == (3 * d0.rows, 3 * d0.cols)

    def test_reference_dims(self):
        """Reference tails repeat their last value."""
        assert reference_dims("singular", "c_nonzero", 4) == [1, 1, 2, 3, 3]
        assert reference_dims("weyl", "A", 2) == [1, 1, 1]
        assert reference_dims("weyl", "H", 2) is None

    def test_to_json(self):
        """JSON carries dims and the reference comparison."""
        table = ext_between(self.g, (1, 0), (1, 0), 2)
        data = table.to_json()
        assert data["ext_dims"] == [1, 2, 1]
        assert data["field_dims"] == [1, 2, 1]
        assert data["target_dim"] == 3
        assert data["reference"] == [1, 3, 4]
        assert data["matches_reference"] is False
        assert data["mismatched_degrees"] == [1, 2]


@pytest.mark.unit
class TestWeylExt:
    """Test the Weyl-type module H / H(g - 1)."""

    def test_annihilator(self, ctx_g):
        """ker(g - 1) = N H on each truncation."""
        report = weyl_annihilator_check(ctx_g, 2)
        assert report["ok"]
        assert report["kernel_dimension"] == report["monomials"] == 6

    def test_ext_into_h(self, ctx_g):
        """Ext(A, H) is concentrated in degree 0."""
        assert weyl_ext(ctx_g, "H", 2, I_MAX).dims == padded([6], 0)

    def test_ext_into_a(self, ctx_g):
        """Ext(A, A) is one-dimensional in every degree."""
        table = weyl_ext(ctx_g, "A", 0, I_MAX)
        assert table.dims == padded([], 1)
        assert table.matches_reference

    def test_bad_target(self, ctx_g):
        """Targets are H or A."""
        with pytest.raises(PreconditionError):
            left_multiplication(ctx_g, HElement.x(ctx_g), "B", 1)

    def test_rank_two_rejected(self, ctx_rank_two):
        """The Weyl resolution is an r = 1 construction."""
        with pytest.raises(PreconditionError):
            weyl_ext(ctx_rank_two, "A", 0, 1)
