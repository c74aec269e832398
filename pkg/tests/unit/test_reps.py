"""Unit tests for Verma modules, simple modules and central reductions."""

import numpy as np
import pytest

from src.center import c_generator
from src.ore import AlgebraContext, HElement
from src.reps import (
    AuxiliaryRepresentation,
    aux_representation,
    bar_dimension,
    compare_with_quotient,
    expected_simple_dimension,
    fixed_space,
    generator_choice,
    is_irreducible,
    maximal_submodule_generator,
    no_fixed_low_degree,
    quotient_by_g_minus_one,
    reference_bar_dimension,
    relation_suite,
    simple_module,
    singular_locus_matrices,
    spin,
    structural_idempotent_check,
    sweep_loci,
    tangent_values,
    verma_act,
    verma_truncation,
)
from src.reps.verma import VermaModule
from src.utils.config import RepsConfig
from src.utils.errors import PreconditionError, ResourceBoundError


@pytest.mark.unit
class TestVermaModule:
    """Test the action on Delta_alpha."""

    def setup_method(self):
        """Set up test fixtures."""
        self.ctx = AlgebraContext.create(3, 1, "g")
        self.verma = VermaModule(self.ctx, 2)

    def test_x_acts_by_alpha_on_v(self):
        """x v = alpha v and g v = v."""
        assert self.verma.generator_image(HElement.x(self.ctx)).tolist() == [2]
        assert self.verma.generator_image(HElement.g(self.ctx)).tolist() == [1]

    def test_y_raises_degree(self):
        """y . y^j v = y^(j+1) v."""
        assert self.verma.act_on_basis(HElement.y(self.ctx), 1).tolist() == [0, 0, 1]

    def test_x_y_v(self):
        """x y v = y x v + lambda v = (2y + 1) v."""
        assert verma_act(HElement.x(self.ctx), [0, 1], 2, self.ctx).tolist() == [1, 2]

    def test_highest_weight_generator(self):
        """(C - beta) v spans a submodule."""
        P = self.verma.generator_image(c_generator(self.ctx) - HElement.constant(self.ctx, 1))
        report = self.verma.is_highest_weight(P)
        assert report["g_fixed"] and report["x_scalar"]

    def test_y_v_is_not_highest_weight(self):
        """y v is not fixed by g when alpha != 0."""
        report = self.verma.is_highest_weight(self.ctx.F([0, 1]))
        assert not report["g_fixed"]


@pytest.mark.unit
class TestSimpleModules:
    """Test the dimension table and relations of S_(alpha, beta)."""

    @pytest.mark.parametrize(
        "lam, r, alpha, expected",
        [
            ("g", 1, 1, 3),
            ("g", 1, 0, 3),
            ("g^2 - g", 1, 1, 3),
            ("g^2 - g", 1, 0, 1),
            ("g - 1", 1, 0, 1),
            ("g - 1", 1, 1, 9),
            ("1", 1, 1, 9),
            ("1", 1, 0, 3),
            ("1 + g", 1, 0, 3),
            ("g1", 2, 1, 9),
            ("g1", 2, 0, 3),
        ],
    )
    def test_dimension_table(self, lam, r, alpha, expected):
        """dim S_(alpha, 0) follows the generator choice."""
        ctx = AlgebraContext.create(3, r, lam)
        rep = simple_module(alpha, 0, ctx)
        assert rep.dim == expected
        assert expected_simple_dimension(ctx, alpha) == expected
        assert rep.certificate["dim_matches"]

    def test_generator_choice_names(self, ctx_g, ctx_g_minus_one, ctx_singular):
        """C, D, y and Y are picked by alpha and lambda."""
        assert generator_choice(ctx_g, 1)[0] == "C"
        assert generator_choice(ctx_g, 0)[0] == "Y"
        assert generator_choice(ctx_g_minus_one, 1)[0] == "D"
        assert generator_choice(ctx_singular, 0)[0] == "y"

    @pytest.mark.parametrize("alpha, beta", [(0, 0), (1, 0), (2, 1), ("t", "t+1")])
    def test_relations_hold(self, ctx_g, alpha, beta):
        """The defining relations hold on every simple."""
        rep = simple_module(alpha, beta, ctx_g)
        report = relation_suite(rep)
        assert report["ok"]
        assert report["generator_scalar"]
        assert report["A_scalar"]

    def test_maximal_submodule_generator_is_monic(self, ctx_g):
        """P has leading coefficient 1 and degree dim S."""
        P = maximal_submodule_generator(1, 0, ctx_g)
        assert P[-1] == 1
        assert P.size == 4

    def test_to_json(self, ctx_g):
        """JSON carries the matrices and the certificate."""
        data = simple_module(1, 0, ctx_g).to_json()
        assert data["dim"] == 3
        assert set(data["matrices"]) == {"x", "y", "g1"}
        assert data["certificate"]["ok"] is True

    def test_represent_central_element(self, ctx_g):
        """C acts on S_(1, 2) as 2."""
        rep = simple_module(1, 2, ctx_g)
        assert np.array_equal(rep.represent(c_generator(ctx_g)), ctx_g.F(2) * ctx_g.F.Identity(3))


@pytest.mark.unit
class TestIrreducibility:
    """Test the fixed-space irreducibility test."""

    @pytest.mark.parametrize("alpha, beta", [(0, 0), (0, 1), (1, 0), (2, 1)])
    def test_simples_are_irreducible(self, alpha, beta):
        """Exhaustive search finds no invariant subspace."""
        ctx = AlgebraContext.create(3, 1, "g", m=1)
        report = is_irreducible(simple_module(alpha, beta, ctx), force_exhaustive=True)
        assert report.irreducible
        assert report.method == "exhaustive"

    def test_truncation_is_reducible(self, ctx_g):
        """Delta_1 / (C - 0)^2 has a proper submodule."""
        rep = verma_truncation(1, 6, ctx_g)
        assert rep.kind == "truncation"
        assert rep.dim == 6
        report = is_irreducible(rep)
        assert not report
        assert report.method == "witness"
        assert report.witness_dimension == 3

    def test_truncation_preconditions(self, ctx_g):
        """Truncation needs alpha != 0 and a multiple of the simple dimension."""
        with pytest.raises(PreconditionError):
            verma_truncation(0, 6, ctx_g)
        with pytest.raises(PreconditionError):
            verma_truncation(1, 4, ctx_g)

    def test_probable_verdict_when_search_is_large(self, ctx_g_minus_one):
        """Above the exhaustive limit the verdict is probable."""
        rep = simple_module(1, 0, ctx_g_minus_one)
        config = RepsConfig(exhaustive_limit=1, random_vectors=4)
        report = is_irreducible(rep, config, rng=np.random.default_rng(0))
        assert report.irreducible
        assert report.method == "probable"

    def test_force_exhaustive_bound(self, ctx_g_minus_one):
        """force_exhaustive refuses searches above the limit."""
        rep = simple_module(1, 0, ctx_g_minus_one)
        with pytest.raises(ResourceBoundError):
            is_irreducible(rep, RepsConfig(exhaustive_limit=1), force_exhaustive=True)

    def test_fixed_space_and_spin(self, ctx_g):
        """Fixed vectors of a simple spin up to the whole module."""
        rep = simple_module(1, 0, ctx_g)
        basis = fixed_space(rep)
        assert basis.shape[0] >= 1
        assert spin(rep, basis[0]) == rep.dim

    def test_one_dimensional(self, ctx_singular):
        """One-dimensional modules are irreducible."""
        assert is_irreducible(simple_module(0, 0, ctx_singular)).irreducible


@pytest.mark.unit
class TestSingularLocus:
    """Test the closed-form matrices over alpha = 0."""

    def test_tangent_values(self):
        """a_n is A_(n/2, 0) for even n and 0 for odd n."""
        assert tangent_values(5) == [1, 0, 1, 0, 4, 0, 34]

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_closed_form_relations(self, p):
        """The closed-form matrices satisfy the relations and the extra identities."""
        rep = singular_locus_matrices(p, 0)
        assert rep.dim == p
        assert rep.certificate["ok"]
        assert rep.certificate["x_nilpotent"]
        assert rep.certificate["quadratic"]

    @pytest.mark.parametrize("beta", [0, 1, 2])
    def test_matches_quotient_construction(self, beta):
        """Closed form and Verma quotient agree entrywise."""
        ctx = AlgebraContext.create(3, 1, "g", m=1)
        rep = singular_locus_matrices(3, beta, ctx=ctx)
        assert all(compare_with_quotient(rep).values())

    def test_prime_limit(self):
        """Only tabulated primes are accepted."""
        with pytest.raises(PreconditionError):
            singular_locus_matrices(17, 0)

    def test_requires_lambda_g(self, ctx_g_minus_one):
        """The closed form describes lambda = g."""
        with pytest.raises(PreconditionError):
            singular_locus_matrices(3, 0, ctx=ctx_g_minus_one)


@pytest.mark.unit
class TestCentralReduction:
    """Test dimensions of central quotients."""

    def test_lambda_g(self, ctx_g):
        """The fibre has dimension p^2 everywhere."""
        assert [bar_dimension(a, 0, ctx_g) for a in range(3)] == [9, 9, 9]

    def test_radical_lambda(self, ctx_singular):
        """For lambda in the radical the fibre over alpha = 0 jumps."""
        assert bar_dimension(1, 0, ctx_singular) == 9
        assert bar_dimension(2, 1, ctx_singular) == 9
        assert bar_dimension(0, 0, ctx_singular) == 15

    def test_radical_fibre_below_reference(self, ctx_singular):
        """Over alpha = 0 the relation x^p = 0 keeps the fibre below the stated 2p^2."""
        assert reference_bar_dimension(0, ctx_singular) == 18
        assert reference_bar_dimension(1, ctx_singular) == 9
        assert bar_dimension(0, 0, ctx_singular) < reference_bar_dimension(0, ctx_singular)

    def test_reference_for_unit_lambda(self, ctx_g):
        """For lambda a unit the stated value is p^2 everywhere and is met."""
        for a in range(3):
            assert bar_dimension(a, 0, ctx_g) == reference_bar_dimension(a, ctx_g) == 9

    def test_requires_t0_rank_one(self, ctx_one, ctx_rank_two):
        """Only r = 1, t = 0 is covered."""
        with pytest.raises(PreconditionError):
            bar_dimension(0, 0, ctx_one)
        with pytest.raises(PreconditionError):
            bar_dimension(0, 0, ctx_rank_two)

    def test_quotient_by_g_minus_one(self, ctx_g, ctx_singular):
        """x lies in the ideal of g - 1; the quotient depends on aug(lambda)."""
        unit = quotient_by_g_minus_one(ctx_g)
        assert unit["x_in_ideal"] and unit["quotient"] == "0"
        radical = quotient_by_g_minus_one(ctx_singular)
        assert radical["x_in_ideal"] and radical["quotient"] == "k[y]"

    def test_no_fixed_low_degree(self, ctx_g):
        """No g-fixed f(y) v of degree 0 < n < p when alpha != 0."""
        assert all(no_fixed_low_degree(ctx_g, 1).values())
        with pytest.raises(PreconditionError):
            no_fixed_low_degree(ctx_g, 0)

    def test_idempotents(self, ctx_g, rng):
        """Random elements are never nontrivial idempotents."""
        report = structural_idempotent_check(ctx_g, 20, rng)
        assert report["ok"]
        assert report["nontrivial"] == 0

    def test_idempotent_sample_degree(self, ctx_g, rng):
        """Samples reach x- and y-degree 2p."""
        report = structural_idempotent_check(ctx_g, 2, rng)
        assert report["degree"] == 6
        assert report["samples"] == 2


@pytest.mark.unit
class TestSweep:
    """Test the locus sweep."""

    def test_sweep_grid_order(self):
        """Rows come back in grid order with the right dimensions."""
        ctx = AlgebraContext.create(3, 1, "g^2 - g", m=1)
        rows = sweep_loci(ctx, jobs=2)
        assert len(rows) == 9
        assert [int(row.alpha) for row in rows[:3]] == [0, 0, 0]
        assert [row.dim for row in rows] == [1, 1, 1, 3, 3, 3, 3, 3, 3]
        assert all(row.irreducible for row in rows)
        assert [row.smooth for row in rows[:4]] == [False, False, False, True]

    def test_sweep_sequential_matches_threads(self):
        """One worker and several workers give the same rows."""
        ctx = AlgebraContext.create(3, 1, "g", m=1)
        single = sweep_loci(ctx, [1, 2], [0], jobs=1)
        threaded = sweep_loci(ctx, [1, 2], [0], jobs=4)
        assert [r.to_csv() for r in single] == [r.to_csv() for r in threaded]

    def test_azumaya_flag(self):
        """Generic points are Azumaya; alpha = 0 is not for lambda in the radical."""
        ctx = AlgebraContext.create(3, 1, "g^2 - g", m=1)
        rows = sweep_loci(ctx, [0, 1], [0], jobs=1)
        assert [row.azumaya for row in rows] == [False, True]

    def test_csv_row(self):
        """CSV rows follow the header."""
        ctx = AlgebraContext.create(3, 1, "g", m=1)
        row = sweep_loci(ctx, [1], [2], jobs=1)[0]
        assert row.to_csv() == "1,2,3,true,1,2"


@pytest.mark.unit
class TestAuxiliaryRepresentations:
    """Test the infinite-dimensional modules."""

    @pytest.mark.parametrize("kind, lam", [("diff_op", "g"), ("diff_op", "g - 1"), ("weyl", "g"), ("polynomial", "g^2 - g")])
    def test_module_axioms(self, kind, lam):
        """h1 (h2 v) = (h1 h2) v."""
        ctx = AlgebraContext.create(3, 1, lam)
        report = AuxiliaryRepresentation(kind, ctx).check_axioms(5, degree=1, rng=np.random.default_rng(0))
        assert report["ok"]

    def test_radical_condition(self, ctx_g, ctx_singular):
        """weyl needs a unit and polynomial a radical lambda."""
        with pytest.raises(PreconditionError):
            AuxiliaryRepresentation("weyl", ctx_singular)
        with pytest.raises(PreconditionError):
            AuxiliaryRepresentation("polynomial", ctx_g)
        with pytest.raises(PreconditionError):
            aux_representation("spinor", ctx_g)

    def test_diff_op_action(self, ctx_g):
        """y . 1 = 0 and x . 1 = x in R = H / H y."""
        act = aux_representation("diff_op", ctx_g)
        aux = AuxiliaryRepresentation("diff_op", ctx_g)
        one = aux.one()
        assert aux.is_zero(act(HElement.y(ctx_g), one))
        assert aux.equal(act(HElement.x(ctx_g), one), HElement.x(ctx_g).row(0))

    def test_quadratic_submodule(self, ctx_g):
        """R A is stable under y on diff_op."""
        aux = AuxiliaryRepresentation("diff_op", ctx_g)
        assert aux.quadratic_stable(3, rng=np.random.default_rng(0))
