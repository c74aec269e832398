"""Integration tests for the ore-sra command line."""

import json

import pytest

from src.app import cli


def run(cli_runner, *args):
    return cli_runner.invoke(cli, list(args))


@pytest.mark.integration
class TestAlgebraCommands:
    """Test commands that build an algebra from the shared options."""

    def test_center_lambda_g(self, cli_runner):
        """center reports central generators and the shifted relation."""
        result = run(cli_runner, "center", "--p", "3", "--lambda", "g")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["algebra"]["t"] == 0
        assert all(data["is_central"].values())
        assert data["presentation"]["shifted_relation"] is True

    def test_center_products_t1(self, cli_runner):
        """--products adds the t = 1 product form."""
        result = run(cli_runner, "center", "--p", "3", "--lambda", "1 + g", "--products")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["algebra"]["t"] == 1
        assert "product_form" in data
        assert "presentation" not in data

    def test_delta_matches_triangle(self, cli_runner):
        """delta output agrees with the triangle expansion."""
        result = run(cli_runner, "delta", "--lambda", "g - 1", "--target", "g", "--n", "4")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["n"] == 4
        assert data["matches_triangle"] is True

    def test_simple_module(self, cli_runner):
        """simple prints matrices and an irreducibility verdict."""
        result = run(cli_runner, "simple", "--p", "3", "--m", "1", "--alpha", "1", "--beta", "2")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["module"]["dim"] == 3
        assert data["irreducibility"]["irreducible"] is True
        assert data["irreducibility"]["method"] == "exhaustive"

    def test_simple_truncation(self, cli_runner):
        """--truncation builds a reducible module with a witness."""
        result = run(cli_runner, "simple", "--alpha", "1", "--truncation", "6")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["kind"] == "truncation"
        assert data["irreducibility"]["method"] == "witness"

    def test_simple_closed_form(self, cli_runner):
        """--closed-form uses the singular-locus matrices."""
        result = run(cli_runner, "simple", "--closed-form", "--beta", "1", "--no-irreducible")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["module"]["dim"] == 3
        assert "irreducibility" not in data

    @pytest.mark.parametrize("alpha, expected, reference", [("1", 9, 9), ("0", 15, 18)])
    def test_bar_dim(self, cli_runner, alpha, expected, reference):
        """bar-dim reports the fibre dimension for lambda = g^2 - g next to the stated value."""
        result = run(cli_runner, "bar-dim", "--lambda", "g^2 - g", "--alpha", alpha)
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["dim"] == expected
        assert data["reference"] == reference
        assert data["matches_reference"] is (expected == reference)
        assert data["azumaya"] is (alpha == "1")

    def test_sweep_csv(self, cli_runner):
        """sweep-loci emits one CSV row per grid point."""
        result = run(
            cli_runner, "sweep-loci", "--m", "1", "--alphas", "1,2", "--betas", "0", "--jobs", "1", "--format", "csv"
        )
        assert result.exit_code == 0, result.output
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "alpha,beta,dim,irreducible,central_char_B,central_char_big"
        assert lines[1:] == ["1,0,3,true,1,0", "2,0,3,true,2,0"]

    def test_ext_azumaya(self, cli_runner):
        """ext picks the azumaya template and prints the reference comparison."""
        result = run(cli_runner, "ext", "--alpha", "1", "--imax", "3")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["resolution"] == "azumaya"
        assert data["ext"]["ext_dims"] == [1, 2, 1, 0]
        assert data["ext"]["target_dim"] == 3
        assert data["ext"]["mismatched_degrees"] == [1, 2, 3]

    def test_ext_singular_pair(self, cli_runner):
        """A singular pair reports the pair condition."""
        result = run(cli_runner, "ext", "--lambda", "g^2 - g", "--beta2", "1", "--imax", "2")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["resolution"] == "singular"
        assert data["pair_condition"]["condition"] is True
        assert data["ext"]["ext_dims"] == [0, 1, 1]

    def test_ext_weyl_csv(self, cli_runner):
        """The Weyl module Ext table is available as CSV."""
        result = run(
            cli_runner, "ext", "--kind", "weyl", "--weyl-target", "A", "--degree", "0", "--imax", "2", "--format", "csv"
        )
        assert result.exit_code == 0, result.output
        assert result.stdout.strip().splitlines() == ["i,dim", "0,1", "1,1", "2,1"]


@pytest.mark.integration
class TestCombinatoricsCommands:
    """Test commands that need no algebra."""

    def test_andre_csv(self, cli_runner):
        """andre prints the array as CSV."""
        result = run(cli_runner, "andre", "--rows", "3", "--cols", "4", "--format", "csv")
        assert result.exit_code == 0, result.output
        assert result.stdout.strip().splitlines() == [
            "n,k0,k1,k2,k3",
            "0,1,1,1,1",
            "1,1,4,11,26",
            "2,4,34,180,768",
        ]

    def test_andre_json_euler(self, cli_runner):
        """Antidiagonal sums are the zigzag numbers."""
        result = run(cli_runner, "andre", "--rows", "4", "--cols", "6")
        data = json.loads(result.stdout)
        assert data["euler"] == [1, 1, 2, 5, 16, 61]

    def test_fseq(self, cli_runner):
        """fseq lists coefficient sums."""
        result = run(cli_runner, "fseq", "--n-max", "6")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert [row["coefficient_sum"] for row in data["sequence"]] == [1, 1, 4, 11, 41]
        assert all(row["closed_form_agrees"] for row in data["sequence"])

    def test_triangles_generalized(self, cli_runner):
        """triangles prints T and U for lambda = g^a."""
        result = run(cli_runner, "triangles", "--a", "2", "--rows", "3", "--cols", "7")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["T"][1] == [1, 5, 18, 58, 179, 543, 1636]
        assert data["u_scaling"] is True

    def test_triangles_partition(self, cli_runner):
        """The partition triangles homogenize into each other."""
        result = run(cli_runner, "triangles", "--kind", "partition", "--rows", "5")
        assert result.exit_code == 0, result.output
        assert json.loads(result.stdout)["homogenization_matches"] is True

    def test_text_format(self, cli_runner):
        """Text output renders a table."""
        result = run(cli_runner, "andre", "--rows", "2", "--cols", "3", "--format", "text")
        assert result.exit_code == 0, result.output
        assert "Andre numbers" in result.stdout


@pytest.mark.integration
class TestExitCodes:
    """Test the mapping of failures onto exit codes."""

    def test_bad_lambda(self, cli_runner):
        """Unparseable lambda is a usage error."""
        result = run(cli_runner, "center", "--lambda", "g +")
        assert result.exit_code == 2
        assert "ParseError" in result.stderr

    def test_precondition(self, cli_runner):
        """bar-dim outside r = 1, t = 0 is a precondition error."""
        result = run(cli_runner, "bar-dim", "--lambda", "1 + g")
        assert result.exit_code == 2
        assert "PreconditionError" in result.stderr

    def test_csv_not_tabular(self, cli_runner):
        """csv on a non-tabular result is rejected."""
        result = run(cli_runner, "center", "--format", "csv")
        assert result.exit_code == 2

    def test_even_prime_rejected(self, cli_runner):
        """Characteristic 2 is refused."""
        result = run(cli_runner, "delta", "--p", "2", "--n", "1")
        assert result.exit_code == 2

    def test_verify_quick(self, cli_runner):
        """A passing quick check exits 0."""
        result = run(cli_runner, "verify", "--suite", "quick", "--check", "combinatorics")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["passed"] is True
        assert [check["name"] for check in data["checks"]] == ["combinatorics"]

    def test_verify_unknown_check(self, cli_runner):
        """Unknown check names exit 2."""
        result = run(cli_runner, "verify", "--suite", "quick", "--check", "telepathy")
        assert result.exit_code == 2

    def test_version(self, cli_runner):
        """--version prints the package version."""
        result = run(cli_runner, "--version")
        assert result.exit_code == 0
        assert "0.1.0" in result.stdout
