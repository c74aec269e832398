"""Unit tests for the acceptance suite runner."""

import numpy as np
import pytest

from src.group_algebra import group_algebra
from src.scalars.field import build_field
from src.utils.config import Config, VerifySuiteConfig
from src.utils.errors import PreconditionError
from src.verification import CheckResult, SamplePlan, SuiteReport, VerificationSuite, random_lambda, run_suite


@pytest.mark.unit
class TestSamplePlan:
    """Test suite profiles."""

    def test_quick_divides_samples(self):
        """The quick profile scales sample counts down."""
        config = VerifySuiteConfig(oracle_words=1000, idempotent_samples=100, quick_divisor=10)
        plan = SamplePlan.from_config(config, "quick")
        assert plan.oracle_words == 100
        assert plan.idempotent_samples == 10
        assert plan.oracle_primes == (3,)

    def test_acceptance_uses_full_counts(self):
        """The acceptance profile keeps configured counts."""
        plan = SamplePlan.from_config(VerifySuiteConfig(oracle_words=7), "acceptance")
        assert plan.oracle_words == 7
        assert plan.delta_primes == (3, 5, 7, 11)

    def test_unknown_suite(self):
        """Only acceptance and quick exist."""
        with pytest.raises(PreconditionError):
            SamplePlan.from_config(VerifySuiteConfig(), "nightly")


@pytest.mark.unit
class TestReports:
    """Test report objects."""

    def test_check_result_json(self):
        """Durations stay out of the JSON view."""
        data = CheckResult("combinatorics", True, {"failed": []}, duration_ms=12.5).to_json()
        assert data == {"name": "combinatorics", "passed": True, "error": None, "details": {"failed": []}}

    def test_suite_report(self):
        """A report passes when every check passes."""
        report = SuiteReport("quick", 0, [CheckResult("a", True), CheckResult("b", False, error="boom")])
        assert not report.passed
        assert report.failed == ["b"]
        assert report.to_json()["checks"][1]["error"] == "boom"


@pytest.mark.unit
class TestRandomLambda:
    """Test random parameter draws."""

    def setup_method(self):
        """Set up test fixtures."""
        self.ga = group_algebra(build_field(3, 2), 1)
        self.rng = np.random.default_rng(0)

    def test_constant_term_forced(self):
        """t = 0 and t = 1 fix the identity coefficient."""
        for _ in range(10):
            assert random_lambda(self.ga, self.rng, 0)[0] == 0
            assert random_lambda(self.ga, self.rng, 1)[0] == 1

    def test_nonzero(self):
        """Draws are never zero."""
        for _ in range(10):
            assert not self.ga.is_zero(random_lambda(self.ga, self.rng))


@pytest.mark.unit
class TestVerificationSuite:
    """Test running selected checks."""

    def setup_method(self):
        """Set up test fixtures."""
        self.suite = VerificationSuite("quick", config=Config(), seed=3)

    def test_single_check(self):
        """Selected checks run alone and pass."""
        report = self.suite.run(["combinatorics"])
        assert [r.name for r in report.results] == ["combinatorics"]
        assert report.passed

    def test_idempotents(self):
        """The idempotent check passes on the quick profile."""
        report = self.suite.run(["idempotents"])
        assert report.passed
        assert report.results[0].details["nontrivial"] == 0

    def test_unknown_check(self):
        """Unknown check names are rejected before anything runs."""
        with pytest.raises(PreconditionError, match="unknown checks"):
            self.suite.run(["combinatorics", "telepathy"])

    def test_check_names(self):
        """The suite lists its checks in a fixed order."""
        names = [name for name, _ in self.suite.checks()]
        assert names[0] == "oracle_equivalence"
        assert "ext_tables" in names
        assert len(names) == len(set(names))

    def test_run_suite_seed(self):
        """run_suite records the seed it ran with."""
        report = run_suite("quick", seed=11, only=["combinatorics"])
        assert report.seed == 11
        assert report.to_json()["passed"] is True
