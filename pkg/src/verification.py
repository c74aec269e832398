"""Acceptance suite: the exact identities of the library, run end to end.

Each check returns (passed, details). Statements that are computed and
reported rather than asserted (printed Ext tables, the t = 1 product form)
land in ``details["findings"]`` and never fail a check.
"""

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import galois
import numpy as np

from .center import (
    central_generators,
    delta_identity_report,
    is_central,
    ordered_product_big,
    t1_product_claim,
    verify_presentation,
    xi_set,
    y_zeta,
)
from .combinatorics import (
    andre_triangle,
    delta_lambda_triangle,
    delta_triangle,
    f_sequence,
    f_sequence_closed_form,
    generalized_triangles,
    homogenize,
    mod_p_collapse,
    quadratic_recursion_check,
    sequence_registry,
    tangent_reduced,
    triangles_equal,
    weighted_factorial_identity,
    weighted_row_sums,
)
from .group_algebra.element import GroupAlgebra
from .homology import (
    build_resolution,
    cross_fiber_vanishing,
    ext_dims,
    singular_pair_condition,
    weyl_annihilator_check,
    weyl_ext,
)
from .ore import AlgebraContext, delta_power, fold_word, oracle_normal_form, random_word
from .ore.delta import is_derivation_pair
from .ore.element import re_add, re_equal, re_ga_mul, re_x_power
from .reps import (
    bar_dimension,
    is_irreducible,
    no_fixed_low_degree,
    reference_bar_dimension,
    simple_module,
    singular_locus_matrices,
    structural_idempotent_check,
)
from .reps.verma import as_scalar
from .utils.config import Config, VerifySuiteConfig, get_config
from .utils.errors import CheckFailure, PreconditionError
from .utils.logging import correlation_context, get_algebra_logger

logger = get_algebra_logger(__name__)

SUITES = ("acceptance", "quick")

Outcome = Tuple[bool, Dict[str, Any]]


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    duration_ms: float = 0.0
    error: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "error": self.error,
            "details": self.details,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failed(self) -> List[str]:
        return [result.name for result in self.results if not result.passed]

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "checks": [result.to_json() for result in self.results],
        }


@dataclass(frozen=True)
class SamplePlan:
    """Sample counts and primes for one suite profile."""

    oracle_words: int
    word_length: int
    lambdas: int
    pairs: int
    idempotent_samples: int
    oracle_primes: Tuple[int, ...]
    delta_primes: Tuple[int, ...]
    center_primes: Tuple[int, ...]
    matrix_primes: Tuple[int, ...]

    @classmethod
    def from_config(cls, config: VerifySuiteConfig, suite: str) -> "SamplePlan":
        if suite not in SUITES:
            raise PreconditionError(f"unknown suite {suite!r}; expected one of {SUITES}")
        if suite == "acceptance":
            return cls(
                oracle_words=config.oracle_words,
                word_length=config.word_length,
                lambdas=config.random_lambdas,
                pairs=config.random_pairs,
                idempotent_samples=config.idempotent_samples,
                oracle_primes=(3, 5),
                delta_primes=(3, 5, 7, 11),
                center_primes=(3, 5, 7),
                matrix_primes=(3, 5, 7),
            )
        scale = config.quick_divisor
        return cls(
            oracle_words=max(1, config.oracle_words // scale),
            word_length=config.word_length,
            lambdas=max(1, config.random_lambdas // scale),
            pairs=max(1, config.random_pairs // scale),
            idempotent_samples=max(1, config.idempotent_samples // scale),
            oracle_primes=(3,),
            delta_primes=(3, 5),
            center_primes=(3,),
            matrix_primes=(3,),
        )


def _gen(r: int, i: int = 1) -> str:
    return "g" if r == 1 else f"g{i}"


def random_lambda(ga: GroupAlgebra, rng: np.random.Generator, t: Optional[int] = None) -> galois.FieldArray:
    """A nonzero random lambda, with constant term forced to 0 (t = 0) or 1 (t = 1)."""
    while True:
        lam = ga.random(rng)
        if t == 0:
            lam[0] = 0
        elif t == 1:
            lam[0] = 1
        if not ga.is_zero(lam):
            return lam


class VerificationSuite:
    """Runs the acceptance checks with deterministic per-check randomness."""

    def __init__(self, suite: str = "acceptance", config: Optional[Config] = None, seed: Optional[int] = None):
        self.config = config or get_config()
        self.suite = suite
        self.plan = SamplePlan.from_config(self.config.verify, suite)
        self.seed = self.config.compute.seed if seed is None else seed
        self.i_max = self.config.homology.i_max

    def checks(self) -> List[Tuple[str, Callable[[np.random.Generator], Outcome]]]:
        return [
            ("oracle_equivalence", self.check_oracle),
            ("delta_p_identity", self.check_delta_p),
            ("central_generators", self.check_center),
            ("presentation", self.check_presentation),
            ("ordered_product", self.check_ordered_product),
            ("combinatorics", self.check_combinatorics),
            ("homogenization", self.check_homogenization),
            ("simple_dimensions", self.check_simple_dimensions),
            ("central_reduction", self.check_central_reduction),
            ("ext_tables", self.check_ext),
            ("idempotents", self.check_idempotents),
        ]

    def run(self, only: Optional[Sequence[str]] = None) -> SuiteReport:
        report = SuiteReport(self.suite, self.seed)
        names = [name for name, _ in self.checks()]
        unknown = sorted(set(only or []) - set(names))
        if unknown:
            raise PreconditionError(f"unknown checks {unknown}; known: {names}")

        for index, (name, check) in enumerate(self.checks()):
            if only and name not in only:
                continue
            rng = np.random.default_rng([self.seed, index])
            start = time.perf_counter()
            with correlation_context():
                try:
                    passed, details = check(rng)
                    result = CheckResult(name, passed, details)
                except (CheckFailure, PreconditionError) as e:
                    result = CheckResult(name, False, error=str(e))
            result.duration_ms = (time.perf_counter() - start) * 1000
            logger.check(name, result.passed, {"duration_ms": round(result.duration_ms, 1)})
            report.results.append(result)

        logger.info("Verification finished", data={"suite": self.suite, "failed": report.failed})
        return report

    # PBW normal form

    def _oracle_contexts(self, p: int, r: int, rng: np.random.Generator) -> List[AlgebraContext]:
        g = _gen(r)
        fixed = [AlgebraContext.create(p, r, expr) for expr in (g, f"{g} - 1", f"1 + {g}")]
        ga = fixed[0].ga
        return fixed + [AlgebraContext(ga, random_lambda(ga, rng)) for _ in range(2)]

    def check_oracle(self, rng: np.random.Generator) -> Outcome:
        rows = []
        for p in self.plan.oracle_primes:
            for r in (1, 2):
                for ctx in self._oracle_contexts(p, r, rng):
                    mismatches = 0
                    for _ in range(self.plan.oracle_words):
                        length = int(rng.integers(1, self.plan.word_length + 1))
                        word = random_word(ctx, length, rng)
                        if oracle_normal_form(word, ctx) != fold_word(word, ctx):
                            mismatches += 1
                    rows.append({"p": p, "r": r, "lambda": ctx.ga.format(ctx.lam), "mismatches": mismatches})
        return all(row["mismatches"] == 0 for row in rows), {"words": self.plan.oracle_words, "contexts": rows}

    def check_delta_p(self, rng: np.random.Generator) -> Outcome:
        """delta^p(g) = (delta^(p-2)(lambda) + x^p) g, and delta^p is a derivation."""
        failures = []
        count = max(1, self.plan.lambdas // 2)
        pairs = max(1, self.plan.pairs // (count * len(self.plan.delta_primes)))
        for p in self.plan.delta_primes:
            ga = AlgebraContext.create(p, 1, "g").ga
            for _ in range(count):
                ctx = AlgebraContext(ga, random_lambda(ga, rng))
                inner = re_add(delta_power(ctx, "lambda", p - 2), re_x_power(ctx, p))
                expected = re_ga_mul(ctx, inner, ga.generator(1))
                if not re_equal(delta_power(ctx, "g", p), expected):
                    failures.append({"p": p, "lambda": ga.format(ctx.lam), "identity": "delta_p_g"})
                for _ in range(pairs):
                    a = ctx.F.Random((2, ctx.N), seed=rng)
                    b = ctx.F.Random((2, ctx.N), seed=rng)
                    if not is_derivation_pair(ctx, a, b, n=p):
                        failures.append({"p": p, "lambda": ga.format(ctx.lam), "identity": "leibniz"})
                        break
        details = {"primes": list(self.plan.delta_primes), "per_prime": count, "pairs": pairs, "failures": failures}
        return not failures, details

    # Center

    def check_center(self, rng: np.random.Generator) -> Outcome:
        rows = []
        findings = []
        for p in self.plan.center_primes:
            ga = AlgebraContext.create(p, 1, "g").ga
            for t in (0, 1):
                for k in range(self.plan.lambdas):
                    ctx = AlgebraContext(ga, random_lambda(ga, rng, t))
                    gens = central_generators(ctx)
                    identity = all(row["ok"] for row in delta_identity_report(ctx))
                    rows.append({"p": p, "t": t, "checks": gens.checks, "delta_identity": identity})
                    if t == 1 and k == 0 and p == self.plan.center_primes[0]:
                        claim = t1_product_claim(ctx)
                        findings.append({"product_form_central": claim["central"], "lambda": ga.format(ctx.lam)})
        passed = all(row["delta_identity"] and all(row["checks"].values()) for row in rows)
        return passed, {"samples": len(rows), "failures": [r for r in rows if not r["delta_identity"]], "findings": findings}

    def check_presentation(self, rng: np.random.Generator) -> Outcome:
        rows = []
        for p in self.plan.center_primes:
            ga = AlgebraContext.create(p, 1, "g").ga
            for _ in range(max(1, self.plan.lambdas // 4)):
                ctx = AlgebraContext(ga, random_lambda(ga, rng, 0))
                report = verify_presentation(central_generators(ctx))
                rows.append({
                    "p": p,
                    "shifted_relation": report["shifted_relation"],
                    "defect_matches_shift": report["defect_matches_shift"],
                })
        passed = all(row["shifted_relation"] and row["defect_matches_shift"] for row in rows)
        return passed, {"samples": rows}

    def check_ordered_product(self, rng: np.random.Generator) -> Outcome:
        ctx = AlgebraContext.create(3, 2, "g1")
        C = ordered_product_big(ctx)
        zetas = xi_set(ctx)
        for zeta in zetas:
            y_zeta(zeta, ctx)
        generic = []
        for t in (0, 1):
            for _ in range(max(1, self.plan.lambdas // 2)):
                sample = AlgebraContext(ctx.ga, random_lambda(ctx.ga, rng, t))
                generic.append(all(central_generators(sample).checks.values()))
        central = is_central(C, ctx)
        return central and all(generic), {"product_central": central, "zetas": len(zetas), "random_lambdas": len(generic)}

    # Combinatorics

    def check_combinatorics(self, rng: np.random.Generator) -> Outcome:
        A = andre_triangle(12)
        goldens = {
            "andre_row_1": A.row(1)[:8] == [1, 4, 11, 26, 57, 120, 247, 502],
            "andre_row_2": A.row(2)[:6] == [4, 34, 180, 768, 2904, 10194],
            "andre_row_3": A.row(3)[:4] == [34, 496, 4288, 28768],
            "andre_row_4": A.row(4)[:1] == [496],
            "euler": [A.antidiagonal_sum(n) for n in range(6)] == [1, 1, 2, 5, 16, 61],
            "factorials": all(weighted_factorial_identity(n) for n in range(13)),
            "row_sums_a2": weighted_row_sums(2, 8)[-1] == 40320,
            "f_sums": [f_sequence(n).coefficient_sum() for n in range(2, 8)] == [1, 1, 4, 11, 41, 162],
            "f_closed_form": all(f_sequence(n) == f_sequence_closed_form(n) for n in range(2, 11)),
            "quadratic_recursion": quadratic_recursion_check(andre_triangle(7)) == [],
            "tangent_reduced": [tangent_reduced(n) for n in range(1, 6)] == sequence_registry("A002105")[:5],
            "tangent_column": [A.get(n, 0) for n in range(5)] == sequence_registry("A002105")[:5],
            "a4_row_sums": weighted_row_sums(4, 5) == sequence_registry("A080795")[:5],
        }
        T2, _ = generalized_triangles(2, 4, 6)
        goldens["t_triangle_a2"] = T2.row(1)[:7] == [1, 5, 18, 58, 179, 543, 1636] and T2.row(2)[:2] == [5, 61]
        T3, _ = generalized_triangles(3, 6)
        goldens["a3_column"] = T3.column(0)[1:6] == sequence_registry("A126151")
        scaled = {a: generalized_triangles(a, 12)[1] for a in (2, 3, 4)}
        goldens["u_scaling"] = all(
            U.get(n, k) == a ** (n + k) * A.get(n, k) for a, U in scaled.items() for n in range(13) for k in range(13 - n)
        )
        failed = [name for name, ok in goldens.items() if not ok]
        return not failed, {"goldens": len(goldens), "failed": failed}

    def check_homogenization(self, rng: np.random.Generator) -> Outcome:
        rows = []
        for p in (3, 5):
            homogenized = triangles_equal(homogenize(delta_triangle(2 * p)), delta_lambda_triangle(2 * p))
            rows.append({"p": p, "homogenization": homogenized, "collapse": self._collapse_matches(p)})
        return all(row["homogenization"] and row["collapse"] for row in rows), {"primes": rows}

    @staticmethod
    def _collapse_matches(p: int) -> bool:
        """A_(j,k) mod p against delta^(k+2j)(g) for lambda = g."""
        ctx = AlgebraContext.create(p, 1, "g")
        tri = andre_triangle(p, 2 * p)
        for n in range(2 * p + 1):
            value = delta_power(ctx, "g", n)
            collapsed = mod_p_collapse(tri, p, n)
            expected = ctx.F.Zeros((n + 1, ctx.N))
            for k in range(n + 1):
                if (n - k) % 2 == 0:
                    expected[k, (1 + (n - k) // 2) % p] = int(collapsed[k])
            if not re_equal(value, expected):
                return False
        return True

    # Representations

    def check_simple_dimensions(self, rng: np.random.Generator) -> Outcome:
        observed: Dict[str, bool] = {}
        for p in self.plan.matrix_primes[:2]:
            ctx = AlgebraContext.create(p, 1, "g", m=1)
            observed[f"lambda_g_p{p}"] = all(
                simple_module(a, b, ctx).dim == p for a in range(p) for b in (0, 1)
            )
        ctx3 = AlgebraContext.create(3, 1, "g", m=1)
        observed["lambda_g_irreducible"] = all(
            is_irreducible(simple_module(a, b, ctx3), rng=rng, force_exhaustive=True).irreducible
            for a in range(3)
            for b in (0, 1)
        )
        cases = [
            ("g^2 - g", 1, 0, 1),
            ("g^2 - g", 1, 1, 3),
            ("g - 1", 1, 0, 1),
            ("g - 1", 1, 1, 9),
            ("1", 1, 1, 9),
            ("1", 1, 0, 3),
            ("g1", 2, 1, 9),
            ("g1", 2, 0, 3),
        ]
        for expr, r, alpha, expected in cases:
            ctx = AlgebraContext.create(3, r, expr)
            observed[f"{expr}_r{r}_alpha{alpha}"] = simple_module(alpha, 0, ctx).dim == expected
        for p in self.plan.matrix_primes:
            singular_locus_matrices(p, 0)
            observed[f"singular_matrices_p{p}"] = True
        failed = [name for name, ok in observed.items() if not ok]
        return not failed, {"cases": len(observed), "failed": failed}

    def check_central_reduction(self, rng: np.random.Generator) -> Outcome:
        g = AlgebraContext.create(3, 1, "g")
        radical = AlgebraContext.create(3, 1, "g^2 - g")
        observed = {
            "lambda_g": [bar_dimension(a, 0, g) for a in range(3)],
            "radical_generic": [bar_dimension(a, 0, radical) for a in (1, 2)],
            "radical_zero": bar_dimension(0, 0, radical),
        }
        expected = {
            "lambda_g": [9, 9, 9],
            "radical_generic": [9, 9],
            "radical_zero": 15,
        }
        low_degree = all(
            all(no_fixed_low_degree(AlgebraContext.create(p, 1, "g"), a).values())
            for p in self.plan.oracle_primes
            for a in range(1, p)
        )
        reference = reference_bar_dimension(0, radical)
        findings = []
        if observed["radical_zero"] != reference:
            findings.append({"lambda": "g^2 - g", "alpha": 0, "dim": observed["radical_zero"], "reference": reference})
        return observed == expected and low_degree, {
            "observed": observed,
            "no_fixed_low_degree": low_degree,
            "findings": findings,
        }

    # Homology

    def check_ext(self, rng: np.random.Generator) -> Outcome:
        i_max = self.i_max

        def tail(head: List[int], value: int) -> List[int]:
            return (head + [value] * (i_max + 1))[: i_max + 1]

        g = AlgebraContext.create(3, 1, "g")
        radical = AlgebraContext.create(3, 1, "g^2 - g")
        square = AlgebraContext.create(3, 1, "g^2 - 2*g + 1")

        tables = {
            "azumaya_self": (ext_dims(build_resolution("azumaya", g, 1, 0), simple_module(1, 0, g), i_max), tail([1, 2, 1], 0)),
            "singular_c_nonzero": (
                ext_dims(build_resolution("singular", radical, 0, 0), simple_module(0, 0, radical), i_max),
                tail([1, 1], 2),
            ),
            "singular_c_zero": (
                ext_dims(build_resolution("singular", square, 0, 0), simple_module(0, 0, square), i_max),
                tail([1, 2], 3),
            ),
            "singular_pair": (
                ext_dims(build_resolution("singular", radical, 0, 0), simple_module(0, 1, radical), i_max),
                tail([0], 1),
            ),
            "singular_pair_generic": (
                ext_dims(build_resolution("singular", radical, 0, 0), simple_module(0, as_scalar(radical, "t"), radical), i_max),
                tail([], 0),
            ),
        }
        observed = {name: table.dims == expected for name, (table, expected) in tables.items()}
        observed["pair_condition"] = singular_pair_condition(radical, 0, 1)["condition"]
        observed["cross_fiber"] = cross_fiber_vanishing(g, (1, 0), (2, 0), i_max)["vanishes"]
        observed["same_fiber"] = cross_fiber_vanishing(g, (1, 0), (1, 1), i_max)["vanishes"]

        degree = self.config.homology.weyl_truncation
        monomials = (degree + 1) * (degree + 2) // 2
        observed["weyl_annihilator"] = weyl_annihilator_check(g, degree)["ok"]
        observed["weyl_ext_H"] = weyl_ext(g, "H", degree, i_max).dims == tail([monomials], 0)
        observed["weyl_ext_A"] = weyl_ext(g, "A", 0, i_max).dims == tail([], 1)

        findings = [
            {"table": name, "dims": table.dims, "reference": table.reference, "mismatched": table.mismatches()}
            for name, (table, _) in tables.items()
            if table.matches_reference is False
        ]
        failed = [name for name, ok in observed.items() if not ok]
        return not failed, {"i_max": i_max, "failed": failed, "findings": findings}

    def check_idempotents(self, rng: np.random.Generator) -> Outcome:
        ctx = AlgebraContext.create(3, 1, "g")
        report = structural_idempotent_check(ctx, self.plan.idempotent_samples, rng)
        return report["ok"], report


def run_suite(suite: str = "acceptance", seed: Optional[int] = None, only: Optional[Sequence[str]] = None) -> SuiteReport:
    """Run one of the suites and return its report."""
    return VerificationSuite(suite, seed=seed).run(only)
