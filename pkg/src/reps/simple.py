"""Simple quotients S_(alpha, beta) of Verma modules as explicit matrices.

The maximal submodule of Delta_alpha is k[y] P v, where P(y) v = (G - beta) v
for a generator G chosen from alpha and lambda:

    alpha != 0, t = 0     C - beta    (dimension q)
    alpha != 0, t = 1     D - beta    (dimension pq)
    alpha = 0, lambda in Rad kE        y - beta    (dimension 1)
    alpha = 0, lambda a unit           Y - beta    (dimension p)

Every g_i fixes P v and x scales it, so R acts on P v by scalars and
k[y] P v is a submodule. Matrices act on columns in the basis 1, y, ...,
y^(d-1) of k[y]/(P).
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

import galois
import numpy as np

from ..center.generators import big_generator_t1, c_generator, quadratic_generator, y_generator
from ..ore.context import AlgebraContext
from ..ore.element import HElement
from ..scalars.field import format_element
from ..utils.errors import CheckFailure, PreconditionError
from ..utils.logging import get_algebra_logger, log_performance
from .verma import VermaModule, as_scalar

logger = get_algebra_logger(__name__)


def generator_names(ctx: AlgebraContext) -> List[str]:
    return ["x", "y"] + [f"g{i}" for i in range(1, ctx.r + 1)]


def generator_elements(ctx: AlgebraContext) -> Dict[str, HElement]:
    out = {"x": HElement.x(ctx), "y": HElement.y(ctx)}
    out.update({f"g{i}": HElement.g(ctx, i) for i in range(1, ctx.r + 1)})
    return out


def matrix_power(M: galois.FieldArray, n: int) -> galois.FieldArray:
    F = type(M)
    result = F.Identity(M.shape[0])
    base = M
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return result


@dataclass(eq=False)
class MatrixRep:
    """A finite-dimensional H_lambda-module given by generator matrices."""

    ctx: AlgebraContext
    mats: Dict[str, galois.FieldArray]
    alpha: Optional[galois.FieldArray] = None
    beta: Optional[galois.FieldArray] = None
    generator: Optional[str] = None
    kind: str = "simple"
    certificate: Dict[str, Any] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return int(self.mats["y"].shape[0])

    def matrix(self, name: str) -> galois.FieldArray:
        return self.mats[name]

    @cached_property
    def group_matrices(self) -> List[galois.FieldArray]:
        """rho(g^a) for every group index a."""
        ctx = self.ctx
        out = []
        for exps in ctx.ga.exps:
            M = ctx.F.Identity(self.dim)
            for i, e in enumerate(exps):
                if e:
                    M = M @ matrix_power(self.mats[f"g{i + 1}"], int(e))
            out.append(M)
        return out

    def represent(self, h: HElement) -> galois.FieldArray:
        """rho(h) = sum c Y^j X^i G^a over the normal form of h."""
        ctx = self.ctx
        d = self.dim
        total = ctx.F.Zeros((d, d))
        if h.is_zero():
            return total
        ny, nx = h.coeffs.shape[:2]
        y_powers = [ctx.F.Identity(d)]
        for _ in range(1, ny):
            y_powers.append(y_powers[-1] @ self.mats["y"])
        x_powers = [ctx.F.Identity(d)]
        for _ in range(1, nx):
            x_powers.append(x_powers[-1] @ self.mats["x"])
        for j in range(ny):
            for i in range(nx):
                coeffs = h.coeffs[j, i]
                if not np.any(coeffs):
                    continue
                inner = ctx.F.Zeros((d, d))
                for a in np.nonzero(coeffs)[0]:
                    inner += coeffs[a] * self.group_matrices[int(a)]
                total += y_powers[j] @ x_powers[i] @ inner
        return total

    def to_json(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "alpha": format_element(self.alpha) if self.alpha is not None else None,
            "beta": format_element(self.beta) if self.beta is not None else None,
            "generator": self.generator,
            "matrices": {
                name: [[format_element(c) for c in row] for row in M]
                for name, M in self.mats.items()
            },
            "certificate": {k: v for k, v in self.certificate.items() if isinstance(v, (bool, int, str))},
        }


def generator_choice(ctx: AlgebraContext, alpha: Any) -> Tuple[str, HElement, int]:
    """(name, G, expected dimension) for the maximal submodule of Delta_alpha."""
    alpha = as_scalar(ctx, alpha)
    if alpha != 0:
        if ctx.t == 0:
            return "C", c_generator(ctx), ctx.q
        return "D", big_generator_t1(ctx), ctx.p * ctx.q
    if not ctx.ga.is_unit(ctx.lam):
        return "y", HElement.y(ctx), 1
    return "Y", y_generator(ctx), ctx.p


def maximal_submodule_generator(alpha: Any, beta: Any, ctx: AlgebraContext) -> galois.FieldArray:
    """P(y) with k[y] P v the maximal submodule of Delta_alpha, certified.

    Raises:
        CheckFailure: If P v is not fixed by the g_i or not scaled by x
    """
    alpha, beta = as_scalar(ctx, alpha), as_scalar(ctx, beta)
    name, G, _ = generator_choice(ctx, alpha)
    verma = VermaModule(ctx, alpha)
    P = verma.generator_image(G - HElement.constant(ctx, beta))
    report = verma.is_highest_weight(P)
    if not (report["g_fixed"] and report["x_scalar"]):
        raise CheckFailure(
            f"{name} - beta does not generate a proper submodule of Delta_alpha", code="not_highest_weight"
        )
    if P[-1] != 1:
        raise CheckFailure(f"generator {name} - beta is not monic in y")
    return P


def _reduce(vec: galois.FieldArray, modulus: galois.Poly, d: int) -> galois.FieldArray:
    F = modulus.field
    out = F.Zeros(d)
    if vec.size == 0:
        return out
    rem = galois.Poly(vec[::-1].copy(), field=F) % modulus
    coeffs = rem.coeffs[::-1]
    out[: coeffs.size] = coeffs
    return out


def quotient_matrices(verma: VermaModule, modulus: galois.Poly) -> Dict[str, galois.FieldArray]:
    """Generator matrices on k[y]/(modulus) inherited from Delta_alpha."""
    ctx = verma.ctx
    d = modulus.degree
    mats = {}
    for name, element in generator_elements(ctx).items():
        M = ctx.F.Zeros((d, d))
        for j in range(d):
            M[:, j] = _reduce(verma.act_on_basis(element, j), modulus, d)
        mats[name] = M
    return mats


@log_performance
def simple_module(alpha: Any, beta: Any, ctx: AlgebraContext) -> MatrixRep:
    """S_(alpha, beta) = Delta_alpha / k[y] P v as a MatrixRep.

    Raises:
        CheckFailure: If the generator is not certified or a relation fails
    """
    alpha, beta = as_scalar(ctx, alpha), as_scalar(ctx, beta)
    name, _, expected_dim = generator_choice(ctx, alpha)
    P = maximal_submodule_generator(alpha, beta, ctx)
    modulus = galois.Poly(P[::-1].copy(), field=ctx.F)
    mats = quotient_matrices(VermaModule(ctx, alpha), modulus)
    rep = MatrixRep(ctx, mats, alpha=alpha, beta=beta, generator=f"{name}-beta")
    rep.certificate = {"expected_dim": expected_dim, "dim_matches": rep.dim == expected_dim}

    report = relation_suite(rep)
    rep.certificate.update(report)
    if not report["ok"]:
        failed = [k for k, v in report.items() if v is False]
        raise CheckFailure(f"relations fail on S_(alpha, beta): {failed}", code="relation_failure")
    logger.debug(
        "Simple module built",
        data={"alpha": format_element(alpha), "beta": format_element(beta), "dim": rep.dim, "generator": name},
    )
    return rep


def verma_truncation(alpha: Any, d: int, ctx: AlgebraContext, beta: Any = 0) -> MatrixRep:
    """Delta_alpha cut down to y-degree < d as the module Delta_alpha / (G - beta)^k Delta_alpha.

    d must be a multiple k of the simple dimension. The result contains
    (G - beta) Delta_alpha / (G - beta)^k Delta_alpha, so for k > 1 it is a
    reducible module with S_(alpha, beta) as a quotient.

    Raises:
        PreconditionError: If alpha = 0 or d is not a positive multiple of dim S
    """
    alpha, beta = as_scalar(ctx, alpha), as_scalar(ctx, beta)
    if alpha == 0:
        raise PreconditionError("truncation needs a central generator, so alpha != 0")
    name, _, dim = generator_choice(ctx, alpha)
    if d < dim or d % dim:
        raise PreconditionError(f"truncation degree {d} must be a positive multiple of {dim}")
    P = maximal_submodule_generator(alpha, beta, ctx)
    modulus = galois.Poly(P[::-1].copy(), field=ctx.F) ** (d // dim)
    mats = quotient_matrices(VermaModule(ctx, alpha), modulus)
    return MatrixRep(ctx, mats, alpha=alpha, beta=beta, generator=f"({name}-beta)^{d // dim}", kind="truncation")


def relation_suite(rep: MatrixRep, ctx: Optional[AlgebraContext] = None) -> Dict[str, Any]:
    """Defining relations of H_lambda and the central character as matrix identities."""
    ctx = ctx or rep.ctx
    F = ctx.F
    d = rep.dim
    identity = F.Identity(d)
    X, Y = rep.mats["x"], rep.mats["y"]
    gs = [rep.mats[f"g{i}"] for i in range(1, ctx.r + 1)]

    report: Dict[str, Any] = {}
    report["g_order"] = all(np.array_equal(matrix_power(G, ctx.p), identity) for G in gs)
    report["g_commute"] = all(np.array_equal(A @ B, B @ A) for A in gs for B in gs) and all(
        np.array_equal(X @ G, G @ X) for G in gs
    )
    lam = rep.represent(HElement.from_ga(ctx, ctx.lam))
    report["commutator"] = bool(np.array_equal(X @ Y - Y @ X, lam))
    report["g_y"] = all(
        np.array_equal(G @ Y - Y @ G, ctx.ga.xis[i] * (X @ G)) for i, G in enumerate(gs)
    )

    if rep.alpha is not None:
        B = matrix_power(X, ctx.p)
        report["B_scalar"] = bool(np.array_equal(B, rep.alpha**ctx.p * identity))
        if ctx.t == 0:
            shift = F(2) * ctx.ga.augmentation(ctx.ga.D_inverse(ctx.lam))
            A = rep.represent(quadratic_generator(ctx))
            report["A_scalar"] = bool(np.array_equal(A, (rep.alpha**2 - shift) * identity))
    if rep.kind == "simple" and rep.alpha is not None and rep.beta is not None:
        _, G, _ = generator_choice(ctx, rep.alpha)
        report["generator_scalar"] = bool(np.array_equal(rep.represent(G), rep.beta * identity))

    report["ok"] = all(v for v in report.values() if isinstance(v, bool))
    return report


def no_fixed_low_degree(ctx: AlgebraContext, alpha: Any) -> Dict[int, bool]:
    """For alpha != 0: no f(y) v of degree 0 < n < p in Delta_alpha is fixed by g1.

    Compares the g1-fixed spaces of the degree filtration: a fixed vector
    of exact degree n makes the fixed space grow from degree n - 1 to n.
    """
    alpha = as_scalar(ctx, alpha)
    if alpha == 0:
        raise PreconditionError("the low-degree check assumes alpha != 0")
    verma = VermaModule(ctx, alpha)
    g = HElement.g(ctx, 1)
    p = ctx.p
    G = ctx.F.Zeros((p, p))
    for j in range(p):
        image = verma.act_on_basis(g, j)
        G[: image.size, j] = image
    out = {}
    previous = 1  # constants are fixed
    for n in range(1, p):
        block = G[: n + 1, : n + 1] - ctx.F.Identity(n + 1)
        kernel = (n + 1) - int(np.linalg.matrix_rank(block))
        out[n] = kernel == previous
        previous = kernel
    return out
