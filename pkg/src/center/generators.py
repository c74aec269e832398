"""Central generators of H_lambda and checks of the presentation of its center.

For t = 0 the center is generated by

    A = x^2 - 2 D^-1(lambda),   B = x^p,   C = y^q - y delta^q(g1)/delta(g1)

and for t = 1 by B = x^p and

    D = y^(pq) - y^p delta^(pq)(g1)/delta^p(g1).

Centrality is checked against y and the g_i, which generate H_lambda
(x = g1 y g1^-1 - y up to the unit xi_1 = 1).
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional

import galois
import numpy as np

from ..ore.context import AlgebraContext
from ..ore.delta import delta, delta_power, delta_quotient, divide_exact
from ..ore.element import HElement, format_R, re_from_ga, re_shift, re_sub, re_x_power
from ..ore.product import commutator, commutator_with_y, gr_leading, h_pow
from ..scalars.field import format_element, pth_root, sqrt
from ..utils.errors import CheckFailure, PreconditionError
from ..utils.logging import get_algebra_logger, log_performance

logger = get_algebra_logger(__name__)


@dataclass
class CentralGenerators:
    """Generators of Z_lambda together with the checks run while building them."""

    case: str  # "t0" or "t1"
    B: HElement
    big: HElement
    A: Optional[HElement] = None
    scalar_defect: Optional[galois.FieldArray] = None
    shift: Optional[galois.FieldArray] = None
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ctx(self) -> AlgebraContext:
        return self.B.ctx

    def elements(self) -> Dict[str, HElement]:
        out = {"B": self.B, "big": self.big}
        if self.A is not None:
            out["A"] = self.A
        return out

    def to_json(self) -> Dict[str, Any]:
        return {
            "case": self.case,
            "A": str(self.A) if self.A is not None else None,
            "B": str(self.B),
            "big": str(self.big),
            "big_degree": self.big.y_degree,
            "scalar_defect": format_element(self.scalar_defect) if self.scalar_defect is not None else None,
            "shift": format_element(self.shift) if self.shift is not None else None,
            "checks": dict(self.checks),
        }


def is_central(h: HElement, ctx: Optional[AlgebraContext] = None) -> bool:
    """True iff h commutes with y and with every g_i."""
    ctx = ctx or h.ctx
    if not commutator_with_y(h).is_zero():
        return False
    return all(commutator(h, HElement.g(ctx, i)).is_zero() for i in range(1, ctx.r + 1))


def quadratic_generator(ctx: AlgebraContext) -> HElement:
    """A = x^2 - 2 D^-1(lambda); D^-1 agrees with D^(q-2) on t = 0 elements."""
    if ctx.t != 0:
        raise PreconditionError("the quadratic central generator exists for t = 0 only")
    correction = ctx.ga.D_inverse(ctx.lam) * ctx.F(2)
    return HElement.x(ctx, 2) - HElement.from_ga(ctx, correction)


def c_generator(ctx: AlgebraContext) -> HElement:
    """C = y^q - y delta^q(g1)/delta(g1)."""
    quotient = delta_quotient(ctx, ctx.q, 1)
    return HElement.y(ctx, ctx.q) - HElement.from_R(ctx, quotient, y_power=1)


def big_generator_t1(ctx: AlgebraContext) -> HElement:
    """D = y^(pq) - y^p delta^(pq)(g1)/delta^p(g1)."""
    p, q = ctx.p, ctx.q
    h = divide_exact(ctx, delta_power(ctx, "g1", p * q), delta_power(ctx, "g1", p))
    return HElement.y(ctx, p * q) - HElement.from_R(ctx, h, y_power=p)


def y_generator(ctx: AlgebraContext) -> HElement:
    """Y = y^p - y delta^p(g1)/delta(g1)."""
    return HElement.y(ctx, ctx.p) - HElement.from_R(ctx, delta_quotient(ctx, ctx.p, 1), y_power=1)


def expected_gr_big(ctx: AlgebraContext) -> HElement:
    """y^q - y x^(q-1) for t = 0, y^(pq) - y^p x^(pq-p) for t = 1."""
    if ctx.t == 0:
        return HElement.y(ctx, ctx.q) - HElement.from_R(ctx, re_x_power(ctx, ctx.q - 1), y_power=1)
    pq = ctx.p * ctx.q
    return HElement.y(ctx, pq) - HElement.from_R(ctx, re_x_power(ctx, pq - ctx.p), y_power=ctx.p)


@log_performance
def central_generators(ctx: AlgebraContext) -> CentralGenerators:
    """Build and check the central generators of H_lambda.

    Raises:
        PreconditionError: If lambda = 0
        CheckFailure: If a generator fails to be central
    """
    if ctx.ga.is_zero(ctx.lam):
        raise PreconditionError("lambda = 0: use H_0 closed form k[x, y^q - y x^(q-1)]")

    B = HElement.x(ctx, ctx.p)
    if ctx.t == 0:
        A = quadratic_generator(ctx)
        gens = CentralGenerators("t0", B=B, big=c_generator(ctx), A=A)
        report = verify_presentation(gens, ctx)
        gens.scalar_defect = report["scalar_defect"]
        gens.shift = report["shift"]
        gens.checks["shifted_relation"] = report["shifted_relation"]
    else:
        gens = CentralGenerators("t1", B=B, big=big_generator_t1(ctx))

    for name, element in gens.elements().items():
        ok = is_central(element, ctx)
        gens.checks[f"{name}_central"] = ok
        logger.check(f"{name} central", ok, {"case": gens.case})
        if not ok:
            raise CheckFailure(f"generator {name} is not central", code="not_central")
    gens.checks["gr_big"] = gr_leading(gens.big) == expected_gr_big(ctx)

    logger.info(
        "Central generators built",
        data={"case": gens.case, "p": ctx.p, "r": ctx.r, "big_degree": gens.big.y_degree},
    )
    return gens


def verify_presentation(gens: CentralGenerators, ctx: Optional[AlgebraContext] = None) -> Dict[str, Any]:
    """Check the relation between A and B (t = 0).

    A^p - B^2 must be a scalar; with s = 2 sum_a e(a)^-1 c_a the shifted
    relation (A + s)^p = B^2 holds exactly.

    Raises:
        PreconditionError: For t = 1
        CheckFailure: If the defect is not a scalar
    """
    ctx = ctx or gens.ctx
    if gens.case != "t0" or gens.A is None:
        raise PreconditionError("the presentation relation applies to t = 0")
    p = ctx.p
    B_squared = gens.B * gens.B
    defect = h_pow(gens.A, p) - B_squared
    value = defect.scalar_value()
    if value is None:
        raise CheckFailure(f"A^p - B^2 is not a scalar: {defect}", code="non_scalar_defect")

    shift = ctx.F(2) * ctx.ga.augmentation(ctx.ga.D_inverse(ctx.lam))
    shifted = h_pow(gens.A + HElement.constant(ctx, shift), p) - B_squared
    report = {
        "scalar_defect": value,
        "shift": shift,
        "expected_defect": (-shift) ** p,
        "defect_matches_shift": bool(value == (-shift) ** p),
        "shifted_relation": shifted.is_zero(),
    }
    logger.check("shifted presentation relation", report["shifted_relation"], {"defect": format_element(value)})
    return report


def delta_identity_report(ctx: AlgebraContext) -> List[Dict[str, Any]]:
    """Check delta(delta^m(g_i)/delta(g_i)) = (D^(m-1)(lambda) - xi_i^(m-1) lambda) x^(m-2), m = p^j.

    For r = 1 and m = p the right side is 0 when t = 0 and -c0 x^(p-2) when
    t = 1.
    """
    ga = ctx.ga
    rows = []
    for i in range(1, ctx.r + 1):
        for j in range(1, ctx.r + 1):
            m = ctx.p**j
            lhs = delta(ctx, delta_quotient(ctx, m, i))
            coeff = ga.D_power(ctx.lam, m - 1) - ga.xis[i - 1] ** (m - 1) * ctx.lam
            rhs = re_shift(ctx, re_from_ga(ctx, coeff), m - 2)
            ok = not np.any(re_sub(lhs, rhs))
            rows.append({"i": i, "j": j, "m": m, "value": format_R(ctx, lhs), "expected": format_R(ctx, rhs), "ok": ok})
    return rows


def delta_kernel_check(ctx: AlgebraContext) -> Dict[str, Any]:
    """For t = 1, the kernel of delta on R_(<p) is the constants.

    So no element of x-degree < p outside k[x^p] commutes with y.
    """
    if ctx.t != 1:
        raise PreconditionError("the commutant check applies to t = 1")
    p, N = ctx.p, ctx.N
    dim = p * N
    matrix = ctx.F.Zeros(((p + 1) * N, dim))
    for i in range(p):
        for a in range(N):
            basis = ctx.F.Zeros((i + 1, N))
            basis[i, a] = 1
            image = delta(ctx, basis)
            flat = ctx.F.Zeros((p + 1) * N)
            flat[: image.size] = image.reshape(-1)
            matrix[:, i * N + a] = flat
    rank = int(np.linalg.matrix_rank(matrix))
    basis_nonzero = all(np.any(matrix[:, col]) for col in range(1, dim))
    return {"kernel_dimension": dim - rank, "ok": dim - rank == 1, "basis_images_nonzero": basis_nonzero}


def central_character(ctx: AlgebraContext, alpha: Any, beta: Any) -> Dict[str, Any]:
    """Scalars by which A, B and the big generator act on S_(alpha, beta).

    alpha is recovered from the B-coordinate alpha^p by the p-th root and,
    up to sign, from the A-coordinate by a square root.
    """
    alpha = ctx.F(alpha) if not isinstance(alpha, galois.FieldArray) else alpha
    beta = ctx.F(beta) if not isinstance(beta, galois.FieldArray) else beta
    B_value = alpha**ctx.p
    out: Dict[str, Any] = {"B": B_value, "big": beta, "alpha_from_B": pth_root(B_value)}
    if ctx.t == 0:
        A_value = alpha**2 - ctx.F(2) * ctx.ga.augmentation(ctx.ga.D_inverse(ctx.lam))
        out["A"] = A_value
        root = sqrt(alpha**2)
        out["alpha_from_A"] = root
    return out


def zero_shift_search(p: int, m: Optional[int] = None, limit: int = 50) -> List[AlgebraContext]:
    """r = 1, t = 0 parameters with prime-field coefficients and zero shift.

    The shift 2 sum_a a^-1 c_a vanishes, so A^p = B^2 holds unshifted.
    """
    from ..scalars.field import build_field
    from ..group_algebra.element import group_algebra

    F = build_field(p, m if m is not None else 2)
    ga = group_algebra(F, 1)
    found: List[AlgebraContext] = []
    for coeffs in product(range(p), repeat=p - 1):
        if not any(coeffs):
            continue
        lam = F.Zeros(p)
        lam[1:] = F(list(coeffs))
        if ga.augmentation(ga.D_inverse(lam)) != 0:
            continue
        found.append(AlgebraContext(ga, lam))
        if len(found) >= limit:
            break
    logger.debug("Zero-shift search", data={"p": p, "found": len(found)})
    return found
