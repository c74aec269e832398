"""Ordered linear-factor products in H_lambda.

For lambda = g^a a single group element with eigenvalue alpha = e(a), the
big central generator factors as

    C = prod_(zeta in Xi) prod_(a=1..p) (y - alpha (zeta + a) x),

where Xi spans F_q over F_p together with 1 and the factors are taken in
the stated order: a ascending inside each zeta-block, blocks in
lexicographic order of the xi-coordinates of zeta. The order matters.
"""

from itertools import product
from typing import Any, Dict, List

import galois

from ..ore.context import AlgebraContext
from ..ore.element import HElement
from ..ore.product import h_product
from ..utils.errors import CheckFailure, PreconditionError
from ..utils.logging import get_algebra_logger, log_performance
from .generators import c_generator, is_central, y_generator

logger = get_algebra_logger(__name__)


def xi_set(ctx: AlgebraContext) -> List[galois.FieldArray]:
    """Xi = span(xi_2, ..., xi_r) over F_p, lexicographic in the coordinates."""
    out = []
    for coords in product(range(ctx.p), repeat=ctx.r - 1):
        zeta = ctx.F(0)
        for c, xi in zip(coords, ctx.ga.xis[1:]):
            zeta = zeta + ctx.F(c) * xi
        out.append(zeta)
    return out


def linear_factor(ctx: AlgebraContext, c: galois.FieldArray) -> HElement:
    """y - c x."""
    return HElement.y(ctx) - HElement.x(ctx).scale(c)


def _lambda_eigenvalue(ctx: AlgebraContext) -> galois.FieldArray:
    exps = ctx.ga.group_exponent(ctx.lam)
    if exps is None or not any(exps):
        raise PreconditionError("lambda must be a single group element g^a with a != 0")
    return ctx.ga.eigen[ctx.ga.index(exps)]


def ordered_factors(ctx: AlgebraContext, reverse: bool = False) -> List[HElement]:
    alpha = _lambda_eigenvalue(ctx)
    factors = []
    for zeta in xi_set(ctx):
        block = [linear_factor(ctx, alpha * (zeta + ctx.F(a % ctx.p))) for a in range(1, ctx.p + 1)]
        factors.extend(reversed(block) if reverse else block)
    return factors


@log_performance
def ordered_product_big(ctx: AlgebraContext) -> HElement:
    """The ordered factorization of y^q - y delta^q(g1)/delta(g1).

    Raises:
        PreconditionError: If lambda is not a single group element
        CheckFailure: If the product differs from the closed form
    """
    result = h_product(ordered_factors(ctx))
    expected = c_generator(ctx)
    if result != expected:
        raise CheckFailure(f"ordered product differs from the big generator: {result - expected}")
    return result


def reversed_product_report(ctx: AlgebraContext) -> Dict[str, Any]:
    """The product with a descending inside each block, compared with C."""
    result = h_product(ordered_factors(ctx, reverse=True))
    discrepancy = result - c_generator(ctx)
    return {
        "product": str(result),
        "discrepancy": str(discrepancy),
        "central": is_central(result, ctx),
    }


def _require_lambda_g1(ctx: AlgebraContext) -> None:
    exps = ctx.ga.group_exponent(ctx.lam)
    if exps is None or tuple(exps) != (1,) + (0,) * (ctx.r - 1):
        raise PreconditionError("Y_zeta is defined for lambda = g1")


def y_zeta_closed_form(zeta: Any, ctx: AlgebraContext) -> HElement:
    """Y - (zeta^p - zeta) x^p."""
    zeta = zeta if isinstance(zeta, galois.FieldArray) else ctx.F(zeta)
    return y_generator(ctx) - HElement.x(ctx, ctx.p).scale(zeta**ctx.p - zeta)


def y_zeta(zeta: Any, ctx: AlgebraContext) -> HElement:
    """Y_zeta = prod_(a=1..p) (y - (zeta + a) x), checked against its closed form.

    Raises:
        PreconditionError: Unless r > 1 and lambda = g1
        CheckFailure: If expansion and closed form disagree
    """
    if ctx.r < 2:
        raise PreconditionError("Y_zeta is defined for r > 1")
    _require_lambda_g1(ctx)
    zeta = zeta if isinstance(zeta, galois.FieldArray) else ctx.F(zeta)
    expanded = h_product([linear_factor(ctx, zeta + ctx.F(a % ctx.p)) for a in range(1, ctx.p + 1)])
    closed = y_zeta_closed_form(zeta, ctx)
    if expanded != closed:
        raise CheckFailure(f"Y_zeta expansion disagrees with the closed form for zeta = {zeta}")
    return expanded


def t1_product_claim(ctx: AlgebraContext) -> Dict[str, Any]:
    """Build prod_(a in F_p) (C - a x^q) for t = 1 and report whether it is central.

    C = y^q - y delta^q(g1)/delta(g1) (for r = 1 this is Y). The verified
    t = 1 generator is big_generator_t1; this product is reported only.
    """
    if ctx.t != 1:
        raise PreconditionError("the product claim concerns t = 1")
    C = c_generator(ctx)
    xq = HElement.x(ctx, ctx.q)
    result = h_product([C - xq.scale(ctx.F(a)) for a in range(ctx.p)])
    central = is_central(result, ctx)
    logger.info("t = 1 product form", data={"central": central, "degree": result.y_degree})
    return {"product": str(result), "degree": result.y_degree, "central": central}
