"""Periodic free resolutions of simple and induced modules (r = 1).

Notation: T = g - 1, N = sum_a g^a, so T^(p-1) = N and N T = 0.

azumaya     S_(alpha, beta) with C' = (big central) - beta central:
            d0 = (x - alpha; T; C'), d1 then A, B alternating with period 2.
singular    S_(0, beta) one-dimensional, lambda in Rad kG, Y' = y - beta,
            u = lambda / (g - 1).
weyl        H / H(g - 1) with d_i alternating [T], [N].

Every composite d_(i+1) d_i is checked to vanish in H_lambda.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import galois

from ..center.generators import big_generator_t1, c_generator, y_generator
from ..ore.context import AlgebraContext
from ..ore.element import HElement
from ..reps.verma import as_scalar
from ..scalars.field import format_element
from ..utils.errors import CheckFailure, PreconditionError
from ..utils.logging import get_algebra_logger, log_performance
from .matrices import HMatrix

logger = get_algebra_logger(__name__)

KINDS = ("azumaya", "singular", "weyl")


@dataclass
class Resolution:
    """A free resolution given by a finite prefix and a periodic tail."""

    kind: str
    ctx: AlgebraContext
    prefix: List[HMatrix]
    period: List[HMatrix]
    alpha: Optional[galois.FieldArray] = None
    beta: Optional[galois.FieldArray] = None
    composites_checked: int = 0

    def differential(self, i: int) -> HMatrix:
        """d_i : P_(i+1) -> P_i."""
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def rank(self, i: int) -> int:
        """Rank of the free module P_i."""
        return self.differential(i).cols

    def default_depth(self) -> int:
        return len(self.prefix) + 2 * len(self.period)

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "alpha": format_element(self.alpha) if self.alpha is not None else None,
            "beta": format_element(self.beta) if self.beta is not None else None,
            "prefix": [d.to_json() for d in self.prefix],
            "period": [d.to_json() for d in self.period],
            "composites_checked": self.composites_checked,
        }


def _units(ctx: AlgebraContext) -> Dict[str, HElement]:
    ga = ctx.ga
    g = HElement.g(ctx, 1)
    one = HElement.constant(ctx, 1)
    T = g - one
    return {
        "x": HElement.x(ctx),
        "g": g,
        "T": T,
        "N": HElement.from_ga(ctx, ga.norm_element()),
        "gT": HElement.from_ga(ctx, ga.mul(ga.generator(1), ga.power(ga.generator(1) - ga.one(), ctx.p - 2))),
    }


def _azumaya_matrices(ctx: AlgebraContext, alpha: galois.FieldArray, big: HElement) -> Dict[str, HMatrix]:
    u = _units(ctx)
    T, N = u["T"], u["N"]
    xa = u["x"] - HElement.constant(ctx, alpha)
    ax = -xa
    Cp = big
    z = HElement.zero(ctx)
    return {
        "d0": HMatrix.column(ctx, [xa, T, Cp]),
        "d1": HMatrix(ctx, [[Cp, z, ax], [z, -Cp, T], [T, ax, z], [z, N, z]]),
        "A": HMatrix(ctx, [[T, xa, -Cp, z], [z, N, z, Cp], [z, z, N, xa], [z, z, z, T]]),
        "B": HMatrix(ctx, [[N, ax, Cp, z], [z, T, z, -Cp], [z, z, T, ax], [z, z, z, N]]),
    }


def _singular_matrices(ctx: AlgebraContext, beta: galois.FieldArray) -> Dict[str, HMatrix]:
    e = _units(ctx)
    x, g, T, N, gT = e["x"], e["g"], e["T"], e["N"], e["gT"]
    Yp = HElement.y(ctx) - HElement.constant(ctx, beta)
    quotient = HElement.from_ga(ctx, ctx.ga.divide_by_g_minus_one(ctx.lam))
    z = HElement.zero(ctx)
    return {
        "d0": HMatrix.column(ctx, [x, T, Yp]),
        "d1": HMatrix(ctx, [[Yp, quotient, -x], [g, Yp, -T], [-T, x, z], [z, N, z]]),
        "A": HMatrix(ctx, [[T, -x, Yp, z], [z, N, gT, -Yp], [z, z, N, -x], [z, z, z, T]]),
        "B": HMatrix(ctx, [[N, x, -Yp, quotient], [z, T, -g, Yp], [z, z, T, x], [z, z, z, N]]),
    }


def composite_report(resolution: Resolution, depth: Optional[int] = None) -> List[Dict[str, Any]]:
    """d_(i+1) d_i for i < depth with the nonzero entries of each composite."""
    depth = depth if depth is not None else resolution.default_depth()
    out = []
    for i in range(depth):
        product = resolution.differential(i + 1) @ resolution.differential(i)
        out.append({"i": i, "zero": product.is_zero(), "nonzero": product.nonzero_entries()})
    return out


def check_composites(resolution: Resolution, depth: Optional[int] = None) -> None:
    """Raises CheckFailure at the first nonvanishing composite."""
    for row in composite_report(resolution, depth):
        if not row["zero"]:
            raise CheckFailure(
                f"{resolution.kind} resolution: d_{row['i'] + 1} d_{row['i']} != 0 at {row['nonzero'][:3]}",
                code="nonzero_composite",
            )
        resolution.composites_checked += 1


@log_performance
def build_resolution(
    kind: str,
    ctx: AlgebraContext,
    alpha: Any = 0,
    beta: Any = 0,
    depth: Optional[int] = None,
) -> Resolution:
    """Build a resolution template and verify its composites.

    Raises:
        PreconditionError: For r > 1, an unknown kind, or parameters outside
            the template's range (the t = 1 simple at alpha = 0 has no
            central generator to resolve with)
        CheckFailure: If a composite is nonzero
    """
    if kind not in KINDS:
        raise PreconditionError(f"unknown resolution kind {kind!r}; expected one of {KINDS}")
    if ctx.r != 1:
        raise PreconditionError("resolutions are implemented for r = 1")
    alpha, beta = as_scalar(ctx, alpha), as_scalar(ctx, beta)
    unit = ctx.ga.is_unit(ctx.lam)

    if kind == "azumaya":
        if alpha == 0 and not unit:
            raise PreconditionError("alpha = 0 with lambda in the radical: use the singular resolution")
        if alpha == 0 and ctx.t == 1:
            raise PreconditionError(
                "t = 1, alpha = 0: Y - beta is not central; see t1_singular_variant_report"
            )
        big = c_generator(ctx) if ctx.t == 0 else big_generator_t1(ctx)
        mats = _azumaya_matrices(ctx, alpha, big - HElement.constant(ctx, beta))
        resolution = Resolution(kind, ctx, [mats["d0"], mats["d1"]], [mats["A"], mats["B"]], alpha, beta)
    elif kind == "singular":
        if unit:
            raise PreconditionError("the singular resolution requires lambda in Rad kG")
        mats = _singular_matrices(ctx, beta)
        resolution = Resolution(kind, ctx, [mats["d0"], mats["d1"]], [mats["A"], mats["B"]], ctx.F(0), beta)
    else:
        e = _units(ctx)
        resolution = Resolution(kind, ctx, [], [HMatrix(ctx, [[e["T"]]]), HMatrix(ctx, [[e["N"]]])])

    check_composites(resolution, depth)
    logger.debug("Resolution verified", data={"kind": kind, "composites": resolution.composites_checked})
    return resolution


def t1_singular_variant_report(ctx: AlgebraContext, beta: Any = 0) -> Dict[str, Any]:
    """Try the azumaya template at alpha = 0, t = 1 with C' = Y - x^p - beta.

    Returned as a report rather than raised: the composites show where the
    template breaks.
    """
    if ctx.r != 1 or ctx.t != 1:
        raise PreconditionError("the variant concerns r = 1, t = 1")
    beta = as_scalar(ctx, beta)
    Cp = y_generator(ctx) - HElement.x(ctx, ctx.p) - HElement.constant(ctx, beta)
    mats = _azumaya_matrices(ctx, ctx.F(0), Cp)
    resolution = Resolution("azumaya-t1-variant", ctx, [mats["d0"], mats["d1"]], [mats["A"], mats["B"]])
    report = composite_report(resolution)
    zero = all(row["zero"] for row in report)
    logger.info("t = 1 variant resolution", data={"composites_zero": zero})
    return {"composites_zero": zero, "composites": report}
