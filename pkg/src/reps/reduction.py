"""Central reductions H_lambda / m H_lambda and sweeps over the locus of simples.

For r = 1, t = 0 the central quotient at (alpha, beta) is free over
k[y]/(C - beta), which has dimension p, with fibre
R_bar = kG[x] / (x^2 - w, x^p - b), where

    w = alpha^2 - 2 aug(D^-1 lambda) + 2 D^-1(lambda),   b = alpha^p.

Using x^2 = w, R_bar is the quotient of kG + kG x by the kG-span of
u (x w^m - b) and u (w^(m+1) - b x), m = (p - 1)/2. Its dimension is 2N
minus the rank of these 2N vectors.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Iterable, List, Optional

import galois
import numpy as np

from ..ore.context import AlgebraContext
from ..ore.element import HElement
from ..ore.product import commutator, h_mul
from ..scalars.field import format_element
from ..utils.config import get_config
from ..utils.errors import PreconditionError
from ..utils.logging import correlation_context, get_algebra_logger, log_performance
from .irreducible import is_irreducible
from .simple import generator_choice, simple_module
from .verma import as_scalar

logger = get_algebra_logger(__name__)


def fibre_relations(ctx: AlgebraContext, alpha: galois.FieldArray) -> galois.FieldArray:
    """The 2N relation vectors of x^p = alpha^p in coordinates (kG part, x part)."""
    ga, F, N, p = ctx.ga, ctx.F, ctx.N, ctx.p
    m = (p - 1) // 2
    d_inv = ga.D_inverse(ctx.lam)
    w = ga.constant(alpha**2 - F(2) * ga.augmentation(d_inv)) + F(2) * d_inv
    b = alpha**p
    w_m = ga.power(w, m)
    w_m1 = ga.mul(w_m, w)
    rows = F.Zeros((2 * N, 2 * N))
    for a in range(N):
        u = F.Zeros(N)
        u[a] = 1
        rows[2 * a, :N] = -b * u
        rows[2 * a, N:] = ga.mul(u, w_m)
        rows[2 * a + 1, :N] = ga.mul(u, w_m1)
        rows[2 * a + 1, N:] = -b * u
    return rows


@log_performance
def bar_dimension(alpha: Any, beta: Any, ctx: AlgebraContext) -> int:
    """dim H_lambda / m_(alpha, beta) H_lambda for r = 1, t = 0.

    p^2 for alpha != 0 and for alpha = 0 with lambda a unit. For lambda in
    the radical and alpha = 0 the fibre grows, but x^p = 0 reads
    x w^m = 0 in the fibre and cuts it below 2p^2: at p = 3,
    lambda = g^2 - g it is 15. beta does not enter the count.

    Raises:
        PreconditionError: Unless r = 1 and t = 0
    """
    if ctx.r != 1 or ctx.t != 0:
        raise PreconditionError("bar_dimension is defined for r = 1, t = 0")
    alpha = as_scalar(ctx, alpha)
    as_scalar(ctx, beta)
    rank = int(np.linalg.matrix_rank(fibre_relations(ctx, alpha)))
    fibre = 2 * ctx.N - rank
    return ctx.p * fibre


def reference_bar_dimension(alpha: Any, ctx: AlgebraContext) -> int:
    """Stated fibre dimension: 2p^2 over alpha = 0 for lambda in the radical, p^2 otherwise."""
    alpha = as_scalar(ctx, alpha)
    if alpha == 0 and not ctx.ga.is_unit(ctx.lam):
        return 2 * ctx.p**2
    return ctx.p**2


def quotient_by_g_minus_one(ctx: AlgebraContext) -> Dict[str, Any]:
    """The two-sided ideal generated by the g_i - 1 contains x.

    [g_i - 1, y] = xi_i x g_i with g_i a unit, so modulo the ideal x = 0 and
    lambda reduces to its augmentation. The quotient is k[y] when the
    augmentation vanishes and 0 otherwise.
    """
    one = HElement.constant(ctx, 1)
    witnesses = []
    for i in range(1, ctx.r + 1):
        g = HElement.g(ctx, i)
        lhs = commutator(g - one, HElement.y(ctx))
        rhs = h_mul(HElement.x(ctx), g).scale(ctx.ga.xis[i - 1])
        witnesses.append(lhs == rhs)
    aug = ctx.ga.augmentation(ctx.lam)
    return {
        "x_in_ideal": all(witnesses),
        "augmentation": format_element(aug),
        "quotient_zero": bool(aug != 0),
        "quotient": "0" if aug != 0 else "k[y]",
    }


@dataclass
class LocusRow:
    alpha: galois.FieldArray
    beta: galois.FieldArray
    dim: int
    irreducible: bool
    method: str
    central_char_B: galois.FieldArray
    central_char_big: galois.FieldArray
    smooth: bool
    azumaya: Optional[bool]

    CSV_HEADER = "alpha,beta,dim,irreducible,central_char_B,central_char_big"

    def to_json(self) -> Dict[str, Any]:
        return {
            "alpha": format_element(self.alpha),
            "beta": format_element(self.beta),
            "dim": self.dim,
            "irreducible": self.irreducible,
            "method": self.method,
            "central_char_B": format_element(self.central_char_B),
            "central_char_big": format_element(self.central_char_big),
            "smooth": self.smooth,
            "azumaya": self.azumaya,
        }

    def to_csv(self) -> str:
        cells = [
            format_element(self.alpha),
            format_element(self.beta),
            str(self.dim),
            str(self.irreducible).lower(),
            format_element(self.central_char_B),
            format_element(self.central_char_big),
        ]
        return ",".join(f'"{c}"' if "," in c else c for c in cells)


def generic_dimension(ctx: AlgebraContext) -> int:
    return ctx.q if ctx.t == 0 else ctx.p * ctx.q


def _locus_row(ctx: AlgebraContext, alpha: galois.FieldArray, beta: galois.FieldArray) -> LocusRow:
    with correlation_context():
        rep = simple_module(alpha, beta, ctx)
        verdict = is_irreducible(rep)
        azumaya = None
        if ctx.r == 1 and ctx.t == 0:
            azumaya = bar_dimension(alpha, beta, ctx) == rep.dim**2
        row = LocusRow(
            alpha=alpha,
            beta=beta,
            dim=rep.dim,
            irreducible=verdict.irreducible,
            method=verdict.method,
            central_char_B=alpha**ctx.p,
            central_char_big=beta,
            smooth=rep.dim == generic_dimension(ctx),
            azumaya=azumaya,
        )
        logger.debug("Locus point", data=row.to_json())
        return row


@log_performance
def sweep_loci(
    ctx: AlgebraContext,
    alphas: Optional[Iterable[Any]] = None,
    betas: Optional[Iterable[Any]] = None,
    jobs: Optional[int] = None,
) -> List[LocusRow]:
    """Simple modules S_(alpha, beta) over a grid, one worker task per point.

    alphas and betas default to the prime field F_p. Rows come back in grid
    order.
    """
    prime = [ctx.F(a) for a in range(ctx.p)]
    alpha_values = [as_scalar(ctx, a) for a in alphas] if alphas is not None else prime
    beta_values = [as_scalar(ctx, b) for b in betas] if betas is not None else prime
    grid = list(product(alpha_values, beta_values))
    workers = jobs or get_config().compute.jobs or os.cpu_count() or 1
    logger.info("Sweeping locus", data={"points": len(grid), "workers": workers, "p": ctx.p})
    if workers == 1:
        return [_locus_row(ctx, a, b) for a, b in grid]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda point: _locus_row(ctx, *point), grid))


def structural_idempotent_check(
    ctx: AlgebraContext, samples: int, rng: Optional[np.random.Generator] = None
) -> Dict[str, Any]:
    """Random h with x- and y-degree at most 2p: h^2 = h only for h in {0, 1}."""
    rng = rng or np.random.default_rng(get_config().compute.seed)
    degree = 2 * ctx.p
    zero, one = HElement.zero(ctx), HElement.constant(ctx, 1)
    idempotents = 0
    nontrivial = 0
    for _ in range(samples):
        h = HElement.random(ctx, degree, degree, rng)
        if h_mul(h, h) == h:
            idempotents += 1
            if h != zero and h != one:
                nontrivial += 1
    for trivial in (zero, one):
        if h_mul(trivial, trivial) != trivial:
            nontrivial += 1
    return {
        "samples": samples,
        "degree": degree,
        "idempotents": idempotents,
        "nontrivial": nontrivial,
        "ok": nontrivial == 0,
    }


def expected_simple_dimension(ctx: AlgebraContext, alpha: Any) -> int:
    return generator_choice(ctx, alpha)[2]
