"""The derivation delta = lambda d/dx + x D of R = kE[x] and its powers.

    delta(x)   = lambda
    delta(g_i) = xi_i x g_i
    delta(x^i u) = i x^(i-1) lambda u + x^(i+1) D(u)      (u in kE)
"""

from typing import TYPE_CHECKING, List

import galois
import numpy as np

from ..utils.errors import PreconditionError
from ..utils.logging import get_algebra_logger, log_performance
from .element import (
    re_add,
    re_from_ga,
    re_ga_mul,
    re_is_zero,
    re_mul,
    re_shift,
    re_sub,
    re_trim,
    re_x_power,
)

if TYPE_CHECKING:
    from .context import AlgebraContext

logger = get_algebra_logger(__name__)


def delta(ctx: "AlgebraContext", a: galois.FieldArray) -> galois.FieldArray:
    """Apply delta to an REelement."""
    na = a.shape[0]
    if na == 0:
        return a
    out = ctx.F.Zeros((na + 1, ctx.N))
    out[1:] += a * ctx.ga.eigen
    if na > 1:
        factors = ctx.F(np.arange(1, na) % ctx.p)
        out[: na - 1] += (a[1:] @ ctx.lam_matrix.T) * factors[:, None]
    return re_trim(out)


def delta_chain(ctx: "AlgebraContext", a: galois.FieldArray, n: int) -> List[galois.FieldArray]:
    """[a, delta(a), ..., delta^n(a)], memoized per element."""
    chain = ctx.cached_chain(a)
    if chain is not None and len(chain) > n:
        return chain
    chain = list(chain) if chain is not None else [a]
    while len(chain) <= n:
        chain.append(delta(ctx, chain[-1]))
    ctx.store_chain(a, chain)
    return chain


def _target_element(ctx: "AlgebraContext", target: str) -> galois.FieldArray:
    if target == "x":
        return re_x_power(ctx, 1)
    if target == "g":
        return re_from_ga(ctx, ctx.ga.generator(1))
    if target.startswith("g") and target[1:].isdigit():
        return re_from_ga(ctx, ctx.ga.generator(int(target[1:])))
    if target == "lambda":
        return re_from_ga(ctx, ctx.lam)
    raise PreconditionError(f"unknown delta target {target!r}; use x, g, g1..g{ctx.r} or lambda")


@log_performance
def delta_power(ctx: "AlgebraContext", target: str, n: int) -> galois.FieldArray:
    """delta^n applied to x, g_i or lambda, memoized per (target, n).

    Args:
        ctx: Algebra context
        target: ``"x"``, ``"g"`` (= g1), ``"g<i>"`` or ``"lambda"``
        n: Non-negative exponent

    Returns:
        REelement delta^n(target)
    """
    if n < 0:
        raise PreconditionError(f"delta power must be non-negative, got {n}")
    key = "g1" if target == "g" else target
    chain = ctx.cached_powers(key)
    if not chain:
        chain = [_target_element(ctx, key)]
    while len(chain) <= n:
        chain.append(delta(ctx, chain[-1]))
    ctx.store_powers(key, chain)
    return chain[n]


def divide_by_delta_g(ctx: "AlgebraContext", u: galois.FieldArray, i: int = 1) -> galois.FieldArray:
    """Divide u by delta(g_i) = xi_i x g_i.

    Raises:
        PreconditionError: "parity violation" when x does not divide u
    """
    if re_is_zero(u):
        return u
    if np.any(u[0]):
        raise PreconditionError("parity violation")
    g_inv = ctx.ga.power(ctx.ga.generator(i), ctx.p - 1)
    xi_inv = np.reciprocal(ctx.ga.xis[i - 1])
    return re_ga_mul(ctx, u[1:], g_inv) * xi_inv


def divide_exact(ctx: "AlgebraContext", u: galois.FieldArray, d: galois.FieldArray) -> galois.FieldArray:
    """Exact quotient u / d in kE[x].

    Args:
        u: Dividend
        d: Divisor whose leading x-coefficient is a unit of kE

    Raises:
        PreconditionError: If the leading coefficient of d is not a unit or
            the division leaves a remainder
    """
    d = re_trim(d)
    if d.shape[0] == 0:
        raise PreconditionError("division by zero in R")
    lead_inv = ctx.ga.inverse(d[-1])
    remainder = re_trim(u.copy())
    dd = d.shape[0] - 1
    quotient = ctx.F.Zeros((max(remainder.shape[0] - dd, 0), ctx.N))
    while remainder.shape[0] - 1 >= dd and remainder.shape[0] > 0:
        shift = remainder.shape[0] - 1 - dd
        coeff = ctx.ga.mul(remainder[-1], lead_inv)
        quotient[shift] += coeff
        term = re_shift(ctx, re_ga_mul(ctx, d, coeff), shift)
        remainder = re_sub(remainder, term)
    if not re_is_zero(remainder):
        raise PreconditionError("element is not divisible in R")
    return re_trim(quotient)


def delta_quotient(ctx: "AlgebraContext", m: int, i: int = 1) -> galois.FieldArray:
    """delta^m(g_i) / delta(g_i)."""
    return divide_by_delta_g(ctx, delta_power(ctx, f"g{i}", m), i)


def is_derivation_pair(ctx: "AlgebraContext", a: galois.FieldArray, b: galois.FieldArray, n: int = 1) -> bool:
    """Check delta^n(ab) = a delta^n(b) + delta^n(a) b (true for n = 1 and n = p)."""
    lhs = delta_chain(ctx, re_mul(ctx, a, b), n)[n]
    rhs_a = re_mul(ctx, a, delta_chain(ctx, b, n)[n])
    rhs_b = re_mul(ctx, delta_chain(ctx, a, n)[n], b)
    return re_is_zero(re_sub(lhs, re_add(rhs_a, rhs_b)))

