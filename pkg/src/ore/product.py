"""PBW normal-form multiplication in H_lambda = R[y; delta].

Moving r in R past a power of y uses

    r y^n = sum_i C(n, i) y^(n-i) delta^i(r),

so (sum_j y^j u_j)(sum_n y^n v_n) = sum_{j,n,i} C(n,i) y^(j+n-i) delta^i(u_j) v_n.
Binomials are reduced mod p with Lucas' theorem.
"""

from typing import Dict, List

import galois
import numpy as np

from ..utils.errors import PreconditionError, ResourceBoundError
from .context import binom_mod
from .delta import delta, delta_chain
from .element import HElement, h_from_rows, re_add, re_mul, re_zero, require_nonzero


def h_mul(u: HElement, v: HElement) -> HElement:
    """Product u v in PBW normal form."""
    ctx = u.ctx
    ctx.check_same(v.ctx)
    if u.is_zero() or v.is_zero():
        return HElement.zero(ctx)

    top = u.y_degree + v.y_degree
    if top > ctx.degree_cap:
        raise ResourceBoundError(
            f"y-degree {top} exceeds the cap {ctx.degree_cap}", code="degree_cap"
        )

    v_rows = v.rows()
    n_max = len(v_rows) - 1
    acc: Dict[int, galois.FieldArray] = {}
    for j, u_j in enumerate(u.rows()):
        if u_j.shape[0] == 0:
            continue
        chain = delta_chain(ctx, u_j, n_max)
        for n, v_n in enumerate(v_rows):
            if v_n.shape[0] == 0:
                continue
            for i in range(n + 1):
                c = binom_mod(n, i, ctx.p)
                if c == 0 or chain[i].shape[0] == 0:
                    continue
                term = re_mul(ctx, chain[i], v_n)
                if c != 1:
                    term = term * ctx.F(c)
                k = j + n - i
                acc[k] = re_add(acc[k], term) if k in acc else term

    rows: List[galois.FieldArray] = [acc.get(k, re_zero(ctx)) for k in range(top + 1)]
    return HElement(ctx, h_from_rows(ctx, rows))


def h_pow(u: HElement, n: int) -> HElement:
    if n < 0:
        raise PreconditionError("negative powers are not defined in H_lambda")
    result = HElement.constant(u.ctx, 1)
    base = u
    while n:
        if n & 1:
            result = h_mul(result, base)
        n >>= 1
        if n:
            base = h_mul(base, base)
    return result


def h_product(factors: List[HElement]) -> HElement:
    """Ordered product, left to right."""
    if not factors:
        raise PreconditionError("empty product")
    result = factors[0]
    for f in factors[1:]:
        result = h_mul(result, f)
    return result


def commutator(u: HElement, v: HElement) -> HElement:
    """[u, v] = uv - vu."""
    return h_mul(u, v) - h_mul(v, u)


def commutator_with_y(u: HElement) -> HElement:
    """[u, y] = sum_j y^j delta(u_j), without a full product."""
    ctx = u.ctx
    rows = [delta(ctx, row) for row in u.rows()]
    return HElement(ctx, h_from_rows(ctx, rows)) if rows else HElement.zero(ctx)


def gr_leading(u: HElement) -> HElement:
    """Top filtration-degree part, with degree = y-degree + x-degree.

    Group coefficients have degree 0, so the result lies in H_0.

    Raises:
        PreconditionError: If u is zero
    """
    require_nonzero(u)
    c = u.coeffs
    ny, nx = c.shape[0], c.shape[1]
    present = np.any(c != 0, axis=2)
    degrees = np.add.outer(np.arange(ny), np.arange(nx))
    top = int(degrees[present].max())
    mask = (degrees == top) & present
    out = c.copy()
    out[~mask] = 0
    return HElement(u.ctx, out)


def filtration_degree(u: HElement) -> int:
    require_nonzero(u)
    present = np.any(u.coeffs != 0, axis=2)
    degrees = np.add.outer(np.arange(u.coeffs.shape[0]), np.arange(u.coeffs.shape[1]))
    return int(degrees[present].max())
