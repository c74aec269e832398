"""Closed-form matrices of the p-dimensional simples over alpha = 0 for lambda = g.

In the basis y^j v (j < p) of S_(0, beta) = Delta_0 / (Y - beta):

    g[i, j] = C(j, j - i) a_(j-i)
    x[i, j] = C(j, j - i) a_(j-i-1)            (j > i)
    y       = subdiagonal ones, last column (beta, Q, 0, ..., 0)

where a_n = delta^n(g) at x = 0, g = 1 is the reduced tangent number
A_(n/2, 0) for even n and 0 for odd n, and Q = A_((p+1)/2, 0) is the value
of delta^p(g)/delta(g) at the same point.
"""

from math import comb
from typing import Any, Dict, List, Optional

import numpy as np

from ..combinatorics.triangles import andre_triangle
from ..ore.context import AlgebraContext
from ..scalars.field import scalar
from ..utils.errors import CheckFailure, PreconditionError
from ..utils.logging import get_algebra_logger
from .simple import MatrixRep, matrix_power, relation_suite
from .verma import as_scalar

logger = get_algebra_logger(__name__)

MAX_PRIME = 13


def tangent_values(p: int) -> List[int]:
    """a_0, ..., a_(p+1) as integers."""
    tri = andre_triangle((p + 1) // 2)
    return [tri.get(n // 2, 0) if n % 2 == 0 else 0 for n in range(p + 2)]


def singular_locus_matrices(
    p: int, beta: Any, m: Optional[int] = None, ctx: Optional[AlgebraContext] = None
) -> MatrixRep:
    """S_(0, beta) for r = 1, lambda = g from the closed-form entries.

    Raises:
        PreconditionError: If p > 13 or the context is not r = 1, lambda = g
        CheckFailure: If the relations or the nilpotency checks fail
    """
    if p > MAX_PRIME:
        raise PreconditionError(f"closed-form matrices are tabulated for p <= {MAX_PRIME}")
    ctx = ctx or AlgebraContext.create(p, 1, "g", m=m)
    exps = ctx.ga.group_exponent(ctx.lam)
    if ctx.r != 1 or ctx.p != p or exps is None or tuple(exps) != (1,):
        raise PreconditionError("closed-form matrices require r = 1 and lambda = g")
    F = ctx.F
    beta = as_scalar(ctx, beta)
    a = tangent_values(p)
    Q = a[p + 1]

    G = F.Zeros((p, p))
    X = F.Zeros((p, p))
    for j in range(p):
        for i in range(j + 1):
            G[i, j] = scalar(F, comb(j, j - i) * a[j - i])
            if j > i:
                X[i, j] = scalar(F, comb(j, j - i) * a[j - i - 1])
    Y = F.Zeros((p, p))
    for j in range(p - 1):
        Y[j + 1, j] = 1
    Y[0, p - 1] = beta
    Y[1, p - 1] = scalar(F, Q)

    rep = MatrixRep(ctx, {"x": X, "y": Y, "g1": G}, alpha=F(0), beta=beta, generator="Y-beta")
    report = relation_suite(rep)
    identity = F.Identity(p)
    report["x_nilpotent"] = not np.any(matrix_power(X, p))
    report["quadratic"] = bool(np.array_equal(X @ X - F(2) * G, -F(2) * identity))
    report["ok"] = report["ok"] and report["x_nilpotent"] and report["quadratic"]
    rep.certificate = report
    if not report["ok"]:
        failed = [k for k, v in report.items() if v is False]
        raise CheckFailure(f"closed-form singular matrices fail: {failed}", code="relation_failure")
    logger.debug("Singular locus matrices", data={"p": p, "Q": Q % p})
    return rep


def compare_with_quotient(rep: MatrixRep) -> Dict[str, bool]:
    """Entrywise comparison with the generic Verma-quotient construction."""
    from .simple import simple_module

    generic = simple_module(0, rep.beta, rep.ctx)
    return {name: bool(np.array_equal(M, generic.mats[name])) for name, M in rep.mats.items()}
