"""Verma modules Delta_alpha = H / (H(x - alpha) + sum_i H(g_i - 1)).

Delta_alpha is free over k[y] on the image v of 1, so its elements are
polynomials f(y) v stored as low-first coefficient vectors. To act by h on
y^j v, multiply h y^j in normal form and evaluate every R-coefficient at
x = alpha, g_i = 1.
"""

from typing import Any, Dict

import galois
import numpy as np

from ..ore.context import AlgebraContext
from ..ore.element import HElement, evaluate_R
from ..ore.product import h_mul
from ..scalars.field import scalar, to_field


def as_scalar(ctx: AlgebraContext, value: Any) -> galois.FieldArray:
    if isinstance(value, galois.FieldArray):
        return value
    if isinstance(value, str):
        from ..utils.parsing import parse_scalar
        return parse_scalar(value, ctx.F)
    return scalar(ctx.F, int(value))


def poly_trim(vec: galois.FieldArray) -> galois.FieldArray:
    nz = np.nonzero(vec)[0]
    return vec[: int(nz[-1]) + 1] if len(nz) else vec[:0]


class VermaModule:
    """The Verma module Delta_alpha with its action computed on demand."""

    def __init__(self, ctx: AlgebraContext, alpha: Any):
        self.ctx = ctx
        self.alpha = as_scalar(ctx, alpha)

    def __repr__(self) -> str:
        return f"VermaModule(alpha={self.alpha}, {self.ctx!r})"

    def act_on_basis(self, h: HElement, j: int) -> galois.FieldArray:
        """h . y^j v as a coefficient vector in y."""
        ctx = self.ctx
        product = h_mul(h, HElement.y(ctx, j)) if j else h
        if product.is_zero():
            return ctx.F.Zeros(0)
        out = ctx.F.Zeros(product.y_degree + 1)
        for k, row in enumerate(product.rows()):
            if row.shape[0]:
                out[k] = evaluate_R(ctx, row, self.alpha)
        return poly_trim(out)

    def act(self, h: HElement, f: Any) -> galois.FieldArray:
        """h . f(y) v for f given by low-first coefficients."""
        ctx = self.ctx
        f = f if isinstance(f, galois.FieldArray) else to_field(ctx.F, f)
        total = ctx.F.Zeros(0)
        for j in np.nonzero(f)[0]:
            image = self.act_on_basis(h, int(j)) * f[int(j)]
            total = poly_add(total, image)
        return poly_trim(total)

    def generator_image(self, h: HElement) -> galois.FieldArray:
        """h . v."""
        return self.act_on_basis(h, 0)

    def is_highest_weight(self, f: galois.FieldArray) -> Dict[str, Any]:
        """Check that every g_i fixes f(y) v and x scales it.

        Such a vector spans k[y] f v as a submodule, because R acts on it by
        scalars.
        """
        ctx = self.ctx
        g_fixed = all(
            poly_equal(self.act(HElement.g(ctx, i), f), f) for i in range(1, ctx.r + 1)
        )
        xf = self.act(HElement.x(ctx), f)
        scale = None
        if poly_trim(xf).size == 0:
            scale = ctx.F(0)
        else:
            lead = poly_trim(f)
            top = lead.size - 1
            if xf.size == lead.size and lead[top] != 0:
                candidate = xf[top] / lead[top]
                if poly_equal(xf, lead * candidate):
                    scale = candidate
        return {"g_fixed": g_fixed, "x_scalar": scale is not None, "x_value": scale}


def poly_add(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    if a.size < b.size:
        a, b = b, a
    out = a.copy()
    out[: b.size] += b
    return out


def poly_equal(a: galois.FieldArray, b: galois.FieldArray) -> bool:
    a, b = poly_trim(a), poly_trim(b)
    return a.size == b.size and bool(np.array_equal(a, b))


def verma_act(h: HElement, f: Any, alpha: Any, ctx: AlgebraContext) -> galois.FieldArray:
    """Exact left action of h on f(y) v in Delta_alpha."""
    return VermaModule(ctx, alpha).act(h, f)

