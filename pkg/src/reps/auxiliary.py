"""Infinite-dimensional representations acted on through truncated elements.

diff_op      R = H / H y, with R acting by multiplication and y r = -delta(r)
weyl         H / H(g - 1) for lambda a unit (a Weyl algebra)
polynomial   H / H(g - 1) for lambda in Rad kE (k[x, y])

Vectors of diff_op are REelements. Vectors of H / H(g - 1) are arrays of
shape (ny, nx) over the field holding the coefficient of y^j x^i; the
class of y^j x^i g^a is y^j x^i.
"""

from typing import Any, Callable, Dict, Optional

import galois
import numpy as np

from ..center.generators import big_generator_t1, c_generator, quadratic_generator
from ..ore.context import AlgebraContext
from ..ore.delta import delta
from ..ore.element import HElement, re_add, re_equal, re_mul, re_trim, re_x_power, re_zero
from ..ore.product import h_mul
from ..utils.config import get_config
from ..utils.errors import PreconditionError
from ..utils.logging import get_algebra_logger

logger = get_algebra_logger(__name__)

KINDS = ("diff_op", "weyl", "polynomial")


def _trim2(v: galois.FieldArray) -> galois.FieldArray:
    if v.size == 0:
        return v.reshape(0, 0)
    rows = np.nonzero(np.any(v != 0, axis=1))[0]
    if len(rows) == 0:
        return v[:0, :0]
    v = v[: int(rows[-1]) + 1]
    cols = np.nonzero(np.any(v != 0, axis=0))[0]
    return v[:, : int(cols[-1]) + 1]


def _add2(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    F = type(a)
    ny = max(a.shape[0], b.shape[0])
    nx = max(a.shape[1] if a.shape[0] else 0, b.shape[1] if b.shape[0] else 0)
    out = F.Zeros((ny, nx))
    out[: a.shape[0], : a.shape[1]] += a
    out[: b.shape[0], : b.shape[1]] += b
    return _trim2(out)


class AuxiliaryRepresentation:
    """Exact action of H_lambda on one of the auxiliary modules."""

    def __init__(self, kind: str, ctx: AlgebraContext):
        if kind not in KINDS:
            raise PreconditionError(f"unknown representation kind {kind!r}; expected one of {KINDS}")
        unit = ctx.ga.is_unit(ctx.lam)
        if kind == "weyl" and not unit:
            raise PreconditionError("the Weyl representation requires lambda outside Rad kE")
        if kind == "polynomial" and unit:
            raise PreconditionError("the polynomial representation requires lambda in Rad kE")
        self.kind = kind
        self.ctx = ctx

    def __repr__(self) -> str:
        return f"AuxiliaryRepresentation({self.kind!r}, {self.ctx!r})"

    # Vectors

    def one(self) -> galois.FieldArray:
        """The image of 1."""
        if self.kind == "diff_op":
            return re_x_power(self.ctx, 0)
        return self.ctx.F.Ones((1, 1))

    def random_vector(self, degree: int, rng: np.random.Generator) -> galois.FieldArray:
        ctx = self.ctx
        if self.kind == "diff_op":
            return re_trim(ctx.F.Random((degree + 1, ctx.N), seed=rng))
        return _trim2(ctx.F.Random((degree + 1, degree + 1), seed=rng))

    def equal(self, a: galois.FieldArray, b: galois.FieldArray) -> bool:
        if self.kind == "diff_op":
            return re_equal(a, b)
        a, b = _trim2(a), _trim2(b)
        return a.shape == b.shape and bool(np.array_equal(a, b))

    def is_zero(self, v: galois.FieldArray) -> bool:
        return not np.any(v)

    # Action

    def act(self, h: HElement, v: galois.FieldArray) -> galois.FieldArray:
        if self.kind == "diff_op":
            return self._act_diff(h, v)
        return self._act_quotient(h, v)

    def _act_diff(self, h: HElement, r: galois.FieldArray) -> galois.FieldArray:
        ctx = self.ctx
        total = re_zero(ctx)
        for j, u_j in enumerate(h.rows()):
            term = re_mul(ctx, u_j, r)
            for _ in range(j):
                term = -delta(ctx, term)
            total = re_add(total, term)
        return total

    def _act_quotient(self, h: HElement, v: galois.FieldArray) -> galois.FieldArray:
        ctx = self.ctx
        total = ctx.F.Zeros((0, 0))
        v = _trim2(v)
        for j, i in zip(*np.nonzero(v)):
            basis = HElement.from_R(ctx, re_x_power(ctx, int(i)), y_power=int(j))
            product = h_mul(h, basis)
            if product.is_zero():
                continue
            image = np.sum(product.coeffs, axis=2) * v[j, i]
            total = _add2(total, image)
        return total

    # Checks

    def check_axioms(self, samples: int, degree: int = 2, rng: Optional[np.random.Generator] = None) -> Dict[str, Any]:
        """h1 (h2 v) = (h1 h2) v on random triples."""
        ctx = self.ctx
        rng = rng or np.random.default_rng(get_config().compute.seed)
        failures = 0
        for _ in range(samples):
            h1 = HElement.random(ctx, degree, degree, rng)
            h2 = HElement.random(ctx, degree, degree, rng)
            v = self.random_vector(degree, rng)
            if not self.equal(self.act(h1, self.act(h2, v)), self.act(h_mul(h1, h2), v)):
                failures += 1
        logger.check(f"{self.kind} module axioms", failures == 0, {"samples": samples})
        return {"samples": samples, "failures": failures, "ok": failures == 0}

    def big_central(self) -> HElement:
        return c_generator(self.ctx) if self.ctx.t == 0 else big_generator_t1(self.ctx)

    def big_annihilates(self, samples: int, degree: int = 3, rng: Optional[np.random.Generator] = None) -> bool:
        """The big central element kills every sampled vector (diff_op)."""
        rng = rng or np.random.default_rng(get_config().compute.seed)
        Z = self.big_central()
        return all(self.is_zero(self.act(Z, self.random_vector(degree, rng))) for _ in range(samples))

    def quadratic_stable(self, samples: int, degree: int = 3, rng: Optional[np.random.Generator] = None) -> bool:
        """y (r A) = -delta(r) A on diff_op, so R A is a submodule (t = 0)."""
        if self.kind != "diff_op" or self.ctx.t != 0:
            raise PreconditionError("the quadratic submodule lives in diff_op for t = 0")
        ctx = self.ctx
        rng = rng or np.random.default_rng(get_config().compute.seed)
        A = quadratic_generator(ctx).row(0)
        y = HElement.y(ctx)
        for _ in range(samples):
            r = self.random_vector(degree, rng)
            lhs = self.act(y, re_mul(ctx, r, A))
            rhs = re_mul(ctx, -delta(ctx, r), A)
            if not re_equal(lhs, rhs):
                return False
        return True


def aux_representation(kind: str, ctx: AlgebraContext) -> Callable[[HElement, galois.FieldArray], galois.FieldArray]:
    """The action closure (h, v) -> h . v of the named representation.

    Raises:
        PreconditionError: For an unknown kind or the wrong radical condition
    """
    return AuxiliaryRepresentation(kind, ctx).act
