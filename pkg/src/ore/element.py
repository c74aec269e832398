"""Elements of R = kE[x] and of H_lambda in PBW normal form.

An REelement is a FieldArray of shape (nx, N): row i is the kE
coefficient of x^i. An HElement wraps a FieldArray of shape (ny, nx, N):
entry [j, i, a] is the coefficient of y^j x^i g^a. Arrays are kept
trimmed, so the zero element has leading dimension 0.
"""

from typing import TYPE_CHECKING, Any, Dict, List, Optional, Sequence

import galois
import numpy as np

from ..scalars.field import element_from_vector, element_to_vector, format_element, scalar
from ..utils.errors import ParameterMismatchError, PreconditionError

if TYPE_CHECKING:
    from .context import AlgebraContext


# R = kE[x]

def re_trim(a: galois.FieldArray) -> galois.FieldArray:
    nz = np.nonzero(np.any(a != 0, axis=1))[0] if a.shape[0] else []
    if len(nz) == 0:
        return a[:0]
    return a[: int(nz[-1]) + 1]


def re_zero(ctx: "AlgebraContext") -> galois.FieldArray:
    return ctx.F.Zeros((0, ctx.N))


def re_from_ga(ctx: "AlgebraContext", u: galois.FieldArray) -> galois.FieldArray:
    return re_trim(u.reshape(1, ctx.N).copy())


def re_x_power(ctx: "AlgebraContext", n: int) -> galois.FieldArray:
    out = ctx.F.Zeros((n + 1, ctx.N))
    out[n, 0] = 1
    return out


def re_add(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    if a.shape[0] < b.shape[0]:
        a, b = b, a
    out = a.copy()
    out[: b.shape[0]] += b
    return re_trim(out)


def re_sub(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    return re_add(a, -b)


def re_mul(ctx: "AlgebraContext", a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    na, nb = a.shape[0], b.shape[0]
    if na == 0 or nb == 0:
        return re_zero(ctx)
    out = ctx.F.Zeros((na + nb - 1, ctx.N))
    idx = ctx.ga.sub_idx
    for i in range(na):
        if not np.any(a[i]):
            continue
        out[i : i + nb] += b @ a[i][idx].T
    return re_trim(out)


def re_shift(ctx: "AlgebraContext", a: galois.FieldArray, n: int) -> galois.FieldArray:
    """Multiply by x^n."""
    if a.shape[0] == 0:
        return a
    return np.concatenate([ctx.F.Zeros((n, ctx.N)), a]).view(ctx.F)


def re_ga_mul(ctx: "AlgebraContext", a: galois.FieldArray, u: galois.FieldArray) -> galois.FieldArray:
    """Multiply every x-coefficient by u in kE."""
    if a.shape[0] == 0:
        return a
    return re_trim(a @ u[ctx.ga.sub_idx].T)


def re_is_zero(a: galois.FieldArray) -> bool:
    return a.shape[0] == 0 or not np.any(a)


def re_equal(a: galois.FieldArray, b: galois.FieldArray) -> bool:
    return re_is_zero(re_sub(a, b))


def evaluate_R(ctx: "AlgebraContext", a: galois.FieldArray, alpha: Any) -> galois.FieldArray:
    """Substitute x -> alpha and every g_i -> 1."""
    total = ctx.F(0)
    power = ctx.F(1)
    for i in range(a.shape[0]):
        total = total + power * np.sum(a[i])
        power = power * alpha
    return total


def format_R(ctx: "AlgebraContext", a: galois.FieldArray) -> str:
    return _format_terms(ctx, a.reshape(1, *a.shape) if a.shape[0] else ctx.F.Zeros((0, 0, ctx.N)), with_y=False)


# H_lambda

def h_trim(c: galois.FieldArray) -> galois.FieldArray:
    """Trim trailing zero y-rows and x-columns."""
    if c.shape[0] == 0 or c.shape[1] == 0:
        return c[:0, :0]
    rows = np.nonzero(np.any(c != 0, axis=(1, 2)))[0]
    if len(rows) == 0:
        return c[:0, :0]
    c = c[: int(rows[-1]) + 1]
    cols = np.nonzero(np.any(np.any(c != 0, axis=2), axis=0))[0]
    return c[:, : int(cols[-1]) + 1]


def h_from_rows(ctx: "AlgebraContext", rows: Sequence[galois.FieldArray]) -> galois.FieldArray:
    """Stack REelements (index = y power) into an H array."""
    ny = len(rows)
    nx = max((r.shape[0] for r in rows), default=0)
    out = ctx.F.Zeros((ny, nx, ctx.N))
    for j, row in enumerate(rows):
        out[j, : row.shape[0]] = row
    return h_trim(out)


def h_rows(c: galois.FieldArray) -> List[galois.FieldArray]:
    return [re_trim(c[j]) for j in range(c.shape[0])]


def h_add_arrays(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    ny = max(a.shape[0], b.shape[0])
    nx = max(a.shape[1] if a.shape[0] else 0, b.shape[1] if b.shape[0] else 0)
    N = a.shape[2]
    out = type(a).Zeros((ny, nx, N))
    if a.shape[0]:
        out[: a.shape[0], : a.shape[1]] += a
    if b.shape[0]:
        out[: b.shape[0], : b.shape[1]] += b
    return h_trim(out)


class HElement:
    """Immutable element of H_lambda in PBW normal form y^j x^i g^a."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: "AlgebraContext", coeffs: galois.FieldArray):
        if coeffs.ndim != 3 or (coeffs.shape[0] and coeffs.shape[2] != ctx.N):
            raise ParameterMismatchError(f"HElement coefficients must have shape (ny, nx, {ctx.N})")
        self.ctx = ctx
        self.coeffs = h_trim(coeffs)

    # Constructors

    @classmethod
    def zero(cls, ctx: "AlgebraContext") -> "HElement":
        return cls(ctx, ctx.F.Zeros((0, 0, ctx.N)))

    @classmethod
    def from_R(cls, ctx: "AlgebraContext", a: galois.FieldArray, y_power: int = 0) -> "HElement":
        rows = [re_zero(ctx)] * y_power + [a]
        return cls(ctx, h_from_rows(ctx, rows))

    @classmethod
    def from_ga(cls, ctx: "AlgebraContext", u: galois.FieldArray) -> "HElement":
        return cls.from_R(ctx, re_from_ga(ctx, u))

    @classmethod
    def constant(cls, ctx: "AlgebraContext", c: Any) -> "HElement":
        return cls.from_ga(ctx, ctx.ga.constant(c))

    @classmethod
    def x(cls, ctx: "AlgebraContext", n: int = 1) -> "HElement":
        return cls.from_R(ctx, re_x_power(ctx, n))

    @classmethod
    def y(cls, ctx: "AlgebraContext", n: int = 1) -> "HElement":
        return cls.from_R(ctx, re_from_ga(ctx, ctx.ga.one()), y_power=n)

    @classmethod
    def g(cls, ctx: "AlgebraContext", i: int = 1) -> "HElement":
        return cls.from_ga(ctx, ctx.ga.generator(i))

    @classmethod
    def random(cls, ctx: "AlgebraContext", y_degree: int, x_degree: int, rng: np.random.Generator) -> "HElement":
        """Uniformly random element with y-degree and x-degree bounded as given."""
        return cls(ctx, ctx.F.Random((y_degree + 1, x_degree + 1, ctx.N), seed=rng))

    # Structure

    @property
    def y_degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def is_zero(self) -> bool:
        return self.coeffs.shape[0] == 0

    def row(self, j: int) -> galois.FieldArray:
        """The REelement coefficient of y^j."""
        if j >= self.coeffs.shape[0]:
            return re_zero(self.ctx)
        return re_trim(self.coeffs[j])

    def rows(self) -> List[galois.FieldArray]:
        return h_rows(self.coeffs)

    def in_R(self) -> bool:
        return self.coeffs.shape[0] <= 1

    def scalar_value(self) -> Optional[galois.FieldArray]:
        """The field value if this element is a scalar multiple of 1."""
        if self.is_zero():
            return self.ctx.F(0)
        if self.coeffs.shape[:2] != (1, 1):
            return None
        group = self.coeffs[0, 0]
        if np.any(group[1:]):
            return None
        return group[0]

    # Arithmetic

    def _check(self, other: "HElement") -> None:
        self.ctx.check_same(other.ctx)

    def __add__(self, other: "HElement") -> "HElement":
        self._check(other)
        return HElement(self.ctx, h_add_arrays(self.coeffs, other.coeffs))

    def __sub__(self, other: "HElement") -> "HElement":
        self._check(other)
        return HElement(self.ctx, h_add_arrays(self.coeffs, -other.coeffs))

    def __neg__(self) -> "HElement":
        return HElement(self.ctx, -self.coeffs)

    def __mul__(self, other: Any) -> "HElement":
        if isinstance(other, HElement):
            from .product import h_mul
            return h_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "HElement":
        return self.scale(other)

    def __pow__(self, n: int) -> "HElement":
        from .product import h_pow
        return h_pow(self, n)

    def scale(self, c: Any) -> "HElement":
        value = c if isinstance(c, galois.FieldArray) else scalar(self.ctx.F, c)
        return HElement(self.ctx, value * self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HElement):
            return NotImplemented
        return other.ctx is self.ctx and self.coeffs.shape == other.coeffs.shape and bool(
            np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.coeffs.shape, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        return f"HElement({self})"

    def __str__(self) -> str:
        return _format_terms(self.ctx, self.coeffs, with_y=True)

    def to_json(self) -> Dict[str, Any]:
        return {
            "p": self.ctx.p,
            "r": self.ctx.r,
            "coeffs": [
                [[[str(c) for c in element_to_vector(a)] for a in self.coeffs[j, i]]
                 for i in range(self.coeffs.shape[1])]
                for j in range(self.coeffs.shape[0])
            ],
        }

    @classmethod
    def from_json(cls, ctx: "AlgebraContext", data: Dict[str, Any]) -> "HElement":
        if int(data["p"]) != ctx.p or int(data["r"]) != ctx.r:
            raise ParameterMismatchError("HElement JSON does not match this context")
        nested = data["coeffs"]
        ny = len(nested)
        nx = max((len(row) for row in nested), default=0)
        out = ctx.F.Zeros((ny, nx, ctx.N))
        for j, row in enumerate(nested):
            for i, group in enumerate(row):
                if len(group) != ctx.N:
                    raise ParameterMismatchError(f"expected {ctx.N} group coefficients")
                for a, vec in enumerate(group):
                    out[j, i, a] = element_from_vector(ctx.F, [int(c) for c in vec])
        return cls(ctx, out)


def _format_terms(ctx: "AlgebraContext", c: galois.FieldArray, with_y: bool) -> str:
    pieces = []
    for j in range(c.shape[0] - 1, -1, -1):
        for i in range(c.shape[1] - 1, -1, -1):
            for a in np.nonzero(c[j, i])[0]:
                factors = []
                if with_y and j:
                    factors.append("y" if j == 1 else f"y^{j}")
                if i:
                    factors.append("x" if i == 1 else f"x^{i}")
                group = ctx.ga.monomial_name(int(a))
                if group:
                    factors.append(group)
                coeff = format_element(c[j, i, a])
                if "+" in coeff:
                    coeff = f"({coeff})"
                if not factors:
                    pieces.append(coeff)
                elif coeff == "1":
                    pieces.append("*".join(factors))
                else:
                    pieces.append(coeff + "*" + "*".join(factors))
    return " + ".join(pieces) if pieces else "0"


def require_nonzero(u: HElement) -> None:
    if u.is_zero():
        raise PreconditionError("operation undefined on the zero element")
