"""Group algebra kE for E = (Z/p)^r.

Elements are dense coefficient arrays of length N = p^r indexed by exponent
tuples (a_1, ..., a_r) in row-major order, a_1 most significant. The
operator D = sum_i xi_i g_i d/dg_i is diagonal in this basis with
eigenvalue e(a) = sum_i xi_i a_i on g^a, where xi_i = xi^(i-1) and xi
generates F_q inside the scalar field.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

import galois
import numpy as np

from ..scalars.field import (
    FieldType,
    element_from_vector,
    element_to_vector,
    format_element,
    fq_generator,
    scalar,
    to_field,
)
from ..utils.errors import ParameterMismatchError, PreconditionError


class GroupAlgebra:
    """The commutative local ring kE with its diagonal operator D."""

    def __init__(self, F: FieldType, r: int):
        if r < 1:
            raise PreconditionError(f"rank r must be positive, got {r}")
        self.F = F
        self.p = int(F.characteristic)
        self.r = r
        self.q = self.p**r
        self.N = self.p**r

        self.exps = np.array(list(itertools.product(range(self.p), repeat=r)), dtype=np.int64)
        weights = self.p ** np.arange(r - 1, -1, -1)
        diff = (self.exps[:, None, :] - self.exps[None, :, :]) % self.p
        # sub_idx[c, a] = index of c - a
        self.sub_idx = diff @ weights
        self._weights = weights

        self.xi = fq_generator(F, r)
        self.xis = F.Zeros(r)
        for i in range(r):
            self.xis[i] = self.xi**i
        self.eigen = to_field(F, self.exps) @ self.xis

        safe = self.eigen.copy()
        zero = self.eigen == 0
        safe[zero] = 1
        self._inv_eigen = np.reciprocal(safe)
        self._inv_eigen[zero] = 0

    def __repr__(self) -> str:
        return f"GroupAlgebra(p={self.p}, r={self.r}, field=GF({self.F.order}))"

    # Array-level arithmetic

    def index(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self.r:
            raise ParameterMismatchError(f"expected {self.r} exponents, got {len(exponents)}")
        return int(np.dot(np.mod(exponents, self.p), self._weights))

    def zero(self) -> galois.FieldArray:
        return self.F.Zeros(self.N)

    def one(self) -> galois.FieldArray:
        u = self.F.Zeros(self.N)
        u[0] = 1
        return u

    def group_element(self, exponents: Sequence[int]) -> galois.FieldArray:
        u = self.F.Zeros(self.N)
        u[self.index(exponents)] = 1
        return u

    def generator(self, i: int) -> galois.FieldArray:
        """g_i for 1 <= i <= r."""
        if not 1 <= i <= self.r:
            raise PreconditionError(f"generator index {i} outside 1..{self.r}")
        exps = [0] * self.r
        exps[i - 1] = 1
        return self.group_element(exps)

    def constant(self, c: Any) -> galois.FieldArray:
        u = self.F.Zeros(self.N)
        u[0] = c if isinstance(c, galois.FieldArray) else scalar(self.F, c)
        return u

    def mul(self, u: galois.FieldArray, v: galois.FieldArray) -> galois.FieldArray:
        return v[self.sub_idx] @ u

    def mul_matrix(self, v: galois.FieldArray) -> galois.FieldArray:
        """Matrix of multiplication by v in the group basis (acting on columns)."""
        return v[self.sub_idx]

    def power(self, u: galois.FieldArray, n: int) -> galois.FieldArray:
        if n < 0:
            return self.power(self.inverse(u), -n)
        result = self.one()
        base = u
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def augmentation(self, u: galois.FieldArray) -> galois.FieldArray:
        return np.sum(u)

    def D(self, u: galois.FieldArray) -> galois.FieldArray:
        return self.eigen * u

    def D_power(self, u: galois.FieldArray, n: int) -> galois.FieldArray:
        return (self.eigen**n) * u

    def D_inverse(self, u: galois.FieldArray) -> galois.FieldArray:
        if u[0] != 0:
            raise PreconditionError("D not invertible on this element")
        return self._inv_eigen * u

    def is_unit(self, u: galois.FieldArray) -> bool:
        return bool(self.augmentation(u) != 0)

    def inverse(self, u: galois.FieldArray) -> galois.FieldArray:
        """u^-1 = u^(p-1) / aug(u)^p, since u^p = aug(u)^p in kE."""
        aug = self.augmentation(u)
        if aug == 0:
            raise PreconditionError("element of the augmentation ideal is not invertible")
        return self.power(u, self.p - 1) / aug**self.p

    def is_zero(self, u: galois.FieldArray) -> bool:
        return not np.any(u)

    def in_radical_square(self, u: galois.FieldArray) -> bool:
        """Membership in Rad^2: aug(u) = 0 and aug(a_i u) = 0 for every i."""
        if self.augmentation(u) != 0:
            return False
        for i in range(self.r):
            weights = to_field(self.F, self.exps[:, i])
            if np.sum(weights * u) != 0:
                return False
        return True

    def norm_element(self) -> galois.FieldArray:
        """Sum of all group elements."""
        return self.F.Ones(self.N)

    def divide_by_g_minus_one(self, u: galois.FieldArray) -> galois.FieldArray:
        """A canonical v with (g - 1) v = u, for r = 1 and u in the radical."""
        if self.r != 1:
            raise PreconditionError("division by g - 1 is only defined for r = 1")
        if self.augmentation(u) != 0:
            raise PreconditionError("element is not in the augmentation ideal")
        numerator = galois.Poly(u[::-1], field=self.F)
        quotient = numerator // galois.Poly([1, self.p - 1], field=self.F)
        out = self.zero()
        coeffs = quotient.coeffs[::-1]
        out[: len(coeffs)] = coeffs
        return out

    def group_exponent(self, u: galois.FieldArray) -> Optional[Tuple[int, ...]]:
        """Exponent tuple if u is a single group element with coefficient 1."""
        support = np.nonzero(u)[0]
        if len(support) != 1 or u[support[0]] != 1:
            return None
        return tuple(int(e) for e in self.exps[support[0]])

    def random(self, rng: np.random.Generator) -> galois.FieldArray:
        return self.F.Random(self.N, seed=rng)

    # Formatting

    def generator_name(self, i: int) -> str:
        return "g" if self.r == 1 else f"g{i}"

    def monomial_name(self, index: int) -> str:
        parts = []
        for i, a in enumerate(self.exps[index], start=1):
            if a == 0:
                continue
            name = self.generator_name(i)
            parts.append(name if a == 1 else f"{name}^{a}")
        return "*".join(parts)

    def terms(self, u: galois.FieldArray) -> List[Tuple[str, str]]:
        """(coefficient, monomial) pairs of the nonzero terms, identity first."""
        out = []
        for index in np.nonzero(u)[0]:
            out.append((format_element(u[index]), self.monomial_name(int(index))))
        return out

    def format(self, u: galois.FieldArray) -> str:
        pieces = []
        for coeff, mono in self.terms(u):
            if not mono:
                pieces.append(coeff)
            elif coeff == "1":
                pieces.append(mono)
            else:
                c = f"({coeff})" if "+" in coeff else coeff
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces) if pieces else "0"

    def to_json(self, u: galois.FieldArray) -> Dict[str, Any]:
        return {
            "p": self.p,
            "r": self.r,
            "coeffs": [[str(c) for c in element_to_vector(a)] for a in u],
        }

    def from_json(self, data: Dict[str, Any]) -> galois.FieldArray:
        if int(data["p"]) != self.p or int(data["r"]) != self.r:
            raise ParameterMismatchError("group algebra parameters do not match")
        coeffs = data["coeffs"]
        if len(coeffs) != self.N:
            raise ParameterMismatchError(f"expected {self.N} coefficients, got {len(coeffs)}")
        u = self.zero()
        for i, vec in enumerate(coeffs):
            u[i] = element_from_vector(self.F, [int(c) for c in vec])
        return u


@lru_cache(maxsize=None)
def group_algebra(F: FieldType, r: int) -> GroupAlgebra:
    """Shared GroupAlgebra instance per (field, r)."""
    return GroupAlgebra(F, r)


@dataclass(frozen=True, eq=False)
class GroupAlgebraElement:
    """Immutable element of kE."""

    algebra: GroupAlgebra
    coeffs: galois.FieldArray

    def _check(self, other: "GroupAlgebraElement") -> None:
        if other.algebra is not self.algebra:
            raise ParameterMismatchError("elements of different group algebras")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        return GroupAlgebraElement(self.algebra, self.coeffs + other.coeffs)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        return GroupAlgebraElement(self.algebra, self.coeffs - other.coeffs)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.algebra, -self.coeffs)

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return ga_mul(self, other)

    def __pow__(self, n: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.algebra, self.algebra.power(self.coeffs, n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return other.algebra is self.algebra and bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coeffs.tobytes()))

    def __str__(self) -> str:
        return self.algebra.format(self.coeffs)

    def is_zero(self) -> bool:
        return self.algebra.is_zero(self.coeffs)

    def scale(self, c: galois.FieldArray) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.algebra, c * self.coeffs)

    def to_json(self) -> Dict[str, Any]:
        return self.algebra.to_json(self.coeffs)


def ga_mul(u: GroupAlgebraElement, v: GroupAlgebraElement) -> GroupAlgebraElement:
    """Ring product in kE; exponents wrap modulo p."""
    u._check(v)
    return GroupAlgebraElement(u.algebra, u.algebra.mul(u.coeffs, v.coeffs))


def D_op(u: GroupAlgebraElement) -> GroupAlgebraElement:
    return GroupAlgebraElement(u.algebra, u.algebra.D(u.coeffs))


def augmentation(u: GroupAlgebraElement) -> galois.FieldArray:
    return u.algebra.augmentation(u.coeffs)


def D_inverse(u: GroupAlgebraElement) -> GroupAlgebraElement:
    """The preimage D^(q-2)(u) of u under D.

    Raises:
        PreconditionError: If u has a nonzero constant term
    """
    return GroupAlgebraElement(u.algebra, u.algebra.D_inverse(u.coeffs))


def ga_inverse(u: GroupAlgebraElement) -> GroupAlgebraElement:
    return GroupAlgebraElement(u.algebra, u.algebra.inverse(u.coeffs))
