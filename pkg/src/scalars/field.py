"""Exact arithmetic in F_p and F_{p^m}.

Fields are galois ``FieldArray`` subclasses built from an explicit modulus.
Field elements are 0-d FieldArrays; vectors and matrices are FieldArrays of
higher rank, so all linear algebra downstream runs on the same type.

Coefficient vectors are exchanged low degree first:

    a = c_0 + c_1 t + ... + c_{m-1} t^{m-1}   <->   [c_0, c_1, ..., c_{m-1}]
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple, Type

import galois
import numpy as np
import sympy

from ..utils.errors import FieldError, PreconditionError

FieldType = Type[galois.FieldArray]


@dataclass(frozen=True)
class FieldParams:
    """Characteristic, extension degree and modulus of a finite field."""

    p: int
    m: int
    modulus: Tuple[int, ...]  # low degree first, monic

    def to_json(self) -> Dict[str, Any]:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "FieldParams":
        return cls(int(data["p"]), int(data["m"]), tuple(int(c) for c in data["modulus"]))


def _validate_prime(p: int) -> None:
    if p < 3 or not sympy.isprime(p):
        raise FieldError(f"characteristic must be an odd prime, got {p}")


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: Tuple[int, ...]) -> FieldType:
    if m == 1:
        return galois.GF(p)
    poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
    return galois.GF(p**m, irreducible_poly=poly)


def build_field(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldType:
    """Build (or fetch from cache) the field F_{p^m}.

    Args:
        p: Odd prime characteristic
        m: Extension degree
        modulus: Monic irreducible polynomial of degree m, low degree first.
            Defaults to the Conway polynomial.

    Returns:
        galois FieldArray subclass

    Raises:
        FieldError: If p is not an odd prime or the modulus is unusable
    """
    _validate_prime(p)
    if m < 1:
        raise FieldError(f"extension degree must be positive, got {m}")

    if modulus is None:
        if m == 1:
            coeffs: Tuple[int, ...] = (0, 1)
        else:
            conway = galois.conway_poly(p, m)
            coeffs = tuple(int(c) for c in conway.coeffs[::-1])
    else:
        coeffs = tuple(int(c) % p for c in modulus)
        if len(coeffs) != m + 1:
            raise FieldError(f"modulus must have degree {m}, got {len(coeffs) - 1}")
        if coeffs[-1] != 1:
            raise FieldError("modulus must be monic")
        if m > 1 and not galois.Poly(list(reversed(coeffs)), field=galois.GF(p)).is_irreducible():
            raise FieldError(f"modulus {list(coeffs)} is reducible over F_{p}")

    return _cached_field(p, m, coeffs)


def field_params(F: FieldType) -> FieldParams:
    """Recover the FieldParams of a field class."""
    p, m = int(F.characteristic), int(F.degree)
    if m == 1:
        return FieldParams(p, 1, (0, 1))
    modulus = tuple(int(c) for c in F.irreducible_poly.coeffs[::-1])
    return FieldParams(p, m, modulus)


def field_from_params(params: FieldParams) -> FieldType:
    return build_field(params.p, params.m, params.modulus if params.m > 1 else None)


def scalar(F: FieldType, value: int) -> galois.FieldArray:
    """Embed an integer into F via its residue mod p."""
    return F(int(value) % int(F.characteristic))


def to_field(F: FieldType, values: Any) -> galois.FieldArray:
    """Embed an integer array into F entrywise via residues mod p."""
    return F(np.mod(np.asarray(values, dtype=np.int64), int(F.characteristic)))


# Element encoding

def element_to_vector(a: galois.FieldArray) -> List[int]:
    """Coefficient vector of a in the power basis, low degree first."""
    F = type(a)
    if int(F.degree) == 1:
        return [int(a)]
    return [int(c) for c in np.asarray(a.vector())[::-1]]


def element_from_vector(F: FieldType, coeffs: Sequence[int]) -> galois.FieldArray:
    m = int(F.degree)
    if len(coeffs) != m:
        raise FieldError(f"expected {m} coefficients, got {len(coeffs)}")
    p = int(F.characteristic)
    if m == 1:
        return F(int(coeffs[0]) % p)
    high_first = [int(c) % p for c in reversed(coeffs)]
    return F.Vector(high_first)


def format_element(a: galois.FieldArray) -> str:
    """Human-readable form, e.g. ``2``, ``t``, ``2*t + 1``."""
    coeffs = element_to_vector(a)
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        else:
            mono = "t" if power == 1 else f"t^{power}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


_T = sympy.Symbol("t")


def field_literal(F: FieldType, text: str) -> galois.FieldArray:
    """Parse an integer or a polynomial in the field generator ``t``.

    Args:
        F: Target field
        text: Literal such as ``2``, ``-1``, ``t``, ``2*t + 1`` or ``1/2``

    Returns:
        Field element

    Raises:
        FieldError: If the literal is not a polynomial in t with rational coefficients
    """
    p = int(F.characteristic)
    try:
        expr = sympy.sympify(text, locals={"t": _T})
        poly = sympy.Poly(expr, _T)
    except (sympy.SympifyError, sympy.PolynomialError, TypeError) as e:
        raise FieldError(f"invalid field literal {text!r}: {e}")

    generator = _generator_element(F)
    result = F(0)
    for (power,), coeff in poly.terms():
        c = sympy.Rational(coeff)
        if c.q % p == 0:
            raise FieldError(f"denominator of {text!r} vanishes mod {p}")
        value = scalar(F, int(c.p)) / scalar(F, int(c.q))
        result = result + value * generator**power
    return result


def _generator_element(F: FieldType) -> galois.FieldArray:
    if int(F.degree) == 1:
        return F(1)
    m = int(F.degree)
    return element_from_vector(F, [0, 1] + [0] * (m - 2))


# Field operations

def add(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    return a + b


def sub(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    return a - b


def mul(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    return a * b


def inv(a: galois.FieldArray) -> galois.FieldArray:
    """Multiplicative inverse.

    Raises:
        FieldError: If a is zero
    """
    if a == 0:
        raise FieldError("division by zero in field")
    return np.reciprocal(a)


def frobenius(a: galois.FieldArray) -> galois.FieldArray:
    return a ** int(type(a).characteristic)


def field_ops(op: str, a: galois.FieldArray, b: Optional[galois.FieldArray] = None) -> galois.FieldArray:
    """Dispatch one of add, sub, mul, inv, frobenius."""
    binary = {"add": add, "sub": sub, "mul": mul}
    if op in binary:
        if b is None:
            raise PreconditionError(f"{op} needs two operands")
        return binary[op](a, b)
    if op == "inv":
        return inv(a)
    if op == "frobenius":
        return frobenius(a)
    raise PreconditionError(f"unknown field operation {op!r}")


def sqrt(a: galois.FieldArray) -> Optional[galois.FieldArray]:
    """Square root with a deterministic choice of sign.

    Returns:
        The root whose low-first coefficient vector is lexicographically
        smaller, or None if a is not a square
    """
    if a == 0:
        return a
    if not bool(a.is_square()):
        return None
    s = np.sqrt(np.atleast_1d(a))[0]
    candidates = [s, -s]
    return min(candidates, key=element_to_vector)


def pth_root(a: galois.FieldArray) -> galois.FieldArray:
    """The unique r with r^p = a, computed as a^(p^(m-1))."""
    F = type(a)
    p, m = int(F.characteristic), int(F.degree)
    return a ** (p ** (m - 1))


def fq_generator(F: FieldType, r: int) -> galois.FieldArray:
    """A generator xi of F_q^x (q = p^r) inside F.

    Raises:
        PreconditionError: If F_q does not embed, i.e. r does not divide m
    """
    p, m = int(F.characteristic), int(F.degree)
    if m % r != 0:
        raise PreconditionError(f"F_{p}^{r} does not embed in F_{p}^{m}: r must divide m")
    q = p**r
    return F.primitive_element ** ((p**m - 1) // (q - 1))


def all_elements(F: FieldType) -> galois.FieldArray:
    """All field elements in integer-representation order."""
    return F.elements
