"""Partition polynomials encoding expressions in lambda, D(lambda), ...

A PartitionPoly is an integer combination of partitions. In the F_n family a
part i stands for delta^(i-2)(lambda); in the delta-power triangles a part j
stands for D^(j-1)(lambda). The derivation acts by the Leibniz rule, raising
one part by 1 with the part's multiplicity as coefficient.
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial, prod
from typing import TYPE_CHECKING, Dict, Iterator, List, Tuple

import galois

from ..ore.delta import delta_power
from ..ore.element import re_add, re_from_ga, re_ga_mul, re_mul, re_shift, re_trim, re_zero
from ..utils.errors import PreconditionError

if TYPE_CHECKING:
    from ..ore.context import AlgebraContext

Partition = Tuple[int, ...]  # parts in decreasing order


def normalize(parts: List[int]) -> Partition:
    return tuple(sorted(parts, reverse=True))


@dataclass(frozen=True)
class PartitionPoly:
    """Integer linear combination of partitions."""

    terms: Dict[Partition, int] = field(default_factory=dict)

    @classmethod
    def unit(cls) -> "PartitionPoly":
        """The empty partition with coefficient 1."""
        return cls({(): 1})

    @classmethod
    def single(cls, parts: List[int], coeff: int = 1) -> "PartitionPoly":
        return cls({normalize(parts): coeff})

    def __iter__(self) -> Iterator[Tuple[Partition, int]]:
        return iter(sorted(self.terms.items()))

    def __add__(self, other: "PartitionPoly") -> "PartitionPoly":
        out = Counter(self.terms)
        for part, c in other.terms.items():
            out[part] += c
        return PartitionPoly({k: v for k, v in out.items() if v})

    def scale(self, c: int) -> "PartitionPoly":
        if c == 0:
            return PartitionPoly()
        return PartitionPoly({k: v * c for k, v in self.terms.items()})

    def derive(self) -> "PartitionPoly":
        """Leibniz part-raising: one part i becomes i + 1, weighted by multiplicity."""
        out: Counter = Counter()
        for part, c in self.terms.items():
            for i, mult in Counter(part).items():
                raised = list(part)
                raised.remove(i)
                raised.append(i + 1)
                out[normalize(raised)] += c * mult
        return PartitionPoly({k: v for k, v in out.items() if v})

    def add_part(self, i: int) -> "PartitionPoly":
        """Multiply by the generator encoded by part i."""
        return PartitionPoly({normalize(list(part) + [i]): c for part, c in self.terms.items()})

    def coefficient(self, parts: List[int]) -> int:
        return self.terms.get(normalize(parts), 0)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> List[Dict[str, object]]:
        return [{"partition": list(part), "coeff": c} for part, c in self]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for part, c in sorted(self.terms.items(), key=lambda kv: (-max(kv[0], default=0), kv[0])):
            if not part:
                body = "()"
            else:
                groups = []
                for i, mult in sorted(Counter(part).items(), reverse=True):
                    groups.append(str(i) if mult == 1 else f"{i}^{mult}")
                body = "(" + ",".join(groups) + ")"
            pieces.append(body if c == 1 else f"{c}{body}")
        return " + ".join(pieces)


@lru_cache(maxsize=None)
def f_sequence(n: int) -> PartitionPoly:
    """F_n from F_n = delta(F_(n-1)) + (n-1) f F_(n-2), F_0 = (), F_1 = 0.

    The public contract starts at n = 2; smaller n are the seeds of the
    recursion.
    """
    if n < 0:
        raise PreconditionError(f"F_n is defined for n >= 0, got {n}")
    if n == 0:
        return PartitionPoly.unit()
    if n == 1:
        return PartitionPoly()
    return f_sequence(n - 1).derive() + f_sequence(n - 2).add_part(2).scale(n - 1)


def clique_coefficient(parts: List[int]) -> int:
    """n! / (prod i!^(a_i) * prod a_i!) for the partition with multiplicities a_i."""
    n = sum(parts)
    counts = Counter(parts)
    denominator = prod(factorial(i) ** a for i, a in counts.items()) * prod(
        factorial(a) for a in counts.values()
    )
    return factorial(n) // denominator


def partitions_min_part(n: int, smallest: int = 2) -> Iterator[Partition]:
    """Partitions of n with every part >= smallest, in decreasing order."""
    def rec(remaining: int, largest: int) -> Iterator[List[int]]:
        if remaining == 0:
            yield []
            return
        for part in range(min(remaining, largest), smallest - 1, -1):
            for rest in rec(remaining - part, part):
                yield [part] + rest

    for parts in rec(n, n):
        yield tuple(parts)


def f_sequence_closed_form(n: int) -> PartitionPoly:
    """F_n built directly from the clique coefficients."""
    return PartitionPoly({part: clique_coefficient(list(part)) for part in partitions_min_part(n)})


# Symbolic delta-power triangles

PartitionTriangle = Dict[Tuple[int, int], PartitionPoly]


def delta_triangle(n_max: int) -> PartitionTriangle:
    """C_(n,m): delta^n(g) = sum_m C_(n,m)(lambda) x^m g.

    C_(0,0) = (), C_(n,m) = (D + 1) C_(n-1,m-1) + (m + 1) lambda C_(n-1,m+1).
    """
    tri: PartitionTriangle = {(0, 0): PartitionPoly.unit()}
    for n in range(1, n_max + 1):
        for m in range(0, n + 1):
            value = PartitionPoly()
            left = tri.get((n - 1, m - 1))
            if left is not None:
                value = value + left.derive() + left
            right = tri.get((n - 1, m + 1))
            if right is not None:
                value = value + right.add_part(1).scale(m + 1)
            if not value.is_zero():
                tri[(n, m)] = value
    return tri


def delta_lambda_triangle(n_max: int) -> PartitionTriangle:
    """C~_(n,m): delta^n(lambda) = sum_m C~_(n,m) x^m.

    C~_(0,0) = (1), C~_(n,m) = D C~_(n-1,m-1) + (m + 1) lambda C~_(n-1,m+1).
    """
    tri: PartitionTriangle = {(0, 0): PartitionPoly.single([1])}
    for n in range(1, n_max + 1):
        for m in range(0, n + 1):
            value = PartitionPoly()
            left = tri.get((n - 1, m - 1))
            if left is not None:
                value = value + left.derive()
            right = tri.get((n - 1, m + 1))
            if right is not None:
                value = value + right.add_part(1).scale(m + 1)
            if not value.is_zero():
                tri[(n, m)] = value
    return tri


def homogenize(triangle: PartitionTriangle) -> PartitionTriangle:
    """Pad every partition at row n with the part n + 1 - |P| (none if zero)."""
    out: PartitionTriangle = {}
    for (n, m), poly in triangle.items():
        padded: Dict[Partition, int] = {}
        for part, c in poly.terms.items():
            pad = n + 1 - sum(part)
            key = normalize(list(part) + [pad]) if pad > 0 else part
            padded[key] = padded.get(key, 0) + c
        out[(n, m)] = PartitionPoly({k: v for k, v in padded.items() if v})
    return out


def triangles_equal(a: PartitionTriangle, b: PartitionTriangle) -> bool:
    keys = set(a) | set(b)
    return all(a.get(k, PartitionPoly()).terms == b.get(k, PartitionPoly()).terms for k in keys)


# Evaluation into kE and R

def evaluate_triangle_entry(poly: PartitionPoly, ctx: "AlgebraContext") -> galois.FieldArray:
    """Element of kE with part j read as D^(j-1)(lambda)."""
    ga = ctx.ga
    total = ga.zero()
    for part, c in poly:
        term = ga.one()
        for j in part:
            term = ga.mul(term, ga.D_power(ctx.lam, j - 1))
        total = total + term * ctx.F(c % ctx.p)
    return total


def delta_power_from_triangle(ctx: "AlgebraContext", n: int) -> galois.FieldArray:
    """delta^n(g) = sum_m C_(n,m)(lambda) x^m g, evaluated in R (r = 1)."""
    if ctx.r != 1:
        raise PreconditionError("the delta-power triangle describes r = 1")
    tri = delta_triangle(n)
    g = ctx.ga.generator(1)
    rows = ctx.F.Zeros((n + 1, ctx.N))
    for (row, m), poly in tri.items():
        if row == n:
            rows[m] = ctx.ga.mul(evaluate_triangle_entry(poly, ctx), g)
    return re_trim(rows)


def evaluate_f_poly(poly: PartitionPoly, ctx: "AlgebraContext") -> galois.FieldArray:
    """Element of R with part i read as delta^(i-2)(lambda)."""
    total = re_zero(ctx)
    for part, c in poly:
        term = re_from_ga(ctx, ctx.ga.one())
        for i in part:
            term = re_mul(ctx, term, delta_power(ctx, "lambda", i - 2))
        total = re_add(total, term * ctx.F(c % ctx.p))
    return total


def delta_power_from_f_sequence(ctx: "AlgebraContext", n: int) -> galois.FieldArray:
    """delta^n(g) = (sum_k C(n, k) F_k x^(n-k)) g for r = 1."""
    if ctx.r != 1:
        raise PreconditionError("the F_n expansion describes r = 1")
    total = re_zero(ctx)
    for k in range(n + 1):
        coeff = comb(n, k) % ctx.p
        if coeff == 0:
            continue
        term = re_shift(ctx, evaluate_f_poly(f_sequence(k), ctx), n - k)
        total = re_add(total, term * ctx.F(coeff))
    return re_ga_mul(ctx, total, ctx.ga.generator(1))


def reduce_mod(poly: PartitionPoly, p: int) -> PartitionPoly:
    return PartitionPoly({k: v % p for k, v in poly.terms.items() if v % p})


def mod_p_bridge(p: int) -> List[int]:
    """Columns k < p - 1 where C_(p,k) and C~_(p-2,k) disagree mod p."""
    c_tri = delta_triangle(p)
    lam_tri = delta_lambda_triangle(p - 2)
    bad = []
    for k in range(p - 1):
        left = reduce_mod(c_tri.get((p, k), PartitionPoly()), p)
        right = reduce_mod(lam_tri.get((p - 2, k), PartitionPoly()), p)
        if left.terms != right.terms:
            bad.append(k)
    return bad
