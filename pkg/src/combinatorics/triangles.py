"""Integer triangles counting the coefficients of delta-powers.

For lambda = g^a the coefficients of delta^n(g) and delta^n(x) in Z[x, g]
organize into the triangles

    A_(n,k) = (n+1) A_(n,k-1) + (k+1) A_(n-1,k+1)          (Andre numbers, a = 1)
    T_(n,k) = (an+1) T_(n,k-1) + (k+1) T_(n-1,k+1)
    U_(n,k) = a(n+1) U_(n,k-1) + (k+1) U_(n-1,k+1)

with A_(0,k) = T_(0,k) = 1 and U_(0,k) = a^k. All arithmetic is over Python
integers; mod-p views are derived afterwards.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..utils.errors import PreconditionError
from ..utils.logging import get_algebra_logger

logger = get_algebra_logger(__name__)

Step = Callable[[int, int, "Triangle"], int]


@dataclass
class Triangle:
    """Integer array indexed by (row n, column k); absent entries are zero."""

    name: str
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)
    a: int = 1

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            return 0
        return self.entries.get((n, k), 0)

    def row(self, n: int) -> List[int]:
        ks = sorted(k for (m, k) in self.entries if m == n)
        return [self.entries[(n, k)] for k in ks]

    def column(self, k: int) -> List[int]:
        ns = sorted(n for (n, m) in self.entries if m == k)
        return [self.entries[(n, k)] for n in ns]

    @property
    def n_max(self) -> int:
        return max((n for n, _ in self.entries), default=-1)

    def rows(self) -> Iterator[Tuple[int, List[int]]]:
        for n in range(self.n_max + 1):
            yield n, self.row(n)

    def antidiagonal(self, n: int) -> List[int]:
        """[T_(j, n-2j)] for 0 <= j <= n/2: the knight's-move antidiagonal."""
        return [self.get(j, n - 2 * j) for j in range(n // 2 + 1)]

    def antidiagonal_sum(self, n: int) -> int:
        return sum(self.antidiagonal(n))

    def mod(self, p: int) -> "Triangle":
        return Triangle(f"{self.name} mod {p}", {key: v % p for key, v in self.entries.items()}, self.a)

    def to_json(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "a": self.a,
            "rows": [{"n": n, "values": [str(v) for v in values]} for n, values in self.rows()],
        }


def _build(name: str, n_max: int, k_max: int, top_row: Callable[[int], int], step: Step, a: int = 1) -> Triangle:
    """Fill rows 0..n_max; row n needs row n-1 up to column k + 1."""
    if n_max < 0 or k_max < 0:
        raise PreconditionError("triangle bounds must be non-negative")
    tri = Triangle(name, a=a)
    width = k_max + n_max
    for k in range(width + 1):
        tri.entries[(0, k)] = top_row(k)
    for n in range(1, n_max + 1):
        for k in range(width - n + 1):
            tri.entries[(n, k)] = step(n, k, tri)
    # trim to the requested square
    tri.entries = {key: v for key, v in tri.entries.items() if key[1] <= k_max}
    return tri


def andre_triangle(n_max: int, k_max: Optional[int] = None) -> Triangle:
    """A_(n,k) for n <= n_max, k <= k_max (default n_max)."""
    k_max = n_max if k_max is None else k_max
    return _build(
        "A",
        n_max,
        k_max,
        lambda k: 1,
        lambda n, k, t: (n + 1) * t.get(n, k - 1) + (k + 1) * t.get(n - 1, k + 1),
    )


def generalized_triangles(a: int, n_max: int, k_max: Optional[int] = None) -> Tuple[Triangle, Triangle]:
    """The T and U triangles for lambda = g^a."""
    if a < 1:
        raise PreconditionError(f"a must be positive, got {a}")
    k_max = n_max if k_max is None else k_max
    T = _build(
        "T",
        n_max,
        k_max,
        lambda k: 1,
        lambda n, k, t: (a * n + 1) * t.get(n, k - 1) + (k + 1) * t.get(n - 1, k + 1),
        a=a,
    )
    U = _build(
        "U",
        n_max,
        k_max,
        lambda k: a**k,
        lambda n, k, t: a * (n + 1) * t.get(n, k - 1) + (k + 1) * t.get(n - 1, k + 1),
        a=a,
    )
    return T, U


def quadratic_recursion_check(tri: Triangle) -> List[Tuple[int, int]]:
    """Check the quadratic recursion for the Andre numbers.

    With m = k + 2n,

        A_(n,k) = A_(n,k-1) + sum_{i=1}^{m-1} C(m-1, i)
                  sum_{n1+n2=n-1, k1+k2=k, k1+2n1=i-1} A_(n1,k1) A_(n2,k2).

    Returns the (n, k) entries where it disagrees with the stored value;
    entries of row 0 are boundary values and are skipped.
    """
    failures = []
    for (n, k), value in sorted(tri.entries.items()):
        if n == 0:
            continue
        m = k + 2 * n
        total = tri.get(n, k - 1)
        for i in range(1, m):
            inner = 0
            for n1 in range(n):
                n2 = n - 1 - n1
                k1 = i - 1 - 2 * n1
                k2 = k - k1
                if k1 < 0 or k2 < 0:
                    continue
                inner += tri.get(n1, k1) * tri.get(n2, k2)
            total += comb(m - 1, i) * inner
        if total != value:
            failures.append((n, k))
    if failures:
        logger.warning("Quadratic recursion disagrees", data={"entries": failures[:10]})
    return failures


# Integer oracle

IntPoly = Dict[Tuple[int, int], int]  # (x exponent, g exponent) -> coefficient


def _integer_delta(poly: IntPoly, a: int) -> IntPoly:
    """delta(x^i g^k) = i x^(i-1) g^(k+a) + k x^(i+1) g^k."""
    out: Dict[Tuple[int, int], int] = defaultdict(int)
    for (i, k), c in poly.items():
        if i:
            out[(i - 1, k + a)] += i * c
        if k:
            out[(i + 1, k)] += k * c
    return {key: v for key, v in out.items() if v}


def integer_delta_power(target: str, n: int, a: int) -> IntPoly:
    """delta^n(target) in Z[x, g] for lambda = g^a, target "g" or "x".

    Group exponents are not reduced; this is the characteristic-zero model
    that fixes the index conventions of the triangles.
    """
    if target == "g":
        poly: IntPoly = {(0, 1): 1}
    elif target == "x":
        poly = {(1, 0): 1}
    else:
        raise PreconditionError(f"integer oracle target must be 'g' or 'x', got {target!r}")
    if n < 0 or a < 1:
        raise PreconditionError("integer oracle needs n >= 0 and a >= 1")
    for _ in range(n):
        poly = _integer_delta(poly, a)
    return poly


def evaluate_at_ones(poly: IntPoly) -> int:
    """The value at x = g = 1."""
    return sum(poly.values())


def triangle_matches_oracle(T: Triangle, U: Triangle, a: int, n_max: int) -> bool:
    """T_(n,k) = [x^k g^(1+an)] delta^(k+2n)(g) and U_(n,k) = [x^k g^(a(n+1))] delta^(k+2n+1)(x)."""
    for total in range(n_max + 1):
        g_poly = integer_delta_power("g", total, a)
        x_poly = integer_delta_power("x", total + 1, a)
        for n in range(total // 2 + 1):
            k = total - 2 * n
            if (n, k) in T.entries and T.entries[(n, k)] != g_poly.get((k, 1 + a * n), 0):
                return False
            if (n, k) in U.entries and U.entries[(n, k)] != x_poly.get((k, a * (n + 1)), 0):
                return False
    return True


def weighted_factorial_identity(n: int) -> bool:
    """n! = sum_j 2^(n-1-j) A_(j, n-1-2j) for n >= 1 (and 0! = 1 = A_(0,0)).

    The sum is delta^n(x)(1, 1) for lambda = g^2, read off the U triangle
    U_(j,k) = 2^(j+k) A_(j,k) along k + 2j = n - 1.
    """
    if n < 0:
        raise PreconditionError("n must be non-negative")
    if n == 0:
        return andre_triangle(0).get(0, 0) == 1
    tri = andre_triangle((n - 1) // 2, max(n - 1, 0))
    total = sum(2 ** (n - 1 - j) * tri.get(j, n - 1 - 2 * j) for j in range((n - 1) // 2 + 1))
    return total == factorial(n)


def weighted_row_sums(base: int, n_max: int) -> List[int]:
    """sum_j base^(n-1-j) A_(j, n-1-2j) for n = 1..n_max."""
    tri = andre_triangle(n_max, n_max)
    return [
        sum(base ** (n - 1 - j) * tri.get(j, n - 1 - 2 * j) for j in range((n - 1) // 2 + 1))
        for n in range(1, n_max + 1)
    ]


def mod_p_collapse(tri: Triangle, p: int, n: int) -> np.ndarray:
    """Coefficients of x^k in delta^n(g) for lambda = g, reduced mod p.

    Entry k holds A_(j,k) mod p where n = k + 2j; the accompanying group
    element is g^(1+j) with the exponent read mod p.
    """
    out = np.zeros(n + 1, dtype=np.int64)
    for j in range(n // 2 + 1):
        k = n - 2 * j
        out[k] = tri.get(j, k) % p
    return out
