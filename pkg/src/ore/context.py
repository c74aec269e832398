"""Algebra context: the parameter lambda and everything derived from it.

An AlgebraContext fixes the scalar field, the rank r, the parameter
lambda in kE and the case flag t. It owns the delta-power memo tables,
which are the only mutable state and are guarded by a lock so contexts
can be shared between worker threads.
"""

import threading
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

import galois
import numpy as np

from ..group_algebra.element import GroupAlgebra, GroupAlgebraElement, group_algebra
from ..scalars.field import FieldType, build_field, field_params
from ..utils.config import AlgebraConfig, get_config
from ..utils.errors import ParameterMismatchError, PreconditionError
from ..utils.logging import get_algebra_logger

logger = get_algebra_logger(__name__)

_CHAIN_MEMO_LIMIT = 4096


@lru_cache(maxsize=None)
def _binom_small(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result % p


def binom_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    result = 1
    while n or k:
        result = result * _binom_small(n % p, k % p, p) % p
        if result == 0:
            return 0
        n //= p
        k //= p
    return result


class AlgebraContext:
    """Parameters of H_lambda = R[y; delta] with R = kE[x].

    Lambda is kept verbatim. The case flag t is 1 exactly when lambda has a
    nonzero constant coefficient c0; rescaling x and y by s multiplies
    lambda by s^2, so c0 can only be normalized up to squares.
    """

    def __init__(
        self,
        ga: GroupAlgebra,
        lam: galois.FieldArray,
        config: Optional[AlgebraConfig] = None,
        allow_zero: bool = False,
    ):
        self.config = config or get_config().algebra
        self.ga = ga
        self.F: FieldType = ga.F
        self.p = ga.p
        self.r = ga.r
        self.q = ga.q
        self.N = ga.N

        lam = self.F(np.asarray(lam))
        if lam.shape != (self.N,):
            raise ParameterMismatchError(f"lambda must have {self.N} coefficients")
        if not allow_zero and ga.is_zero(lam):
            raise PreconditionError("lambda = 0 defines H_0; pass allow_zero=True to build it")
        self.lam = lam
        self.c0 = lam[0]
        self.t = 1 if lam[0] != 0 else 0
        # lam_matrix @ u = lambda * u
        self.lam_matrix = lam[ga.sub_idx]

        self.degree_cap = self.config.degree_cap_factor * self.p * self.q

        self._lock = threading.Lock()
        self._power_memo: Dict[Tuple[str, int], List[galois.FieldArray]] = {}
        self._chain_memo: Dict[Tuple[Tuple[int, ...], bytes], List[galois.FieldArray]] = {}

    @classmethod
    def create(
        cls,
        p: int,
        r: int,
        lam: Any,
        m: Optional[int] = None,
        modulus: Optional[List[int]] = None,
        config: Optional[AlgebraConfig] = None,
        allow_zero: bool = False,
    ) -> "AlgebraContext":
        """Build a context from scratch.

        Args:
            p: Odd prime
            r: Rank of E
            lam: lambda as a GroupAlgebraElement, a coefficient array or an
                expression string over g1..gr
            m: Extension degree of the scalar field (default 2r)
            modulus: Optional custom modulus, low degree first
            config: Algebra configuration
            allow_zero: Permit lambda = 0
        """
        F = build_field(p, m if m is not None else 2 * r, modulus)
        ga = group_algebra(F, r)
        if isinstance(lam, GroupAlgebraElement):
            if lam.algebra is not ga:
                raise ParameterMismatchError("lambda lives in a different group algebra")
            coeffs = lam.coeffs
        elif isinstance(lam, str):
            from ..utils.parsing import parse_lambda
            coeffs = parse_lambda(lam, ga).coeffs
        else:
            coeffs = lam
        return cls(ga, coeffs, config=config, allow_zero=allow_zero)

    def __repr__(self) -> str:
        return f"AlgebraContext(p={self.p}, r={self.r}, lambda={self.ga.format(self.lam)}, t={self.t})"

    @property
    def lambda_element(self) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.ga, self.lam)

    def normalized(self) -> galois.FieldArray:
        """c0^-1 * lambda, the parameter with constant term 1 (t = 1 only)."""
        if self.t != 1:
            raise PreconditionError("normalization applies to the t = 1 case only")
        return self.lam / self.c0

    def describe(self) -> Dict[str, Any]:
        return {
            "field": field_params(self.F).to_json(),
            "r": self.r,
            "lambda": self.ga.format(self.lam),
            "t": self.t,
            "lambda_in_radical": not self.ga.is_unit(self.lam),
        }

    # Memo tables

    def cached_powers(self, target: str) -> List[galois.FieldArray]:
        """Copy of the memoized delta powers of a named target."""
        with self._lock:
            return list(self._power_memo.get((target, 0), []))

    def store_powers(self, target: str, chain: List[galois.FieldArray]) -> None:
        if not self.config.memo_enabled:
            return
        with self._lock:
            current = self._power_memo.get((target, 0), [])
            if len(chain) > len(current):
                self._power_memo[(target, 0)] = chain

    def cached_chain(self, u: galois.FieldArray) -> Optional[List[galois.FieldArray]]:
        key = (u.shape, u.tobytes())
        with self._lock:
            return self._chain_memo.get(key)

    def store_chain(self, u: galois.FieldArray, chain: List[galois.FieldArray]) -> None:
        if not self.config.memo_enabled:
            return
        key = (u.shape, u.tobytes())
        with self._lock:
            if len(self._chain_memo) >= _CHAIN_MEMO_LIMIT:
                logger.debug("Delta chain memo full, clearing", data={"entries": len(self._chain_memo)})
                self._chain_memo.clear()
            current = self._chain_memo.get(key)
            if current is None or len(chain) > len(current):
                self._chain_memo[key] = chain

    def check_same(self, other: "AlgebraContext") -> None:
        if other is not self:
            raise ParameterMismatchError("elements belong to different algebra contexts")
