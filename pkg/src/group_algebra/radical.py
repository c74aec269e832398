"""Nilpotency profile of radical elements of kG, G cyclic of order p."""

from dataclasses import dataclass
from typing import Any, Dict

from ..utils.errors import PreconditionError
from .element import GroupAlgebraElement


@dataclass(frozen=True)
class RadicalProfile:
    """Powers of an element mu of the augmentation ideal."""

    nilpotency_index: int          # least n with mu^n = 0
    d_invertible: bool             # D(mu) is a unit
    top_power_nonzero: bool        # mu^(p-1) != 0
    half_power_vanishes: bool      # mu^((p+1)/2) = 0

    @property
    def consistent(self) -> bool:
        """Units of D(mu) are exactly the elements with mu^(p-1) != 0, and a
        zero-divisor D(mu) forces mu^((p+1)/2) = 0."""
        if self.d_invertible != self.top_power_nonzero:
            return False
        return self.d_invertible or self.half_power_vanishes

    def to_json(self) -> Dict[str, Any]:
        return {
            "nilpotency_index": self.nilpotency_index,
            "d_invertible": self.d_invertible,
            "top_power_nonzero": self.top_power_nonzero,
            "half_power_vanishes": self.half_power_vanishes,
            "consistent": self.consistent,
        }


def radical_power_profile(mu: GroupAlgebraElement) -> RadicalProfile:
    """Compute the nilpotency profile of mu.

    Args:
        mu: Element of kG with r = 1 and zero augmentation

    Returns:
        RadicalProfile

    Raises:
        PreconditionError: If r != 1 or mu is not in the augmentation ideal
    """
    algebra = mu.algebra
    if algebra.r != 1:
        raise PreconditionError("radical profile requires r = 1")
    if algebra.augmentation(mu.coeffs) != 0:
        raise PreconditionError("radical profile requires augmentation zero")

    p = algebra.p
    powers = [algebra.one()]
    while not algebra.is_zero(powers[-1]):
        powers.append(algebra.mul(powers[-1], mu.coeffs))
    nilpotency_index = len(powers) - 1

    def power_vanishes(n: int) -> bool:
        return n >= nilpotency_index

    return RadicalProfile(
        nilpotency_index=max(nilpotency_index, 1),
        d_invertible=algebra.is_unit(algebra.D(mu.coeffs)),
        top_power_nonzero=not power_vanishes(p - 1),
        half_power_vanishes=power_vanishes((p + 1) // 2),
    )
