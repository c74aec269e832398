"""Group algebra kE of an elementary abelian p-group."""

from .element import (
    D_inverse,
    D_op,
    GroupAlgebra,
    GroupAlgebraElement,
    augmentation,
    ga_inverse,
    ga_mul,
    group_algebra,
)
from .radical import RadicalProfile, radical_power_profile

__all__ = [
    "D_inverse",
    "D_op",
    "GroupAlgebra",
    "GroupAlgebraElement",
    "RadicalProfile",
    "augmentation",
    "ga_inverse",
    "ga_mul",
    "group_algebra",
    "radical_power_profile",
]
