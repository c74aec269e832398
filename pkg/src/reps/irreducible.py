"""Irreducibility of matrix representations.

Each g_i acts unipotently ((G_i - I)^p = G_i^p - I = 0) and the G_i
commute, so every nonzero invariant subspace contains a common fixed
vector. A representation is therefore irreducible iff every nonzero
vector of Fix(G) = intersection of ker(G_i - I) spins up to the whole
space. The fixed space is usually small, which keeps the search cheap.
"""

from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Iterator, List, Optional

import galois
import numpy as np

from ..utils.config import RepsConfig, get_config
from ..utils.errors import ResourceBoundError
from ..utils.logging import get_algebra_logger, log_performance
from .simple import MatrixRep

logger = get_algebra_logger(__name__)


@dataclass
class IrreducibilityReport:
    irreducible: bool
    method: str  # "exhaustive", "probable" or "witness"
    fixed_dimension: int
    vectors_checked: int
    witness_dimension: Optional[int] = None

    def __bool__(self) -> bool:
        return self.irreducible

    def to_json(self) -> Dict[str, Any]:
        return {
            "irreducible": self.irreducible,
            "method": self.method,
            "fixed_dimension": self.fixed_dimension,
            "vectors_checked": self.vectors_checked,
            "witness_dimension": self.witness_dimension,
        }


def fixed_space(rep: MatrixRep) -> galois.FieldArray:
    """Rows spanning the common fixed space of the group generators."""
    F = rep.ctx.F
    identity = F.Identity(rep.dim)
    stacked = np.concatenate(
        [rep.mats[f"g{i}"] - identity for i in range(1, rep.ctx.r + 1)], axis=0
    ).view(F)
    return stacked.null_space()


def spin(rep: MatrixRep, v: galois.FieldArray) -> int:
    """Dimension of the smallest invariant subspace containing v."""
    F = rep.ctx.F
    mats = list(rep.mats.values())
    basis = F.Zeros((0, rep.dim))
    rank = 0
    queue = [v]
    while queue and rank < rep.dim:
        w = queue.pop()
        candidate = np.concatenate([basis, w.reshape(1, -1)], axis=0).view(F)
        new_rank = int(np.linalg.matrix_rank(candidate))
        if new_rank == rank:
            continue
        basis, rank = candidate, new_rank
        queue.extend(M @ w for M in mats)
    return rank


def projective_points(basis: galois.FieldArray) -> Iterator[galois.FieldArray]:
    """One vector per line of the row span of basis."""
    F = type(basis)
    k = basis.shape[0]
    elements = F.elements
    for lead in range(k):
        for tail in product(range(len(elements)), repeat=k - lead - 1):
            c = F.Zeros(k)
            c[lead] = 1
            for offset, idx in enumerate(tail):
                c[lead + 1 + offset] = elements[idx]
            yield c @ basis


@log_performance
def is_irreducible(
    rep: MatrixRep,
    config: Optional[RepsConfig] = None,
    rng: Optional[np.random.Generator] = None,
    force_exhaustive: bool = False,
) -> IrreducibilityReport:
    """Decide whether rep has no proper nonzero invariant subspace.

    Lines of Fix(G) are searched exhaustively when |F|^dim Fix(G) is within
    config.exhaustive_limit. Otherwise a basis of Fix(G) and random fixed
    vectors are spun and an irreducible verdict is only "probable".

    Raises:
        ResourceBoundError: If force_exhaustive is set and the search is too large
    """
    config = config or get_config().reps
    F = rep.ctx.F
    basis = fixed_space(rep)
    k = basis.shape[0]
    if rep.dim == 1:
        return IrreducibilityReport(True, "exhaustive", k, 0)

    exhaustive = F.order**k <= config.exhaustive_limit
    if force_exhaustive and not exhaustive:
        raise ResourceBoundError(
            f"exhaustive search over {F.order}^{k} fixed vectors exceeds {config.exhaustive_limit}"
        )

    if exhaustive:
        candidates: Any = projective_points(basis)
    else:
        rng = rng or np.random.default_rng(get_config().compute.seed)
        randoms: List[galois.FieldArray] = [
            F.Random(k, seed=rng) @ basis for _ in range(config.random_vectors)
        ]
        candidates = [row for row in basis] + [v for v in randoms if np.any(v)]

    checked = 0
    for v in candidates:
        checked += 1
        size = spin(rep, v)
        if size < rep.dim:
            logger.debug("Invariant subspace found", data={"dimension": size, "checked": checked})
            return IrreducibilityReport(False, "witness", k, checked, witness_dimension=size)

    method = "exhaustive" if exhaustive else "probable"
    logger.debug("Irreducibility verdict", data={"method": method, "fixed_dimension": k, "checked": checked})
    return IrreducibilityReport(True, method, k, checked)
