"""Ext groups read off the Hom complexes of the resolutions.

Hom_H(H^n, M) = M^n, and precomposing with right multiplication by a
matrix d turns into the block matrix (rho_M(d[r][c])). With chi_i that
block matrix for d_i,

    dim Ext^i = (dim Hom(P_i, M) - rank chi_i) - rank chi_(i-1).

These are dimensions over the field. Ext with values in a d-dimensional
simple is reported in copies of it, field dimension / d, for every degree
where d divides; the other degrees keep the field dimension.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import galois
import numpy as np

from ..ore.context import AlgebraContext
from ..ore.element import HElement
from ..ore.product import h_mul
from ..reps.simple import MatrixRep, simple_module
from ..reps.verma import as_scalar
from ..scalars.field import format_element
from ..utils.config import get_config
from ..utils.errors import PreconditionError
from ..utils.logging import get_algebra_logger, log_performance
from .resolutions import Resolution, build_resolution

logger = get_algebra_logger(__name__)

# Values stated alongside the resolution templates, compared against what
# the Hom complexes give. Keys are (kind, case); the tail repeats.
REFERENCE_DIMS: Dict[Tuple[str, str], Tuple[List[int], int]] = {
    ("azumaya", "self"): ([1, 3], 4),
    ("azumaya", "cross"): ([], 0),
    ("singular", "c_nonzero"): ([1, 1, 2], 3),
    ("singular", "c_zero"): ([1, 2, 3], 4),
    ("singular", "pair_condition"): ([0, 1, 1], 0),
    ("singular", "pair_generic"): ([], 0),
    ("weyl", "A"): ([], 1),
}


def reference_dims(kind: str, case: str, i_max: int) -> Optional[List[int]]:
    entry = REFERENCE_DIMS.get((kind, case))
    if entry is None:
        return None
    head, tail = entry
    return [head[i] if i < len(head) else tail for i in range(i_max + 1)]


def in_copies(field_dims: List[int], target_dim: int) -> List[int]:
    """field dimension / target_dim where it divides, the field dimension elsewhere."""
    return [fd // target_dim if fd % target_dim == 0 else fd for fd in field_dims]


@dataclass
class ExtTable:
    """dim Ext^i for i = 0..i_max together with the Hom complex data.

    ``field_dims`` are dimensions over the field; ``dims`` count copies of
    the target where ``target_dim`` divides them.
    """

    kind: str
    field_dims: List[int]
    hom_dims: List[int]
    ranks: List[int]
    target_dim: int = 1
    source: Dict[str, Any] = field(default_factory=dict)
    target: Dict[str, Any] = field(default_factory=dict)
    case: Optional[str] = None
    reference: Optional[List[int]] = None

    @property
    def dims(self) -> List[int]:
        return in_copies(self.field_dims, self.target_dim)

    @property
    def units(self) -> List[str]:
        return ["copies" if fd % self.target_dim == 0 else "field" for fd in self.field_dims]

    @property
    def i_max(self) -> int:
        return len(self.field_dims) - 1

    @property
    def matches_reference(self) -> Optional[bool]:
        if self.reference is None:
            return None
        return self.dims == self.reference

    def mismatches(self) -> List[int]:
        if self.reference is None:
            return []
        return [i for i, (a, b) in enumerate(zip(self.dims, self.reference)) if a != b]

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "case": self.case,
            "source": self.source,
            "target": self.target,
            "target_dim": self.target_dim,
            "ext_dims": self.dims,
            "units": self.units,
            "field_dims": self.field_dims,
            "hom_dims": self.hom_dims,
            "ranks": self.ranks,
            "reference": self.reference,
            "matches_reference": self.matches_reference,
            "mismatched_degrees": self.mismatches(),
        }


def _block_evaluator(target: MatrixRep):
    cache: Dict[HElement, galois.FieldArray] = {}

    def evaluate(h: HElement) -> galois.FieldArray:
        if h not in cache:
            cache[h] = target.represent(h)
        return cache[h]

    return evaluate


def hom_complex(resolution: Resolution, target: MatrixRep, i_max: int) -> List[galois.FieldArray]:
    """chi_0, ..., chi_(i_max) with chi_i : Hom(P_i, M) -> Hom(P_(i+1), M)."""
    F = resolution.ctx.F
    evaluate = _block_evaluator(target)
    s = target.dim
    out = []
    for i in range(i_max + 1):
        d = resolution.differential(i)
        chi = F.Zeros((d.rows * s, d.cols * s))
        for r in range(d.rows):
            for c in range(d.cols):
                if d[r, c].is_zero():
                    continue
                chi[r * s : (r + 1) * s, c * s : (c + 1) * s] = evaluate(d[r, c])
        out.append(chi)
    return out


def dims_from_ranks(hom_dims: List[int], ranks: List[int]) -> List[int]:
    return [hom_dims[i] - ranks[i] - (ranks[i - 1] if i else 0) for i in range(len(hom_dims))]


def _describe(rep_alpha: Any, rep_beta: Any) -> Dict[str, Any]:
    return {
        "alpha": format_element(rep_alpha) if rep_alpha is not None else None,
        "beta": format_element(rep_beta) if rep_beta is not None else None,
    }


def _case(resolution: Resolution, target: MatrixRep) -> Optional[str]:
    ctx = resolution.ctx
    if resolution.kind == "azumaya":
        same = target.alpha == resolution.alpha and target.beta == resolution.beta
        return "self" if same else "cross"
    if resolution.kind == "singular":
        c = ctx.ga.augmentation(ctx.ga.divide_by_g_minus_one(ctx.lam))
        if target.alpha != 0:
            return None
        if target.beta == resolution.beta:
            return "c_zero" if c == 0 else "c_nonzero"
        gamma = target.beta - resolution.beta
        return "pair_condition" if gamma**2 == c else "pair_generic"
    return None



@log_performance
def ext_dims(resolution: Resolution, target: MatrixRep, i_max: Optional[int] = None) -> ExtTable:
    """dim Ext^i(source, target) for i <= i_max, compared with the reference values."""
    i_max = get_config().homology.i_max if i_max is None else i_max
    chis = hom_complex(resolution, target, i_max)
    ranks = [int(np.linalg.matrix_rank(chi)) for chi in chis]
    hom_dims = [target.dim * resolution.rank(i) for i in range(i_max + 1)]
    table = ExtTable(
        kind=resolution.kind,
        field_dims=dims_from_ranks(hom_dims, ranks),
        hom_dims=hom_dims,
        ranks=ranks,
        target_dim=target.dim,
        source=_describe(resolution.alpha, resolution.beta),
        target=_describe(target.alpha, target.beta),
        case=_case(resolution, target),
    )
    if table.case is not None:
        table.reference = reference_dims(resolution.kind, table.case, i_max)
    if table.matches_reference is False:
        logger.warning(
            "Ext dimensions differ from the reference values",
            data={"kind": table.kind, "case": table.case, "dims": table.dims, "reference": table.reference},
        )
    return table


def euler_check(table: ExtTable, chis: Optional[List[galois.FieldArray]] = None) -> Dict[str, Any]:
    """Alternating sums of field dimensions agree up to the last rank; chi_i chi_(i-1) = 0 when given."""
    n = table.i_max
    lhs = sum((-1) ** i * h for i, h in enumerate(table.hom_dims))
    rhs = sum((-1) ** i * e for i, e in enumerate(table.field_dims)) + (-1) ** n * table.ranks[n]
    out: Dict[str, Any] = {"euler": lhs == rhs, "complex": None}
    if chis is not None:
        out["complex"] = all(not np.any(chis[i] @ chis[i - 1]) for i in range(1, len(chis)))
    return out


def source_resolution(ctx: AlgebraContext, alpha: Any, beta: Any) -> Resolution:
    """The resolution template that applies to S_(alpha, beta)."""
    alpha = as_scalar(ctx, alpha)
    kind = "singular" if alpha == 0 and not ctx.ga.is_unit(ctx.lam) else "azumaya"
    return build_resolution(kind, ctx, alpha, beta)


def ext_between(
    ctx: AlgebraContext,
    source: Tuple[Any, Any],
    target: Tuple[Any, Any],
    i_max: Optional[int] = None,
) -> ExtTable:
    """Ext^i(S_source, S_target) from the matching resolution template."""
    resolution = source_resolution(ctx, *source)
    return ext_dims(resolution, simple_module(target[0], target[1], ctx), i_max)


def cross_fiber_vanishing(
    ctx: AlgebraContext,
    source: Tuple[Any, Any],
    target: Tuple[Any, Any],
    i_max: Optional[int] = None,
) -> Dict[str, Any]:
    """Ext between simples with different central characters is zero."""
    a1, b1 = (as_scalar(ctx, v) for v in source)
    a2, b2 = (as_scalar(ctx, v) for v in target)
    if a1**ctx.p == a2**ctx.p and b1 == b2:
        raise PreconditionError("source and target share a central character")
    table = ext_between(ctx, (a1, b1), (a2, b2), i_max)
    return {"table": table, "vanishes": all(d == 0 for d in table.field_dims)}


def singular_pair_condition(ctx: AlgebraContext, beta: Any, beta2: Any) -> Dict[str, Any]:
    """For lambda in the radical: (beta' - beta)^2 against c = aug(lambda / (g - 1))."""
    beta, beta2 = as_scalar(ctx, beta), as_scalar(ctx, beta2)
    c = ctx.ga.augmentation(ctx.ga.divide_by_g_minus_one(ctx.lam))
    return {"c": format_element(c), "condition": bool((beta2 - beta) ** 2 == c)}


# Weyl-type module A = H / H(g - 1)


def _truncated_monomials(degree: int) -> List[Tuple[int, int]]:
    return [(j, i) for j in range(degree + 1) for i in range(degree + 1 - j)]


def left_multiplication(ctx: AlgebraContext, u: HElement, target: str, degree: int) -> galois.FieldArray:
    """Matrix of v -> u v on H_(<=degree) or on its image in A.

    u lies in kE, so the PBW degree does not grow.
    """
    if target not in ("H", "A"):
        raise PreconditionError(f"unknown Weyl target {target!r}; expected 'H' or 'A'")
    monomials = _truncated_monomials(degree)
    if target == "H":
        basis = [(j, i, a) for j, i in monomials for a in range(ctx.N)]
    else:
        basis = [(j, i, 0) for j, i in monomials]
    index = {key: n for n, key in enumerate(basis)}
    M = ctx.F.Zeros((len(basis), len(basis)))
    for col, (j, i, a) in enumerate(basis):
        coeffs = ctx.F.Zeros((i + 1, ctx.N))
        coeffs[i, a] = 1
        product = h_mul(u, HElement.from_R(ctx, coeffs, y_power=j)).coeffs
        if target == "A":
            product = np.sum(product, axis=2)[:, :, None]
        for jj, ii, aa in zip(*np.nonzero(product)):
            M[index[(int(jj), int(ii), int(aa))], col] = product[jj, ii, aa]
    return M


def _weyl_entries(ctx: AlgebraContext) -> Tuple[HElement, HElement]:
    T = HElement.g(ctx, 1) - HElement.constant(ctx, 1)
    N = HElement.from_ga(ctx, ctx.ga.norm_element())
    return T, N


@log_performance
def weyl_ext(ctx: AlgebraContext, target: str, degree: int, i_max: Optional[int] = None) -> ExtTable:
    """Ext^i(A, target) for target H or A, computed on PBW degree <= degree.

    Hom(H, M) = M and the maps are left multiplication by g - 1 and N in
    turn.
    """
    if ctx.r != 1:
        raise PreconditionError("the Weyl resolution is implemented for r = 1")
    i_max = get_config().homology.i_max if i_max is None else i_max
    T, N = _weyl_entries(ctx)
    maps = [left_multiplication(ctx, T, target, degree), left_multiplication(ctx, N, target, degree)]
    dim = maps[0].shape[0]
    ranks = [int(np.linalg.matrix_rank(maps[i % 2])) for i in range(i_max + 1)]
    hom_dims = [dim] * (i_max + 1)
    table = ExtTable(
        kind="weyl",
        field_dims=dims_from_ranks(hom_dims, ranks),
        hom_dims=hom_dims,
        ranks=ranks,
        source={"module": "A"},
        target={"module": target, "degree": degree},
    )
    if target == "A" and degree == 0:
        table.case = "A"
        table.reference = reference_dims("weyl", "A", i_max)
    return table


def weyl_annihilator_check(ctx: AlgebraContext, degree: int) -> Dict[str, Any]:
    """Ext^0(A, H) = ker(g - 1) = N H on H_(<=degree)."""
    T, N = _weyl_entries(ctx)
    LT = left_multiplication(ctx, T, "H", degree)
    LN = left_multiplication(ctx, N, "H", degree)
    kernel = LT.shape[0] - int(np.linalg.matrix_rank(LT))
    image = int(np.linalg.matrix_rank(LN))
    composite_zero = not np.any(LT @ LN)
    return {
        "degree": degree,
        "kernel_dimension": kernel,
        "norm_image_dimension": image,
        "monomials": len(_truncated_monomials(degree)),
        "ok": composite_zero and kernel == image,
    }
