"""Matrices with entries in H_lambda.

Free modules H^n are rows; a differential P_(i+1) -> P_i is right
multiplication by a (rank P_(i+1)) x (rank P_i) matrix, so composing
P_(i+2) -> P_(i+1) -> P_i is the product d_(i+1) @ d_i.
"""

from typing import Any, Dict, List, Sequence, Tuple, Union

from ..ore.context import AlgebraContext
from ..ore.element import HElement
from ..ore.product import h_mul
from ..utils.errors import ParameterMismatchError

Entry = Union[HElement, int]


class HMatrix:
    """Immutable matrix over H_lambda."""

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: AlgebraContext, entries: Sequence[Sequence[Entry]]):
        rows = [list(row) for row in entries]
        if not rows or any(len(row) != len(rows[0]) for row in rows):
            raise ParameterMismatchError("HMatrix rows must be non-empty and of equal length")
        self.ctx = ctx
        self.entries: List[List[HElement]] = [
            [e if isinstance(e, HElement) else HElement.constant(ctx, e) for e in row] for row in rows
        ]

    @classmethod
    def column(cls, ctx: AlgebraContext, entries: Sequence[Entry]) -> "HMatrix":
        return cls(ctx, [[e] for e in entries])

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    def __getitem__(self, index: Tuple[int, int]) -> HElement:
        i, j = index
        return self.entries[i][j]

    def __matmul__(self, other: "HMatrix") -> "HMatrix":
        if self.cols != other.rows:
            raise ParameterMismatchError(f"cannot compose {self.shape} with {other.shape}")
        out = []
        for i in range(self.rows):
            row = []
            for k in range(other.cols):
                total = HElement.zero(self.ctx)
                for j in range(self.cols):
                    left, right = self.entries[i][j], other.entries[j][k]
                    if left.is_zero() or right.is_zero():
                        continue
                    total = total + h_mul(left, right)
                row.append(total)
            out.append(row)
        return HMatrix(self.ctx, out)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def nonzero_entries(self) -> List[Tuple[int, int, str]]:
        return [
            (i, j, str(e))
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
            if not e.is_zero()
        ]

    def __repr__(self) -> str:
        return f"HMatrix({self.rows}x{self.cols})"

    def to_json(self) -> Dict[str, Any]:
        return {"shape": list(self.shape), "entries": [[str(e) for e in row] for row in self.entries]}
