"""Grading data: the dimension of each homogeneous piece of V."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groups import Group


class LengthMismatch(ValueError):
    """Dimension vector length differs from the group order."""


@dataclass(frozen=True)
class DimVector:
    """``dims[i]`` is the dimension of the piece of V graded by ``x_i``."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(x) for x in self.dims)
        if any(x < 0 for x in dims):
            raise ValueError(f"dimensions must be nonnegative, got {list(dims)}")
        object.__setattr__(self, "dims", dims)

    @property
    def total(self) -> int:
        return sum(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def __getitem__(self, i: int) -> int:
        return self.dims[i]

    def __iter__(self):
        return iter(self.dims)

    @property
    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.dims) if x > 0]


def as_dims(g: Group, dims: DimVector | Sequence[int]) -> DimVector:
    if not isinstance(dims, DimVector):
        dims = DimVector(tuple(dims))
    if len(dims) != g.order:
        raise LengthMismatch(f"{len(dims)} dimensions for a group of order {g.order}")
    return dims
