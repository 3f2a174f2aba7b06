"""Finite abelian groups in invariant-factor form."""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

import numpy as np

__all__ = ["FiniteAbelianGroup"]


class FiniteAbelianGroup:
    """``Z/d_1 x ... x Z/d_k`` with elements as normal-form tuples ``0 <= c_i < d_i``.

    Elements are also indexed by their mixed-radix rank so that tables over the
    group can be numpy arrays.
    """

    def __init__(self, factors: Sequence[int]):
        factors = tuple(int(d) for d in factors)
        if any(d < 1 for d in factors):
            raise ValueError(f"invariant factors must be positive, got {factors}")
        self.factors = tuple(d for d in factors if d > 1)
        self.order = int(np.prod(self.factors, dtype=object)) if self.factors else 1

    def __len__(self) -> int:
        return self.order

    def __repr__(self):
        body = " x ".join(f"Z/{d}" for d in self.factors) or "0"
        return f"{type(self).__name__}({body})"

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.factors)

    def elements(self) -> Iterator[tuple[int, ...]]:
        return product(*(range(d) for d in self.factors))

    def reduce(self, c: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(x) % d for x, d in zip(c, self.factors))

    def add(self, f, g) -> tuple[int, ...]:
        return tuple((a + b) % d for a, b, d in zip(f, g, self.factors))

    def neg(self, f) -> tuple[int, ...]:
        return tuple((-a) % d for a, d in zip(f, self.factors))

    def index(self, f) -> int:
        i = 0
        for a, d in zip(f, self.factors):
            i = i * d + a
        return i

    def element(self, i: int) -> tuple[int, ...]:
        out = []
        for d in reversed(self.factors):
            i, r = divmod(i, d)
            out.append(r)
        return tuple(reversed(out))

    # vectorised index arithmetic
    @cached_property
    def coords(self) -> np.ndarray:
        """``(order, k)`` array of normal forms in index order."""
        if not self.factors:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.meshgrid(*(np.arange(d) for d in self.factors), indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)

    def ravel(self, C: np.ndarray) -> np.ndarray:
        idx = np.zeros(C.shape[:-1], dtype=np.int64)
        for j, d in enumerate(self.factors):
            idx = idx * d + C[..., j] % d
        return idx

    def add_idx(self, I: np.ndarray, J: np.ndarray) -> np.ndarray:
        if not self.factors:
            return np.zeros(np.broadcast(I, J).shape, dtype=np.int64)
        return self.ravel(self.coords[I] + self.coords[J])

    def neg_idx(self, I: np.ndarray) -> np.ndarray:
        if not self.factors:
            return np.zeros_like(I)
        return self.ravel(-self.coords[I])
