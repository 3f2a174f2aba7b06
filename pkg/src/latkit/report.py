"""Finite verification windows, exhaustive sweeps and their reports.

Every coefficient identity checked by the library compares two unit monomials
``+-e^{i pi t}``.  Sweeps evaluate both sides as integer exponent numerators
over a common denominator ``den`` (value ``e^{i pi k/den}``) on numpy arrays,
which is exact; a failing tuple is re-evaluated on the scalar path to produce
the witness that goes into the report.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "Window",
    "SweepReport",
    "default_window",
    "sweep",
    "DEFAULT_RADIUS",
    "DEFAULT_BUDGET",
    "MAX_WITNESSES",
    "bilinear",
]

DEFAULT_RADIUS = 2
# per-sweep cap on tuples for automatically chosen windows
DEFAULT_BUDGET = 2_000_000
MAX_WITNESSES = 5
CHUNK = 1 << 17


@dataclass(frozen=True)
class Window:
    """Finite set of integer lattice-coordinate vectors."""

    vectors: np.ndarray
    kind: str
    radius: int | None = None

    @classmethod
    def box(cls, rank: int, radius: int = DEFAULT_RADIUS) -> "Window":
        """All vectors with coordinates in ``[-radius, radius]``."""
        if rank == 0:
            return cls(np.zeros((1, 0), dtype=np.int64), "box", radius)
        axes = [np.arange(-radius, radius + 1)] * rank
        grid = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing="ij")], axis=1)
        return cls(grid.astype(np.int64), "box", radius)

    @classmethod
    def star(cls, rank: int, support: int = 2) -> "Window":
        """0 and all ``+-e_i``, plus the ``+-e_i +- e_j`` when ``support == 2``."""
        vecs = [np.zeros(rank, dtype=np.int64)]
        eye = np.eye(rank, dtype=np.int64)
        for i in range(rank):
            vecs += [eye[i], -eye[i]]
        if support >= 2:
            for i, j in combinations(range(rank), 2):
                for a, b in product((1, -1), repeat=2):
                    vecs.append(a * eye[i] + b * eye[j])
        return cls(np.array(vecs, dtype=np.int64).reshape(-1, rank), f"star{support}")

    @property
    def size(self) -> int:
        return len(self.vectors)

    @property
    def rank(self) -> int:
        return self.vectors.shape[1]

    def describe(self) -> dict:
        out = {"kind": self.kind, "rank": self.rank, "size": self.size}
        if self.radius is not None:
            out["radius"] = self.radius
        return out


def default_window(rank: int, arity: int, budget: int = DEFAULT_BUDGET) -> Window:
    """Largest box of radius <= 2 whose ``arity``-fold product fits the budget.

    Falls back to the stars of :meth:`Window.star` when even the radius-1 box
    is too large.
    """
    for radius in (DEFAULT_RADIUS, 1):
        if (2 * radius + 1) ** (rank * arity) <= budget:
            return Window.box(rank, radius)
    star = Window.star(rank, 2)
    if star.size**arity <= budget:
        return star
    return Window.star(rank, 1)


@dataclass
class SweepReport:
    """Outcome of one identity checked over all tuples of a window."""

    name: str
    checked: int
    failures: list = field(default_factory=list)
    n_failures: int = 0
    window: dict | None = None
    params: dict = field(default_factory=dict)
    # False when a deadline stopped the sweep before every tuple was checked
    complete: bool = True

    @property
    def passed(self) -> bool:
        return self.complete and self.n_failures == 0

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "n_failures": self.n_failures,
        }
        if not self.complete:
            out["complete"] = False
        if self.window is not None:
            out["window"] = self.window
        if self.params:
            out["params"] = self.params
        if self.failures:
            out["witnesses"] = self.failures
        return out


def _tuples(window: Window, arity: int, chunk: int):
    n = window.size
    total = n**arity
    W = window.vectors
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        parts = []
        for _ in range(arity):
            idx, r = np.divmod(idx, n)
            parts.append(r)
        yield [W[p] for p in reversed(parts)]


def sweep(
    name: str,
    window: Window,
    arity: int,
    sides: Callable[..., tuple[np.ndarray, np.ndarray]],
    den: int,
    witness: Callable[..., dict],
    params: dict | None = None,
    chunk: int = CHUNK,
    deadline: float | None = None,
    cases: int | None = None,
) -> SweepReport:
    """Check ``lhs == rhs`` (exponents mod ``2 den``) on every ``arity``-tuple of the window.

    ``sides(*arrays)`` gets one ``(m, rank)`` array per argument and returns the
    two exponent-numerator arrays.  ``witness(*vectors)`` renders one failing
    tuple with exact scalar coefficients.  With ``deadline`` (seconds) the sweep
    stops once the time is spent and the report is marked incomplete.

    With ``cases`` the sides are ``(m, cases)`` arrays, one column per case
    sharing the window tuples, and ``witness(case, *vectors)`` gets the column.
    """
    report = SweepReport(name=name, checked=0, window=window.describe(), params=dict(params or {}))
    mod = 2 * den
    per_tuple = 1 if cases is None else cases
    start = time.perf_counter()
    for args in _tuples(window, arity, max(1024, chunk // per_tuple)):
        if deadline is not None and time.perf_counter() - start > deadline:
            report.complete = False
            report.params["planned"] = window.size**arity * per_tuple
            break
        lhs, rhs = sides(*args)
        diff = (np.asarray(lhs) - np.asarray(rhs)) % mod
        report.checked += len(args[0]) * per_tuple
        if not diff.any():
            continue
        bad = np.argwhere(diff)
        report.n_failures += len(bad)
        for hit in bad[: MAX_WITNESSES - len(report.failures)]:
            vecs = [tuple(int(v) for v in a[hit[0]]) for a in args]
            report.failures.append(witness(*vecs) if cases is None else witness(int(hit[1]), *vecs))
    return report


def bilinear(X: np.ndarray, M: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Row-wise ``X_k M Y_k`` with broadcasting over leading axes."""
    X, Y = np.broadcast_arrays(np.asarray(X), np.asarray(Y))
    return np.einsum("...i,...i->...", X @ M, Y)


def int_vec(v: Sequence) -> list[int]:
    return [int(x) for x in v]
