"""The skew group algebra ``k[l, alpha]`` of an even lattice.

The classifying cocycle is ``alpha(x, y) = (-1)^{beta(x, y)}`` where ``beta`` is
the strictly lower triangular part of the Gram matrix, read as a bilinear form
on lattice coordinates.  Because the diagonal of the Gram matrix is even,
``beta(x, y) - beta(y, x) = (x, y) mod 2``, so the skew ratio is
``e^{i pi (x, y)}`` as commutativity demands.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .errors import DomainError, NotAdmissible
from .exact import Phase, UnitScalar
from .lattice import EvenLattice
from .report import MAX_WITNESSES, SweepReport, Window, bilinear, default_window, sweep
from .space import Subgroup, admissibility_reason, induced_gram

__all__ = [
    "IntegralForm",
    "TwoCocycle",
    "MutantCocycle",
    "AlgebraElement",
    "build_alpha",
    "mutate",
    "cocycle_defect",
    "skew_ratio",
    "multiply",
    "multiplicative_form",
    "verify_commutativity",
    "verify_cocycle",
    "verify_associativity",
    "verify_multiplicative_form",
    "verify_action",
    "algebra_suite",
]

Vec = tuple[int, ...]


def _as_lattice_vector(x) -> Vec:
    out = []
    for v in x:
        if int(v) != v:
            raise DomainError(f"{tuple(x)} is not a lattice vector")
        out.append(int(v))
    return tuple(out)


class IntegralForm:
    """The even integral form on an admissible subgroup, possibly degenerate or not of full rank.

    Carries what the algebra sweeps need; an :class:`EvenLattice` serves equally.
    """

    def __init__(self, sub: Subgroup):
        reason = admissibility_reason(sub)
        if reason is not None:
            raise NotAdmissible(reason)
        self.sub = sub
        self.space = sub.space
        self.rank = sub.rank
        self.basis = sub.basis
        self.gram = induced_gram(sub).to_int()
        self.gram_array = np.array(self.gram.to_lists(), dtype=np.int64).reshape(self.rank, self.rank)

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        n = self.rank
        g = self.gram.rows
        return sum((Fraction(x[i]) * g[i][j] * y[j] for i in range(n) for j in range(n)), Fraction(0))


class TwoCocycle:
    """Normalised ``{+-1}``-valued 2-cocycle on ``l`` with prescribed skew ratio."""

    def __init__(self, lattice: EvenLattice):
        self.lattice = lattice
        self.lower = np.tril(lattice.gram_array, -1)
        self._lower_rows = [tuple(int(v) for v in r) for r in self.lower]

    def beta(self, x: Sequence[int], y: Sequence[int]) -> int:
        rows = self._lower_rows
        return sum(x[i] * rows[i][j] * y[j] for i in range(len(rows)) if x[i] for j in range(i) if y[j])

    def __call__(self, x: Sequence[int], y: Sequence[int]) -> int:
        return -1 if self.beta(x, y) % 2 else 1

    def value(self, x, y) -> UnitScalar:
        return UnitScalar.sign(self(x, y))

    def parity(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Vectorised ``beta(X, Y) mod 2`` over matching rows."""
        return bilinear(X, self.lower, Y) % 2

    def parity_table(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """``beta(X_i, Y_j) mod 2`` for all pairs of rows, as a ``uint8`` table."""
        return (((X @ self.lower) @ Y.T) & 1).astype(np.uint8)

    def __repr__(self):
        return f"TwoCocycle(lower={self._lower_rows})"


class MutantCocycle(TwoCocycle):
    """A cocycle with the single value at ``(x0, y0)`` negated (negative control)."""

    def __init__(self, base: TwoCocycle, x0: Sequence[int], y0: Sequence[int]):
        super().__init__(base.lattice)
        self.base = base
        self.x0 = tuple(int(v) for v in x0)
        self.y0 = tuple(int(v) for v in y0)

    def __call__(self, x, y) -> int:
        v = self.base(x, y)
        if tuple(x) == self.x0 and tuple(y) == self.y0:
            v = -v
        return v

    def parity(self, X, Y):
        X, Y = np.broadcast_arrays(X, Y)
        p = self.base.parity(X, Y)
        hit = np.all(X == np.asarray(self.x0), axis=-1) & np.all(Y == np.asarray(self.y0), axis=-1)
        return p ^ hit.astype(p.dtype)

    def parity_table(self, X, Y):
        T = self.base.parity_table(X, Y)
        rows = np.nonzero(np.all(X == np.asarray(self.x0), axis=-1))[0]
        cols = np.nonzero(np.all(Y == np.asarray(self.y0), axis=-1))[0]
        T[np.ix_(rows, cols)] ^= 1
        return T

    def __repr__(self):
        return f"MutantCocycle(x0={self.x0}, y0={self.y0})"


def build_alpha(L: EvenLattice) -> TwoCocycle:
    return TwoCocycle(L)


def mutate(alpha: TwoCocycle, seed: int = 0) -> MutantCocycle:
    """Flip one value ``alpha(x0, y0)`` with ``x0 != y0`` signed unit vectors.

    Unit vectors lie in every default window, so each sweep sees the flip.
    """
    rng = np.random.default_rng(seed)
    n = alpha.lattice.rank
    units = [tuple(s * int(i == j) for j in range(n)) for i in range(n) for s in (1, -1)]
    while True:
        i, j = rng.integers(len(units), size=2)
        if i != j:
            return MutantCocycle(alpha, units[i], units[j])


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _neg(x):
    return tuple(-a for a in x)


def cocycle_defect(alpha: TwoCocycle, x, y, z) -> UnitScalar:
    """``alpha(x,y) alpha(x+y,z) alpha(y,z)^-1 alpha(x,y+z)^-1``."""
    s = alpha(x, y) * alpha(_add(x, y), z) * alpha(y, z) * alpha(x, _add(y, z))
    return UnitScalar.sign(s)


def skew_ratio(alpha: TwoCocycle, x, y) -> Phase:
    """``alpha(x, y) / alpha(y, x)`` as a phase."""
    return (alpha.value(x, y) / alpha.value(y, x)).as_phase()


class AlgebraElement:
    """Finitely supported combination ``sum_x c_x e_x`` with ``x`` in the lattice."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Vec, UnitScalar] = {}
        for x, c in items:
            x = _as_lattice_vector(x)
            c = c if isinstance(c, UnitScalar) else UnitScalar.rational(c)
            acc[x] = acc.get(x, UnitScalar.zero()) + c
        self.coeffs = {x: c for x, c in sorted(acc.items()) if not c.is_zero}

    @classmethod
    def basis(cls, x, coeff=1) -> "AlgebraElement":
        return cls({tuple(x): coeff})

    @classmethod
    def unit(cls, rank: int) -> "AlgebraElement":
        return cls.basis((0,) * rank)

    @property
    def support(self) -> list[Vec]:
        return list(self.coeffs)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(list(self.coeffs.items()) + list(other.coeffs.items()))

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement({x: v * c for x, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.coeffs == other.coeffs

    def __repr__(self):
        return "AlgebraElement(" + ", ".join(f"{c}*e{x}" for x, c in self.coeffs.items()) + ")"


def multiply(a: AlgebraElement, b: AlgebraElement, alpha: TwoCocycle) -> AlgebraElement:
    """Bilinear extension of ``e_x e_y = alpha(x, y) e_{x+y}``."""
    terms = []
    for x, cx in a.coeffs.items():
        for y, cy in b.coeffs.items():
            terms.append((_add(x, y), cx * cy * alpha(x, y)))
    return AlgebraElement(terms)


def multiplicative_form(a: AlgebraElement, b: AlgebraElement, alpha: TwoCocycle) -> UnitScalar:
    """Bilinear form with ``(e_x, e_y) = alpha(x, y)`` if ``x + y = 0``, else 0."""
    out = UnitScalar.zero()
    for x, cx in a.coeffs.items():
        c = b.coeffs.get(_neg(x))
        if c is not None:
            out = out + cx * c * alpha(x, _neg(x))
    return out


# --------------------------------------------------------------------------
# sweeps


def _window(L: EvenLattice, window: Window | int | None, arity: int) -> Window:
    if window is None:
        return default_window(L.rank, arity)
    if isinstance(window, int):
        return Window.box(L.rank, window)
    return window


def _pairing(L: EvenLattice, X, Y) -> np.ndarray:
    return bilinear(X, L.gram_array, Y)


def verify_commutativity(L: EvenLattice, window=None, alpha: TwoCocycle | None = None,
                         deadline: float | None = None) -> SweepReport:
    """``e^{i pi (x,y)} alpha(y, x) = alpha(x, y)`` for all pairs of the window."""
    alpha = alpha or build_alpha(L)
    W = _window(L, window, 2)

    def sides(X, Y):
        return alpha.parity(X, Y), _pairing(L, X, Y) + alpha.parity(Y, X)

    def witness(x, y):
        return {
            "x": list(x),
            "y": list(y),
            "lhs": alpha.value(x, y).to_json(),
            "rhs": (UnitScalar.phase(L.pair(x, y)) * alpha.value(y, x)).to_json(),
        }

    return sweep("commutativity", W, 2, sides, 1, witness, deadline=deadline)


# exhaustive box sweeps of d(alpha) are table driven when the tables fit
TABLE_MAX_PAIRS = 8_000_000


def _box_index(X: np.ndarray, radius: int) -> np.ndarray:
    idx = np.zeros(X.shape[:-1], dtype=np.int64)
    for c in range(X.shape[-1]):
        idx = idx * (2 * radius + 1) + (X[..., c] + radius)
    return idx


def _coboundary_table_sweep(name: str, W: Window, alpha: TwoCocycle, witness,
                            deadline: float | None = None) -> SweepReport | None:
    """``alpha(x,y) alpha(x+y,z) = alpha(y,z) alpha(x,y+z)`` on every triple of a box, by table lookup.

    ``alpha`` is tabulated on window x window and on window x doubled box (which
    contains every ``x + y``); each triple is then checked individually.
    Returns None when the window is not a box or the tables would be too large.
    """
    if W.kind != "box" or W.radius is None:
        return None
    n = W.size
    R = W.radius
    if n * n > TABLE_MAX_PAIRS or n * (4 * R + 1) ** W.rank > TABLE_MAX_PAIRS:
        return None
    V = Window.box(W.rank, 2 * R).vectors
    X = W.vectors
    on_window = alpha.parity_table(X, X)
    sum_left = alpha.parity_table(V, X)
    sum_right = alpha.parity_table(X, V)
    sums = _box_index(X[:, None, :] + X[None, :, :], 2 * R)
    report = SweepReport(name=name, checked=0, window=W.describe(), params={"evaluation": "table"})
    start = time.perf_counter()
    for i in range(n):
        if deadline is not None and time.perf_counter() - start > deadline:
            report.complete = False
            report.params["planned"] = n**3
            break
        d = on_window[i][:, None] ^ sum_left[sums[i]] ^ on_window ^ sum_right[i][sums]
        report.checked += n * n
        if not d.any():
            continue
        bad = np.argwhere(d)
        report.n_failures += len(bad)
        for j, k in bad[: MAX_WITNESSES - len(report.failures)]:
            report.failures.append(witness(*(tuple(int(v) for v in X[t]) for t in (i, j, k))))
    return report


def verify_cocycle(L: EvenLattice, window=None, alpha: TwoCocycle | None = None, table: bool = True,
                   deadline: float | None = None) -> SweepReport:
    """``d(alpha)(x, y, z) = 1`` on all triples of the window."""
    alpha = alpha or build_alpha(L)
    W = _window(L, window, 3)

    def sides(X, Y, Z):
        lhs = alpha.parity(X, Y) + alpha.parity(X + Y, Z)
        rhs = alpha.parity(Y, Z) + alpha.parity(X, Y + Z)
        return lhs, rhs

    def witness(x, y, z):
        return {"x": list(x), "y": list(y), "z": list(z), "defect": cocycle_defect(alpha, x, y, z).to_json()}

    if table:
        fast = _coboundary_table_sweep("cocycle_defect", W, alpha, witness, deadline)
        if fast is not None:
            return fast
    return sweep("cocycle_defect", W, 3, sides, 1, witness, deadline=deadline)


def verify_associativity(L: EvenLattice, window=None, alpha: TwoCocycle | None = None) -> SweepReport:
    """``(e_x e_y) e_z = e_x (e_y e_z)`` computed through :func:`multiply`."""
    alpha = alpha or build_alpha(L)
    W = _window(L, window, 3)

    def sides(X, Y, Z):
        return alpha.parity(X, Y) + alpha.parity(X + Y, Z), alpha.parity(Y, Z) + alpha.parity(X, Y + Z)

    def witness(x, y, z):
        ex, ey, ez = (AlgebraElement.basis(v) for v in (x, y, z))
        left = multiply(multiply(ex, ey, alpha), ez, alpha)
        right = multiply(ex, multiply(ey, ez, alpha), alpha)
        key = _add(_add(x, y), z)
        return {"x": list(x), "y": list(y), "z": list(z),
                "lhs": left.coeffs[key].to_json(), "rhs": right.coeffs[key].to_json()}

    return sweep("associativity", W, 3, sides, 1, witness)


def verify_multiplicative_form(L: EvenLattice, window=None, alpha: TwoCocycle | None = None) -> SweepReport:
    """``form(e_x e_y, e_z) = form(e_x, e_y e_z)`` with ``z = -(x+y)``; other z give 0 on both sides."""
    alpha = alpha or build_alpha(L)
    W = _window(L, window, 2)

    def sides(X, Y):
        Z = -(X + Y)
        return alpha.parity(X, Y) + alpha.parity(X + Y, Z), alpha.parity(Y, Z) + alpha.parity(X, Y + Z)

    def witness(x, y):
        z = _neg(_add(x, y))
        ex, ey, ez = (AlgebraElement.basis(v) for v in (x, y, z))
        lhs = multiplicative_form(multiply(ex, ey, alpha), ez, alpha)
        rhs = multiplicative_form(ex, multiply(ey, ez, alpha), alpha)
        return {"x": list(x), "y": list(y), "z": list(z), "lhs": lhs.to_json(), "rhs": rhs.to_json()}

    return sweep("multiplicative_form", W, 2, sides, 1, witness)


def verify_action(L: EvenLattice, window=None) -> SweepReport:
    """Derivation property of the weight action: ``(x,z) + (y,z) = (x+y,z)``, z over the ambient basis."""
    W = _window(L, window, 2)
    # row i of P is (b_i, e_j) over the ambient basis e_j, scaled to integers
    P = L.basis @ L.space.gram
    den = P.denominator_lcm()
    Pz = np.array([[int(t * den) for t in row] for row in P.to_lists()], dtype=np.int64).reshape(L.rank, -1)

    def sides(X, Y):
        lhs = X @ Pz + Y @ Pz
        rhs = (X + Y) @ Pz
        return (lhs != rhs).any(axis=1).astype(np.int64), np.zeros(len(X), dtype=np.int64)

    def witness(x, y):
        return {"x": list(x), "y": list(y)}

    return sweep("action_derivation", W, 2, sides, 1, witness)


def algebra_suite(L: EvenLattice, window=None, alpha: TwoCocycle | None = None) -> list[SweepReport]:
    return [
        verify_cocycle(L, window, alpha),
        verify_commutativity(L, window, alpha),
        verify_associativity(L, window, alpha),
        verify_multiplicative_form(L, window, alpha),
        verify_action(L, window),
    ]
