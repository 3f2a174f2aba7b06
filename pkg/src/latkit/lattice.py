"""Even lattices, dual lattices and discriminant forms.

Vectors of ``l#`` are carried in *lattice coordinates*, i.e. as rational
combinations of the canonical lattice basis; :meth:`EvenLattice.to_ambient`
converts to the coordinates of the ambient space.  For a full-rank lattice the
two descriptions are equivalent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import DomainError, NotALattice, NotAdmissible
from .exact import Matrix, Phase, as_fraction, lcm, snf
from .groups import FiniteAbelianGroup
from .space import (
    QuadraticSpace,
    Subgroup,
    admissibility_reason,
    induced_gram,
)

__all__ = [
    "EvenLattice",
    "DiscriminantGroup",
    "DiscriminantForm",
    "Section",
    "dual_basis",
    "discriminant_group",
    "discriminant_form",
    "make_section",
    "enumerate_simples",
]

Vector = tuple


class EvenLattice:
    """A full-rank subgroup whose induced form is integral, even and nondegenerate."""

    def __init__(self, sub: Subgroup):
        reason = admissibility_reason(sub)
        if reason is not None:
            raise NotAdmissible(reason)
        if sub.rank != sub.space.dim:
            raise NotALattice(f"rank {sub.rank} < dimension {sub.space.dim}")
        self.sub = sub
        self.space = sub.space
        self.rank = sub.rank
        self.basis = sub.basis
        self.gram = induced_gram(sub).to_int()

    @classmethod
    def from_gram(cls, gram) -> "EvenLattice":
        space = QuadraticSpace(gram)
        return cls(Subgroup.full(space))

    def __repr__(self):
        return f"EvenLattice(gram={self.gram!r})"

    @cached_property
    def gram_array(self) -> np.ndarray:
        return np.array(self.gram.to_lists(), dtype=np.int64)

    @cached_property
    def gram_inverse(self) -> Matrix:
        return self.gram.inverse()

    @cached_property
    def det(self) -> int:
        return int(self.gram.det())

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        """Form on lattice coordinates: ``x A y^T``."""
        g = self.gram.rows
        n = self.rank
        return sum((Fraction(x[i]) * g[i][j] * y[j] for i in range(n) if x[i] for j in range(n) if y[j]),
                   Fraction(0))

    def to_ambient(self, x: Sequence) -> Vector:
        return self.basis.vecmul(x)

    def from_ambient(self, v: Sequence) -> Vector:
        c = self.sub.coordinates([as_fraction(t) for t in v])
        assert c is not None  # full rank
        return tuple(Fraction(t) for t in c)

    def is_lattice_vector(self, x: Sequence) -> bool:
        return all(Fraction(t).denominator == 1 for t in x)

    def is_dual_vector(self, x: Sequence) -> bool:
        return all(Fraction(t).denominator == 1 for t in self.gram.vecmul(x))

    @cached_property
    def snf(self):
        return snf(self.gram)


def dual_basis(L: EvenLattice) -> Matrix:
    """Rows generating ``l#`` over Z in ambient coordinates, ``A^{-1} B``."""
    return L.gram_inverse @ L.basis


class DiscriminantGroup(FiniteAbelianGroup):
    """``l# / l`` with SNF generator lifts.

    ``lifts[i]`` is ``U_i / d_i`` in lattice coordinates; ``d_i * lifts[i]`` lies in ``l``.
    """

    def __init__(self, L: EvenLattice):
        U, S, V = L.snf
        diag = [S[i, i] for i in range(S.nrows)]
        super().__init__([abs(d) for d in diag])
        self.lattice = L
        self._V = V
        self._positions = [i for i, d in enumerate(diag) if d > 1]
        self.lifts: tuple[Vector, ...] = tuple(
            tuple(Fraction(U[i, j], diag[i]) for j in range(L.rank)) for i in self._positions
        )
        self.exponent = lcm(*self.factors) if self.factors else 1

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.factors

    @property
    def ambient_lifts(self) -> tuple[Vector, ...]:
        return tuple(self.lattice.to_ambient(g) for g in self.lifts)

    def normal_form(self, x: Sequence) -> tuple[int, ...]:
        """Class of a dual vector (lattice coordinates) in normal form."""
        chi = self.lattice.gram.vecmul(x)
        if any(Fraction(t).denominator != 1 for t in chi):
            raise DomainError(f"{x} is not in the dual lattice")
        c = self._V.vecmul(chi)
        return tuple(int(c[i]) % self.factors[k] for k, i in enumerate(self._positions))

    def lift(self, X: Sequence[int]) -> Vector:
        n = self.lattice.rank
        out = [Fraction(0)] * n
        for c, g in zip(X, self.lifts):
            if c:
                out = [a + c * b for a, b in zip(out, g)]
        return tuple(out)


def discriminant_group(L: EvenLattice) -> DiscriminantGroup:
    return DiscriminantGroup(L)


@dataclass(frozen=True)
class Section:
    """Set-theoretic section ``s: l#/l -> l#`` stored as a table in index order.

    Values are lattice coordinates.  ``theta(X, Y) = s(X+Y) - s(X) - s(Y)`` is an
    integer vector of ``l``.
    """

    group: DiscriminantGroup
    values: tuple[Vector, ...]

    def __post_init__(self):
        if any(v != 0 for v in self.values[0]):
            raise ValueError("a section must send 0 to 0")
        for i, v in enumerate(self.values):
            if self.group.normal_form(v) != self.group.element(i):
                raise DomainError(f"s({self.group.element(i)}) = {v} lies in the wrong coset")

    def __call__(self, X) -> Vector:
        return self.values[self.group.index(X)]

    def theta(self, X, Y) -> tuple[int, ...]:
        sxy = self(self.group.add(X, Y))
        sx, sy = self(X), self(Y)
        t = tuple(a - b - c for a, b, c in zip(sxy, sx, sy))
        if any(Fraction(v).denominator != 1 for v in t):
            raise AssertionError(f"theta({X}, {Y}) = {t} is not in the lattice")
        return tuple(int(v) for v in t)

    def perturbed(self, rng: np.random.Generator, radius: int = 3) -> "Section":
        """Same cosets, every nonzero value shifted by a random lattice vector."""
        n = self.group.lattice.rank
        vals = [self.values[0]]
        for v in self.values[1:]:
            lam = rng.integers(-radius, radius + 1, size=n)
            vals.append(tuple(a + int(b) for a, b in zip(v, lam)))
        return Section(self.group, tuple(vals))

    @cached_property
    def denominator(self) -> int:
        return lcm(*(Fraction(t).denominator for v in self.values for t in v))

    @cached_property
    def scaled(self) -> np.ndarray:
        """``(order, rank)`` integer array ``denominator * s``."""
        e = self.denominator
        return np.array([[int(Fraction(t) * e) for t in v] for v in self.values], dtype=np.int64).reshape(
            len(self.values), self.group.lattice.rank
        )


def make_section(L: EvenLattice, group: DiscriminantGroup | None = None) -> Section:
    """Linear section ``(c_1, ..., c_k) -> sum c_i g_i`` on the SNF lifts."""
    D = group or discriminant_group(L)
    return Section(D, tuple(D.lift(X) for X in D.elements()))


class DiscriminantForm:
    """``q(X) = e^{i pi (s X, s X)}`` and its bicharacter ``b(X, Y) = e^{2 i pi (sX, sY)}``."""

    def __init__(self, L: EvenLattice, section: Section | None = None):
        self.lattice = L
        self.section = section or make_section(L)
        self.group = self.section.group

    def q(self, X) -> Phase:
        s = self.section(X)
        return Phase(self.lattice.pair(s, s))

    def b(self, X, Y) -> Phase:
        return Phase(2 * self.lattice.pair(self.section(X), self.section(Y)))

    def q_table(self) -> list[tuple[tuple[int, ...], Phase]]:
        return [(X, self.q(X)) for X in self.group.elements()]

    def b_table(self) -> list[list[Phase]]:
        els = list(self.group.elements())
        return [[self.b(X, Y) for Y in els] for X in els]


def discriminant_form(L: EvenLattice, section: Section | None = None) -> DiscriminantForm:
    return DiscriminantForm(L, section)


def enumerate_simples(L: EvenLattice) -> list[Vector]:
    """One ambient representative of each coset of ``l#/l``."""
    sec = make_section(L)
    return [L.to_ambient(v) for v in sec.values]
