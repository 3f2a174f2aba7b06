"""Rational quadratic spaces and finitely generated subgroups.

A :class:`QuadraticSpace` is an abelian Lie algebra with a nondegenerate
symmetric form, given by its Gram matrix.  A :class:`Subgroup` is the Z-span of
finitely many rational vectors in it.  The Casimir element never appears
explicitly: it enters only through pairings of weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import Degenerate, NotAdmissible, NotSymmetric
from .exact import Matrix, as_fraction, hnf, kernel_basis, snf

__all__ = [
    "QuadraticSpace",
    "Subgroup",
    "GradingGroup",
    "induced_gram",
    "is_admissible",
    "admissibility_reason",
    "orthogonal_complement",
    "is_coisotropic",
    "grading_group",
    "is_finite_grading",
    "residual_metric",
    "span_intersection_dim",
]


class QuadraticSpace:
    """Q^n with a nondegenerate symmetric bilinear form."""

    def __init__(self, gram):
        gram = gram if isinstance(gram, Matrix) else Matrix(gram)
        if not gram.is_symmetric:
            raise NotSymmetric("Gram matrix must be square and symmetric")
        if gram.det() == 0:
            raise Degenerate("Gram matrix is singular")
        self.gram = gram
        self.dim = gram.nrows

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram.rows
        n = self.dim
        return sum((Fraction(x[i]) * g[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j]),
                   Fraction(0))

    def __repr__(self):
        return f"QuadraticSpace({self.gram!r})"


@dataclass(frozen=True)
class GradingGroup:
    """Finitely generated abelian group ``Z^r / A Z^r`` with its SNF witnesses."""

    invariant_factors: tuple[int, ...]
    free_rank: int
    diagonal: tuple[int, ...]
    U: Matrix = field(repr=False)
    V: Matrix = field(repr=False)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def classify(self, chi: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Normal form of the class of ``chi`` in ``Hom(l, Z)`` modulo the image of ``l``.

        Returns ``(torsion coordinates, free coordinates)``.
        """
        c = self.V.vecmul(chi)
        tors, free = [], []
        for ci, d in zip(c, self.diagonal):
            if d == 0:
                free.append(int(ci))
            elif d > 1:
                tors.append(int(ci) % d)
        return tuple(tors), tuple(free)


class Subgroup:
    """Z-span of rational generator rows inside a quadratic space.

    The canonical basis is the Hermite normal form of the generators after
    clearing denominators, divided back by the common denominator.
    """

    def __init__(self, space: QuadraticSpace, gens):
        if not isinstance(gens, Matrix):
            gens = Matrix([[as_fraction(v) for v in r] for r in gens], space.dim)
        if gens.ncols != space.dim:
            raise ValueError(f"generators have {gens.ncols} columns, space has dimension {space.dim}")
        self.space = space
        self.gens = gens
        self.scale = gens.denominator_lcm() if gens.nrows else 1
        int_basis = hnf(gens.scale(self.scale)) if gens.nrows else Matrix([], space.dim)
        self.int_basis = int_basis
        self.basis = int_basis.scale(Fraction(1, self.scale))
        self.rank = self.basis.nrows

    @classmethod
    def full(cls, space: QuadraticSpace) -> "Subgroup":
        return cls(space, Matrix.identity(space.dim))

    def coordinates(self, v: Sequence) -> tuple[Fraction, ...] | None:
        """Rational coordinates of ``v`` in the canonical basis, or None off the span."""
        if self.rank == 0:
            return () if all(x == 0 for x in v) else None
        aug = Matrix([list(col) + [as_fraction(x)] for col, x in zip(self.basis.T.rows, v)], self.rank + 1)
        red, piv = aug.rref()
        if self.rank in piv:
            return None
        return tuple(Fraction(red.rows[i][self.rank]) for i in range(self.rank))

    def contains(self, v: Sequence) -> bool:
        c = self.coordinates(v)
        return c is not None and all(x.denominator == 1 for x in c)

    def ambient(self, coords: Sequence) -> tuple:
        return self.basis.vecmul(coords)

    def __repr__(self):
        return f"Subgroup(rank={self.rank}, basis={self.basis!r})"


def induced_gram(sub: Subgroup) -> Matrix:
    """Pairing matrix ``B G B^T`` of the canonical basis."""
    if sub.rank == 0:
        return Matrix([], 0)
    return sub.basis @ sub.space.gram @ sub.basis.T


def admissibility_reason(sub: Subgroup) -> str | None:
    """None when the induced form is integral and even, else what fails."""
    A = induced_gram(sub)
    if not A.is_integral:
        return "non-integer pairing"
    if any(A[i, i] % 2 for i in range(A.nrows)):
        return "odd diagonal"
    return None


def is_admissible(sub: Subgroup) -> bool:
    # integral off-diagonal plus even diagonal gives (x, x) in 2Z for all x by polarization
    return admissibility_reason(sub) is None


def orthogonal_complement(sub: Subgroup) -> Matrix:
    """Basis of the rational subspace ``l^perp``."""
    if sub.rank == 0:
        return Matrix.identity(sub.space.dim)
    return kernel_basis(sub.basis @ sub.space.gram)


def _span_dim(rows: Matrix) -> int:
    return rows.rank() if rows.nrows else 0


def span_intersection_dim(sub: Subgroup) -> int:
    """``dim(span(l) ∩ l^perp)``."""
    perp = orthogonal_complement(sub)
    if sub.rank == 0 or perp.nrows == 0:
        return 0
    return sub.rank + perp.nrows - _span_dim(sub.basis.stack(perp))


def is_coisotropic(sub: Subgroup) -> bool:
    # l^perp-perp is the span of l
    perp = orthogonal_complement(sub)
    if perp.nrows == 0:
        return True
    if sub.rank == 0:
        return False
    return _span_dim(sub.basis.stack(perp)) == sub.rank


def grading_group(sub: Subgroup) -> GradingGroup:
    """``l^# / (l + l^perp)``, the cokernel of ``l -> Hom(l, Z)``."""
    reason = admissibility_reason(sub)
    if reason is not None:
        raise NotAdmissible(reason)
    if sub.rank == 0:
        return GradingGroup((), 0, (), Matrix([], 0), Matrix([], 0))
    A = induced_gram(sub).to_int()
    U, S, V = snf(A)
    diag = tuple(S[i, i] for i in range(S.nrows))
    return GradingGroup(
        invariant_factors=tuple(d for d in diag if d > 1),
        free_rank=sum(1 for d in diag if d == 0),
        diagonal=diag,
        U=U,
        V=V,
    )


def is_finite_grading(sub: Subgroup) -> bool:
    finite = grading_group(sub).is_finite
    if finite != (span_intersection_dim(sub) == 0):
        raise AssertionError("free rank disagrees with dim(span(l) ∩ l^perp)")
    return finite


def residual_metric(sub: Subgroup) -> tuple[int, Matrix]:
    """Dimension and Gram matrix of ``l^perp / (l^perp ∩ span(l))``.

    The basis of the quotient is a set of ``l^perp`` basis combinations
    complementary to the radical of the restricted form.
    """
    perp = orthogonal_complement(sub)
    k = perp.nrows
    if k == 0:
        return 0, Matrix([], 0)
    M = perp @ sub.space.gram @ perp.T
    radical = kernel_basis(M)
    if radical.nrows:
        _, piv = radical.rref()
        keep = [j for j in range(k) if j not in piv]
    else:
        keep = list(range(k))
    C = Matrix([[int(i == j) for i in range(k)] for j in keep], k)
    gram = C @ M @ C.T if keep else Matrix([], 0)
    dim = len(keep)
    if dim != k - span_intersection_dim(sub):
        raise AssertionError("residual dimension mismatch")
    if dim and gram.det() == 0:
        raise AssertionError("residual form is degenerate")
    return dim, gram
