"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`.  Transcendental values are restricted
to the phase group ``e^{i pi t}`` with ``t`` rational, and linear combinations of
phases with rational coefficients are carried by :class:`UnitScalar`.

Integer and rational matrices are small dense :class:`Matrix` values with exact
rank, kernel, inverse, Smith and Hermite normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Phase",
    "UnitScalar",
    "Matrix",
    "NonMonomialError",
    "as_fraction",
    "frac_str",
    "parse_fraction",
    "scalar_normalize",
    "snf",
    "hnf",
    "kernel_basis",
    "lcm",
]


class NonMonomialError(ArithmeticError):
    """Raised when an identity needs a monomial scalar and gets a sum."""


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        v = abs(int(v))
        if v:
            out = out * v // gcd(out, v)
    return out


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_fraction(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass 'p/q' strings or integers")
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_fraction(text: str) -> Fraction:
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# --------------------------------------------------------------------------
# phases and scalars


@dataclass(frozen=True, order=True)
class Phase:
    """The unit complex number ``e^{i pi t}``; ``t`` is kept in ``[0, 2)``."""

    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", as_fraction(self.t) % 2)

    @classmethod
    def one(cls) -> "Phase":
        return cls(Fraction(0))

    def __mul__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.t + other.t)

    def __truediv__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.t - other.t)

    def __pow__(self, n: int) -> "Phase":
        return Phase(self.t * n)

    def inverse(self) -> "Phase":
        return Phase(-self.t)

    @property
    def is_sign(self) -> bool:
        """True iff the phase is +1 or -1."""
        return self.t.denominator == 1

    @property
    def is_one(self) -> bool:
        return self.t == 0

    def __str__(self) -> str:
        return f"e^(i*pi*{frac_str(self.t)})"


def _fold(t: Fraction, coeff: Fraction) -> tuple[Fraction, Fraction]:
    t = t % 2
    if t >= 1:
        return t - 1, -coeff
    return t, coeff


def scalar_normalize(terms: Mapping | Iterable[tuple]) -> "UnitScalar":
    """Canonical scalar from ``{t: coeff}`` or ``[(t, coeff), ...]``.

    Uses only ``e^{i pi (t+1)} = -e^{i pi t}``; deeper cyclotomic relations are
    deliberately not applied.
    """
    items = terms.items() if isinstance(terms, Mapping) else terms
    acc: dict[Fraction, Fraction] = {}
    for t, coeff in items:
        t, coeff = _fold(as_fraction(t), as_fraction(coeff))
        acc[t] = acc.get(t, Fraction(0)) + coeff
    return UnitScalar._raw(tuple(sorted((t, c) for t, c in acc.items() if c != 0)))


class UnitScalar:
    """Finite sum ``sum_k r_k e^{i pi t_k}`` with rational ``r_k`` and ``t_k`` in [0, 1)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        self.terms = scalar_normalize(terms).terms

    @classmethod
    def _raw(cls, terms: tuple) -> "UnitScalar":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls) -> "UnitScalar":
        return cls._raw(())

    @classmethod
    def one(cls) -> "UnitScalar":
        return cls._raw(((Fraction(0), Fraction(1)),))

    @classmethod
    def rational(cls, r) -> "UnitScalar":
        return cls({Fraction(0): as_fraction(r)})

    @classmethod
    def sign(cls, s: int) -> "UnitScalar":
        if s not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {s}")
        return cls.rational(s)

    @classmethod
    def phase(cls, t, coeff=1) -> "UnitScalar":
        if isinstance(t, Phase):
            t = t.t
        return cls({as_fraction(t): as_fraction(coeff)})

    # ring structure
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return scalar_normalize(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return UnitScalar._raw(tuple((t, -c) for t, c in self.terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Phase):
            other = UnitScalar.phase(other.t)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return scalar_normalize(
            [(t1 + t2, c1 * c2) for t1, c1 in self.terms for t2, c2 in other.terms]
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Phase):
            other = UnitScalar.phase(other.t)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    # monomial helpers
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) <= 1

    @property
    def is_unit_monomial(self) -> bool:
        return len(self.terms) == 1 and abs(self.terms[0][1]) == 1

    def as_phase(self) -> Phase:
        """The phase of a unit monomial ``+-e^{i pi t}``."""
        if not self.is_unit_monomial:
            raise NonMonomialError(f"{self} is not a unit monomial")
        t, c = self.terms[0]
        return Phase(t if c > 0 else t + 1)

    def inverse(self) -> "UnitScalar":
        if len(self.terms) != 1:
            raise NonMonomialError(f"cannot invert non-monomial {self}")
        t, c = self.terms[0]
        return UnitScalar({-t: 1 / c})

    def __truediv__(self, other):
        if isinstance(other, Phase):
            other = UnitScalar.phase(other.t)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def to_json(self):
        return [{"t": frac_str(t), "coeff": frac_str(c)} for t, c in self.terms]

    def __repr__(self):
        if not self.terms:
            return "UnitScalar(0)"
        inner = " + ".join(f"{frac_str(c)}*e^(i*pi*{frac_str(t)})" for t, c in self.terms)
        return f"UnitScalar({inner})"

    __str__ = __repr__


def _coerce(x):
    if isinstance(x, UnitScalar):
        return x
    if isinstance(x, Phase):
        return UnitScalar.phase(x.t)
    if isinstance(x, (int, Fraction)):
        return UnitScalar.rational(x)
    return None


# --------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix over Z or Q (entries are ``int`` or ``Fraction``)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        data = tuple(tuple(_entry(v) for v in r) for r in rows)
        if ncols is None:
            if not data:
                raise ValueError("empty matrix needs an explicit column count")
            ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix rows")
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(frac_str(v) for v in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"

    @property
    def T(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.T.rows
        return Matrix([[_dot(r, c) for c in cols] for r in self.rows], other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c) -> "Matrix":
        return Matrix([[_entry(c * v) for v in r] for r in self.rows], self.ncols)

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def vecmul(self, v: Sequence) -> tuple:
        """Row vector times matrix."""
        return tuple(_entry(sum((v[i] * self.rows[i][j] for i in range(self.nrows)), Fraction(0)))
                     for j in range(self.ncols))

    def stack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column mismatch")
        return Matrix(self.rows + other.rows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    @property
    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for r in self.rows for v in r)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)

    def to_int(self) -> "Matrix":
        if not self.is_integral:
            raise ValueError("matrix has non-integer entries")
        return Matrix([[int(v) for v in r] for r in self.rows], self.ncols)

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def denominator_lcm(self) -> int:
        return lcm(*(Fraction(v).denominator for r in self.rows for v in r))

    # exact linear algebra over Q
    def rref(self) -> tuple["Matrix", list[int]]:
        a = [[Fraction(v) for v in r] for r in self.rows]
        m, n = self.nrows, self.ncols
        pivots: list[int] = []
        r = 0
        for c in range(n):
            p = next((i for i in range(r, m) if a[i][c] != 0), None)
            if p is None:
                continue
            a[r], a[p] = a[p], a[r]
            inv = 1 / a[r][c]
            a[r] = [v * inv for v in a[r]]
            for i in range(m):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == m:
                break
        return Matrix(a, n), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self):
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        a = [[Fraction(v) for v in r] for r in self.rows]
        det = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c] != 0), None)
            if p is None:
                return 0
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            det *= a[c][c]
            for i in range(c + 1, n):
                f = a[i][c] / a[c][c]
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return _entry(det)

    def inverse(self) -> "Matrix":
        n = self.nrows
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        aug = Matrix([list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)], 2 * n)
        red, piv = aug.rref()
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix([r[n:] for r in red.rows], n)


def _entry(v):
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    v = as_fraction(v)
    return v.numerator if v.denominator == 1 else v


def _dot(r, c):
    return _entry(sum((x * y for x, y in zip(r, c)), 0))


def kernel_basis(M: Matrix) -> Matrix:
    """Basis (as rows) of the right null space ``{v : M v = 0}``."""
    red, pivots = M.rref()
    n = M.ncols
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red.rows[i][f]
        basis.append(v)
    return Matrix(basis, n)


# --------------------------------------------------------------------------
# integer normal forms


def snf(M: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``U @ M @ V == S`` with unimodular ``U``, ``V``.

    Pivot: the smallest nonzero absolute value in the active block, ties broken
    by lowest (row, col).  Diagonal entries satisfy ``d_1 | d_2 | ...`` and are
    non-negative.
    """
    M = M.to_int()
    m, n = M.shape
    a = [list(r) for r in M.rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):  # row dst += f * row src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, f):  # col dst += f * col src
        for r in a:
            r[dst] += f * r[src]
        for r in V:
            r[dst] += f * r[src]

    for k in range(min(m, n)):
        while True:
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    v = abs(a[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(k, pi)
            swap_cols(k, pj)
            p = a[k][k]
            dirty = False
            for i in range(k + 1, m):
                q = a[i][k] // p
                if q:
                    add_row(i, k, -q)
                dirty |= a[i][k] != 0
            for j in range(k + 1, n):
                q = a[k][j] // p
                if q:
                    add_col(j, k, -q)
                dirty |= a[k][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(k + 1, m) for j in range(k + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(k, bad, 1)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            U[k] = [-x for x in U[k]]
    return Matrix(U, m), Matrix(a, n), Matrix(V, n)


def hnf(M: Matrix) -> Matrix:
    """Row-style Hermite normal form with zero rows dropped.

    Rows are in echelon form with positive pivots; entries above each pivot lie
    in ``[0, pivot)``.  The Z-row space is preserved.
    """
    M = M.to_int()
    a = [list(r) for r in M.rows]
    m, n = M.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(a[i][c]), i))
            a[r], a[p] = a[p], a[r]
            done = True
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    done &= a[i][c] == 0
            if done:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
    return Matrix([row for row in a[:r] if any(row)], n)
