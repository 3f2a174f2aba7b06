"""Braided structures on categories of graded vector spaces over a finite abelian group.

An abelian 3-cocycle ``(a, c)`` is stored by vectorised exponent functions:
``a(I, J, K)`` and ``c(I, J)`` take arrays of element *indices* and return
integer numerators ``k`` of ``e^{i pi k / den}``.  Pentagon and hexagon sweeps
are exact integer comparisons mod ``2 den``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

import numpy as np

from .algebra import TwoCocycle, build_alpha
from .errors import DomainError, NonUnitDiagonal, ReductionMismatch
from .exact import Phase, UnitScalar, lcm
from .groups import FiniteAbelianGroup
from .lattice import DiscriminantForm, EvenLattice, Section, make_section
from .locmod import phi_coefficient, psi_coefficient
from .report import MAX_WITNESSES, SweepReport, Window, bilinear, default_window, sweep

__all__ = [
    "FiniteAbelianGroup",
    "AbelianThreeCocycle",
    "ReducedFunctor",
    "QuadraticFunction",
    "pentagon_defect",
    "hexagon_defects",
    "verify_pentagon",
    "verify_hexagons",
    "quadratic_of",
    "is_quadratic",
    "reduce_functor",
    "associator_by_composition",
    "braiding_by_composition",
    "verify_reduction_routes",
    "alpha_from_functor",
    "lattice_braiding",
    "double_braiding",
    "is_transparent",
    "verify_transparency",
    "verify_section_independence",
    "enumeration_cap",
    "discat_suite",
    "PENTAGON_EXHAUSTIVE_MAX",
    "HEXAGON_EXHAUSTIVE_MAX",
    "SAMPLES",
]

# |D| thresholds for exhaustive sweeps; larger groups are sampled
PENTAGON_EXHAUSTIVE_MAX = 30
HEXAGON_EXHAUSTIVE_MAX = 100
SAMPLES = 200_000
DEFAULT_CAP = 10_000
_CHUNK = 1 << 17

ExpFn = Callable[..., np.ndarray]


def enumeration_cap() -> int:
    """Largest ``|D|`` that is enumerated; ``LATKIT_CAP`` overrides the default 10000."""
    raw = os.environ.get("LATKIT_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _to_phase(z) -> Phase:
    if isinstance(z, Phase):
        return z
    if isinstance(z, UnitScalar):
        if not z.is_unit_monomial:
            raise NonUnitDiagonal(f"{z!r} is not a unit monomial")
        return z.as_phase()
    if z in (1, -1):
        return Phase(0 if z == 1 else 1)
    raise NonUnitDiagonal(f"{z!r} is not a unit monomial")


class AbelianThreeCocycle:
    """Associator ``a`` and braiding ``c`` on ``G(D)`` as exponent functions over ``den``."""

    def __init__(self, group: FiniteAbelianGroup, a: ExpFn, c: ExpFn, den: int):
        self.group = group
        self._a = a
        self._c = c
        self.den = int(den)

    @classmethod
    def from_tables(cls, group: FiniteAbelianGroup, a_table, c_table) -> "AbelianThreeCocycle":
        """``a_table[i][j][k]`` and ``c_table[i][j]`` are phases indexed by element index."""
        n = group.order
        a_ph = [[[_to_phase(a_table[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]
        c_ph = [[_to_phase(c_table[i][j]) for j in range(n)] for i in range(n)]
        den = lcm(*(p.t.denominator for row in c_ph for p in row),
                  *(p.t.denominator for m in a_ph for row in m for p in row))
        A = np.array([[[int(p.t * den) for p in row] for row in m] for m in a_ph], dtype=np.int64)
        C = np.array([[int(p.t * den) for p in row] for row in c_ph], dtype=np.int64)
        return cls(group, lambda I, J, K: A[I, J, K], lambda I, J: C[I, J], den)

    @classmethod
    def from_scalars(cls, group: FiniteAbelianGroup, a: Callable, c: Callable) -> "AbelianThreeCocycle":
        """Tabulate python functions of element tuples (small groups only)."""
        els = [group.element(i) for i in range(group.order)]
        a_table = [[[a(f, g, h) for h in els] for g in els] for f in els]
        c_table = [[c(f, g) for g in els] for f in els]
        return cls.from_tables(group, a_table, c_table)

    def a_exp(self, I, J, K) -> np.ndarray:
        return np.asarray(self._a(I, J, K), dtype=np.int64)

    def c_exp(self, I, J) -> np.ndarray:
        return np.asarray(self._c(I, J), dtype=np.int64)

    def _phase(self, k) -> Phase:
        return Phase(Fraction(int(k), self.den))

    def a(self, f, g, h) -> Phase:
        G = self.group
        return self._phase(self.a_exp(np.array([G.index(f)]), np.array([G.index(g)]), np.array([G.index(h)]))[0])

    def c(self, f, g) -> Phase:
        G = self.group
        return self._phase(self.c_exp(np.array([G.index(f)]), np.array([G.index(g)]))[0])

    def a_table(self) -> list:
        n = self.group.order
        I, J, K = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
        T = self.a_exp(I, J, K) % (2 * self.den)
        return [[[self._phase(v) for v in row] for row in m] for m in T]

    def c_table(self) -> list:
        n = self.group.order
        I, J = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        T = self.c_exp(I, J) % (2 * self.den)
        return [[self._phase(v) for v in row] for row in T]


# --------------------------------------------------------------------------
# defects


def _pentagon_sides(A: AbelianThreeCocycle, F, G_, H, K):
    add = A.group.add_idx
    lhs = A.a_exp(G_, H, K) + A.a_exp(F, add(G_, H), K) + A.a_exp(F, G_, H)
    rhs = A.a_exp(add(F, G_), H, K) + A.a_exp(F, G_, add(H, K))
    return lhs, rhs


def _hexagon_sides(A: AbelianThreeCocycle, F, G_, H):
    add = A.group.add_idx
    l1 = A.a_exp(G_, H, F) + A.c_exp(F, add(G_, H)) + A.a_exp(F, G_, H)
    r1 = A.c_exp(F, H) + A.a_exp(G_, F, H) + A.c_exp(F, G_)
    l2 = -A.a_exp(H, F, G_) + A.c_exp(add(F, G_), H) - A.a_exp(F, G_, H)
    r2 = A.c_exp(F, H) - A.a_exp(F, H, G_) + A.c_exp(G_, H)
    return (l1, r1), (l2, r2)


def _idx(A, *els):
    return [np.array([A.group.index(e)]) for e in els]


def pentagon_defect(A: AbelianThreeCocycle, f, g, h, k) -> Phase:
    """``a(g,h,k) a(f,g+h,k) a(f,g,h) / (a(f+g,h,k) a(f,g,h+k))``."""
    lhs, rhs = _pentagon_sides(A, *_idx(A, f, g, h, k))
    return A._phase(lhs[0] - rhs[0])


def hexagon_defects(A: AbelianThreeCocycle, f, g, h) -> tuple[Phase, Phase]:
    """Left/right ratios of the two hexagon equations (both 1 for an abelian 3-cocycle)."""
    (l1, r1), (l2, r2) = _hexagon_sides(A, *_idx(A, f, g, h))
    return A._phase(l1[0] - r1[0]), A._phase(l2[0] - r2[0])


def _index_tuples(n: int, arity: int, exhaustive: bool, samples: int, seed: int):
    if exhaustive:
        total = n**arity
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
            parts = []
            for _ in range(arity):
                idx, r = np.divmod(idx, n)
                parts.append(r)
            yield parts[::-1]
    else:
        rng = np.random.default_rng(seed)
        left = samples
        while left > 0:
            m = min(left, _CHUNK)
            yield [rng.integers(n, size=m) for _ in range(arity)]
            left -= m


def _index_sweep(name, A, arity, sides_list, exhaustive, samples, seed, labels) -> list[SweepReport]:
    G = A.group
    mod = 2 * A.den
    mode = {"mode": "exhaustive"} if exhaustive else {"mode": "sampled", "samples": samples, "seed": seed}
    reports = [SweepReport(name=lab, checked=0, params={"order": G.order, **mode}) for lab in labels]
    for args in _index_tuples(G.order, arity, exhaustive, samples, seed):
        for rep, (lhs, rhs) in zip(reports, sides_list(*args)):
            diff = (lhs - rhs) % mod
            bad = np.nonzero(diff)[0]
            rep.checked += len(args[0])
            rep.n_failures += len(bad)
            for k in bad[: MAX_WITNESSES - len(rep.failures)]:
                rep.failures.append({
                    "elements": [list(G.element(int(a[k]))) for a in args],
                    "defect": str(Fraction(int(diff[k]), A.den)),
                })
    return reports


def verify_pentagon(A: AbelianThreeCocycle, seed: int = 0, samples: int = SAMPLES,
                    exhaustive_max: int = PENTAGON_EXHAUSTIVE_MAX) -> SweepReport:
    """Pentagon on all ``|D|^4`` tuples for ``|D| <= exhaustive_max``, else seeded sampling."""
    exhaustive = A.group.order <= exhaustive_max
    return _index_sweep("pentagon", A, 4, lambda *a: [_pentagon_sides(A, *a)], exhaustive, samples, seed,
                        ["pentagon"])[0]


def verify_hexagons(A: AbelianThreeCocycle, seed: int = 0, samples: int = SAMPLES,
                    exhaustive_max: int = HEXAGON_EXHAUSTIVE_MAX) -> list[SweepReport]:
    exhaustive = A.group.order <= exhaustive_max
    return _index_sweep("hexagon", A, 3, lambda *a: list(_hexagon_sides(A, *a)), exhaustive, samples, seed,
                        ["hexagon_1", "hexagon_2"])


# --------------------------------------------------------------------------
# quadratic functions


class QuadraticFunction:
    """A function ``D -> phases`` stored in index order."""

    def __init__(self, group: FiniteAbelianGroup, values: Sequence[Phase]):
        self.group = group
        self.values = tuple(_to_phase(v) for v in values)

    def __call__(self, f) -> Phase:
        return self.values[self.group.index(f)]

    def sigma(self, f, g) -> Phase:
        """Polarisation ``q(f+g) q(f)^-1 q(g)^-1``."""
        return self(self.group.add(f, g)) / self(f) / self(g)

    def is_quadratic(self) -> bool:
        """``q(-f) = q(f)`` and ``sigma`` biadditive on all of ``D``."""
        G = self.group
        els = list(G.elements())
        if self(G.zero) != Phase(0):
            return False
        if any(self(G.neg(f)) != self(f) for f in els):
            return False
        sig = {(f, g): self.sigma(f, g) for f in els for g in els}
        for f, g, h in product(els, repeat=3):
            if sig[(G.add(f, g), h)] != sig[(f, h)] * sig[(g, h)]:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, QuadraticFunction) and self.values == other.values

    def __repr__(self):
        return f"QuadraticFunction({[str(p.t) for p in self.values]})"


def quadratic_of(c, group: FiniteAbelianGroup | None = None) -> QuadraticFunction:
    """``q(f) = c(f, f)`` from an :class:`AbelianThreeCocycle` or a scalar function ``c(f, g)``."""
    if isinstance(c, AbelianThreeCocycle):
        group = c.group
        fn = c.c
    else:
        if group is None:
            raise TypeError("a group is required for a plain braiding function")
        fn = c
    return QuadraticFunction(group, [fn(f, f) for f in group.elements()])


def is_quadratic(q: QuadraticFunction) -> bool:
    return q.is_quadratic()


# --------------------------------------------------------------------------
# reduction of the lattice functor


class ReducedFunctor(AbelianThreeCocycle):
    """The pair ``(a, c_bar)`` on ``l#/l`` induced by a section ``s``.

    ``c_bar(X, Y) = e^{i pi (sX, sY)}`` and, with ``theta`` the section cocycle,

    ``a(X,Y,Z) = c(sX, theta(Y,Z))^-1 alpha(theta(X,Y+Z), theta(Y,Z)) alpha(theta(X+Y,Z), last)^-1``

    where ``last = theta(X, Y)`` for ``associator="theta_xy"`` (the value obtained by
    composing the structure maps, see :func:`associator_by_composition`) and
    ``last = theta(Y, Z)`` for ``associator="theta_yz"``, which is not coherent in general.  Both ``c`` factors are
    ``+-1`` because ``(sX, theta)`` is an integer, so its sign convention is
    immaterial.
    """

    ASSOCIATORS = ("theta_xy", "theta_yz")

    def __init__(self, L: EvenLattice, section: Section, alpha: TwoCocycle, associator: str = "theta_xy"):
        if associator not in self.ASSOCIATORS:
            raise ValueError(f"associator must be one of {self.ASSOCIATORS}")
        self.lattice = L
        self.section = section
        self.alpha = alpha
        self.associator = associator
        G = section.group
        e = section.denominator
        S = section.scaled
        A = L.gram_array
        self._e = e
        self._S = S

        def theta(I, J):
            T = S[G.add_idx(I, J)] - S[I] - S[J]
            return T // e

        def a(I, J, K):
            JK = G.add_idx(J, K)
            t_yz = theta(J, K)
            t_x_yz = theta(I, JK)
            t_xy_z = theta(G.add_idx(I, J), K)
            last = theta(I, J) if associator == "theta_xy" else t_yz
            pair = bilinear(S[I], A, t_yz)
            par = alpha.parity(t_x_yz, t_yz) + alpha.parity(t_xy_z, last)
            return -e * pair + e * e * par

        def c(I, J):
            return bilinear(S[I], A, S[J])

        super().__init__(G, a, c, e * e)
        self.theta = theta


def reduce_functor(
    L: EvenLattice,
    section: Section | None = None,
    alpha: TwoCocycle | None = None,
    associator: str = "theta_xy",
) -> ReducedFunctor:
    """Reduced ``(a, c_bar)`` on the discriminant group; checks ``c_bar(X, X) = q(X)``."""
    section = section or make_section(L)
    G = section.group
    if G.order > enumeration_cap():
        raise DomainError(f"|D| = {G.order} exceeds the enumeration cap {enumeration_cap()}")
    R = ReducedFunctor(L, section, alpha or build_alpha(L), associator)
    form = DiscriminantForm(L, section)
    I = np.arange(G.order)
    diag = R.c_exp(I, I) % (2 * R.den)
    for i, k in enumerate(diag):
        X = G.element(i)
        if R._phase(k) != form.q(X):
            raise ReductionMismatch(f"c_bar({X}, {X}) = {R._phase(k)} but q({X}) = {form.q(X)}")
    return R


def _plus(*vs):
    return tuple(sum(t) for t in zip(*vs))


def _fbar(L, alpha, sec, X, Y, w) -> tuple[UnitScalar, tuple]:
    """``Fbar_{X,Y}(e^{s(X+Y)}_w) = coeff * e^{sX}_{w'} (x) e^{sY}_0``; returns (coeff, w')."""
    sx, sy = sec(X), sec(Y)
    th = sec.theta(X, Y)
    sxy = _plus(sx, sy)
    zero = (0,) * L.rank
    # A(s(X+Y)) -> A(theta) (x) A(sX + sY), inverse of phi
    coeff = phi_coefficient(L, alpha, th, sxy, w, zero).inverse()
    # psi_theta (x) 1, then the unit isomorphism A (x) A(sX+sY) -> A(sX+sY)
    coeff = coeff * psi_coefficient(L, alpha, th, w)
    u = _plus(th, w)
    coeff = coeff * alpha.value(u, zero)
    # A(sX+sY) -> A(sX) (x) A(sY), inverse of phi
    coeff = coeff * phi_coefficient(L, alpha, sx, sy, u, zero).inverse()
    return coeff, u


def associator_by_composition(L, alpha, sec, X, Y, Z, w) -> UnitScalar:
    """``a(X,Y,Z)`` read off the associativity square by composing the structure maps on ``e_w``.

    Both paths land in ``A(sX) (x) A(sY) (x) A(sZ)``, compared after applying
    ``phi`` to reach ``A(sX + sY + sZ)``.
    """
    G = sec.group
    zero = (0,) * L.rank
    sx, sy, sz = sec(X), sec(Y), sec(Z)
    # top: Fbar_{X,Y+Z} then 1 (x) Fbar_{Y,Z}
    c1, u1 = _fbar(L, alpha, sec, X, G.add(Y, Z), w)
    c2, v2 = _fbar(L, alpha, sec, Y, Z, zero)
    top = c1 * c2
    top = top * phi_coefficient(L, alpha, sy, sz, v2, zero)
    top = top * phi_coefficient(L, alpha, sx, _plus(sy, sz), u1, v2)
    # bottom: Fbar_{X+Y,Z} then Fbar_{X,Y} (x) 1
    c3, u3 = _fbar(L, alpha, sec, G.add(X, Y), Z, w)
    c4, u4 = _fbar(L, alpha, sec, X, Y, u3)
    bottom = c3 * c4
    bottom = bottom * phi_coefficient(L, alpha, sx, sy, u4, zero)
    bottom = bottom * phi_coefficient(L, alpha, _plus(sx, sy), sz, u4, zero)
    assert _plus(u1, v2) == u4
    return top / bottom


def braiding_by_composition(L, alpha, sec, X, Y, w) -> UnitScalar:
    """``c_bar(X, Y)`` read off the braiding square, on ``e_w``."""
    zero = (0,) * L.rank
    sx, sy = sec(X), sec(Y)
    c1, u = _fbar(L, alpha, sec, X, Y, w)
    # braiding e^x_u (x) e^y_0 -> e^{i pi (x+u, y)} e^y_0 (x) e^x_u, then phi_{sY,sX}
    top = c1 * UnitScalar.phase(L.pair(_plus(sx, u), sy)) * phi_coefficient(L, alpha, sy, sx, zero, u)
    c2, u2 = _fbar(L, alpha, sec, Y, X, w)
    bottom = c2 * phi_coefficient(L, alpha, sy, sx, u2, zero)
    return top / bottom


def verify_reduction_routes(L: EvenLattice, R: ReducedFunctor, shifts: Sequence | None = None,
                            max_triples: int = 4096, seed: int = 0) -> SweepReport:
    """Closed-form ``(a, c_bar)`` against the values composed from the ``phi``/``psi`` maps."""
    G = R.group
    sec = R.section
    n = L.rank
    shifts = shifts if shifts is not None else [(0,) * n] + [tuple(v) for v in np.eye(n, dtype=int)[:2]]
    els = list(G.elements())
    triples = list(product(els, repeat=3))
    params = {"shifts": [list(map(int, s)) for s in shifts], "associator": R.associator}
    if len(triples) > max_triples:
        rng = np.random.default_rng(seed)
        pick = rng.choice(len(triples), size=max_triples, replace=False)
        triples = [triples[i] for i in sorted(pick)]
        params.update(mode="sampled", seed=seed)
    report = SweepReport(name="reduction_routes", checked=0, params=params)
    for w in shifts:
        w = tuple(int(t) for t in w)
        for X, Y, Z in triples:
            composed = associator_by_composition(L, R.alpha, sec, X, Y, Z, w)
            closed = R.a(X, Y, Z)
            report.checked += 1
            if composed != closed:
                report.n_failures += 1
                if len(report.failures) < MAX_WITNESSES:
                    report.failures.append({"X": list(X), "Y": list(Y), "Z": list(Z), "w": list(w),
                                            "composed": composed.to_json(), "closed": str(closed.t)})
        for X, Y in product(els, repeat=2):
            composed = braiding_by_composition(L, R.alpha, sec, X, Y, w)
            closed = R.c(X, Y)
            report.checked += 1
            if composed != closed:
                report.n_failures += 1
                if len(report.failures) < MAX_WITNESSES:
                    report.failures.append({"X": list(X), "Y": list(Y), "w": list(w),
                                            "composed": composed.to_json(), "closed": str(closed.t)})
    return report


# --------------------------------------------------------------------------
# alpha from the functor, transparency


def _win(L, window, arity):
    if window is None:
        return default_window(L.rank, arity)
    if isinstance(window, int):
        return Window.box(L.rank, window)
    return window


def alpha_from_functor(L: EvenLattice, window=None, alpha: TwoCocycle | None = None) -> list[SweepReport]:
    """Recover ``alpha(x, y)`` from ``psi_x psi_y phi^-1`` against ``psi_{x+y}`` and check it.

    On ``e^{x+y}_0`` the two paths give ``alpha(0,x) alpha(x,y)`` and
    ``alpha(0,x+y)``; the ratio is compared with ``alpha`` itself and with the
    skew condition ``ratio(x,y) ratio(y,x)^-1 = e^{i pi (x,y)}``.
    """
    alpha = alpha or build_alpha(L)
    W = _win(L, window, 2)
    G = L.gram_array
    zero = np.zeros(L.rank, dtype=np.int64)

    def extracted(X, Y):
        # psi_x (x) psi_y after phi^-1(e^{x+y}_0) = e^x_0 (x) e^y_0, multiplied in A
        path = alpha.parity(zero, X) + alpha.parity(zero, Y) + alpha.parity(X, Y)
        direct = alpha.parity(zero, X + Y)
        return path - direct

    def match(X, Y):
        return extracted(X, Y), alpha.parity(X, Y)

    def skew(X, Y):
        return extracted(X, Y) - extracted(Y, X), bilinear(X, G, Y)

    def scalar(x, y):
        zero_t = (0,) * L.rank
        path = psi_coefficient(L, alpha, x, zero_t) * psi_coefficient(L, alpha, y, zero_t) * alpha.value(x, y)
        return path / psi_coefficient(L, alpha, _plus(x, y), zero_t)

    def w_match(x, y):
        return {"x": list(x), "y": list(y), "extracted": scalar(x, y).to_json(),
                "alpha": alpha.value(x, y).to_json()}

    def w_skew(x, y):
        return {"x": list(x), "y": list(y), "ratio": (scalar(x, y) / scalar(y, x)).to_json(),
                "pairing": str(L.pair(x, y))}

    return [sweep("alpha_extraction", W, 2, match, 1, w_match),
            sweep("alpha_skew", W, 2, skew, 1, w_skew)]


def lattice_braiding(L: EvenLattice) -> Callable:
    """``c(x, y) = e^{i pi (x, y)}`` on lattice coordinates of ``l#``."""
    return lambda x, y: Phase(L.pair(x, y))


def double_braiding(c: Callable, f, g):
    return c(f, g) * c(g, f)


def is_transparent(c: Callable, f, g) -> bool:
    return double_braiding(c, f, g) == Phase(0)


def verify_transparency(L: EvenLattice, window=None) -> SweepReport:
    """Every simple representative is transparent against every lattice vector of the window."""
    W = _win(L, window, 1)
    reps = make_section(L).values
    D = lcm(*(Fraction(t).denominator for v in reps for t in v))
    den = D * D
    NX = np.array([[int(Fraction(t) * D) for t in v] for v in reps], dtype=np.int64).reshape(len(reps), L.rank)
    Gm = L.gram_array
    c = lattice_braiding(L)
    report = SweepReport(name="transparency", checked=0, window=W.describe(), params={"simples": len(reps)})
    for x, nx in zip(reps, NX):
        def sides(Y, nx=nx):
            return 2 * D * (Y @ Gm @ nx), np.zeros(len(Y), dtype=np.int64)

        def witness(y, x=x):
            return {"x": [str(t) for t in x], "y": list(y), "double_braiding": str(double_braiding(c, x, y).t)}

        r = sweep("transparency", W, 1, sides, den, witness)
        report.checked += r.checked
        report.n_failures += r.n_failures
        report.failures += r.failures[: MAX_WITNESSES - len(report.failures)]
    return report


def verify_section_independence(L: EvenLattice, trials: int = 100, seed: int = 0, radius: int = 3) -> SweepReport:
    """``q`` is unchanged under seeded random re-lifts of the section, both directly and via ``c_bar``."""
    base = make_section(L)
    q0 = [DiscriminantForm(L, base).q(X) for X in base.group.elements()]
    rng = np.random.default_rng(seed)
    report = SweepReport(name="section_independence", checked=0,
                         params={"trials": trials, "seed": seed, "radius": radius})
    els = list(base.group.elements())
    for t in range(trials):
        sec = base.perturbed(rng, radius)
        form = DiscriminantForm(L, sec)
        for X, q in zip(els, q0):
            report.checked += 1
            if form.q(X) != q:
                report.n_failures += 1
                if len(report.failures) < MAX_WITNESSES:
                    report.failures.append({"trial": t, "X": list(X), "q": str(form.q(X).t), "expected": str(q.t)})
    return report


def discat_suite(L: EvenLattice, seed: int = 0, alpha: TwoCocycle | None = None,
                 window=None, relifts: int = 3) -> tuple[list[SweepReport], ReducedFunctor]:
    """Coherence of the reduced functor, for the linear section and seeded re-lifts."""
    alpha = alpha or build_alpha(L)
    R = reduce_functor(L, alpha=alpha)
    reports = [verify_pentagon(R, seed=seed), *verify_hexagons(R, seed=seed)]
    q = quadratic_of(R)
    ok = q.is_quadratic()
    reports.append(SweepReport(name="quadratic", checked=len(q.values), n_failures=0 if ok else 1,
                               params={"sigma": "q(f+g) q(f)^-1 q(g)^-1"}))
    reports.append(verify_reduction_routes(L, R, seed=seed))
    rng = np.random.default_rng(seed)
    base = R.section
    for k in range(relifts):
        Rk = reduce_functor(L, base.perturbed(rng), alpha)
        for r in [verify_pentagon(Rk, seed=seed), *verify_hexagons(Rk, seed=seed)]:
            r.name = f"relift_{r.name}"
            r.params["relift"] = k
            reports.append(r)
    reports += alpha_from_functor(L, window, alpha)
    reports.append(verify_transparency(L, window))
    reports.append(verify_section_independence(L, seed=seed))
    return reports, R
