"""Rank-one local modules ``A(x)`` and the coefficient identities of their fusion maps.

``A(x)`` has the symbolic basis ``e^x_y`` (``y`` in the lattice) and is never
materialised.  Its structure maps are scalars:

* algebra action  ``e_u e^x_y = alpha(u, y) e^x_{u+y}``
* fusion map      ``phi_{x,y}(e^x_u (x) e^y_v) = alpha(u, v) e^{-i pi (x, v)} e^{x+y}_{u+v}``
* trivialisation  ``psi_x(e^x_u) = alpha(u, x) e_{x+u}`` for ``x`` in the lattice

Dual vectors ``x, y, z`` are given in lattice coordinates.  Every pairing of a
dual vector with a lattice vector is an integer, so ``e^{+i pi (x, v)}`` and
``e^{-i pi (x, v)}`` agree; the sweeps evaluate exactly the sign used in each
diagram and compare.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from .algebra import TwoCocycle, _as_lattice_vector, build_alpha, cocycle_defect
from .errors import DomainError
from .exact import UnitScalar, lcm
from .lattice import EvenLattice, discriminant_group, make_section
from .report import SweepReport, Window, bilinear, default_window, sweep
from .space import grading_group

__all__ = [
    "PointModule",
    "WeightModule",
    "is_local",
    "phi_coefficient",
    "psi_coefficient",
    "verify_phi_balance",
    "verify_phi_associativity",
    "verify_phi_braiding",
    "phi_balance_sweep",
    "phi_associativity_sweep",
    "phi_braiding_sweep",
    "verify_psi_linearity",
    "verify_psi_square",
    "verify_fusion",
    "tensor_weight_decomposition",
    "locmod_suite",
]


class PointModule:
    """The module ``A(x)`` for an ambient vector ``x``."""

    def __init__(self, lattice: EvenLattice, x: Sequence):
        self.lattice = lattice
        self.x = tuple(Fraction(t) for t in x)
        self.coords = lattice.from_ambient(self.x)

    def weight(self, y: Sequence[int]) -> tuple[Fraction, ...]:
        """Ambient weight ``x + y`` of the basis vector ``e^x_y``."""
        return tuple(a + b for a, b in zip(self.x, self.lattice.to_ambient(y)))

    def eigenvalue(self, z: Sequence, y: Sequence[int]) -> Fraction:
        """Eigenvalue of the ambient vector ``z`` on ``e^x_y``."""
        return self.lattice.space.pair(z, self.weight(y))

    def act(self, alpha: TwoCocycle, u, y) -> tuple[UnitScalar, tuple[int, ...]]:
        """``e_u e^x_y`` as (coefficient, new index)."""
        return alpha.value(u, y), tuple(a + b for a, b in zip(u, y))

    @property
    def is_local(self) -> bool:
        return self.lattice.is_dual_vector(self.coords)


def is_local(L: EvenLattice, x: Sequence) -> bool:
    """Whether ``A(x)`` is local, i.e. ``(u, x + y)`` is an integer for all lattice ``u, y``.

    ``x`` is in ambient coordinates.  Since the lattice is even this is the
    condition that ``x`` lies in the dual lattice.
    """
    return PointModule(L, x).is_local


def _require_dual(L: EvenLattice, *xs):
    for x in xs:
        if not L.is_dual_vector(x):
            raise DomainError(f"{tuple(x)} is not in the dual lattice")


def phi_coefficient(L: EvenLattice, alpha: TwoCocycle, x, y, u, v, sign: int = -1) -> UnitScalar:
    """Coefficient ``alpha(u, v) e^{sign i pi (x, v)}`` of the fusion map ``phi_{x,y}``."""
    _require_dual(L, x, y)
    u, v = _as_lattice_vector(u), _as_lattice_vector(v)
    return alpha.value(u, v) * UnitScalar.phase(sign * L.pair(x, v))


def psi_coefficient(L: EvenLattice, alpha: TwoCocycle, x, u) -> UnitScalar:
    """Coefficient ``alpha(u, x)`` of ``psi_x: A(x) -> A`` on ``e^x_u``."""
    try:
        x = _as_lattice_vector(x)
    except DomainError:
        raise DomainError(f"psi_x needs x in the lattice, got {tuple(x)}") from None
    return alpha.value(_as_lattice_vector(u), x)


# --------------------------------------------------------------------------
# vectorised exponents; every value is e^{i pi k / den} with den = D^2


class _Scaled:
    """Dual vectors scaled by a common ``D`` so that pairings become integer numerators.

    Each dual argument is a ``(cases, rank)`` array; case-dependent terms come
    out as ``(m, cases)`` and case-independent ones as ``(m, 1)``.
    """

    def __init__(self, L: EvenLattice, alpha: TwoCocycle, cases: Sequence[Sequence]):
        self.L = L
        self.alpha = alpha
        self.D = lcm(*(Fraction(t).denominator for case in cases for v in case for t in v))
        self.den = self.D**2
        arity = len(cases[0])
        self.vecs = [
            np.array([[int(Fraction(t) * self.D) for t in case[i]] for case in cases], dtype=np.int64)
            .reshape(len(cases), L.rank)
            for i in range(arity)
        ]
        self.G = L.gram_array

    def pair_dual_lattice(self, NX, V):
        # (x, v) with x dual (scaled) and v in the lattice
        return self.D * ((V @ self.G) @ NX.T)

    def pair_lattice(self, U, V):
        return self.den * bilinear(U, self.G, V)[:, None]

    def pair_dual(self, NX, NY):
        return np.einsum("ki,ki->k", NX @ self.G, NY)

    def alpha_exp(self, U, V):
        return self.den * self.alpha.parity(U, V)[:, None]

    def phi_exp(self, NX, U, V, sign=-1):
        return self.alpha_exp(U, V) + sign * self.pair_dual_lattice(NX, V)

    def braid_exp(self, NX, U, NY, V):
        # (x + u, y + v)
        return (
            self.pair_dual(NX, NY)
            + self.pair_dual_lattice(NX, V)
            + self.pair_dual_lattice(NY, U)
            + self.pair_lattice(U, V)
        )


def _window(L, window, arity):
    if window is None:
        return default_window(L.rank, arity)
    if isinstance(window, int):
        return Window.box(L.rank, window)
    return window


def _fmt(x):
    return [str(Fraction(t)) for t in x]


def _cases(L: EvenLattice, cases, labels: str) -> tuple[list, dict]:
    cases = [tuple(tuple(Fraction(t) for t in v) for v in case) for case in cases]
    for case in cases:
        _require_dual(L, *case)
    if len(cases) == 1:
        params = {k: _fmt(v) for k, v in zip(labels, cases[0])}
    else:
        params = {"cases": len(cases)}
    return cases, params


def _case_label(case, labels: str) -> dict:
    return {k: _fmt(v) for k, v in zip(labels, case)}


def _add(a, b):
    return tuple(p + q for p, q in zip(a, b))


def phi_balance_sweep(L: EvenLattice, cases, window=None, alpha: TwoCocycle | None = None) -> SweepReport:
    """:func:`verify_phi_balance` for every ``(x, y)`` in ``cases`` in one pass over the window."""
    alpha = alpha or build_alpha(L)
    cases, params = _cases(L, cases, "xy")
    S = _Scaled(L, alpha, cases)
    NX, _ = S.vecs
    W = _window(L, window, 3)

    def sides(U, V, Wv):
        lhs = S.alpha_exp(Wv, U) + S.phi_exp(NX, Wv + U, V)
        rhs = S.pair_dual_lattice(NX, Wv) + S.pair_lattice(Wv, U) + S.alpha_exp(Wv, V) + S.phi_exp(NX, U, Wv + V)
        return lhs, rhs

    def witness(k, u, v, w):
        x, y = cases[k]
        lhs = alpha.value(w, u) * phi_coefficient(L, alpha, x, y, _add(w, u), v)
        rhs = (
            UnitScalar.phase(L.pair(w, x) + L.pair(w, u))
            * alpha.value(w, v)
            * phi_coefficient(L, alpha, x, y, u, _add(w, v))
        )
        return {**_case_label(cases[k], "xy"), "u": list(u), "v": list(v), "w": list(w),
                "lhs": lhs.to_json(), "rhs": rhs.to_json()}

    return sweep("phi_balance", W, 3, sides, S.den, witness, params=params, cases=len(cases))


def verify_phi_balance(L: EvenLattice, x, y, window=None, alpha: TwoCocycle | None = None) -> SweepReport:
    """``phi(e_w e^x_u (x) e^y_v) = phi(e^{i pi (w, x+u)} e^x_u (x) e_w e^y_v)`` for all u, v, w."""
    return phi_balance_sweep(L, [(x, y)], window, alpha)


def phi_associativity_sweep(L: EvenLattice, cases, window=None, alpha: TwoCocycle | None = None) -> SweepReport:
    """:func:`verify_phi_associativity` for every ``(x, y, z)`` in ``cases`` in one pass over the window."""
    alpha = alpha or build_alpha(L)
    cases, params = _cases(L, cases, "xyz")
    S = _Scaled(L, alpha, cases)
    NX, NY, _ = S.vecs
    W = _window(L, window, 3)

    def sides(U, V, Wv):
        top_right = S.phi_exp(NX, U, V) + S.phi_exp(NX + NY, U + V, Wv)
        left_bottom = S.phi_exp(NY, V, Wv, sign=+1) + S.phi_exp(NX, U, V + Wv, sign=+1)
        return top_right, left_bottom

    def witness(k, u, v, w):
        x, y, z = cases[k]
        tr = phi_coefficient(L, alpha, x, y, u, v) * phi_coefficient(L, alpha, _add(x, y), z, _add(u, v), w)
        lb = (phi_coefficient(L, alpha, y, z, v, w, sign=+1)
              * phi_coefficient(L, alpha, x, _add(y, z), u, _add(v, w), sign=+1))
        return {**_case_label(cases[k], "xyz"), "u": list(u), "v": list(v), "w": list(w),
                "top_right": tr.to_json(), "left_bottom": lb.to_json()}

    return sweep("phi_associativity", W, 3, sides, S.den, witness, params=params, cases=len(cases))


def verify_phi_associativity(
    L: EvenLattice, x, y, z, window=None, alpha: TwoCocycle | None = None
) -> SweepReport:
    """Top-right ``alpha(u,v) alpha(u+v,w) e^{-i pi ((x,v)+(x+y,w))}`` against
    left-bottom ``alpha(v,w) alpha(u,v+w) e^{+i pi ((y,w)+(x,v+w))}``."""
    return phi_associativity_sweep(L, [(x, y, z)], window, alpha)


def phi_braiding_sweep(L: EvenLattice, cases, window=None, alpha: TwoCocycle | None = None) -> SweepReport:
    """:func:`verify_phi_braiding` for every ``(x, y)`` in ``cases`` in one pass over the window."""
    alpha = alpha or build_alpha(L)
    cases, params = _cases(L, cases, "xy")
    S = _Scaled(L, alpha, cases)
    NX, NY = S.vecs
    W = _window(L, window, 2)

    def sides(U, V):
        top_right = S.phi_exp(NX, U, V, sign=+1) + S.pair_dual(NX, NY)
        left_bottom = S.braid_exp(NX, U, NY, V) + S.phi_exp(NY, V, U, sign=+1)
        return top_right, left_bottom

    def witness(k, u, v):
        x, y = cases[k]
        tr = phi_coefficient(L, alpha, x, y, u, v, sign=+1) * UnitScalar.phase(L.pair(x, y))
        lb = UnitScalar.phase(L.pair(_add(x, u), _add(y, v))) * phi_coefficient(L, alpha, y, x, v, u, sign=+1)
        return {**_case_label(cases[k], "xy"), "u": list(u), "v": list(v),
                "top_right": tr.to_json(), "left_bottom": lb.to_json()}

    return sweep("phi_braiding", W, 2, sides, S.den, witness, params=params, cases=len(cases))


def verify_phi_braiding(L: EvenLattice, x, y, window=None, alpha: TwoCocycle | None = None) -> SweepReport:
    """Braided-functor square for ``phi``.

    Top-right: ``phi_{x,y}`` then ``c(x, y) = e^{i pi (x, y)}``.  Left-bottom: the
    braiding ``e^{i pi (x+u, y+v)}`` swapping the factors, then ``phi_{y,x}`` on
    ``e^y_v (x) e^x_u``, whose coefficient is ``alpha(v, u) e^{i pi (y, u)}``.
    """
    return phi_braiding_sweep(L, [(x, y)], window, alpha)


def verify_psi_linearity(L: EvenLattice, window=None, alpha: TwoCocycle | None = None) -> SweepReport:
    """``psi_x(e_v e^x_u) = e_v psi_x(e^x_u)``: ``alpha(v,u) alpha(v+u,x) = alpha(u,x) alpha(v,u+x)``."""
    alpha = alpha or build_alpha(L)
    W = _window(L, window, 3)

    def sides(X, U, V):
        lhs = alpha.parity(V, U) + alpha.parity(V + U, X)
        rhs = alpha.parity(U, X) + alpha.parity(V, U + X)
        return lhs, rhs

    def witness(x, u, v):
        lhs = alpha.value(v, u) * psi_coefficient(L, alpha, x, tuple(a + b for a, b in zip(v, u)))
        rhs = alpha.value(v, tuple(a + b for a, b in zip(u, x))) * psi_coefficient(L, alpha, x, u)
        return {"x": list(x), "u": list(u), "v": list(v), "lhs": lhs.to_json(), "rhs": rhs.to_json()}

    return sweep("psi_linearity", W, 3, sides, 1, witness)


def _defect_parity(alpha, X, Y, Z):
    return alpha.parity(X, Y) + alpha.parity(X + Y, Z) + alpha.parity(Y, Z) + alpha.parity(X, Y + Z)


def verify_psi_square(
    L: EvenLattice, window=None, alpha: TwoCocycle | None = None, expanded: bool = False
) -> SweepReport:
    """The square ``psi_{x+y} phi_{x,y}`` vs ``mu (psi_x psi_y)`` commutes up to ``alpha(x, y)``.

    With ``expanded`` the coefficient ratio is instead compared with
    ``alpha(x,y) e^{i pi ((v,y)+(x+y,v)+(x,v))} d(u,x,y+v) d(x,y,v)^-1 d(u,v,x+y)^-1``.
    """
    alpha = alpha or build_alpha(L)
    W = _window(L, window, 4)
    G = L.gram_array

    def pair(A, B):
        return bilinear(A, G, B)

    def sides(X, Y, U, V):
        top_right = alpha.parity(U, V) + pair(X, V) + alpha.parity(U + V, X + Y)
        left_bottom = alpha.parity(U, X) + alpha.parity(V, Y) + alpha.parity(X + U, Y + V)
        if expanded:
            target = (
                alpha.parity(X, Y)
                + pair(V, Y) + pair(X + Y, V) + pair(X, V)
                + _defect_parity(alpha, U, X, Y + V)
                + _defect_parity(alpha, X, Y, V)
                + _defect_parity(alpha, U, V, X + Y)
            )
        else:
            target = alpha.parity(X, Y)
        return left_bottom, top_right + target

    def witness(x, y, u, v):
        tr = (
            alpha.value(u, v)
            * UnitScalar.phase(L.pair(x, v))
            * psi_coefficient(L, alpha, _add(x, y), _add(u, v))
        )
        lb = psi_coefficient(L, alpha, x, u) * psi_coefficient(L, alpha, y, v) * alpha.value(_add(x, u), _add(y, v))
        out = {
            "x": list(x), "y": list(y), "u": list(u), "v": list(v),
            "ratio": (lb / tr).to_json(), "alpha_xy": alpha.value(x, y).to_json(),
        }
        if expanded:
            expected = (
                alpha.value(x, y)
                * UnitScalar.phase(L.pair(v, y) + L.pair(_add(x, y), v) + L.pair(x, v))
                * cocycle_defect(alpha, u, x, _add(y, v))
                * cocycle_defect(alpha, x, y, v)
                * cocycle_defect(alpha, u, v, _add(x, y))
            )
            out["expected"] = expected.to_json()
        return out

    name = "psi_square_expanded" if expanded else "psi_square"
    return sweep(name, W, 4, sides, 1, witness)


def verify_fusion(L: EvenLattice) -> SweepReport:
    """Target coset of ``phi_{x,y}`` is the sum of the cosets, for all pairs of simple representatives.

    The coset of ``x + y`` is computed twice and compared: by the discriminant
    group normal form and by the grading group ``l#/(l + l^perp)``.
    """
    D = discriminant_group(L)
    sec = make_section(L, D)
    gg = grading_group(L.sub)
    report = SweepReport(name="fusion", checked=0, params={"order": D.order})
    for X, Y in product(list(D.elements()), repeat=2):
        x, y = sec(X), sec(Y)
        xy = tuple(a + b for a, b in zip(x, y))
        expected = D.add(X, Y)
        via_disc = D.normal_form(xy)
        via_grading, free = gg.classify(L.gram.vecmul(xy))
        cx, _ = gg.classify(L.gram.vecmul(x))
        cy, _ = gg.classify(L.gram.vecmul(y))
        summed = tuple((a + b) % d for a, b, d in zip(cx, cy, gg.invariant_factors))
        report.checked += 1
        if via_disc != tuple(expected) or via_grading != summed or free:
            report.n_failures += 1
            if len(report.failures) < 5:
                report.failures.append({"X": list(X), "Y": list(Y), "target": list(via_disc)})
    return report


class WeightModule:
    """Finite-dimensional weight module: distinct weights with scalar multiplicities."""

    def __init__(self, weights: Mapping | Sequence = ()):
        items = weights.items() if isinstance(weights, Mapping) else weights
        acc: dict[tuple, UnitScalar] = {}
        for w, c in items:
            w = tuple(Fraction(t) for t in w)
            c = c if isinstance(c, UnitScalar) else UnitScalar.rational(c)
            acc[w] = acc.get(w, UnitScalar.zero()) + c
        self.weights = {w: c for w, c in sorted(acc.items()) if not c.is_zero}

    @property
    def support(self) -> set:
        return set(self.weights)

    def __eq__(self, other):
        return isinstance(other, WeightModule) and self.weights == other.weights

    def __repr__(self):
        return f"WeightModule({self.weights})"


def tensor_weight_decomposition(V: WeightModule, U: WeightModule) -> WeightModule:
    """``(V (x) U)_x = sum over y + z = x of V_y (x) U_z``."""
    terms = []
    for y, cy in V.weights.items():
        for z, cz in U.weights.items():
            terms.append((tuple(a + b for a, b in zip(y, z)), cy * cz))
    return WeightModule(terms)


def locmod_suite(L: EvenLattice, window=None, alpha: TwoCocycle | None = None) -> list[SweepReport]:
    """Every diagram for every coset representative (pairs / triples of cosets)."""
    alpha = alpha or build_alpha(L)
    reps = make_section(L).values
    pairs, triples = list(product(reps, repeat=2)), list(product(reps, repeat=3))
    return [
        phi_balance_sweep(L, pairs, window, alpha),
        phi_associativity_sweep(L, triples, window, alpha),
        phi_braiding_sweep(L, pairs, window, alpha),
        verify_psi_linearity(L, window, alpha),
        verify_psi_square(L, window, alpha),
        verify_psi_square(L, window, alpha, expanded=True),
        verify_fusion(L),
    ]
