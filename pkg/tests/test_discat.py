from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latkit.algebra import build_alpha, mutate
from latkit.discat import (
    AbelianThreeCocycle,
    QuadraticFunction,
    alpha_from_functor,
    discat_suite,
    double_braiding,
    hexagon_defects,
    is_quadratic,
    is_transparent,
    lattice_braiding,
    pentagon_defect,
    quadratic_of,
    reduce_functor,
    verify_hexagons,
    verify_pentagon,
    verify_reduction_routes,
    verify_section_independence,
    verify_transparency,
)
from latkit.errors import DomainError, NonUnitDiagonal
from latkit.exact import Phase, UnitScalar
from latkit.groups import FiniteAbelianGroup
from latkit.lattice import DiscriminantForm, EvenLattice, make_section
from latkit.report import Window
from test_lattice import even_grams

CORPUS = ["A1", "A2", "A3", "D4", "E8", "hyperbolic plane", "2A1"]
# even lattices on which the theta_yz associator fails with the linear section
PRINTED_BREAKS = [[[2, 1, 1], [1, 2, 1], [1, 1, 4]], [[6, 3], [3, 6]]]


def coherent(R):
    reps = [verify_pentagon(R), *verify_hexagons(R)]
    return all(r.passed for r in reps)


def test_group_index_round_trip():
    G = FiniteAbelianGroup([2, 6, 1])
    assert G.factors == (2, 6) and G.order == 12
    for i in range(G.order):
        assert G.index(G.element(i)) == i
    I = np.arange(12)
    S = G.add_idx(I[:, None], I[None, :])
    for i in range(12):
        for j in range(12):
            assert G.element(int(S[i, j])) == G.add(G.element(i), G.element(j))


@pytest.mark.parametrize("name", CORPUS)
def test_reduced_functor_is_coherent(lattices, name):
    L = lattices[name]
    R = reduce_functor(L)
    n = R.group.order
    p = verify_pentagon(R)
    h1, h2 = verify_hexagons(R)
    assert p.passed and p.checked == n**4 and p.params["mode"] == "exhaustive"
    assert h1.passed and h2.passed and h1.checked == h2.checked == n**3
    form = DiscriminantForm(L, R.section)
    for X in R.group.elements():
        assert R.c(X, X) == form.q(X)


def test_a1_and_a2_counts(lattices):
    R = reduce_functor(lattices["A1"])
    assert verify_pentagon(R).checked == 16
    els = list(R.group.elements())
    assert all(pentagon_defect(R, f, g, h, k).is_one for f in els for g in els for h in els for k in els)
    R = reduce_functor(lattices["A2"])
    assert all(r.checked == 27 and r.passed for r in verify_hexagons(R))
    els = list(R.group.elements())
    assert all(d.is_one for f in els for g in els for h in els for d in hexagon_defects(R, f, g, h))


def test_normalisation(lattices):
    R = reduce_functor(lattices["D4"])
    G = R.group
    for f in G.elements():
        for g in G.elements():
            assert R.a(G.zero, f, g).is_one and R.a(f, G.zero, g).is_one and R.a(f, g, G.zero).is_one
        assert R.c(G.zero, f).is_one and R.c(f, G.zero).is_one
        assert hexagon_defects(R, G.zero, f, f) == (Phase(0), Phase(0))


def test_e8_is_trivial(lattices):
    R = reduce_functor(lattices["E8"])
    assert R.group.order == 1
    assert R.a((), (), ()).is_one and R.c((), ()).is_one


@pytest.mark.parametrize("name", ["A2", "A3", "D4", "2A1"])
def test_relifted_sections_stay_coherent(lattices, name):
    L = lattices[name]
    base = make_section(L)
    rng = np.random.default_rng(11)
    for _ in range(5):
        assert coherent(reduce_functor(L, base.perturbed(rng)))


@settings(max_examples=15)
@given(even_grams(max_rank=3, max_det=30), st.integers(0, 2**16))
def test_random_lattices_coherent_and_quadratic(gram, seed):
    L = EvenLattice.from_gram(gram)
    sec = make_section(L).perturbed(np.random.default_rng(seed))
    R = reduce_functor(L, sec)
    assert coherent(R)
    assert is_quadratic(quadratic_of(R))
    assert verify_reduction_routes(L, R, max_triples=200, seed=seed).passed


@pytest.mark.parametrize("gram", PRINTED_BREAKS)
def test_theta_yz_associator_fails_where_theta_xy_holds(gram):
    L = EvenLattice.from_gram(gram)
    assert coherent(reduce_functor(L))
    other = reduce_functor(L, associator="theta_yz")
    assert not coherent(other)
    routes = verify_reduction_routes(L, other, max_triples=300)
    assert not routes.passed and routes.params["associator"] == "theta_yz"


def test_theta_yz_associator_fails_on_relifted_a2(lattices):
    L = lattices["A2"]
    base = make_section(L)
    rng = np.random.default_rng(0)
    outcomes = [coherent(reduce_functor(L, base.perturbed(rng), associator="theta_yz")) for _ in range(20)]
    assert not all(outcomes)


def test_unknown_associator_rejected(lattices):
    with pytest.raises(ValueError):
        reduce_functor(lattices["A1"], associator="other")


def test_composition_routes_match_closed_form(lattices):
    for name in ("A1", "A2", "A3", "D4"):
        L = lattices[name]
        R = reduce_functor(L)
        r = verify_reduction_routes(L, R)
        assert r.passed and r.checked > 0


def test_enumeration_cap(lattices, monkeypatch):
    monkeypatch.setenv("LATKIT_CAP", "2")
    with pytest.raises(DomainError):
        reduce_functor(lattices["A2"])
    reduce_functor(lattices["A1"])


def test_quadratic_of_a1(lattices):
    R = reduce_functor(lattices["A1"])
    q = quadratic_of(R)
    assert q((1,)) == Phase(Fraction(1, 2))
    assert q.sigma((1,), (1,)) == Phase(1)
    assert q.is_quadratic()


def test_quadratic_function_cases():
    G = FiniteAbelianGroup([3])
    trivial = quadratic_of(lambda f, g: Phase(0), G)
    assert all(v.is_one for v in trivial.values) and is_quadratic(trivial)
    asym = QuadraticFunction(G, [Phase(0), Phase(Fraction(1, 3)), Phase(Fraction(2, 3))])
    assert not asym.is_quadratic()
    Z4 = FiniteAbelianGroup([4])
    not_bilinear = QuadraticFunction(Z4, [Phase(0), Phase(1), Phase(Fraction(1, 2)), Phase(1)])
    assert not not_bilinear.is_quadratic()
    good = QuadraticFunction(Z4, [Phase(Fraction(k * k, 4)) for k in range(4)])
    assert good.is_quadratic()
    with pytest.raises(NonUnitDiagonal):
        QuadraticFunction(G, [UnitScalar.rational(2), Phase(0), Phase(0)])
    with pytest.raises(TypeError):
        quadratic_of(lambda f, g: Phase(0))


@pytest.mark.parametrize("name", CORPUS)
def test_lattice_q_is_quadratic(lattices, name):
    assert is_quadratic(quadratic_of(reduce_functor(lattices[name])))


def test_bicharacter_braiding_with_trivial_associator():
    Z4 = FiniteAbelianGroup([4])
    one = lambda f, g, h: Phase(0)  # noqa: E731
    bichar = AbelianThreeCocycle.from_scalars(Z4, one, lambda f, g: Phase(Fraction(f[0] * g[0], 2)))
    assert verify_pentagon(bichar).passed and all(r.passed for r in verify_hexagons(bichar))
    bump = AbelianThreeCocycle.from_scalars(Z4, one, lambda f, g: Phase(1) if f == g == (1,) else Phase(0))
    assert not all(r.passed for r in verify_hexagons(bump))
    h = verify_hexagons(bump)[0]
    assert h.failures and "elements" in h.failures[0]


def test_from_tables_round_trip(lattices):
    R = reduce_functor(lattices["A3"])
    T = AbelianThreeCocycle.from_tables(R.group, R.a_table(), R.c_table())
    assert T.a_table() == R.a_table() and T.c_table() == R.c_table()
    assert coherent(T)


def test_sampled_mode_records_seed(lattices):
    R = reduce_functor(lattices["A3"])
    p = verify_pentagon(R, seed=5, samples=1000, exhaustive_max=1)
    assert p.passed and p.checked == 1000
    assert p.params == {"order": 4, "mode": "sampled", "samples": 1000, "seed": 5}
    h = verify_hexagons(R, seed=5, samples=300, exhaustive_max=1)
    assert all(r.checked == 300 for r in h)


def test_transparency_examples(lattices):
    A1 = lattices["A1"]
    c = lattice_braiding(A1)
    half = (Fraction(1, 2),)
    assert is_transparent(c, (0,), half)
    assert all(is_transparent(c, half, (n,)) for n in range(-3, 4))
    assert double_braiding(c, half, half) == Phase(1)
    assert not is_transparent(c, half, half)


@pytest.mark.parametrize("name", CORPUS)
def test_verify_transparency(lattices, name):
    L = lattices[name]
    r = verify_transparency(L, Window.box(L.rank, 1))
    assert r.passed and r.checked == abs(L.det) * 3**L.rank


def test_alpha_from_functor(lattices):
    L = lattices["A2"]
    assert all(r.passed for r in alpha_from_functor(L))
    reps = {r.name: r for r in alpha_from_functor(L, None, mutate(build_alpha(L), 0))}
    assert not reps["alpha_skew"].passed


def test_section_independence_report(lattices):
    r = verify_section_independence(lattices["A3"], trials=100, seed=3)
    assert r.passed and r.checked == 400


@pytest.mark.parametrize("name", CORPUS)
def test_suite_passes(lattices, name):
    reps, R = discat_suite(lattices[name], seed=0)
    assert all(r.passed for r in reps), [r.to_dict() for r in reps if not r.passed]
    assert R.associator == "theta_xy"
    assert {"pentagon", "hexagon_1", "hexagon_2", "quadratic", "relift_pentagon"} <= {r.name for r in reps}
