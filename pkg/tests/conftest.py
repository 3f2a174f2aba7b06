import os

import pytest
from hypothesis import HealthCheck, settings

from latkit.inputs import corpus_names, load_corpus
from latkit.lattice import EvenLattice

settings.register_profile("latkit", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "latkit"))

GRAMS = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "E8": load_corpus("e8").gram.to_lists(),
    "hyperbolic plane": [[0, 1], [1, 0]],
    "2A1": [[4]],
}

SMALL = ["A1", "A2", "A3", "2A1", "hyperbolic plane"]


@pytest.fixture(scope="session")
def lattices():
    return {k: EvenLattice.from_gram(g) for k, g in GRAMS.items()}


@pytest.fixture(scope="session")
def corpus():
    return {n: load_corpus(n) for n in corpus_names()}


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
