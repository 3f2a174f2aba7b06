"""Discriminant groups and quadratic forms of the bundled even lattices.

    python demos/discriminant_forms.py
"""

from latkit.inputs import load_corpus
from latkit.lattice import DiscriminantForm, EvenLattice

for name in ["a1", "a2", "a3", "d4", "e8", "hyperbolic", "two_a1"]:
    spec = load_corpus(name)
    L = EvenLattice(spec.subgroup())
    form = DiscriminantForm(L)
    factors = " x ".join(f"Z/{d}" for d in form.group.invariant_factors) or "0"
    print(f"{spec.name}: det {L.det}, D = {factors}")
    for X, q in form.q_table():
        lift = ", ".join(str(t) for t in form.section(X))
        print(f"    {X}  lift ({lift})  q = e^(i pi {q.t})")

# the value of q does not depend on the chosen lift
import numpy as np

L = EvenLattice.from_gram([[2, -1], [-1, 2]])
form = DiscriminantForm(L)
moved = DiscriminantForm(L, form.section.perturbed(np.random.default_rng(0)))
print("A2 lifts moved by lattice vectors:", moved.section.values)
print("same q table:", moved.q_table() == form.q_table())
