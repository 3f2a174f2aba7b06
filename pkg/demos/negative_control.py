"""Flip one cocycle sign and watch every identity that depends on it break.

    python demos/negative_control.py
"""

from latkit.algebra import algebra_suite, build_alpha, mutate
from latkit.lattice import EvenLattice
from latkit.locmod import locmod_suite

L = EvenLattice.from_gram([[2, -1], [-1, 2]])
alpha = build_alpha(L)
bad = mutate(alpha, seed=1)
print(f"flipped alpha{bad.x0, bad.y0}: {alpha(bad.x0, bad.y0)} -> {bad(bad.x0, bad.y0)}")

for label, a in [("built", alpha), ("mutated", bad)]:
    print(f"\n{label} cocycle")
    for r in algebra_suite(L, None, a) + locmod_suite(L, None, a):
        mark = "pass" if r.passed else f"FAIL  ({r.n_failures} of {r.checked})"
        print(f"  {r.name:22s} {mark}")
        if r.failures and label == "mutated":
            print(f"  {'':22s} first witness {r.failures[0]}")
