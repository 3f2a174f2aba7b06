"""Two closed forms for the reduced associator, tested against pentagon and hexagons.

The default "theta_xy" form is the one read off by composing the fusion and
trivialisation maps (also checked against a literal composition); the
"theta_yz" form swaps the last section cocycle argument.

    python demos/associator_choice.py
"""

import numpy as np

from latkit.discat import reduce_functor, verify_hexagons, verify_pentagon, verify_reduction_routes
from latkit.lattice import EvenLattice, make_section

cases = {
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "[[2,1,1],[1,2,1],[1,1,4]]": [[2, 1, 1], [1, 2, 1], [1, 1, 4]],
    "[[6,3],[3,6]]": [[6, 3], [3, 6]],
}
rng = np.random.default_rng(3)

for name, gram in cases.items():
    L = EvenLattice.from_gram(gram)
    sections = [make_section(L)] + [make_section(L).perturbed(rng) for _ in range(3)]
    print(name, f"|D| = {sections[0].group.order}")
    for kind in ("theta_xy", "theta_yz"):
        results = []
        for sec in sections:
            R = reduce_functor(L, sec, associator=kind)
            ok = verify_pentagon(R).passed and all(r.passed for r in verify_hexagons(R))
            results.append("ok" if ok else "broken")
        routes = verify_reduction_routes(L, reduce_functor(L, associator=kind), max_triples=200)
        print(f"  {kind:9s} linear + 3 relifts: {results}; linear section matches composition: {routes.passed}")
