"""Independent reference computations used to freeze expected values.

Nothing here touches the Smith normal form code of the package: dual cosets
are enumerated by closing the rows of ``A^-1`` (computed with sympy) under
addition modulo ``Z^n``.
"""

import math
from fractions import Fraction
from itertools import product

import sympy


def inverse_rows(gram):
    inv = sympy.Matrix(gram).inv()
    n = inv.shape[0]
    return [tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(n)) for i in range(n)]


def frac_part(v):
    return tuple(t - (t.numerator // t.denominator) for t in v)


def dual_cosets(gram):
    """All classes of ``l#/l`` as fractional parts of lattice coordinates."""
    gens = inverse_rows(gram)
    n = len(gram)
    zero = (Fraction(0),) * n
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = frac_part(tuple(a + b for a, b in zip(v, g)))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def norm(gram, v):
    n = len(gram)
    return sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))


def q_values(gram):
    """Coset (fractional part) -> t with q = e^{i pi t}, t in [0, 2)."""
    return {c: norm(gram, c) % 2 for c in dual_cosets(gram)}


def order_profile(gram):
    """Multiset of element orders; determines a finite abelian group up to isomorphism."""
    out = {}
    for c in dual_cosets(gram):
        k = 1
        for t in c:
            k = k * t.denominator // math.gcd(k, t.denominator)
        out[k] = out.get(k, 0) + 1
    return out


def profile_of_factors(factors):
    out = {}
    for el in product(*(range(d) for d in factors)):
        k = 1
        for a, d in zip(el, factors):
            o = d // math.gcd(a, d)
            k = k * o // math.gcd(k, o)
        out[k] = out.get(k, 0) + 1
    return out


def sympy_invariant_factors(M):
    """Nonzero diagonal of sympy's Smith form, as nonnegative ints."""
    from sympy.matrices.normalforms import smith_normal_form

    S = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
    k = min(S.shape)
    return sorted(abs(int(S[i, i])) for i in range(k))
