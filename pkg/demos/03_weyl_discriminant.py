"""Quantum Weyl algebras at roots of unity: the discriminant's shape.

For q of order n the center is k[x^n, y^n], the rank is n^2, and the
discriminant is a polynomial in xy whose top term is (xy)^(n^2 (n-1)).
"""

import time

from zcancel.center import center_lattice
from zcancel.discriminant import classify_effectiveness, discriminant
from zcancel.rings import WeylRing, format_element

for n in (2, 3):
    R = WeylRing(n, 1)
    x, y = R.gens()
    print(f"order {n}: x*y - q*y*x =", x * y - y * x * R.q)
    C = center_lattice(R)
    t0 = time.perf_counter()
    d = discriminant(R, C)
    print(f"  rank w = {C.rank}, computed in {time.perf_counter() - t0:.2f}s")
    print("  unit:", d.unit)
    print("  normalized:", format_element(d.normalized.terms, R.names))
    print("  ", classify_effectiveness(d.normalized, R))

# %% The other orientation, yx - q xy = 1, gives the same shape.
R = WeylRing(3, 1, "yx-qxy-1")
d = discriminant(R)
print("yx-qxy-1, order 3: lead", d.leading_monomial())
