"""Three variables at q = -1: every generator moves.

With an odd number of variables each T_s is nonempty, so each generator
carries a locally nilpotent higher derivation and ML^H collapses to k.
"""

from zcancel.derivations import (
    g_t,
    kernel_contains,
    lnd_witness,
    ml_h,
    t_set,
    verify_higher_leibniz,
    verify_iterative,
    verify_locally_nilpotent,
)
from zcancel.rings import SkewRing

R = SkewRing.uniform(3, 2, 1)

# %% T_s witnesses: the least exponent d with x^d a legal image for x_s.
for s in range(R.n):
    t = t_set(R, s)
    print(f"T_{s + 1}: witness {t.witness}, image {R.monomial(t.full_exponent())}")

print("ML^H generators:", [R.names[i] for i in ml_h(R).generators] or "none (ML^H = k)")

# %% The witness for x1 sends x1 to x2*x3 and kills x2, x3.
D = lnd_witness(R, 0, (1, 1))
x1, x2, x3 = R.gens()
for n in range(4):
    print(f"D_{n}(x1^3) =", D(n, x1 ** 3))
print("x2 in ker D:", kernel_contains(D, x2), " x1 in ker D:", kernel_contains(D, x1))

# %% All three defining properties hold on monomials of degree <= 4.
for check in (verify_higher_leibniz, verify_iterative, verify_locally_nilpotent):
    print(check.__name__, check(D).passed)

# %% G_{D,t} on A[t]: images of the generators, as {power of t: coefficient}.
G = g_t(D)
for g in R.gens():
    print(g, "->", {k: str(v) for k, v in G(g).items()})
