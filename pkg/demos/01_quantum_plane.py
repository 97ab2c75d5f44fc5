"""The quantum plane at q = -1: center, trace form and discriminant.

Run with ``python demos/01_quantum_plane.py``.
"""

from zcancel.center import center_lattice, central_basis, regular_trace
from zcancel.discriminant import classify_effectiveness, discriminant, trace_pairing_matrix
from zcancel.rings import SkewRing, format_element

# %% Build k_{-1}[x1, x2]: x2 x1 = -x1 x2.
R = SkewRing.uniform(2, 2, 1)
x1, x2 = R.gens()
print("x2*x1 =", x2 * x1)
print("(x1*x2)^2 =", (x1 * x2) ** 2)

# %% The center is spanned by monomials with even exponents, so A is free of
# rank 4 over C with basis 1, x2, x1, x1*x2.
C = center_lattice(R)
print("center lattice basis:", C.lattice.basis, "rank w =", C.rank)
print("free basis:", central_basis(C))

# %% The regular trace keeps central monomials (times w) and kills the rest.
print("tr(x1^2) =", regular_trace(x1 ** 2, C))
print("tr(x1)   =", regular_trace(x1, C))

# %% The trace pairing matrix is a signed permutation matrix, so its
# determinant is a single monomial.
M = trace_pairing_matrix(R, C)
for (i, j), entry in sorted(M.entries.items()):
    print(f"  M[{i},{j}] = {format_element(entry.terms, R.names)}")

d = discriminant(R)
print("discriminant unit:", d.unit)
print("normalized discriminant:", format_element(d.normalized.terms, R.names))
print("effectiveness:", classify_effectiveness(d.normalized, R))
