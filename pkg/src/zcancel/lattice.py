"""Integer linear algebra: Hermite and Smith normal forms, sublattices of Z^n,
and mixed congruence systems over Z^r x Z/m.

Matrices are plain lists of lists of Python ints (arbitrary precision).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd, prod

__all__ = [
    "hnf",
    "snf",
    "det",
    "identity",
    "matmul",
    "IntegerLattice",
    "CongruenceSystem",
    "Solution",
    "solve",
    "coordinate_gcds",
    "lattice_index",
    "has_nonzero_nonneg_vector",
    "EnumerationBoundError",
    "DEFAULT_MAX_DIMENSION",
]

DEFAULT_MAX_DIMENSION = 12


class EnumerationBoundError(ValueError):
    """Raised when a bounded enumeration is asked to run past its limit."""


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def _copy(m):
    return [list(map(int, row)) for row in m]


def det(m):
    """Exact determinant by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = _copy(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hnf(M):
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ M == H``.  Pivots are
    positive, entries above a pivot lie in ``[0, pivot)``, zero rows are last.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    H = _copy(M)
    U = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if H[i][c] != 0]
            if not nz:
                break
            # smallest |entry|, lowest row on ties
            p = min(nz, key=lambda i: (abs(H[i][c]), i))
            if p != r:
                H[p], H[r] = H[r], H[p]
                U[p], U[r] = U[r], U[p]
            done = True
            for i in range(r + 1, rows):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < rows and H[r][c] != 0:
            if H[r][c] < 0:
                H[r] = [-x for x in H[r]]
                U[r] = [-x for x in U[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
            r += 1
    return H, U


def snf(M):
    """Smith normal form.

    Returns ``(D, U, V)`` with ``U``, ``V`` unimodular, ``U @ M @ V == D``,
    ``D`` diagonal with non-negative entries d_1 | d_2 | ...
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    D = _copy(M)
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        D[dst] = [x - q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col dst -= q * col src
        for row in D:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(rows, cols)):
        while True:
            cand = [(abs(D[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if D[i][j]]
            if not cand:
                break
            _, pi, pj = min(cand)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            clean = True
            for i in range(t + 1, rows):
                if D[i][t]:
                    add_row(i, t, D[i][t] // p)
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, cols):
                if D[t][j]:
                    add_col(j, t, D[t][j] // p)
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            # divisibility: fold an offending row into row t and retry
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def _diag(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


class IntegerLattice:
    """Sublattice of Z^n spanned by the rows of ``generators``.

    The canonical basis is the set of nonzero rows of the HNF.
    """

    def __init__(self, n, generators=()):
        self.n = n
        gens = [list(map(int, g)) for g in generators if any(g)]
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator {g} has wrong length for Z^{n}")
        if gens:
            H, _ = hnf(gens)
            self.basis = tuple(tuple(row) for row in H if any(row))
        else:
            self.basis = ()

    @classmethod
    def full(cls, n, scale=1):
        return cls(n, [[scale * int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def direct_sum(cls, lattices):
        n = sum(L.n for L in lattices)
        gens, offset = [], 0
        for L in lattices:
            for b in L.basis:
                gens.append([0] * offset + list(b) + [0] * (n - offset - L.n))
            offset += L.n
        return cls(n, gens)

    @property
    def rank(self):
        return len(self.basis)

    def pivots(self):
        return [next(j for j, x in enumerate(row) if x) for row in self.basis]

    def __contains__(self, v):
        v = list(v)
        for row, c in zip(self.basis, self.pivots()):
            if v[c] % row[c]:
                return False
            q = v[c] // row[c]
            v = [x - q * y for x, y in zip(v, row)]
        return not any(v)

    def __eq__(self, other):
        return isinstance(other, IntegerLattice) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def rectangular(self):
        """``(a_1..a_n)`` if the lattice is the box lattice of the a_i Z e_i, else None."""
        if self.rank != self.n:
            return None
        for i, row in enumerate(self.basis):
            if any(x for j, x in enumerate(row) if j != i):
                return None
        return tuple(row[i] for i, row in enumerate(self.basis))

    def __repr__(self):
        return f"IntegerLattice({self.n}, {[list(b) for b in self.basis]})"


def coordinate_gcds(L):
    """gcd of the i-th coordinates over all lattice vectors (0 if identically 0)."""
    return tuple(gcd(*(row[i] for row in L.basis)) if L.basis else 0 for i in range(L.n))


def lattice_index(L):
    """[Z^n : L] as an int, or ``float('inf')`` when L is not of full rank."""
    if L.rank < L.n:
        return float("inf")
    D, _, _ = snf([list(b) for b in L.basis])
    return prod(_diag(D))


def _min_axis_multiple(L, i):
    # smallest c > 0 with c*e_i in L (L of full rank): c*e_i = x.H needs x = c*e_i.H^-1
    # integral, so c is the lcm of the denominators in row i of H^-1
    H = [list(b) for b in L.basis]
    n = L.n
    target = [Fraction(int(j == i)) for j in range(n)]
    x = [Fraction(0)] * n
    # solve x.H = e_i; H upper triangular so go left to right
    for j in range(n):
        acc = target[j] - sum(x[k] * H[k][j] for k in range(j))
        x[j] = acc / H[j][j]
    out = 1
    for v in x:
        out = out * v.denominator // gcd(out, v.denominator)
    return out


def has_nonzero_nonneg_vector(L, coefficient_bound=None, max_dimension=DEFAULT_MAX_DIMENSION):
    """Decide whether L meets N^n outside the origin.

    Returns ``(found, witness)``.  Full-rank lattices always contain a
    positive multiple of some axis vector; the smallest such is returned.
    Otherwise integer combinations of the HNF basis with coefficients in
    ``[-B, B]`` are scanned, ``B`` defaulting to three times the largest
    pivot.
    """
    if L.n > max_dimension:
        raise EnumerationBoundError(f"ambient dimension {L.n} exceeds bound {max_dimension}")
    if L.rank == 0:
        return False, None
    if L.rank == L.n:
        best = min(range(L.n), key=lambda i: (_min_axis_multiple(L, i), i))
        w = [0] * L.n
        w[best] = _min_axis_multiple(L, best)
        return True, tuple(w)
    if coefficient_bound is None:
        coefficient_bound = 3 * max(abs(row[c]) for row, c in zip(L.basis, L.pivots()))
    B = coefficient_bound
    rng = sorted(range(-B, B + 1), key=lambda x: (abs(x), -x))
    best = None
    for coeffs in product(rng, repeat=L.rank):
        if not any(coeffs):
            continue
        v = [sum(c * row[j] for c, row in zip(coeffs, L.basis)) for j in range(L.n)]
        if all(x >= 0 for x in v):
            if best is None or (sum(v), v) < (sum(best), best):
                best = v
    if best is None:
        return False, None
    return True, tuple(best)


@dataclass(frozen=True)
class CongruenceSystem:
    """Rows ``A[k] . d == b[k]`` modulo ``moduli[k]`` (modulus 0 means over Z)."""

    A: tuple
    b: tuple
    moduli: tuple
    nvars: int = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(tuple(int(x) for x in row) for row in self.A))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "moduli", tuple(int(x) for x in self.moduli))
        if self.nvars is None:
            if not self.A:
                raise ValueError("nvars required for an empty system")
            object.__setattr__(self, "nvars", len(self.A[0]))
        if not (len(self.A) == len(self.b) == len(self.moduli)):
            raise ValueError("inconsistent row counts")
        if any(len(row) != self.nvars for row in self.A):
            raise ValueError("ragged coefficient matrix")
        if any(m < 0 for m in self.moduli):
            raise ValueError("moduli must be non-negative")

    def satisfied_by(self, d):
        for row, rhs, m in zip(self.A, self.b, self.moduli):
            lhs = sum(a * x for a, x in zip(row, d))
            if m == 0 and lhs != rhs:
                return False
            if m and (lhs - rhs) % m:
                return False
        return True


@dataclass(frozen=True)
class Solution:
    particular: tuple
    kernel: IntegerLattice


def solve(system):
    """Solve a mixed congruence system; ``None`` when it has no integer solution."""
    t = system.nvars
    s = len(system.A)
    if s == 0:
        return Solution((0,) * t, IntegerLattice.full(t))
    # modular rows get an extra column m*e_k so everything is exact over Z
    mod_rows = [k for k, m in enumerate(system.moduli) if m]
    aug = [list(row) + [system.moduli[k] if k == kk else 0 for kk in mod_rows]
           for k, row in enumerate(system.A)]
    D, U, V = snf(aug)
    ub = [sum(U[i][k] * system.b[k] for k in range(s)) for i in range(s)]
    diag = _diag(D)
    cols = len(aug[0])
    y = [0] * cols
    for i in range(s):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if ub[i]:
                return None
        else:
            if ub[i] % d:
                return None
            y[i] = ub[i] // d
    x = [sum(V[j][k] * y[k] for k in range(cols)) for j in range(cols)]
    rank = sum(1 for d in diag if d)
    kernel_gens = [[V[j][k] for j in range(t)] for k in range(rank, cols)]
    sol = Solution(tuple(x[:t]), IntegerLattice(t, kernel_gens))
    assert system.satisfied_by(sol.particular)
    return sol
