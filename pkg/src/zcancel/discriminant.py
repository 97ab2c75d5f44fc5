"""Discriminants over the center and syntactic effectiveness checks."""

from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations

from .center import center_lattice, central_basis, monomial_trace
from .errors import DegenerateDiscriminantError, UnsupportedError, ValidationError
from .polys import InexactDivisionError, Poly
from .rings import SkewRing, TensorRing
from .scalars import Cyclo

__all__ = [
    "PairingMatrix",
    "trace_pairing_matrix",
    "determinant",
    "determinant_bareiss",
    "determinant_cofactor",
    "DiscriminantResult",
    "discriminant",
    "Tri",
    "EffectivenessVerdict",
    "classify_effectiveness",
]


class PairingMatrix:
    """Sparse square matrix of :class:`Poly` entries (missing entries are zero)."""

    def __init__(self, size, entries, m, nvars):
        self.size = size
        self.entries = {k: v for k, v in entries.items() if v}
        self.m = m
        self.nvars = nvars

    def __getitem__(self, ij):
        e = self.entries.get(ij)
        return e if e is not None else Poly(self.m, self.nvars)

    def dense(self):
        return [[self[i, j] for j in range(self.size)] for i in range(self.size)]

    @classmethod
    def from_dense(cls, rows, m, nvars):
        return cls(len(rows), {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)},
                   m, nvars)


def _require(ring, center):
    if not ring.is_torsion:
        raise UnsupportedError("discriminants need root-of-unity parameters")
    if center.rectangular is None:
        raise UnsupportedError("center is not rectangular; A is not known to be free over C")


def _trace_poly(ring, center, mono, coeff):
    return Poly(ring.m, ring.ngens, {q: coeff * t for q, t in monomial_trace(ring, center, mono).items()})


def trace_pairing_matrix(ring, center=None, basis=None):
    """Matrix (tr(z_i z_j)) over the central basis z_1..z_w.

    Skew factors only pair z_i with the z_j in the opposite coset, so for
    them only that entry is evaluated; every other entry is a non-central
    monomial and has trace zero.
    """
    center = center or center_lattice(ring)
    _require(ring, center)
    basis = basis or central_basis(center)
    alpha = center.rectangular
    index = {z: k for k, z in enumerate(basis)}
    skew_only = isinstance(ring, SkewRing) or (isinstance(ring, TensorRing) and ring.all_skew())
    entries = {}
    for i, zi in enumerate(basis):
        if skew_only:
            partner = tuple((-d) % a for d, a in zip(zi, alpha))
            candidates = [index[partner]] if partner in index else range(len(basis))
        else:
            candidates = range(len(basis))
        for j in candidates:
            prod_ = ring.mul_monomials(zi, basis[j])
            acc = Poly(ring.m, ring.ngens)
            for mono, c in prod_.items():
                acc = acc + _trace_poly(ring, center, mono, c)
            if acc:
                entries[(i, j)] = acc
    return PairingMatrix(len(basis), entries, ring.m, ring.ngens)


def _perm_sign(perm):
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _monomial_matrix_det(M):
    # one nonzero per row and column: det = sign(perm) * product
    rows = {}
    for (i, j) in M.entries:
        if i in rows:
            return None
        rows[i] = j
    if len(rows) != M.size or len(set(rows.values())) != M.size:
        return None
    out = Poly.constant(M.m, M.nvars, _perm_sign([rows[i] for i in range(M.size)]))
    for i in range(M.size):
        out = out * M.entries[(i, rows[i])]
    return out


def determinant_bareiss(M):
    """Fraction-free elimination with exact polynomial division."""
    n = M.size
    if n == 0:
        return Poly.constant(M.m, M.nvars, 1)
    a = M.dense()
    sign = 1
    prev = Poly.constant(M.m, M.nvars, 1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Poly(M.m, M.nvars)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * pivot
                if aik and a[k][j]:
                    num = num - aik * a[k][j]
                a[i][j] = num.exact_div(prev) if num else num
            a[i][k] = Poly(M.m, M.nvars)
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def determinant_cofactor(M):
    """Leibniz expansion; only sensible for tiny matrices."""
    n = M.size
    if n > 6:
        raise ValueError("cofactor expansion is limited to size <= 6")
    out = Poly(M.m, M.nvars)
    for perm in permutations(range(n)):
        term = Poly.constant(M.m, M.nvars, _perm_sign(list(perm)))
        for i, j in enumerate(perm):
            e = M[i, j]
            if not e:
                term = None
                break
            term = term * e
        if term is not None:
            out = out + term
    return out


def determinant(M):
    """Exact determinant of a :class:`PairingMatrix` (or dense list of Polys)."""
    if isinstance(M, list):
        if not M:
            raise ValueError("need a nonempty matrix or an explicit PairingMatrix")
        M = PairingMatrix.from_dense(M, M[0][0].m, M[0][0].nvars)
    fast = _monomial_matrix_det(M)
    if fast is not None:
        return fast
    try:
        return determinant_bareiss(M)
    except InexactDivisionError:
        if M.size <= 6:
            return determinant_cofactor(M)
        raise


@dataclass(frozen=True)
class DiscriminantResult:
    """d(A/C) = unit * normalized, with the lex-greatest coefficient of ``normalized`` equal to 1."""

    ring: object
    normalized: Poly
    unit: Cyclo
    rank: int
    raw: Poly = field(repr=False)

    def leading_monomial(self):
        return self.normalized.leading()[0]


def _kronecker_discriminant(ring, center):
    # det(A_1 (x) ... (x) A_k) = prod det(A_f)^(w / w_f)
    raw = Poly.constant(ring.m, ring.ngens, 1)
    offs = ring.offsets()
    w = center.rank
    for f, o in zip(ring.factors, offs):
        fc = center_lattice(f)
        d = determinant(trace_pairing_matrix(f, fc))
        raw = raw * (d.embed(ring.ngens, o) ** (w // fc.rank))
    return raw


def discriminant(ring, center=None, method="auto"):
    """d(A/C) for a torsion ring with rectangular center.

    ``method="direct"`` always takes the determinant of the full pairing
    matrix; ``"auto"`` uses the Kronecker factorisation for tensor products.
    """
    center = center or center_lattice(ring)
    _require(ring, center)
    if method not in ("auto", "direct"):
        raise ValidationError(f"unknown method {method!r}")
    if method == "auto" and isinstance(ring, TensorRing) and len(ring.factors) > 1:
        raw = _kronecker_discriminant(ring, center)
    else:
        raw = determinant(trace_pairing_matrix(ring, center))
    if not raw:
        raise DegenerateDiscriminantError(
            "trace pairing determinant is zero; the regular trace form is degenerate")
    _, lead = raw.leading()
    normalized = raw * lead.inverse()
    return DiscriminantResult(ring, normalized, lead, center.rank, raw)


class Tri(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class EffectivenessVerdict:
    effective: Tri
    dominating: Tri
    rule: str


def _is_skew(ring):
    return isinstance(ring, SkewRing) or (isinstance(ring, TensorRing) and ring.all_skew())


def classify_effectiveness(d, ring):
    """Syntactic effectiveness/dominance test for a discriminant ``d`` (a Poly).

    Only the sufficient and necessary monomial criteria are applied; anything
    else is reported as unknown.
    """
    if not d:
        raise ValueError("the zero element is not a valid discriminant")
    lead, _ = d.leading()
    full = all(b >= 1 for b in lead)
    if d.is_monomial():
        if full:
            return EffectivenessVerdict(Tri.YES, Tri.YES, "Lemma 5.3(2),(6)")
        dom = Tri.NO if _is_skew(ring) else Tri.UNKNOWN
        rule = "Lemma 5.3(2); Theorem 5.7(5)" if _is_skew(ring) else "Lemma 5.3(2)"
        return EffectivenessVerdict(Tri.NO, dom, rule)
    cwlt = all(all(c <= b for c, b in zip(mono, lead)) and mono != lead
               for mono in d.terms if mono != lead)
    if cwlt and full:
        return EffectivenessVerdict(Tri.YES, Tri.YES, "Lemma 5.3(6)")
    return EffectivenessVerdict(Tri.UNKNOWN, Tri.UNKNOWN, "no syntactic criterion applies")
