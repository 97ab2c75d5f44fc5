"""Centers as exponent lattices, central bases, and the regular trace."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import UnsupportedError
from .lattice import (
    CongruenceSystem,
    IntegerLattice,
    has_nonzero_nonneg_vector,
    lattice_index,
    solve,
)
from .polys import Poly
from .rings import Element, SkewRing, TensorRing, WeylRing

__all__ = [
    "CenterDescription",
    "centrality_system",
    "center_lattice",
    "is_central",
    "central_basis",
    "regular_trace",
    "regular_trace_naive",
    "monomial_trace",
    "to_poly",
]


@dataclass(frozen=True)
class CenterDescription:
    """The center of a presented ring, spanned by the monomials x^d with d in ``lattice``.

    ``rank`` is [Z^n : L] (``inf`` when L is not of full rank).
    ``rectangular`` is (a_1..a_n) when L is the box lattice, else None.
    ``trivial`` means L meets N^n only at 0, i.e. the center is k.
    """

    ring: object
    lattice: IntegerLattice
    rank: object
    rectangular: tuple
    trivial: bool

    @property
    def w(self):
        return self.rank


def centrality_system(ring):
    """Homogeneous system whose solutions are exponents of central monomials.

    Row block i says prod_j p_ij^d_j = 1: one row mod m for the torsion part
    and one exact row per free parameter.
    """
    A, mods = [], []
    for i in range(ring.n):
        ps = [ring.p(i, j) for j in range(ring.n)]
        A.append([p.torsion for p in ps])
        mods.append(ring.m)
        for k in range(ring.free_rank):
            A.append([p.free[k] for p in ps])
            mods.append(0)
    return CongruenceSystem(A, [0] * len(A), mods, nvars=ring.n)


def _lattice(ring):
    if isinstance(ring, SkewRing):
        return solve(centrality_system(ring)).kernel
    if isinstance(ring, WeylRing):
        return IntegerLattice.full(2, ring.order)
    if isinstance(ring, TensorRing):
        return IntegerLattice.direct_sum([_lattice(f) for f in ring.factors])
    raise TypeError(f"not a presentation: {ring!r}")


def center_lattice(ring):
    """Center of ``ring`` as a :class:`CenterDescription`.

    For a Weyl factor the center k[x^n, y^n] (n the order of q) is used
    directly; tensor products take the direct sum of factor lattices.
    """
    L = _lattice(ring)
    found, _ = has_nonzero_nonneg_vector(L)
    return CenterDescription(ring, L, lattice_index(L), L.rectangular(), not found)


def is_central(u):
    return all(g * u == u * g for g in u.ring.gens())


def central_basis(center):
    """Coset representatives {x^d : 0 <= d_i < a_i}, lexicographically sorted."""
    if center.rectangular is None:
        raise UnsupportedError("A is only known to be free over C for rectangular centers")
    return [d for d in product(*(range(a) for a in center.rectangular))]


def _split(mono, alpha):
    q = tuple(e - e % a for e, a in zip(mono, alpha))
    r = tuple(e % a for e, a in zip(mono, alpha))
    return q, r


def regular_trace_naive(u, center):
    """Trace of left multiplication by ``u`` on the free basis over C.

    Computed straight from the matrix: for every basis monomial z_j, take the
    z_j-component of u*z_j.  Quadratic in the rank; used as a reference.
    """
    alpha = center.rectangular
    if alpha is None:
        raise UnsupportedError("regular trace needs a rectangular center")
    ring = u.ring
    out = {}
    for z in central_basis(center):
        prod_ = u * ring.monomial(z)
        for mono, c in prod_.terms.items():
            q, r = _split(mono, alpha)
            if r == z:
                out[q] = out[q] + c if q in out else c
    return Element(ring, out)


def _factor_centers(center):
    ring = center.ring
    if isinstance(ring, TensorRing):
        offs = ring.offsets()
        return [(f, center.rectangular[o:o + f.ngens]) for f, o in zip(ring.factors, offs)]
    return [(ring, center.rectangular)]


@lru_cache(maxsize=None)
def _factor_monomial_trace(factor, alpha, mono):
    """Trace of x^mono inside one factor: {central monomial: Cyclo}."""
    w = 1
    for a in alpha:
        w *= a
    if isinstance(factor, SkewRing):
        # x^e central iff e in the box lattice; lm(x^e) is then scalar, else
        # it permutes basis cosets with no fixed point
        if all(e % a == 0 for e, a in zip(mono, alpha)):
            return {mono: w}
        return {}
    out = {}
    for z in product(*(range(a) for a in alpha)):
        for m2, c in factor.mul_monomials(mono, z).items():
            q, r = _split(m2, alpha)
            if r == z:
                out[q] = out[q] + c if q in out else c
    return {k: v for k, v in out.items() if v}


def monomial_trace(ring, center, mono):
    """Regular trace of a single normal monomial, as {central monomial: coefficient}.

    Uses multiplicativity of the trace across tensor factors.
    """
    if center.rectangular is None:
        raise UnsupportedError("regular trace needs a rectangular center")
    ring._require_torsion()
    result = {(): 1}
    for (f, alpha), part in zip(_factor_centers(center), _split_factors(ring, mono)):
        tr = _factor_monomial_trace(f, tuple(alpha), part)
        if not tr:
            return {}
        result = {k + k2: c * c2 for k, c in result.items() for k2, c2 in tr.items()}
    return result


def _split_factors(ring, mono):
    if isinstance(ring, TensorRing):
        return ring.split(mono)
    return [tuple(mono)]


def regular_trace(u, center):
    """tr_reg(u) as an element supported on central monomials."""
    out = {}
    for mono, c in u.terms.items():
        for q, t in monomial_trace(u.ring, center, mono).items():
            v = c * t
            out[q] = out[q] + v if q in out else v
    return Element(u.ring, out)


def to_poly(u):
    """View an element supported on a rectangular center as a :class:`Poly`."""
    return Poly(u.ring.m, u.ring.ngens, u.terms)
