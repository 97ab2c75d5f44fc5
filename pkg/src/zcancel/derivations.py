"""Higher (Hasse-Schmidt) derivations on skew polynomial rings.

A :class:`HigherDerivation` is a rule on normal monomials, extended linearly.
Two constructions are built in: divided-power operators on central
variables, and the locally nilpotent witnesses attached to a point of T_s.
Checkers verify the higher Leibniz rule, iterativity and local nilpotence on
all monomials up to a degree bound.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .errors import NonTorsionError, ValidationError
from .lattice import CongruenceSystem, solve
from .rings import Element, SkewRing, TensorRing, WeylRing
from .scalars import Cyclo

__all__ = [
    "DEFAULT_DEGREE_BOUND",
    "DEFAULT_INDEX_BOUND",
    "HigherDerivation",
    "TSetResult",
    "MLResult",
    "CheckResult",
    "NonTerminationError",
    "skew_view",
    "t_set_system",
    "t_set",
    "ml_h",
    "is_central_generator",
    "divided_power_derivation",
    "lnd_witness",
    "canonical_higher_derivation",
    "verify_higher_leibniz",
    "verify_iterative",
    "verify_locally_nilpotent",
    "kernel_contains",
    "g_map",
    "g_t",
    "defining_relations",
]

DEFAULT_DEGREE_BOUND = 4
DEFAULT_INDEX_BOUND = 8


class NonTerminationError(RuntimeError):
    """A sum over derivation indices did not terminate within the index bound."""


class HigherDerivation:
    """Sequence of linear maps (d_0 = id, d_1, d_2, ...) given by a monomial rule.

    ``rule(i, mono)`` returns d_i(x^mono) for i >= 1.  ``support(mono)``, when
    given, is an index past which every d_i kills x^mono.
    """

    def __init__(self, ring, rule, tag="user", support=None, index_bound=DEFAULT_INDEX_BOUND):
        self.ring = ring
        self.rule = rule
        self.tag = tag
        self.support = support
        self.index_bound = index_bound
        self._cache = {}

    def on_monomial(self, i, mono):
        if i == 0:
            return self.ring.monomial(mono)
        if self.support is not None and i > self.support(mono):
            return self.ring.zero()
        key = (i, mono)
        hit = self._cache.get(key)
        if hit is None:
            hit = self.rule(i, mono)
            self._cache[key] = hit
        return hit

    def apply(self, i, u):
        if i == 0:
            return u
        out = self.ring.zero()
        for mono, c in u.terms.items():
            d = self.on_monomial(i, mono)
            if d:
                out = out + d * c
        return out

    def __call__(self, i, u):
        return self.apply(i, u)

    def nonzero_indices(self, u, bound=None):
        """Indices i >= 1 with d_i(u) != 0, up to ``bound``."""
        bound = bound or self.index_bound
        return [i for i in range(1, bound + 1) if self.apply(i, u)]

    def __repr__(self):
        return f"HigherDerivation({self.tag}, {self.ring!r})"


@dataclass(frozen=True)
class TSetResult:
    """T_s membership data; ``witness`` is None when T_s is empty.

    ``s`` is 0-based.  ``witness`` has length n-1 (slot s omitted).
    ``certified`` is False only when a mixed free/torsion system was searched
    within a finite box without finding a non-negative point.
    """

    s: int
    witness: Optional[tuple]
    certified: bool = True

    @property
    def empty(self):
        return self.witness is None

    def full_exponent(self):
        if self.witness is None:
            return None
        w = list(self.witness)
        return tuple(w[:self.s] + [0] + w[self.s:])


@dataclass(frozen=True)
class MLResult:
    """ML^H(A) as the subalgebra generated by ``generators`` (0-based indices)."""

    generators: tuple
    ngens: int

    @property
    def is_full(self):
        return len(self.generators) == self.ngens

    @property
    def is_trivial(self):
        return not self.generators


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    counterexample: Optional[tuple] = None
    detail: str = ""

    def __bool__(self):
        return self.passed


def skew_view(ring):
    if isinstance(ring, SkewRing):
        return ring
    if isinstance(ring, TensorRing) and ring.all_skew():
        return ring.as_skew()
    raise ValidationError("T_s sets are defined for skew polynomial rings only")


def t_set_system(ring, s):
    """Congruences prod_{j != s} p_ij^d_j = p_is for all i != s, in exponent form."""
    ring = skew_view(ring)
    others = [j for j in range(ring.n) if j != s]
    A, b, mods = [], [], []
    for i in others:
        A.append([ring.p(i, j).torsion for j in others])
        b.append(ring.p(i, s).torsion)
        mods.append(ring.m)
        for k in range(ring.free_rank):
            A.append([ring.p(i, j).free[k] for j in others])
            b.append(ring.p(i, s).free[k])
            mods.append(0)
    return CongruenceSystem(A, b, mods, nvars=len(others))


def _check_t_set_point(ring, s, d):
    # prod_{j != s} p_ij^d_j = p_is for every i != s, and prod_j p_sj^d_j = 1
    others = [j for j in range(ring.n) if j != s]
    for i in others:
        acc = ring.p(i, s)
        acc = -acc
        for j, dj in zip(others, d):
            acc = acc + ring.p(i, j).scale(dj)
        if not acc.is_identity(ring.m):
            return False
    acc = ring.p(s, s)
    for j, dj in zip(others, d):
        acc = acc + ring.p(s, j).scale(dj)
    return acc.is_identity(ring.m)


def _lex_min_nonneg(particular, kernel):
    # kernel has full rank: its HNF is upper triangular with positive pivots,
    # so coordinates can be minimised greedily from the left
    v = list(particular)
    for row, c in zip(kernel.basis, kernel.pivots()):
        q = v[c] // row[c]
        v = [x - q * y for x, y in zip(v, row)]
    return tuple(v)


def _search_nonneg(particular, kernel, bound):
    from itertools import product
    best = None
    for coeffs in product(range(-bound, bound + 1), repeat=kernel.rank):
        v = [p + sum(c * row[j] for c, row in zip(coeffs, kernel.basis))
             for j, p in enumerate(particular)]
        if all(x >= 0 for x in v) and (best is None or v < best):
            best = v
    return None if best is None else tuple(best)


def t_set(ring, s, search_bound=6):
    """Decide T_s (0-based s) and return its lexicographically least point."""
    sk = skew_view(ring)
    if not 0 <= s < sk.n:
        raise ValidationError(f"generator index {s} out of range")
    sol = solve(t_set_system(sk, s))
    if sol is None:
        return TSetResult(s, None)
    k = sol.kernel
    if k.rank == k.n:
        w = _lex_min_nonneg(sol.particular, k)
        certified = True
    else:
        w = _search_nonneg(sol.particular, k, search_bound)
        certified = w is not None
    if w is None:
        return TSetResult(s, None, certified)
    if not _check_t_set_point(sk, s, w):
        raise AssertionError(f"internal error: {w} fails the T_{s + 1} congruences")
    return TSetResult(s, w, certified)


def ml_h(ring):
    """ML^H(A): the subalgebra generated by the x_s with T_s empty."""
    sk = skew_view(ring)
    if not sk.is_torsion:
        raise NonTorsionError("ML^H is computed for root-of-unity parameters only")
    gens = tuple(s for s in range(sk.n) if t_set(sk, s).empty)
    return MLResult(gens, sk.n)


def is_central_generator(ring, i):
    if isinstance(ring, WeylRing):
        return False
    if isinstance(ring, TensorRing):
        off = 0
        for f in ring.factors:
            if off <= i < off + f.ngens:
                return is_central_generator(f, i - off)
            off += f.ngens
    return all(ring.p(i, j).is_identity(ring.m) for j in range(ring.n))


def divided_power_derivation(ring, i, index_bound=DEFAULT_INDEX_BOUND):
    """Delta_i^n(x^m) = C(m_i, n) x^(m - n e_i) on a central variable x_i."""
    if not is_central_generator(ring, i):
        raise ValidationError(f"generator {ring.names[i]} is not central")

    def rule(n, mono):
        mi = mono[i]
        if mi < n:
            return ring.zero()
        e = list(mono)
        e[i] -= n
        return ring.monomial(e, comb(mi, n))

    return HigherDerivation(ring, rule, tag=f"divided-power[{ring.names[i]}]",
                            support=lambda mono: mono[i], index_bound=index_bound)


def lnd_witness(ring, s, d, index_bound=DEFAULT_INDEX_BOUND):
    """Locally nilpotent higher derivation with d_1(x_s) = x^d, d_1(x_i) = 0 otherwise.

    ``d`` is a point of T_s (length n-1).  On f * x_s^m, with f free of x_s,
    d_n acts as C(m, n) f (x^d)^n x_s^(m-n).
    """
    sk = skew_view(ring)
    d = tuple(int(x) for x in d)
    if len(d) != sk.n - 1 or any(x < 0 for x in d) or not _check_t_set_point(sk, s, d):
        raise ValidationError(f"{d} is not a point of T_{s + 1}")
    full = list(d[:s]) + [0] + list(d[s:])
    image = ring.monomial(full)

    def rule(n, mono):
        ms = mono[s]
        if ms < n:
            return ring.zero()
        rest = list(mono)
        rest[s] = 0
        f = ring.monomial(rest)
        # x^mono = c * f * x_s^ms
        c = (f * ring.monomial(_axis(ring.ngens, s, ms))).coefficient(mono)
        tail = ring.monomial(_axis(ring.ngens, s, ms - n))
        return (f * image ** n * tail) * (comb(ms, n) * c.inverse())

    return HigherDerivation(ring, rule, tag=f"t-set-witness[s={s + 1}, d={list(d)}]",
                            support=lambda mono: mono[s], index_bound=index_bound)


def _axis(n, i, k):
    e = [0] * n
    e[i] = k
    return e


def canonical_higher_derivation(delta, ring, index_bound=DEFAULT_INDEX_BOUND):
    """d_n = delta^n / n! for a derivation ``delta`` (a linear map on elements)."""

    def rule(n, mono):
        u = ring.monomial(mono)
        for _ in range(n):
            u = delta(u)
            if not u:
                return u
        return u * Fraction(1, factorial(n))

    return HigherDerivation(ring, rule, tag="canonical", index_bound=index_bound)


def _monomials(ring, degree_bound):
    return ring.basis_monomials(degree_bound)


def verify_higher_leibniz(der, degree_bound=DEFAULT_DEGREE_BOUND, index_bound=None):
    """d_n(ab) = sum_i d_i(a) d_(n-i)(b) on all pairs of monomials up to the bound."""
    ring = der.ring
    index_bound = index_bound or der.index_bound
    monos = _monomials(ring, degree_bound)
    for a in monos:
        ea = ring.monomial(a)
        da = [der.on_monomial(i, a) for i in range(index_bound + 1)]
        for b in monos:
            eb = ring.monomial(b)
            ab = ea * eb
            db = [der.on_monomial(i, b) for i in range(index_bound + 1)]
            for n in range(1, index_bound + 1):
                rhs = ring.zero()
                for i in range(n + 1):
                    if da[i] and db[n - i]:
                        rhs = rhs + da[i] * db[n - i]
                if der.apply(n, ab) != rhs:
                    return CheckResult(False, (a, b, n), "higher Leibniz rule fails")
    return CheckResult(True)


def verify_iterative(der, degree_bound=DEFAULT_DEGREE_BOUND, index_bound=None):
    """d_i d_j = C(i+j, i) d_(i+j) on monomials, for i + j <= index bound."""
    ring = der.ring
    index_bound = index_bound or der.index_bound
    for a in _monomials(ring, degree_bound):
        for j in range(1, index_bound + 1):
            dj = der.on_monomial(j, a)
            for i in range(1, index_bound + 1 - j):
                lhs = der.apply(i, dj)
                rhs = der.on_monomial(i + j, a) * comb(i + j, i)
                if lhs != rhs:
                    return CheckResult(False, (a, i, j), "iterativity fails")
    return CheckResult(True)


# -- A[t] as {power: Element} ------------------------------------------------

def _at_add(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if v}


def _at_mul(p, q):
    out = {}
    for i, a in p.items():
        for j, b in q.items():
            ab = a * b
            if ab:
                out[i + j] = out[i + j] + ab if i + j in out else ab
    return {k: v for k, v in out.items() if v}


def _series(der, u, index_bound):
    # [d_0(u), d_1(u), ...] up to the last nonzero term
    terms = [u]
    for i in range(1, index_bound + 1):
        terms.append(der.apply(i, u))
    if terms[-1]:
        raise NonTerminationError(f"d_i(u) still nonzero at i = {index_bound}")
    while len(terms) > 1 and not terms[-1]:
        terms.pop()
    return terms


def g_map(der, c, index_bound=None):
    """The map u -> sum_i c^i d_i(u)."""
    index_bound = index_bound or der.index_bound
    ring = der.ring
    c = c if isinstance(c, Cyclo) else Cyclo.from_rational(ring.m, c)

    def G(u):
        out = ring.zero()
        for i, term in enumerate(_series(der, u, index_bound)):
            if term:
                out = out + term * (c ** i)
        return out

    return G


def g_t(der, scale=1, index_bound=None):
    """G_{d, scale*t} on A[t]: a -> sum_i d_i(a) (scale*t)^i, t -> t."""
    index_bound = index_bound or der.index_bound

    def G(p):
        if isinstance(p, Element):
            p = {0: p}
        out = {}
        for k, a in p.items():
            for i, term in enumerate(_series(der, a, index_bound)):
                if term:
                    out = _at_add(out, {k + i: term * (scale ** i)})
        return out

    return G


def defining_relations(ring):
    """Pairs (lhs builder, name) whose images must vanish; each is a function of
    a generator-image map returning an A[t] element."""
    rels = []
    names = ring.names

    def skew_rel(i, j, coeff):
        def rel(img, one):
            return _at_add(_at_mul(img[j], img[i]),
                           {k: -v * coeff for k, v in _at_mul(img[i], img[j]).items()})
        return rel, f"{names[j]}{names[i]} - p*{names[i]}{names[j]}"

    if isinstance(ring, WeylRing):
        factors, offs = [ring], [0]
    elif isinstance(ring, TensorRing):
        factors, offs = ring.factors, ring.offsets()
    else:
        factors, offs = [ring], [0]
    for f, o in zip(factors, offs):
        if isinstance(f, SkewRing):
            for i in range(f.n):
                for j in range(i + 1, f.n):
                    rels.append(skew_rel(o + i, o + j, f.p(i, j).evaluate(f.m)))
        else:
            x, y = o, o + 1
            q = f.q
            if f.orientation == "xy-qyx-1":
                a, b = x, y
            else:
                a, b = y, x

            def rel(img, one, a=a, b=b, q=q):
                lhs = _at_add(_at_mul(img[a], img[b]),
                              {k: -v * q for k, v in _at_mul(img[b], img[a]).items()})
                return _at_add(lhs, {0: -one})
            rels.append((rel, f"{names[a]}{names[b]} - q*{names[b]}{names[a]} - 1"))
    # distinct factors commute
    for fi in range(len(factors)):
        for fj in range(fi + 1, len(factors)):
            for i in range(offs[fi], offs[fi] + factors[fi].ngens):
                for j in range(offs[fj], offs[fj] + factors[fj].ngens):
                    rels.append(skew_rel(i, j, 1))
    return rels


def verify_locally_nilpotent(der, degree_bound=DEFAULT_DEGREE_BOUND, index_bound=None):
    """(a) every monomial up to the degree bound is eventually killed;
    (b) G_{d,t} respects the defining relations and G_{d,t} G_{d,-t} = id."""
    ring = der.ring
    index_bound = index_bound or der.index_bound
    monos = _monomials(ring, degree_bound)
    for a in monos:
        start = der.support(a) + 1 if der.support is not None else None
        nz = [i for i in range(1, index_bound + 1) if der.on_monomial(i, a)]
        if start is None:
            if nz and nz[-1] == index_bound:
                return CheckResult(False, (a,), "not annihilated within the index bound")
        elif any(i >= start for i in nz):
            return CheckResult(False, (a,), "nonzero past the declared support")
    G = g_t(der, 1, index_bound)
    Ginv = g_t(der, -1, index_bound)
    try:
        img = [G(g) for g in ring.gens()]
        for rel, name in defining_relations(ring):
            if rel(img, ring.one()):
                return CheckResult(False, (name,), "G_{d,t} does not preserve a relation")
        for a in monos:
            u = ring.monomial(a)
            if G(Ginv(u)) != {0: u}:
                return CheckResult(False, (a,), "G_{d,t} o G_{d,-t} is not the identity")
    except NonTerminationError as exc:
        return CheckResult(False, None, str(exc))
    return CheckResult(True)


def kernel_contains(der, u, bound=None):
    """u in ker d, checked for 1 <= i <= bound."""
    bound = bound or der.index_bound
    return all(not der.apply(i, u) for i in range(1, bound + 1))
