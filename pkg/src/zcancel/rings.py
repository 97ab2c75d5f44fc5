"""Presentations and normal-form arithmetic.

Three families are supported:

* skew polynomial rings ``k_{p_ij}[x_1..x_n]`` with ``x_j x_i = p_ij x_i x_j``
  for ``i < j``;
* quantum Weyl algebras ``k<x, y>/(xy - q yx - 1)`` (or the mirrored
  ``yx - q xy - 1`` convention);
* finite tensor products of the above.

Parameters live in the group Z^r x Z/m: the torsion part is an exponent of
zeta_m and the free part an exponent vector of formal parameters that are not
roots of unity.  Normal-form monomials are exponent tuples with generators in
presentation order.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .errors import NonTorsionError, ValidationError
from .scalars import Cyclo, lcm, zeta_power

__all__ = [
    "ParamExponent",
    "SkewRing",
    "WeylRing",
    "TensorRing",
    "Element",
    "tensor",
    "commutation_scalar",
    "gk_dimension",
    "degree",
    "WEYL_ORIENTATIONS",
]

WEYL_ORIENTATIONS = ("xy-qyx-1", "yx-qxy-1")


@dataclass(frozen=True)
class ParamExponent:
    """A parameter zeta_m^torsion * q_1^free_1 ... q_r^free_r, written additively."""

    torsion: int = 0
    free: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "free", tuple(int(x) for x in self.free))

    def __neg__(self):
        return ParamExponent(-self.torsion, tuple(-x for x in self.free))

    def __add__(self, other):
        n = max(len(self.free), len(other.free))
        a = self.free + (0,) * (n - len(self.free))
        b = other.free + (0,) * (n - len(other.free))
        return ParamExponent(self.torsion + other.torsion, tuple(x + y for x, y in zip(a, b)))

    def scale(self, k):
        return ParamExponent(self.torsion * k, tuple(k * x for x in self.free))

    def reduced(self, m):
        return ParamExponent(self.torsion % m, self.free)

    @property
    def is_torsion(self):
        return not any(self.free)

    def is_identity(self, m):
        return self.torsion % m == 0 and self.is_torsion

    def evaluate(self, m):
        """The scalar zeta_m^torsion; free parts cannot be evaluated."""
        if not self.is_torsion:
            raise NonTorsionError("parameter has a non-torsion part")
        return zeta_power(m, self.torsion)


class _Presentation:
    """Behaviour shared by all presentations.

    Subclasses provide ``names``, ``m`` (the common root-of-unity order),
    ``free_rank`` and ``_mul_monomials(a, b)``.
    """

    @property
    def ngens(self):
        return len(self.names)

    @property
    def is_torsion(self):
        return True

    def _require_torsion(self):
        if not self.is_torsion:
            raise NonTorsionError(
                "element arithmetic needs root-of-unity parameters; this ring has free parameters")

    def mul_monomials(self, a, b):
        """Normal form of x^a * x^b as ``{monomial: Cyclo}``."""
        self._require_torsion()
        key = (a, b)
        cache = self.__dict__.setdefault("_mcache", {})
        hit = cache.get(key)
        if hit is None:
            hit = self._mul_monomials(a, b)
            cache[key] = hit
        return hit

    # element constructors
    def zero(self):
        return Element(self, {})

    def one(self):
        return self.monomial((0,) * self.ngens)

    def scalar(self, c):
        return Element(self, {(0,) * self.ngens: c})

    def monomial(self, exps, coeff=1):
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.ngens or any(e < 0 for e in exps):
            raise ValidationError(f"bad exponent vector {exps}")
        return Element(self, {exps: coeff})

    def gen(self, i):
        """The i-th generator (0-based) or a generator name."""
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.ngens
        e[i] = 1
        return self.monomial(e)

    def gens(self):
        return [self.gen(i) for i in range(self.ngens)]

    def from_dict(self, terms):
        return Element(self, terms)

    def basis_monomials(self, max_degree):
        """All monomials of total degree <= max_degree, sorted."""
        out = []
        for e in iproduct(range(max_degree + 1), repeat=self.ngens):
            if sum(e) <= max_degree:
                out.append(e)
        return sorted(out, key=lambda e: (sum(e), e))

    def factors_list(self):
        return [self]


@dataclass(frozen=True, eq=True)
class SkewRing(_Presentation):
    """``k_{p_ij}[x_1..x_n]``: relations x_j x_i = p_ij x_i x_j for i < j.

    ``params`` maps 0-based pairs ``(i, j)`` with ``i < j`` to
    :class:`ParamExponent`; missing pairs are trivial.  ``p_ji`` and ``p_ii``
    are derived, never stored.
    """

    n: int
    m: int = 1
    params: tuple = ()
    free_rank: int = 0
    names: tuple = None

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("a skew polynomial ring needs n >= 1")
        if self.m < 1:
            raise ValidationError("root-of-unity order m must be >= 1")
        raw = dict(self.params) if not isinstance(self.params, dict) else self.params
        clean = {}
        for (i, j), p in raw.items():
            if not (0 <= i < j < self.n):
                raise ValidationError(f"parameter index ({i + 1}, {j + 1}) must satisfy 1 <= i < j <= n")
            if not isinstance(p, ParamExponent):
                p = ParamExponent(*p) if isinstance(p, tuple) else ParamExponent(int(p))
            free = p.free + (0,) * (self.free_rank - len(p.free))
            if len(free) != self.free_rank:
                raise ValidationError(f"free part {p.free} longer than free_rank={self.free_rank}")
            p = ParamExponent(p.torsion % self.m, free)
            if not p.is_identity(self.m):
                clean[(i, j)] = p
        object.__setattr__(self, "params", tuple(sorted(clean.items())))
        names = self.names or tuple(f"x{i + 1}" for i in range(self.n))
        if len(names) != self.n or len(set(names)) != self.n:
            raise ValidationError("generator names must be n distinct strings")
        object.__setattr__(self, "names", tuple(names))

    @classmethod
    def uniform(cls, n, m, torsion, free=(), names=None):
        """``k_q[x_1..x_n]`` with every p_ij = q."""
        p = ParamExponent(torsion, tuple(free))
        return cls(n, m, {(i, j): p for i in range(n) for j in range(i + 1, n)},
                   free_rank=len(free), names=names)

    def __hash__(self):
        return hash((self.n, self.m, self.params, self.free_rank, self.names))

    def __eq__(self, other):
        return (isinstance(other, SkewRing) and self.n == other.n and self.m == other.m
                and self.params == other.params and self.free_rank == other.free_rank
                and self.names == other.names)

    def p(self, i, j):
        """p_ij for any 0-based i, j, using p_ji = p_ij^-1 and p_ii = 1."""
        if i == j:
            return ParamExponent(0, (0,) * self.free_rank)
        if i > j:
            return -self.p(j, i)
        d = dict(self.params)
        return d.get((i, j), ParamExponent(0, (0,) * self.free_rank))

    def param_matrix(self):
        return [[self.p(i, j) for j in range(self.n)] for i in range(self.n)]

    @property
    def is_torsion(self):
        return all(p.is_torsion for _, p in self.params)

    @property
    def is_commutative(self):
        return not self.params

    def _torsion_matrix(self):
        cache = self.__dict__.setdefault("_tm", None)
        if cache is None:
            cache = [[self.p(i, j).torsion % self.m for j in range(self.n)] for i in range(self.n)]
            self.__dict__["_tm"] = cache
        return cache

    def commutation_exponent(self, a, b):
        """Torsion exponent k with x^a x^b = zeta^k x^(a+b)."""
        t = self._torsion_matrix()
        k = 0
        for j in range(self.n):
            if a[j]:
                for i in range(j):
                    if b[i]:
                        k += a[j] * b[i] * t[i][j]
        return k % self.m

    def _mul_monomials(self, a, b):
        c = zeta_power(self.m, self.commutation_exponent(a, b))
        return {tuple(x + y for x, y in zip(a, b)): c}

    def __repr__(self):
        ps = ", ".join(f"p{i + 1}{j + 1}={p.torsion}" + (f"|{list(p.free)}" if any(p.free) else "")
                       for (i, j), p in self.params)
        return f"SkewRing(n={self.n}, m={self.m}, {ps or 'commutative'})"


@dataclass(frozen=True)
class WeylRing(_Presentation):
    """Quantum Weyl algebra generated by x, y with q = zeta_m^q_torsion, q != 1.

    ``orientation="xy-qyx-1"`` means xy - q yx - 1 = 0; ``"yx-qxy-1"`` means
    yx - q xy - 1 = 0.  Normal monomials are x^a y^b.
    """

    m: int
    q_torsion: int
    orientation: str = "xy-qyx-1"
    names: tuple = ("x", "y")

    def __post_init__(self):
        if self.m < 1:
            raise ValidationError("root-of-unity order m must be >= 1")
        object.__setattr__(self, "q_torsion", self.q_torsion % self.m)
        if self.q_torsion == 0:
            raise ValidationError("the quantum Weyl algebra needs q != 1")
        if self.orientation not in WEYL_ORIENTATIONS:
            raise ValidationError(f"orientation must be one of {WEYL_ORIENTATIONS}")
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != 2 or self.names[0] == self.names[1]:
            raise ValidationError("a Weyl factor has two distinct generator names")

    free_rank = 0
    is_commutative = False

    @property
    def order(self):
        """Multiplicative order of q."""
        from math import gcd
        return self.m // gcd(self.m, self.q_torsion)

    @property
    def q(self):
        return zeta_power(self.m, self.q_torsion)

    def swap_rule(self):
        """(alpha, beta) with yx = alpha*xy + beta."""
        q = self.q
        if self.orientation == "xy-qyx-1":
            qi = q.inverse()
            return qi, -qi
        return q, Cyclo.one(self.m)

    def _swap(self, b, a):
        # y^b x^a as {(i, j): c} meaning c x^i y^j
        cache = self.__dict__.setdefault("_scache", {})
        key = (b, a)
        if key in cache:
            return cache[key]
        if b == 0 or a == 0:
            out = {(a, b): Cyclo.one(self.m)}
        else:
            alpha, beta = self.swap_rule()
            alpha_a = alpha ** a
            bracket = sum((alpha ** k for k in range(a)), Cyclo.zero(self.m)) * beta
            out = {}
            for (i, j), c in self._swap(b - 1, a).items():
                key2 = (i, j + 1)
                out[key2] = out.get(key2, 0) + c * alpha_a
            if bracket:
                for (i, j), c in self._swap(b - 1, a - 1).items():
                    out[(i, j)] = out.get((i, j), 0) + c * bracket
            out = {k: v for k, v in out.items() if v}
        cache[key] = out
        return out

    def _mul_monomials(self, a, b):
        out = {}
        for (i, j), c in self._swap(a[1], b[0]).items():
            mono = (a[0] + i, j + b[1])
            out[mono] = out.get(mono, 0) + c
        return {k: v for k, v in out.items() if v}

    def __repr__(self):
        return f"WeylRing(m={self.m}, q=z^{self.q_torsion}, {self.orientation})"


def _rescale(factor, M):
    """Copy of ``factor`` over the common order M."""
    if factor.m == M:
        return factor
    k = M // factor.m
    if isinstance(factor, SkewRing):
        return SkewRing(factor.n, M, {ij: p.scale(k) for ij, p in factor.params},
                        free_rank=factor.free_rank, names=factor.names)
    return WeylRing(M, factor.q_torsion * k, factor.orientation, factor.names)


@dataclass(frozen=True)
class TensorRing(_Presentation):
    """Tensor product of skew and Weyl factors; distinct factors commute."""

    factors: tuple

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise ValidationError("tensor product of an empty list")
        flat = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, TensorRing) else [f])
        names = [n for f in flat for n in f.names]
        if len(set(names)) != len(names):
            raise ValidationError(f"generator name collision in tensor product: {names}")
        M = lcm(*(f.m for f in flat))
        object.__setattr__(self, "factors", tuple(_rescale(f, M) for f in flat))

    @property
    def m(self):
        return self.factors[0].m

    @property
    def names(self):
        return tuple(n for f in self.factors for n in f.names)

    @property
    def free_rank(self):
        return sum(f.free_rank for f in self.factors)

    @property
    def is_torsion(self):
        return all(f.is_torsion for f in self.factors)

    @property
    def is_commutative(self):
        return all(f.is_commutative for f in self.factors)

    def offsets(self):
        out, o = [], 0
        for f in self.factors:
            out.append(o)
            o += f.ngens
        return out

    def split(self, e):
        return [tuple(e[o:o + f.ngens]) for o, f in zip(self.offsets(), self.factors)]

    def factors_list(self):
        return list(self.factors)

    def _mul_monomials(self, a, b):
        result = {(): Cyclo.one(self.m)}
        for f, fa, fb in zip(self.factors, self.split(a), self.split(b)):
            part = f.mul_monomials(fa, fb)
            result = {k + k2: c * c2 for k, c in result.items() for k2, c2 in part.items()}
        return result

    def all_skew(self):
        return all(isinstance(f, SkewRing) for f in self.factors)

    def as_skew(self):
        """The equivalent single skew presentation (only when all factors are skew)."""
        if not self.all_skew():
            raise ValidationError("tensor has Weyl factors; no skew presentation")
        params, off, foff = {}, 0, 0
        r = self.free_rank
        for f in self.factors:
            for (i, j), p in f.params:
                free = (0,) * foff + p.free + (0,) * (r - foff - f.free_rank)
                params[(i + off, j + off)] = ParamExponent(p.torsion, free)
            off += f.ngens
            foff += f.free_rank
        return SkewRing(off, self.m, params, free_rank=r, names=self.names)

    def __repr__(self):
        return "TensorRing(" + " (x) ".join(map(repr, self.factors)) + ")"


def tensor(factors):
    """Tensor product of presentations; a singleton list returns its member."""
    factors = list(factors)
    if not factors:
        raise ValidationError("tensor product of an empty list")
    if len(factors) == 1:
        return factors[0]
    return TensorRing(tuple(factors))


def commutation_scalar(ring, a, b):
    """Parameter c with x^a x^b = c x^(a+b) in a skew ring, as a ParamExponent."""
    if isinstance(ring, TensorRing):
        ring = ring.as_skew()
    total = ParamExponent(0, (0,) * ring.free_rank)
    for j in range(ring.n):
        for i in range(j):
            k = a[j] * b[i]
            if k:
                total = total + ring.p(i, j).scale(k)
    return total.reduced(ring.m)


def gk_dimension(ring):
    """GK dimension; equal to the number of generators for these rings."""
    return ring.ngens


class Element:
    """A normal-form element: a finite map monomial -> Cyclo with no zero entries."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        m = ring.m
        clean = {}
        for mono, c in terms.items():
            if not isinstance(c, Cyclo):
                c = Cyclo.from_rational(m, c)
            if c:
                clean[tuple(mono)] = c
        self.ring = ring
        self.terms = clean

    def _wrap(self, other):
        if isinstance(other, Element):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValidationError("elements of different rings")
            return other
        return self.ring.scalar(other)

    def __add__(self, other):
        other = self._wrap(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return Element(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return Element(self.ring, {k: v * other for k, v in self.terms.items()})
        other = self._wrap(other)
        out = {}
        mm = self.ring.mul_monomials
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                cab = ca * cb
                for mono, c in mm(a, b).items():
                    v = cab * c
                    out[mono] = out[mono] + v if mono in out else v
        return Element(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, Element):
            return other * self
        return Element(self.ring, {k: other * v for k, v in self.terms.items()})

    def __pow__(self, k):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, Cyclo)):
            return self == self.ring.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return degree(self)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Cyclo.zero(self.ring.m))

    def items(self):
        """Terms in lexicographic monomial order."""
        return sorted(self.terms.items())

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        return format_element(self.terms, self.ring.names)


def format_monomial(mono, names):
    parts = []
    for e, nm in zip(mono, names):
        if e == 1:
            parts.append(nm)
        elif e > 1:
            parts.append(f"{nm}^{e}")
    return "*".join(parts) or "1"


def format_element(terms, names):
    if not terms:
        return "0"
    out = []
    for mono, c in sorted(terms.items(), reverse=True):
        mon = format_monomial(mono, names)
        cs = str(c)
        if mon == "1":
            out.append(cs)
        elif c == 1:
            out.append(mon)
        elif c == -1:
            out.append("-" + mon)
        elif c.is_rational():
            out.append(f"{cs}*{mon}")
        else:
            out.append(f"({cs})*{mon}")
    s = out[0]
    for t in out[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s


def degree(u):
    """Total degree in the standard filtration (deg x_i = 1)."""
    if not u.terms:
        raise ValueError("the zero element has no degree")
    return max(sum(mono) for mono in u.terms)
