"""Acceptance suite: one check per criterion, each with its time budget.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import Rewriter, tset_scan  # noqa: E402
from zcancel.center import center_lattice, central_basis  # noqa: E402
from zcancel.derivations import (  # noqa: E402
    HigherDerivation,
    divided_power_derivation,
    lnd_witness,
    ml_h,
    t_set,
    verify_higher_leibniz,
    verify_iterative,
    verify_locally_nilpotent,
)
from zcancel.discriminant import PairingMatrix, determinant_cofactor, discriminant  # noqa: E402
from zcancel.lattice import coordinate_gcds, det, hnf, matmul, snf  # noqa: E402
from zcancel.polys import Poly  # noqa: E402
from zcancel.rings import ParamExponent, SkewRing, WeylRing, tensor  # noqa: E402
from zcancel.scalars import Cyclo, euler_phi  # noqa: E402
from zcancel.verdict import Conclusion, analyze  # noqa: E402

RESULTS = {}


def record(number, title, budget):
    def wrap(fn):
        def run():
            t0 = time.perf_counter()
            try:
                fn()
            except Exception as exc:
                RESULTS[number] = (False, title, time.perf_counter() - t0, f"{type(exc).__name__}: {exc}")
                raise
            elapsed = time.perf_counter() - t0
            ok = elapsed < budget
            RESULTS[number] = (ok, title, elapsed, "" if ok else f"over budget {budget}s")
            assert ok, f"criterion {number} took {elapsed:.1f}s (budget {budget}s)"
        run.__name__ = fn.__name__
        run.number = number
        return run
    return wrap


def summary_lines():
    lines = []
    for k in sorted(RESULTS):
        ok, title, elapsed, why = RESULTS[k]
        tail = f" ({why})" if why else ""
        lines.append(f"criterion {k}: {'PASS' if ok else 'FAIL'} {title} [{elapsed:.2f}s]{tail}")
    return lines


# 1 -------------------------------------------------------------------------

def oracle_pairing_matrix(R):
    """tr(z_i z_j) as the trace of left multiplication, all products by rewriting."""
    C = center_lattice(R)
    alpha = C.rectangular
    basis = central_basis(C)
    rw = Rewriter(R)
    rows = []
    for zi in basis:
        row = []
        for zj in basis:
            u = rw.mul(zi, zj)
            tr = {}
            for zk in basis:
                for mono, c in rw.mul_elements(u, {zk: Cyclo.one(R.m)}).items():
                    q = tuple(e - e % a for e, a in zip(mono, alpha))
                    r = tuple(e % a for e, a in zip(mono, alpha))
                    if r == zk:
                        tr[q] = tr.get(q, Cyclo.zero(R.m)) + c
            row.append(Poly(R.m, R.ngens, tr))
        rows.append(row)
    return PairingMatrix.from_dense(rows, R.m, R.ngens)


@record(1, "discriminant golden k_{-1}[x1,x2] = -256 * x1^4 x2^4", 1.0)
def criterion_1():
    R = SkewRing.uniform(2, 2, 1)
    d = discriminant(R)
    assert d.rank == 4
    assert d.normalized.terms == {(4, 4): 1}
    assert d.unit == -256
    oracle = determinant_cofactor(oracle_pairing_matrix(R))
    assert oracle.terms == {(4, 4): -256}


# 2 -------------------------------------------------------------------------

@record(2, "Weyl discriminant lead x^(n^2(n-1)) y^(n^2(n-1)), support on (xy)^j", 30.0)
def criterion_2():
    for n in (2, 3):
        d = discriminant(WeylRing(n, 1))
        top = n * n * (n - 1)
        assert d.leading_monomial() == (top, top)
        for mono in d.normalized.terms:
            if mono != (top, top):
                assert mono[0] == mono[1] and mono[0] < top


# 3 -------------------------------------------------------------------------

@record(3, "T_s and ML^H goldens", 1.0)
def criterion_3():
    plane = SkewRing.uniform(2, 2, 1)
    assert all(t_set(plane, s).empty for s in range(2))
    assert ml_h(plane).is_full
    odd = SkewRing.uniform(3, 2, 1)
    witnesses = [t_set(odd, s) for s in range(3)]
    # x2x3, x1x3, x1x2
    assert [w.full_exponent() for w in witnesses] == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    for s, w in enumerate(witnesses):
        assert w.witness in tset_scan(odd, s)
    assert ml_h(odd).is_trivial


# 4 -------------------------------------------------------------------------

@record(4, "witness verification suite and three mutants", 30.0)
def criterion_4():
    rings = [SkewRing.uniform(3, 2, 1), SkewRing.uniform(3, 3, 1),
             SkewRing(3, 4, {(0, 1): 1, (1, 2): 2})]
    derivations = []
    for R in rings:
        for s in range(R.n):
            t = t_set(R, s)
            if not t.empty:
                derivations.append(lnd_witness(R, s, t.witness))
    # A[t] with t a commuting variable
    At = tensor([SkewRing.uniform(2, 2, 1), SkewRing(1, names=("t",))])
    derivations.append(divided_power_derivation(At, 2))
    derivations.append(divided_power_derivation(SkewRing(2, names=("t1", "t2")), 0))
    assert len(derivations) >= 8
    for D in derivations:
        for check in (verify_higher_leibniz, verify_iterative, verify_locally_nilpotent):
            res = check(D, 4, 8)
            assert res.passed, (D.tag, check.__name__, res)

    R = rings[0]
    D = lnd_witness(R, 0, (1, 1))
    m1 = HigherDerivation(R, lambda i, mono: D.on_monomial(i, mono) * 2
                          if i == 1 and sum(mono) % 2 else D.on_monomial(i, mono))
    m2 = HigherDerivation(R, lambda i, mono: R.monomial(mono) if mono[0] else R.zero())
    m3 = HigherDerivation(R, lambda i, mono: D.on_monomial(i // 2, mono) if i % 2 == 0 else R.zero())
    assert not verify_higher_leibniz(m1, 4, 8).passed
    lnd = verify_locally_nilpotent(m2, 4, 8)
    assert not lnd.passed and "annihilated" in lnd.detail
    assert verify_higher_leibniz(m3, 4, 8).passed and not verify_iterative(m3, 4, 8).passed


# 5 -------------------------------------------------------------------------

def random_noncommutative_skew(rng):
    while True:
        n, m = rng.randint(2, 4), rng.randint(2, 6)
        R = SkewRing(n, m, {(i, j): rng.randrange(m) for i in range(n) for j in range(i + 1, n)})
        if not R.is_commutative:
            return R


@record(5, "equivalence audit over 60 random torsion skew rings", 300.0)
def criterion_5():
    rng = random.Random(20240517)
    with_five = 0
    for _ in range(60):
        R = random_noncommutative_skew(rng)
        C = center_lattice(R)
        c3 = all(g >= 2 for g in coordinate_gcds(C.lattice))
        rigid = all(t_set(R, s).empty for s in range(R.n))
        assert c3 == rigid, R
        if C.rectangular is not None:
            d = discriminant(R, C).normalized
            assert d.is_monomial()
            (mono,) = d.terms
            c5 = all(e >= 1 for e in mono)
            assert c5 == c3, R
            # the generators dividing d are exactly those with T_s empty
            assert {i for i, e in enumerate(mono) if e} == {s for s in range(R.n) if t_set(R, s).empty}
            with_five += 1
        analyze(R)  # raises if its own computed conditions disagree
    assert with_five >= 10


# 6 -------------------------------------------------------------------------

@record(6, "verdict goldens", 1.0)
def criterion_6():
    assert analyze(SkewRing.uniform(2, 2, 1)).conclusion == Conclusion.STRONGLY
    generic = SkewRing(2, 1, {(0, 1): ParamExponent(0, (1,))}, free_rank=1)
    assert analyze(generic).conclusion == Conclusion.UNIVERSALLY
    assert analyze(SkewRing.uniform(3, 2, 1)).conclusion == Conclusion.OPEN


# 7 -------------------------------------------------------------------------

@record(7, "tensor closure for two copies of k_{-1}[x1,x2]", 120.0)
def criterion_7():
    T = tensor([SkewRing.uniform(2, 2, 1), SkewRing.uniform(2, 2, 1, names=("y1", "y2"))])
    direct = discriminant(T, method="direct")
    kron = discriminant(T, method="auto")
    assert direct.normalized == kron.normalized and direct.unit == kron.unit
    assert direct.normalized.is_monomial()
    (mono,) = direct.normalized.terms
    assert all(e >= 1 for e in mono)
    assert analyze(T).conclusion == Conclusion.STRONGLY


# 8 -------------------------------------------------------------------------

def random_cyclo(rng, m):
    return Cyclo(m, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(euler_phi(m))])


@record(8, "infrastructure properties (HNF/SNF, field axioms, associativity)", 60.0)
def criterion_8():
    rng = random.Random(8)
    for _ in range(200):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        M = [[rng.randint(-30, 30) for _ in range(c)] for _ in range(r)]
        H, U = hnf(M)
        assert matmul(U, M) == H and abs(det(U)) == 1
        D, U2, V = snf(M)
        assert matmul(matmul(U2, M), V) == D
        assert abs(det(U2)) == 1 and abs(det(V)) == 1
    for _ in range(200):
        m = rng.choice([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12])
        a, b, c = (random_cyclo(rng, m) for _ in range(3))
        one, zero = Cyclo.one(m), Cyclo.zero(m)
        assert a + b == b + a and a * b == b * a
        assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a and a * one == a and a + (-a) == zero
        if a:
            assert a * a.inverse() == one
    families = {
        "skew": SkewRing(3, 6, {(0, 1): 1, (0, 2): 2, (1, 2): 5}),
        "weyl": WeylRing(3, 1),
        "tensor": tensor([SkewRing.uniform(2, 2, 1, names=("a", "b")), WeylRing(2, 1)]),
    }
    for R in families.values():
        for _ in range(100):
            a, b, c = (R.from_dict({tuple(rng.randint(0, 2) for _ in range(R.ngens)): rng.randint(-3, 3)
                                    for _ in range(2)}) for _ in range(3))
            assert (a * b) * c == a * (b * c)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f"criterion_{f.number}")
def test_criterion(criterion):
    criterion()


if __name__ == "__main__":
    for crit in CRITERIA:
        try:
            crit()
        except Exception:
            pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all(v[0] for v in RESULTS.values()) else 1)
