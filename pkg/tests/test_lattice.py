import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from zcancel.lattice import (
    CongruenceSystem,
    IntegerLattice,
    coordinate_gcds,
    det,
    has_nonzero_nonneg_vector,
    hnf,
    lattice_index,
    matmul,
    snf,
    solve,
)

matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_hnf_identity_and_shape(M):
    H, U = hnf(M)
    assert matmul(U, M) == H
    assert abs(det(U)) == 1
    last = -1
    for row in H:
        nz = [k for k, v in enumerate(row) if v]
        if not nz:
            last = len(row)
            continue
        assert last < nz[0], "pivots move right and zero rows are last"
        last = nz[0]
        assert row[nz[0]] > 0


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_snf_identity_and_divisibility(M):
    D, U, V = snf(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    for i in range(len(D)):
        for j in range(len(D[0])):
            if i != j:
                assert D[i][j] == 0
    nz = [d for d in diag if d]
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    ref = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
    ref_diag = sorted(abs(ref[i, i]) for i in range(min(ref.shape)))
    assert sorted(diag) == ref_diag


def test_lattice_membership_and_index():
    L = IntegerLattice(2, [[2, 0], [0, 2]])
    assert (4, -2) in L and (1, 0) not in L
    assert lattice_index(L) == 4
    assert L.rectangular() == (2, 2)
    L2 = IntegerLattice(3, [[1, 1, 1], [2, 0, 0], [0, 2, 0], [0, 0, 2]])
    assert L2.rectangular() is None
    assert coordinate_gcds(L2) == (1, 1, 1)
    assert lattice_index(L2) == 4


def test_direct_sum_and_full():
    L = IntegerLattice.direct_sum([IntegerLattice.full(2, 3), IntegerLattice.full(1, 5)])
    assert L.rectangular() == (3, 3, 5)


def test_nonneg_vector_search():
    assert has_nonzero_nonneg_vector(IntegerLattice(2, []))[0] is False
    assert has_nonzero_nonneg_vector(IntegerLattice(2, [[1, -1]]))[0] is False
    found, w = has_nonzero_nonneg_vector(IntegerLattice(2, [[1, -1], [0, 3]]))
    assert found and all(x >= 0 for x in w) and any(w)


def brute(system, box):
    from itertools import product
    return [d for d in product(range(-box, box + 1), repeat=system.nvars) if system.satisfied_by(d)]


@pytest.mark.parametrize("seed", range(40))
def test_solve_against_enumeration(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    rows = rng.randint(1, 3)
    m = rng.choice([2, 3, 4, 6])
    A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rows)]
    b = [rng.randint(-3, 3) for _ in range(rows)]
    mods = [rng.choice([m, m, 0]) for _ in range(rows)]
    system = CongruenceSystem(A, b, mods, nvars=n)
    sol = solve(system)
    hits = brute(system, 6)
    if sol is None:
        assert hits == []
        return
    assert system.satisfied_by(sol.particular)
    for v in sol.kernel.basis:
        hom = CongruenceSystem(A, [0] * rows, mods, nvars=n)
        assert hom.satisfied_by(v)
    for d in hits:
        diff = tuple(x - y for x, y in zip(d, sol.particular))
        assert diff in sol.kernel


def test_unsolvable_free_row():
    assert solve(CongruenceSystem([[0]], [1], [0], nvars=1)) is None
