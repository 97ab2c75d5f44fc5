import random

import pytest

from oracles import Rewriter
from zcancel.errors import NonTorsionError, ValidationError
from zcancel.rings import (
    ParamExponent,
    SkewRing,
    TensorRing,
    WeylRing,
    commutation_scalar,
    degree,
    gk_dimension,
    tensor,
)
from zcancel.scalars import zeta_power

FAMILIES = {
    "skew": SkewRing(3, 6, {(0, 1): 1, (0, 2): 4, (1, 2): 3}),
    "weyl": WeylRing(3, 1),
    "weyl-other": WeylRing(4, 1, "yx-qxy-1"),
    "tensor": tensor([SkewRing.uniform(2, 2, 1, names=("a", "b")), WeylRing(3, 2, names=("x", "y"))]),
}


def test_quantum_plane_relations():
    R = SkewRing.uniform(2, 2, 1)
    x1, x2 = R.gens()
    assert x2 * x1 == -(x1 * x2)
    assert (x1 * x2) ** 2 == -(x1 ** 2 * x2 ** 2)


@pytest.mark.parametrize("m", [2, 3, 5])
@pytest.mark.parametrize("orientation", ["xy-qyx-1", "yx-qxy-1"])
def test_weyl_relation(m, orientation):
    R = WeylRing(m, 1, orientation)
    x, y = R.gens()
    q = zeta_power(m, 1)
    if orientation == "xy-qyx-1":
        assert x * y - y * x * q == 1
    else:
        assert y * x - x * y * q == 1


def test_weyl_minus_one():
    R = WeylRing(2, 1)
    x, y = R.gens()
    assert y * x == -(x * y) + 1


def test_weyl_requires_q_not_one():
    with pytest.raises(ValidationError):
        WeylRing(3, 0)


def test_bad_param_index():
    with pytest.raises(ValidationError):
        SkewRing(2, 2, {(1, 0): 1})


def random_element(R, rng, terms=3, deg=3):
    return R.from_dict({tuple(rng.randint(0, deg) for _ in range(R.ngens)): rng.randint(-3, 3)
                        for _ in range(terms)})


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_product_matches_rewriting(name):
    R = FAMILIES[name]
    rw = Rewriter(R)
    rng = random.Random(7)
    for _ in range(30):
        u, v = random_element(R, rng), random_element(R, rng)
        assert (u * v).terms == rw.mul_elements(u.terms, v.terms)


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_associativity_and_distributivity(name):
    R = FAMILIES[name]
    rng = random.Random(11)
    for _ in range(20):
        a, b, c = (random_element(R, rng, deg=2) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_commutation_scalar():
    R = SkewRing.uniform(2, 4, 1)
    c = commutation_scalar(R, (0, 1), (1, 0))
    assert c.torsion == 1
    x1, x2 = R.gens()
    assert x2 * x1 == (x1 * x2) * c.evaluate(4)


def test_tensor_rescales_and_flattens():
    T = tensor([SkewRing.uniform(2, 2, 1), tensor([WeylRing(3, 1, names=("x", "y"))])])
    assert isinstance(T, TensorRing)
    assert T.m == 6
    assert T.names == ("x1", "x2", "x", "y")
    with pytest.raises(ValidationError):
        tensor([SkewRing.uniform(2, 2, 1), SkewRing.uniform(2, 2, 1)])


def test_as_skew_matches_tensor_product():
    T = tensor([SkewRing.uniform(2, 2, 1), SkewRing.uniform(2, 3, 1, names=("y1", "y2"))])
    S = T.as_skew()
    rng = random.Random(3)
    for _ in range(20):
        a = tuple(rng.randint(0, 3) for _ in range(4))
        b = tuple(rng.randint(0, 3) for _ in range(4))
        assert T.mul_monomials(a, b) == S.mul_monomials(a, b)


def test_non_torsion_arithmetic_rejected():
    R = SkewRing(2, 1, {(0, 1): ParamExponent(0, (1,))}, free_rank=1)
    with pytest.raises(NonTorsionError):
        R.gen(0) * R.gen(1)


def test_degree_and_gk():
    R = SkewRing.uniform(3, 2, 1)
    x1, x2, x3 = R.gens()
    assert degree(x1 * x2 ** 2 + x3) == 3
    assert gk_dimension(R) == 3
    assert str(x2 * x1) == "-x1*x2"
