import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from crossinv.algebra import cyclic, make_zmod
from crossinv.crossed import (CrossedProduct, commutativity_witness, verify_crossed_product,
                              verify_extension_isomorphism)
from crossinv.twist import twist_from_extension, w1_involution, w_from_w1
from instances import f25, untwisted_z2, z5

X = 5


def dense(cp, a):
    return [a.coeff(g, cp.ring.zero) for g in cp.group.elements()]


def extension_z4():
    Z2 = cyclic(2)
    t = twist_from_extension(Z2, cyclic(4), Z2, [0, 2], [0, 1, 0, 1], [0, 1], make_zmod(2))
    w1 = (1, 1, 1, 1)
    return t.with_involution(w1_involution(t, w1), w_from_w1(t, w1)), w1


INSTANCES = {"z2": untwisted_z2, "z5w1": lambda: z5(1), "z5w4": lambda: z5(4), "f25": f25,
             "ext": lambda: extension_z4()[0]}


@pytest.mark.parametrize("name", INSTANCES)
def test_mul_and_involution_match_dense_oracle(name):
    t = INSTANCES[name]()
    cp = CrossedProduct(t)
    basis = cp.basis_elements()
    for x, y in itertools.product(basis, repeat=2):
        assert dense(cp, cp.mul(x, y)) == oracles.dense_mul(t, dense(cp, x), dense(cp, y))
    for x in basis:
        assert dense(cp, cp.involution(x)) == oracles.dense_star(t, dense(cp, x))


@pytest.mark.parametrize("name,triples", [("z2", 64), ("z5w1", 1000), ("z5w4", 1000), ("f25", 125_000)])
def test_axioms_exhaustive(name, triples):
    rep = verify_crossed_product(INSTANCES[name]())
    assert rep.all_passed
    rec = rep.get("cp.associative")
    assert rec.mode == "exhaustive" and rec.checked == triples


def test_f25_is_noncommutative():
    t = f25()
    cp = CrossedProduct(t)
    tt, x = cp.basis(1, 1), cp.scalar(X)
    assert cp.mul(tt, x) == cp.neg(cp.mul(x, tt))
    assert cp.mul(tt, x) != cp.mul(x, tt)
    assert commutativity_witness(t) is not None


def test_z5_is_commutative():
    assert commutativity_witness(z5(1)) is None


def test_z5_t_squared_is_tau():
    cp = CrossedProduct(z5(1))
    tt = cp.basis(1, 1)
    assert cp.mul(tt, tt) == cp.scalar(2)


def test_units_and_inverses():
    cp = CrossedProduct(z5(1))
    tt = cp.basis(1, 1)
    assert cp.mul(tt, cp.inv(tt)) == cp.one
    # 1 + t has (1 + t)(1 - t) = 1 - 2 = -1
    a = cp.add(cp.one, tt)
    assert cp.is_unit(a)
    assert cp.mul(a, cp.inv(a)) == cp.one


def test_zero_divisor_in_f2_z2():
    cp = CrossedProduct(untwisted_z2())
    a = cp.add(cp.one, cp.basis(1, 1))
    assert cp.mul(a, a).is_zero()
    assert not cp.is_unit(a)


def test_extension_isomorphism_onto_z4_group_ring():
    t, w1 = extension_z4()
    rep = verify_extension_isomorphism(t, w1)
    assert rep.all_passed
    assert rep.get("ext.multiplicative").checked == (4 * 2) ** 2


def test_json_round_trip():
    cp = CrossedProduct(f25())
    for a in itertools.islice(cp.elements(), 0, 625, 37):
        assert cp.from_json(cp.to_json(a)) == a


def test_table_shape():
    cp = CrossedProduct(z5(1))
    table = cp.table()
    assert len(table["basis"]) == 10
    assert len(table["products"]) == 10 and all(len(row) == 10 for row in table["products"])
    # row (t, 1), column (t, 1): t t = tau(t,t) e = 2 e
    i = table["basis"].index([1, 1])
    assert table["products"][i][i] == [[0, 2]]


elements = st.lists(st.integers(0, 4), min_size=2, max_size=2)


@settings(max_examples=200)
@given(elements, elements, elements, st.sampled_from([1, 4]))
def test_z5_ring_with_involution_laws(a, b, c, w):
    t = z5(w)
    cp = CrossedProduct(t)
    x, y, z = (cp.element(enumerate(v)) for v in (a, b, c))
    assert cp.mul(cp.mul(x, y), z) == cp.mul(x, cp.mul(y, z))
    assert cp.mul(x, cp.add(y, z)) == cp.add(cp.mul(x, y), cp.mul(x, z))
    assert cp.involution(cp.mul(x, y)) == cp.mul(cp.involution(y), cp.involution(x))
    assert cp.involution(cp.involution(x)) == x


f25_elements = st.lists(st.integers(0, 24), min_size=2, max_size=2)


@settings(max_examples=200)
@given(f25_elements, f25_elements)
def test_f25_involution_anti_multiplicative(a, b):
    cp = CrossedProduct(f25())
    x, y = cp.element(enumerate(a)), cp.element(enumerate(b))
    assert cp.involution(cp.mul(x, y)) == cp.mul(cp.involution(y), cp.involution(x))
    if cp.is_unit(x):
        assert cp.mul(cp.inv(x), x) == cp.one
