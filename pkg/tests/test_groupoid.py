import itertools

import pytest

from crossinv.algebra import cyclic, dihedral, direct_product
from crossinv.groupoid import FiniteGroupoid, GroupoidFunctor, identity_functor, transport_groupoid, verify_groupoid


def test_one_object_groupoid():
    G = dihedral(3)
    grp = FiniteGroupoid.from_group(G)
    assert grp.n_objects == 1 and len(grp.arrows) == 6
    assert all(grp.arrows[g].label == g for g in G.elements())
    assert all(grp.compose(h, g) == G.mul(h, g) for g, h in itertools.product(G.elements(), repeat=2))
    assert verify_groupoid(grp).all_passed


def test_transport_groupoid_of_cosets():
    # Z/4 acting on Z/4 / {0,2}: two points, stabilizers of order 2
    G = cyclic(4)
    grp = transport_groupoid(G, ["a", "b"], lambda g, x: (x + g) % 2)
    assert verify_groupoid(grp).all_passed
    assert grp.connected
    assert len(grp.hom(0, 0)) == 2 and len(grp.hom(0, 1)) == 2


def test_transport_rejects_non_action():
    with pytest.raises(ValueError):
        transport_groupoid(cyclic(3), [0, 1], lambda g, x: (x + g) % 2)


def test_disconnected():
    grp = transport_groupoid(cyclic(2), [0, 1], lambda g, x: x)
    assert not grp.connected


def test_functor_checks():
    G = cyclic(2)
    grp = transport_groupoid(G, [0, 1], lambda g, x: (x + g) % 2)
    # a free transitive Z/2-set is equivalent to the trivial group, not to Z/2
    trivial = FiniteGroupoid.from_group(cyclic(1))
    to_point = GroupoidFunctor(grp, trivial, (0, 0), (0, 0, 0, 0))
    assert to_point.is_functor() and to_point.is_equivalence()
    one_object = FiniteGroupoid.from_group(G)
    labels = GroupoidFunctor(grp, one_object, (0, 0), tuple(a % 2 for a in range(4)))
    assert labels.is_functor() and not labels.is_equivalence()
    not_functor = GroupoidFunctor(grp, one_object, (0, 0), (1, 1, 1, 1))
    assert not not_functor.is_functor()
    assert identity_functor(grp).then(labels) == labels


def test_composition_failure_message():
    grp = transport_groupoid(cyclic(2), [0, 1], lambda g, x: x)
    with pytest.raises(ValueError):
        grp.compose(2, 0)


def test_product_action_biset():
    # (g,k).(y,x) = (k y g^-1, g x) on G x G, G = Z/3
    G = cyclic(3)
    GK = direct_product(G, G)

    def act(gk, i):
        g, k = divmod(gk, 3)
        y, x = divmod(i, 3)
        return G.mul(G.mul(k, y), G.inv(g)) * 3 + G.mul(g, x)

    grp = transport_groupoid(GK, list(range(9)), act)
    assert verify_groupoid(grp).all_passed
    assert grp.connected
