import itertools

import pytest

from crossinv.algebra import cyclic, direct_product
from crossinv.bridge import one_object_hocolim, strict_fiber
from crossinv.groupoid import FiniteGroupoid, GroupoidFunctor, transport_groupoid
from crossinv.hocolim import (FiberFunctor, HcObject, Hocolim, hc_pushforward, oplus_complete, pullback,
                              verify_hc_map, verify_hocolim, verify_hocolim_involution, verify_oplus,
                              verify_push_map_compat, verify_pushforward)
from crossinv.strictify import SMorphism, StrictInvolution, StrictObject
from instances import f25, z5


def e_obj(hc, m=1, x=0, label=0):
    return HcObject(x, StrictObject(hc.fiber.base.plain(m), label))


def single(hc, a, value, m=1):
    """a . [value]: (R^m,e) -> (R^m,e) with a scalar component at the arrow a."""
    S, cat = hc.fiber, hc.fiber.base
    X = e_obj(hc, m)
    target = hc.F_obj(a, X.A)
    f = cat.mor(S.underlying(X.A), S.underlying(target), [[value if i == j else 0 for j in range(m)] for i in range(m)])
    return hc.mor(X, X, [(a, SMorphism(X.A, target, f))])


@pytest.mark.parametrize("w", [1, 4])
def test_z5_hocolim_and_involution(w):
    hc = one_object_hocolim(z5(w))
    assert verify_hocolim(hc, 2).all_passed
    rep = verify_hocolim_involution(hc, 2)
    assert rep.all_passed
    # frozen counts: every hom-set at rank <= 1 is enumerated, rank 2 is sampled
    assert rep.meta["exhaustive_morphisms"] == 112
    assert rep.get("hinv.contravariant").checked >= 500


def test_f25_hocolim_and_involution():
    hc = one_object_hocolim(f25())
    assert verify_hocolim(hc, 1).all_passed
    assert verify_hocolim_involution(hc, 1).all_passed


def test_rank_one_hom_set_size():
    # sum over arrows of rank-1 fiber hom-sets: |R|^|G| = 25
    hc = one_object_hocolim(z5(1))
    X = e_obj(hc)
    assert hc.hom_size(X, X) == 25 == len(set(hc.hom(X, X)))


def test_composition_picks_up_tau():
    # (t.[b]) o (t.[a]) = e.[a b tau(t,t)^-1] = e.[3ab]
    hc = one_object_hocolim(z5(1))
    for a, b in itertools.product(range(1, 5), repeat=2):
        out = hc.compose(single(hc, 1, b), single(hc, 1, a))
        assert out == single(hc, 0, (3 * a * b) % 5)


def test_sum_of_terms_and_zero():
    hc = one_object_hocolim(z5(1))
    phi = hc.add(single(hc, 0, 2), single(hc, 1, 3))
    assert len(phi.terms) == 2
    assert hc.is_zero(hc.add(phi, hc.neg(phi)))
    assert hc.mor(phi.source, phi.target, list(phi.terms) + list(hc.neg(phi).terms)).terms == ()


def test_single_term_inverse_and_iso_to_base():
    hc = one_object_hocolim(z5(4))
    phi = single(hc, 1, 2)
    inv = hc.inverse(phi)
    assert hc.compose(inv, phi) == hc.identity(phi.source)
    assert hc.compose(phi, inv) == hc.identity(phi.target)
    Y = e_obj(hc, 2, label=1)
    iso = hc.iso_from_base(Y, 0)
    assert hc.compose(hc.inverse(iso), iso) == hc.identity(iso.source)


def test_proj_must_be_functor():
    S, inv = strict_fiber(z5(1))
    grp = FiniteGroupoid.from_group(cyclic(4))
    with pytest.raises(ValueError):
        Hocolim(grp, [0, 1, 1, 1], S, inv)


class DoubledDual(StrictInvolution):
    """I scaled by 2: additive but no longer contravariant."""

    def mor(self, phi):
        out = super().mor(phi)
        cat = self.cat
        M = out.mor.matrix
        f = cat.mor(out.mor.source, out.mor.target, [[cat.ring.mul(2, M[i, j]) for j in range(M.shape[1])]
                                                     for i in range(M.shape[0])])
        return SMorphism(out.source, out.target, f)


def test_broken_involution_is_caught():
    S, _ = strict_fiber(z5(1))
    grp = FiniteGroupoid.from_group(cyclic(2))
    hc = Hocolim(grp, [0, 1], S, DoubledDual(S))
    rep = verify_hocolim_involution(hc, 1)
    assert not rep.passed("hinv.contravariant")
    assert rep.get("hinv.contravariant").witness is not None


@pytest.fixture(scope="module")
def setting():
    t = z5(4)
    S, inv = strict_fiber(t)
    grp = FiniteGroupoid.from_group(t.group)
    hc = Hocolim(grp, [0, 1], S, inv)
    K = direct_product(cyclic(2), cyclic(2))
    T = transport_groupoid(K, [0, 1], lambda g, x: (g % 2 + x) % 2)
    hcT = Hocolim(T, [T.arrows[a].label // 2 for a in range(len(T.arrows))], S, inv)
    return S, inv, grp, hc, T, hcT


def test_pushforward_along_inclusion(setting):
    S, inv, grp, hc, T, hcT = setting
    W = GroupoidFunctor(grp, T, (0,), (0, 2))
    assert W.is_functor() and W.is_equivalence()
    assert verify_pushforward(W, hcT).all_passed


def test_pushforward_along_collapse(setting):
    S, inv, grp, hc, T, hcT = setting
    C = GroupoidFunctor(T, grp, (0, 0), tuple(T.arrows[a].label // 2 for a in range(len(T.arrows))))
    assert verify_pushforward(C, hc).all_passed


def test_pushforward_merges_terms(setting):
    # Z/4 -> Z/2 is not faithful: distinct arrows land on the same arrow and terms add up
    S, inv, grp, hc, T, hcT = setting
    g4 = FiniteGroupoid.from_group(cyclic(4))
    M = GroupoidFunctor(g4, grp, (0,), (0, 1, 0, 1))
    rep = verify_pushforward(M, hc)
    assert rep.all_passed and "push.full-faithful" not in rep.ids()
    src = pullback(hc, M)
    phi = src.add(single(src, 1, 2), single(src, 3, 4))
    assert len(phi.terms) == 2
    assert hc_pushforward(M, hc, phi) == single(hc, 1, 1)


def test_fiber_functor_and_oplus(setting):
    S, inv, grp, hc, T, hcT = setting
    Sf = FiberFunctor(lambda X: S.act_obj(1, X), lambda f: S.act(1, f),
                      lambda X: S.identity(inv.obj(S.act_obj(1, X))))
    assert verify_hc_map(Sf, hc, hc, equivalence=True).all_passed
    W = GroupoidFunctor(grp, T, (0,), (0, 2))
    assert verify_push_map_compat(Sf, W, hcT).all_passed
    O = oplus_complete(hc, hc.involution)
    assert verify_oplus(O, hc.objects(1)).all_passed
