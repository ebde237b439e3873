import itertools

import pytest

from crossinv.algebra import RingAutomorphism, cyclic, make_zmod
from crossinv.modcat import FGF
from crossinv.strictify import (InvolutionAction, RestrictionAction, StrictInvolution, StrictObject,
                                Strictification, verify_adjunction, verify_strict_action,
                                verify_strict_involution, verify_weak_axioms)
from crossinv.twist import TwistData
from instances import f25, z5


def strict(t):
    return Strictification(RestrictionAction(FGF(t)))


class ScaledL(RestrictionAction):
    """L_{t,t} multiplied by an extra scalar: breaks the coherence square over Z/3."""

    def L(self, g, h, A):
        f = super().L(g, h, A)
        if g == h == 1:
            R = self.base.ring
            return self.base.mor(f.source, f.target, [[R.mul(2, f.matrix[i, j]) for j in range(A.rank)]
                                                      for i in range(A.rank)])
        return f


@pytest.mark.parametrize("w", [1, 4])
def test_strict_action_z5(w):
    S = strict(z5(w))
    rep = verify_strict_action(S, 2)
    assert rep.all_passed
    assert rep.get("strict.R-strict").checked >= 500
    assert verify_adjunction(S, 1).all_passed
    assert verify_strict_involution(S, 2).all_passed


def test_strict_action_f25():
    S = strict(f25())
    assert verify_strict_action(S, 1).all_passed
    assert verify_strict_involution(S, 1).all_passed


def test_strict_action_is_exact_on_rank_one():
    t = z5(1)
    S = strict(t)
    cat = S.base
    objs = S.objects(1, min_rank=1)
    for X, Y in itertools.product(objs, repeat=2):
        homs = list(S.hom(X, Y))
        assert len(homs) == 5
        for phi in homs:
            for g1, g2 in itertools.product(range(2), repeat=2):
                assert S.act(g2, S.act(g1, phi)) == S.act(t.group.mul(g1, g2), phi)
    assert cat.hom_size(cat.plain(1), cat.plain(1)) == 5


def test_twisting_by_tau():
    # R^S_t on (R,e) -> (R,e) given by [1] is conjugated by L_{e,t} and L_{e,t}^-1: still [1]
    S = strict(z5(1))
    cat = S.base
    X = StrictObject(cat.plain(1), 0)
    phi = S.identity(X)
    assert S.act(1, phi) == S.identity(StrictObject(cat.plain(1), 1))
    # on (R,t) -> (R,t), R^S_t passes through L_{t,t} = tau(t,t) = 2 and its inverse
    Y = StrictObject(cat.plain(1), 1)
    psi = S.mor(Y, Y, cat.mor(cat.obj(1, [1]), cat.obj(1, [1]), [[3]]))
    out = S.act(1, psi)
    assert out.source == StrictObject(cat.plain(1), 0)
    assert out.mor.matrix[0, 0] == 3


def test_broken_coherence_is_detected():
    R = make_zmod(5)
    ident = RingAutomorphism.identity(R)
    t = TwistData(cyclic(3), R, (ident,) * 3, [[1] * 3] * 3)
    good = RestrictionAction(FGF(t))
    assert verify_weak_axioms(good, 1).all_passed
    bad = ScaledL(FGF(t))
    rep = verify_weak_axioms(bad, 1)
    assert not rep.passed("weak.pentagon")
    S = Strictification(bad)
    assert not verify_strict_action(S, 1).ok


def test_involution_as_weak_action():
    rep = verify_weak_axioms(InvolutionAction(FGF(z5(4))), 2)
    assert rep.all_passed


def test_strict_involution_commutes_with_action():
    S = strict(z5(4))
    inv = StrictInvolution(S)
    for X in S.objects(1):
        for g in range(2):
            assert inv.obj(S.act_obj(g, X)) == S.act_obj(g, inv.obj(X))
            assert inv.T(g, X) == S.identity(inv.obj(S.act_obj(g, X)))
