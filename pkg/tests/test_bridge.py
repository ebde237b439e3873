import itertools

import pytest

import oracles
from crossinv import matrix as mx
from crossinv.bridge import Bridge, additive_generators, check_e_inclusion, verify_alpha, verify_beta
from crossinv.cli import morphism_from_json
from crossinv.algebra import make_zmod
from crossinv.report import PASS
from instances import f25, untwisted_z2, z5


def mor(b, components, m=1, n=1):
    return morphism_from_json(b, {"source_rank": m, "target_rank": n,
                                  "components": {str(g): rows for g, rows in components.items()}})


def test_alpha_check_value_z5():
    # t.[3] -> tau(t,t)^-1 t 3 = 3 * 3 t = 4t
    b = Bridge(z5(1))
    M = b.alpha(mor(b, {1: [[3]]}))
    assert M.rows[0][0] == b.cp.basis(4, 1)


def test_alpha_check_value_f25():
    # t.[x] -> tau(t,t)^-1 t x = -(-x) t = x t
    b = Bridge(f25())
    M = b.alpha(mor(b, {1: [[5]]}))
    assert M.rows[0][0] == b.cp.basis(5, 1)


@pytest.mark.parametrize("w", [1, 4])
def test_bridge_z5(w):
    b = Bridge(z5(w))
    rep = verify_alpha(b, 1)
    assert rep.all_passed
    assert rep.meta["rank1_hom_size"] == rep.meta["crossed_product_size"] == 25
    assert rep.get("alpha.functor").mode == "exhaustive"
    assert verify_beta(b, 1).all_passed
    assert check_e_inclusion(z5(w), 1).all_passed


def test_bridge_f25():
    b = Bridge(f25())
    rep = verify_alpha(b, 1)
    assert rep.all_passed
    assert rep.meta["rank1_hom_size"] == 625
    assert verify_beta(b, 1).all_passed


def test_bridge_rank_two_z2():
    b = Bridge(untwisted_z2())
    assert verify_alpha(b, 2).all_passed
    assert verify_beta(b, 2).all_passed


def test_beta_is_identity():
    for t in (z5(1), z5(4), f25()):
        b = Bridge(t)
        for m in (1, 2):
            assert b.beta(m) == mx.identity(b.cp, m)


def test_alpha_reverses_composition_against_dense_oracle():
    t = z5(4)
    b = Bridge(t)
    X = b.e_obj(1)
    homs = list(b.hc.hom(X, X))
    for phi, psi in itertools.product(homs, repeat=2):
        lhs = b.alpha(b.hc.compose(psi, phi)).rows[0][0]
        a, c = b.alpha(phi).rows[0][0], b.alpha(psi).rows[0][0]
        dense = lambda e: [e.coeff(g, 0) for g in range(2)]
        assert dense(lhs) == oracles.dense_mul(t, dense(a), dense(c))


def test_alpha_of_dual_is_conjugate_transpose():
    b = Bridge(f25())
    X, Y = b.e_obj(1), b.e_obj(2)
    import random
    rng = random.Random(3)
    for _ in range(50):
        phi = b.hc.random_mor(X, Y, rng)
        assert b.alpha(b.hc.dual(phi)) == b.conj_transpose(b.alpha(phi))


def test_additive_generators():
    assert additive_generators(make_zmod(6)) == [1]
    assert additive_generators(f25().ring) == [1, 5]


class NoTau(Bridge):
    """alpha without the tau(g^-1,g)^-1 factor."""

    def alpha(self, phi):
        cp = self.cp
        m, n = self.rank(phi.source), self.rank(phi.target)
        rows = [[cp.zero] * n for _ in range(m)]
        for g, comp in phi.terms:
            pre = cp.basis(self.twist.ring.one, self.twist.group.inv(g))
            for i, j in itertools.product(range(m), range(n)):
                rows[i][j] = cp.add(rows[i][j], cp.mul(pre, cp.scalar(comp.mor.matrix[i, j])))
        return mx.Matrix(rows, m, n)


def test_dropping_tau_breaks_functoriality():
    rep = verify_alpha(NoTau(z5(1)), 1)
    assert rep.get("alpha.functor").status != PASS
    assert rep.get("alpha.bijective").status == PASS


def test_beta_without_involution_raises():
    from dataclasses import replace
    t = replace(z5(1), bar=None, w=None)
    with pytest.raises(ValueError):
        verify_beta(Bridge(t), 1)
