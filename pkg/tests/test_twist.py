import pytest

import oracles
from crossinv.algebra import RingInvolution, cyclic, make_zmod
from crossinv.report import SKIP
from crossinv.twist import (TwistData, admissible_w, twist_from_extension, validate_involution_twist,
                            validate_twist, w_from_w1)
from instances import f25, untwisted_z2, z5


def full_validate(t: TwistData) -> bool:
    ok = validate_twist(t).ok
    if ok and t.has_involution:
        ok = validate_involution_twist(t).ok
    return ok


def oracle_valid(t: TwistData) -> bool:
    ok = oracles.is_associative_unital(t)
    if ok and t.has_involution:
        ok = oracles.is_involution(t, t.w, t.bar.images)
    return ok


@pytest.mark.parametrize("tt", [1, 2, 3, 4])
def test_admissible_w_matches_bruteforce(tt):
    t = z5(1, tt)
    assert admissible_w(t, t.bar) == oracles.admissible_w_bruteforce(t, t.bar.images)


def test_z5_admissible_w_is_one_and_four():
    # frozen from the brute-force enumeration above
    t = z5(1, 2)
    assert [w[1] for w in admissible_w(t, t.bar)] == [1, 4]


def test_f25_admissible_w():
    t = f25()
    assert admissible_w(t, t.bar) == oracles.admissible_w_bruteforce(t, t.bar.images) == [(1, 1), (1, 4)]


def test_shipped_instances_are_valid():
    for t in (z5(1), z5(4), f25(), untwisted_z2()):
        assert validate_twist(t).all_passed
        assert validate_involution_twist(t).all_passed


def _tau_mutants(t):
    R, n = t.ring, t.group.order
    for g in range(n):
        for h in range(n):
            for value in range(R.size):
                if value != t.tau[g][h]:
                    yield (g, h, value), t.with_tau(g, h, value)


def _w_mutants(t):
    for g in range(t.group.order):
        for value in range(t.ring.size):
            if value != t.w[g]:
                yield (g, value), t.with_w(g, value)


@pytest.mark.parametrize("make", [lambda: z5(1), lambda: z5(4), untwisted_z2], ids=["z5w1", "z5w4", "z2"])
def test_tau_mutants_agree_with_oracle(make):
    caught = 0
    for where, m in _tau_mutants(make()):
        verdict = full_validate(m)
        assert verdict == oracle_valid(m), where
        caught += not verdict
    assert caught > 0


@pytest.mark.parametrize("make", [lambda: z5(1), lambda: z5(4), f25, untwisted_z2], ids=["z5w1", "z5w4", "f25", "z2"])
def test_w_mutants_agree_with_oracle(make):
    t = make()
    for where, m in _w_mutants(t):
        assert full_validate(m) == oracles.is_involution(m, m.w, m.bar.images), where


def test_every_w_mutant_of_z5_is_caught():
    for w in (1, 4):
        for where, m in _w_mutants(z5(w)):
            if m.w not in ((1, 1), (1, 4)):
                assert not validate_involution_twist(m).ok, where


def test_tau_unit_normalization_mutants_are_caught():
    t = z5(1)
    for g in range(2):
        for value in (0, 2, 3, 4):
            assert not validate_twist(t.with_tau(0, g, value)).ok
            assert not validate_twist(t.with_tau(g, 0, value)).ok


def test_non_unit_tau_skips_dependent_checks():
    rep = validate_twist(z5(1, 0))
    assert rep.get("twist.tau-units").witness == {"g": 1, "h": 1, "tau": 0}
    assert rep.get("twist.cocycle").status == SKIP


def test_bad_w_witness():
    rep = validate_involution_twist(z5(2))
    # w(t)^-1 = 3 but the formula gives w(t) tau(t,t) bar(tau(t,t))^-1 = 2
    assert rep.get("w.inverse").witness == {"g": 1, "w": 2, "formula": 2}


def test_twist_shape_errors():
    t = z5(1)
    with pytest.raises(ValueError):
        TwistData(t.group, t.ring, t.c, [[1, 1]], t.bar, t.w)
    with pytest.raises(ValueError):
        TwistData(t.group, t.ring, t.c, [[1, 1], [1, 9]], t.bar, t.w)


def test_extension_z4_twist():
    Z2, Z4 = cyclic(2), cyclic(4)
    t = twist_from_extension(Z2, Z4, Z2, [0, 2], [0, 1, 0, 1], [0, 1], make_zmod(2))
    assert validate_twist(t).all_passed
    # tau(t,t) = s(t)^2 = 2 in Z/4, the kernel generator h; as an element of F_2[Z/2] it has index 2
    assert t.tau[1][1] == 2
    # w(t) = w1(s(t)) tau(t,t)^-1 = h^-1 = h
    assert w_from_w1(t, [1, 1, 1, 1]) == (1, 2)


def test_extension_rejects_bad_section():
    Z2, Z4 = cyclic(2), cyclic(4)
    with pytest.raises(ValueError):
        twist_from_extension(Z2, Z4, Z2, [0, 2], [0, 1, 0, 1], [0, 2], make_zmod(2))
    with pytest.raises(ValueError):
        twist_from_extension(Z2, Z4, Z2, [0, 1], [0, 1, 0, 1], [0, 1], make_zmod(2))


def test_identity_involution_accepted_on_commutative_ring():
    R = make_zmod(3)
    t = TwistData.untwisted(cyclic(3), R, RingInvolution.identity(R))
    assert validate_involution_twist(t).all_passed
