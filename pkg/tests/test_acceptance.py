"""End-to-end acceptance: one check per criterion, each within its time bound.

Every test prints a single ``criterion N: PASS|FAIL`` line with its runtime.
"""

import json
import time

import pytest

import oracles
from crossinv.algebra import cyclic
from crossinv.bridge import (Bridge, InductionSetup, check_induction_isos, one_object_hocolim, strict_fiber,
                             verify_alpha, verify_beta)
from crossinv.cli import main, run_campaign
from crossinv.config import load_config
from crossinv.crossed import CrossedProduct, verify_crossed_product, verify_extension_isomorphism
from crossinv.hocolim import verify_hocolim_involution
from crossinv.modcat import FGF, verify_involution_compat, verify_weak_action
from crossinv.strictify import RestrictionAction, Strictification, verify_adjunction, verify_strict_action
from crossinv.twist import admissible_w, validate_involution_twist, validate_twist
from instances import CONFIGS

RESULTS = {}


def twist(name):
    return load_config(CONFIGS / f"{name}.json").twist


def report_line(capsys, n, ok, elapsed, bound, note=""):
    status = "PASS" if ok and (bound is None or elapsed < bound) else "FAIL"
    limit = f" < {bound:g}s" if bound is not None else ""
    line = f"criterion {n}: {status}  {elapsed:.2f}s{limit}  {note}".rstrip()
    RESULTS[n] = line
    with capsys.disabled():
        print("\n" + line)
    return status == "PASS"


def timed(fn):
    start = time.perf_counter()
    ok, note = fn()
    return ok, note, time.perf_counter() - start


def _validates(t):
    ok = validate_twist(t).ok
    return ok and (not t.has_involution or validate_involution_twist(t).ok)


def _oracle(t):
    ok = oracles.is_associative_unital(t)
    return ok and (not t.has_involution or oracles.is_involution(t, t.w, t.bar.images))


def criterion_1():
    t = twist("z5-twisted-w1")
    found = {w[1] for w in admissible_w(t, t.bar)}
    brute = {w[1] for w in oracles.admissible_w_bruteforce(t, t.bar.images)}
    agree = caught = mutants = 0
    for base in (t, twist("z5-twisted-w4")):
        for g in range(2):
            for h in range(2):
                for v in range(5):
                    if v != base.tau[g][h]:
                        m = base.with_tau(g, h, v)
                        mutants += 1
                        agree += _validates(m) == _oracle(m)
                        caught += not _validates(m)
            for v in range(5):
                if v != base.w[g]:
                    m = base.with_w(g, v)
                    mutants += 1
                    agree += _validates(m) == _oracle(m)
                    caught += not _validates(m)
    ok = found == brute == {1, 4} and agree == mutants
    return ok, f"w(t) in {sorted(found)}; {mutants} mutants, {caught} rejected, validator agrees with oracle on all"


def criterion_2():
    counts = {}
    for name in ("untwisted-z2", "z5-twisted-w1", "f25-frobenius"):
        rep = verify_crossed_product(twist(name))
        if not rep.all_passed:
            return False, f"{name} failed"
        counts[name] = rep.get("cp.associative").checked
    t = twist("f25-frobenius")
    cp = CrossedProduct(t)
    tt, x = cp.basis(1, 1), cp.scalar(5)
    noncomm = cp.mul(tt, x) == cp.neg(cp.mul(x, tt)) != cp.mul(x, tt)
    ok = noncomm and counts == {"untwisted-z2": 64, "z5-twisted-w1": 1000, "f25-frobenius": 125_000}
    return ok, f"associativity triples {list(counts.values())}; t x = -x t"


def criterion_3():
    cfg = load_config(CONFIGS / "extension-z4.json")
    rep = validate_twist(cfg.twist)
    rep.extend(verify_extension_isomorphism(cfg.twist, cfg.w1))
    return rep.all_passed, f"{len(rep.records)} checks"


EXHAUSTIVE_4 = ("weak.pentagon", "weak.R-unit", "weak.L-unit", "compat.t-square", "compat.E-square")


def criterion_4():
    n = 0
    for name in ("z5-twisted-w1", "z5-twisted-w4"):
        t = twist(name)
        for rep in (verify_weak_action(t, 2), verify_involution_compat(t, 2)):
            named = [r for r in rep.records if r.check_id in EXHAUSTIVE_4]
            if not rep.all_passed or any(r.mode != "exhaustive" for r in named):
                return False, f"{name}: {[r.check_id for r in rep.records if r.status != 'pass']}"
            n += len(named)
    return n == 10, "coherence laws exhaustive over all (g,h), ranks <= 2"


def criterion_5():
    notes = []
    for name in ("z5-twisted-w1", "z5-twisted-w4"):
        S = Strictification(RestrictionAction(FGF(twist(name))))
        rank1 = verify_strict_action(S, 1)
        if not rank1.all_passed or rank1.get("strict.R-strict").mode != "exhaustive":
            return False, f"{name} rank 1"
        rep = verify_strict_action(S, 2, min_samples=500)
        rep.extend(verify_adjunction(S, 1))
        rec = rep.get("strict.R-strict")
        if not rep.all_passed or rec.checked < 500:
            return False, name
        notes.append(f"{rec.checked} {rec.mode}")
    return True, "rank 1 exhaustive; rank <= 2 R-strict cases: " + ", ".join(notes)


def criterion_6():
    notes = []
    for name in ("z5-twisted-w1", "z5-twisted-w4"):
        rep = verify_hocolim_involution(one_object_hocolim(twist(name)), 2, min_samples=500)
        rec = rep.get("hinv.contravariant")
        if not rep.all_passed or rec.checked < 500 or rep.meta.get("exhaustive_morphisms") != 112:
            return False, name
        notes.append(str(rec.checked))
    return True, f"contravariance on {'/'.join(notes)} cases, rank <= 1 exhaustive"


def criterion_7():
    for name in ("z5-twisted-w1", "z5-twisted-w4"):
        b = Bridge(twist(name))
        rep = verify_alpha(b, 1)
        rep.extend(verify_beta(b, 1))
        sizes = (rep.meta.get("rank1_hom_size"), rep.meta.get("crossed_product_size"))
        if not rep.all_passed or sizes != (25, 25) or rep.get("alpha.functor").mode != "exhaustive":
            return False, name
    return True, "|hom| = |R*G| = 25; functor on all rank-1 pairs"


def criterion_8():
    t = twist("z5-twisted-w1")
    Z2 = cyclic(2)
    S, inv = strict_fiber(t)
    regular = InductionSetup(Z2, Z2, [0, 1], 2, Z2.mul, S, inv)
    point = InductionSetup(Z2, Z2, [0, 1], 1, lambda g, x: 0, S, inv)
    rep = check_induction_isos(regular, 1, naturality=(point, [0, 0]))
    return rep.all_passed, f"{rep.meta.get('morphisms')} morphisms enumerated"


def criterion_9(tmp_path, capsys):
    cfg = load_config(CONFIGS / "z5-twisted-w4.json")
    a, b = run_campaign(cfg, seed=3).to_json(), run_campaign(cfg, seed=3).to_json()
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        main(["check", str(CONFIGS / "untwisted-z2.json"), "--format", "json", "--seed", "7", "-o", str(path)])
        outs.append(path.read_bytes())
    capsys.readouterr()
    return a == b and outs[0] == outs[1] and json.loads(a)["summary"]["ok"], "library and CLI output byte-identical"


BOUNDS = {1: 1, 2: 10, 3: 1, 4: 5, 5: 10, 6: 10, 7: 10, 8: 30, 9: None}
CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6,
            7: criterion_7, 8: criterion_8}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, note, elapsed = timed(CRITERIA[n])
    assert report_line(capsys, n, ok, elapsed, BOUNDS[n], note)


def test_criterion_9_determinism(tmp_path, capsys):
    ok, note, elapsed = timed(lambda: criterion_9(tmp_path, capsys))
    assert report_line(capsys, 9, ok, elapsed, BOUNDS[9], note)
