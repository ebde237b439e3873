"""Strictification of a weak (G, v)-action.

Objects of S(A) are pairs (A, h); a morphism (A, h) -> (B, k) is a morphism
R_h(A) -> R_k(B) of the underlying category.  The group then acts strictly:
R^S_g(A, h) = (A, hg), and on morphisms by conjugating R_g(phi) with the
coherence isomorphisms L.

The code is generic over a ``WeakAction`` (two are provided: restriction
along c with L = tau, and the Z/2 encoding of an involution (I, E)).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Any

from .algebra import FiniteGroup, SignHom, cyclic
from .modcat import FGF
from .report import Report, run_check

MIN_SAMPLES = 500
# hom-sets up to this size (rank-1 hom-sets for |R| <= 25) are enumerated
HOM_EXHAUSTIVE = 25


class WeakAction:
    """Interface: a base category plus R_g on objects/morphisms and L_{g,h}.

    ``base`` must provide compose, inverse, identity, hom, hom_size,
    random_mor and objects(max_rank).
    """

    group: FiniteGroup
    v: SignHom
    base: Any

    def act_obj(self, g: int, A):
        raise NotImplementedError

    def act_mor(self, g: int, f):
        raise NotImplementedError

    def L(self, g: int, h: int, A):
        """R_{gh}(A) -> R_h(R_g(A))."""
        raise NotImplementedError

    def objects(self, max_rank: int) -> list:
        return self.base.objects(max_rank)


class RestrictionAction(WeakAction):
    """R_g = res_{c_g}, L_{g,h} = multiplication by tau(g,h)."""

    def __init__(self, cat: FGF):
        self.base = cat
        self.group = cat.group
        self.v = SignHom.trivial(cat.group)

    def act_obj(self, g, A):
        return self.base.restrict(g, A)

    def act_mor(self, g, f):
        return self.base.restrict(g, f)

    def L(self, g, h, A):
        return self.base.l_tau(g, h, A)


class InvolutionAction(WeakAction):
    """An involution (I, E) read as a weak (Z/2, v) action with v(t) = -1.

    R_t = I and L_{t,t} = E; every other L is an identity.
    """

    def __init__(self, cat: FGF):
        if not cat.twist.has_involution:
            raise ValueError("base category has no involution")
        self.base = cat
        self.group = cyclic(2)
        self.v = SignHom(self.group, (1, -1))

    def act_obj(self, g, A):
        return self.base.dual_obj(A) if g else A

    def act_mor(self, g, f):
        return self.base.dual(f) if g else f

    def L(self, g, h, A):
        if g and h:
            return self.base.e_map(A)
        return self.base.identity(self.act_obj(self.group.mul(g, h), A))


def _power(base, f, sign: int):
    return f if sign == 1 else base.inverse(f)


def verify_weak_axioms(action: WeakAction, max_rank: int = 2, seed: int = 0) -> Report:
    """R_e = id, L_{g,e} = L_{e,g} = id and the coherence square, with v-powers."""
    G, v, cat = action.group, action.v, action.base
    rep = Report(seed=seed)
    objs = action.objects(max_rank)

    def pentagon(case):
        g, h, k, A = case
        lhs = cat.compose(_power(cat, action.act_mor(k, action.L(g, h, A)), v(k)), action.L(G.mul(g, h), k, A))
        rhs = cat.compose(action.L(h, k, action.act_obj(g, A)), action.L(g, G.mul(h, k), A))
        return None if lhs == rhs else {"g": g, "h": h, "k": k, "object": repr(A)}

    run_check(rep, "weak.pentagon", "R_k(L_{g,h})^{v(k)} L_{gh,k} = L_{h,k}(R_g) L_{g,hk}",
              [(g, h, k, A) for g, h, k in itertools.product(G.elements(), repeat=3) for A in objs], pentagon)
    run_check(rep, "weak.R-unit", "R_e = id", objs,
              lambda A: None if action.act_obj(G.e, A) == A else {"object": repr(A)})
    run_check(rep, "weak.L-unit", "L_{g,e} = L_{e,g} = id", [(g, A) for g in G.elements() for A in objs],
              lambda c: None if all(f == cat.identity(f.source) for f in
                                    (action.L(c[0], G.e, c[1]), action.L(G.e, c[0], c[1])))
              else {"g": c[0], "object": repr(c[1])})
    return rep


@dataclass(frozen=True)
class StrictObject:
    base: Any
    label: int

    def __repr__(self):
        return f"({self.base!r},{self.label})"


@dataclass(frozen=True)
class SMorphism:
    """A morphism (A,h) -> (B,k) of S, i.e. mor: R_h(A) -> R_k(B)."""

    source: StrictObject
    target: StrictObject
    mor: Any

    def to_json(self) -> dict:
        return {"source": repr(self.source), "target": repr(self.target), "mor": self.mor.to_json()}


class Strictification:
    def __init__(self, action: WeakAction):
        self.action = action
        self.group = action.group
        self.base = action.base

    def obj(self, A, h: int) -> StrictObject:
        return StrictObject(A, h)

    def underlying(self, X: StrictObject):
        return self.action.act_obj(X.label, X.base)

    def mor(self, X: StrictObject, Y: StrictObject, f) -> SMorphism:
        if f.source != self.underlying(X) or f.target != self.underlying(Y):
            raise ValueError(f"{f.source} -> {f.target} is not a morphism {X} -> {Y}")
        return SMorphism(X, Y, f)

    def objects(self, max_rank: int, min_rank: int = 0) -> list[StrictObject]:
        return [self.obj(A, h) for A in self.action.objects(max_rank) for h in self.group.elements()
                if getattr(A, "rank", min_rank) >= min_rank]

    def identity(self, X: StrictObject) -> SMorphism:
        return SMorphism(X, X, self.base.identity(self.underlying(X)))

    def compose(self, psi: SMorphism, phi: SMorphism) -> SMorphism:
        if phi.target != psi.source:
            raise ValueError("morphisms are not composable")
        return SMorphism(phi.source, psi.target, self.base.compose(psi.mor, phi.mor))

    def inverse(self, phi: SMorphism) -> SMorphism:
        return SMorphism(phi.target, phi.source, self.base.inverse(phi.mor))

    def zero(self, X: StrictObject, Y: StrictObject) -> SMorphism:
        return SMorphism(X, Y, self.base.zero(self.underlying(X), self.underlying(Y)))

    def add(self, phi: SMorphism, psi: SMorphism) -> SMorphism:
        if (phi.source, phi.target) != (psi.source, psi.target):
            raise ValueError("cannot add morphisms with different endpoints")
        return SMorphism(phi.source, phi.target, self.base.add(phi.mor, psi.mor))

    def neg(self, phi: SMorphism) -> SMorphism:
        return SMorphism(phi.source, phi.target, self.base.neg(phi.mor))

    def is_zero(self, phi: SMorphism) -> bool:
        return phi == self.zero(phi.source, phi.target)

    def hom(self, X: StrictObject, Y: StrictObject):
        for f in self.base.hom(self.underlying(X), self.underlying(Y)):
            yield SMorphism(X, Y, f)

    def hom_size(self, X, Y) -> int:
        return self.base.hom_size(self.underlying(X), self.underlying(Y))

    def random_mor(self, X, Y, rng) -> SMorphism:
        return SMorphism(X, Y, self.base.random_mor(self.underlying(X), self.underlying(Y), rng))

    # the strict action

    def act_obj(self, g: int, X: StrictObject) -> StrictObject:
        return StrictObject(X.base, self.group.mul(X.label, g))

    def act(self, g: int, phi: SMorphism) -> SMorphism:
        a, cat = self.action, self.base
        A, h = phi.source.base, phi.source.label
        B, k = phi.target.base, phi.target.label
        Rphi = a.act_mor(g, phi.mor)
        if a.v(g) == 1:
            f = cat.compose(cat.inverse(a.L(k, g, B)), cat.compose(Rphi, a.L(h, g, A)))
            return SMorphism(self.act_obj(g, phi.source), self.act_obj(g, phi.target), f)
        f = cat.compose(cat.inverse(a.L(h, g, A)), cat.compose(Rphi, a.L(k, g, B)))
        return SMorphism(self.act_obj(g, phi.target), self.act_obj(g, phi.source), f)

    # the embedding P: A -> S(A)

    def embed(self, x):
        if not hasattr(x, "source"):
            return StrictObject(x, self.group.e)
        return SMorphism(StrictObject(x.source, self.group.e), StrictObject(x.target, self.group.e), x)

    def ess_iso(self, A, g: int) -> SMorphism:
        """(A, g) -> (R_g A, e), the identity of R_g(A)."""
        RA = self.action.act_obj(g, A)
        return SMorphism(StrictObject(A, g), StrictObject(RA, self.group.e), self.base.identity(RA))


def strict_act(S: Strictification, g: int, phi: SMorphism) -> SMorphism:
    return S.act(g, phi)


def embed_P(S: Strictification, x):
    return S.embed(x)


def morphism_cases(S: Strictification, max_rank: int, seed: int, min_samples: int = MIN_SAMPLES,
                   hom_limit: int = HOM_EXHAUSTIVE):
    """Hom-sets of size <= hom_limit are enumerated; larger ones share min_samples draws."""
    rng = random.Random(seed)
    objs = S.objects(max_rank)
    small, large = [], []
    for X, Y in itertools.product(objs, repeat=2):
        (small if S.hom_size(X, Y) <= hom_limit else large).append((X, Y))
    out = [phi for X, Y in small for phi in S.hom(X, Y)]
    if large:
        per = math.ceil(min_samples / len(large))
        out += [S.random_mor(X, Y, rng) for X, Y in large for _ in range(per)]
    return out, ("sampled" if large else "exhaustive")


def verify_strict_action(S: Strictification, max_rank: int = 2, seed: int = 0,
                         min_samples: int = MIN_SAMPLES) -> Report:
    G, base = S.group, S.base
    rep = Report(seed=seed)
    morphs, mode = morphism_cases(S, max_rank, seed, min_samples)
    objs = S.objects(max_rank)

    run_check(rep, "strict.R-identity", "R^S_e(phi) = phi", morphs,
              lambda phi: None if S.act(G.e, phi) == phi else {"phi": phi.to_json()}, mode, seed)

    def strict(case):
        g1, g2, phi = case
        lhs = S.act(g2, S.act(g1, phi))
        rhs = S.act(G.mul(g1, g2), phi)
        if lhs == rhs:
            return None
        return {"g1": g1, "g2": g2, "phi": phi.to_json(), "lhs": lhs.to_json(), "rhs": rhs.to_json()}

    run_check(rep, "strict.R-strict", "R^S_{g2} R^S_{g1} = R^S_{g1 g2}",
              [(g1, g2, phi) for g1, g2 in itertools.product(G.elements(), repeat=2) for phi in morphs],
              strict, mode, seed)
    run_check(rep, "strict.R-strict-objects", "R^S_{g2} R^S_{g1}(A,h) = R^S_{g1 g2}(A,h)",
              [(g1, g2, X) for g1, g2 in itertools.product(G.elements(), repeat=2) for X in objs],
              lambda c: None if S.act_obj(c[1], S.act_obj(c[0], c[2])) == S.act_obj(G.mul(c[0], c[1]), c[2])
              else {"g1": c[0], "g2": c[1], "object": repr(c[2])})

    rng = random.Random(seed + 7)
    pairs = []
    by_target: dict = {}
    for phi in morphs:
        by_target.setdefault(phi.target, []).append(phi)
    for psi in morphs:
        cands = by_target.get(psi.source, [])
        if cands:
            pairs.append((rng.choice(cands), psi))
    pairs = pairs[: max(min_samples, 1000)]

    def functor(case):
        phi, psi = case
        for g in G.elements():
            lhs = S.act(g, S.compose(psi, phi))
            if S.action.v(g) == 1:
                rhs = S.compose(S.act(g, psi), S.act(g, phi))
            else:
                rhs = S.compose(S.act(g, phi), S.act(g, psi))
            if lhs != rhs:
                return {"g": g, "phi": phi.to_json(), "psi": psi.to_json()}
        return None

    run_check(rep, "strict.R-functor", "R^S_g preserves composition (reversing it when v(g) = -1)",
              pairs, functor, "sampled", seed)
    run_check(rep, "strict.R-identities", "R^S_g(id) = id", [(g, X) for g in G.elements() for X in objs],
              lambda c: None if S.act(c[0], S.identity(c[1])) == S.identity(S.act_obj(c[0], c[1]))
              else {"g": c[0], "object": repr(c[1])})

    base_objs = S.action.objects(max_rank)

    def p_bijective(case):
        A, B = case
        n = base.hom_size(A, B)
        m = S.hom_size(S.embed(A), S.embed(B))
        if n != m:
            return {"A": repr(A), "B": repr(B), "base": n, "strict": m}
        if n <= HOM_EXHAUSTIVE:
            images = {S.embed(f) for f in base.hom(A, B)}
            if len(images) != n or any(phi not in images for phi in S.hom(S.embed(A), S.embed(B))):
                return {"A": repr(A), "B": repr(B), "reason": "P is not a bijection on this hom-set"}
        return None

    run_check(rep, "strict.P-full-faithful", "P: mor(A,B) -> mor((A,e),(B,e)) is a bijection",
              list(itertools.product(base_objs, repeat=2)), p_bijective)

    def ess(case):
        A, g = case
        iso = S.ess_iso(A, g)
        inv = S.inverse(iso)
        if S.compose(inv, iso) != S.identity(iso.source) or S.compose(iso, inv) != S.identity(iso.target):
            return {"A": repr(A), "g": g}
        return None

    run_check(rep, "strict.P-essentially-surjective", "(A,g) = (R_g A, e) via the identity",
              [(A, g) for A in base_objs for g in G.elements()], ess)
    return rep


def verify_adjunction(S: Strictification, max_rank: int = 1, seed: int = 0) -> Report:
    """Unit/counit of (S, forget) for the target S(A) and the functor (P, T).

    T_g(A): P(R_g A) = (R_g A, e) -> R^S_g(P A) = (A, g) is the identity of
    R_g(A).  beta(P, T) sends phi: (A,h) -> (B,k) to T_k(B) P(phi) T_h(A)^-1,
    which must give back phi; alpha(beta(P, T)) restricted along P must give
    back (P, T).
    """
    G = S.group
    rep = Report(seed=seed)
    morphs, mode = morphism_cases(S, max_rank, seed)

    def T(A, g):
        return S.inverse(S.ess_iso(A, g))

    def beta(phi):
        A, h = phi.source.base, phi.source.label
        B, k = phi.target.base, phi.target.label
        P_phi = SMorphism(StrictObject(S.underlying(phi.source), G.e),
                          StrictObject(S.underlying(phi.target), G.e), phi.mor)
        return S.compose(T(B, k), S.compose(P_phi, S.inverse(T(A, h))))

    run_check(rep, "adjunction.beta-alpha", "beta(alpha(id)) = id on morphisms of S(A)", morphs,
              lambda phi: None if beta(phi) == phi else {"phi": phi.to_json()}, mode, seed)
    base_objs = S.action.objects(max_rank)

    def recovers_T(case):
        A, g = case
        # alpha(G) has T_g(A) = G applied to the canonical (R_g A, e) -> (A, g)
        if beta(T(A, g)) != T(A, g):
            return {"A": repr(A), "g": g}
        return None

    run_check(rep, "adjunction.alpha-beta", "alpha(beta(P, T)) = (P, T)",
              [(A, g) for A in base_objs for g in G.elements()], recovers_T)
    run_check(rep, "adjunction.restricts-to-P", "beta(P, T) P = P",
              [f for A, B in itertools.product(base_objs, repeat=2) for f in
               itertools.islice(S.base.hom(A, B), 50)],
              lambda f: None if beta(S.embed(f)) == S.embed(f) else {"f": f.to_json()})
    return rep


class StrictInvolution:
    """Involution on S(FGF) induced by (I, t): I^S(A,h) = (A*, h)."""

    def __init__(self, S: Strictification):
        if not isinstance(S.action, RestrictionAction):
            raise ValueError("strict involution is defined for the restriction action")
        self.S = S
        self.cat: FGF = S.base

    def obj(self, X: StrictObject) -> StrictObject:
        return StrictObject(self.cat.dual_obj(X.base), X.label)

    def mor(self, phi: SMorphism) -> SMorphism:
        """t_h(A)^-1 phi* t_k(B): (B*, k) -> (A*, h)."""
        cat = self.cat
        A, h = phi.source.base, phi.source.label
        B, k = phi.target.base, phi.target.label
        f = cat.chain(cat.inverse(cat.t_map(h, A)), cat.dual(phi.mor), cat.t_map(k, B))
        return SMorphism(self.obj(phi.target), self.obj(phi.source), f)

    def T(self, g: int, X: StrictObject) -> SMorphism:
        """R^S_g commutes with I^S on the nose, so T is the identity."""
        return self.S.identity(self.obj(self.S.act_obj(g, X)))

    def E(self, X: StrictObject) -> SMorphism:
        """R_h(E(A)): (A, h) -> (A**, h)."""
        cat = self.cat
        f = cat.restrict(X.label, cat.e_map(X.base))
        return SMorphism(X, self.obj(self.obj(X)), f)


def verify_strict_involution(S: Strictification, max_rank: int = 2, seed: int = 0,
                             min_samples: int = MIN_SAMPLES) -> Report:
    inv = StrictInvolution(S)
    G = S.group
    rep = Report(seed=seed)
    morphs, mode = morphism_cases(S, max_rank, seed, min_samples)
    objs = S.objects(max_rank)
    rng = random.Random(seed + 11)

    run_check(rep, "sinv.commutes-with-R", "R^S_g I^S = I^S R^S_g",
              [(g, phi) for g in G.elements() for phi in morphs],
              lambda c: None if S.act(c[0], inv.mor(c[1])) == inv.mor(S.act(c[0], c[1]))
              else {"g": c[0], "phi": c[1].to_json()}, mode, seed)

    by_target: dict = {}
    for phi in morphs:
        by_target.setdefault(phi.target, []).append(phi)

    def contra(psi):
        cands = by_target.get(psi.source)
        if not cands:
            return None
        phi = rng.choice(cands)
        if inv.mor(S.compose(psi, phi)) != S.compose(inv.mor(phi), inv.mor(psi)):
            return {"phi": phi.to_json(), "psi": psi.to_json()}
        return None

    run_check(rep, "sinv.contravariant", "I^S(psi phi) = I^S(phi) I^S(psi)", morphs, contra, "sampled", seed)
    run_check(rep, "sinv.E-natural", "E^S(Y) phi = I^S I^S(phi) E^S(X)", morphs,
              lambda phi: None if S.compose(inv.E(phi.target), phi) == S.compose(inv.mor(inv.mor(phi)), inv.E(phi.source))
              else {"phi": phi.to_json()}, mode, seed)
    run_check(rep, "sinv.E-condition", "E^S(I^S X) = I^S(E^S(X)^-1)", objs,
              lambda X: None if inv.E(inv.obj(X)) == inv.mor(S.inverse(inv.E(X))) else {"object": repr(X)})
    run_check(rep, "sinv.E-equivariant", "R^S_g(E^S(X)) = E^S(R^S_g X)",
              [(g, X) for g in G.elements() for X in objs],
              lambda c: None if S.act(c[0], inv.E(c[1])) == inv.E(S.act_obj(c[0], c[1]))
              else {"g": c[0], "object": repr(c[1])})
    return rep
