"""From the homotopy colimit back to rings, and induction along K -> G.

Coordinates: R*G (x) R^m is identified with (R*G)^m through
u (x) (r e_i) = (u r) e_i.  Module maps act on row vectors, so a map is a
matrix M with f(x) = x M and composition reverses matrix order:
mat(psi o phi) = mat(phi) mat(psi).  A functional h on (R*G)^m has
coordinates y_j = bar(h(e_j)), which makes the dual of M its conjugate
transpose and E the identity matrix.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from . import matrix as mx
from .algebra import FiniteGroup, direct_product, is_homomorphism
from .crossed import CrossedElement, CrossedProduct
from .groupoid import FiniteGroupoid, GroupoidFunctor, transport_groupoid
from .hocolim import (HcObject, Hocolim, HocolimMorphism, hc_pushforward, morphism_cases, pullback,
                      pushforward_obj)
from .matrix import Matrix
from .modcat import FGF, FreeObject
from .report import Report, run_check
from .strictify import RestrictionAction, StrictInvolution, StrictObject, Strictification
from .twist import TwistData

MAX_INDUCTION = 4


def strict_fiber(t: TwistData):
    """S(FGF(R)_{c,tau}) with its involution when w is present."""
    cat = FGF(t)
    S = Strictification(RestrictionAction(cat))
    inv = StrictInvolution(S) if t.has_involution else None
    return S, inv


def one_object_hocolim(t: TwistData) -> Hocolim:
    """The homotopy colimit of S(FGF(R)_{c,tau,w}) over G as a one-object groupoid."""
    S, inv = strict_fiber(t)
    grp = FiniteGroupoid.from_group(t.group)
    return Hocolim(grp, [grp.arrows[a].label for a in range(len(grp.arrows))], S, inv,
                   name=f"hocolim over {t.group.name}")


# G as a G-set with left translation etc.


def g_set_check(G: FiniteGroup, n: int, act: Callable[[int, int], int]) -> None:
    for i in range(n):
        if act(G.e, i) != i:
            raise ValueError(f"e does not fix point {i}")
        for g, h in itertools.product(G.elements(), repeat=2):
            if act(g, act(h, i)) != act(G.mul(g, h), i):
                raise ValueError(f"not a left action at point {i}")


def transport(G: FiniteGroup, points: Sequence, act: Callable[[int, int], int], name: str = "transport"):
    """The transport groupoid of a finite G-set (points indexed 0..n-1)."""
    return transport_groupoid(G, points, act, name)


def transport_map(src: FiniteGroupoid, dst: FiniteGroupoid, f: Sequence[int]) -> GroupoidFunctor:
    """The functor induced by an equivariant map of G-sets (given on point indices)."""
    m = src.group.order
    for x in range(src.n_objects):
        for g in src.group.elements():
            if dst.arrows[f[x] * m + g].dst != f[src.arrows[x * m + g].dst]:
                raise ValueError("map is not equivariant")
    return GroupoidFunctor(src, dst, tuple(f), tuple(f[a // m] * m + a % m for a in range(len(src.arrows))))


class Bridge:
    """alpha and beta on the e-labelled part of the one-object homotopy colimit."""

    def __init__(self, t: TwistData):
        self.twist = t
        self.hc = one_object_hocolim(t)
        self.S = self.hc.fiber
        self.cat: FGF = self.S.base
        self.cp = CrossedProduct(t)

    def e_obj(self, m: int) -> HcObject:
        return HcObject(0, StrictObject(self.cat.plain(m), self.twist.group.e))

    def rank(self, X: HcObject) -> int:
        if X.A.label != self.twist.group.e or X.A.base.word:
            raise ValueError(f"{X} is not of the shape (M, e)")
        return X.A.base.rank

    def alpha(self, phi: HocolimMorphism) -> Matrix:
        """M_ij = sum_g tau(g^-1,g)^-1 g^-1 (A_g)_ij."""
        t, cp, G, R = self.twist, self.cp, self.twist.group, self.twist.ring
        m, n = self.rank(phi.source), self.rank(phi.target)
        rows = [[cp.zero] * n for _ in range(m)]
        for g, comp in phi.terms:
            gi = G.inv(g)
            pre = cp.basis(R.inv(t.tau[gi][g]), gi)
            A = comp.mor.matrix
            for i in range(m):
                for j in range(n):
                    rows[i][j] = cp.add(rows[i][j], cp.mul(pre, cp.scalar(A[i, j])))
        return Matrix(rows, m, n)

    def alpha_apply(self, phi: HocolimMorphism, u: CrossedElement, x: Sequence[int]) -> tuple:
        """The defining formula: u (x) x |-> sum_g u tau(g^-1,g)^-1 g^-1 (x) phi_g(x)."""
        t, cp, G, R = self.twist, self.cp, self.twist.group, self.twist.ring
        n = self.rank(phi.target)
        out = [cp.zero] * n
        for g, comp in phi.terms:
            gi = G.inv(g)
            coef = cp.mul(u, cp.basis(R.inv(t.tau[gi][g]), gi))
            y = self.cat.apply(comp.mor, x)
            for j in range(n):
                out[j] = cp.add(out[j], cp.mul(coef, cp.scalar(y[j])))
        return tuple(out)

    def embed(self, u: CrossedElement, x: Sequence[int]) -> tuple:
        """u (x) x as a row vector over R*G."""
        return tuple(self.cp.mul(u, self.cp.scalar(r)) for r in x)

    def apply(self, M: Matrix, v: Sequence[CrossedElement]) -> tuple:
        return mx.mul(self.cp, Matrix([list(v)], 1, M.nrows), M).rows[0]

    def conj_transpose(self, M: Matrix) -> Matrix:
        return mx.transpose(mx.entrywise(self.cp.involution, M))

    def cp_E(self, m: int) -> Matrix:
        return mx.identity(self.cp, m)

    # beta

    def beta_value(self, u: CrossedElement, f: Sequence[int], v: CrossedElement, x: Sequence[int]) -> CrossedElement:
        """beta(u (x) f)(v (x) x) = v f(x) bar(u), f given by its coordinates in M*."""
        cp = self.cp
        fx = self.cat.pair(self.cat.plain(len(x)), f, x)
        return cp.mul(cp.mul(v, cp.scalar(fx)), cp.involution(u))

    def beta(self, m: int) -> Matrix:
        """Coordinates Y_ij = bar(beta(1 (x) e_i*)(1 (x) e_j))."""
        cp, R = self.cp, self.twist.ring
        unit = [[R.one if k == i else R.zero for k in range(m)] for i in range(m)]
        return Matrix([[cp.involution(self.beta_value(cp.one, unit[i], cp.one, unit[j])) for j in range(m)]
                       for i in range(m)], m, m)

    def functional(self, Y: Sequence[CrossedElement], v: Sequence[CrossedElement]) -> CrossedElement:
        """Evaluate the functional with coordinates Y on the row vector v."""
        cp = self.cp
        acc = cp.zero
        for a, y in zip(v, Y):
            acc = cp.add(acc, cp.mul(a, cp.involution(y)))
        return acc


def alpha(t: TwistData, phi: HocolimMorphism) -> Matrix:
    return Bridge(t).alpha(phi)


def beta(t: TwistData, m: int) -> Matrix:
    return Bridge(t).beta(m)


def additive_generators(R) -> list[int]:
    """A generating set of (R, +), found greedily."""
    span, gens = {R.zero}, []
    for r in R.elements():
        if r in span:
            continue
        gens.append(r)
        frontier = list(span)
        while frontier:
            new = []
            for s in frontier:
                t = R.add(s, r)
                if t not in span:
                    span.add(t)
                    new.append(t)
            frontier = new
    return gens


def _basis_vectors(R, m):
    """Additive generators of R^m."""
    return [tuple(r if k == i else R.zero for k in range(m)) for i in range(m) for r in additive_generators(R)]


def _cp_generators(cp):
    return [cp.basis(r, g) for g in cp.group.elements() for r in additive_generators(cp.ring)]


def verify_alpha(b: Bridge, max_rank: int = 1, seed: int = 0, pair_cap: int = 20000) -> Report:
    """alpha is well defined, functorial and bijective on rank-1 hom-sets."""
    rep = Report(seed=seed)
    hc, cp, R = b.hc, b.cp, b.twist.ring
    objs = [b.e_obj(m) for m in range(max_rank + 1)]
    morphs = [phi for X, Y in itertools.product(objs, repeat=2) for phi in hc.hom(X, Y)]
    rep.meta["rank1_hom_size"] = hc.hom_size(b.e_obj(1), b.e_obj(1))
    rep.meta["crossed_product_size"] = cp.size

    run_check(rep, "alpha.identity", "alpha(id) = id", objs,
              lambda X: None if b.alpha(hc.identity(X)) == mx.identity(cp, b.rank(X)) else {"object": repr(X)})

    def bijective(case):
        X, Y = case
        images = {b.alpha(phi) for phi in hc.hom(X, Y)}
        expected = cp.size ** (b.rank(X) * b.rank(Y))
        if hc.hom_size(X, Y) != expected or len(images) != expected:
            return {"X": repr(X), "Y": repr(Y), "images": len(images), "expected": expected}
        return None

    run_check(rep, "alpha.bijective", "alpha: mor((M,e),(N,e)) -> Hom(R*G (x) M, R*G (x) N) is bijective",
              list(itertools.product(objs, repeat=2)), bijective)

    by_source: dict = {}
    for phi in morphs:
        by_source.setdefault(phi.source, []).append(phi)
    pairs = [(phi, psi) for phi in morphs for psi in by_source.get(phi.target, [])]
    rng = random.Random(seed)
    fmode = "exhaustive"
    if len(pairs) > pair_cap:
        pairs = [pairs[i] for i in sorted(rng.sample(range(len(pairs)), pair_cap))]
        fmode = "sampled"

    def functor(case):
        phi, psi = case
        lhs = b.alpha(hc.compose(psi, phi))
        rhs = mx.mul(cp, b.alpha(phi), b.alpha(psi))
        return None if lhs == rhs else {"phi": phi.to_json(), "psi": psi.to_json()}

    run_check(rep, "alpha.functor", "alpha(psi phi) = alpha(psi) after alpha(phi)", pairs, functor,
              fmode, seed)

    # both sides are additive in u and x, so additive generators suffice
    basis_u = _cp_generators(cp)
    rank1 = [phi for phi in morphs if b.rank(phi.source) == 1]

    def tensor(case):
        phi, u, r = case
        for x in _basis_vectors(R, b.rank(phi.source)):
            rx = tuple(R.mul(r, xi) for xi in x)
            lhs = b.alpha_apply(phi, cp.mul(u, cp.scalar(r)), x)
            rhs = b.alpha_apply(phi, u, rx)
            if lhs != rhs or lhs != b.apply(b.alpha(phi), b.embed(cp.mul(u, cp.scalar(r)), x)):
                return {"phi": phi.to_json(), "u": cp.to_json(u), "r": r, "x": list(x)}
        return None

    tensor_cases = [(phi, u, r) for phi in rank1 for u in basis_u for r in R.elements()]
    mode = "exhaustive"
    if len(tensor_cases) > pair_cap:
        tensor_cases = [tensor_cases[i] for i in sorted(rng.sample(range(len(tensor_cases)), pair_cap))]
        mode = "sampled"
    run_check(rep, "alpha.tensor-relation", "alpha((u r) (x) x) = alpha(u (x) r x), matching the matrix",
              tensor_cases, tensor, mode, seed)
    return rep


def verify_beta(b: Bridge, max_rank: int = 1, seed: int = 0) -> Report:
    """beta is natural, satisfies the E-diagram, and matches its defining formula."""
    rep = Report(seed=seed)
    hc, cp, R = b.hc, b.cp, b.twist.ring
    if not b.twist.has_involution:
        raise ValueError("beta needs the involution data (bar, w)")
    objs = [b.e_obj(m) for m in range(max_rank + 1)]
    morphs = [phi for X, Y in itertools.product(objs, repeat=2) for phi in hc.hom(X, Y)]

    def formula(m):
        B = b.beta(m)
        basis_u = _cp_generators(cp)
        for u in basis_u:
            for f in _basis_vectors(R, m):
                # beta(u (x) f) in coordinates is (u f) B
                Y = b.apply(B, b.embed(u, f))
                for v in basis_u:
                    for x in _basis_vectors(R, m):
                        if b.functional(Y, b.embed(v, x)) != b.beta_value(u, f, v, x):
                            return {"m": m, "u": cp.to_json(u), "f": list(f), "v": cp.to_json(v), "x": list(x)}
        return None

    run_check(rep, "beta.formula", "beta(u (x) f)(v (x) m) = v f(m) bar(u) in coordinates",
              list(range(1, max_rank + 1)), formula)

    def natural(phi):
        m, n = b.rank(phi.source), b.rank(phi.target)
        lhs = mx.mul(cp, b.alpha(hc.dual(phi)), b.beta(m))
        rhs = mx.mul(cp, b.beta(n), b.conj_transpose(b.alpha(phi)))
        return None if lhs == rhs else {"phi": phi.to_json()}

    run_check(rep, "beta.natural", "beta(M) alpha(phi*) = alpha(phi)* beta(N)", morphs, natural)

    def e_diagram(X):
        m = b.rank(X)
        upper = mx.mul(cp, b.cp_E(m), b.conj_transpose(b.beta(m)))
        lower = mx.mul(cp, b.alpha(hc.E(X)), b.beta(m))
        return None if upper == lower else {"object": repr(X)}

    run_check(rep, "beta.E-diagram", "beta(M)* E = beta(M*) alpha(E(M,e))", objs, e_diagram)

    def transported(phi):
        m, n = b.rank(phi.source), b.rank(phi.target)
        via = mx.mul(cp, mx.mul(cp, b.beta(n), b.conj_transpose(b.alpha(phi))), mx.inverse(cp, b.beta(m)))
        return None if via == b.alpha(hc.dual(phi)) else {"phi": phi.to_json()}

    run_check(rep, "bridge.dual-transport", "alpha(phi*) = beta conj-transpose(alpha(phi)) beta^-1",
              morphs, transported)
    return rep


def check_e_inclusion(t: TwistData, max_rank: int = 1, seed: int = 0) -> Report:
    """(M,g) is isomorphic to (M,e) via g . id, so the e-labelled part is a full equivalent subcategory."""
    hc = one_object_hocolim(t)
    S = hc.fiber
    rep = Report(seed=seed)

    def iso(X):
        M, g = X.A.base, X.A.label
        target = HcObject(0, StrictObject(M, t.group.e))
        phi = hc.mor(X, target, [(g, S.identity(X.A))])
        inv = hc.inverse(phi)
        if hc.compose(inv, phi) != hc.identity(X) or hc.compose(phi, inv) != hc.identity(target):
            return {"object": repr(X)}
        if hc.has_involution and hc.dual_obj(target).A.label != t.group.e:
            return {"object": repr(X), "reason": "I leaves the e-labelled part"}
        return None

    run_check(rep, "e-inclusion.iso", "g . id: (M,g) -> (M,e) is an isomorphism", hc.objects(max_rank), iso)
    return rep


# induction


@dataclass
class Biset:
    """Left K-set and right G-set on points 0..n-1 with commuting actions."""

    K: FiniteGroup
    G: FiniteGroup
    n: int
    left: Callable[[int, int], int]
    right: Callable[[int, int], int]

    def check(self):
        g_set_check(self.K, self.n, self.left)
        for i in range(self.n):
            if self.right(i, self.G.e) != i:
                raise ValueError("e does not act trivially from the right")
            for g, h in itertools.product(self.G.elements(), repeat=2):
                if self.right(self.right(i, g), h) != self.right(i, self.G.mul(g, h)):
                    raise ValueError("not a right action")
            for k in self.K.elements():
                for g in self.G.elements():
                    if self.left(k, self.right(i, g)) != self.right(self.left(k, i), g):
                        raise ValueError("left and right actions do not commute")


def restricted_biset(K: FiniteGroup, G: FiniteGroup, phi: Sequence[int]) -> Biset:
    """G with k . x . g = phi(k) x g."""
    return Biset(K, G, G.order, lambda k, x: G.mul(phi[k], x), lambda x, g: G.mul(x, g))


def induce(K: FiniteGroup, G: FiniteGroup, phi: Sequence[int], fiber, involution=None,
           eta: Biset | None = None) -> Hocolim:
    """The homotopy colimit over G^K(eta) of the K-category fiber, with its right G-action.

    With eta = phi*G this is ind_phi of the fiber.
    """
    if not is_homomorphism(K, G, list(phi)):
        raise ValueError("phi is not a homomorphism")
    eta = eta or restricted_biset(K, G, phi)
    eta.check()
    if fiber.group.order != K.order:
        raise ValueError("fiber must carry a K-action")
    T = transport_groupoid(K, list(range(eta.n)), eta.left, name="G^K(eta)")
    m = K.order
    funcs = {}
    for g in G.elements():
        objs = tuple(eta.right(y, g) for y in range(eta.n))
        funcs[g] = GroupoidFunctor(T, T, objs, tuple(objs[a // m] * m + a % m for a in range(len(T.arrows))))
    return Hocolim(T, [a % m for a in range(len(T.arrows))], fiber, involution,
                   right_action=funcs.__getitem__, acting_group=G, name="ind")


def verify_induced_action(ind: Hocolim, max_rank: int = 1, seed: int = 0, min_samples: int = 500) -> Report:
    """R_e = id, R_{g2} R_{g1} = R_{g1 g2}, each R_g a functor commuting with the involution."""
    G = ind.group
    rep = Report(seed=seed)
    morphs, mode, _ = morphism_cases(ind, max_rank, seed, min_samples)
    objs = ind.objects(max_rank)
    run_check(rep, "ind.R-functor-tables", "each R_g is a functor of G^K(eta)", list(G.elements()),
              lambda g: None if ind.right_action(g).is_functor() else {"g": g})
    run_check(rep, "ind.R-unit", "R_e = id", morphs,
              lambda p: None if ind.act(G.e, p) == p else {"phi": p.to_json()}, mode, seed)
    run_check(rep, "ind.R-strict", "R_{g2} R_{g1} = R_{g1 g2}",
              [(g1, g2, p) for g1, g2 in itertools.product(G.elements(), repeat=2) for p in morphs],
              lambda c: None if ind.act(c[1], ind.act(c[0], c[2])) == ind.act(G.mul(c[0], c[1]), c[2])
              else {"g1": c[0], "g2": c[1], "phi": c[2].to_json()}, mode, seed)
    run_check(rep, "ind.R-strict-objects", "R_{g2} R_{g1} X = R_{g1 g2} X",
              [(g1, g2, X) for g1, g2 in itertools.product(G.elements(), repeat=2) for X in objs],
              lambda c: None if ind.act_obj(c[1], ind.act_obj(c[0], c[2])) == ind.act_obj(G.mul(c[0], c[1]), c[2])
              else {"object": repr(c[2])})
    rng = random.Random(seed)
    by_target: dict = {}
    for p in morphs:
        by_target.setdefault(p.target, []).append(p)
    pairs = [(rng.choice(by_target[q.source]), q) for q in morphs if q.source in by_target]
    run_check(rep, "ind.R-preserves-composition", "R_g(psi phi) = R_g(psi) R_g(phi)",
              [(g, p, q) for g in G.elements() for p, q in pairs],
              lambda c: None if ind.act(c[0], ind.compose(c[2], c[1])) == ind.compose(ind.act(c[0], c[2]), ind.act(c[0], c[1]))
              else {"g": c[0]}, "sampled", seed)
    if ind.has_involution:
        run_check(rep, "ind.R-commutes-with-I", "R_g(phi*) = R_g(phi)*",
                  [(g, p) for g in G.elements() for p in morphs],
                  lambda c: None if ind.act(c[0], ind.dual(c[1])) == ind.dual(ind.act(c[0], c[1]))
                  else {"g": c[0], "phi": c[1].to_json()}, mode, seed)
    return rep


class InductionSetup:
    """The three categories compared by omega and tau for given (K, G, phi, xi, eta, fiber).

    outer:  hocolim over G^G(xi) of the induced category
    prod:   hocolim over G^{G x K}(eta x xi) with (g,k).(y,x) = (k y g^-1, g x)
    flat:   hocolim over G^K(phi* xi)  (only when eta = phi*G)
    """

    def __init__(self, K: FiniteGroup, G: FiniteGroup, phi: Sequence[int], xi_n: int,
                 xi_act: Callable[[int, int], int], fiber, involution=None, eta: Biset | None = None):
        if max(K.order, G.order, xi_n) > MAX_INDUCTION:
            raise ValueError(f"sizes are capped at {MAX_INDUCTION} (groups and sets)")
        g_set_check(G, xi_n, xi_act)
        self.K, self.G, self.phi = K, G, tuple(phi)
        self.standard = eta is None
        self.eta = eta or restricted_biset(K, G, phi)
        if self.eta.n > MAX_INDUCTION:
            raise ValueError(f"sizes are capped at {MAX_INDUCTION} (groups and sets)")
        self.xi_n, self.xi_act = xi_n, xi_act
        self.fiber, self.fiber_inv = fiber, involution
        self.inner = induce(K, G, phi, fiber, involution, self.eta)
        TG = transport_groupoid(G, list(range(xi_n)), xi_act, name="G^G(xi)")
        self.outer = Hocolim(TG, [a % G.order for a in range(len(TG.arrows))], self.inner,
                             self.inner.involution if involution is not None else None, name="outer")
        self.GK = direct_product(G, K)
        eta_, nk = self.eta, K.order

        def prod_act(gk, i):
            g, k = divmod(gk, nk)
            y, x = divmod(i, xi_n)
            return eta_.left(k, eta_.right(y, G.inv(g))) * xi_n + xi_act(g, x)

        points = [(y, x) for y in range(eta_.n) for x in range(xi_n)]
        TP = transport_groupoid(self.GK, points, prod_act, name="G^{GxK}(eta x xi)")
        self.prod = Hocolim(TP, [a % self.GK.order % nk for a in range(len(TP.arrows))], fiber, involution,
                            name="product")
        if self.standard:
            TK = transport_groupoid(K, list(range(xi_n)), lambda k, x: xi_act(self.phi[k], x), name="G^K(phi* xi)")
            self.flat = Hocolim(TK, [a % nk for a in range(len(TK.arrows))], fiber, involution, name="flat")
            self.W = self._w_functor()
        else:
            self.flat = self.W = None

    def prod_index(self, y: int, x: int) -> int:
        return y * self.xi_n + x

    def omega_obj(self, X: HcObject) -> HcObject:
        return HcObject(self.prod_index(X.A.x, X.x), X.A.A)

    def omega(self, phi: HocolimMorphism) -> HocolimMorphism:
        """g . (k . nu) |-> (g, k) . nu."""
        G, K, ng = self.G, self.K, self.GK.order
        X, Y = phi.source, phi.target
        src = self.omega_obj(X)
        out = []
        for a, psi in phi.terms:
            g = a % G.order
            for b, nu in psi.terms:
                k = b % K.order
                out.append((src.x * ng + g * K.order + k, nu))
        return self.prod.mor(src, self.omega_obj(Y), out)

    def omega_inv(self, chi: HocolimMorphism) -> HocolimMorphism:
        G, K, ng = self.G, self.K, self.GK.order
        X, Y = chi.source, chi.target
        y1, x1 = divmod(X.x, self.xi_n)
        y2, x2 = divmod(Y.x, self.xi_n)
        src = HcObject(x1, HcObject(y1, X.A))
        tgt = HcObject(x2, HcObject(y2, Y.A))
        by_g: dict[int, list] = {}
        for a, nu in chi.terms:
            g, k = divmod(a % ng, K.order)
            by_g.setdefault(g, []).append((y1 * K.order + k, nu))
        out = []
        for g, inner_terms in by_g.items():
            inner_target = self.inner.act_obj(g, tgt.A)
            out.append((x1 * G.order + g, self.inner.mor(src.A, inner_target, inner_terms)))
        return self.outer.mor(src, tgt, out)

    def _w_functor(self) -> GroupoidFunctor:
        """(x, y) |-> x y and (g, k) |-> k."""
        TP, TK, K = self.prod.groupoid, self.flat.groupoid, self.K
        objs = []
        for i in range(TP.n_objects):
            y, x = divmod(i, self.xi_n)
            objs.append(self.xi_act(y, x))
        arrows = tuple(objs[a // self.GK.order] * K.order + (a % self.GK.order) % K.order
                       for a in range(len(TP.arrows)))
        return GroupoidFunctor(TP, TK, tuple(objs), arrows)

    def tau_obj(self, X: HcObject) -> HcObject:
        return pushforward_obj(self.W, self.omega_obj(X))

    def tau(self, phi: HocolimMorphism) -> HocolimMorphism:
        return hc_pushforward(self.W, self.flat, self.omega(phi))


def check_induction_isos(setup: InductionSetup, max_rank: int = 1, seed: int = 0, pair_cap: int = 20000,
                         naturality: tuple | None = None) -> Report:
    """omega is an isomorphism compatible with the involution; tau is full and faithful.

    Objects have fibers of rank exactly ``max_rank``; hom-sets are enumerated in full.
    ``naturality`` = (setup2, f) with f an equivariant map xi -> xi2 spot-checks tau's naturality.
    """
    if max_rank > 1:
        raise ValueError("induction checks are capped at rank 1 fibers")
    rep = Report(seed=seed)
    O, P = setup.outer, setup.prod
    objs = O.objects(max_rank, min_rank=max_rank)
    rng = random.Random(seed)

    run_check(rep, "omega.objects-bijective", "(x,(y,A)) |-> ((y,x),A) is a bijection", [0],
              lambda _: None if sorted(map(repr, (setup.omega_obj(X) for X in objs)))
              == sorted(map(repr, P.objects(max_rank, min_rank=max_rank))) and len(set(map(setup.omega_obj, objs))) == len(objs)
              else {"reason": "object map is not bijective"})

    morphs: list = []

    def hom_bijective(case):
        X, Y = case
        src = list(O.hom(X, Y))
        morphs.extend(src)
        images = [setup.omega(p) for p in src]
        n = P.hom_size(setup.omega_obj(X), setup.omega_obj(Y))
        if len(set(images)) != len(src) or len(src) != n:
            return {"X": repr(X), "Y": repr(Y), "source": len(src), "target": n}
        for p, q in zip(src, images):
            if setup.omega_inv(q) != p:
                return {"X": repr(X), "Y": repr(Y), "phi": p.to_json(), "reason": "omega^-1 omega != id"}
        return None

    run_check(rep, "omega.hom-bijective", "omega is a bijection on every hom-set",
              list(itertools.product(objs, repeat=2)), hom_bijective)
    rep.meta["morphisms"] = len(morphs)

    by_target: dict = {}
    for p in morphs:
        by_target.setdefault(p.target, []).append(p)
    pairs = [(rng.choice(by_target[q.source]), q) for q in morphs if q.source in by_target]
    if len(pairs) > pair_cap:
        pairs = [pairs[i] for i in sorted(rng.sample(range(len(pairs)), pair_cap))]
    run_check(rep, "omega.composition", "omega(psi phi) = omega(psi) omega(phi)", pairs,
              lambda c: None if setup.omega(O.compose(c[1], c[0])) == P.compose(setup.omega(c[1]), setup.omega(c[0]))
              else {"phi": c[0].to_json(), "psi": c[1].to_json()}, "sampled", seed)
    run_check(rep, "omega.identity", "omega(id) = id", objs,
              lambda X: None if setup.omega(O.identity(X)) == P.identity(setup.omega_obj(X)) else {"object": repr(X)})
    if O.has_involution:
        run_check(rep, "omega.involution", "omega(phi*) = omega(phi)*", morphs,
                  lambda p: None if setup.omega(O.dual(p)) == P.dual(setup.omega(p)) else {"phi": p.to_json()})
        run_check(rep, "omega.E", "omega(E(X)) = E(omega X)", objs,
                  lambda X: None if setup.omega(O.E(X)) == P.E(setup.omega_obj(X)) else {"object": repr(X)})

    if setup.flat is None:
        return rep
    W, F = setup.W, setup.flat
    run_check(rep, "tau.W-functor", "W: (x,y) |-> xy, (g,k) |-> k is a functor", [0],
              lambda _: None if W.is_functor() else {"reason": "W is not a functor"})
    run_check(rep, "tau.W-equivalence", "W is an equivalence of groupoids", [0],
              lambda _: None if W.is_equivalence() else {"reason": "W is not an equivalence"})

    def tau_ff(case):
        X, Y = case
        src = [p for p in morphs if p.source == X and p.target == Y]
        n = F.hom_size(setup.tau_obj(X), setup.tau_obj(Y))
        if len({setup.tau(p) for p in src}) != len(src) or len(src) != n:
            return {"X": repr(X), "Y": repr(Y), "source": len(src), "target": n}
        return None

    run_check(rep, "tau.full-faithful", "tau = W_* omega is a bijection on hom-sets",
              list(itertools.product(objs, repeat=2)), tau_ff)
    run_check(rep, "tau.essentially-surjective", "every object of the target is isomorphic to an image", [0],
              lambda _: None if all(any(F.groupoid.hom(z, setup.tau_obj(X).x) for X in objs)
                                    for z in range(F.groupoid.n_objects)) else {"reason": "object missed"})
    run_check(rep, "tau.composition", "tau(psi phi) = tau(psi) tau(phi)", pairs,
              lambda c: None if setup.tau(O.compose(c[1], c[0])) == F.compose(setup.tau(c[1]), setup.tau(c[0]))
              else {"phi": c[0].to_json()}, "sampled", seed)
    if O.has_involution:
        run_check(rep, "tau.involution", "tau(phi*) = tau(phi)*", morphs,
                  lambda p: None if setup.tau(O.dual(p)) == F.dual(setup.tau(p)) else {"phi": p.to_json()})

    if naturality is not None:
        other, f = naturality
        rep.extend(_tau_naturality(setup, other, f, morphs, rng), prefix="")
    return rep


def _tau_naturality(s1: InductionSetup, s2: InductionSetup, f: Sequence[int], morphs, rng) -> Report:
    """For an equivariant f: xi1 -> xi2, tau2 after f_* equals f_* after tau1."""
    rep = Report()
    fO = transport_map(s1.outer.groupoid, s2.outer.groupoid, f)
    fK = transport_map(s1.flat.groupoid, s2.flat.groupoid, f)

    def push_outer(p):
        return hc_pushforward(fO, s2.outer, p)

    sample = [morphs[i] for i in sorted(rng.sample(range(len(morphs)), min(500, len(morphs))))]
    run_check(rep, "tau.natural-in-xi", "tau2(f_* phi) = f_*(tau1(phi))", sample,
              lambda p: None if s2.tau(push_outer(p)) == hc_pushforward(fK, s2.flat, s1.tau(p))
              else {"phi": p.to_json()}, "sampled", 0)
    return rep
