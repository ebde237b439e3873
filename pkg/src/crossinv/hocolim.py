"""Homotopy colimits over finite groupoids, with involution, and the ⊕-completion.

A fiber is a category with a strict right action of a group G, given by
``act_obj(g, A)`` and ``act(g, phi)`` with R_{g2} R_{g1} = R_{g1 g2}.  A
groupoid together with a homomorphism ``proj`` from its arrows to G defines
the contravariant functor F(f) = R_{proj(f)}.

Fibers must provide: group, identity, compose, zero, add, is_zero, inverse,
hom, hom_size, random_mor, objects(max_rank), act_obj, act.  An optional
fiber involution provides obj, mor, E and T(g, A): R_g(A*) -> (R_g A)*.
The strictification of FGF(R) (``strictify.Strictification`` with
``StrictInvolution``) is the fiber used throughout; a Hocolim with a right
action is itself a valid fiber, which is how induction is built.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .groupoid import FiniteGroupoid, GroupoidFunctor
from .report import Report, run_check

MIN_SAMPLES = 500
EXHAUSTIVE_LIMIT = 100_000


@dataclass(frozen=True)
class HcObject:
    x: int
    A: Any

    def __repr__(self):
        return f"({self.x},{self.A!r})"


@dataclass(frozen=True)
class HocolimMorphism:
    """Sum of f . phi_f over arrows f: x -> y; terms sorted, zero terms dropped."""

    source: HcObject
    target: HcObject
    terms: tuple

    def component(self, a: int, hc: "Hocolim"):
        for b, phi in self.terms:
            if b == a:
                return phi
        return hc.fiber.zero(self.source.A, hc.F_obj(a, self.target.A))

    def to_json(self) -> dict:
        return {"source": repr(self.source), "target": repr(self.target),
                "terms": [{"arrow": a, "component": phi.to_json()} for a, phi in self.terms]}


class Hocolim:
    def __init__(self, groupoid: FiniteGroupoid, proj: Sequence[int] | Callable[[int], int], fiber,
                 involution=None, right_action: Callable[[int], GroupoidFunctor] | None = None,
                 acting_group=None, name: str = "hocolim"):
        self.groupoid = groupoid
        self.proj = tuple(proj) if not callable(proj) else tuple(proj(a) for a in range(len(groupoid.arrows)))
        self.fiber = fiber
        self.fiber_inv = involution
        self.right_action = right_action
        self.group = acting_group
        self.name = name
        G = fiber.group
        for (a2, a1), a in groupoid.comp.items():
            if self.proj[a] != G.mul(self.proj[a2], self.proj[a1]):
                raise ValueError(f"proj is not a functor at arrows {a2}, {a1}")

    # fiber functor

    def F_obj(self, a: int, B):
        return self.fiber.act_obj(self.proj[a], B)

    def F_mor(self, a: int, psi):
        return self.fiber.act(self.proj[a], psi)

    # objects and morphisms

    def obj(self, x: int, A) -> HcObject:
        return HcObject(x, A)

    def objects(self, max_rank: int, min_rank: int = 0) -> list[HcObject]:
        fib = self.fiber.objects(max_rank, min_rank) if min_rank else self.fiber.objects(max_rank)
        return [HcObject(x, A) for x in range(self.groupoid.n_objects) for A in fib]

    def mor(self, X: HcObject, Y: HcObject, terms) -> HocolimMorphism:
        """Canonical morphism from an iterable of (arrow, component) or a dict."""
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, Any] = {}
        grp = self.groupoid
        for a, phi in items:
            if grp.src(a) != X.x or grp.dst(a) != Y.x:
                raise ValueError(f"arrow {grp.fmt_arrow(a)} is not in hom({X.x},{Y.x})")
            if phi.source != X.A or phi.target != self.F_obj(a, Y.A):
                raise ValueError(f"component at arrow {a} has the wrong endpoints")
            acc[a] = self.fiber.add(acc[a], phi) if a in acc else phi
        kept = tuple(sorted((a, phi) for a, phi in acc.items() if not self.fiber.is_zero(phi))
                     ) if acc else ()
        return HocolimMorphism(X, Y, kept)

    def identity(self, X: HcObject) -> HocolimMorphism:
        return self.mor(X, X, [(self.groupoid.identity[X.x], self.fiber.identity(X.A))])

    def zero(self, X: HcObject, Y: HcObject) -> HocolimMorphism:
        return HocolimMorphism(X, Y, ())

    def is_zero(self, phi: HocolimMorphism) -> bool:
        return not phi.terms

    def add(self, phi: HocolimMorphism, psi: HocolimMorphism) -> HocolimMorphism:
        if (phi.source, phi.target) != (psi.source, psi.target):
            raise ValueError("cannot add morphisms with different endpoints")
        return self.mor(phi.source, phi.target, phi.terms + psi.terms)

    def neg(self, phi: HocolimMorphism) -> HocolimMorphism:
        return HocolimMorphism(phi.source, phi.target, tuple((a, self.fiber.neg(c)) for a, c in phi.terms))

    def compose(self, psi: HocolimMorphism, phi: HocolimMorphism) -> HocolimMorphism:
        """psi after phi: component at h is sum over g f = h of F(f)(psi_g) phi_f."""
        if phi.target != psi.source:
            raise ValueError(f"cannot compose: {phi.target} != {psi.source}")
        fib, grp = self.fiber, self.groupoid
        out = []
        for f, pf in phi.terms:
            for g, pg in psi.terms:
                out.append((grp.compose(g, f), fib.compose(self.F_mor(f, pg), pf)))
        return self.mor(phi.source, psi.target, out)

    def chain(self, *ms: HocolimMorphism) -> HocolimMorphism:
        """chain(fn, ..., f1) = fn after ... after f1."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.compose(m, out)
        return out

    def inverse(self, phi: HocolimMorphism) -> HocolimMorphism:
        """Inverse of a single-term morphism f . phi with phi invertible."""
        if not phi.terms and self.hom_size(phi.source, phi.source) == 1 == self.hom_size(phi.target, phi.target):
            return self.zero(phi.target, phi.source)
        if len(phi.terms) != 1:
            raise ValueError("only single-term isomorphisms are inverted")
        (f, pf), = phi.terms
        fi = self.groupoid.inv(f)
        comp = self.F_mor(fi, self.fiber.inverse(pf))
        return self.mor(phi.target, phi.source, [(fi, comp)])

    def iso_from_base(self, Y: HcObject, x: int) -> HocolimMorphism:
        """f . id: (x, F(f)(B)) -> (y, B) for the first arrow f: x -> y."""
        arrows = self.groupoid.hom(x, Y.x)
        if not arrows:
            raise ValueError(f"no arrow {x} -> {Y.x}; the groupoid is not connected")
        f = arrows[0]
        FB = self.F_obj(f, Y.A)
        return self.mor(HcObject(x, FB), Y, [(f, self.fiber.identity(FB))])

    # enumeration

    def _component_homs(self, X: HcObject, Y: HcObject):
        return [(a, X.A, self.F_obj(a, Y.A)) for a in self.groupoid.hom(X.x, Y.x)]

    def hom_size(self, X: HcObject, Y: HcObject) -> int:
        return math.prod(self.fiber.hom_size(A, B) for _, A, B in self._component_homs(X, Y))

    def hom(self, X: HcObject, Y: HcObject):
        comps = self._component_homs(X, Y)
        for choice in itertools.product(*(list(self.fiber.hom(A, B)) for _, A, B in comps)):
            yield self.mor(X, Y, [(a, phi) for (a, _, _), phi in zip(comps, choice)])

    def random_mor(self, X: HcObject, Y: HcObject, rng: random.Random) -> HocolimMorphism:
        return self.mor(X, Y, [(a, self.fiber.random_mor(A, B, rng)) for a, A, B in self._component_homs(X, Y)])

    # involution

    @property
    def has_involution(self) -> bool:
        return self.fiber_inv is not None

    def _inv(self):
        if self.fiber_inv is None:
            raise ValueError("fiber carries no involution data")
        return self.fiber_inv

    def _T(self, a: int, B):
        inv = self._inv()
        T = getattr(inv, "T", None)
        if T is None:
            return self.fiber.identity(inv.obj(self.F_obj(a, B)))
        return T(self.proj[a], B)

    def dual_obj(self, X: HcObject) -> HcObject:
        return HcObject(X.x, self._inv().obj(X.A))

    def dual(self, phi: HocolimMorphism) -> HocolimMorphism:
        """(phi*)_f = F(f)((phi_{f^-1})*) F(f)(T(f^-1)(B)) for f: y -> x."""
        inv, fib, grp = self._inv(), self.fiber, self.groupoid
        B = phi.target.A
        out = []
        for fi, pf in phi.terms:
            f = grp.inv(fi)
            comp = fib.compose(self.F_mor(f, inv.mor(pf)), self.F_mor(f, self._T(fi, B)))
            out.append((f, comp))
        return self.mor(self.dual_obj(phi.target), self.dual_obj(phi.source), out)

    def E(self, X: HcObject) -> HocolimMorphism:
        """id_x . E(A)."""
        e = self._inv().E(X.A)
        return self.mor(X, self.dual_obj(self.dual_obj(X)), [(self.groupoid.identity[X.x], e)])

    @property
    def involution(self) -> "HocolimInvolution":
        return HocolimInvolution(self)

    # strict right action, when the groupoid carries one

    def act_obj(self, g: int, X: HcObject) -> HcObject:
        return HcObject(self.right_action(g).obj(X.x), X.A)

    def act(self, g: int, phi: HocolimMorphism) -> HocolimMorphism:
        W = self.right_action(g)
        return self.mor(self.act_obj(g, phi.source), self.act_obj(g, phi.target),
                        [(W.arrow(a), c) for a, c in phi.terms])


class HocolimInvolution:
    """Adapter exposing (I, E, T) of a Hocolim under the fiber-involution names."""

    def __init__(self, hc: Hocolim):
        self.hc = hc

    def obj(self, X):
        return self.hc.dual_obj(X)

    def mor(self, phi):
        return self.hc.dual(phi)

    def E(self, X):
        return self.hc.E(X)

    def T(self, g, X):
        return self.hc.identity(self.hc.dual_obj(self.hc.act_obj(g, X)))


def hc_compose(hc: Hocolim, psi: HocolimMorphism, phi: HocolimMorphism) -> HocolimMorphism:
    return hc.compose(psi, phi)


def hc_dual(hc: Hocolim, phi: HocolimMorphism) -> HocolimMorphism:
    return hc.dual(phi)


def hc_E(hc: Hocolim, X: HcObject) -> HocolimMorphism:
    return hc.E(X)


# functoriality in the groupoid and in the fiber


def pullback(hc: Hocolim, W: GroupoidFunctor, name: str = "pullback") -> Hocolim:
    """The hocolim of F after W over the source groupoid of W."""
    if W.target is not hc.groupoid:
        raise ValueError("W does not land in the groupoid of hc")
    if not W.is_functor():
        raise ValueError("W is not a functor")
    return Hocolim(W.source, [hc.proj[W.arrow(a)] for a in range(len(W.source.arrows))], hc.fiber,
                   hc.fiber_inv, name=name)


def hc_pushforward(W: GroupoidFunctor, target: Hocolim, phi: HocolimMorphism) -> HocolimMorphism:
    """W_*: component at f is the sum of phi_{f1} over W(f1) = f."""
    X, Y = phi.source, phi.target
    return target.mor(HcObject(W.obj(X.x), X.A), HcObject(W.obj(Y.x), Y.A),
                      [(W.arrow(a), c) for a, c in phi.terms])


def pushforward_obj(W: GroupoidFunctor, X: HcObject) -> HcObject:
    return HcObject(W.obj(X.x), X.A)


class FiberFunctor:
    """A functor S between fibers commuting with the actions, with optional U: S(A*) -> S(A)*."""

    def __init__(self, obj: Callable, mor: Callable, U: Callable | None = None, name: str = "S"):
        self.obj, self.mor, self.U, self.name = obj, mor, U, name

    @classmethod
    def identity(cls, fiber, fiber_inv=None) -> "FiberFunctor":
        U = (lambda A: fiber.identity(fiber_inv.obj(A))) if fiber_inv is not None else None
        return cls(lambda A: A, lambda f: f, U, "id")

    def then(self, other: "FiberFunctor", target_fiber=None) -> "FiberFunctor":
        """other after self; U composes as other(U_self) then U_other."""
        U = None
        if self.U is not None and other.U is not None:
            U = lambda A: target_fiber.compose(other.U(self.obj(A)), other.mor(self.U(A)))
        return FiberFunctor(lambda A: other.obj(self.obj(A)), lambda f: other.mor(self.mor(f)), U,
                            f"{other.name}.{self.name}")


def hc_map(S: FiberFunctor, target: Hocolim, phi: HocolimMorphism) -> HocolimMorphism:
    """The induced functor: f . phi |-> f . S(phi)."""
    X, Y = phi.source, phi.target
    return target.mor(HcObject(X.x, S.obj(X.A)), HcObject(Y.x, S.obj(Y.A)),
                      [(a, S.mor(c)) for a, c in phi.terms])


def hc_map_obj(S: FiberFunctor, X: HcObject) -> HcObject:
    return HcObject(X.x, S.obj(X.A))


def hc_U(S: FiberFunctor, target: Hocolim, X: HcObject) -> HocolimMorphism:
    """id_x . U(A): (x, S(A*)) -> (x, S(A)*)."""
    u = S.U(X.A)
    return target.mor(HcObject(X.x, u.source), HcObject(X.x, u.target), [(target.groupoid.identity[X.x], u)])


# sampling


def morphism_cases(hc: Hocolim, max_rank: int, seed: int, min_samples: int = MIN_SAMPLES,
                   exhaustive_rank: int = 1, limit: int = EXHAUSTIVE_LIMIT):
    """Every morphism between objects of rank <= exhaustive_rank, then seeded samples.

    Returns (morphisms, mode, n_exhaustive).
    """
    rng = random.Random(seed)
    small_objs = hc.objects(exhaustive_rank)
    out = []
    total = sum(hc.hom_size(X, Y) for X, Y in itertools.product(small_objs, repeat=2))
    if total <= limit:
        for X, Y in itertools.product(small_objs, repeat=2):
            out.extend(hc.hom(X, Y))
    n_exh = len(out)
    pairs = [(X, Y) for X, Y in itertools.product(hc.objects(max_rank), repeat=2)
             if (X not in small_objs or Y not in small_objs or not n_exh) and hc.hom_size(X, Y) > 1]
    mode = "exhaustive"
    if pairs:
        per = math.ceil(min_samples / len(pairs))
        out += [hc.random_mor(X, Y, rng) for X, Y in pairs for _ in range(per)]
        mode = "sampled"
    return out, mode, n_exh


def _pairs(morphs, rng, cap: int):
    """Composable pairs (phi, psi): every psi gets one random phi ending at its source."""
    by_target: dict = {}
    for phi in morphs:
        by_target.setdefault(phi.target, []).append(phi)
    out = [(rng.choice(by_target[psi.source]), psi) for psi in morphs if psi.source in by_target]
    return out[:cap] if cap else out


def verify_hocolim(hc: Hocolim, max_rank: int = 2, seed: int = 0, min_samples: int = MIN_SAMPLES) -> Report:
    """Category and Z-linear structure of the homotopy colimit."""
    rep = Report(seed=seed)
    morphs, mode, _ = morphism_cases(hc, max_rank, seed, min_samples)
    rng = random.Random(seed + 3)
    pairs = _pairs(morphs, rng, 0)

    run_check(rep, "hocolim.identity", "id phi = phi id = phi", morphs,
              lambda p: None if hc.compose(hc.identity(p.target), p) == p == hc.compose(p, hc.identity(p.source))
              else {"phi": p.to_json()}, mode, seed)

    by_target: dict = {}
    for phi in morphs:
        by_target.setdefault(phi.target, []).append(phi)

    by_source: dict = {}
    for m in morphs:
        by_source.setdefault(m.source, []).append(m)

    def assoc3(case):
        phi, psi = case
        chi = rng.choice(by_source.get(psi.target, [hc.identity(psi.target)]))
        if hc.compose(chi, hc.compose(psi, phi)) != hc.compose(hc.compose(chi, psi), phi):
            return {"phi": phi.to_json(), "psi": psi.to_json(), "chi": chi.to_json()}
        return None

    run_check(rep, "hocolim.associative", "(chi psi) phi = chi (psi phi)", pairs, assoc3, "sampled", seed)

    def bilinear(case):
        phi, psi = case
        others = by_target.get(phi.target, [phi])
        phi2 = rng.choice(others)
        if phi2.source != phi.source:
            phi2 = phi
        lhs = hc.compose(psi, hc.add(phi, phi2))
        rhs = hc.add(hc.compose(psi, phi), hc.compose(psi, phi2))
        return None if lhs == rhs else {"phi": phi.to_json(), "psi": psi.to_json()}

    run_check(rep, "hocolim.bilinear", "psi (phi + phi') = psi phi + psi phi'", pairs, bilinear, "sampled", seed)

    def decisive(case):
        phi, psi = case
        # (g.psi)(f.phi) = (g f).(F(f)(psi) phi) for each pair of terms
        for f, pf in phi.terms:
            for g, pg in psi.terms:
                one = hc.mor(phi.source, phi.target, [(f, pf)])
                two = hc.mor(psi.source, psi.target, [(g, pg)])
                want = hc.mor(phi.source, psi.target,
                              [(hc.groupoid.compose(g, f), hc.fiber.compose(hc.F_mor(f, pg), pf))])
                if hc.compose(two, one) != want:
                    return {"f": f, "g": g}
        return None

    run_check(rep, "hocolim.single-term", "(g.psi)(f.phi) = (g f).(F(f)(psi) phi)",
              pairs[: max(min_samples, 200)], decisive, "sampled", seed)

    if hc.groupoid.connected:
        base = 0

        def to_base(Y):
            iso = hc.iso_from_base(Y, base)
            inv = hc.inverse(iso)
            ok = hc.compose(inv, iso) == hc.identity(iso.source) and hc.compose(iso, inv) == hc.identity(Y)
            return None if ok else {"object": repr(Y)}

        run_check(rep, "hocolim.iso-to-base", "(y,B) is isomorphic to (x,F(f)B) via f.id",
                  hc.objects(max_rank), to_base)
    return rep


def verify_hocolim_involution(hc: Hocolim, max_rank: int = 2, seed: int = 0,
                              min_samples: int = MIN_SAMPLES) -> Report:
    """I is a contravariant functor, E is natural, E(I X) = I(E(X)^-1)."""
    rep = Report(seed=seed)
    morphs, mode, n_exh = morphism_cases(hc, max_rank, seed, min_samples)
    rep.meta["morphisms"] = len(morphs)
    rep.meta["exhaustive_morphisms"] = n_exh
    rng = random.Random(seed + 5)
    pairs = _pairs(morphs, rng, 0)

    def contra(case):
        phi, psi = case
        if hc.dual(hc.compose(psi, phi)) != hc.compose(hc.dual(phi), hc.dual(psi)):
            return {"phi": phi.to_json(), "psi": psi.to_json()}
        return None

    run_check(rep, "hinv.contravariant", "(psi phi)* = phi* psi*", pairs, contra, mode, seed)
    run_check(rep, "hinv.identity", "id* = id", hc.objects(max_rank),
              lambda X: None if hc.dual(hc.identity(X)) == hc.identity(hc.dual_obj(X)) else {"object": repr(X)})
    run_check(rep, "hinv.additive", "(phi + phi')* = phi* + phi'*", pairs,
              lambda c: None if hc.dual(hc.add(c[1], c[1])) == hc.add(hc.dual(c[1]), hc.dual(c[1]))
              else {"psi": c[1].to_json()}, mode, seed)

    def e_nat(phi):
        lhs = hc.compose(hc.E(phi.target), phi)
        rhs = hc.compose(hc.dual(hc.dual(phi)), hc.E(phi.source))
        return None if lhs == rhs else {"phi": phi.to_json(), "lhs": lhs.to_json(), "rhs": rhs.to_json()}

    run_check(rep, "hinv.E-natural", "E(Y) phi = phi** E(X)", morphs, e_nat, mode, seed)

    def e_cond(X):
        lhs = hc.E(hc.dual_obj(X))
        rhs = hc.dual(hc.inverse(hc.E(X)))
        return None if lhs == rhs else {"object": repr(X)}

    run_check(rep, "hinv.E-condition", "E(X*) = (E(X)^-1)*", hc.objects(max_rank), e_cond)
    return rep


def verify_pushforward(W: GroupoidFunctor, target: Hocolim, max_rank: int = 1, seed: int = 0,
                       min_samples: int = MIN_SAMPLES) -> Report:
    """W_* is a functor, commutes with the involution, and is full+faithful when W is an equivalence."""
    src = pullback(target, W)
    rep = Report(seed=seed)
    morphs, mode, _ = morphism_cases(src, max_rank, seed, min_samples)
    rng = random.Random(seed + 9)
    pairs = _pairs(morphs, rng, 0)
    push = lambda m: hc_pushforward(W, target, m)

    run_check(rep, "push.functor", "W_*(psi phi) = W_*(psi) W_*(phi)", pairs,
              lambda c: None if push(src.compose(c[1], c[0])) == target.compose(push(c[1]), push(c[0]))
              else {"phi": c[0].to_json(), "psi": c[1].to_json()}, mode, seed)
    run_check(rep, "push.identity", "W_*(id) = id", src.objects(max_rank),
              lambda X: None if push(src.identity(X)) == target.identity(pushforward_obj(W, X)) else {"object": repr(X)})
    if target.has_involution:
        run_check(rep, "push.involution", "W_*(phi*) = W_*(phi)*", morphs,
                  lambda m: None if push(src.dual(m)) == target.dual(push(m)) else {"phi": m.to_json()}, mode, seed)
        run_check(rep, "push.E", "W_*(E(X)) = E(W_* X)", src.objects(max_rank),
                  lambda X: None if push(src.E(X)) == target.E(pushforward_obj(W, X)) else {"object": repr(X)})
    if W.is_equivalence():
        def ff(case):
            X, Y = case
            n = src.hom_size(X, Y)
            m = target.hom_size(pushforward_obj(W, X), pushforward_obj(W, Y))
            if n != m:
                return {"X": repr(X), "Y": repr(Y), "source": n, "target": m}
            if n <= 2 * EXHAUSTIVE_LIMIT // 100:
                images = {push(f) for f in src.hom(X, Y)}
                if len(images) != n:
                    return {"X": repr(X), "Y": repr(Y), "reason": "not injective"}
            return None

        run_check(rep, "push.full-faithful", "W_* is a bijection on hom-sets",
                  list(itertools.product(src.objects(max_rank), repeat=2)), ff)
    return rep


def verify_hc_map(S: FiberFunctor, source: Hocolim, target: Hocolim, max_rank: int = 1, seed: int = 0,
                  equivalence: bool = False, min_samples: int = MIN_SAMPLES) -> Report:
    """The induced functor of S is a functor; with U, a functor of categories with involution."""
    rep = Report(seed=seed)
    morphs, mode, _ = morphism_cases(source, max_rank, seed, min_samples)
    rng = random.Random(seed + 13)
    pairs = _pairs(morphs, rng, 0)
    F = lambda m: hc_map(S, target, m)
    objs = source.objects(max_rank)

    run_check(rep, "intS.functor", "S(psi phi) = S(psi) S(phi)", pairs,
              lambda c: None if F(source.compose(c[1], c[0])) == target.compose(F(c[1]), F(c[0]))
              else {"phi": c[0].to_json(), "psi": c[1].to_json()}, mode, seed)
    run_check(rep, "intS.identity", "S(id) = id", objs,
              lambda X: None if F(source.identity(X)) == target.identity(hc_map_obj(S, X)) else {"object": repr(X)})
    if S.U is not None and source.has_involution:
        U = lambda X: hc_U(S, target, X)

        def natural(phi):
            # U(X) S(phi*) = S(phi)* U(Y)
            lhs = target.compose(U(phi.source), F(source.dual(phi)))
            rhs = target.compose(target.dual(F(phi)), U(phi.target))
            return None if lhs == rhs else {"phi": phi.to_json()}

        run_check(rep, "intS.U-natural", "U(X) S(phi*) = S(phi)* U(Y)", morphs, natural, mode, seed)

        def e_square(X):
            # T(A*) F(E(A)) = T(A)* E(F(A))
            lhs = target.compose(U(source.dual_obj(X)), F(source.E(X)))
            rhs = target.compose(target.dual(U(X)), target.E(hc_map_obj(S, X)))
            return None if lhs == rhs else {"object": repr(X)}

        run_check(rep, "intS.E-square", "U(X*) S(E X) = U(X)* E(S X)", objs, e_square)
    if equivalence:
        def ff(case):
            X, Y = case
            n = source.hom_size(X, Y)
            if n != target.hom_size(hc_map_obj(S, X), hc_map_obj(S, Y)):
                return {"X": repr(X), "Y": repr(Y)}
            if n <= 1000 and len({F(f) for f in source.hom(X, Y)}) != n:
                return {"X": repr(X), "Y": repr(Y), "reason": "not injective"}
            return None

        run_check(rep, "intS.full-faithful", "S induces bijections on hom-sets",
                  list(itertools.product(objs, repeat=2)), ff)
    return rep


def verify_push_map_compat(S: FiberFunctor, W: GroupoidFunctor, target: Hocolim, max_rank: int = 1,
                           seed: int = 0, min_samples: int = MIN_SAMPLES) -> Report:
    """The induced functor of S commutes with W_*."""
    src = pullback(target, W)
    rep = Report(seed=seed)
    morphs, mode, _ = morphism_cases(src, max_rank, seed, min_samples)
    run_check(rep, "push.commutes-with-S", "S W_*(phi) = W_*(S phi)", morphs,
              lambda m: None if hc_map(S, target, hc_pushforward(W, target, m))
              == hc_pushforward(W, target, hc_map(S, src, m)) else {"phi": m.to_json()}, mode, seed)
    return rep


# the ⊕-completion of a Z-category


@dataclass(frozen=True)
class BlockMorphism:
    """(A_1..A_m) -> (B_1..B_n); blocks[i][j]: A_i -> B_j."""

    source: tuple
    target: tuple
    blocks: tuple

    def to_json(self) -> dict:
        return {"source": [repr(a) for a in self.source], "target": [repr(b) for b in self.target],
                "blocks": [[b.to_json() for b in row] for row in self.blocks]}


class OplusCompletion:
    """Tuples of objects with block-matrix morphisms; sum is concatenation.

    ``cat`` provides identity, compose, zero, add, hom, hom_size, random_mor;
    an involution (obj, mor, E, and cat.inverse on E) extends componentwise.
    """

    def __init__(self, cat, involution=None):
        self.cat = cat
        self.cat_inv = involution

    def obj(self, *objs) -> tuple:
        return tuple(objs)

    def mor(self, source: tuple, target: tuple, blocks) -> BlockMorphism:
        blocks = tuple(tuple(row) for row in blocks)
        if len(blocks) != len(source) or any(len(r) != len(target) for r in blocks):
            raise ValueError("block shape does not match the tuples")
        for i, A in enumerate(source):
            for j, B in enumerate(target):
                if blocks[i][j].source != A or blocks[i][j].target != B:
                    raise ValueError(f"block ({i},{j}) has the wrong endpoints")
        return BlockMorphism(tuple(source), tuple(target), blocks)

    def identity(self, X: tuple) -> BlockMorphism:
        c = self.cat
        return BlockMorphism(X, X, tuple(tuple(c.identity(A) if i == j else c.zero(A, B)
                                               for j, B in enumerate(X)) for i, A in enumerate(X)))

    def zero(self, X: tuple, Y: tuple) -> BlockMorphism:
        return BlockMorphism(X, Y, tuple(tuple(self.cat.zero(A, B) for B in Y) for A in X))

    def add(self, f: BlockMorphism, g: BlockMorphism) -> BlockMorphism:
        if (f.source, f.target) != (g.source, g.target):
            raise ValueError("cannot add morphisms with different endpoints")
        return BlockMorphism(f.source, f.target, tuple(tuple(self.cat.add(a, b) for a, b in zip(r, s))
                                                       for r, s in zip(f.blocks, g.blocks)))

    def compose(self, g: BlockMorphism, f: BlockMorphism) -> BlockMorphism:
        """(g f)_{ik} = sum_j g_{jk} f_{ij}."""
        if f.target != g.source:
            raise ValueError("morphisms are not composable")
        c = self.cat
        rows = []
        for i, A in enumerate(f.source):
            row = []
            for k, C in enumerate(g.target):
                acc = c.zero(A, C)
                for j in range(len(f.target)):
                    acc = c.add(acc, c.compose(g.blocks[j][k], f.blocks[i][j]))
                row.append(acc)
            rows.append(tuple(row))
        return BlockMorphism(f.source, g.target, tuple(rows))

    def oplus_obj(self, X: tuple, Y: tuple) -> tuple:
        return X + Y

    def oplus(self, f: BlockMorphism, g: BlockMorphism) -> BlockMorphism:
        c = self.cat
        rows = [r + tuple(c.zero(A, B) for B in g.target) for r, A in zip(f.blocks, f.source)]
        rows += [tuple(c.zero(A, B) for B in f.target) + r for r, A in zip(g.blocks, g.source)]
        return BlockMorphism(f.source + g.source, f.target + g.target, tuple(rows))

    def inclusion(self, X: tuple, Y: tuple, first: bool = True) -> BlockMorphism:
        """X -> X + Y (first) or Y -> X + Y."""
        c = self.cat
        src = X if first else Y
        off = 0 if first else len(X)
        XY = X + Y
        return BlockMorphism(src, XY, tuple(tuple(c.identity(A) if j == i + off else c.zero(A, B)
                                                  for j, B in enumerate(XY)) for i, A in enumerate(src)))

    def projection(self, X: tuple, Y: tuple, first: bool = True) -> BlockMorphism:
        c = self.cat
        tgt = X if first else Y
        off = 0 if first else len(X)
        XY = X + Y
        return BlockMorphism(XY, tgt, tuple(tuple(c.identity(A) if i == j + off else c.zero(A, B)
                                                  for j, B in enumerate(tgt)) for i, A in enumerate(XY)))

    def Q(self, x):
        """A |-> (A), phi |-> the 1x1 block."""
        if hasattr(x, "source") and hasattr(x, "target"):
            return BlockMorphism((x.source,), (x.target,), ((x,),))
        return (x,)

    def hom_size(self, X: tuple, Y: tuple) -> int:
        return math.prod(self.cat.hom_size(A, B) for A in X for B in Y)

    def random_mor(self, X: tuple, Y: tuple, rng) -> BlockMorphism:
        return BlockMorphism(X, Y, tuple(tuple(self.cat.random_mor(A, B, rng) for B in Y) for A in X))

    # involution

    def dual_obj(self, X: tuple) -> tuple:
        return tuple(self.cat_inv.obj(A) for A in X)

    def dual(self, f: BlockMorphism) -> BlockMorphism:
        """(f*)_{ji} = (f_{ij})*."""
        inv = self.cat_inv
        m, n = len(f.source), len(f.target)
        return BlockMorphism(self.dual_obj(f.target), self.dual_obj(f.source),
                             tuple(tuple(inv.mor(f.blocks[i][j]) for i in range(m)) for j in range(n)))

    def E(self, X: tuple) -> BlockMorphism:
        c, inv = self.cat, self.cat_inv
        XX = self.dual_obj(self.dual_obj(X))
        return BlockMorphism(X, XX, tuple(tuple(inv.E(A) if i == j else c.zero(A, B) for j, B in enumerate(XX))
                                          for i, A in enumerate(X)))

    def inverse_diag(self, f: BlockMorphism) -> BlockMorphism:
        """Inverse of a block-diagonal isomorphism."""
        c = self.cat
        n = len(f.source)
        return BlockMorphism(f.target, f.source,
                             tuple(tuple(c.inverse(f.blocks[j][j]) if i == j else c.zero(f.target[i], f.source[j])
                                         for j in range(n)) for i in range(n)))

    def flatten_obj(self, XX: tuple) -> tuple:
        """((A..), (B..), ..) |-> (A.., B.., ..): the counit of (⊕, forget) on a completion."""
        return tuple(A for X in XX for A in X)

    def flatten(self, F: BlockMorphism) -> BlockMorphism:
        """Morphism of the double completion (blocks are BlockMorphisms) to one big block matrix."""
        rows = []
        for i, X in enumerate(F.source):
            for a in range(len(X)):
                rows.append(tuple(F.blocks[i][j].blocks[a][b] for j, Y in enumerate(F.target) for b in range(len(Y))))
        return BlockMorphism(self.flatten_obj(F.source), self.flatten_obj(F.target), tuple(rows))


def oplus_complete(cat, involution=None) -> OplusCompletion:
    return OplusCompletion(cat, involution)


def verify_oplus(C: OplusCompletion, base_objects: list, seed: int = 0, samples: int = 200) -> Report:
    """Laws of the ⊕-completion on tuples of length <= 2 built from base_objects."""
    rep = Report(seed=seed)
    rng = random.Random(seed)
    cat = C.cat
    tuples = [()] + [(A,) for A in base_objects] + [(A, B) for A, B in itertools.product(base_objects, repeat=2)]
    empty = ()

    run_check(rep, "oplus.zero-object", "hom((), X) and hom(X, ()) are trivial", tuples,
              lambda X: None if C.hom_size(empty, X) == 1 == C.hom_size(X, empty) else {"X": [repr(a) for a in X]})
    triples = [(X, Y, Z) for X in tuples for Y in tuples for Z in tuples]
    run_check(rep, "oplus.strict-associative", "(X + Y) + Z = X + (Y + Z)", triples,
              lambda t: None if C.oplus_obj(C.oplus_obj(t[0], t[1]), t[2]) == C.oplus_obj(t[0], C.oplus_obj(t[1], t[2]))
              else {"X": repr(t)})

    def sample_chain(k):
        Xs = [rng.choice(tuples) for _ in range(k + 1)]
        return [C.random_mor(Xs[i], Xs[i + 1], rng) for i in range(k)]

    chains = [sample_chain(3) for _ in range(samples)]
    run_check(rep, "oplus.associative", "(h g) f = h (g f)", chains,
              lambda c: None if C.compose(c[2], C.compose(c[1], c[0])) == C.compose(C.compose(c[2], c[1]), c[0])
              else {"f": c[0].to_json()}, "sampled", seed)
    run_check(rep, "oplus.identity", "id f = f id = f", [c[0] for c in chains],
              lambda f: None if C.compose(C.identity(f.target), f) == f == C.compose(f, C.identity(f.source))
              else {"f": f.to_json()}, "sampled", seed)

    def biproduct(case):
        X, Y = case
        i1, i2 = C.inclusion(X, Y, True), C.inclusion(X, Y, False)
        p1, p2 = C.projection(X, Y, True), C.projection(X, Y, False)
        ok = (C.compose(p1, i1) == C.identity(X) and C.compose(p2, i2) == C.identity(Y)
              and C.compose(p2, i1) == C.zero(X, Y) and C.compose(p1, i2) == C.zero(Y, X)
              and C.add(C.compose(i1, p1), C.compose(i2, p2)) == C.identity(X + Y))
        return None if ok else {"X": repr(X), "Y": repr(Y)}

    run_check(rep, "oplus.biproduct", "concatenation is a direct sum", list(itertools.product(tuples, repeat=2)),
              biproduct)

    def singleton(case):
        A, B, Cc = case
        f = cat.random_mor(A, B, rng)
        g = cat.random_mor(B, Cc, rng)
        return None if C.compose(C.Q(g), C.Q(f)) == C.Q(cat.compose(g, f)) else {"A": repr(A)}

    run_check(rep, "oplus.Q-functor", "Q(g f) = Q(g) Q(f)", list(itertools.product(base_objects, repeat=3)),
              singleton, "sampled", seed)

    def q_bijective(case):
        A, B = case
        n = cat.hom_size(A, B)
        if n != C.hom_size(C.Q(A), C.Q(B)):
            return {"A": repr(A), "B": repr(B)}
        if n <= 1000 and len({C.Q(f) for f in cat.hom(A, B)}) != n:
            return {"A": repr(A), "B": repr(B), "reason": "not injective"}
        return None

    run_check(rep, "oplus.Q-full-faithful", "Q is a bijection on hom-sets",
              list(itertools.product(base_objects, repeat=2)), q_bijective)

    # triangle identities of (⊕, forget) on the completion itself
    def triangles(f):
        big = C.Q(f)
        once = C.flatten(BlockMorphism((f.source,), (f.target,), ((f,),)))
        blocks = tuple(tuple(BlockMorphism((A,), (B,), ((f.blocks[i][j],),)) for j, B in enumerate(f.target))
                       for i, A in enumerate(f.source))
        twice = C.flatten(BlockMorphism(tuple((A,) for A in f.source), tuple((B,) for B in f.target), blocks))
        return None if once == f == twice and big.blocks[0][0] == f else {"f": f.to_json()}

    run_check(rep, "oplus.adjunction-triangles", "flatten Q = id and flatten Q^⊕ = id",
              [c[0] for c in chains], triangles, "sampled", seed)

    if C.cat_inv is not None:
        run_check(rep, "oplus.involution-contravariant", "(g f)* = f* g*", chains,
                  lambda c: None if C.dual(C.compose(c[1], c[0])) == C.compose(C.dual(c[0]), C.dual(c[1]))
                  else {"f": c[0].to_json()}, "sampled", seed)
        run_check(rep, "oplus.E-natural", "E(Y) f = f** E(X)", [c[0] for c in chains],
                  lambda f: None if C.compose(C.E(f.target), f) == C.compose(C.dual(C.dual(f)), C.E(f.source))
                  else {"f": f.to_json()}, "sampled", seed)
        run_check(rep, "oplus.E-condition", "E(X*) = (E(X)^-1)*", tuples,
                  lambda X: None if C.E(C.dual_obj(X)) == C.dual(C.inverse_diag(C.E(X))) else {"X": repr(X)})
        run_check(rep, "oplus.Q-involution", "Q(f*) = Q(f)*", [c[0] for c in chains if len(c[0].source) == 1
                                                               and len(c[0].target) == 1] or [],
                  lambda f: None if C.Q(C.cat_inv.mor(f.blocks[0][0])) == C.dual(f) else {"f": f.to_json()},
                  "sampled", seed)
    return rep
