"""Finitely generated free modules with involution and the twisted restriction action.

Coordinates
-----------
An object ``FreeObject(m, word)`` is R^m with scalar action r.v = a(r) v,
where a = c_{w1} c_{w2} ... for word = (w1, w2, ...).  Restricting along c_g
appends g to the word, so res_h res_g P has word (.., g, h).  Identity
elements are dropped from words, which makes res_e the identity on the nose.

A morphism (m, a) -> (n, b) is stored as an m x n matrix A and acts on row
vectors by f(v) = sigma(v) A with sigma = b a^-1 applied entrywise.  Row i
of A is f(e_i).  Composition is then (f2 f1) = sigma_2(A1) A2.

Duals are identified with plain R^m: a functional f on (m, a) corresponds
to y with y_i = bar(f(e_i)), and f(x) = sum_i a^-1(x_i) bar(y_i).  Under this
identification every formula below was derived by hand and is re-checked
against the pairing in the test suite.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import matrix as mx
from .algebra import RingAutomorphism
from .matrix import Matrix
from .report import Report, run_check
from .twist import TwistData

HOM_EXHAUSTIVE = 625
HOM_SAMPLES = 40


@dataclass(frozen=True)
class FreeObject:
    rank: int
    word: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")

    def __repr__(self):
        w = ",".join(map(str, self.word))
        return f"R^{self.rank}" + (f"[{w}]" if w else "")


@dataclass(frozen=True)
class TwistedMorphism:
    source: FreeObject
    target: FreeObject
    matrix: Matrix
    cat: "FGF" = field(compare=False, hash=False, repr=False, default=None)

    def __post_init__(self):
        if self.matrix.shape != (self.source.rank, self.target.rank):
            raise ValueError(f"matrix shape {self.matrix.shape} does not fit "
                             f"{self.source} -> {self.target}")

    def to_json(self) -> dict:
        return {"source": [self.source.rank, list(self.source.word)],
                "target": [self.target.rank, list(self.target.word)],
                "matrix": self.matrix.tolist()}


class FGF:
    """The category of f.g. free R-modules with restriction along c and duals."""

    def __init__(self, twist: TwistData, seed: int = 0):
        self.twist = twist
        self.ring = twist.ring
        self.group = twist.group
        self.seed = seed
        self._aut = lru_cache(maxsize=None)(self._aut_uncached)
        self._sigma = lru_cache(maxsize=None)(self._sigma_uncached)
        self._inverses: dict = {}
        # structure maps are requested over and over by the strictification
        for name in ("identity", "zero", "l_tau", "e_map", "t_map"):
            setattr(self, name, lru_cache(maxsize=None)(getattr(self, name)))

    # objects

    def obj(self, rank: int, word: Iterable[int] = ()) -> FreeObject:
        return FreeObject(rank, tuple(g for g in word if g != self.group.e))

    def plain(self, rank: int) -> FreeObject:
        return FreeObject(rank, ())

    def objects(self, max_rank: int, twisted: bool = False) -> list[FreeObject]:
        out = [self.plain(m) for m in range(max_rank + 1)]
        if twisted:
            out += [self.obj(m, (g,)) for g in self.group.elements() if g != self.group.e
                    for m in range(max_rank + 1)]
        return out

    def _aut_uncached(self, word: tuple) -> RingAutomorphism:
        a = RingAutomorphism.identity(self.ring)
        for g in word:
            a = a.compose(self.twist.c[g])
        return a

    def aut(self, A: FreeObject) -> RingAutomorphism:
        return self._aut(A.word)

    def sigma(self, A: FreeObject, B: FreeObject) -> tuple:
        return self._sigma(A.word, B.word)

    def _sigma_uncached(self, wa: tuple, wb: tuple) -> tuple:
        a, b = self._aut(wa), self._aut(wb)
        return tuple(b(a.inv(r)) for r in self.ring.elements())

    # morphisms

    def mor(self, source: FreeObject, target: FreeObject, rows) -> TwistedMorphism:
        M = rows if isinstance(rows, Matrix) else Matrix(rows, source.rank, target.rank)
        return TwistedMorphism(source, target, M, self)

    def identity(self, A: FreeObject) -> TwistedMorphism:
        return self.mor(A, A, mx.identity(self.ring, A.rank))

    def zero(self, A: FreeObject, B: FreeObject) -> TwistedMorphism:
        return self.mor(A, B, mx.zeros(self.ring, A.rank, B.rank))

    def add(self, f: TwistedMorphism, g: TwistedMorphism) -> TwistedMorphism:
        if (f.source, f.target) != (g.source, g.target):
            raise ValueError("can only add parallel morphisms")
        return self.mor(f.source, f.target, mx.add(self.ring, f.matrix, g.matrix))

    def neg(self, f: TwistedMorphism) -> TwistedMorphism:
        return self.mor(f.source, f.target, mx.neg(self.ring, f.matrix))

    def compose(self, f2: TwistedMorphism, f1: TwistedMorphism) -> TwistedMorphism:
        """f2 after f1."""
        if f1.target != f2.source:
            raise ValueError(f"cannot compose: {f1.target} != {f2.source}")
        s = self.sigma(f2.source, f2.target)
        A1 = mx.entrywise(s.__getitem__, f1.matrix)
        return self.mor(f1.source, f2.target, mx.mul(self.ring, A1, f2.matrix))

    def chain(self, *fs: TwistedMorphism) -> TwistedMorphism:
        """chain(f_n, ..., f_1) = f_n after ... after f_1."""
        out = fs[-1]
        for f in reversed(fs[:-1]):
            out = self.compose(f, out)
        return out

    def inverse(self, f: TwistedMorphism) -> TwistedMorphism:
        hit = self._inverses.get(f)
        if hit is None:
            hit = self._inverses[f] = self._inverse(f)
        return hit

    def _inverse(self, f: TwistedMorphism) -> TwistedMorphism:
        # f^-1 (w) = sigma^-1(w M^-1)
        Minv = mx.inverse(self.ring, f.matrix)
        s = self.sigma(f.target, f.source)
        return self.mor(f.target, f.source, mx.entrywise(s.__getitem__, Minv))

    def apply(self, f: TwistedMorphism, v: Sequence[int]) -> tuple:
        s = self.sigma(f.source, f.target)
        row = Matrix([[s[x] for x in v]], 1, f.source.rank)
        return mx.mul(self.ring, row, f.matrix).rows[0]

    def hom(self, A: FreeObject, B: FreeObject) -> Iterator[TwistedMorphism]:
        n = A.rank * B.rank
        for entries in itertools.product(self.ring.elements(), repeat=n):
            rows = [entries[i * B.rank:(i + 1) * B.rank] for i in range(A.rank)]
            yield self.mor(A, B, rows)

    def hom_size(self, A: FreeObject, B: FreeObject) -> int:
        return self.ring.size ** (A.rank * B.rank)

    def random_mor(self, A: FreeObject, B: FreeObject, rng: random.Random) -> TwistedMorphism:
        R = self.ring
        return self.mor(A, B, [[rng.randrange(R.size) for _ in range(B.rank)] for _ in range(A.rank)])

    def hom_sample(self, A, B, rng: random.Random, limit: int = HOM_EXHAUSTIVE, samples: int = HOM_SAMPLES):
        if self.hom_size(A, B) <= limit:
            return list(self.hom(A, B)), "exhaustive"
        return [self.random_mor(A, B, rng) for _ in range(samples)], "sampled"

    # weak G-action: R_g = res_{c_g}, L_{g,h} = multiplication by tau(g,h)

    def restrict(self, g: int, x):
        if isinstance(x, FreeObject):
            return self.obj(x.rank, x.word + (g,))
        return self.mor(self.restrict(g, x.source), self.restrict(g, x.target), x.matrix)

    def l_tau(self, g: int, h: int, A: FreeObject) -> TwistedMorphism:
        """res_{gh} A -> res_h res_g A, p -> tau(g,h) p."""
        a = self.aut(A)
        src = self.restrict(self.group.mul(g, h), A)
        tgt = self.restrict(h, self.restrict(g, A))
        return self.mor(src, tgt, mx.diag(self.ring, [a(self.twist.tau[g][h])] * A.rank))

    # involution

    def dual_obj(self, A: FreeObject) -> FreeObject:
        return self.plain(A.rank)

    def dual(self, f: TwistedMorphism) -> TwistedMorphism:
        """f*: B* -> A*, matrix B_ji = bar(b^-1(A_ij))."""
        bar = self.twist.bar
        b = self.aut(f.target)
        Mt = mx.transpose(mx.entrywise(lambda r: bar(b.inv(r)), f.matrix))
        return self.mor(self.dual_obj(f.target), self.dual_obj(f.source), Mt)

    def e_map(self, A: FreeObject) -> TwistedMorphism:
        """A -> A**, x -> (f -> bar f(x)); the identity matrix in these coordinates."""
        return self.mor(A, self.plain(A.rank), mx.identity(self.ring, A.rank))

    def t_map(self, g: int, P: FreeObject) -> TwistedMorphism:
        """res_g(P*) -> (res_g P)*, f -> (p -> c_g^-1(f(p)) (w(g) tau(g^-1,g))^-1)."""
        R, t = self.ring, self.twist
        d = R.inv(t.bar(t.u(g)))
        src = self.restrict(g, self.dual_obj(P))
        tgt = self.dual_obj(self.restrict(g, P))
        return self.mor(src, tgt, mx.diag(R, [d] * P.rank))

    def pair(self, A: FreeObject, y: Sequence[int], x: Sequence[int]) -> int:
        """Evaluate the functional with coordinates y on the vector x of A."""
        R, a, bar = self.ring, self.aut(A), self.twist.bar
        return R.sum(R.mul(a.inv(xi), bar(yi)) for xi, yi in zip(x, y))


def compose(f2: TwistedMorphism, f1: TwistedMorphism) -> TwistedMorphism:
    return f2.cat.compose(f2, f1)


def dual_morphism(f: TwistedMorphism) -> TwistedMorphism:
    if f.source.word or f.target.word:
        raise ValueError("dual_morphism expects an untwisted morphism")
    return f.cat.dual(f)


def e_map(cat: FGF, m: int) -> TwistedMorphism:
    return cat.e_map(cat.plain(m))


def l_tau(cat: FGF, g: int, h: int, m: int) -> TwistedMorphism:
    return cat.l_tau(g, h, cat.plain(m))


def t_g_map(cat: FGF, g: int, m: int) -> TwistedMorphism:
    return cat.t_map(g, cat.plain(m))


def _mor_witness(f: TwistedMorphism) -> dict:
    return f.to_json()


def verify_weak_action(t: TwistData, max_rank: int = 2, seed: int = 0) -> Report:
    cat = FGF(t, seed)
    G = cat.group
    rep = Report(seed=seed)
    objs = cat.objects(max_rank, twisted=True)
    rng = random.Random(seed)

    def pentagon(case):
        g, h, k, A = case
        lhs = cat.compose(cat.restrict(k, cat.l_tau(g, h, A)), cat.l_tau(G.mul(g, h), k, A))
        rhs = cat.compose(cat.l_tau(h, k, cat.restrict(g, A)), cat.l_tau(g, G.mul(h, k), A))
        if lhs == rhs:
            return None
        return {"g": g, "h": h, "k": k, "object": repr(A), "lhs": lhs.matrix.tolist(), "rhs": rhs.matrix.tolist()}

    run_check(rep, "weak.pentagon", "R_k(L_{g,h}) L_{gh,k} = L_{h,k}(R_g) L_{g,hk}",
              [(g, h, k, A) for g, h, k in itertools.product(G.elements(), repeat=3) for A in objs], pentagon)
    run_check(rep, "weak.R-unit", "R_e = id on objects and morphisms", objs,
              lambda A: None if cat.restrict(G.e, A) == A else {"object": repr(A)})

    def l_unit(case):
        g, A = case
        for f in (cat.l_tau(g, G.e, A), cat.l_tau(G.e, g, A)):
            if f != cat.identity(f.source) or f.source != f.target:
                return {"g": g, "object": repr(A)}
        return None

    run_check(rep, "weak.L-unit", "L_{g,e} = L_{e,g} = id", [(g, A) for g in G.elements() for A in objs], l_unit)

    pairs = [(A, B) for A in cat.objects(max_rank) for B in cat.objects(max_rank)]
    cases = []
    for A, B in pairs:
        fs, _ = cat.hom_sample(A, B, rng)
        cases += [(g, h, f) for f in fs for g in G.elements() for h in G.elements()]

    def natural(case):
        g, h, f = case
        A, B = f.source, f.target
        lhs = cat.compose(cat.l_tau(g, h, B), cat.restrict(G.mul(g, h), f))
        rhs = cat.compose(cat.restrict(h, cat.restrict(g, f)), cat.l_tau(g, h, A))
        return None if lhs == rhs else {"g": g, "h": h, "f": _mor_witness(f)}

    run_check(rep, "weak.L-natural", "L_{g,h}(B) R_{gh}(f) = R_h R_g(f) L_{g,h}(A)", cases, natural,
              "sampled" if any(cat.hom_size(A, B) > HOM_EXHAUSTIVE for A, B in pairs) else "exhaustive", seed)

    comp_cases = []
    for A, B, C in itertools.product(cat.objects(min(max_rank, 1)), repeat=3):
        for f1, f2 in zip(cat.hom_sample(A, B, rng)[0], cat.hom_sample(B, C, rng)[0]):
            comp_cases += [(g, f1, f2) for g in G.elements()]

    run_check(rep, "weak.R-functor", "R_g(f2 f1) = R_g(f2) R_g(f1)", comp_cases,
              lambda c: None if cat.restrict(c[0], cat.compose(c[2], c[1]))
              == cat.compose(cat.restrict(c[0], c[2]), cat.restrict(c[0], c[1]))
              else {"g": c[0], "f1": _mor_witness(c[1]), "f2": _mor_witness(c[2])})
    return rep


def verify_involution_compat(t: TwistData, max_rank: int = 2, seed: int = 0) -> Report:
    if not t.has_involution:
        raise ValueError("involution checks need bar and w")
    cat = FGF(t, seed)
    G = cat.group
    rep = Report(seed=seed)
    rng = random.Random(seed)
    objs = cat.objects(max_rank, twisted=True)

    def t_square(case):
        g, h, P = case
        lhs = cat.t_map(G.mul(g, h), P)
        rhs = cat.chain(cat.dual(cat.l_tau(g, h, P)),
                        cat.t_map(h, cat.restrict(g, P)),
                        cat.restrict(h, cat.t_map(g, P)),
                        cat.l_tau(g, h, cat.dual_obj(P)))
        if lhs == rhs:
            return None
        return {"g": g, "h": h, "object": repr(P), "lhs": lhs.matrix.tolist(), "rhs": rhs.matrix.tolist()}

    run_check(rep, "compat.t-square", "t_{gh}(P) = L(P)* t_h(res_g P) res_h(t_g P) L(P*)",
              [(g, h, P) for g, h in itertools.product(G.elements(), repeat=2) for P in objs], t_square)

    def e_square(case):
        g, P = case
        lhs = cat.compose(cat.t_map(g, cat.dual_obj(P)), cat.restrict(g, cat.e_map(P)))
        rhs = cat.compose(cat.dual(cat.t_map(g, P)), cat.e_map(cat.restrict(g, P)))
        if lhs == rhs:
            return None
        return {"g": g, "object": repr(P), "lhs": lhs.matrix.tolist(), "rhs": rhs.matrix.tolist()}

    run_check(rep, "compat.E-square", "t_g(P*) res_g(E(P)) = t_g(P)* E(res_g P)",
              [(g, P) for g in G.elements() for P in objs], e_square)

    run_check(rep, "compat.t-invertible", "t_g(P) and L_{g,h}(P) are isomorphisms",
              [(g, h, P) for g, h in itertools.product(G.elements(), repeat=2) for P in objs],
              lambda c: _invertible(cat, cat.t_map(c[0], c[2])) and _invertible(cat, cat.l_tau(c[0], c[1], c[2])))

    morphs = []
    for A, B in itertools.product(cat.objects(max_rank), repeat=2):
        morphs += cat.hom_sample(A, B, rng)[0]

    def t_natural(case):
        g, f = case
        # f: P -> Q, so f*: Q* -> P*
        P, Q = f.source, f.target
        lhs = cat.compose(cat.t_map(g, P), cat.restrict(g, cat.dual(f)))
        rhs = cat.compose(cat.dual(cat.restrict(g, f)), cat.t_map(g, Q))
        return None if lhs == rhs else {"g": g, "f": _mor_witness(f)}

    run_check(rep, "compat.t-natural", "t_g(P) res_g(f*) = (res_g f)* t_g(Q)",
              [(g, f) for g in G.elements() for f in morphs], t_natural)
    rep.extend(verify_involution_category(cat, max_rank, seed))
    return rep


def _invertible(cat: FGF, f: TwistedMorphism):
    try:
        fi = cat.inverse(f)
    except ZeroDivisionError:
        return {"morphism": _mor_witness(f)}
    if cat.compose(fi, f) != cat.identity(f.source) or cat.compose(f, fi) != cat.identity(f.target):
        return {"morphism": _mor_witness(f)}
    return None


def verify_involution_category(cat: FGF, max_rank: int = 2, seed: int = 0) -> Report:
    """(I, E) on free modules: contravariance, E natural, E(I(A)) = I(E(A)^-1)."""
    rep = Report(seed=seed)
    rng = random.Random(seed + 1)
    objs = cat.objects(max_rank, twisted=True)
    plain = cat.objects(max_rank)
    morphs = []
    for A, B in itertools.product(objs, repeat=2):
        morphs += cat.hom_sample(A, B, rng, limit=25, samples=8)[0]

    def contra(f):
        B = f.target
        for g in cat.hom_sample(B, cat.plain(min(B.rank, 1)), rng, limit=1, samples=3)[0]:
            if cat.dual(cat.compose(g, f)) != cat.compose(cat.dual(f), cat.dual(g)):
                return {"f": _mor_witness(f), "g": _mor_witness(g)}
        return None

    run_check(rep, "inv.contravariant", "(g f)* = f* g*", morphs, contra, "sampled", seed)
    run_check(rep, "inv.identity", "id* = id", objs,
              lambda A: None if cat.dual(cat.identity(A)) == cat.identity(cat.dual_obj(A)) else {"object": repr(A)})

    def e_nat(f):
        lhs = cat.compose(cat.e_map(f.target), f)
        rhs = cat.compose(cat.dual(cat.dual(f)), cat.e_map(f.source))
        return None if lhs == rhs else {"f": _mor_witness(f)}

    run_check(rep, "inv.E-natural", "E(B) f = f** E(A)", morphs, e_nat, "sampled", seed)

    def e_cond(A):
        lhs = cat.e_map(cat.dual_obj(A))
        rhs = cat.dual(cat.inverse(cat.e_map(A)))
        return None if lhs == rhs else {"object": repr(A)}

    run_check(rep, "inv.E-condition", "E(I(A)) = I(E(A)^-1)", objs, e_cond)
    run_check(rep, "inv.E-invertible", "E(A) is an isomorphism", plain, lambda A: _invertible(cat, cat.e_map(A)))
    return rep
