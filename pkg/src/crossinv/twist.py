"""Twisting data (c, tau, w, v) for crossed products, with validators.

The validators never assume the conditions they check: every condition is
evaluated pointwise, exhaustively while |G| <= 8 and |R| <= 32, otherwise on
a seeded sample of at least 10 |G|^3 cases.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from typing import Sequence

from .algebra import (
    FiniteGroup,
    FiniteRing,
    RingAutomorphism,
    RingInvolution,
    SignHom,
    group_ring_coeffs,
    group_ring_embed,
    is_homomorphism,
    make_group_ring,
    verify_ring_with_involution,
)
from .report import FAIL, CheckRecord, Report, run_check, skip

GROUP_BOUND = 8
RING_BOUND = 32


@dataclass(frozen=True)
class Extension:
    """1 -> H -> G -> Q -> 1 with a normalized set-theoretic section s."""

    H: FiniteGroup
    G: FiniteGroup
    Q: FiniteGroup
    incl: tuple
    proj: tuple
    s: tuple
    coeff: FiniteRing

    def incl_inverse(self, g: int) -> int:
        return self.incl.index(g)


@dataclass(frozen=True)
class TwistData:
    group: FiniteGroup
    ring: FiniteRing
    c: tuple
    tau: tuple
    bar: RingInvolution | None = None
    w: tuple | None = None
    v: SignHom | None = None
    extension: Extension | None = None

    def __post_init__(self):
        G, R = self.group, self.ring
        if len(self.c) != G.order:
            raise ValueError(f"c needs {G.order} automorphisms, got {len(self.c)}")
        for a in self.c:
            if not isinstance(a, RingAutomorphism) or a.ring.size != R.size:
                raise ValueError("each c_g must be a RingAutomorphism of the base ring")
        tau = tuple(tuple(row) for row in self.tau)
        if len(tau) != G.order or any(len(row) != G.order for row in tau):
            raise ValueError(f"tau must be a {G.order}x{G.order} table")
        if any(not (0 <= x < R.size) for row in tau for x in row):
            raise ValueError("tau entry out of ring range")
        object.__setattr__(self, "tau", tau)
        if self.w is not None:
            w = tuple(self.w)
            if len(w) != G.order or any(not (0 <= x < R.size) for x in w):
                raise ValueError("w must have one ring element per group element")
            object.__setattr__(self, "w", w)
        if self.v is None:
            object.__setattr__(self, "v", SignHom.trivial(G))

    @classmethod
    def untwisted(cls, group, ring, bar=None, with_w=True) -> "TwistData":
        ident = RingAutomorphism.identity(ring)
        tau = [[ring.one] * group.order for _ in range(group.order)]
        w = (ring.one,) * group.order if (bar is not None and with_w) else None
        return cls(group, ring, (ident,) * group.order, tau, bar, w)

    # arithmetic helpers

    def act(self, g: int, r: int) -> int:
        return self.c[g](r)

    def act_inv(self, g: int, r: int) -> int:
        return self.c[g].inv(r)

    def t(self, g: int, h: int) -> int:
        return self.tau[g][h]

    def t_inv(self, g: int, h: int) -> int:
        return self.ring.inv(self.tau[g][h])

    def conj(self, u: int, r: int) -> int:
        R = self.ring
        return R.mul(R.mul(u, r), R.inv(u))

    def u(self, g: int) -> int:
        """w(g) tau(g^-1, g), the unit appearing in the dual transformations."""
        return self.ring.mul(self.w[g], self.tau[self.group.inv(g)][g])

    @property
    def has_involution(self) -> bool:
        return self.bar is not None and self.w is not None

    def tau_all_units(self) -> bool:
        return all(self.ring.is_unit(x) for row in self.tau for x in row)

    # mutation helpers (used for fault injection)

    def with_tau(self, g: int, h: int, value: int) -> "TwistData":
        rows = [list(r) for r in self.tau]
        rows[g][h] = value
        return replace(self, tau=tuple(tuple(r) for r in rows))

    def with_w(self, g: int, value: int) -> "TwistData":
        w = list(self.w)
        w[g] = value
        return replace(self, w=tuple(w))

    def with_involution(self, bar: RingInvolution, w: Sequence[int]) -> "TwistData":
        return replace(self, bar=bar, w=tuple(w))


def _cases(t: TwistData, n_group: int, with_ring: bool, seed: int):
    G, R = t.group, t.ring
    sizes = [G.order] * n_group + ([R.size] if with_ring else [])
    if G.order <= GROUP_BOUND and (not with_ring or R.size <= RING_BOUND):
        return list(itertools.product(*[range(s) for s in sizes])), "exhaustive"
    rng = random.Random(seed)
    n = max(10 * G.order**3, 1000)
    picks = {tuple(rng.randrange(s) for s in sizes) for _ in range(n)}
    return sorted(picks), "sampled"


def validate_twist(t: TwistData, seed: int = 0) -> Report:
    G, R = t.group, t.ring
    rep = Report(seed=seed)
    bad = [(g, h) for g in G.elements() for h in G.elements() if not R.is_unit(t.tau[g][h])]
    if bad:
        g, h = bad[0]
        rep.add(CheckRecord("twist.tau-units", "tau(g,h) is a unit", FAIL,
                            witness={"g": g, "h": h, "tau": t.tau[g][h]},
                            detail=f"tau({G.fmt(g)},{G.fmt(h)}) = {R.fmt(t.tau[g][h])} is not a unit",
                            checked=G.order**2))
        for cid, anchor in _TWIST_CHECKS:
            skip(rep, cid, anchor, "tau has non-unit entries")
        return rep
    run_check(rep, "twist.tau-units", "tau(g,h) is a unit",
              itertools.product(G.elements(), repeat=2), lambda gh: None)

    cases, mode = _cases(t, 2, True, seed)

    def conj_law(case):
        g, h, r = case
        lhs = t.conj(t.tau[g][h], t.act(G.mul(g, h), r))
        rhs = t.act(g, t.act(h, r))
        return None if lhs == rhs else {"g": g, "h": h, "r": r, "lhs": lhs, "rhs": rhs}

    run_check(rep, "twist.c-tau-compat", _TWIST_CHECKS[0][1], cases, conj_law, mode, seed)

    triples, tmode = _cases(t, 3, False, seed)

    def cocycle(case):
        g, h, k = case
        lhs = R.mul(t.tau[g][h], t.tau[G.mul(g, h)][k])
        rhs = R.mul(t.act(g, t.tau[h][k]), t.tau[g][G.mul(h, k)])
        return None if lhs == rhs else {"g": g, "h": h, "k": k, "lhs": lhs, "rhs": rhs}

    run_check(rep, "twist.cocycle", _TWIST_CHECKS[1][1], triples, cocycle, tmode, seed)
    run_check(rep, "twist.c-unit", _TWIST_CHECKS[2][1], R.elements(),
              lambda r: None if t.act(G.e, r) == r else {"r": r, "image": t.act(G.e, r)})
    run_check(rep, "twist.tau-left-unit", _TWIST_CHECKS[3][1], G.elements(),
              lambda g: None if t.tau[G.e][g] == R.one else {"g": g, "tau": t.tau[G.e][g]})
    run_check(rep, "twist.tau-right-unit", _TWIST_CHECKS[4][1], G.elements(),
              lambda g: None if t.tau[g][G.e] == R.one else {"g": g, "tau": t.tau[g][G.e]})
    return rep


_TWIST_CHECKS = [
    ("twist.c-tau-compat", "c_{tau(g,h)} c_{gh} = c_g c_h"),
    ("twist.cocycle", "tau(g,h) tau(gh,k) = c_g(tau(h,k)) tau(g,hk)"),
    ("twist.c-unit", "c_e = id"),
    ("twist.tau-left-unit", "tau(e,g) = 1"),
    ("twist.tau-right-unit", "tau(g,e) = 1"),
]

_W_CHECKS = [
    ("w.unit", "w(e) = 1"),
    ("w.product", "w(gh) = w(h) c_{h^-1}(w(g)) tau(h^-1,g^-1) c_{(gh)^-1}(bar tau(g,h))^-1"),
    ("w.self-conjugate", "bar w(g) = w(g) c_g^-1(tau(g,g^-1) bar(tau(g,g^-1))^-1)"),
    ("w.bar-c-compat", "bar c_g(r) = c_g(u^-1 bar(r) u), u = w(g) tau(g^-1,g)"),
    ("w.inverse", "w(g)^-1 = c_{g^-1}(w(g^-1)) tau(g^-1,g) bar(tau(g^-1,g))^-1"),
]


def validate_involution_twist(t: TwistData, seed: int = 0) -> Report:
    if t.bar is None or t.w is None:
        raise ValueError("involution twist needs both bar and w")
    G, R = t.group, t.ring
    bar = t.bar
    rep = Report(seed=seed)
    rep.extend(verify_ring_with_involution(R, bar, seed))
    if not t.tau_all_units():
        for cid, anchor in _W_CHECKS:
            skip(rep, cid, anchor, "tau has non-unit entries")
        return rep

    def safe_inv(x):
        return R.inv(x) if R.is_unit(x) else None

    run_check(rep, "w.unit", _W_CHECKS[0][1], [G.e],
              lambda e: None if t.w[e] == R.one else {"w(e)": t.w[e]})

    def product(case):
        g, h = case
        gh = G.mul(g, h)
        hi, gi = G.inv(h), G.inv(g)
        d = safe_inv(t.act(G.inv(gh), bar(t.tau[g][h])))
        rhs = R.prod([t.w[h], t.act(hi, t.w[g]), t.tau[hi][gi], d]) if d is not None else None
        return None if rhs == t.w[gh] else {"g": g, "h": h, "lhs": t.w[gh], "rhs": rhs}

    run_check(rep, "w.product", _W_CHECKS[1][1], itertools.product(G.elements(), repeat=2), product)

    def self_conj(g):
        gi = G.inv(g)
        tt = t.tau[g][gi]
        d = safe_inv(bar(tt))
        rhs = R.mul(t.w[g], t.act_inv(g, R.mul(tt, d))) if d is not None else None
        return None if bar(t.w[g]) == rhs else {"g": g, "lhs": bar(t.w[g]), "rhs": rhs}

    run_check(rep, "w.self-conjugate", _W_CHECKS[2][1], G.elements(), self_conj)

    cases, mode = _cases(t, 1, True, seed)

    def bar_c(case):
        g, r = case
        u = t.u(g)
        ui = safe_inv(u)
        if ui is None:
            return {"g": g, "r": r, "reason": "w(g) tau(g^-1,g) is not a unit"}
        lhs = bar(t.act(g, r))
        rhs = t.act(g, R.prod([ui, bar(r), u]))
        return None if lhs == rhs else {"g": g, "r": r, "lhs": lhs, "rhs": rhs}

    run_check(rep, "w.bar-c-compat", _W_CHECKS[3][1], cases, bar_c, mode, seed)

    def inverse(g):
        gi = G.inv(g)
        tt = t.tau[gi][g]
        d = safe_inv(bar(tt))
        cand = R.prod([t.act(gi, t.w[gi]), tt, d]) if d is not None else None
        if cand is None or not R.is_unit(t.w[g]) or R.inv(t.w[g]) != cand:
            return {"g": g, "w": t.w[g], "formula": cand}
        return None

    run_check(rep, "w.inverse", _W_CHECKS[4][1], G.elements(), inverse)
    return rep


def admissible_w(t: TwistData, bar: RingInvolution) -> list[tuple]:
    """All w tables with w(e) = 1 passing validate_involution_twist."""
    G, R = t.group, t.ring
    others = [g for g in G.elements() if g != G.e]
    found = []
    for vals in itertools.product(R.elements(), repeat=len(others)):
        w = [R.one] * G.order
        for g, x in zip(others, vals):
            w[g] = x
        if validate_involution_twist(t.with_involution(bar, w)).ok:
            found.append(tuple(w))
    return found


def twist_from_extension(H: FiniteGroup, G: FiniteGroup, Q: FiniteGroup,
                         incl: Sequence[int], proj: Sequence[int], s: Sequence[int],
                         coeff: FiniteRing) -> TwistData:
    """Crossed-product data over coeff[H] for an extension with section s."""
    incl, proj, s = tuple(incl), tuple(proj), tuple(s)
    if len(incl) != H.order or len(proj) != G.order or len(s) != Q.order:
        raise ValueError("incl/proj/s tables have the wrong length")
    if len(set(incl)) != H.order or not is_homomorphism(H, G, incl):
        raise ValueError("incl must be an injective homomorphism")
    if set(proj) != set(Q.elements()) or not is_homomorphism(G, Q, proj):
        raise ValueError("proj must be a surjective homomorphism")
    kernel = {g for g in G.elements() if proj[g] == Q.e}
    if kernel != set(incl):
        raise ValueError("kernel of proj differs from the image of incl")
    if any(proj[s[q]] != q for q in Q.elements()):
        raise ValueError("s is not a section of proj")
    if s[Q.e] != G.e:
        raise ValueError("s(e) must be e")
    ext = Extension(H, G, Q, incl, proj, s, coeff)
    RH = make_group_ring(coeff, H)

    def conj_table(q):
        sq, sqi = s[q], G.inv(s[q])
        hmap = [ext.incl_inverse(G.prod([sq, incl[h], sqi])) for h in H.elements()]
        images = []
        for a in RH.elements():
            digits = group_ring_coeffs(RH, a)
            out = [coeff.zero] * H.order
            for h, lam in enumerate(digits):
                out[hmap[h]] = lam
            images.append(sum(x * coeff.size**k for k, x in enumerate(out)))
        return RingAutomorphism(RH, images)

    c = tuple(conj_table(q) for q in Q.elements())
    tau = [[group_ring_embed(RH, coeff.one,
                             ext.incl_inverse(G.prod([s[q], s[q2], G.inv(s[Q.mul(q, q2)])])))
            for q2 in Q.elements()] for q in Q.elements()]
    return TwistData(Q, RH, c, tau, extension=ext)


def w1_involution(t: TwistData, w1: Sequence[int], coeff_bar: Sequence[int] | None = None) -> RingInvolution:
    """The w1|_H-twisted involution sum r_h h -> sum bar(r_h) w1(h) h^-1 on coeff[H]."""
    ext = t.extension
    H, R = ext.H, ext.coeff
    cb = list(coeff_bar) if coeff_bar is not None else list(R.elements())
    images = []
    for a in t.ring.elements():
        out = [R.zero] * H.order
        for h, lam in enumerate(group_ring_coeffs(t.ring, a)):
            out[H.inv(h)] = R.mul(cb[lam], w1[ext.incl[h]])
        images.append(sum(x * R.size**k for k, x in enumerate(out)))
    return RingInvolution(t.ring, images)


def w_from_w1(t: TwistData, w1: Sequence[int], coeff_bar: Sequence[int] | None = None) -> tuple:
    """w(q) = w1(s(q)) tau(q^-1, q)^-1 for an extension twist.

    w1 is a table over the extension group G with values in the coefficient
    ring; it must be a homomorphism into central units fixed by the involution.
    """
    ext = t.extension
    if ext is None:
        raise ValueError("w_from_w1 needs a twist built by twist_from_extension")
    R, G, Q = ext.coeff, ext.G, ext.Q
    if len(w1) != G.order:
        raise ValueError("w1 needs one value per element of the extension group")
    cb = list(coeff_bar) if coeff_bar is not None else list(R.elements())
    for g in G.elements():
        x = w1[g]
        if not R.is_unit(x):
            raise ValueError(f"w1({G.fmt(g)}) is not a unit")
        if any(R.mul(x, r) != R.mul(r, x) for r in R.elements()):
            raise ValueError(f"w1({G.fmt(g)}) is not central")
        if cb[x] != x:
            raise ValueError(f"w1({G.fmt(g)}) is not fixed by the involution")
        for h in G.elements():
            if w1[G.mul(g, h)] != R.mul(x, w1[h]):
                raise ValueError("w1 is not a homomorphism")
    RH = t.ring
    return tuple(
        RH.mul(group_ring_embed(RH, w1[ext.s[q]], ext.H.e), t.t_inv(Q.inv(q), q))
        for q in Q.elements()
    )
