"""The crossed product ring R *_{c,tau,w} G.

Elements are finitely supported maps G -> R stored as sorted tuples of
(g, r) pairs with zero coefficients dropped, so equality is structural.

All axiom checks run on basis elements r*g only.  Multiplication and the
involution are biadditive (resp. additive) by construction, so an identity
between polynomial expressions in x, y, z holds for all elements once it
holds for all basis elements.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping

from .algebra import FiniteRing, make_group_ring
from .report import Report, quantifier, run_check
from .twist import TwistData

EXHAUSTIVE_TRIPLES = 10**7


class CrossedElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[int, int]] = ()):
        # terms must already be canonical; use CrossedProduct.element otherwise
        self.terms = tuple(terms)

    def __eq__(self, other):
        return isinstance(other, CrossedElement) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"CrossedElement({list(self.terms)})"

    def support(self) -> list[int]:
        return [g for g, _ in self.terms]

    def coeff(self, g: int, zero: int = 0) -> int:
        for h, r in self.terms:
            if h == g:
                return r
        return zero

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms


class CrossedProduct:
    def __init__(self, twist: TwistData):
        self.twist = twist
        self.ring: FiniteRing = twist.ring
        self.group = twist.group
        self.zero = CrossedElement()
        self.one = self.basis(self.ring.one, self.group.e)
        self.size = self.ring.size**self.group.order

    def element(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]]) -> CrossedElement:
        """Canonicalize; repeated group elements are summed."""
        R = self.ring
        acc: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for g, r in items:
            acc[g] = R.add(acc.get(g, R.zero), r)
        return CrossedElement(sorted((g, r) for g, r in acc.items() if r != R.zero))

    def basis(self, r: int, g: int) -> CrossedElement:
        return CrossedElement(() if r == self.ring.zero else ((g, r),))

    def scalar(self, r: int) -> CrossedElement:
        return self.basis(r, self.group.e)

    def add(self, a: CrossedElement, b: CrossedElement) -> CrossedElement:
        if not a.terms:
            return b
        if not b.terms:
            return a
        return self.element(itertools.chain(a.terms, b.terms))

    def neg(self, a: CrossedElement) -> CrossedElement:
        return CrossedElement((g, self.ring.neg(r)) for g, r in a.terms)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a: CrossedElement, b: CrossedElement) -> CrossedElement:
        # (lambda g')(mu g'') = lambda c_{g'}(mu) tau(g', g'') g'g''
        R, G, t = self.ring, self.group, self.twist
        acc: dict[int, int] = {}
        for g1, lam in a.terms:
            c = t.c[g1].images
            row = t.tau[g1]
            for g2, mu in b.terms:
                g = G.table[g1][g2]
                x = R.mul(R.mul(lam, c[mu]), row[g2])
                acc[g] = R.add(acc.get(g, R.zero), x)
        return CrossedElement(sorted((g, r) for g, r in acc.items() if r != R.zero))

    def involution(self, a: CrossedElement) -> CrossedElement:
        """r g -> w(g) c_{g^-1}(bar r) g^-1."""
        t = self.twist
        if not t.has_involution:
            raise ValueError("twist carries no involution data (bar, w)")
        R, G = self.ring, self.group
        out = []
        for g, r in a.terms:
            gi = G.inv(g)
            out.append((gi, R.mul(t.w[g], t.act(gi, t.bar(r)))))
        return self.element(out)

    def is_unit(self, a: CrossedElement) -> bool:
        try:
            self.inv(a)
        except ZeroDivisionError:
            return False
        return True

    def inv(self, a: CrossedElement) -> CrossedElement:
        # a monomial r g with r a unit is inverted directly; anything else by search
        if len(a.terms) == 1:
            g, r = a.terms[0]
            R, G, t = self.ring, self.group, self.twist
            if R.is_unit(r):
                gi = G.inv(g)
                # (s g^-1)(r g) = s c_{g^-1}(r) tau(g^-1, g) e
                s = R.inv(R.mul(t.act(gi, r), t.tau[gi][g]))
                cand = self.basis(s, gi)
                if self.mul(cand, a) == self.one and self.mul(a, cand) == self.one:
                    return cand
        if self.size <= 4096:
            for b in self.elements():
                if self.mul(a, b) == self.one and self.mul(b, a) == self.one:
                    return b
        raise ZeroDivisionError(f"{self.fmt(a)} is not a unit")

    def elements(self) -> Iterable[CrossedElement]:
        R, G = self.ring, self.group
        for coeffs in itertools.product(R.elements(), repeat=G.order):
            yield self.element(enumerate(coeffs))

    def basis_elements(self) -> list[CrossedElement]:
        """All r*g, r != 0, in (g, r) order."""
        return [self.basis(r, g) for g in self.group.elements() for r in self.ring.elements() if r != self.ring.zero]

    def fmt(self, a: CrossedElement) -> str:
        if not a.terms:
            return "0"
        return " + ".join(f"{self.ring.fmt(r)}*{self.group.fmt(g)}" for g, r in a.terms)

    def to_json(self, a: CrossedElement) -> list:
        return [[g, r] for g, r in a.terms]

    def from_json(self, data) -> CrossedElement:
        return self.element((int(g), int(r)) for g, r in data)

    def table(self) -> dict:
        """Basis multiplication table over all pairs (r g) (s h)."""
        R, G = self.ring, self.group
        if R.size * G.order > 256:
            raise ValueError("multiplication table limited to |R| |G| <= 256")
        labels = [(g, r) for g in G.elements() for r in R.elements()]
        rows = []
        for g1, r1 in labels:
            a = self.basis(r1, g1)
            rows.append([self.to_json(self.mul(a, self.basis(r2, g2))) for g2, r2 in labels])
        out = {
            "ring": R.name,
            "group": G.name,
            "basis": [[g, r] for g, r in labels],
            "products": rows,
        }
        if self.twist.has_involution:
            out["involution"] = [self.to_json(self.involution(self.basis(r, g))) for g, r in labels]
        return out


def cp_mul(a: CrossedElement, b: CrossedElement, t: TwistData) -> CrossedElement:
    return CrossedProduct(t).mul(a, b)


def cp_involution(a: CrossedElement, t: TwistData) -> CrossedElement:
    return CrossedProduct(t).involution(a)


def verify_crossed_product(t: TwistData, seed: int = 0) -> Report:
    cp = CrossedProduct(t)
    R, G = cp.ring, cp.group
    rep = Report(seed=seed)
    n = R.size * G.order

    def basis(i):
        g, r = divmod(i, R.size)
        return cp.basis(r, g)

    def label(i):
        g, r = divmod(i, R.size)
        return [r, g]

    triples, mode = quantifier([n, n, n], seed, limit=EXHAUSTIVE_TRIPLES, min_samples=10 * G.order**3)

    def assoc(case):
        x, y, z = (basis(i) for i in case)
        lhs = cp.mul(cp.mul(x, y), z)
        rhs = cp.mul(x, cp.mul(y, z))
        if lhs == rhs:
            return None
        return {"x": label(case[0]), "y": label(case[1]), "z": label(case[2]),
                "lhs": cp.to_json(lhs), "rhs": cp.to_json(rhs)}

    run_check(rep, "cp.associative", "(x y) z = x (y z) on basis elements r*g", triples, assoc, mode, seed)
    run_check(rep, "cp.unit", "(1*e) x = x (1*e) = x", range(n),
              lambda i: None if cp.mul(cp.one, basis(i)) == basis(i) == cp.mul(basis(i), cp.one)
              else {"x": label(i)})
    if t.has_involution:
        pairs, pmode = quantifier([n, n], seed)

        def anti(case):
            x, y = basis(case[0]), basis(case[1])
            lhs = cp.involution(cp.mul(x, y))
            rhs = cp.mul(cp.involution(y), cp.involution(x))
            if lhs == rhs:
                return None
            return {"x": label(case[0]), "y": label(case[1]), "lhs": cp.to_json(lhs), "rhs": cp.to_json(rhs)}

        run_check(rep, "cp.involution-antimultiplicative", "bar(x y) = bar(y) bar(x)", pairs, anti, pmode, seed)
        run_check(rep, "cp.involution-order-two", "bar(bar(x)) = x", range(n),
                  lambda i: None if cp.involution(cp.involution(basis(i))) == basis(i) else {"x": label(i)})
        run_check(rep, "cp.involution-extends", "bar(r e) = bar(r) e and bar(1 g) = w(g) g^-1",
                  range(max(R.size, G.order)), lambda i: _extends(cp, i))
    return rep


def _extends(cp: CrossedProduct, i: int):
    t, R, G = cp.twist, cp.ring, cp.group
    if i < R.size and cp.involution(cp.scalar(i)) != cp.scalar(t.bar(i)):
        return {"r": i}
    if i < G.order and cp.involution(cp.basis(R.one, i)) != cp.basis(t.w[i], G.inv(i)):
        return {"g": i}
    return None


def commutativity_witness(t: TwistData):
    """First pair of basis elements (x, y) with x y != y x, or None."""
    cp = CrossedProduct(t)
    basis = cp.basis_elements()
    for x in basis:
        for y in basis:
            if cp.mul(x, y) != cp.mul(y, x):
                return x, y
    return None


def extension_map(t: TwistData):
    """sum lambda_q q -> sum incl(lambda_q) s(q) into coeff[G]; returns (map, target ring)."""
    ext = t.extension
    if ext is None:
        raise ValueError("twist was not built from an extension")
    RG = make_group_ring(ext.coeff, ext.G)
    RH = t.ring
    k = ext.coeff.size

    def phi(a: CrossedElement) -> int:
        acc = RG.zero
        for q, lam in a.terms:
            digits = [(lam // k**h) % k for h in range(ext.H.order)]
            for h, r in enumerate(digits):
                if r:
                    g = ext.G.mul(ext.incl[h], ext.s[q])
                    acc = RG.add(acc, r * k**g)
        return acc

    return phi, RG


def verify_extension_isomorphism(t: TwistData, w1=None) -> Report:
    """The map RH * Q -> R[G] is bijective, unital and multiplicative.

    Multiplicativity is checked on all pairs lambda*q, mu*q' (lambda, mu in RH);
    with ``w1`` given, compatibility with the w1-twisted involution as well.
    """
    cp = CrossedProduct(t)
    phi, RG = extension_map(t)
    RH, Q, ext = cp.ring, cp.group, t.extension
    rep = Report()
    images = [phi(a) for a in cp.elements()]
    run_check(rep, "ext.bijective", "RH * Q -> R[G] is a bijection", [0],
              lambda _: None if len(set(images)) == len(images) == RG.size
              else {"distinct_images": len(set(images)), "target_size": RG.size})
    run_check(rep, "ext.unital", "1*e -> 1", [0], lambda _: None if phi(cp.one) == RG.one else {"image": phi(cp.one)})
    monomials = [(lam, q) for q in Q.elements() for lam in RH.elements()]

    def mult(case):
        (l1, q1), (l2, q2) = case
        x, y = cp.basis(l1, q1), cp.basis(l2, q2)
        if phi(cp.mul(x, y)) == RG.mul(phi(x), phi(y)):
            return None
        return {"x": [l1, q1], "y": [l2, q2]}

    run_check(rep, "ext.multiplicative", "phi(x y) = phi(x) phi(y)", itertools.product(monomials, repeat=2), mult)
    if w1 is not None and t.has_involution:
        H = ext.H
        k = ext.coeff.size

        def rg_bar(a):
            out = RG.zero
            for g in ext.G.elements():
                r = (a // k**g) % k
                if r:
                    out = RG.add(out, ext.coeff.mul(r, w1[g]) * k**ext.G.inv(g))
            return out

        run_check(rep, "ext.involution", "phi(bar x) = bar phi(x) for the w1-twisted involution", monomials,
                  lambda m: None if phi(cp.involution(cp.basis(*m))) == rg_bar(phi(cp.basis(*m))) else {"x": list(m)})
    return rep
