"""Exact finite rings, ring maps, finite groups and sign homomorphisms.

Every ring element and group element is an integer index.  Rings either
compute lazily (``ZMod``) or look results up in materialized tables
(``TableRing``: polynomial quotients, group rings, user tables).
"""

from __future__ import annotations

import itertools
from math import gcd
from typing import Callable, Iterable, Sequence

from .report import Report, quantifier, run_check

MAX_ZMOD = 1 << 16
MAX_TABLE = 1024


class FiniteRing:
    """Common interface; subclasses provide add/mul/neg."""

    name: str
    size: int
    zero: int = 0
    one: int
    backend: str

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def sum(self, items: Iterable[int]) -> int:
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def prod(self, items: Iterable[int]) -> int:
        acc = self.one
        for x in items:
            acc = self.mul(acc, x)
        return acc

    def elements(self) -> range:
        return range(self.size)

    def is_unit(self, a: int) -> bool:
        return a in self._inverses

    def inv(self, a: int) -> int:
        try:
            return self._inverses[a]
        except KeyError:
            raise ZeroDivisionError(f"{self.fmt(a)} is not a unit in {self.name}") from None

    def units(self) -> list[int]:
        return sorted(self._inverses)

    def is_commutative(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a) for a, b in itertools.combinations(self.elements(), 2))

    def fmt(self, a: int) -> str:
        return str(a)

    def tables(self) -> dict:
        """Materialized operation tables (used for conformance and export)."""
        n = self.size
        return {
            "add": [[self.add(a, b) for b in range(n)] for a in range(n)],
            "mul": [[self.mul(a, b) for b in range(n)] for a in range(n)],
            "neg": [self.neg(a) for a in range(n)],
            "zero": self.zero,
            "one": self.one,
        }

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} |R|={self.size}>"


class ZMod(FiniteRing):
    backend = "zmod"

    def __init__(self, n: int):
        if not (2 <= n <= MAX_ZMOD):
            raise ValueError(f"modulus {n} outside [2, {MAX_ZMOD}]")
        self.n = n
        self.size = n
        self.name = f"Z/{n}"
        self.one = 1
        self._inverses = {a: pow(a, -1, n) for a in range(1, n) if gcd(a, n) == 1}

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n


class TableRing(FiniteRing):
    def __init__(self, name, add, mul, zero, one, backend="table", labels=None):
        n = len(add)
        if n > MAX_TABLE:
            raise ValueError(f"table ring of size {n} exceeds {MAX_TABLE}")
        if len(mul) != n or any(len(r) != n for r in add) or any(len(r) != n for r in mul):
            raise ValueError("add/mul tables must be square of equal size")
        if not (0 <= zero < n and 0 <= one < n):
            raise ValueError("zero/one index out of range")
        self.name = name
        self.size = n
        self.zero = zero
        self.one = one
        self.backend = backend
        self._add = [tuple(r) for r in add]
        self._mul = [tuple(r) for r in mul]
        self._neg = []
        for a in range(n):
            negs = [b for b in range(n) if self._add[a][b] == zero]
            if len(negs) != 1:
                raise ValueError(f"element {a} has {len(negs)} additive inverses")
            self._neg.append(negs[0])
        self._labels = labels
        self._inverses = {}
        for a in range(n):
            for b in range(n):
                if self._mul[a][b] == one and self._mul[b][a] == one:
                    self._inverses[a] = b
                    break

    def add(self, a, b):
        return self._add[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def fmt(self, a):
        return self._labels[a] if self._labels else str(a)


def make_zmod(n: int) -> ZMod:
    return ZMod(n)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


def _digits(i: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        i, r = divmod(i, base)
        out.append(r)
    return out


def _undigits(ds: Sequence[int], base: int) -> int:
    return sum(d * base**k for k, d in enumerate(ds))


def _poly_label(cs: Sequence[int]) -> str:
    terms = []
    for k, c in enumerate(cs):
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        terms.append(str(c) if k == 0 else (mono if c == 1 else f"{c}{mono}"))
    return "+".join(terms) if terms else "0"


def make_poly_quotient(p: int, poly: Sequence[int]) -> TableRing:
    """Z/p[x]/(poly); coefficients listed from the constant term upward.

    The element a_0 + a_1 x + ... has index sum(a_k p^k).
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    poly = [c % p for c in poly]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    d = len(poly) - 1
    if d < 1:
        raise ValueError("modulus polynomial must have degree >= 1")
    if poly[-1] != 1:
        raise ValueError("modulus polynomial must be monic")
    n = p**d
    if n > 64:
        raise ValueError(f"p^d = {n} exceeds 64")
    vecs = [_digits(i, p, d) for i in range(n)]

    def mulvec(u, v):
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    prod[i + j] = (prod[i + j] + a * b) % p
        # x^d = -(poly_0 + ... + poly_{d-1} x^{d-1})
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(d):
                    prod[k - d + j] = (prod[k - d + j] - c * poly[j]) % p
        return prod[:d]

    add = [[_undigits([(a + b) % p for a, b in zip(u, v)], p) for v in vecs] for u in vecs]
    mul = [[_undigits(mulvec(u, v), p) for v in vecs] for u in vecs]
    name = f"Z/{p}[x]/({_poly_label(poly)})"
    return TableRing(name, add, mul, 0, 1, backend="poly", labels=[_poly_label(v) for v in vecs])


def make_group_ring(R: FiniteRing, H: "FiniteGroup") -> TableRing:
    """R[H]; the element sum r_h h has index sum(r_h |R|^h)."""
    n = R.size ** H.order
    if n > MAX_TABLE:
        raise ValueError(f"group ring of size {n} exceeds {MAX_TABLE}")
    vecs = [_digits(i, R.size, H.order) for i in range(n)]

    def mulvec(u, v):
        out = [R.zero] * H.order
        for h1, a in enumerate(u):
            if a == R.zero:
                continue
            for h2, b in enumerate(v):
                if b != R.zero:
                    k = H.mul(h1, h2)
                    out[k] = R.add(out[k], R.mul(a, b))
        return out

    add = [[_undigits([R.add(a, b) for a, b in zip(u, v)], R.size) for v in vecs] for u in vecs]
    mul = [[_undigits(mulvec(u, v), R.size) for v in vecs] for u in vecs]
    one = R.one * R.size ** H.e

    def label(v):
        terms = [f"{R.fmt(c)}{H.fmt(h)}" for h, c in enumerate(v) if c != R.zero]
        return "+".join(terms) if terms else "0"

    ring = TableRing(f"{R.name}[{H.name}]", add, mul, 0, one, backend="group_ring", labels=[label(v) for v in vecs])
    ring.coeff_ring = R
    ring.group = H
    return ring


def group_ring_embed(ring: TableRing, r: int, h: int) -> int:
    """Index of r*h in a ring built by make_group_ring."""
    return r * ring.coeff_ring.size**h


def group_ring_coeffs(ring: TableRing, a: int) -> list[int]:
    return _digits(a, ring.coeff_ring.size, ring.group.order)


def verify_ring_axioms(R: FiniteRing, seed: int = 0) -> Report:
    """Ring axioms by enumeration (sampled if |R|^3 is large)."""
    rep = Report(seed=seed)
    n = R.size
    pairs, pm = quantifier([n, n], seed)
    triples, tm = quantifier([n, n, n], seed)

    def pair_check(fn):
        return lambda ab: None if fn(*ab) else {"a": ab[0], "b": ab[1]}

    def triple_check(fn):
        return lambda abc: None if fn(*abc) else {"a": abc[0], "b": abc[1], "c": abc[2]}

    run_check(rep, "ring.add-identity", "r + 0 = r", range(n),
              lambda a: None if R.add(a, R.zero) == a else {"a": a})
    run_check(rep, "ring.add-inverse", "r + (-r) = 0", range(n),
              lambda a: None if R.add(a, R.neg(a)) == R.zero else {"a": a})
    run_check(rep, "ring.add-commutative", "r + s = s + r", pairs,
              pair_check(lambda a, b: R.add(a, b) == R.add(b, a)), pm, seed)
    run_check(rep, "ring.add-associative", "(r + s) + u = r + (s + u)", triples,
              triple_check(lambda a, b, c: R.add(R.add(a, b), c) == R.add(a, R.add(b, c))), tm, seed)
    run_check(rep, "ring.mul-identity", "1 r = r 1 = r", range(n),
              lambda a: None if R.mul(R.one, a) == a == R.mul(a, R.one) else {"a": a})
    run_check(rep, "ring.mul-associative", "(r s) u = r (s u)", triples,
              triple_check(lambda a, b, c: R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))), tm, seed)
    run_check(rep, "ring.distributive", "r (s + u) = r s + r u and (s + u) r = s r + u r", triples,
              triple_check(lambda a, b, c: R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
                           and R.mul(R.add(b, c), a) == R.add(R.mul(b, a), R.mul(c, a))), tm, seed)
    return rep


def check_table_conformance(R: FiniteRing) -> bool:
    """Lazy arithmetic agrees with a materialized TableRing (n <= 64)."""
    if R.size > 64:
        raise ValueError("conformance check is limited to |R| <= 64")
    t = R.tables()
    T = TableRing(R.name, t["add"], t["mul"], t["zero"], t["one"])
    n = R.size
    for a in range(n):
        if T.neg(a) != R.neg(a) or T.is_unit(a) != R.is_unit(a):
            return False
        if R.is_unit(a) and T.inv(a) != R.inv(a):
            return False
        for b in range(n):
            if T.add(a, b) != R.add(a, b) or T.mul(a, b) != R.mul(a, b):
                return False
    return True


class RingAutomorphism:
    def __init__(self, ring: FiniteRing, images: Sequence[int], check: bool = True):
        images = tuple(images)
        if len(images) != ring.size:
            raise ValueError(f"map has {len(images)} entries, ring has {ring.size}")
        if check and not is_automorphism(ring, images):
            raise ValueError("table is not a ring automorphism")
        self.ring = ring
        self.images = images
        inverse = [0] * ring.size
        for a, b in enumerate(images):
            inverse[b] = a
        self.inverse_images = tuple(inverse)

    @classmethod
    def identity(cls, ring: FiniteRing) -> "RingAutomorphism":
        return cls(ring, range(ring.size), check=False)

    def __call__(self, a: int) -> int:
        return self.images[a]

    def inv(self, a: int) -> int:
        return self.inverse_images[a]

    def inverse(self) -> "RingAutomorphism":
        return RingAutomorphism(self.ring, self.inverse_images, check=False)

    def compose(self, other: "RingAutomorphism") -> "RingAutomorphism":
        """self after other."""
        return RingAutomorphism(self.ring, [self.images[b] for b in other.images], check=False)

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, RingAutomorphism) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"RingAutomorphism({list(self.images)})"


def is_automorphism(R: FiniteRing, f: Sequence[int]) -> bool:
    if len(f) != R.size:
        raise ValueError(f"map has {len(f)} entries, ring has {R.size}")
    if sorted(f) != list(range(R.size)):
        return False
    if f[R.one] != R.one or f[R.zero] != R.zero:
        return False
    if R.backend == "zmod":
        # additive and fixing 1 forces the identity on Z/n
        return all(f[a] == a for a in range(R.size))
    for a in range(R.size):
        for b in range(R.size):
            if f[R.add(a, b)] != R.add(f[a], f[b]) or f[R.mul(a, b)] != R.mul(f[a], f[b]):
                return False
    return True


class RingInvolution:
    """Stored table for r -> bar(r); axioms are checked by verify_ring_with_involution."""

    def __init__(self, ring: FiniteRing, images: Sequence[int]):
        images = tuple(images)
        if len(images) != ring.size:
            raise ValueError(f"involution has {len(images)} entries, ring has {ring.size}")
        if any(not (0 <= x < ring.size) for x in images):
            raise ValueError("involution image out of range")
        self.ring = ring
        self.images = images

    @classmethod
    def identity(cls, ring: FiniteRing) -> "RingInvolution":
        return cls(ring, range(ring.size))

    def __call__(self, a: int) -> int:
        return self.images[a]

    def __repr__(self):
        return f"RingInvolution({list(self.images)})"


def verify_ring_with_involution(R: FiniteRing, bar: RingInvolution | Sequence[int], seed: int = 0) -> Report:
    if not isinstance(bar, RingInvolution):
        bar = RingInvolution(R, bar)
    rep = Report(seed=seed)
    n = R.size
    pairs, mode = quantifier([n, n], seed)
    run_check(rep, "involution.unit", "bar(1) = 1", [R.one],
              lambda a: None if bar(a) == a else {"r": a, "bar": bar(a)})
    run_check(rep, "involution.additive", "bar(r + s) = bar(r) + bar(s)", pairs,
              lambda ab: None if bar(R.add(*ab)) == R.add(bar(ab[0]), bar(ab[1]))
              else {"r": ab[0], "s": ab[1]}, mode, seed)
    run_check(rep, "involution.antimultiplicative", "bar(r s) = bar(s) bar(r)", pairs,
              lambda ab: None if bar(R.mul(*ab)) == R.mul(bar(ab[1]), bar(ab[0]))
              else {"r": ab[0], "s": ab[1]}, mode, seed)
    run_check(rep, "involution.order-two", "bar(bar(r)) = r", range(n),
              lambda a: None if bar(bar(a)) == a else {"r": a})
    return rep


class FiniteGroup:
    def __init__(self, table: Sequence[Sequence[int]], e: int = 0, names: Sequence[str] | None = None,
                 name: str = "G", check: bool = True):
        m = len(table)
        self.order = m
        self.table = tuple(tuple(r) for r in table)
        if any(len(r) != m for r in self.table):
            raise ValueError("group table must be square")
        self.e = e
        self.name = name
        self.names = list(names) if names else [str(i) for i in range(m)]
        inv = []
        for g in range(m):
            cands = [h for h in range(m) if self.table[g][h] == e]
            if len(cands) != 1:
                raise ValueError(f"element {g} has no unique inverse")
            inv.append(cands[0])
        self.inverse = tuple(inv)
        if check:
            rep = verify_group(self)
            if not rep.ok:
                bad = rep.failures()[0]
                raise ValueError(f"not a group: {bad.check_id} fails at {bad.witness}")

    def elements(self) -> range:
        return range(self.order)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def prod(self, items: Iterable[int]) -> int:
        acc = self.e
        for g in items:
            acc = self.table[acc][g]
        return acc

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(self.order))

    def fmt(self, g: int) -> str:
        return self.names[g]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __repr__(self):
        return f"<FiniteGroup {self.name} order={self.order}>"


def verify_group(G: FiniteGroup) -> Report:
    rep = Report()
    m = G.order
    run_check(rep, "group.unit", "e g = g e = g", range(m),
              lambda g: None if G.mul(G.e, g) == g == G.mul(g, G.e) else {"g": g})
    run_check(rep, "group.inverse", "g g^-1 = g^-1 g = e", range(m),
              lambda g: None if G.mul(g, G.inv(g)) == G.e == G.mul(G.inv(g), g) else {"g": g})
    run_check(rep, "group.associative", "(g h) k = g (h k)", itertools.product(range(m), repeat=3),
              lambda t: None if G.mul(G.mul(t[0], t[1]), t[2]) == G.mul(t[0], G.mul(t[1], t[2]))
              else {"g": t[0], "h": t[1], "k": t[2]})
    return rep


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    if n == 2:
        names = ["e", "t"]
    else:
        names = ["e"] + ["g" if k == 1 else f"g^{k}" for k in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, 0, names, name=f"Z/{n}", check=False)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of an n-gon: index k is r^k, index n + k is s r^k."""
    if n < 2:
        raise ValueError("dihedral group needs n >= 2")

    def mul(a, b):
        sa, ka = divmod(a, n)
        sb, kb = divmod(b, n)
        # (s^sa r^ka)(s^sb r^kb) = s^(sa+sb) r^(±ka + kb)
        k = (-ka if sb else ka) + kb
        return ((sa + sb) % 2) * n + k % n

    names = [("e" if k == 0 else f"r^{k}") for k in range(n)] + [("s" if k == 0 else f"sr^{k}") for k in range(n)]
    table = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
    return FiniteGroup(table, 0, names, name=f"D{n}", check=False)


def direct_product(G: FiniteGroup, K: FiniteGroup) -> FiniteGroup:
    """(g, k) has index g |K| + k."""
    m = G.order * K.order
    table = [[0] * m for _ in range(m)]
    for a in range(m):
        g1, k1 = divmod(a, K.order)
        for b in range(m):
            g2, k2 = divmod(b, K.order)
            table[a][b] = G.mul(g1, g2) * K.order + K.mul(k1, k2)
    names = [f"({G.fmt(g)},{K.fmt(k)})" for g in range(G.order) for k in range(K.order)]
    return FiniteGroup(table, G.e * K.order + K.e, names, name=f"{G.name}x{K.name}", check=False)


def from_table(table: Sequence[Sequence[int]], names: Sequence[str] | None = None, name: str = "G") -> FiniteGroup:
    e_cands = [g for g in range(len(table)) if list(table[g]) == list(range(len(table)))]
    if not e_cands:
        raise ValueError("group table has no identity row")
    return FiniteGroup(table, e_cands[0], names, name=name)


def is_homomorphism(G: FiniteGroup, H: FiniteGroup, f: Sequence[int] | Callable[[int], int]) -> bool:
    fn = f if callable(f) else f.__getitem__
    return all(fn(G.mul(a, b)) == H.mul(fn(a), fn(b)) for a in range(G.order) for b in range(G.order))


class SignHom:
    def __init__(self, group: FiniteGroup, values: Sequence[int] | None = None):
        values = tuple(values) if values is not None else (1,) * group.order
        if len(values) != group.order or any(v not in (1, -1) for v in values):
            raise ValueError("sign homomorphism needs one value in {+1, -1} per group element")
        if values[group.e] != 1:
            raise ValueError("v(e) must be +1")
        for a in range(group.order):
            for b in range(group.order):
                if values[group.mul(a, b)] != values[a] * values[b]:
                    raise ValueError(f"v is not a homomorphism at ({a}, {b})")
        self.group = group
        self.values = values

    @classmethod
    def trivial(cls, group: FiniteGroup) -> "SignHom":
        return cls(group)

    def __call__(self, g: int) -> int:
        return self.values[g]

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)
