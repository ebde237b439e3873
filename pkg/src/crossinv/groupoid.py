"""Finite groupoids given by explicit arrow and composition tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .algebra import FiniteGroup
from .report import Report, run_check


@dataclass(frozen=True)
class Arrow:
    src: int
    dst: int
    label: Hashable


class FiniteGroupoid:
    """Objects 0..n-1 (with display labels), arrows 0..m-1.

    ``comp[(a2, a1)]`` is the arrow a2 after a1, defined when dst(a1) = src(a2).
    """

    def __init__(self, objects: Sequence[Hashable], arrows: Sequence[Arrow],
                 comp: dict[tuple[int, int], int], identity: Sequence[int], inverse: Sequence[int],
                 name: str = "groupoid"):
        self.objects = list(objects)
        self.arrows = list(arrows)
        self.comp = dict(comp)
        self.identity = list(identity)
        self.inverse = list(inverse)
        self.name = name
        self._hom: dict[tuple[int, int], list[int]] = {}
        for i, a in enumerate(self.arrows):
            self._hom.setdefault((a.src, a.dst), []).append(i)
        self.connected = self._connected()

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    def hom(self, x: int, y: int) -> list[int]:
        return self._hom.get((x, y), [])

    def src(self, a: int) -> int:
        return self.arrows[a].src

    def dst(self, a: int) -> int:
        return self.arrows[a].dst

    def compose(self, a2: int, a1: int) -> int:
        try:
            return self.comp[(a2, a1)]
        except KeyError:
            raise ValueError(f"arrows {a2} and {a1} are not composable") from None

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def _connected(self) -> bool:
        if not self.objects:
            return True
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for a in self.arrows:
                if a.src == x and a.dst not in seen:
                    seen.add(a.dst)
                    frontier.append(a.dst)
        return len(seen) == len(self.objects)

    def fmt_arrow(self, a: int) -> str:
        ar = self.arrows[a]
        return f"{ar.label}:{self.objects[ar.src]}->{self.objects[ar.dst]}"

    @classmethod
    def from_group(cls, G: FiniteGroup) -> "FiniteGroupoid":
        """G as a one-object groupoid; arrow g is labelled g."""
        return transport_groupoid(G, [0], lambda g, x: 0, name=f"{G.name} (one object)")

    @classmethod
    def from_transport(cls, G, points, act, name="transport"):
        return transport_groupoid(G, points, act, name)


def transport_groupoid(G: FiniteGroup, points: Sequence[Hashable], act: Callable[[int, int], int],
                       name: str = "transport") -> FiniteGroupoid:
    """Objects = points of a G-set, arrows x -> gx labelled g.

    ``act(g, i)`` returns the index of g.points[i].  Arrow (x, g) has index
    x |G| + g; composition is multiplication in G.
    """
    n, m = len(points), G.order
    for i in range(n):
        if act(G.e, i) != i:
            raise ValueError(f"e does not fix point {points[i]!r}")
        for g, h in itertools.product(G.elements(), repeat=2):
            if act(g, act(h, i)) != act(G.mul(g, h), i):
                raise ValueError(f"action is not compatible with multiplication at {points[i]!r}")
    arrows = [Arrow(x, act(g, x), g) for x in range(n) for g in G.elements()]
    comp = {}
    for x in range(n):
        for g in G.elements():
            y = act(g, x)
            for h in G.elements():
                comp[(y * m + h, x * m + g)] = x * m + G.mul(h, g)
    identity = [x * m + G.e for x in range(n)]
    inverse = [act(g, x) * m + G.inv(g) for x in range(n) for g in G.elements()]
    grp = FiniteGroupoid(points, arrows, comp, identity, inverse, name)
    grp.group = G
    return grp


def verify_groupoid(grp: FiniteGroupoid) -> Report:
    rep = Report()
    A = range(len(grp.arrows))
    pairs = sorted({(a2, a1) for a1 in A for a2 in A if grp.src(a2) == grp.dst(a1)})
    run_check(rep, "groupoid.composition-defined", "g f defined with the right endpoints", pairs,
              lambda p: None if (p in grp.comp and grp.src(grp.comp[p]) == grp.src(p[1])
                                 and grp.dst(grp.comp[p]) == grp.dst(p[0])) else {"pair": list(p)})
    if not rep.ok:
        return rep
    triples = [(a3, a2, a1) for a2, a1 in pairs for a3 in A if grp.src(a3) == grp.dst(a2)]
    run_check(rep, "groupoid.associative", "(h g) f = h (g f)", triples,
              lambda t: None if grp.compose(grp.compose(t[0], t[1]), t[2]) == grp.compose(t[0], grp.compose(t[1], t[2]))
              else {"arrows": list(t)})
    run_check(rep, "groupoid.identity", "id f = f id = f", A,
              lambda a: None if grp.compose(grp.identity[grp.dst(a)], a) == a == grp.compose(a, grp.identity[grp.src(a)])
              else {"arrow": a})
    run_check(rep, "groupoid.inverse", "f^-1 f = id and f f^-1 = id", A,
              lambda a: None if (grp.compose(grp.inv(a), a) == grp.identity[grp.src(a)]
                                 and grp.compose(a, grp.inv(a)) == grp.identity[grp.dst(a)]) else {"arrow": a})
    return rep


@dataclass(frozen=True)
class GroupoidFunctor:
    """A functor between finite groupoids given by object and arrow tables."""

    source: FiniteGroupoid
    target: FiniteGroupoid
    on_objects: tuple
    on_arrows: tuple

    def obj(self, x: int) -> int:
        return self.on_objects[x]

    def arrow(self, a: int) -> int:
        return self.on_arrows[a]

    def then(self, other: "GroupoidFunctor") -> "GroupoidFunctor":
        """other after self."""
        return GroupoidFunctor(self.source, other.target,
                               tuple(other.obj(x) for x in self.on_objects),
                               tuple(other.arrow(a) for a in self.on_arrows))

    def is_functor(self) -> bool:
        S, T = self.source, self.target
        for a, ar in enumerate(S.arrows):
            img = T.arrows[self.arrow(a)]
            if img.src != self.obj(ar.src) or img.dst != self.obj(ar.dst):
                return False
        for (a2, a1), a in S.comp.items():
            if T.compose(self.arrow(a2), self.arrow(a1)) != self.arrow(a):
                return False
        return all(self.arrow(S.identity[x]) == T.identity[self.obj(x)] for x in range(S.n_objects))

    def is_equivalence(self) -> bool:
        """Fully faithful and essentially surjective."""
        S, T = self.source, self.target
        for x in range(S.n_objects):
            for y in range(S.n_objects):
                imgs = sorted(self.arrow(a) for a in S.hom(x, y))
                if imgs != sorted(T.hom(self.obj(x), self.obj(y))):
                    return False
        hit = set(self.on_objects)
        return all(any(T.hom(z, w) for w in hit) for z in range(T.n_objects))


def identity_functor(grp: FiniteGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(grp, grp, tuple(range(grp.n_objects)), tuple(range(len(grp.arrows))))
