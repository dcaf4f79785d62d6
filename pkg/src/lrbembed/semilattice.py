"""Finite join semilattices and their embedding into a free semilattice.

``nu`` sends a class ``x`` to the set of letters indexed by the classes ``t``
that do *not* lie above ``x``; letters are represented by the class ids
themselves, so a free-semilattice word is a ``frozenset[int]``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from .band import AncestorTree, SupportQuotient

SemWord = frozenset


@dataclass(frozen=True)
class FiniteSemilattice:
    join: tuple[tuple[int, ...], ...]
    bottom: int

    @property
    def m(self) -> int:
        return len(self.join)

    def leq(self, x: int, y: int) -> bool:
        return sl_leq(self, x, y)

    def check(self) -> list[str]:
        problems = []
        r = range(self.m)
        for x, y in product(r, repeat=2):
            if self.join[x][y] != self.join[y][x]:
                problems.append(f"not commutative at {x},{y}")
        for x in r:
            if self.join[x][x] != x:
                problems.append(f"not idempotent at {x}")
            if self.join[self.bottom][x] != x:
                problems.append(f"bottom not neutral at {x}")
        for x, y, z in product(r, repeat=3):
            if self.join[self.join[x][y]][z] != self.join[x][self.join[y][z]]:
                problems.append(f"not associative at {x},{y},{z}")
        return problems


def sl_leq(L: FiniteSemilattice, x: int, y: int) -> bool:
    """x is below y iff y joined with x is y."""
    return L.join[y][x] == y


@dataclass(frozen=True)
class NuMap:
    image: tuple[frozenset[int], ...]

    def __call__(self, x: int) -> frozenset[int]:
        return self.image[x]


def nu(L: FiniteSemilattice) -> NuMap:
    r = range(L.m)
    numap = NuMap(tuple(frozenset(t for t in r if not sl_leq(L, x, t)) for x in r))
    for x, y in product(r, repeat=2):
        if numap(L.join[x][y]) != numap(x) | numap(y):
            raise AssertionError(f"nu is not a join homomorphism at {x},{y}")
    if len(set(numap.image)) != L.m:
        raise AssertionError("nu is not injective")
    return numap


def delta_nu(quotient: "SupportQuotient", numap: NuMap, tree: "AncestorTree", s: int) -> frozenset[int]:
    """Letters gained by ``s`` over its ancestor."""
    if s == tree.root:
        raise ValueError("delta_nu is undefined at the identity")
    cls = quotient.class_of
    return numap(cls[s]) - numap(cls[tree.parent[s]])


def from_sets(family: Iterable[frozenset]) -> tuple[FiniteSemilattice, list[frozenset]]:
    """Close a family of sets under union (adding the empty set) and tabulate it."""
    closed = {frozenset()} | {frozenset(s) for s in family}
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                u = a | b
                if u not in closed:
                    closed.add(u)
                    new.append(u)
        frontier = new
    sets = sorted(closed, key=lambda s: (len(s), sorted(s)))
    index = {s: i for i, s in enumerate(sets)}
    join = tuple(tuple(index[a | b] for b in sets) for a in sets)
    return FiniteSemilattice(join, index[frozenset()]), sets


def random_semilattice(rng: random.Random, max_size: int = 8) -> FiniteSemilattice:
    """Union closure of random subsets, resampled until it has a size drawn
    uniformly from 1..max_size.  Every finite join semilattice with a bottom
    is a union-closed family, so all shapes are reachable."""
    m = rng.randint(1, max_size)
    while True:
        g = rng.randint(max(0, m.bit_length() - 1), m)
        family = [frozenset(i for i in range(g) if rng.random() < 0.5) for _ in range(rng.randint(1, m))]
        L, _ = from_sets(family)
        if L.m == m:
            return L


def nu_law_failures(L: FiniteSemilattice, numap: NuMap | None = None) -> list[str]:
    """Check the letter laws of ``nu`` on every element, pair and quadruple.

    * a missing letter a_y in nu(x) means x <= y;
    * for x < x' and y < y', if nu(x') - nu(x) is inside nu(y') - nu(y) then
      y <= x, and equal differences force x = y and x' = y'.
    """
    numap = nu(L) if numap is None else numap
    r = range(L.m)
    out = []
    for x, y in product(r, repeat=2):
        if y not in numap(x) and not sl_leq(L, x, y):
            out.append(f"letter {y} missing from nu({x}) but {x} is not below {y}")
    steps = [(x, x2) for x, x2 in product(r, repeat=2) if x != x2 and sl_leq(L, x, x2)]
    diff = {(x, x2): numap(x2) - numap(x) for x, x2 in steps}
    for (x, x2), (y, y2) in product(steps, repeat=2):
        dx, dy = diff[(x, x2)], diff[(y, y2)]
        if dx <= dy and not sl_leq(L, y, x):
            out.append(f"difference at {x}<{x2} inside {y}<{y2} but {y} not below {x}")
        if dx == dy and (x, x2) != (y, y2):
            out.append(f"equal differences at {x}<{x2} and {y}<{y2}")
    return out
