"""Homomorphisms into the free left regular band and their refinement.

``build_h`` realises the recursive map h(c) = h(parent(c)) c_1 ... c_n where
the c_i are the sorted letter sets of the elements of S_c, taken in the local
order of c.  ``run_embedding_algorithm`` then applies ``modification`` at
tree nodes whose children still have prefix-comparable images, minting fresh
letters each round, until the map is injective.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .band import AxiomViolation, Band, BandAxiomError, NotRightHereditary, validate_band
from .localorder import (
    LocalLinearOrder,
    Structure,
    analyze,
    find_local_linear_order,
    verify_local_linear_order,
)
from .words import Fresh, Letter, Word, arrow, fw_leq, fw_product, normalize, product_of


class EmbeddingFault(RuntimeError):
    """An internal consistency check failed; indicates a bug or a bad order."""


@dataclass(frozen=True)
class ChiEntry:
    element: int
    owner: int


def chi(st: Structure, llo: LocalLinearOrder, c: int) -> list[ChiEntry]:
    """Blocks S_{c'} in local order for c' along the chain from the root to c."""
    if c == st.tree.root:
        raise ValueError("chi is empty at the identity")
    out: list[ChiEntry] = []
    seen: set[int] = set()
    for owner in st.tree.chain(c)[1:]:
        for y in llo.order_of[owner]:
            if y in seen:
                raise EmbeddingFault(f"element {y} appears in two S-sets along the chain to {c}")
            seen.add(y)
            out.append(ChiEntry(y, owner))
    return out


def generator_of(class_id: int) -> int:
    """Base letter standing for the semilattice letter of a support class."""
    return class_id + 1


@dataclass(frozen=True)
class ElementMap:
    images: tuple[Word, ...]
    round: int = 0

    def __getitem__(self, x: int) -> Word:
        return self.images[x]

    def letters(self) -> set[Letter]:
        return {a for w in self.images for a in w}

    @property
    def rank(self) -> int:
        return len(self.letters())


def homomorphism_failure(images: Sequence[Word], band: Band) -> tuple[int, int] | None:
    for x, y in product(band.elements, repeat=2):
        if images[band.mul(x, y)] != fw_product(images[x], images[y]):
            return (x, y)
    return None


def build_h(st: Structure, llo: LocalLinearOrder) -> ElementMap:
    band, tree = st.band, st.tree
    images: list[Word] = [()] * band.n
    for c in tree.bfs()[1:]:
        blocks = [arrow(st.delta[y], generator_of) for y in llo.order_of[c]]
        images[c] = product_of([images[tree.parent[c]], *blocks])
    bad = homomorphism_failure(images, band)
    if bad is not None:
        raise EmbeddingFault(f"h is not a homomorphism at {bad}; the local order is invalid")
    return ElementMap(tuple(images))


def kernel(emap: ElementMap) -> set[tuple[int, int]]:
    return {(x, y) for x, y in combinations(range(len(emap.images)), 2) if emap[x] == emap[y]}


def comparable(u: Word, v: Word) -> bool:
    return fw_leq(u, v) or fw_leq(v, u)


@dataclass
class Round:
    c: int
    letters: set
    parts: dict  # tag (descendant or None) -> elements rewritten with it
    before: ElementMap
    after: ElementMap
    kernel_before: set
    kernel_after: set


def rewrite(images: Sequence[Word], C, parts: dict, c: int, kids: Sequence[int], rnd: int) -> list[Word]:
    """Replace each letter a of C by a t^x t' in the images of S_{c,x}.

    ``parts`` maps a descendant of ``c`` (or None for the empty tag) to the
    elements rewritten with that tag; other images are left alone.
    """
    t_empty = Fresh(c, None, rnd)
    t_prime = (t_empty, *(Fresh(c, b, rnd) for b in kids))
    out = list(images)
    for tag, members in parts.items():
        tail = (Fresh(c, tag, rnd),) + t_prime
        for s in members:
            letters: list[Letter] = []
            for a in images[s]:
                letters.append(a)
                if a in C:
                    letters.extend(tail)
            out[s] = normalize(letters)
    return out


def modification(emap: ElementMap, band: Band, tree, c: int) -> Round:
    """One Modification step at ``c``; every property it relies on is re-checked."""
    rnd = emap.round + 1
    kids = tree.children[c]
    if not kids:
        raise ValueError("modification needs a node with descendants")
    C = emap.letters() - set(emap[c])

    H = {s for s in band.elements if any(a in C for a in emap[s])}
    above = {b: [y for y in band.elements if band.leq(b, y)] for b in kids}
    parts: dict = {
        b: {s for s in band.elements if any(band.mul(c, s) == band.mul(y, s) for y in above[b])}
        for b in kids
    }
    for b1, b2 in combinations(kids, 2):
        if parts[b1] & parts[b2]:
            raise EmbeddingFault(f"S_(c,b) sets for {b1} and {b2} intersect")
    for b in kids:
        if not parts[b] <= H:
            raise EmbeddingFault(f"S_(c,{b}) is not inside H_c")
    parts[None] = H - set().union(*(parts[b] for b in kids))

    new = ElementMap(tuple(rewrite(emap.images, C, parts, c, kids, rnd)), rnd)

    bad = homomorphism_failure(new.images, band)
    if bad is not None:
        raise EmbeddingFault(f"modified map is not a homomorphism at {bad}")
    for b1, b2 in combinations(kids, 2):
        if comparable(new[b1], new[b2]):
            raise EmbeddingFault(f"images of descendants {b1}, {b2} are still comparable")
    for x, y in combinations(band.elements, 2):
        if not comparable(emap[x], emap[y]) and comparable(new[x], new[y]):
            raise EmbeddingFault(f"incomparable images of {x}, {y} became comparable")
    k0, k1 = kernel(emap), kernel(new)
    if not k1 < k0:
        raise EmbeddingFault(f"kernel did not strictly shrink at c={c}: {sorted(k0)} -> {sorted(k1)}")
    return Round(c, C, parts, emap, new, k0, k1)


def select_node(emap: ElementMap, tree) -> int | None:
    """First node in breadth-first order with two prefix-comparable child images."""
    for c in tree.bfs():
        for b1, b2 in combinations(tree.children[c], 2):
            if comparable(emap[b1], emap[b2]):
                return c
    return None


def run_embedding_algorithm(st: Structure, llo: LocalLinearOrder, h: ElementMap | None = None):
    """Returns ``(final_map, rounds)``."""
    emap = build_h(st, llo) if h is None else h
    bound = len(kernel(emap)) + 1
    rounds: list[Round] = []
    while (c := select_node(emap, st.tree)) is not None:
        if len(rounds) >= bound:
            raise EmbeddingFault("embedding algorithm exceeded its round bound")
        r = modification(emap, st.band, st.tree, c)
        rounds.append(r)
        emap = r.after
    return emap, rounds


@dataclass(frozen=True)
class EmbeddingFailure:
    kind: str  # "not-homomorphism" | "not-injective"
    witness: tuple[int, int]


def verify_embedding(images: Sequence[Word] | ElementMap, band: Band) -> EmbeddingFailure | None:
    if isinstance(images, ElementMap):
        images = images.images
    if len(images) != band.n:
        raise ValueError("map does not cover every element")
    bad = homomorphism_failure(images, band)
    if bad is not None:
        return EmbeddingFailure("not-homomorphism", bad)
    for x, y in combinations(band.elements, 2):
        if images[x] == images[y]:
            return EmbeddingFailure("not-injective", (x, y))
    return None


@dataclass
class NotLRB:
    violations: list[AxiomViolation]
    kind = "not-lrb"


@dataclass
class NotRightHereditaryVerdict:
    witness: tuple[int, int, int]
    band: Band
    kind = "not-right-hereditary"


@dataclass
class NoLocalLinearOrderVerdict:
    structure: Structure
    kind = "no-local-linear-order"


@dataclass
class Embeddable:
    band: Band
    structure: Structure
    order: LocalLinearOrder
    initial: ElementMap
    final: ElementMap
    rounds: list[Round] = field(default_factory=list)
    kind = "embeddable"

    @property
    def rank(self) -> int:
        return self.final.rank


def decide_embeddable(band: Band | tuple, order: LocalLinearOrder | None = None):
    """Full pipeline; ``band`` may also be a raw ``(table, identity)`` pair.

    ``order`` forces a particular local linear order (it is verified first).
    """
    if not isinstance(band, Band):
        table, identity = band
        try:
            band = validate_band(table, identity)
        except BandAxiomError as err:
            return NotLRB(err.violations)
    try:
        st = analyze(band)
    except NotRightHereditary as err:
        return NotRightHereditaryVerdict(err.witness, band)
    if order is None:
        order = find_local_linear_order(st)
        if order is None:
            return NoLocalLinearOrderVerdict(st)
    else:
        bad = verify_local_linear_order(st, order)
        if bad is not None:
            raise ValueError(f"supplied order violates condition {bad.condition}: {bad}")
    h = build_h(st, order)
    final, rounds = run_embedding_algorithm(st, order, h)
    failure = verify_embedding(final, band)
    if failure is not None:
        raise EmbeddingFault(f"final map fails verification: {failure}")
    return Embeddable(band, st, order, h, final, rounds)
