"""Finite left regular bands given by multiplication tables.

A band here always carries an identity element (``identity``); products are
looked up as ``table[x][y]``.  Element indices are the canonical order used
for every deterministic tie-break in the package; labels are for display.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .semilattice import FiniteSemilattice


@dataclass(frozen=True)
class AxiomViolation:
    law: str  # "identity", "idempotency", "left-regularity", "associativity"
    elements: tuple[int, ...]

    def describe(self, labels: Sequence[str] | None = None) -> str:
        names = [labels[e] if labels else str(e) for e in self.elements]
        return f"{self.law} fails at ({', '.join(names)})"


class BandAxiomError(ValueError):
    def __init__(self, violations: list[AxiomViolation], labels: Sequence[str] | None = None):
        self.violations = violations
        self.labels = labels
        super().__init__(f"{len(violations)} axiom violation(s), first: {violations[0].describe(labels)}")


class NotRightHereditary(ValueError):
    """``s`` has two incomparable lower covers ``p1`` and ``p2``."""

    def __init__(self, s: int, p1: int, p2: int):
        self.s, self.p1, self.p2 = s, p1, p2
        super().__init__(f"element {s} has two lower covers {p1} and {p2}")

    @property
    def witness(self) -> tuple[int, int, int]:
        return (self.s, self.p1, self.p2)


@dataclass(frozen=True)
class Band:
    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(_default_labels(self.n, self.identity)))

    @property
    def n(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def nonidentity(self) -> list[int]:
        return [x for x in range(self.n) if x != self.identity]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def leq(self, x: int, y: int) -> bool:
        return leq(self, x, y)

    def preceq(self, x: int, y: int) -> bool:
        return preceq(self, x, y)

    def sim(self, c: int, x: int, y: int) -> bool:
        return sim(self, c, x, y)

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        return self.labels.index(label)


def _default_labels(n: int, identity: int) -> list[str]:
    labels, k = [], 1
    for x in range(n):
        if x == identity:
            labels.append("e")
        else:
            labels.append(f"s{k}")
            k += 1
    return labels


def axiom_violations(table: Sequence[Sequence[int]], identity: int) -> list[AxiomViolation]:
    """Every violated instance of the identity, x^2=x, xyx=xy and associative laws."""
    n = len(table)
    out: list[AxiomViolation] = []
    for x in range(n):
        if table[identity][x] != x or table[x][identity] != x:
            out.append(AxiomViolation("identity", (x,)))
    for x in range(n):
        if table[x][x] != x:
            out.append(AxiomViolation("idempotency", (x,)))
    for x, y in product(range(n), repeat=2):
        xy = table[x][y]
        if table[xy][x] != xy:
            out.append(AxiomViolation("left-regularity", (x, y)))
    for x, y in product(range(n), repeat=2):
        xy = table[x][y]
        row_xy, row_x, row_y = table[xy], table[x], table[y]
        for z in range(n):
            if row_xy[z] != row_x[row_y[z]]:
                out.append(AxiomViolation("associativity", (x, y, z)))
    return out


def validate_band(
    table: Sequence[Sequence[int]], identity: int, labels: Sequence[str] | None = None
) -> Band:
    """Build a :class:`Band`, raising :class:`BandAxiomError` listing every violation."""
    n = len(table)
    if n == 0:
        raise ValueError("empty table")
    if any(len(row) != n for row in table):
        raise ValueError("table is not square")
    if not 0 <= identity < n:
        raise ValueError(f"identity {identity} out of range")
    for row in table:
        for v in row:
            if not (isinstance(v, int) and 0 <= v < n):
                raise ValueError(f"table entry {v!r} is not an element index")
    if labels is not None and len(labels) != n:
        raise ValueError("label count does not match table size")
    violations = axiom_violations(table, identity)
    if violations:
        raise BandAxiomError(violations, labels)
    return Band(tuple(tuple(row) for row in table), identity, tuple(labels or ()))


def adjoin_identity(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                    identity_label: str = "e") -> tuple[list[list[int]], list[str]]:
    """Prepend a fresh identity (index 0) to a table over elements 0..n-1."""
    n = len(table)
    labels = list(labels) if labels is not None else [f"s{k}" for k in range(1, n + 1)]
    while identity_label in labels:
        identity_label += "'"
    new = [list(range(n + 1))]
    for x, row in enumerate(table):
        new.append([x + 1] + [v + 1 for v in row])
    return new, [identity_label] + labels


def leq(band: Band, x: int, y: int) -> bool:
    """x <= y iff xy = y (prefix order in a free band)."""
    return band.table[x][y] == y


def preceq(band: Band, x: int, y: int) -> bool:
    """x is below y in the support preorder: yx = y."""
    return band.table[y][x] == y


def sim(band: Band, c: int, x: int, y: int) -> bool:
    """x ~_c y iff xc = yc."""
    return band.table[x][c] == band.table[y][c]


@dataclass(frozen=True)
class AncestorTree:
    root: int
    parent: dict[int, int]
    children: dict[int, tuple[int, ...]]

    def chain(self, s: int) -> list[int]:
        """Elements from the root up to and including ``s``."""
        out = [s]
        while s != self.root:
            s = self.parent[s]
            out.append(s)
        return out[::-1]

    def bfs(self) -> list[int]:
        order, queue = [], deque([self.root])
        while queue:
            s = queue.popleft()
            order.append(s)
            queue.extend(self.children[s])
        return order

    def descendants(self, s: int) -> tuple[int, ...]:
        return self.children[s]


def lower_covers(band: Band, s: int) -> list[int]:
    below = [p for p in band.elements if p != s and band.leq(p, s)]
    return [p for p in below if not any(q != p and band.leq(p, q) for q in below)]


def ancestor_tree(band: Band) -> AncestorTree:
    """Hasse diagram of <=; raises :class:`NotRightHereditary` unless it is a tree."""
    parent: dict[int, int] = {}
    for s in band.nonidentity:
        covers = lower_covers(band, s)
        if len(covers) != 1:
            # the identity lies below everything, so covers is never empty
            raise NotRightHereditary(s, covers[0], covers[1])
        parent[s] = covers[0]
    children: dict[int, list[int]] = {x: [] for x in band.elements}
    for s, p in parent.items():
        children[p].append(s)
    tree = AncestorTree(band.identity, parent, {x: tuple(sorted(c)) for x, c in children.items()})
    # every parent chain must end at the identity
    if len(tree.bfs()) != band.n:
        raise AssertionError("Hasse diagram is not connected to the identity")
    return tree


def is_right_hereditary(band: Band) -> bool:
    try:
        ancestor_tree(band)
    except NotRightHereditary:
        return False
    return True


@dataclass(frozen=True)
class SupportQuotient:
    classes: tuple[tuple[int, ...], ...]
    semilattice: FiniteSemilattice
    class_of: tuple[int, ...]


def support_quotient(band: Band) -> SupportQuotient:
    """Quotient by mutual preceq.  Classes are numbered by (height, smallest member)."""
    groups: list[list[int]] = []
    owner = [-1] * band.n
    for x in band.elements:
        if owner[x] >= 0:
            continue
        cls = [y for y in band.elements if band.preceq(x, y) and band.preceq(y, x)]
        for y in cls:
            owner[y] = len(groups)
        groups.append(cls)
    m = len(groups)
    raw = [[owner[band.mul(groups[i][0], groups[j][0])] for j in range(m)] for i in range(m)]
    for x, y in product(band.elements, repeat=2):
        assert raw[owner[x]][owner[y]] == owner[band.mul(x, y)], "support join not well defined"

    # height = longest strict chain down to the bottom
    height: dict[int, int] = {}

    def h(i: int) -> int:
        if i not in height:
            below = [j for j in range(m) if j != i and raw[i][j] == i]
            height[i] = 1 + max((h(j) for j in below), default=-1)
        return height[i]

    order = sorted(range(m), key=lambda i: (h(i), groups[i][0]))
    new_id = {old: k for k, old in enumerate(order)}
    join = tuple(tuple(new_id[raw[order[i]][order[j]]] for j in range(m)) for i in range(m))
    L = FiniteSemilattice(join, new_id[owner[band.identity]])
    problems = L.check()
    assert not problems, problems
    return SupportQuotient(
        classes=tuple(tuple(groups[old]) for old in order),
        semilattice=L,
        class_of=tuple(new_id[owner[x]] for x in band.elements),
    )


def s_sets(band: Band, tree: AncestorTree) -> dict[int, frozenset[int]]:
    """S_c: elements whose ancestor first becomes ~-equivalent to them at c."""
    out: dict[int, frozenset[int]] = {}
    for c in band.nonidentity:
        below = [d for d in band.elements if d != c and band.leq(d, c)]
        out[c] = frozenset(
            s
            for s in band.nonidentity
            if band.sim(c, s, tree.parent[s])
            and not any(band.sim(d, s, tree.parent[s]) for d in below)
        )
        assert c in out[c]
    return out
