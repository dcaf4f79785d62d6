"""Local linear orders on the sets S_b of a right hereditary band.

A family of linear orders, one per nonidentity ``b`` on ``S_b``, is a local
linear order when, for x, y in S_b:

1. delta(x) strictly inside delta(y) puts x before y;
2. sigma(x) below sigma(parent(y)) puts x before y;
3. whenever S_b is a subset of S_c, x before y in b implies x before y in c.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations, permutations

from .band import Band, AncestorTree, SupportQuotient, ancestor_tree, s_sets, support_quotient
from .semilattice import NuMap, delta_nu, nu
from .words import Word, canonical_compare, delta_word, separator


@dataclass(frozen=True)
class Structure:
    """Everything derived from a right hereditary band that the embedder needs."""

    band: Band
    tree: AncestorTree
    quotient: SupportQuotient
    numap: NuMap
    ssets: dict[int, frozenset[int]]
    delta: dict[int, frozenset[int]]

    def sigma(self, s: int) -> int:
        return self.quotient.class_of[s]

    def sigma_leq(self, x: int, y: int) -> bool:
        return self.quotient.semilattice.leq(self.sigma(x), self.sigma(y))

    def parent(self, s: int) -> int:
        return self.tree.parent[s]


def analyze(band: Band) -> Structure:
    """Raises :class:`~lrbembed.band.NotRightHereditary` for non-tree bands."""
    tree = ancestor_tree(band)
    quotient = support_quotient(band)
    numap = nu(quotient.semilattice)
    ss = s_sets(band, tree)
    delta = {s: delta_nu(quotient, numap, tree, s) for s in band.nonidentity}
    return Structure(band, tree, quotient, numap, ss, delta)


@dataclass(frozen=True)
class LocalLinearOrder:
    order_of: dict[int, tuple[int, ...]]

    def before(self, b: int, x: int, y: int) -> bool:
        seq = self.order_of[b]
        return seq.index(x) < seq.index(y)


class NoLocalLinearOrder(Exception):
    def __init__(self, witness: tuple[int, int, int] | None = None):
        self.witness = witness  # (b, x, y): both x<y and y<x are forced on S_b
        super().__init__("no local linear order" + (f" (forced cycle {witness})" if witness else ""))


@dataclass(frozen=True)
class OrderViolation:
    condition: int
    where: int | tuple[int, int]
    x: int
    y: int


def forced_before(st: Structure, x: int, y: int) -> bool:
    """Conditions 1 and 2 force x before y (for x != y sharing an S-set)."""
    if st.delta[x] < st.delta[y]:
        return True
    return st.sigma_leq(x, st.parent(y))


def base_constraints(st: Structure) -> dict[int, set[tuple[int, int]]]:
    out: dict[int, set[tuple[int, int]]] = {}
    for b, sb in st.ssets.items():
        pairs = {(x, y) for x in sb for y in sb if x != y and forced_before(st, x, y)}
        for x, y in pairs:
            if (y, x) in pairs:
                raise NoLocalLinearOrder((b, min(x, y), max(x, y)))
        out[b] = pairs
    return out


def nested_pairs(st: Structure) -> list[tuple[int, int]]:
    """All (b, c), b != c, with S_b a subset of S_c."""
    return [(b, c) for b in st.ssets for c in st.ssets if b != c and st.ssets[b] <= st.ssets[c]]


def fast_path_order(st: Structure, constraints=None) -> LocalLinearOrder | None:
    """Restrict one global topological order of all base constraints, if acyclic."""
    constraints = base_constraints(st) if constraints is None else constraints
    nodes = st.band.nonidentity
    succ: dict[int, set[int]] = {v: set() for v in nodes}
    for pairs in constraints.values():
        for x, y in pairs:
            succ[x].add(y)
    indeg = {v: 0 for v in nodes}
    for v in nodes:
        for w in succ[v]:
            indeg[w] += 1
    heap = [v for v in nodes if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != len(nodes):
        return None
    pos = {v: i for i, v in enumerate(order)}
    return LocalLinearOrder({b: tuple(sorted(sb, key=pos.__getitem__)) for b, sb in st.ssets.items()})


class _Search:
    """Complete backtracking over pair orientations.

    One boolean per (b, {x, y}) decides whether x precedes y in S_b; pairs
    linked by condition 3 share a variable.  Propagation closes every S_b
    transitively; a pair forced both ways is a conflict.
    """

    def __init__(self, st: Structure, constraints):
        self.st = st
        self.sets = {b: sorted(sb) for b, sb in st.ssets.items()}
        parent: dict = {}

        def find(k):
            while parent.setdefault(k, k) != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        for b, c in nested_pairs(st):
            for x, y in combinations(self.sets[b], 2):
                ra, rb = find((b, x, y)), find((c, x, y))
                if ra != rb:
                    parent[ra] = rb
        self.var: dict[tuple[int, int, int], tuple] = {}
        for b, elems in self.sets.items():
            for x, y in combinations(elems, 2):
                self.var[(b, x, y)] = find((b, x, y))
        self.members: dict[tuple, list[tuple[int, int, int]]] = {}
        for key, v in self.var.items():
            self.members.setdefault(v, []).append(key)
        self.constraints = constraints

    def value(self, assign, b, x, y):
        """True if x before y in b, False if after, None if open."""
        lo, hi = (x, y) if x < y else (y, x)
        v = assign.get(self.var[(b, lo, hi)])
        if v is None:
            return None
        return v if x == lo else not v

    def set_before(self, assign, b, x, y, queue) -> bool:
        lo, hi = (x, y) if x < y else (y, x)
        want = x == lo
        v = self.var[(b, lo, hi)]
        cur = assign.get(v)
        if cur is None:
            assign[v] = want
            queue.append(v)
            return True
        return cur == want

    def propagate(self, assign, queue) -> bool:
        while queue:
            v = queue.pop()
            touched = {b for b, _, _ in self.members[v]}
            for b in touched:
                elems = self.sets[b]
                for x, y, z in permutations(elems, 3):
                    if self.value(assign, b, x, y) and self.value(assign, b, y, z):
                        if not self.set_before(assign, b, x, z, queue):
                            return False
        return True

    def run(self) -> dict | None:
        assign: dict = {}
        queue: list = []
        for b, pairs in self.constraints.items():
            for x, y in pairs:
                if not self.set_before(assign, b, x, y, queue):
                    return None
        if not self.propagate(assign, queue):
            return None
        order = sorted(self.members, key=lambda v: min(self.members[v]))
        return self._dfs(assign, order, 0)

    def _dfs(self, assign, order, i):
        while i < len(order) and order[i] in assign:
            i += 1
        if i == len(order):
            return assign
        v = order[i]
        for choice in (True, False):
            trial = dict(assign)
            trial[v] = choice
            if self.propagate(trial, [v]):
                done = self._dfs(trial, order, i + 1)
                if done is not None:
                    return done
        return None

    def to_order(self, assign) -> LocalLinearOrder:
        out = {}
        for b, elems in self.sets.items():
            def cmp(x, y, b=b):
                return -1 if self.value(assign, b, x, y) else 1
            out[b] = tuple(sorted(elems, key=cmp_to_key(lambda x, y, c=cmp: 0 if x == y else c(x, y))))
        return LocalLinearOrder(out)


def search_local_linear_order(st: Structure, constraints=None) -> LocalLinearOrder | None:
    """Exhaustive search; None only when no family exists."""
    try:
        constraints = base_constraints(st) if constraints is None else constraints
    except NoLocalLinearOrder:
        return None
    s = _Search(st, constraints)
    assign = s.run()
    return None if assign is None else s.to_order(assign)


def find_local_linear_order(st: Structure) -> LocalLinearOrder | None:
    try:
        constraints = base_constraints(st)
    except NoLocalLinearOrder:
        return None
    llo = fast_path_order(st, constraints)
    if llo is None:
        llo = search_local_linear_order(st, constraints)
    return llo


def verify_local_linear_order(st: Structure, llo: LocalLinearOrder) -> OrderViolation | None:
    """First violated condition, or None.  Raises ValueError if malformed."""
    for b, sb in st.ssets.items():
        seq = llo.order_of.get(b)
        if seq is None or len(seq) != len(sb) or set(seq) != sb:
            raise ValueError(f"order for {st.band.label(b)} is not a permutation of its S-set")
    pos = {b: {x: i for i, x in enumerate(seq)} for b, seq in llo.order_of.items() if b in st.ssets}
    nested = nested_pairs(st)
    for b in sorted(st.ssets):
        elems = sorted(st.ssets[b])
        p = pos[b]
        for x, y in permutations(elems, 2):
            if st.delta[x] < st.delta[y] and p[x] > p[y]:
                return OrderViolation(1, b, x, y)
        for x, y in permutations(elems, 2):
            if st.sigma_leq(x, st.parent(y)) and p[x] > p[y]:
                return OrderViolation(2, b, x, y)
        for bb, c in nested:
            if bb != b:
                continue
            for x, y in permutations(elems, 2):
                if p[x] < p[y] and pos[c][x] > pos[c][y]:
                    return OrderViolation(3, (b, c), x, y)
    return None


def subband_local_order(st: Structure, words: list[Word]) -> LocalLinearOrder:
    """The order built from the word representation of a subband of a free band.

    On S_b: if Delta(x), Delta(y) have different letter sets, x precedes y
    iff an (x,y)-separator exists in the word of b; otherwise x precedes y
    iff y is smaller than x in the canonical word order.
    """
    tree = st.tree
    Delta = {s: delta_word(words[s], words[tree.parent[s]]) for s in st.band.nonidentity}

    def cmp(x: int, y: int, b: int) -> int:
        if x == y:
            return 0
        dx, dy = Delta[x], Delta[y]
        if set(dx) != set(dy):
            xy = separator(dx, dy, words[b]) is not None
            yx = separator(dy, dx, words[b]) is not None
            if xy == yx:
                raise AssertionError(f"separator undecided for {x},{y} in S_{b}")
            return -1 if xy else 1
        return -canonical_compare(words[x], words[y])

    out = {}
    for b, sb in st.ssets.items():
        seq = sorted(sb, key=cmp_to_key(lambda x, y, b=b: cmp(x, y, b)))
        for i, j in combinations(range(len(seq)), 2):
            if cmp(seq[i], seq[j], b) != -1:
                raise AssertionError(f"comparator is not a linear order on S_{b}")
        out[b] = tuple(seq)
    return LocalLinearOrder(out)
