"""Isomorphism search and exhaustive enumeration of small bands."""
from __future__ import annotations

from itertools import permutations, product

from .band import Band, adjoin_identity, validate_band


def _signature(band: Band, x: int) -> tuple:
    up = sum(band.leq(x, y) for y in band.elements)
    down = sum(band.leq(y, x) for y in band.elements)
    left = sum(band.mul(x, y) == x for y in band.elements)
    fixed = sum(band.mul(y, x) == x for y in band.elements)
    return (x == band.identity, up, down, left, fixed)


def find_isomorphism(b1: Band, b2: Band) -> list[int] | None:
    """A bijection f with f(xy) = f(x)f(y), or None.  Backtracking with
    candidate sets pruned by simple order-theoretic invariants."""
    if b1.n != b2.n:
        return None
    sig1 = [_signature(b1, x) for x in b1.elements]
    sig2 = [_signature(b2, y) for y in b2.elements]
    if sorted(sig1) != sorted(sig2):
        return None
    cands = [[y for y in b2.elements if sig2[y] == sig1[x]] for x in b1.elements]
    order = sorted(b1.elements, key=lambda x: len(cands[x]))
    f = [-1] * b1.n
    used = [False] * b2.n

    def consistent(x: int) -> bool:
        fx = f[x]
        for y in b1.elements:
            fy = f[y]
            if fy < 0:
                continue
            for a, b, fa, fb in ((x, y, fx, fy), (y, x, fy, fx)):
                p = f[b1.mul(a, b)]
                if p >= 0 and p != b2.mul(fa, fb):
                    return False
        return True

    def go(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in cands[x]:
            if used[y]:
                continue
            f[x], used[y] = y, True
            if consistent(x) and go(i + 1):
                return True
            f[x], used[y] = -1, False
        return False

    return list(f) if go(0) else None


def canonical_table(table) -> tuple:
    """Lexicographically least relabelling of a table (brute force over permutations)."""
    n = len(table)
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        t = tuple(tuple(perm[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        if best is None or t < best:
            best = t
    return best


def enumerate_lrb_tables(n: int):
    """All left regular band tables on 0..n-1 (labelled), by backtracking."""
    if n == 0:
        yield ()
        return
    t = [[-1] * n for _ in range(n)]
    for i in range(n):
        t[i][i] = i
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]

    def ok() -> bool:
        for x, y in product(range(n), repeat=2):
            xy = t[x][y]
            if xy < 0:
                continue
            if t[xy][x] >= 0 and t[xy][x] != xy:
                return False
            for z in range(n):
                l = t[xy][z]
                yz = t[y][z]
                if l >= 0 and yz >= 0:
                    r = t[x][yz]
                    if r >= 0 and r != l:
                        return False
        return True

    def go(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = v
            if ok():
                yield from go(k + 1)
        t[i][j] = -1

    yield from go(0)


def enumerate_bands(max_size: int) -> list[Band]:
    """One band per isomorphism class of LRBs with at most ``max_size``
    elements, each with a new identity adjoined as element 0."""
    out = []
    for n in range(max_size + 1):
        seen = set()
        for table in enumerate_lrb_tables(n):
            key = canonical_table(table)
            if key in seen:
                continue
            seen.add(key)
            t, labels = adjoin_identity(key, [f"s{k}" for k in range(1, n + 1)])
            out.append(validate_band(t, 0, labels))
    return out
