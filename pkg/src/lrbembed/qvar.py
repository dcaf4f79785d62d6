"""Membership in the quasivariety generated by the three-element band H.

H = {+, -, 0}: + and - form a left-zero band and 0 acts as an identity.
A band lies in the quasivariety iff homomorphisms into H separate its
points, i.e. it embeds into a direct power of H.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .band import Band

PLUS, MINUS, ZERO = 0, 1, 2
H_LABELS = ("+", "-", "0")
H_TABLE = (
    (PLUS, PLUS, PLUS),
    (MINUS, MINUS, MINUS),
    (PLUS, MINUS, ZERO),
)


def h_mul(a: int, b: int) -> int:
    return H_TABLE[a][b]


@dataclass(frozen=True)
class QvarYes:
    certificates: dict  # (x, y) -> homomorphism as a tuple of H values
    member = True


@dataclass(frozen=True)
class QvarNo:
    witness: tuple[int, int]
    member = False


def is_homomorphism(f, band: Band) -> bool:
    return all(f[band.mul(x, y)] == h_mul(f[x], f[y]) for x in band.elements for y in band.elements)


def _extend(band: Band, f: list, x: int, v: int) -> list | None:
    """Assign f(x) = v and propagate products; None on conflict."""
    f = list(f)
    stack = [(x, v)]
    while stack:
        a, va = stack.pop()
        cur = f[a]
        if cur is not None:
            if cur != va:
                return None
            continue
        f[a] = va
        for b in band.elements:
            vb = f[b]
            if vb is None:
                continue
            for p, q in ((band.mul(a, b), h_mul(va, vb)), (band.mul(b, a), h_mul(vb, va))):
                if f[p] is None:
                    stack.append((p, q))
                elif f[p] != q:
                    return None
    return f


def separating_homomorphism(band: Band, x: int, y: int) -> tuple[int, ...] | None:
    """A homomorphism band -> H with f(x) != f(y), or None."""
    def go(f):
        try:
            z = f.index(None)
        except ValueError:
            return tuple(f)
        for v in (ZERO, PLUS, MINUS):
            g = _extend(band, f, z, v)
            if g is not None and (done := go(g)) is not None:
                return done
        return None

    start = [None] * band.n
    for vx in (ZERO, PLUS, MINUS):
        fx = _extend(band, start, x, vx)
        if fx is None:
            continue
        for vy in (ZERO, PLUS, MINUS):
            if vy == vx:
                continue
            fy = _extend(band, fx, y, vy)
            if fy is not None and (done := go(fy)) is not None:
                return done
    return None


def qvar_membership(band: Band) -> QvarYes | QvarNo:
    """Search one separating homomorphism per pair; reuse earlier ones when they already separate."""
    found: list[tuple[int, ...]] = []
    certs = {}
    for x, y in combinations(band.elements, 2):
        f = next((g for g in found if g[x] != g[y]), None)
        if f is None:
            f = separating_homomorphism(band, x, y)
            if f is None:
                return QvarNo((x, y))
            found.append(f)
        certs[(x, y)] = f
    return QvarYes(certs)
