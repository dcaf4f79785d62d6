"""Enumerate every table that has the second example's printed Hasse shape
(x1 < y1, x1 < y2, x2 < y3, x3 on its own, products of x3 and the y's
constant) and report which of them are left regular bands.

The free entries are x1*{x2,x3,y3} in {x1,y1,y2} and x2*{x1,x3,y1,y2} in
{x2,y3}; everything else is fixed by the shape.
"""
from itertools import product

from lrbembed.band import BandAxiomError, adjoin_identity, validate_band
from lrbembed.embedder import Embeddable, decide_embeddable, kernel

LABELS = "x1 x2 x3 y1 y2 y3".split()
IDX = {lab: i for i, lab in enumerate(LABELS)}


def tables():
    for r1 in product(["x1", "y1", "y2"], repeat=3):
        for r2 in product(["x2", "y3"], repeat=4):
            row = {
                "x1": {"x1": "x1", "y1": "y1", "y2": "y2", "x2": r1[0], "x3": r1[1], "y3": r1[2]},
                "x2": {"x2": "x2", "y3": "y3", "x1": r2[0], "x3": r2[1], "y1": r2[2], "y2": r2[3]},
                "x3": {c: "x3" for c in LABELS},
            }
            for y in ("y1", "y2", "y3"):
                row[y] = {c: y for c in LABELS}
            yield [[IDX[row[r][c]] for c in LABELS] for r in LABELS]


def main():
    total = valid = 0
    for t in tables():
        total += 1
        table, labels = adjoin_identity(t, LABELS)
        try:
            band = validate_band(table, 0, labels)
        except BandAxiomError:
            continue
        valid += 1
        v = decide_embeddable(band)
        desc = v.kind
        if isinstance(v, Embeddable):
            desc += f", kernel {len(kernel(v.initial))}, rounds {len(v.rounds)}"
        row = lambda r: " ".join(labels[band.mul(band.index(r), band.index(c))] for c in LABELS)  # noqa: E731
        print(f"x1 row: {row('x1')} | x2 row: {row('x2')} -> {desc}")
    print(f"{valid} of {total} tables are left regular bands")


if __name__ == "__main__":
    main()
