"""Named example bands, stored in the plain-text band format."""
from __future__ import annotations

BAND_B = """\
name: B
elements: x1 x2 x3 y0 y1 y2
identity: auto
x1 y0 y1 y0 y1 y1
x2 x2 y2 x2 y2 y2
x3 x3 x3 x3 x3 x3
y0 y0 y1 y0 y1 y1
y1 y1 y1 y1 y1 y1
y2 y2 y2 y2 y2 y2
"""

# Not associative, left unrepaired on purpose:
# (x1*x2)*x3 = y1 but x1*(x2*x3) = x1*y3 = y3.
BAND_B_PRIME = """\
name: Bprime
elements: x1 x2 x3 y1 y2 y3
identity: auto
x1 x1 y1 y1 y2 y3
x2 x2 y3 y3 y3 y3
x3 x3 x3 x3 x3 x3
y1 y1 y1 y1 y1 y1
y2 y2 y2 y2 y2 y2
y3 y3 y3 y3 y3 y3
"""

DIAMOND = """\
name: diamond
elements: e a b ab
identity: e
e a b ab
a a ab ab
b ab b ab
ab ab ab ab
"""

# the three-element semigroup {+,-,0}: a two-element left-zero band with 0 adjoined
H = """\
name: H
elements: + - 0
identity: 0
+ + +
- - -
+ - 0
"""

# a hand-picked local order on B
BAND_B_ORDER = """\
x1: x1
x2: y0 < x2
x3: y0 < y1 < y2 < x3
y0: y0
y1: y1 < y2
y2: y1 < y2
"""

FIXTURES = {"bandB": BAND_B, "bandBprime": BAND_B_PRIME, "diamond": DIAMOND, "H": H}


def load(name: str):
    from .formats import document_to_band, parse_band

    return document_to_band(parse_band(FIXTURES[name]))
