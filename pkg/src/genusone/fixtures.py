"""Built-in demo curves used by the CLI verify commands and the test suite.

Example 1: a curve with additive reduction III* at 5 and multiplicative I2 at
19, together with a minimal plane-cubic model of a 3-covering and the twelve
scaling transformations that produce all minimal degree-3 models.

Example 2: a curve of squarefree discriminant 185 with a quartic 2-covering
and a quadric-intersection second descent model, whose minimal degree-4 model
is unique.
"""

from __future__ import annotations

from fractions import Fraction

from genusone.equations import GenusOneEquation, transformation3, weierstrass

EXAMPLE1_CURVE = weierstrass(1, -1, 0, -617, 5916)

EXAMPLE1_CUBIC = GenusOneEquation(
    3,
    (
        21686353648850,       # x^3
        1010096983050575,     # y^3
        64131409475,          # z^3
        234081254700017,      # x^2 y
        9338329782950,        # x^2 z
        842219868972245,      # x y^2
        120889031707155,      # y^2 z
        1340388284750,        # x z^2
        4822691362750,        # y z^2
        67198263238095,       # x y z
    ),
)


def _diag(mu, d1, d2, d3):
    return transformation3(Fraction(mu), ((d1, 0, 0), (0, d2, 0), (0, 0, d3)))


EXAMPLE1_TRANSFORMS = [
    _diag(1, 1, 1, 1),
    _diag(Fraction(1, 5), 5, 1, 1),
    _diag(Fraction(1, 5), 1, 5, 1),
    _diag(Fraction(1, 25), 5, 5, 1),
    _diag(Fraction(1, 25), 5, 1, 5),
    _diag(Fraction(1, 25), 1, 25, 1),
    _diag(Fraction(1, 19), 1, 1, 19),
    _diag(Fraction(1, 95), 5, 1, 19),
    _diag(Fraction(1, 95), 1, 5, 19),
    _diag(Fraction(1, 475), 5, 5, 19),
    _diag(Fraction(1, 475), 5, 1, 95),
    _diag(Fraction(1, 475), 1, 25, 19),
]

EXAMPLE2_CURVE = weierstrass(1, 0, 1, -4, -3)

# y^2 = -3x^4 + 2x^3 + 7x^2 - 2x - 3
EXAMPLE2_QUARTIC = GenusOneEquation(2, (0, 0, 0, -3, 2, 7, -2, -3))

# x1^2 - x1 x3 - x2^2 + x2 x4 + x3^2 = 0
# x1 x4 + x2^2 + x2 x3 - x2 x4 + x3^2 - x3 x4 = 0
EXAMPLE2_QUADRICS = GenusOneEquation(
    4,
    (1, 0, -1, 0, -1, 0, 1, 1, 0, 0,
     0, 0, 0, 1, 1, 1, -1, 1, -1, 0),
)
