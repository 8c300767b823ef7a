"""Genus one equations of degree 1-4, their transformation groups and invariants.

Degrees and coefficient orders (all exact rationals):

  1:  y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6          (a1,a2,a3,a4,a6)
  2:  y^2 + (al0*x^2 + al1*x*z + al2*z^2)*y
          = a*x^4 + b*x^3*z + c*x^2*z^2 + d*x*z^3 + e*z^4      (al0,al1,al2,a..e)
  3:  a*x^3 + b*y^3 + c*z^3 + a2*x^2*y + a3*x^2*z + b1*y^2*x
          + b3*y^2*z + c1*z^2*x + c2*z^2*y + m*x*y*z = 0       (a,b,c,a2,a3,b1,b3,c1,c2,m)
  4:  two quadrics in x1..x4, each with 10 coefficients in the order
      x1^2, x1x2, x1x3, x1x4, x2^2, x2x3, x2x4, x3^2, x3x4, x4^2

Transformations act by linear substitution plus the degree-specific scaling;
c4, c6 and Delta = (c4^3 - c6^2)/1728 transform with weights 4, 6, 12 in the
determinant.  Scalings are normalized so that the canonical degree-n models of
y^2 = x^3 + A*x + B reproduce the Weierstrass c4 = -48A, c6 = -864B exactly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

Frac = Fraction

COEFF_COUNT = {1: 5, 2: 8, 3: 10, 4: 20}

# exponent tuples matching the documented coefficient orders
_DEG3_MONOMIALS = (
    (3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (2, 0, 1),
    (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1),
)
_DEG4_MONOMIALS = (
    (2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 2, 0, 0),
    (0, 1, 1, 0), (0, 1, 0, 1), (0, 0, 2, 0), (0, 0, 1, 1), (0, 0, 0, 2),
)
_DEG2_G_MONOMIALS = ((2, 0), (1, 1), (0, 2))
_DEG2_F_MONOMIALS = ((4, 0), (3, 1), (2, 2), (1, 3), (0, 4))


@dataclass(frozen=True)
class GenusOneEquation:
    """Degree-tagged exact-coefficient record for a genus one equation."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree not in COEFF_COUNT:
            raise ValueError(f"degree must be 1..4, got {self.degree}")
        if len(self.coeffs) != COEFF_COUNT[self.degree]:
            raise ValueError(
                f"degree {self.degree} needs {COEFF_COUNT[self.degree]} "
                f"coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def to_text(self) -> str:
        return f"deg={self.degree}; coeffs=[{', '.join(_fmt(c) for c in self.coeffs)}]"

    def to_json_dict(self) -> dict:
        return {"deg": self.degree, "coeffs": [_fmt(c) for c in self.coeffs]}

    def __str__(self):
        return self.to_text()


def weierstrass(a1, a2, a3, a4, a6) -> GenusOneEquation:
    return GenusOneEquation(1, tuple(Fraction(v) for v in (a1, a2, a3, a4, a6)))


def parse_equation(text: str) -> GenusOneEquation:
    """Parse the `deg=<n>; coeffs=[...]` format (bit-exact round trip)."""
    m = re.match(r"\s*deg\s*=\s*(\d+)\s*;\s*coeffs\s*=\s*\[(.*)\]\s*$", text, re.S)
    if not m:
        raise ValueError(f"cannot parse equation: {text!r}")
    deg = int(m.group(1))
    items = [s.strip() for s in m.group(2).split(",") if s.strip()]
    return GenusOneEquation(deg, tuple(Fraction(s) for s in items))


def equation_from_json(obj: dict) -> GenusOneEquation:
    return GenusOneEquation(int(obj["deg"]), tuple(Fraction(s) for s in obj["coeffs"]))


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# transformations


@dataclass(frozen=True)
class Transformation:
    """An element of the degree-n transformation group over Q.

    data per degree:
      1: (u, r, s, t), u != 0
      2: (mu, (r0, r1, r2), M) with M 2x2
      3: (mu, M) with M 3x3
      4: (M, N) with M 2x2, N 4x4
    Matrices are row tuples of Fractions.
    """

    degree: int
    data: tuple

    def to_json_dict(self) -> dict:
        if self.degree == 1:
            u, r, s, t = self.data
            return {"deg": 1, "u": _fmt(u), "r": _fmt(r), "s": _fmt(s), "t": _fmt(t)}
        if self.degree == 2:
            mu, rv, M = self.data
            return {"deg": 2, "mu": _fmt(mu), "r": [_fmt(x) for x in rv], "M": _mat_json(M)}
        if self.degree == 3:
            mu, M = self.data
            return {"deg": 3, "mu": _fmt(mu), "M": _mat_json(M)}
        M, N = self.data
        return {"deg": 4, "M": _mat_json(M), "N": _mat_json(N)}


def _mat_json(M):
    return [[_fmt(x) for x in row] for row in M]


def _mat(rows: Sequence[Sequence]) -> tuple:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def mat_det(M) -> Fraction:
    n = len(M)
    if n == 1:
        return Fraction(M[0][0])
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    det = Fraction(0)
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in M[1:])
        term = M[0][j] * mat_det(minor)
        det += term if j % 2 == 0 else -term
    return det


def transformation1(u, r=0, s=0, t=0) -> Transformation:
    u = Fraction(u)
    if u == 0:
        raise ValueError("u must be nonzero")
    return Transformation(1, (u, Fraction(r), Fraction(s), Fraction(t)))


def transformation2(mu, r, M) -> Transformation:
    mu = Fraction(mu)
    M = _mat(M)
    if mu == 0 or mat_det(M) == 0:
        raise ValueError("transformation must be invertible")
    return Transformation(2, (mu, tuple(Fraction(x) for x in r), M))


def transformation3(mu, M) -> Transformation:
    mu = Fraction(mu)
    M = _mat(M)
    if mu == 0 or mat_det(M) == 0:
        raise ValueError("transformation must be invertible")
    return Transformation(3, (mu, M))


def transformation4(M, N) -> Transformation:
    M, N = _mat(M), _mat(N)
    if mat_det(M) == 0 or mat_det(N) == 0:
        raise ValueError("transformation must be invertible")
    return Transformation(4, (M, N))


def identity_transformation(degree: int) -> Transformation:
    if degree == 1:
        return transformation1(1)
    if degree == 2:
        return transformation2(1, (0, 0, 0), ((1, 0), (0, 1)))
    if degree == 3:
        return transformation3(1, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    if degree == 4:
        return transformation4(((1, 0), (0, 1)), _identity(4))
    raise ValueError("degree must be 1..4")


def _identity(n):
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def det_transformation(g: Transformation) -> Fraction:
    """Determinant of a transformation: 1/u, mu*det M, mu*det M, det M*det N."""
    if g.degree == 1:
        return 1 / g.data[0]
    if g.degree == 2:
        return g.data[0] * mat_det(g.data[2])
    if g.degree == 3:
        return g.data[0] * mat_det(g.data[1])
    return mat_det(g.data[0]) * mat_det(g.data[1])


# ---------------------------------------------------------------------------
# tiny multivariate form engine (exponent-tuple dicts)


def _form_from_coeffs(coeffs, monomials) -> dict:
    return {e: Fraction(c) for e, c in zip(monomials, coeffs) if c != 0}


def _form_to_coeffs(form: dict, monomials) -> tuple:
    extra = set(form) - set(monomials)
    if any(form[e] != 0 for e in extra):
        raise AssertionError("substitution produced unexpected monomials")
    return tuple(form.get(e, Fraction(0)) for e in monomials)


def _form_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def _form_substitute(form: dict, M) -> dict:
    """Substitute var_j -> sum_i M[i][j] * newvar_i into the form."""
    n = len(M)
    unit = lambda i: tuple(1 if k == i else 0 for k in range(n))
    linear = [
        {unit(i): Fraction(M[i][j]) for i in range(n) if M[i][j] != 0}
        for j in range(n)
    ]
    out: dict = {}
    for expt, coeff in form.items():
        term = {tuple(0 for _ in range(n)): coeff}
        for j, e in enumerate(expt):
            for _ in range(e):
                term = _form_mul(term, linear[j])
        for e, c in term.items():
            out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in out.items() if c != 0}


# ---------------------------------------------------------------------------
# group action on equations


def apply_transformation(g: Transformation, eq: GenusOneEquation) -> GenusOneEquation:
    """Act on an equation; invariants pick up det(g)^weight."""
    if g.degree != eq.degree:
        raise ValueError("degree mismatch between transformation and equation")
    if eq.degree == 1:
        return _apply1(g, eq)
    if eq.degree == 2:
        return _apply2(g, eq)
    if eq.degree == 3:
        return _apply3(g, eq)
    return _apply4(g, eq)


def _apply1(g, eq):
    u, r, s, t = g.data
    a1, a2, a3, a4, a6 = eq.coeffs
    b1 = (a1 + 2 * s) / u
    b2 = (a2 - s * a1 + 3 * r - s * s) / u**2
    b3 = (a3 + r * a1 + 2 * t) / u**3
    b4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u**4
    b6 = (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) / u**6
    return GenusOneEquation(1, (b1, b2, b3, b4, b6))


def _apply2(g, eq):
    mu, rv, M = g.data
    gform = _form_from_coeffs(eq.coeffs[:3], _DEG2_G_MONOMIALS)
    fform = _form_from_coeffs(eq.coeffs[3:], _DEG2_F_MONOMIALS)
    gM = _form_substitute(gform, M)
    fM = _form_substitute(fform, M)
    rform = _form_from_coeffs(rv, _DEG2_G_MONOMIALS)
    newg = {e: mu * c for e, c in _form_add(gM, _form_scale(rform, 2)).items()}
    rsq = _form_mul(rform, rform)
    newf = _form_add(fM, _form_scale(rsq, -1), _form_scale(_form_mul(gM, rform), -1))
    newf = {e: mu * mu * c for e, c in newf.items()}
    return GenusOneEquation(
        2,
        _form_to_coeffs(newg, _DEG2_G_MONOMIALS) + _form_to_coeffs(newf, _DEG2_F_MONOMIALS),
    )


def _form_add(*forms):
    out: dict = {}
    for f in forms:
        for e, c in f.items():
            out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in out.items() if c != 0}


def _form_scale(f, k):
    return {e: Fraction(k) * c for e, c in f.items()}


def _apply3(g, eq):
    mu, M = g.data
    form = _form_from_coeffs(eq.coeffs, _DEG3_MONOMIALS)
    out = {e: mu * c for e, c in _form_substitute(form, M).items()}
    return GenusOneEquation(3, _form_to_coeffs(out, _DEG3_MONOMIALS))


def _apply4(g, eq):
    M, N = g.data
    q1 = _form_from_coeffs(eq.coeffs[:10], _DEG4_MONOMIALS)
    q2 = _form_from_coeffs(eq.coeffs[10:], _DEG4_MONOMIALS)
    new = []
    for i in range(2):
        comb = _form_add(_form_scale(q1, M[i][0]), _form_scale(q2, M[i][1]))
        new.append(_form_substitute(comb, N))
    return GenusOneEquation(
        4, _form_to_coeffs(new[0], _DEG4_MONOMIALS) + _form_to_coeffs(new[1], _DEG4_MONOMIALS)
    )


def compose(g2: Transformation, g1: Transformation) -> Transformation:
    """The transformation acting like g1 followed by g2."""
    if g1.degree != g2.degree:
        raise ValueError("degree mismatch")
    if g1.degree == 1:
        u1, r1, s1, t1 = g1.data
        u2, r2, s2, t2 = g2.data
        return transformation1(
            u1 * u2,
            u1**2 * r2 + r1,
            u1 * s2 + s1,
            u1**3 * t2 + s1 * u1**2 * r2 + t1,
        )
    if g1.degree == 2:
        mu1, rv1, M1 = g1.data
        mu2, rv2, M2 = g2.data
        r1form = _form_from_coeffs(rv1, _DEG2_G_MONOMIALS)
        rform = _form_add(
            _form_scale(_form_from_coeffs(rv2, _DEG2_G_MONOMIALS), 1 / mu1),
            _form_substitute(r1form, M2),
        )
        return transformation2(
            mu1 * mu2, _form_to_coeffs(rform, _DEG2_G_MONOMIALS), mat_mul(M2, M1)
        )
    if g1.degree == 3:
        mu1, M1 = g1.data
        mu2, M2 = g2.data
        return transformation3(mu1 * mu2, mat_mul(M2, M1))
    M1, N1 = g1.data
    M2, N2 = g2.data
    return transformation4(mat_mul(M2, M1), mat_mul(N2, N1))


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class Invariants:
    c4: Fraction
    c6: Fraction
    delta: Fraction


def invariants(eq: GenusOneEquation) -> Invariants:
    """c4, c6 and Delta = (c4^3 - c6^2)/1728 of the equation."""
    if eq.degree == 1:
        c4, c6 = _c4c6_weierstrass(eq.coeffs)
    elif eq.degree == 2:
        c4, c6 = _c4c6_quartic(eq.coeffs)
    elif eq.degree == 3:
        c4, c6 = _c4c6_cubic(eq.coeffs)
    else:
        c4, c6 = _c4c6_quadric_pair(eq.coeffs)
    return Invariants(c4, c6, (c4**3 - c6**2) / 1728)


def _c4c6_weierstrass(co):
    a1, a2, a3, a4, a6 = co
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    c4 = b2 * b2 - 24 * b4
    c6 = -b2**3 + 36 * b2 * b4 - 216 * b6
    return c4, c6


def _quartic_ij(A, B, C, D, E):
    i = 12 * A * E - 3 * B * D + C * C
    j = (72 * A * C * E - 27 * A * D * D - 27 * B * B * E + 9 * B * C * D - 2 * C**3)
    return i, j


def _c4c6_quartic(co):
    al0, al1, al2, a, b, c, d, e = co
    # complete the square: F = f + g^2/4
    A = a + al0 * al0 / 4
    B = b + al0 * al1 / 2
    C = c + (al1 * al1 + 2 * al0 * al2) / 4
    D = d + al1 * al2 / 2
    E = e + al2 * al2 / 4
    i, j = _quartic_ij(A, B, C, D, E)
    return 16 * i, 32 * j


def _c4c6_cubic(co):
    # Classical scaled invariants of the ternary cubic (degrees 4 and 6 in
    # the coefficients, weights 4 and 6).  Normalized so the cubic
    # y^2 z - x^3 - A x z^2 - B z^3 gives c4 = -48A, c6 = -864B.
    a, b, c, a2, a3, b1, b3, c1, c2, m = co
    c4 = (
        -216 * a * b * c * m + 144 * a * b * c1 * c2 + 144 * a * b1 * b3 * c
        - 48 * a * b1 * c2**2 - 48 * a * b3**2 * c1 + 24 * a * b3 * c2 * m
        - 48 * a2**2 * b3 * c + 16 * a2**2 * c2**2 + 144 * a2 * a3 * b * c
        - 16 * a2 * a3 * b3 * c2 - 48 * a2 * b * c1**2 + 24 * a2 * b1 * c * m
        - 16 * a2 * b1 * c1 * c2 + 24 * a2 * b3 * c1 * m - 8 * a2 * c2 * m**2
        - 48 * a3**2 * b * c2 + 16 * a3**2 * b3**2 + 24 * a3 * b * c1 * m
        - 48 * a3 * b1**2 * c - 16 * a3 * b1 * b3 * c1 + 24 * a3 * b1 * c2 * m
        - 8 * a3 * b3 * m**2 + 16 * b1**2 * c1**2 - 8 * b1 * c1 * m**2 + m**4
    )
    c6 = (
        5832 * a**2 * b**2 * c**2 - 3888 * a**2 * b * b3 * c * c2
        + 864 * a**2 * b * c2**3 + 864 * a**2 * b3**3 * c
        - 216 * a**2 * b3**2 * c2**2 - 3888 * a * a2 * b * b1 * c**2
        + 1296 * a * a2 * b * b3 * c * c1 + 1296 * a * a2 * b * c * c2 * m
        - 864 * a * a2 * b * c1 * c2**2 + 1296 * a * a2 * b1 * b3 * c * c2
        - 288 * a * a2 * b1 * c2**3 - 864 * a * a2 * b3**2 * c * m
        + 144 * a * a2 * b3**2 * c1 * c2 + 144 * a * a2 * b3 * c2**2 * m
        - 3888 * a * a3 * b**2 * c * c1 + 1296 * a * a3 * b * b1 * c * c2
        + 1296 * a * a3 * b * b3 * c * m + 1296 * a * a3 * b * b3 * c1 * c2
        - 864 * a * a3 * b * c2**2 * m - 864 * a * a3 * b1 * b3**2 * c
        + 144 * a * a3 * b1 * b3 * c2**2 - 288 * a * a3 * b3**3 * c1
        + 144 * a * a3 * b3**2 * c2 * m + 864 * a * b**2 * c1**3
        + 1296 * a * b * b1 * c * c1 * m - 864 * a * b * b1 * c1**2 * c2
        - 864 * a * b * b3 * c1**2 * m - 540 * a * b * c * m**3
        + 648 * a * b * c1 * c2 * m**2 + 864 * a * b1**3 * c**2
        - 864 * a * b1**2 * b3 * c * c1 - 864 * a * b1**2 * c * c2 * m
        + 576 * a * b1**2 * c1 * c2**2 + 576 * a * b1 * b3**2 * c1**2
        + 648 * a * b1 * b3 * c * m**2 - 720 * a * b1 * b3 * c1 * c2 * m
        + 72 * a * b1 * c2**2 * m**2 + 72 * a * b3**2 * c1 * m**2
        - 36 * a * b3 * c2 * m**3 + 864 * a2**3 * b * c**2
        - 288 * a2**3 * b3 * c * c2 + 64 * a2**3 * c2**3
        - 864 * a2**2 * a3 * b * c * c2 + 576 * a2**2 * a3 * b3**2 * c
        - 96 * a2**2 * a3 * b3 * c2**2 - 864 * a2**2 * b * c * c1 * m
        + 576 * a2**2 * b * c1**2 * c2 - 216 * a2**2 * b1**2 * c**2
        + 144 * a2**2 * b1 * b3 * c * c1 + 144 * a2**2 * b1 * c * c2 * m
        - 96 * a2**2 * b1 * c1 * c2**2 - 216 * a2**2 * b3**2 * c1**2
        + 72 * a2**2 * b3 * c * m**2 + 144 * a2**2 * b3 * c1 * c2 * m
        - 48 * a2**2 * c2**2 * m**2 - 864 * a2 * a3**2 * b * b3 * c
        + 576 * a2 * a3**2 * b * c2**2 - 96 * a2 * a3**2 * b3**2 * c2
        + 1296 * a2 * a3 * b * b1 * c * c1 + 144 * a2 * a3 * b * b3 * c1**2
        + 648 * a2 * a3 * b * c * m**2 - 720 * a2 * a3 * b * c1 * c2 * m
        + 144 * a2 * a3 * b1**2 * c * c2 - 720 * a2 * a3 * b1 * b3 * c * m
        - 48 * a2 * a3 * b1 * b3 * c1 * c2 + 144 * a2 * a3 * b1 * c2**2 * m
        + 144 * a2 * a3 * b3**2 * c1 * m - 24 * a2 * a3 * b3 * c2 * m**2
        - 288 * a2 * b * b1 * c1**3 + 72 * a2 * b * c1**2 * m**2
        + 144 * a2 * b1**2 * c * c1 * m - 96 * a2 * b1**2 * c1**2 * c2
        + 144 * a2 * b1 * b3 * c1**2 * m - 36 * a2 * b1 * c * m**3
        - 24 * a2 * b1 * c1 * c2 * m**2 - 36 * a2 * b3 * c1 * m**3
        + 12 * a2 * c2 * m**4 + 864 * a3**3 * b**2 * c
        - 288 * a3**3 * b * b3 * c2 + 64 * a3**3 * b3**3
        - 216 * a3**2 * b**2 * c1**2 - 864 * a3**2 * b * b1 * c * m
        + 144 * a3**2 * b * b1 * c1 * c2 + 144 * a3**2 * b * b3 * c1 * m
        + 72 * a3**2 * b * c2 * m**2 + 576 * a3**2 * b1**2 * b3 * c
        - 216 * a3**2 * b1**2 * c2**2 - 96 * a3**2 * b1 * b3**2 * c1
        + 144 * a3**2 * b1 * b3 * c2 * m - 48 * a3**2 * b3**2 * m**2
        + 144 * a3 * b * b1 * c1**2 * m - 36 * a3 * b * c1 * m**3
        - 288 * a3 * b1**3 * c * c1 - 96 * a3 * b1**2 * b3 * c1**2
        + 72 * a3 * b1**2 * c * m**2 + 144 * a3 * b1**2 * c1 * c2 * m
        - 24 * a3 * b1 * b3 * c1 * m**2 - 36 * a3 * b1 * c2 * m**3
        + 12 * a3 * b3 * m**4 + 64 * b1**3 * c1**3
        - 48 * b1**2 * c1**2 * m**2 + 12 * b1 * c1 * m**4 - m**6
    )
    return c4, c6


def gram_matrix(coeffs10) -> tuple:
    """Symmetric 4x4 Gram matrix of a quadric (half-integer off-diagonals)."""
    half = Fraction(1, 2)
    g = [[Fraction(0)] * 4 for _ in range(4)]
    for (e, c) in zip(_DEG4_MONOMIALS, coeffs10):
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx
        if i == j:
            g[i][i] = Fraction(c)
        else:
            g[i][j] = g[j][i] = half * Fraction(c)
    return tuple(tuple(row) for row in g)


def _c4c6_quadric_pair(co):
    A = gram_matrix(co[:10])
    B = gram_matrix(co[10:])
    # det(x*A + z*B) as a binary quartic via signed permutation expansion
    quartic = [Fraction(0)] * 5
    for perm in permutations(range(4)):
        sign = 1
        seen = list(perm)
        for i in range(4):
            for j in range(i + 1, 4):
                if seen[i] > seen[j]:
                    sign = -sign
        term = [Fraction(0)] * 5
        term[0] = Fraction(sign)
        deg = 0
        for i in range(4):
            a_, b_ = A[i][perm[i]], B[i][perm[i]]
            new = [Fraction(0)] * 5
            for k in range(deg + 1):
                if term[k] == 0:
                    continue
                new[k] += term[k] * a_
                new[k + 1] += term[k] * b_
            term = new
            deg += 1
        for k in range(5):
            quartic[k] += term[k]
    i, j = _quartic_ij(*quartic)
    return 256 * i, 2048 * j


def is_integral(eq: GenusOneEquation) -> bool:
    """True iff every coefficient is an integer."""
    return all(c.denominator == 1 for c in eq.coeffs)


def jacobian(eq: GenusOneEquation) -> GenusOneEquation:
    """Weierstrass curve y^2 = x^3 - 27*c4*x - 54*c6 built from the invariants.

    Its invariants are (6^4*c4, 6^6*c6, 6^12*Delta), so all valuations away
    from 2 and 3 agree with the input equation's.
    """
    inv = invariants(eq)
    if inv.delta == 0:
        raise ValueError("singular equation")
    return GenusOneEquation(1, (0, 0, 0, -27 * inv.c4, -54 * inv.c6))
