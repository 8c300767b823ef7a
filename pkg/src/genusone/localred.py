"""Local reduction data of elliptic curves over Q at a prime p.

Runs Tate's algorithm on a Weierstrass equation: minimal model, Kodaira type,
nu_p of the minimal discriminant, Tamagawa number, component group structure
and split/non-split data.  Also computes the image of a rational point in the
component group by tracking it through the same coordinate changes the
algorithm performs.

All arithmetic is exact.  Translations are chosen as integer representatives
mod a high power of p, so intermediate models keep integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from genusone.arith import INFINITY, hensel_root, is_prime, legendre, padic_valuation, sqrt_mod
from genusone.equations import (
    GenusOneEquation,
    Transformation,
    apply_transformation,
    compose,
    identity_transformation,
    invariants,
    jacobian,
    transformation1,
)

Point = Optional[tuple[Fraction, Fraction]]  # None is the point at infinity


# ---------------------------------------------------------------------------
# Kodaira symbols


@dataclass(frozen=True)
class KodairaType:
    """Tagged Kodaira symbol: I_n, I_n*, II, III, IV, IV*, III*, II*."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("I", "I*", "II", "III", "IV", "IV*", "III*", "II*"):
            raise ValueError(f"bad Kodaira kind {self.kind!r}")
        if self.kind not in ("I", "I*") and self.n != 0:
            raise ValueError("only I_n and I_n* carry a parameter")
        if self.n < 0:
            raise ValueError("parameter must be >= 0")

    def __str__(self):
        if self.kind == "I":
            return f"I{self.n}"
        if self.kind == "I*":
            return f"I{self.n}*"
        return self.kind

    @property
    def standard_v_delta(self) -> int:
        """nu(Delta_min) forced by the type (residue characteristic >= 5)."""
        return {
            "I": self.n, "II": 2, "III": 3, "IV": 4,
            "I*": 6 + self.n, "IV*": 8, "III*": 9, "II*": 10,
        }[self.kind]


def I(n: int) -> KodairaType:
    return KodairaType("I", n)


def Istar(n: int) -> KodairaType:
    return KodairaType("I*", n)


II = KodairaType("II")
III = KodairaType("III")
IV = KodairaType("IV")
IVstar = KodairaType("IV*")
IIIstar = KodairaType("III*")
IIstar = KodairaType("II*")


def parse_kodaira(s: str) -> KodairaType:
    s = s.strip()
    for fixed in ("II*", "III*", "IV*", "II", "III", "IV"):
        if s == fixed:
            return KodairaType(fixed)
    if s.startswith("I"):
        body = s[1:]
        star = body.endswith("*")
        if star:
            body = body[:-1]
        if body.isdigit():
            return KodairaType("I*" if star else "I", int(body))
    raise ValueError(f"cannot parse Kodaira symbol {s!r}")


# ---------------------------------------------------------------------------
# component groups


@dataclass(frozen=True)
class PhiGroup:
    """The component group: cyclic of order N, or Z/2 x Z/2."""

    kind: str  # "cyclic" | "klein"
    order: int

    def __post_init__(self):
        if self.kind == "klein":
            if self.order != 4:
                raise ValueError("klein group has order 4")
        elif self.kind != "cyclic" or self.order < 1:
            raise ValueError("bad component group")

    def zero(self) -> "PhiElement":
        return PhiElement(self, (0, 0) if self.kind == "klein" else 0)

    def element(self, value) -> "PhiElement":
        return PhiElement(self, value)

    def elements(self) -> list["PhiElement"]:
        if self.kind == "klein":
            return [PhiElement(self, (a, b)) for a in (0, 1) for b in (0, 1)]
        return [PhiElement(self, i) for i in range(self.order)]

    def to_json(self) -> dict:
        return {"klein": True} if self.kind == "klein" else {"cyclic": self.order}

    def parse_element(self, text: str) -> "PhiElement":
        parts = [int(t) for t in text.split(",")]
        if self.kind == "klein":
            if len(parts) == 1:
                # accept the additive shorthand: 0 -> identity, 2 -> (1,1)
                if parts[0] % 4 == 0:
                    return PhiElement(self, (0, 0))
                if parts[0] % 2 == 0:
                    return PhiElement(self, (1, 1))
                raise ValueError(f"cannot read {text!r} in Z/2 x Z/2")
            return PhiElement(self, (parts[0], parts[1]))
        if len(parts) == 2:
            # pair shorthand for a cyclic group: (0,0) is 0, (1,1) the
            # order-2 element (only meaningful when the order is even)
            if parts == [0, 0]:
                return self.zero()
            if parts == [1, 1] and self.order % 2 == 0:
                return PhiElement(self, self.order // 2)
            raise ValueError(f"cannot read {text!r} in a cyclic group")
        if len(parts) != 1:
            raise ValueError(f"cyclic element needs one integer, got {text!r}")
        return PhiElement(self, parts[0])


@dataclass(frozen=True)
class PhiElement:
    group: PhiGroup
    value: object

    def __post_init__(self):
        if self.group.kind == "klein":
            a, b = self.value
            object.__setattr__(self, "value", (a % 2, b % 2))
        else:
            object.__setattr__(self, "value", self.value % self.group.order)

    def __add__(self, other: "PhiElement") -> "PhiElement":
        if other.group != self.group:
            raise ValueError("elements of different component groups")
        if self.group.kind == "klein":
            a, b = self.value
            c, d = other.value
            return PhiElement(self.group, (a + c, b + d))
        return PhiElement(self.group, self.value + other.value)

    def __neg__(self) -> "PhiElement":
        if self.group.kind == "klein":
            return self
        return PhiElement(self.group, -self.value)

    def __sub__(self, other):
        return self + (-other)

    def times(self, k: int) -> "PhiElement":
        if self.group.kind == "klein":
            a, b = self.value
            return PhiElement(self.group, (k * a, k * b))
        return PhiElement(self.group, k * self.value)

    def is_zero(self) -> bool:
        return self == self.group.zero()

    def in_k_multiples(self, k: int) -> bool:
        """Whether this element lies in k*Phi."""
        if self.group.kind == "klein":
            return self.is_zero() if k % 2 == 0 else True
        from math import gcd

        return self.value % gcd(k, self.group.order) == 0

    def to_json(self):
        return list(self.value) if self.group.kind == "klein" else self.value

    def __str__(self):
        if self.group.kind == "klein":
            return f"{self.value[0]},{self.value[1]}"
        return str(self.value)


# ---------------------------------------------------------------------------
# point arithmetic on Weierstrass curves (exact, over Q)


def point_on_curve(eq: GenusOneEquation, P: Point) -> bool:
    if P is None:
        return True
    a1, a2, a3, a4, a6 = eq.coeffs
    x, y = Fraction(P[0]), Fraction(P[1])
    return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6


def ell_neg(eq: GenusOneEquation, P: Point) -> Point:
    if P is None:
        return None
    a1, _, a3, _, _ = eq.coeffs
    x, y = P
    return (x, -y - a1 * x - a3)


def ell_add(eq: GenusOneEquation, P: Point, Q: Point) -> Point:
    """Chord-tangent addition: x3 = lam^2 + a1*lam - a2 - x1 - x2."""
    if P is None:
        return Q
    if Q is None:
        return P
    a1, a2, a3, a4, _ = eq.coeffs
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y2 != y1:  # Q = -P
            return None
        if 2 * y1 + a1 * x1 + a3 == 0:  # 2-torsion
            return None
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
        mu = y1 - lam * x1
    else:
        lam = (y2 - y1) / (x2 - x1)
        mu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - mu - a3
    return (x3, y3)


def ell_mul(eq: GenusOneEquation, k: int, P: Point) -> Point:
    if k < 0:
        return ell_mul(eq, -k, ell_neg(eq, P))
    acc: Point = None
    for _ in range(k):
        acc = ell_add(eq, acc, P)
    return acc


def transform_point(g: Transformation, P: Point) -> Point:
    """Image of a point under a degree-1 transformation of the equation."""
    if P is None:
        return None
    u, r, s, t = g.data
    x, y = P
    xp = (x - r) / u**2
    yp = (y - s * (x - r) - t) / u**3
    return (xp, yp)


# ---------------------------------------------------------------------------
# small mod-p polynomial helpers (degree <= 3), used for root analysis


def _pmod(q: Fraction | int, p: int) -> int:
    q = Fraction(q)
    return q.numerator * pow(q.denominator, -1, p) % p


def _quad_roots(a: int, b: int, c: int, p: int) -> list[int]:
    """Distinct roots in F_p of a*x^2 + b*x + c, leading coeff a nonzero mod p."""
    a, b, c = a % p, b % p, c % p
    if p == 2:
        return sorted(x for x in (0, 1) if (a * x * x + b * x + c) % 2 == 0)
    disc = (b * b - 4 * a * c) % p
    if disc == 0:
        r = -b * pow(2 * a, -1, p) % p
        return [r]
    s = sqrt_mod(disc, p)
    if s is None:
        return []
    inv2a = pow(2 * a, -1, p)
    return sorted(((-b + s) * inv2a % p, (-b - s) * inv2a % p))


def _poly_trim(f: list[int], p: int) -> list[int]:
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_divmod(f: list[int], g: list[int], p: int):
    f = f[:]
    q = [0] * (max(len(f) - len(g) + 1, 0))
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g) and any(f):
        if f[-1] == 0:
            f.pop()
            continue
        k = len(f) - len(g)
        coef = f[-1] * inv % p
        q[k] = coef
        for i, c in enumerate(g):
            f[i + k] = (f[i + k] - coef * c) % p
        f = _poly_trim(f, p)
    return q, f


def _poly_gcd(f, g, p):
    f, g = _poly_trim(f, p), _poly_trim(g, p)
    while g:
        _, r = _poly_divmod(f, g, p)
        f, g = g, _poly_trim(r, p)
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f


def _poly_mulmod(f, g, mod, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    _, r = _poly_divmod(out, mod, p)
    return _poly_trim(r, p)


def _poly_powmod(f, e, mod, p):
    result = [1]
    f = _poly_trim(f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, f, mod, p)
        f = _poly_mulmod(f, f, mod, p)
        e >>= 1
    return result


def _cubic_rational_roots(A: int, B: int, C: int, p: int) -> list[int]:
    """Roots in F_p of the separable cubic T^3 + A T^2 + B T + C."""
    if p < 60:
        return sorted(t for t in range(p) if (t**3 + A * t * t + B * t + C) % p == 0)
    f = _poly_trim([C, B, A, 1], p)
    xp = _poly_powmod([0, 1], p, f, p)
    xp_minus_x = _poly_trim([(c - (1 if i == 1 else 0)) % p for i, c in enumerate(xp + [0, 0])], p)
    g = _poly_gcd(f, xp_minus_x, p)
    deg = len(g) - 1 if g else 0
    if deg <= 0:
        return []
    if deg == 1:
        return [(-g[0]) * pow(g[1], -1, p) % p]
    if deg == 2:
        return _quad_roots(g[2], g[1], g[0], p)
    # fully split cubic: peel off one root by equal-degree splitting
    for c in range(1, p):
        h = _poly_powmod([c, 1], (p - 1) // 2, g, p)
        h = _poly_trim([(v - (1 if i == 0 else 0)) % p for i, v in enumerate(h + [0])], p)
        w = _poly_gcd(g, h, p)
        if 0 < len(w) - 1 < 3:
            if len(w) - 1 == 1:
                r = (-w[0]) * pow(w[1], -1, p) % p
                rest, _ = _poly_divmod(g, [(-r) % p, 1], p)
                return sorted([r] + _quad_roots(rest[2], rest[1], rest[0], p))
            return sorted(
                _quad_roots(w[2], w[1], w[0], p)
                + [(-_poly_divmod(g, w, p)[0][0]) % p * 1]
            )
    raise AssertionError("equal-degree splitting failed")


# ---------------------------------------------------------------------------
# reduction data


@dataclass
class ReductionData:
    """Everything Tate's algorithm knows about E/Q at p."""

    p: int
    kodaira: KodairaType
    v_delta_min: int
    tamagawa: int
    phi: PhiGroup
    split: bool
    minimal_model: GenusOneEquation
    to_minimal: Transformation
    _trace: dict = field(default_factory=dict, repr=False)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "kodaira": str(self.kodaira),
            "cp": self.tamagawa,
            "vDeltaMin": self.v_delta_min,
            "phi": self.phi.to_json(),
            "split": self.split,
            "minimalModel": self.minimal_model.to_json_dict(),
            "toMinimal": self.to_minimal.to_json_dict(),
        }


class _Model:
    """Integer Weierstrass quintuple with a running transformation composite."""

    def __init__(self, eq: GenusOneEquation):
        self.comp = identity_transformation(1)
        den = 1
        for c in eq.coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        if den != 1:
            self.comp = transformation1(Fraction(1, den))
        cur = apply_transformation(self.comp, eq)
        self.a = [int(c) for c in cur.coeffs]

    def shift(self, r=0, s=0, t=0, u=1):
        g = transformation1(Fraction(u), Fraction(r), Fraction(s), Fraction(t))
        cur = apply_transformation(g, GenusOneEquation(1, tuple(self.a)))
        assert all(c.denominator == 1 for c in cur.coeffs)
        self.a = [int(c) for c in cur.coeffs]
        self.comp = compose(g, self.comp)

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c4_delta(self):
        b2, b4, b6, b8 = self.b_invariants()
        c4 = b2 * b2 - 24 * b4
        delta = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        return c4, delta

    def equation(self) -> GenusOneEquation:
        return GenusOneEquation(1, tuple(self.a))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _vp(n: int, p: int):
    if n == 0:
        return INFINITY
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _center_singular_point(m: _Model, p: int):
    """Translate the unique singular point of the reduction to (0,0)."""
    a1, a2, a3, a4, a6 = m.a
    if p <= 3:
        for x0 in range(p):
            for y0 in range(p):
                f = y0 * y0 + a1 * x0 * y0 + a3 * y0 - x0**3 - a2 * x0 * x0 - a4 * x0 - a6
                fx = a1 * y0 - 3 * x0 * x0 - 2 * a2 * x0 - a4
                fy = 2 * y0 + a1 * x0 + a3
                if f % p == 0 and fx % p == 0 and fy % p == 0:
                    m.shift(r=x0, t=y0)
                    return
        raise AssertionError("no singular point found mod p")
    b2, b4, b6, _ = m.b_invariants()
    c4, _ = m.c4_delta()
    if c4 % p != 0:
        x0 = (18 * b6 - b2 * b4) * pow(c4, -1, p) % p
    else:
        x0 = (-b2) * pow(12, -1, p) % p
    y0 = (-(a1 * x0 + a3)) * pow(2, -1, p) % p
    m.shift(r=x0, t=y0)


def tate(eq: GenusOneEquation, p: int) -> ReductionData:
    """Tate's algorithm for a degree-1 equation at the prime p."""
    if eq.degree != 1:
        raise ValueError("tate expects a degree-1 (Weierstrass) equation")
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    if invariants(eq).delta == 0:
        raise ValueError("singular equation")

    m = _Model(eq)
    for _ in range(2 + padic_valuation(invariants(m.equation()).delta, p) // 12 + 1):
        result = _tate_pass(m, p)
        if result is not None:
            result.to_minimal = m.comp
            result.minimal_model = m.equation()
            return result
    raise AssertionError("tate failed to terminate")


def _tate_pass(m: _Model, p: int) -> ReductionData | None:
    """One pass of the algorithm; returns None when a rescale restarts it."""
    K_big = 0
    _, delta = m.c4_delta()
    vD = _vp(delta, p)
    if vD == 0:
        return ReductionData(
            p, I(0), 0, 1, PhiGroup("cyclic", 1), True, m.equation(),
            identity_transformation(1), {"type": "good"},
        )
    K_big = vD + 8

    _center_singular_point(m, p)
    b2, _, _, _ = m.b_invariants()

    if b2 % p != 0:
        # multiplicative: I_n with n = vD; split iff the tangent directions
        # at the node are rational
        a1, a2, _, _, _ = m.a
        if p == 2:
            split = a2 % 2 == 0
        else:
            split = legendre(b2, p) == 1
        n = vD
        cp = n if split else (2 if n % 2 == 0 else 1)
        return ReductionData(
            p, I(n), vD, cp, PhiGroup("cyclic", n), split, m.equation(),
            identity_transformation(1), {"type": "In", "n": n, "split": split},
        )

    # additive from here on
    if p != 2:
        s = (-m.a[0]) * pow(2, -1, p**K_big) % p**K_big
        m.shift(s=s)
        t = (-m.a[2]) * pow(2, -1, p**K_big) % p**K_big
        m.shift(t=t)
        assert _vp(m.a[0], p) >= 1 and _vp(m.a[1], p) >= 1

    a1, a2, a3, a4, a6 = m.a
    if _vp(a6, p) < 2:
        return ReductionData(
            p, II, vD, 1, PhiGroup("cyclic", 1), True, m.equation(),
            identity_transformation(1), {"type": "II"},
        )
    _, _, b6, b8 = m.b_invariants()
    if _vp(b8, p) < 3:
        return ReductionData(
            p, III, vD, 2, PhiGroup("cyclic", 2), True, m.equation(),
            identity_transformation(1), {"type": "III"},
        )
    if _vp(b6, p) < 3:
        roots = _quad_roots(1, a3 // p, (-a6) // (p * p), p)
        cp = 3 if roots else 1
        return ReductionData(
            p, IV, vD, cp, PhiGroup("cyclic", 3), cp == 3, m.equation(),
            identity_transformation(1), {"type": "IV", "roots": roots},
        )

    if p == 2:
        _normalize_2adic(m)
    a1, a2, a3, a4, a6 = m.a
    assert _vp(a1, p) >= 1 and _vp(a2, p) >= 1
    assert _vp(a3, p) >= 2 and _vp(a4, p) >= 2 and _vp(a6, p) >= 3

    # cubic T^3 + a2/p T^2 + a4/p^2 T + a6/p^3 governs the starred types
    A, B, C = a2 // p, a4 // (p * p), a6 // p**3
    disc = (
        18 * A * B * C - 4 * A**3 * C + A * A * B * B - 4 * B**3 - 27 * C * C
    ) % p
    if disc != 0:
        roots = _cubic_rational_roots(A, B, C, p)
        cp = 1 + len(roots)
        return ReductionData(
            p, Istar(0), vD, cp, PhiGroup("klein", 4), cp == 4, m.equation(),
            identity_transformation(1), {"type": "I0*", "roots": roots},
        )

    d_double, d_triple = _cubic_repeated_root(A, B, C, p)
    if not d_triple:
        m.shift(r=p * d_double)
        return _subloop_instar(m, p, vD)

    m.shift(r=p * d_double)
    a1, a2, a3, a4, a6 = m.a
    assert _vp(a2, p) >= 2 and _vp(a4, p) >= 3 and _vp(a6, p) >= 4
    quad = (1, a3 // (p * p), (-a6) // p**4)
    if _separable_quad(*quad, p):
        roots = _quad_roots(*quad, p)
        cp = 3 if roots else 1
        return ReductionData(
            p, IVstar, vD, cp, PhiGroup("cyclic", 3), cp == 3, m.equation(),
            identity_transformation(1), {"type": "IV*", "roots": roots},
        )
    y0 = _double_root_quad(*quad, p)
    m.shift(t=p * p * y0)
    a1, a2, a3, a4, a6 = m.a
    assert _vp(a3, p) >= 3 and _vp(a6, p) >= 5
    if _vp(a4, p) == 3:
        return ReductionData(
            p, IIIstar, vD, 2, PhiGroup("cyclic", 2), True, m.equation(),
            identity_transformation(1), {"type": "III*"},
        )
    if _vp(a6, p) == 5:
        return ReductionData(
            p, IIstar, vD, 1, PhiGroup("cyclic", 1), True, m.equation(),
            identity_transformation(1), {"type": "II*"},
        )
    # not minimal: rescale by u = p and run again
    m.shift(u=p)
    return None


def _normalize_2adic(m: _Model):
    """Search the translation making 2|a1,a2, 4|a3,a4, 8|a6."""
    base = list(m.a)
    for r in range(8):
        for s in range(2):
            for t in range(8):
                g = transformation1(1, r, s, t)
                cur = apply_transformation(g, GenusOneEquation(1, tuple(base)))
                c = [int(v) for v in cur.coeffs]
                if (
                    c[0] % 2 == 0 and c[1] % 2 == 0 and c[2] % 4 == 0
                    and c[3] % 4 == 0 and c[4] % 8 == 0
                ):
                    m.shift(r=r, s=s, t=t)
                    return
    raise AssertionError("2-adic normalization not found")


def _separable_quad(a: int, b: int, c: int, p: int) -> bool:
    if p == 2:
        return b % 2 == 1
    return (b * b - 4 * a * c) % p != 0


def _double_root_quad(a: int, b: int, c: int, p: int) -> int:
    if p == 2:
        return c * pow(a, -1, 2) % 2
    return (-b) * pow(2 * a, -1, p) % p


def _cubic_repeated_root(A: int, B: int, C: int, p: int):
    """(root, is_triple) for the mod-p cubic T^3+AT^2+BT+C with zero disc."""
    if p <= 3:
        for d in range(p):
            if (d**3 + A * d * d + B * d + C) % p == 0 and (3 * d * d + 2 * A * d + B) % p == 0:
                # triple root iff the cubic is (T-d)^3 coefficient-wise
                is_triple = (
                    (A + 3 * d) % p == 0
                    and (B - 3 * d * d) % p == 0
                    and (C + d**3) % p == 0
                )
                return d, is_triple
        raise AssertionError("no repeated root found")
    denom = (A * A - 3 * B) % p
    if denom == 0:
        d = (-A) * pow(3, -1, p) % p
        return d, True
    d = (9 * C - A * B) * pow(2 * denom, -1, p) % p
    return d, False


def _subloop_instar(m: _Model, p: int, vD: int) -> ReductionData:
    """The I_n* chain: alternate y- and x-quadratics until one separates."""
    a1, a2, a3, a4, a6 = m.a
    assert _vp(a2, p) == 1 and _vp(a3, p) >= 2 and _vp(a4, p) >= 3 and _vp(a6, p) >= 4
    a21 = m.a[1] // p
    u = 2
    while True:
        a1, a2, a3, a4, a6 = m.a
        # odd stage l = 2u-3: Y^2 + a_{3,u} Y - a_{6,2u}
        assert _vp(a3, p) >= u and _vp(a6, p) >= 2 * u
        qy = (1, a3 // p**u, (-a6) // p**(2 * u))
        if _separable_quad(*qy, p):
            n = 2 * u - 3
            roots = _quad_roots(*qy, p)
            return _finish_instar(m, p, vD, n, roots, ("y", u))
        y0 = _double_root_quad(*qy, p)
        m.shift(t=p**u * y0)
        a1, a2, a3, a4, a6 = m.a
        assert _vp(a3, p) >= u + 1 and _vp(a6, p) >= 2 * u + 1

        # even stage l = 2u-2: a_{2,1} X^2 + a_{4,u+1} X + a_{6,2u+1}
        assert _vp(a4, p) >= u + 1
        qx = (a21, a4 // p**(u + 1), a6 // p**(2 * u + 1))
        if _separable_quad(*qx, p):
            n = 2 * u - 2
            roots = _quad_roots(*qx, p)
            return _finish_instar(m, p, vD, n, roots, ("x", u))
        x0 = _double_root_quad(*qx, p)
        m.shift(r=p**u * x0)
        a1, a2, a3, a4, a6 = m.a
        assert _vp(a4, p) >= u + 2 and _vp(a6, p) >= 2 * u + 2
        u += 1


def _finish_instar(m, p, vD, n, roots, terminal) -> ReductionData:
    assert vD == 6 + n, f"I_{n}* expects v(Delta) = {6 + n}, got {vD}"
    cp = 4 if roots else 2
    phi = PhiGroup("klein", 4) if n % 2 == 0 else PhiGroup("cyclic", 4)
    near_root = (-(m.a[1] // p)) % p
    trace = {
        "type": "In*",
        "n": n,
        "roots": roots,
        "terminal": terminal,
        "near_root": near_root,
    }
    return ReductionData(
        p, Istar(n), vD, cp, phi, cp == 4, m.equation(),
        identity_transformation(1), trace,
    )


# ---------------------------------------------------------------------------
# the component map psi


def component_of_point(eq: GenusOneEquation, p: int, P: Point) -> PhiElement:
    """Image of a rational point in the component group at p."""
    if not point_on_curve(eq, P):
        raise ValueError("P not on E")
    red = tate(eq, p)
    return _component_on_reduction(red, P)


def _component_on_reduction(red: ReductionData, P: Point) -> PhiElement:
    phi = red.phi
    trace = red._trace
    if P is None or trace["type"] == "good":
        return phi.zero()
    p = red.p
    Pm = transform_point(red.to_minimal, P)
    if _reduces_smoothly(red.minimal_model, p, Pm):
        return phi.zero()

    t = trace["type"]
    x, y = Pm
    if t == "In":
        return _gon_component(red, Pm)
    if t in ("II", "II*"):
        raise AssertionError("component groups of II/II* are trivial")
    if t in ("III", "III*"):
        return phi.element(1)
    if t == "IV":
        return _matched_root(phi, y / p, trace["roots"], p, (1, 2))
    if t == "IV*":
        return _matched_root(phi, y / p**2, trace["roots"], p, (1, 2))
    if t == "I0*":
        labels = {
            3: [(1, 0), (0, 1), (1, 1)],
            1: [(1, 1)],
        }.get(len(trace["roots"]))
        if labels is None:
            raise ArithmeticError("point reduces to a component not defined over Q")
        return _matched_root(phi, x / p, trace["roots"], p, labels)
    if t == "In*":
        return _instar_component(red, Pm)
    raise AssertionError(f"unexpected trace {t}")


def _reduces_smoothly(model: GenusOneEquation, p: int, P: Point) -> bool:
    if P is None:
        return True
    x, y = P
    vx = padic_valuation(x, p)
    if vx < 0:
        return True
    return not (vx >= 1 and padic_valuation(y, p) >= 1)


def _matched_root(phi: PhiGroup, scaled: Fraction, roots: list[int], p: int, labels):
    if padic_valuation(scaled, p) < 0 or not roots:
        raise ArithmeticError("point reduces to a component not defined over Q")
    r = _pmod(scaled, p)
    if r not in roots:
        raise ArithmeticError("point reduces to a component not defined over Q")
    return phi.element(labels[roots.index(r)])


def _instar_component(red: ReductionData, P: Point) -> PhiElement:
    p, phi, trace = red.p, red.phi, red._trace
    n = trace["n"]
    x, y = P
    near = phi.element((1, 1)) if phi.kind == "klein" else phi.element(2)
    assert padic_valuation(x, p) >= 1
    x1 = _pmod(x / p, p)
    if x1 == trace["near_root"] and trace["near_root"] != 0:
        return near
    if x1 != 0:
        raise ArithmeticError("point reduces to a component not defined over Q")
    kind, u = trace["terminal"]
    roots = trace["roots"]
    if not roots:
        raise ArithmeticError("point reduces to a component not defined over Q")
    labels = [(1, 0), (0, 1)] if phi.kind == "klein" else [1, 3]
    coord = y if kind == "y" else x
    if padic_valuation(coord, p) < u:
        raise AssertionError("point stuck inside the multiplicity-2 chain")
    return _matched_root(phi, coord / p**u, roots, p, labels)


# --- the n-gon position of a point with singular reduction ----------------


def _gon_component(red: ReductionData, P: Point) -> PhiElement:
    p, phi, trace = red.p, red.phi, red._trace
    n = trace["n"]
    if not trace["split"]:
        if n % 2 == 0:
            return phi.element(n // 2)
        raise ArithmeticError("point reduces to the node of a non-split odd gon")
    if n == 1:
        raise AssertionError("I_1 total space is regular at the node")
    a, x, y = _gon_normalize(list(int(c) for c in red.minimal_model.coeffs), p, n, P)
    a1, a2, a3, a4, a6 = a
    A = padic_valuation(y, p)
    B = padic_valuation(y + a1 * x + a3, p)
    if A == B:
        assert n % 2 == 0 and A == n // 2, "gon middle-component profile violated"
        return phi.element(n // 2)
    i = B if A > B else n - A
    assert 1 <= i <= n - 1, f"gon index {i} out of range for I_{n}"
    return phi.element(i)


def _gon_normalize(a: list[int], p: int, n: int, P: Point):
    """Shift a split-node model so one branch tangent is ~0 and the node pair
    of the 2-division cubic is centered; the point rides along."""
    N = n + 6
    pK = p**N
    x, y = P
    for _ in range(8):
        changed = False
        a1, a2, a3, a4, a6 = a
        if _vp(a2, p) < N:
            r0s = _quad_roots(1, a1, -a2, p)
            assert len(r0s) == 2, "gon normalization requires split tangents"
            zero_roots = [r for r in r0s if r % p == 0]
            root = zero_roots[0] if zero_roots else min(r0s)
            s = hensel_root([-a2, a1, 1], root, p, N)
            a, x, y = _int_shift(a, x, y, s=s)
            changed = True
        a1, a2, a3, a4, a6 = a
        if _vp(a3, p) < N:
            if p == 2:
                assert a3 % 2 == 0
                t = (-(a3 // 2)) % pK
            else:
                t = (-a3) * pow(2, -1, pK) % pK
            a, x, y = _int_shift(a, x, y, t=t)
            changed = True
        r = _deep_center_shift(a, p, N)
        if r % pK != 0:
            a, x, y = _int_shift(a, x, y, r=r)
            changed = True
        if not changed:
            break
    else:
        raise AssertionError("gon normalization did not converge")
    return a, x, y


def _int_shift(a, x, y, r=0, s=0, t=0):
    g = transformation1(1, r, s, t)
    cur = apply_transformation(g, GenusOneEquation(1, tuple(a)))
    pt = transform_point(g, (x, y))
    return [int(c) for c in cur.coeffs], pt[0], pt[1]


def _deep_center_shift(a, p, N) -> int:
    """r with x -> x + r centering the near root pair of 4x^3+b2x^2+2b4x+b6."""
    a1, a2, a3, a4, a6 = a
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    pK = p**N
    if p != 2:
        e0 = (-b2) * pow(4, -1, p) % p
        e3 = hensel_root([b6, 2 * b4, b2, 4], e0, p, N)
        # synthetic division by (x - e3): quotient 4x^2 + c1 x + c0
        c1 = (b2 + 4 * e3) % pK
        beta = c1 * pow(4, -1, pK) % pK
        return (-beta) * pow(2, -1, pK) % pK
    # p = 2: fixed-point solve of (x^2+beta x+gamma)(4x+B) = D
    beta, gamma = 0, 0
    for _ in range(8 * N):
        Bc = (b2 - 4 * beta) % pK
        gamma_new = b6 * pow(Bc, -1, pK) % pK
        beta_new = (2 * b4 - 4 * gamma_new) * pow(Bc, -1, pK) % pK
        if beta_new == beta and gamma_new == gamma:
            break
        beta, gamma = beta_new, gamma_new
    assert beta % 2 == 0
    r = (-(beta // 2)) % pK
    return r


# ---------------------------------------------------------------------------
# minimality test


def is_minimal_at(eq: GenusOneEquation, p: int) -> bool:
    """nu_p(Delta) equals the minimal discriminant valuation of the Jacobian."""
    for c in eq.coeffs:
        if padic_valuation(c, p) < 0:
            raise ValueError(f"not integral at {p}")
    inv = invariants(eq)
    if inv.delta == 0:
        raise ValueError("singular equation")
    red = tate(jacobian(eq), p)
    return padic_valuation(inv.delta, p) == red.v_delta_min
