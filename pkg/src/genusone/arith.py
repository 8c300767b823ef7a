"""Exact integer/rational arithmetic: p-adic valuations, factoring, primality.

Python ints are already arbitrary precision, so the heavy lifting here is the
number-theoretic layer: exact valuations with a real infinity value, trial
division backed by Pollard rho, and the modular helpers (Legendre symbol,
Tonelli-Shanks square roots, Hensel lifting) used by the reduction code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

TRIAL_DIVISION_BOUND = 10**6


class _Infinity:
    """The valuation of zero.  Compares above every integer; not a number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinity"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("genusone.Infinity")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("cannot negate Infinity")


INFINITY = _Infinity()


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for any integer of desk scale."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Exact below 3.3e24; overwhelming evidence beyond, which is far past the
    # discriminants this package is meant for.
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(q: Rational, p: int):
    """nu_p(q) for a rational q; returns INFINITY exactly when q == 0."""
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of odd composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        c = seed
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = _gcd(abs(x - y), n)
        if d != n:
            return d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def factor(n: int, trial_bound: int = TRIAL_DIVISION_BOUND) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; units give {}.

    Trial division up to `trial_bound`, then Pollard rho on whatever
    composite cofactor is left.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d <= trial_bound:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        stack.append(f)
        stack.append(m // f)
    return dict(sorted(out.items()))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p, in {-1, 0, 1}."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def sqrt_mod(a: int, p: int):
    """A square root of a mod prime p, or None if a is a non-residue."""
    a %= p
    if p == 2 or a == 0:
        return a
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def hensel_root(coeffs: list[int], r0: int, p: int, k: int) -> int:
    """Lift a simple root r0 mod p of the integer polynomial to mod p^k.

    coeffs are [c0, c1, ...] for c0 + c1*x + ...; the derivative at r0 must
    be a unit mod p.
    """

    def ev(cs, x, mod):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % mod
        return acc

    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    if ev(deriv, r0, p) % p == 0:
        raise ValueError("root is not simple mod p")
    r = r0 % p
    mod = p
    while mod < p**k:
        mod = min(mod * mod, p**k)
        d = ev(deriv, r, mod)
        r = (r - ev(coeffs, r, mod) * pow(d, -1, mod)) % mod
    return r


def crt_pair(a1: int, m1: int, a2: int, m2: int) -> int:
    """x with x = a1 (mod m1), x = a2 (mod m2); moduli must be coprime."""
    g = _gcd(m1, m2)
    if g != 1:
        raise ValueError("moduli not coprime")
    return (a1 + m1 * ((a2 - a1) * pow(m1, -1, m2) % m2)) % (m1 * m2)


def crt(residues: list[int], moduli: list[int]) -> int:
    """Chinese remainder lift over pairwise coprime moduli."""
    x, m = 0, 1
    for a, q in zip(residues, moduli):
        x = crt_pair(x, m, a, q)
        m *= q
    return x
