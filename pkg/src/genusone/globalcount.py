"""Global model counts over Q and the lattice utilities behind them.

The global count is the product of local counts over the primes whose square
divides the minimal discriminant.  The lattice half holds the p-local Smith
decomposition A = V*D*U (U integrally unimodular, D a descending p-power
diagonal ending in 1) and a strong-approximation lift into SL_n(Z) matching
prescribed unimodular matrices modulo prime powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from genusone.arith import crt, factor, is_prime, padic_valuation
from genusone.counting import CountBreakdown, local_count
from genusone.equations import (
    GenusOneEquation,
    Transformation,
    apply_transformation,
    det_transformation,
    invariants,
    is_integral,
    jacobian,
)
from genusone.localred import ReductionData, tate


@dataclass
class GlobalCount:
    total: int
    factors: list[tuple[int, ReductionData, CountBreakdown]]

    def to_json(self) -> dict:
        return {
            "N": self.total,
            "factors": [
                {"p": p, "kodaira": str(red.kodaira), "Np": br.total}
                for p, red, br in self.factors
            ],
        }


def bad_primes(eq: GenusOneEquation) -> list[int]:
    """Primes p with nu_p(minimal discriminant) >= 2."""
    E = eq if eq.degree == 1 else jacobian(eq)
    delta = invariants(E).delta
    if delta == 0:
        raise ValueError("singular equation")
    candidates = sorted(set(factor(delta.numerator)) | set(factor(delta.denominator)))
    return [p for p in candidates if tate(E, p).v_delta_min >= 2]


def global_count(eq: GenusOneEquation, n: int, psi_map: dict | None = None) -> GlobalCount:
    """Product of local degree-n model counts over the bad primes.

    psi_map optionally supplies, per prime, the target component-group class
    (PhiElement) or a rational point; missing primes default to the identity.
    """
    psi_map = psi_map or {}
    factors = []
    total = 1
    for p in bad_primes(eq):
        try:
            br = local_count(eq, p, n, psi_map.get(p))
        except ValueError as exc:
            raise ValueError(f"at prime {p}: {exc}") from exc
        E = eq if eq.degree == 1 else jacobian(eq)
        factors.append((p, tate(E, p), br))
        total *= br.total
    return GlobalCount(total, factors)


# ---------------------------------------------------------------------------
# integer matrices


def int_mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def int_mat_det(M) -> int:
    n = len(M)
    if n == 1:
        return M[0][0]
    det = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * int_mat_det(minor)
        det += term if j % 2 == 0 else -term
    return det


def _adjugate(M):
    n = len(M)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(M) if k != i]
            c = int_mat_det(minor)
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return adj


def _unimodular_inverse(M):
    d = int_mat_det(M)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    adj = _adjugate(M)
    return [[x * d for x in row] for row in adj]


def smith_normal_form(A):
    """(L, S, R) with S = L*A*R diagonal, d_i | d_{i+1}, L and R unimodular."""
    n, m = len(A), len(A[0])
    S = [row[:] for row in A]
    L = [[int(i == j) for j in range(n)] for i in range(n)]
    R = [[int(i == j) for j in range(m)] for i in range(m)]

    def row_op(i, j, q):  # row_i -= q*row_j
        for k in range(m):
            S[i][k] -= q * S[j][k]
        for k in range(n):
            L[i][k] -= q * L[j][k]

    def col_op(i, j, q):  # col_i -= q*col_j
        for k in range(n):
            S[k][i] -= q * S[k][j]
        for k in range(m):
            R[k][i] -= q * R[k][j]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for k in range(n):
            S[k][i], S[k][j] = S[k][j], S[k][i]
        for k in range(m):
            R[k][i], R[k][j] = R[k][j], R[k][i]

    t = 0
    while t < min(n, m):
        # move a nonzero pivot of minimal absolute value to (t, t)
        pivot = None
        for i in range(t, n):
            for j in range(t, m):
                if S[i][j] != 0 and (pivot is None or abs(S[i][j]) < abs(S[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = False
        for i in range(t + 1, n):
            if S[i][t] != 0:
                q = S[i][t] // S[t][t]
                row_op(i, t, q)
                dirty = dirty or S[i][t] != 0
        for j in range(t + 1, m):
            if S[t][j] != 0:
                q = S[t][j] // S[t][t]
                col_op(j, t, q)
                dirty = dirty or S[t][j] != 0
        if dirty or any(S[i][t] for i in range(t + 1, n)) or any(
            S[t][j] for j in range(t + 1, m)
        ):
            continue
        # divisibility: fold any entry not divisible by the pivot back in
        bad = None
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if S[i][j] % S[t][t] != 0:
                    bad = i
                    break
            if bad:
                break
        if bad is not None:
            row_op(t, bad, -1)
            continue
        if S[t][t] < 0:
            row_op(t, t, 2)  # negate the row: row_t -= 2*row_t
        t += 1
    return L, S, R


def snf_local(A, p: int):
    """(V, D, U) with A = V*D*U: U in GL_n(Z), D = diag(p^r1 >= ... >= 1),
    and V p-integral with unit determinant at p."""
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    n = len(A)
    A = [[int(x) for x in row] for row in A]
    if int_mat_det(A) == 0:
        raise ValueError("zero determinant")
    g = 0
    for row in A:
        for x in row:
            g = _gcd(g, x)
    if g != 1:
        raise ValueError("matrix entries are not coprime")
    L, S, R = smith_normal_form(A)
    # A = L^-1 S R^-1; split S into its p-part and the rest
    Linv = _unimodular_inverse(L)
    Rinv = _unimodular_inverse(R)
    powers = []
    units = []
    for i in range(n):
        d = S[i][i]
        v = 0
        while d % p == 0:
            d //= p
            v += 1
        powers.append(v)
        units.append(d)
    # reversal puts exponents in weakly decreasing order with last = 0
    perm = list(range(n - 1, -1, -1))
    P = [[int(perm[i] == j) for j in range(n)] for i in range(n)]
    E = [[units[i] if i == j else 0 for j in range(n)] for i in range(n)]
    D = [[p ** powers[perm[i]] if i == j else 0 for j in range(n)] for i in range(n)]
    V = int_mat_mul(int_mat_mul(Linv, E), _transpose(P))
    U = int_mat_mul(P, Rinv)
    assert powers[perm[-1]] == 0 and all(
        powers[perm[i]] >= powers[perm[i + 1]] for i in range(n - 1)
    )
    return V, D, U


def _transpose(M):
    return [list(row) for row in zip(*M)]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# strong approximation into SL_n(Z)


def crt_sl_lift(targets: list[tuple[list[list[int]], int, int]]):
    """U in SL_n(Z) with U = U_i (mod p_i^{m_i}) for every target."""
    if not targets:
        raise ValueError("need at least one target")
    n = len(targets[0][0])
    moduli = []
    for U_i, p_i, m_i in targets:
        if len(U_i) != n:
            raise ValueError("targets of mixed sizes")
        if int_mat_det(U_i) != 1:
            raise ValueError("non-unimodular target")
        if not is_prime(p_i) or m_i < 1:
            raise ValueError("targets need prime moduli with positive exponents")
        moduli.append(p_i**m_i)
    if len(set(p for _, p, _ in targets)) != len(targets):
        raise ValueError("target primes must be distinct")
    M = 1
    for q in moduli:
        M *= q
    Ubar = [
        [crt([U_i[r][c] for U_i, _, _ in targets], moduli) for c in range(n)]
        for r in range(n)
    ]
    U = _sl_lift(Ubar, M)
    assert int_mat_det(U) == 1
    for (U_i, p_i, m_i) in targets:
        q = p_i**m_i
        assert all((U[r][c] - U_i[r][c]) % q == 0 for r in range(n) for c in range(n))
    return U


def _sl_lift(Ubar, M: int):
    """Lift a matrix with det = 1 (mod M) to an exact SL_n(Z) matrix."""
    n = len(Ubar)
    if n == 1:
        return [[1]]
    v = _primitive_lift([x % M for x in Ubar[0]], M)
    A = _complete_unimodular(v)
    Ainv = _unimodular_inverse(A)
    B = int_mat_mul(Ubar, Ainv)
    assert all((B[0][j] - (1 if j == 0 else 0)) % M == 0 for j in range(n))
    Dbar = [[B[i][j] % M for j in range(1, n)] for i in range(1, n)]
    D = _sl_lift(Dbar, M)
    C = [[0] * n for _ in range(n)]
    C[0][0] = 1
    for i in range(1, n):
        C[i][0] = B[i][0] % M
        for j in range(1, n):
            C[i][j] = D[i - 1][j - 1]
    return int_mat_mul(C, A)


def _primitive_lift(v: list[int], M: int) -> list[int]:
    """An integer vector = v (mod M) with gcd of entries 1."""
    g = 0
    for x in v:
        g = _gcd(g, x)
    if _gcd(g, M) != 1:
        raise ValueError("row is not unimodular mod M")
    w = v[:]
    if all(x == 0 for x in w[1:]):
        w[1] += M
    rest = 0
    for x in w[1:]:
        rest = _gcd(rest, x)
    # choose k so that w0 + kM avoids every prime of rest coprime to M;
    # primes shared with M cannot divide w0 (the row is invertible mod M)
    residues, primes = [], []
    for q in factor(rest):
        if M % q != 0:
            residues.append((1 - v[0] * pow(M, -1, q)) % q)
            primes.append(q)
    k = crt(residues, primes) if primes else 0
    w[0] = v[0] + k * M
    g = w[0]
    for x in w[1:]:
        g = _gcd(g, x)
    assert abs(g) == 1
    return w


def _complete_unimodular(v: list[int]):
    """A matrix in SL_n(Z) whose first row is the primitive vector v."""
    n = len(v)
    # column operations (tracked in W with det 1) reduce v to e_1
    w = v[:]
    W = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_sub(i, j, q):  # col_i -= q * col_j
        w[i] -= q * w[j]
        for r in range(n):
            W[r][i] -= q * W[r][j]

    def col_swapneg(i, j):  # (col_i, col_j) <- (col_j, -col_i), det preserved
        w[i], w[j] = w[j], -w[i]
        for r in range(n):
            W[r][i], W[r][j] = W[r][j], -W[r][i]

    while True:
        nz = [i for i in range(1, n) if w[i] != 0]
        if not nz:
            break
        if w[0] == 0:
            col_swapneg(0, nz[0])
            continue
        j = min(nz, key=lambda i: abs(w[i]))
        if abs(w[j]) < abs(w[0]):
            col_swapneg(0, j)
            continue
        col_sub(j, 0, w[j] // w[0])
    if w[0] == -1:
        col_swapneg(0, 1)
        col_swapneg(0, 1)  # two quarter turns negate both columns
    assert w[0] == 1 and all(x == 0 for x in w[1:])
    # v * W = e1, so the first row of W^-1 is v
    return _unimodular_inverse(W)


# ---------------------------------------------------------------------------
# explicit model lists


def verify_model_list(eq: GenusOneEquation, gs: list[Transformation]) -> dict:
    """Check a list of transformations against integrality and minimality.

    For each g: is apply(g, eq) integral, what is det(g), and does
    nu_p(Delta) stay put at every bad prime.  The count of models is not a
    check of pairwise inequivalence; it comes from the local-global product.
    """
    base = invariants(eq)
    primes = bad_primes(eq)
    base_vals = {p: padic_valuation(base.delta, p) for p in primes}
    entries = []
    all_ok = True
    for g in gs:
        try:
            image = apply_transformation(g, eq)
            iv = invariants(image)
            vals = {p: padic_valuation(iv.delta, p) for p in primes}
            ok = is_integral(image) and vals == base_vals
            entries.append(
                {
                    "det": det_transformation(g),
                    "integral": is_integral(image),
                    "vDelta": vals,
                    "ok": ok,
                }
            )
            all_ok = all_ok and ok
        except (ValueError, ZeroDivisionError) as exc:
            entries.append({"error": str(exc), "ok": False})
            all_ok = False
    return {"badPrimes": primes, "baseVDelta": base_vals, "entries": entries, "ok": all_ok}
