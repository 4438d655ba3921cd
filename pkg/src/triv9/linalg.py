"""Exact and modular linear algebra utilities.

Two layers:

* exact: Fraction / Cyc matrices as nested lists; Gaussian elimination,
  kernels, determinants, characteristic polynomials (small sizes only);
* modular: word-size prime arithmetic in numpy int64 for the 248x248 work
  (Krylov minimal polynomials, Hessenberg characteristic polynomials,
  kernels), combined with CRT + rational reconstruction.

The large-matrix entry points follow one pattern throughout: compute a
candidate modulo primes, reconstruct rationals, then certify the result
exactly (verified kernel vectors + mod-p rank bound, or an explicit
coefficient-size bound that makes a CRT answer deterministic).
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .scalar import Cyc

Mat = List[List[Fraction]]

# Primes just below 2**26: safe for int64 accumulation of 248-term dot
# products (248 * p^2 < 2**63).
_PRIME_FLOOR = 1 << 26


def _gen_primes() -> List[int]:
    ps = []
    n = _PRIME_FLOOR - 1
    while len(ps) < 220:
        ok = True
        for q in range(3, math.isqrt(n) + 1, 2):
            if n % q == 0:
                ok = False
                break
        if ok and n % 2:
            ps.append(n)
        n -= 2
    return ps


PRIMES: List[int] = _gen_primes()
PRIMES_1MOD12: List[int] = [p for p in PRIMES if p % 12 == 1]


# ---------------------------------------------------------------------------
# exact Fraction matrices (small sizes)
# ---------------------------------------------------------------------------

def frac_mat(rows: Sequence[Sequence]) -> Mat:
    return [[Fraction(x) for x in row] for row in rows]


def mat_mul(A: Mat, B: Mat) -> Mat:
    n, k, m = len(A), len(B), len(B[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    if Bt[j]:
                        Oi[j] += a * Bt[j]
    return out


def mat_vec(A: Mat, v: Sequence[Fraction]) -> List[Fraction]:
    return [sum((a * x for a, x in zip(row, v) if a and x), Fraction(0)) for row in A]


def identity_frac(n: int) -> Mat:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def rref(A: Mat) -> Tuple[Mat, List[int]]:
    """Reduced row-echelon form; returns (R, pivot column list)."""
    R = [row[:] for row in A]
    n = len(R)
    m = len(R[0]) if n else 0
    pivots = []
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if R[i][c]:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(n):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return R, pivots


def kernel_frac(A: Mat) -> List[List[Fraction]]:
    """Exact kernel basis (column-vector kernel) of a small matrix."""
    if not A:
        return []
    m = len(A[0])
    R, pivots = rref(A)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -R[r][f]
        basis.append(v)
    return basis


def solve_frac(A: Mat, b: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """One exact solution of A x = b, or None."""
    n = len(A)
    m = len(A[0]) if n else 0
    aug = [list(A[i]) + [Fraction(b[i])] for i in range(n)]
    R, pivots = rref(aug)
    for row in R:
        if row[-1] and all(x == 0 for x in row[:-1]):
            return None
    x = [Fraction(0)] * m
    for r, c in enumerate(pivots):
        if c == m:
            return None
        x[c] = R[r][-1]
    return x


def det_frac(A: Mat) -> Fraction:
    n = len(A)
    M = [row[:] for row in A]
    det = Fraction(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det


def inverse_frac(A: Mat) -> Mat:
    n = len(A)
    aug = [list(A[i]) + identity_frac(n)[i] for i in range(n)]
    R, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix not invertible")
    return [row[n:] for row in R]


def charpoly_frac(A: Mat) -> List[Fraction]:
    """char poly coefficients [c0..cn] with p(t)=sum c_k t^k, monic, exact.

    Faddeev-LeVerrier; fine for n <= ~12.
    """
    n = len(A)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = identity_frac(n)
    c = Fraction(1)
    for k in range(1, n + 1):
        M = mat_mul(A, M)
        tr = sum(M[i][i] for i in range(n))
        c = -tr / k
        coeffs[n - k] = c
        for i in range(n):
            M[i][i] += c
    return coeffs


# generic field versions (work over Cyc too) -------------------------------

def rref_field(A, zero, one):
    R = [row[:] for row in A]
    n = len(R)
    m = len(R[0]) if n else 0
    pivots = []
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if R[i][c] != zero:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = one / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(n):
            if i != r and R[i][c] != zero:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return R, pivots


def kernel_field(A, zero, one):
    if not A:
        return []
    m = len(A[0])
    R, pivots = rref_field(A, zero, one)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * m
        v[f] = one
        for r, c in enumerate(pivots):
            v[c] = zero - R[r][f]
        basis.append(v)
    return basis


def kernel_cyc(A: List[List[Cyc]]) -> List[List[Cyc]]:
    from .scalar import ZERO, ONE

    return kernel_field(A, ZERO, ONE)


# ---------------------------------------------------------------------------
# integer polynomial / number helpers
# ---------------------------------------------------------------------------

def crt_pair(a1: int, m1: int, a2: int, m2: int) -> Tuple[int, int]:
    g, p, _ = _xgcd(m1, m2)
    assert g == 1
    m = m1 * m2
    x = (a1 + (a2 - a1) * p % m2 * m1) % m
    return x, m


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def rational_reconstruct(a: int, m: int) -> Optional[Fraction]:
    """Find p/q = a mod m with |p|, q <= sqrt(m/2); None if impossible."""
    a %= m
    bound = math.isqrt(m // 2)
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if abs(t1) > bound or t1 == 0:
        return None
    if math.gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


# dense polynomials over Fraction as coefficient lists [c0, c1, ...] --------

def poly_trim(p: List[Fraction]) -> List[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return poly_trim(out)


def poly_divmod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) < len(b):
        return [Fraction(0)], poly_trim(a)
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lb
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return poly_trim(q), poly_trim(a)


def poly_gcd(a, b):
    a, b = poly_trim(list(a)), poly_trim(list(b))
    while len(b) > 1 or b[0] != 0:
        _, r = poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [x / lead for x in a]


def poly_deriv(a):
    return poly_trim([a[i] * i for i in range(1, len(a))]) if len(a) > 1 else [Fraction(0)]


def poly_squarefree_part(a):
    g = poly_gcd(a, poly_deriv(a))
    q, r = poly_divmod(a, g)
    assert poly_trim(r) == [Fraction(0)]
    lead = q[-1]
    return [x / lead for x in q]


def poly_eval_frac(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_is_squarefree(a) -> bool:
    g = poly_gcd(a, poly_deriv(a))
    return len(g) == 1


# mod-p polynomial helpers (lists of ints) ----------------------------------

def polymod_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def polymod_divmod(a, b, p):
    a = [x % p for x in a]
    b = polymod_trim([x % p for x in b])
    db = len(b) - 1
    inv_lb = pow(b[-1], -1, p)
    if len(a) < len(b):
        return [0], polymod_trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lb % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return polymod_trim(q), polymod_trim(a)


def polymod_gcd(a, b, p):
    a = polymod_trim([x % p for x in a])
    b = polymod_trim([x % p for x in b])
    while b != [0]:
        _, r = polymod_divmod(a, b, p)
        a, b = b, r
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def polymod_mulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    _, r = polymod_divmod(out, m, p)
    return r


def polymod_invmod(a, m, p):
    """Inverse of a modulo m in F_p[t] (extended Euclid)."""
    r0, r1 = polymod_trim([x % p for x in m]), polymod_trim([x % p for x in a])
    t0, t1 = [0], [1]
    while r1 != [0]:
        q, r = polymod_divmod(r0, r1, p)
        r0, r1 = r1, r
        qt = [0] * (len(q) + len(t1) - 1)
        for i, x in enumerate(q):
            if x:
                for j, y in enumerate(t1):
                    if y:
                        qt[i + j] = (qt[i + j] + x * y) % p
        nt = [0] * max(len(t0), len(qt))
        for i in range(len(nt)):
            v = (t0[i] if i < len(t0) else 0) - (qt[i] if i < len(qt) else 0)
            nt[i] = v % p
        t0, t1 = t1, polymod_trim(nt)
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible mod m")
    inv = pow(r0[0], -1, p)
    return polymod_trim([x * inv % p for x in t0])


def polymod_pow(base, e: int, m, p: int):
    """base^e mod (m, p) by square and multiply."""
    out = [1]
    b = polymod_trim([x % p for x in base])
    while e:
        if e & 1:
            out = polymod_mulmod(out, b, m, p)
        e >>= 1
        if e:
            b = polymod_mulmod(b, b, m, p)
    return out


def poly_roots_modp(f: List[int], p: int, rng=None) -> List[int]:
    """All roots of f in F_p (with multiplicity stripped), via gcd with
    x^p - x and Cantor-Zassenhaus splitting of the linear-root part."""
    import random as _random

    rng = rng or _random.Random(5)
    f = polymod_trim([x % p for x in f])
    if len(f) == 1:
        return []
    # keep only roots in F_p: g = gcd(f, x^p - x)
    xp = polymod_pow([0, 1], p, f, p)
    xp_minus_x = polymod_trim([(xp[i] if i < len(xp) else 0) - (1 if i == 1 else 0)
                               for i in range(max(len(xp), 2))])
    g = polymod_gcd(f, [c % p for c in xp_minus_x], p)
    roots: List[int] = []

    def split(poly):
        poly = polymod_trim(poly)
        d = len(poly) - 1
        if d == 0:
            return
        if d == 1:
            # monic-ize: root = -c0 / c1
            inv = pow(poly[1], -1, p)
            roots.append((-poly[0] * inv) % p)
            return
        while True:
            a = rng.randrange(p)
            # h = (x + a)^((p-1)/2) - 1 mod poly
            h = polymod_pow([a, 1], (p - 1) // 2, poly, p)
            h = polymod_trim([(h[i] if i < len(h) else 0) - (1 if i == 0 else 0)
                              for i in range(max(len(h), 1))])
            h = [c % p for c in h]
            g1 = polymod_gcd(poly, h, p)
            if 0 < len(g1) - 1 < d:
                g2, r = polymod_divmod(poly, g1, p)
                assert r == [0]
                split(g1)
                split(g2)
                return

    split(g)
    return sorted(roots)


# ---------------------------------------------------------------------------
# sparse integer matrices and modular reductions
# ---------------------------------------------------------------------------

class SparseIntMat:
    """Sparse n x n integer matrix with a global denominator.

    Represents (1/den) * sum values[k] E_{rows[k], cols[k]}.
    """

    def __init__(self, n: int, rows, cols, vals, den: int = 1):
        self.n = n
        self.rows = np.asarray(rows, dtype=np.int64)
        self.cols = np.asarray(cols, dtype=np.int64)
        self.vals = list(vals)  # python ints, exact
        self.den = den

    def mod(self, p: int) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        dinv = pow(self.den % p, -1, p)
        vals = np.array([v % p for v in self.vals], dtype=np.int64)
        np.add.at(A, (self.rows, self.cols), vals)
        A %= p
        return (A * dinv) % p

    def to_frac(self) -> Mat:
        out = [[Fraction(0)] * self.n for _ in range(self.n)]
        d = self.den
        for r, c, v in zip(self.rows, self.cols, self.vals):
            out[int(r)][int(c)] += Fraction(v, d)
        return out

    def frac_matvec(self, v: List[Fraction]) -> List[Fraction]:
        out = [Fraction(0)] * self.n
        for r, c, val in zip(self.rows, self.cols, self.vals):
            x = v[int(c)]
            if x:
                out[int(r)] += val * x
        d = self.den
        return [x / d for x in out] if d != 1 else out


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    return (A @ B) % p


def matpow_mod(A: np.ndarray, k: int, p: int) -> np.ndarray:
    n = A.shape[0]
    R = np.eye(n, dtype=np.int64)
    base = A % p
    while k:
        if k & 1:
            R = (R @ base) % p
        base = (base @ base) % p
        k >>= 1
    return R


def rank_mod(A: np.ndarray, p: int) -> int:
    M = A % p
    M = M.copy()
    n, m = M.shape
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if M[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        col = M[r + 1 :, c].copy()
        nz = np.nonzero(col)[0]
        if len(nz):
            M[r + 1 :][nz] = (M[r + 1 :][nz] - np.outer(col[nz], M[r])) % p
        r += 1
        if r == n:
            break
    return r


def rref_mod(A: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    M = (A % p).copy()
    n, m = M.shape
    pivots: List[int] = []
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if M[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        nz = np.nonzero(col)[0]
        if len(nz):
            M[nz] = (M[nz] - np.outer(col[nz], M[r])) % p
        pivots.append(c)
        r += 1
        if r == n:
            break
    return M, pivots


def kernel_mod(A: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Kernel basis mod p in RREF-normalized form; returns (basis, free cols).

    Basis vectors are columns normalized so that basis[free_col] = 1.
    """
    R, pivots = rref_mod(A, p)
    m = A.shape[1]
    free = [c for c in range(m) if c not in pivots]
    vecs = np.zeros((len(free), m), dtype=np.int64)
    for k, f in enumerate(free):
        vecs[k, f] = 1
        for r, c in enumerate(pivots):
            vecs[k, c] = (-int(R[r, f])) % p
    return vecs, free


def minpoly_mod(A: np.ndarray, p: int, rng: random.Random, tries: int = 3) -> List[int]:
    """Minimal polynomial of A mod p (monic, coeff list low->high).

    lcm of the minimal polynomials of (A, v) for a few random vectors v.
    Monte Carlo mod p; callers cross-check across primes / verify outputs.
    """
    n = A.shape[0]
    m = [1]
    for _ in range(tries):
        v = np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
        mv = _krylov_minpoly(A, v, p)
        # m = lcm(m, mv)
        g = polymod_gcd(m, mv, p)
        q, _ = polymod_divmod(mv, g, p)
        out = [0] * (len(m) + len(q) - 1)
        for i, x in enumerate(m):
            if x:
                for j, y in enumerate(q):
                    if y:
                        out[i + j] = (out[i + j] + x * y) % p
        m = polymod_trim(out)
        if len(m) - 1 == n:
            break
    return m


def _krylov_minpoly(A: np.ndarray, v: np.ndarray, p: int) -> List[int]:
    """Minimal polynomial of v under A, mod p."""
    n = A.shape[0]
    # rows of echelon: (vector, coeffs of combination in terms of A^k v)
    pivrows: List[Tuple[np.ndarray, np.ndarray, int]] = []  # (vec, comb, pivcol)
    cur = v % p
    comb = np.zeros(n + 1, dtype=np.int64)
    k = 0
    while True:
        vec = cur.copy()
        cmb = np.zeros(n + 1, dtype=np.int64)
        cmb[k] = 1
        for pv, pc, pcol in pivrows:
            f = vec[pcol]
            if f:
                vec = (vec - f * pv) % p
                cmb = (cmb - f * pc) % p
        nz = np.nonzero(vec)[0]
        if len(nz) == 0:
            coeffs = [int(x) for x in cmb[: k + 1]]
            inv = pow(coeffs[k], -1, p)
            return polymod_trim([c * inv % p for c in coeffs])
        pcol = int(nz[0])
        inv = pow(int(vec[pcol]), -1, p)
        vec = (vec * inv) % p
        cmb = (cmb * inv) % p
        pivrows.append((vec, cmb, pcol))
        cur = (A @ cur) % p
        k += 1
        if k > n:
            raise RuntimeError("Krylov loop overran dimension")


def charpoly_mod(A: np.ndarray, p: int) -> List[int]:
    """Characteristic polynomial mod p via Hessenberg reduction. Monic."""
    n = A.shape[0]
    H = (A % p).copy()
    for c in range(n - 2):
        piv = None
        for r in range(c + 1, n):
            if H[r, c]:
                piv = r
                break
        if piv is None:
            continue
        if piv != c + 1:
            H[[c + 1, piv]] = H[[piv, c + 1]]
            H[:, [c + 1, piv]] = H[:, [piv, c + 1]]
        inv = pow(int(H[c + 1, c]), -1, p)
        for r in range(c + 2, n):
            f = int(H[r, c]) * inv % p
            if f:
                H[r] = (H[r] - f * H[c + 1]) % p
                H[:, c + 1] = (H[:, c + 1] + f * H[:, r]) % p
    # p_k(t) = charpoly of leading k x k block
    polys = [[1]]
    for k in range(1, n + 1):
        # p_k = (t - H[k-1,k-1]) p_{k-1} - sum_{j<k-1} H[j,k-1] (prod beta) p_j
        prev = polys[k - 1]
        term = [0] + list(prev)
        a = int(H[k - 1, k - 1]) % p
        term = [(term[i] - (a * prev[i] if i < len(prev) else 0)) % p for i in range(len(term))]
        beta = 1
        for j in range(k - 2, -1, -1):
            beta = beta * int(H[j + 1, j]) % p
            c = int(H[j, k - 1]) * beta % p
            if c:
                pj = polys[j]
                for i in range(len(pj)):
                    term[i] = (term[i] - c * pj[i]) % p
        polys.append(polymod_trim(term))
    return polys[n]


# ---------------------------------------------------------------------------
# certified reconstruction helpers
# ---------------------------------------------------------------------------

def reconstruct_frac_vector(residues: List[np.ndarray], primes: List[int]) -> Optional[List[Fraction]]:
    """CRT + rational reconstruction of a vector from residues mod primes."""
    n = len(residues[0])
    out = []
    for i in range(n):
        a, m = int(residues[0][i]), primes[0]
        for res, p in zip(residues[1:], primes[1:]):
            a, m = crt_pair(a, m, int(res[i]), p)
        q = rational_reconstruct(a, m)
        if q is None:
            return None
        out.append(q)
    return out


def kernel_exact(cols_fn: Callable[[int], np.ndarray], ncols: int,
                 verify_fn: Callable[[List[Fraction]], bool],
                 max_primes: int = 12, prime_list: Optional[List[int]] = None
                 ) -> List[List[Fraction]]:
    """Certified exact kernel of a matrix given by its mod-p reduction.

    cols_fn(p) returns the full matrix mod p (2-d int64 array).  verify_fn
    checks A v = 0 exactly over Q.  The mod-p rank upper-bounds the kernel
    dimension; exactly that many verified vectors certify the kernel.
    """
    primes = prime_list or PRIMES
    used: List[int] = []
    residue_sets: List[np.ndarray] = []
    free_ref: Optional[List[int]] = None
    for p in primes:
        Ap = cols_fn(p)
        vecs, free = kernel_mod(Ap, p)
        if free_ref is None or len(free) < len(free_ref):
            free_ref = free
            used = [p]
            residue_sets = [vecs]
        elif free == free_ref:
            used.append(p)
            residue_sets.append(vecs)
        if len(used) >= 1:
            # try reconstruction each round once >= 1 primes agree
            basis = []
            ok = True
            for k in range(len(free_ref)):
                res = [rs[k] for rs in residue_sets]
                v = reconstruct_frac_vector(res, used)
                if v is None or not verify_fn(v):
                    ok = False
                    break
                basis.append(v)
            if ok:
                return basis
        if len(used) >= max_primes:
            break
    raise ArithmeticError("kernel reconstruction failed; need more primes")


def signature_symmetric(A: Mat) -> Tuple[int, int]:
    """Exact signature (n_pos, n_neg) of a symmetric rational matrix.

    Eigenvalues of a symmetric matrix are real, so Descartes' rule on the
    characteristic polynomial is exact: sign changes of p(t) count positive
    roots, of p(-t) negative roots.
    """
    n = len(A)
    cp = charpoly_via_hessenberg_exactsmall(A) if n > 12 else charpoly_frac(A)
    # strip zero roots
    k = 0
    while cp[k] == 0:
        k += 1
    cp = cp[k:]
    signs = [c for c in cp if c != 0]
    pos = sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))
    neg_poly = [(-1) ** i * cp[i] for i in range(len(cp))]
    signs = [c for c in neg_poly if c != 0]
    neg = sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))
    return pos, neg


def charpoly_via_hessenberg_exactsmall(A: Mat) -> List[Fraction]:
    """Exact char poly for moderate n via CRT over primes with a bound."""
    n = len(A)
    den = 1
    for row in A:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    Aint = [[int(x * den) for x in row] for row in A]
    B = max((abs(v) for row in Aint for v in row), default=0) or 1
    # Hadamard-style bound on coefficients of char poly of Aint
    bound = 2 ** n * (math.isqrt(n) + 1) ** n * B ** n
    target = 2 * bound + 1
    residues = []
    primes_used = []
    mprod = 1
    arr = np.array([[v % PRIMES[0] for v in row] for row in Aint], dtype=np.int64)
    i = 0
    while mprod < target:
        p = PRIMES[i]
        i += 1
        arr = np.array([[v % p for v in row] for row in Aint], dtype=np.int64)
        residues.append(charpoly_mod(arr, p))
        primes_used.append(p)
        mprod *= p
    # CRT coefficients (pad to same length n+1)
    out = []
    for k in range(n + 1):
        a, m = 0, 1
        for res, p in zip(residues, primes_used):
            c = res[k] if k < len(res) else 0
            a, m = crt_pair(a, m, c, p) if m > 1 else (c, p)
        if a > m // 2:
            a -= m
        out.append(Fraction(a))
    # undo scaling: charpoly of A = den^-n * charpoly_{Aint}(den * t)
    return [out[k] * Fraction(den) ** k / Fraction(den) ** n for k in range(n + 1)]


def sturm_real_roots(p: List[Fraction], a: Optional[Fraction] = None,
                     b: Optional[Fraction] = None) -> int:
    """Number of distinct real roots of p in (a, b] (whole line by default)."""
    p = poly_trim([Fraction(x) for x in p])
    if len(p) == 1:
        return 0
    chain = [p, poly_deriv(p)]
    while True:
        _, r = poly_divmod(chain[-2], chain[-1])
        r = poly_trim(r)
        if r == [Fraction(0)]:
            break
        chain.append([-x for x in r])

    def sign_at(poly, x, at_inf):
        if at_inf is not None:
            lead = poly[-1]
            if at_inf > 0:
                return 1 if lead > 0 else -1 if lead < 0 else 0
            s = lead * (-1) ** (len(poly) - 1)
            return 1 if s > 0 else -1 if s < 0 else 0
        v = poly_eval_frac(poly, x)
        return 1 if v > 0 else -1 if v < 0 else 0

    def variations(x, at_inf=None):
        signs = [sign_at(q, x, at_inf) for q in chain]
        signs = [s for s in signs if s != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    va = variations(a) if a is not None else variations(None, at_inf=-1)
    vb = variations(b) if b is not None else variations(None, at_inf=+1)
    return va - vb


# ---------------------------------------------------------------------------
# integer Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(A: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[List[int]], List[List[int]]]:
    """Return (U, S, V) with U A V = S diagonal, U, V unimodular. Exact."""
    M = [list(map(int, row)) for row in A]
    n = len(M)
    m = len(M[0]) if n else 0
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, f):
        M[dst] = [a + f * b for a, b in zip(M[dst], M[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def addmul_col(dst, src, f):
        for r in M:
            r[dst] += f * r[src]
        for r in V:
            r[dst] += f * r[src]

    t = 0
    while t < min(n, m):
        # find nonzero pivot with smallest abs value
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if M[i][j] and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, n):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    addmul_row(i, t, -q)
                    if M[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, m):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    addmul_col(j, t, -q)
                    if M[t][j]:
                        swap_cols(t, j)
                        done = False
        if M[t][t] < 0:
            addmul_row(t, t, -2)
        t += 1
    # enforce divisibility chain
    for i in range(min(n, m) - 1):
        a, b = M[i][i], M[i + 1][i + 1]
        if a and b and b % a:
            addmul_col(i, i + 1, 1)
            # re-run local reduction
            return smith_normal_form_fixup(M, U, V, i)
    return U, M, V


def smith_normal_form_fixup(M, U, V, start):
    # rare path: restart SNF on the perturbed matrix (keeps exactness)
    U2, S2, V2 = smith_normal_form(M)
    Ufin = [[sum(U2[i][k] * U[k][j] for k in range(len(U))) for j in range(len(U[0]))] for i in range(len(U2))]
    Vfin = [[sum(V[i][k] * V2[k][j] for k in range(len(V2))) for j in range(len(V2[0]))] for i in range(len(V))]
    return Ufin, S2, Vfin
