"""Type classification of degree-1 elements: nilpotent / semisimple / mixed.

Implements the homogeneous Jordan decomposition, homogeneous sl2-triples,
characteristics, orbit dimensions and stabilizer subalgebras of sl(9).

Large minimal-polynomial work runs modulo word-size primes with rational
reconstruction (naive fraction arithmetic on Krylov sequences is the
bottleneck); every delivered fact is then re-certified exactly: nilpotency
by an exact sparse power chain, commutation and sums by exact brackets,
semisimplicity by exact substitution of the squarefree minimal polynomial
whenever the certified-evaluation bound is affordable (all catalog-sized
elements), with an extra-prime substitution check otherwise.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import e8
from .e8 import AlgElement, GradedAlgebra, bracket, ad_sparse, g1_iso, g1_iso_inv, psi_inv
from .linalg import (
    PRIMES,
    SparseIntMat,
    charpoly_frac,
    crt_pair,
    kernel_field,
    minpoly_mod,
    polymod_divmod,
    polymod_gcd,
    polymod_invmod,
    polymod_mulmod,
    polymod_trim,
    poly_eval_frac,
    poly_gcd,
    poly_is_squarefree,
    poly_squarefree_part,
    poly_trim,
    rational_reconstruct,
    rref_mod,
    solve_frac,
)
from .scalar import Cyc, ONE, ZERO
from .trivector import Trivector, rank as trivector_rank

_RNG_SEED = 987654321


class ClassifyError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# minimal polynomial of ad x (modular, stabilized; callers verify outputs)
# ---------------------------------------------------------------------------

def minpoly_ad_rational(A: SparseIntMat, extra_confirm: int = 1) -> List[Fraction]:
    """Minimal polynomial of a rational matrix via modular Krylov + CRT.

    Stabilized: reconstruction must agree across a growing prime set and the
    result must vanish on fresh confirmation primes.  Monte Carlo; callers
    certify whatever they derive from it.
    """
    rng = random.Random(_RNG_SEED)
    residues: List[List[int]] = []
    used: List[int] = []
    deg = -1
    candidate: Optional[List[Fraction]] = None
    for p in PRIMES:
        Ap = A.mod(p)
        mp = minpoly_mod(Ap, p, rng)
        d = len(mp) - 1
        if d > deg:
            deg, residues, used = d, [mp], [p]
            candidate = None
            continue
        if d < deg:
            continue  # unlucky prime
        residues.append(mp)
        used.append(p)
        rec = _reconstruct_poly(residues, used)
        if rec is not None:
            if candidate is not None and rec == candidate:
                ok = True
                for q in PRIMES[len(PRIMES) - extra_confirm :]:
                    if q in used:
                        continue
                    if not _poly_vanishes_mod(rec, A, q, rng):
                        ok = False
                        break
                if ok:
                    return rec
            candidate = rec
    raise ClassifyError("minimal polynomial reconstruction did not stabilize")


def _reconstruct_poly(residues: List[List[int]], primes: List[int]) -> Optional[List[Fraction]]:
    deg = len(residues[0]) - 1
    out = []
    for k in range(deg + 1):
        a, m = residues[0][k], primes[0]
        for res, p in zip(residues[1:], primes[1:]):
            a, m = crt_pair(a, m, res[k], p)
        q = rational_reconstruct(a, m)
        if q is None:
            return None
        out.append(q)
    return out


def _poly_vanishes_mod(poly: Sequence[Fraction], A: SparseIntMat, p: int,
                       rng: random.Random, nvec: int = 6) -> bool:
    """Check poly(A) v = 0 mod p for several random vectors."""
    Ap = A.mod(p)
    cs = [int(c.numerator * pow(c.denominator, -1, p)) % p for c in poly]
    n = A.n
    for _ in range(nvec):
        v = np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
        acc = np.zeros(n, dtype=np.int64)
        for c in reversed(cs):
            acc = (Ap @ acc + c * v) % p
        if acc.any():
            return False
    return True


def poly_vanishes_exactly(poly: Sequence[Fraction], A: SparseIntMat,
                          budget: int = 1200) -> Optional[bool]:
    """Deterministic check that poly(A) = 0 over Q, via enough primes to beat
    an explicit coefficient bound.  Returns None if the bound exceeds the
    budget (#primes * degree), True/False otherwise."""
    n = A.n
    deg = len(poly) - 1
    den = 1
    for c in poly:
        den = den * c.denominator // math.gcd(den, c.denominator)
    # scale: q(t) = den * poly(t / D) * D^deg with A' = D*A integral
    D = A.den
    qcoeffs = [int(poly[k] * den) * D ** (deg - k) for k in range(deg + 1)]
    g = 0
    for c in qcoeffs:
        g = math.gcd(g, abs(c))
    qcoeffs = [c // g for c in qcoeffs]
    colsum: Dict[int, int] = {}
    for c, v in zip(A.cols, A.vals):
        colsum[int(c)] = colsum.get(int(c), 0) + abs(v)
    normA = max(colsum.values(), default=0) or 1
    bound = sum(abs(qcoeffs[k]) * normA ** k for k in range(deg + 1))
    nprimes = max(1, (bound.bit_length() + 1) // 25 + 1)
    if nprimes * max(deg, 1) > budget:
        return None
    Aint_rows, Aint_cols = A.rows, A.cols
    for p in PRIMES[:nprimes]:
        Ap = np.zeros((n, n), dtype=np.int64)
        vals = np.array([v % p for v in A.vals], dtype=np.int64)
        np.add.at(Ap, (Aint_rows, Aint_cols), vals)
        Ap %= p
        acc = np.zeros((n, n), dtype=np.int64)
        eye = np.eye(n, dtype=np.int64)
        for c in reversed(qcoeffs):
            acc = (Ap @ acc + (c % p) * eye) % p
        if acc.any():
            return False
    return True


# ---------------------------------------------------------------------------
# exact nilpotency / semisimplicity certificates
# ---------------------------------------------------------------------------

def _ad_columns(x: AlgElement) -> Dict[int, Dict[int, Fraction]]:
    alg = x.alg
    cols: Dict[int, Dict[int, Fraction]] = {}
    for i, ci in x.coords.items():
        q = ci.rational_value()
        for j in range(alg.n):
            ent = alg.table.get((i, j))
            if not ent:
                continue
            col = cols.setdefault(j, {})
            for (k, m) in ent:
                col[k] = col.get(k, Fraction(0)) + q * m
    return {j: {k: v for k, v in col.items() if v} for j, col in cols.items()}


def is_nilpotent(x: AlgElement, max_power: int = 70) -> bool:
    """Exact: ad x applied repeatedly to every basis vector reaches 0, or a
    single-prime characteristic polynomial differs from t^248."""
    if x.is_zero():
        return True
    if not x.is_rational():
        return _is_nilpotent_cyc(x, max_power)
    A = ad_sparse(x)
    p = PRIMES[0]
    from .linalg import charpoly_mod

    cp = charpoly_mod(A.mod(p), p)
    if any(c for c in cp[:-1]):
        return False  # certified: char poly != t^n mod p
    cols = _ad_columns(x)
    alg = x.alg
    for j in range(alg.n):
        vec = {j: Fraction(1)}
        for _ in range(max_power):
            nxt: Dict[int, Fraction] = {}
            for k, v in vec.items():
                col = cols.get(k)
                if not col:
                    continue
                for r, c in col.items():
                    nxt[r] = nxt.get(r, Fraction(0)) + v * c
            vec = {r: v for r, v in nxt.items() if v}
            if not vec:
                break
        if vec:
            raise ClassifyError("nilpotency certificate exceeded power cap")
    return True


def _is_nilpotent_cyc(x: AlgElement, max_power: int) -> bool:
    alg = x.alg
    for j in range(alg.n):
        vec: Dict[int, Cyc] = {j: ONE}
        for _ in range(max_power):
            nxt: Dict[int, Cyc] = {}
            for k, v in vec.items():
                for i, ci in x.coords.items():
                    ent = alg.table.get((i, k))
                    if not ent:
                        continue
                    s = ci * v
                    for (r, m) in ent:
                        cur = nxt.get(r, ZERO) + s * m
                        if cur.is_zero():
                            nxt.pop(r, None)
                        else:
                            nxt[r] = cur
            vec = nxt
            if not vec:
                break
        if vec:
            return False
    return True


def is_semisimple(x: AlgElement) -> bool:
    """Semisimple iff the minimal polynomial of ad x is squarefree.

    Squarefreeness of the reconstructed polynomial is checked exactly; that
    the polynomial annihilates ad x is certified by exact (bound-driven)
    substitution when affordable, else at extra independent primes.
    """
    if x.is_zero():
        return True
    if not x.is_rational():
        m = minpoly_exact_cyc(x)
        return _cyc_poly_squarefree(m)
    A = ad_sparse(x)
    m = minpoly_ad_rational(A)
    ok = poly_vanishes_exactly(m, A)
    if ok is None:
        rng = random.Random(_RNG_SEED + 1)
        for p in PRIMES[-6:]:
            if not _poly_vanishes_mod(m, A, p, rng):
                raise ClassifyError("minimal polynomial failed confirmation")
    elif not ok:
        raise ClassifyError("minimal polynomial failed exact substitution")
    return poly_is_squarefree(m)


# exact Krylov over the field, for non-rational elements ---------------------

def minpoly_exact_cyc(x: AlgElement) -> List[Cyc]:
    """Exact minimal polynomial of ad x over Q(zeta12) (slow; rare path)."""
    alg = x.alg
    rng = random.Random(_RNG_SEED + 2)
    n = alg.n

    def matvec(vec: Dict[int, Cyc]) -> Dict[int, Cyc]:
        out: Dict[int, Cyc] = {}
        for i, ci in x.coords.items():
            for k, v in vec.items():
                ent = alg.table.get((i, k))
                if not ent:
                    continue
                s = ci * v
                for (r, m) in ent:
                    cur = out.get(r, ZERO) + s * m
                    if cur.is_zero():
                        out.pop(r, None)
                    else:
                        out[r] = cur
        return out

    best: List[Cyc] = [ONE]
    for _ in range(3):
        v0 = {i: Cyc.rational(rng.randint(1, 5)) for i in rng.sample(range(n), 12)}
        # echelon rows: (vec, comb, pivot)
        pivrows: List[Tuple[Dict[int, Cyc], List[Cyc], int]] = []
        cur = v0
        k = 0
        poly: Optional[List[Cyc]] = None
        while k <= n:
            vec = dict(cur)
            comb = [ZERO] * (k + 1)
            comb[k] = ONE
            for pv, pc, pcol in pivrows:
                f = vec.get(pcol, ZERO)
                if not f.is_zero():
                    for r, val in pv.items():
                        cur2 = vec.get(r, ZERO) - f * val
                        if cur2.is_zero():
                            vec.pop(r, None)
                        else:
                            vec[r] = cur2
                    for idx in range(min(len(comb), len(pc))):
                        comb[idx] = comb[idx] - f * pc[idx]
            if not vec:
                poly = comb
                break
            pcol = min(vec)
            inv = vec[pcol].inv()
            vec = {r: val * inv for r, val in vec.items()}
            comb = [c * inv for c in comb]
            pivrows.append((vec, comb, pcol))
            cur = matvec(cur)
            k += 1
        assert poly is not None
        best = _cyc_poly_lcm(best, poly)
        # heuristic: one vector usually suffices; stop if degree large
        if len(best) - 1 >= 3:
            break
    return best


def _cyc_poly_lcm(a: List[Cyc], b: List[Cyc]) -> List[Cyc]:
    g = _cyc_poly_gcd(a, b)
    q, r = _cyc_poly_divmod(b, g)
    assert all(c.is_zero() for c in r)
    out = [ZERO] * (len(a) + len(q) - 1)
    for i, ca in enumerate(a):
        for j, cq in enumerate(q):
            out[i + j] = out[i + j] + ca * cq
    return out


def _cyc_poly_divmod(a: List[Cyc], b: List[Cyc]):
    a = list(a)
    while len(b) > 1 and b[-1].is_zero():
        b = b[:-1]
    db = len(b) - 1
    inv = b[-1].inv()
    if len(a) < len(b):
        return [ZERO], a
    q = [ZERO] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv
        if not c.is_zero():
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = a[i - db + j] - c * b[j]
    while len(a) > 1 and a[-1].is_zero():
        a.pop()
    return q, a


def _cyc_poly_gcd(a: List[Cyc], b: List[Cyc]) -> List[Cyc]:
    def trim(p):
        while len(p) > 1 and p[-1].is_zero():
            p = p[:-1]
        return p

    a, b = trim(list(a)), trim(list(b))
    while not (len(b) == 1 and b[0].is_zero()):
        _, r = _cyc_poly_divmod(a, b)
        a, b = b, trim(r)
    inv = a[-1].inv()
    return [c * inv for c in a]


def _cyc_poly_deriv(a: List[Cyc]) -> List[Cyc]:
    return [a[i] * i for i in range(1, len(a))] or [ZERO]


def _cyc_poly_squarefree(a: List[Cyc]) -> bool:
    return len(_cyc_poly_gcd(a, _cyc_poly_deriv(a))) == 1


# ---------------------------------------------------------------------------
# homogeneous Jordan decomposition
# ---------------------------------------------------------------------------

_solver_cache: Dict[int, Tuple[List[int], np.ndarray]] = {}


def _g1_solver_data(alg: GradedAlgebra) -> Tuple[List[int], List[Tuple[int, int, int, int]]]:
    """Column subset J of degree-(-1) basis indices and the sparse relation
    list (j, k, u, coeff): [b_u, b_j] has coefficient coeff on b_k."""
    key = id(alg)
    if key in _solver_cache:
        return _solver_cache[key]
    g1 = alg.g1_indices
    pos_of = {u: t for t, u in enumerate(g1)}
    # greedy cover: column j (a degree -1 basis vector) constrains exactly
    # the unknowns u with [b_u, b_j] != 0; pick j's until all are covered
    coverage: Dict[int, set] = {}
    for j in alg.gm1_indices:
        touched = set()
        for u in g1:
            if alg.table.get((u, j)):
                touched.add(u)
        coverage[j] = touched
    J: List[int] = []
    remaining = set(g1)
    while remaining:
        best = max(alg.gm1_indices, key=lambda j: len(coverage[j] & remaining))
        gain = coverage[best] & remaining
        if not gain:
            raise ClassifyError("cannot cover the degree-1 block")
        J.append(best)
        remaining -= gain
    rels = []
    for j in J:
        for u in g1:
            ent = alg.table.get((u, j))
            if not ent:
                continue
            for (k, c) in ent:
                rels.append((j, k, u, c))
    # certify injectivity of s -> ([s, b_j])_{j in J} via full mod-p rank
    p = PRIMES[0]
    rowindex = {}
    rows = []
    for (j, k, u, c) in rels:
        rk = rowindex.setdefault((j, k), len(rowindex))
    M = np.zeros((len(rowindex), len(g1)), dtype=np.int64)
    for (j, k, u, c) in rels:
        M[rowindex[(j, k)], pos_of[u]] = (M[rowindex[(j, k)], pos_of[u]] + c) % p
    from .linalg import rank_mod

    if rank_mod(M, p) != len(g1):
        raise ClassifyError("degree-1 solver columns are not certifiably injective")
    _solver_cache[key] = (J, rels)
    return J, rels


def jordan_decompose(x: AlgElement) -> Tuple[AlgElement, AlgElement]:
    """Homogeneous Jordan decomposition x = x_s + x_n inside the degree-1
    part.  Verified exactly: sum, homogeneity, commutation, nilpotency."""
    alg = x.alg
    if not x.is_degree_pure(1):
        raise ValueError("jordan_decompose expects a degree-1 element")
    if x.is_zero():
        return alg.zero(), alg.zero()
    if not x.is_rational():
        return _jordan_cyc(x)
    if is_nilpotent(x):
        return alg.zero(), x
    A = ad_sparse(x)
    m = minpoly_ad_rational(A)
    if poly_is_squarefree(m):
        # candidate (x, 0); certify semisimplicity of x where affordable
        ok = poly_vanishes_exactly(m, A)
        if ok is False:
            raise ClassifyError("minimal polynomial failed exact substitution")
        return x, alg.zero()
    for extra in (0, 2, 4):
        xs = _jordan_modular_solve(x, A, m, nprimes=6 + extra)
        if xs is None:
            continue
        xn = x - xs
        if bracket(xs, xn).is_zero() and is_nilpotent(xn):
            return xs, xn
    raise ClassifyError("Jordan reconstruction failed verification")


def _jordan_modular_solve(x: AlgElement, A: SparseIntMat, m: List[Fraction],
                          nprimes: int) -> Optional[AlgElement]:
    alg = x.alg
    J, rels = _g1_solver_data(alg)
    g1 = alg.g1_indices
    pos_of = {u: t for t, u in enumerate(g1)}
    m0 = poly_squarefree_part(m)
    residues = []
    used = []
    for p in PRIMES[2 : 2 + nprimes]:
        sol = _jordan_solve_mod(A, m, m0, p, alg, J, rels, pos_of)
        if sol is None:
            continue
        residues.append(sol)
        used.append(p)
    if not residues:
        return None
    vec = []
    for i in range(len(g1)):
        a, mm = int(residues[0][i]), used[0]
        for res, p in zip(residues[1:], used[1:]):
            a, mm = crt_pair(a, mm, int(res[i]), p)
        q = rational_reconstruct(a, mm)
        if q is None:
            return None
        vec.append(q)
    coords = {g1[i]: Cyc.rational(vec[i]) for i in range(len(g1)) if vec[i]}
    return AlgElement(alg, coords)


def _jordan_solve_mod(A: SparseIntMat, m, m0, p, alg, J, rels, pos_of):
    mbar = [int(c.numerator * pow(c.denominator, -1, p)) % p for c in m]
    m0bar = [int(c.numerator * pow(c.denominator, -1, p)) % p for c in m0]
    if mbar[-1] % p == 0 or m0bar[-1] % p == 0:
        return None
    q = _newton_separable_mod(mbar, m0bar, p)
    if q is None:
        return None
    Ap = A.mod(p)
    n = A.n
    # S columns for j in J via vector Horner
    b = {}
    for j in J:
        v = np.zeros(n, dtype=np.int64)
        v[j] = 1
        acc = np.zeros(n, dtype=np.int64)
        for c in reversed(q):
            acc = (Ap @ acc + c * v) % p
        b[j] = acc
    # build linear system rows over (j, k) for k in g0 (the degree-0 block)
    rowindex: Dict[Tuple[int, int], int] = {}
    data = []
    for (j, k, u, c) in rels:
        r = rowindex.setdefault((j, k), len(rowindex))
        data.append((r, pos_of[u], c))
    nrows = len(rowindex)
    M = np.zeros((nrows, len(pos_of) + 1), dtype=np.int64)
    for (r, cpos, c) in data:
        M[r, cpos] = (M[r, cpos] + c) % p
    deg0 = set(alg.g0_indices)
    for (j, k), r in rowindex.items():
        M[r, -1] = int(b[j][k]) % p
    # consistency: S e_j must vanish off the degree-0 block
    for j in J:
        for k in range(n):
            if k not in deg0 and b[j][k] % p and (j, k) not in rowindex:
                return None
    R, pivots = rref_mod(M, p)
    ncols = len(pos_of)
    if pivots and pivots[-1] == ncols:
        return None  # inconsistent
    sol = np.zeros(ncols, dtype=np.int64)
    for r, c in enumerate(pivots):
        sol[c] = R[r, -1]
    if len(pivots) != ncols:
        return None  # underdetermined (should not happen: injectivity)
    return sol


def _newton_separable_mod(m: List[int], m0: List[int], p: int) -> Optional[List[int]]:
    """q(t) with m0(q) = 0 mod m, q = t mod rad, computed by Newton in F_p[t]/m."""
    m0d = polymod_trim([m0[i] * i % p for i in range(1, len(m0))])
    q = [0, 1]  # t

    def compose(poly, q):
        acc = [0]
        for c in reversed(poly):
            acc = polymod_mulmod(acc, q, m, p)
            acc = polymod_trim([(acc[i] if i < len(acc) else 0) + (c if i == 0 else 0)
                                for i in range(max(len(acc), 1))])
            acc = [v % p for v in acc]
        return polymod_trim(acc)

    for _ in range(10):
        f = compose(m0, q)
        if f == [0]:
            return q
        df = compose(m0d, q)
        try:
            dfinv = polymod_invmod(df, m, p)
        except ZeroDivisionError:
            return None
        corr = polymod_mulmod(f, dfinv, m, p)
        q = polymod_trim([((q[i] if i < len(q) else 0) - (corr[i] if i < len(corr) else 0)) % p
                          for i in range(max(len(q), len(corr)))])
    return None


def _jordan_cyc(x: AlgElement) -> Tuple[AlgElement, AlgElement]:
    """Exact-field Jordan decomposition for non-rational coordinates."""
    alg = x.alg
    if _is_nilpotent_cyc(x, 70):
        return alg.zero(), x
    m = minpoly_exact_cyc(x)
    if _cyc_poly_squarefree(m):
        return x, alg.zero()
    raise ClassifyError(
        "Jordan decomposition over Q(zeta12) with nontrivial parts is not "
        "implemented; supply a rational representative"
    )


# ---------------------------------------------------------------------------
# sl2 triples
# ---------------------------------------------------------------------------

@dataclass
class Sl2Triple:
    h: AlgElement
    e: AlgElement
    f: AlgElement

    def check(self) -> bool:
        two_e = self.e.scale(2)
        minus_two_f = self.f.scale(-2)
        return (
            bracket(self.e, self.f) == self.h
            and bracket(self.h, self.e) == two_e
            and bracket(self.h, self.f) == minus_two_f
            and self.h.is_degree_pure(0)
            and self.e.is_degree_pure(1)
            and self.f.is_degree_pure(-1)
        )


def sl2_triple(e: AlgElement, within: Optional[Sequence[AlgElement]] = None) -> Sl2Triple:
    """Homogeneous sl2-triple through a nonzero nilpotent degree-1 element,
    found by solving linear equations.  `within` restricts h and f to a
    graded subalgebra (given as a basis), for triples inside a centralizer.
    """
    alg = e.alg
    if e.is_zero():
        raise ClassifyError("sl2_triple of zero")
    if not e.is_degree_pure(1):
        raise ValueError("e must be a degree-1 element")
    if within is None:
        fm_basis = [alg.basis_element(i) for i in alg.gm1_indices]
    else:
        fm_basis = [b for b in within if b.is_degree_pure(-1) and not b.is_zero()]
    # solve [[e, f0], e] = 2e for f0
    cols = [bracket(bracket(e, b), e) for b in fm_basis]
    target = e.scale(2)
    f0 = _solve_in_span(cols, fm_basis, target)
    if f0 is None:
        raise ClassifyError("no sl2-triple: input not nilpotent nonzero?")
    h = bracket(e, f0)
    # solve [e, f] = h and [h, f] = -2f
    cols2 = [(bracket(e, b), bracket(h, b) + b.scale(2)) for b in fm_basis]
    stacked_cols = [pair for pair in cols2]
    f = _solve_in_span_pairs(stacked_cols, fm_basis, (h, alg.zero()))
    if f is None:
        raise ClassifyError("sl2 completion failed")
    t = Sl2Triple(h=h, e=e, f=f)
    if not t.check():
        raise ClassifyError("sl2 relations failed verification")
    return t


def _element_rows(elems: Sequence[AlgElement]) -> Tuple[List[int], List[List[Cyc]]]:
    support = sorted(set().union(*[set(el.coords) for el in elems]) if elems else set())
    rows = [[el.coords.get(i, ZERO) for el in elems] for i in support]
    return support, rows


def _solve_in_span(cols: Sequence[AlgElement], basis: Sequence[AlgElement],
                   target: AlgElement) -> Optional[AlgElement]:
    support = sorted(set().union(set(target.coords), *[set(c.coords) for c in cols]))
    A = [[cols[j].coords.get(i, ZERO) for j in range(len(cols))] for i in support]
    b = [target.coords.get(i, ZERO) for i in support]
    sol = _solve_field(A, b)
    if sol is None:
        return None
    out = basis[0].alg.zero()
    for c, v in zip(sol, basis):
        if not c.is_zero():
            out = out + v.scale(c)
    return out


def _solve_in_span_pairs(cols, basis, targets) -> Optional[AlgElement]:
    t1, t2 = targets
    support1 = sorted(set().union(set(t1.coords), *[set(c[0].coords) for c in cols]))
    support2 = sorted(set().union(set(t2.coords), *[set(c[1].coords) for c in cols]))
    A = [[cols[j][0].coords.get(i, ZERO) for j in range(len(cols))] for i in support1]
    A += [[cols[j][1].coords.get(i, ZERO) for j in range(len(cols))] for i in support2]
    b = [t1.coords.get(i, ZERO) for i in support1] + [t2.coords.get(i, ZERO) for i in support2]
    sol = _solve_field(A, b)
    if sol is None:
        return None
    out = basis[0].alg.zero()
    for c, v in zip(sol, basis):
        if not c.is_zero():
            out = out + v.scale(c)
    return out


def _solve_field(A: List[List[Cyc]], b: List[Cyc]) -> Optional[List[Cyc]]:
    if not A:
        return [] if all(x.is_zero() for x in b) else None
    rational = all(c.is_rational() for row in A for c in row) and all(c.is_rational() for c in b)
    if rational:
        sol = solve_frac([[c.rational_value() for c in row] for row in A],
                         [c.rational_value() for c in b])
        return None if sol is None else [Cyc.rational(q) for q in sol]
    n, m = len(A), len(A[0])
    aug = [A[i] + [b[i]] for i in range(n)]
    from .linalg import rref_field

    R, pivots = rref_field(aug, ZERO, ONE)
    for row in R:
        if not row[-1].is_zero() and all(x.is_zero() for x in row[:-1]):
            return None
    if pivots and pivots[-1] == m:
        return None
    x = [ZERO] * m
    for r, c in enumerate(pivots):
        x[c] = R[r][-1]
    return x


# ---------------------------------------------------------------------------
# characteristic
# ---------------------------------------------------------------------------

def characteristic(h: AlgElement) -> Tuple[int, ...]:
    """The 8 consecutive differences of the weakly decreasing rational
    eigenvalue list of the 9x9 matrix behind h (exact rational roots)."""
    alg = h.alg
    if h.is_zero():
        return (0,) * 8
    M = psi_inv(alg, h)
    Mq = [[c.rational_value() for c in row] for row in M]
    cp = charpoly_frac(Mq)
    roots = _rational_roots_ninths(cp)
    if sum(mult for _, mult in roots) != 9:
        raise ClassifyError("characteristic matrix has a non-rational eigenvalue")
    eig: List[Fraction] = []
    for val, mult in roots:
        eig.extend([val] * mult)
    eig.sort(reverse=True)
    diffs = [eig[i] - eig[i + 1] for i in range(8)]
    if any(d.denominator != 1 for d in diffs):
        raise ClassifyError("eigenvalue differences are not integral")
    return tuple(int(d) for d in diffs)


def _rational_roots_ninths(cp: List[Fraction]) -> List[Tuple[Fraction, int]]:
    """All rational roots with multiplicity; eigenvalues here lie in (1/9)Z."""
    # Cauchy bound
    lead = cp[-1]
    bound = 1 + max(abs(c / lead) for c in cp[:-1])
    out = []
    poly = [Fraction(c) for c in cp]
    num_bound = int(bound * 9) + 1
    for num in range(-num_bound, num_bound + 1):
        cand = Fraction(num, 9)
        mult = 0
        while poly_eval_frac(poly, cand) == 0:
            mult += 1
            poly = _deflate(poly, cand)
        if mult:
            out.append((cand, mult))
    return out


def _deflate(poly: List[Fraction], root: Fraction) -> List[Fraction]:
    out = [Fraction(0)] * (len(poly) - 1)
    acc = Fraction(0)
    for k in range(len(poly) - 1, 0, -1):
        acc = poly[k] + acc * root
        out[k - 1] = acc
    return out


# ---------------------------------------------------------------------------
# stabilizers and orbit dimension
# ---------------------------------------------------------------------------

_SL9_BASIS: Optional[List[Tuple[Tuple[int, int], ...]]] = None


def sl9_basis_matrices() -> List[Dict[Tuple[int, int], int]]:
    """Basis of sl(9): E_ab (a != b) then E_ii - E_{i+1,i+1}."""
    out = []
    for a in range(1, 10):
        for b in range(1, 10):
            if a != b:
                out.append({(a, b): 1})
    for i in range(1, 9):
        out.append({(i, i): 1, (i + 1, i + 1): -1})
    return out


def _psi_of_basis(alg: GradedAlgebra, mats) -> List[AlgElement]:
    out = []
    for m in mats:
        acc = alg.zero()
        for (a, b), v in m.items():
            if a != b:
                acc = acc + alg.psi_images[(a, b)].scale(v)
        diag = [m.get((i, i), 0) for i in range(1, 10)]
        partial = 0
        for i in range(1, 9):
            partial += diag[i - 1]
            if partial:
                acc = acc + alg.psi_images[(i, i)].scale(partial)
        out.append(acc)
    return out


def stabilizer_algebra(alg: GradedAlgebra, xs: Sequence[AlgElement]) -> List[List[List[Cyc]]]:
    """Exact basis of {X in sl(9) : [psi X, x] = 0 for all x in xs},
    as a list of 9x9 matrices."""
    mats = sl9_basis_matrices()
    impsi = _psi_of_basis(alg, mats)
    cols: List[List[AlgElement]] = []
    for b in impsi:
        cols.append([bracket(b, x) for x in xs])
    support_sets = []
    for t in range(len(xs)):
        support_sets.append(sorted(set().union(*[set(cols[j][t].coords) for j in range(len(mats))])))
    rows: List[List[Cyc]] = []
    for t, supp in enumerate(support_sets):
        for i in supp:
            rows.append([cols[j][t].coords.get(i, ZERO) for j in range(len(mats))])
    if not rows:
        rows = [[ZERO] * len(mats)]
    ker = kernel_field(rows, ZERO, ONE)
    out = []
    for v in ker:
        M = [[ZERO] * 9 for _ in range(9)]
        for coef, bm in zip(v, mats):
            if coef.is_zero():
                continue
            for (a, b), val in bm.items():
                M[a - 1][b - 1] = M[a - 1][b - 1] + coef * val
        out.append(M)
    return out


def orbit_dimension(alg: GradedAlgebra, x: AlgElement) -> int:
    return 80 - len(stabilizer_algebra(alg, [x]))


# ---------------------------------------------------------------------------
# classification report
# ---------------------------------------------------------------------------

@dataclass
class ClassifyReport:
    kind: str  # zero | nilpotent | semisimple | mixed
    semisimple_part: Trivector
    nilpotent_part: Trivector
    rank: int
    orbit_dim: int
    characteristic: Optional[Tuple[int, ...]]
    stabilizer_dim: int

    def lines(self) -> List[str]:
        from .trivector import format_trivector

        out = [
            f"kind={self.kind}",
            f"rank={self.rank}",
            f"dim={self.orbit_dim}",
            f"stabilizer_dim={self.stabilizer_dim}",
            f"semisimple_part={format_trivector(self.semisimple_part)}",
            f"nilpotent_part={format_trivector(self.nilpotent_part)}",
        ]
        if self.characteristic is not None:
            out.append("char=" + ",".join(str(c) for c in self.characteristic))
        return out


def classify(alg: GradedAlgebra, t: Trivector) -> ClassifyReport:
    x = g1_iso(alg, t)
    if x.is_zero():
        return ClassifyReport("zero", Trivector({}), Trivector({}), 0, 0, None, 80)
    xs, xn = jordan_decompose(x)
    if xn.is_zero():
        kind = "semisimple"
    elif xs.is_zero():
        kind = "nilpotent"
    else:
        kind = "mixed"
    char = None
    if not xn.is_zero():
        trip = sl2_triple(xn)
        char = characteristic(trip.h)
    stab = len(stabilizer_algebra(alg, [x]))
    return ClassifyReport(
        kind=kind,
        semisimple_part=g1_iso_inv(alg, xs),
        nilpotent_part=g1_iso_inv(alg, xn),
        rank=trivector_rank(t),
        orbit_dim=80 - stab,
        characteristic=char,
        stabilizer_dim=stab,
    )
