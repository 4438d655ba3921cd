"""Exact discrimination of the real reductive centralizers.

A centralizer z inside sl(9,R) is split as center + derived algebra; the
center decomposes into a real-spectrum part (t summands) and an imaginary-
spectrum part (u summands), certified by Sturm counts on exact minimal
polynomials.  The derived algebra is certified semisimple by Cartan's
criterion (nondegenerate Killing form), split into Q-simple ideals through
its centroid, and each ideal is identified by (dimension, exact Killing
signature, centroid field signature): sl2R (2,1) vs su2 (0,3), sl3R (5,3)
vs su3 (0,8) vs su(1,2) (4,4), and complex ideals sl2C (3,3) / sl3C (8,8)
detected by an imaginary-quadratic centroid.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .linalg import (charpoly_frac, det_frac, frac_mat, kernel_frac, mat_mul,
                     poly_gcd, poly_deriv, poly_divmod, poly_trim, rref,
                     signature_symmetric, solve_frac, sturm_real_roots)

Mat9 = List[List[Fraction]]

SUMMAND_DIMS = {"t": 1, "u": 1, "sl2R": 3, "su2": 3, "sl3R": 8, "su12": 8,
                "su3": 8, "sl2C": 6, "sl3C": 16}
SUMMAND_SIGNATURE = {"sl2R": (2, 1), "su2": (0, 3), "sl3R": (5, 3),
                     "su3": (0, 8), "su12": (4, 4), "sl2C": (3, 3), "sl3C": (8, 8)}
# centroid: (degree over Q, real embeddings, complex pairs)
SUMMAND_CENTROID = {"sl2R": (1, 1, 0), "su2": (1, 1, 0), "sl3R": (1, 1, 0),
                    "su3": (1, 1, 0), "su12": (1, 1, 0),
                    "sl2C": (2, 0, 1), "sl3C": (2, 0, 1)}


@dataclass
class LieAlgebraData:
    basis: List[Mat9]
    center: List[Mat9]
    derived: List[Mat9]
    center_t_dim: int
    center_u_dim: int
    ideals: List[dict]  # dim, signature, centroid (deg, r, c)


def _mat9_mul(A: Mat9, B: Mat9) -> Mat9:
    return [[sum(A[i][k] * B[k][j] for k in range(9)) for j in range(9)] for i in range(9)]


def _mat9_bracket(A: Mat9, B: Mat9) -> Mat9:
    AB = _mat9_mul(A, B)
    BA = _mat9_mul(B, A)
    return [[AB[i][j] - BA[i][j] for j in range(9)] for i in range(9)]


def _flatten(M: Mat9) -> List[Fraction]:
    return [M[i][j] for i in range(9) for j in range(9)]


def _express(basis_cols: List[List[Fraction]], target: List[Fraction]) -> Optional[List[Fraction]]:
    rows = [[basis_cols[j][i] for j in range(len(basis_cols))] for i in range(len(target))]
    return solve_frac(rows, target)


def structure_constants(basis: List[Mat9]) -> List[List[List[Fraction]]]:
    """c[i][j] = coordinates of [b_i, b_j] on the basis."""
    cols = [_flatten(b) for b in basis]
    n = len(basis)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            br = _mat9_bracket(basis[i], basis[j])
            sol = _express(cols, _flatten(br))
            if sol is None:
                raise ArithmeticError("basis is not closed under brackets")
            out[i][j] = sol
    return out


def adjoint_matrices(struct) -> List[List[List[Fraction]]]:
    n = len(struct)
    return [[[struct[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]
    # ad_i[k][j] = coefficient of b_k in [b_i, b_j]


def killing_matrix(struct) -> List[List[Fraction]]:
    n = len(struct)
    ads = [[[struct[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]
    K = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            tr = Fraction(0)
            # trace(ad_i ad_j)
            for a in range(n):
                for b in range(n):
                    tr += ads[i][a][b] * ads[j][b][a]
            K[i][j] = tr
            K[j][i] = tr
    return K


def center_of(basis: List[Mat9], struct) -> List[List[Fraction]]:
    n = len(basis)
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([struct[i][j][k] for i in range(n)])
    return kernel_frac(rows)


def analyze(basis: List[Mat9]) -> LieAlgebraData:
    """Full exact analysis of a reductive subalgebra given by a basis."""
    n = len(basis)
    if n == 0:
        return LieAlgebraData(basis, [], [], 0, 0, [])
    struct = structure_constants(basis)
    center_coords = center_of(basis, struct)
    center = [_combine(basis, v) for v in center_coords]
    # derived algebra: span of brackets
    brackets = []
    for i in range(n):
        for j in range(i + 1, n):
            br = _mat9_bracket(basis[i], basis[j])
            if any(x for row in br for x in row):
                brackets.append(br)
    derived = _span_basis(brackets)
    if len(center) + len(derived) != n:
        raise ArithmeticError("algebra is not reductive (center+derived mismatch)")
    t_dim, u_dim = _center_split(center)
    ideals = _ideal_decomposition(derived) if derived else []
    return LieAlgebraData(basis, center, derived, t_dim, u_dim, ideals)


def _combine(basis: List[Mat9], coeffs: Sequence[Fraction]) -> Mat9:
    out = [[Fraction(0)] * 9 for _ in range(9)]
    for c, B in zip(coeffs, basis):
        if c:
            for i in range(9):
                for j in range(9):
                    out[i][j] += c * B[i][j]
    return out


def _span_basis(mats: List[Mat9]) -> List[Mat9]:
    if not mats:
        return []
    rows = [_flatten(m) for m in mats]
    R, pivots = rref(rows)
    out = []
    for r in range(len(pivots)):
        M = [[R[r][i * 9 + j] for j in range(9)] for i in range(9)]
        out.append(M)
    return out


# ---------------------------------------------------------------------------
# center: t/u split
# ---------------------------------------------------------------------------

def minpoly_matrix9(M: Mat9) -> List[Fraction]:
    """Exact minimal polynomial of a 9x9 rational matrix via its char poly."""
    cp = charpoly_frac(M)
    # min poly = cp / gcd(cp, cp') iterated to keep roots with multiplicity 1
    # (enough for semisimple matrices; verified by substitution)
    mp = poly_trim(list(cp))
    g = poly_gcd(mp, poly_deriv(mp))
    q, r = poly_divmod(mp, g)
    assert poly_trim(r) == [Fraction(0)]
    if not _poly_annihilates(q, M):
        return mp  # not semisimple; fall back to the full char poly
    return q


def _poly_annihilates(p: List[Fraction], M: Mat9) -> bool:
    acc = [[Fraction(0)] * 9 for _ in range(9)]
    eye = [[Fraction(1 if i == j else 0) for j in range(9)] for i in range(9)]
    for c in reversed(p):
        acc = _mat9_mul(M, acc)
        if c:
            for i in range(9):
                acc[i][i] += c
    return all(acc[i][j] == 0 for i in range(9) for j in range(9))


def spectrum_is_real(M: Mat9) -> bool:
    """All eigenvalues real, certified by a Sturm count on the min poly."""
    mp = minpoly_matrix9(M)
    sq = _squarefree(mp)
    deg = len(sq) - 1
    return sturm_real_roots(sq) == deg


def spectrum_is_imaginary(M: Mat9) -> bool:
    """All eigenvalues purely imaginary (M semisimple): spec(M^2) real <= 0."""
    M2 = _mat9_mul(M, M)
    mp = minpoly_matrix9(M2)
    sq = _squarefree(mp)
    deg = len(sq) - 1
    if sturm_real_roots(sq) != deg:
        return False
    # no positive roots
    return sturm_real_roots(sq, Fraction(0), _root_bound(sq)) == 0


def _root_bound(p: List[Fraction]) -> Fraction:
    lead = p[-1]
    return 1 + max(abs(c / lead) for c in p[:-1]) if len(p) > 1 else Fraction(1)


def _squarefree(p: List[Fraction]) -> List[Fraction]:
    g = poly_gcd(p, poly_deriv(p))
    q, _ = poly_divmod(p, g)
    lead = q[-1]
    return [x / lead for x in q]


def _center_split(center: List[Mat9]) -> Tuple[int, int]:
    """(dim of the real-spectrum part, dim of the imaginary-spectrum part).

    Numeric guidance proposes the subspaces; every basis vector is certified
    exactly, and exactness of the dimensions follows from C_t meeting C_u
    only in 0 and the verified dimensions adding up to dim center."""
    k = len(center)
    if k == 0:
        return 0, 0
    # numeric eigenvalue functionals
    mats = [np.array([[float(x) for x in row] for row in M]) for M in center]
    rng = random.Random(4)
    generic = sum(rng.uniform(0.5, 1.5) * m for m in mats)
    vals, vecs = np.linalg.eig(generic)
    # eigenvalue of each center element on each eigenvector
    try:
        vinv = np.linalg.inv(vecs)
    except np.linalg.LinAlgError:
        return _center_split_bruteforce(center)
    lam = np.array([[ (vinv @ m @ vecs)[t, t] for t in range(9)] for m in mats])
    # C_t: Im(lam) = 0 for all eigenvectors; C_u: Re(lam) = 0
    t_dim = _verified_subspace_dim(center, lam.imag, spectrum_is_real)
    u_dim = _verified_subspace_dim(center, lam.real, spectrum_is_imaginary)
    if t_dim + u_dim != k:
        return _center_split_bruteforce(center)
    return t_dim, u_dim


def _verified_subspace_dim(center: List[Mat9], constraint: np.ndarray, checker) -> int:
    k = len(center)
    A = constraint.T  # 9 x k
    # numeric nullspace
    u, s, vt = np.linalg.svd(A)
    null = [vt[i] for i in range(len(s), k)] + [vt[i] for i in range(len(s)) if s[i] < 1e-8]
    dim = 0
    used = []
    for v in null:
        cand = _rationalize(v)
        if cand is None:
            continue
        M = _combine(center, cand)
        if all(x == 0 for row in M for x in row):
            continue
        if checker(M):
            used.append(cand)
            R, piv = rref(used)
            if len(piv) > dim:
                dim = len(piv)
            else:
                used.pop()
    return dim


def _rationalize(v: np.ndarray, max_den: int = 48) -> Optional[List[Fraction]]:
    scale = max(abs(x) for x in v)
    if scale == 0:
        return None
    v = v / scale
    out = []
    for x in v:
        f = Fraction(x).limit_denominator(max_den)
        if abs(float(f) - x) > 1e-6:
            return None
        out.append(f)
    return out


def _center_split_bruteforce(center: List[Mat9]) -> Tuple[int, int]:
    """Exact fallback: scan small rational combinations for verified bases."""
    k = len(center)
    t_basis: List[List[Fraction]] = []
    u_basis: List[List[Fraction]] = []
    grid = [Fraction(x) for x in (0, 1, -1, 2, -2)]
    for combo in itertools.product(grid, repeat=k):
        if all(c == 0 for c in combo):
            continue
        M = _combine(center, list(combo))
        if spectrum_is_real(M):
            t_basis.append(list(combo))
        elif spectrum_is_imaginary(M):
            u_basis.append(list(combo))
    t_dim = len(rref(t_basis)[1]) if t_basis else 0
    u_dim = len(rref(u_basis)[1]) if u_basis else 0
    if t_dim + u_dim != k:
        raise ArithmeticError("center does not split into t and u parts")
    return t_dim, u_dim


# ---------------------------------------------------------------------------
# derived algebra: ideal decomposition via the centroid
# ---------------------------------------------------------------------------

def _ideal_decomposition(derived: List[Mat9]) -> List[dict]:
    struct = structure_constants(derived)
    n = len(derived)
    K = killing_matrix(struct)
    if det_frac(K) == 0:
        raise ArithmeticError("derived algebra fails Cartan's criterion")
    cent = _centroid(struct)
    # generic centroid element and its minimal polynomial
    rng = random.Random(9)
    import sympy

    for attempt in range(10):
        coeffs = [Fraction(rng.randint(1, 7)) for _ in cent]
        Z = [[sum(c * T[i][j] for c, T in zip(coeffs, cent)) for j in range(n)] for i in range(n)]
        mp = _minpoly_small(Z)
        if len(mp) - 1 == len(cent):
            break
    else:
        raise ArithmeticError("could not find a generic centroid element")
    t = sympy.Symbol("t")
    poly = sympy.Poly(sum(sympy.Rational(str(c)) * t**k for k, c in enumerate(mp)), t)
    factors = poly.factor_list()[1]
    ideals = []
    for fac, mult in factors:
        assert mult == 1, "centroid of a semisimple algebra is etale"
        fcs = [Fraction(str(x)) for x in reversed(fac.all_coeffs())]
        # idempotent projector: e = h(Z) with h = (m/f) * inv(m/f mod f)
        q, r = poly_divmod(mp, fcs)
        assert poly_trim(list(r)) == [Fraction(0)]
        inv = _poly_invmod(q, fcs)
        h = _poly_mulmod_plain(q, inv, mp)
        E = _poly_eval_matrix(h, Z)
        # ideal = image of E on the derived algebra's coordinate space
        img = []
        for j in range(n):
            col = [E[i][j] for i in range(n)]
            img.append(col)
        R, piv = rref(img)
        basis_coords = [R[i] for i in range(len(piv))]
        ideal_basis = [_combine(derived, v) for v in basis_coords]
        istruct = structure_constants(ideal_basis)
        Ki = killing_matrix(istruct)
        sig = signature_symmetric(Ki)
        deg = fac.degree()
        sq = [Fraction(str(x)) for x in reversed(fac.all_coeffs())]
        nreal = sturm_real_roots(sq)
        ideals.append({
            "dim": len(ideal_basis),
            "signature": sig,
            "centroid": (deg, nreal, (deg - nreal) // 2),
        })
    return ideals


def _centroid(struct) -> List[List[List[Fraction]]]:
    """{T in End(s) : T ad_y = ad_y T for all y}, exact kernel."""
    n = len(struct)
    ads = [[[struct[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]
    # unknowns T[a][b]; equations per y, (i, j): sum_k T[i][k] ad_y[k][j] -
    # ad_y[i][k] T[k][j] = 0
    rows = []
    for y in range(n):
        A = ads[y]
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    if A[k][j]:
                        row[i * n + k] += A[k][j]
                    if A[i][k]:
                        row[k * n + j] -= A[i][k]
                if any(row):
                    rows.append(row)
    ker = kernel_frac(rows)
    out = []
    for v in ker:
        out.append([[v[a * n + b] for b in range(n)] for a in range(n)])
    return out


def _minpoly_small(Z: List[List[Fraction]]) -> List[Fraction]:
    n = len(Z)
    # Krylov on the identity-matrix vector space: use successive powers
    powers = [[[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]]
    while True:
        powers.append(mat_mul(Z, powers[-1]))
        rows = [[P[i][j] for i in range(n) for j in range(n)] for P in powers]
        R, piv = rref(rows)
        if len(piv) < len(powers):
            # last power is dependent: solve for the relation
            k = len(powers) - 1
            cols = [[powers[t][i][j] for t in range(k)] for i in range(n) for j in range(n)]
            target = [powers[k][i][j] for i in range(n) for j in range(n)]
            sol = solve_frac(cols, target)
            assert sol is not None
            return poly_trim([-c for c in sol] + [Fraction(1)])


def _poly_invmod(a: List[Fraction], m: List[Fraction]) -> List[Fraction]:
    # extended Euclid in Q[t]
    r0, r1 = poly_trim(list(m)), poly_trim(list(a))
    t0, t1 = [Fraction(0)], [Fraction(1)]
    while poly_trim(list(r1)) != [Fraction(0)]:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        from .linalg import poly_mul

        qt = poly_mul(q, t1)
        nt = [Fraction(0)] * max(len(t0), len(qt))
        for i in range(len(nt)):
            nt[i] = (t0[i] if i < len(t0) else 0) - (qt[i] if i < len(qt) else 0)
        t0, t1 = t1, poly_trim(nt)
    lead = r0[-1]
    return poly_trim([x / lead for x in t0])


def _poly_mulmod_plain(a, b, m):
    from .linalg import poly_mul

    prod = poly_mul(a, b)
    _, r = poly_divmod(prod, m)
    return poly_trim(r)


def _poly_eval_matrix(p: List[Fraction], Z: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(Z)
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(p):
        acc = mat_mul(Z, acc)
        if c:
            for i in range(n):
                acc[i][i] += c
    return acc


# ---------------------------------------------------------------------------
# matching a declared type against the computed data
# ---------------------------------------------------------------------------

def matches_declared(data: LieAlgebraData, summands: Dict[str, int]) -> Tuple[bool, str]:
    """Check a declared summand multiset {name: multiplicity} exactly."""
    want_t = summands.get("t", 0)
    want_u = summands.get("u", 0)
    if data.center_t_dim != want_t or data.center_u_dim != want_u:
        return False, (f"center split (t,u)=({data.center_t_dim},{data.center_u_dim}) "
                       f"!= declared ({want_t},{want_u})")
    declared_semis = []
    for name, mult in summands.items():
        if name in ("t", "u"):
            continue
        declared_semis.extend([name] * mult)
    total_dim = sum(SUMMAND_DIMS[s] for s in declared_semis)
    got_dim = sum(i["dim"] for i in data.ideals)
    if total_dim != got_dim:
        return False, f"derived dim {got_dim} != declared {total_dim}"
    # match declared summands to computed Q-ideals: try all assignments of
    # declared summands to ideals (multisets are tiny)
    return _match_ideals(data.ideals, declared_semis)


def _match_ideals(ideals: List[dict], declared: List[str]) -> Tuple[bool, str]:
    if not ideals and not declared:
        return True, ""
    # a Q-ideal with centroid (deg, r, c) corresponds to r real-form summands
    # of equal real-simple type plus c complex-type summands; in the catalog
    # every centroid is Q (one real summand) or imaginary quadratic (one
    # complex summand), so the matching is one-to-one.
    avail = list(declared)
    for ideal in ideals:
        deg, nreal, ncomplex = ideal["centroid"]
        matched = None
        for name in avail:
            want_centroid = SUMMAND_CENTROID[name]
            if (SUMMAND_DIMS[name] == ideal["dim"]
                    and SUMMAND_SIGNATURE[name] == tuple(ideal["signature"])
                    and want_centroid == (deg, nreal, ncomplex)):
                matched = name
                break
        if matched is None:
            return False, (f"ideal dim {ideal['dim']} signature {ideal['signature']} "
                           f"centroid {ideal['centroid']} matches no declared summand "
                           f"among {avail}")
        avail.remove(matched)
    if avail:
        return False, f"declared summands left over: {avail}"
    return True, ""
