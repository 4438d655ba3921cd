"""Cartan subspace machinery: restricted roots, complex reflections, the
little Weyl group, stabilizers and canonical parameter families.

The Cartan subspace C is spanned by p1..p4.  Its centralizer c = z_g(C) is
the unique Cartan subalgebra containing C and splits as C plus a degree-(-1)
complement.  The 40 restricted-root lines on C are computed from the
commuting operators ad(p_i); each line alpha carries an order-3 complex
reflection h -> h - alpha(h) p_alpha, where the p_alpha line is recovered
exactly as C intersected with the derived algebra of z_g(h0) for generic h0
in ker alpha.  The 40 reflections generate the little Weyl group of order
155520, enumerated exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import e8
from .e8 import AlgElement, GradedAlgebra, bracket, g1_iso, killing
from .families import (CANONICAL_BY_SET, FAMILIES, P_BASIS, SAMPLE_PARAMS,
                       close_integer_group, family_conditions, same_real_orbit)
from .linalg import (PRIMES, charpoly_frac, crt_pair, frac_mat, kernel_frac, kernel_mod, poly_roots_modp,
                     rational_reconstruct, rref_mod, smith_normal_form, solve_frac)
from .scalar import Cyc, ONE, ZERO, Z3, I as I_CONST, R3 as R3_CONST
from .trivector import Trivector, wedge_action
from .weylgroup import (MatrixGroup, close_group, conjugacy_orbit, encode_matrix,
                        fix_subgroup, fixed_space_dim, normalizer_of_subgroup)

_ONE_MINUS_Z3 = ONE - Z3


@dataclass
class Reflection:
    root: Tuple[Fraction, ...]          # restricted-root functional on C (rational line)
    p_alpha: List[Cyc]                  # coordinates on p1..p4, alpha(p_alpha) = 1 - z3
    matrix: List[List[Cyc]]             # action on C in the p-basis


@dataclass
class HexadData:
    """Eigenvalue data of one root hexad: W2[i][j] = beta(p_i) beta(p_j) *
    beta(p*)^4 and E2 = beta(p*)^6, so that beta(q)^6 = (q^T W2 q)^3 / E2^2."""

    W2: List[List[Cyc]]
    E2: Cyc

    def mu_at(self, coords: Sequence[Cyc]) -> Cyc:
        acc = ZERO
        for i in range(4):
            if coords[i].is_zero():
                continue
            for j in range(4):
                if not coords[j].is_zero():
                    acc = acc + coords[i] * coords[j] * self.W2[i][j]
        if acc.is_zero():
            return ZERO
        return (acc ** 3) * (self.E2 ** 2).inv()


@dataclass
class CartanData:
    alg: GradedAlgebra
    p_trivectors: List[Trivector]
    p_elements: List[AlgElement]
    c_minus_basis: List[AlgElement]     # z_g(C) in degree -1 (4-dimensional)
    kappa_pairing: List[List[Fraction]]  # kappa(p_i, f_j), nondegenerate
    restricted_roots: List[Tuple[Fraction, ...]]
    reflections: List[Reflection]
    hexads: List[HexadData] = field(default_factory=list)

    def cartan_subalgebra_basis(self) -> List[AlgElement]:
        return self.c_minus_basis + self.p_elements


@dataclass
class LittleWeylGroup:
    group: MatrixGroup
    reflection_indices: List[int]
    data: CartanData

    @property
    def order(self) -> int:
        return self.group.order


_CARTAN_CACHE: Optional[CartanData] = None
_WEYL_CACHE: Optional[LittleWeylGroup] = None


# ---------------------------------------------------------------------------
# Cartan subspace and restricted roots
# ---------------------------------------------------------------------------

def build_cartan() -> CartanData:
    global _CARTAN_CACHE
    if _CARTAN_CACHE is not None:
        return _CARTAN_CACHE
    rs, alg = e8.build()
    P = [g1_iso(alg, p) for p in P_BASIS]

    # pairwise commuting, exactly
    for i in range(4):
        for j in range(4):
            assert bracket(P[i], P[j]).is_zero()

    from .cache import load_cartan_cache, store_cartan_cache, _strs_to_cyc, _str_to_frac

    cached = load_cartan_cache()
    if cached is not None:
        reflections = [
            Reflection(
                root=tuple(_strs_to_cyc(c) for c in r["root"]),
                p_alpha=[_strs_to_cyc(c) for c in r["p_alpha"]],
                matrix=[[_strs_to_cyc(x) for x in row] for row in r["matrix"]],
            )
            for r in cached["reflections"]
        ]
        c_minus = [
            AlgElement(alg, {int(i): Cyc.rational(_str_to_frac(v)) for i, v in el.items()})
            for el in cached["c_minus"]
        ]
        kappa = [[_str_to_frac(x) for x in row] for row in cached["kappa"]]
        roots = [r.root for r in reflections]
        hexads = [
            HexadData(W2=[[_strs_to_cyc(x) for x in row] for row in h["W2"]],
                      E2=_strs_to_cyc(h["E2"]))
            for h in cached["hexads"]
        ]
    else:
        c_minus = _centralizer_gminus(alg, P)
        assert len(c_minus) == 4
        assert not _centralizer_g0_nontrivial(alg, P)

        kappa = [[killing(alg, P[i], f).rational_value() for f in c_minus] for i in range(4)]
        from .linalg import det_frac

        assert det_frac(frac_mat(kappa)) != 0

        roots, hexads = _restricted_roots(alg, P)
        assert len(roots) == 40

        reflections = _all_reflections(alg, P, roots)
        store_cartan_cache(reflections, c_minus, kappa, hexads)

    data = CartanData(
        alg=alg,
        p_trivectors=list(P_BASIS),
        p_elements=P,
        c_minus_basis=c_minus,
        kappa_pairing=kappa,
        restricted_roots=roots,
        reflections=reflections,
        hexads=hexads,
    )
    _CARTAN_CACHE = data
    return data


def _centralizer_gminus(alg: GradedAlgebra, P: List[AlgElement]) -> List[AlgElement]:
    basis = [alg.basis_element(i) for i in alg.gm1_indices]
    cols = [[bracket(b, p) for p in P] for b in basis]
    support = sorted(set().union(*[set(c.coords) for col in cols for c in col]))
    rows = []
    for t in range(4):
        for s in support:
            rows.append([cols[j][t].coords.get(s, ZERO).rational_value() for j in range(len(basis))])
    ker = kernel_frac(rows)
    out = []
    for v in ker:
        el = alg.zero()
        for c, b in zip(v, basis):
            if c:
                el = el + b.scale(Cyc.rational(c))
        out.append(el)
    return out


def _centralizer_g0_nontrivial(alg: GradedAlgebra, P: List[AlgElement]) -> bool:
    basis = [alg.basis_element(i) for i in alg.g0_indices]
    cols = [[bracket(b, p) for p in P] for b in basis]
    support = sorted(set().union(*[set(c.coords) for col in cols for c in col]))
    rows = []
    for t in range(4):
        for s in support:
            rows.append([cols[j][t].coords.get(s, ZERO).rational_value() for j in range(len(basis))])
    return bool(kernel_frac(rows))


def _ad_apply(alg: GradedAlgebra, x: AlgElement, vec: Dict[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for i, ci in x.coords.items():
        q = ci.rational_value()
        for k, v in vec.items():
            ent = alg.table.get((i, k))
            if not ent:
                continue
            s = q * v
            for (r, m) in ent:
                out[r] = out.get(r, Fraction(0)) + s * m
    return {r: v for r, v in out.items() if v}


def _restricted_roots(alg: GradedAlgebra, P: List[AlgElement]):
    """The 40 restricted-root lines, each returned as a functional on p1..p4
    with values in Q(zeta12), normalized with first nonzero value 1.

    The splitting operator G = (sum r_i D_i)^2 with D_i = ad(p_i) ad(p*)^2
    restricted to the degree-1 block is rational with eigenvalue 0 on C and
    a 2-dimensional eigenspace per root hexad; eigenvalues are rational or
    quadratic (Galois-paired hexads), handled over Q(zeta12)."""
    g1 = alg.g1_indices
    pos = {u: t for t, u in enumerate(g1)}
    rng = random.Random(20240807)
    from .linalg import rank_mod

    p0 = PRIMES[0]
    for attempt in range(40):
        tvec = [Fraction(rng.randint(1, 19)) for _ in range(4)]
        pstar = (P[0].scale(Cyc.rational(tvec[0])) + P[1].scale(Cyc.rational(tvec[1]))
                 + P[2].scale(Cyc.rational(tvec[2])) + P[3].scale(Cyc.rational(tvec[3])))
        D = [np.empty((84, 84), dtype=object) for _ in range(4)]
        E84 = np.empty((84, 84), dtype=object)
        for i in range(4):
            for a in range(84):
                for b in range(84):
                    D[i][a, b] = Fraction(0)
        for a in range(84):
            for b in range(84):
                E84[a, b] = Fraction(0)
        for col, u in enumerate(g1):
            v0 = {u: Fraction(1)}
            v1 = _ad_apply(alg, pstar, v0)
            v2 = _ad_apply(alg, pstar, v1)
            v3e = _ad_apply(alg, pstar, v2)
            for r, val in v3e.items():
                E84[pos[r], col] = val
            for i in range(4):
                v3 = _ad_apply(alg, P[i], v2)
                for r, val in v3.items():
                    D[i][pos[r], col] = val
        r = [Fraction(rng.randint(1, 9)) for _ in range(4)]
        F = D[0] * r[0] + D[1] * r[1] + D[2] * r[2] + D[3] * r[3]
        G = F @ F
        if _minpoly_degree_modp(G) < 38:
            continue  # too many collisions; try another combination
        if 84 - rank_mod(_modred_object_matrix(G, _common_den(G), p0), p0) != 4:
            continue  # a hexad fell into the zero eigenvalue (p* not generic)
        split = _split_eigenvalues(G)
        if split is not None:
            break
    else:
        raise RuntimeError("could not find a generic splitting combination")
    rational_eigs, quad_pairs = split

    eye = np.empty((84, 84), dtype=object)
    for a in range(84):
        for b in range(84):
            eye[a, b] = Fraction(1 if a == b else 0)

    pair_spaces: List[List[List[Cyc]]] = []
    G2: Optional[np.ndarray] = None
    for val in rational_eigs:
        K = _kernel_object_matrix(G - eye * val)
        pair_spaces.extend(_split_block(D, K, rng))
    for (b, c) in quad_pairs:
        if G2 is None:
            G2 = G @ G
        Q = G2 + G * b + eye * c
        K = _kernel_object_matrix(Q)
        pair_spaces.extend(_split_block(D, K, rng))

    assert len(pair_spaces) == 40, f"got {len(pair_spaces)} hexad spaces"
    roots = []
    hexads = []
    for Vc in pair_spaces:
        root, hx = _root_from_pair_space(D, E84, Vc)
        roots.append(root)
        hexads.append(hx)
    assert len(set(roots)) == 40
    return roots, hexads


def _embed_rows(K: List[List[Fraction]]) -> List[List[Cyc]]:
    return [[Cyc.rational(x) for x in v] for v in K]


def _split_block(D, K: List[List[Fraction]], rng) -> List[List[List[Cyc]]]:
    """Split a rational joint-invariant block into 2-dimensional hexad
    spaces (over Q(zeta12)) using random combinations of the D operators."""
    if len(K) == 2:
        return [_embed_rows(K)]
    n84 = D[0].shape[0]
    DK = [_restrict_rational(D[i], K) for i in range(4)]
    for attempt in range(30):
        w = [Fraction(rng.randint(-9, 9)) for _ in range(4)]
        W = _mat_add_scaled(DK, w)
        W2 = _sq_frac(W)
        cp = charpoly_frac(W2)
        import sympy

        t = sympy.Symbol("t")
        poly = sympy.Poly(sum(sympy.Rational(str(c)) * t**k for k, c in enumerate(cp)), t)
        facs = poly.factor_list()[1]
        lin = [f for f, m in facs if f.degree() == 1]
        quad = [f for f, m in facs if f.degree() == 2]
        if len(lin) + len(quad) < 2 and len(quad) != 1:
            continue
        out: List[List[List[Cyc]]] = []
        ok = True
        for f in lin:
            cs = [Fraction(str(x)) for x in reversed(f.all_coeffs())]
            val = -cs[0] / cs[1]
            sub = _kernel_small(W2, val)
            subK = [_combine(K, v) for v in sub]
            if len(subK) == len(K):
                ok = False  # operator did not split anything
                break
            out.extend(_split_block(D, subK, rng))
        if not ok:
            continue
        for f in quad:
            cs = [Fraction(str(x)) for x in reversed(f.all_coeffs())]
            lead = cs[2]
            b, c = cs[1] / lead, cs[0] / lead
            lam1, lam2 = _quadratic_roots_cyc(b, c)
            # rational 4-dim block for the pair, then split over the field
            Q = _quad_eval(W2, b, c)
            sub = _kernel_small_matrix(Q)
            subK = [_combine(K, v) for v in sub]
            if len(subK) % 2 or not subK:
                ok = False
                break
            WQ = _restrict_rational_list(W2, K, subK)
            for lam in (lam1, lam2):
                ker = kernel_cyc_local(
                    [[Cyc.rational(WQ[i][j]) - (lam if i == j else ZERO)
                      for j in range(len(subK))] for i in range(len(subK))]
                )
                if len(ker) != 2:
                    ok = False
                    break
                Vc = []
                for kv in ker:
                    vec = [ZERO] * n84
                    for tpos, coeff in enumerate(kv):
                        if not coeff.is_zero():
                            for a in range(n84):
                                if subK[tpos][a]:
                                    vec[a] = vec[a] + coeff * Cyc.rational(subK[tpos][a])
                    Vc.append(vec)
                out.append(Vc)
            if not ok:
                break
        if ok and sum(1 for _ in out) * 2 == len(K):
            return out
    raise RuntimeError("failed to split a collided eigenvalue block")


def _restrict_rational(D, K: List[List[Fraction]]) -> List[List[Fraction]]:
    n = D.shape[0]
    imgs = []
    for v in K:
        img = [Fraction(0)] * n
        for b in range(n):
            if v[b]:
                for a in range(n):
                    if D[a, b]:
                        img[a] += v[b] * D[a, b]
        imgs.append(img)
    cols = [[Fraction(K[j][i]) for j in range(len(K))] for i in range(n)]
    out = []
    for img in imgs:
        sol = solve_frac(cols, img)
        assert sol is not None
        out.append(sol)
    return [[out[j][i] for j in range(len(K))] for i in range(len(K))]


def _restrict_rational_list(W2: List[List[Fraction]], K: List[List[Fraction]],
                            subK: List[List[Fraction]]) -> List[List[Fraction]]:
    """Restrict the operator W2 (given on K-coordinates) to the span of subK
    (given in ambient coordinates); returns the matrix on subK coordinates."""
    # express subK in K-coordinates
    n = len(K[0])
    cols = [[Fraction(K[j][i]) for j in range(len(K))] for i in range(n)]
    subK_in_K = []
    for v in subK:
        sol = solve_frac(cols, [Fraction(x) for x in v])
        assert sol is not None
        subK_in_K.append(sol)
    k = len(K)
    imgs = []
    for v in subK_in_K:
        img = [sum(W2[a][b] * v[b] for b in range(k)) for a in range(k)]
        imgs.append(img)
    cols2 = [[subK_in_K[j][i] for j in range(len(subK))] for i in range(k)]
    out = []
    for img in imgs:
        sol = solve_frac(cols2, img)
        assert sol is not None
        out.append(sol)
    return [[out[j][i] for j in range(len(subK))] for i in range(len(subK))]


def _mat_add_scaled(DK: List[List[List[Fraction]]], w: List[Fraction]) -> List[List[Fraction]]:
    k = len(DK[0])
    return [[sum(w[t] * DK[t][i][j] for t in range(4)) for j in range(k)] for i in range(k)]


def _sq_frac(M: List[List[Fraction]]) -> List[List[Fraction]]:
    k = len(M)
    return [[sum(M[i][t] * M[t][j] for t in range(k)) for j in range(k)] for i in range(k)]


def _quad_eval(M: List[List[Fraction]], b: Fraction, c: Fraction) -> List[List[Fraction]]:
    k = len(M)
    M2 = _sq_frac(M)
    return [[M2[i][j] + b * M[i][j] + (c if i == j else 0) for j in range(k)] for i in range(k)]


def _kernel_small(M: List[List[Fraction]], val: Fraction) -> List[List[Fraction]]:
    k = len(M)
    rows = [[M[i][j] - (val if i == j else 0) for j in range(k)] for i in range(k)]
    return kernel_frac(rows)


def _kernel_small_matrix(M: List[List[Fraction]]) -> List[List[Fraction]]:
    return kernel_frac(M)


def _combine(K: List[List[Fraction]], coeffs: List[Fraction]) -> List[Fraction]:
    n = len(K[0])
    return [sum(coeffs[t] * K[t][i] for t in range(len(K))) for i in range(n)]


def kernel_cyc_local(rows):
    from .linalg import kernel_cyc

    return kernel_cyc(rows)


def _split_eigenvalues(G) -> Optional[Tuple[List[Fraction], List[Tuple[Fraction, Fraction]]]]:
    """Nonzero eigenvalue data of G: rational eigenvalues plus irreducible
    quadratic factors t^2 + b t + c of the minimal polynomial."""
    m = _minpoly_object_matrix(G)
    if m is None:
        return None
    import sympy

    t = sympy.Symbol("t")
    poly = sympy.Poly(sum(sympy.Rational(str(c)) * t**k for k, c in enumerate(m)), t)
    rational: List[Fraction] = []
    quads: List[Tuple[Fraction, Fraction]] = []
    for fac, mult in poly.factor_list()[1]:
        if mult != 1:
            return None
        d = fac.degree()
        cs = [Fraction(str(x)) for x in reversed(fac.all_coeffs())]
        if d == 1:
            root = -cs[0] / cs[1]
            if root != 0:
                rational.append(root)
        elif d == 2:
            lead = cs[2]
            quads.append((cs[1] / lead, cs[0] / lead))
        else:
            return None
    return rational, quads


def _modred_object_matrix(G, den: int, p: int) -> np.ndarray:
    n = G.shape[0]
    M = np.zeros((n, n), dtype=np.int64)
    dinv = pow(den % p, -1, p)
    for a in range(n):
        for b in range(n):
            v = G[a, b]
            if v:
                M[a, b] = int(v * den) * dinv % p
    return M


def _common_den(G) -> int:
    import math as _m

    den = 1
    n = G.shape[0]
    for a in range(n):
        for b in range(n):
            den = den * G[a, b].denominator // _m.gcd(den, G[a, b].denominator)
    return den


def _minpoly_degree_modp(G) -> int:
    from .linalg import minpoly_mod

    den = _common_den(G)
    p = PRIMES[0]
    return len(minpoly_mod(_modred_object_matrix(G, den, p), p, random.Random(3))) - 1


def _minpoly_object_matrix(G) -> Optional[List[Fraction]]:
    """Minimal polynomial of an 84x84 Fraction matrix: modular + CRT across
    as many primes as the (large) coefficients need, stabilized, and
    confirmed downstream by exact kernel-dimension checks."""
    n = G.shape[0]
    den = _common_den(G)
    rng = random.Random(11)
    from .linalg import minpoly_mod

    residues, used, deg = [], [], -1
    candidate = None
    stable = 0
    for p in PRIMES:
        mp = minpoly_mod(_modred_object_matrix(G, den, p), p, rng)
        d = len(mp) - 1
        if d > deg:
            deg, residues, used, candidate, stable = d, [mp], [p], None, 0
            continue
        if d < deg:
            continue
        residues.append(mp)
        used.append(p)
        if len(used) < 8 or len(used) % 4:
            continue  # reconstruct every 4th prime once warm
        out = []
        okflag = True
        for k in range(deg + 1):
            a, mm = residues[0][k], used[0]
            for res, p2 in zip(residues[1:], used[1:]):
                a, mm = crt_pair(a, mm, res[k], p2)
            q = rational_reconstruct(a, mm)
            if q is None:
                okflag = False
                break
            out.append(q)
        if okflag:
            if candidate is not None and out == candidate:
                return out
            candidate = out
    return None


def _quadratic_roots_cyc(b: Fraction, c: Fraction) -> Tuple[Cyc, Cyc]:
    """Roots of t^2 + b t + c inside Q(zeta12); discriminant must be
    d * square with d in {1, -1, 3, -3}."""
    disc = b * b - 4 * c
    num = disc.numerator
    den = disc.denominator
    val = num * den  # sqrt(disc) = sqrt(num*den)/den
    sign = 1 if val > 0 else -1
    v = abs(val)
    for d, sq in ((1, ONE), (3, R3_CONST)):
        if v % d == 0 and _is_square(v // d):
            s = Fraction(_isqrt_exact(v // d), den)
            base = sq * Cyc.rational(s)
            if sign < 0:
                base = base * I_CONST
            r1 = (Cyc.rational(-b) + base) * Fraction(1, 2)
            r2 = (Cyc.rational(-b) - base) * Fraction(1, 2)
            return r1, r2
    raise ArithmeticError(f"discriminant {disc} is not expressible in Q(zeta12)")


def _is_square(n: int) -> bool:
    import math as _m

    r = _m.isqrt(n)
    return r * r == n


def _isqrt_exact(n: int) -> int:
    import math as _m

    return _m.isqrt(n)


def _root_from_pair_space(D, E84, Vc: List[List[Cyc]]):
    """Restricted-root line plus honest eigenvalue data of one hexad."""
    mats = [_restrict_to_span_field(D[i], Vc) for i in range(4)]
    piv = next(i for i in range(4)
               if any(not x.is_zero() for row in mats[i] for x in row))
    ratios: List[Cyc] = []
    for i in range(4):
        ratios.append(_proportionality_field(mats[i], mats[piv]))
    first = next(x for x in ratios if not x.is_zero())
    inv = first.inv()
    root = tuple(x * inv for x in ratios)
    # trace identities: D_i D_j and E^2 are scalars on the pair space
    ME = _restrict_to_span_field(E84, Vc)
    W2 = [[ZERO] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(i, 4):
            prod = _cyc_matmul(mats[i], mats[j])
            _assert_scalar(prod)
            W2[i][j] = prod[0][0]
            W2[j][i] = prod[0][0]
    E2m = _cyc_matmul(ME, ME)
    _assert_scalar(E2m)
    hx = HexadData(W2=W2, E2=E2m[0][0])
    assert not hx.E2.is_zero()
    return root, hx


def _assert_scalar(M):
    n = len(M)
    for i in range(n):
        for j in range(n):
            if i == j:
                assert M[i][j] == M[0][0]
            else:
                assert M[i][j].is_zero()


def _kernel_object_matrix(M) -> List[List[Fraction]]:
    n = M.shape[0]
    rows = [[M[a, b] for b in range(n)] for a in range(n)]
    return kernel_frac(rows)


def _restrict_to_span_field(D, V: List[List[Cyc]]) -> List[List[Cyc]]:
    """Matrix of operator D (object-Fraction entries) on the span of V."""
    n = D.shape[0]
    imgs = []
    for v in V:
        img = [ZERO] * n
        for b in range(n):
            if not v[b].is_zero():
                for a in range(n):
                    if D[a, b]:
                        img[a] = img[a] + v[b] * Cyc.rational(D[a, b])
        imgs.append(img)
    A = [[V[j][i] for j in range(len(V))] for i in range(n)]
    out = []
    from .classify import _solve_field

    for img in imgs:
        sol = _solve_field(A, img)
        assert sol is not None
        out.append(sol)
    return [[out[j][i] for j in range(len(V))] for i in range(len(V))]


def _proportionality_field(M, Mpiv) -> Cyc:
    """c with M = c * Mpiv over Q(zeta12) (exact)."""
    for i in range(len(M)):
        for j in range(len(M)):
            if not Mpiv[i][j].is_zero():
                c = M[i][j] * Mpiv[i][j].inv()
                assert all(
                    M[a][b] == c * Mpiv[a][b]
                    for a in range(len(M)) for b in range(len(M))
                )
                return c
    raise ArithmeticError("pivot operator vanished on this block")


# ---------------------------------------------------------------------------
# reflections
# ---------------------------------------------------------------------------

def _all_reflections(alg: GradedAlgebra, P: List[AlgElement],
                     roots: List[Tuple[Cyc, ...]]) -> List[Reflection]:
    """Reflections for all 40 root lines.

    Lines defined over Q are computed directly from the derived algebra of a
    generic point centralizer.  The Galois-paired lines (whose rational
    kernel meets non-commuting hexads) are transported: the reflections form
    a single conjugacy class, so conjugating known reflections reaches every
    line, and the reflection data is read off the rank-1 part I - w."""
    by_root: Dict[Tuple[Cyc, ...], Reflection] = {}
    direct = 0
    for r in roots:
        try:
            refl = _reflection_for_root(alg, P, r, roots)
        except RuntimeError:
            continue
        by_root[r] = refl
        direct += 1
    if not by_root:
        raise RuntimeError("no reflection could be built directly")
    # transport closure over lines
    lines_left = [r for r in roots if r not in by_root]
    progress = True
    while lines_left and progress:
        progress = False
        known = list(by_root.values())
        for g in known:
            ginv2 = _cyc_matmul(g.matrix, g.matrix)  # order 3: g^2 = g^-1
            for w in known:
                cand = _cyc_matmul(_cyc_matmul(g.matrix, w.matrix), ginv2)
                refl = _reflection_from_matrix(cand)
                if refl is not None and refl.root not in by_root:
                    if refl.root in lines_left:
                        by_root[refl.root] = refl
                        lines_left.remove(refl.root)
                        progress = True
        if not progress and lines_left:
            break
    if lines_left:
        raise RuntimeError(f"transport closure missed {len(lines_left)} root lines")
    return [by_root[r] for r in roots]


def _reflection_from_matrix(mat: List[List[Cyc]]) -> Optional[Reflection]:
    """Recover (root, p_alpha) from a reflection matrix; canonicalize to the
    zeta-eigenvalue choice (trace 3 + zeta), normalize the root line."""
    tr = mat[0][0] + mat[1][1] + mat[2][2] + mat[3][3]
    if tr == Cyc.rational(3) + Z3 * Z3:
        mat = _cyc_matmul(mat, mat)
        tr = mat[0][0] + mat[1][1] + mat[2][2] + mat[3][3]
    if tr != Cyc.rational(3) + Z3:
        return None
    M = [[(ONE if i == j else ZERO) - mat[i][j] for j in range(4)] for i in range(4)]
    # M = p alpha^T, rank 1; alpha from a nonzero row, p from a nonzero column
    r0 = next((i for i in range(4) if any(not M[i][j].is_zero() for j in range(4))), None)
    if r0 is None:
        return None
    alpha = [M[r0][j] for j in range(4)]
    c0 = next(j for j in range(4) if not alpha[j].is_zero())
    p = [M[i][c0] * alpha[c0].inv() for i in range(4)]
    # rank-1 check and alpha(p) = 1 - zeta
    for i in range(4):
        for j in range(4):
            if M[i][j] != p[i] * alpha[j]:
                return None
    val = ZERO
    for i in range(4):
        val = val + alpha[i] * p[i]
    if val != _ONE_MINUS_Z3:
        return None
    first = next(x for x in alpha if not x.is_zero())
    inv = first.inv()
    root = tuple(x * inv for x in alpha)
    p_alpha = [x * first for x in p]
    return Reflection(root=root, p_alpha=p_alpha, matrix=mat)


def _reflection_for_root(alg: GradedAlgebra, P: List[AlgElement],
                         root: Tuple[Cyc, ...],
                         all_roots: List[Tuple[Cyc, ...]]) -> Reflection:
    p_line = _p_alpha_line(alg, P, root, all_roots)
    val = ZERO
    for i in range(4):
        val = val + root[i] * p_line[i]
    assert not val.is_zero()
    scale = _ONE_MINUS_Z3 * val.inv()
    p_alpha = [scale * c for c in p_line]
    # w(h) = h - alpha(h) p_alpha
    mat = [[(ONE if i == j else ZERO) - p_alpha[i] * root[j]
            for j in range(4)] for i in range(4)]
    refl = Reflection(root=root, p_alpha=p_alpha, matrix=mat)
    _check_reflection(refl)
    return refl


def reflection_for(orbit_root: Sequence) -> Reflection:
    """Reflection attached to a restricted-root line (values on p1..p4)."""
    data = build_cartan()
    r = [c if isinstance(c, Cyc) else Cyc.rational(c) for c in orbit_root]
    first = next((x for x in r if not x.is_zero()), None)
    if first is None:
        raise ValueError("zero functional has no reflection")
    inv = first.inv()
    rn = tuple(x * inv for x in r)
    for refl in data.reflections:
        if refl.root == rn:
            return refl
    raise ValueError("not a restricted-root line of the Cartan subspace")


def _check_reflection(refl: Reflection) -> None:
    M = refl.matrix
    M2 = _cyc_matmul(M, M)
    M3 = _cyc_matmul(M2, M)
    assert _is_identity(M3) and not _is_identity(M)
    from .linalg import kernel_cyc

    rows = [[M[i][j] - (ONE if i == j else ZERO) for j in range(4)] for i in range(4)]
    assert len(kernel_cyc(rows)) == 3


def _cyc_matmul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]


def _is_identity(M) -> bool:
    return all(M[i][j] == (ONE if i == j else ZERO) for i in range(len(M)) for j in range(len(M)))


def _p_alpha_line(alg: GradedAlgebra, P: List[AlgElement],
                  root: Tuple[Cyc, ...],
                  all_roots: List[Tuple[Cyc, ...]]) -> List[Cyc]:
    """The reflection line for a restricted root.

    Take a generic rational h0 in ker(root|C); the derived algebra of
    z_g(h0) is the sum of the hexad subalgebras of all roots vanishing at
    h0 (commuting ideals), so C meets it in one line per vanishing root,
    and the line for `root` is cut out by the other vanishing functionals.
    """
    rows = []
    for comp in range(4):
        row = [root[i].c[comp] for i in range(4)]
        if any(row):
            rows.append(row)
    ker = kernel_frac(rows)
    if len(ker) not in (2, 3):
        raise RuntimeError("unexpected rational kernel dimension for a root")
    rng = random.Random(sum(hash(c) for c in root) & 0xFFFF)
    my_idx = all_roots.index(root)
    # candidate points, fewest vanishing roots first
    cands: List[Tuple[int, List[Fraction], List[int]]] = []
    for _ in range(30):
        cs = [rng.randint(-6, 6) for _ in range(len(ker))]
        h0c = [sum(Fraction(cs[t]) * ker[t][i] for t in range(len(ker))) for i in range(4)]
        if all(c == 0 for c in h0c):
            continue
        vanish = []
        for t, gam in enumerate(all_roots):
            val = ZERO
            for i in range(4):
                if h0c[i]:
                    val = val + gam[i] * Cyc.rational(h0c[i])
            if val.is_zero():
                vanish.append(t)
        if my_idx in vanish:
            cands.append((len(vanish), h0c, vanish))
    cands.sort(key=lambda t: t[0])
    plane = None
    vanish = []
    for (k, h0c, van) in cands[:8]:
        h0 = alg.zero()
        for c, p in zip(h0c, P):
            if c:
                h0 = h0 + p.scale(Cyc.rational(c))
        a_basis = _centralizer_basis(alg, h0)
        if len(a_basis) != 8 + 6 * k:
            continue
        s_basis = _derived_span(alg, a_basis)
        if len(s_basis) != 8 * k:
            continue  # hexads at this point do not commute; try another
        got = _intersect_with_C(alg, P, s_basis, expect=k)
        if got is None:
            continue
        plane = got
        vanish = van
        break
    if plane is None:
        raise RuntimeError("failed to locate the reflection line for a root")
    k = len(vanish)
    if k == 1:
        return [Cyc.rational(x) for x in plane[0]]
    # cut by the other vanishing functionals over the field
    others = [all_roots[t] for t in vanish if t != my_idx]
    rows_c = []
    for gam in others:
        row = []
        for vvec in plane:
            val = ZERO
            for i in range(4):
                if vvec[i]:
                    val = val + gam[i] * Cyc.rational(vvec[i])
            row.append(val)
        rows_c.append(row)
    sol = kernel_cyc_local(rows_c)
    if len(sol) != 1:
        raise RuntimeError("reflection line is not unique")
    coeffs = sol[0]
    line = [ZERO] * 4
    for t, cf in enumerate(coeffs):
        if not cf.is_zero():
            for i in range(4):
                if plane[t][i]:
                    line[i] = line[i] + cf * Cyc.rational(plane[t][i])
    val = ZERO
    for i in range(4):
        val = val + root[i] * line[i]
    if val.is_zero():
        raise RuntimeError("root vanishes on its own reflection line")
    return line


def _centralizer_basis(alg: GradedAlgebra, h0: AlgElement) -> List[Dict[int, Fraction]]:
    """Exact kernel of ad(h0) via modular kernel + exact verification."""
    from .e8 import ad_sparse
    from .linalg import kernel_exact

    A = ad_sparse(h0)

    def verify(vec: List[Fraction]) -> bool:
        img = A.frac_matvec(vec)
        return all(v == 0 for v in img)

    basis = kernel_exact(lambda p: A.mod(p), alg.n, verify)
    return [{i: v for i, v in enumerate(vec) if v} for vec in basis]


def _derived_span(alg: GradedAlgebra, basis: List[Dict[int, Fraction]]) -> List[Dict[int, Fraction]]:
    elems = [AlgElement(alg, {i: Cyc.rational(v) for i, v in b.items()}) for b in basis]
    brackets = []
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            b = bracket(elems[i], elems[j])
            if not b.is_zero():
                brackets.append(b)
    # exact row reduction to a basis
    support = sorted(set().union(*[set(b.coords) for b in brackets]))
    pos = {s: t for t, s in enumerate(support)}
    rows = []
    for b in brackets:
        rows.append([b.coords.get(s, ZERO).rational_value() for s in support])
    from .linalg import rref

    R, pivots = rref(rows)
    out = []
    for r in range(len(pivots)):
        out.append({support[t]: R[r][t] for t in range(len(support)) if R[r][t]})
    return out


def _intersect_with_C(alg: GradedAlgebra, P: List[AlgElement],
                      s_basis: List[Dict[int, Fraction]],
                      expect: int = 1) -> Optional[List[List[Fraction]]]:
    """Basis of {x : sum x_i P_i in span(s_basis)}, if it has dim `expect`."""
    support = sorted(
        set().union(*[set(p.coords) for p in P], *[set(s) for s in s_basis])
    )
    rows = []
    for s in support:
        row = [P[i].coords.get(s, ZERO).rational_value() for i in range(4)]
        row += [-b.get(s, Fraction(0)) for b in s_basis]
        rows.append(row)
    ker = kernel_frac(rows)
    xs = [v[:4] for v in ker if any(v[:4])]
    if len(xs) != expect:
        return None
    return xs


# ---------------------------------------------------------------------------
# little Weyl group
# ---------------------------------------------------------------------------

def weyl_group(enumerate_elements: bool = True) -> LittleWeylGroup:
    global _WEYL_CACHE
    if _WEYL_CACHE is not None:
        return _WEYL_CACHE
    data = build_cartan()
    if not enumerate_elements:
        raise ValueError("non-enumerated little Weyl group is not supported")
    from .cache import load_weyl_cache, store_weyl_cache

    cached = load_weyl_cache()
    if cached is not None:
        G, refl_idx = cached
    else:
        gens = [r.matrix for r in data.reflections]
        G = close_group(gens, limit=10**6)
        refl_idx = [G.lookup(*encode_matrix(r.matrix)) for r in data.reflections]
        store_weyl_cache(G, refl_idx)
    W = LittleWeylGroup(group=G, reflection_indices=refl_idx, data=data)
    _WEYL_CACHE = W
    return W


def stabilizer_Wp(W: LittleWeylGroup, coords: Sequence) -> List[int]:
    """Indices of Weyl elements fixing the point with given p-coordinates."""
    vec = [c if isinstance(c, Cyc) else Cyc.rational(c) for c in coords]
    return fix_subgroup(W.group, vec)


def reflections_in(W: LittleWeylGroup, sub: Sequence[int]) -> List[int]:
    subset = set(sub)
    return [r for r in W.reflection_indices if r in subset]


def subgroup_fixed_space_dim(W: LittleWeylGroup, sub: Sequence[int]) -> int:
    """Fixed-space dimension of a reflection subgroup: reflection subgroups
    are generated by the reflections they contain, so only those matter."""
    refl = reflections_in(W, sub)
    if not refl:
        return 4
    return fixed_space_dim(W.group, refl)


def normalizer(W: LittleWeylGroup, sub: Sequence[int]) -> List[int]:
    """N(W_p) computed by permutation of the reflections inside the subgroup
    (reflection subgroups are generated by the reflections they contain).
    Batched: conjugate each contained reflection by all group elements."""
    G = W.group
    refl_in = reflections_in(W, sub)
    if not refl_in:
        return list(range(G.order))
    refl_set = set(refl_in)
    import numpy as _np
    from .weylgroup import MULT, _normalize, _key

    n = G.order
    ok = _np.ones(n, dtype=bool)
    inv_arr = G.elements[G.inverse]
    inv_den = G.dens[G.inverse].astype(object)
    for r in refl_in:
        rarr, rden = G.elements[r], int(G.dens[r])
        left = _np.einsum("nika,kjb,abc->nijc", G.elements, rarr, MULT)
        leftd = G.dens.astype(object) * rden
        full = _np.einsum("nika,nkjb,abc->nijc", left, inv_arr, MULT)
        fulld = leftd * inv_den
        for i in range(n):
            if not ok[i]:
                continue
            arr, d = _normalize(full[i], int(fulld[i]))
            if G.index[_key(arr, d)] not in refl_set:
                ok[i] = False
    return [int(i) for i in _np.nonzero(ok)[0]]


def gamma_p(W: LittleWeylGroup, sub: Sequence[int]) -> Tuple[List[int], Dict[Tuple[int, int], int]]:
    """Coset representatives of N(W_p)/W_p and their multiplication table."""
    N = normalizer(W, sub)
    subset = set(sub)
    G = W.group
    reps: List[int] = []
    rep_of: Dict[int, int] = {}
    for v in N:
        for t, r in enumerate(reps):
            if G.mul(G.inv(r), v) in subset:
                rep_of[v] = t
                break
        else:
            rep_of[v] = len(reps)
            reps.append(v)
    table: Dict[Tuple[int, int], int] = {}
    for a in range(len(reps)):
        for b in range(len(reps)):
            table[(a, b)] = rep_of[G.mul(reps[a], reps[b])]
    return reps, table


# the seven canonical reference stabilizers ---------------------------------

_CANON_KEYS: Optional[List[Tuple[int, Tuple[int, int], List[int]]]] = None


def _canonical_reference(W: LittleWeylGroup) -> List[Tuple[int, Tuple[int, int], List[int]]]:
    """(k, (order, fixdim), subgroup) for the canonical sets k=1..7."""
    global _CANON_KEYS
    if _CANON_KEYS is not None:
        return _CANON_KEYS
    out = []
    for k in range(1, 7):
        fam = FAMILIES[CANONICAL_BY_SET[k]]
        params = SAMPLE_PARAMS[fam.tag][0]
        coords = _coords_in_C(fam, params)
        sub = stabilizer_Wp(W, coords)
        key = (len(sub), subgroup_fixed_space_dim(W, sub))
        out.append((k, key, sub))
    out.append((7, (W.order, 0), list(range(W.order))))
    _CANON_KEYS = out
    return out


def _coords_in_C(fam, params) -> List[Fraction]:
    """Coordinates on p1..p4 of a canonical representative."""
    coords = [Fraction(0)] * 4
    # canonical families are combinations of p1..p4 by construction
    rep = fam.rep(params)
    sol = _express_in_p(rep)
    assert sol is not None
    return sol


def _express_in_p(t: Trivector) -> Optional[List[Fraction]]:
    support = sorted(set().union(*[set(p.coeffs) for p in P_BASIS_T], set(t.coeffs)))
    A = [[P_BASIS_T[j].coeffs.get(s, ZERO).rational_value() for j in range(4)] for s in support]
    b = [t.coeffs.get(s, ZERO).rational_value() for s in support]
    return solve_frac(A, b)


P_BASIS_T = P_BASIS


def canonical_family(coords: Sequence) -> int:
    """Which canonical set k in 1..7 the W-orbit of this point meets."""
    W = weyl_group()
    vec = [Fraction(c) if not isinstance(c, Cyc) else c for c in coords]
    if all((c.is_zero() if isinstance(c, Cyc) else c == 0) for c in vec):
        return 7
    sub = stabilizer_Wp(W, vec)
    key = (len(sub), subgroup_fixed_space_dim(W, sub))
    refs = _canonical_reference(W)
    matches = [(k, s) for (k, kk, s) in refs if kk == key]
    if len(matches) == 1:
        return matches[0][0]
    # refine by explicit conjugacy scan on the contained reflections
    for (k, s) in matches:
        if _subgroups_conjugate(W, sub, s):
            return k
    raise RuntimeError("stabilizer matches no canonical class")


def _subgroups_conjugate(W: LittleWeylGroup, A: Sequence[int], B: Sequence[int]) -> bool:
    """Conjugacy of reflection subgroups, via their reflection sets."""
    G = W.group
    ra, rb = set(reflections_in(W, A)), set(reflections_in(W, B))
    if len(ra) != len(rb) or len(A) != len(B):
        return False
    for v in range(G.order):
        vin = G.inv(v)
        if all(G.mul(G.mul(v, a), vin) in rb for a in ra):
            return True
    return False


def four_generator_subset(W: LittleWeylGroup, attempts: int = 40,
                          seed: int = 2024) -> List[int]:
    """Four reflections that generate the whole little Weyl group."""
    from .cache import load_gen4_cache, store_gen4_cache

    cached = load_gen4_cache()
    if cached is not None:
        if _closure_order(W, cached, cap=W.order) == W.order:
            return cached
    rng = random.Random(seed)
    refl = W.reflection_indices
    for _ in range(attempts):
        subset = rng.sample(refl, 4)
        if _closure_order(W, subset, cap=W.order) == W.order:
            store_gen4_cache(subset)
            return subset
    raise RuntimeError("no 4-element generating subset found in budget")


def _closure_order(W: LittleWeylGroup, gens: Sequence[int], cap: int) -> int:
    """Order of the subgroup generated inside the enumerated group, by BFS
    on indices (products via the exact integer-tensor arithmetic)."""
    G = W.group
    import numpy as _np
    from .weylgroup import MULT, _normalize, _key

    seen = {G.identity_index()}
    frontier = list({*gens})
    seen |= set(frontier)
    garr = [(G.elements[g], int(G.dens[g])) for g in gens]
    while frontier:
        farr = _np.stack([G.elements[i] for i in frontier])
        fden = G.dens[frontier].astype(object)
        new = []
        for (ga, gd) in garr:
            prod = _np.einsum("nika,kjb,abc->nijc", farr, ga, MULT)
            pden = fden * gd
            for t in range(prod.shape[0]):
                arr, d = _normalize(prod[t], int(pden[t]))
                idx = G.index[_key(arr, d)]
                if idx not in seen:
                    seen.add(idx)
                    new.append(idx)
        if len(seen) > cap:
            return len(seen)
        frontier = new
    return len(seen)


# ---------------------------------------------------------------------------
# the finite centralizer of the whole Cartan subspace
# ---------------------------------------------------------------------------

def diagonal_centralizer_of_C() -> List[List[int]]:
    """Exponent vectors (mod 3) of the diagonal matrices diag(z3^a_i) fixing
    p1..p4 with determinant 1 (the diagonal part of the centralizer; 27)."""
    rows = []
    for p in P_BASIS:
        for (i, j, k) in p.coeffs:
            row = [0] * 9
            row[i - 1] = row[j - 1] = row[k - 1] = 1
            rows.append(row)
    rows.append([1] * 9)  # determinant
    M = np.array(rows, dtype=np.int64) % 3
    vecs, free = kernel_mod(M, 3)
    out = []
    n = len(free)
    for mask in range(3**n):
        v = np.zeros(9, dtype=np.int64)
        m = mask
        for t in range(n):
            v = (v + (m % 3) * vecs[t]) % 3
            m //= 3
        out.append([int(x) for x in v])
    uniq = sorted(set(tuple(v) for v in out))
    return [list(v) for v in uniq]


def monomial_centralizer_of_C() -> List[Tuple[Tuple[int, ...], List[int]]]:
    """All monomial matrices diag(z3^a) P_sigma fixing p1..p4 exactly with
    determinant 1: sigma runs over the 9 translations of the affine-plane
    labeling (index i <-> ((i-1)//3, (i-1)%3) over F_3), which fix every
    parallel class; the group has order 3^5 = 243.

    Returns (permutation, exponent vector) pairs, each verified by exact
    wedge action."""
    out = []
    diag_part = diagonal_centralizer_of_C()
    for t1 in range(3):
        for t2 in range(3):
            # translation by (t1, t2): i-1 = 3r+c -> 3((r+t1)%3) + (c+t2)%3
            perm = [0] * 9
            for i in range(9):
                r, c = divmod(i, 3)
                perm[i] = 3 * ((r + t1) % 3) + (c + t2) % 3
            # base monomial: entries P[perm[i]][i] = 1
            base = [[ZERO] * 9 for _ in range(9)]
            for i in range(9):
                base[perm[i]][i] = ONE
            # find one exponent correction making it fix all p_i
            found = None
            for v in _exponent_corrections(base):
                found = v
                break
            if found is None:
                continue
            for d in diag_part:
                v = [(found[i] + d[i]) % 3 for i in range(9)]
                g = [[(Z3 ** v[i]) * base[i][j] if not base[i][j].is_zero() else ZERO
                      for j in range(9)] for i in range(9)]
                if all(wedge_action(g, p) == p for p in P_BASIS):
                    det = _monomial_det(perm, v)
                    if det == ONE:
                        out.append((tuple(perm), v))
    return out


def _exponent_corrections(base):
    """Brute-force small search for exponents making the monomial fix all
    p_i (the diagonal part then sweeps the full solution set)."""
    import itertools as it

    # exponents of the form z3^(a.x + b) are enough by the affine structure
    for a1 in range(3):
        for a2 in range(3):
            v = []
            for i in range(9):
                r, c = divmod(i, 3)
                v.append((a1 * r + a2 * c) % 3)
            g = [[(Z3 ** v[i]) * base[i][j] if not base[i][j].is_zero() else ZERO
                  for j in range(9)] for i in range(9)]
            if all(wedge_action(g, p) == p for p in P_BASIS):
                yield v


def _monomial_det(perm, v) -> Cyc:
    sign = 1
    seen = [False] * 9
    for i in range(9):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    out = Cyc.rational(sign)
    for x in v:
        out = out * (Z3 ** x)
    return out


def verify_diagonal_centralizer() -> bool:
    """The centralizer of the Cartan subspace in SL(9,C) found by the
    monomial search has exactly 3^5 = 243 elements, each re-verified."""
    sols = monomial_centralizer_of_C()
    return len(sols) == 243
