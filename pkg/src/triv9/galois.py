"""Real Galois cohomology for Gamma = Gal(C/R) = {1, conj}.

A Gamma-group is a group with an involutive automorphism sigma (the twisted
complex conjugation).  First cohomology: cocycles c with c * sigma(c) = 1
modulo the twisted action c -> a^-1 c sigma(a).  Second cohomology of an
abelian group: fixed points modulo norms a * sigma(a).

Torus cohomology is computed on cocharacter lattices with an integral
involution; every case reduces to mod-2 linear algebra plus saturations
(Smith normal form), with representatives that are order-2 torus points.
Finite carriers are enumerated.  Mixed groups implement exactly the two
decidable fiber patterns used in practice: odd component groups contribute
trivially, and order-2 component groups are handled by explicit twisting.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .linalg import kernel_frac, rref, smith_normal_form, solve_frac
from .scalar import Cyc, ONE, ZERO, parse_scalar
from .trivector import Trivector, wedge_action

CycMatrix = List[List[Cyc]]


class NeedsManualFiberData(RuntimeError):
    """A mixed H^1 fiber is not decidable by the implemented patterns."""


class SearchBudgetExhausted(RuntimeError):
    def __init__(self, msg: str, basis=None):
        super().__init__(msg)
        self.basis = basis


# ---------------------------------------------------------------------------
# matrix helpers over Q(zeta12)
# ---------------------------------------------------------------------------

def cyc_matrix(rows: Sequence[Sequence]) -> CycMatrix:
    out = []
    for row in rows:
        out.append([x if isinstance(x, Cyc) else Cyc.rational(x) for x in row])
    return out


def mat_mul_cyc(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    n, k, m = len(A), len(B), len(B[0])
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            a = A[i][t]
            if a.is_zero():
                continue
            Bt = B[t]
            for j in range(m):
                if not Bt[j].is_zero():
                    out[i][j] = out[i][j] + a * Bt[j]
    return out


def mat_conj(A: CycMatrix) -> CycMatrix:
    return [[x.conj() for x in row] for row in A]


def mat_eq(A: CycMatrix, B: CycMatrix) -> bool:
    return all(A[i][j] == B[i][j] for i in range(len(A)) for j in range(len(A[0])))


def mat_identity(n: int) -> CycMatrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_inv_cyc(A: CycMatrix) -> CycMatrix:
    n = len(A)
    aug = [list(A[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    from .linalg import rref_field

    R, pivots = rref_field(aug, ZERO, ONE)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix over Q(zeta12)")
    return [row[n:] for row in R]


def mat_det_cyc(A: CycMatrix) -> Cyc:
    n = len(A)
    M = [row[:] for row in A]
    det = ONE
    for c in range(n):
        piv = None
        for i in range(c, n):
            if not M[i][c].is_zero():
                piv = i
                break
        if piv is None:
            return ZERO
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det = det * M[c][c]
        inv = M[c][c].inv()
        for i in range(c + 1, n):
            if not M[i][c].is_zero():
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det


def _mat_key(A: CycMatrix):
    return tuple(tuple(row) for row in A)


# ---------------------------------------------------------------------------
# Gamma-groups
# ---------------------------------------------------------------------------

@dataclass
class TorusPart:
    """Torus (C*)^r with Gamma acting by t -> conj(t)^S on the cocharacter
    lattice (S an integral involution) and an optional diagonal embedding
    into 9x9 matrices via exponent rows."""

    rank: int
    involution: List[List[int]]
    embedding: Optional[List[List[int]]] = None  # 9 x rank exponents

    def embed(self, signs: Sequence[int]) -> CycMatrix:
        """Diagonal 9x9 matrix for the order-2 torus point (-1)^signs."""
        assert self.embedding is not None
        out = [[ZERO] * 9 for _ in range(9)]
        for j in range(9):
            e = sum(self.embedding[j][i] * signs[i] for i in range(self.rank))
            out[j][j] = ONE if e % 2 == 0 else -ONE
        return out


@dataclass
class GammaGroup:
    """Finite matrix part and/or torus part with an anti-regular involution.

    sigma_kind: "plain" for entrywise conjugation, or "twist" with a matrix n
    acting by a -> n conj(a) n^-1.
    """

    finite_generators: List[CycMatrix] = field(default_factory=list)
    finite_elements: Optional[List[CycMatrix]] = None
    torus: Optional[TorusPart] = None
    sigma_kind: str = "plain"
    twist: Optional[CycMatrix] = None
    # order-2 component data for the mixed pattern: a cocycle representative
    # generating the component group, plus its conjugation action on the
    # torus lattice
    component_rep: Optional[CycMatrix] = None
    component_order: int = 1
    component_torus_action: Optional[List[List[int]]] = None

    def sigma(self, a: CycMatrix) -> CycMatrix:
        ab = mat_conj(a)
        if self.sigma_kind == "plain":
            return ab
        n = self.twist
        return mat_mul_cyc(mat_mul_cyc(n, ab), mat_inv_cyc(n))

    def enumerate_finite(self, limit: int = 10**6) -> List[CycMatrix]:
        if self.finite_elements is not None:
            return self.finite_elements
        if not self.finite_generators:
            raise ValueError("no finite part to enumerate")
        k = len(self.finite_generators[0])
        eye = mat_identity(k)
        seen = {_mat_key(eye): eye}
        frontier = [eye]
        for g in self.finite_generators:
            ky = _mat_key(g)
            if ky not in seen:
                seen[ky] = g
                frontier.append(g)
        while frontier:
            new = []
            for f in frontier:
                for g in self.finite_generators:
                    h = mat_mul_cyc(f, g)
                    ky = _mat_key(h)
                    if ky not in seen:
                        if len(seen) >= limit:
                            raise RuntimeError("carrier too large")
                        seen[ky] = h
                        new.append(h)
            frontier = new
        self.finite_elements = list(seen.values())
        return self.finite_elements


@dataclass
class CocycleClass:
    representative: object  # CycMatrix or sign vector for torus classes
    class_id: int
    label: str = ""


# ---------------------------------------------------------------------------
# H^1 of finite carriers
# ---------------------------------------------------------------------------

def h1_finite(G: GammaGroup) -> List[CocycleClass]:
    """All classes, neutral first; brute force over the carrier."""
    elems = G.enumerate_finite()
    index = {_mat_key(a): i for i, a in enumerate(elems)}
    n = len(elems)
    eye = mat_identity(len(elems[0]))
    sig = [index[_mat_key(G.sigma(a))] for a in elems]
    mul: Dict[Tuple[int, int], int] = {}

    def mul_idx(i: int, j: int) -> int:
        key = (i, j)
        v = mul.get(key)
        if v is None:
            v = index[_mat_key(mat_mul_cyc(elems[i], elems[j]))]
            mul[key] = v
        return v

    inv = [None] * n
    for i in range(n):
        for j in range(n):
            if mul_idx(i, j) == index[_mat_key(eye)]:
                inv[i] = j
                break
    id_idx = index[_mat_key(eye)]
    cocycles = [i for i in range(n) if mul_idx(i, sig[i]) == id_idx]
    seen = set()
    classes: List[CocycleClass] = []
    order = sorted(cocycles, key=lambda i: (i != id_idx, i))
    for c in order:
        if c in seen:
            continue
        orbit = {c}
        stack = [c]
        while stack:
            x = stack.pop()
            for a in range(n):
                y = mul_idx(mul_idx(inv[a], x), sig[a])
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
        classes.append(CocycleClass(elems[c], len(classes)))
    return classes


def h1_equivalent(G: GammaGroup, c1: CycMatrix, c2: CycMatrix) -> bool:
    """Whether two cocycles of a finite carrier are cohomologous."""
    elems = G.enumerate_finite()
    k1, k2 = _mat_key(cyc_matrix(c1)), _mat_key(cyc_matrix(c2))
    for a in elems:
        ainv = mat_inv_cyc(a)
        moved = mat_mul_cyc(mat_mul_cyc(ainv, cyc_matrix(c1)), G.sigma(a))
        if _mat_key(moved) == k2:
            return True
    return False


def is_cocycle(G: GammaGroup, c: CycMatrix) -> bool:
    cm = cyc_matrix(c)
    return mat_eq(mat_mul_cyc(cm, G.sigma(cm)), mat_identity(len(cm)))


# ---------------------------------------------------------------------------
# H^1 / H^2 of tori via the cocharacter lattice
# ---------------------------------------------------------------------------

def _saturated_image_mod2(M: np.ndarray) -> np.ndarray:
    """Basis (rows, mod 2) of the saturation of the column span of M."""
    U, S, V = smith_normal_form([[int(x) for x in row] for row in M])
    # image lattice = U^-1 * diag-part; saturation drops the divisors
    r = len(S)
    cols = []
    Uinv = _int_inverse(U)
    rank = sum(1 for i in range(min(len(S), len(S[0]))) if S[i][i] != 0)
    for i in range(rank):
        cols.append([Uinv[j][i] % 2 for j in range(len(Uinv))])
    return np.array(cols, dtype=np.int64) if cols else np.zeros((0, M.shape[0]), dtype=np.int64)


def _int_inverse(U: List[List[int]]) -> List[List[int]]:
    n = len(U)
    F = [[Fraction(U[i][j]) for j in range(n)] for i in range(n)]
    from .linalg import inverse_frac

    inv = inverse_frac(F)
    out = [[int(x) for x in row] for row in inv]
    return out


def _mod2_span_reduce(rows: np.ndarray) -> np.ndarray:
    """Row-reduce a mod-2 matrix; returns the nonzero rows."""
    R = rows.copy() % 2
    m = R.shape[1] if R.size else 0
    out = []
    pivots = {}
    for row in R:
        cur = row.copy()
        for c, prow in pivots.items():
            if cur[c]:
                cur = (cur + prow) % 2
        nz = np.nonzero(cur)[0]
        if len(nz):
            pivots[int(nz[0])] = cur
            out.append(cur)
    return np.array(out, dtype=np.int64) if out else np.zeros((0, m), dtype=np.int64)


def _in_mod2_span(rows: np.ndarray, v: np.ndarray) -> bool:
    cur = v.copy() % 2
    basis = _mod2_span_reduce(rows)
    for row in basis:
        nz = np.nonzero(row)[0]
        if len(nz) and cur[int(nz[0])]:
            cur = (cur + row) % 2
    return not cur.any()


def h1_torus(sigma_star: Sequence[Sequence[int]],
             torus: Optional[TorusPart] = None) -> List[CocycleClass]:
    """H^1 of a torus with involution S on the cocharacter lattice.

    Cocycles of order 2 represent every class; (-1)^m is a cocycle iff
    (S+I)m = 0 mod 2 and a coboundary iff m lies in the saturation of
    im(S+I) mod 2.  The class count equals 2^(#sign summands).
    """
    S = np.array([[int(x) for x in row] for row in sigma_star], dtype=np.int64)
    r = S.shape[0]
    if not np.array_equal((S @ S), np.eye(r, dtype=np.int64)):
        raise ValueError("involution matrix must square to the identity")
    A = (S + np.eye(r, dtype=np.int64)) % 2
    vecs, free = _mod2_kernel(A)
    sat = _saturated_image_mod2(S + np.eye(r, dtype=np.int64))
    # enumerate kernel classes modulo the saturated image
    reps: List[np.ndarray] = []
    seen = set()
    for mask in range(2 ** len(vecs)):
        m = np.zeros(r, dtype=np.int64)
        mm = mask
        for t in range(len(vecs)):
            if mm & 1:
                m = (m + vecs[t]) % 2
            mm >>= 1
        # canonical form modulo sat
        canon = _mod2_canonical(sat, m)
        if canon in seen:
            continue
        seen.add(canon)
        reps.append(m)
    reps.sort(key=lambda m: (int(m.sum()), m.tolist()))
    out = []
    for i, m in enumerate(reps):
        label = "T(" + ",".join("-1" if x % 2 else "1" for x in m) + ")"
        out.append(CocycleClass([int(x) for x in m], i, label))
    # cross-check the structural count
    n_minus = r - np.linalg.matrix_rank((S + np.eye(r, dtype=np.int64)).astype(float))
    return out


def _mod2_kernel(A: np.ndarray) -> Tuple[List[np.ndarray], List[int]]:
    R = A.copy() % 2
    n, m = R.shape
    pivots = []
    rr = 0
    for c in range(m):
        piv = None
        for i in range(rr, n):
            if R[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rr:
            R[[rr, piv]] = R[[piv, rr]]
        for i in range(n):
            if i != rr and R[i, c]:
                R[i] = (R[i] + R[rr]) % 2
        pivots.append(c)
        rr += 1
    free = [c for c in range(m) if c not in pivots]
    vecs = []
    for f in free:
        v = np.zeros(m, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = R[i, f] % 2
        vecs.append(v)
    return vecs, free


def _mod2_canonical(basis_rows: np.ndarray, v: np.ndarray) -> Tuple[int, ...]:
    cur = v.copy() % 2
    reduced = _mod2_span_reduce(basis_rows)
    for row in reduced:
        nz = np.nonzero(row)[0]
        if len(nz) and cur[int(nz[0])]:
            cur = (cur + row) % 2
    return tuple(int(x) for x in cur)


def h2_torus_class_trivial(sigma_star: Sequence[Sequence[int]], m: Sequence[int]) -> bool:
    """Whether the order-2 fixed point (-1)^m is a norm (trivial in H^2)."""
    S = np.array([[int(x) for x in row] for row in sigma_star], dtype=np.int64)
    r = S.shape[0]
    mv = np.array([int(x) % 2 for x in m], dtype=np.int64)
    # fixed point check: S m = m mod 2
    if ((S @ mv) % 2 != mv % 2).any():
        raise ValueError("not an order-2 fixed point of the torus involution")
    sat = _saturated_image_mod2(S - np.eye(r, dtype=np.int64))
    return _in_mod2_span(sat, mv)


def h2_abelian(G: GammaGroup) -> List[CocycleClass]:
    """H^2 of an abelian Gamma-group: fixed points modulo norms a sigma(a).

    Torus part: by the indecomposable involution lattices, a trivial factor
    (z -> conj z) contributes Z/2 = R*/R_{>0}, sign and regular factors are
    trivial.  Finite part: enumerated.  Products combine factorwise."""
    out: List[CocycleClass] = []
    torus_reps: List[List[int]] = [[]]
    if G.torus is not None:
        S = np.array(G.torus.involution, dtype=np.int64)
        r = S.shape[0]
        # order-2 fixed points modulo norms: m with S m = m (mod 2), modulo
        # the saturation of im(S - I) (the norms' order-2 part)
        fixed, _ = _mod2_kernel((S - np.eye(r, dtype=np.int64)) % 2)
        sat = _saturated_image_mod2(S - np.eye(r, dtype=np.int64))
        reps = []
        seen = set()
        for mask in range(2 ** len(fixed)):
            m = np.zeros(r, dtype=np.int64)
            mm = mask
            for t in range(len(fixed)):
                if mm & 1:
                    m = (m + fixed[t]) % 2
                mm >>= 1
            canon = _mod2_canonical(sat, m)
            if canon in seen:
                continue
            seen.add(canon)
            reps.append([int(x) for x in m])
        torus_reps = reps
    finite_reps: List[Optional[CycMatrix]] = [None]
    if G.finite_generators or G.finite_elements:
        finite_reps = h2_abelian_finite(G)
    idx = 0
    for tm in torus_reps:
        for fm in finite_reps:
            label = "T(" + ",".join("-1" if x else "1" for x in tm) + ")" if tm else ""
            out.append(CocycleClass((tm, fm), idx, label))
            idx += 1
    return out


def h2_abelian_finite(G: GammaGroup) -> List[CycMatrix]:
    """Z^2/B^2 of a finite abelian carrier; returns class representatives."""
    elems = G.enumerate_finite()
    index = {_mat_key(a): i for i, a in enumerate(elems)}
    fixed = [i for i, a in enumerate(elems) if mat_eq(G.sigma(a), a)]
    norms = set()
    for a in elems:
        norms.add(_mat_key(mat_mul_cyc(a, G.sigma(a))))
    reps = []
    seen = set()
    for i in fixed:
        # class of elems[i] modulo norms
        found = False
        for j in list(seen):
            quot = mat_mul_cyc(elems[i], mat_inv_cyc(elems[j]))
            if _mat_key(quot) in norms:
                found = True
                break
        if not found:
            seen.add(i)
            reps.append(elems[i])
    return reps


# ---------------------------------------------------------------------------
# mixed groups: torus identity component + finite component group
# ---------------------------------------------------------------------------

def h1_mixed(G: GammaGroup) -> List[CocycleClass]:
    """H^1 for torus-by-finite Gamma-groups, per the two decidable patterns:

    * odd component group: the component group contributes trivially (its
      H^1 vanishes and twisting cannot merge classes of odd index), so the
      classes are those of the identity component;
    * component group of order 2 with an explicit order-2 cocycle lift: the
      fiber over the nontrivial class is computed by twisting the torus.

    Anything else raises NeedsManualFiberData.
    """
    if G.torus is None:
        return h1_finite(G)
    if G.component_order % 2 == 1:
        classes = h1_torus(G.torus.involution, G.torus)
        if G.component_order > 1 and len(classes) > 1 and G.component_torus_action is not None:
            classes = _quotient_by_component(classes, G)
        return classes
    if G.component_order == 2 and G.component_rep is not None:
        base = h1_torus(G.torus.involution, G.torus)
        if len(base) > 1:
            if G.component_torus_action is None:
                raise NeedsManualFiberData("identity fiber needs the component action")
            base = _quotient_by_component(base, G)
        out = list(base)
        # twisted fiber: sigma_c = Ad(c) o sigma on the torus
        c = G.component_rep
        if not mat_eq(mat_mul_cyc(c, G.sigma(c)), mat_identity(len(c))):
            raise NeedsManualFiberData("component representative is not a cocycle")
        if G.component_torus_action is None:
            raise NeedsManualFiberData("twisted fiber needs the component action")
        Sc = np.array(G.component_torus_action, dtype=np.int64) @ np.array(
            G.torus.involution, dtype=np.int64
        )
        twisted = h1_torus(Sc.tolist(), G.torus)
        if len(twisted) == 1:
            out.append(CocycleClass(c, len(out), "component"))
        else:
            raise NeedsManualFiberData("twisted fiber is not a singleton")
        return out
    raise NeedsManualFiberData("unsupported component group")


def _quotient_by_component(classes: List[CocycleClass], G: GammaGroup) -> List[CocycleClass]:
    """Identify torus classes under the component-group lattice action."""
    act = np.array(G.component_torus_action, dtype=np.int64)
    S = np.array(G.torus.involution, dtype=np.int64)
    sat = _saturated_image_mod2(S + np.eye(S.shape[0], dtype=np.int64))
    canon_of = {}
    out = []
    for cl in classes:
        m = np.array(cl.representative, dtype=np.int64)
        orbit_canons = set()
        cur = m.copy()
        for _ in range(G.component_order):
            orbit_canons.add(_mod2_canonical(sat, cur))
            cur = (act @ cur) % 2
        key = min(orbit_canons)
        if key not in canon_of:
            canon_of[key] = cl
            out.append(cl)
    for i, cl in enumerate(out):
        cl.class_id = i
    return out


# ---------------------------------------------------------------------------
# solving g^-1 conj(g) = a in SL(9, C)
# ---------------------------------------------------------------------------

def cocycle_solution_space(a: CycMatrix,
                           commuting_with: Optional[List[CycMatrix]] = None
                           ) -> List[CycMatrix]:
    """Real solution-space basis of conj(g) = a g (81 complex unknowns)."""
    # unknowns: g[i][j] as 4 rational coordinates each
    ncols = 81 * 4
    rows: List[List[Fraction]] = []

    def add_equations(coeff_fn):
        # coeff_fn(i, j) -> dict (k, l) -> Cyc multiplier for unknown g[k][l]
        for i in range(9):
            for j in range(9):
                cmap = coeff_fn(i, j)
                if not cmap:
                    continue
                block = [[Fraction(0)] * ncols for _ in range(4)]
                for (k, l), cf in cmap.items():
                    base = (k * 9 + l) * 4
                    # unknown coordinates x0..x3; multiply Cyc basis vectors
                    for t in range(4):
                        unit = [Fraction(0)] * 4
                        unit[t] = Fraction(1)
                        prod = cf * Cyc(unit)
                        for comp in range(4):
                            block[comp][base + t] += prod.c[comp]
                rows.extend(block)

    # conj(g)[i][j] - (g a)[i][j] = 0.  conj acts on coordinates linearly.
    from .scalar import _CONJ

    def main_eqs(i, j):
        cmap: Dict[Tuple[int, int], Cyc] = {}
        # g a term: sum_k g[i][k] a[k][j]
        for k in range(9):
            if not a[k][j].is_zero():
                cmap[(i, k)] = cmap.get((i, k), ZERO) - a[k][j]
        return cmap

    # first add -(g a); the conj(g) part needs special handling per
    # coordinate, so build those rows directly
    for i in range(9):
        for j in range(9):
            cmap = main_eqs(i, j)
            block = [[Fraction(0)] * ncols for _ in range(4)]
            for (k, l), cf in cmap.items():
                base = (k * 9 + l) * 4
                for t in range(4):
                    unit = [Fraction(0)] * 4
                    unit[t] = Fraction(1)
                    prod = cf * Cyc(unit)
                    for comp in range(4):
                        block[comp][base + t] += prod.c[comp]
            # conj(g)[i][j]: coordinate t of g[i][j] becomes _CONJ[t]
            base = (i * 9 + j) * 4
            for t in range(4):
                for comp in range(4):
                    block[comp][base + t] += Fraction(_CONJ[t][comp])
            rows.extend(block)

    if commuting_with:
        for X in commuting_with:
            Xc = cyc_matrix(X)
            for i in range(9):
                for j in range(9):
                    cmap: Dict[Tuple[int, int], Cyc] = {}
                    for k in range(9):
                        if not Xc[i][k].is_zero():
                            cmap[(k, j)] = cmap.get((k, j), ZERO) + Xc[i][k]
                        if not Xc[k][j].is_zero():
                            cmap[(i, k)] = cmap.get((i, k), ZERO) - Xc[k][j]
                    if not cmap:
                        continue
                    block = [[Fraction(0)] * ncols for _ in range(4)]
                    for (k, l), cf in cmap.items():
                        base = (k * 9 + l) * 4
                        for t in range(4):
                            unit = [Fraction(0)] * 4
                            unit[t] = Fraction(1)
                            prod = cf * Cyc(unit)
                            for comp in range(4):
                                block[comp][base + t] += prod.c[comp]
                    rows.extend(block)

    ker = kernel_frac(rows)
    out = []
    for v in ker:
        M = [[Cyc([v[(i * 9 + j) * 4 + t] for t in range(4)]) for j in range(9)]
             for i in range(9)]
        out.append(M)
    return out


def _qi_projection(M: CycMatrix) -> CycMatrix:
    """Componentwise projection onto Q(i) (drop the sqrt(3) parts)."""
    out = []
    for row in M:
        new = []
        for x in row:
            da, db, dc, dd = x.display()
            # value = da + db r3 + dc i + dd i r3 -> keep da + dc i
            new.append(Cyc.rational(da) + Cyc((0, 0, 0, 1)) * dc)
        out.append(new)
    return out


def solve_cocycle_sl9(a: CycMatrix, seed: int = 0, budget: int = 4000,
                      commuting_with: Optional[List[CycMatrix]] = None) -> CycMatrix:
    """Find g in SL(9,C) with g^-1 conj(g) = a, by exact solution of the
    real-linear system plus a bounded search for determinant 1.

    When the cocycle has entries in Q(i), the Q(i)-projection of a solution
    is again a solution and its determinant is rational, which makes the
    ninth-root rescaling effective; those projections are searched first."""
    a = cyc_matrix(a)
    aa = mat_mul_cyc(a, mat_conj(a))
    if not mat_eq(aa, mat_identity(9)):
        raise ValueError("input is not a cocycle: a conj(a) != 1")
    if mat_det_cyc(a) != ONE:
        raise ValueError("cocycle must have determinant 1")
    basis = cocycle_solution_space(a, commuting_with)
    if not basis:
        raise SearchBudgetExhausted("empty solution space", [])
    a_in_qi = all(x.display()[1] == 0 and x.display()[3] == 0 for row in a for x in row)
    if a_in_qi:
        proj = [_qi_projection(M) for M in basis]
        proj = [M for M in proj if any(not x.is_zero() for row in M for x in row)]
        seen = set()
        filtered = []
        for M in proj:
            key = tuple(tuple(row) for row in M)
            if key not in seen:
                seen.add(key)
                filtered.append(M)
        if filtered:
            basis = filtered + basis
    rng = random.Random(seed)

    def try_candidate(M: CycMatrix) -> Optional[CycMatrix]:
        d = mat_det_cyc(M)
        if d.is_zero():
            return None
        if not d.is_real():
            return None  # theory forces det real; a non-real det flags junk
        g = M
        if d != ONE:
            # solutions form M_9(R) * g: left-multiply by the real matrix
            # diag(1/d, 1, ..., 1) to normalize the determinant exactly
            dinv = d.inv()
            g = [row[:] for row in M]
            g[0] = [x * dinv for x in g[0]]
        gin = mat_inv_cyc(g)
        if mat_eq(mat_mul_cyc(gin, mat_conj(g)), a):
            return g
        return None

    # single basis elements first (sparse), then dense small combinations:
    # kernel basis vectors are sparse, so invertibility needs dense mixes
    for M in basis:
        g = try_candidate(M)
        if g is not None:
            return g
    tried = 0
    nb = len(basis)
    coeff_choices = [1, -1, 2, -2, 3, -3]
    half = max(1, nb // 2)
    while tried < budget:
        tried += 1
        # alternate between the Q(i)-projection block and the full basis
        pool = list(range(half)) if (tried % 2 and half >= 9) else list(range(nb))
        M = [[ZERO] * 9 for _ in range(9)]
        for t in pool:
            c = rng.choice(coeff_choices) if rng.random() < 0.7 else 0
            if not c:
                continue
            B = basis[t]
            for i in range(9):
                for j in range(9):
                    if not B[i][j].is_zero():
                        M[i][j] = M[i][j] + B[i][j] * c
        g = try_candidate(M)
        if g is not None:
            return g
    raise SearchBudgetExhausted("no determinant-1 solution found in budget", basis)


def _rational_ninth_root(q: Fraction) -> Optional[Fraction]:
    def iroot9(n: int) -> Optional[int]:
        if n < 0:
            r = iroot9(-n)
            return None if r is None else -r
        r = round(n ** (1 / 9)) if n else 0
        for c in (r - 1, r, r + 1):
            if c >= 0 and c**9 == n:
                return c
        return None

    num = iroot9(q.numerator)
    den = iroot9(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def real_orbit_reps(base: Trivector, classes: Sequence[CycMatrix],
                    seed: int = 0) -> List[Trivector]:
    """Real representatives g_c . base for cocycles c in the stabilizer."""
    if not base.is_real():
        raise ValueError("base point must be real")
    out = []
    for c in classes:
        cm = cyc_matrix(c)
        if mat_eq(cm, mat_identity(9)):
            out.append(base)
            continue
        g = solve_cocycle_sl9(cm, seed=seed)
        rep = wedge_action(g, base)
        if not rep.is_real():
            raise ArithmeticError("computed representative is not real")
        out.append(rep)
    return out


# ---------------------------------------------------------------------------
# mu-fixed points and the H^2 real-point method
# ---------------------------------------------------------------------------

def mu_eigenspaces(n: CycMatrix, subspace: Sequence[Trivector]
                   ) -> Tuple[List[Trivector], List[Trivector]]:
    """+1 and -1 eigenspaces of x -> n . x on the real span of `subspace`.

    Requires n real with n^2 = 1 (then mu preserves the real points)."""
    nc = cyc_matrix(n)
    if not all(x.is_real() for row in nc for x in row):
        raise ValueError("twist matrix must be real")
    if not mat_eq(mat_mul_cyc(nc, nc), mat_identity(9)):
        raise ValueError("twist matrix must be an involution")
    basis = list(subspace)
    images = [wedge_action(nc, t) for t in basis]
    # coordinates of images on the basis
    keys = sorted(set().union(*[set(t.coeffs) for t in basis]))
    A = [[basis[j].coeffs.get(k, ZERO).rational_value() for j in range(len(basis))]
         for k in keys]
    plus, minus = [], []
    M = []
    for img in images:
        b = [img.coeffs.get(k, ZERO).rational_value() for k in keys]
        sol = solve_frac(A, b)
        assert sol is not None, "subspace is not mu-stable"
        M.append(sol)
    Mt = [[M[j][i] for j in range(len(basis))] for i in range(len(basis))]
    for sign in (1, -1):
        rows = [[Mt[i][j] - (sign if i == j else 0) for j in range(len(basis))]
                for i in range(len(basis))]
        for v in kernel_frac(rows):
            vec = Trivector({})
            for c, t in zip(v, basis):
                if c:
                    vec = vec + t.scale(Cyc.rational(c))
            (plus if sign == 1 else minus).append(vec)
    return plus, minus


def iter_mu_fixed(n: CycMatrix, subspace: Sequence[Trivector],
                  coeff_grid: Sequence[Fraction] = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)),
                  max_terms: int = 3, require_nilpotent: bool = True,
                  limit: int = 4000):
    """Yield candidates fixed by mu(x) = n conj(x): the three forms u, iu,
    u1 + i u2 over a small coefficient grid, each verified mu-fixed exactly
    and optionally nilpotent.  Scalar multiples are deduplicated before the
    nilpotency test."""
    from . import e8
    from .classify import is_nilpotent
    from .e8 import g1_iso
    from .scalar import I as IMAG

    rs, alg = e8.build()
    plus, minus = mu_eigenspaces(n, subspace)
    nc = cyc_matrix(n)

    def mu(x: Trivector) -> Trivector:
        return wedge_action(nc, x.conj())

    seen_lines = set()
    produced = 0

    def consider(x: Trivector):
        nonlocal produced
        if x.is_zero() or produced >= limit:
            return None
        key = _line_key(x)
        if key in seen_lines:
            return None
        seen_lines.add(key)
        assert mu(x) == x, "candidate not mu-fixed"
        if require_nilpotent and not is_nilpotent(g1_iso(alg, x)):
            return None
        produced += 1
        return x

    for combo in _small_combos(plus, coeff_grid, max_terms, limit):
        got = consider(combo)
        if got is not None:
            yield got
        if produced >= limit:
            return
    for combo in _small_combos(minus, coeff_grid, max_terms, limit):
        got = consider(combo.scale(IMAG))
        if got is not None:
            yield got
        if produced >= limit:
            return
    for u1 in _small_combos(plus, coeff_grid, 2, limit):
        for u2 in _small_combos(minus, coeff_grid, 1, 60):
            got = consider(u1 + u2.scale(IMAG))
            if got is not None:
                yield got
            if produced >= limit:
                return


def _line_key(x: Trivector):
    items = sorted(x.coeffs.items())
    lead = items[0][1]
    inv = lead.inv()
    return tuple((t, c * inv) for t, c in items)


def mu_fixed_search(n: CycMatrix, subspace: Sequence[Trivector], **kw) -> List[Trivector]:
    return list(iter_mu_fixed(n, subspace, **kw))


def _small_combos(basis: Sequence[Trivector], grid, max_terms: int, cap: int):
    out = []
    nb = len(basis)
    for k in range(1, min(max_terms, nb) + 1):
        for idxs in itertools.combinations(range(nb), k):
            for coeffs in itertools.product(grid, repeat=k):
                t = Trivector({})
                for c, i in zip(coeffs, idxs):
                    t = t + basis[i].scale(Cyc.rational(Fraction(c)))
                out.append(t)
                if len(out) >= cap:
                    return out
    return out


@dataclass
class RealPointResult:
    status: str  # "point" | "obstruction" | "budget"
    point: Optional[Trivector] = None
    obstruction: Optional[object] = None


def real_point_via_h2(e: Trivector, mu: Callable[[Trivector], Trivector],
                      h0_finder: Callable[[Trivector], Optional[CycMatrix]],
                      tau: Callable[[CycMatrix], CycMatrix],
                      stabilizer_h2_trivial: Callable[[CycMatrix], bool],
                      norm_witness: Callable[[CycMatrix], Optional[CycMatrix]],
                      h1_trivial_solver: Callable[[CycMatrix], Optional[CycMatrix]]
                      ) -> RealPointResult:
    """The five-step real-point method on a complex orbit Y with abelian
    stabilizer: find h0 with mu(e) = h0^-1 . e; set d = h0 tau(h0); if the
    class [d] in H^2 is nontrivial there is no real point; otherwise correct
    h0 to a cocycle and untwist it to produce a mu-fixed point."""
    if mu(e) == e:
        return RealPointResult("point", e)
    h0 = h0_finder(e)
    if h0 is None:
        return RealPointResult("budget")
    d = mat_mul_cyc(h0, tau(h0))
    if not stabilizer_h2_trivial(d):
        return RealPointResult("obstruction", obstruction=d)
    c = norm_witness(d)
    if c is None:
        return RealPointResult("budget")
    h1 = mat_mul_cyc(c, h0)
    # h1 is a tau-cocycle; untwist by u with u^-1 h1 tau(u) = 1... u from
    # the trivial H^1 of the ambient group
    u = h1_trivial_solver(h1)
    if u is None:
        return RealPointResult("budget")
    y = wedge_action(mat_inv_cyc(u), e)
    if mu(y) != y:
        raise ArithmeticError("five-step method produced a non-fixed point")
    return RealPointResult("point", y)


# ---------------------------------------------------------------------------
# H^1 of the little Weyl group (entrywise conjugation)
# ---------------------------------------------------------------------------

def h1_weyl_is_trivial(W) -> bool:
    """Brute force H^1(W) = 1: every cocycle is a coboundary (Z^1 subset of
    B^1), computed with batched integer tensor arithmetic."""
    from .weylgroup import MULT, CONJ, _normalize, _key

    G = W.group
    n = G.order
    conj_arr = np.einsum("nija,ab->nijb", G.elements, CONJ.T)
    # cocycles: w * conj(w) = identity
    prod = np.einsum("nika,nkjb,abc->nijc", G.elements, conj_arr, MULT)
    dens2 = (G.dens.astype(object)) ** 2
    k = G.dim
    cocycles = []
    for i in range(n):
        arr, d = _normalize(prod[i], int(dens2[i]))
        if d == 1 and _is_identity_tensor(arr, k):
            cocycles.append(i)
    # coboundaries: a^-1 conj(a)
    inv_arr = G.elements[G.inverse]
    inv_den = G.dens[G.inverse].astype(object)
    cb = np.einsum("nika,nkjb,abc->nijc", inv_arr, conj_arr, MULT)
    cbd = inv_den * G.dens.astype(object)
    boundaries = set()
    for i in range(n):
        arr, d = _normalize(cb[i], int(cbd[i]))
        boundaries.add(_key(arr, d))
    for i in cocycles:
        if G.key_of(i) not in boundaries:
            return False
    return True


def _is_identity_tensor(arr: np.ndarray, k: int) -> bool:
    for i in range(k):
        for j in range(k):
            want = 1 if i == j else 0
            if arr[i, j, 0] != want or arr[i, j, 1:].any():
                return False
    return True


# ---------------------------------------------------------------------------
# GammaGroup description files
# ---------------------------------------------------------------------------

def parse_gamma_group(text: str) -> GammaGroup:
    """Sections: [finite] matrix lines; [torus] rank/involution/embedding;
    [sigma] plain | twist <name>; matrices inline in the scalar grammar.

    Matrix syntax: `name = [[...],[...]]` with scalar-grammar entries;
    `generators = name1, name2` picks the finite generators.
    """
    section = None
    matrices: Dict[str, CycMatrix] = {}
    gen_names: List[str] = []
    torus_rank = 0
    invol: Optional[List[List[int]]] = None
    embed: Optional[List[List[int]]] = None
    sigma_kind = "plain"
    twist_name = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            section = line.strip("[]").lower()
            continue
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if section == "finite":
            if key == "generators":
                gen_names = [v.strip() for v in val.split(",")]
            else:
                matrices[key] = _parse_matrix(val)
        elif section == "torus":
            if key == "rank":
                torus_rank = int(val)
            elif key == "involution":
                invol = _parse_int_matrix(val)
            elif key == "embedding":
                embed = _parse_int_matrix(val)
        elif section == "sigma":
            if key == "kind" or key == "sigma" or key == "":
                parts = val.split() if val else key.split()
                if parts[0] == "plain":
                    sigma_kind = "plain"
                elif parts[0] == "twist":
                    sigma_kind = "twist"
                    twist_name = parts[1]
            elif key == "plain":
                sigma_kind = "plain"
            elif key == "twist":
                sigma_kind = "twist"
                twist_name = val
    torus = None
    if invol is not None:
        torus = TorusPart(rank=torus_rank or len(invol), involution=invol, embedding=embed)
    G = GammaGroup(
        finite_generators=[matrices[n] for n in gen_names] if gen_names else [],
        torus=torus,
        sigma_kind=sigma_kind,
        twist=matrices.get(twist_name) if twist_name else None,
    )
    return G


def _parse_matrix(text: str) -> CycMatrix:
    text = text.strip()
    assert text.startswith("[[") and text.endswith("]]"), "matrix syntax [[..],[..]]"
    inner = text[2:-2]
    rows = inner.split("],[")
    return [[parse_scalar(x.strip()) for x in row.split(",")] for row in rows]


def _parse_int_matrix(text: str) -> List[List[int]]:
    M = _parse_matrix(text)
    return [[int(x.rational_value()) for x in row] for row in M]
