"""The 248-dimensional graded Lie algebra behind the trivector action.

Constructs the E8 root system on Z^9/<all-ones> with its three-piece grading
(Phi_0 of size 72, Phi_1 and Phi_-1 of size 84 each), a Chevalley basis with
deterministic signs from a bimultiplicative sign form, the bracket table and
Killing form, the isomorphism psi: sl(9) -> degree-0 part, and the
equivariant identification of the degree-1 part with wedge^3 k^9 anchored at
x_{alpha8} -> e678.

Everything is exact; the algebra is built once and immutable.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .scalar import Cyc, ONE, ZERO
from .linalg import SparseIntMat, inverse_frac, frac_mat
from .trivector import Trivector, TRIPLES, TRIPLE_INDEX, inf_action, sort_triple

Root = Tuple[int, ...]  # canonical 9-tuple representative


def _canon(v: Sequence[int]) -> Root:
    """Canonical representative mod the all-ones vector: entries in {-1,0,1},
    coordinate sum in {0, 3, -3}."""
    v = list(v)
    for k in range(min(v), max(v) + 1):
        w = [x - k for x in v]
        if all(x in (-1, 0, 1) for x in w) and sum(w) in (-3, 0, 3):
            return tuple(w)
    raise ValueError(f"not a root representative: {v}")


def _inner(u: Sequence[int], v: Sequence[int]) -> Fraction:
    d = sum(a * b for a, b in zip(u, v))
    return Fraction(d) - Fraction(sum(u) * sum(v), 9)


def _root_degree(v: Root) -> int:
    s = sum(v)
    return {0: 0, 3: 1, -3: -1}[s]


def _build_roots() -> List[Root]:
    roots = []
    for i in range(9):
        for j in range(9):
            if i != j:
                v = [0] * 9
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
    from itertools import combinations

    for trip in combinations(range(9), 3):
        v = [0] * 9
        for t in trip:
            v[t] = 1
        roots.append(tuple(v))
        roots.append(tuple(-x for x in v))
    return roots


SIMPLE_ROOTS: List[Root] = [
    _canon([1, -1, 0, 0, 0, 0, 0, 0, 0]),
    _canon([0, 1, -1, 0, 0, 0, 0, 0, 0]),
    _canon([0, 0, 1, -1, 0, 0, 0, 0, 0]),
    _canon([0, 0, 0, 1, -1, 0, 0, 0, 0]),
    _canon([0, 0, 0, 0, 1, -1, 0, 0, 0]),
    _canon([0, 0, 0, 0, 0, 1, -1, 0, 0]),
    _canon([0, 0, 0, 0, 0, 0, 1, -1, 0]),
    _canon([0, 0, 0, 0, 0, 1, 1, 1, 0]),
]

A8_EXTRA_ROOT: Root = _canon([0, 0, 0, 0, 0, 0, 0, 1, -1])  # eps8 - eps9


@dataclass
class GradedRootSystem:
    roots: List[Root]
    degree: Dict[Root, int]
    simple_roots: List[Root]
    a8_root: Root
    alpha_coords: Dict[Root, Tuple[int, ...]]
    theta_star_orbits: List[Tuple[Root, ...]] = field(default_factory=list)

    def height(self, r: Root) -> int:
        return sum(self.alpha_coords[r])


@dataclass
class GradedAlgebra:
    rs: GradedRootSystem
    n: int
    labels: List[str]
    root_of_index: Dict[int, Root]
    index_of_root: Dict[Root, int]
    degree_of_index: List[int]
    g0_indices: List[int]
    g1_indices: List[int]
    gm1_indices: List[int]
    table: Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]]
    killing_h: List[List[Fraction]]  # 8x8 on the Cartan generators
    killing_xx: Dict[Root, Fraction]  # kappa(x_eta, x_{-eta})
    psi_images: Dict[Tuple[int, int], "AlgElement"] = field(default_factory=dict)
    psi_inv_mat: Dict[int, Dict[Tuple[int, int], Fraction]] = field(default_factory=dict)
    g1_images: Dict[Root, Tuple[Fraction, Tuple[int, int, int]]] = field(default_factory=dict)
    g1_iso_mat: Dict[Tuple[int, int, int], Tuple[Fraction, Root]] = field(default_factory=dict)

    # -- element helpers ----------------------------------------------------
    def zero(self) -> "AlgElement":
        return AlgElement(self, {})

    def basis_element(self, idx: int, coeff=ONE) -> "AlgElement":
        c = coeff if isinstance(coeff, Cyc) else Cyc.rational(coeff)
        return AlgElement(self, {idx: c})

    def h(self, k: int) -> "AlgElement":
        """Cartan generator h_{alpha_k}, k = 1..8."""
        return self.basis_element(k - 1)

    def x(self, root: Root) -> "AlgElement":
        return self.basis_element(self.index_of_root[_canon(root)])

    def t_of(self, coords: Sequence[Fraction]) -> "AlgElement":
        """Cartan element with given coordinates in the h_{alpha_k} basis."""
        return AlgElement(self, {k: Cyc.rational(c) for k, c in enumerate(coords) if c})


Triple_t = Tuple[int, int, int]


class AlgElement:
    """Sparse element of the 248-dimensional algebra."""

    __slots__ = ("alg", "coords")

    def __init__(self, alg: GradedAlgebra, coords: Dict[int, Cyc]):
        self.alg = alg
        self.coords = {i: c for i, c in coords.items() if not c.is_zero()}

    def __add__(self, other: "AlgElement") -> "AlgElement":
        out = dict(self.coords)
        for i, c in other.coords.items():
            out[i] = out.get(i, ZERO) + c
        return AlgElement(self.alg, out)

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + (-other)

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.alg, {i: -c for i, c in self.coords.items()})

    def scale(self, s) -> "AlgElement":
        if not isinstance(s, Cyc):
            s = Cyc.rational(s)
        return AlgElement(self.alg, {i: c * s for i, c in self.coords.items()})

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def is_zero(self) -> bool:
        return not self.coords

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coords.values())

    def conj(self) -> "AlgElement":
        return AlgElement(self.alg, {i: c.conj() for i, c in self.coords.items()})

    def degree_part(self, d: int) -> "AlgElement":
        deg = self.alg.degree_of_index
        return AlgElement(self.alg, {i: c for i, c in self.coords.items() if deg[i] == d})

    def is_degree_pure(self, d: int) -> bool:
        deg = self.alg.degree_of_index
        return all(deg[i] == d for i in self.coords)

    def dense(self) -> List[Cyc]:
        return [self.coords.get(i, ZERO) for i in range(self.alg.n)]

    def __repr__(self):
        alg = self.alg
        parts = [f"{c}*{alg.labels[i]}" for i, c in sorted(self.coords.items())]
        return "AlgElement(" + " + ".join(parts[:8]) + (" + ..." if len(parts) > 8 else "") + ")"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def _alpha_coordinates(roots: List[Root]) -> Dict[Root, Tuple[int, ...]]:
    """Integer coordinates of every root on the simple-root basis."""
    cols = [list(a) for a in SIMPLE_ROOTS] + [[1] * 9]
    M = frac_mat([[cols[j][i] for j in range(9)] for i in range(9)])
    Minv = inverse_frac(M)
    out = {}
    for r in roots:
        sol = [sum(Minv[i][j] * r[j] for j in range(9)) for i in range(9)]
        coords = tuple(int(x) for x in sol[:8])
        assert all(Fraction(c) == s for c, s in zip(coords, sol[:8]))
        out[r] = coords
    return out


def _epsilon_form() -> List[List[int]]:
    """Upper-triangular mod-2 matrix defining the sign form on the lattice."""
    E = [[0] * 8 for _ in range(8)]
    for i in range(8):
        E[i][i] = 1
        for j in range(i + 1, 8):
            E[i][j] = int(_inner(SIMPLE_ROOTS[i], SIMPLE_ROOTS[j])) % 2
    return E


def _label(root: Root) -> str:
    deg = _root_degree(root)
    if deg == 0:
        i = root.index(1) + 1
        j = root.index(-1) + 1
        return f"x[{i}-{j}]"
    idx = "".join(str(i + 1) for i, v in enumerate(root) if v != 0)
    return f"x[{idx}]" if deg == 1 else f"x[-{idx}]"


def _build_algebra() -> GradedAlgebra:
    roots = _build_roots()
    alpha_coords = _alpha_coordinates(roots)
    heights = {r: sum(alpha_coords[r]) for r in roots}
    roots.sort(key=lambda r: (heights[r], r))
    degree = {r: _root_degree(r) for r in roots}

    rs = GradedRootSystem(
        roots=roots,
        degree=degree,
        simple_roots=list(SIMPLE_ROOTS),
        a8_root=A8_EXTRA_ROOT,
        alpha_coords=alpha_coords,
    )
    rs.theta_star_orbits = _theta_orbits(rs)

    n = 8 + len(roots)
    labels = [f"h[{k}]" for k in range(1, 9)] + [_label(r) for r in roots]
    index_of_root = {r: 8 + i for i, r in enumerate(roots)}
    root_of_index = {8 + i: r for i, r in enumerate(roots)}
    degree_of_index = [0] * 8 + [degree[r] for r in roots]

    E = _epsilon_form()
    rootset = set(roots)

    def eps(a: Root, b: Root) -> int:
        ca, cb = alpha_coords[a], alpha_coords[b]
        s = 0
        for i in range(8):
            if ca[i]:
                for j in range(8):
                    if E[i][j] and cb[j]:
                        s += ca[i] * cb[j]
        return -1 if s % 2 else 1

    table: Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]] = {}

    # [h_k, x_eta]
    for r in roots:
        ir = index_of_root[r]
        for k in range(8):
            v = _inner(r, SIMPLE_ROOTS[k])
            if v:
                table[(k, ir)] = (((ir, int(v)),))
                table[(ir, k)] = (((ir, -int(v)),))
    # [x_eta, x_mu]
    for a in roots:
        ia = index_of_root[a]
        ca = alpha_coords[a]
        for b in roots:
            ib = index_of_root[b]
            if ib < ia:
                continue
            s = tuple(x + y for x, y in zip(a, b))
            if all(x == 0 for x in s):
                ent = tuple((k, -ca[k]) for k in range(8) if ca[k])
                table[(ia, ib)] = ent
                table[(ib, ia)] = tuple((k, -v) for k, v in ent)
                continue
            try:
                c = _canon(s)
            except ValueError:
                continue
            if c in rootset:
                e = eps(a, b)
                ic = index_of_root[c]
                table[(ia, ib)] = ((ic, e),)
                table[(ib, ia)] = ((ic, -e),)

    # Killing form: kappa(t_l, t_m) = sum_eta <eta,l><eta,m>; kappa(x,x_-) by
    # the sparse trace of ad x_eta ad x_{-eta}.
    killing_h = [[Fraction(0)] * 8 for _ in range(8)]
    for i in range(8):
        for j in range(i, 8):
            v = sum(_inner(r, SIMPLE_ROOTS[i]) * _inner(r, SIMPLE_ROOTS[j]) for r in roots)
            killing_h[i][j] = v
            killing_h[j][i] = v

    alg = GradedAlgebra(
        rs=rs,
        n=n,
        labels=labels,
        root_of_index=root_of_index,
        index_of_root=index_of_root,
        degree_of_index=degree_of_index,
        g0_indices=[i for i in range(n) if degree_of_index[i] == 0],
        g1_indices=[i for i in range(n) if degree_of_index[i] == 1],
        gm1_indices=[i for i in range(n) if degree_of_index[i] == -1],
        table=table,
        killing_h=killing_h,
        killing_xx={},
    )

    for r in roots:
        alg.killing_xx[r] = _kappa_xx(alg, r)

    _build_psi(alg)
    _build_g1_iso(alg)
    return alg


def _kappa_xx(alg: GradedAlgebra, r: Root) -> Fraction:
    """trace(ad x_r ad x_{-r}), computed sparsely and exactly."""
    ir = alg.index_of_root[r]
    im = alg.index_of_root[_canon([-x for x in r])]
    tr = Fraction(0)
    for b in range(alg.n):
        ent1 = alg.table.get((im, b))
        if not ent1:
            continue
        for (m, c1) in ent1:
            ent2 = alg.table.get((ir, m))
            if not ent2:
                continue
            for (k, c2) in ent2:
                if k == b:
                    tr += c1 * c2
    return tr


def _theta_orbits(rs: GradedRootSystem) -> List[Tuple[Root, ...]]:
    """Partition of the 240 roots into 40 A2-hexads via a fixed-point-free
    order-3 isometry (product of rotations of four orthogonal A2 systems)."""

    def refl(eta: Root, v: Root) -> Root:
        c = _inner(v, eta)
        return _canon([x - int(c) * y for x, y in zip(v, eta)])

    pairs = [
        (_canon([1, -1, 0, 0, 0, 0, 0, 0, 0]), _canon([0, 1, -1, 0, 0, 0, 0, 0, 0])),
        (_canon([0, 0, 0, 1, -1, 0, 0, 0, 0]), _canon([0, 0, 0, 0, 1, -1, 0, 0, 0])),
        (_canon([0, 0, 0, 0, 0, 0, 1, -1, 0]), _canon([0, 0, 0, 0, 0, 0, 0, 1, -1])),
        (_canon([1, 1, 1, 0, 0, 0, 0, 0, 0]), _canon([0, 0, 0, 1, 1, 1, 0, 0, 0])),
    ]

    def rho(v: Root) -> Root:
        for b, g in pairs:
            v = refl(g, refl(b, v))
        return v

    seen = set()
    orbits = []
    for r in rs.roots:
        if r in seen:
            continue
        o = {r, _canon([-x for x in r])}
        cur = r
        for _ in range(2):
            cur = rho(cur)
            o.add(cur)
            o.add(_canon([-x for x in cur]))
        if len(o) != 6:
            raise AssertionError("theta-star orbit is not a hexad")
        orbits.append(tuple(sorted(o)))
        seen |= o
    return orbits


# ---------------------------------------------------------------------------
# bracket / ad / killing on elements
# ---------------------------------------------------------------------------

def bracket(x: AlgElement, y: AlgElement) -> AlgElement:
    alg = x.alg
    table = alg.table
    out: Dict[int, Cyc] = {}
    for i, ci in x.coords.items():
        for j, cj in y.coords.items():
            ent = table.get((i, j))
            if not ent:
                continue
            s = ci * cj
            for (k, n) in ent:
                cur = out.get(k, ZERO) + s * n
                if cur.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = cur
    return AlgElement(alg, out)


def ad_sparse(x: AlgElement) -> SparseIntMat:
    """Sparse integer matrix of ad x (columns indexed by the basis).

    Requires rational coordinates; the common denominator is factored out.
    """
    alg = x.alg
    den = 1
    for c in x.coords.values():
        q = c.rational_value()
        den = den * q.denominator // __import__("math").gcd(den, q.denominator)
    rows: List[int] = []
    cols: List[int] = []
    vals: List[int] = []
    for i, ci in x.coords.items():
        q = ci.rational_value()
        scaled = int(q * den)
        for j in range(alg.n):
            ent = alg.table.get((i, j))
            if not ent:
                continue
            for (k, n) in ent:
                rows.append(k)
                cols.append(j)
                vals.append(scaled * n)
    return SparseIntMat(alg.n, rows, cols, vals, den)


def ad_matrix(x: AlgElement) -> List[List[Cyc]]:
    """Dense matrix of ad x over the field (columns = basis images)."""
    alg = x.alg
    out = [[ZERO] * alg.n for _ in range(alg.n)]
    for i, ci in x.coords.items():
        for j in range(alg.n):
            ent = alg.table.get((i, j))
            if not ent:
                continue
            for (k, n) in ent:
                out[k][j] = out[k][j] + ci * n
    return out


def killing(alg: GradedAlgebra, x: AlgElement, y: AlgElement) -> Cyc:
    acc = ZERO
    for i, ci in x.coords.items():
        for j, cj in y.coords.items():
            if i < 8 and j < 8:
                v = alg.killing_h[i][j]
                if v:
                    acc = acc + ci * cj * Cyc.rational(v)
            elif i >= 8 and j >= 8:
                ri = alg.root_of_index[i]
                rj = alg.root_of_index[j]
                if all(a + b == 0 for a, b in zip(ri, rj)):
                    acc = acc + ci * cj * Cyc.rational(alg.killing_xx[ri])
    return acc


# ---------------------------------------------------------------------------
# psi: sl(9) <-> g0
# ---------------------------------------------------------------------------

def _build_psi(alg: GradedAlgebra) -> None:
    """Images of the matrix units E_ab under psi, and the inverse matrix."""
    a8 = list(SIMPLE_ROOTS[:7]) + [A8_EXTRA_ROOT]

    def eij_root(a: int, b: int) -> Root:
        v = [0] * 9
        v[a - 1], v[b - 1] = 1, -1
        return _canon(v)

    images: Dict[Tuple[int, int], AlgElement] = {}
    for i in range(1, 9):
        images[(i, i + 1)] = alg.x(a8[i - 1])
        images[(i + 1, i)] = -alg.x(_canon([-v for v in a8[i - 1]]))

    def image(a: int, b: int) -> AlgElement:
        if (a, b) in images:
            return images[(a, b)]
        if a < b:
            out = bracket(image(a, a + 1), image(a + 1, b))
        else:
            out = bracket(image(a, b + 1), image(b + 1, b))
        images[(a, b)] = out
        return out

    for a in range(1, 10):
        for b in range(1, 10):
            if a != b:
                image(a, b)

    # diag part: psi(E_ii - E_{i+1,i+1}) = t_{alpha_i^A}
    cols = [list(r) for r in SIMPLE_ROOTS] + [[1] * 9]
    M = frac_mat([[cols[j][i] for j in range(9)] for i in range(9)])
    Minv = inverse_frac(M)
    for i in range(1, 9):
        v = [0] * 9
        v[i - 1], v[i] = 1, -1
        coords = [sum(Minv[r][c] * v[c] for c in range(9)) for r in range(8)]
        images[(i, i)] = alg.t_of(coords)  # stands for E_ii - E_{i+1,i+1}

    alg.psi_images = images

    # inverse: express the 80 basis vectors of g0 in sl(9)
    # root vectors: psi(E_ab) = sign * x_{eps_a - eps_b}
    inv_entries: Dict[int, Dict[Tuple[int, int], Fraction]] = {}
    for a in range(1, 10):
        for b in range(1, 10):
            if a == b:
                continue
            img = images[(a, b)]
            (idx, coef), = img.coords.items()
            q = coef.rational_value()
            inv_entries.setdefault(idx, {})[(a, b)] = 1 / q
    # Cartan: h_k = t_{alpha_k} -> diagonal matrix: solve from the 8 images
    # psi(h_k) should be sum over i of c_i (E_ii - E_{i+1,i+1}) with
    # t_{alpha_k} = sum c_i t_{alpha_i^A}; compute alpha_k on the A8 basis.
    a8cols = [list(r) for r in a8] + [[1] * 9]
    MA = frac_mat([[a8cols[j][i] for j in range(9)] for i in range(9)])
    MAinv = inverse_frac(MA)
    for k in range(8):
        v = list(SIMPLE_ROOTS[k])
        coords = [sum(MAinv[r][c] * v[c] for c in range(9)) for r in range(8)]
        diag: Dict[Tuple[int, int], Fraction] = {}
        for i in range(1, 9):
            c = coords[i - 1]
            if c:
                diag[(i, i)] = diag.get((i, i), Fraction(0)) + c
                diag[(i + 1, i + 1)] = diag.get((i + 1, i + 1), Fraction(0)) - c
        inv_entries[k] = {kk: vv for kk, vv in diag.items() if vv}
    alg.psi_inv_mat = inv_entries


def psi(alg: GradedAlgebra, X: Sequence[Sequence]) -> AlgElement:
    """Lie algebra map sl(9) -> g0 (traceless 9x9 matrices only)."""
    rows = [[x if isinstance(x, Cyc) else Cyc.rational(x) for x in row] for row in X]
    tr = rows[0][0]
    for i in range(1, 9):
        tr = tr + rows[i][i]
    if not tr.is_zero():
        raise ValueError("psi needs a trace-zero matrix")
    out = alg.zero()
    for a in range(1, 10):
        for b in range(1, 10):
            if a != b and not rows[a - 1][b - 1].is_zero():
                out = out + alg.psi_images[(a, b)].scale(rows[a - 1][b - 1])
    # diagonal: d = sum_i partial (E_ii - E_{i+1,i+1}) with partial sums
    acc = ZERO
    for i in range(1, 9):
        acc = acc + rows[i - 1][i - 1]
        if not acc.is_zero():
            out = out + alg.psi_images[(i, i)].scale(acc)
    return out


def psi_inv(alg: GradedAlgebra, x: AlgElement) -> List[List[Cyc]]:
    """Inverse of psi on g0; raises if x has nonzero degree +-1 parts."""
    if not x.is_degree_pure(0):
        raise ValueError("psi_inv requires a pure degree-0 element")
    out = [[ZERO] * 9 for _ in range(9)]
    ent = alg.psi_inv_mat
    for idx, c in x.coords.items():
        for (a, b), q in ent[idx].items():
            out[a - 1][b - 1] = out[a - 1][b - 1] + c * Cyc.rational(q)
    return out


# ---------------------------------------------------------------------------
# g1 <-> wedge^3
# ---------------------------------------------------------------------------

def _build_g1_iso(alg: GradedAlgebra) -> None:
    """Propagate the anchor x_{alpha8} -> e678 equivariantly to all of g1."""
    anchor = SIMPLE_ROOTS[7]
    images: Dict[Root, Tuple[Fraction, Triple_t]] = {_canon(anchor): (Fraction(1), (6, 7, 8))}

    deg1 = [r for r in alg.rs.roots if alg.rs.degree[r] == 1]
    pending = set(deg1) - set(images)
    deg0 = [r for r in alg.rs.roots if alg.rs.degree[r] == 0]

    def support(r: Root) -> Triple_t:
        return tuple(i + 1 for i, v in enumerate(r) if v == 1)  # type: ignore[return-value]

    progress = True
    while pending and progress:
        progress = False
        for target in list(pending):
            for d in deg0:
                try:
                    src = _canon([a - b for a, b in zip(target, d)])
                except ValueError:
                    continue
                if sum(abs(v) for v in src) != 3 or sum(src) != 3:
                    continue
                if src not in images:
                    continue
                # x_target = [x_d, x_src] / eps(d, src)
                id_, isrc = alg.index_of_root[d], alg.index_of_root[src]
                ent = alg.table.get((id_, isrc))
                if not ent:
                    continue
                (itgt, e) = ent[0]
                assert alg.root_of_index[itgt] == target
                # matrix of x_d under psi_inv: sign * E_ab
                a = d.index(1) + 1
                b = d.index(-1) + 1
                (q_ab,) = alg.psi_inv_mat[id_].values()
                sgn_src, tri_src = images[src]
                # inf_action(E_ab) on e_{tri_src}
                tv = inf_action(_eab_matrix(a, b), Trivector({tri_src: ONE}))
                (tri_tgt, cv), = tv.coeffs.items()
                coeff = sgn_src * q_ab * cv.rational_value() / e
                assert tri_tgt == support(target)
                images[target] = (coeff, tri_tgt)
                pending.discard(target)
                progress = True
                break
    if pending:
        raise AssertionError("g1 propagation did not reach every root")
    alg.g1_images = images
    alg.g1_iso_mat = {tri: (Fraction(1) / c, r) for r, (c, tri) in images.items()}


def _eab_matrix(a: int, b: int) -> List[List[int]]:
    M = [[0] * 9 for _ in range(9)]
    M[a - 1][b - 1] = 1
    return M


def g1_iso(alg: GradedAlgebra, t: Trivector) -> AlgElement:
    """The equivariant identification wedge^3 k^9 -> g1."""
    out: Dict[int, Cyc] = {}
    for tri, c in t.coeffs.items():
        q, root = alg.g1_iso_mat[tri]
        out[alg.index_of_root[root]] = c * Cyc.rational(q)
    return AlgElement(alg, out)


def g1_iso_inv(alg: GradedAlgebra, x: AlgElement) -> Trivector:
    if not x.is_degree_pure(1):
        raise ValueError("g1_iso_inv requires a pure degree-1 element")
    out: Dict[Triple_t, Cyc] = {}
    for idx, c in x.coords.items():
        root = alg.root_of_index[idx]
        q, tri = alg.g1_images[root]
        out[tri] = c * Cyc.rational(q)
    return Trivector(out)


def gm1_iso_inv(alg: GradedAlgebra, x: AlgElement) -> Trivector:
    """Coordinates of a degree-(-1) element on the dual wedge basis, via the
    pairing x_{-eta} <-> e_support(eta); used only for readable reports."""
    if not x.is_degree_pure(-1):
        raise ValueError("needs a pure degree-(-1) element")
    out: Dict[Triple_t, Cyc] = {}
    for idx, c in x.coords.items():
        root = alg.root_of_index[idx]
        tri = tuple(i + 1 for i, v in enumerate(root) if v == -1)
        out[tri] = c  # type: ignore[index]
    return Trivector(out)


# ---------------------------------------------------------------------------
# dump + build
# ---------------------------------------------------------------------------

def dump_structure(alg: GradedAlgebra) -> str:
    """Line records of the bracket table, byte-stable across runs."""
    lines = []
    for i in range(alg.n):
        for j in range(alg.n):
            ent = alg.table.get((i, j))
            if not ent:
                continue
            rhs = " + ".join(
                (f"{n}*{alg.labels[k]}" if n != 1 else alg.labels[k]) for k, n in ent
            )
            lines.append(f"[{alg.labels[i]},{alg.labels[j]}] = {rhs}")
    return "\n".join(lines) + "\n"


@functools.lru_cache(maxsize=1)
def build() -> Tuple[GradedRootSystem, GradedAlgebra]:
    alg = _build_algebra()
    return alg.rs, alg
