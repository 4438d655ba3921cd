"""Batched enumeration of finite matrix groups over Q(zeta12).

Elements are 4x4 (or kxk) matrices with entries in Q(zeta12), encoded as
integer numpy tensors of shape (k, k, 4) (coordinates on the power basis of
zeta12) together with one global denominator per element.  Products are
einsum contractions against the field's multiplication tensor, so breadth-
first closure of a 155520-element group runs in numpy batches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .scalar import Cyc

# zeta^a * zeta^b = sum_c MULT[a, b, c] zeta^c  (power basis, mod Phi_12)
_POW = {0: (1, 0, 0, 0), 1: (0, 1, 0, 0), 2: (0, 0, 1, 0), 3: (0, 0, 0, 1),
        4: (-1, 0, 1, 0), 5: (0, -1, 0, 1), 6: (-1, 0, 0, 0)}
MULT = np.zeros((4, 4, 4), dtype=np.int64)
for a in range(4):
    for b in range(4):
        MULT[a, b] = _POW[a + b]

# conj on power coordinates
CONJ = np.array([[1, 0, 0, 0], [0, 1, 0, -1], [1, 0, -1, 0], [0, 0, 0, -1]],
                dtype=np.int64).T  # acts on the last axis: new = old @ CONJ.T


def encode_matrix(M: Sequence[Sequence[Cyc]]) -> Tuple[np.ndarray, int]:
    k = len(M)
    den = 1
    for row in M:
        for x in row:
            for q in x.c:
                den = den * q.denominator // math.gcd(den, q.denominator)
    arr = np.zeros((k, k, 4), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            for a in range(4):
                arr[i, j, a] = int(M[i][j].c[a] * den)
    return arr, den


def decode_matrix(arr: np.ndarray, den: int) -> List[List[Cyc]]:
    k = arr.shape[0]
    return [[Cyc([Fraction(int(arr[i, j, a]), den) for a in range(4)])
             for j in range(k)] for i in range(k)]


def _normalize(arr: np.ndarray, den: int) -> Tuple[np.ndarray, int]:
    g = int(np.gcd.reduce(np.abs(arr), axis=None))
    g = math.gcd(g, den)
    if g > 1:
        arr = arr // g
        den //= g
    return arr, den


def _key(arr: np.ndarray, den: int) -> bytes:
    return den.to_bytes(8, "little", signed=False) + arr.tobytes()


def mul_single(A: np.ndarray, dA: int, B: np.ndarray, dB: int) -> Tuple[np.ndarray, int]:
    C = np.einsum("ika,kjb,abc->ijc", A, B, MULT)
    return _normalize(C, dA * dB)


def mul_batch(F: np.ndarray, dF: np.ndarray, B: np.ndarray, dB: int):
    """(n,k,k,4) batch times one element; returns un-normalized batch."""
    C = np.einsum("nika,kjb,abc->nijc", F, B, MULT)
    return C, dF * dB


def conj_batch(F: np.ndarray) -> np.ndarray:
    return np.einsum("nija,ab->nijb", F, CONJ.T)


@dataclass
class MatrixGroup:
    """A fully enumerated finite matrix group over Q(zeta12)."""

    dim: int
    elements: np.ndarray  # (n, k, k, 4) int64
    dens: np.ndarray      # (n,) int64
    index: Dict[bytes, int]
    inverse: Optional[np.ndarray] = None  # permutation: inverse[i] = index of g_i^-1

    @property
    def order(self) -> int:
        return len(self.dens)

    def key_of(self, i: int) -> bytes:
        return _key(self.elements[i], int(self.dens[i]))

    def lookup(self, arr: np.ndarray, den: int) -> int:
        arr, den = _normalize(arr, den)
        return self.index[_key(arr, den)]

    def matrix(self, i: int) -> List[List[Cyc]]:
        return decode_matrix(self.elements[i], int(self.dens[i]))

    def identity_index(self) -> int:
        k = self.dim
        eye = np.zeros((k, k, 4), dtype=np.int64)
        for i in range(k):
            eye[i, i, 0] = 1
        return self.index[_key(eye, 1)]

    def mul(self, i: int, j: int) -> int:
        C, d = mul_single(self.elements[i], int(self.dens[i]),
                          self.elements[j], int(self.dens[j]))
        return self.index[_key(C, d)]

    def inv(self, i: int) -> int:
        assert self.inverse is not None
        return int(self.inverse[i])

    def conj_index(self, i: int) -> int:
        """Index of the entrywise complex conjugate of element i."""
        arr = np.einsum("ija,ab->ijb", self.elements[i], CONJ.T)
        arr, d = _normalize(arr, int(self.dens[i]))
        return self.index[_key(arr, d)]


def close_group(generators: Sequence[Sequence[Sequence[Cyc]]],
                limit: int = 10**6, batch: int = 50000) -> MatrixGroup:
    """Breadth-first closure under multiplication; exact; raises past limit."""
    if not generators:
        raise ValueError("need at least one generator")
    k = len(generators[0])
    gens = [encode_matrix(g) for g in generators]
    eye = np.zeros((k, k, 4), dtype=np.int64)
    for i in range(k):
        eye[i, i, 0] = 1
    elements = [eye]
    dens = [1]
    index = {_key(eye, 1): 0}
    frontier = [0]
    for arr, d in gens:
        arr, d = _normalize(arr, d)
        ky = _key(arr, d)
        if ky not in index:
            index[ky] = len(elements)
            elements.append(arr)
            dens.append(d)
            frontier.append(index[ky])
    while frontier:
        new_frontier: List[int] = []
        farr = np.stack([elements[i] for i in frontier])
        fden = np.array([dens[i] for i in frontier], dtype=np.int64)
        for (garr, gden) in gens:
            prod, pden = mul_batch(farr, fden, garr, gden)
            for t in range(prod.shape[0]):
                arr, d = _normalize(prod[t], int(pden[t]))
                ky = _key(arr, d)
                if ky not in index:
                    idx = len(elements)
                    if idx >= limit:
                        raise RuntimeError("group closure exceeded safety bound")
                    index[ky] = idx
                    elements.append(arr)
                    dens.append(d)
                    new_frontier.append(idx)
        frontier = new_frontier
    G = MatrixGroup(dim=k,
                    elements=np.stack(elements),
                    dens=np.array(dens, dtype=np.int64),
                    index=index)
    _fill_inverses(G)
    return G


def _fill_inverses(G: MatrixGroup) -> None:
    """Inverses by batched binary powering g^(order-1)."""
    n = G.order
    e = G.order - 1
    k = G.dim
    eye = np.zeros((k, k, 4), dtype=np.int64)
    for i in range(k):
        eye[i, i, 0] = 1
    acc = np.broadcast_to(eye, (n, k, k, 4)).copy()
    accd = np.ones(n, dtype=object)
    base = G.elements.copy()
    based = np.array([int(d) for d in G.dens], dtype=object)
    while e:
        if e & 1:
            acc = np.einsum("nika,nkjb,abc->nijc", acc, base, MULT)
            accd = accd * based
            acc, accd = _normalize_batch(acc, accd)
        e >>= 1
        if e:
            base = np.einsum("nika,nkjb,abc->nijc", base, base, MULT)
            based = based * based
            base, based = _normalize_batch(base, based)
    inv = np.zeros(n, dtype=np.int64)
    for i in range(n):
        inv[i] = G.index[_key(acc[i], int(accd[i]))]
    G.inverse = inv


def _normalize_batch(arr: np.ndarray, dens: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    n = arr.shape[0]
    out = arr.copy()
    dout = dens.copy()
    for i in range(n):
        g = int(np.gcd.reduce(np.abs(out[i]), axis=None))
        g = math.gcd(g, int(dout[i]))
        if g > 1:
            out[i] //= g
            dout[i] = int(dout[i]) // g
    return out, dout


# group-theory helpers on enumerated groups ---------------------------------

def fix_subgroup(G: MatrixGroup, vec: Sequence[Cyc]) -> List[int]:
    """Indices of elements fixing a column vector (over Q(zeta12))."""
    den = 1
    for x in vec:
        for q in x.c:
            den = den * q.denominator // math.gcd(den, q.denominator)
    v = np.zeros((len(vec), 4), dtype=np.int64)
    for i, x in enumerate(vec):
        for a in range(4):
            v[i, a] = int(x.c[a] * den)
    # w fixes v  iff  M v = d v where M/d is the element
    prod = np.einsum("nika,kb,abc->nic", G.elements, v, MULT)
    target = np.einsum("n,ic->nic", G.dens, v)
    eq = (prod == target).all(axis=(1, 2))
    return [int(i) for i in np.nonzero(eq)[0]]


def fixed_space_dim(G: MatrixGroup, idxs: Iterable[int]) -> int:
    """Dimension of the common fixed space of a set of elements."""
    from .linalg import kernel_cyc
    from .scalar import ZERO, ONE

    rows: List[List[Cyc]] = []
    k = G.dim
    for i in idxs:
        M = G.matrix(i)
        for r in range(k):
            row = [M[r][c] - (ONE if r == c else ZERO) for c in range(k)]
            if any(not x.is_zero() for x in row):
                rows.append(row)
    if not rows:
        return k
    return len(kernel_cyc(rows))


def conjugacy_orbit(G: MatrixGroup, start: int, gens: Sequence[int]) -> set:
    """Orbit of an element under conjugation by given generator indices."""
    assert G.inverse is not None
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for g in gens:
            y = G.mul(G.mul(g, x), G.inv(g))
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def normalizer_of_subgroup(G: MatrixGroup, sub: Sequence[int]) -> List[int]:
    """Elements v with v S v^-1 = S, computed by permutation of S's set."""
    assert G.inverse is not None
    subset = set(sub)
    out = []
    n = G.order
    sub_list = list(sub)
    # batched: for each s in sub, compute v s v^-1 for all v
    ok = np.ones(n, dtype=bool)
    for s in sub_list:
        sarr, sden = G.elements[s], int(G.dens[s])
        left, ld = mul_batch(G.elements, G.dens.astype(object), sarr, sden)
        # multiply by v^-1 on the right, elementwise
        invperm = G.inverse
        invarr = G.elements[invperm]
        invden = G.dens[invperm].astype(object)
        full = np.einsum("nika,nkjb,abc->nijc", left, invarr, MULT)
        fulld = ld * invden
        for i in range(n):
            if not ok[i]:
                continue
            arr, d = _normalize(full[i], int(fulld[i]))
            if G.index[_key(arr, d)] not in subset:
                ok[i] = False
    return [int(i) for i in np.nonzero(ok)[0]]
