"""Trivectors of a 9-dimensional space: wedge^3 k^9 with exact coefficients.

Coefficients are indexed by triples (i,j,k), 1 <= i < j < k <= 9, on the
basis e_ijk = e_i ^ e_j ^ e_k.  Provides the expression grammar, the GL(9)
action on wedge^3, its infinitesimal gl(9) version, and the rank (minimal
dimension of a subspace U with t in wedge^3 U).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from .scalar import Cyc, ONE, ZERO, ScalarParseError, _Tok, _parse_scalar, format_scalar
from .linalg import rref_field

Triple = Tuple[int, int, int]

TRIPLES: List[Triple] = [t for t in combinations(range(1, 10), 3)]
TRIPLE_INDEX: Dict[Triple, int] = {t: i for i, t in enumerate(TRIPLES)}

PAIRS: List[Tuple[int, int]] = [p for p in combinations(range(1, 10), 2)]
PAIR_INDEX = {p: i for i, p in enumerate(PAIRS)}


def sort_triple(i: int, j: int, k: int) -> Tuple[int, Triple]:
    """Sort indices; return (sign, sorted triple); sign 0 on a repeat."""
    if i == j or j == k or i == k:
        return 0, (0, 0, 0)
    sign = 1
    a, b, c = i, j, k
    if a > b:
        a, b, sign = b, a, -sign
    if b > c:
        b, c, sign = c, b, -sign
    if a > b:
        a, b, sign = b, a, -sign
    return sign, (a, b, c)


class Trivector:
    """Element of wedge^3 k^9, k = Q(zeta12); sparse dict of Cyc coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[Triple, Cyc] | None = None):
        self.coeffs = {t: c for t, c in (coeffs or {}).items() if not c.is_zero()}

    @staticmethod
    def basis(i: int, j: int, k: int, coeff=ONE) -> "Trivector":
        sign, t = sort_triple(i, j, k)
        if sign == 0:
            raise ValueError(f"repeated index in e_{i}{j}{k}")
        c = coeff if sign == 1 else -coeff
        if not isinstance(c, Cyc):
            c = Cyc.rational(c)
        return Trivector({t: c})

    def __add__(self, other: "Trivector") -> "Trivector":
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            out[t] = out.get(t, ZERO) + c
        return Trivector(out)

    def __sub__(self, other: "Trivector") -> "Trivector":
        return self + (-other)

    def __neg__(self) -> "Trivector":
        return Trivector({t: -c for t, c in self.coeffs.items()})

    def scale(self, s) -> "Trivector":
        if not isinstance(s, Cyc):
            s = Cyc.rational(s)
        return Trivector({t: c * s for t, c in self.coeffs.items()})

    def __mul__(self, s) -> "Trivector":
        return self.scale(s)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trivector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def conj(self) -> "Trivector":
        return Trivector({t: c.conj() for t, c in self.coeffs.items()})

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs.values())

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs.values())

    def get(self, i: int, j: int, k: int) -> Cyc:
        sign, t = sort_triple(i, j, k)
        if sign == 0:
            return ZERO
        c = self.coeffs.get(t, ZERO)
        return c if sign == 1 else -c

    def dense(self) -> List[Cyc]:
        return [self.coeffs.get(t, ZERO) for t in TRIPLES]

    def __repr__(self):
        return f"Trivector({format_trivector(self)!r})"

    def __str__(self):
        return format_trivector(self)


ZERO_TRIVECTOR = Trivector({})


class TrivectorParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        self.pos = pos
        super().__init__(f"{msg} at position {pos} in {text!r}")


def parse_trivector(text: str) -> Trivector:
    """Parse sums of (scalar*)e_ijk terms; antisymmetry folded into signs."""
    tk = _Tok(text)
    out: Dict[Triple, Cyc] = {}
    first = True
    while True:
        tk.skip_ws()
        if tk.pos >= len(tk.text):
            if first:
                raise TrivectorParseError(text, tk.pos, "empty trivector")
            break
        sign = 1
        if tk.take("+"):
            sign = 1
        elif tk.take("-"):
            sign = -1
        elif not first:
            raise TrivectorParseError(text, tk.pos, "expected + or -")
        first = False
        tk.skip_ws()
        # "0" allowed as the zero trivector (single term only)
        if tk.peek() == "0" and tk.pos + 1 == len(tk.text):
            tk.pos += 1
            break
        coeff = ONE
        if tk.peek() != "e":
            save = tk.pos
            try:
                coeff = _parse_scalar_factor(tk)
            except ScalarParseError as exc:
                raise TrivectorParseError(text, save, str(exc)) from exc
            tk.skip_ws()
            if not tk.take("*"):
                raise TrivectorParseError(text, tk.pos, "expected '*' before e_ijk")
        tk.skip_ws()
        if not tk.take("e"):
            raise TrivectorParseError(text, tk.pos, "expected basis term e_ijk")
        digits = []
        while tk.pos < len(tk.text) and tk.text[tk.pos].isdigit():
            digits.append(int(tk.text[tk.pos]))
            tk.pos += 1
        if len(digits) != 3:
            raise TrivectorParseError(text, tk.pos, "e needs exactly three digits")
        if 0 in digits:
            raise TrivectorParseError(text, tk.pos, "digit 0 is not a valid index")
        if len(set(digits)) != 3:
            raise TrivectorParseError(text, tk.pos, "repeated index in a triple")
        s, t = sort_triple(*digits)
        c = coeff if s * sign == 1 else -coeff
        out[t] = out.get(t, ZERO) + c
    return Trivector(out)


def _at_basis_term(tk: _Tok) -> bool:
    tk.skip_ws()
    s = tk.text
    p = tk.pos
    return p < len(s) and s[p] == "e" and p + 1 < len(s) and s[p + 1].isdigit()


def _parse_scalar_factor(tk: _Tok) -> Cyc:
    """A scalar coefficient: factor ('*' factor)* ('/' nat)?, stopping
    short of the basis term e_ijk."""
    from .scalar import _parse_factor

    v = _parse_factor(tk)
    while True:
        tk.skip_ws()
        if tk.peek() == "*":
            save = tk.pos
            tk.take("*")
            if _at_basis_term(tk):
                tk.pos = save
                break
            v = v * _parse_factor(tk)
        elif tk.peek() == "/":
            save = tk.pos
            tk.take("/")
            if tk.peek().isdigit():
                v = v / tk.natural()
            else:
                tk.pos = save
                break
        else:
            break
    return v


def format_trivector(t: Trivector) -> str:
    if not t.coeffs:
        return "0"
    parts = []
    for trip in TRIPLES:
        if trip not in t.coeffs:
            continue
        c = t.coeffs[trip]
        name = f"e{trip[0]}{trip[1]}{trip[2]}"
        if c == ONE:
            frag, neg = name, False
        elif c == -ONE:
            frag, neg = name, True
        else:
            s = format_scalar(c)
            multi = "+" in s[1:] or "-" in s[1:]
            if multi:
                frag, neg = f"({s})*{name}", False
            elif s.startswith("-"):
                frag, neg = f"{s[1:]}*{name}", True
            else:
                frag, neg = f"{s}*{name}", False
        parts.append(("-" if neg else "+", frag))
    sign0, frag0 = parts[0]
    out = ("-" if sign0 == "-" else "") + frag0
    for sign, frag in parts[1:]:
        out += sign + frag
    return out


# ---------------------------------------------------------------------------
# actions
# ---------------------------------------------------------------------------

def _as_cyc_matrix(g: Sequence[Sequence]) -> List[List[Cyc]]:
    return [[x if isinstance(x, Cyc) else Cyc.rational(x) for x in row] for row in g]


def wedge_action(g: Sequence[Sequence], t: Trivector) -> Trivector:
    """Third exterior power action of an invertible 9x9 matrix."""
    G = _as_cyc_matrix(g)
    out: Dict[Triple, Cyc] = {}
    for (a, b, c), coeff in t.coeffs.items():
        ca = [G[i][a - 1] for i in range(9)]
        cb = [G[i][b - 1] for i in range(9)]
        cc = [G[i][c - 1] for i in range(9)]
        for (i, j, k) in TRIPLES:
            det = (
                ca[i - 1] * (cb[j - 1] * cc[k - 1] - cb[k - 1] * cc[j - 1])
                - cb[i - 1] * (ca[j - 1] * cc[k - 1] - ca[k - 1] * cc[j - 1])
                + cc[i - 1] * (ca[j - 1] * cb[k - 1] - ca[k - 1] * cb[j - 1])
            )
            if not det.is_zero():
                key = (i, j, k)
                cur = out.get(key, ZERO) + coeff * det
                if cur.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = cur
    return Trivector(out)


def inf_action(X: Sequence[Sequence], t: Trivector) -> Trivector:
    """Leibniz action of gl(9) on wedge^3 (derivative of wedge_action)."""
    M = _as_cyc_matrix(X)
    out: Dict[Triple, Cyc] = {}
    for (a, b, c), coeff in t.coeffs.items():
        for pos, idx in ((0, a), (1, b), (2, c)):
            for i in range(1, 10):
                x = M[i - 1][idx - 1]
                if x.is_zero():
                    continue
                trip = [a, b, c]
                trip[pos] = i
                sign, key = sort_triple(*trip)
                if sign == 0:
                    continue
                add = coeff * x if sign == 1 else -(coeff * x)
                cur = out.get(key, ZERO) + add
                if cur.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = cur
    return Trivector(out)


def contraction_matrix(t: Trivector) -> List[List[Cyc]]:
    """9x36 matrix of phi -> iota_phi t over the dual basis."""
    rows = [[ZERO] * len(PAIRS) for _ in range(9)]
    for (a, b, c), coeff in t.coeffs.items():
        # iota_m(e_abc) = d_ma e_bc - d_mb e_ac + d_mc e_ab
        rows[a - 1][PAIR_INDEX[(b, c)]] = rows[a - 1][PAIR_INDEX[(b, c)]] + coeff
        rows[b - 1][PAIR_INDEX[(a, c)]] = rows[b - 1][PAIR_INDEX[(a, c)]] - coeff
        rows[c - 1][PAIR_INDEX[(a, b)]] = rows[c - 1][PAIR_INDEX[(a, b)]] + coeff
    return rows


def rank(t: Trivector) -> int:
    """Minimal dim of U with t in wedge^3 U: 9 minus the contraction kernel."""
    if t.is_zero():
        return 0
    from .scalar import ONE as one, ZERO as zero

    _, pivots = rref_field(contraction_matrix(t), zero, one)
    return len(pivots)


def exp_nilpotent(X: Sequence[Sequence]) -> List[List[Cyc]]:
    """Exact exp of a nilpotent 9x9 matrix (finite sum)."""
    M = _as_cyc_matrix(X)
    n = 9
    out = [[Cyc.rational(1 if i == j else 0) for j in range(n)] for i in range(n)]
    term = [[Cyc.rational(1 if i == j else 0) for j in range(n)] for i in range(n)]
    fact = 1
    for k in range(1, 10):
        term = [[sum((term[i][m] * M[m][j] for m in range(n)), ZERO) for j in range(n)] for i in range(n)]
        fact *= k
        if all(x.is_zero() for row in term for x in row):
            break
        inv = Fraction(1, fact)
        for i in range(n):
            for j in range(n):
                out[i][j] = out[i][j] + term[i][j] * inv
    else:
        raise ValueError("matrix is not nilpotent")
    return out
