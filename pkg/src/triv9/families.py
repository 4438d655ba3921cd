"""Parameter families of semisimple trivectors and their conjugacy groups.

Seven canonical families p^{k,1} live inside the Cartan subspace spanned by
p1..p4; the noncanonical real families p^{k,j} (j >= 2) are SL(9,C)-conjugate
to canonical elements with complex parameters and SL(9,R)-conjugate to
explicit elements of the Cartan subspace.  Each family carries exact
polynomial admissibility conditions and a finite integer matrix group that
decides when two parameter vectors give SL(9,R)-conjugate trivectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .scalar import Cyc, I as IMAG, R3, ONE
from .trivector import Trivector, parse_trivector

P1 = parse_trivector("e123+e456+e789")
P2 = parse_trivector("e147+e258+e369")
P3 = parse_trivector("e159+e267+e348")
P4 = parse_trivector("e168+e249+e357")
P_BASIS = [P1, P2, P3, P4]

# building blocks of the noncanonical families
_B61 = parse_trivector("-1/2*e126-1/2*e349+2*e358-e457+e789")
_B22_2 = parse_trivector("-2*e137-1/4*e249-e258-1/2*e456-1/2*e689")
_B22_3 = parse_trivector("-e159-e238-1/2*e247-1/2*e346-e678")
_B33_1 = parse_trivector("e129-e138+2*e237-1/4*e456-2*e789")
_B33_2 = parse_trivector("-1/2*e147-e258+2*e369")
_B34_1 = parse_trivector("e147-2*e169-e245+e289-e356-1/2*e378")
_B34_2 = parse_trivector("-e124-e136-1/2*e238+e457-2*e569+e789")
_B52 = parse_trivector(
    "e148-e159-e238+1/2*e239-1/2*e247+e257-1/2*e346-e356-e678-1/2*e679"
)

THIRD_R3 = R3 * Fraction(1, 3)  # sqrt(3)/3


def _cube(x: Fraction) -> Fraction:
    return x * x * x


@dataclass
class Family:
    """One parameter family of semisimple representatives."""

    tag: str                    # e.g. "2_1"
    canonical_set: int          # k in 1..7
    nparams: int
    basis: List[Trivector]      # representative = sum params[i] * basis[i]
    condition: Callable[[Sequence[Fraction]], bool]
    group_gens: List[List[List[int]]]  # conjugacy-deciding integer matrices
    canonical: bool
    # for noncanonical families: the C-conjugate canonical parameters (in
    # Q(zeta12)) and the Cartan-subspace conjugate coordinates
    complex_partner: Optional[Callable[[Sequence[Fraction]], Tuple[str, List[Cyc]]]] = None
    cartan_conjugate: Optional[Callable[[Sequence[Fraction]], List[Cyc]]] = None

    def rep(self, params: Sequence) -> Trivector:
        if len(params) != self.nparams:
            raise ValueError(f"family {self.tag} takes {self.nparams} parameters")
        out = Trivector({})
        for p, b in zip(params, self.basis):
            c = p if isinstance(p, Cyc) else Cyc.rational(p)
            out = out + b.scale(c)
        return out

    def admissible(self, params: Sequence[Fraction]) -> bool:
        if len(params) != self.nparams:
            raise ValueError(f"family {self.tag} takes {self.nparams} parameters")
        return self.condition([Fraction(p) for p in params])


def _cond_1_1(l: Sequence[Fraction]) -> bool:
    l1, l2, l3, l4 = l
    if l1 * l2 * l3 * l4 == 0:
        return False
    if _cube(_cube(l2) + _cube(l3) + _cube(l4)) - _cube(3 * l2 * l3 * l4) == 0:
        return False
    if _cube(_cube(l1) + _cube(l3) + _cube(l4)) + _cube(3 * l1 * l3 * l4) == 0:
        return False
    if _cube(_cube(l1) + _cube(l2) + _cube(l4)) + _cube(3 * l1 * l2 * l4) == 0:
        return False
    if _cube(_cube(l1) + _cube(l2) + _cube(l3)) + _cube(3 * l1 * l2 * l3) == 0:
        return False
    return True


def _cond_2(sign: int) -> Callable[[Sequence[Fraction]], bool]:
    def cond(l: Sequence[Fraction]) -> bool:
        l1, l2, l3 = l
        v = (
            l1 * l2 * l3
            * (_cube(l1) - _cube(l2)) * (_cube(l2) - _cube(l3)) * (_cube(l3) - _cube(l1))
            * (_cube(_cube(l1) + _cube(l2) + _cube(l3)) + sign * _cube(3 * l1 * l2 * l3))
        )
        return v != 0

    return cond


def _cond_3(sign: int) -> Callable[[Sequence[Fraction]], bool]:
    def cond(l: Sequence[Fraction]) -> bool:
        l1, l2 = l
        return l1 * l2 * (l1**6 + sign * l2**6) != 0

    return cond


def _cond_3_4(l: Sequence[Fraction]) -> bool:
    lam, mu = l
    return lam * mu * (3 * lam**4 - 10 * lam**2 * mu**2 + 3 * mu**4) != 0


def _cond_4_1(l: Sequence[Fraction]) -> bool:
    lam, mu = l
    return lam * mu * (_cube(lam) - _cube(mu)) * (_cube(lam) + 8 * _cube(mu)) != 0


def _cond_nonzero(l: Sequence[Fraction]) -> bool:
    return l[0] != 0


_D12 = [[[0, 1, 0], [0, 0, 1], [1, 0, 0]], [[-1, 0, 0], [0, 0, -1], [0, -1, 0]]]
_D8 = [[[-1, 0], [0, 1]], [[0, 1], [1, 0]]]
_V4 = [[[-1, 0], [0, 1]], [[1, 0], [0, -1]]]
_GL23 = [
    [[0, 0, 0, -1], [0, -1, 0, 0], [0, 0, 1, 0], [-1, 0, 0, 0]],
    [[0, 0, -1, 0], [1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1]],
]
_PM1 = [[[-1]]]
_PM2 = [[[-1, 0], [0, -1]]]


def _cyc_list(vals) -> List[Cyc]:
    return [v if isinstance(v, Cyc) else Cyc.rational(v) for v in vals]


FAMILIES: Dict[str, Family] = {}


def _add(fam: Family) -> None:
    FAMILIES[fam.tag] = fam


# The F1 polynomial conditions factor into the 40 reflection hyperplanes
# only in the coordinates (l1, l2, -l3, l4): the fully generic family uses
# -p3, exactly like the printed p^{2,1} formula.  (Exact check: the
# centralizer of p1+2p2+3p3+5p4 in the 248-dim algebra has dimension 14,
# so that point is NOT regular, while p1+2p2-3p3+5p4 has dimension 8.)
_add(Family("1_1", 1, 4, [P1, P2, -P3, P4], _cond_1_1, _GL23, True))

_add(Family("2_1", 2, 3, [P1, P2, -P3], _cond_2(-1), _D12, True))
_add(Family(
    "2_2", 2, 3, [_B61, _B22_2, -_B22_3], _cond_2(+1), _D12, False,
    complex_partner=lambda l: ("2_1", [IMAG * l[0], IMAG * l[1], IMAG * l[2]]),
    cartan_conjugate=lambda l: _cyc_list([
        THIRD_R3 * (l[1] - l[2]), THIRD_R3 * (l[0] - l[2]),
        THIRD_R3 * (l[0] + l[1] + l[2]), THIRD_R3 * (l[0] - l[1]),
    ]),
))

_add(Family("3_1", 3, 2, [P1, P2], _cond_3(-1), _D8, True))
_add(Family(
    "3_2", 3, 2, [_B61, _B22_2], _cond_3(-1), _D8, False,
    complex_partner=lambda l: ("3_1", [IMAG * l[0], IMAG * l[1]]),
    cartan_conjugate=lambda l: _cyc_list([
        THIRD_R3 * l[1], THIRD_R3 * l[0],
        THIRD_R3 * (l[0] + l[1]), THIRD_R3 * (l[0] - l[1]),
    ]),
))
_add(Family(
    "3_3", 3, 2, [_B33_1, _B33_2], _cond_3(+1), _V4, False,
    complex_partner=lambda l: ("3_1", [IMAG * l[0], Cyc.rational(l[1])]),
    cartan_conjugate=lambda l: _cyc_list([
        Cyc.rational(-l[1]), THIRD_R3 * l[0], THIRD_R3 * l[0], THIRD_R3 * l[0],
    ]),
))
_add(Family(
    "3_4", 3, 2, [_B34_1, _B34_2], _cond_3_4, _V4, False,
    complex_partner=lambda l: ("3_1", [
        Cyc.rational(l[0]) + IMAG * l[1], Cyc.rational(l[0]) - IMAG * l[1]
    ]),
    cartan_conjugate=lambda l: _cyc_list([
        Cyc.rational(0),
        Cyc.rational(l[0]) + THIRD_R3 * l[1],
        Cyc.rational(-l[0]) + THIRD_R3 * l[1],
        THIRD_R3 * (-2 * l[1]),
    ]),
))

_add(Family("4_1", 4, 2, [P1, P3 - P4], _cond_4_1, _PM2, True))

_add(Family("5_1", 5, 1, [P3 - P4], _cond_nonzero, _PM1, True))
_add(Family(
    "5_2", 5, 1, [_B52], _cond_nonzero, _PM1, False,
    complex_partner=lambda l: ("5_1", [IMAG * l[0]]),
    cartan_conjugate=lambda l: _cyc_list([
        Cyc.rational(0), THIRD_R3 * (2 * l[0]), -THIRD_R3 * l[0], -THIRD_R3 * l[0],
    ]),
))

_add(Family("6_1", 6, 1, [P1], _cond_nonzero, _PM1, True))
_add(Family(
    "6_2", 6, 1, [_B61], _cond_nonzero, _PM1, False,
    complex_partner=lambda l: ("6_1", [IMAG * l[0]]),
    cartan_conjugate=lambda l: _cyc_list([
        Cyc.rational(0), THIRD_R3 * l[0], THIRD_R3 * l[0], THIRD_R3 * l[0],
    ]),
))

CANONICAL_BY_SET = {1: "1_1", 2: "2_1", 3: "3_1", 4: "4_1", 5: "5_1", 6: "6_1"}

# admissible sample parameter points per family (checked exactly in tests)
SAMPLE_PARAMS: Dict[str, List[Tuple[Fraction, ...]]] = {
    "1_1": [(1, 2, 3, 5), (1, -2, 3, 7), (2, 3, 5, 11)],
    "2_1": [(1, 2, 4), (1, -2, 3), (2, 3, 7)],
    "2_2": [(1, 2, 4), (1, -2, 3), (2, 3, 7)],
    "3_1": [(1, 2), (2, -3), (1, 3)],
    "3_2": [(1, 2), (2, -3), (1, 3)],
    "3_3": [(1, 2), (2, -3), (1, 3)],
    "3_4": [(1, 2), (2, -3), (1, 3)],
    "4_1": [(1, 2), (3, 1), (2, -3)],
    "5_1": [(1,), (-2,), (3,)],
    "5_2": [(1,), (-2,), (3,)],
    "6_1": [(1,), (-2,), (3,)],
    "6_2": [(1,), (-2,), (3,)],
}

INADMISSIBLE_PARAMS: Dict[str, List[Tuple[Fraction, ...]]] = {
    "1_1": [(0, 1, 1, 1), (1, 1, 1, 1), (1, 0, 2, 3)],
    "2_1": [(1, 1, 2), (0, 1, 2), (1, 2, 2)],
    "2_2": [(1, 1, 2), (0, 1, 2), (1, 2, 2)],
    "3_1": [(1, 1), (0, 2), (1, -1)],
    "3_2": [(1, 1), (0, 2), (1, -1)],
    "3_3": [(0, 1), (1, 0), (0, 0)],
    "3_4": [(0, 1), (1, 0), (0, 0)],
    "4_1": [(1, 1), (0, 1), (2, -1)],
    "5_1": [(0,)],
    "5_2": [(0,)],
    "6_1": [(0,)],
    "6_2": [(0,)],
}


def close_integer_group(gens: List[List[List[int]]], limit: int = 10000) -> List[Tuple[Tuple[int, ...], ...]]:
    """Closure of a small integer matrix group; exact; tuples as elements."""
    k = len(gens[0])

    def tup(M) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in row) for row in M)

    def mul(A, B):
        return tuple(
            tuple(sum(A[i][t] * B[t][j] for t in range(k)) for j in range(k))
            for i in range(k)
        )

    eye = tup([[1 if i == j else 0 for j in range(k)] for i in range(k)])
    seen = {eye}
    frontier = [eye]
    gtups = [tup(g) for g in gens]
    for g in gtups:
        if g not in seen:
            seen.add(g)
            frontier.append(g)
    while frontier:
        nxt = []
        for f in frontier:
            for g in gtups:
                h = mul(f, g)
                if h not in seen:
                    if len(seen) >= limit:
                        raise RuntimeError("integer group closure exceeded bound")
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)


def same_real_orbit(tag: str, lam: Sequence[Fraction], mu: Sequence[Fraction]) -> bool:
    """Whether two admissible parameter vectors of one family give
    SL(9,R)-conjugate representatives: scan of the family's finite group."""
    fam = FAMILIES[tag]
    lam = [Fraction(x) for x in lam]
    mu = [Fraction(x) for x in mu]
    if len(lam) != fam.nparams or len(mu) != fam.nparams:
        raise ValueError(f"family {tag} takes {fam.nparams} parameters")
    for g in close_integer_group(fam.group_gens):
        if all(sum(g[i][j] * lam[j] for j in range(fam.nparams)) == mu[i]
               for i in range(fam.nparams)):
            return True
    return False


def family_conditions(tag: str, params: Sequence[Fraction]) -> bool:
    return FAMILIES[tag].admissible([Fraction(p) for p in params])
