import random
from fractions import Fraction

import pytest

from triv9 import e8
from triv9.classify import (ClassifyError, Sl2Triple, characteristic, classify,
                            is_nilpotent, is_semisimple, jordan_decompose,
                            orbit_dimension, sl2_triple, stabilizer_algebra)
from triv9.e8 import bracket, g1_iso, g1_iso_inv, psi_inv
from triv9.families import FAMILIES, P_BASIS
from triv9.scalar import Cyc, I, ONE
from triv9.trivector import Trivector, parse_trivector, wedge_action


def test_nilpotent_semisimple_basics(alg):
    e = g1_iso(alg, parse_trivector("e678"))
    assert is_nilpotent(e)
    assert not is_semisimple(e)
    p = g1_iso(alg, parse_trivector("e123+e456+e789"))
    assert not is_nilpotent(p)
    assert is_semisimple(p)
    assert is_nilpotent(alg.zero()) and is_semisimple(alg.zero())


def test_mixed_is_neither(alg):
    # semisimple part p3 - p4 (family 5_1), nilpotent part e123
    x = g1_iso(alg, (P_BASIS[2] - P_BASIS[3]) + parse_trivector("e123"))
    assert not is_nilpotent(x)
    assert not is_semisimple(x)


def test_jordan_trivial_cases(alg):
    p = g1_iso(alg, parse_trivector("e123+e456+e789"))
    xs, xn = jordan_decompose(p)
    assert xs == p and xn.is_zero()
    e = g1_iso(alg, parse_trivector("e123+e456"))
    xs, xn = jordan_decompose(e)
    assert xs.is_zero() and xn == e


def test_jordan_table_rows(alg):
    # p^{6,1} + e147 (row 24) and p^{5,1} + e123 + e456 (row 16)
    cases = [
        (P_BASIS[0], parse_trivector("e147")),
        (P_BASIS[2] - P_BASIS[3], parse_trivector("e123+e456")),
        (P_BASIS[0] + P_BASIS[1].scale(2), parse_trivector("e159+e168")),
    ]
    for p_t, e_t in cases:
        x = g1_iso(alg, p_t) + g1_iso(alg, e_t)
        xs, xn = jordan_decompose(x)
        assert g1_iso_inv(alg, xs) == p_t
        assert g1_iso_inv(alg, xn) == e_t
        assert bracket(xs, xn).is_zero()


def test_jordan_transport(alg):
    rng = random.Random(0)
    p_t = P_BASIS[0]
    e_t = parse_trivector("e147")
    g = _random_slq(rng)
    x = g1_iso(alg, wedge_action(g, p_t + e_t))
    xs, xn = jordan_decompose(x)
    assert g1_iso_inv(alg, xs) == wedge_action(g, p_t)
    assert g1_iso_inv(alg, xn) == wedge_action(g, e_t)


def _random_slq(rng):
    # random product of elementary matrices: determinant 1 exactly
    M = [[Fraction(1 if i == j else 0) for j in range(9)] for i in range(9)]
    for _ in range(6):
        a, b = rng.sample(range(9), 2)
        c = Fraction(rng.randint(-2, 2))
        for j in range(9):
            M[a][j] += c * M[b][j]
    return M


def test_sl2_triples(alg):
    for expr in ("e678", "e123+e456", "e147"):
        e = g1_iso(alg, parse_trivector(expr))
        t = sl2_triple(e)
        assert t.check()
    with pytest.raises(ClassifyError):
        sl2_triple(alg.zero())
    with pytest.raises(ClassifyError):
        sl2_triple(g1_iso(alg, parse_trivector("e123+e456+e789")))  # semisimple


def test_sl2_triple_complex_entries(alg):
    e = g1_iso(alg, parse_trivector("-e159+i*e168-e267"))
    t = sl2_triple(e)
    assert t.check()


def test_characteristic(alg):
    assert characteristic(alg.zero()) == (0,) * 8
    t = sl2_triple(g1_iso(alg, parse_trivector("e678")))
    char = characteristic(t.h)
    assert len(char) == 8 and all(isinstance(c, int) for c in char)
    # transport invariance
    rng = random.Random(1)
    g = _random_slq(rng)
    e2 = g1_iso(alg, wedge_action(g, parse_trivector("e678")))
    t2 = sl2_triple(e2)
    assert characteristic(t2.h) == char


def test_characteristic_values(alg):
    # e123 has a 9x9 h with eigenvalues on a 3-dim support
    t = sl2_triple(g1_iso(alg, parse_trivector("e123")))
    h = psi_inv(alg, t.h)
    tr = sum((h[i][i] for i in range(9)), Cyc.rational(0))
    assert tr.is_zero()


def test_stabilizer_dims(alg):
    # generic Cartan element: ambient z_g(p) is the Cartan subalgebra, so the
    # sl(9)-part is 0 and the complex orbit has dimension 80
    p = g1_iso(alg, (P_BASIS[0] + P_BASIS[1].scale(2) - P_BASIS[2].scale(3)
                     + P_BASIS[3].scale(5)))
    assert len(stabilizer_algebra(alg, [p])) == 0
    assert orbit_dimension(alg, p) == 80
    # p1: centralizer 3 sl(3,R), 24-dimensional
    p1 = g1_iso(alg, P_BASIS[0])
    assert len(stabilizer_algebra(alg, [p1])) == 24
    assert orbit_dimension(alg, p1) == 56
    # whole Cartan subspace: trivial stabilizer algebra
    ps = [g1_iso(alg, p) for p in P_BASIS]
    assert len(stabilizer_algebra(alg, ps)) == 0


def test_orbit_dimension_invariance(alg):
    rng = random.Random(2)
    x = parse_trivector("e123+e456")
    d0 = orbit_dimension(alg, g1_iso(alg, x))
    g = _random_slq(rng)
    assert orbit_dimension(alg, g1_iso(alg, wedge_action(g, x))) == d0


def test_classify_reports(alg):
    rep = classify(alg, parse_trivector("e123+e456+e789"))
    assert rep.kind == "semisimple" and rep.rank == 9
    rep = classify(alg, parse_trivector("e123"))
    assert rep.kind == "nilpotent" and rep.rank == 3
    assert rep.characteristic is not None
    rep = classify(alg, Trivector({}))
    assert rep.kind == "zero"
    mixed = (P_BASIS[2] - P_BASIS[3]) + parse_trivector("e123+e456")
    rep = classify(alg, mixed)
    assert rep.kind == "mixed"
    assert rep.semisimple_part == P_BASIS[2] - P_BASIS[3]
    assert rep.nilpotent_part == parse_trivector("e123+e456")
    # report serialization keys
    keys = [line.split("=")[0] for line in rep.lines()]
    assert keys[:4] == ["kind", "rank", "dim", "stabilizer_dim"]
