import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
import hypothesis.strategies as st

from triv9.scalar import Cyc, I, ONE, Z3, ZERO
from triv9.trivector import (TRIPLES, Trivector, TrivectorParseError,
                             contraction_matrix, exp_nilpotent, format_trivector,
                             inf_action, parse_trivector, rank, wedge_action)


def test_parse_examples():
    p1 = parse_trivector("e123+e456+e789")
    assert p1.get(1, 2, 3) == ONE
    assert parse_trivector("e213") == -Trivector.basis(1, 2, 3)
    t = parse_trivector("-1/2*e126 - 1/2*e349 + 2*e358 - e457 + e789")
    assert t.get(1, 2, 6) == Cyc.rational(Fraction(-1, 2))
    assert parse_trivector("0").is_zero()


def test_parse_errors():
    with pytest.raises(TrivectorParseError):
        parse_trivector("e112")
    with pytest.raises(TrivectorParseError):
        parse_trivector("e120")
    with pytest.raises(TrivectorParseError):
        parse_trivector("e12")
    with pytest.raises(TrivectorParseError):
        parse_trivector("2e123")  # grammar requires '*'


def _random_trivector(rng, n_terms=5, complex_ok=False):
    out = Trivector({})
    for _ in range(n_terms):
        tri = rng.choice(TRIPLES)
        c = Cyc.rational(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        if complex_ok and rng.random() < 0.4:
            c = c + I * rng.randint(-2, 2)
        out = out + Trivector({tri: c})
    return out


def test_format_round_trip():
    rng = random.Random(0)
    for _ in range(40):
        t = _random_trivector(rng, complex_ok=True)
        assert parse_trivector(format_trivector(t)) == t


def _random_glq(rng):
    while True:
        g = [[Fraction(rng.randint(-2, 2)) for _ in range(9)] for _ in range(9)]
        from triv9.linalg import det_frac

        if det_frac(g) != 0:
            return g


def test_wedge_identity_and_mu3():
    I9 = [[1 if i == j else 0 for j in range(9)] for i in range(9)]
    rng = random.Random(1)
    t = _random_trivector(rng)
    assert wedge_action(I9, t) == t
    zI = [[Z3 if i == j else ZERO for j in range(9)] for i in range(9)]
    assert wedge_action(zI, t) == t


def test_wedge_is_group_action():
    rng = random.Random(2)
    for _ in range(5):
        g = _random_glq(rng)
        h = _random_glq(rng)
        t = _random_trivector(rng)
        gh = [[sum(g[i][k] * h[k][j] for k in range(9)) for j in range(9)] for i in range(9)]
        assert wedge_action(gh, t) == wedge_action(g, wedge_action(h, t))


def test_inf_action_degree_and_derivative():
    rng = random.Random(3)
    t = _random_trivector(rng)
    I9 = [[1 if i == j else 0 for j in range(9)] for i in range(9)]
    assert inf_action(I9, t) == t.scale(3)
    Z = [[0] * 9 for _ in range(9)]
    assert inf_action(Z, t).is_zero()
    # exp of a nilpotent X: wedge(exp X) = sum inf^m / m!
    X = [[0] * 9 for _ in range(9)]
    X[0][4] = 1
    X[1][5] = -2
    E = exp_nilpotent(X)
    lhs = wedge_action(E, t)
    acc, term, fact = t, t, 1
    for m in range(1, 12):
        term = inf_action(X, term)
        fact *= m
        if term.is_zero():
            break
        acc = acc + term.scale(Fraction(1, fact))
    assert lhs == acc


def test_rank_examples_and_oracle():
    assert rank(parse_trivector("e123")) == 3
    assert rank(Trivector({})) == 0
    p1 = parse_trivector("e123+e456+e789")
    assert rank(p1) == 9
    # independent oracle: sympy rank of the contraction matrix
    rng = random.Random(4)
    for t in [p1, parse_trivector("e123+e456"), parse_trivector("e123+e145"),
              _random_trivector(rng), _random_trivector(rng)]:
        M = contraction_matrix(t)
        rows = [[complex(x.complex_approx()) for x in row] for row in M]
        Msym = sympy.Matrix([[sympy.nsimplify(x, rational=True) if x.imag == 0 else x
                              for x in row] for row in rows])
        assert rank(t) == Msym.rank()


def test_rank_gl_invariance():
    rng = random.Random(5)
    t = parse_trivector("e123+e456+e789")
    for _ in range(3):
        g = _random_glq(rng)
        assert rank(wedge_action(g, t)) == 9
