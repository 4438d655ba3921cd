from fractions import Fraction

import pytest

from triv9 import catalog_data
from triv9.catalog import orbit47_matrices
from triv9.galois import (CocycleClass, GammaGroup, NeedsManualFiberData,
                          SearchBudgetExhausted, TorusPart, cocycle_solution_space,
                          cyc_matrix, h1_equivalent, h1_finite, h1_mixed, h1_torus,
                          h1_weyl_is_trivial, h2_abelian_finite,
                          h2_torus_class_trivial, is_cocycle, mat_conj, mat_det_cyc,
                          mat_eq, mat_identity, mat_inv_cyc, mat_mul_cyc,
                          mu_eigenspaces, mu_fixed_search, parse_gamma_group,
                          real_orbit_reps, real_point_via_h2, solve_cocycle_sl9,
                          RealPointResult)
from triv9.scalar import Cyc, I, ONE, Z3, ZERO
from triv9.trivector import parse_trivector, wedge_action


def test_h1_plus_minus_one():
    G = GammaGroup(finite_generators=[[[Cyc.rational(-1)]]])
    assert len(h1_finite(G)) == 2


def test_h1_gamma3():
    gens = [cyc_matrix(g) for g in
            ([[0, -1], [-1, 0]], [[-1, 0], [0, 1]])]
    gens[1][1][1] = Z3
    G = GammaGroup(finite_generators=gens)
    assert len(G.enumerate_finite()) == 72
    classes = h1_finite(G)
    assert len(classes) == 4
    # the displayed representatives {1, -1, u1, u2} are cocycles, pairwise
    # inequivalent, and exhaust the classes
    reps = [cyc_matrix([[1, 0], [0, 1]]), cyc_matrix([[-1, 0], [0, -1]]),
            cyc_matrix([[-1, 0], [0, 1]]), cyc_matrix([[0, 1], [1, 0]])]
    for r in reps:
        assert is_cocycle(G, r)
    for i in range(4):
        for j in range(i + 1, 4):
            assert not h1_equivalent(G, reps[i], reps[j])
    for c in classes:
        assert any(h1_equivalent(G, c.representative, r) for r in reps)


def test_h1_odd_group_trivial():
    # any finite group of odd order has trivial H^1: check on the 3^5 group
    from triv9.cartan import monomial_centralizer_of_C

    sols = monomial_centralizer_of_C()
    mats = []
    for perm, v in sols:
        M = [[ZERO] * 9 for _ in range(9)]
        for i in range(9):
            M[perm[i]][i] = Z3 ** v[i]
        mats.append(M)
    G = GammaGroup(finite_elements=mats)
    classes = h1_finite(G)
    assert len(classes) == 1


def test_h1_torus_cases():
    assert len(h1_torus([[1]])) == 1          # s -> conj s
    assert len(h1_torus([[-1]])) == 2         # s -> conj(s)^-1
    # T4 with the mixed-example involution
    S = [[1, 0, 0, 0], [-1, 0, -1, 0], [-1, -1, 0, 0], [1, 1, 1, 1]]
    assert len(h1_torus(S)) == 1
    # regular summand: swap
    assert len(h1_torus([[0, 1], [1, 0]])) == 1
    # two sign summands
    assert len(h1_torus([[-1, 0], [0, -1]])) == 4
    with pytest.raises(ValueError):
        h1_torus([[0, 1], [0, 1]])


def test_h1_mixed_orbit47():
    emb = catalog_data.ORBIT47_TORUS_EXPONENTS
    torus = TorusPart(rank=2, involution=[[1, 0], [0, 1]], embedding=emb)
    g0, g1, u0 = orbit47_matrices()
    G = GammaGroup(torus=torus, sigma_kind="plain", component_rep=g1,
                   component_order=2, component_torus_action=[[1, 0], [-1, -1]])
    classes = h1_mixed(G)
    assert len(classes) == 2


def test_h1_mixed_odd_component():
    # Z_q of the mixed example: T1 with s -> conj(s)^-1, component order 9
    torus = TorusPart(rank=1, involution=[[-1]],
                      embedding=catalog_data.MIXED_T1_EXPONENTS)
    G = GammaGroup(torus=torus, component_order=9,
                   component_torus_action=[[1]])
    classes = h1_mixed(G)
    assert len(classes) == 2
    labels = sorted(c.label for c in classes)
    assert labels == ["T(-1)", "T(1)"]


def test_h2_torus():
    # C* with z -> conj z: one nontrivial class [-1]
    assert not h2_torus_class_trivial([[1]], [1])
    assert h2_torus_class_trivial([[1]], [0])
    # C* with z -> conj(z)^-1: [-1] is a norm (trivial)
    assert h2_torus_class_trivial([[-1]], [1])


def test_h2_finite():
    # Z/2 with trivial action: Z^2 = Z/2, B^2 = squares = 1
    G = GammaGroup(finite_generators=[[[Cyc.rational(-1)]]])
    reps = h2_abelian_finite(G)
    assert len(reps) == 2


def test_solve_cocycle_orbit47():
    g0, g1, u0 = orbit47_matrices()
    # u0 is a witness that the class is solvable; the solver must find one
    assert mat_eq(mat_conj(u0), mat_mul_cyc(u0, g1))
    g = solve_cocycle_sl9(g1, seed=11)
    assert mat_eq(mat_mul_cyc(mat_inv_cyc(g), mat_conj(g)), g1)
    assert mat_det_cyc(g) == ONE


def test_solve_cocycle_identity_and_errors():
    eye = mat_identity(9)
    g = solve_cocycle_sl9(eye, seed=0)
    assert mat_eq(mat_mul_cyc(mat_inv_cyc(g), mat_conj(g)), eye)
    bad = cyc_matrix([[2 if i == j else 0 for j in range(9)] for i in range(9)])
    with pytest.raises(ValueError):
        solve_cocycle_sl9(bad)


def test_real_orbit_reps_orbit47():
    g0, g1, u0 = orbit47_matrices()
    e = parse_trivector(catalog_data.ORBIT47_E)
    reps = real_orbit_reps(e, [mat_identity(9), g1], seed=11)
    assert reps[0] == e
    assert all(r.is_real() for r in reps)
    # the second representative lies in the same complex orbit but a
    # different real orbit; sanity: same rank
    from triv9.trivector import rank

    assert rank(reps[1]) == rank(e)


def test_mu_fixed_search_finds_displayed_point(alg):
    # the F3 worked example: z(q) cap g1 for q = p1 + 2 p2, mu(x) = n3 conj(x)
    from triv9.classify import stabilizer_algebra
    from triv9.e8 import bracket, g1_iso, g1_iso_inv
    from triv9.families import P_BASIS
    from triv9.linalg import kernel_frac

    q = g1_iso(alg, P_BASIS[0] + P_BASIS[1].scale(2))
    basis = [alg.basis_element(i) for i in alg.g1_indices]
    cols = [bracket(b, q) for b in basis]
    support = sorted(set().union(*[set(c.coords) for c in cols]))
    rows = [[cols[j].coords.get(s, ZERO).rational_value() for j in range(len(basis))]
            for s in support]
    ker = kernel_frac(rows)
    sub = []
    for v in ker:
        el = alg.zero()
        for c, b in zip(v, basis):
            if c:
                el = el + b.scale(Cyc.rational(c))
        sub.append(g1_iso_inv(alg, el))
    n3 = cyc_matrix(catalog_data.N3)
    plus, minus = mu_eigenspaces(n3, sub)
    assert plus and minus
    from triv9.galois import iter_mu_fixed, _line_key

    e_prime = parse_trivector(catalog_data.MIXED_E_PRIME)
    target = _line_key(e_prime)
    found = False
    for c in iter_mu_fixed(n3, sub, max_terms=2, limit=3000):
        if _line_key(c) == target:
            found = True
            break
    assert found


def test_real_point_five_step_trivial_and_obstruction():
    e = parse_trivector("e123")

    def mu_id(x):
        return x

    res = real_point_via_h2(e, mu_id, lambda _: None, lambda h: h,
                            lambda d: True, lambda d: None, lambda h: None)
    assert res.status == "point" and res.point == e

    # synthetic obstruction: C = C* with nu(z) = conj z and d = -1
    eI = parse_trivector("e124")

    def mu_flip(x):
        return -x.conj()

    minus1 = cyc_matrix([[-1 if i == j else 0 for j in range(9)] for i in range(9)])

    def h0_finder(_):
        return minus1

    def tau(h):
        return mat_conj(h)

    def h2_trivial(d):
        # d = (-1)(-1) = 1? no: d = h0 tau(h0) = (-I)(-I) = I ... use the
        # explicit torus test: treat the class of -1 in (C*, z -> conj z)
        return h2_torus_class_trivial([[1]], [0 if mat_eq(d, mat_identity(9)) else 1])

    res2 = real_point_via_h2(eI, mu_flip, h0_finder, tau,
                             lambda d: False, lambda d: None, lambda h: None)
    assert res2.status == "obstruction"


def test_parse_gamma_group_file():
    text = """
[finite]
m1 = [[0,-1],[-1,0]]
m2 = [[-1,0],[0,z3]]
generators = m1, m2
[sigma]
kind = plain
"""
    G = parse_gamma_group(text)
    assert len(G.enumerate_finite()) == 72
    text2 = """
[torus]
rank = 1
involution = [[-1]]
[sigma]
kind = plain
"""
    G2 = parse_gamma_group(text2)
    assert G2.torus is not None
    assert len(h1_torus(G2.torus.involution)) == 2


def test_h1_weyl_trivial(weyl):
    assert h1_weyl_is_trivial(weyl)


def test_h2_abelian_unified():
    from triv9.galois import h2_abelian

    # C* with z -> conj z: the nontrivial class [-1]
    assert len(h2_abelian(GammaGroup(torus=TorusPart(1, [[1]])))) == 2
    # C* with z -> conj(z)^-1: trivial (fixed circle = norms)
    assert len(h2_abelian(GammaGroup(torus=TorusPart(1, [[-1]])))) == 1
    # finite Z/2 with trivial action
    assert len(h2_abelian(GammaGroup(finite_generators=[[[Cyc.rational(-1)]]]))) == 2


def test_h2_obstruction_soundness_small_oracle():
    # class [-1] in (C*, z -> conj z) is nontrivial, and indeed no a in a
    # bounded grid satisfies a conj(a) = -1 (norms are positive reals)
    assert not h2_torus_class_trivial([[1]], [1])
    from fractions import Fraction as F

    for num in range(-6, 7):
        for den in (1, 2, 3):
            for imag in range(-6, 7):
                a = Cyc.rational(F(num, den)) + I * F(imag, den)
                if a.is_zero():
                    continue
                norm = a * a.conj()
                assert norm != Cyc.rational(-1)


def test_twisting_consistency_gamma3():
    # h1 of the group twisted by a cocycle c has the same number of classes:
    # twisting by c = diag(-1, 1) permutes the classes of the order-72 group
    gens = [cyc_matrix(g) for g in ([[0, -1], [-1, 0]], [[-1, 0], [0, 1]])]
    gens[1][1][1] = Z3
    G = GammaGroup(finite_generators=gens)
    c = cyc_matrix([[-1, 0], [0, 1]])
    assert is_cocycle(G, c)

    def twisted_sigma(a):
        return mat_mul_cyc(mat_mul_cyc(c, mat_conj(a)), mat_inv_cyc(c))

    Gt = GammaGroup(finite_elements=G.enumerate_finite(), sigma_kind="twist", twist=c)
    assert len(h1_finite(Gt)) == len(h1_finite(G))
