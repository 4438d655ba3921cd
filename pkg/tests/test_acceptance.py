"""Acceptance criteria, one test per criterion, each printing one pass/fail
line per sub-check.  All arithmetic is exact; "tolerance" is exact equality.
"""

import random
from fractions import Fraction

import pytest

from triv9 import e8
from triv9.e8 import (bracket, g1_iso, g1_iso_inv, killing, psi, psi_inv)
from triv9.scalar import Cyc, I, ONE, Z3, ZERO
from triv9.trivector import TRIPLES, Trivector, inf_action, parse_trivector, wedge_action


def _line(ok: bool, text: str) -> bool:
    print(("PASS " if ok else "FAIL ") + text)
    return ok


# ---------------------------------------------------------------------------
# 1. structure suite
# ---------------------------------------------------------------------------

def test_acceptance_1_structure(alg, rootsystem):
    ok = True
    ok &= _line(alg.n == 248, "1: dim g = 248")
    counts = (len(alg.gm1_indices), len(alg.g0_indices), len(alg.g1_indices))
    ok &= _line(counts == (84, 80, 84), f"1: grading dims {counts} = (84, 80, 84)")

    # full Jacobi on structurally relevant root triples
    table = alg.table
    n = alg.n
    neighbors = {}
    for i in range(8, n):
        neighbors[i] = [j for j in range(8, n) if (i, j) in table]
    checked = 0
    bad = 0

    def bkt(i, j):
        return table.get((i, j), ())

    for i in range(8, n):
        Si = set(neighbors[i])
        for j in neighbors[i]:
            if j < i:
                continue
            Sj = set(neighbors[j])
            for k in Si & Sj:
                if k < j:
                    continue
                acc = {}
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    for (m, cm) in bkt(a, b):
                        for (r, cr) in bkt(m, c):
                            acc[r] = acc.get(r, 0) + cm * cr
                checked += 1
                if any(v for v in acc.values()):
                    bad += 1
    ok &= _line(bad == 0, f"1: Jacobi exact on {checked} structurally relevant root triples")

    # Cartan-root triples
    bad2 = 0
    for h in range(8):
        for i in range(8, n, 7):
            for j in neighbors[i][::9]:
                acc = {}
                for (a, b, c) in ((h, i, j), (i, j, h), (j, h, i)):
                    for (m, cm) in bkt(a, b):
                        for (r, cr) in bkt(m, c):
                            acc[r] = acc.get(r, 0) + cm * cr
                if any(v for v in acc.values()):
                    bad2 += 1
    ok &= _line(bad2 == 0, "1: Jacobi exact on sampled Cartan-root triples")

    # grading compatibility of the bracket table
    deg = alg.degree_of_index
    bad3 = 0
    for (i, j), ent in table.items():
        want = ((deg[i] + deg[j] + 4) % 3) - 1
        for (k, _) in ent:
            if deg[k] != want:
                bad3 += 1
    ok &= _line(bad3 == 0, "1: bracket table respects the grading")

    # Killing invariance and grading orthogonality on random triples
    rng = random.Random(0)
    bad4 = 0
    for _ in range(200):
        i, j, k = (rng.randrange(n) for _ in range(3))
        x, y, z = (alg.basis_element(t) for t in (i, j, k))
        if killing(alg, bracket(x, y), z) != killing(alg, x, bracket(y, z)):
            bad4 += 1
    ok &= _line(bad4 == 0, "1: Killing form invariance (200 sampled triples)")
    bad5 = 0
    for _ in range(100):
        i = rng.choice(alg.g0_indices)
        j = rng.choice(alg.g1_indices + alg.gm1_indices)
        if not killing(alg, alg.basis_element(i), alg.basis_element(j)).is_zero():
            bad5 += 1
    ok &= _line(bad5 == 0, "1: Killing form grading orthogonality")
    assert ok


# ---------------------------------------------------------------------------
# 2. psi and the g1 identification
# ---------------------------------------------------------------------------

def test_acceptance_2_psi_and_g1(alg, rootsystem):
    def E(a, b, val=1):
        M = [[0] * 9 for _ in range(9)]
        M[a - 1][b - 1] = val
        return M

    ok = True
    gens_ok = all(
        psi(alg, E(i, i + 1)) == alg.x(
            rootsystem.simple_roots[i - 1] if i <= 7 else rootsystem.a8_root)
        for i in range(1, 9)
    )
    ok &= _line(gens_ok, "2: psi generator images x_{alpha_i^A} = E_{i,i+1}")
    diag_ok = True
    for i in range(1, 8):
        M = E(i, i)
        M[i][i] = -1
        diag_ok &= psi(alg, M) == alg.h(i)
    ok &= _line(diag_ok, "2: psi Cartan generator images")

    gens = [E(i, i + 1) for i in range(1, 9)] + [E(i + 1, i, -1) for i in range(1, 9)]
    equiv = True
    for X in gens:
        pX = psi(alg, X)
        for tri in TRIPLES:
            t = Trivector({tri: ONE})
            if g1_iso(alg, inf_action(X, t)) != bracket(pX, g1_iso(alg, t)):
                equiv = False
    ok &= _line(equiv, "2: g1 identification equivariant on all (generator, basis) pairs")

    zI = [[Z3 if i == j else ZERO for j in range(9)] for i in range(9)]
    mu3 = all(wedge_action(zI, Trivector({tri: ONE})) == Trivector({tri: ONE})
              for tri in TRIPLES)
    ok &= _line(mu3, "2: mu_3 scalars act trivially on all 84 basis trivectors")
    assert ok


# ---------------------------------------------------------------------------
# 3. little Weyl group
# ---------------------------------------------------------------------------

def test_acceptance_3_weyl(weyl, rootsystem):
    from triv9.cartan import four_generator_subset, _cyc_matmul, _is_identity
    from triv9.linalg import kernel_cyc
    from triv9.weylgroup import conjugacy_orbit

    ok = True
    orbits = rootsystem.theta_star_orbits
    ok &= _line(len(orbits) == 40 and all(len(o) == 6 for o in orbits),
                "3: forty six-element root hexads")
    data = weyl.data
    refl_ok = True
    for refl in data.reflections:
        M = refl.matrix
        if _is_identity(M) or not _is_identity(_cyc_matmul(_cyc_matmul(M, M), M)):
            refl_ok = False
        rows = [[M[i][j] - (ONE if i == j else ZERO) for j in range(4)] for i in range(4)]
        if len(kernel_cyc(rows)) != 3:
            refl_ok = False
    ok &= _line(refl_ok, "3: each reflection has order 3 and a 3-dim fixed space")
    ok &= _line(weyl.order == 155520, f"3: closure order {weyl.order} = 155520")
    orb = conjugacy_orbit(weyl.group, weyl.reflection_indices[0], weyl.reflection_indices)
    ok &= _line(set(weyl.reflection_indices) <= orb,
                "3: the 40 reflections form a single conjugacy class")
    sub = four_generator_subset(weyl)
    ok &= _line(len(sub) == 4, "3: a 4-element generating subset exists")
    assert ok


# ---------------------------------------------------------------------------
# 4. canonical sets
# ---------------------------------------------------------------------------

def test_acceptance_4_canonical_sets(weyl):
    import triv9.cartan as ca
    from triv9.cartan import canonical_family
    from triv9.families import (CANONICAL_BY_SET, FAMILIES, INADMISSIBLE_PARAMS,
                                SAMPLE_PARAMS, family_conditions)

    ok = True
    for tag in sorted(FAMILIES):
        adm = SAMPLE_PARAMS[tag]
        bad = INADMISSIBLE_PARAMS[tag]
        a_ok = all(family_conditions(tag, p) for p in adm) and len(adm) >= 3
        # one-parameter families have a single inadmissible point (0)
        b_ok = all(not family_conditions(tag, p) for p in bad)
        b_full = len(bad) >= 3 or FAMILIES[tag].nparams == 1
        ok &= _line(a_ok and b_ok and b_full,
                    f"4: family {tag} conditions on {len(adm)} admissible / "
                    f"{len(bad)} inadmissible points")
    for k in range(1, 7):
        fam = FAMILIES[CANONICAL_BY_SET[k]]
        got = [canonical_family(ca._coords_in_C(fam, p)) for p in SAMPLE_PARAMS[fam.tag][:2]]
        ok &= _line(all(g == k for g in got), f"4: canonical_family = {k} on F{k} representatives")
    ok &= _line(canonical_family([0, 0, 0, 0]) == 7, "4: zero maps to F7")
    assert ok


# ---------------------------------------------------------------------------
# 5. Galois cohomology replays
# ---------------------------------------------------------------------------

def test_acceptance_5_cohomology(weyl):
    from triv9 import catalog_data
    from triv9.cartan import monomial_centralizer_of_C
    from triv9.catalog import orbit47_matrices
    from triv9.galois import (GammaGroup, TorusPart, cyc_matrix, h1_finite,
                              h1_mixed, h1_torus, h1_weyl_is_trivial)

    ok = True
    G = GammaGroup(finite_generators=[[[Cyc.rational(-1)]]])
    ok &= _line(len(h1_finite(G)) == 2, "5: H1{+-1} has two classes")

    gens = [cyc_matrix(g) for g in ([[0, -1], [-1, 0]], [[-1, 0], [0, 1]])]
    gens[1][1][1] = Z3
    G3 = GammaGroup(finite_generators=gens)
    ok &= _line(len(h1_finite(G3)) == 4, "5: H1 of the order-72 parameter group has 4 classes")

    S4 = [[1, 0, 0, 0], [-1, 0, -1, 0], [-1, -1, 0, 0], [1, 1, 1, 1]]
    ok &= _line(len(h1_torus(S4)) == 1, "5: H1(T4, sigma_q) trivial")

    emb = catalog_data.ORBIT47_TORUS_EXPONENTS
    g0, g1, u0 = orbit47_matrices()
    Gm = GammaGroup(torus=TorusPart(2, [[1, 0], [0, 1]], emb), component_rep=g1,
                    component_order=2, component_torus_action=[[1, 0], [-1, -1]])
    ok &= _line(len(h1_mixed(Gm)) == 2, "5: H1 of the orbit-47 stabilizer has 2 classes")

    sols = monomial_centralizer_of_C()
    mats = []
    for perm, v in sols:
        M = [[ZERO] * 9 for _ in range(9)]
        for i in range(9):
            M[perm[i]][i] = Z3 ** v[i]
        mats.append(M)
    G5 = GammaGroup(finite_elements=mats)
    ok &= _line(len(h1_finite(G5)) == 1, "5: H1 of the 3^5-element group is trivial")

    ok &= _line(len(h1_torus([[-1]])) == 2, "5: H1(T1, s -> conj(s)^-1) has 2 classes")
    ok &= _line(h1_weyl_is_trivial(weyl), "5: H1 of the little Weyl group is trivial (brute force)")
    assert ok


# ---------------------------------------------------------------------------
# 6. worked-example matrix replays
# ---------------------------------------------------------------------------

def test_acceptance_6_replays():
    from triv9.catalog import replay_all

    ok = True
    for c in replay_all():
        ok &= _line(c.ok, f"6: {c.name} {c.detail}")
    assert ok


# ---------------------------------------------------------------------------
# 7. full table verification
# ---------------------------------------------------------------------------

@pytest.mark.slow
def test_acceptance_7_tables():
    from triv9.catalog import builtin_catalog, verify_all

    failures = []

    def progress(rep):
        if not rep.ok:
            failures.append(rep)

    reports = verify_all(points_per_family=3, jobs=2, progress=progress)
    by_family = {}
    for rep in reports:
        fam = rep.record.family
        by_family.setdefault(fam, [0, 0])
        by_family[fam][0] += rep.ok
        by_family[fam][1] += 1
    ok = True
    for fam in sorted(by_family):
        good, total = by_family[fam]
        ok &= _line(good == total, f"7: family {fam}: {good}/{total} row-point checks pass")
    for rep in failures[:10]:
        for line in rep.lines():
            print("   ", line)
    assert ok


# ---------------------------------------------------------------------------
# 8. invariant-level conjugacy checks
# ---------------------------------------------------------------------------

def test_acceptance_8_conjugacy_invariants(cartan_data):
    import triv9.cartan as ca
    from triv9.families import FAMILIES, SAMPLE_PARAMS
    from triv9.invariants import cartan_point_polynomial, hexad_polynomial

    ok = True
    for tag in ("2_2", "3_2", "3_3", "3_4", "5_2", "6_2"):
        fam = FAMILIES[tag]
        for params in SAMPLE_PARAMS[tag][:2]:
            params = [Fraction(p) for p in params]
            R = hexad_polynomial(fam.rep(params))
            # SL(9,C)-conjugate canonical partner
            ptag, cparams = fam.complex_partner(params)
            pfam = FAMILIES[ptag]
            coords = _coords_of_family_point(pfam, cparams)
            Rc = cartan_point_polynomial(coords)
            ok &= _line(R == Rc, f"8: {tag}{tuple(map(str, params))} matches its "
                                 f"complex canonical partner")
            # stated Cartan-subspace conjugate
            cc = fam.cartan_conjugate(params)
            Rr = cartan_point_polynomial(cc)
            ok &= _line(R == Rr, f"8: {tag}{tuple(map(str, params))} matches its "
                                 f"Cartan-subspace conjugate")
    assert ok


def _coords_of_family_point(fam, cparams):
    """Coordinates on p1..p4 of a canonical-family point with Cyc parameters."""
    from triv9.classify import _solve_field
    from triv9.families import P_BASIS

    rep = fam.rep(cparams)
    support = sorted(set().union(*[set(p.coeffs) for p in P_BASIS], set(rep.coeffs)))
    A = [[P_BASIS[j].coeffs.get(s, ZERO) for j in range(4)] for s in support]
    b = [rep.coeffs.get(s, ZERO) for s in support]
    sol = _solve_field(A, b)
    assert sol is not None
    return sol


# ---------------------------------------------------------------------------
# 9. property suites
# ---------------------------------------------------------------------------

@pytest.mark.slow
def test_acceptance_9_properties(alg):
    from triv9.catalog import builtin_catalog
    from triv9.classify import jordan_decompose, sl2_triple
    from triv9.families import FAMILIES, SAMPLE_PARAMS
    from triv9.linalg import det_frac
    from triv9.trivector import rank as trivector_rank

    rng = random.Random(20240808)

    def random_slq(nops=4):
        M = [[Fraction(1 if i == j else 0) for j in range(9)] for i in range(9)]
        for _ in range(nops):
            a, b = rng.sample(range(9), 2)
            c = Fraction(rng.randint(-2, 2))
            for j in range(9):
                M[a][j] += c * M[b][j]
        return M

    # 100 random rational trivectors with known Jordan data (transported
    # catalog pairs; a uniform random trivector is generically semisimple
    # and its exact semisimplicity certificate is not desk-affordable)
    recs = [r for r in builtin_catalog() if not r.representative.is_zero()
            and r.representative.is_rational()]
    cases = []
    while len(cases) < 100:
        rec = rng.choice(recs)
        params = rng.choice(SAMPLE_PARAMS[rec.family])
        p_t = FAMILIES[rec.family].rep(params)
        e_t = rec.representative
        g = random_slq(3)
        cases.append((wedge_action(g, p_t), wedge_action(g, e_t)))
    bad = 0
    for p_t, e_t in cases:
        x = g1_iso(alg, p_t + e_t)
        xs, xn = jordan_decompose(x)
        if g1_iso_inv(alg, xs) != p_t or g1_iso_inv(alg, xn) != e_t:
            bad += 1
        if not bracket(xs, xn).is_zero():
            bad += 1
        if not (xs.is_degree_pure(1) and xn.is_degree_pure(1)):
            bad += 1
    assert _line(bad == 0, "9: Jordan contracts exact on 100 random transported trivectors")

    # rank invariance under 50 random conjugations
    bad = 0
    base_list = [parse_trivector("e123+e456+e789"), parse_trivector("e123+e456"),
                 parse_trivector("e147"), parse_trivector("e159+e168+e249")]
    for _ in range(50):
        t = rng.choice(base_list)
        r0 = trivector_rank(t)
        g = random_slq(4)
        if trivector_rank(wedge_action(g, t)) != r0:
            bad += 1
    assert _line(bad == 0, "9: rank invariant under 50 random conjugations")

    # sl2-triple relations on 20 random nilpotents from the tables
    bad = 0
    nilrecs = [r for r in recs if r.representative.is_rational()]
    for _ in range(20):
        rec = rng.choice(nilrecs)
        g = random_slq(2)
        e_t = wedge_action(g, rec.representative)
        t = sl2_triple(g1_iso(alg, e_t))
        if not t.check():
            bad += 1
    assert _line(bad == 0, "9: sl2 relations exact on 20 random table nilpotents")
