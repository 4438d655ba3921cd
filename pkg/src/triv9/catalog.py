"""Orbit catalog: built-in mixed-classification records, the record file
format, and the verification harness replaying every checkable claim.

A record holds the nilpotent part of a mixed representative (the semisimple
part is the family representative at the verification parameters) plus the
declared centralizer type.  verify_record recomputes everything exactly:
admissibility of the parameters, semisimplicity/nilpotency of the parts,
commutation, the homogeneous Jordan decomposition, a homogeneous sl2-triple
inside the centralizer of the semisimple part, the stabilizer subalgebra of
(p,h,e,f) in sl(9), and the real-form data of the declared type.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import catalog_data, e8
from .classify import ClassifyError, is_nilpotent, jordan_decompose, sl2_triple, stabilizer_algebra
from .e8 import AlgElement, bracket, g1_iso, g1_iso_inv
from .families import FAMILIES, SAMPLE_PARAMS, Family
from .galois import cyc_matrix, mat_conj, mat_eq, mat_identity, mat_inv_cyc, mat_mul_cyc
from .realforms import SUMMAND_DIMS, analyze, matches_declared
from .scalar import Cyc, ONE, ZERO, parse_scalar
from .trivector import Trivector, parse_trivector, rank as trivector_rank, wedge_action


@dataclass
class CentralizerType:
    summands: Dict[str, int]

    @property
    def real_dim(self) -> int:
        return sum(SUMMAND_DIMS[name] * mult for name, mult in self.summands.items())

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        parts = []
        for name in ("t", "u", "sl2R", "su2", "sl3R", "su12", "su3", "sl2C", "sl3C"):
            m = self.summands.get(name, 0)
            if m == 1:
                parts.append(name)
            elif m > 1:
                parts.append(f"{m}*{name}")
        return "+".join(parts)


def parse_centralizer_type(text: str) -> CentralizerType:
    text = text.strip()
    if text == "0":
        return CentralizerType({})
    out: Dict[str, int] = {}
    for part in text.split("+"):
        part = part.strip()
        m = re.fullmatch(r"(?:(\d+)\*)?(t|u|sl2R|su2|sl3R|su12|su3|sl2C|sl3C)", part)
        if not m:
            raise ValueError(f"bad centralizer summand: {part!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        name = m.group(2)
        out[name] = out.get(name, 0) + mult
    return CentralizerType(out)


@dataclass
class OrbitRecord:
    family: str
    number: int
    variant: str
    representative: Trivector
    declared: Dict[str, object] = field(default_factory=dict)

    @property
    def key(self) -> Tuple[str, int, str]:
        return (self.family, self.number, self.variant)

    def __str__(self):
        v = f" {self.variant}" if self.variant else ""
        return f"orbit {self.family} {self.number}{v}"


class CatalogParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_records(text: str) -> List[OrbitRecord]:
    out: List[OrbitRecord] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = re.match(r"orbit\s+(\S+)\s+(\d+)\s*([a-z]?)\s*:\s*([^;]+)(.*)$", line)
        if not m:
            raise CatalogParseError(lineno, f"unparseable record: {line!r}")
        family, number, variant, trivec, rest = m.groups()
        try:
            rep = parse_trivector(trivec.strip())
        except ValueError as exc:
            raise CatalogParseError(lineno, str(exc)) from exc
        declared: Dict[str, object] = {}
        for kv in rest.split(";"):
            kv = kv.strip()
            if not kv:
                continue
            key, _, val = kv.partition("=")
            key, val = key.strip(), val.strip()
            if key == "centralizer":
                declared["centralizer"] = parse_centralizer_type(val)
            elif key == "dim":
                declared["dim"] = int(val)
            elif key == "rank":
                declared["rank"] = int(val)
            elif key == "char":
                declared["char"] = tuple(int(x) for x in val.split(","))
            elif key == "compgroup":
                declared["compgroup"] = int(val)
            elif key == "params":
                declared["params"] = val
            else:
                raise CatalogParseError(lineno, f"unknown key {key!r}")
        rec = OrbitRecord(family, int(number), variant, rep, declared)
        if rec.key in seen:
            raise CatalogParseError(lineno, f"duplicate record {rec}")
        seen.add(rec.key)
        out.append(rec)
    return out


def load_catalog(path: str) -> List[OrbitRecord]:
    with open(path) as fh:
        return parse_records(fh.read())


_BUILTIN: Optional[List[OrbitRecord]] = None


def builtin_catalog() -> List[OrbitRecord]:
    global _BUILTIN
    if _BUILTIN is None:
        _BUILTIN = parse_records(catalog_data.BUILTIN_RECORDS)
    return _BUILTIN


# ---------------------------------------------------------------------------
# semisimplicity certificates for family representatives
# ---------------------------------------------------------------------------

_FAMILY_CERT: Dict[str, bool] = {}


def certify_family_semisimple(fam: Family) -> None:
    """Certify every basis trivector of the family semisimple (exact minimal
    polynomial substitution) and all pairwise brackets zero; a rational
    combination of commuting semisimple elements is then semisimple."""
    if _FAMILY_CERT.get(fam.tag):
        return
    rs, alg = e8.build()
    els = [g1_iso(alg, b) for b in fam.basis]
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if not bracket(els[i], els[j]).is_zero():
                raise ClassifyError(f"family {fam.tag} basis does not commute")
    from .classify import is_semisimple

    for el in els:
        if not is_semisimple(el):
            raise ClassifyError(f"family {fam.tag} basis element not semisimple")
    _FAMILY_CERT[fam.tag] = True


# ---------------------------------------------------------------------------
# record verification
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class RecordReport:
    record: OrbitRecord
    params: Tuple[Fraction, ...]
    checks: List[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> List[str]:
        head = "PASS" if self.ok else "FAIL"
        out = [f"{head} {self.record} params={tuple(str(p) for p in self.params)}"]
        for c in self.checks:
            if c.ok:
                out.append(f"  ok   {c.name}")
            else:
                out.append(f"  FAIL {c.name}: {c.detail}")
        return out


def verify_record(rec: OrbitRecord, params: Optional[Sequence[Fraction]] = None) -> RecordReport:
    checks: List[CheckResult] = []
    rs, alg = e8.build()

    if rec.family == "nilpotent":
        params = ()
        p_triv = Trivector({})
        P = alg.zero()
        E = g1_iso(alg, rec.representative)
        e_triv = rec.representative
    else:
        fam = FAMILIES[rec.family]
        if params is None:
            params = SAMPLE_PARAMS[rec.family][0]
        params = tuple(Fraction(p) for p in params)
        if not fam.admissible(params):
            return RecordReport(rec, params, [CheckResult(
                "admissible-parameters", False,
                "parameters violate the family conditions")])
        checks.append(CheckResult("admissible-parameters", True))
        p_triv = fam.rep(params)
        e_triv = rec.representative
        P = g1_iso(alg, p_triv)
        E = g1_iso(alg, e_triv)
        try:
            certify_family_semisimple(fam)
            checks.append(CheckResult("semisimple-part", True))
        except ClassifyError as exc:
            checks.append(CheckResult("semisimple-part", False, str(exc)))

    if not E.is_zero():
        ok = is_nilpotent(E)
        checks.append(CheckResult("nilpotent-part", ok, "" if ok else "e is not nilpotent"))
    commute = bracket(P, E).is_zero()
    checks.append(CheckResult("parts-commute", commute, "" if commute else "[p, e] != 0"))
    if not commute:
        return RecordReport(rec, params, checks)

    # homogeneous Jordan decomposition must recover (p, e) exactly
    try:
        xs, xn = jordan_decompose(P + E)
        ok = (xs == P) and (xn == E)
        checks.append(CheckResult("jordan-recovers-parts", ok,
                                  "" if ok else "decomposition differs from (p, e)"))
    except ClassifyError as exc:
        checks.append(CheckResult("jordan-recovers-parts", False, str(exc)))

    # sl2 triple inside the centralizer of p, stabilizer in sl(9), real form
    ctype: Optional[CentralizerType] = rec.declared.get("centralizer")  # type: ignore[assignment]
    elements = [P] if not P.is_zero() else []
    if not E.is_zero():
        try:
            a_m1 = _centralizer_gm1_basis(alg, P) if not P.is_zero() else None
            trip = sl2_triple(E, within=a_m1)
            checks.append(CheckResult("sl2-triple", True))
            elements = elements + [trip.h, trip.e, trip.f]
        except ClassifyError as exc:
            checks.append(CheckResult("sl2-triple", False, str(exc)))
            return RecordReport(rec, params, checks)
    if not elements:
        elements = [P]
    stab = stabilizer_algebra(alg, elements)
    if ctype is not None:
        ok = len(stab) == ctype.real_dim
        checks.append(CheckResult("centralizer-dimension", ok,
                                  "" if ok else f"dim {len(stab)} != declared {ctype.real_dim}"))
        if ok and len(stab) > 0:
            try:
                stab_q = [[[c.rational_value() for c in row] for row in M] for M in stab]
                data = analyze(stab_q)
                match, msg = matches_declared(data, ctype.summands)
                checks.append(CheckResult("real-form-discrimination", match, msg))
            except (ArithmeticError, ValueError) as exc:
                checks.append(CheckResult("real-form-discrimination", False, str(exc)))
        elif ok:
            checks.append(CheckResult("real-form-discrimination", True, "trivial algebra"))

    if "rank" in rec.declared:
        got = trivector_rank(p_triv + e_triv)
        ok = got == rec.declared["rank"]
        checks.append(CheckResult("rank", ok, "" if ok else f"rank {got}"))
    if "dim" in rec.declared:
        got = 80 - len(stabilizer_algebra(alg, [P + E]))
        ok = got == rec.declared["dim"]
        checks.append(CheckResult("orbit-dimension", ok, "" if ok else f"dim {got}"))
    if "char" in rec.declared and not E.is_zero():
        from .classify import characteristic

        trip2 = sl2_triple(E)
        got = characteristic(trip2.h)
        ok = got == rec.declared["char"]
        checks.append(CheckResult("characteristic", ok, "" if ok else f"char {got}"))
    return RecordReport(rec, params, checks)


def _centralizer_gm1_basis(alg, P: AlgElement) -> List[AlgElement]:
    from .linalg import kernel_frac

    basis = [alg.basis_element(i) for i in alg.gm1_indices]
    cols = [bracket(b, P) for b in basis]
    support = sorted(set().union(*[set(c.coords) for c in cols]) if cols else set())
    rows = [[cols[j].coords.get(s, ZERO).rational_value() for j in range(len(basis))]
            for s in support]
    ker = kernel_frac(rows)
    out = []
    for v in ker:
        el = alg.zero()
        for c, b in zip(v, basis):
            if c:
                el = el + b.scale(Cyc.rational(c))
        out.append(el)
    return out


def verify_all(records: Optional[Sequence[OrbitRecord]] = None,
               points_per_family: int = 3,
               jobs: int = 1,
               progress=None) -> List[RecordReport]:
    """Verify records at up to `points_per_family` admissible points each."""
    recs = list(records) if records is not None else builtin_catalog()
    tasks = []
    for rec in recs:
        pts = SAMPLE_PARAMS[rec.family][:points_per_family]
        for pt in pts:
            tasks.append((rec, pt))
    reports: List[RecordReport] = []
    if jobs <= 1:
        for rec, pt in tasks:
            rep = verify_record(rec, pt)
            reports.append(rep)
            if progress:
                progress(rep)
        return reports
    import concurrent.futures as cf

    with cf.ProcessPoolExecutor(max_workers=jobs) as ex:
        futs = [ex.submit(_verify_task, rec.family, rec.number, rec.variant, pt)
                for rec, pt in tasks]
        for f, (rec, pt) in zip(futs, tasks):
            rep = f.result()
            reports.append(rep)
            if progress:
                progress(rep)
    return reports


def _verify_task(family: str, number: int, variant: str, pt) -> RecordReport:
    rec = next(r for r in builtin_catalog() if r.key == (family, number, variant))
    return verify_record(rec, pt)


# ---------------------------------------------------------------------------
# worked-example replays
# ---------------------------------------------------------------------------

def _num_matrix(rows) -> List[List[Cyc]]:
    out = []
    for row in rows:
        out.append([parse_scalar(str(x)) for x in row])
    return out


def orbit47_matrices():
    g0 = _num_matrix(catalog_data.ORBIT47_G0)
    u0 = _num_matrix(catalog_data.ORBIT47_U0)
    emb = catalog_data.ORBIT47_TORUS_EXPONENTS
    xm11 = [[(Cyc.rational((-1) ** emb[j][0]) if i == j else ZERO) for j in range(9)]
            for i in range(9)]
    g1 = mat_mul_cyc(g0, xm11)
    return g0, g1, u0


def replay_orbit47() -> List[CheckResult]:
    """u0^-1 conj(u0) = g1 and u0 . e = the displayed real representative."""
    out = []
    g0, g1, u0 = orbit47_matrices()
    e = parse_trivector(catalog_data.ORBIT47_E)
    lhs = mat_mul_cyc(mat_inv_cyc(u0), mat_conj(u0))
    out.append(CheckResult("u0^-1 conj(u0) = g1", mat_eq(lhs, g1)))
    got = wedge_action(u0, e)
    want = parse_trivector(catalog_data.ORBIT47_UE)
    out.append(CheckResult("u0 . e matches the displayed trivector", got == want))
    out.append(CheckResult("g1 is an involutive cocycle",
                           mat_eq(mat_mul_cyc(g1, g1), mat_identity(9))))
    return out


def replay_f3_example(x: Fraction = Fraction(1), y: Fraction = Fraction(2)) -> List[CheckResult]:
    """n3^2 = 1, g3^-1 conj(g3) = n3, and g3 . q = p_{x,y}."""
    from .families import P_BASIS
    from .scalar import I as IMAG

    out = []
    n3 = _num_matrix(catalog_data.N3)
    g3 = _num_matrix(catalog_data.G3)
    out.append(CheckResult("n3^2 = 1", mat_eq(mat_mul_cyc(n3, n3), mat_identity(9))))
    lhs = mat_mul_cyc(mat_inv_cyc(g3), mat_conj(g3))
    out.append(CheckResult("g3^-1 conj(g3) = n3", mat_eq(lhs, n3)))
    # q = l1 p1 + l2 p2 with l1 = x+iy, l2 = x-iy
    l1 = Cyc.rational(x) + IMAG * y
    l2 = Cyc.rational(x) - IMAG * y
    q = P_BASIS[0].scale(l1) + P_BASIS[1].scale(l2)
    got = wedge_action(g3, q)
    want = (parse_trivector(catalog_data.PXY_X).scale(Cyc.rational(x))
            + parse_trivector(catalog_data.PXY_Y).scale(Cyc.rational(y)))
    out.append(CheckResult("g3 . q = p_{x,y}", got == want))
    # the admissibility condition xy(x^2-3y^2)(x^2-y^2/3) != 0
    cond = x * y * (x * x - 3 * y * y) * (x * x - Fraction(1, 3) * y * y)
    out.append(CheckResult("parameters admissible", cond != 0))
    return out


def replay_mixed_example() -> List[CheckResult]:
    """The mixed-orbit example: transports, n0, the a-matrix identity, and
    the mu-fixed point e' = -e159 + i e168 - e267."""
    out = []
    g0 = _num_matrix(catalog_data.MIXED_G0)
    g3 = _num_matrix(catalog_data.G3)
    n0 = _num_matrix(catalog_data.MIXED_N0)
    n3 = _num_matrix(catalog_data.N3)
    e = parse_trivector(catalog_data.MIXED_E)
    e_prime = parse_trivector(catalog_data.MIXED_E_PRIME)
    e1 = parse_trivector(catalog_data.MIXED_E1)
    # mu(e') = e' for mu(x) = n3 . conj(x)
    mu_ep = wedge_action(n3, e_prime.conj())
    out.append(CheckResult("mu(e') = e'", mu_ep == e_prime))
    # e1 = g3 . e' (the real nilpotent part)
    out.append(CheckResult("g3 . e' = e1", wedge_action(g3, e_prime) == e1))
    out.append(CheckResult("e1 is real", e1.is_real()))
    # n0 = g0^-1 conj(g0)
    lhs = mat_mul_cyc(mat_inv_cyc(g0), mat_conj(g0))
    out.append(CheckResult("n0 = g0^-1 conj(g0)", mat_eq(lhs, n0)))
    # a c = n0 conj(a) n0^-1 for c = T1(-1)
    a = [[(parse_scalar(catalog_data.MIXED_A[i]) if i == j else ZERO) for j in range(9)]
         for i in range(9)]
    t1_exp = catalog_data.MIXED_T1_EXPONENTS
    c = [[(Cyc.rational((-1) ** t1_exp[i][0]) if i == j else ZERO) for j in range(9)]
         for i in range(9)]
    lhs2 = mat_mul_cyc(a, c)
    rhs2 = mat_mul_cyc(mat_mul_cyc(n0, mat_conj(a)), mat_inv_cyc(n0))
    out.append(CheckResult("a T1(-1) = n0 conj(a) n0^-1", mat_eq(lhs2, rhs2)))
    # g0 a . e = the displayed second representative
    g0a = mat_mul_cyc(g0, a)
    got = wedge_action(g0a, e)
    want = parse_trivector(catalog_data.MIXED_G0A_E)
    out.append(CheckResult("g0 a . e matches the displayed trivector", got == want))
    out.append(CheckResult("second representative is real", got.is_real()))
    return out


def replay_all() -> List[CheckResult]:
    out = []
    for name, res in (("orbit47", replay_orbit47()),
                      ("f3-example", replay_f3_example()),
                      ("mixed-example", replay_mixed_example())):
        for c in res:
            out.append(CheckResult(f"{name}: {c.name}", c.ok, c.detail))
    return out
