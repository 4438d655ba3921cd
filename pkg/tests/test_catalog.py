import random
from fractions import Fraction

import pytest

from triv9.catalog import (CatalogParseError, CentralizerType, builtin_catalog,
                           load_catalog, parse_centralizer_type, parse_records,
                           replay_all, replay_f3_example, replay_mixed_example,
                           replay_orbit47, verify_all, verify_record)
from triv9.families import FAMILIES, SAMPLE_PARAMS
from triv9.trivector import format_trivector, parse_trivector


def test_centralizer_type_parse():
    c = parse_centralizer_type("2*t+u+sl3R")
    assert c.summands == {"t": 2, "u": 1, "sl3R": 1}
    assert c.real_dim == 11
    assert parse_centralizer_type("0").real_dim == 0
    assert parse_centralizer_type("sl3R+sl3C").real_dim == 24
    assert str(parse_centralizer_type("2*t + u")) == "2*t+u"
    with pytest.raises(ValueError):
        parse_centralizer_type("so5")


def test_builtin_catalog_shape():
    recs = builtin_catalog()
    assert len(recs) == 169
    fams = {r.family for r in recs}
    assert fams == {"2_1", "2_2", "3_1", "3_2", "3_3", "3_4",
                    "4_1", "5_1", "5_2", "6_1", "6_2"}
    # spot checks against the table text
    r = next(r for r in recs if r.key == ("2_1", 1, ""))
    assert format_trivector(r.representative) == "e168+e249"
    assert r.declared["centralizer"].real_dim == 0
    r = next(r for r in recs if r.key == ("6_2", 25, ""))
    assert r.representative.is_zero()
    assert str(r.declared["centralizer"]) == "sl3R+sl3C"


def test_record_parse_errors():
    with pytest.raises(CatalogParseError):
        parse_records("orbit 2_1 1 : e168+e249\norbit 2_1 1 : e168+e249")
    with pytest.raises(CatalogParseError):
        parse_records("orbit 2_1 x : e168")
    with pytest.raises(CatalogParseError):
        parse_records("orbit 2_1 1 : e168 ; nonsense=3")


def test_record_file_round_trip(tmp_path):
    path = tmp_path / "cat.txt"
    path.write_text("orbit 5_1 17 : e123 ; centralizer=sl3R+t\n")
    recs = load_catalog(str(path))
    assert len(recs) == 1
    assert recs[0].declared["centralizer"].real_dim == 9


def test_verify_record_passes():
    recs = builtin_catalog()
    rec = next(r for r in recs if r.key == ("3_1", 7, ""))
    rep = verify_record(rec)
    assert rep.ok, "\n".join(rep.lines())


def test_verify_rejects_inadmissible_params():
    recs = builtin_catalog()
    rec = next(r for r in recs if r.key == ("3_1", 7, ""))
    rep = verify_record(rec, (1, 1))
    assert not rep.ok


def test_corrupted_record_fails():
    # sign flip on a nilpotent part makes [p, e] = 0 fail or the
    # centralizer dimension change; exactly that record must fail
    bad = parse_records("orbit 2_1 2 : e168+e123 ; centralizer=t")[0]
    rep = verify_record(bad)
    assert not rep.ok
    good = parse_records("orbit 2_1 2 : e168 ; centralizer=t")[0]
    assert verify_record(good).ok


def test_corrupted_centralizer_type_fails():
    bad = parse_records("orbit 2_1 2 : e168 ; centralizer=u")[0]
    rep = verify_record(bad)
    assert not rep.ok
    names = [c.name for c in rep.checks if not c.ok]
    assert "real-form-discrimination" in names


def test_replays():
    for c in replay_orbit47():
        assert c.ok, c.name
    for c in replay_f3_example():
        assert c.ok, c.name
    for c in replay_f3_example(Fraction(2), Fraction(1)):
        assert c.ok, c.name
    for c in replay_mixed_example():
        assert c.ok, c.name


def test_one_record_per_family():
    # one representative record of each family verified end to end at one
    # admissible point (the full sweep runs in the acceptance suite)
    rng = random.Random(0)
    recs = builtin_catalog()
    for fam in sorted({r.family for r in recs}):
        cands = [r for r in recs if r.family == fam]
        rec = rng.choice(cands)
        rep = verify_record(rec, SAMPLE_PARAMS[fam][0])
        assert rep.ok, "\n".join(rep.lines())


def test_nilpotent_record_file():
    recs = load_catalog("data/nilpotent_orbits.records")
    assert len(recs) == 2
    for rec in recs:
        rep = verify_record(rec)
        assert rep.ok, "\n".join(rep.lines())
