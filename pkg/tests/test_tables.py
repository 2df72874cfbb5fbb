import copy
import dataclasses
import json

import pytest

from homflychar.braid import parse_tuple_text
from homflychar.exactring import LaurentPoly, mirror_q, parse_expr
from homflychar.fusion import sector_rep
from homflychar.homfly import homfly
from homflychar.partitions import Partition
from homflychar.tables import (
    DATA_DIR,
    ERRATUM,
    FAIL,
    PASS,
    TABLES,
    KnotFixture,
    builtin_table,
    find,
    fixture_from_result,
    load_fixtures,
    load_table,
    run_all,
    run_fixture,
)

COVERAGE = {
    "two_strand": ["3_1", "5_1", "7_1"],
    "three_strand": ["3_1", "4_1", "5_2", "6_2", "6_3", "7_3", "7_5", "8_2", "8_5", "8_7", "8_9", "8_10",
                     "8_16", "8_17", "8_18", "8_19", "8_20", "8_21", "10_139"],
    "four_strand": ["6_1", "7_2", "7_4", "7_6", "7_7", "8_4", "8_6", "8_11", "8_13", "8_14", "8_15"],
    "five_strand": ["8_1", "8_3", "8_12", "[5,1]", "[5,2]", "[5,3]"],
    "composites": ["{3,3}", "{3,4}", "T[2,4]", "L4a1", "T[2,3]", "T[2,4]"],
}

# every printed value the oracle refutes, keyed by fixture
EXPECTED_ERRATA = {
    "three_strand/7_5": {"h[3]", "h[21]"},
    "four_strand/7_4": {"A^3", "A^1", "A^-1", "A^-3"},
    "four_strand/8_4": {"h[22]"},
    "four_strand/8_6": {"h[22]"},
    "four_strand/8_14": {"h[22]"},
    "four_strand/8_15": {"h[4]", "h[31]", "h[22]", "h[211]", "h[1111]", "A^3", "A^1", "A^-1", "A^-3"},
    "five_strand/[5,3]": {"h[41]", "h[2111]", "A^-2", "A^-4"},
}


@pytest.fixture(scope="module")
def suite():
    return run_all()


@pytest.mark.parametrize("table", list(COVERAGE))
def test_coverage(table):
    assert [f.name for f in builtin_table(table)] == COVERAGE[table]


def test_duplicate_realizations_present():
    t = {f.name: f for f in builtin_table("three_strand")}
    assert t["8_19"].words == ("(1,3,1,3)", "(1,1,1,1,1,1,1,1)")
    assert len(t["10_139"].words) == 2


@pytest.mark.parametrize("table", TABLES)
def test_fixture_files_well_formed(table):
    doc = json.loads((DATA_DIR / f"{table}.json").read_text())
    assert doc["table"] == table
    for d in doc["fixtures"]:
        assert {"name", "strands", "words", "writhe", "components"} <= set(d)
    for f in builtin_table(table):
        assert f.check() == []


def test_fixture_json_round_trip():
    for f in load_fixtures():
        back = KnotFixture.from_json(json.loads(json.dumps(f.to_json())), f.table)
        assert back.to_json() == f.to_json()


def test_load_single_file_and_dir(tmp_path):
    f = find("8_10", "three_strand")
    (tmp_path / "one.json").write_text(json.dumps(f.to_json()))
    assert load_table(tmp_path / "one.json")[0].name == "8_10"
    assert [x.name for x in load_fixtures(tmp_path)] == ["8_10"]


def test_run_fixture_examples():
    rep = run_fixture(find("6_3", "three_strand"))
    h21 = [r for r in rep.fields if r.field == "h[21]"][0]
    assert h21.status == PASS
    want = parse_expr("-(q^2-1+q^-2)*(q^4-q^2+1-q^-2+q^-4)").laurent()
    assert str(want) == h21.got
    rep = run_fixture(find("8_12", "five_strand"))
    assert rep.verbatim
    row = [r for r in rep.fields if r.field == "A^0"][0]
    assert row.got == str(parse_expr("q^4-3*q^2+5-3*q^-2+q^-4").laurent())
    rep = run_fixture(find("L4a1", "composites"))
    assert rep.verbatim


def test_full_suite_passes(suite):
    assert suite.structural_ok
    assert suite.ok, suite.lines()
    assert all(suite.cross.values())


def test_errata_are_exactly_the_oracle_refuted_mismatches(suite):
    got = {}
    for r in suite.fixtures:
        errs = {x.field for x in r.errata()}
        if errs:
            got[r.fixture.key] = errs
        assert not r.failures()
    assert got == EXPECTED_ERRATA
    for r in suite.fixtures:
        for x in r.errata():
            assert "oracle gap" in x.note


def test_every_fixture_without_errata_is_verbatim(suite):
    clean = [r for r in suite.fixtures if r.fixture.key not in EXPECTED_ERRATA]
    assert clean and all(r.verbatim for r in clean)


def _with(f: KnotFixture, **changes) -> KnotFixture:
    return dataclasses.replace(f, **changes)


def test_unregistered_mismatch_fails():
    f = find("8_10", "three_strand")
    h = dict(f.h)
    h[Partition([2, 1])] = -h[Partition([2, 1])]
    rep = run_fixture(_with(f, h=h))
    assert not rep.ok
    assert [x.field for x in rep.failures()] == ["h[21]"]


def test_stale_erratum_fails():
    f = find("8_4", "four_strand")
    fixed = dict(f.h)
    fixed[Partition([2, 2])] = homfly(f.braids()[0]).h([2, 2])
    rep = run_fixture(_with(f, h=fixed))
    assert [x.field for x in rep.failures()] == ["h[22]"]
    assert "now matches" in rep.failures()[0].note


def test_erratum_needs_oracle_refutation():
    # register an erratum on a printed value that the engine and the oracle both support
    f = find("8_10", "three_strand")
    h = dict(f.h)
    bad = h[Partition([2, 1])] + LaurentPoly.const(1)
    h[Partition([2, 1])] = bad
    entry = {"printed": bad.to_json(), "computed": f.h[Partition([2, 1])].to_json(), "note": "made up"}
    rep = run_fixture(_with(f, h=h, errata={"h[21]": entry}))
    # the printed value really is wrong here, so the oracle confirms it
    assert [x.field for x in rep.errata()] == ["h[21]"]
    # but a registered "erratum" on a value that is right never passes as one
    entry_ok = {"printed": f.h[Partition([2, 1])].to_json(), "computed": bad.to_json(), "note": "made up"}
    rep = run_fixture(_with(f, errata={"h[21]": entry_ok}))
    assert rep.failures()


def test_realizations_must_agree():
    f = find("8_19", "three_strand")
    rep = run_fixture(_with(f, words=(f.words[0], "(1,3,1,1)"), writhe=(8, 6)))
    names = [x.field for x in rep.failures()]
    assert "realizations agree" in names


def test_bad_writhe_is_an_error():
    f = find("4_1", "three_strand")
    rep = run_fixture(_with(f, writhe=(3,)))
    assert rep.error and not rep.ok


def test_without_reconstruction_exactly_five_strand_fail():
    rep = run_all(reconstruct=False)
    assert sorted(rep.failed_fixtures()) == sorted(f"five_strand/{n}" for n in COVERAGE["five_strand"])


def test_fault_injection_stops_before_fixtures():
    def mutated(Q):
        rep = sector_rep(Q)
        if Q != Partition([3, 1]):
            return rep
        bad = copy.copy(rep)
        bad.rhat = dict(rep.rhat)
        bad.rhat_inv = dict(rep.rhat_inv)
        bad.rhat[2] = [[mirror_q(x) for x in row] for row in rep.rhat[2]]
        return bad

    rep = run_all(sectors=mutated)
    assert rep.skipped and not rep.ok
    assert rep.fixtures == []
    broken = [k for k, v in rep.structural.items() if not v]
    assert any("braid" in k for k in broken) and all(k.startswith("[31]") for k in broken)


def test_fixture_from_result_round_trips():
    r = homfly(parse_tuple_text(3, "(1,-1,1,-1)"))
    f = fixture_from_result(r, "4_1")
    g = KnotFixture.from_json(f.to_json())
    assert run_fixture(g).verbatim


def test_status_constants_distinct():
    assert len({PASS, ERRATUM, FAIL}) == 3
