import re
from pathlib import Path

import pytest

from lambertkit.harness import load_catalog, parse_catalog, verify, verify_all
from lambertkit.harness.catalog import STATUSES, CatalogError, default_catalog_path, lint
from lambertkit.harness.report import render

ROOT = Path(__file__).resolve().parent.parent
SOURCE = ROOT / "paper.md"

REQUIRED = (
    [f"C{i}" for i in range(1, 11)] + [f"P{i}" for i in range(1, 5)] + [f"R{i}" for i in range(1, 8)]
    + ["D1", "D2", "Y1"] + [f"F{i}" for i in range(1, 6)] + [f"M{i}" for i in range(1, 4)]
    + [f"T{i}" for i in range(1, 6)] + [f"MT{i}" for i in range(1, 6)] + [f"V{i}" for i in range(1, 7)]
    + [f"X{i}" for i in range(1, 5)] + [f"G{i}" for i in range(1, 5)] + ["K1", "K2", "L1", "L2"]
    + [f"A{i}" for i in range(1, 5)] + [f"H{i}" for i in range(1, 5)] + ["W1", "W2"]
    + [f"O{i}" for i in range(1, 5)] + [f"B{i}" for i in range(1, 9)]
)


@pytest.fixture(scope="module")
def records():
    return load_catalog()


@pytest.fixture(scope="module")
def report(records):
    return verify_all(records)


def test_shipped_catalog_lints_clean(records):
    assert lint(records) == []
    assert default_catalog_path().is_file()


def test_catalog_covers_required_ids(records):
    ids = {r.id for r in records}
    missing = [rid for rid in REQUIRED if not any(i == rid or re.fullmatch(rf"{rid}[a-z]", i) for i in ids)]
    assert missing == []


@pytest.mark.skipif(not SOURCE.is_file(), reason="source text not present")
def test_quotes_are_verbatim(records):
    text = SOURCE.read_text(encoding="utf-8")
    assert [r.id for r in records if r.quote not in text] == []


def test_shipped_catalog_matches_expected(report):
    assert report.exit_code == 0, [(r.id, r.expected, r.status, r.message) for r in report.unexpected]
    assert report.counts["verified"] >= 60


def test_every_erratum_reports_mismatch_and_reading(report):
    for r in report.results:
        if r.status == "erratum":
            assert r.mismatch_index is not None and r.reading is not None, r.id
        if r.status == "verified":
            assert r.mismatch_index is None and r.reading is None, r.id


def test_flipping_any_expected_status_fails(records):
    for rec in records:
        for other in STATUSES:
            if other != rec.expected:
                assert verify_all([rec.with_expected(other)]).exit_code == 1, (rec.id, other)


@pytest.mark.parametrize("rid", ["C1", "R6", "MT3", "B4"])
def test_flip_inside_full_catalog(records, rid):
    flipped = [r.with_expected("unresolved" if r.expected != "unresolved" else "verified")
               if r.id == rid else r for r in records]
    rep = verify_all(flipped)
    assert rep.exit_code == 1
    assert [r.id for r in rep.unexpected] == [rid]


def test_report_is_deterministic(records):
    ids = {"C2", "R4", "T3b", "A3", "B6", "MT4"}
    a = render(verify_all(records, ids=ids), "json", timing=False)
    b = render(verify_all(list(reversed(records)), ids=ids), "json", timing=False)
    assert a == b


def test_results_are_in_natural_id_order(report):
    ids = [r.id for r in report.results]
    assert ids.index("C2") < ids.index("C10")


def test_empty_catalog():
    rep = verify_all(parse_catalog(""))
    assert rep.results == [] and rep.exit_code == 0
    assert rep.counts == {s: 0 for s in STATUSES}


def test_single_record_catalog():
    recs = parse_catalog("[C2] anchor=x quote='q/(1-q)^2' lhs='lambert(phi)' rhs='q/(1-q)^2'")
    assert verify_all(recs).results[0].status == "verified"


def test_order_one_trivial_record():
    rec = parse_catalog("[Z] anchor=a quote=b order=1 lhs='q' rhs='q'")[0]
    res = verify(rec)
    assert (res.status, res.order) == ("verified", 1)


def test_evaluation_error_is_unresolved_not_fatal():
    recs = parse_catalog(
        "[E1] anchor=a quote=b lhs='1/q' rhs='q' expected=unresolved\n"
        "[E2] anchor=a quote=b lhs='q' rhs='q'\n"
    )
    rep = verify_all(recs)
    assert [r.status for r in rep.results] == ["unresolved", "verified"]
    assert "not evaluable" in rep.results[0].message


def test_fractional_exponent_mismatch_is_located():
    res = verify(parse_catalog("[E] anchor=a quote=b lhs='theta2sq(1)' rhs='q' expected=unresolved")[0])
    assert (res.status, res.mismatch_index, res.mismatch_lhs) == ("unresolved", "1/2", "undefined")


def test_erratum_needs_a_matching_reading():
    rec = parse_catalog("[E] anchor=a quote=b lhs='q' rhs='2*q' reading1.rhs='3*q' reading2.rhs='q' "
                        "expected=erratum")[0]
    res = verify(rec)
    assert (res.status, res.reading, res.mismatch_index) == ("erratum", 2, 1)


def test_order_override():
    rec = parse_catalog("[Z] anchor=a quote=b lhs='lambert(mu)' rhs='q'")[0]
    assert verify(rec, order=5).order == 5


def test_unknown_id_rejected(records):
    with pytest.raises(KeyError):
        verify_all(records, ids={"NOPE"})


@pytest.mark.parametrize("text,fragment", [
    ("[A] anchor=a quote=b lhs=q rhs=q\n[A] anchor=a quote=b lhs=q rhs=q", "duplicate id"),
    ("[A] anchor=a lhs=q rhs=q", "missing quote"),
    ("[A] quote=b lhs=q rhs=q", "missing anchor"),
    ("[A] anchor=a quote=b lhs=q rhs=q expected=maybe", "expected must be"),
    ("[A] anchor=a quote=b lhs='foo(q)' rhs=q", "unknown builder"),
    ("[A] anchor=a quote=b lhs=q rhs=q order=0", "order must be >= 1"),
    ("[A] anchor=a quote=b lhs=q rhs=q reading2.rhs=q", "numbered"),
    ("[A] anchor=a quote=b lhs=q", "missing field 'rhs'"),
    ("[A] anchor=a quote=b lhs=q rhs=q colour=red", "unknown field"),
    ("stray text\n[A] anchor=a quote=b lhs=q rhs=q", "outside a record"),
    ("[A] anchor='a quote=b lhs=q rhs=q", "No closing quotation"),
])
def test_catalog_errors(text, fragment):
    with pytest.raises(CatalogError) as err:
        parse_catalog(text)
    assert fragment in str(err.value)


def test_missing_catalog_file(tmp_path):
    with pytest.raises(CatalogError):
        load_catalog(tmp_path / "none.cat")
