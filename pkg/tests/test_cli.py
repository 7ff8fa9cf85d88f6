import json

import pytest
from hypothesis import given, strategies as st

from hyperlat.cli import main
from hyperlat.verify import Check, VerificationReport, run


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bns(capsys):
    assert _run(capsys, "fixed-locus", "bns", "--p", "11", "--a", "2", "--m", "2") == (0, "5\n", "")


def test_represents_none(capsys):
    code, out, _ = _run(capsys, "enumerate", "represents", "--lattice", "T11_2", "--n", "2",
                        "--primitive")
    assert code == 0 and out.strip() == "none"


def test_represents_json(capsys):
    code, out, _ = _run(capsys, "enumerate", "represents", "--lattice", "T11_1", "--n", "2",
                        "--primitive", "--json")
    data = json.loads(out)
    assert code == 0 and data["n"] == 2 and data["vector"] is not None


def test_json_before_command(capsys):
    code, out, _ = _run(capsys, "--json", "fixed-locus", "bns", "--p", "3", "--a", "5", "--m", "9")
    assert json.loads(out)["bns"] == 16


def test_lattice_from_file(tmp_path, capsys):
    f = tmp_path / "a2.json"
    f.write_text(json.dumps({"gram": [[2, -1], [-1, 2]]}))
    code, out, _ = _run(capsys, "enumerate", "shorts", "--file", str(f), "--bound", "2", "--json")
    assert code == 0 and json.loads(out)["counts"] == {"2": 6}


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["enumerate", "represents", "--lattice", "E8"],
    ["enumerate", "shorts", "--lattice", "E8", "--file", "x.json", "--bound", "2"],
    ["catalog", "dump", "nope"],
    ["fixed-locus", "bns", "--p", "4", "--a", "1", "--m", "1"],
    ["verify-thesis", "--group", "nope"],
    ["niemeier", "build", "N99"],
    ["classify"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = _run(capsys, *argv)
    assert code == 2


def test_exact_output(capsys):
    code, out, _ = _run(capsys, "catalog", "dump", "S11", "--json")
    data = json.loads(out)
    assert data["status"] == "repaired" and len(data["gram"]) == 20
    code, out, _ = _run(capsys, "fixed-locus", "census", "--p", "3", "--json")
    assert all(isinstance(x, str) for prof in json.loads(out) for x in prof["c2"])


def test_niemeier_and_leech(capsys):
    code, out, _ = _run(capsys, "niemeier", "build", "N22", "--verify", "--json")
    data = json.loads(out)
    assert code == 0 and data["roots"] == 72 and data["ok"]
    code, out, _ = _run(capsys, "leech", "--route", "weyl")
    assert code == 0 and out.strip().endswith("ok")


def test_witness_commands(capsys):
    code, out, _ = _run(capsys, "coinvariant", "--witness", "S3exo", "--json")
    data = json.loads(out)
    assert data["coinvariant"]["rank"] == 16 and data["leech_couple"]["leech_couple"]
    code, out, _ = _run(capsys, "isometry", "--target", "N12", "--perm", "0", "2", "3", "1", "--json")
    assert json.loads(out)["order"] == 3
    code, out, _ = _run(capsys, "isometry", "--compare", "E8", "E8")
    assert out.strip() == "isometric"


def test_embed_and_bounds(capsys):
    code, out, _ = _run(capsys, "embed", "S3exo", "--n-max", "4", "--json")
    assert [v["verdict"] for v in json.loads(out)] == ["no", "no", "yes"]
    code, out, _ = _run(capsys, "classify", "--bounds", "Og10", "--prime")
    assert out.strip() == "Og10: prime <= 19"


def test_verify_section_alias(capsys):
    code, out, _ = _run(capsys, "verify-thesis", "--section", "niemeier")
    assert code == 0 and "N23 unimodular: pass" in out.splitlines()


def test_verify_json_deterministic(capsys, tmp_path):
    outs = []
    for _ in range(2):
        code, out, _ = _run(capsys, "verify-thesis", "--group", "bns", "--group", "census",
                            "--json", "--out", str(tmp_path / "r.json"))
        outs.append(out)
    assert code == 0 and outs[0] == outs[1]
    data = json.loads(outs[0])
    assert data["summary"]["fail"] == 0
    assert VerificationReport.from_json(data).to_json() == data


def test_verify_exit_status_on_failure(capsys):
    # the representation tables contain entries that the computation contradicts
    code, out, _ = _run(capsys, "verify-thesis", "--group", "represent")
    assert code == 1 and ": fail (computed" in out


# -- report invariants ----------------------------------------------------------------------

ids = st.text(alphabet="abcdefgh 0123", min_size=1, max_size=6)
values = st.one_of(st.integers(-50, 50), st.booleans(), st.none(),
                   st.lists(st.integers(0, 9), max_size=4))


@given(st.lists(st.tuples(ids, values, values), max_size=8, unique_by=lambda t: t[0]))
def test_report_round_trip_and_sorting(items):
    rep = VerificationReport()
    for i, (cid, a, b) in enumerate(items):
        rep.add(cid, "src", a, b)
    js = rep.sorted().to_json()
    back = VerificationReport.from_json(json.loads(json.dumps(js)))
    assert back.to_json() == js
    assert [c["id"] for c in js["checks"]] == sorted(c["id"] for c in js["checks"])
    for c in back.checks:
        assert c.status == ("pass" if c.computed == c.expected else "fail")


def test_duplicate_ids_rejected():
    rep = VerificationReport()
    rep.add("x", "s", 1, 1)
    with pytest.raises(ValueError):
        rep.add("x", "s", 1, 2)


def test_failing_text_shows_both_values():
    rep = VerificationReport()
    rep.add("x", "s", [1, 2], [1, 3])
    assert "computed [1, 2], expected [1, 3]" in rep.to_text()


def test_crashing_group_becomes_failure(monkeypatch):
    from hyperlat import verify

    def boom(rep):
        raise RuntimeError("broken")

    monkeypatch.setitem(verify.GROUPS, "boom", boom)
    rep = run(["boom"])
    assert [c.status for c in rep.checks] == ["fail"]
