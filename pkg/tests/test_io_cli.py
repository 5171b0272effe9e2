import json

import pytest

from conftest import passing_fixtures
from weakhom import io
from weakhom.cli import main
from weakhom.constructions import example_2_10, groupoid_pair, object_permutation
from weakhom.linear import mat_equal
from weakhom.yd import unit_object


def test_roundtrip_example(tmp_path):
    H = example_2_10(2)
    io.save(H, tmp_path / "h.json")
    assert io.load(tmp_path / "h.json").same_as(H)


@pytest.mark.parametrize("name", sorted(passing_fixtures()))
def test_roundtrip_all_fixtures(name):
    H = passing_fixtures()[name]
    assert io.from_dict(json.loads(io.dumps(io.to_dict(H)))).same_as(H)


def test_module_and_automorphism_roundtrip(tmp_path):
    H = groupoid_pair(2)
    io.save(H, tmp_path / "host.json")
    M = unit_object(H)
    io.save(M, tmp_path / "m.json", host_ref="host.json")
    back = io.load(tmp_path / "m.json")
    assert back.same_structure(M.replace(name=back.name))
    a = io.NamedAutomorphism("sigma", H, object_permutation(2, (1, 0)))
    io.save(a, tmp_path / "s.json", host_ref="host.json")
    assert mat_equal(io.load(tmp_path / "s.json").matrix, a.matrix)


def test_bad_literal_names_field(tmp_path):
    d = io.to_dict(groupoid_pair(2))
    d["xi"][1][2] = "0/0"
    (tmp_path / "bad.json").write_text(json.dumps(d))
    with pytest.raises(io.BadLiteral) as err:
        io.load(tmp_path / "bad.json")
    assert err.value.field == "xi[1, 2]"
    with pytest.raises(io.BadLiteral):
        io.parse_rational("2/4", "x")
    with pytest.raises(io.BadLiteral):
        io.parse_rational(0.5, "x")


def test_unresolved_automorphism(tmp_path):
    H = groupoid_pair(2)
    io.save(H, tmp_path / "host.json")
    d = io.to_dict(unit_object(H), host_ref="host.json")
    d["component"]["alpha"] = "sigma"
    (tmp_path / "m.json").write_text(json.dumps(d))
    with pytest.raises(io.UnresolvedReference):
        io.load(tmp_path / "m.json")
    d["host"] = "missing.json"
    (tmp_path / "m.json").write_text(json.dumps(d))
    with pytest.raises(io.UnresolvedReference):
        io.load(tmp_path / "m.json")


def test_schema_errors():
    with pytest.raises(io.SchemaError):
        io.from_dict({"schema_version": "1", "kind": "monoid"})
    d = io.to_dict(groupoid_pair(2))
    d["mul"] = d["mul"][:2]
    with pytest.raises(io.SchemaError):
        io.from_dict(d)


def test_run_suite_skips_and_verdicts():
    r = io.run_suite(example_2_10(2), "antipode")
    assert r.verdict == "skipped" and r.exit_code == 2
    r = io.run_suite(example_2_10(2, xi="printed"), "algebra")
    assert r.exit_code == 1
    assert all(rep.witness is not None for _, rep in r.failed)
    with pytest.raises(ValueError):
        io.run_suite(groupoid_pair(2), "everything")


def test_structured_report_roundtrip():
    r = io.run_suite(example_2_10(2, xi="printed"), "algebra", name="x")
    back = io.report_from_structured(json.loads(r.render("structured")))
    assert back.render("structured") == r.render("structured")
    assert back.render("text") == r.render("text")


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_cli_exit_codes(capsys):
    assert run(["verify", "--fixture", "example-2.10", "--lambda", "2", "--suite", "weak"], capsys)[0] == 0
    assert run(["verify", "--fixture", "groupoid-pair-2", "--suite", "all"], capsys)[0] == 0
    assert run(["verify", "--fixture", "example-2.10", "--lambda", "2", "--suite", "antipode"], capsys)[0] == 2
    assert run(["verify", "--fixture", "example-2.10", "--xi", "printed", "--suite", "algebra"], capsys)[0] == 1
    code, out = run(["verify", "--fixture", "example-2.10", "--lambda", "0"], capsys)
    assert code == 2 and "lambda" in out.err
    code, out = run(["verify", "--fixture", "nope"], capsys)
    assert code == 2 and "unknown fixture" in out.err


def test_cli_is_deterministic(tmp_path, capsys):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        main(["verify", "--fixture", "groupoid-pair-2", "--format", "structured", "--out", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    code, out = run(["report", "--input", str(tmp_path / "r0.json")], capsys)
    assert code == 0 and "verdict: pass" in out.out


def test_cli_constructions(tmp_path, capsys):
    g = tmp_path / "g.json"
    assert main(["export-fixture", "--fixture", "groupoid-pair-2", "--out", str(g)]) == 0
    assert main(["dualize", "--input", str(g), "--out", str(tmp_path / "d.json")]) == 0
    assert main(["twist", "xi-square", "--input", str(g), "--out", str(tmp_path / "t.json")]) == 0
    assert main(["twist", "alpha", "--automorphism", "perm:1,0", "--input", str(g)]) == 1
    c = tmp_path / "c.json"
    assert main(["conjugate", "--input", str(g), "--alpha", "perm:1,0", "--out", str(c)]) == 0
    assert main(["tensor", "--left", str(c), "--input", str(g), "--out", str(tmp_path / "x.json")]) == 0
    assert main(["verify", "--input", str(tmp_path / "x.json"), "--suite", "yd"]) == 0
    capsys.readouterr()
    assert main(["braid", "--fixture", "groupoid-pair-2", "--format", "structured"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["c"] == [["1", "0"], ["0", "1"]]
