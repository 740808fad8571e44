import json

import pytest
from click.testing import CliRunner

from arshort import corpus
from arshort import repcat as rc
from arshort.cli import main
from arshort.formats import algebra_from_dict, algebra_to_dict, dumps, module_from_dict, module_to_dict


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def ex51(tmp_path, runner):
    out = tmp_path / "ex51"
    res = runner.invoke(main, ["examples", "5.1", "--n", "3", "--out", str(out)])
    assert res.exit_code == 0, res.output
    return out


def write(path, payload):
    path.write_text(dumps(payload))
    return str(path)


def test_examples_writes_both_files(ex51):
    assert sorted(p.name for p in ex51.iterdir()) == ["algebra.json", "module.json"]
    alg = json.loads((ex51 / "algebra.json").read_text())
    assert alg["format"] == 1 and len(alg["vertices"]) == 4


def test_knit_command(ex51, runner, tmp_path):
    dot = tmp_path / "q.dot"
    res = runner.invoke(main, ["knit", str(ex51 / "algebra.json"), "--dot", str(dot)])
    assert res.exit_code == 0
    data = json.loads(res.stdout)
    assert data["status"] == "CompleteFiniteType"
    assert len(data["vertices"]) == 12
    assert dot.read_text().startswith("digraph")


def test_short_chain_negative_and_positive(ex51, runner, tmp_path):
    res = runner.invoke(main, ["short-chain", str(ex51 / "algebra.json"), str(ex51 / "module.json")])
    assert res.exit_code == 0
    assert json.loads(res.stdout)["answer"] == "NotMiddleComplete"

    a2 = corpus.linear_algebra(2)
    m = rc.direct_sum([rc.simple(a2, "1"), rc.simple(a2, "2")])
    alg = write(tmp_path / "a2.json", algebra_to_dict(a2))
    mod = write(tmp_path / "m.json", module_to_dict(m))
    res = runner.invoke(main, ["short-chain", alg, mod])
    assert res.exit_code == 0
    data = json.loads(res.stdout)
    assert data["answer"] == "Middle" and data["witness_verified"] is True

    res = runner.invoke(main, ["theorem1", alg, mod])
    assert res.exit_code == 0
    assert json.loads(res.stdout)["kind"] == "not_applicable"


def test_theorem1_and_corollary12(ex51, runner, tmp_path):
    out = tmp_path / "cert.json"
    res = runner.invoke(main, ["theorem1", str(ex51 / "algebra.json"), str(ex51 / "module.json"), "-o", str(out)])
    assert res.exit_code == 0, res.output
    cert = json.loads(out.read_text())
    assert all(cert["checks"].values())
    assert cert["quotient"]["algebra"]["dimension"] == 3
    res = runner.invoke(main, ["corollary12", str(ex51 / "algebra.json"), str(ex51 / "module.json")])
    assert res.exit_code == 0
    assert json.loads(res.stdout)["hereditary"] is True


def test_input_errors_exit_2(runner, tmp_path):
    assert runner.invoke(main, ["knit", str(tmp_path / "missing.json")]).exit_code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert runner.invoke(main, ["knit", str(bad)]).exit_code == 2
    loop = write(tmp_path / "loop.json", {"format": 1, "vertices": ["1"],
                                          "arrows": [{"name": "x", "from": "1", "to": "1"}]})
    assert runner.invoke(main, ["knit", loop]).exit_code == 2
    wrong = write(tmp_path / "v.json", {"format": 7, "vertices": ["1"]})
    assert runner.invoke(main, ["knit", wrong]).exit_code == 2
    assert runner.invoke(main, ["examples", "9.9", "--out", str(tmp_path)]).exit_code == 2


def test_module_violating_relations_is_an_input_error(runner, tmp_path):
    sq = corpus.commutative_square()
    alg = write(tmp_path / "sq.json", algebra_to_dict(sq))
    mod = write(tmp_path / "m.json", {"format": 1, "dims": {v: 1 for v in sq.vertices},
                                      "maps": {"a": [["1"]], "b": [["1"]], "c": [["1"]], "d": [["2"]]}})
    assert runner.invoke(main, ["short-chain", alg, mod]).exit_code == 2


def test_json_round_trip():
    a = corpus.commutative_square()
    b = algebra_from_dict(json.loads(dumps(algebra_to_dict(a))))
    assert b.dimension == a.dimension and b.cartan_matrix() == a.cartan_matrix()
    m = rc.projective(a, "1")
    m2 = module_from_dict(b, json.loads(dumps(module_to_dict(m))))
    assert m2.dim_vector() == m.dim_vector()


def test_output_is_deterministic(ex51, runner):
    args = ["theorem1", str(ex51 / "algebra.json"), str(ex51 / "module.json")]
    first = runner.invoke(main, args).stdout
    second = runner.invoke(main, args).stdout
    assert first == second
