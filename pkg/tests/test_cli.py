import json

import pytest

import wovenframes.cli as cli
from corpus import GEN, RUNS, run_corpus, write_fixtures
from wovenframes.cli import main
from wovenframes.frames import optimal_bounds
from wovenframes.serialization import read_frame


@pytest.fixture
def files(tmp_path):
    write_fixtures(tmp_path)
    return lambda name: str(tmp_path / f"{name}.json")


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_bounds(capsys, files):
    code, rep, _ = run(capsys, ["bounds", files("fm4")])
    assert code == 0
    assert rep["results"]["lower"] == pytest.approx(1.0) and rep["results"]["upper"] == pytest.approx(4.0)
    assert rep["command"] == "bounds" and rep["tool_version"]
    assert rep["inputs"]["files"]["frame"].startswith("sha256:")
    code, rep, _ = run(capsys, ["bounds", files("e2")])
    assert rep["results"]["lower"] == 1.0 == rep["results"]["upper"]
    code, rep, err = run(capsys, ["bounds", files("bad")])
    assert code == 2 and "not a frame" in err and rep["results"]["is_frame"] is False


def test_io_errors(capsys, tmp_path):
    code, rep, err = run(capsys, ["bounds", str(tmp_path / "nope.json")])
    assert code == 1 and rep is None and "error" in err
    (tmp_path / "x.json").write_text('{"dim": 2, "vectors": [[1]]}')
    assert run(capsys, ["bounds", str(tmp_path / "x.json")])[0] == 1


def test_woven(capsys, files):
    code, rep, _ = run(capsys, ["woven", files("e2"), files("e2")])
    assert code == 0 and rep["results"]["uniform_lower"] == 1.0
    code, rep, _ = run(capsys, ["woven", files("e2"), files("swap")])
    assert code == 3 and rep["results"]["worst_sigma"] == 0b01
    assert rep["results"]["worst_sigma_bits"] == "01"
    code, rep, _ = run(capsys, ["woven", files("fm2"), files("fm2dual"), "--per-sigma"])
    assert code == 0 and len(rep["results"]["per_sigma"]) == 4
    code, _, _ = run(capsys, ["woven", files("e2"), files("e2"), "--cap", "1"])
    assert code == 4


def test_certify_examples(capsys, files):
    code, rep, _ = run(capsys, ["certify", "epa", files("fm4"), files("fm4")])
    assert code == 0
    code, rep, _ = run(capsys, ["certify", "scaled", files("fm2"), "--alpha", "1"])
    assert code == 0 and rep["results"]["measured"]["perturbation_sq"] == pytest.approx(0.5)
    code, rep, _ = run(capsys, ["certify", "llhl", files("fm4")])
    assert code == 3 and rep["results"]["holds"] is False


def test_certify_verify_reports_oracle(capsys, files):
    code, rep, _ = run(capsys, ["certify", "invertible", files("fm4"), "--op", files("tc"), "--verify"])
    res = rep["results"]
    assert code == 0 and res["consistent"] and res["oracle"]["woven"]
    assert res["measured"]["perturbation_norm"] == 0.5
    assert res["predicted_lower_respected"] and res["predicted_upper_respected"]


def test_certify_dual_uses_oracle_constant(capsys, files):
    code, _, err = run(capsys, ["certify", "dual", files("e2"), files("swap")])
    assert code == 3 and "not woven" in err
    code, rep, _ = run(capsys, ["certify", "dual", files("e2"), files("e2")])
    assert code == 0 and rep["results"]["measured"]["woven_lower_C"] == 1.0


def test_certify_not_a_frame(capsys, files):
    assert run(capsys, ["certify", "llhl", files("bad")])[0] == 2


def test_soundness_violation_exit_code(capsys, files, monkeypatch):
    # the oracle never disagrees in practice, so force the branch
    real = cli.cross_check

    def disagree(cert, *a, **k):
        report, _ = real(cert, *a, **k)
        return report, False

    monkeypatch.setattr(cli, "cross_check", disagree)
    code, rep, err = run(capsys, ["certify", "epa", files("fm4"), files("fm4"), "--verify"])
    assert code == 5 and rep["results"]["consistent"] is False and "oracle" in err


def test_angles(capsys, files):
    code, rep, _ = run(capsys, ["angles", "woven-sup", files("e2"), files("e2")])
    assert code == 0 and rep["results"]["sup_cosine"] == pytest.approx(0.7071, abs=1e-4)
    code, rep, _ = run(capsys, ["angles", "riesz", files("e2")])
    assert code == 0 and rep["results"]["sup_cosine"] == 0.0


def test_gen(capsys, tmp_path):
    code = main(["gen", "--kind", "tight", "--dim", "2", "--count", "3", "--out", str(tmp_path / "m.json")])
    assert code == 0
    b = optimal_bounds(read_frame(tmp_path / "m.json"))
    assert b.lower == pytest.approx(1.5) and b.upper == pytest.approx(1.5)
    main(["gen", "--seed", "5", "--dim", "3", "--count", "4", "--out", str(tmp_path / "a.json")])
    main(["gen", "--seed", "5", "--dim", "3", "--count", "4", "--out", str(tmp_path / "b.json")])
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
    assert main(["gen", "--dim", "3", "--count", "2"]) == 6
    assert main(["gen", "--kind", "perturb"]) == 1
    capsys.readouterr()


def test_perturb_then_certify(capsys, tmp_path):
    base, pert = str(tmp_path / "base.json"), str(tmp_path / "pert.json")
    main(["gen", "--dim", "3", "--count", "7", "--seed", "123", "--out", base])
    main(["gen", "--kind", "perturb", "--base", base, "--target", "0.5", "--seed", "77", "--out", pert])
    code, rep, _ = run(capsys, ["certify", "epa", base, pert, "--verify"])
    assert code == 0 and rep["results"]["consistent"]
    assert rep["results"]["measured"]["perturbation_norm"] ** 2 <= 0.25 * rep["results"]["measured"]["lower_bound_A"]


def test_corpus_exit_codes(tmp_path):
    _, codes = run_corpus(tmp_path)
    for name, _, expected in GEN + RUNS:
        assert codes[name] != 5, name
        if expected is not None:
            assert codes[name] == expected, name
