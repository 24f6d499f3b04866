import json

from clusterlab import jsonio
from clusterlab.cli import main
from clusterlab.cluster import mutate_seed

from helpers import a2_pair, a2_seed


def write(path, data):
    path.write_text(json.dumps(data))


def a2_seed_json():
    return jsonio.seed_to_json(a2_seed())


def test_mutate_command(tmp_path, capsys):
    seed_file = tmp_path / "a2.json"
    out_file = tmp_path / "a2m1.json"
    write(seed_file, a2_seed_json())
    code = main(["mutate", "--seed", str(seed_file), "--at", "1", "--out", str(out_file)])
    assert code == 0
    got = json.loads(out_file.read_text())
    want = jsonio.seed_to_json(mutate_seed(a2_seed(), 0))
    assert got == want
    # x1' = x1^{-1} + x1^{-1} x2
    assert got["variables"][0] == [
        {"exp": [-1, 0], "num": 1, "den": 1},
        {"exp": [-1, 1], "num": 1, "den": 1},
    ]


def test_mutate_out_of_range_is_usage_error(tmp_path):
    seed_file = tmp_path / "a2.json"
    write(seed_file, a2_seed_json())
    assert main(["mutate", "--seed", str(seed_file), "--at", "7"]) == 2


def test_unknown_flag_is_usage_error(tmp_path):
    assert main(["mutate", "--nope", "x"]) == 2


def test_missing_file_is_usage_error():
    assert main(["mutate", "--seed", "/nonexistent.json", "--at", "1"]) == 2


def test_check_compatible(tmp_path, capsys):
    pair_file = tmp_path / "p.json"
    write(pair_file, jsonio.pair_to_json(a2_pair()))
    assert main(["check-compatible", "--pair", str(pair_file)]) == 0
    assert "diag [1, 1]" in capsys.readouterr().out
    write(
        pair_file,
        {"B": [[0, 1], [-1, 0]], "lambda": [[0, 1], [-1, 0]]},
    )
    assert main(["check-compatible", "--pair", str(pair_file)]) == 1


def test_mutate_pair_round_trip(tmp_path):
    pair_file = tmp_path / "p.json"
    out1 = tmp_path / "p1.json"
    out2 = tmp_path / "p2.json"
    write(pair_file, jsonio.pair_to_json(a2_pair()))
    assert main(["mutate-pair", "--pair", str(pair_file), "--at", "1", "--out", str(out1)]) == 0
    assert main(["mutate-pair", "--pair", str(out1), "--at", "1", "--out", str(out2)]) == 0
    assert json.loads(out2.read_text()) == json.loads(pair_file.read_text())


def test_laurent_check(tmp_path, capsys):
    seed_file = tmp_path / "a2.json"
    write(seed_file, a2_seed_json())
    assert main(["laurent-check", "--seed", str(seed_file)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["is_laurent"] and report["all_coefficients_positive_integers"]


def test_strata_and_dixmier(tmp_path, capsys):
    lam_file = tmp_path / "lam.json"
    write(lam_file, [[0, 1], [-1, 0]])
    assert main(["strata", "--lambda", str(lam_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["classical"]) == 4
    assert out["classical"] == out["quantum"]
    assert main(["dixmier", "--lambda", str(lam_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["round_trip_identity"]


def test_supertoric(tmp_path, capsys):
    pair_file = tmp_path / "p.json"
    write(
        pair_file,
        {"B": [[0, 1]], "lambda": [[0, -1], [1, 0]]},
    )
    assert main(["supertoric", "--pair", str(pair_file)]) == 0
    assert "supertoric" in capsys.readouterr().out


def test_cos_validate(tmp_path):
    chain_file = tmp_path / "chain.json"
    write(chain_file, {"n": 2, "perm": [1, 2], "chain": [[2], [1, 2]]})
    assert main(["cos-validate", "--chain", str(chain_file)]) == 0
    write(chain_file, {"n": 2, "perm": [1, 2], "chain": [[1], [1, 2]]})
    assert main(["cos-validate", "--chain", str(chain_file)]) == 1


def test_bruhat_build_fixture(tmp_path):
    out_file = tmp_path / "sl3.json"
    assert (
        main(
            [
                "bruhat-build",
                "--word",
                "1,2,1,-1,-2,-1",
                "--rank",
                "2",
                "--out",
                str(out_file),
            ]
        )
        == 0
    )
    got = json.loads(out_file.read_text())
    assert got["labels"] == [
        "D[1|2]",
        "D[12|12]",
        "D[1|1]",
        "D[2|1]",
        "D[12|23]",
        "D[1|3]",
        "D[23|12]",
        "D[3|1]",
    ]
    assert got["m"] == 4 and got["n"] == 8
    # round trip: the written seed re-reads identically
    seed = jsonio.seed_from_json(got)
    assert jsonio.seed_to_json(seed) == {
        k: got[k] for k in ("m", "n", "B", "labels", "variables", "history")
    }


def test_bruhat_verify(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("CLUSTERLAB_SEED", "5")
    assert (
        main(["bruhat-verify", "--word", "1,-1", "--rank", "1", "--samples", "5"]) == 0
    )
    out = json.loads(capsys.readouterr().out)
    assert out["seed"] == 5
    assert out["results"] == {"1": True}


def test_quantum_mutate_cli(tmp_path):
    from clusterlab.quantum import QuantumSeed
    from helpers import a2_lambda, a2_matrix

    qs = QuantumSeed.initial(a2_matrix(), a2_lambda())
    seed_file = tmp_path / "qa2.json"
    out1 = tmp_path / "m1.json"
    out2 = tmp_path / "m2.json"
    write(seed_file, jsonio.quantum_seed_to_json(qs))
    assert main(["quantum-mutate", "--seed", str(seed_file), "--at", "1", "--out", str(out1)]) == 0
    assert main(["quantum-mutate", "--seed", str(out1), "--at", "1", "--out", str(out2)]) == 0
    got = json.loads(out2.read_text())
    qs2 = jsonio.quantum_seed_from_json(got)
    assert qs2 == qs  # involution (history excluded from equality)
    assert got["history"] == [1, 1]
