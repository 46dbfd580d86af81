import json

from investcoin.cli import main


def test_run_round_deterministic(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["run-round", "--toy", "--seed", "7", "--out", str(a)]) == 0
    assert main(["run-round", "--toy", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert main(["verify-transcript", str(a)]) == 0


def test_attack_exit_code(capsys):
    assert main(["attack", "negative-amount", "--seed", "1"]) == 2
    out = json.loads(capsys.readouterr().out)
    assert out["events"][0]["phase"] == "range"


def test_oracle_check():
    assert main(["oracle-check", "--toy"]) == 0


def test_transfer_commands():
    assert main(["transfer", "--seed", "3", "--recheck"]) == 0
    assert main(["transfer", "--seed", "3", "--recheck", "--amount", "70000"]) == 2


def test_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"q_bits": 64, "l": 16, "n": 3, "lambda": 4, "seed": "c", "adversaries": [{"investor": 2, "behaviour": "inflate-return"}]}))
    assert main(["run-round", "--config", str(cfg)]) == 2


def test_errors(tmp_path, capsys):
    assert main(["verify-transcript", str(tmp_path / "missing.jsonl")]) == 1
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"phase": "setup"}\n')
    assert main(["verify-transcript", str(bad)]) == 1
    assert "line 1" in capsys.readouterr().err


def test_gen_params(tmp_path):
    out = tmp_path / "p.json"
    assert main(["gen-params", "--q-bits", "32", "-n", "2", "--lambda", "3", "--seed", "x", "--out", str(out)]) == 0
    assert int(json.loads(out.read_text())["q"]).bit_length() == 32
