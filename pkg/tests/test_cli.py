import json
import subprocess
import sys

import pytest

from afk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--family", "A", "--rank", "2", "--weight", "1,1,0", "--delta", "0", "--n", "0")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["summands"]) == 2
    assert json.loads(json.dumps(obj)) == obj
    assert obj["lambda"] == {"omega": [1, 1, 0], "delta": 0}


def test_decompose_varpi_input(capsys):
    # varpi_1 in A_2 embeds as -omega_0 + omega_1, so shift to a dominant weight via --weight instead
    code, _, err = run(capsys, "decompose", "--family", "A", "--rank", "2", "--varpi", "1,0")
    assert code == 2 and "not dominant" in err


def test_multiple_of_delta(capsys):
    code, _, err = run(capsys, "decompose", "--family", "A", "--rank", "2", "--weight", "0,0,0", "--delta", "5")
    assert code == 2 and "multiple of δ" in err


def test_text_table(capsys):
    code, out, _ = run(capsys, "decompose", "--family", "A", "--rank", "2", "--weight", "1,1,0", "--format", "text")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 4 and rows[1].split()[:2] == ["mu", "n(mu)"]


@pytest.mark.parametrize("argv", [
    ["decompose", "--family", "A", "--rank", "2", "--weight", "1,x,0"],
    ["decompose", "--family", "A", "--rank", "2", "--weight", "1,0"],
    ["decompose", "--family", "B", "--rank", "2", "--weight", "1,0,0"],
    ["decompose", "--family", "A", "--rank", "2"],
    ["decompose", "--family", "Q", "--rank", "2"],
    ["decompose", "--family", "A", "--rank", "2", "--weight", "1,0,0", "--window", "0,1"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_chain_and_criteria(capsys):
    code, out, _ = run(capsys, "chain", "--family", "A", "--rank", "2", "--weight", "1,1,0")
    assert code == 0
    assert [s["strict"] for s in json.loads(out)["chain"]] == [True, False, True]
    code, out, _ = run(capsys, "criteria", "--family", "A", "--rank", "2", "--weight", "2,0,0")
    assert json.loads(out) == {"thmB_trivial": False, "thmC_reducible": True, "verdict": "reducible (Thm C)"}
    code, out, _ = run(capsys, "criteria", "--family", "A", "--rank", "2", "--weight", "1,0,0")
    assert json.loads(out)["verdict"] == "undetermined"


def test_verify_relations_and_corruption(capsys):
    code, out, _ = run(capsys, "verify-relations", "--family", "A", "--rank", "1", "--window=-2,2")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "verify-relations", "--family", "A", "--rank", "2", "--corrupt", "F1", "--format", "text")
    assert code == 3 and "FAIL A2 EF[1,1]" in out


def test_crystal_graph(capsys):
    code, out, _ = run(capsys, "crystal-graph", "--family", "A", "--rank", "2", "--format", "text")
    assert code == 0 and "w2 -> w0" in out


def test_selftest_deterministic_and_seeded(capsys, monkeypatch):
    args = ["selftest", "--family", "B", "--rank", "3", "--samples", "30", "--seed", "42", "--format", "text"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2
    monkeypatch.setenv("AFK_SEED", "7")
    _, out3, _ = run(capsys, *args)
    assert out3.splitlines()[0].startswith("selftest seed=7 ")


def test_selftest_corruption_names_relation(capsys):
    code, out, _ = run(capsys, "selftest", "--family", "A", "--rank", "2", "--samples", "10", "--corrupt", "F1",
                       "--format", "text")
    assert code == 3
    assert "FAIL natmod.A2.relations" in out and "first=EF[" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "afk", "criteria", "--family", "A", "--rank", "1", "--weight", "0,1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["verdict"] == "undetermined"
