import json

import pytest

from boxball import bbs
from boxball.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_simulate_ascii(capsys):
    code, out, _ = run(capsys, "simulate", "452361", "--steps", "4", "--format", "ascii")
    assert code == 0
    assert out.splitlines() == [
        "452361",
        "..45.2136",
        "....452..136",
        "......425...136",
        ".......4.25....136",
    ]


def test_simulate_321(capsys):
    code, out, _ = run(capsys, "simulate", "321", "--steps", "1")
    assert out.splitlines() == ["321", ".321"]


def test_simulate_defaults_to_steady_time(capsys):
    _, out, _ = run(capsys, "simulate", "5623714")
    assert out.splitlines() == ["5623714", "..56.27134"]


def test_simulate_json_round_trip(capsys):
    _, out, _ = run(capsys, "simulate", "452361", "--format", "json", "--stepper", "carrier")
    data = json.loads(out)
    assert data["permutation"] == [4, 5, 2, 3, 6, 1]
    states = [bbs.BbsState.from_json(s) for s in data["states"]]
    assert states[-1].render() == "......425...136"
    assert json.loads(json.dumps(data)) == data


def test_simulate_both_fails_loudly_on_divergence(capsys, monkeypatch):
    monkeypatch.setattr(bbs, "step_carrier", lambda s: bbs.BbsState(s.offset + 1, s.content))
    code, _, err = run(capsys, "simulate", "452361", "--stepper", "both")
    assert code == 1
    assert "disagree" in err


def test_trace_carrier(capsys):
    _, out, _ = run(capsys, "simulate", "452361", "--steps", "3", "--trace-carrier")
    lines = [l.strip() for l in out.splitlines()]
    start = lines.index("t=2 -> t=3")
    assert lines[start + 1] == "[eeeeee]452ee136"
    assert lines[start + 12] == "ee425eee136[eeeeee]"


def test_sd(capsys):
    code, out, _ = run(capsys, "sd", "5623714")
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["134", "27", "56"]
    assert "standard: false" in lines
    _, out, _ = run(capsys, "sd", "5623714", "--format", "json")
    assert json.loads(out)["sd"] == [[1, 3, 4], [2, 7], [5, 6]]


def test_rs(capsys):
    _, out, _ = run(capsys, "rs", "452361", "--format", "json")
    data = json.loads(out)
    assert data["p"] == [[1, 3, 6], [2, 5], [4]]
    assert data["q"] == [[1, 2, 5], [3, 4], [6]]
    _, out, _ = run(capsys, "rs", "452361")
    assert out.splitlines() == ["P:", "1 3 6", "2 5", "4", "Q:", "1 2 5", "3 4", "6"]


def test_greene(capsys):
    _, out, _ = run(capsys, "greene", "5623714", "--format", "json", "--oracle")
    data = json.loads(out)
    assert data["incr"][:3] == [3, 6, 7]
    assert data["local_decr"][:3] == [3, 6, 7]
    _, out, _ = run(capsys, "greene", "5623714")
    assert out.splitlines()[3].split() == ["local_incr", "3", "5", "7", "7", "7", "7", "7"]


def test_knuth_graph(capsys, tmp_path):
    dot = tmp_path / "out.dot"
    code, out, _ = run(capsys, "knuth-graph", "362514", "--dot", str(dot))
    assert code == 0
    assert "362154  t=2  shape=(2, 2, 1, 1)" in out
    assert dot.read_text().count(" -- ") == 5
    _, out, _ = run(capsys, "knuth-graph", "632514", "--format", "json")
    assert len(json.loads(out)["vertices"]) == 9


def test_qhat(capsys):
    _, out, _ = run(capsys, "qhat", "--n", "6", "--count")
    assert out.strip() == "16"
    _, out, _ = run(capsys, "qhat", "--n", "5", "--list")
    assert out.split() == ["25143", "35142", "35241", "45132", "45231"]
    code, _, _ = run(capsys, "qhat", "--n", "4")
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "tfae", "--n", "5")
    assert code == 0 and out.startswith("PASS tfae n=5")
    code, out, _ = run(capsys, "verify", "qhat-conjecture", "--n", "6", "--json")
    data = json.loads(out)
    assert data["conjecture"] and data["violations"] == []
    code, _, err = run(capsys, "verify", "knuth-paths", "--n", "9")
    assert code == 2 and "budget" in err


def test_verify_conjecture_exit_codes(capsys, monkeypatch):
    from boxball import verify

    fake = verify.VerificationReport("q-time", 3, 6, [{"q": []}], 0.0, conjecture=True)
    monkeypatch.setitem(verify.SUITES, "q-time", lambda n, jobs=1: fake)
    code, out, _ = run(capsys, "verify", "q-time", "--n", "3")
    assert code == 0 and out.startswith("WARN CONJECTURE")
    code, _, _ = run(capsys, "verify", "q-time", "--n", "3", "--strict")
    assert code == 1
    hard = verify.VerificationReport("t0", 3, 6, [{"w": [1, 2, 3]}], 0.0)
    monkeypatch.setitem(verify.SUITES, "t0", lambda n, jobs=1: hard)
    code, _, _ = run(capsys, "verify", "t0", "--n", "3")
    assert code == 1


@pytest.mark.parametrize("bad", ["4523611", "4x2", "4,5,,1", "0123"])
def test_malformed_permutation_is_usage_error(capsys, bad):
    with pytest.raises(SystemExit) as exc:
        main(["sd", bad])
    assert exc.value.code == 2
    assert "position" in capsys.readouterr().err


def test_comma_separated_large_n(capsys):
    _, out, _ = run(capsys, "sd", "10,1,2,3,4,5,6,7,8,9")
    assert out.splitlines()[0] == "1 2 3 4 5 6 7 8 9"
