import json
import subprocess
import sys

import pytest

from genus_range.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_genus_range(capsys):
    assert run(["genus-range", "12314324"], capsys) == (0, "[0,2]\n", "")


def test_genus_range_json(capsys):
    code, out, _ = run(["genus-range", "1212", "--json"], capsys)
    assert code == 0
    assert json.loads(out) == {"word": "1 2 1 2", "n": 2, "genus_range": [1, 1], "boundary_counts": {"2": 4}}


def test_canon(capsys):
    assert run(["canon", "2 1 2 1"], capsys)[1] == "1 2 1 2\n"
    assert run(["canon", ""], capsys)[1] == "\n"


def test_family(capsys):
    assert run(["family", "tangled-cord", "3"], capsys)[1] == "1 2 1 3 2 3\n"
    assert run(["family", "gamma-hat"], capsys)[1] == "1 2 3 2 4 5 1 5 3 6 4 6\n"
    assert run(["family", "gamma-chain", "2"], capsys)[1] == "1 2 1 2 5 3 4 3 4 5\n"
    assert run(["family", "repeat", "3"], capsys)[1] == "1 2 3 1 2 3\n"


def test_family_errors(capsys):
    assert run(["family", "repeat", "4"], capsys)[0] == 1
    code, _, err = run(["family", "tangled-cord"], capsys)
    assert code == 1 and "parameter" in err


def test_realize_refusal(capsys):
    code, out, err = run(["realize", "4", "4", "7"], capsys)
    assert code == 1 and out == ""
    assert "top-singleton-odd" in err and "[4,4]" in err


def test_realize(capsys):
    code, out, _ = run(["realize", "0", "2", "8"], capsys)
    assert code == 0 and out.strip()


def test_trace(capsys):
    code, out, _ = run(["trace", "121323", "--bits", "100"], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[:2] == ["b=1", "genus=2"]
    assert lines[3:] == [f"e{e} 1" for e in range(1, 7)]
    code, out, _ = run(["trace", "121323", "--bits", "101"], capsys)
    assert out.splitlines()[:2] == ["b=3", "genus=1"]


def test_trace_bad_bits(capsys):
    code, _, err = run(["trace", "121323", "--bits", "10"], capsys)
    assert code == 1 and "3 characters" in err


def test_bad_word(capsys):
    code, _, err = run(["genus-range", "1 2 3"], capsys)
    assert code == 1 and "exactly twice" in err


def test_find(capsys):
    assert run(["find", "5", "2", "2"], capsys)[1] == "1 2 1 2 3 4 5 4 5 3\n"


def test_survey_csv(capsys):
    assert run(["survey", "2"], capsys)[1] == "range_min,range_max,count\n0,0,1\n1,1,1\n"


def test_survey_cap(capsys):
    code, _, err = run(["survey", "11"], capsys)
    assert code == 1 and "refused" in err


def test_survey_resume(tmp_path, capsys):
    f = tmp_path / "s.jsonl"
    full = tmp_path / "full.jsonl"
    code, _, err = run(["survey", "5", "--out", str(f), "--max-records", "30"], capsys)
    assert code == 0 and "--resume" in err
    code, out, _ = run(["survey", "5", "--resume", str(f), "--threads", "3"], capsys)
    code2, out2, _ = run(["survey", "5", "--out", str(full)], capsys)
    assert code == code2 == 0 and out == out2
    assert f.read_bytes() == full.read_bytes()


def test_thread_variation_identical(capsys):
    outs = {run(["survey", "5", "--threads", str(t), "--format", "json"], capsys)[1] for t in (1, 2, 4)}
    assert len(outs) == 1


def test_probe(capsys):
    code, out, _ = run(["probe", "3", "zero-one"], capsys)
    assert code == 0 and "no counterexamples" in out


def test_verify(capsys):
    code, out, _ = run(["verify", "--max-n", "3"], capsys)
    assert code == 0 and "11/11 checks passed" in out
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


@pytest.mark.parametrize(
    "argv", [[], ["bogus"], ["genus-range"], ["survey", "x"], ["survey", "3", "--format", "xml"], ["trace", "11"]]
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "genus_range", "genus-range", "1212"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "[1,1]\n"
