import json

import pytest

from linksgould.cli import main, run_markov_suite


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_trefoil(capsys):
    code, out, _ = run(capsys, "eval", "1 1 1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1 + 2 q^{2}, - q^{1} - q^{3}, q^{2}"
    assert any(line.startswith("writhe:") and line.endswith("3") for line in lines)
    assert any(line.startswith("palindromic:  no") for line in lines)


def test_eval_unknot(capsys):
    code, out, _ = run(capsys, "eval", "", "--strings", "1")
    assert code == 0
    assert out.splitlines()[0] == "1"


def test_eval_split_link_notes_zero(capsys):
    code, out, _ = run(capsys, "eval", "", "--strings", "2")
    assert code == 0
    assert out.splitlines()[0] == "0"
    assert "split" in out


def test_eval_size_cap_refusal(capsys):
    code, _, err = run(capsys, "eval", "1 1 1 1 1 1", "--strings", "6")
    assert code == 1
    assert "16777216" in err
    # raising the cap admits the evaluation
    code, out, _ = run(
        capsys, "eval", "1 1 1 1 1 1", "--strings", "6", "--max-size", str(4**12)
    )
    assert code == 0
    assert out.splitlines()[0] == "0"  # four free strands: split closure


def test_eval_parse_error(capsys):
    code, _, err = run(capsys, "eval", "1 bogus")
    assert code == 2
    assert "bogus" in err


def test_eval_machine_format(capsys):
    code, out, err = run(capsys, "eval", "1^3", "--format", "compact-machine")
    assert code == 0
    assert out == "0: [0:1, 2:2]; 1: [1:-1, 3:-1]; 2: [2:1]\n"
    assert "elapsed" in err  # metadata moved off stdout


def test_eval_laurent_format(capsys):
    code, out, _ = run(capsys, "eval", "1 1", "--format", "laurent")
    assert code == 0
    assert out == "1*q^1*P^-1 + -1 + -1*q^2 + 1*q^1*P^1\n"


def test_eval_json_format(capsys):
    code, out, _ = run(capsys, "eval", "1 -2 1 -2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["strings"] == 3
    assert doc["writhe"] == 0
    assert doc["components"] == 1
    assert doc["palindromic_q"] is True
    assert doc["compact"][0] == [[-2, 2], [0, 7], [2, 2]]


def test_machine_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "eval", "1^2 2^3 3^3", "--format", "compact-machine")
    _, second, _ = run(capsys, "eval", "1^2 2^3 3^3", "--format", "compact-machine")
    assert first == second


def test_batch(tmp_path, capsys):
    batch = tmp_path / "words.txt"
    batch.write_text("# two standard closures\ntrefoil 1 1 1\nfig8 1 -2 1 -2\n")
    code, out, _ = run(capsys, "batch", str(batch))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "trefoil; 0: [0:1, 2:2]; 1: [1:-1, 3:-1]; 2: [2:1]"
    assert lines[1].startswith("fig8; 0: [-2:2, 0:7, 2:2]")


def test_batch_empty_file(tmp_path, capsys):
    batch = tmp_path / "empty.txt"
    batch.write_text("")
    code, out, _ = run(capsys, "batch", str(batch))
    assert code == 0 and out == ""


def test_batch_continues_past_bad_line(tmp_path, capsys):
    batch = tmp_path / "words.txt"
    batch.write_text("a 1 1 1\nb 1 ?\nc 1 1\n")
    code, out, err = run(capsys, "batch", str(batch))
    assert code == 1
    assert len(out.splitlines()) == 2
    assert "b:" in err


def test_batch_jobs_preserve_order(tmp_path, capsys):
    batch = tmp_path / "words.txt"
    batch.write_text("a 1\nb 1 1\nc 1 1 1\nd 1 1 1 1\n")
    _, serial, _ = run(capsys, "batch", str(batch))
    code, parallel, _ = run(capsys, "batch", str(batch), "--jobs", "2")
    assert code == 0
    assert parallel == serial


def test_batch_missing_file(capsys):
    code, _, err = run(capsys, "batch", "/nonexistent/words.txt")
    assert code == 1 and "error" in err


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 0
    assert "Yang-Baxter" in out
    assert "all passed" in out


def test_selftest_small_seeded(capsys):
    code, out, _ = run(capsys, "selftest", "--braids", "3", "--seed", "12345")
    assert code == 0
    assert "seed 12345" in out


def test_selftest_seed_changes_braids_not_outcome():
    a = run_markov_suite(seed=1, braids=3)
    b = run_markov_suite(seed=2, braids=3)
    assert a.ok and b.ok
    assert a.checks == b.checks == 3 * 7


def test_dump_rmatrix(capsys):
    code, out, _ = run(capsys, "dump-rmatrix")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 17  # header + 16 rows
    assert lines[1].startswith("[1 1]")
    assert "1*q^1*p^-2" in lines[1]  # top-left cell
    assert lines[-1].rstrip().endswith("1*q^1*p^2")  # bottom-right cell


def test_requires_subcommand(capsys):
    with pytest.raises(SystemExit):
        main([])
