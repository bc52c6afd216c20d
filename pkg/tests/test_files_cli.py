"""Coloring file format and the command-line surface."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubecolor.cli import main
from cubecolor.coloring import coloring_from_classes, verify_coloring
from cubecolor.files import ColoringParseError, load_coloring, save_coloring
from cubecolor.fixture import q8_square_13_coloring
from cubecolor.hamming import Params
from cubecolor.sat import coloring_to_model
from cubecolor.search import greedy_color

Q3_TEXT = "n 3\nk 2\nclasses 4\nclass 0 7\nclass 1 6\nclass 2 5\nclass 3 4\n"


def test_save_load_round_trip_fixture():
    col = q8_square_13_coloring()
    back = load_coloring(save_coloring(col))
    assert back.params == col.params
    assert back.classes == col.classes


def test_save_writes_sorted_words_and_headers():
    col = coloring_from_classes(Params(3, 2, 4), [[7, 0], [6, 1], [5, 2], [4, 3]])
    assert save_coloring(col) == Q3_TEXT


def test_load_accepts_comments_blanks_and_empty_classes():
    text = "# comment\n\nn 2\nk 1\nclasses 3\nclass 0 3\n\nclass 1 2\nclass\n"
    col = load_coloring(text)
    assert [c.sorted_words() for c in col.classes] == [[0, 3], [1, 2], []]
    assert col.params == Params(2, 1, 3)


@given(st.integers(0, 10**9))
def test_save_load_round_trip_random(seed):
    rng = random.Random(seed)
    n = rng.randrange(1, 6)
    k = rng.randrange(1, n + 1)
    order = list(range(1 << n))
    rng.shuffle(order)
    col = greedy_color(Params(n, k), order)
    back = load_coloring(save_coloring(col))
    assert back.params == col.params
    assert back.classes == col.classes


@pytest.mark.parametrize(
    "text",
    [
        "k 2\nn 3\nclasses 1\nclass 0\n",  # headers out of order
        "n 3\nk 2\n",  # classes header missing
        "n 0\nk 0\nclasses 1\nclass\n",  # n out of range
        "n 3\nk 4\nclasses 1\nclass\n",  # k > n
        "n 3\nk 2\nclasses 0\n",  # class count not positive
        "n 3\nk 2\nclasses 2\nclass 0\n",  # too few class lines
        "n 3\nk 2\nclasses 1\nclass 0\nclass 1\n",  # too many class lines
        "n 3\nk 2\nclasses 1\nclass 8\n",  # word out of range
        "n 3\nk 2\nclasses 1\nclass x\n",  # word not an integer
        "n 3\nk 2\nclasses 1\nclass 1 1\n",  # word repeated in one class
        "n 3\nk 2\nclasses 1\nwords 0 1\n",  # wrong line keyword
        "n three\nk 2\nclasses 1\nclass\n",  # header not an integer
    ],
)
def test_load_rejects_malformed(text):
    with pytest.raises(ColoringParseError):
        load_coloring(text)


def test_cross_class_duplicate_is_a_verifier_matter_not_a_parse_error():
    text = "n 1\nk 1\nclasses 2\nclass 0 1\nclass 0\n"
    col = load_coloring(text)
    report = verify_coloring(col)
    assert not report.valid
    assert any(v.kind == "duplicate-word" for v in report.violations)


# --- CLI ---


@pytest.fixture
def q3_file(tmp_path):
    path = tmp_path / "q3.txt"
    path.write_text(Q3_TEXT)
    return str(path)


def test_cli_verify_valid(q3_file, capsys):
    assert main(["verify", q3_file]) == 0
    out = capsys.readouterr().out
    assert "status: valid" in out
    assert "class 1: size=2 min_distance=3" in out


def test_cli_verify_invalid(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("n 3\nk 2\nclasses 4\nclass 0 1\nclass 2 5\nclass 3 4\nclass 6 7\n")
    assert main(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert "violation: distance-violation words=0,1 classes=1" in out
    assert "status: invalid" in out


def test_cli_verify_parse_error(tmp_path, capsys):
    path = tmp_path / "garbage.txt"
    path.write_text("not a coloring\n")
    assert main(["verify", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_verify_missing_file(capsys):
    assert main(["verify", "/no/such/file"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_bound(capsys):
    assert main(["bound", "--n", "8", "--k", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "13"
    assert "known-table" in lines[1] and "20" in lines[1]


def test_cli_bound_unknown_is_operational_error(capsys):
    assert main(["bound", "--n", "13", "--k", "2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_search_tabu_success(tmp_path, capsys):
    out_path = tmp_path / "out.txt"
    rc = main(
        ["search", "--n", "3", "--k", "2", "--colors", "4", "--seed", "1", "--out", str(out_path)]
    )
    assert rc == 0
    assert "conflicts: 0" in capsys.readouterr().out
    assert verify_coloring(load_coloring(out_path.read_text())).valid


def test_cli_search_reports_failure_but_writes_best(tmp_path, capsys):
    out_path = tmp_path / "out.txt"
    rc = main(
        ["search", "--n", "3", "--k", "2", "--colors", "3", "--max-iters", "50",
         "--out", str(out_path)]
    )
    assert rc == 1
    assert "conflicts:" in capsys.readouterr().out
    assert out_path.exists()
    assert len(load_coloring(out_path.read_text()).classes) == 3


def test_cli_search_greedy_and_dsatur(tmp_path, capsys):
    for algo in ("greedy", "dsatur"):
        out_path = tmp_path / f"{algo}.txt"
        rc = main(
            ["search", "--n", "4", "--k", "2", "--colors", "8", "--algo", algo,
             "--out", str(out_path)]
        )
        assert rc == 0
        assert "colors used:" in capsys.readouterr().out
        assert verify_coloring(load_coloring(out_path.read_text())).valid


def test_cli_search_with_init(q3_file, tmp_path, capsys):
    out_path = tmp_path / "out.txt"
    rc = main(
        ["search", "--n", "3", "--k", "2", "--colors", "4", "--init", q3_file,
         "--out", str(out_path)]
    )
    assert rc == 0
    assert "iterations: 0" in capsys.readouterr().out  # init already has no conflicts


def test_cli_search_init_params_mismatch(q3_file, tmp_path, capsys):
    rc = main(
        ["search", "--n", "4", "--k", "2", "--colors", "8", "--init", q3_file,
         "--out", str(tmp_path / "x.txt")]
    )
    assert rc == 2
    assert "different n or k" in capsys.readouterr().err


def test_cli_extend_double(q3_file, tmp_path, capsys):
    out_path = tmp_path / "q4.txt"
    rc = main(["extend", "--in", q3_file, "--strategy", "double", "--out", str(out_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "colors: 8" in out and "conflicts: 0" in out
    col = load_coloring(out_path.read_text())
    assert col.params == Params(4, 2, 8)
    assert verify_coloring(col).valid


def test_cli_extend_freeze_subcube(q3_file, tmp_path, capsys):
    out_path = tmp_path / "q4.txt"
    rc = main(
        ["extend", "--in", q3_file, "--strategy", "freeze-subcube", "--colors", "8",
         "--seed", "0", "--out", str(out_path)]
    )
    assert rc == 0
    assert "conflicts: 0" in capsys.readouterr().out
    assert verify_coloring(load_coloring(out_path.read_text())).valid


def test_cli_encode_decode_round_trip(tmp_path, capsys):
    cnf_path = tmp_path / "q3.cnf"
    rc = main(["encode", "--n", "3", "--k", "2", "--colors", "4", "--out", str(cnf_path)])
    assert rc == 0
    header = [line for line in cnf_path.read_text().splitlines() if line.startswith("p ")]
    assert header == ["p cnf 32 104"]

    model_path = tmp_path / "model.txt"
    col = coloring_from_classes(Params(3, 2, 4), [[0, 7], [1, 6], [2, 5], [3, 4]])
    lits = sorted(coloring_to_model(col))
    model_path.write_text("v " + " ".join(map(str, lits)) + " 0\n")
    out_path = tmp_path / "decoded.txt"
    rc = main(
        ["decode-model", "--n", "3", "--k", "2", "--colors", "4",
         "--model", str(model_path), "--out", str(out_path)]
    )
    assert rc == 0
    back = load_coloring(out_path.read_text())
    assert back.classes == col.classes


def test_cli_decode_model_incomplete_is_error(tmp_path, capsys):
    model_path = tmp_path / "model.txt"
    model_path.write_text("v 1 0\n")
    rc = main(
        ["decode-model", "--n", "3", "--k", "2", "--colors", "4",
         "--model", str(model_path), "--out", str(tmp_path / "x.txt")]
    )
    assert rc == 2
    assert "no true color" in capsys.readouterr().err


def test_cli_stats(q3_file, capsys):
    assert main(["stats", q3_file]) == 0
    out = capsys.readouterr().out
    assert "fingerprint: n=3;k=2;" in out
    assert "class 1: size=2 min_distance=3" in out


def test_cli_fixture_pipes_into_verify(capsys, tmp_path):
    assert main(["fixture"]) == 0
    text = capsys.readouterr().out
    col = load_coloring(text)
    assert verify_coloring(col).valid
    path = tmp_path / "fixture.txt"
    path.write_text(text)
    assert main(["verify", str(path)]) == 0


def test_cli_stdin_dash(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(Q3_TEXT))
    assert main(["verify", "-"]) == 0
    assert "status: valid" in capsys.readouterr().out


def test_cli_unknown_arguments_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--frobnicate", "x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["no-such-command"])
