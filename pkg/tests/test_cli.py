import json
from pathlib import Path

import pytest

from temarema import default_grammar_path
from temarema.cli import main

FIXTURES = Path(__file__).parent / "fixtures"
GRAMMAR = str(default_grammar_path())


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def annotate_to(tmp_path, name="split_1"):
    out = tmp_path / f"{name}.annotated.conllu"
    code = main([
        "annotate", str(FIXTURES / "progression" / f"{name}.conllu"),
        "--grammar", GRAMMAR, "-o", str(out),
    ])
    assert code == 0
    return out


def test_annotate_writes_annotated_conllu(tmp_path, capsys):
    out = annotate_to(tmp_path)
    text = out.read_text(encoding="utf-8")
    assert "# tp_status = ok" in text
    assert "TP=Theme" in text
    err = capsys.readouterr().err
    assert "3 ok" in err


def test_annotate_grammar_error_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.grammar"
    bad.write_text("rule without colon\n", encoding="utf-8")
    code, _, err = run(
        ["annotate", str(FIXTURES / "progression" / "split_1.conllu"), "--grammar", str(bad)],
        capsys,
    )
    assert code == 1
    assert "line 1" in err


def test_annotate_missing_input_exits_2(capsys):
    code, _, err = run(
        ["annotate", "/nonexistent/file.conllu", "--grammar", GRAMMAR], capsys
    )
    assert code == 2


def test_annotate_parse_error_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.conllu"
    bad.write_text("1\tx\n\n", encoding="utf-8")
    code, _, err = run(["annotate", str(bad), "--grammar", GRAMMAR], capsys)
    assert code == 1
    assert "line 1" in err


def test_schema_json_and_dot(tmp_path, capsys):
    annotated = annotate_to(tmp_path)
    out = tmp_path / "schema.json"
    code = main(["schema", str(annotated), "--tau", "0.33", "-o", str(out)])
    assert code == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert {l["kind"] for l in payload["links"]} == {"split"}

    dot_out = tmp_path / "schema.dot"
    code = main([
        "schema", str(annotated), "--tau", "0.33", "--format", "dot", "-o", str(dot_out),
    ])
    assert code == 0
    dot = dot_out.read_text(encoding="utf-8")
    assert dot.count('[label="split"]') == 2
    capsys.readouterr()


def test_schema_unannotated_input_exits_1_with_hint(capsys):
    code, _, err = run(
        ["schema", str(FIXTURES / "progression" / "split_1.conllu")], capsys
    )
    assert code == 1
    assert "annotate" in err


def test_schema_embedding_requires_vectors(tmp_path, capsys):
    annotated = annotate_to(tmp_path)
    code, _, err = run(["schema", str(annotated), "--provider", "embedding"], capsys)
    assert code == 1
    assert "--vectors" in err


def test_schema_missing_vector_file_exits_1(tmp_path, capsys):
    annotated = annotate_to(tmp_path)
    code, _, err = run(
        ["schema", str(annotated), "--provider", "embedding", "--vectors",
         str(tmp_path / "none.vec")],
        capsys,
    )
    assert code == 1
    assert "not found" in err


def test_schema_bad_tau_rejected(tmp_path, capsys):
    annotated = annotate_to(tmp_path)
    code, _, err = run(["schema", str(annotated), "--tau", "1.5"], capsys)
    assert code == 1


def test_stats_ratio_over_directory(tmp_path, capsys):
    for name in ("constant_1", "linear_1"):
        annotate_to(tmp_path, name).rename(tmp_path / f"{name}.conllu")
    (tmp_path / "constant_1.annotated.conllu").unlink(missing_ok=True)
    code, out, _ = run(["stats", "ratio", str(tmp_path)], capsys)
    assert code == 0
    assert "pooled" in out

    json_out = tmp_path / "ratio.json"
    code = main(["stats", "ratio", str(tmp_path), "--format", "json", "-o", str(json_out)])
    assert code == 0
    payload = json.loads(json_out.read_text(encoding="utf-8"))
    assert set(payload["per_doc"]) == {"constant_1", "linear_1"}
    capsys.readouterr()


def test_stats_compare_identical_is_zero(tmp_path, capsys):
    annotated = annotate_to(tmp_path)
    code, out, _ = run(
        ["stats", "compare", str(annotated), str(annotated)], capsys
    )
    assert code == 0
    assert "overmatches:        0" in out


def test_stats_compare_misaligned_exits_1(tmp_path, capsys):
    a = annotate_to(tmp_path, "constant_1")
    b = annotate_to(tmp_path, "linear_1")
    code, _, err = run(["stats", "compare", str(a), str(b)], capsys)
    assert code == 1
    assert "diverg" in err or "document" in err


def test_stats_ratio_unannotated_exits_1(capsys):
    code, _, err = run(
        ["stats", "ratio", str(FIXTURES / "progression" / "split_1.conllu")], capsys
    )
    assert code == 1
    assert "annotate" in err


@pytest.mark.parametrize("fmt", ["json", "dot"])
def test_cli_outputs_deterministic(tmp_path, fmt, capsys):
    annotated = annotate_to(tmp_path)
    outputs = []
    for run_index in (1, 2):
        out = tmp_path / f"schema{run_index}.{fmt}"
        assert main([
            "schema", str(annotated), "--tau", "0.33", "--format", fmt, "-o", str(out),
        ]) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    capsys.readouterr()
