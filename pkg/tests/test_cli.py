import io
import json
import shutil
import sys

import pytest

from mapumorph.cli import main
from mapumorph.lexicon import packaged_data_dir

GOLDEN_LINE = "tripay\t-IV.tripa +IND +3.ø"

CORPUS = "Tripay ñi chaw.\n"

RECLASS_CORPUS = (
    "müna pichi ruka nga,\n"
    "kiñe küdaw mew tripay.\n"
    "langümfinge ti achawall;\n"
    "küdaw mew amuy, umag nga.\n"
)


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_analyze_plain(capsys):
    rc, out, _ = run(capsys, ["analyze", "tripay"])
    assert rc == 0
    assert out == GOLDEN_LINE + "\n"


def test_analyze_unanalyzable_sets_exit_code(capsys):
    rc, out, _ = run(capsys, ["analyze", "tripay", "zzz"])
    assert rc == 1
    assert out.splitlines() == [GOLDEN_LINE, "zzz\tUNANALYZABLE"]


def test_analyze_empty_form_is_usage_error(capsys):
    rc, _, err = run(capsys, ["analyze", ""])
    assert rc == 2 and "error:" in err


def test_analyze_records(capsys):
    rc, out, _ = run(capsys, ["analyze", "--format", "records", "pichikael"])
    assert rc == 0
    record = json.loads(out)
    assert record["input"] == "pichikael" and record["ambiguity"] == 2
    first = record["analyses"][0]
    assert first["root"] == "pichi" and first["category"] == "Aj"
    assert first["tags"] == ["CONT", "OVN"] and first["finite"] is False


def test_analyze_tsv(capsys):
    rc, out, _ = run(capsys, ["analyze", "--format", "tsv", "pichikael", "zz"])
    assert rc == 1
    lines = out.splitlines()
    assert lines[0] == "token\tanalysis\tgloss\tfiniteness"
    assert lines[1] == "pichikael\t1\t-AJ.pichi +CONT +OVN\tnonfinite"
    assert lines[2].startswith("pichikael\t2\t")
    assert lines[3] == "zz\t0\t\t"


def test_analyze_out_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    rc, out, _ = run(capsys, ["analyze", "--out", str(target), "tripay"])
    assert rc == 0 and out == ""
    assert target.read_text(encoding="utf-8") == GOLDEN_LINE + "\n"


def test_analyze_corpus_file_with_report(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text(CORPUS, encoding="utf-8")
    rc, out, err = run(
        capsys, ["analyze", "--corpus", str(corpus), "--ambiguity-report"]
    )
    assert rc == 1  # ñi and chaw are not verb forms
    assert out.splitlines()[0] == GOLDEN_LINE
    assert "tokens 3" in err and "unanalyzable 2" in err


def test_analyze_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("tripay langümün\n"))
    rc, out, _ = run(capsys, ["analyze"])
    assert rc == 0
    assert out.splitlines() == [GOLDEN_LINE, "langümün\t-AJ.la +VRB.ø +CA +IND1SG"]


def test_generate_plain(capsys):
    rc, out, _ = run(capsys, ["generate", "la", "VRB,CA-m,IND1SG"])
    assert (rc, out) == (0, "langümün\n")
    rc, out, _ = run(capsys, ["generate", "nel", "CA-m"])
    assert (rc, out) == (0, "nelüm\nnelküm\n")
    rc, out, _ = run(capsys, ["generate", "pichi", ""])
    assert (rc, out) == (0, "pichi\n")


def test_generate_reading_flag(capsys):
    rc, out, _ = run(capsys, ["generate", "monge", "IND,3", "--reading", "tv"])
    assert (rc, out) == (0, "mongey\n")
    rc, out, _ = run(capsys, ["generate", "monge:VI+tv", "IND,3"])
    assert (rc, out) == (0, "mongey\n")
    rc, _, err = run(capsys, ["generate", "monge+xx", "IND,3"])
    assert rc == 2 and "unknown reading" in err


def test_generate_records(capsys):
    rc, out, _ = run(capsys, ["generate", "--format", "records", "la", "CA-m,IND1SG"])
    assert rc == 0
    record = json.loads(out)
    assert record["surfaces"] == ["langümün"]
    assert record["gloss"] == "-AJ.la +VRB.ø +CA +IND1SG"
    assert record["reading"] is None


def test_generate_rejection(capsys):
    rc, out, err = run(capsys, ["generate", "nü", "CA-m,IND,3"])
    assert rc == 1 and out == ""
    assert "rejected:" in err and "causative-on-transitive" in err


def test_generate_usage_errors(capsys):
    rc, _, err = run(capsys, ["generate", "tripa", "BOGUS"])
    assert rc == 2 and "error:" in err
    rc, _, err = run(capsys, ["generate", "nosuchroot", "IND"])
    assert rc == 2 and "error:" in err


def test_validate_packaged_data(capsys):
    rc, out, err = run(capsys, ["validate"])
    assert rc == 0 and err == ""
    assert out == "validate: ok (69 roots, 19 suffixes)\n"


def test_validate_reports_diagnostics(capsys, tmp_path):
    roots = tmp_path / "roots.tsv"
    row = "tripa\tVI\tintransitive\tto go out\t-\t-\t-\tK\n"
    roots.write_text(row + row, encoding="utf-8")
    rc, _, err = run(capsys, ["validate", "--lexicon", str(roots)])
    assert rc == 1 and "duplicate-entry" in err


def test_validate_parse_error(capsys, tmp_path):
    roots = tmp_path / "roots.tsv"
    roots.write_text("one\ttwo\tthree\n", encoding="utf-8")
    rc, _, err = run(capsys, ["validate", "--lexicon", str(roots)])
    assert rc == 2 and "error:" in err


def test_missing_data_file(capsys, tmp_path):
    rc, _, err = run(capsys, ["validate", "--lexicon", str(tmp_path / "no.tsv")])
    assert rc == 2 and "no such data file" in err


def test_env_data_dir(capsys, tmp_path, monkeypatch):
    data = tmp_path / "data"
    data.mkdir()
    for name in ("roots.tsv", "suffixes.tsv", "causative_um.tsv"):
        shutil.copy(packaged_data_dir() / name, data / name)
    monkeypatch.setenv("MAPUMORPH_DATA", str(data))
    rc, out, _ = run(capsys, ["validate"])
    assert rc == 0 and "validate: ok" in out

    empty = tmp_path / "empty"
    empty.mkdir()
    monkeypatch.setenv("MAPUMORPH_DATA", str(empty))
    rc, _, err = run(capsys, ["validate"])
    assert rc == 2 and str(empty) in err


def test_validate_catches_bad_override(capsys, tmp_path):
    table = tmp_path / "overrides.tsv"
    table.write_text("IND\t(ü)y\t9\tmood\tnone\n", encoding="utf-8")
    rc, _, err = run(capsys, ["validate", "--overrides", str(table)])
    assert rc == 1 and "mood-slot" in err


def test_suffix_overrides(capsys, tmp_path):
    table = tmp_path / "overrides.tsv"
    table.write_text("3A\tmu\t1\ts1\tnone\n", encoding="utf-8")
    rc, out, _ = run(capsys, ["generate", "tripa", "IND,1,PL,3A"])
    assert rc == 0 and out.splitlines() == ["tripayiñmu", "tripayiñmew"]
    rc, out, _ = run(
        capsys,
        ["generate", "--overrides", str(table), "tripa", "IND,1,PL,3A"],
    )
    assert rc == 0 and out.splitlines() == ["tripayiñmu"]


def test_reclassify_stdout(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text(RECLASS_CORPUS, encoding="utf-8")
    rc, out, _ = run(
        capsys, ["reclassify", str(corpus), "--roots", "küdaw,la,tripa"]
    )
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "root\tinitial\tfinal\taction\tisolated\tcausative\tnote"
    cells = [line.split("\t") for line in lines[1:]]
    assert [c[0] for c in cells] == ["küdaw", "la", "tripa"]
    assert cells[0][3] == "to_nonverbal" and cells[0][4] == "2"
    assert cells[1][3] == "to_intransitive"
    assert cells[2][3] == "keep"


def test_reclassify_table_format(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text(RECLASS_CORPUS, encoding="utf-8")
    rc, out, _ = run(
        capsys,
        ["reclassify", str(corpus), "--roots", "küdaw", "--format", "table"],
    )
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("root") and "\t" not in out
    assert lines[1].startswith("küdaw  VI")


def test_reclassify_out_writes_tsv_and_chart(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text(RECLASS_CORPUS, encoding="utf-8")
    report = tmp_path / "report.tsv"
    rc, out, err = run(
        capsys,
        [
            "reclassify", str(corpus),
            "--roots", "küdaw,la,tripa",
            "--only-changes",
            "--out", str(report),
        ],
    )
    assert rc == 0 and out == ""
    text = report.read_text(encoding="utf-8").splitlines()
    assert len(text) == 3  # header + two proposals, keep row dropped
    assert (tmp_path / "report.png").is_file()
    assert "wrote" in err


def test_stats_out_writes_tsv_and_chart(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text(CORPUS, encoding="utf-8")
    report = tmp_path / "tokens.tsv"
    rc, _, err = run(capsys, ["stats", str(corpus), "--out", str(report)])
    assert rc == 0
    lines = report.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "position\ttoken\tambiguity\tbest_gloss"
    assert lines[1] == "0\ttripay\t1\t" + GOLDEN_LINE.split("\t")[1]
    assert (tmp_path / "tokens.png").is_file()
    assert "tokens 3" in err and "mean ambiguity 0.33" in err


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("mapumorph ")
