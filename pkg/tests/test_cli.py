import json
import subprocess
import sys
from pathlib import Path

import pytest

from icequiver import serialize
from icequiver.cli import main

from refdata import reference_39


@pytest.fixture
def ref_file(tmp_path):
    p = tmp_path / "ref39.json"
    p.write_text(serialize.dumps(serialize.collection_to_json(reference_39())))
    return p


def test_check_reference(ref_file, capsys):
    assert main(["check", str(ref_file)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["selfInjective"] is True
    assert report["symmetric"] is True
    assert report["nakayamaOrder"] == 3
    assert report["cuts"]["enoughCuts"] is True
    assert report["memberCount"] == 19


def test_check_invalid_collection(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"k": 2, "n": 4, "labels": [[1, 3], [2, 4]]}))
    assert main(["check", str(bad)]) == 1

    malformed = tmp_path / "malformed.json"
    malformed.write_text("{not json")
    assert main(["check", str(malformed)]) == 1


def test_check_profiles_renders_rim_walks(ref_file, capsys):
    assert main(["check", str(ref_file), "--profiles"]) == 0
    out = capsys.readouterr().out
    assert "rim walk of 147" in out
    assert "*" in out.split("rim walk of 147")[1]


def test_mutate_writes_collection(ref_file, tmp_path, capsys):
    assert main(["mutate", str(ref_file), "134", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    payload = json.loads(out[out.index("{") :])
    assert [2, 4, 5] in payload["labels"]
    assert [1, 3, 4] not in payload["labels"]


def test_mutate_not_mutable_exit_code(ref_file, tmp_path):
    assert main(["mutate", str(ref_file), "147", "--out", str(tmp_path)]) == 3


def test_cuts_lists_reference_cut(ref_file, capsys):
    assert main(["cuts", str(ref_file)]) == 0
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert payload["count"] == 52


def test_export_roundtrip(ref_file, tmp_path, capsys):
    assert main(["export", str(ref_file), "json", "--out", str(tmp_path)]) == 0
    data = json.loads((tmp_path / "ref39_quiver.json").read_text())
    assert len(data["vertices"]) == 19
    assert len(data["arrows"]) == 36

    assert main(["export", str(ref_file), "dot", "--out", str(tmp_path)]) == 0
    dot = (tmp_path / "ref39.dot").read_text()
    assert dot.count("->") == 36

    assert main(["export", str(ref_file), "tikz", "--out", str(tmp_path)]) == 0
    tikz = (tmp_path / "ref39.tex").read_text()
    assert tikz.count("quivarrow]") == 36
    assert tikz.count("\\node") == 19


def test_export_tikz_with_cut(ref_file, tmp_path, capsys):
    # find the cut ids via the cuts command, then render them dotted
    assert main(["cuts", str(ref_file)]) == 0
    payload = json.loads(capsys.readouterr().out)
    ids = payload["cuts"][0]["arrows"]
    arg = ",".join(str(i) for i in ids)
    assert main(
        ["export", str(ref_file), "tikz", "--cut-arrows", arg, "--out", str(tmp_path)]
    ) == 0
    tikz = (tmp_path / "ref39.tex").read_text()
    assert tikz.count("cutarrow]") == len(ids)
    assert tikz.count("quivarrow]") == 36 - len(ids)


def test_family_grid(tmp_path, capsys):
    assert main(["family", "grid", "2", "--out", str(tmp_path)]) == 0
    quiver = json.loads((tmp_path / "grid_2_quiver.json").read_text())
    assert len(quiver["vertices"]) == 1
    report = json.loads((tmp_path / "grid_2_report.json").read_text())
    assert report["selfInjective"] is True


def test_family_cobweb_minus_5(tmp_path):
    assert main(["family", "cobweb-", "5", "--out", str(tmp_path)]) == 0
    quiver = json.loads((tmp_path / "cobwebMinus_5_quiver.json").read_text())
    assert len(quiver["vertices"]) == 15
    coll = json.loads((tmp_path / "cobwebMinus_5_collection.json").read_text())
    assert (coll["k"], coll["n"]) == (6, 10)


def test_family_sporadic(tmp_path):
    assert (
        main(["family", "sporadic", "6-21", "--no-match", "--out", str(tmp_path)]) == 0
    )
    quiver = json.loads((tmp_path / "sporadic_6_21_quiver.json").read_text())
    assert len(quiver["vertices"]) == 70


def test_family_unsupported_exit_code(tmp_path):
    assert main(["family", "grid", "1", "--out", str(tmp_path)]) == 2
    assert main(["family", "sporadic", "9-99", "--out", str(tmp_path)]) == 2


def test_cli_entrypoint_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "icequiver.cli", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "family" in proc.stdout
