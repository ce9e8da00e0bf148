import json

import jsonschema
import pytest

from fuzzygamma import serialize
from fuzzygamma.cli import main
from fuzzygamma.serialize import (CENSUS_SCHEMA, CLASSIFICATION_SCHEMA,
                                  REPORT_SCHEMA, structure_from_dict,
                                  structure_to_dict)

T1_DOC = {"elements": ["e"], "gammas": ["g"], "table": [[[0]]], "order": []}
LZ2_DOC = {"elements": ["a", "b"], "gammas": ["g"],
           "table": [[[0, 0]], [[1, 1]]], "order": []}
NZ2_DOC = {"elements": ["z", "a"], "gammas": ["g"],
           "table": [[[0, 0]], [[0, 0]]], "order": [[0, 1]]}


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_validate_ok(tmp_path, capsys):
    assert main(["validate", write(tmp_path, "t1.json", T1_DOC)]) == 0
    assert "valid structure" in capsys.readouterr().out


def test_validate_cyclic_order(tmp_path, capsys):
    doc = dict(NZ2_DOC, order=[[0, 1], [1, 0]])
    assert main(["validate", write(tmp_path, "bad.json", doc)]) == 2
    assert "antisymmetry" in capsys.readouterr().err


def test_validate_bad_index(tmp_path, capsys):
    doc = dict(T1_DOC, table=[[[3]]])
    assert main(["validate", write(tmp_path, "bad.json", doc)]) == 2


def test_validate_missing_file(capsys):
    assert main(["validate", "/nonexistent/file.json"]) == 2


def test_classify_lz2(tmp_path, capsys):
    assert main(["classify", write(tmp_path, "lz2.json", LZ2_DOC)]) == 0
    out = capsys.readouterr().out
    assert "regular: positive" in out


def test_classify_json_schema(tmp_path, capsys):
    assert main(["classify", "--json",
                 write(tmp_path, "nz2.json", NZ2_DOC)]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, CLASSIFICATION_SCHEMA)
    assert not doc["classes"]["regular"]["holds"]
    assert doc["classes"]["regular"]["failing_element"] == "a"


def test_check_all_nz2(tmp_path, capsys):
    assert main(["check", write(tmp_path, "nz2.json", NZ2_DOC),
                 "--all", "--levels", "6"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 25
    assert all("holds" in line for line in out)


def test_check_single_theorem(tmp_path, capsys):
    assert main(["check", write(tmp_path, "lz2.json", LZ2_DOC),
                 "--theorem", "T13", "--levels", "6"]) == 0
    assert "T13: holds" in capsys.readouterr().out


def test_check_negative_control_exit_1(tmp_path, capsys):
    assert main(["check", write(tmp_path, "nz2.json", NZ2_DOC),
                 "--theorem", "L8-unconditional"]) == 1
    assert "REFUTED" in capsys.readouterr().out


def test_check_unknown_theorem(tmp_path, capsys):
    assert main(["check", write(tmp_path, "t1.json", T1_DOC),
                 "--theorem", "T99"]) == 2


def test_check_json_report_schema(tmp_path, capsys):
    assert main(["check", write(tmp_path, "t1.json", T1_DOC),
                 "--all", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert len(doc["theorems"]) == 25


def test_compose(tmp_path, capsys):
    spath = write(tmp_path, "lz2.json", LZ2_DOC)
    fpath = write(tmp_path, "f.json", {"a": 0.5, "b": 1.0})
    gpath = write(tmp_path, "g.json", {"a": 0.25, "b": 0.75})
    assert main(["compose", spath, fpath, gpath]) == 0
    assert json.loads(capsys.readouterr().out) == {"a": 0.5, "b": 0.75}


def test_compose_nz2_empty_factorizations(tmp_path, capsys):
    spath = write(tmp_path, "nz2.json", NZ2_DOC)
    fpath = write(tmp_path, "f.json", {"z": 0.9, "a": 0.9})
    gpath = write(tmp_path, "g.json", {"z": 1.0, "a": 1.0})
    assert main(["compose", spath, fpath, gpath]) == 0
    assert json.loads(capsys.readouterr().out)["a"] == 0.0


def test_compose_rejects_out_of_range(tmp_path, capsys):
    spath = write(tmp_path, "lz2.json", LZ2_DOC)
    fpath = write(tmp_path, "f.json", {"a": 1.5, "b": 1.0})
    assert main(["compose", spath, fpath, fpath]) == 2


def test_enumerate_census(tmp_path, capsys):
    out = tmp_path / "census.json"
    assert main(["enumerate", "--n", "1", "--m", "1",
                 "--census", str(out)]) == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, CENSUS_SCHEMA)
    assert doc["total"] == 1
    assert all(c == 1 for c in doc["classes"].values())
    assert not doc["truncated"]


def test_enumerate_truncation_flag(tmp_path, capsys):
    assert main(["enumerate", "--n", "2", "--m", "2", "--limit", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["truncated"]
    assert doc["total"] == 3


def test_enumerate_caps(capsys):
    assert main(["enumerate", "--n", "9", "--m", "1"]) == 2


def test_structure_roundtrip_digest():
    S = structure_from_dict(NZ2_DOC)
    S2 = structure_from_dict(structure_to_dict(S))
    assert S.digest() == S2.digest()
    assert S == S2


def test_fuzzy_rejects_unknown_labels():
    S = structure_from_dict(LZ2_DOC)
    with pytest.raises(Exception):
        serialize.fuzzy_from_dict(S, {"q": 0.5})
