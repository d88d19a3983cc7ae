import json

from analysis.grothendieck import table_document
from utils.compare_tables import compare_entries, load_document, main


def dump(path, doc):
    path.write_text(json.dumps(doc, ensure_ascii=False), encoding="utf-8")
    return str(path)


def test_load_document_picks_entry_list(tmp_path):
    kind, entries = load_document(dump(tmp_path / "t.json", table_document("complex-k")))
    assert kind == "columns"
    assert len(entries) == 2
    kind, entries = load_document(dump(tmp_path / "c.json", {"class": "R"}))
    assert kind == "document"
    assert entries == [{"class": "R"}]


def test_compare_entries():
    assert compare_entries({"a": 1}, {"a": 1}) == (True, "")
    matches, error = compare_entries({"a": 1, "seconds": 0.1}, {"a": 2, "seconds": 0.2})
    assert not matches
    assert "'a' mismatch" in error
    assert compare_entries({"a": 1, "seconds": 0.1}, {"a": 1, "seconds": 0.2}, ignored={"seconds"})[0]
    matches, error = compare_entries({"a": 1}, {"b": 1})
    assert "present in only one document" in error


def test_nested_fields_are_ignored():
    first = {"name": "dd", "stats": {"timing": {"mean": 1.0}, "passed": 1}}
    second = {"name": "dd", "stats": {"timing": {"mean": 2.0}, "passed": 1}}
    assert compare_entries(first, second, ignored={"timing"}) == (True, "")


def test_main_identical_tables(tmp_path, capsys):
    doc = table_document("real-k")
    a, b = dump(tmp_path / "a.json", doc), dump(tmp_path / "b.json", doc)
    assert main([a, b]) == 0
    assert "SUCCESS: All 8 entries match" in capsys.readouterr().out


def test_main_reports_first_mismatch(tmp_path, capsys):
    doc = table_document("real-k")
    changed = json.loads(json.dumps(doc))
    changed["columns"][3]["v"] = 2
    a, b = dump(tmp_path / "a.json", doc), dump(tmp_path / "b.json", changed)
    assert main([a, b]) == 1
    out = capsys.readouterr().out
    assert "MISMATCH at entry 4 (index 3)" in out
    assert "'v' mismatch: 1 vs 2" in out


def test_main_kind_and_count_mismatch(tmp_path, capsys):
    real = dump(tmp_path / "r.json", table_document("real-k"))
    complex_k = dump(tmp_path / "c.json", table_document("complex-k"))
    assert main([real, complex_k]) == 1
    assert main([real, dump(tmp_path / "x.json", {"reports": []})]) == 1
    assert "kinds differ" in capsys.readouterr().out


def test_timing_is_skipped_by_default(tmp_path, capsys):
    first = {"reports": [{"name": "dd", "status": "pass", "seconds": 0.5}]}
    second = {"reports": [{"name": "dd", "status": "pass", "seconds": 0.9}]}
    a, b = dump(tmp_path / "a.json", first), dump(tmp_path / "b.json", second)
    assert main([a, b]) == 0
    assert main([a, b, "--with-timing"]) == 1
