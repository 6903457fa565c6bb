import json

import pytest

from scrollcohom.sweep import enumerate_family, record_key, run_sweep


def test_enumerate_family():
    scrolls = enumerate_family({"m": [1], "n": [1, 2], "a_min": 1, "a_max": 3})
    assert len(scrolls) == 6 + 10  # nondecreasing pairs / triples in [1,3]
    assert all(s.a == tuple(sorted(s.a)) for s in scrolls)


def test_record_key_stable():
    scrolls = enumerate_family({"m": [1], "n": [1], "a_min": 1, "a_max": 1})
    k1 = record_key(scrolls[0], "reg", {"sheaf": {"split": [[0, 0]]}})
    k2 = record_key(scrolls[0], "reg", {"sheaf": {"split": [[0, 0]]}})
    assert k1 == k2 and len(k1) == 64


def test_sweep_persists_and_caches(tmp_path):
    family = {"m": [1], "n": [1], "a_min": 1, "a_max": 2}
    out = run_sweep(family, ["compare", "reg"], {"split": [[0, 0]]}, (-1, 1), (-1, 1), str(tmp_path))
    assert out["fresh"] == out["cells"] > 0
    csv_first = (tmp_path / "summary.csv").read_bytes()
    again = run_sweep(family, ["compare", "reg"], {"split": [[0, 0]]}, (-1, 1), (-1, 1), str(tmp_path))
    assert again["fresh"] == 0 and again["cached"] == again["cells"]
    assert (tmp_path / "summary.csv").read_bytes() == csv_first
    recs = [json.loads(line) for line in (tmp_path / "records.jsonl").read_text().splitlines()]
    assert all(rec["result"].get("violations") == [] for rec in recs if rec["op"] == "compare")
    assert (tmp_path / "summary.csv").read_text().startswith("# schema=scrollcohom-sweep-v1")


def test_sweep_includes_hirzebruch_separation(tmp_path):
    family = {"m": [1], "n": [1], "a_min": 0, "a_max": 2}
    run_sweep(family, ["compare"], {"split": [[0, 0]]}, (-1, 1), (-1, 1), str(tmp_path))
    recs = [json.loads(line) for line in (tmp_path / "records.jsonl").read_text().splitlines()]
    f2 = [r for r in recs if r["scroll"]["a"] == [0, 2]]
    assert f2 and [0, 0] in f2[0]["result"]["separations"]
    assert all(r["result"]["violations"] == [] for r in recs)


def test_oversized_grid_rejected(tmp_path):
    family = {"m": [1], "n": [1], "a_min": 1, "a_max": 9}
    with pytest.raises(ValueError, match="over the"):
        run_sweep(family, ["cohom"], {"split": [[0, 0]]}, (-15, 15), (-15, 15), str(tmp_path))
