import io
import json

import pytest

from treespectra.catalog import CatalogRecord
from treespectra.cli import main
from treespectra.search import CursorError, SearchConfig, run_search
from treespectra.trees import format_tree_text, path, s_tree


def run_engine(tmp_path, **kwargs):
    out = io.StringIO()
    err = io.StringIO()
    config = SearchConfig(**kwargs)
    summary = run_search(config, out, err)
    records = [CatalogRecord.from_json(line)
               for line in out.getvalue().splitlines()]
    return records, summary


class TestSearchEngine:
    def test_nullity_two_integral(self, tmp_path):
        records, _ = run_engine(tmp_path, max_order=10, nullity=2,
                                integral_only=True)
        assert len(records) == 1
        assert records[0].order == 6
        assert records[0].spectrum == {"-2": 1, "-1": 1, "0": 2, "1": 1, "2": 1}

    def test_integral_up_to_ten(self, tmp_path):
        records, _ = run_engine(tmp_path, max_order=10, integral_only=True)
        assert [r.order for r in records] == [1, 2, 5, 6, 7, 10]

    def test_reduced_filter(self, tmp_path):
        records, _ = run_engine(tmp_path, max_order=6, reduced_only=True,
                                integral_only=True)
        # one vertex, the edge, the order-5 star, and the nullity-2 tree
        assert {r.order for r in records} == {1, 2, 5, 6}

    def test_shard_union(self, tmp_path):
        full, _ = run_engine(tmp_path, max_order=9, nullity=1)
        merged = []
        for i in range(3):
            part, _ = run_engine(tmp_path, max_order=9, nullity=1, shard=(i, 3))
            merged.extend(r.code for r in part)
        assert sorted(merged) == sorted(r.code for r in full)
        assert len(merged) == len(set(merged))

    def test_resume_no_duplicates(self, tmp_path):
        cursor = str(tmp_path / "cursor.json")
        out_path = str(tmp_path / "catalog.jsonl")
        with open(out_path, "w", encoding="utf-8") as fh:
            run_search(SearchConfig(max_order=8, integral_only=True,
                                    resume_path=cursor, cursor_every=2),
                       fh, io.StringIO())
        first = open(out_path).read().splitlines()
        # a rerun against the completed cursor adds nothing
        with open(out_path, "a", encoding="utf-8") as fh:
            summary = run_search(SearchConfig(max_order=8, integral_only=True,
                                              resume_path=cursor,
                                              cursor_every=2),
                                 fh, io.StringIO())
        assert summary.get("resumed_complete")
        assert open(out_path).read().splitlines() == first

    def test_cursor_mismatch_refused(self, tmp_path):
        cursor = str(tmp_path / "cursor.json")
        run_search(SearchConfig(max_order=5, resume_path=cursor),
                   io.StringIO(), io.StringIO())
        with pytest.raises(CursorError):
            run_search(SearchConfig(max_order=6, resume_path=cursor),
                       io.StringIO(), io.StringIO())

    def test_corrupt_cursor_refused(self, tmp_path):
        cursor = tmp_path / "cursor.json"
        cursor.write_text("{not json")
        with pytest.raises(CursorError):
            run_search(SearchConfig(max_order=5, resume_path=str(cursor)),
                       io.StringIO(), io.StringIO())

    def test_record_roundtrip(self, tmp_path):
        records, _ = run_engine(tmp_path, max_order=7, integral_only=True)
        for record in records:
            assert record.roundtrip_ok()
            parsed = CatalogRecord.from_json(record.to_json())
            assert parsed.code == record.code
            assert parsed.spectrum == record.spectrum

    def test_bad_config(self):
        with pytest.raises(ValueError):
            SearchConfig(max_order=0)
        with pytest.raises(ValueError):
            SearchConfig(max_order=5, shard=(2, 2))


class TestCli:
    def test_charpoly_file(self, tmp_path, capsys):
        f = tmp_path / "edge.txt"
        f.write_text(format_tree_text(path(2)))
        assert main(["charpoly", str(f)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "-1,0,1"

    def test_charpoly_code_factored(self, capsys):
        assert main(["charpoly", "--code", s_tree([1]).code_str()]) == 0
        out = capsys.readouterr().out
        assert "x * (x^2 - 1)^2 * (x^2 - 4)" in out

    def test_charpoly_malformed(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("3\n0 1\n1 zebra\n")
        assert main(["charpoly", str(f)]) == 2
        assert "line 3" in capsys.readouterr().err

    def test_spectrum(self, capsys):
        assert main(["spectrum", "--code", "0,1,1,1,1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["is_integral"] and data["nullity"] == 3

    def test_nullity(self, capsys):
        assert main(["nullity", "--code", "0,1,2,1,2,1,2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["by_polynomial"] == data["by_matching"] == 1

    def test_reduce(self, capsys):
        assert main(["reduce", "--code", path(5).code_str()]) == 0
        lines = capsys.readouterr().out.splitlines()
        summary = json.loads(lines[-1])
        assert summary["core"] == "0" and summary["strips"] == 2

    def test_reduce_noop(self, capsys):
        assert main(["reduce", "--code", "0,1"]) == 0
        summary = json.loads(capsys.readouterr().out.splitlines()[-1])
        assert summary["strips"] == 0

    def test_search_cli(self, tmp_path, capsys):
        code = main(["search", "--max-order", "8", "--nullity", "3",
                     "--integral"])
        assert code == 0
        out = capsys.readouterr().out.splitlines()
        assert len(out) == 1 and json.loads(out[0])["order"] == 5

    def test_search_out_file_and_resume(self, tmp_path):
        out_file = tmp_path / "cat.jsonl"
        cursor = tmp_path / "cur.json"
        args = ["search", "--max-order", "7", "--integral",
                "--out", str(out_file), "--resume", str(cursor),
                "--cursor-every", "3"]
        assert main(args) == 0
        first = out_file.read_text()
        assert main(args) == 0
        assert out_file.read_text() == first
        orders = [json.loads(l)["order"] for l in first.splitlines()]
        assert orders == [1, 2, 5, 6, 7]

    def test_verify_cli(self, capsys):
        assert main(["verify", "rhocat", "--trials", "2"]) == 0
        out = capsys.readouterr()
        assert "checks passed" in out.err
        for line in out.out.splitlines():
            assert json.loads(line)["verdict"] == "pass"

    def test_verify_deterministic(self, capsys):
        main(["verify", "eigencat", "--seed", "7", "--trials", "3"])
        first = capsys.readouterr().out
        main(["verify", "eigencat", "--seed", "7", "--trials", "3"])
        assert capsys.readouterr().out == first

    def test_census_cli(self, capsys):
        assert main(["census", "--m-value", "0", "--max-order", "8"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 1 and json.loads(lines[0])["code"] == "0,1"

    def test_missing_input(self, capsys):
        assert main(["charpoly"]) == 2
