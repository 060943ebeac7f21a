"""
End-to-end tests of the command line through main(argv, out).
"""
import argparse
import io
import json
import os
import sys
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from check import extract_summary, summarize
from families import cycle_graph, path_graph, tree_T
from graph_core import attach_path, classify, is_isomorphic, max_degree, parse_graph6
from main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main, normalise_argv, parse_alphas, parse_int_range, summary_path_for
from numerics import alpha1
from type.graph import StructureTag


@pytest.fixture
def run(tmp_path):
    log_file = str(tmp_path / "cli.log")

    def _run(*argv):
        out = io.StringIO()
        code = main(list(argv) + ["--log-file", log_file], out=out)
        return code, out.getvalue()

    return _run


class TestArgumentHelpers:
    def test_negative_values_are_joined(self):
        assert normalise_argv(["verify", "1", "--alpha", "-1,-0.5", "--n", "4..6"]) == [
            "verify", "1", "--alpha=-1,-0.5", "--n=4..6",
        ]

    def test_other_tokens_untouched(self):
        assert normalise_argv(["index", "--graph6", "Bw"]) == ["index", "--graph6", "Bw"]

    def test_int_range_forms(self):
        assert parse_int_range("5") == [5]
        assert parse_int_range("4..7") == [4, 5, 6, 7]
        assert parse_int_range("3,5,8") == [3, 5, 8]

    @pytest.mark.parametrize("text", ["7..4", "a..b", "x"])
    def test_int_range_rejects(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_int_range(text)

    def test_alphas(self):
        assert parse_alphas("-1, -0.5") == [-1.0, -0.5]
        assert parse_alphas("alpha1") == [alpha1().value]

    @pytest.mark.parametrize("text", ["abc", "nan", "-inf"])
    def test_alphas_reject(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_alphas(text)


class TestIndexCommand:
    def test_inline_triangle(self, run):
        code, output = run("index", "--graph6", "Bw", "--alpha", "-0.5")
        assert code == EXIT_OK
        assert "chi[-0.5]=1.5" in output
        assert "sum_connectivity=1.5" in output

    def test_c4_sum_connectivity(self, run):
        _, output = run("index", "--graph6", "Cl", "--format", "json")
        assert json.loads(output)["chi"]["-0.5"] == 2.0

    def test_json_from_file(self, run, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("A_\n# comment\nBw\n")
        code, output = run("index", str(path), "--alpha", "-1,-0.5", "--format", "json")
        assert code == EXIT_OK
        rows = [json.loads(line) for line in output.splitlines()]
        assert [row["line"] for row in rows] == [1, 3]
        assert rows[1]["chi"]["-1.0"] == pytest.approx(0.75)
        assert rows[0]["randic"]["-0.5"] == 1.0

    def test_edge_list_csv(self, run, tmp_path):
        path = tmp_path / "p3.txt"
        path.write_text("3\n0 1\n1 2\n")
        code, output = run("index", str(path), "--format", "csv")
        assert code == EXIT_OK
        header, row = output.splitlines()
        assert header.startswith("line,graph6,n,edges")
        assert row.split(",")[2:4] == ["3", "2"]

    def test_alpha1_token(self, run):
        code, output = run("index", "--graph6", "Bw", "--alpha", "alpha1", "--format", "json")
        assert code == EXIT_OK
        assert len(json.loads(output)["chi"]) == 1

    def test_no_input(self, run):
        assert run("index")[0] == EXIT_USAGE

    def test_missing_file(self, run, tmp_path):
        assert run("index", str(tmp_path / "absent.g6"))[0] == EXIT_USAGE

    def test_parse_error_names_line(self, run, tmp_path, capsys):
        path = tmp_path / "bad.g6"
        path.write_text("A_\nB\n")
        assert run("index", str(path))[0] == EXIT_USAGE
        assert "line 2" in capsys.readouterr().err

    def test_bad_alpha(self, run):
        assert run("index", "--graph6", "Bw", "--alpha", "abc")[0] == EXIT_USAGE


class TestConstructCommand:
    def test_tree_t(self, run):
        code, output = run("construct", "T", "6", "4")
        assert code == EXIT_OK
        assert is_isomorphic(parse_graph6(output.strip()), tree_T(6, 4))

    def test_cycle_with_describe(self, run):
        code, output = run("construct", "cycle", "5", "--describe")
        assert code == EXIT_OK
        lines = output.splitlines()
        assert is_isomorphic(parse_graph6(lines[0]), cycle_graph(5))
        assert "edge_weight_profile: [4, 4, 4, 4, 4]" in output

    def test_spider(self, run):
        code, output = run("construct", "spider", "2", "2", "3")
        assert code == EXIT_OK
        assert parse_graph6(output.strip()).n == 8

    @pytest.mark.parametrize("argv", [
        ("construct", "T", "6", "6"),
        ("construct", "path", "3", "4"),
        ("construct", "U", "5"),
        ("construct", "cycle_with_paths"),
    ])
    def test_domain_errors(self, run, argv):
        assert run(*argv)[0] == EXIT_USAGE

    def test_unknown_family(self, run):
        assert run("construct", "wheel", "6")[0] == EXIT_USAGE

    @pytest.mark.parametrize("argv,tag,delta", [
        (("T", "9", "5"), StructureTag.TREE, 5),
        (("U", "4", "3"), StructureTag.UNICYCLIC, 3),
        (("spider", "2", "3", "3"), StructureTag.TREE, 3),
        (("cycle_with_paths", "5", "2", "2"), StructureTag.UNICYCLIC, 4),
    ])
    def test_output_matches_family(self, run, argv, tag, delta):
        code, output = run("construct", *argv)
        assert code == EXIT_OK
        g = parse_graph6(output.strip())
        assert classify(g).tag is tag
        assert max_degree(g) == delta

    def test_u_4_3_is_triangle_with_pendant(self, run):
        _, output = run("construct", "U", "4", "3")
        assert is_isomorphic(parse_graph6(output.strip()), attach_path(cycle_graph(3), 0, 1))

    def test_low_delta_t_rejected(self, run):
        assert run("construct", "T", "6", "2")[0] == EXIT_USAGE


class TestEnumerateCommand:
    @pytest.mark.parametrize("graph_class,n,lines", [("trees", 4, 2), ("unicyclic", 5, 5)])
    def test_small_counts(self, run, graph_class, n, lines):
        code, output = run("enumerate", graph_class, str(n))
        assert code == EXIT_OK
        assert len(output.splitlines()) == lines

    def test_max_degree_two_is_path(self, run):
        _, output = run("enumerate", "trees", "5", "--max-degree", "2")
        assert is_isomorphic(parse_graph6(output.strip()), path_graph(5))

    def test_trees_to_stdout(self, run, capsys):
        code, output = run("enumerate", "tree", "8")
        assert code == EXIT_OK
        assert len(output.splitlines()) == 23
        assert "23 graphs" in capsys.readouterr().err

    def test_unicyclic_with_degree_to_file(self, run, tmp_path):
        path = tmp_path / "out" / "u7.g6"
        code, _ = run("enumerate", "unicyclic", "7", "--max-degree", "2", "--out", str(path))
        assert code == EXIT_OK
        lines = path.read_text().splitlines()
        assert len(lines) == 1
        assert is_isomorphic(parse_graph6(lines[0]), cycle_graph(7))

    def test_ceiling(self, run):
        assert run("enumerate", "tree", "9", "--ceiling", "8")[0] == EXIT_USAGE


class TestVerifyCommand:
    def test_single_cell_json(self, run, tmp_path):
        report = tmp_path / "reports" / "t1.jsonl"
        code, output = run("verify", "1", "--n", "6", "--delta", "4", "--alpha", "-1",
                           "--format", "json", "--out", str(report))
        assert code == EXIT_OK
        row = json.loads(output)
        assert row["status"] == "passed"
        assert row["brute_max"] == pytest.approx(1.1)
        assert "runtime" not in row
        assert os.path.exists(tmp_path / "reports" / "t1.csv")
        assert summarize(str(report))["passed"] == 1

    def test_table_and_summary(self, run, tmp_path, capsys):
        code, output = run("verify", "2", "--n", "5..6", "--alpha", "-1,-0.5",
                           "--out", str(tmp_path / "t2.jsonl"))
        assert code == EXIT_OK
        assert output.splitlines()[0].split()[:4] == ["n", "delta", "alpha", "class"]
        assert "14 passed / 0 failed / 0 refused" in capsys.readouterr().err

    def test_csv_columns(self, run, tmp_path):
        code, output = run("verify", "3", "--n", "4..5", "--alpha", "-0.5", "--format", "csv",
                           "--out", str(tmp_path / "t3.jsonl"))
        assert code == EXIT_OK
        lines = output.splitlines()
        assert lines[0] == "n,delta,alpha,class,brute_max,bound,gap,n_extremal,characterization_ok"
        assert len(lines) == 3

    def test_out_of_claim_alpha_refused(self, run, tmp_path):
        report = str(tmp_path / "refused.jsonl")
        code, _ = run("verify", "2", "--n", "6", "--delta", "3", "--alpha", "-1.5", "--out", report)
        assert code == EXIT_OK
        assert extract_summary(report) == "0 passed / 0 failed / 1 refused"

    def test_timing_opt_in(self, run, tmp_path):
        code, output = run("verify", "1", "--n", "6", "--delta", "3", "--alpha", "-0.5",
                           "--format", "json", "--timing", "--out", str(tmp_path / "t.jsonl"))
        assert code == EXIT_OK
        assert json.loads(output)["runtime"] >= 0

    def test_deterministic(self, run, tmp_path):
        argv = ("verify", "1", "--n", "5..7", "--alpha", "-1,-0.5", "--format", "json",
                "--out", str(tmp_path / "d.jsonl"))
        assert run(*argv)[1] == run(*argv)[1]

    def test_report_file_rewritten(self, run, tmp_path):
        report = str(tmp_path / "again.jsonl")
        argv = ("verify", "1", "--n", "6", "--delta", "3", "--alpha", "-0.5", "--out", report)
        run(*argv)
        run(*argv)
        assert summarize(report)["passed"] == 1

    def test_csv_named_report_keeps_its_lines(self, run, tmp_path):
        report = tmp_path / "t1.csv"
        code, _ = run("verify", "1", "--n", "6", "--delta", "3,4", "--alpha", "-0.5", "--out", str(report))
        assert code == EXIT_OK
        assert summarize(str(report))["passed"] == 2
        assert os.path.exists(tmp_path / "t1.summary.csv")

    def test_summary_path_never_equals_report(self):
        assert summary_path_for("out/a.jsonl") == "out/a.csv"
        assert summary_path_for("out/a.csv") == "out/a.summary.csv"
        assert summary_path_for("out/a") == "out/a.csv"

    def test_bad_theorem(self, run):
        assert run("verify", "4")[0] == EXIT_USAGE


class TestAlpha1Command:
    def test_json(self, run):
        code, output = run("alpha1", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(output)
        assert -1.71 < data["value"] < -1.7036
        assert data["bracket"][0] <= data["value"] <= data["bracket"][1]

    def test_table(self, run):
        code, output = run("alpha1", "--tolerance", "1e-12")
        assert code == EXIT_OK
        assert output.startswith("value: -1.70")

    def test_bad_tolerance(self, run):
        assert run("alpha1", "--tolerance", "0")[0] == EXIT_USAGE


class TestLemmasCommand:
    def test_reroute_json(self, run):
        code, output = run("lemmas", "--lemma", "2", "--count", "50", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(output)
        assert data["passed"] is True
        assert data["checks"] == 250
        assert data["min_delta"] > 0

    def test_both_table(self, run):
        code, output = run("lemmas", "--count", "30", "--seed", "5")
        assert code == EXIT_OK
        lines = output.splitlines()
        assert lines[0].startswith("path-merge: passed")
        assert lines[1].startswith("reroute: passed")

    def test_seed_reproducible(self, run):
        argv = ("lemmas", "--lemma", "1", "--count", "40", "--seed", "9", "--format", "json")
        assert run(*argv)[1] == run(*argv)[1]

    def test_alpha_where_merge_fails(self, run):
        # below alpha_1 the path merge no longer increases the index for every instance
        code, output = run("lemmas", "--lemma", "1", "--count", "300", "--alpha", "-3", "--format", "json")
        assert code == EXIT_FAILED
        assert json.loads(output)["failures"]


class TestCheckScript:
    def test_missing_file(self, tmp_path):
        assert extract_summary(str(tmp_path / "none.jsonl")) == "0 passed / 0 failed / 0 refused"

    def test_unreadable_lines(self, tmp_path):
        path = tmp_path / "mixed.jsonl"
        path.write_text('{"status": "passed"}\nnot json\n\n{"status": "failed"}\n')
        counts = summarize(str(path))
        assert counts["passed"] == 1
        assert counts["failed"] == 1
        assert counts["unreadable"] == 1
