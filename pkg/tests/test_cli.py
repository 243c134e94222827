import json

import pytest

from indcubes import counting
from indcubes.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_tsv(text):
    lines = text.strip("\n").split("\n")
    header = lines[0].split("\t")
    rows = [line.split("\t") for line in lines[1:]]
    return header, rows


class TestTable:
    def test_path_totals(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--family", "path", "--h", "1", "--n-max", "4")
        assert code == 0
        header, rows = parse_tsv(out)
        assert header == ["n", "total", "edges"]
        assert [r[1] for r in rows] == ["1", "2", "3", "5", "8"]

    def test_cycle_totals(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--family", "cycle", "--h", "1", "--n-max", "5")
        assert code == 0
        _, rows = parse_tsv(out)
        assert [r[1] for r in rows] == ["1", "2", "3", "4", "7", "11"]
        assert [r[2] for r in rows] == ["0", "1", "2", "3", "8", "15"]

    def test_path_order_two_totals(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--family", "path", "--h", "2", "--n-max", "5")
        assert code == 0
        _, rows = parse_tsv(out)
        assert [r[1] for r in rows] == ["1", "2", "3", "4", "6", "9"]

    def test_per_k_columns_reproduce_counts(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--family", "path", "--h", "1", "--n-max", "8", "--per-k"
        )
        assert code == 0
        header, rows = parse_tsv(out)
        k_cols = [c for c in header if c.startswith("k")]
        assert k_cols == [f"k{k}" for k in range(len(k_cols))]
        for row in rows:
            n = int(row[0])
            per_k = [int(x) for x in row[3:]]
            assert per_k == [counting.path_count_k(n, 1, k) for k in range(len(per_k))]
            assert sum(per_k) == int(row[1])

    def test_per_k_cycle(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--family", "cycle", "--h", "2", "--n-max", "9", "--per-k"
        )
        assert code == 0
        _, rows = parse_tsv(out)
        for row in rows:
            n = int(row[0])
            per_k = [int(x) for x in row[3:]]
            assert per_k == [counting.cycle_count_k(n, 2, k) for k in range(len(per_k))]
            assert sum(per_k) == int(row[1])

    def test_unknown_family_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--family", "tree", "--h", "1", "--n-max", "3"])
        assert exc.value.code == 2

    def test_negative_argument_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--family", "path", "--h", "-1", "--n-max", "3"])
        assert exc.value.code == 2


class TestSeq:
    def test_hfib_order_zero(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--kind", "hfib", "--h", "0", "--count", "5")
        assert code == 0
        assert out == "1\n2\n4\n8\n16\n"

    def test_hedges(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--kind", "hedges", "--h", "1", "--count", "3")
        assert code == 0
        assert out == "1\n2\n5\n"

    def test_medges(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--kind", "medges", "--h", "1", "--count", "5")
        assert code == 0
        assert out == "1\n2\n3\n8\n15\n"

    def test_totals_kinds(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--kind", "p", "--h", "1", "--count", "6")
        assert code == 0
        assert out == "2\n3\n5\n8\n13\n21\n"
        code, out, _ = run_cli(capsys, "seq", "--kind", "q", "--h", "1", "--count", "7")
        assert code == 0
        assert out == "2\n3\n4\n7\n11\n18\n29\n"

    def test_unknown_kind_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["seq", "--kind", "primes", "--h", "1", "--count", "3"])
        assert exc.value.code == 2


class TestVerifyCommand:
    def test_small_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--h-max", "1", "--n-max-formula", "20", "--n-max-oracle", "6"
        )
        assert code == 0
        assert out.strip().splitlines()[-1] == "overall: PASS"

    def test_json_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--h-max", "0", "--n-max-formula", "50",
            "--n-max-oracle", "10", "--json",
        )
        assert code == 0
        report = json.loads(out)
        assert report["overall"] is True
        assert {"boolean-lattice-counts", "path-oracle-agreement"} <= {
            c["name"] for c in report["checks"]
        }

    def test_failure_exit_code(self, capsys, monkeypatch):
        real = counting.binom
        monkeypatch.setattr(counting, "binom", lambda m, k: real(m, k) + (m == 4 and k == 2))
        code, out, _ = run_cli(
            capsys, "verify", "--h-max", "1", "--n-max-formula", "20", "--n-max-oracle", "6"
        )
        assert code == 1
        assert "FAIL" in out and "counterexample" in out


class TestExport:
    def test_path_graph_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "export", "--family", "path", "--n", "3", "--h", "1",
            "--what", "graph", "--format", "json",
        )
        assert code == 0
        assert json.loads(out) == {
            "n": 3, "labels": ["1", "2", "3"], "edges": [[1, 2], [2, 3]],
        }

    def test_cycle_complete_graph(self, capsys):
        code, out, _ = run_cli(
            capsys, "export", "--family", "cycle", "--n", "5", "--h", "2",
            "--what", "graph", "--format", "json",
        )
        assert code == 0
        assert len(json.loads(out)["edges"]) == 10  # K_5

    def test_fib_cube_dot(self, capsys):
        code, out, _ = run_cli(
            capsys, "export", "--family", "fib-cube", "--n", "2",
            "--what", "graph", "--format", "dot",
        )
        assert code == 0
        assert out == (
            "graph G {\n"
            '  "00";\n'
            '  "10";\n'
            '  "01";\n'
            '  "00" -- "10";\n'
            '  "00" -- "01";\n'
            "}\n"
        )

    def test_hasse_export(self, capsys):
        code, out, _ = run_cli(
            capsys, "export", "--family", "path", "--n", "3", "--h", "1",
            "--what", "hasse", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["labels"] == ["000", "100", "010", "001", "101"]
        assert data["edges"] == [[1, 2], [1, 3], [1, 4], [2, 5], [4, 5]]

    def test_gen_cube_circular(self, capsys):
        code, out, _ = run_cli(
            capsys, "export", "--family", "gen-cube", "--n", "5", "--patterns", "11",
            "--circular", "--what", "graph", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["n"] == 11 and len(data["edges"]) == 15  # Lucas cube of order 5

    def test_gen_cube_requires_patterns(self):
        with pytest.raises(SystemExit) as exc:
            main(["export", "--family", "gen-cube", "--n", "4",
                  "--what", "graph", "--format", "dot"])
        assert exc.value.code == 2

    def test_patterns_only_for_gen_cube(self):
        with pytest.raises(SystemExit) as exc:
            main(["export", "--family", "path", "--n", "4", "--patterns", "11",
                  "--what", "graph", "--format", "dot"])
        assert exc.value.code == 2

    def test_hasse_only_for_path_and_cycle(self):
        with pytest.raises(SystemExit) as exc:
            main(["export", "--family", "fib-cube", "--n", "4",
                  "--what", "hasse", "--format", "dot"])
        assert exc.value.code == 2

    def test_h_only_for_path_and_cycle(self):
        with pytest.raises(SystemExit) as exc:
            main(["export", "--family", "fib-cube", "--n", "4", "--h", "1",
                  "--what", "graph", "--format", "dot"])
        assert exc.value.code == 2

    def test_capacity_error_is_usage_error(self, capsys):
        code, out, err = run_cli(
            capsys, "export", "--family", "path", "--n", "65", "--h", "1",
            "--what", "graph", "--format", "json",
        )
        assert code == 2
        assert out == ""
        assert "error" in err

    def test_bad_pattern_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["export", "--family", "gen-cube", "--n", "4", "--patterns", "1,2x",
                  "--what", "graph", "--format", "dot"])
        assert exc.value.code == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["table", "--family", "cycle", "--h", "2", "--n-max", "12", "--per-k"],
            ["seq", "--kind", "hfib", "--h", "3", "--count", "30"],
            ["export", "--family", "lucas-cube", "--n", "6", "--what", "graph",
             "--format", "dot"],
        ],
    )
    def test_repeat_runs_match(self, capsys, argv):
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second
