import csv
import json
import logging

import jsonschema
import pytest

from rindep import cli
from rindep.errors import InternalInvariantError, ParseError, PromiseViolation
from rindep.generators import generate, oracle_corpus
from rindep.io import format_edge_list, parse_edge_list
from rindep.oracle import brute_independent


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def validate(record):
    jsonschema.validate(record, cli.RESULT_SCHEMA)


class TestEdgeList:
    def test_two_edges(self):
        pg = parse_edge_list("0 1\n1 2")
        assert pg.graph == generate("path:3") and pg.labels == (0, 1, 2)

    def test_duplicate_warning(self, caplog):
        with caplog.at_level(logging.WARNING):
            pg = parse_edge_list("a b\nb a")
        assert pg.graph.m == 1 and pg.duplicate_edges == 1 and pg.labels == ("a", "b")
        assert "1 duplicate" in caplog.text

    def test_self_loop_warning(self, caplog):
        with caplog.at_level(logging.WARNING):
            pg = parse_edge_list("x x")
        assert pg.graph.m == 0 and pg.graph.n == 1 and pg.self_loops == 1
        assert "1 self-loop" in caplog.text

    def test_empty_input(self):
        assert parse_edge_list("").graph.n == 0
        assert parse_edge_list("# only a comment\n\n").graph.n == 0

    def test_malformed_reports_line(self):
        with pytest.raises(ParseError) as err:
            parse_edge_list("0 1\n# fine\n1 2 3\n")
        assert err.value.line == 3 and "line 3" in str(err.value)

    def test_first_appearance_labels(self):
        pg = parse_edge_list("7 3\n3 x\n")
        assert pg.labels == (7, 3, "x") and pg.graph.edges() == [(0, 1), (1, 2)]

    @pytest.mark.parametrize("spec", oracle_corpus() + ["rbd:n=40,d=3,seed=2"])
    def test_round_trip(self, spec):
        g = generate(spec)
        text = format_edge_list(g)
        pg = parse_edge_list(text)
        assert pg.graph == g and pg.labels == tuple(range(g.n))
        assert format_edge_list(pg.graph) == text


class TestSolve:
    def test_cycle_ladder(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--gen", "cycle:6", "--r", "2", "--k", "3", "--algo", "ladder")
        rec = json.loads(out)
        validate(rec)
        assert code == 0 and rec["decision"] == "no-solution" and rec["verification"] == "passed"

    def test_star_direct(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--gen", "star:5", "--r", "1", "--k", "3", "--algo", "direct")
        rec = json.loads(out)
        validate(rec)
        assert code == 0 and rec["decision"] == "independent" and rec["vertices"] == [1, 2, 3]
        assert rec["stats"]["cowitness_size"] is not None and rec["stats"]["splitter_depth"] is not None

    def test_malformed_file(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("0 1\n1 2 3\n")
        code, _, err = run_cli(capsys, "solve", "--input", str(f), "--r", "1", "--k", "2")
        assert code == 2 and "line 2" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "solve", "--input", str(tmp_path / "nope"), "--r", "1", "--k", "2")
        assert code == 2

    def test_bad_generator_spec(self, capsys):
        assert run_cli(capsys, "solve", "--gen", "wheel:4", "--r", "1", "--k", "2")[0] == 2

    def test_bad_parameters(self, capsys):
        assert run_cli(capsys, "solve", "--gen", "path:4", "--r", "0", "--k", "2")[0] == 2

    def test_oracle_budget(self, capsys):
        code, _, err = run_cli(capsys, "solve", "--gen", "path:40", "--r", "1", "--k", "2", "--verify", "oracle")
        assert code == 4 and "budget" in err

    @pytest.mark.parametrize("exc", [InternalInvariantError("boom"), PromiseViolation((0, 1), 0)])
    def test_internal_errors_exit_3(self, capsys, monkeypatch, exc):
        def explode(*a, **kw):
            raise exc
        monkeypatch.setattr(cli, "solve_ladder", explode)
        assert run_cli(capsys, "solve", "--gen", "path:4", "--r", "1", "--k", "2")[0] == 3

    def test_oracle_mismatch_fails(self, capsys, monkeypatch):
        from rindep.solvers import SolveOutcome

        def wrong(g, r, k):
            return SolveOutcome("no-solution", tuple(range(g.n)), {}), None
        monkeypatch.setattr(cli, "solve_ladder", wrong)
        # V(g) is a valid witness only when no solution exists; here one does
        code, _, err = run_cli(capsys, "solve", "--gen", "path:9", "--r", "1", "--k", "2", "--verify", "oracle")
        assert code == 3 and "verification failed" in err

    def test_string_labels_sorted(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("# square\nd c\nc b\nb a\na d\n")
        code, out, _ = run_cli(capsys, "solve", "--input", str(f), "--r", "1", "--k", "2", "--algo", "brute")
        rec = json.loads(out)
        validate(rec)
        assert rec["vertices"] == ["a", "c"] or rec["vertices"] == ["b", "d"]

    def test_plain_format(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--gen", "path:5", "--r", "1", "--k", "2", "--format", "plain")
        assert code == 0 and out.startswith("independent set: 0 2")

    def test_seed_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("RINDEP_SEED", "11")
        _, out, _ = run_cli(capsys, "solve", "--gen", "path:5", "--r", "1", "--k", "2", "--seed", "3")
        assert json.loads(out)["config"]["seed"] == 11
        monkeypatch.delenv("RINDEP_SEED")
        _, out, _ = run_cli(capsys, "solve", "--gen", "path:5", "--r", "1", "--k", "2", "--seed", "3")
        assert json.loads(out)["config"]["seed"] == 3

    @pytest.mark.parametrize("algo", cli.ALGORITHMS)
    @pytest.mark.parametrize("verify", cli.VERIFY_LEVELS)
    @pytest.mark.parametrize("spec", ["cycle:6", "grid:3x3", "star:4", "subdiv:clique:4:r=1"])
    def test_schema_and_oracle_agreement(self, algo, verify, spec):
        g = generate(spec)
        for r, k in [(1, 2), (2, 3)]:
            rec = cli.run(cli.RunConfig(spec, r, k, algo, verify=verify, generated=True))
            validate(rec)
            assert (rec["decision"] == "independent") == (brute_independent(g, r, k) is not None)
            assert rec["vertices"] == sorted(rec["vertices"])
            assert rec["verification"] == ("skipped" if verify == "none" else "passed")


def test_schema_rejects_dropped_fields():
    rec = cli.run(cli.RunConfig("cycle:6", 2, 2, generated=True))
    del rec["stats"]["rounds"]
    with pytest.raises(jsonschema.ValidationError):
        validate(rec)


def test_schema_command(capsys):
    code, out, _ = run_cli(capsys, "schema")
    assert code == 0 and json.loads(out) == json.loads(json.dumps(cli.RESULT_SCHEMA))


class TestOtherCommands:
    def test_witness_check(self, capsys, tmp_path):
        w = tmp_path / "w.txt"
        w.write_text("0 1 2 3 4 5  # everything\n")
        code, out, _ = run_cli(capsys, "witness-check", "--gen", "cycle:6", "--witness", str(w), "--r", "2", "--k", "3")
        assert code == 0 and json.loads(out)["is_witness"] is True
        w.write_text("0\n")
        _, out, _ = run_cli(capsys, "witness-check", "--gen", "cycle:6", "--witness", str(w), "--r", "2", "--k", "2")
        assert json.loads(out)["uncaptured"] == [0, 3]

    def test_witness_unknown_label(self, capsys, tmp_path):
        w = tmp_path / "w.txt"
        w.write_text("zz\n")
        assert run_cli(capsys, "witness-check", "--gen", "cycle:6", "--witness", str(w), "--r", "2", "--k", "2")[0] == 2

    def test_cowitness(self, capsys):
        code, out, _ = run_cli(capsys, "cowitness", "--gen", "star:4", "--r", "1", "--k", "1")
        rec = json.loads(out)
        assert code == 0 and rec["cowitness"] == [0] and rec["size"] == 1

    def test_splitter(self, capsys):
        code, out, _ = run_cli(capsys, "splitter", "--gen", "clique:5", "--r", "1",
                               "--strategy", "connector-echo", "--connector", "exhaustive-worst")
        assert code == 0 and json.loads(out)["depth"] == 5

    def test_gen_byte_stable(self, capsys, tmp_path):
        out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
        run_cli(capsys, "gen", "rbd:n=20,d=3,seed=4", "--out", str(out1))
        run_cli(capsys, "gen", "rbd:n=20,d=3,seed=4", "--out", str(out2))
        assert out1.read_bytes() == out2.read_bytes()
        assert parse_edge_list(out1.read_text()).graph == generate("rbd:n=20,d=3,seed=4")
        _, stdout, _ = run_cli(capsys, "gen", "path:3")
        assert stdout == "# n=3 m=2\n0\n1\n2\n0 1\n1 2\n"


class TestBench:
    def test_paths(self, tmp_path):
        rows, summary = cli.bench([f"path:{n}" for n in (100, 200, 400, 800)], cli.parse_grid("r=2;k=3"))
        assert len(rows) == 4 and all(row["wall_time_ms"] > 0 and not row["error"] for row in rows)
        assert [row["n"] for row in rows] == [100, 200, 400, 800]
        assert summary[0]["family"] == "path" and summary[0]["median_wall_time_ms"] is not None

    def test_malformed_row_isolated(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("1 2 3\n")
        rows, summary = cli.bench(["cycle:6", str(bad), "path:5"], cli.parse_grid("r=1;k=2"))
        errors = [bool(row["error"]) for row in rows]
        assert errors == [False, True, False] and "ParseError" in rows[1]["error"]
        assert {s["family"]: s["errors"] for s in summary}["file"] == 1

    def test_grid_on_cycle(self):
        g = generate("cycle:6")
        rows, _ = cli.bench(["cycle:6"], cli.parse_grid("r=1,2;k=2,3"), verify="oracle")
        assert len(rows) == 4
        for row in rows:
            assert (row["decision"] == "independent") == (brute_independent(g, row["r"], row["k"]) is not None)

    def test_parallel_order(self):
        grid = cli.parse_grid("r=1,2;k=1,2;algo=ladder,direct")
        seq, _ = cli.bench(["path:6", "cycle:7"], grid)
        par, _ = cli.bench(["path:6", "cycle:7"], grid, jobs=2)
        strip = lambda rows: [{k: v for k, v in row.items() if k != "wall_time_ms"} for row in rows]
        assert strip(seq) == strip(par) and [row["row"] for row in par] == list(range(16))

    def test_bad_grid(self):
        from rindep.errors import InputError
        for text in ["q=1", "r=a", "algo=magic", "r"]:
            with pytest.raises(InputError):
                cli.parse_grid(text)

    def test_cli_csv(self, capsys, tmp_path):
        corpus = tmp_path / "corpus.txt"
        corpus.write_text("# tiny\ncycle:6\npath:4\n")
        out = tmp_path / "rows.csv"
        code, _, err = run_cli(capsys, "bench", "--corpus", str(corpus), "--grid", "r=2;k=2", "--out", str(out))
        rows = list(csv.DictReader(out.open()))
        assert code == 0 and len(rows) == 2 and rows[0]["graph"] == "cycle:6"
        assert "median_ms" in err

    def test_cli_jsonl(self, capsys, tmp_path):
        corpus = tmp_path / "corpus.txt"
        corpus.write_text("cycle:6\n")
        code, out, _ = run_cli(capsys, "bench", "--corpus", str(corpus), "--grid", "k=2,3")
        lines = [json.loads(line) for line in out.splitlines()]
        assert code == 0 and [row["k"] for row in lines] == [2, 3]

    def test_cli_missing_corpus(self, capsys, tmp_path):
        assert run_cli(capsys, "bench", "--corpus", str(tmp_path / "none"))[0] == 2
