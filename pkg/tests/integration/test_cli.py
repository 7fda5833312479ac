"""Integration tests for the oriadim command line."""

import json
from pathlib import Path

import pytest


class TestOrientCommand:
    """End-to-end runs of ``oriadim orient``."""

    def test_c5_listing_and_text_report(self, c5_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Arcs go to stdout, the text report to stderr."""
        from src.oriadim import main

        exit_code = main(["orient", str(c5_path), "--quiet", "--report", "text"])
        captured = capsys.readouterr()

        assert exit_code == 0
        assert captured.out == "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"
        assert captured.err.splitlines()[0] == "diameter 4"

    def test_json_report_to_file(self, w_gadget_path: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """--output and --report-file leave stdout empty."""
        from src.oriadim import main

        report_path = tmp_path / "report.json"
        arcs_path = tmp_path / "out.arcs"
        exit_code = main(
            ["orient", str(w_gadget_path), "--quiet", "--output", str(arcs_path), "--report-file", str(report_path)]
        )
        captured = capsys.readouterr()
        report = json.loads(report_path.read_text(encoding="utf-8"))

        assert exit_code == 0
        assert captured.out == ""
        assert arcs_path.read_text(encoding="utf-8").startswith("8 9\n")
        assert report["mode"] == "partition"
        assert report["oriented_diameter"] == 7
        assert report["guarantee"]["applies"] is False
        assert report["observations"]["passed"] is True
        assert report["rule_counts"]["leftover"] == 0

    def test_fallback_for_small_graph(self, k4_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """K4 reports the exact fallback mode."""
        from src.oriadim import main

        exit_code = main(["orient", str(k4_path), "--quiet"])
        report = json.loads(capsys.readouterr().err)

        assert exit_code == 0
        assert report["mode"] == "fallback-exact"
        assert report["proven_optimal"] is True
        assert report["oriented_diameter"] == 3

    def test_bridge_is_input_error(self, fixtures_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A bridge exits 1 and names the edge."""
        from src.oriadim import main

        exit_code = main(["orient", str(fixtures_dir / "bridged.graph"), "--quiet"])

        assert exit_code == 1
        assert "Error: bridge {2,3}" in capsys.readouterr().err

    def test_missing_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A missing input file exits 1."""
        from src.oriadim import main

        exit_code = main(["orient", str(tmp_path / "nope.graph"), "--quiet"])

        assert exit_code == 1
        assert "file not found" in capsys.readouterr().err

    def test_spanning_subgraph(self, c5_path: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """--spanning keeps the chord in the listing."""
        from src.oriadim import main

        chorded = tmp_path / "c5_chord.graph"
        chorded.write_text("5 6\n0 1\n1 2\n2 3\n3 4\n0 4\n0 2\n", encoding="utf-8")
        exit_code = main(["orient", str(chorded), "--spanning", str(c5_path), "--quiet"])
        captured = capsys.readouterr()
        report = json.loads(captured.err)

        assert exit_code == 0
        assert "0 2" in captured.out.splitlines()
        assert report["oriented_diameter"] <= 4

    def test_repeated_runs_are_identical(self, w_gadget_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Two runs print the same bytes."""
        from src.oriadim import main

        main(["orient", str(w_gadget_path), "--quiet"])
        first = capsys.readouterr()
        main(["orient", str(w_gadget_path), "--quiet"])
        second = capsys.readouterr()

        assert first.out == second.out
        assert first.err == second.err

    def test_seeded_heuristic_is_reproducible(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A fixed seed makes the local-search fallback repeat exactly."""
        from src.oriadim import main

        circulant = tmp_path / "circulant12.graph"
        edges = [(i, (i + step) % 12) for i in range(12) for step in (1, 2)]
        circulant.write_text("12 24\n" + "".join(f"{a} {b}\n" for a, b in edges), encoding="utf-8")

        main(["orient", str(circulant), "--seed", "3", "--quiet"])
        first = capsys.readouterr()
        main(["orient", str(circulant), "--seed", "3", "--quiet"])
        second = capsys.readouterr()

        assert json.loads(first.err)["mode"] == "fallback-heuristic"
        assert first.out == second.out
        assert first.err == second.err


class TestOtherCommands:
    """End-to-end runs of the remaining subcommands."""

    def test_exact_k4(self, k4_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """exact prints the proven value for K4."""
        from src.oriadim import main

        exit_code = main(["exact", str(k4_path), "--quiet", "--report", "text"])
        captured = capsys.readouterr()

        assert exit_code == 0
        assert captured.out.splitlines()[0] == "oriented diameter 3"

    def test_exact_threads_from_environment(
        self, c5_path: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """ORIADIM_THREADS sets the worker count."""
        from src.oriadim import main

        monkeypatch.setenv("ORIADIM_THREADS", "2")
        exit_code = main(["exact", str(c5_path), "--quiet"])

        assert exit_code == 0
        assert json.loads(capsys.readouterr().out)["oriented_diameter"] == 4

    def test_bad_thread_setting(
        self, c5_path: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """A non-numeric ORIADIM_THREADS exits 1."""
        from src.oriadim import main

        monkeypatch.setenv("ORIADIM_THREADS", "many")

        assert main(["exact", str(c5_path), "--quiet"]) == 1
        assert "ORIADIM_THREADS" in capsys.readouterr().err

    def test_check_class_non_member(self, p4_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A non-member still exits 0."""
        from src.oriadim import main

        exit_code = main(["check-class", str(p4_path), "--k", "3", "--lambda", "4", "--s", "1", "--quiet"])
        report = json.loads(capsys.readouterr().out)

        assert exit_code == 0
        assert report["member"] is False

    def test_check_class_member_sanity(self, c5_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Members carry both sanity checks."""
        from src.oriadim import main

        exit_code = main(["check-class", str(c5_path), "--k", "3", "--lambda", "4", "--s", "1", "--quiet"])
        report = json.loads(capsys.readouterr().out)

        assert exit_code == 0
        assert report["member"] is True
        assert report["sanity"] == {"min_degree": True, "edge_disjoint_paths": True}

    def test_check_class_with_min_edges(self, c5_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """--with-min-edges fills in M(n, k, lambda, s) for the graph's order."""
        from src.oriadim import main

        args = ["check-class", str(c5_path), "--k", "3", "--lambda", "4", "--s", "1", "--quiet"]
        main(args)
        plain = json.loads(capsys.readouterr().out)
        exit_code = main(args + ["--with-min-edges"])
        report = json.loads(capsys.readouterr().out)

        assert plain["min_edge_count"] is None
        assert exit_code == 0
        assert report["min_edge_count"] == 5

    def test_verify(self, fixtures_dir: Path, c5_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """verify reports the certificate of an arc file."""
        from src.oriadim import main

        exit_code = main(["verify", str(fixtures_dir / "c5_directed.arcs"), str(c5_path), "--quiet"])
        report = json.loads(capsys.readouterr().out)

        assert exit_code == 0
        assert report["oriented_diameter"] == 4
        assert report["strongly_connected"] is True
        assert len(report["certificate"]["dist"]) == 5

    def test_verify_mismatched_graph(self, fixtures_dir: Path, k4_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """An orientation of another graph exits 1."""
        from src.oriadim import main

        exit_code = main(["verify", str(fixtures_dir / "c5_directed.arcs"), str(k4_path), "--quiet"])

        assert exit_code == 1

    def test_diameter_undirected(self, c5_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """diameter on a graph file prints the undirected value."""
        from src.oriadim import main

        assert main(["diameter", str(c5_path), "--quiet", "--report", "text"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "diameter 2"

    def test_diameter_oriented(self, fixtures_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """--oriented reads an arc file."""
        from src.oriadim import main

        assert main(["diameter", str(fixtures_dir / "c5_directed.arcs"), "--oriented", "--quiet"]) == 0
        assert json.loads(capsys.readouterr().out)["oriented_diameter"] == 4

    def test_gen_to_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A single graph goes to stdout, the report to stderr."""
        from src.oriadim import main

        exit_code = main(["gen", "cycle", "--n", "4", "--quiet"])
        captured = capsys.readouterr()

        assert exit_code == 0
        assert captured.out == "4 4\n0 1\n0 3\n1 2\n2 3\n"
        assert json.loads(captured.err)["count"] == 1

    def test_gen_files(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """--count writes numbered files named by kind, order and seed."""
        from src.oriadim import main

        exit_code = main(
            ["gen", "planted", "--n", "10", "--count", "3", "--seed", "4", "--output-dir", str(tmp_path), "--quiet"]
        )
        report = json.loads(capsys.readouterr().err)

        assert exit_code == 0
        assert report["count"] == 3
        assert sorted(p.name for p in tmp_path.iterdir()) == [
            "planted_n10_s4_000.graph",
            "planted_n10_s4_001.graph",
            "planted_n10_s4_002.graph",
        ]

    def test_gen_count_needs_directory(self, capsys: pytest.CaptureFixture[str]) -> None:
        """--count above 1 without --output-dir exits 1."""
        from src.oriadim import main

        assert main(["gen", "cycle", "--count", "2", "--quiet"]) == 1

    def test_witness_search(self, capsys: pytest.CaptureFixture[str]) -> None:
        """No graph on five vertices reaches the default target."""
        from src.oriadim import main

        exit_code = main(["witness-search", "--n-max", "5", "--quiet"])
        report = json.loads(capsys.readouterr().out)

        assert exit_code == 0
        assert report["witnesses"] == []
        assert report["proven_exhaustive"] is True

    def test_witness_search_from_graph6(self, fixtures_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """--graphs scans a graph6 list instead of the atlas."""
        from src.oriadim import main

        exit_code = main(
            ["witness-search", "--n-max", "5", "--target", "3", "--graphs", str(fixtures_dir / "small.g6"), "--quiet"]
        )
        report = json.loads(capsys.readouterr().out)

        assert exit_code == 0
        assert len(report["witnesses"]) == 3
        assert report["graphs_examined"] == 5
        assert report["proven_exhaustive"] is True

    def test_witness_search_bad_graph6(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A malformed graph6 file is an input error."""
        from src.oriadim import main

        bad = tmp_path / "bad.g6"
        bad.write_text("B\x7f\n", encoding="utf-8")

        assert main(["witness-search", "--n-max", "5", "--graphs", str(bad), "--quiet"]) == 1
        assert "Error:" in capsys.readouterr().err

    def test_min_edges(self, capsys: pytest.CaptureFixture[str]) -> None:
        """min-edges reports M(5, 3, 4, 1) = 5."""
        from src.oriadim import main

        exit_code = main(["min-edges", "--n", "5", "--k", "3", "--lambda", "4", "--s", "1", "--quiet"])
        report = json.loads(capsys.readouterr().out)

        assert exit_code == 0
        assert report["min_edges"] == 5

    def test_min_edges_over_cap(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Orders above the cap exit 2."""
        from src.oriadim import main

        exit_code = main(["min-edges", "--n", "11", "--k", "3", "--lambda", "4", "--s", "1", "--quiet"])

        assert exit_code == 2
        assert "capped" in capsys.readouterr().err


class TestUsageErrors:
    """Argument errors exit with the input-error code."""

    def test_unknown_flag(self, c5_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Unknown flags exit 1 with an error line."""
        from src.oriadim import main

        assert main(["orient", str(c5_path), "--no-such-flag"]) == 1
        assert "Error:" in capsys.readouterr().err

    def test_missing_command(self, capsys: pytest.CaptureFixture[str]) -> None:
        """No subcommand exits 1."""
        from src.oriadim import main

        assert main([]) == 1

    def test_bad_class_parameters(self, c5_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """k = 0 is rejected before any work."""
        from src.oriadim import main

        assert main(["check-class", str(c5_path), "--k", "0", "--lambda", "4", "--s", "1", "--quiet"]) == 1

    def test_undecodable_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Non-UTF-8 input exits with the input-error code."""
        from src.oriadim import main

        path = tmp_path / "latin.graph"
        path.write_bytes(b"3 3\n0 1\n1 2\n0 \xff2\n")

        assert main(["diameter", str(path), "--quiet"]) == 1
        assert "cannot read" in capsys.readouterr().err

    def test_directory_as_input(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A directory path exits with the input-error code."""
        from src.oriadim import main

        assert main(["diameter", str(tmp_path), "--quiet"]) == 1
        assert "cannot read" in capsys.readouterr().err
