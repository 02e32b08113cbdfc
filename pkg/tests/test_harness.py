"""Corpus generation, theorem sweeps, report schema, and the CLI surface."""

import json
import math
import subprocess
import sys

import pytest

from densecolor.cli import main as cli_main
from densecolor.corpus import (
    CorpusSpec,
    KNOWN_CLASS_COUNTS,
    generate_corpus,
    named_graph,
    nonisomorphic_graphs,
    random_corpus,
)
from densecolor.graphs import (
    blowup_cycle,
    canonical_key,
    complete,
    is_isomorphic,
    serialize_graph6,
)
from densecolor.harness import (
    check_alpha_bound,
    check_order_bound,
    check_two_thirds_clique,
    m8_fixture,
    order_bound_term,
    verify_alpha_bound,
    verify_order_bound,
)


class TestCorpus:
    def test_known_counts(self):
        for n in range(0, 7):
            assert len(nonisomorphic_graphs(n)) == KNOWN_CLASS_COUNTS[n]

    def test_pairwise_non_isomorphic(self):
        graphs = nonisomorphic_graphs(5)
        keys = {canonical_key(g) for g in graphs}
        assert len(keys) == len(graphs)

    def test_random_deterministic(self):
        a = random_corpus(8, 50, seed=7)
        b = random_corpus(8, 50, seed=7)
        assert [g.adj for g in a] == [g.adj for g in b]
        c = random_corpus(8, 50, seed=8)
        assert [g.adj for g in a] != [g.adj for g in c]

    def test_named(self):
        assert named_graph("M8") == blowup_cycle(5, 3)
        assert named_graph("K5") == complete(5)
        assert named_graph("petersen").n == 10

    def test_filters(self):
        spec = CorpusSpec(source="exhaustive", max_n=5, min_delta=3, connected_only=True)
        for g in generate_corpus(spec):
            assert g.max_degree() >= 3

    def test_file_source(self, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("A_\nBw\n")
        spec = CorpusSpec(source="file", path=str(path))
        got = list(generate_corpus(spec))
        assert [g.n for g in got] == [2, 3]


class TestOrderBoundTerm:
    def test_paper_value(self):
        assert order_bound_term(15) == 11     # ceil((15 + sqrt(793)) / 4)

    def test_matches_float_reference(self):
        for n in range(0, 5000):
            reference = math.ceil((15 + math.sqrt(48 * n + 73)) / 4)
            assert order_bound_term(n) == reference

    def test_exact_square_case(self):
        # 48n + 73 = 121 at n = 1: sqrt exact, ceiling of 26/4 is 7
        assert order_bound_term(1) == 7


class TestTheoremChecks:
    def test_complete_family_equality(self):
        for n in range(1, 8):
            chk = check_alpha_bound(complete(n))
            assert chk.conclusion_holds
        chk = check_alpha_bound(blowup_cycle(5, 3))
        assert chk.conclusion_holds
        assert chk.margins["bound_minus_chi"] == "0"   # tight at 4*alpha

    def test_sweeps_small(self):
        spec = CorpusSpec(source="exhaustive", max_n=6)
        for report in (verify_alpha_bound(spec), verify_order_bound(spec)):
            assert report["alerts"] == []
            assert report["counts"]["checked"] == sum(
                KNOWN_CLASS_COUNTS[n] for n in range(1, 7))

    def test_m8_vacuous_for_two_thirds(self):
        chk = check_two_thirds_clique(blowup_cycle(5, 3))
        assert not chk.hypotheses_hold       # Delta = 8 misses the >= 9 range

    def test_m8_fixture_report(self):
        report = m8_fixture()
        assert report["alerts"] == []

    def test_parallel_matches_serial(self):
        spec = CorpusSpec(source="exhaustive", max_n=5)
        serial = verify_alpha_bound(spec, jobs=1)
        parallel = verify_alpha_bound(spec, jobs=2)
        assert serial == parallel


class TestCLI:
    def test_oracle_json(self, capsys):
        assert cli_main(["oracle", "name:M8", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["chi"] == 8 and payload["omega"] == 6

    def test_choosable_witness_schema(self, capsys):
        assert cli_main(["choosable", "name:C5", "--k", "0", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert set(payload) == {"graph", "lists", "verdict"}
        assert payload["verdict"] is False
        assert all(isinstance(L, list) for L in payload["lists"])

    def test_formats(self, capsys, tmp_path):
        path = tmp_path / "g.col"
        path.write_text("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        assert cli_main(["oracle", f"@{path}", "--format", "dimacs", "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["chi"] == 3

    def test_transversal_and_strong_color(self, capsys, tmp_path):
        part = tmp_path / "blocks.txt"
        part.write_text("0 2\n1 3\n")
        assert cli_main(["transversal", "C~",       # K_4
                         "--partition", str(part), "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["transversal"] is None        # K4 has none
        assert payload["certificate"]["matching"]

        part2 = tmp_path / "blocks2.txt"
        part2.write_text("0 1\n2 3\n")
        code = cli_main(["strong-color", "C`", "--partition", str(part2),
                         "-r", "3", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and out["verified"] is True

    def test_decompose_and_color(self, capsys):
        assert cli_main(["decompose", "name:K9", "--t", "7", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload["blocks"]) == 1

        assert cli_main(["color", "name:K5", "--k", "9", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["coloring"] is not None
        assert max(payload["coloring"]) <= 8

    def test_verify_exit_codes(self, capsys):
        assert cli_main(["verify", "m8", "--json"]) == 0
        line = capsys.readouterr().out.strip()
        report = json.loads(line)
        assert report["counts"]["holds"] == report["counts"]["checked"]

    def test_reports_reproducible(self, capsys):
        assert cli_main(["verify", "m8"]) == 0
        first = capsys.readouterr().out
        assert cli_main(["verify", "m8"]) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_console_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "densecolor.cli", "oracle", "name:C5", "--json"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["chi"] == 3
