"""Acceptance criteria, one test per criterion, one printed line each.

Every criterion runs at its stated tolerance (exact equality throughout;
counts and caps as specified) over the corpora named in the criterion.
"""

import pytest

from densecolor import harness


def _report_line(num: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f"  [{detail}]" if detail else ""
    print(f"\nACCEPTANCE {num} {name}: {status}{suffix}")


@pytest.fixture(scope="module")
def corpus8():
    # shared across criteria 3, 4, 8; generated once (cached anyway)
    from densecolor.corpus import nonisomorphic_graphs

    nonisomorphic_graphs(8)
    return True


def test_criterion_1_oracle_cross_validation():
    report = harness.oracle_cross_validation(max_n=7, random_n=8,
                                             random_count=1000)
    ok = not report["alerts"]
    _report_line(1, "oracle-cross-validation", ok,
                 f"{report['counts']['checked']} graphs checked")
    assert ok, report["alerts"][:5]


def test_criterion_2_m8_fixture():
    report = harness.m8_fixture()
    ok = not report["alerts"]
    _report_line(2, "m8-fixture", ok, str(report["values"]))
    assert ok, report["alerts"]


def test_criterion_3_alpha_and_order_bounds(corpus8):
    from densecolor.corpus import CorpusSpec

    spec = CorpusSpec(source="exhaustive", max_n=8)
    alpha = harness.verify_alpha_bound(spec)
    order = harness.verify_order_bound(spec)
    ok = not alpha["alerts"] and not order["alerts"]
    checked = alpha["counts"]["checked"]
    _report_line(3, "alpha-and-order-bounds", ok, f"{checked} graphs each")
    assert checked == 1 + 2 + 4 + 11 + 34 + 156 + 1044 + 12346
    assert ok, (alpha["alerts"][:3], order["alerts"][:3])


def test_criterion_4_strong_coloring(corpus8):
    report = harness.strong_coloring_sweep(max_n=8, partition_cap=10_000)
    ok = not report["alerts"]
    _report_line(4, "strong-coloring", ok,
                 f"{report['counts']['checked']} instances over "
                 f"{report['graphs']} graphs, {report['capped_graphs']} capped")
    assert ok, report["alerts"]


def test_criterion_5_transversal_vs_naive():
    report = harness.transversal_vs_naive(count=10_000)
    ok = not report["alerts"]
    _report_line(5, "transversal-vs-naive", ok,
                 f"{report['counts']['checked']} instances, "
                 f"{report['certificates']} certificates verified")
    assert ok, report["alerts"]


def test_criterion_6_choosability_lemma_table():
    report = harness.choosability_lemma_table()
    ok = not report["alerts"]
    _report_line(6, "choosability-lemma-table", ok, str(report["suites"]))
    assert ok, report["alerts"][:5]


def test_criterion_7_decomposition_verifiers():
    report = harness.decomposition_fuzz(count=1000)
    ok = not report["alerts"]
    _report_line(7, "decomposition-verifiers", ok,
                 f"{report['counts']['checked']} synthesized instances")
    assert ok, report["alerts"][:5]


def test_criterion_8_onesies(corpus8):
    report = harness.onesies_sweep(max_n=8)
    ok = not report["alerts"]
    _report_line(8, "onesies-bounds", ok,
                 f"{report['counts']['checked']} (graph, vertex) checks on "
                 f"{report['corpus']}")
    assert ok, report["alerts"][:5]


def test_criterion_9_recolorer_family():
    report = harness.recolorer_family()
    ok = not report["alerts"] and report["counts"]["checked"] >= 50
    _report_line(9, "recolorer-family", ok, str(report["rates"]))
    assert ok, report["alerts"][:5]
