"""End-to-end smoke tests for the Python bindings."""

import gtm

WORD28 = "120" + "012120201" + "120201012" + "2010121"


def test_prefix_generation():
    assert gtm.tm_prefix(2, 12) == "011010011001"
    assert gtm.tm_prefix(3, 27) == "012120201120201012201012120"


def test_counts_are_python_ints():
    count = gtm.subword_count(2, gtm.tm_prefix(2, 600), "01" * 10)
    assert isinstance(count, int)
    assert count > 2**64  # arbitrary precision survives the boundary


def test_signature_and_equivalence():
    sig = gtm.signature(2, "0110", 2)
    assert sig["01"] == 2 and sig["10"] == 2
    assert gtm.equivalent(2, "0110", "1001", 2)
    assert not gtm.equivalent(2, "0110", "1001", 3)


def test_complexities_match_formulas():
    for n in range(0, 30):
        assert gtm.factor_complexity(3, n) == gtm.factor_count_formula(3, n)
    for n in range(0, 12):
        assert gtm.abelian_complexity(4, n) == gtm.abelian_count_formula(4, n)
    assert gtm.kbinomial_complexity(3, 2, 18) == 49 == gtm.kbinomial_formula(3, 2, 18)


def test_shortest_equivalent_pair():
    assert gtm.shortest_equivalent_pair(2, 2) == (4, "0110", "1001")
    assert gtm.shortest_equivalent_pair(3, 2) == (6, "012120", "120012")


def test_factorization():
    f = gtm.unique_factorization(3, 2, WORD28)
    assert (f["x"], f["u"], f["y"]) == ("120", "01", "2010121")
    assert (f["a"], f["b"]) == (2, 2)
    p, s = gtm.ps_pair(3, 2, WORD28)
    assert (p, s) == ("120", "2010121")
    assert gtm.count_pair_classes(3, 2, 18) == gtm.pair_class_formula(3, 2, 18) == 49


def test_rauzy_graph():
    g = gtm.build_graph(6, 4)
    assert len(g["vertices"]) == gtm.abelian_count_formula(6, 4) == 39
    assert len(g["edges"]) == gtm.rauzy_edge_formula(6, 4) == 126
    right, left = gtm.y_counts(5, 4)
    assert right + left == gtm.extension_pair_formula(5, 4) == 110
    assert gtm.eulerian_check(3, 2)
    assert gtm.shift_isomorphism_check(3, 3, 1)
    assert gtm.export_dot(3, 1).count("->") == 9


def test_suite_runner():
    reports = gtm.run_suite("prop41", m=2, k=2)
    assert all(r["passed"] for r in reports)
