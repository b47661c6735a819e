"""Smoke tests for the python binding; the deep checks live in the C++ suites."""

import unicluster as uc


def test_catalog():
    ids = uc.catalog_ids()
    assert len(ids) == 12
    assert ids == sorted(ids)
    assert uc.module_dim("P2") == (1, 2, 1)
    assert uc.catalog_minor("P2") == "D[12][34]"
    assert uc.is_projective("P2")
    assert not uc.is_projective("SOC2")


def test_characters():
    assert uc.cluster_char("S1") == "t2 + t5"
    assert uc.cluster_char("P2") == "t1*t2*t3*t4"
    assert uc.match_minor("S1") == "D[1][2]"
    assert uc.match_minor("S1", word="121321") == "D[1][2]"
    assert uc.validate_word("213213")
    assert not uc.validate_word("111111")


def test_ext_and_counts():
    assert uc.ext1("U32", "S1") == 1
    assert uc.ext1("S1", "U32") == 1
    assert uc.ext1("P1", "S2") == 0
    assert uc.count_comp_series("P2", "2132", 7) == "1"
    assert uc.euler_char("P2", "2312") == "1"


def test_mutation_and_graph():
    t0 = ["SOC2", "U32", "U12", "P1", "P2", "P3"]
    assert uc.is_basic_maximal_rigid(t0)
    m = uc.mutate(t0, "U32")
    assert m["added"] == "S1"
    assert m["middle_out"] == ["SOC2"]
    assert m["middle_in"] == ["P3"]
    g = uc.exchange_graph()
    assert len(g["vertices"]) == 14
    assert len(g["edges"]) == 21


def test_folding():
    t0 = ["SOC2", "U32", "U12", "P1", "P2", "P3"]
    assert uc.is_stable(t0)
    hexagon = uc.stable_hexagon()
    assert len(hexagon["vertices"]) == 6
    assert len(hexagon["edges"]) == 6
    assert uc.pi_project("a34") == "a12"
    assert uc.pi_project(uc.generic_minor("D[12][23]")) == uc.pi_project(uc.generic_minor("D[2][4]"))


def test_positivity():
    ones = [["1", "1", "1", "1"], ["0", "1", "1", "1"], ["0", "0", "1", "1"], ["0", "0", "0", "1"]]
    identity = [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]
    assert uc.criterion_six(ones) == uc.is_totally_positive(ones)
    assert not uc.is_totally_positive(identity)


def test_verify_suite():
    results = uc.verify("ext")
    assert all(r["pass"] for r in results)
