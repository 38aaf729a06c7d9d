from fractions import Fraction

import pytest

import rwlab


def test_family_counts():
    assert rwlab.count_dp(rwlab.build_family("complete", 5)) == 120
    assert rwlab.count_dp(rwlab.build_family("path", 7)) == 64
    assert rwlab.count_dp(rwlab.build_family("grid", 3, 2)) == 208
    assert rwlab.count_dp(rwlab.build_family("grid", 10, 2), mode="layered") == 3020819005440


def test_big_ints_are_python_ints():
    v = rwlab.formula("grid2", 60)
    assert isinstance(v, int)
    assert v == rwlab.formula("a087923", 60)
    assert v.bit_length() > 64


def test_walk_matches_dp_and_seven_path():
    g = rwlab.build_family("king", 3, 2)
    assert len(rwlab.enumerate_walk(g)) == rwlab.count_dp(g)
    p7 = rwlab.build_family("path", 7)
    assert rwlab.is_walk_obtainable(p7, [7, 6, 5, 3, 2, 1, 4])
    assert not rwlab.is_walk_obtainable(p7, [4, 6, 5, 3, 2, 1, 7])


def test_parse_and_custom_graph():
    g = rwlab.parse_graph("# star\n4 3\n0 1\n0 2\n0 3\n")
    assert g.order == 4 and g.edge_count == 3
    assert rwlab.count_started_at(g, 0) == 6
    h = rwlab.make_graph(3, [(0, 1)])
    assert not rwlab.is_connected(h)
    assert rwlab.count_dp(h) == 0


def test_rational_formula():
    assert rwlab.formula("bala-lhs", 3) == Fraction(11, 3)
    assert rwlab.formula("bala-lhs", 3) == rwlab.formula("bala-rhs", 3)


def test_series_terms():
    assert rwlab.series_terms("gg2", 5) == ["2", "16", "208", "3584", "76544"]
    assert rwlab.series_terms("a087547", 4) == ["1", "4", "22", "160"]


def test_verifiers():
    assert rwlab.verify_theorem("eq915", 50)["passed"]
    assert rwlab.verify_theorem("eq900-vs-901", 50)["passed"]
    assert rwlab.verify_series("a182525", 25)["passed"]
    assert rwlab.verify_integrals(8)["passed"]
    assert rwlab.check_asymptotic()["passed"]
    assert rwlab.verify_oracles(6, 20)["passed"]


def test_errors():
    with pytest.raises(rwlab.RwlError):
        rwlab.make_graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        rwlab.parse_graph("3 5\n0 1\n")
    with pytest.raises(ValueError):
        rwlab.formula("nope", 3)
