import pytest

from relramsey.classes import ClassError, builtin_class, pair_from_string
from relramsey.scans import (
    expansion_property_check,
    find_ramsey_witness,
    find_rel_witness,
    ramsey_degree_bounds,
    rigidity_scan,
)
from relramsey.structures import graph, linear_order, ordered_graph, pure_set
from relramsey.verify import verify_certificate

LO = linear_order
LINEAR = builtin_class("linear_orders")


def test_lo6_is_the_witness():
    cert = find_ramsey_witness(LINEAR, LO(3), LO(2), 2, n_max=6)
    assert cert.holds and cert.detail["C"] == LO(6).to_dict()
    assert len(cert.replay["rejected"]) == 3


def test_bound_below_b_is_exhausted_immediately():
    cert = find_ramsey_witness(LINEAR, LO(3), LO(2), 2, n_max=2)
    assert cert.exhausted and cert.detail["examined"] == 0
    assert "exhausted-bound" in cert.report


def test_rel_witness_trivial():
    cert = find_rel_witness(pair_from_string("sets:linear_orders"), LO(2), pure_set(2), 2, "emb", 4)
    assert cert.holds and cert.detail["C"] == pure_set(2).to_dict()


def test_struct_mode_with_trivial_expansion_matches_plain_scan():
    pair = pair_from_string("linear_orders:linear_orders")
    a = find_rel_witness(pair, LO(3), LO(2), 2, "struct", 6)
    b = find_ramsey_witness(LINEAR, LO(3), LO(2), 2, n_max=6)
    assert a.verdict == b.verdict and a.detail["C"] == b.detail["C"]


def test_strong_mode_scans_expansions():
    pair = pair_from_string("graphs:ordered_graphs")
    cert = find_rel_witness(pair, ordered_graph(2, []), graph(1, []), 2, "strong", 4)
    assert cert.holds and verify_certificate(cert)


def test_ordered_ultrametric_relative_search_is_reported():
    pair = pair_from_string("linear_orders:ordered_ultrametric{S=[1,2]}")
    Bstar = pair.expansion.members(2)[0]
    cert = find_rel_witness(pair, Bstar, LO(1), 2, "emb", 4)
    assert cert.verdict in ("holds", "exhausted-bound") and verify_certificate(cert)


def test_expansion_property_examples():
    sets = pair_from_string("sets:linear_orders")
    for n in range(1, 6):
        cert = expansion_property_check(sets, pure_set(n), n)
        assert cert.holds and cert.detail["B"] == pure_set(n).to_dict()
    graphs = pair_from_string("graphs:ordered_graphs")
    K2 = graph(2, [(0, 1)])
    cert = expansion_property_check(graphs, K2, 4)
    assert cert.holds and cert.detail["B"] == K2.to_dict()


def test_expansion_property_exhausts_small_bound():
    graphs = pair_from_string("graphs:ordered_graphs")
    cert = expansion_property_check(graphs, graph(3, [(0, 1)]), 4)
    assert cert.exhausted and verify_certificate(cert)


def test_degree_bounds():
    sets = pair_from_string("sets:linear_orders")
    assert ramsey_degree_bounds(sets, pure_set(3), 2, 3).upper == 1
    graphs = pair_from_string("graphs:ordered_graphs")
    P3 = graph(3, [(0, 1), (1, 2)])
    db = ramsey_degree_bounds(graphs, P3, 2, 4)
    assert db.upper == 3 and 1 <= db.lower <= 2
    cert = db.certificate({"pair": graphs.name, "k": 2})
    assert verify_certificate(cert)
    if db.lower == 2:
        assert db.evidence and all(c.fails for c in db.evidence)


def test_rigidity():
    assert rigidity_scan(LINEAR, 5).holds
    r = rigidity_scan(builtin_class("graphs"), 2)
    assert r.fails and r.detail["automorphism"] == [1, 0]
    assert rigidity_scan(builtin_class("ordered_ultrametric{S=[1,2]}"), 4).holds


def test_non_member_input():
    with pytest.raises(ClassError):
        find_ramsey_witness(LINEAR, graph(2, []), LO(1), 2)
