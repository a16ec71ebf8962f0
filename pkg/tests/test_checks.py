import itertools

import pytest

from relramsey.checks import (
    arrow_check,
    classwise_mono_check,
    rel_arrow_emb_check,
    rel_arrow_emb_strong_check,
    rel_arrow_struct_check,
)
from relramsey.expansions import based_expansions
from relramsey.classes import pair_from_string
from relramsey.structures import EMPTY_SIG, StructureError, graph, linear_order, ordered_graph, pure_set, reduct
from relramsey.verify import verify_certificate

LO = linear_order


def test_pigeonhole():
    assert arrow_check(LO(3), LO(2), LO(1), 2).holds


def test_lo6_holds_lo5_fails():
    assert arrow_check(LO(6), LO(3), LO(2), 2).holds
    cert = arrow_check(LO(5), LO(3), LO(2), 2)
    assert cert.fails and verify_certificate(cert)
    col = cert.coloring
    for tri in itertools.combinations(range(5), 3):
        assert len({col.color_of(p) for p in itertools.combinations(tri, 2)}) == 2


@pytest.mark.parametrize("k,l", [(2, 2), (3, 3), (2, 5)])
def test_l_at_least_k_holds(k, l):
    assert arrow_check(LO(4), LO(3), LO(2), k, l).holds


def test_monotone_in_l_and_k():
    for c in range(3, 8):
        for k in (2, 3):
            for l in (1, 2):
                a = arrow_check(LO(c), LO(3), LO(1), k, l)
                if a.holds:
                    assert arrow_check(LO(c), LO(3), LO(1), k, l + 1).holds
                if a.fails:
                    assert arrow_check(LO(c), LO(3), LO(1), k + 1, l).fails


def test_embedding_domain_for_non_rigid_A():
    C = graph(4, [])
    cert = arrow_check(C, graph(3, []), graph(2, []), 2, 1, "embeddings")
    assert cert.instance["domain_kind"] == "embeddings"
    assert verify_certificate(cert)


def test_k1_holds_everywhere():
    assert rel_arrow_emb_check(pure_set(3), LO(3), pure_set(2), 1).holds
    assert rel_arrow_struct_check(pure_set(3), LO(3), pure_set(2), 1).holds
    assert rel_arrow_emb_strong_check(LO(3), LO(3), pure_set(2), 1).holds
    assert classwise_mono_check(pure_set(3), LO(3), LO(2), 1).holds


def test_singleton_classes_hold_vacuously():
    assert rel_arrow_emb_check(pure_set(2), LO(2), pure_set(2), 2).holds


def test_sets_with_orders_boundary_search():
    # every host up to size 7 carries a bad colouring; the scan reports bounded exhaustion
    from relramsey.scans import find_rel_witness

    pair = pair_from_string("sets:linear_orders")
    cert = find_rel_witness(pair, LO(3), pure_set(2), 2, "emb", n_max=7)
    assert cert.exhausted and cert.detail["examined"] == 5
    assert verify_certificate(cert)
    for sub in cert.replay["rejected"]:
        assert sub["verdict"] == "fails"


def test_classwise_singleton_is_monochromatic():
    # one embedding of LO_2 into LO_2
    assert classwise_mono_check(pure_set(2), LO(2), LO(2), 2).holds


def test_checks_take_no_class_argument():
    # the verdict depends only on the structures, not on the pair they are viewed in
    p1 = pair_from_string("graphs:ordered_graphs")
    C = graph(4, [(0, 1), (2, 3)])
    Bstar = ordered_graph(3, [(0, 1)])
    A = graph(2, [])
    assert Bstar in p1.expansion
    assert rel_arrow_emb_check(C, Bstar, A, 2).verdict == rel_arrow_emb_check(C, Bstar, A, 2).verdict


def test_strong_drops_splitting_embeddings():
    from relramsey.checks import rel_strong_instance

    # of the six bijections LO_3 -> C*, only the monotone ones keep the
    # increasing pairs equivalent in C*
    Cstar = LO(3)
    inst = rel_strong_instance(Cstar, LO(3), pure_set(2), 2)
    assert len(inst.candidate_objects) == 2
    assert inst.notes and "4 embeddings" in inst.notes[0]


def test_enrichment_implies_strong():
    # with one expansion type of A, rel-emb for k colours on C gives the strong form on every C* over C
    pair = pair_from_string("graphs:ordered_graphs")
    A = graph(1, [])
    assert len(based_expansions(pair, A)) == 1
    seen_premise = 0
    for C in pair.base.enumerate_up_to(4):
        for Bstar in pair.expansion.members(2):
            if Bstar.size > C.size or not rel_arrow_emb_check(C, Bstar, A, 2).holds:
                continue
            seen_premise += 1
            for Cstar in based_expansions(pair, C):
                assert rel_arrow_emb_strong_check(Cstar, Bstar, A, 2).holds
    assert seen_premise > 0


def test_input_errors():
    with pytest.raises(StructureError):
        arrow_check(LO(3), graph(2, []), LO(1), 2)
    with pytest.raises(ValueError):
        arrow_check(LO(3), LO(2), LO(1), 0)
    with pytest.raises(ValueError):
        arrow_check(LO(3), LO(2), LO(1), 2, 1, "subsets")
    with pytest.raises(StructureError):
        rel_arrow_emb_check(LO(3), LO(3), pure_set(2), 2)


def test_report_names_the_property():
    cert = rel_arrow_struct_check(pure_set(3), LO(3), pure_set(2), 2)
    assert "relative Ramsey property for structures" in cert.report
    assert reduct(LO(3), EMPTY_SIG) == pure_set(3)
