import itertools
import math

import pytest

from relramsey.classes import ClassError, pair_from_string
from relramsey.expansions import (
    based_expansions,
    canonical_expansion,
    class_index_emb,
    copy_equivalent,
    cross_identify,
    emb_equivalent,
    enumerate_expansions,
    equivalence_classes_copy,
    equivalence_classes_emb,
    iter_based_expansions,
    precompactness_count,
)
from relramsey.structures import (
    EMPTY_SIG,
    GRAPH_SIG,
    ORDER,
    Copy,
    Embedding,
    automorphisms,
    graph,
    induced_substructure,
    linear_order,
    ordered_graph,
    pure_set,
)
from relramsey.verify import bf_pullback

GRAPHS = pair_from_string("graphs:ordered_graphs")
SETS = pair_from_string("sets:linear_orders")
K2 = graph(2, [(0, 1)])
K2K1 = graph(3, [(0, 1)])
P3 = graph(3, [(0, 1), (1, 2)])
K3 = graph(3, [(0, 1), (1, 2), (0, 2)])


def test_pullback_through_reversing_map():
    pe = canonical_expansion(linear_order(3), EMPTY_SIG, Embedding(pure_set(2), pure_set(3), (2, 0)))
    assert pe.structure.rel(ORDER) == frozenset({(1, 0)})


def test_pullback_of_inclusion_is_induced_substructure():
    B = ordered_graph(4, [(0, 1), (1, 2), (2, 3)], order=[2, 0, 3, 1])
    for pts in itertools.combinations(range(4), 2):
        sub, _ = induced_substructure(B, pts)
        A, _ = induced_substructure(graph(4, [(0, 1), (1, 2), (2, 3)]), pts)
        pe = canonical_expansion(B, GRAPH_SIG, Embedding(A, graph(4, [(0, 1), (1, 2), (2, 3)]), pts))
        assert pe.structure == sub


def test_pullback_matches_brute_force_on_ordered_graph():
    B = ordered_graph(3, [(0, 1), (1, 2)], order=[2, 1, 0])
    G = graph(3, [(0, 1), (1, 2)])
    for m in [(0, 1), (1, 0), (2, 1), (1, 2)]:
        pe = canonical_expansion(B, GRAPH_SIG, Embedding(K2, G, m))
        assert pe.extra == bf_pullback(B, GRAPH_SIG.names, m)


def test_emb_equivalence_examples():
    L3 = linear_order(3)
    S2, S3 = pure_set(2), pure_set(3)
    a0, a1, a2 = (Embedding(S2, S3, m) for m in [(0, 1), (0, 2), (1, 0)])
    assert emb_equivalent(L3, EMPTY_SIG, a0, a1)
    assert not emb_equivalent(L3, EMPTY_SIG, a0, a2)


def test_copy_equivalence():
    host = ordered_graph(3, [(0, 1), (1, 2)], order=[0, 2, 1])  # middle vertex last
    B = graph(3, [(0, 1), (1, 2)])
    c0, c1 = Copy(B, (0, 1)), Copy(B, (1, 2))
    assert copy_equivalent(host, GRAPH_SIG, c0, c0)
    # both edges are edges of a 2-point linear order, so they are isomorphic
    assert copy_equivalent(host, GRAPH_SIG, c0, c1)


def test_expansion_counts():
    ex = enumerate_expansions(SETS, pure_set(3))
    assert (len(ex.based), len(ex.up_to_iso)) == (6, 1)
    ex = enumerate_expansions(GRAPHS, K2K1)
    assert (len(ex.based), len(ex.up_to_iso)) == (6, 3)
    assert len(enumerate_expansions(GRAPHS, P3).up_to_iso) == 3
    assert len(enumerate_expansions(GRAPHS, K3).up_to_iso) == 1


@pytest.mark.parametrize("G", [K2, K2K1, P3, K3, graph(4, [(0, 1), (2, 3)]), graph(4, [(0, 1), (1, 2), (2, 3)])])
def test_orbit_counting(G):
    # ordered expansions are rigid, so up-to-iso count = n!/|Aut(G)|
    assert len(enumerate_expansions(GRAPHS, G).up_to_iso) == math.factorial(G.size) // len(automorphisms(G))


def test_lazy_and_sorted_agree():
    assert sorted(set(iter_based_expansions(GRAPHS, P3)), key=lambda s: s.dumps()) == based_expansions(GRAPHS, P3)


def test_emb_classes():
    cls = equivalence_classes_emb(linear_order(3), EMPTY_SIG, pure_set(2))
    assert sorted(len(c) for c in cls) == [3, 3]
    cls = equivalence_classes_emb(linear_order(5), EMPTY_SIG, pure_set(1))
    assert [len(c) for c in cls] == [5]
    assert class_index_emb(linear_order(3), EMPTY_SIG, pure_set(2))[0][0] == (0, 1)


def test_copy_classes_for_trivial_expansion_are_one_class():
    B = graph(4, [(0, 1), (1, 2)])
    assert len(equivalence_classes_copy(B, GRAPH_SIG, K2)) == 1


def test_cross_identification_for_rigid_expansions():
    Bstar = ordered_graph(3, [(0, 1)], order=[2, 0, 1])
    based = based_expansions(GRAPHS, K2K1)
    m = cross_identify(Bstar, GRAPH_SIG, K2K1, based)
    assert m is not None and len(m) == len(equivalence_classes_emb(Bstar, GRAPH_SIG, K2K1))


def test_cross_identification_skips_non_rigid():
    U = pair_from_string("sets:ultrametric{S=[1,2]}")
    based = based_expansions(U, pure_set(2))
    assert cross_identify(based[0], EMPTY_SIG, pure_set(2), based) is None


def test_precompactness():
    assert precompactness_count(SETS, 4) == {1: 1, 2: 1, 3: 1, 4: 1}
    # no graph on 3 vertices is rigid, so the maximum 3!/|Aut| is 3
    assert precompactness_count(GRAPHS, 3)[3] == 3
    U = pair_from_string("linear_orders:ordered_ultrametric{S=[1,2]}")
    assert precompactness_count(U, 2)[2] == 2


def test_non_member_rejected():
    with pytest.raises(ClassError):
        enumerate_expansions(GRAPHS, linear_order(2))
