"""Property-based tests: invariants over random structures and instances."""

import itertools
import math

from hypothesis import given, settings
from hypothesis import strategies as st

from relramsey.canonical import canonical_key
from relramsey.checks import arrow_check, rel_arrow_emb_check, rel_arrow_struct_check
from relramsey.expansions import copy_equivalent, emb_equivalent, pullback_extra
from relramsey.structures import (
    GRAPH_SIG,
    Copy,
    Embedding,
    automorphisms,
    enumerate_copies,
    enumerate_embeddings,
    graph,
    ordered_graph,
    relabel,
)
from relramsey.verify import bf_embeddings, bf_pullback, verify_certificate


@st.composite
def graphs(draw, lo=1, hi=5):
    n = draw(st.integers(lo, hi))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [p for p in pairs if draw(st.booleans())]
    return graph(n, edges)


@st.composite
def ordered_graphs(draw, lo=1, hi=5):
    G = draw(graphs(lo, hi))
    order = draw(st.permutations(range(G.size)))
    edges = [e for e in G.rel("E") if e[0] < e[1]]
    return ordered_graph(G.size, edges, order=order)


@settings(max_examples=60, deadline=None)
@given(graphs(1, 3), graphs(1, 5))
def test_embeddings_match_brute_force(A, B):
    assert sorted(e.map for e in enumerate_embeddings(A, B)) == sorted(bf_embeddings(A, B))


@settings(max_examples=60, deadline=None)
@given(graphs(1, 3), graphs(1, 5))
def test_copies_times_automorphisms(A, B):
    assert len(enumerate_copies(A, B)) * len(automorphisms(A)) == len(enumerate_embeddings(A, B))


@settings(max_examples=60, deadline=None)
@given(ordered_graphs(1, 6), st.data())
def test_canonical_key_is_relabel_invariant(G, data):
    perm = data.draw(st.permutations(range(G.size)))
    assert canonical_key(relabel(G, perm)) == canonical_key(G)


@settings(max_examples=40, deadline=None)
@given(ordered_graphs(2, 5), graphs(1, 3))
def test_pullback_agrees_with_definition(Bstar, A):
    for m in bf_embeddings(A, graph(Bstar.size, [e for e in Bstar.rel("E") if e[0] < e[1]])):
        assert pullback_extra(Bstar, GRAPH_SIG, m) == bf_pullback(Bstar, GRAPH_SIG.names, m)


@settings(max_examples=30, deadline=None)
@given(ordered_graphs(2, 5), graphs(1, 3))
def test_equivalences_are_equivalence_relations(Bstar, A):
    B = graph(Bstar.size, [e for e in Bstar.rel("E") if e[0] < e[1]])
    es = [Embedding(A, B, m) for m in bf_embeddings(A, B)][:6]
    for a, b, c in itertools.product(es, repeat=3):
        assert emb_equivalent(Bstar, GRAPH_SIG, a, a)
        if emb_equivalent(Bstar, GRAPH_SIG, a, b):
            assert emb_equivalent(Bstar, GRAPH_SIG, b, a)
            if emb_equivalent(Bstar, GRAPH_SIG, b, c):
                assert emb_equivalent(Bstar, GRAPH_SIG, a, c)
    cs = [Copy(B, c.points) for c in enumerate_copies(A, B)][:5]
    for a, b in itertools.product(cs, repeat=2):
        assert copy_equivalent(Bstar, GRAPH_SIG, a, b) == copy_equivalent(Bstar, GRAPH_SIG, b, a)


@settings(max_examples=40, deadline=None)
@given(graphs(2, 5), graphs(1, 3), graphs(1, 2), st.integers(2, 3))
def test_arrow_certificates_verify(C, B, A, k):
    if B.size > C.size or A.size > B.size:
        return
    cert = arrow_check(C, B, A, k)
    if len(enumerate_copies(A, C)) <= 12:
        assert verify_certificate(cert)


@settings(max_examples=40, deadline=None)
@given(graphs(2, 4), ordered_graphs(1, 3), graphs(1, 2))
def test_emb_implies_struct(C, Bstar, A):
    if Bstar.size > C.size or A.size > Bstar.size:
        return
    if rel_arrow_emb_check(C, Bstar, A, 2).holds:
        assert rel_arrow_struct_check(C, Bstar, A, 2).holds


@settings(max_examples=30, deadline=None)
@given(graphs(3, 6))
def test_ordered_expansion_orbit_count(G):
    from relramsey.classes import pair_from_string
    from relramsey.expansions import enumerate_expansions

    if G.size > 5:
        return
    pair = pair_from_string("graphs:ordered_graphs")
    assert len(enumerate_expansions(pair, G).up_to_iso) == math.factorial(G.size) // len(automorphisms(G))
