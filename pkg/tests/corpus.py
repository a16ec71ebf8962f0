"""Deterministic instance corpus shared by the oracle and implication tests.

Every entry is ``(check, doc, family)``. ``doc`` is the certificate
``instance`` section, so the engine (``checks.instance_for``) and the oracle
(``verify.build_instance``) rebuild it independently.
"""

from __future__ import annotations

import itertools
import random

from relramsey.classes import builtin_class
from relramsey.structures import (
    EDGE,
    Structure,
    graph,
    linear_order,
    ordered_graph,
    pure_set,
)
from relramsey.verify import build_instance

MAX_DOMAIN = 14
# k=3 over 14 objects is 4.8M colourings; cap k=3 domains so the oracle stays quick
MAX_DOMAIN_K3 = 10


def _doc(**kw):
    return {k: (v.to_dict() if isinstance(v, Structure) else v) for k, v in kw.items()}


def _graphs(n):
    return builtin_class("graphs").members(n)


def _ordered_versions(G, rng, count):
    """A few order expansions of graph ``G`` (labels permuted at random)."""
    out = []
    perms = list(itertools.permutations(range(G.size)))
    rng.shuffle(perms)
    for p in perms[:count]:
        out.append(ordered_graph(G.size, sorted(tuple(sorted(e)) for e in G.rel(EDGE) if e[0] < e[1]), order=p))
    return out


def arrow_docs(rng):
    """Arrow instances; the third field names the class they live in."""
    docs = []
    for c, b, a in itertools.product(range(2, 7), range(2, 5), range(1, 4)):
        if not (a <= b <= c):
            continue
        for k in (2, 3):
            for kind in ("copies", "embeddings"):
                docs.append(("arrow", _doc(C=linear_order(c), B=linear_order(b), A=linear_order(a), k=k, l=1, domain_kind=kind), "linear_orders"))
    K2, N2, K1 = graph(2, [(0, 1)]), graph(2, []), graph(1, [])
    for C in _graphs(4) + rng.sample(_graphs(5), 12):
        for B in rng.sample(_graphs(3), 2):
            for A in (K1, K2, N2):
                for kind in ("copies", "embeddings"):
                    docs.append(("arrow", _doc(C=C, B=B, A=A, k=rng.choice((2, 3)), l=1, domain_kind=kind), "graphs"))
    og = builtin_class("ordered_graphs")
    for C in rng.sample(og.members(4), 10):
        for B in rng.sample(og.members(3), 2):
            A = rng.choice(og.members(2))
            docs.append(("arrow", _doc(C=C, B=B, A=A, k=2, l=1, domain_kind="copies"), "ordered_graphs"))
    posets = builtin_class("posets")
    for C in posets.members(4):
        B = rng.choice(posets.members(3))
        A = rng.choice(posets.members(2))
        docs.append(("arrow", _doc(C=C, B=B, A=A, k=rng.choice((2, 3)), l=1, domain_kind=rng.choice(("copies", "embeddings"))), "posets"))
    # a few l > 1
    for c in (4, 5, 6):
        docs.append(("arrow", _doc(C=linear_order(c), B=linear_order(3), A=linear_order(1), k=3, l=2, domain_kind="copies"), "linear_orders"))
    return docs


def relative_docs(rng):
    docs = []
    # (pure sets, linear orders)
    for n, b, a in itertools.product(range(2, 6), range(2, 4), range(1, 3)):
        if a <= b <= n:
            for k in (2, 3):
                for check in ("rel-emb", "rel-struct"):
                    docs.append((check, _doc(C=pure_set(n), Bstar=linear_order(b), A=pure_set(a), k=k), SETS))
                docs.append(("rel-strong", _doc(Cstar=linear_order(n), Bstar=linear_order(b), A=pure_set(a), k=k), SETS))
                docs.append(("classwise", _doc(C=pure_set(n), Bstar=linear_order(b), Astar=linear_order(a), k=k), SETS))
    # (graphs, ordered graphs)
    K1, K2, N2 = graph(1, []), graph(2, [(0, 1)]), graph(2, [])
    for C in _graphs(3) + _graphs(4):
        for Bb in rng.sample(_graphs(3), 2):
            Bstar = _ordered_versions(Bb, rng, 1)[0]
            A = rng.choice([K1, K2, N2])
            k = rng.choice((2, 3))
            for check in ("rel-emb", "rel-struct"):
                docs.append((check, _doc(C=C, Bstar=Bstar, A=A, k=k), GRAPHS))
            Cstar = _ordered_versions(C, rng, 1)[0]
            docs.append(("rel-strong", _doc(Cstar=Cstar, Bstar=Bstar, A=A, k=k), GRAPHS))
            Astar = rng.choice(_ordered_versions(A, rng, 2))
            docs.append(("classwise", _doc(C=C, Bstar=Bstar, Astar=Astar, k=k), GRAPHS))
    # (posets, ordered posets with a linear extension)
    pl = builtin_class("ordered_posets_linext")
    posets = builtin_class("posets")
    for C in posets.members(3):
        Bstar = rng.choice(pl.members(3))
        A = rng.choice(posets.members(2))
        for check in ("rel-emb", "rel-struct"):
            docs.append((check, _doc(C=C, Bstar=Bstar, A=A, k=2), POSETS))
    return docs


SETS = "sets:linear_orders"
GRAPHS = "graphs:ordered_graphs"
POSETS = "posets:ordered_posets_linext"


def _fits(check, doc):
    inst = build_instance(check, doc)
    m = len(inst.domain)
    return 0 < m <= (MAX_DOMAIN if inst.k == 2 else MAX_DOMAIN_K3)


def corpus(seed: int = 20261016) -> list[tuple[str, dict, str]]:
    """``(check, doc, family)`` triples; family is a class name for arrow
    instances and a ``base:expansion`` pair for the relative ones."""
    rng = random.Random(seed)
    docs = arrow_docs(rng) + relative_docs(rng)
    return [(c, d, f) for c, d, f in docs if _fits(c, d)]
