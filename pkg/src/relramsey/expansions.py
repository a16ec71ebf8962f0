"""Pullback (canonical) expansions along embeddings and expansion counting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .canonical import canonical_key
from .classes import ClassError, ExpansionPair, extend_one_point
from .structures import (
    Copy,
    Embedding,
    Signature,
    Structure,
    StructureError,
    enumerate_embeddings,
    expand_to,
    induced_substructure,
    is_isomorphic,
    is_rigid,
    iter_embeddings,
    reduct,
    relabel,
)


@dataclass(frozen=True)
class PullbackExpansion:
    """Expansion of ``base`` obtained by pulling the extra relations of
    ``host`` back through ``embedding``."""

    base: Structure
    extra: tuple[tuple[str, frozenset], ...]
    embedding: Embedding
    host: Structure

    @property
    def structure(self) -> Structure:
        return expand_to(self.base, self.host.signature, dict(self.extra))

    @property
    def key(self) -> tuple:
        """Equality key: two pullbacks on the same base are equal iff keys match."""
        return self.extra


def _extra_signature(Bstar: Structure, L: Signature) -> Signature:
    if not L.issubset(Bstar.signature):
        raise StructureError(f"{L.names} is not contained in {Bstar.signature.names}")
    return Bstar.signature.minus(L)


def pullback_extra(Bstar: Structure, L: Signature, m) -> tuple[tuple[str, frozenset], ...]:
    """Extra relations on ``{0..len(m)-1}`` pulled back through the map ``m``."""
    n = len(m)
    out = []
    for name, arity in _extra_signature(Bstar, L).symbols:
        R = Bstar.rel(name)
        out.append((name, frozenset(t for t in itertools.product(range(n), repeat=arity) if tuple(m[x] for x in t) in R)))
    return tuple(out)


def canonical_expansion(Bstar: Structure, L: Signature, a: Embedding) -> PullbackExpansion:
    if a.source.signature != L:
        raise StructureError("the embedding's source must be an L-structure")
    if a.target != reduct(Bstar, L):
        raise StructureError("the embedding's target must be the L-reduct of the host")
    return PullbackExpansion(a.source, pullback_extra(Bstar, L, a.map), a, Bstar)


def _check_pair(Bstar, L, a0: Embedding, a1: Embedding) -> None:
    if a0.source != a1.source or a0.target != a1.target:
        raise StructureError("embeddings must share source and target")
    if a0.target != reduct(Bstar, L):
        raise StructureError("the embeddings' target must be the L-reduct of the host")


def emb_equivalent(Bstar: Structure, L: Signature, a0: Embedding, a1: Embedding) -> bool:
    _check_pair(Bstar, L, a0, a1)
    return pullback_extra(Bstar, L, a0.map) == pullback_extra(Bstar, L, a1.map)


def copy_equivalent(Bstar: Structure, L: Signature, c0: Copy, c1: Copy) -> bool:
    B = reduct(Bstar, L)
    if c0.host != B or c1.host != B:
        raise StructureError("copies must live in the L-reduct of the host")
    s0, _ = induced_substructure(Bstar, c0.points)
    s1, _ = induced_substructure(Bstar, c1.points)
    return is_isomorphic(s0, s1)


def equivalence_classes_emb(Bstar: Structure, L: Signature, A: Structure) -> list[list[Embedding]]:
    """Partition ``Emb(A, Bstar|L)`` by equality of pullbacks.

    Classes are listed in order of their first member; members keep the
    lexicographic embedding order.
    """
    B = reduct(Bstar, L)
    classes: dict[tuple, list[Embedding]] = {}
    for m in iter_embeddings(A, B):
        classes.setdefault(pullback_extra(Bstar, L, m), []).append(Embedding(A, B, m))
    return list(classes.values())


def class_index_emb(Bstar: Structure, L: Signature, A: Structure) -> list[list[tuple[int, ...]]]:
    """Same partition as :func:`equivalence_classes_emb`, as raw maps."""
    return [[e.map for e in cls] for cls in equivalence_classes_emb(Bstar, L, A)]


def equivalence_classes_copy(Bstar: Structure, L: Signature, A: Structure) -> list[list[tuple[int, ...]]]:
    """Partition the copies of ``A`` in ``Bstar|L`` by isomorphism type of the
    induced ``L*``-substructure. Point sets are returned."""
    B = reduct(Bstar, L)
    images = sorted({tuple(sorted(m)) for m in iter_embeddings(A, B)})
    classes: dict[tuple, list[tuple[int, ...]]] = {}
    for pts in images:
        sub, _ = induced_substructure(Bstar, pts)
        classes.setdefault(canonical_key(sub), []).append(pts)
    return list(classes.values())


def cross_identify(Bstar: Structure, L: Signature, A: Structure, based: list[Structure]) -> dict | None:
    """When every based expansion is rigid, match each emb-equivalence class
    with the based expansion ``A*`` whose embeddings into ``Bstar`` it is.

    Returns ``{class index: based index}`` or ``None`` if some expansion is
    not rigid. Raises if the identification fails.
    """
    if not all(is_rigid(X) for X in based):
        return None
    Lstar = Bstar.signature
    classes = equivalence_classes_emb(Bstar, L, A)
    by_extra = {}
    for j, X in enumerate(based):
        Xs = X if X.signature == Lstar else _reorder(X, Lstar)
        by_extra[pullback_extra(Xs, L, tuple(range(A.size)))] = j
    matching = {}
    for i, cls in enumerate(classes):
        extra = pullback_extra(Bstar, L, cls[0].map)
        j = by_extra.get(extra)
        if j is None:
            raise ClassError("an equivalence class matches no based expansion")
        Xs = based[j] if based[j].signature == Lstar else _reorder(based[j], Lstar)
        if sorted(e.map for e in cls) != sorted(iter_embeddings(Xs, Bstar)):
            raise ClassError("equivalence class differs from the embedding set of its expansion")
        matching[i] = j
    return matching


def _reorder(X: Structure, sig: Signature) -> Structure:
    return Structure(sig, X.size, tuple(X.rel(n) for n in sig.names))


@dataclass(frozen=True)
class Expansions:
    based: list[Structure]
    up_to_iso: list[Structure]


def iter_based_expansions(pair: ExpansionPair, A: Structure) -> Iterator[Structure]:
    """Lazily yield the members of ``pair.expansion`` whose ``L``-reduct is ``A``.

    Order is deterministic (depth-first over points) but differs from the
    sorted order of :func:`based_expansions`.
    """
    spec = pair.expansion
    if spec.explicit is not None or not spec.hereditary:
        yield from _based_bruteforce(pair, A)
        return
    pinned = [induced_substructure(A, range(v + 1))[0] for v in range(A.size)]

    def rec(v: int, rels) -> Iterator[Structure]:
        if v == A.size:
            yield Structure(spec.signature, A.size, tuple(rels))
            return
        for nxt in extend_one_point(spec, rels, v, fixed=pinned[v]):
            yield from rec(v + 1, nxt)

    yield from rec(0, [frozenset() for _ in spec.signature.names])


def based_expansions(pair: ExpansionPair, A: Structure) -> list[Structure]:
    """Members of ``pair.expansion`` whose ``L``-reduct is exactly ``A``."""
    return sorted(set(iter_based_expansions(pair, A)), key=lambda S: S.dumps())


def _based_bruteforce(pair: ExpansionPair, A: Structure) -> list[Structure]:
    spec = pair.expansion
    found = set()
    if spec.explicit is not None:
        for M in spec.explicit:
            if M.size != A.size:
                continue
            for perm in itertools.permutations(range(A.size)):
                X = relabel(M, perm)
                if reduct(X, pair.L) == A:
                    found.add(X)
    else:
        extra = spec.signature.minus(pair.L)
        slots = [(n, t) for n, a in extra.symbols for t in itertools.product(range(A.size), repeat=a)]
        if len(slots) > 20:
            raise ClassError("too many tuple slots for brute-force expansion search")
        for mask in range(1 << len(slots)):
            rel = {n: [] for n in extra.names}
            for j, (n, t) in enumerate(slots):
                if mask >> j & 1:
                    rel[n].append(t)
            X = expand_to(A, spec.signature, rel)
            if spec.check(X):
                found.add(X)
    return sorted(found, key=lambda S: S.dumps())


def enumerate_expansions(pair: ExpansionPair, A: Structure) -> Expansions:
    if A.signature != pair.L or not pair.base.check(A):
        raise ClassError(f"structure is not a member of {pair.base.name}")
    based = based_expansions(pair, A)
    seen = {}
    for X in based:
        seen.setdefault(canonical_key(X), X)
    return Expansions(based, list(seen.values()))


def precompactness_count(pair: ExpansionPair, n: int) -> dict[int, int]:
    if n < 1:
        raise ClassError("bound must be >= 1")
    table = {}
    for s in range(1, n + 1):
        counts = [len(enumerate_expansions(pair, A).up_to_iso) for A in pair.base.members(s)]
        table[s] = max(counts, default=0)
    return table
