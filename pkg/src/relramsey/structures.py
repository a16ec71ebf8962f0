"""Finite relational structures, embeddings and copies.

Universes are always ``{0, ..., n-1}`` with ``n >= 1``. Relations are stored
extensionally as frozensets of tuples, aligned with the signature order, so a
:class:`Structure` is an immutable, hashable value.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


class StructureError(ValueError):
    """Malformed structure or incompatible operands."""


@dataclass(frozen=True)
class Signature:
    """Ordered relational signature: a tuple of ``(name, arity)`` pairs."""

    symbols: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        names = [s for s, _ in self.symbols]
        if len(set(names)) != len(names):
            raise StructureError(f"duplicate symbol names in {names}")
        for name, arity in self.symbols:
            if not isinstance(arity, int) or arity < 1:
                raise StructureError(f"symbol {name!r} has invalid arity {arity!r}")

    @classmethod
    def of(cls, *pairs: tuple[str, int]) -> "Signature":
        return cls(tuple((str(n), int(a)) for n, a in pairs))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s for s, _ in self.symbols)

    def arity(self, name: str) -> int:
        for s, a in self.symbols:
            if s == name:
                return a
        raise KeyError(name)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def __len__(self) -> int:
        return len(self.symbols)

    def issubset(self, other: "Signature") -> bool:
        return set(self.symbols) <= set(other.symbols)

    def union(self, other: "Signature") -> "Signature":
        """Symbols of ``self`` followed by the new ones of ``other``."""
        extra = []
        for name, arity in other.symbols:
            if name in self:
                if self.arity(name) != arity:
                    raise StructureError(f"arity clash on {name!r}")
            else:
                extra.append((name, arity))
        return Signature(self.symbols + tuple(extra))

    def minus(self, other: "Signature") -> "Signature":
        return Signature(tuple(s for s in self.symbols if s[0] not in other))

    def to_list(self) -> list[dict]:
        return [{"name": n, "arity": a} for n, a in self.symbols]


@dataclass(frozen=True)
class Structure:
    signature: Signature
    size: int
    relations: tuple[frozenset, ...]

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise StructureError(f"structure size must be >= 1, got {self.size!r}")
        if len(self.relations) != len(self.signature):
            raise StructureError("relations do not match the signature")
        for (name, arity), rel in zip(self.signature.symbols, self.relations):
            for t in rel:
                if len(t) != arity:
                    raise StructureError(f"tuple {t} has wrong arity for {name!r}")
                for x in t:
                    if not (isinstance(x, int) and 0 <= x < self.size):
                        raise StructureError(f"tuple {t} of {name!r} leaves the universe")

    @classmethod
    def build(
        cls,
        signature: Signature,
        size: int,
        relations: Mapping[str, Iterable[Sequence[int]]] | None = None,
    ) -> "Structure":
        relations = dict(relations or {})
        unknown = set(relations) - set(signature.names)
        if unknown:
            raise StructureError(f"relations for unknown symbols {sorted(unknown)}")
        rels = tuple(
            frozenset(tuple(int(x) for x in t) for t in relations.get(name, ()))
            for name in signature.names
        )
        return cls(signature, int(size), rels)

    def rel(self, name: str) -> frozenset:
        return self.relations[self.signature.index(name)]

    @property
    def universe(self) -> range:
        return range(self.size)

    def holds(self, name: str, *xs: int) -> bool:
        return tuple(xs) in self.rel(name)

    def sorted_relations(self) -> dict[str, list[list[int]]]:
        return {
            name: [list(t) for t in sorted(rel)]
            for name, rel in zip(self.signature.names, self.relations)
        }

    def to_dict(self) -> dict:
        return {
            "signature": self.signature.to_list(),
            "size": self.size,
            "relations": self.sorted_relations(),
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "Structure":
        try:
            sig = Signature(tuple((str(s["name"]), int(s["arity"])) for s in doc["signature"]))
            return cls.build(sig, int(doc["size"]), doc.get("relations") or {})
        except (KeyError, TypeError) as exc:
            raise StructureError(f"malformed structure document: missing or bad field {exc}") from exc

    def dumps(self) -> str:
        """Canonical text serialization (tuples sorted lexicographically)."""
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def loads(cls, text: str) -> "Structure":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        rels = ", ".join(f"{n}={sorted(r)}" for n, r in zip(self.signature.names, self.relations))
        return f"Structure(n={self.size}; {rels})"


@dataclass(frozen=True)
class Embedding:
    source: Structure
    target: Structure
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.map))

    def compose(self, inner: "Embedding") -> "Embedding":
        """``self ∘ inner``: first apply ``inner``, then ``self``."""
        if inner.target != self.source:
            raise StructureError("embeddings are not composable")
        return Embedding(inner.source, self.target, tuple(self.map[x] for x in inner.map))

    def __repr__(self) -> str:
        return f"Embedding{self.map}"


@dataclass(frozen=True)
class Copy:
    host: Structure
    points: tuple[int, ...]

    def __repr__(self) -> str:
        return f"Copy{self.points}"


def _require_same_signature(A: Structure, B: Structure) -> None:
    if A.signature != B.signature:
        raise StructureError(
            f"signature mismatch: {A.signature.names} vs {B.signature.names}"
        )


class _Pattern:
    """Per-point constraint lists used by the embedding backtracker.

    For point ``i`` of the source we store every tuple over ``{0..i}`` that
    mentions ``i`` together with its truth value, so each tuple is checked
    exactly once, as soon as all its entries are mapped.
    """

    def __init__(self, A: Structure):
        self.size = A.size
        self.checks: list[list[tuple[int, tuple[int, ...], bool]]] = []
        for i in range(A.size):
            row = []
            for sym, ((_, arity), rel) in enumerate(zip(A.signature.symbols, A.relations)):
                for t in itertools.product(range(i + 1), repeat=arity):
                    if i in t:
                        row.append((sym, t, t in rel))
            self.checks.append(row)


def iter_embeddings(
    A: Structure, B: Structure, partial: Sequence[int] = ()
) -> Iterator[tuple[int, ...]]:
    """Yield embedding maps of ``A`` into ``B`` in lexicographic order.

    ``partial`` pins the images of the first ``len(partial)`` points.
    """
    _require_same_signature(A, B)
    if A.size > B.size:
        return
    pattern = _Pattern(A)
    rels = B.relations
    n, m = A.size, B.size
    img = [0] * n
    used = [False] * m

    def ok(i: int) -> bool:
        for sym, t, val in pattern.checks[i]:
            if (tuple(img[x] for x in t) in rels[sym]) != val:
                return False
        return True

    for i, v in enumerate(partial):
        if used[v]:
            return
        img[i] = v
        used[v] = True
        if not ok(i):
            return

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(img)
            return
        for v in range(m):
            if used[v]:
                continue
            img[i] = v
            if ok(i):
                used[v] = True
                yield from rec(i + 1)
                used[v] = False

    yield from rec(len(partial))


def enumerate_embeddings(A: Structure, B: Structure) -> list[Embedding]:
    return [Embedding(A, B, m) for m in iter_embeddings(A, B)]


def find_embedding(A: Structure, B: Structure) -> Embedding | None:
    for m in iter_embeddings(A, B):
        return Embedding(A, B, m)
    return None


def embeds(A: Structure, B: Structure) -> bool:
    return find_embedding(A, B) is not None


def enumerate_copies(A: Structure, B: Structure) -> list[Copy]:
    images = {tuple(sorted(m)) for m in iter_embeddings(A, B)}
    return [Copy(B, pts) for pts in sorted(images)]


def automorphisms(A: Structure) -> list[Embedding]:
    return enumerate_embeddings(A, A)


def is_rigid(A: Structure) -> bool:
    it = iter_embeddings(A, A)
    next(it)
    return next(it, None) is None


def nontrivial_automorphism(A: Structure) -> Embedding | None:
    identity = tuple(range(A.size))
    for m in iter_embeddings(A, A):
        if m != identity:
            return Embedding(A, A, m)
    return None


def is_isomorphic(A: Structure, B: Structure) -> bool:
    _require_same_signature(A, B)
    if A.size != B.size:
        return False
    if any(len(r) != len(s) for r, s in zip(A.relations, B.relations)):
        return False
    return embeds(A, B)


def induced_substructure(
    B: Structure, points: Iterable[int]
) -> tuple[Structure, tuple[int, ...]]:
    """Restrict ``B`` to ``points``, re-indexed in ascending order.

    Returns the substructure and the inclusion map (new index -> old point).
    """
    pts = tuple(sorted(set(points)))
    if not pts:
        raise StructureError("cannot take the substructure on an empty point set")
    if pts[0] < 0 or pts[-1] >= B.size:
        raise StructureError(f"points {pts} leave the universe of size {B.size}")
    index = {p: i for i, p in enumerate(pts)}
    rels = tuple(
        frozenset(tuple(index[x] for x in t) for t in rel if all(x in index for x in t))
        for rel in B.relations
    )
    return Structure(B.signature, len(pts), rels), pts


def relabel(A: Structure, perm: Sequence[int]) -> Structure:
    """Image of ``A`` under the bijection ``x -> perm[x]``."""
    rels = tuple(frozenset(tuple(perm[x] for x in t) for t in rel) for rel in A.relations)
    return Structure(A.signature, A.size, rels)


def reduct(A: Structure, L: Signature) -> Structure:
    if not L.issubset(A.signature):
        raise StructureError(f"{L.names} is not a subsignature of {A.signature.names}")
    rels = tuple(A.rel(name) for name in L.names)
    return Structure(L, A.size, rels)


def expand(A: Structure, extra: Mapping[str, Iterable[Sequence[int]]], arities: Mapping[str, int] | None = None) -> Structure:
    """Append new relations to ``A``.

    Symbols keep the insertion order of ``extra``; arities are read from the
    tuples unless given explicitly (needed when a relation is empty).
    """
    arities = dict(arities or {})
    new_syms = []
    rels = []
    for name, tuples in extra.items():
        if name in A.signature:
            raise StructureError(f"symbol {name!r} already in the signature")
        ts = frozenset(tuple(int(x) for x in t) for t in tuples)
        if name not in arities:
            lengths = {len(t) for t in ts}
            if len(lengths) != 1:
                raise StructureError(f"cannot infer the arity of {name!r}")
            arities[name] = lengths.pop()
        new_syms.append((name, arities[name]))
        rels.append(ts)
    sig = Signature(A.signature.symbols + tuple(new_syms))
    return Structure(sig, A.size, A.relations + tuple(rels))


def expand_to(A: Structure, Lstar: Signature, extra: Mapping[str, Iterable[Sequence[int]]]) -> Structure:
    """Expand ``A`` to the full signature ``Lstar`` (which must contain A's)."""
    if not A.signature.issubset(Lstar):
        raise StructureError("expansion signature must contain the base signature")
    rels = []
    for name in Lstar.names:
        if name in A.signature:
            if name in extra:
                raise StructureError(f"symbol {name!r} already in the signature")
            rels.append(A.rel(name))
        else:
            rels.append(frozenset(tuple(int(x) for x in t) for t in extra.get(name, ())))
    return Structure(Lstar, A.size, tuple(rels))


def is_embedding(A: Structure, B: Structure, m: Sequence[int]) -> bool:
    if len(m) != A.size or len(set(m)) != len(m):
        return False
    if any(not (0 <= v < B.size) for v in m):
        return False
    for (_, arity), ra, rb in zip(A.signature.symbols, A.relations, B.relations):
        for t in itertools.product(range(A.size), repeat=arity):
            if (t in ra) != (tuple(m[x] for x in t) in rb):
                return False
    return True


# Convenience constructors for the structures used throughout the library.

ORDER = "<"
EDGE = "E"
LO_SIG = Signature.of((ORDER, 2))
GRAPH_SIG = Signature.of((EDGE, 2))
EMPTY_SIG = Signature()


def linear_order(n: int) -> Structure:
    return Structure.build(LO_SIG, n, {ORDER: itertools.combinations(range(n), 2)})


def pure_set(n: int) -> Structure:
    return Structure.build(EMPTY_SIG, n)


def graph(n: int, edges: Iterable[tuple[int, int]] = (), symbol: str = EDGE, signature: Signature = GRAPH_SIG) -> Structure:
    sym = set()
    for u, v in edges:
        sym.add((u, v))
        sym.add((v, u))
    return Structure.build(signature, n, {symbol: sym})


def ordered_graph(n: int, edges: Iterable[tuple[int, int]] = (), order: Sequence[int] | None = None) -> Structure:
    """Graph on ``n`` vertices with the linear order listing ``order`` ascending."""
    order = list(range(n)) if order is None else list(order)
    lt = [(order[i], order[j]) for i, j in itertools.combinations(range(n), 2)]
    g = graph(n, edges)
    return expand(g, {ORDER: lt}, {ORDER: 2})
