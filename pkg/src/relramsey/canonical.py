"""Canonical labeling by colour refinement plus individualization.

The search tree is the usual individualize-refine tree. Leaves are discrete
ordered partitions; the canonical form is the leaf relabeling with the least
encoding. Automorphisms discovered as pairs of leaves with equal encodings
prune sibling branches lying in the same orbit of the point stabilizer.
"""

from __future__ import annotations

from .structures import Structure, relabel


def _encode(A: Structure, labels: list[int]) -> tuple:
    return tuple(
        tuple(sorted(tuple(labels[x] for x in t) for t in rel)) for rel in A.relations
    )


class _Incidence:
    def __init__(self, A: Structure):
        self.n = A.size
        self.inc: list[list[tuple[int, tuple[int, ...], tuple[int, ...]]]] = [[] for _ in range(A.size)]
        for sym, rel in enumerate(A.relations):
            for t in rel:
                for x in set(t):
                    pos = tuple(i for i, y in enumerate(t) if y == x)
                    self.inc[x].append((sym, pos, t))


def _refine(inc: _Incidence, colors: list[int]) -> list[int]:
    """Iterated refinement to a stable colouring; colours are 0..c-1."""
    n = inc.n
    ncol = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            around = sorted((sym, pos, tuple(colors[y] for y in t)) for sym, pos, t in inc.inc[v])
            sigs.append((colors[v], tuple(around)))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new = [rank[s] for s in sigs]
        if len(order) == ncol:
            return new
        colors, ncol = new, len(order)


def _individualize(colors: list[int], v: int) -> list[int]:
    # v gets a colour just below its cell; everything else keeps relative order
    return [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]


def canonical_labeling(A: Structure) -> tuple[int, ...]:
    """Return ``labels`` with ``labels[v]`` the canonical index of ``v``."""
    inc = _Incidence(A)
    n = A.size
    best: list = [None, None]  # encoding, labels
    seen: dict[tuple, list[int]] = {}
    autos: list[tuple[int, ...]] = []

    def leaf(colors: list[int]) -> None:
        labels = colors
        enc = _encode(A, labels)
        if enc in seen:
            other = seen[enc]
            inv = [0] * n
            for v, lab in enumerate(other):
                inv[lab] = v
            # v -> vertex of the other leaf carrying the same label
            autos.append(tuple(inv[labels[v]] for v in range(n)))
        else:
            seen[enc] = labels
        if best[0] is None or enc < best[0]:
            best[0], best[1] = enc, labels

    def search(colors: list[int], fixed: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            leaf(colors)
            return
        target = min(
            (cells[c] for c in cells if len(cells[c]) > 1), key=lambda cell: (len(cell), colors[cell[0]])
        )
        done: list[int] = []
        for v in target:
            stab = [g for g in autos if all(g[x] == x for x in fixed)]
            if done and _same_orbit(v, done, stab):
                continue
            done.append(v)
            search(_refine(inc, _individualize(colors, v)), fixed + [v])

    search(_refine(inc, [0] * n), [])
    return tuple(best[1])


def _same_orbit(v: int, done: list[int], gens: list[tuple[int, ...]]) -> bool:
    if not gens:
        return False
    orbit = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return any(d in orbit for d in done)


def canonical_form(A: Structure) -> Structure:
    return relabel(A, canonical_labeling(A))


def canonical_key(A: Structure) -> tuple:
    """Hashable key with ``key(A) == key(B)`` iff ``A`` and ``B`` are isomorphic."""
    labels = canonical_labeling(A)
    return (A.signature, A.size, _encode(A, list(labels)))
