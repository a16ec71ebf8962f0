"""Counterexample search for colouring problems.

Every decider in this package reduces to one question: given ``m`` objects,
``k`` colours and a list of *candidates* (each a list of groups of objects),
is there a colouring under which every candidate has some group carrying more
than ``l`` colours? Such a colouring is a *bad colouring*; the Ramsey-type
statement holds exactly when none exists.

The search is a depth-first assignment of colours with

* fail-first branching: the next object is the uncoloured one lying in the
  most candidates not yet killed (ties to the lowest index);
* colour-interchangeability breaking: a new object may only take one of the
  colours already used or the next unused one;
* dead-candidate pruning: a branch is abandoned as soon as some live
  candidate can no longer get a group above ``l`` colours.

Parallel runs split the tree at a fixed frontier and keep the result of the
earliest frontier node, so the answer is the one the sequential search finds.
"""

from __future__ import annotations

import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ColoringProblem:
    n_objects: int
    k: int
    l: int
    candidates: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def build(cls, n_objects: int, k: int, l: int, candidates: Sequence[Sequence[Sequence[int]]]) -> "ColoringProblem":
        """Normalize: drop groups too small to ever exceed ``l`` colours."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if l < 1:
            raise ValueError("l must be >= 1")
        cands = []
        for groups in candidates:
            gs = tuple(tuple(sorted(set(g))) for g in groups)
            cands.append(tuple(g for g in gs if len(g) > l))
        return cls(n_objects, k, l, tuple(cands))

    def is_bad(self, coloring: Sequence[int]) -> bool:
        return all(
            any(len({coloring[o] for o in g}) > self.l for g in groups) for groups in self.candidates
        )


@dataclass(frozen=True)
class SearchResult:
    status: str  # "bad" | "none" | "timeout"
    coloring: tuple[int, ...] | None
    nodes: int


class SearchTimeout(Exception):
    pass


class _Searcher:
    def __init__(self, p: ColoringProblem, deadline: float | None = None, stop: "_Stop | None" = None, my_index: int = 0):
        self.p = p
        self.k, self.l = p.k, p.l
        self.deadline = deadline
        self.stop = stop
        self.my_index = my_index
        m = p.n_objects
        self.group_objs: list[tuple[int, ...]] = []
        self.group_cand: list[int] = []
        self.cand_groups: list[list[int]] = []
        obj_groups: list[list[int]] = [[] for _ in range(m)]
        obj_cands: list[set[int]] = [set() for _ in range(m)]
        self.cand_objs: list[tuple[int, ...]] = []
        for c, groups in enumerate(p.candidates):
            gids = []
            objs = set()
            for g in groups:
                gid = len(self.group_objs)
                self.group_objs.append(g)
                self.group_cand.append(c)
                gids.append(gid)
                for o in g:
                    obj_groups[o].append(gid)
                    obj_cands[o].add(c)
                objs.update(g)
            self.cand_groups.append(gids)
            self.cand_objs.append(tuple(sorted(objs)))
        self.obj_groups = obj_groups
        self.obj_cands = [sorted(s) for s in obj_cands]
        ng = len(self.group_objs)
        self.gcount = [[0] * self.k for _ in range(ng)]
        self.gdistinct = [0] * ng
        self.guncol = [len(g) for g in self.group_objs]
        self.ckilled = [0] * len(p.candidates)
        self.live = [len(cs) for cs in self.obj_cands]
        self.n_alive = len(p.candidates)
        self.color = [-1] * m
        self.used = 0
        self.nodes = 0

    # -- state updates ----------------------------------------------------

    def assign(self, o: int, col: int) -> None:
        self.color[o] = col
        l = self.l
        for g in self.obj_groups[o]:
            cnt = self.gcount[g]
            cnt[col] += 1
            self.guncol[g] -= 1
            if cnt[col] == 1:
                self.gdistinct[g] += 1
                if self.gdistinct[g] == l + 1:
                    c = self.group_cand[g]
                    self.ckilled[c] += 1
                    if self.ckilled[c] == 1:
                        self.n_alive -= 1
                        for x in self.cand_objs[c]:
                            self.live[x] -= 1

    def unassign(self, o: int) -> None:
        col = self.color[o]
        self.color[o] = -1
        l = self.l
        for g in self.obj_groups[o]:
            cnt = self.gcount[g]
            cnt[col] -= 1
            self.guncol[g] += 1
            if cnt[col] == 0:
                if self.gdistinct[g] == l + 1:
                    c = self.group_cand[g]
                    self.ckilled[c] -= 1
                    if self.ckilled[c] == 0:
                        self.n_alive += 1
                        for x in self.cand_objs[c]:
                            self.live[x] += 1
                self.gdistinct[g] -= 1

    def killable(self, c: int) -> bool:
        k, l = self.k, self.l
        for g in self.cand_groups[c]:
            d = self.gdistinct[g]
            if d + min(self.guncol[g], k - d) > l:
                return True
        return False

    def consistent_after(self, o: int) -> bool:
        for c in self.obj_cands[o]:
            if self.ckilled[c] == 0 and not self.killable(c):
                return False
        return True

    def root_consistent(self) -> bool:
        return all(self.ckilled[c] > 0 or self.killable(c) for c in range(len(self.p.candidates)))

    def pick(self) -> int:
        best, best_live = -1, -1
        for o, col in enumerate(self.color):
            if col < 0 and self.live[o] > best_live:
                best, best_live = o, self.live[o]
        return best

    def complete(self) -> tuple[int, ...]:
        return tuple(c if c >= 0 else 0 for c in self.color)

    # -- search -----------------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes & 255 == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise SearchTimeout
            if self.stop is not None and self.stop.superseded(self.my_index):
                raise _Superseded

    def dfs(self) -> tuple[int, ...] | None:
        self._tick()
        if self.n_alive == 0:
            return self.complete()
        o = self.pick()
        if o < 0:
            return None
        prev_used = self.used
        for col in range(min(self.k, prev_used + 1)):
            self.assign(o, col)
            self.used = max(prev_used, col + 1)
            if self.consistent_after(o):
                found = self.dfs()
                if found is not None:
                    self.unassign(o)
                    self.used = prev_used
                    return found
            self.unassign(o)
            self.used = prev_used
        return None

    def apply_prefix(self, prefix: Sequence[tuple[int, int]]) -> None:
        for o, col in prefix:
            self.assign(o, col)
            self.used = max(self.used, col + 1)

    def frontier(self, depth: int) -> list[tuple[str, object]]:
        """Nodes at ``depth`` in DFS order: ``("open", prefix)`` or
        ``("done", colouring)`` for branches that finish earlier."""
        out: list[tuple[str, object]] = []
        path: list[tuple[int, int]] = []

        def rec(d: int) -> None:
            if self.n_alive == 0:
                out.append(("done", self.complete()))
                return
            if d == depth:
                out.append(("open", list(path)))
                return
            o = self.pick()
            if o < 0:
                return
            prev_used = self.used
            for col in range(min(self.k, prev_used + 1)):
                self.assign(o, col)
                self.used = max(prev_used, col + 1)
                if self.consistent_after(o):
                    path.append((o, col))
                    rec(d + 1)
                    path.pop()
                self.unassign(o)
                self.used = prev_used

        rec(0)
        return out


class _Superseded(Exception):
    pass


class _Stop:
    """Lowest frontier index known to hold a bad colouring."""

    def __init__(self):
        self._lock = threading.Lock()
        self.best = None

    def offer(self, index: int) -> None:
        with self._lock:
            if self.best is None or index < self.best:
                self.best = index

    def superseded(self, index: int) -> bool:
        b = self.best
        return b is not None and b < index


def find_bad_coloring(
    problem: ColoringProblem,
    threads: int = 1,
    timeout_ms: int | None = None,
) -> SearchResult:
    """Search for a bad colouring; deterministic for any ``threads``."""
    deadline = None if timeout_ms is None else time.monotonic() + timeout_ms / 1000.0
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * problem.n_objects + 1000))
    root = _Searcher(problem, deadline)
    if not root.root_consistent():
        return SearchResult("none", None, 1)
    if root.n_alive == 0:
        return SearchResult("bad", root.complete(), 1)
    try:
        if threads <= 1:
            found = root.dfs()
            return SearchResult("bad" if found else "none", found, root.nodes)
        items: list[tuple[str, object]] = [("open", [])]
        for depth in range(1, 8):
            items = root.frontier(depth)
            if len([i for i in items if i[0] == "open"]) >= 4 * threads:
                break
        return _run_parallel(problem, items, threads, deadline, root.nodes)
    except SearchTimeout:
        return SearchResult("timeout", None, root.nodes)


def _run_parallel(problem, items, threads, deadline, base_nodes) -> SearchResult:
    stop = _Stop()
    results: list = [None] * len(items)
    node_counts = [0] * len(items)

    def work(i: int):
        kind, payload = items[i]
        if kind == "done":
            results[i] = payload
            stop.offer(i)
            return
        if stop.superseded(i):
            return
        s = _Searcher(problem, deadline, stop, i)
        s.apply_prefix(payload)
        try:
            found = s.dfs()
        except _Superseded:
            found = None
        node_counts[i] = s.nodes
        if found is not None:
            results[i] = found
            stop.offer(i)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(work, i) for i in range(len(items))]
        for f in futures:
            f.result()
    nodes = base_nodes + sum(node_counts)
    for r in results:
        if r is not None:
            return SearchResult("bad", tuple(r), nodes)
    return SearchResult("none", None, nodes)
