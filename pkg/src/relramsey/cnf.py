"""DIMACS export of colouring problems.

The formula is satisfiable exactly when a bad colouring exists, i.e. when
the Ramsey-type statement fails.

Variables:

* ``x(o, c) = o*k + c + 1``: object ``o`` gets colour ``c`` (exactly one per object);
* ``y`` per (candidate, group): this group carries more than ``l`` colours;
* for ``l > 1``, ``u`` per (group, colour): colour ``c`` occurs in the group.

Each candidate contributes the clause "some group is selected".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .search import ColoringProblem


@dataclass
class CNF:
    n_vars: int
    clauses: list[list[int]]
    comments: list[str] = field(default_factory=list)
    n_objects: int = 0
    k: int = 1

    def to_dimacs(self) -> str:
        lines = [f"c {line}" for line in self.comments]
        lines.append(f"p cnf {self.n_vars} {len(self.clauses)}")
        lines += [" ".join(map(str, cl)) + " 0" for cl in self.clauses]
        return "\n".join(lines) + "\n"

    def decode(self, model) -> tuple[int, ...]:
        """Colouring read off a satisfying assignment (list of signed ints)."""
        true = {v for v in model if v > 0}
        out = []
        for o in range(self.n_objects):
            cs = [c for c in range(self.k) if o * self.k + c + 1 in true]
            out.append(cs[0])
        return tuple(out)


def encode(problem: ColoringProblem) -> CNF:
    m, k, l = problem.n_objects, problem.k, problem.l
    clauses: list[list[int]] = []
    nxt = m * k

    def fresh() -> int:
        nonlocal nxt
        nxt += 1
        return nxt

    def x(o: int, c: int) -> int:
        return o * k + c + 1

    for o in range(m):
        clauses.append([x(o, c) for c in range(k)])
        clauses += [[-x(o, a), -x(o, b)] for a, b in itertools.combinations(range(k), 2)]

    first_y = nxt + 1
    for groups in problem.candidates:
        if not groups:
            z = fresh()
            clauses += [[z], [-z]]
            continue
        ys = []
        for g in groups:
            y = fresh()
            ys.append(y)
            if l == 1:
                # not monochromatic: no colour covers the whole group
                clauses += [[-y] + [-x(o, c) for o in g] for c in range(k)]
            else:
                us = []
                for c in range(k):
                    u = fresh()
                    us.append(u)
                    clauses.append([-u] + [x(o, c) for o in g])
                # at least l+1 of the u's: every (k-l)-subset has a true member
                if l + 1 > k:
                    clauses.append([-y])
                else:
                    clauses += [[-y] + list(sub) for sub in itertools.combinations(us, k - l)]
        clauses.append(ys)

    comments = [
        f"colouring problem: {m} objects, k={k}, l={l}, {len(problem.candidates)} candidates",
        "satisfiable iff a bad colouring exists (the statement fails)",
        f"x(o,c) = o*{k} + c + 1 for o < {m}, c < {k}",
        f"selector and helper variables: {first_y}..{nxt}",
    ]
    return CNF(nxt, clauses, comments, m, k)


def write_dimacs(problem: ColoringProblem, path) -> CNF:
    cnf = encode(problem)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(cnf.to_dimacs())
    return cnf
