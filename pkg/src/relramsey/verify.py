"""Independent replay of certificates.

Nothing here calls the backtracking embedding enumerator, the canonical
labeling, or the colouring search engine. Embeddings are found by running
through all injections, isomorphism by running through all bijections, and a
"holds" verdict is re-derived by exhaustive enumeration of colourings (numpy)
or, beyond that size, by a plain chronological backtracking search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .certificates import EXHAUSTED, FAILS, HOLDS, Certificate
from .structures import Structure

EXHAUSTIVE_LIMIT = 5_000_000
_CHUNK = 1 << 15


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    message: str

    def __bool__(self) -> bool:
        return self.ok


# -- brute-force structure primitives ------------------------------------


def _rels(S: Structure) -> dict[str, tuple[int, frozenset]]:
    return {name: (arity, rel) for (name, arity), rel in zip(S.signature.symbols, S.relations)}


def bf_is_embedding(A: Structure, B: Structure, m: Sequence[int]) -> bool:
    if len(m) != A.size or len(set(m)) != A.size or any(not 0 <= v < B.size for v in m):
        return False
    rb = _rels(B)
    for name, (arity, rel) in _rels(A).items():
        if name not in rb:
            return False
        target = rb[name][1]
        for t in itertools.product(range(A.size), repeat=arity):
            if (t in rel) != (tuple(m[x] for x in t) in target):
                return False
    return True


def bf_embeddings(A: Structure, B: Structure) -> list[tuple[int, ...]]:
    if A.size > B.size:
        return []
    return [m for m in itertools.permutations(range(B.size), A.size) if bf_is_embedding(A, B, m)]


def bf_restrict(S: Structure, points: Sequence[int], symbols: Sequence[str] | None = None) -> dict:
    """Induced substructure on ``points`` (ascending re-index) as a plain dict."""
    pts = sorted(points)
    idx = {p: i for i, p in enumerate(pts)}
    out = {}
    for name, (arity, rel) in _rels(S).items():
        if symbols is not None and name not in symbols:
            continue
        out[name] = frozenset(tuple(idx[x] for x in t) for t in rel if all(x in idx for x in t))
    return out


def bf_isomorphic(r0: Mapping[str, frozenset], r1: Mapping[str, frozenset], n: int) -> bool:
    if r0.keys() != r1.keys() or any(len(r0[s]) != len(r1[s]) for s in r0):
        return False
    for perm in itertools.permutations(range(n)):
        if all(frozenset(tuple(perm[x] for x in t) for t in r0[s]) == r1[s] for s in r0):
            return True
    return False


def bf_reduct(S: Structure, names: Sequence[str]) -> Structure:
    from .structures import Signature

    sig = Signature(tuple(s for s in S.signature.symbols if s[0] in names))
    return Structure(sig, S.size, tuple(S.rel(n) for n in sig.names))


def bf_pullback(Bstar: Structure, base_names: Sequence[str], m: Sequence[int]) -> tuple:
    out = []
    for name, (arity, rel) in sorted(_rels(Bstar).items()):
        if name in base_names:
            continue
        out.append((name, frozenset(t for t in itertools.product(range(len(m)), repeat=arity) if tuple(m[x] for x in t) in rel)))
    return tuple(out)


# -- colouring instances, rebuilt from scratch ---------------------------


@dataclass(frozen=True)
class PlainInstance:
    domain: tuple[tuple[int, ...], ...]
    k: int
    l: int
    candidates: tuple[tuple[tuple[int, ...], ...], ...]


def _compose(b, a):
    return tuple(b[x] for x in a)


def build_instance(check: str, doc: Mapping) -> PlainInstance:
    S = Structure.from_dict
    k = int(doc["k"])
    if k < 1:
        raise ValueError("k must be >= 1")
    if check == "arrow":
        C, B, A = S(doc["C"]), S(doc["B"]), S(doc["A"])
        l = int(doc.get("l", 1))
        kind = doc.get("domain_kind", "copies")
        maps = bf_embeddings(A, C)
        domain = sorted(maps) if kind == "embeddings" else sorted({tuple(sorted(m)) for m in maps})
        bcopies = sorted({tuple(sorted(m)) for m in bf_embeddings(B, C)})
        cands = [[[i for i, o in enumerate(domain) if set(o) <= set(P)]] for P in bcopies]
        return _plain(domain, k, l, cands)
    if check in ("rel-emb", "rel-struct", "rel-strong"):
        A, Bstar = S(doc["A"]), S(doc["Bstar"])
        L = A.signature.names
        B = bf_reduct(Bstar, L)
        if check == "rel-strong":
            Cstar = S(doc["Cstar"])
            C = bf_reduct(Cstar, L)
        else:
            C = S(doc["C"])
        bs = bf_embeddings(B, C)
        if check == "rel-struct":
            domain = sorted({tuple(sorted(m)) for m in bf_embeddings(A, C)})
            index = {o: i for i, o in enumerate(domain)}
            copies = sorted({tuple(sorted(m)) for m in bf_embeddings(A, B)})
            pairs = [
                (p, q) for p, q in itertools.combinations(copies, 2)
                if bf_isomorphic(bf_restrict(Bstar, p), bf_restrict(Bstar, q), A.size)
            ]
            cands = [[[index[tuple(sorted(b[x] for x in p))], index[tuple(sorted(b[x] for x in q))]] for p, q in pairs] for b in bs]
            return _plain(domain, k, 1, cands)
        domain = sorted(bf_embeddings(A, C))
        index = {o: i for i, o in enumerate(domain)}
        inner = bf_embeddings(A, B)
        pairs = [(a0, a1) for a0, a1 in itertools.combinations(inner, 2) if bf_pullback(Bstar, L, a0) == bf_pullback(Bstar, L, a1)]
        cands = []
        for b in bs:
            if check == "rel-strong" and any(
                bf_pullback(Cstar, L, _compose(b, a0)) != bf_pullback(Cstar, L, _compose(b, a1)) for a0, a1 in pairs
            ):
                continue  # never a witness
            cands.append([[index[_compose(b, a0)], index[_compose(b, a1)]] for a0, a1 in pairs])
        return _plain(domain, k, 1, cands)
    if check == "classwise":
        C, Bstar, Astar = S(doc["C"]), S(doc["Bstar"]), S(doc["Astar"])
        L = C.signature.names
        A, B = bf_reduct(Astar, L), bf_reduct(Bstar, L)
        domain = sorted(bf_embeddings(A, C))
        index = {o: i for i, o in enumerate(domain)}
        stars = bf_embeddings(Astar, Bstar)
        cands = [[[index[_compose(b, a)] for a in stars]] for b in bf_embeddings(B, C)]
        return _plain(domain, k, 1, cands)
    raise ValueError(f"unknown check {check!r}")


def _plain(domain, k, l, cands) -> PlainInstance:
    # pairwise "equal colour" groups are kept as pairs: a candidate is spoiled
    # by any pair receiving two colours, which matches "some class not monochromatic"
    return PlainInstance(
        tuple(tuple(o) for o in domain), k, l,
        tuple(tuple(tuple(g) for g in gs) for gs in cands),
    )


def coloring_is_bad(inst: PlainInstance, col: Sequence[int]) -> tuple[bool, str]:
    for ci, groups in enumerate(inst.candidates):
        if not any(len({col[o] for o in g}) > inst.l for g in groups):
            return False, f"candidate #{ci} is not spoiled (all its groups carry <= {inst.l} colours)"
    return True, "every candidate is spoiled"


def exhaustive_bad_coloring(inst: PlainInstance) -> tuple[int, ...] | None:
    """Lexicographically least bad colouring, by full enumeration."""
    m, k, l = len(inst.domain), inst.k, inst.l
    total = k ** m
    if total > EXHAUSTIVE_LIMIT:
        raise ValueError(f"{k}^{m} colourings exceed the exhaustive limit")
    if not inst.candidates:
        return (0,) * m
    weights = k ** np.arange(m - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        M = ((idx[:, None] // weights[None, :]) % k).astype(np.int8)
        all_bad = np.ones(len(idx), dtype=bool)
        for groups in inst.candidates:
            spoiled = np.zeros(len(idx), dtype=bool)
            for g in groups:
                sub = M[:, list(g)]
                if l == 1:
                    spoiled |= (sub != sub[:, :1]).any(axis=1)
                    continue
                distinct = np.zeros(len(idx), dtype=np.int16)
                for c in range(k):
                    distinct += (sub == c).any(axis=1)
                spoiled |= distinct > l
            all_bad &= spoiled
            if not all_bad.any():
                break
        hits = np.flatnonzero(all_bad)
        if hits.size:
            return tuple(int(x) for x in M[hits[0]])
    return None


def plain_search_bad_coloring(inst: PlainInstance) -> tuple[int, ...] | None:
    """Chronological backtracking in object order, no heuristics."""
    m, k, l = len(inst.domain), inst.k, inst.l
    # a candidate can be judged once all objects of any of its groups are coloured
    last = []
    for groups in inst.candidates:
        last.append(max((max(g) for g in groups), default=-1))
    by_last: dict[int, list[int]] = {}
    for ci, x in enumerate(last):
        by_last.setdefault(x, []).append(ci)
    if -1 in by_last:
        return None  # a candidate with no groups can never be spoiled
    col = [0] * m

    def spoiled(ci: int) -> bool:
        return any(len({col[o] for o in g}) > l for g in inst.candidates[ci])

    def rec(i: int) -> bool:
        if i == m:
            return True
        for c in range(k):
            col[i] = c
            if all(spoiled(ci) for ci in by_last.get(i, ())):
                if rec(i + 1):
                    return True
        return False

    import sys

    sys.setrecursionlimit(max(sys.getrecursionlimit(), m + 1000))
    if m == 0:
        return () if not inst.candidates else None
    return tuple(col) if rec(0) else None


def decide_plain(inst: PlainInstance) -> tuple[int, ...] | None:
    if inst.k ** len(inst.domain) <= EXHAUSTIVE_LIMIT:
        return exhaustive_bad_coloring(inst)
    return plain_search_bad_coloring(inst)


# -- certificate replay --------------------------------------------------


def _verify_coloring_cert(cert: Certificate) -> VerifyResult:
    inst = build_instance(cert.check, cert.instance)
    d = cert.detail
    if cert.verdict == FAILS:
        if d.get("type") != "BadColoring":
            return VerifyResult(False, "a 'fails' verdict must carry a BadColoring")
        if int(d.get("k", -1)) != inst.k:
            return VerifyResult(False, "colouring uses a different number of colours than the instance")
        pairs = d["coloring"]
        objs = [tuple(o) for o, _ in pairs]
        if sorted(objs) != list(inst.domain) or len(set(objs)) != len(objs):
            return VerifyResult(False, "colouring domain differs from the independently enumerated domain")
        cmap = {tuple(o): c for o, c in pairs}
        col = [cmap[o] for o in inst.domain]
        if any(not (isinstance(c, int) and 0 <= c < inst.k) for c in col):
            return VerifyResult(False, "colour outside 0..k-1")
        ok, msg = coloring_is_bad(inst, col)
        return VerifyResult(ok, msg if ok else f"bad colouring rejected: {msg}")
    if cert.verdict == HOLDS:
        found = decide_plain(inst)
        if found is not None:
            return VerifyResult(False, f"independent replay found a bad colouring {list(found)}")
        how = "exhaustive enumeration" if inst.k ** len(inst.domain) <= EXHAUSTIVE_LIMIT else "plain backtracking"
        return VerifyResult(True, f"no bad colouring exists ({how} over {len(inst.domain)} objects)")
    return VerifyResult(True, "exhausted-bound/timeout report: nothing to replay")


def verify_certificate(cert: Certificate | Mapping) -> VerifyResult:
    if not isinstance(cert, Certificate):
        cert = Certificate.from_dict(dict(cert))
    try:
        if cert.check in ("arrow", "rel-emb", "rel-struct", "rel-strong", "classwise"):
            return _verify_coloring_cert(cert)
        if cert.check in ("ramsey-witness", "rel-witness"):
            return _verify_scan(cert)
        if cert.check == "expansion-property":
            return _verify_expansion_property(cert)
        if cert.check == "rigidity":
            return _verify_rigidity(cert)
        if cert.check == "degree":
            return _verify_degree(cert)
    except (KeyError, TypeError, ValueError) as exc:
        return VerifyResult(False, f"malformed certificate: {exc}")
    return VerifyResult(False, f"unknown check {cert.check!r}")


def _verify_nested(certs, label: str, want: str | None = None) -> VerifyResult:
    for i, sub in enumerate(certs):
        c = Certificate.from_dict(sub)
        if want is not None and c.verdict != want:
            return VerifyResult(False, f"{label} #{i} has verdict {c.verdict}, expected {want}")
        r = verify_certificate(c)
        if not r:
            return VerifyResult(False, f"{label} #{i}: {r.message}")
    return VerifyResult(True, f"{len(certs)} {label} certificates replayed")


def _verify_scan(cert: Certificate) -> VerifyResult:
    r = _verify_nested(cert.replay.get("rejected", []), "rejected candidate", FAILS)
    if not r:
        return r
    if cert.verdict == HOLDS:
        w = cert.detail.get("certificate")
        if w is None:
            return VerifyResult(False, "witness certificate missing")
        sub = Certificate.from_dict(w)
        if sub.verdict != HOLDS:
            return VerifyResult(False, "witness sub-certificate does not hold")
        r2 = verify_certificate(sub)
        if not r2:
            return VerifyResult(False, f"witness: {r2.message}")
        return VerifyResult(True, f"witness replayed; {r.message}")
    if cert.verdict == EXHAUSTED:
        return VerifyResult(True, f"bounded exhaustion: {r.message}")
    return VerifyResult(False, "a scan never reports a plain 'fails'")


def _verify_expansion_property(cert: Certificate) -> VerifyResult:
    S = Structure.from_dict
    if cert.verdict == HOLDS:
        d = cert.detail
        A, B = S(d["A"]), S(d["B"])
        base = A.signature.names
        astars = [S(x) for x in d["astars"]]
        bstars = [S(x) for x in d["bstars"]]
        for label, stars, red in (("A*", astars, A), ("B*", bstars, B)):
            if len(set(stars)) != len(stars):
                return VerifyResult(False, f"repeated {label} expansion")
            for X in stars:
                if bf_reduct(X, base) != red:
                    return VerifyResult(False, f"an {label} listed does not reduce to the base structure")
        seen = set()
        for i, j, m in d["pairs"]:
            if not bf_is_embedding(astars[i], bstars[j], tuple(m)):
                return VerifyResult(False, f"pair ({i}, {j}): map {list(m)} is not an embedding A* -> B*")
            seen.add((i, j))
        if len(seen) != len(astars) * len(bstars):
            return VerifyResult(False, "some (A*, B*) pair has no embedding recorded")
        return VerifyResult(True, f"{len(seen)} per-pair embeddings replayed")
    for i, entry in enumerate(cert.replay.get("rejected", [])):
        Astar, Bstar = S(entry["Astar"]), S(entry["Bstar"])
        if bf_reduct(Bstar, S(entry["B"]).signature.names) != S(entry["B"]):
            return VerifyResult(False, f"rejected B #{i}: B* is not an expansion of B")
        if bf_embeddings(Astar, Bstar):
            return VerifyResult(False, f"rejected B #{i}: A* does embed into B*")
    return VerifyResult(True, "every rejected B has an expansion avoiding some A*")


def _verify_rigidity(cert: Certificate) -> VerifyResult:
    S = Structure.from_dict
    if cert.verdict == FAILS:
        M, m = S(cert.detail["member"]), tuple(cert.detail["automorphism"])
        if m == tuple(range(M.size)):
            return VerifyResult(False, "the reported automorphism is the identity")
        if not bf_is_embedding(M, M, m):
            return VerifyResult(False, "the reported map is not an automorphism")
        return VerifyResult(True, "non-trivial automorphism replayed")
    for doc in cert.replay.get("members", []):
        M = S(doc)
        if len(bf_embeddings(M, M)) != 1:
            return VerifyResult(False, f"member {doc} is not rigid")
    return VerifyResult(True, f"{len(cert.replay.get('members', []))} members checked rigid by brute force")


def _verify_degree(cert: Certificate) -> VerifyResult:
    return _verify_nested(cert.replay.get("evidence", []), "lower-bound evidence", FAILS)
