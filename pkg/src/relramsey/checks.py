"""Single-instance deciders for arrow relations and relative Ramsey statements.

Each decider builds a :class:`ColoringInstance` (the colourable domain plus
the candidate families that a colouring must spoil) and hands it to the
search engine. The answer comes back as a :class:`Certificate`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .certificates import EXHAUSTED, FAILS, HOLDS, Certificate, Coloring
from .expansions import class_index_emb, equivalence_classes_copy, pullback_extra
from .search import ColoringProblem, find_bad_coloring
from .structures import Signature, Structure, StructureError, iter_embeddings, reduct

EXHAUSTIVE_LIMIT = 5_000_000

PROPERTY_NAMES = {
    "arrow": "arrow relation C -> (B)^A_{k,l} (standard partition arrow)",
    "rel-emb": "relative Ramsey property for embeddings (single-instance check for a given C)",
    "rel-struct": "relative Ramsey property for structures (single-instance check for a given C)",
    "rel-strong": (
        "relative Ramsey property for embeddings, strengthened form where b also keeps "
        "composites equivalent in C* (single-instance check for a given C*)"
    ),
    "classwise": "classwise monochromatic consequence: b o Emb(B*,A*) monochromatic (single-instance check)",
}


@dataclass(frozen=True)
class ColoringInstance:
    check: str
    domain_kind: str
    domain: tuple[tuple[int, ...], ...]
    problem: ColoringProblem
    doc: dict
    candidate_objects: tuple[tuple[int, ...], ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def k(self) -> int:
        return self.problem.k


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise StructureError(msg)


def _check_k(k: int, l: int = 1) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if l < 1:
        raise ValueError("l must be >= 1")


def _compose(b, a) -> tuple[int, ...]:
    return tuple(b[x] for x in a)


def _a_domain(A: Structure, C: Structure, kind: str) -> list[tuple[int, ...]]:
    maps = list(iter_embeddings(A, C))
    if kind == "embeddings":
        return maps
    if kind == "copies":
        return sorted({tuple(sorted(m)) for m in maps})
    raise ValueError(f"domain_kind must be 'copies' or 'embeddings', got {kind!r}")


def arrow_instance(C: Structure, B: Structure, A: Structure, k: int, l: int = 1, domain_kind: str = "copies") -> ColoringInstance:
    _check_k(k, l)
    _require(A.signature == B.signature == C.signature, "A, B and C must share a signature")
    domain = _a_domain(A, C, domain_kind)
    images = [set(o) for o in domain]
    b_copies = sorted({tuple(sorted(m)) for m in iter_embeddings(B, C)})
    cands = []
    for P in b_copies:
        Ps = set(P)
        cands.append([[i for i, img in enumerate(images) if img <= Ps]])
    doc = {"C": C.to_dict(), "B": B.to_dict(), "A": A.to_dict(), "k": k, "l": l, "domain_kind": domain_kind}
    notes = []
    if l >= k and b_copies:
        notes.append("l >= k: at most k colours exist, so the relation holds trivially")
    return ColoringInstance(
        "arrow", domain_kind, tuple(domain), ColoringProblem.build(len(domain), k, l, cands), doc,
        tuple(b_copies), tuple(notes),
    )


def _relative_setup(C: Structure, Bstar: Structure, A: Structure) -> tuple[Signature, Structure]:
    L = A.signature
    _require(C.signature == L, "C and A must share the base signature")
    _require(L.issubset(Bstar.signature), "B* must expand the base signature")
    return L, reduct(Bstar, L)


def rel_emb_instance(C: Structure, Bstar: Structure, A: Structure, k: int) -> ColoringInstance:
    _check_k(k)
    L, B = _relative_setup(C, Bstar, A)
    domain = list(iter_embeddings(A, C))
    index = {m: i for i, m in enumerate(domain)}
    classes = [cls for cls in class_index_emb(Bstar, L, A) if len(cls) > 1]
    bs = list(iter_embeddings(B, C))
    cands = [[[index[_compose(b, a)] for a in cls] for cls in classes] for b in bs]
    doc = {"C": C.to_dict(), "Bstar": Bstar.to_dict(), "A": A.to_dict(), "k": k}
    return ColoringInstance("rel-emb", "embeddings", tuple(domain), ColoringProblem.build(len(domain), k, 1, cands), doc, tuple(bs))


def rel_struct_instance(C: Structure, Bstar: Structure, A: Structure, k: int) -> ColoringInstance:
    _check_k(k)
    L, B = _relative_setup(C, Bstar, A)
    domain = _a_domain(A, C, "copies")
    index = {p: i for i, p in enumerate(domain)}
    classes = [cls for cls in equivalence_classes_copy(Bstar, L, A) if len(cls) > 1]
    bs = list(iter_embeddings(B, C))
    cands = [
        [[index[tuple(sorted(b[x] for x in pts))] for pts in cls] for cls in classes] for b in bs
    ]
    doc = {"C": C.to_dict(), "Bstar": Bstar.to_dict(), "A": A.to_dict(), "k": k}
    return ColoringInstance("rel-struct", "copies", tuple(domain), ColoringProblem.build(len(domain), k, 1, cands), doc, tuple(bs))


def rel_strong_instance(Cstar: Structure, Bstar: Structure, A: Structure, k: int) -> ColoringInstance:
    _check_k(k)
    L = A.signature
    _require(L.issubset(Cstar.signature), "C* must expand the base signature")
    C = reduct(Cstar, L)
    _, B = _relative_setup(C, Bstar, A)
    _require(Cstar.signature.minus(L) == Bstar.signature.minus(L), "B* and C* must use the same expansion symbols")
    domain = list(iter_embeddings(A, C))
    index = {m: i for i, m in enumerate(domain)}
    ckey = {m: pullback_extra(Cstar, L, m) for m in domain}
    classes = class_index_emb(Bstar, L, A)
    cands, kept, dropped = [], [], 0
    for b in iter_embeddings(B, C):
        comps = [[_compose(b, a) for a in cls] for cls in classes]
        if all(len({ckey[e] for e in grp}) == 1 for grp in comps):
            cands.append([[index[e] for e in grp] for grp in comps if len(grp) > 1])
            kept.append(b)
        else:
            dropped += 1
    doc = {"Cstar": Cstar.to_dict(), "Bstar": Bstar.to_dict(), "A": A.to_dict(), "k": k}
    notes = (f"{dropped} embeddings of B split a class under C* and can never witness",) if dropped else ()
    return ColoringInstance("rel-strong", "embeddings", tuple(domain), ColoringProblem.build(len(domain), k, 1, cands), doc, tuple(kept), notes)


def classwise_instance(C: Structure, Bstar: Structure, Astar: Structure, k: int) -> ColoringInstance:
    _check_k(k)
    L = C.signature
    _require(L.issubset(Astar.signature) and Astar.signature == Bstar.signature, "A* and B* must share an expansion of C's signature")
    A = reduct(Astar, L)
    B = reduct(Bstar, L)
    domain = list(iter_embeddings(A, C))
    index = {m: i for i, m in enumerate(domain)}
    stars = list(iter_embeddings(Astar, Bstar))
    bs = list(iter_embeddings(B, C))
    cands = [[[index[_compose(b, a)] for a in stars]] for b in bs]
    doc = {"C": C.to_dict(), "Bstar": Bstar.to_dict(), "Astar": Astar.to_dict(), "k": k}
    notes = ("A* is not realized in B*: the set b o Emb(B*,A*) is empty, hence monochromatic",) if not stars else ()
    return ColoringInstance("classwise", "embeddings", tuple(domain), ColoringProblem.build(len(domain), k, 1, cands), doc, tuple(bs), notes)


def decide(inst: ColoringInstance, threads: int = 1, timeout_ms: int | None = None) -> Certificate:
    p = inst.problem
    res = find_bad_coloring(p, threads=threads, timeout_ms=timeout_ms)
    m = p.n_objects
    base = {
        "domain_size": m,
        "candidates": len(inst.candidate_objects),
    }
    prop = PROPERTY_NAMES[inst.check]
    if res.status == "bad":
        col = Coloring(inst.domain_kind, inst.domain, p.k, res.coloring)
        report = f"{prop}: FAILS. Every one of the {len(inst.candidate_objects)} candidates is spoiled by the attached colouring."
        return Certificate(inst.check, prop, FAILS, inst.doc, col.as_dict(), {"verify_by": "straight-line"}, _with_notes(report, inst))
    if res.status == "none":
        method = "exhaustive" if p.k ** m <= EXHAUSTIVE_LIMIT else "independent-search"
        report = f"{prop}: HOLDS. No bad colouring exists (search over {m} objects, k={p.k})."
        return Certificate(inst.check, prop, HOLDS, inst.doc, {"type": "BoundReport", "reason": "search-complete", **base}, {"verify_by": method}, _with_notes(report, inst))
    report = f"{prop}: UNDECIDED within the time budget (timeout); reported as exhausted-bound, not as a failure."
    return Certificate(inst.check, prop, EXHAUSTED, inst.doc, {"type": "BoundReport", "reason": "timeout", **base}, {"verify_by": "none"}, report)


def _with_notes(report: str, inst: ColoringInstance) -> str:
    return " ".join([report, *inst.notes])


def arrow_check(C, B, A, k: int, l: int = 1, domain_kind: str = "copies", *, threads: int = 1, timeout_ms: int | None = None) -> Certificate:
    """Decide ``C -> (B)^A_{k,l}`` over copies or embeddings of ``A``."""
    return decide(arrow_instance(C, B, A, k, l, domain_kind), threads, timeout_ms)


def rel_arrow_emb_check(C, Bstar, A, k: int, *, threads: int = 1, timeout_ms: int | None = None) -> Certificate:
    return decide(rel_emb_instance(C, Bstar, A, k), threads, timeout_ms)


def rel_arrow_struct_check(C, Bstar, A, k: int, *, threads: int = 1, timeout_ms: int | None = None) -> Certificate:
    return decide(rel_struct_instance(C, Bstar, A, k), threads, timeout_ms)


def rel_arrow_emb_strong_check(Cstar, Bstar, A, k: int, *, threads: int = 1, timeout_ms: int | None = None) -> Certificate:
    return decide(rel_strong_instance(Cstar, Bstar, A, k), threads, timeout_ms)


def classwise_mono_check(C, Bstar, Astar, k: int, *, threads: int = 1, timeout_ms: int | None = None) -> Certificate:
    return decide(classwise_instance(C, Bstar, Astar, k), threads, timeout_ms)


def instance_for(check: str, doc: dict) -> ColoringInstance:
    """Rebuild an instance from a certificate's ``instance`` section."""
    S = Structure.from_dict
    if check == "arrow":
        return arrow_instance(S(doc["C"]), S(doc["B"]), S(doc["A"]), doc["k"], doc.get("l", 1), doc.get("domain_kind", "copies"))
    if check == "rel-emb":
        return rel_emb_instance(S(doc["C"]), S(doc["Bstar"]), S(doc["A"]), doc["k"])
    if check == "rel-struct":
        return rel_struct_instance(S(doc["C"]), S(doc["Bstar"]), S(doc["A"]), doc["k"])
    if check == "rel-strong":
        return rel_strong_instance(S(doc["Cstar"]), S(doc["Bstar"]), S(doc["A"]), doc["k"])
    if check == "classwise":
        return classwise_instance(S(doc["C"]), S(doc["Bstar"]), S(doc["Astar"]), doc["k"])
    raise ValueError(f"unknown check {check!r}")
