"""Bounded searches over classes: witnesses, expansion property, degrees, rigidity.

All existential searches take an explicit ``n_max``. Running out of
candidates is reported as ``exhausted-bound``, never as a failure of the
class-level property.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .certificates import EXHAUSTED, FAILS, HOLDS, Certificate
from .checks import (
    arrow_check,
    rel_arrow_emb_check,
    rel_arrow_emb_strong_check,
    rel_arrow_struct_check,
)
from .classes import ClassError, ClassSpec, ExpansionPair
from .expansions import based_expansions, enumerate_expansions, iter_based_expansions
from .structures import Structure, embeds, find_embedding, nontrivial_automorphism


class _Clock:
    def __init__(self, timeout_ms: int | None):
        self.deadline = None if timeout_ms is None else time.monotonic() + timeout_ms / 1000.0

    def remaining_ms(self) -> int | None:
        if self.deadline is None:
            return None
        return max(1, int((self.deadline - time.monotonic()) * 1000))

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


def _by_size(spec: ClassSpec, lo: int, hi: int):
    """Members of sizes lo..hi, generated one size at a time so a scan that
    stops early never enumerates the larger sizes."""
    for s in range(max(lo, 1), hi + 1):
        yield from spec.members(s)


def _require_member(spec: ClassSpec, S: Structure, label: str) -> None:
    if S.signature != spec.signature:
        raise ClassError(f"{label} does not use the signature of {spec.name}")
    m = spec.check(S)
    if not m:
        raise ClassError(f"{label} is not a member of {spec.name}: {m.axiom} {m.message}")


def _scan(check: str, prop: str, doc: dict, candidates, run, n_max: int, clock: _Clock) -> Certificate:
    rejected = []
    examined = 0
    for C in candidates:
        if clock.expired():
            return _exhausted(check, prop, doc, rejected, examined, n_max, "timeout")
        cert = run(C, clock.remaining_ms())
        examined += 1
        if cert.holds:
            report = f"{prop}: witness of size {C.size} found after {examined} candidate(s)."
            return Certificate(
                check, prop, HOLDS, doc,
                {"type": "Witness", "C": C.to_dict(), "certificate": cert.to_dict()},
                {"rejected": rejected}, report,
            )
        if cert.exhausted:
            return _exhausted(check, prop, doc, rejected, examined, n_max, "timeout")
        rejected.append(cert.to_dict())
    return _exhausted(check, prop, doc, rejected, examined, n_max, "bound")


def _exhausted(check, prop, doc, rejected, examined, n_max, reason) -> Certificate:
    if reason == "bound":
        report = (
            f"{prop}: no witness among the {examined} candidate(s) of size <= {n_max}; every one carries "
            "a bad colouring. This is bounded evidence (exhausted-bound), not a proof that no witness exists."
        )
    else:
        report = f"{prop}: time budget ran out after {examined} candidate(s); exhausted-bound (timeout)."
    return Certificate(
        check, prop, EXHAUSTED, doc,
        {"type": "BoundReport", "reason": reason, "n_max": n_max, "examined": examined},
        {"rejected": rejected}, report,
    )


def find_ramsey_witness(
    K: ClassSpec, B: Structure, A: Structure, k: int, l: int = 1, n_max: int = 6,
    domain_kind: str = "copies", *, threads: int = 1, timeout_ms: int | None = None,
) -> Certificate:
    """Scan ``K`` by size for ``C`` with ``C -> (B)^A_{k,l}``."""
    _require_member(K, A, "A")
    _require_member(K, B, "B")
    doc = {"class": K.name, "B": B.to_dict(), "A": A.to_dict(), "k": k, "l": l, "n_max": n_max, "domain_kind": domain_kind}
    prop = f"Ramsey witness search in {K.name}: exists C with C -> (B)^A_{{k,l}}"
    return _scan(
        "ramsey-witness", prop, doc, _by_size(K, B.size, n_max),
        lambda C, ms: arrow_check(C, B, A, k, l, domain_kind, threads=threads, timeout_ms=ms),
        n_max, _Clock(timeout_ms),
    )


REL_MODES = ("emb", "struct", "strong")


def find_rel_witness(
    pair: ExpansionPair, Bstar: Structure, A: Structure, k: int, mode: str = "emb", n_max: int = 6,
    *, threads: int = 1, timeout_ms: int | None = None,
) -> Certificate:
    """Scan the base class (the expansion class in ``strong`` mode) for a
    ``C`` satisfying the per-instance relative Ramsey statement."""
    if mode not in REL_MODES:
        raise ValueError(f"mode must be one of {REL_MODES}")
    _require_member(pair.base, A, "A")
    _require_member(pair.expansion, Bstar, "B*")
    doc = {"pair": pair.name, "Bstar": Bstar.to_dict(), "A": A.to_dict(), "k": k, "mode": mode, "n_max": n_max}
    names = {
        "emb": "relative Ramsey property for embeddings",
        "struct": "relative Ramsey property for structures",
        "strong": "relative Ramsey property for embeddings (strengthened form, witness C* in the expansion class)",
    }
    prop = f"{names[mode]}: witness search for ({pair.name})"
    size = Bstar.size
    if mode == "strong":
        cands = _by_size(pair.expansion, size, n_max)
        run = lambda C, ms: rel_arrow_emb_strong_check(C, Bstar, A, k, threads=threads, timeout_ms=ms)  # noqa: E731
    else:
        cands = _by_size(pair.base, size, n_max)
        fn = rel_arrow_emb_check if mode == "emb" else rel_arrow_struct_check
        run = lambda C, ms: fn(C, Bstar, A, k, threads=threads, timeout_ms=ms)  # noqa: E731
    return _scan("rel-witness", prop, doc, cands, run, n_max, _Clock(timeout_ms))


def expansion_property_check(pair: ExpansionPair, A: Structure, n_max: int = 6, *, timeout_ms: int | None = None) -> Certificate:
    """Find the smallest ``B`` (size <= n_max) into every based expansion of
    which every based expansion of ``A`` embeds."""
    _require_member(pair.base, A, "A")
    clock = _Clock(timeout_ms)
    astars = based_expansions(pair, A)
    doc = {"pair": pair.name, "A": A.to_dict(), "n_max": n_max}
    prop = f"expansion property of {pair.expansion.name} relative to {pair.base.name}: witness search for A"
    rejected = []
    examined = 0
    for B in _by_size(pair.base, A.size, n_max):
        if not embeds(A, B):
            continue
        if clock.expired():
            return _ep_exhausted(prop, doc, rejected, examined, n_max, "timeout")
        examined += 1
        bad = None
        pairs = []
        bstars = []
        for Bs in iter_based_expansions(pair, B):
            bstars.append(Bs)
            for i, As in enumerate(astars):
                e = find_embedding(As, Bs)
                if e is None:
                    bad = (As, Bs)
                    break
                pairs.append([i, len(bstars) - 1, list(e.map)])
            if bad:
                break
        if bad:
            rejected.append({"B": B.to_dict(), "Astar": bad[0].to_dict(), "Bstar": bad[1].to_dict()})
            continue
        detail = {
            "type": "Witness",
            "A": A.to_dict(),
            "B": B.to_dict(),
            "astars": [X.to_dict() for X in astars],
            "bstars": [X.to_dict() for X in bstars],
            "pairs": pairs,
        }
        report = (
            f"{prop}: B of size {B.size} works; each of the {len(astars)} expansions of A embeds into each of "
            f"the {len(bstars)} expansions of B."
        )
        return Certificate("expansion-property", prop, HOLDS, doc, detail, {"rejected": rejected}, report)
    return _ep_exhausted(prop, doc, rejected, examined, n_max, "bound")


def _ep_exhausted(prop, doc, rejected, examined, n_max, reason) -> Certificate:
    report = (
        f"{prop}: no B among {examined} candidate(s) of size <= {n_max}; each has an expansion missing some "
        "expansion of A. Bounded evidence only (exhausted-bound)."
    )
    return Certificate(
        "expansion-property", prop, EXHAUSTED, doc,
        {"type": "BoundReport", "reason": reason, "n_max": n_max, "examined": examined},
        {"rejected": rejected}, report,
    )


@dataclass
class DegreeBounds:
    upper: int
    lower: int
    evidence: list[Certificate] = field(default_factory=list)
    witness_B: Structure | None = None
    report: str = ""

    def certificate(self, doc: dict) -> Certificate:
        verdict = HOLDS if self.lower <= self.upper else FAILS
        detail = {"type": "DegreeBounds", "upper": self.upper, "lower": self.lower,
                  "B": None if self.witness_B is None else self.witness_B.to_dict()}
        return Certificate("degree", "Ramsey degree bounds", verdict, doc, detail,
                           {"evidence": [c.to_dict() for c in self.evidence]}, self.report)


def ramsey_degree_bounds(
    pair: ExpansionPair, A: Structure, k: int, n_max: int, *, threads: int = 1, timeout_ms: int | None = None,
) -> DegreeBounds:
    """Upper bound: number of non-isomorphic expansions of ``A``. Lower bound:
    largest ``l+1`` such that some ``B`` defeats every ``C`` of size <= n_max."""
    _require_member(pair.base, A, "A")
    clock = _Clock(timeout_ms)
    upper = len(enumerate_expansions(pair, A).up_to_iso)
    lower, evidence, witness = 1, [], None
    bases = [B for B in _by_size(pair.base, A.size, n_max) if embeds(A, B)]
    l = 1
    timed_out = False
    while l < k and not timed_out:
        found = None
        for B in bases:
            certs = []
            for C in _by_size(pair.base, B.size, n_max):
                if clock.expired():
                    timed_out = True
                    break
                cert = arrow_check(C, B, A, k, l, "copies", threads=threads, timeout_ms=clock.remaining_ms())
                if not cert.fails:
                    certs = None
                    break
                certs.append(cert)
            if timed_out:
                break
            if certs:
                found = (B, certs)
                break
        if not found:
            break
        lower, witness, evidence = l + 1, found[0], found[1]
        l += 1
    report = (
        f"Ramsey degree of A in {pair.base.name} for k={k}: upper bound {upper} = number of non-isomorphic "
        f"expansions in {pair.expansion.name} (valid when the expansion class consists of rigid structures "
        f"and the pair has the relative Ramsey property for structures); lower bound {lower} from bounded search "
        f"over C of size <= {n_max}"
        + (" (time budget ran out)" if timed_out else "")
        + "; lower-bound evidence is bounded, not a proof."
    )
    return DegreeBounds(upper, lower, evidence, witness, report)


def rigidity_scan(spec: ClassSpec, n: int) -> Certificate:
    if n < 1:
        raise ClassError("bound must be >= 1")
    prop = f"rigidity of all members of {spec.name} up to size {n}"
    members = spec.enumerate_up_to(n)
    doc = {"class": spec.name, "n": n}
    for M in members:
        g = nontrivial_automorphism(M)
        if g is not None:
            return Certificate(
                "rigidity", prop, FAILS, doc,
                {"type": "Witness", "member": M.to_dict(), "automorphism": list(g.map)}, {},
                f"{prop}: FAILS, a size-{M.size} member has a non-trivial automorphism.",
            )
    return Certificate(
        "rigidity", prop, HOLDS, doc, {"type": "BoundReport", "checked": len(members)},
        {"members": [M.to_dict() for M in members]},
        f"{prop}: all {len(members)} members are rigid.",
    )
