"""Classes of finite structures: membership, bounded enumeration, Fraïssé sanity.

A :class:`ClassSpec` is defined either by universal axioms over a signature
(optionally with forbidden induced substructures), by an explicit finite list
of structures, or by an arbitrary membership predicate. Axiom-defined classes
are hereditary, which lets them be enumerated by one-point extensions.
"""

from __future__ import annotations

import itertools
import json
import re
import threading
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .canonical import canonical_form, canonical_key
from .structures import (
    Embedding,
    Signature,
    Structure,
    StructureError,
    embeds,
    find_embedding,
    induced_substructure,
    iter_embeddings,
    reduct,
    relabel,
)


class ClassError(ValueError):
    pass


BINARY_AXIOMS = {"irreflexive", "symmetric", "antisymmetric", "transitive", "total", "strict-partial-order"}
MULTI_AXIOMS = {"exactly-one-of", "extends", "ultrametric"}
AXIOM_KINDS = BINARY_AXIOMS | MULTI_AXIOMS | {"forbidden-substructures"}


@dataclass(frozen=True)
class Axiom:
    kind: str
    symbols: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.kind}({','.join(self.symbols)})" if self.symbols else self.kind


_AXIOM_RE = re.compile(r"^\s*([a-z-]+)\s*(?:\((.*)\))?\s*$")


def parse_axiom(text: str | Mapping) -> Axiom:
    """Accepts ``"symmetric(E)"``, ``"exactly-one-of(D_1,D_2)"`` or a mapping
    ``{"type": ..., "symbols": [...]}``."""
    if isinstance(text, Mapping):
        kind = text.get("type")
        syms = text.get("symbols", [text["symbol"]] if "symbol" in text else [])
    else:
        m = _AXIOM_RE.match(str(text))
        if not m:
            raise ClassError(f"cannot parse axiom {text!r}")
        kind = m.group(1)
        syms = [s.strip() for s in (m.group(2) or "").split(",") if s.strip()]
    if kind not in AXIOM_KINDS:
        raise ClassError(f"unknown axiom {kind!r}; expected one of {sorted(AXIOM_KINDS)}")
    if kind in BINARY_AXIOMS and len(syms) != 1:
        raise ClassError(f"axiom {kind!r} takes exactly one symbol")
    if kind == "extends" and len(syms) != 2:
        raise ClassError("axiom 'extends' takes two symbols")
    if kind in ("exactly-one-of", "ultrametric") and not syms:
        raise ClassError(f"axiom {kind!r} needs a symbol list")
    return Axiom(kind, tuple(syms))


@dataclass(frozen=True)
class Membership:
    """Result of a membership test; truthy iff the structure is a member."""

    ok: bool
    axiom: str | None = None
    witness: tuple | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _violation(A: Structure, ax: Axiom, forbidden: Sequence[Structure]) -> Membership | None:
    n = A.size
    if ax.kind == "forbidden-substructures":
        for F in forbidden:
            e = find_embedding(F, A)
            if e is not None:
                return Membership(False, str(ax), e.map, f"contains a forbidden substructure on points {e.image}")
        return None
    if ax.kind in BINARY_AXIOMS:
        R = A.rel(ax.symbols[0])
        kinds = ["irreflexive", "transitive"] if ax.kind == "strict-partial-order" else [ax.kind]
        for kind in kinds:
            if kind == "irreflexive":
                for x in range(n):
                    if (x, x) in R:
                        return Membership(False, str(ax), (x, x), f"{ax.symbols[0]}({x},{x}) holds")
            elif kind == "symmetric":
                for x, y in sorted(R):
                    if (y, x) not in R:
                        return Membership(False, str(ax), (x, y), f"({x},{y}) without ({y},{x})")
            elif kind == "antisymmetric":
                for x, y in sorted(R):
                    if x != y and (y, x) in R:
                        return Membership(False, str(ax), (x, y), f"both ({x},{y}) and ({y},{x})")
            elif kind == "transitive":
                for x, y in sorted(R):
                    for z in range(n):
                        if (y, z) in R and (x, z) not in R:
                            return Membership(False, str(ax), (x, y, z), f"({x},{y}),({y},{z}) but not ({x},{z})")
            elif kind == "total":
                for x, y in itertools.combinations(range(n), 2):
                    if (x, y) not in R and (y, x) not in R:
                        return Membership(False, str(ax), (x, y), f"{x},{y} incomparable")
        return None
    rels = [A.rel(s) for s in ax.symbols]
    if ax.kind == "exactly-one-of":
        for x, y in itertools.permutations(range(n), 2):
            if sum((x, y) in R for R in rels) != 1:
                return Membership(False, str(ax), (x, y), f"pair ({x},{y}) is not in exactly one of {list(ax.symbols)}")
        return None
    if ax.kind == "extends":
        R, S = rels
        for t in sorted(R - S):
            return Membership(False, str(ax), t, f"{ax.symbols[0]}{t} holds but {ax.symbols[1]}{t} does not")
        return None
    if ax.kind == "ultrametric":
        # symbols listed by increasing distance; label = index in that list
        def d(x, y):
            for i, R in enumerate(rels):
                if (x, y) in R:
                    return i
            return None

        for x, y, z in itertools.permutations(range(n), 3):
            a, b, c = d(x, y), d(y, z), d(x, z)
            if None in (a, b, c):
                continue
            if c > max(a, b):
                return Membership(False, str(ax), (x, y, z), f"triangle ({x},{y},{z}) breaks the ultrametric law")
        return None
    raise ClassError(f"unhandled axiom {ax}")


class ClassSpec:
    """A class of finite structures over a fixed signature."""

    def __init__(
        self,
        name: str,
        signature: Signature,
        axioms: Iterable[Axiom] = (),
        forbidden: Iterable[Structure] = (),
        explicit: Iterable[Structure] | None = None,
        predicate: Callable[[Structure], bool] | None = None,
        hereditary: bool | None = None,
    ):
        self.name = name
        self.signature = signature
        self.axioms = tuple(axioms)
        self.forbidden = tuple(forbidden)
        self.explicit = None if explicit is None else tuple(canonical_form(s) for s in explicit)
        self.predicate = predicate
        if self.forbidden and not any(a.kind == "forbidden-substructures" for a in self.axioms):
            self.axioms = self.axioms + (Axiom("forbidden-substructures"),)
        for ax in self.axioms:
            for s in ax.symbols:
                if s not in signature:
                    raise ClassError(f"axiom {ax} mentions unknown symbol {s!r}")
                if signature.arity(s) != 2:
                    raise ClassError(f"axiom {ax} needs a binary symbol, {s!r} has arity {signature.arity(s)}")
        for S in self.forbidden + (self.explicit or ()):
            if S.signature != signature:
                raise ClassError("forbidden/explicit structures must use the class signature")
        if hereditary is None:
            hereditary = explicit is None and predicate is None
        self.hereditary = hereditary
        self._cache: dict[int, list[Structure]] = {}
        self._lock = threading.Lock()
        self._order_symbol = self._find_order_symbol()

    def __repr__(self) -> str:
        return f"ClassSpec({self.name!r})"

    def _find_order_symbol(self) -> str | None:
        spo = {a.symbols[0] for a in self.axioms if a.kind == "strict-partial-order"}
        trans = {a.symbols[0] for a in self.axioms if a.kind == "transitive"}
        irr = {a.symbols[0] for a in self.axioms if a.kind == "irreflexive"}
        total = {a.symbols[0] for a in self.axioms if a.kind == "total"}
        for s in self.signature.names:
            if s in total and (s in spo or (s in trans and s in irr)):
                return s
        return None

    # -- membership -------------------------------------------------------

    def check(self, A: Structure) -> Membership:
        if A.signature != self.signature:
            raise ClassError(
                f"signature mismatch: class {self.name} uses {self.signature.names}, got {A.signature.names}"
            )
        if self.explicit is not None:
            key = canonical_form(A)
            if key in self.explicit:
                return Membership(True)
            return Membership(False, "explicit", None, "not isomorphic to any listed structure")
        for ax in self.axioms:
            v = _violation(A, ax, self.forbidden)
            if v is not None:
                return v
        if self.predicate is not None and not self.predicate(A):
            return Membership(False, "predicate", None, "membership predicate rejected the structure")
        return Membership(True)

    def __contains__(self, A: Structure) -> bool:
        return bool(self.check(A))

    def membership(self, A: Structure) -> bool:
        return bool(self.check(A))

    # -- enumeration ------------------------------------------------------

    def members(self, size: int) -> list[Structure]:
        """Pairwise non-isomorphic canonical members of the given size."""
        if size < 1:
            return []
        with self._lock:
            return list(self._members_locked(size))

    def _members_locked(self, size: int) -> list[Structure]:
        if size in self._cache:
            return self._cache[size]
        if self.explicit is not None:
            found = [s for s in self.explicit if s.size == size]
        elif self.hereditary:
            parents = [None] if size == 1 else self._members_locked(size - 1)
            found = []
            for P in parents:
                base = [frozenset() for _ in self.signature.names] if P is None else list(P.relations)
                for rels in extend_one_point(self, base, size - 1, order_max=True):
                    found.append(Structure(self.signature, size, tuple(rels)))
        else:
            found = [S for S in _all_structures(self.signature, size) if self.check(S)]
        uniq: dict[tuple, Structure] = {}
        for S in found:
            key = canonical_key(S)
            if key not in uniq:
                uniq[key] = canonical_form(S)
        result = [uniq[k] for k in sorted(uniq, key=lambda k: k[2])]
        self._cache[size] = result
        return result

    def enumerate_up_to(self, max_size: int) -> list[Structure]:
        out: list[Structure] = []
        seen_empty = None
        for s in range(1, max_size + 1):
            ms = self.members(s)
            if not ms and seen_empty is None:
                seen_empty = s
            elif ms and seen_empty is not None:
                warnings.warn(
                    f"class {self.name} is empty at size {seen_empty} but not at size {s}",
                    stacklevel=2,
                )
                seen_empty = None
            out.extend(ms)
        return out


def _all_structures(sig: Signature, n: int) -> Iterator[Structure]:
    slots = [(i, t) for i, (_, a) in enumerate(sig.symbols) for t in itertools.product(range(n), repeat=a)]
    if len(slots) > 24:
        raise ClassError(
            f"brute-force enumeration over {len(slots)} tuple slots is out of reach; "
            "define the class by axioms instead"
        )
    for mask in range(1 << len(slots)):
        rels = [set() for _ in sig.symbols]
        for j, (i, t) in enumerate(slots):
            if mask >> j & 1:
                rels[i].add(t)
        yield Structure(sig, n, tuple(frozenset(r) for r in rels))


# -- one-point extensions -------------------------------------------------


def _pair_choices(spec: ClassSpec, fixed_cells: Mapping[str, tuple[bool, bool]], order_max: bool) -> list[dict[str, tuple[bool, bool]]]:
    """Admissible truth values of ``(R(u,v), R(v,u))`` for each binary symbol."""
    binary = [s for s, a in spec.signature.symbols if a == 2]
    out = []
    for bits in itertools.product((False, True), repeat=2 * len(binary)):
        cells = {s: (bits[2 * i], bits[2 * i + 1]) for i, s in enumerate(binary)}
        if any(cells[s] != v for s, v in fixed_cells.items()):
            continue
        if order_max and spec._order_symbol and spec._order_symbol not in fixed_cells:
            if cells[spec._order_symbol] != (True, False):
                continue
        if _pair_ok(spec, cells):
            out.append(cells)
    return out


def _pair_ok(spec: ClassSpec, cells: Mapping[str, tuple[bool, bool]]) -> bool:
    for ax in spec.axioms:
        k = ax.kind
        if k == "symmetric":
            a, b = cells[ax.symbols[0]]
            if a != b:
                return False
        elif k in ("antisymmetric", "strict-partial-order"):
            a, b = cells[ax.symbols[0]]
            if a and b:
                return False
        elif k == "total":
            a, b = cells[ax.symbols[0]]
            if not (a or b):
                return False
        elif k == "exactly-one-of":
            if sum(cells[s][0] for s in ax.symbols) != 1 or sum(cells[s][1] for s in ax.symbols) != 1:
                return False
        elif k == "extends":
            r, s = cells[ax.symbols[0]], cells[ax.symbols[1]]
            if (r[0] and not s[0]) or (r[1] and not s[1]):
                return False
    return True


def _loop_choices(spec: ClassSpec, v: int, fixed: Structure | None) -> list[list[tuple[int, tuple]]]:
    """Choices for the tuples whose entries all equal the new point ``v``."""
    irreflexive = {a.symbols[0] for a in spec.axioms if a.kind in ("irreflexive", "strict-partial-order")}
    slots = []
    for i, (s, a) in enumerate(spec.signature.symbols):
        t = (v,) * a
        if fixed is not None and s in fixed.signature:
            slots.append([[(i, t)]] if t in fixed.rel(s) else [[]])
        elif a == 2 and s in irreflexive:
            slots.append([[]])
        else:
            slots.append([[], [(i, t)]])
    return [sum(c, []) for c in itertools.product(*slots)]


def _wide_tuples(spec: ClassSpec, v: int) -> list[tuple[int, tuple]]:
    """Tuples of arity >= 3 involving ``v`` and some older point."""
    out = []
    for i, (s, a) in enumerate(spec.signature.symbols):
        if a >= 3:
            for t in itertools.product(range(v + 1), repeat=a):
                if v in t and len(set(t)) > 1:
                    out.append((i, t))
    return out


def extend_one_point(
    spec: ClassSpec,
    base: Sequence[frozenset],
    v: int,
    fixed: Structure | None = None,
    order_max: bool = False,
) -> Iterator[list[frozenset]]:
    """Yield every relation list on ``{0..v}`` extending ``base`` (on ``{0..v-1}``)
    that belongs to ``spec``.

    ``fixed`` pins the symbols it carries to its own relations (used to build
    expansions over a given reduct). With ``order_max`` the new point is made
    the maximum of the class's linear-order symbol, which is enough to reach
    every isomorphism type of a hereditary class.
    """
    sig = spec.signature
    names = sig.names
    has_wide = any(a >= 3 for _, a in sig.symbols)
    binary = [(i, s) for i, (s, a) in enumerate(sig.symbols) if a == 2]
    pair_opts = []
    for u in range(v):
        fixed_cells = {}
        if fixed is not None:
            for s in fixed.signature.names:
                if sig.arity(s) == 2:
                    R = fixed.rel(s)
                    fixed_cells[s] = ((u, v) in R, (v, u) in R)
        opts = []
        for cells in _pair_choices(spec, fixed_cells, order_max and fixed is None):
            add = []
            for i, s in binary:
                a, b = cells[s]
                if a:
                    add.append((i, (u, v)))
                if b:
                    add.append((i, (v, u)))
            opts.append(add)
        pair_opts.append(opts)
    wide = _wide_tuples(spec, v)
    forced = []
    if fixed is not None:
        forced = [w for w in wide if names[w[0]] in fixed.signature and w[1] in fixed.rel(names[w[0]])]
        wide = [w for w in wide if names[w[0]] not in fixed.signature]

    def materialize(adds: list[tuple[int, tuple]]) -> list[set]:
        rels = [set(r) for r in base]
        for i, t in adds:
            rels[i].add(t)
        return rels

    def member(rels: Sequence[Iterable], points: Sequence[int]) -> bool:
        S = Structure(sig, v + 1, tuple(frozenset(r) for r in rels))
        if len(points) < v + 1:
            S, _ = induced_substructure(S, points)
        return bool(spec.check(S))

    for loop in _loop_choices(spec, v, fixed):
        def rec(u: int, adds: list) -> Iterator[list[frozenset]]:
            if u == v:
                if wide or forced:
                    for bits in itertools.product((False, True), repeat=len(wide)):
                        extra = forced + [w for w, b in zip(wide, bits) if b]
                        rels = materialize(adds + extra)
                        if member(rels, range(v + 1)):
                            yield [frozenset(r) for r in rels]
                else:
                    rels = materialize(adds)
                    if member(rels, range(v + 1)):
                        yield [frozenset(r) for r in rels]
                return
            for opt in pair_opts[u]:
                nxt = adds + opt
                if not has_wide and u < v - 1:
                    if not member(materialize(nxt), list(range(u + 1)) + [v]):
                        continue
                yield from rec(u + 1, nxt)

        if not has_wide and v > 0 and not member(materialize(loop), [v]):
            continue
        yield from rec(0, list(loop))


# -- builtin classes ------------------------------------------------------

ORDER, EDGE, PREC = "<", "E", "prec"
BUILTIN_NAMES = (
    "pure_sets",
    "linear_orders",
    "graphs",
    "ordered_graphs",
    "posets",
    "ordered_posets_free",
    "ordered_posets_linext",
    "ultrametric",
    "ordered_ultrametric",
)
ALIASES = {"sets": "pure_sets", "orders": "linear_orders", "lo": "linear_orders"}


def _lo_axioms(s: str) -> list[Axiom]:
    return [Axiom("strict-partial-order", (s,)), Axiom("total", (s,))]


def distance_symbol(s: Fraction) -> str:
    return f"D_{s}"


def _parse_distances(S: Iterable) -> list[Fraction]:
    vals = sorted({Fraction(str(x)) for x in S})
    if not vals:
        raise ClassError("the distance set S must be nonempty")
    if vals[0] <= 0:
        raise ClassError("distances must be positive")
    return vals


_BUILTIN_CACHE: dict[tuple, ClassSpec] = {}
_BUILTIN_LOCK = threading.Lock()


def builtin_class(name: str, params: Mapping | None = None) -> ClassSpec:
    """Look up a builtin class by name, e.g. ``builtin_class("ultrametric", {"S": [1, 2]})``
    or ``builtin_class("ordered_ultrametric{S=[1,2]}")``."""
    name, parsed = _split_name(name)
    params = {**parsed, **(params or {})}
    name = ALIASES.get(name, name)
    if name not in BUILTIN_NAMES:
        raise ClassError(f"unknown class {name!r}; builtins are {', '.join(BUILTIN_NAMES)}")
    key_S = None
    if name.endswith("ultrametric"):
        if "S" not in params:
            raise ClassError(f"{name} needs a distance set S")
        key_S = tuple(_parse_distances(params["S"]))
    key = (name, key_S)
    with _BUILTIN_LOCK:
        if key not in _BUILTIN_CACHE:
            _BUILTIN_CACHE[key] = _make_builtin(name, key_S)
        return _BUILTIN_CACHE[key]


def _split_name(text: str) -> tuple[str, dict]:
    m = re.match(r"^\s*([A-Za-z_]+)\s*(?:[{(](.*)[})])?\s*$", text)
    if not m:
        raise ClassError(f"cannot parse class name {text!r}")
    params = {}
    if m.group(2):
        for part in re.findall(r"(\w+)\s*=\s*(\[[^\]]*\]|[^,]+)", m.group(2)):
            k, v = part
            v = v.strip()
            if v.startswith("["):
                params[k] = [x.strip() for x in v[1:-1].split(",") if x.strip()]
            else:
                params[k] = v
    return m.group(1), params


def _make_builtin(name: str, S: tuple[Fraction, ...] | None) -> ClassSpec:
    if name == "pure_sets":
        return ClassSpec(name, Signature())
    if name == "linear_orders":
        return ClassSpec(name, Signature.of((ORDER, 2)), _lo_axioms(ORDER))
    graph_ax = [Axiom("irreflexive", (EDGE,)), Axiom("symmetric", (EDGE,))]
    if name == "graphs":
        return ClassSpec(name, Signature.of((EDGE, 2)), graph_ax)
    if name == "ordered_graphs":
        return ClassSpec(name, Signature.of((EDGE, 2), (ORDER, 2)), graph_ax + _lo_axioms(ORDER))
    poset_ax = [Axiom("strict-partial-order", (PREC,))]
    if name == "posets":
        return ClassSpec(name, Signature.of((PREC, 2)), poset_ax)
    if name == "ordered_posets_free":
        return ClassSpec(name, Signature.of((PREC, 2), (ORDER, 2)), poset_ax + _lo_axioms(ORDER))
    if name == "ordered_posets_linext":
        return ClassSpec(
            name,
            Signature.of((PREC, 2), (ORDER, 2)),
            poset_ax + _lo_axioms(ORDER) + [Axiom("extends", (PREC, ORDER))],
        )
    syms = [distance_symbol(s) for s in S]
    ax = []
    for s in syms:
        ax += [Axiom("irreflexive", (s,)), Axiom("symmetric", (s,))]
    ax += [Axiom("exactly-one-of", tuple(syms)), Axiom("ultrametric", tuple(syms))]
    label = "{S=[" + ",".join(str(s) for s in S) + "]}"
    if name == "ultrametric":
        return ClassSpec(name + label, Signature.of(*[(s, 2) for s in syms]), ax)
    return ClassSpec(
        name + label,
        Signature.of(*[(s, 2) for s in syms], (ORDER, 2)),
        ax + _lo_axioms(ORDER),
    )


def check_membership(spec: ClassSpec, A: Structure) -> Membership:
    return spec.check(A)


# -- user classes ---------------------------------------------------------


def load_user_class(document: str | Mapping) -> ClassSpec:
    """Build a class from ``{name, signature, axioms, forbidden, explicit}``."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ClassError(f"class document is not valid JSON (line {exc.lineno}): {exc.msg}") from exc
    if not isinstance(document, Mapping):
        raise ClassError("class document must be a mapping")
    name = str(document.get("name", "user_class"))
    explicit_docs = document.get("explicit")
    try:
        if "signature" in document:
            sig = Signature(tuple((str(s["name"]), int(s["arity"])) for s in document["signature"]))
        elif explicit_docs:
            sig = Structure.from_dict(explicit_docs[0]).signature
        else:
            raise ClassError("class document needs a 'signature' field")
        axioms = [parse_axiom(a) for a in document.get("axioms", [])]
        forbidden = [Structure.from_dict(d) for d in document.get("forbidden", [])]
        explicit = None if explicit_docs is None else [Structure.from_dict(d) for d in explicit_docs]
    except (KeyError, TypeError, StructureError) as exc:
        raise ClassError(f"malformed class document: {exc}") from exc
    if explicit is not None and (axioms or forbidden):
        raise ClassError("a class document gives either 'explicit' or 'axioms'/'forbidden', not both")
    if any(a.kind == "forbidden-substructures" for a in axioms) and not forbidden:
        raise ClassError("axiom forbidden-substructures needs a 'forbidden' list")
    return ClassSpec(name, sig, axioms, forbidden, explicit)


def resolve_class(ref: str) -> ClassSpec:
    """Builtin name (with optional ``{S=[..]}``) or path to a class document."""
    try:
        return builtin_class(ref)
    except ClassError as builtin_err:
        import os

        if os.path.exists(ref):
            with open(ref, encoding="utf-8") as fh:
                return load_user_class(fh.read())
        raise builtin_err


# -- expansion pairs ------------------------------------------------------


@dataclass(frozen=True)
class ExpansionPair:
    base: ClassSpec
    expansion: ClassSpec

    def __post_init__(self):
        if not self.base.signature.issubset(self.expansion.signature):
            raise ClassError(
                f"{self.expansion.name} does not expand {self.base.name}: "
                f"{self.base.signature.names} not within {self.expansion.signature.names}"
            )

    @property
    def L(self) -> Signature:
        return self.base.signature

    @property
    def Lstar(self) -> Signature:
        return self.expansion.signature

    @property
    def name(self) -> str:
        return f"{self.base.name}:{self.expansion.name}"

    def check(self, n: int) -> list[str]:
        """Bounded check of the pair invariants; returns problems found."""
        problems = []
        for M in self.expansion.enumerate_up_to(n):
            r = reduct(M, self.L)
            if not self.base.check(r):
                problems.append(f"reduct of {M} is not in {self.base.name}")
        from .expansions import based_expansions

        for A in self.base.enumerate_up_to(n):
            if not based_expansions(self, A):
                problems.append(f"{A} has no expansion in {self.expansion.name}")
        return problems


def pair_from_string(text: str) -> ExpansionPair:
    """Parse ``"base:expansion"``, e.g. ``"sets:linear_orders"``."""
    depth = 0
    for i, ch in enumerate(text):
        if ch in "{([":
            depth += 1
        elif ch in "})]":
            depth -= 1
        elif ch == ":" and depth == 0:
            return ExpansionPair(resolve_class(text[:i]), resolve_class(text[i + 1 :]))
    raise ClassError(f"expansion pair {text!r} must look like 'base:expansion'")


# -- bounded Fraïssé checks ----------------------------------------------


@dataclass
class FraisseReport:
    property: str
    holds: bool
    bound: int
    message: str
    instance: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


def check_hp(spec: ClassSpec, n: int) -> FraisseReport:
    if n < 1:
        raise ClassError("bound must be >= 1")
    for M in spec.enumerate_up_to(n):
        for r in range(1, M.size):
            for pts in itertools.combinations(range(M.size), r):
                sub, _ = induced_substructure(M, pts)
                if not spec.check(sub):
                    return FraisseReport(
                        "hereditary property", False, n,
                        f"substructure on {pts} of a size-{M.size} member is not a member",
                        {"member": M.to_dict(), "points": list(pts)},
                    )
    return FraisseReport("hereditary property", True, n, f"holds up to size {n} (bounded check, not a proof)")


def check_jep(spec: ClassSpec, n: int) -> FraisseReport:
    if n < 1:
        raise ClassError("bound must be >= 1")
    ms = spec.enumerate_up_to(n)
    for i, A in enumerate(ms):
        for B in ms[i:]:
            cap = A.size + B.size
            ok = any(embeds(A, D) and embeds(B, D) for D in spec.enumerate_up_to(cap))
            if not ok:
                return FraisseReport(
                    "joint embedding property", False, n,
                    f"no member of size <= {cap} contains both structures",
                    {"A": A.to_dict(), "B": B.to_dict(), "cap": cap},
                )
    return FraisseReport(
        "joint embedding property", True, n,
        f"holds up to size {n} with joint members of size <= |A|+|B| (bounded check, not a proof)",
    )


def _reps_mod_aut(f_maps: list[tuple[int, ...]], target: Structure) -> list[tuple[int, ...]]:
    autos = list(iter_embeddings(target, target))
    reps = set()
    for f in f_maps:
        reps.add(min(tuple(a[x] for x in f) for a in autos))
    return sorted(reps)


def check_ap(spec: ClassSpec, n: int) -> FraisseReport:
    if n < 1:
        raise ClassError("bound must be >= 1")
    ms = spec.enumerate_up_to(n)
    for A in ms:
        for B in ms:
            fs = _reps_mod_aut(list(iter_embeddings(A, B)), B)
            if not fs:
                continue
            for C in ms:
                gs = _reps_mod_aut(list(iter_embeddings(A, C)), C)
                for f in fs:
                    for g in gs:
                        cap = B.size + C.size - A.size
                        if not _amalgamate(spec, B, C, f, g, cap):
                            return FraisseReport(
                                "amalgamation property", False, n,
                                f"no amalgam of size <= {cap} (the search cap)",
                                {"A": A.to_dict(), "B": B.to_dict(), "C": C.to_dict(), "f": list(f), "g": list(g), "cap": cap},
                            )
    return FraisseReport(
        "amalgamation property", True, n,
        f"holds up to size {n} with amalgams of size <= |B|+|C|-|A| (bounded check, not a proof)",
    )


def _amalgamate(spec: ClassSpec, B, C, f, g, cap) -> Embedding | None:
    for D in spec.enumerate_up_to(cap):
        if D.size < max(B.size, C.size):
            continue
        for h1 in iter_embeddings(B, D):
            want = {g[a]: h1[f[a]] for a in range(len(f))}
            for h2 in iter_embeddings(C, D):
                if all(h2[c] == d for c, d in want.items()):
                    return Embedding(B, D, h1)
    return None
