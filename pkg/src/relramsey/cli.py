"""Command-line front end.

Exit codes: 0 holds / witness found, 1 fails, 2 exhausted-bound or timeout,
3 input error. ``verify`` exits 0 when the certificate replays and 1 otherwise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .certificates import Certificate
from .checks import (
    arrow_instance,
    classwise_instance,
    decide,
    rel_emb_instance,
    rel_strong_instance,
    rel_struct_instance,
)
from .classes import ClassError, check_ap, check_hp, check_jep, pair_from_string, resolve_class
from .cnf import write_dimacs
from .expansions import enumerate_expansions, precompactness_count
from .scans import (
    expansion_property_check,
    find_ramsey_witness,
    find_rel_witness,
    ramsey_degree_bounds,
    rigidity_scan,
)
from .structures import Structure, StructureError, linear_order, reduct
from .verify import verify_certificate

EXIT_HOLDS, EXIT_FAILS, EXIT_EXHAUSTED, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _structure(ref: str | None, field: str) -> Structure:
    """An integer means the linear order of that size; anything else is a file."""
    if ref is None:
        raise InputError(f"--{field} is required")
    if ref.strip().isdigit():
        n = int(ref)
        if n < 1:
            raise InputError(f"--{field}: size must be >= 1")
        return linear_order(n)
    try:
        with open(ref, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"--{field}: cannot read {ref}: {exc.strerror}") from exc
    try:
        return Structure.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"--{field}: {ref} line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    except StructureError as exc:
        raise InputError(f"--{field}: {ref}: {exc}") from exc


def _threads(args) -> int:
    env = os.environ.get("RAMSEY_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError as exc:
            raise InputError(f"RAMSEY_THREADS must be an integer, got {env!r}") from exc
    else:
        n = args.threads if args.threads is not None else (os.cpu_count() or 1)
    if n < 1:
        raise InputError("--threads must be >= 1")
    return n


def _require_k(args) -> None:
    if args.k is None or args.k < 1:
        raise InputError("-k must be given and be >= 1")
    if getattr(args, "l", 1) < 1:
        raise InputError("-l must be >= 1")


def _members(spec, field_structs) -> None:
    for field, S in field_structs:
        if S.signature != spec.signature:
            raise InputError(f"--{field}: signature {list(S.signature.names)} does not match class {spec.name}")
        m = spec.check(S)
        if not m:
            raise InputError(f"--{field}: not a member of {spec.name} ({m.axiom}: {m.message})")


def _emit(cert: Certificate, args) -> int:
    path = args.out or f"{args.command}.cert.json"
    cert.save(path)
    print(cert.report)
    print(f"certificate written to {path}")
    if cert.holds:
        return EXIT_HOLDS
    if cert.fails:
        return EXIT_FAILS
    return EXIT_EXHAUSTED


def _run_instance(inst, args) -> int:
    if args.export_cnf:
        write_dimacs(inst.problem, args.export_cnf)
    cert = decide(inst, threads=_threads(args), timeout_ms=args.timeout_ms)
    return _emit(cert, args)


def cmd_arrow(args) -> int:
    _require_k(args)
    C, B, A = _structure(args.C, "C"), _structure(args.B, "B"), _structure(args.A, "A")
    if args.klass:
        _members(resolve_class(args.klass), [("C", C), ("B", B), ("A", A)])
    return _run_instance(arrow_instance(C, B, A, args.k, args.l, args.domain), args)


def cmd_rel_arrow(args) -> int:
    _require_k(args)
    pair = pair_from_string(args.pair) if args.pair else None
    Bstar = _structure(args.Bstar, "Bstar")
    if pair:
        _members(pair.expansion, [("Bstar", Bstar)])
    if args.mode == "classwise":
        C, Astar = _structure(args.C, "C"), _structure(args.Astar, "Astar")
        if pair:
            _members(pair.base, [("C", C)])
            _members(pair.expansion, [("Astar", Astar)])
        return _run_instance(classwise_instance(C, Bstar, Astar, args.k), args)
    A = _structure(args.A, "A")
    if pair:
        _members(pair.base, [("A", A)])
    if args.mode == "strong":
        Cstar = _structure(args.Cstar, "Cstar")
        if pair:
            _members(pair.expansion, [("Cstar", Cstar)])
        return _run_instance(rel_strong_instance(Cstar, Bstar, A, args.k), args)
    # without --C the smallest candidate host is used: the base reduct of B*
    C = _structure(args.C, "C") if args.C else reduct(Bstar, A.signature)
    if pair:
        _members(pair.base, [("C", C)])
    build = rel_emb_instance if args.mode == "emb" else rel_struct_instance
    return _run_instance(build(C, Bstar, A, args.k), args)


def cmd_ramsey_witness(args) -> int:
    _require_k(args)
    K = resolve_class(args.klass or "linear_orders")
    B, A = _structure(args.B, "B"), _structure(args.A, "A")
    cert = find_ramsey_witness(K, B, A, args.k, args.l, args.n_max, args.domain,
                               threads=_threads(args), timeout_ms=args.timeout_ms)
    return _emit(cert, args)


def cmd_rel_witness(args) -> int:
    _require_k(args)
    pair = _pair(args)
    Bstar, A = _structure(args.Bstar, "Bstar"), _structure(args.A, "A")
    mode = "emb" if args.mode == "classwise" else args.mode
    cert = find_rel_witness(pair, Bstar, A, args.k, mode, args.n_max,
                            threads=_threads(args), timeout_ms=args.timeout_ms)
    return _emit(cert, args)


def cmd_expansion_property(args) -> int:
    pair = _pair(args)
    A = _structure(args.A, "A")
    return _emit(expansion_property_check(pair, A, args.n_max, timeout_ms=args.timeout_ms), args)


def cmd_degree(args) -> int:
    _require_k(args)
    pair = _pair(args)
    A = _structure(args.A, "A")
    db = ramsey_degree_bounds(pair, A, args.k, args.n_max, threads=_threads(args), timeout_ms=args.timeout_ms)
    doc = {"pair": pair.name, "A": A.to_dict(), "k": args.k, "n_max": args.n_max}
    return _emit(db.certificate(doc), args)


def cmd_rigidity(args) -> int:
    spec = resolve_class(args.klass or "linear_orders")
    return _emit(rigidity_scan(spec, args.n_max), args)


def _write_doc(doc: dict, args) -> None:
    text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    spec = resolve_class(args.klass or "linear_orders")
    if args.n_max < 1:
        raise InputError("--n-max must be >= 1")
    sizes = {str(s): [M.to_dict() for M in spec.members(s)] for s in range(1, args.n_max + 1)}
    print(f"{spec.name}: members up to isomorphism by size: "
          + ", ".join(f"{s}:{len(v)}" for s, v in sizes.items()), file=sys.stderr)
    _write_doc({"class": spec.name, "members": sizes}, args)
    return EXIT_HOLDS


def cmd_expansions(args) -> int:
    pair = _pair(args)
    if args.A:
        A = _structure(args.A, "A")
        ex = enumerate_expansions(pair, A)
        print(f"{len(ex.based)} expansions over the given universe, {len(ex.up_to_iso)} up to isomorphism",
              file=sys.stderr)
        _write_doc({"pair": pair.name, "A": A.to_dict(), "based": [X.to_dict() for X in ex.based],
                    "up_to_iso": [X.to_dict() for X in ex.up_to_iso]}, args)
    else:
        table = precompactness_count(pair, args.n_max)
        print("precompactness: max expansions up to isomorphism per size: "
              + ", ".join(f"{s}:{c}" for s, c in table.items()), file=sys.stderr)
        _write_doc({"pair": pair.name, "max_expansions_by_size": {str(s): c for s, c in table.items()}}, args)
    return EXIT_HOLDS


def cmd_fraisse(args) -> int:
    spec = resolve_class(args.klass or "linear_orders")
    reports = [check_hp(spec, args.n_max), check_jep(spec, args.n_max), check_ap(spec, args.n_max)]
    for r in reports:
        print(f"{r.property}: {'holds' if r.holds else 'FAILS'} - {r.message}", file=sys.stderr)
    _write_doc({"class": spec.name, "n_max": args.n_max,
                "reports": [{"property": r.property, "holds": r.holds, "message": r.message, "instance": r.instance}
                            for r in reports]}, args)
    return EXIT_HOLDS if all(reports) else EXIT_FAILS


def cmd_verify(args) -> int:
    try:
        cert = Certificate.load(args.certificate)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"cannot read certificate: {exc}", file=sys.stderr)
        return 1
    r = verify_certificate(cert)
    print(("OK: " if r.ok else "REJECTED: ") + r.message)
    return 0 if r.ok else 1


def _pair(args):
    if not args.pair:
        raise InputError("--pair is required (e.g. graphs:ordered_graphs)")
    return pair_from_string(args.pair)


COMMANDS = {
    "arrow": cmd_arrow,
    "rel-arrow": cmd_rel_arrow,
    "expansion-property": cmd_expansion_property,
    "ramsey-witness": cmd_ramsey_witness,
    "rel-witness": cmd_rel_witness,
    "degree": cmd_degree,
    "rigidity": cmd_rigidity,
    "enumerate": cmd_enumerate,
    "expansions": cmd_expansions,
    "fraisse-sanity": cmd_fraisse,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relramsey", description="Finite structural Ramsey checks with certificates.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--class", dest="klass", help="builtin class name or class document path")
        s.add_argument("--pair", help="expansion pair 'base:expansion'")
        for f in ("C", "B", "A", "Cstar", "Bstar", "Astar"):
            s.add_argument(f"--{f}", help="structure file, or an integer n for the linear order on n points")
        s.add_argument("-k", type=int)
        s.add_argument("-l", type=int, default=1)
        s.add_argument("--mode", choices=("emb", "struct", "strong", "classwise"), default="emb")
        s.add_argument("--domain", choices=("copies", "embeddings"), default="copies")
        s.add_argument("--n-max", type=int, default=6)
        s.add_argument("--timeout-ms", type=int)
        s.add_argument("--threads", type=int)
        s.add_argument("--out", help="output path (certificate or listing)")
        s.add_argument("--export-cnf", metavar="PATH", help="also write the colouring problem in DIMACS form")
    v = sub.add_parser("verify")
    v.add_argument("certificate")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    if args.command == "verify":
        return cmd_verify(args)
    try:
        if args.timeout_ms is not None and args.timeout_ms < 1:
            raise InputError("--timeout-ms must be >= 1")
        return COMMANDS[args.command](args)
    except (InputError, ClassError, StructureError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
