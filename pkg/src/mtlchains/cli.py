"""Command-line entry point.

Exit codes: 0 success, 1 usage/IO/parse error, 2 axiom violation,
3 precondition failure, 4 claim verification found counterexamples.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import claims
from .core import Chain, chain_from_dict, check_axioms, format_table, residuum
from .enumeration import TAGS, classify, enumerate_chains
from .errors import MTLError
from .gcp import assemble, gcp_from_dict, gcp_from_extension, gcp_from_ordinal_sum, validate_gcp
from .homs import check_split_exact, ordinal_extension_test, sequence_from_dict
from .structure import analysis_report, make_filter, quotient, scale
from .sums import decompose, ordinal_sum

EXIT_OK, EXIT_USAGE, EXIT_AXIOM, EXIT_PRECONDITION, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_doc(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _read_chain(path: str) -> Chain:
    return chain_from_dict(_read_doc(path))


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def _chain_out(args, c: Chain) -> None:
    if args.table:
        print(format_table(c, "product"))
        print()
        print(format_table(c, "residuum"))
    else:
        _emit(c.to_dict())


def cmd_validate(args) -> int:
    doc = _read_doc(args.file)
    if not isinstance(doc, dict) or "size" not in doc or "product" not in doc:
        raise UsageError("chain document needs 'size' and 'product'")
    rep = check_axioms(doc["size"], doc["product"])
    if args.table:
        for k, v in rep.to_dict().items():
            print(f"{k:12} {v}")
    else:
        _emit(rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_AXIOM


def cmd_analyze(args) -> int:
    c = _read_chain(args.file)
    doc = analysis_report(c)
    if args.table:
        for k, v in doc.items():
            print(f"{k:15} {v}")
    else:
        _emit(doc)
    return EXIT_OK


def cmd_residuum(args) -> int:
    c = _read_chain(args.file)
    if args.x is None:
        if args.table:
            print(format_table(c, "residuum"))
        else:
            _emit({"residuum": [list(r) for r in c.residuum_table]})
        return EXIT_OK
    if args.y is None:
        raise UsageError("residuum needs both x and y")
    value = residuum(c, args.x, args.y)
    if args.table:
        print(value)
    else:
        _emit({"x": args.x, "y": args.y, "value": value})
    return EXIT_OK


def cmd_quotient(args) -> int:
    c = _read_chain(args.file)
    q = quotient(c, make_filter(c, args.least))
    if args.table:
        print("classes:", q.classes())
        print(format_table(q.algebra))
    else:
        _emit({"algebra": q.algebra.to_dict(), "projection": list(q.projection)})
    return EXIT_OK


def cmd_scale(args) -> int:
    _chain_out(args, scale(_read_chain(args.file), args.e))
    return EXIT_OK


def cmd_osum(args) -> int:
    _chain_out(args, ordinal_sum([_read_chain(p) for p in args.files]))
    return EXIT_OK


def cmd_decompose(args) -> int:
    d = decompose(_read_chain(args.file))
    if args.table:
        print("boundaries:", list(d.boundaries))
        for k, comp in enumerate(d.components):
            print(f"component {k}:")
            print(format_table(comp))
    else:
        _emit(d.to_dict())
    return EXIT_OK


def cmd_seq_check(args) -> int:
    seq = sequence_from_dict(_read_doc(args.file))
    rep = check_split_exact(seq)
    doc = rep.to_dict()
    doc["ordinal_extension"] = ordinal_extension_test(seq) if rep.ok else None
    _emit(doc)
    return EXIT_OK if rep.ok else EXIT_PRECONDITION


def cmd_gcp_validate(args) -> int:
    rep = validate_gcp(gcp_from_dict(_read_doc(args.file)))
    _emit(rep.to_dict())
    return EXIT_OK if rep.ok and rep.assembled_mtl else EXIT_PRECONDITION


def cmd_gcp_assemble(args) -> int:
    asm = assemble(gcp_from_dict(_read_doc(args.file)))
    if args.table:
        print("blocks:", [list(p) for p in asm.block_map])
        print(format_table(asm.chain))
    else:
        _emit(asm.to_dict())
    return EXIT_OK


def cmd_gcp_from_extension(args) -> int:
    c = _read_chain(args.file)
    _emit(gcp_from_extension(c, make_filter(c, args.least)).to_dict())
    return EXIT_OK


def cmd_gcp_from_osum(args) -> int:
    _emit(gcp_from_ordinal_sum([_read_chain(p) for p in args.files]).to_dict())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.size < 1:
        raise UsageError("--size must be >= 1")
    count = 0
    for c in enumerate_chains(args.size, args.workers):
        if args.filter and args.filter not in classify(c):
            continue
        count += 1
        if not args.count:
            if args.table:
                print(format_table(c))
                print()
            else:
                _emit(c.to_dict())
    if args.count:
        print(count)
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = sorted(claims.CLAIMS) if args.claim == "all" else [args.claim]
    found = False
    for cid in ids:
        rep = claims.verify_claim(cid, args.max_size, args.workers)
        found |= bool(rep.counterexamples)
        if args.table:
            print(f"{cid:20} {rep.verdict:20} instances={rep.instances} "
                  f"counterexamples={len(rep.counterexamples)}")
        else:
            _emit(rep.to_dict())
    return EXIT_COUNTEREXAMPLE if found else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mtlchains", description="Finite MTL-chain toolkit.")
    out = argparse.ArgumentParser(add_help=False)
    g = out.add_mutually_exclusive_group()
    g.add_argument("--json", dest="table", action="store_false", default=False,
                   help="JSON output (default)")
    g.add_argument("--table", dest="table", action="store_true", default=False,
                   help="human-readable tables")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[out], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the MTL-chain axioms").add_argument("file")
    add("analyze", cmd_analyze, "idempotents, local units, filters").add_argument("file")
    sp = add("residuum", cmd_residuum, "residuum table or a single value")
    sp.add_argument("file")
    sp.add_argument("x", nargs="?", type=int)
    sp.add_argument("y", nargs="?", type=int)
    sp = add("quotient", cmd_quotient, "quotient by the filter above an idempotent")
    sp.add_argument("file")
    sp.add_argument("--least", type=int, required=True, help="least element of the filter")
    sp = add("scale", cmd_scale, "the chain eM for an idempotent e")
    sp.add_argument("file")
    sp.add_argument("-e", type=int, required=True)
    add("osum", cmd_osum, "ordinal sum, components bottom to top").add_argument("files", nargs="+")
    add("decompose", cmd_decompose, "archimedean decomposition").add_argument("file")
    add("seq-check", cmd_seq_check, "check a split sequence document").add_argument("file")
    add("gcp-validate", cmd_gcp_validate, "check GCP conditions").add_argument("file")
    add("gcp-assemble", cmd_gcp_assemble, "assemble a GCP into a chain").add_argument("file")
    sp = add("gcp-from-extension", cmd_gcp_from_extension, "GCP spec from a chain and filter")
    sp.add_argument("file")
    sp.add_argument("--least", type=int, required=True)
    add("gcp-from-osum", cmd_gcp_from_osum, "GCP spec of an ordinal sum").add_argument(
        "files", nargs="+")
    sp = add("enumerate", cmd_enumerate, "all MTL-chains of a size, one JSON per line")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--filter", choices=TAGS)
    sp.add_argument("--workers", type=int, default=1)
    sp = add("verify", cmd_verify, "machine-check a registered claim")
    sp.add_argument("claim", choices=sorted(claims.CLAIMS) + ["all"])
    sp.add_argument("--max-size", type=int, default=5)
    sp.add_argument("--workers", type=int, default=1)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _emit({"error": str(exc), "reason": "USAGE", "witness": {}})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MTLError as exc:
        _emit(exc.to_dict())
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
