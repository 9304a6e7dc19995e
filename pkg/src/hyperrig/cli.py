"""Command-line front end.

Subcommands cover generation (gen), algebra operations (op), cleanup
queries, structure encode/decode, the law audit suites, and the capacity
benchmarks, all working over the codebook JSON format.

Exit codes: 0 success, 1 usage error, 2 domain/algebra error, 3 I/O
error. Numeric output is printed with nine decimal digits. The master
seed defaults to 0xC0FFEE; the HYPERRIG_SEED environment variable or
--seed overrides it, so bare invocations are reproducible.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from hyperrig import bench, codec, core, laws
from hyperrig.codec import Construction
from hyperrig.errors import CodebookFormatError, ConfigError, VsaError
from hyperrig.memory import (
    ItemMemory,
    cleanup,
    insert,
    load_codebook,
    save_codebook,
    params_from_json,
)
from hyperrig.params import AlgebraId, AlgebraParams, BraidRole, BundleMode
from hyperrig.seeding import DEFAULT_MASTER_SEED, symbol_seed_for_name
from hyperrig.vector import Hypervector

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise UsageError(message)


def _fmt(value: float) -> str:
    return f"{value:.9f}"


def _master_seed(args) -> int:
    if args.seed is not None:
        return int(args.seed, 0) if isinstance(args.seed, str) else int(args.seed)
    env = os.environ.get("HYPERRIG_SEED")
    if env:
        try:
            return int(env, 0)
        except ValueError as exc:
            raise UsageError(f"HYPERRIG_SEED is not an integer: {env!r}") from exc
    return DEFAULT_MASTER_SEED


def _algebra_params(args) -> AlgebraParams:
    try:
        algebra = AlgebraId(args.algebra.lower())
    except ValueError as exc:
        choices = ", ".join(a.value for a in AlgebraId)
        raise UsageError(f"--algebra must be one of {choices}, got {args.algebra!r}") from exc
    return AlgebraParams(algebra, args.dim, getattr(args, "density", None),
                         getattr(args, "block", None), _master_seed(args))


def _load_book(path: str) -> ItemMemory:
    if not Path(path).exists():
        raise FileNotFoundError(f"--book file {path} does not exist")
    return load_codebook(path)


def _lookup(book: ItemMemory, name: str, flag: str) -> Hypervector:
    try:
        return book.lookup(name)
    except KeyError as exc:
        raise UsageError(f"{flag}: name {name!r} is not stored in the codebook") from exc


# --- subcommand handlers ------------------------------------------------------


def _cmd_gen(args) -> int:
    params = _algebra_params(args)
    vector = core.random_vector(params, symbol_seed_for_name(args.name))
    book_path = args.book or "codebook.json"
    if Path(book_path).exists():
        book = load_codebook(book_path)
        if book.params != params:
            raise UsageError(f"--book {book_path} was created with different algebra params")
        if args.name in book:
            book = ItemMemory(book.params,
                              tuple((n, vector if n == args.name else v) for n, v in book.entries))
        else:
            book = insert(book, args.name, vector)
    else:
        book = ItemMemory(params, ((args.name, vector),))
    save_codebook(book, book_path)
    print(f"{args.name}: stored {params.algebra_id.value} d={params.dimension} in {book_path}")
    return EXIT_OK


def _cmd_op(args) -> int:
    book = _load_book(args.book)
    operands = [_lookup(book, name, "--args") for name in args.args]
    operation = args.operation
    mode = BundleMode.RAW if args.raw else BundleMode.NATIVE
    role = BraidRole(args.role)
    if operation == "sim":
        if len(operands) != 2:
            raise UsageError("op sim needs exactly two --args names")
        print(_fmt(core.similarity(operands[0], operands[1])))
        return EXIT_OK
    if operation == "bind":
        if len(operands) < 2:
            raise UsageError("op bind needs at least two --args names")
        out = operands[0]
        for other in operands[1:]:
            out = core.bind(out, other)
    elif operation == "bundle":
        if len(operands) < 2:
            raise UsageError("op bundle needs at least two --args names")
        out = core.bundle_many(operands, mode)
    elif operation == "unbind":
        if len(operands) != 2:
            raise UsageError("op unbind needs exactly two --args names (key, target)")
        out = core.unbind(operands[0], operands[1])
    elif operation == "braid":
        if len(operands) != 1:
            raise UsageError("op braid needs exactly one --args name")
        out = core.braid(operands[0], role, int(args.power))
    elif operation == "inverse":
        if len(operands) != 1:
            raise UsageError("op inverse needs exactly one --args name")
        out = core.inverse(operands[0])
    elif operation == "frac":
        if len(operands) != 1:
            raise UsageError("op frac needs exactly one --args name")
        out = codec.fractional_power(operands[0], args.power)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown operation {operation!r}")
    if args.out:
        book = insert(book, args.out, out)
        save_codebook(book, args.book)
        print(f"{args.out}: stored result of {operation}")
    else:
        print(f"{operation}: dimension {out.dimension_tag}, not stored (pass --out NAME to keep it)")
    return EXIT_OK


def _cmd_cleanup(args) -> int:
    book = _load_book(args.book)
    if args.query in book:
        query = book.lookup(args.query)
    elif Path(args.query).exists():
        doc = json.loads(Path(args.query).read_text(encoding="utf-8"))
        from hyperrig.memory import _decode_entry

        query = _decode_entry(book.params, doc)
    else:
        raise UsageError(f"--query {args.query!r} is neither a stored name nor a file")
    result = cleanup(book, query)
    margin = result.margin if np.isfinite(result.margin) else float("inf")
    print(f"{result.name} score={_fmt(result.score)} margin="
          f"{'inf' if not np.isfinite(margin) else _fmt(margin)}")
    return EXIT_OK


def _read_spec(path: str) -> dict:
    if not Path(path).exists():
        raise FileNotFoundError(f"--spec file {path} does not exist")
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CodebookFormatError(f"--spec {path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise CodebookFormatError(f"--spec {path}: expected a JSON object")
    return doc


def _function_code(book: ItemMemory, spec: dict) -> codec.FunctionCode:
    pairs = spec.get("pairs")
    if not pairs:
        raise UsageError("--spec for a function needs a non-empty 'pairs' list")
    resolved = [(_lookup(book, a, "--spec pairs"), _lookup(book, b, "--spec pairs"))
                for a, b in pairs]
    return codec.encode_function(resolved)


def _construction(spec: dict) -> Construction:
    raw = spec.get("construction", "braided")
    try:
        return Construction(raw)
    except ValueError as exc:
        raise UsageError(f"--spec construction must be 'braided' or 'guarded', got {raw!r}") from exc


def _cmd_encode(args) -> int:
    book = _load_book(args.book)
    spec = _read_spec(args.spec)
    kind = args.kind
    if kind == "function":
        vector = _function_code(book, spec).vector
    elif kind == "tuple":
        roles = [_lookup(book, n, "--spec roles") for n in spec.get("roles", [])]
        fillers = [_lookup(book, n, "--spec fillers") for n in spec.get("fillers", [])]
        vector = codec.encode_tuple(roles, fillers)
    elif kind == "list":
        items = [_lookup(book, n, "--spec items") for n in spec.get("items", [])]
        vector = codec.encode_list(items, _construction(spec),
                                   BraidRole(int(spec.get("role", 0)))).vector
    else:  # tree
        leaves = [_lookup(book, n, "--spec leaves") for n in spec.get("leaves", [])]
        vector = codec.encode_tree(leaves, _construction(spec)).vector
    book = insert(book, args.out, vector)
    save_codebook(book, args.book)
    print(f"{args.out}: stored encoded {kind}")
    return EXIT_OK


def _cmd_decode(args) -> int:
    book = _load_book(args.book)
    spec = _read_spec(args.spec)
    kind = args.kind
    stored = _lookup(book, args.vec, "--vec")
    if kind == "function":
        if not args.arg:
            raise UsageError("decode function needs --arg NAME")
        code = _function_code(book, spec)
        out = codec.apply_function(code, _lookup(book, args.arg, "--arg"), clean=args.clean)
        reference = code.range_memory
    elif kind == "tuple":
        if not args.role_name:
            raise UsageError("decode tuple needs --role NAME")
        out = codec.decode_tuple(stored, _lookup(book, args.role_name, "--role"))
        names = spec.get("fillers", [])
        reference = ItemMemory(book.params, tuple((n, book.lookup(n)) for n in names))
    elif kind == "list":
        if args.index is None:
            raise UsageError("decode list needs --index K")
        items = [_lookup(book, n, "--spec items") for n in spec.get("items", [])]
        code = codec.ListCode(stored, len(items), _construction(spec),
                              role=BraidRole(int(spec.get("role", 0))),
                              guard_seed=codec.guard_seed(book.params, codec.GUARD_LIST))
        out = codec.decode_list_item(code, args.index)
        reference = ItemMemory(book.params, tuple((n, book.lookup(n)) for n in spec.get("items", [])))
    else:  # tree
        if not args.path:
            raise UsageError("decode tree needs --path like LR")
        leaves = spec.get("leaves", [])
        depth = max(len(leaves).bit_length() - 1, 1)
        code = codec.TreeCode(stored, depth, _construction(spec))
        out = codec.decode_leaf(code, args.path)
        reference = ItemMemory(book.params, tuple((n, book.lookup(n)) for n in leaves))
    if kind == "function" and args.clean:
        result = cleanup(code.range_memory, out)
    else:
        result = cleanup(reference, out)
    print(f"{result.name} score={_fmt(result.score)}")
    if args.out:
        book = insert(book, args.out, out)
        save_codebook(book, args.book)
    return EXIT_OK


def _cmd_laws(args) -> int:
    params = _algebra_params(args)
    reports = laws.run_all_laws(params, args.trials)
    laws.save_reports(reports, args.report)
    for report in reports:
        print(f"{report.law_id:32s} {report.verdict.value}")
    counts = {}
    for report in reports:
        counts[report.verdict.value] = counts.get(report.verdict.value, 0) + 1
    print(f"written {args.report}: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return EXIT_OK


def _parse_grid(grid: str) -> dict[str, list]:
    out: dict[str, list] = {}
    for chunk in grid.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise UsageError(f"--grid entries look like key=v1,v2 — got {chunk!r}")
        key, _, values = chunk.partition("=")
        out[key.strip()] = [v.strip() for v in values.split(",") if v.strip()]
    return out


def _grid_ints(grid: dict, key: str, default: list[int]) -> list[int]:
    if key not in grid:
        return default
    try:
        return [int(v) for v in grid[key]]
    except ValueError as exc:
        raise UsageError(f"--grid {key} needs integers") from exc


def _cmd_bench(args) -> int:
    params = _algebra_params(args)
    grid = _parse_grid(args.grid)
    trials = _grid_ints(grid, "trials", [200])[0]
    if args.experiment == "capacity":
        k_range = _grid_ints(grid, "k", [1, 2, 3, 5, 7])
        codebook = _grid_ints(grid, "codebook", [100])[0]
        records = bench.bundle_capacity(params, k_range, codebook, trials)
    elif args.experiment == "crosstalk":
        sizes = _grid_ints(grid, "tables", [2, 4, 8])
        records = bench.composition_crosstalk(params, sizes, trials)
    else:
        depths = _grid_ints(grid, "depths", [1, 2])
        constructions = [Construction(c) for c in grid.get("construction", ["braided", "guarded"])]
        records = bench.tree_retrieval(params, depths, trials, constructions)
    bench.save_csv(records, args.out)
    print(f"written {args.out}: {len(records)} records")
    return EXIT_OK


# --- parser -------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="hyperrig",
                     description="Multi-algebra VSA toolkit: generation, algebra ops, "
                                 "cleanup memory, structure codecs, law audits, benchmarks.")
    parser.add_argument("--seed", help="master seed (overrides HYPERRIG_SEED; default 0xC0FFEE)")
    parser.add_argument("-v", "--verbose", action="store_true", help="verbose diagnostics")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate and store a base vector")
    gen.add_argument("--algebra", required=True)
    gen.add_argument("--dim", type=int, required=True)
    gen.add_argument("--density", type=float)
    gen.add_argument("--block", type=int)
    gen.add_argument("--name", required=True)
    gen.add_argument("--book", help="codebook file (default codebook.json)")
    gen.set_defaults(handler=_cmd_gen)

    op = sub.add_parser("op", help="apply an algebra operation to stored vectors")
    op.add_argument("operation", choices=["bind", "bundle", "unbind", "braid", "inverse", "sim", "frac"])
    op.add_argument("--book", required=True)
    op.add_argument("--args", nargs="+", required=True, metavar="NAME")
    op.add_argument("--out")
    op.add_argument("--raw", action="store_true", help="raw (sum) bundling instead of native")
    op.add_argument("--power", type=float, default=1.0, help="exponent for frac / repeat count for braid")
    op.add_argument("--role", type=int, default=0, help="braid role index")
    op.set_defaults(handler=_cmd_op)

    clean = sub.add_parser("cleanup", help="nearest-neighbor cleanup of a query")
    clean.add_argument("--book", required=True)
    clean.add_argument("--query", required=True, help="stored name or JSON payload file")
    clean.set_defaults(handler=_cmd_cleanup)

    enc = sub.add_parser("encode", help="encode a structure from a JSON spec")
    enc.add_argument("kind", choices=["function", "tuple", "list", "tree"])
    enc.add_argument("--book", required=True)
    enc.add_argument("--spec", required=True)
    enc.add_argument("--out", required=True)
    enc.set_defaults(handler=_cmd_encode)

    dec = sub.add_parser("decode", help="decode part of an encoded structure")
    dec.add_argument("kind", choices=["function", "tuple", "list", "tree"])
    dec.add_argument("--book", required=True)
    dec.add_argument("--spec", required=True)
    dec.add_argument("--vec", required=True, help="stored structure vector name")
    dec.add_argument("--arg", help="function argument name")
    dec.add_argument("--role", dest="role_name", help="tuple role name")
    dec.add_argument("--index", type=int, help="list position (0-based)")
    dec.add_argument("--path", help="tree path like LR")
    dec.add_argument("--clean", action="store_true")
    dec.add_argument("--out")
    dec.set_defaults(handler=_cmd_decode)

    law = sub.add_parser("laws", help="run the law audit suites for one algebra")
    law.add_argument("--algebra", required=True)
    law.add_argument("--dim", type=int, required=True)
    law.add_argument("--density", type=float)
    law.add_argument("--block", type=int)
    law.add_argument("--trials", type=int, default=1000)
    law.add_argument("--report", required=True)
    law.set_defaults(handler=_cmd_laws)

    ben = sub.add_parser("bench", help="run a capacity/crosstalk/tree experiment grid")
    ben.add_argument("experiment", choices=["capacity", "crosstalk", "tree"])
    ben.add_argument("--algebra", required=True)
    ben.add_argument("--dim", type=int, required=True)
    ben.add_argument("--density", type=float)
    ben.add_argument("--block", type=int)
    ben.add_argument("--grid", default="", help="semicolon grid, e.g. 'k=1,3,7;codebook=100;trials=200'")
    ben.add_argument("--out", required=True)
    ben.set_defaults(handler=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, IsADirectoryError, PermissionError, OSError) as exc:
        # CodebookFormatError is a VsaError; file-shape problems land below.
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CodebookFormatError as exc:
        print(f"file format error: {exc}", file=sys.stderr)
        return EXIT_IO
    except VsaError as exc:
        print(f"algebra error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
