"""``xt``: command-line front-end for mapping, simulation, verification and reports.

Exit codes: 0 success, 1 parse error, 2 semantic or mapping error,
3 verification failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import errors
from .gatelib.library import load_library
from .mapper import MapOptions, map_network
from .metrics import compare_cmos, emit_report
from .netlist.checks import validate
from .netlist.logic import parse_blif
from .netlist.xtn import parse_xtn, serialize_xtn
from .polymorph import (Key, apply_key, brute_force_key, enumerate_functions, netlist_oracle,
                        network_oracle)
from .simulator import DEFAULT_SEED, parse_stimulus, run, verify_equivalence, write_csv, write_vcd

EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3, 4


def _read(path):
    return Path(path).read_text(encoding="utf-8")


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8", newline="")


def _library(args):
    return load_library(args.library or os.environ.get("XT_LIBRARY") or None)


def _netlist(args, library):
    netlist = parse_xtn(_read(args.design), library)
    diag = validate(netlist, library)
    for d in diag.warnings:
        print(d, file=sys.stderr)
    if not diag.ok:
        raise errors.NetlistError("netlist failed validation:\n" + "\n".join(map(str, diag.errors)))
    return netlist


def cmd_map(args) -> int:
    library = _library(args)
    network = parse_blif(_read(args.input))
    poly = tuple(p for p in (args.poly or "").split(",") if p)
    options = MapOptions(style=args.style, fanout_limit=args.fanout_limit,
                         use_composites=not args.no_composites, polymorphic_cells=poly)
    netlist, report = map_network(network, library, options)
    out = Path(args.output)
    _write(out, serialize_xtn(netlist))
    _write(out.with_suffix(".map.json"), report.to_json())
    print(f"mapped {network.name}: {report.total} transistors, max level {report.max_level}, "
          f"{report.inverters} inverters, {report.buffers} buffers, {report.delays} delay stages",
          file=sys.stderr)
    return EXIT_OK


def cmd_sim(args) -> int:
    library = _library(args)
    netlist = _netlist(args, library)
    stimulus = parse_stimulus(_read(args.stimulus))
    trace = run(netlist, stimulus, args.settle, library)
    if args.vcd:
        with open(args.vcd, "w", encoding="utf-8", newline="") as fh:
            write_vcd(trace, fh)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_csv(trace, fh)
    print(" ".join(stimulus.inputs) + " | " + " ".join(netlist.outputs))
    for row, sample in zip(stimulus.rows, trace.samples()):
        print("".join(map(str, row)) + " | " + "".join(map(str, sample)))
    return EXIT_OK


def cmd_verify(args) -> int:
    library = _library(args)
    netlist = _netlist(args, library)
    reference = parse_blif(_read(args.against))
    if args.exhaustive:
        strategy = "exhaustive"
    elif args.random is not None:
        strategy = "random"
    else:
        strategy = "auto"
    report = verify_equivalence(netlist, reference, strategy, args.random or 10000, args.seed,
                                library)
    print(report.summary())
    if report.passed:
        return EXIT_OK
    vec, want, got = report.mismatches[0]
    print("counterexample: " + " ".join(f"{n}={v}" for n, v in zip(report.inputs, vec))
          + " expected " + " ".join(f"{n}={v}" for n, v in zip(report.outputs, want))
          + " got " + " ".join(f"{n}={v}" for n, v in zip(report.outputs, got)))
    return EXIT_VERIFY


def cmd_report(args) -> int:
    library = _library(args)
    netlist = _netlist(args, library)
    network = parse_blif(_read(args.against))
    report = compare_cmos(network, netlist, library=library, style=args.style)
    for w in report.warnings:
        print(f"warning: {w}", file=sys.stderr)
    for f in report.flags:
        print(f"note: {f}", file=sys.stderr)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            emit_report(report, args.format, fh)
    else:
        emit_report(report, args.format, sys.stdout)
    return EXIT_OK


def _key(netlist, text):
    return Key.from_hex(netlist.free_controls(), text)


def cmd_key(args) -> int:
    library = _library(args)
    netlist = _netlist(args, library)
    if args.key_command == "apply":
        key = (Key.from_manifest(_read(args.manifest)) if args.manifest
               else _key(netlist, args.key))
        text = serialize_xtn(apply_key(netlist, key))
        if args.output:
            _write(args.output, text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    if args.key_command == "enumerate":
        atlas = enumerate_functions(netlist, args.limit, library, args.seed)
        print(f"{atlas.n_keys} keys, {atlas.distinct} distinct functions "
              f"({'exhaustive' if atlas.exhaustive else f'{atlas.vectors} sampled vectors'})")
        for group in atlas.classes():
            print("  " + " ".join(Key.from_int(atlas.controls, k).hex() for k in group))
        return EXIT_OK
    # attack
    if args.oracle_key is not None:
        oracle = netlist_oracle(apply_key(netlist, _key(netlist, args.oracle_key)), library)
    elif args.oracle_xtn:
        oracle = netlist_oracle(parse_xtn(_read(args.oracle_xtn), library), library)
    elif args.oracle:
        oracle = network_oracle(parse_blif(_read(args.oracle)))
    else:
        raise errors.InterfaceMismatch(["an oracle (--oracle-key, --oracle or --oracle-xtn)"])
    result = brute_force_key(netlist, oracle, args.max_queries, args.limit, library)
    if result.key is not None:
        print(f"key {result.key.hex()} recovered after {result.queries} queries")
    elif result.candidates:
        print(f"ambiguous after {result.queries} queries: "
              + " ".join(k.hex() for k in result.candidates))
    else:
        print(f"no key matches the oracle ({result.queries} queries)")
    if args.json:
        _write(args.json, result.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--library", help="template JSON extending the builtin library "
                        "(default: $XT_LIBRARY)")
    common.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED,
                        help="seed for random vectors (default 0xC0FFEE)")

    parser = argparse.ArgumentParser(prog="xt", description="Crosstalk logic workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", parents=[common], help="map a BLIF network to crosstalk cells")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True, help="output .xtn path")
    p.add_argument("--style", default="nand-nand", choices=("nand-nand", "and-or"))
    p.add_argument("--fanout-limit", type=int, default=4)
    p.add_argument("--no-composites", action="store_true")
    p.add_argument("--poly", help="comma-separated nodes to realize as polymorphic cells")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("sim", parents=[common], help="simulate a netlist on a stimulus file")
    p.add_argument("design")
    p.add_argument("--stimulus", required=True)
    p.add_argument("--settle", type=int, help="settle periods per row")
    p.add_argument("--vcd")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("verify", parents=[common], help="check a netlist against a BLIF")
    p.add_argument("design")
    p.add_argument("--against", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--random", type=int, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", parents=[common], help="transistor counts against CMOS")
    p.add_argument("design")
    p.add_argument("--against", required=True)
    p.add_argument("--format", default="text", choices=("text", "csv", "json"))
    p.add_argument("--style", default="nand-nand", choices=("nand-nand", "and-or"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("key", help="configure and attack polymorphic keys")
    ks = p.add_subparsers(dest="key_command", required=True)
    a = ks.add_parser("apply", parents=[common], help="tie control nets to a key")
    a.add_argument("design")
    kg = a.add_mutually_exclusive_group(required=True)
    kg.add_argument("--key", help="key as hex, first control net is the MSB")
    kg.add_argument("--manifest", help="key manifest JSON")
    a.add_argument("-o", "--output")
    e = ks.add_parser("enumerate", parents=[common], help="list the functions over all keys")
    e.add_argument("design")
    e.add_argument("--limit", type=int, default=16)
    t = ks.add_parser("attack", parents=[common], help="brute-force key recovery")
    t.add_argument("design")
    t.add_argument("--oracle-key", help="configure the oracle from this key (hex)")
    t.add_argument("--oracle", help="BLIF network used as the oracle")
    t.add_argument("--oracle-xtn", help="configured netlist used as the oracle")
    t.add_argument("--max-queries", type=int)
    t.add_argument("--limit", type=int, default=16)
    t.add_argument("--json", help="write the attack result as JSON")
    for q in (a, e, t):
        q.set_defaults(func=cmd_key)
    return parser


def _exit_code(exc) -> int:
    if isinstance(exc, (errors.ParseError, errors.LibraryError)):
        return EXIT_PARSE
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_SEMANTIC


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (errors.XtalkError, ValueError, OSError) as exc:
        kind = type(exc).__name__
        print(f"xt {args.command}: {kind}: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
