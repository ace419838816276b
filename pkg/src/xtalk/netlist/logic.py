"""Technology-independent Boolean networks and the BLIF subset reader."""

from __future__ import annotations

import re
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Sequence

from ..errors import ParseError, Unsupported

NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_.]*$")

_UNSUPPORTED = {".latch", ".subckt", ".gate", ".mlatch", ".exdc", ".search", ".clock",
                ".start_kiss", ".end_kiss", ".cname", ".attr", ".param", ".delay",
                ".input_arrival", ".output_required", ".default_input_arrival",
                ".default_output_required", ".wire_load_slope", ".area", ".model_end"}


@dataclass(frozen=True)
class LogicNode:
    """A single-output sum-of-products node.

    ``rows`` are cubes over ``inputs`` using ``0``, ``1`` and ``-``; when
    ``value`` is 0 the cubes describe the OFF-set.
    """

    output: str
    inputs: tuple
    rows: tuple
    value: int = 1

    def evaluate(self, values) -> int:
        hit = any(all(c == "-" or int(c) == values[x] for c, x in zip(row, self.inputs))
                  for row in self.rows)
        return int(hit) if self.value else int(not hit)

    def evaluate_packed(self, words, mask: int) -> int:
        acc = 0
        for row in self.rows:
            term = mask
            for c, x in zip(row, self.inputs):
                if c == "1":
                    term &= words[x]
                elif c == "0":
                    term &= ~words[x] & mask
                if not term:
                    break
            acc |= term
        return acc if self.value else ~acc & mask


@dataclass(frozen=True)
class LogicNetwork:
    name: str
    inputs: tuple
    outputs: tuple
    nodes: tuple

    def node(self, name) -> LogicNode:
        for n in self.nodes:
            if n.output == name:
                return n
        raise KeyError(name)

    def evaluate(self, vector: Sequence[int]) -> tuple:
        values = dict(zip(self.inputs, vector))
        for n in self.nodes:
            values[n.output] = n.evaluate(values)
        return tuple(values[o] for o in self.outputs)

    def evaluate_packed(self, words: dict, mask: int) -> dict:
        """Bit-parallel evaluation: every word holds one lane per vector."""
        values = dict(words)
        for n in self.nodes:
            values[n.output] = n.evaluate_packed(values, mask)
        return {o: values[o] for o in self.outputs}


def _logical_lines(text):
    """Yield (line number, tokens) with comments stripped and continuations joined."""
    pending, start = [], None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if start is None:
            start = no
        if line.endswith("\\"):
            pending.append(line[:-1])
            continue
        pending.append(line)
        tokens = " ".join(pending).split()
        pending = []
        if tokens:
            yield start, tokens
        start = None
    if pending and " ".join(pending).split():
        yield start, " ".join(pending).split()


def parse_blif(text: str) -> LogicNetwork:
    name = None
    inputs, outputs = [], []
    nodes = []          # (line, output, inputs, rows, value)
    current = None
    ended = False
    for no, tokens in _logical_lines(text):
        head = tokens[0]
        if ended:
            if head == ".model":
                raise Unsupported(no, "multiple .model sections (hierarchy) are not supported")
            continue
        if head.startswith("."):
            current = None
            if head == ".model":
                if name is not None:
                    raise Unsupported(no, "multiple .model sections (hierarchy) are not supported")
                name = tokens[1] if len(tokens) > 1 else "top"
            elif head == ".inputs":
                inputs.extend(tokens[1:])
            elif head == ".outputs":
                outputs.extend(tokens[1:])
            elif head == ".names":
                if len(tokens) < 2:
                    raise ParseError(no, ".names needs at least an output net")
                current = [no, tokens[-1], tuple(tokens[1:-1]), [], None]
                nodes.append(current)
            elif head == ".end":
                ended = True
            elif head in _UNSUPPORTED:
                raise Unsupported(no, f"{head} is outside the supported BLIF subset")
            else:
                raise Unsupported(no, f"unknown directive {head}")
            continue
        if current is None:
            raise ParseError(no, f"cover row {' '.join(tokens)!r} outside a .names block")
        n_in = len(current[2])
        if n_in == 0:
            if len(tokens) != 1:
                raise ParseError(no, "constant node rows carry only the output value")
            cube, val = "", tokens[0]
        else:
            if len(tokens) != 2:
                raise ParseError(no, f"malformed cover row {' '.join(tokens)!r}")
            cube, val = tokens
        if len(cube) != n_in or set(cube) - set("01-"):
            raise ParseError(no, f"cube {cube!r} does not match {n_in} inputs over 0/1/-")
        if val not in ("0", "1"):
            raise ParseError(no, f"output value must be 0 or 1, got {val!r}")
        if current[4] is not None and current[4] != int(val):
            raise ParseError(no, "mixed ON-set and OFF-set rows in one cover")
        current[4] = int(val)
        current[3].append(cube)

    for net in inputs + outputs:
        if not NAME_RE.match(net):
            raise ParseError(0, f"bad net name {net!r}")
    if len(set(inputs)) != len(inputs):
        raise ParseError(0, "duplicate primary input")
    driven = {}
    for no, out, ins, rows, val in nodes:
        for net in ins + (out,):
            if not NAME_RE.match(net):
                raise ParseError(no, f"bad net name {net!r}")
        if out in inputs:
            raise ParseError(no, f"primary input {out} is driven by a .names block")
        if out in driven:
            raise ParseError(no, f"net {out} driven twice (first at line {driven[out]})")
        driven[out] = no
    defined = set(inputs) | set(driven)
    for no, out, ins, rows, val in nodes:
        for net in ins:
            if net not in defined:
                raise ParseError(no, f"net {net} is used but never driven")
    for net in outputs:
        if net not in defined:
            raise ParseError(0, f"primary output {net} is never driven")

    built = {out: LogicNode(out, ins, tuple(rows), 1 if val is None else val)
             for no, out, ins, rows, val in nodes}
    order = _stable_topo(nodes, set(inputs))
    return LogicNetwork(name or "top", tuple(inputs), tuple(outputs),
                        tuple(built[o] for o in order))


def _stable_topo(nodes, inputs):
    """Declaration order, except that forward references are resolved."""
    deps = {out: [x for x in ins if x not in inputs] for _, out, ins, _, _ in nodes}
    try:
        tuple(TopologicalSorter(deps).static_order())
    except CycleError as exc:
        cyc = exc.args[1]
        raise ParseError(0, "combinational cycle through " + " -> ".join(cyc)) from None
    placed, order = set(), []
    pending = [out for _, out, _, _, _ in nodes]
    while pending:
        rest = []
        for out in pending:
            if all(d in placed for d in deps[out]):
                placed.add(out)
                order.append(out)
            else:
                rest.append(out)
        pending = rest
    return order


def network_to_blif(net: LogicNetwork) -> str:
    lines = [f".model {net.name}", ".inputs " + " ".join(net.inputs),
             ".outputs " + " ".join(net.outputs)]
    for n in net.nodes:
        lines.append(".names " + " ".join(n.inputs + (n.output,)))
        for row in n.rows:
            lines.append(f"{row} {n.value}" if row else str(n.value))
    lines.append(".end")
    return "\n".join(lines) + "\n"
