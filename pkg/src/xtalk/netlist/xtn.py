"""Reader and writer for the line-oriented ``.xtn`` design format.

::

    xtn 1
    design fa
    params vm=3/10 delta=1/50 cl=1
    input a b cin
    output s cout
    ctrl ctrl_f=free default=0
    gate g0 template=FA phase=0 A=a B=b CI=cin S=s CO=cout
    inv i0 in=a out=a_n
    buf b0 in=x out=y drive=2

``design`` and the ``default=`` attribute of ``ctrl`` lines are optional.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import DuplicateDriver, ParseError, UnknownTemplate
from ..gatelib.library import builtin_library
from ..gatelib.model import SimParams
from .ir import Buffer, Control, CrosstalkNetlist, Gate, Inverter, ordered_pins
from .logic import NAME_RE

_DECIMAL = re.compile(r"^\d+(\.\d{1,6})?$")
_RATIO = re.compile(r"^\d+/\d+$")


def parse_rational(text: str) -> Fraction:
    if _RATIO.match(text) or _DECIMAL.match(text):
        return Fraction(text)
    raise ValueError(f"bad rational {text!r} (use p/q or a decimal with at most 6 places)")


def _attrs(no, tokens):
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise ParseError(no, f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        if k in out:
            raise ParseError(no, f"attribute {k} given twice")
        out[k] = v
    return out


def _net(no, name):
    if not NAME_RE.match(name):
        raise ParseError(no, f"bad net name {name!r}")
    return name


def parse_xtn(text: str, library=None) -> CrosstalkNetlist:
    library = library if library is not None else builtin_library()
    name, params = "top", None
    inputs, outputs, controls, instances = [], [], [], []
    drivers, ids = {}, set()
    seen_header = False

    def drive(no, net):
        if net in drivers:
            raise DuplicateDriver(no, f"net {net} has two drivers (also {drivers[net]})")
        drivers[net] = f"line {no}"

    def claim(no, inst_id):
        if inst_id in ids:
            raise ParseError(no, f"duplicate instance id {inst_id}")
        ids.add(inst_id)

    for no, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head, rest = tokens[0], tokens[1:]
        if not seen_header:
            if tokens != ["xtn", "1"]:
                raise ParseError(no, "missing 'xtn 1' header")
            seen_header = True
            continue
        if head == "design":
            if len(rest) != 1:
                raise ParseError(no, "design takes one name")
            name = rest[0]
        elif head == "params":
            a = _attrs(no, rest)
            if set(a) != {"vm", "delta", "cl"}:
                raise ParseError(no, "params needs exactly vm=, delta= and cl=")
            try:
                params = SimParams(parse_rational(a["vm"]), parse_rational(a["delta"]), int(a["cl"]))
            except ValueError as exc:
                raise ParseError(no, str(exc)) from None
        elif head == "input":
            for n in rest:
                inputs.append(_net(no, n))
                drive(no, n)
        elif head == "output":
            outputs.extend(_net(no, n) for n in rest)
        elif head == "ctrl":
            if not rest:
                raise ParseError(no, "ctrl needs <net>=<0|1|free>")
            net, _, val = rest[0].partition("=")
            _net(no, net)
            if val not in ("0", "1", "free"):
                raise ParseError(no, f"control value must be 0, 1 or free, got {val!r}")
            extra = _attrs(no, rest[1:])
            if set(extra) - {"default"} or extra.get("default", "0") not in ("0", "1"):
                raise ParseError(no, "ctrl accepts only default=<0|1>")
            default = int(extra["default"]) if "default" in extra else None
            controls.append(Control(net, None if val == "free" else int(val), default))
            drive(no, net)
        elif head == "gate":
            if not rest:
                raise ParseError(no, "gate needs an id")
            inst_id, a = rest[0], _attrs(no, rest[1:])
            claim(no, inst_id)
            tname = a.pop("template", None)
            phase = a.pop("phase", None)
            if tname is None or phase is None:
                raise ParseError(no, "gate needs template= and phase=")
            if tname not in library:
                raise UnknownTemplate(no, f"unknown template {tname!r}")
            if phase not in ("0", "1"):
                raise ParseError(no, f"phase must be 0 or 1, got {phase!r}")
            t = library[tname]
            try:
                pins = ordered_pins(t, {p: _net(no, n) for p, n in a.items()})
            except KeyError as exc:
                raise ParseError(no, f"template {tname} has no port {exc.args[0]}") from None
            missing = [p for p in t.port_names + t.control_names if p not in a]
            if missing:
                raise ParseError(no, f"gate {inst_id} leaves port(s) {', '.join(missing)} unbound")
            for p, n in pins:
                if p in t.output_ports:
                    drive(no, n)
            instances.append(Gate(inst_id, tname, int(phase), pins))
        elif head in ("inv", "buf"):
            if not rest:
                raise ParseError(no, f"{head} needs an id")
            inst_id, a = rest[0], _attrs(no, rest[1:])
            claim(no, inst_id)
            want = {"in", "out"} | ({"drive"} if head == "buf" else set())
            if set(a) != want:
                raise ParseError(no, f"{head} needs exactly {', '.join(sorted(want))}")
            src, dst = _net(no, a["in"]), _net(no, a["out"])
            drive(no, dst)
            if head == "inv":
                instances.append(Inverter(inst_id, src, dst))
            else:
                if not a["drive"].isdigit() or int(a["drive"]) < 1:
                    raise ParseError(no, "buffer drive must be a positive integer")
                instances.append(Buffer(inst_id, src, dst, int(a["drive"])))
        else:
            raise ParseError(no, f"unknown statement {head!r}")
    if not seen_header:
        raise ParseError(1, "missing 'xtn 1' header")
    return CrosstalkNetlist(name, params or library.params, tuple(inputs), tuple(outputs),
                            tuple(controls), tuple(instances))


def serialize_xtn(netlist: CrosstalkNetlist) -> str:
    p = netlist.params
    lines = ["xtn 1", f"design {netlist.name}",
             f"params vm={p.vm} delta={p.delta_min} cl={p.c_load}"]
    if netlist.inputs:
        lines.append("input " + " ".join(netlist.inputs))
    if netlist.outputs:
        lines.append("output " + " ".join(netlist.outputs))
    for c in netlist.controls:
        val = "free" if c.value is None else str(c.value)
        line = f"ctrl {c.net}={val}"
        if c.default is not None:
            line += f" default={c.default}"
        lines.append(line)
    for inst in netlist.instances:
        if isinstance(inst, Gate):
            pins = " ".join(f"{p}={n}" for p, n in inst.pins)
            lines.append(f"gate {inst.id} template={inst.template} phase={inst.phase} {pins}")
        elif isinstance(inst, Inverter):
            lines.append(f"inv {inst.id} in={inst.input} out={inst.output}")
        else:
            lines.append(f"buf {inst.id} in={inst.input} out={inst.output} drive={inst.drive}")
    return "\n".join(lines) + "\n"
