"""Structural checks, levelization and phase bookkeeping for crosstalk netlists."""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter

from ..errors import CycleDetected
from ..gatelib.model import CompositeNode, template_modes, mode_consistency
from .ir import Gate, driver_map, instance_io, sink_map

ERROR = "error"
WARNING = "warning"
DEFAULT_FANOUT_LIMIT = 4


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    location: str
    message: str

    def __str__(self):
        return f"{self.severity}: {self.location}: {self.message}"


@dataclass
class Diagnostics:
    items: list = field(default_factory=list)

    def add(self, severity, location, message):
        self.items.append(Diagnostic(severity, location, message))

    @property
    def errors(self):
        return [d for d in self.items if d.severity == ERROR]

    @property
    def warnings(self):
        return [d for d in self.items if d.severity == WARNING]

    @property
    def ok(self) -> bool:
        return not self.errors

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __str__(self):
        return "\n".join(map(str, self.items))


def stage0_ports(template) -> tuple:
    """Data ports read by the first crosstalk stage of a cell."""
    if template.composite is None:
        return template.port_names
    stages = template.composite.node_stages()
    ports = set(template.port_names)
    read = set()
    for e in template.composite.elements:
        if isinstance(e, CompositeNode) and stages[e.name] == 0:
            read.update(s for s in e.inputs if s in ports)
    return tuple(p for p in template.port_names if p in read)


def output_stage(template, port) -> int:
    return 0 if template.composite is None else template.composite.output_stage(port)


def _instance_order(netlist, library):
    drivers = driver_map(netlist, library)
    deps = {}
    for inst in netlist.instances:
        ins, _ = instance_io(inst, library)
        deps[inst.id] = {drivers[n][0].id for n in ins if n in drivers}
    try:
        order = list(TopologicalSorter(deps).static_order())
    except CycleError as exc:
        cyc = exc.args[1]
        nets = []
        by_id = {i.id: i for i in netlist.instances}
        for a, b in zip(cyc, cyc[1:]):
            # each listed instance is a predecessor (driver) of the next
            _, outs = instance_io(by_id[a], library)
            ins, _ = instance_io(by_id[b], library)
            nets.extend(n for n in outs if n in ins)
        raise CycleDetected(nets or cyc) from None
    by_id = {i.id: i for i in netlist.instances}
    return [by_id[i] for i in order], drivers


def net_levels(netlist, library):
    """(gate level by id, crosstalk level of each net) with statics transparent.

    A net carries the level of the victim stage that last latched it, or None
    when it is fed only by primary inputs or controls.
    """
    order, _ = _instance_order(netlist, library)
    out_level, levels = {}, {}
    for inst in order:
        if not isinstance(inst, Gate):
            out_level[inst.output] = out_level.get(inst.input)
            continue
        t = library[inst.template]
        pin = dict(inst.pins)
        if t.composite is None:
            cands = [out_level[pin[p]] + 1 for p in t.port_names
                     if out_level.get(pin[p]) is not None]
        else:
            stages = t.composite.node_stages()
            cands = []
            for e in t.composite.elements:
                if not isinstance(e, CompositeNode):
                    continue
                for s in e.inputs:
                    if s in pin and out_level.get(pin[s]) is not None:
                        cands.append(out_level[pin[s]] + 1 - stages[e.name])
        base = max([0] + cands)
        levels[inst.id] = base
        for p in t.output_ports:
            if p in pin:
                out_level[pin[p]] = base + output_stage(t, p)
    return levels, out_level


def levelize(netlist, library) -> dict:
    """Level of every crosstalk gate: 1 + max level of crosstalk ancestors.

    For composite cells the level is that of the first internal stage.
    Raises :class:`CycleDetected` with the nets of a cycle.
    """
    return net_levels(netlist, library)[0]


def stage_levels(netlist, library) -> dict:
    """Level of every victim node, keyed ``(instance id, node name)``."""
    levels = levelize(netlist, library)
    out = {}
    for g in netlist.gates():
        t = library[g.template]
        if t.composite is None:
            out[(g.id, None)] = levels[g.id]
        else:
            for name, s in t.composite.node_stages().items():
                out[(g.id, name)] = levels[g.id] + s
    return out


def max_level(netlist, library) -> int:
    stages = stage_levels(netlist, library)
    return max(stages.values(), default=-1)


def trace_source(net, drivers, library):
    """Follow statics back to the crosstalk gate output feeding ``net``."""
    seen = set()
    while net in drivers and net not in seen:
        seen.add(net)
        inst, port = drivers[net]
        if isinstance(inst, Gate):
            return inst, port
        net = inst.input
    return None


def validate(netlist, library, fanout_limit: int = DEFAULT_FANOUT_LIMIT) -> Diagnostics:
    diag = Diagnostics()
    controls = {c.net: c for c in netlist.controls}
    ids = set()
    drivers = {}
    for n in netlist.inputs:
        drivers.setdefault(n, []).append("input")
    for c in netlist.controls:
        drivers.setdefault(c.net, []).append("ctrl")

    known = []
    for inst in netlist.instances:
        if inst.id in ids:
            diag.add(ERROR, inst.id, "duplicate instance id")
        ids.add(inst.id)
        if isinstance(inst, Gate):
            if inst.template not in library:
                diag.add(ERROR, inst.id, f"unknown template {inst.template!r}")
                continue
            t = library[inst.template]
            pin = dict(inst.pins)
            if len(pin) != len(inst.pins):
                diag.add(ERROR, inst.id, "port bound twice")
            valid = set(t.port_names) | set(t.control_names) | set(t.output_ports)
            for p in pin:
                if p not in valid:
                    diag.add(ERROR, inst.id, f"template {t.name} has no port {p}")
            for p in t.port_names + t.control_names:
                if p not in pin:
                    diag.add(ERROR, inst.id, f"port {p} of {t.name} is unbound "
                             f"({t.n_inputs} data, {len(t.control_ports)} control ports expected)")
            if not any(p in pin for p in t.output_ports):
                diag.add(WARNING, inst.id, "no output port connected")
            if inst.phase not in (0, 1):
                diag.add(ERROR, inst.id, f"phase must be 0 or 1, got {inst.phase}")
            for p in t.control_names:
                n = pin.get(p)
                if n is not None and n not in controls:
                    diag.add(ERROR, inst.id, f"control port {p} bound to non-control net {n}")
            for p in t.port_names:
                c = controls.get(pin.get(p))
                if c is not None and c.free:
                    diag.add(ERROR, inst.id, f"free control net {c.net} drives data port {p}")
            for p in t.output_ports:
                if p in pin:
                    drivers.setdefault(pin[p], []).append(inst.id)
        else:
            c = controls.get(inst.input)
            if c is not None and c.free:
                diag.add(ERROR, inst.id, f"free control net {c.net} drives a static stage")
            if getattr(inst, "drive", 1) < 1:
                diag.add(ERROR, inst.id, "buffer drive must be positive")
            drivers.setdefault(inst.output, []).append(inst.id)
        known.append(inst)

    for net, who in drivers.items():
        if len(who) > 1:
            diag.add(ERROR, net, f"net has {len(who)} drivers: {', '.join(who)}")
    for inst in known:
        if isinstance(inst, Gate) and inst.template not in library:
            continue
        ins, _ = instance_io(inst, library)
        for n in ins:
            if n not in drivers:
                diag.add(ERROR, inst.id, f"input net {n} is undriven")
    for n in netlist.outputs:
        if n not in drivers:
            diag.add(ERROR, n, "primary output is undriven")
    if not diag.ok:
        return diag

    try:
        net_levels(netlist, library)
    except CycleDetected as exc:
        diag.add(ERROR, exc.cycle[0] if exc.cycle else "?", str(exc))
        return diag

    dmap = driver_map(netlist, library)
    for g in netlist.gates():
        t = library[g.template]
        pin = dict(g.pins)
        for p in stage0_ports(t):
            src = trace_source(pin[p], dmap, library)
            if src is None:
                continue
            u, port = src
            up = (u.phase + output_stage(library[u.template], port)) % 2
            if up == g.phase:
                diag.add(ERROR, g.id, f"phase alternation violated: {u.id} and {g.id} both "
                         f"evaluate in phase {up} across net {pin[p]}")

    sinks = sink_map(netlist, library)
    for g in netlist.gates():
        t = library[g.template]
        for p, n in g.pins:
            if p in t.output_ports:
                k = len(sinks.get(n, ()))
                if k > fanout_limit:
                    diag.add(WARNING, n, f"crosstalk output fans out to {k} sinks "
                             f"(limit {fanout_limit}) without a buffer")

    checked = set()
    for g in netlist.gates():
        if g.template in checked:
            continue
        checked.add(g.template)
        for label, mode in template_modes(library[g.template]):
            report = mode_consistency(mode, netlist.params, label)
            if not report.passed:
                diag.add(ERROR, g.template, "mode inconsistent under netlist params: " +
                         "; ".join(f"{''.join(map(str, v.inputs))} V={v.voltage}"
                                   for v in report.violations))
    return diag
