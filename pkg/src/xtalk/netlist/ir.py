"""Mapped crosstalk netlist IR.

Instances are immutable; transformations build new netlists with
:func:`dataclasses.replace`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from ..gatelib.model import DEFAULT_PARAMS, SimParams


@dataclass(frozen=True)
class Gate:
    """A crosstalk cell instance.

    ``pins`` holds ``(port, net)`` pairs in template order: data ports,
    control ports, then whichever output ports are connected.
    """

    id: str
    template: str
    phase: int
    pins: tuple

    def net(self, port) -> Optional[str]:
        for p, n in self.pins:
            if p == port:
                return n
        return None


@dataclass(frozen=True)
class Inverter:
    id: str
    input: str
    output: str


@dataclass(frozen=True)
class Buffer:
    id: str
    input: str
    output: str
    drive: int = 1


@dataclass(frozen=True)
class Control:
    """A control net; ``value`` None means free (a runtime key bit)."""

    net: str
    value: Optional[int] = None
    default: Optional[int] = None

    @property
    def free(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class CrosstalkNetlist:
    name: str = "top"
    params: SimParams = DEFAULT_PARAMS
    inputs: tuple = ()
    outputs: tuple = ()
    controls: tuple = ()
    instances: tuple = field(default=())

    def gates(self):
        return [i for i in self.instances if isinstance(i, Gate)]

    def statics(self):
        return [i for i in self.instances if not isinstance(i, Gate)]

    def instance(self, inst_id):
        for i in self.instances:
            if i.id == inst_id:
                return i
        raise KeyError(inst_id)

    def free_controls(self) -> tuple:
        return tuple(c.net for c in self.controls if c.free)

    def control(self, net) -> Optional[Control]:
        for c in self.controls:
            if c.net == net:
                return c
        return None

    def with_instances(self, instances) -> "CrosstalkNetlist":
        return replace(self, instances=tuple(instances))


def instance_io(inst, library):
    """(input nets, output nets) of an instance; gate inputs include controls."""
    if isinstance(inst, Gate):
        t = library[inst.template]
        outs = set(t.output_ports)
        ins = [n for p, n in inst.pins if p not in outs]
        return ins, [n for p, n in inst.pins if p in outs]
    return [inst.input], [inst.output]


def driver_map(netlist: CrosstalkNetlist, library) -> dict:
    """net -> (instance, port) for every instance-driven net (first driver wins)."""
    drivers = {}
    for inst in netlist.instances:
        if isinstance(inst, Gate):
            t = library[inst.template]
            for p, n in inst.pins:
                if p in t.output_ports:
                    drivers.setdefault(n, (inst, p))
        else:
            drivers.setdefault(inst.output, (inst, None))
    return drivers


def sink_map(netlist: CrosstalkNetlist, library) -> dict:
    """net -> list of (instance, port) reading it."""
    sinks = {}
    for inst in netlist.instances:
        if isinstance(inst, Gate):
            t = library[inst.template]
            for p, n in inst.pins:
                if p not in t.output_ports:
                    sinks.setdefault(n, []).append((inst, p))
        else:
            sinks.setdefault(inst.input, []).append((inst, "in"))
    return sinks


def ordered_pins(template, mapping: dict) -> tuple:
    """Pins in canonical template order; unknown ports raise KeyError."""
    order = list(template.port_names) + list(template.control_names) + list(template.output_ports)
    unknown = set(mapping) - set(order)
    if unknown:
        raise KeyError(sorted(unknown)[0])
    return tuple((p, mapping[p]) for p in order if p in mapping)
