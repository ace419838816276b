"""Crosstalk cell data types and the two evaluation models.

A single crosstalk node is a floating victim line with coupled aggressors.
Two views of the same node are kept side by side:

* the *behavioral* (margin) view: the node flips iff the summed coupling
  weight of the logic-1 aggressors reaches the mode's margin;
* the *analytical* (charge-sharing) view: the victim settles at
  ``sum(high weights) / (sum(all weights) + aux_load + c_load)`` and the
  output inverter flips iff that voltage is at least ``vm``.

All capacitances are integers in tenths of the unit coupling capacitance
(deci-C_u) and all voltages are exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from ..errors import InconsistentMode, LibraryError, ModeNotFound

DATA = "data"
CONTROL = "control"


@dataclass(frozen=True)
class SimParams:
    """Global electrical parameters, normalized to VDD = 1."""

    vm: Fraction = Fraction(3, 10)
    delta_min: Fraction = Fraction(1, 50)
    c_load: int = 1
    vdd_norm: Fraction = field(default=Fraction(1), init=False)

    def __post_init__(self):
        object.__setattr__(self, "vm", Fraction(self.vm))
        object.__setattr__(self, "delta_min", Fraction(self.delta_min))
        if not 0 < self.vm < 1:
            raise ValueError(f"vm must lie in (0, 1), got {self.vm}")
        if self.delta_min < 0:
            raise ValueError("delta_min must be nonnegative")
        if not (self.vm - self.delta_min > 0 and self.vm + self.delta_min < 1):
            raise ValueError("vm +/- delta_min must stay inside (0, 1)")
        if not isinstance(self.c_load, int) or self.c_load < 0:
            raise ValueError("c_load must be a nonnegative integer")


DEFAULT_PARAMS = SimParams()


@dataclass(frozen=True)
class AggressorPort:
    name: str
    kind: str
    weight: int

    def __post_init__(self):
        if self.kind not in (DATA, CONTROL):
            raise LibraryError(f"port {self.name}: unknown kind {self.kind!r}")
        if self.weight < 1:
            raise LibraryError(f"port {self.name}: weight must be >= 1")


@dataclass(frozen=True)
class GateMode:
    mode_id: int
    control_assignment: tuple
    data_weights: tuple
    aux_load: int
    margin: int

    def __post_init__(self):
        object.__setattr__(self, "control_assignment", tuple(self.control_assignment))
        object.__setattr__(self, "data_weights", tuple(self.data_weights))
        if any(w < 1 for w in self.data_weights):
            raise LibraryError(f"mode {self.mode_id}: data weights must be positive")
        if self.aux_load < 0:
            raise LibraryError(f"mode {self.mode_id}: aux_load must be nonnegative")
        if not 1 <= self.margin <= sum(self.data_weights):
            raise LibraryError(
                f"mode {self.mode_id}: margin {self.margin} outside [1, {sum(self.data_weights)}]")

    def total(self) -> int:
        return sum(self.data_weights) + self.aux_load

    def flips(self, inputs: Sequence[int]) -> bool:
        return sum(w for w, x in zip(self.data_weights, inputs) if x) >= self.margin

    def voltage(self, inputs: Sequence[int], params: SimParams) -> Fraction:
        high = sum(w for w, x in zip(self.data_weights, inputs) if x)
        return Fraction(high, sum(self.data_weights) + self.aux_load + params.c_load)

    def flip_table(self) -> tuple:
        return tuple(int(self.flips(x)) for x in input_vectors(len(self.data_weights)))


@dataclass(frozen=True)
class CompositeNode:
    """One victim node inside a multi-node cell.

    ``inputs`` name template ports or earlier elements of the same cell.
    """

    name: str
    inputs: tuple
    mode: GateMode
    output_inverted: bool = True


@dataclass(frozen=True)
class CompositeInverter:
    name: str
    input: str


@dataclass(frozen=True)
class Composite:
    elements: tuple
    outputs: tuple  # ((port, element name), ...)

    def element(self, name):
        for e in self.elements:
            if e.name == name:
                return e
        raise KeyError(name)

    def node_stages(self) -> dict:
        """Crosstalk depth of every internal node (0 = fed only by ports)."""
        stage, out_stage = {}, {}
        for e in self.elements:
            if isinstance(e, CompositeNode):
                prior = [out_stage[s] for s in e.inputs if s in out_stage]
                stage[e.name] = 1 + max(prior) if prior else 0
                out_stage[e.name] = stage[e.name]
            else:
                if e.input in out_stage:
                    out_stage[e.name] = out_stage[e.input]
        return stage

    def output_stage(self, port) -> int:
        """Stage of the victim node whose value reaches output ``port``."""
        stages = self.node_stages()
        sig = dict(self.outputs)[port]
        while True:
            e = self.element(sig)
            if isinstance(e, CompositeNode):
                return stages[e.name]
            sig = e.input


@dataclass(frozen=True)
class GateTemplate:
    name: str
    data_ports: tuple
    control_ports: tuple = ()
    modes: tuple = ()
    output_inverted: bool = True
    declared_cost: Optional[int] = None
    composite: Optional[Composite] = None
    output_ports: tuple = ("Y",)

    def __post_init__(self):
        for attr in ("data_ports", "control_ports", "modes", "output_ports"):
            object.__setattr__(self, attr, tuple(getattr(self, attr)))
        names = [p.name for p in self.data_ports + self.control_ports] + list(self.output_ports)
        if len(set(names)) != len(names):
            raise LibraryError(f"template {self.name}: duplicate port names")
        if any(p.kind != DATA for p in self.data_ports) or any(
                p.kind != CONTROL for p in self.control_ports):
            raise LibraryError(f"template {self.name}: port kinds do not match their lists")
        if self.declared_cost is not None and self.declared_cost < 1:
            raise LibraryError(f"template {self.name}: declared_cost must be positive")
        if self.composite is not None:
            if self.modes or self.control_ports:
                raise LibraryError(f"composite {self.name} cannot carry modes or controls")
            return
        if len(self.output_ports) != 1:
            raise LibraryError(f"template {self.name}: single-node cells have one output")
        n_ctrl = len(self.control_ports)
        assignments = sorted(m.control_assignment for m in self.modes)
        if assignments != sorted(itertools.product((0, 1), repeat=n_ctrl)):
            raise LibraryError(f"template {self.name}: need exactly one mode per control assignment")
        if len({m.mode_id for m in self.modes}) != len(self.modes):
            raise LibraryError(f"template {self.name}: duplicate mode ids")
        for m in self.modes:
            if len(m.data_weights) != len(self.data_ports):
                raise LibraryError(f"template {self.name}: mode {m.mode_id} weight arity")

    @property
    def n_inputs(self) -> int:
        return len(self.data_ports)

    @property
    def is_composite(self) -> bool:
        return self.composite is not None

    @property
    def is_polymorphic(self) -> bool:
        return bool(self.control_ports)

    @property
    def port_names(self) -> tuple:
        return tuple(p.name for p in self.data_ports)

    @property
    def control_names(self) -> tuple:
        return tuple(p.name for p in self.control_ports)

    def mode(self, mode_id) -> GateMode:
        for m in self.modes:
            if m.mode_id == mode_id:
                return m
        raise ModeNotFound(self.name, mode_id)

    def mode_for(self, controls: Sequence[int]) -> GateMode:
        controls = tuple(controls)
        for m in self.modes:
            if m.control_assignment == controls:
                return m
        raise ModeNotFound(self.name, controls)

    def evaluate(self, inputs: Sequence[int], controls: Sequence[int] = ()) -> tuple:
        """Logic value of every output port for one input vector."""
        if len(inputs) != self.n_inputs:
            raise ValueError(f"{self.name} expects {self.n_inputs} inputs, got {len(inputs)}")
        if self.composite is None:
            m = self.mode_for(controls)
            flip = m.flips(inputs)
            return (int(not flip) if self.output_inverted else int(flip),)
        values = dict(zip(self.port_names, inputs))
        for e in self.composite.elements:
            if isinstance(e, CompositeNode):
                flip = e.mode.flips([values[s] for s in e.inputs])
                values[e.name] = int(not flip) if e.output_inverted else int(flip)
            else:
                values[e.name] = 1 - values[e.input]
        return tuple(values[sig] for _, sig in self.composite.outputs)

    def function(self, controls: Sequence[int] = ()) -> tuple:
        """Truth table per output port (tuple of tables) in the given mode."""
        rows = [self.evaluate(x, controls) for x in input_vectors(self.n_inputs)]
        return tuple(tuple(r[k] for r in rows) for k in range(len(self.output_ports)))


def input_vectors(n: int) -> Iterator[tuple]:
    """All ``2**n`` input vectors; the first input is the most significant bit."""
    return itertools.product((0, 1), repeat=n)


def margin_eval(template: GateTemplate, mode_id, inputs: Sequence[int]) -> int:
    """Behavioral flip decision (pre-inverter) of a single-node template."""
    _single(template)
    if len(inputs) != template.n_inputs:
        raise ValueError(f"{template.name} expects {template.n_inputs} inputs")
    return int(template.mode(mode_id).flips(inputs))


def node_output(template: GateTemplate, mode_id, inputs: Sequence[int]) -> int:
    """Post-inverter output of a single-node template."""
    flip = margin_eval(template, mode_id, inputs)
    return 1 - flip if template.output_inverted else flip


def victim_voltage(template: GateTemplate, mode_id, inputs: Sequence[int],
                   params: SimParams = DEFAULT_PARAMS) -> Fraction:
    _single(template)
    if len(inputs) != template.n_inputs:
        raise ValueError(f"{template.name} expects {template.n_inputs} inputs")
    return template.mode(mode_id).voltage(inputs, params)


@dataclass(frozen=True)
class Violation:
    inputs: tuple
    voltage: Fraction
    flip: bool
    reason: str


@dataclass(frozen=True)
class ConsistencyReport:
    template: str
    mode_id: int
    violations: tuple
    worst_slack: Fraction

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"{self.template}[{self.mode_id}]: PASS (slack {self.worst_slack})"
        lines = [f"{self.template}[{self.mode_id}]: FAIL"]
        for v in self.violations:
            bits = "".join(map(str, v.inputs))
            lines.append(f"  {bits}: V={v.voltage} ({float(v.voltage):.4f}) {v.reason}")
        return "\n".join(lines)


def mode_consistency(mode: GateMode, params: SimParams, name="<mode>") -> ConsistencyReport:
    violations = []
    slack = None
    for x in input_vectors(len(mode.data_weights)):
        v = mode.voltage(x, params)
        flip = mode.flips(x)
        sep = abs(v - params.vm)
        slack = sep if slack is None else min(slack, sep)
        if flip != (v >= params.vm):
            reason = "margin says flip, voltage below vm" if flip else \
                "voltage reaches vm, margin says no flip"
            violations.append(Violation(x, v, flip, reason))
        elif sep < params.delta_min:
            violations.append(Violation(x, v, flip, f"separation {sep} < delta_min"))
    return ConsistencyReport(name, mode.mode_id, tuple(violations), slack)


def check_consistency(template: GateTemplate, mode_id,
                      params: SimParams = DEFAULT_PARAMS) -> ConsistencyReport:
    _single(template)
    return mode_consistency(template.mode(mode_id), params, template.name)


def noise_margin(template: GateTemplate, mode_id, params: SimParams = DEFAULT_PARAMS) -> Fraction:
    report = check_consistency(template, mode_id, params)
    if not report.passed:
        raise InconsistentMode(report.describe())
    return report.worst_slack


def template_modes(template: GateTemplate) -> list:
    """(label, mode) for every victim node of a template, composites included."""
    if template.composite is None:
        return [(f"{template.name}[{m.mode_id}]", m) for m in template.modes]
    return [(f"{template.name}/{e.name}", e.mode) for e in template.composite.elements
            if isinstance(e, CompositeNode)]


def _single(template):
    if template.composite is not None:
        raise LibraryError(f"{template.name} is a composite cell; evaluate its nodes individually")
