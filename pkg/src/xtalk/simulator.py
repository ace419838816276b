"""Two-phase cycle simulation of crosstalk netlists.

Every crosstalk victim belongs to phase group 0 or 1.  In half-cycle ``h``
the group ``h % 2`` evaluates (victims float, aggressors couple, outputs are
latched at the end of the half-cycle) while the other group discharges: its
victims sit at 0 V but the latched outputs hold.  Inverters and buffers are
zero-delay and settle inside the half-cycle.

Net values are Python ints used as bit vectors, so one simulation pass can
carry many independent input vectors ("lanes").  Victim voltages are only
tracked for single-lane runs.
"""

from __future__ import annotations

import csv
import hashlib
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from graphlib import TopologicalSorter
from typing import Optional

from .errors import InterfaceMismatch, StimulusWidthMismatch, UndrivenNet
from .gatelib.library import builtin_library
from .gatelib.model import CompositeNode, input_vectors
from .netlist.checks import stage_levels
from .netlist.ir import Gate, Inverter
from .netlist.xtn import serialize_xtn

DEFAULT_SEED = 0xC0FFEE
DEFAULT_RANDOM_VECTORS = 10000
EXHAUSTIVE_LIMIT = 16


@dataclass(frozen=True)
class _Node:
    id: str
    phase: int
    level: int
    inputs: tuple
    controls: tuple
    modes: tuple           # GateMode, ordered like ``selectors``
    selectors: tuple       # control assignment of each mode
    covers: tuple          # per mode: minimal flipping input subsets
    inverted: bool
    output: str


@dataclass(frozen=True)
class _Static:
    id: str
    input: str
    output: str
    invert: bool


def _minimal_true_sets(mode):
    n = len(mode.data_weights)
    trues = [x for x in input_vectors(n) if mode.flips(x)]
    sets = [frozenset(i for i in range(n) if x[i]) for x in trues]
    return tuple(tuple(sorted(s)) for s in sets if not any(o < s for o in sets))


class Compiled:
    """A netlist flattened into victim nodes and ordered static stages."""

    def __init__(self, netlist, library=None):
        library = library if library is not None else builtin_library()
        self.netlist = netlist
        self.library = library
        levels = stage_levels(netlist, library)
        nodes, statics = [], []
        for inst in netlist.instances:
            if isinstance(inst, Gate):
                self._flatten(inst, library[inst.template], levels, nodes, statics)
            else:
                statics.append(_Static(inst.id, inst.input, inst.output, isinstance(inst, Inverter)))
        self.nodes = tuple(nodes)
        self.statics = self._order(statics)
        self.node_nets = {n.output for n in nodes}
        driven = set(netlist.inputs) | {c.net for c in netlist.controls} | self.node_nets | {
            s.output for s in statics}
        for n in nodes:
            for net in n.inputs + n.controls:
                if net not in driven:
                    raise UndrivenNet(net)
        for s in statics:
            if s.input not in driven:
                raise UndrivenNet(s.input)
        self.max_level = max((n.level for n in nodes), default=-1)
        self.parity_aligned = all(n.phase == n.level % 2 for n in nodes)
        names = list(netlist.inputs) + [c.net for c in netlist.controls]
        for inst in netlist.instances:
            outs = [n for p, n in inst.pins if p in library[inst.template].output_ports] \
                if isinstance(inst, Gate) else [inst.output]
            names.extend(n for n in outs if n not in names)
        self.nets = tuple(names)
        self.all_nets = tuple(dict.fromkeys(
            names + [n.output for n in nodes] + [s.output for s in self.statics]))

    def _flatten(self, gate, t, levels, nodes, statics):
        pin = dict(gate.pins)
        ctrl = tuple(pin[p] for p in t.control_names)
        if t.composite is None:
            modes = tuple(t.modes)
            nodes.append(_Node(gate.id, gate.phase, levels[(gate.id, None)],
                               tuple(pin[p] for p in t.port_names), ctrl, modes,
                               tuple(m.control_assignment for m in modes),
                               tuple(_minimal_true_sets(m) for m in modes),
                               t.output_inverted, pin.get(t.output_ports[0], f"{gate.id}/Y")))
            return
        outputs = {sig: pin[p] for p, sig in t.composite.outputs if p in pin}
        stages = t.composite.node_stages()
        local = {p: pin[p] for p in t.port_names}
        for e in t.composite.elements:
            local[e.name] = outputs.get(e.name, f"{gate.id}/{e.name}")
        for e in t.composite.elements:
            if isinstance(e, CompositeNode):
                nodes.append(_Node(f"{gate.id}/{e.name}", (gate.phase + stages[e.name]) % 2,
                                   levels[(gate.id, e.name)], tuple(local[s] for s in e.inputs),
                                   (), (e.mode,), ((),), (_minimal_true_sets(e.mode),),
                                   e.output_inverted, local[e.name]))
            else:
                statics.append(_Static(f"{gate.id}/{e.name}", local[e.input], local[e.name], True))

    @staticmethod
    def _order(statics):
        by_out = {s.output: s for s in statics}
        deps = {s.id: {by_out[s.input].id} if s.input in by_out else set() for s in statics}
        order = list(TopologicalSorter(deps).static_order())
        by_id = {s.id: s for s in statics}
        return tuple(by_id[i] for i in order)

    def default_settle(self) -> int:
        extra = 1 if self.parity_aligned else 2
        return max(1, math.ceil((self.max_level + extra) / 2))

    def hash(self) -> str:
        return hashlib.sha256(serialize_xtn(self.netlist).encode()).hexdigest()[:16]


@dataclass
class SimState:
    compiled: Compiled
    values: dict
    width: int = 1
    victims: dict = field(default_factory=dict)

    @property
    def mask(self) -> int:
        return (1 << self.width) - 1


def _propagate(compiled, values, mask):
    for s in compiled.statics:
        v = values[s.input]
        values[s.output] = ~v & mask if s.invert else v


def initial_state(compiled: Compiled, width: int = 1, assignments: Optional[dict] = None) -> SimState:
    """All nets and latches at 0, tied controls applied, statics settled."""
    mask = (1 << width) - 1
    values = {n: 0 for n in compiled.all_nets}
    for c in compiled.netlist.controls:
        if c.value is not None:
            values[c.net] = mask if c.value else 0
    for net, word in (assignments or {}).items():
        values[net] = word & mask
    _propagate(compiled, values, mask)
    victims = {n.id: Fraction(0) for n in compiled.nodes} if width == 1 else {}
    return SimState(compiled, values, width, victims)


def apply_inputs(state: SimState, assignments: dict) -> SimState:
    values = dict(state.values)
    for net, word in assignments.items():
        values[net] = word & state.mask
    _propagate(state.compiled, values, state.mask)
    return replace(state, values=values)


def _flip_word(node, values, mask):
    ins = [values[n] for n in node.inputs]
    out = 0
    for sel, cover in zip(node.selectors, node.covers):
        pick = mask
        for bit, c in zip(sel, node.controls):
            pick &= values[c] if bit else ~values[c] & mask
        if not pick:
            continue
        flip = 0
        for subset in cover:
            term = pick
            for i in subset:
                term &= ins[i]
            flip |= term
        out |= flip
    return out


def step(state: SimState, half_cycle_index: int) -> SimState:
    """Advance one half-cycle: group ``half_cycle_index % 2`` evaluates."""
    compiled, mask = state.compiled, state.mask
    group = half_cycle_index % 2
    latched = {}
    victims = {}
    for node in compiled.nodes:
        if node.phase != group:
            if state.width == 1:
                victims[node.id] = Fraction(0)
            continue
        flip = _flip_word(node, state.values, mask)
        latched[node.output] = ~flip & mask if node.inverted else flip
        if state.width == 1:
            bits = [state.values[n] & 1 for n in node.inputs]
            ctrl = tuple(state.values[c] & 1 for c in node.controls)
            mode = node.modes[node.selectors.index(ctrl)]
            victims[node.id] = mode.voltage(bits, compiled.netlist.params)
    values = dict(state.values)
    values.update(latched)
    _propagate(compiled, values, mask)
    return SimState(compiled, values, state.width, victims)


# -- stimulus and traces ----------------------------------------------------

@dataclass(frozen=True)
class Stimulus:
    inputs: tuple
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "rows", tuple(tuple(int(b) for b in r) for r in self.rows))
        for i, r in enumerate(self.rows):
            if len(r) != len(self.inputs):
                raise StimulusWidthMismatch(
                    f"row {i} has {len(r)} bits for {len(self.inputs)} inputs")
            if set(r) - {0, 1}:
                raise StimulusWidthMismatch(f"row {i} holds non-binary values")


def parse_stimulus(text: str) -> Stimulus:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("inputs"):
        raise StimulusWidthMismatch("stimulus must start with 'inputs <net>...'")
    names = lines[0].split()[1:]
    rows = []
    for ln in lines[1:]:
        bits = ln.replace(" ", "")
        if set(bits) - {"0", "1"}:
            raise StimulusWidthMismatch(f"bad stimulus row {ln!r}")
        rows.append(tuple(int(b) for b in bits))
    return Stimulus(tuple(names), tuple(rows))


@dataclass(frozen=True)
class TraceStep:
    half_cycle: int
    row: int
    values: tuple
    victims: tuple
    dis: tuple


@dataclass(frozen=True)
class SimTrace:
    design: str
    nets: tuple
    victim_ids: tuple
    steps: tuple
    params: object
    netlist_hash: str
    settle_periods: int
    outputs: tuple

    def __len__(self):
        return len(self.steps)

    def value(self, step_index, net) -> int:
        return self.steps[step_index].values[self.nets.index(net)]

    def samples(self) -> list:
        """Primary-output values at the end of each stimulus row."""
        per_row = 2 * self.settle_periods
        idx = [self.nets.index(o) for o in self.outputs]
        return [tuple(self.steps[k].values[i] for i in idx)
                for k in range(per_row - 1, len(self.steps), per_row)]


def _control_values(netlist, supplied):
    values = {}
    for c in netlist.controls:
        if c.value is None and c.net not in supplied:
            if c.default is None:
                raise InterfaceMismatch([f"free control {c.net} has no value or default key"])
            values[c.net] = c.default
    return values


def run(netlist, stimulus: Stimulus, settle_periods: Optional[int] = None,
        library=None) -> SimTrace:
    compiled = Compiled(netlist, library)
    allowed = set(netlist.inputs) | set(netlist.free_controls())
    unknown = [n for n in stimulus.inputs if n not in allowed]
    missing = [n for n in netlist.inputs if n not in stimulus.inputs]
    if unknown or missing:
        raise InterfaceMismatch([f"unknown stimulus net {n}" for n in unknown] +
                                [f"input {n} missing from stimulus" for n in missing])
    settle = settle_periods if settle_periods is not None else compiled.default_settle()
    if settle < 1:
        raise ValueError("settle_periods must be at least 1")
    fixed = _control_values(netlist, set(stimulus.inputs))
    state = initial_state(compiled, 1, fixed)
    node_ids = tuple(n.id for n in compiled.nodes)
    steps, h = [], 0
    for r, row in enumerate(stimulus.rows):
        state = apply_inputs(state, dict(zip(stimulus.inputs, row)))
        for _ in range(2 * settle):
            state = step(state, h)
            steps.append(TraceStep(h, r, tuple(state.values[n] for n in compiled.nets),
                                   tuple(state.victims[i] for i in node_ids),
                                   (int(h % 2 == 1), int(h % 2 == 0))))
            h += 1
    return SimTrace(netlist.name, compiled.nets, node_ids, tuple(steps), netlist.params,
                    compiled.hash(), settle, tuple(netlist.outputs))


def settle_outputs(compiled: Compiled, words: dict, width: int, settle: Optional[int] = None,
                   controls: Optional[dict] = None) -> dict:
    """Bit-parallel: apply packed input words, run to settle, return output words."""
    settle = settle or compiled.default_settle()
    assign = dict(controls or {})
    assign.update(words)
    state = initial_state(compiled, width, assign)
    for h in range(2 * settle):
        state = step(state, h)
    return {o: state.values[o] for o in compiled.netlist.outputs}


# -- equivalence ------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceReport:
    strategy: str
    vectors_checked: int
    mismatches: tuple     # ((inputs, expected, got), ...) first entries only
    mismatch_count: int
    inputs: tuple
    outputs: tuple
    seed: Optional[int] = None

    @property
    def verdict(self) -> str:
        return "PASS" if not self.mismatches else "FAIL"

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        good = self.vectors_checked - self.mismatch_count
        return f"{self.verdict} {good}/{self.vectors_checked} vectors ({self.strategy})"


def exhaustive_words(n: int) -> list:
    """Lane patterns enumerating all ``2**n`` vectors; input 0 is the MSB."""
    lanes = 1 << n
    words = []
    for j in range(n):
        half = 1 << (n - 1 - j)
        period = half << 1
        unit = ((1 << half) - 1) << half
        reps = lanes // period
        words.append(unit * (((1 << (period * reps)) - 1) // ((1 << period) - 1)))
    return words


def random_words(n_inputs: int, count: int, seed: int) -> list:
    rng = random.Random(seed)
    return [rng.getrandbits(count) for _ in range(n_inputs)]


def lane_vector(words, lane) -> tuple:
    return tuple(w >> lane & 1 for w in words)


def verify_equivalence(netlist, reference, strategy: str = "auto",
                       count: int = DEFAULT_RANDOM_VECTORS, seed: int = DEFAULT_SEED,
                       library=None, max_reported: int = 100) -> EquivalenceReport:
    """Simulate ``netlist`` to settle on every vector and compare with ``reference``."""
    missing = [f"input {n} not in netlist" for n in reference.inputs if n not in netlist.inputs]
    missing += [f"input {n} not in reference" for n in netlist.inputs if n not in reference.inputs]
    missing += [f"output {n} not in netlist" for n in reference.outputs if n not in netlist.outputs]
    missing += [f"output {n} not in reference" for n in netlist.outputs if n not in reference.outputs]
    if missing:
        raise InterfaceMismatch(missing)
    compiled = Compiled(netlist, library)
    controls = {k: v for k, v in _control_values(netlist, set()).items()}
    n = len(reference.inputs)
    if strategy == "auto":
        strategy = "exhaustive" if n <= EXHAUSTIVE_LIMIT else "random"
    if strategy == "exhaustive":
        width, words, used_seed = 1 << n, exhaustive_words(n), None
    elif strategy == "random":
        width, words, used_seed = count, random_words(n, count, seed), seed
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    mask = (1 << width) - 1
    packed = dict(zip(reference.inputs, words))
    ctrl_words = {k: mask if v else 0 for k, v in controls.items()}
    got = settle_outputs(compiled, packed, width, controls=ctrl_words)
    want = reference.evaluate_packed(packed, mask)
    outs = tuple(reference.outputs)
    diff = 0
    for o in outs:
        diff |= got[o] ^ want[o]
    mismatches = []
    count_bad = bin(diff).count("1")
    lane = 0
    while diff and len(mismatches) < max_reported:
        low = diff & -diff
        lane = low.bit_length() - 1
        mismatches.append((lane_vector(words, lane),
                           tuple(want[o] >> lane & 1 for o in outs),
                           tuple(got[o] >> lane & 1 for o in outs)))
        diff ^= low
    label = "exhaustive" if strategy == "exhaustive" else f"random({count}, seed={seed:#x})"
    return EquivalenceReport(label, width, tuple(mismatches), count_bad, tuple(reference.inputs),
                             outs, used_seed)


# -- waveform export --------------------------------------------------------

def _vcd_id(i: int) -> str:
    chars = []
    while True:
        i, r = divmod(i, 94)
        chars.append(chr(33 + r))
        if i == 0:
            break
        i -= 1
    return "".join(chars)


def format_real(value: Fraction, places: int = 6) -> str:
    """Fixed-point text with exact round-half-even."""
    scaled = round(Fraction(value) * 10 ** places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** places)
    return f"{sign}{whole}.{frac:0{places}d}"


def write_vcd(trace: SimTrace, sink) -> None:
    ids = {}
    k = 0
    lines = ["$version xtalk two-phase simulator $end", "$timescale 1ns $end",
             f"$scope module {trace.design} $end"]
    for net in trace.nets:
        ids[("net", net)] = _vcd_id(k)
        lines.append(f"$var wire 1 {_vcd_id(k)} {net} $end")
        k += 1
    for g in (0, 1):
        ids[("dis", g)] = _vcd_id(k)
        lines.append(f"$var wire 1 {_vcd_id(k)} dis{g} $end")
        k += 1
    for v in trace.victim_ids:
        ids[("victim", v)] = _vcd_id(k)
        lines.append(f"$var real 64 {_vcd_id(k)} victim_{v.replace('/', '_')} $end")
        k += 1
    lines += ["$upscope $end", "$enddefinitions $end"]
    prev = None
    for s in trace.steps:
        cur = {("net", n): str(v) for n, v in zip(trace.nets, s.values)}
        cur.update({("dis", g): str(d) for g, d in enumerate(s.dis)})
        cur.update({("victim", v): "r" + format_real(x) for v, x in zip(trace.victim_ids, s.victims)})
        changes = []
        for key, text in cur.items():
            if prev is None or prev[key] != text:
                changes.append(f"{text} {ids[key]}" if text.startswith("r") else f"{text}{ids[key]}")
        lines.append(f"#{s.half_cycle}")
        if prev is None:
            lines += ["$dumpvars"] + changes + ["$end"]
        else:
            lines += changes
        prev = cur
    sink.write("\n".join(lines) + "\n")


def write_csv(trace: SimTrace, sink) -> None:
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(["half_cycle", "net", "value"])
    for s in trace.steps:
        for net, v in zip(trace.nets, s.values):
            w.writerow([s.half_cycle, net, v])
