"""Technology mapping of Boolean networks onto crosstalk cells.

Every sum-of-products node becomes a two-level structure of single-node
crosstalk gates (NAND-NAND by default).  Wide terms are split into balanced
trees using De Morgan so that no node sees more than three data inputs, and
complemented literals share one inverter per net.  With ``use_composites``
each node is also matched against whole library cells (MAJ3, AO21, XOR2, a
full adder spanning a sum/carry node pair, ...) and the cheaper
realization wins.

Afterwards the netlist is phase-balanced: wherever a crosstalk output
reaches a consumer an even number of levels later, an XBUF delay stage is
inserted so that every driver/consumer pair evaluates in opposite phases.
Phases then follow the level parity and wide fan-outs get buffers.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, replace
from typing import Optional

from .errors import MappingError, MissingTemplate, PairMismatch, UnmappableNode
from .gatelib.library import PAIR_NAMES, builtin_library
from .gatelib.model import input_vectors
from .netlist.checks import levelize, net_levels, stage0_ports, validate
from .netlist.ir import Buffer, Control, CrosstalkNetlist, Gate, Inverter, ordered_pins, sink_map

STYLES = ("nand_nand", "and_or")
MAX_FANIN = 3
# largest node support whose truth table is built for simplification
_TABLE_LIMIT = 10

# single-node families used by the decomposition: (op, fan-in) -> (plain, inverted)
_FAMILY = {
    ("and", 2): ("AND2", "NAND2"), ("and", 3): ("AND3", "NAND3"),
    ("or", 2): ("OR2", "NOR2"), ("or", 3): ("OR3", "NOR3"),
}
_DUAL = {"and": "or", "or": "and"}
# static cells that may stand for a polymorphic pair mode
_PAIR_FUNCTIONS = ("AND2", "OR2", "AND3", "OR3", "AO21", "OA21")


@dataclass(frozen=True)
class MapOptions:
    style: str = "nand_nand"
    fanout_limit: int = 4
    use_composites: bool = True
    polymorphic_cells: tuple = ()
    # templates the matcher may use (None = every single-output cell and FA)
    patterns: Optional[tuple] = None
    balance_phases: bool = True
    buffers: bool = True

    def __post_init__(self):
        style = self.style.replace("-", "_")
        if style not in STYLES:
            raise ValueError(f"style must be one of {STYLES}, got {self.style!r}")
        object.__setattr__(self, "style", style)
        if self.fanout_limit < 1:
            raise ValueError("fanout_limit must be at least 1")
        object.__setattr__(self, "polymorphic_cells", tuple(self.polymorphic_cells))
        if self.patterns is not None:
            object.__setattr__(self, "patterns", tuple(self.patterns))


@dataclass(frozen=True)
class MapReport:
    design: str
    style: str
    nodes: tuple          # (node, templates used) in network order
    inverters: int
    buffers: int
    delays: int
    max_level: int
    total: int
    composites: bool = True

    def to_dict(self) -> dict:
        return {
            "design": self.design, "style": self.style, "composites": self.composites,
            "nodes": {n: list(t) for n, t in self.nodes},
            "inverters": self.inverters, "buffers": self.buffers, "delays": self.delays,
            "max_level": self.max_level, "total_transistors": self.total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


# -- truth-table helpers ----------------------------------------------------

def _table(cubes, support, value):
    rows = []
    for x in input_vectors(len(support)):
        env = dict(zip(support, x))
        hit = any(all(env[n] == p for n, p in c.items()) for c in cubes)
        rows.append(int(hit) if value else int(not hit))
    return tuple(rows)


def _depends(table, n, i):
    step = 1 << (n - 1 - i)
    return any(table[k] != table[k | step] for k in range(len(table)) if not k & step)


def _restrict(table, n, keep):
    """Table over the variables ``keep`` (others irrelevant, read at 0)."""
    out = []
    for x in input_vectors(len(keep)):
        k = 0
        for i, b in zip(keep, x):
            if b:
                k |= 1 << (n - 1 - i)
        out.append(table[k])
    return tuple(out)


def _permuted(table, n, perm, neg):
    """Function g(x) = table(y) with y[i] = x[perm[i]] ^ neg[i]."""
    out = []
    for x in input_vectors(n):
        k = 0
        for i in range(n):
            if x[perm[i]] ^ neg[i]:
                k |= 1 << (n - 1 - i)
        out.append(table[k])
    return tuple(out)


_XOR3 = tuple(sum(x) % 2 for x in input_vectors(3))
_MAJ3 = tuple(int(sum(x) >= 2) for x in input_vectors(3))


@dataclass(frozen=True)
class _Match:
    template: str
    perm: tuple           # template port i reads support variable perm[i]
    neg: tuple            # complement applied to that support variable
    out_neg: bool
    estimate: int
    order: int


class _Matcher:
    """Index of every (permutation, complement) variant of the library cells."""

    def __init__(self, library, cost_model, allowed):
        self.index = {}
        for order, t in enumerate(library.values()):
            if t.is_polymorphic or len(t.output_ports) != 1 or t.n_inputs > MAX_FANIN:
                continue
            if t.n_inputs < 2 or (allowed is not None and t.name not in allowed):
                continue
            base = cost_model.instance_cost(Gate("_", t.name, 0, ()), library)
            table = t.function(())[0]
            n = t.n_inputs
            for perm in itertools.permutations(range(n)):
                for neg in itertools.product((0, 1), repeat=n):
                    g = _permuted(table, n, perm, neg)
                    for out_neg in (False, True):
                        f = tuple(1 - v for v in g) if out_neg else g
                        inv = cost_model.instance_cost(Inverter("_", "_", "_"), library)
                        est = base + inv * (sum(neg) + out_neg)
                        m = _Match(t.name, perm, neg, out_neg, est, order)
                        cur = self.index.setdefault((n, f), {})
                        if t.name not in cur or (est, perm, neg) < (
                                cur[t.name].estimate, cur[t.name].perm, cur[t.name].neg):
                            cur[t.name] = m

    def candidates(self, n, table):
        found = self.index.get((n, table), {})
        return sorted(found.values(),
                      key=lambda m: (m.estimate, sum(m.neg) + m.out_neg, m.order))


# -- netlist builder --------------------------------------------------------

class _Builder:
    def __init__(self, library, cost_model, used):
        self.library = library
        self.cost_model = cost_model
        self.instances = []
        self.inv = {}
        self.used = set(used)
        self.counters = {}

    def snapshot(self):
        return (len(self.instances), dict(self.inv), set(self.used), dict(self.counters))

    def restore(self, snap):
        n, inv, used, counters = snap
        del self.instances[n:]
        self.inv, self.used, self.counters = inv, used, counters

    def trial(self, fn) -> int:
        snap = self.snapshot()
        try:
            fn()
            return sum(self.cost_model.instance_cost(i, self.library)
                       for i in self.instances[snap[0]:])
        finally:
            self.restore(snap)

    def fresh(self, base):
        name, k = base, 1
        while name in self.used:
            name, k = f"{base}_{k}", k + 1
        self.used.add(name)
        return name

    def next_id(self, prefix):
        k = self.counters.get(prefix, 0)
        self.counters[prefix] = k + 1
        return f"{prefix}{k}"

    def gate(self, template, nets, out=None, base="t"):
        if template not in self.library:
            raise MissingTemplate(template)
        t = self.library[template]
        out = out or self.fresh(base)
        pins = dict(zip(t.port_names, nets))
        pins[t.output_ports[0]] = out
        self.instances.append(Gate(self.next_id("x"), template, 0, ordered_pins(t, pins)))
        return out

    def complement(self, net):
        if net not in self.inv:
            out = self.fresh(f"{net}_n")
            self.instances.append(Inverter(self.next_id("i"), net, out))
            self.inv[net], self.inv[out] = out, net
        return self.inv[net]

    def realize(self, sig):
        net, neg = sig
        return self.complement(net) if neg else net

    def literal(self, sig, out):
        """Drive ``out`` from a signal with a static stage."""
        net, neg = sig
        if neg:
            self.instances.append(Inverter(self.next_id("i"), net, out))
            self.inv.setdefault(net, out)
            self.inv.setdefault(out, net)
        else:
            self.instances.append(Buffer(self.next_id("b"), net, out, 1))
        return out

    def build(self, op, sigs, inverted, out=None, base="t"):
        """Signal equal to ``op(sigs)`` (complemented when ``inverted``)."""
        sigs = list(dict.fromkeys(sigs))
        if len(sigs) == 1:
            net, neg = sigs[0]
            sig = (net, neg ^ inverted)
            return (self.literal(sig, out), False) if out else sig
        if all(neg for _, neg in sigs):
            return self.build(_DUAL[op], [(n, False) for n, _ in sigs], not inverted, out, base)
        if len(sigs) <= MAX_FANIN:
            template = _FAMILY[(op, len(sigs))][int(inverted)]
            return (self.gate(template, [self.realize(s) for s in sigs], out, base), False)
        k = MAX_FANIN if len(sigs) > MAX_FANIN ** 2 else math.ceil(len(sigs) / MAX_FANIN)
        size, extra = divmod(len(sigs), k)
        groups, start = [], 0
        for g in range(k):
            end = start + size + (g < extra)
            groups.append(sigs[start:end])
            start = end
        parts = [self.build(op, grp, True, None, base) for grp in groups]
        return self.build(_DUAL[op], parts, not inverted, out, base)

    def sop(self, cubes, value, style, out):
        terms = [sorted(c.items()) for c in cubes]
        inverted = not value
        if len(terms) == 1:
            lits = [(n, not p) for n, p in terms[0]]
            return self.build("and", lits, inverted, out, out)
        if style == "nand_nand":
            parts = [self.build("and", [(n, not p) for n, p in t], True, None, out) for t in terms]
            return self.build("and", parts, not inverted, out, out)
        parts = [self.build("and", [(n, not p) for n, p in t], False, None, out) for t in terms]
        return self.build("or", parts, inverted, out, out)

    def match(self, m, support, out):
        nets = [self.realize((support[m.perm[i]], bool(m.neg[i]))) for i in range(len(m.perm))]
        if not m.out_neg:
            return self.gate(m.template, nets, out)
        inner = self.gate(m.template, nets, None, f"{out}_c")
        return self.literal((inner, True), out)


# -- node preparation -------------------------------------------------------

@dataclass
class _Prepared:
    node: object
    cubes: list
    value: int
    support: tuple
    table: Optional[tuple] = None
    reduced: Optional[tuple] = None       # support after dropping irrelevant vars
    reduced_table: Optional[tuple] = None
    const: Optional[int] = None
    alias: Optional[tuple] = None


def _prepare(node, env):
    cubes = []
    for row in node.rows:
        cube, alive = {}, True
        for ch, var in zip(row, node.inputs):
            if ch == "-":
                continue
            want = int(ch)
            kind, val = env[var]
            if kind == "const":
                if val != want:
                    alive = False
                    break
                continue
            net, neg = val
            pol = want ^ neg
            if cube.get(net, pol) != pol:
                alive = False
                break
            cube[net] = pol
        if alive:
            cubes.append(cube)
    value = node.value
    p = _Prepared(node, cubes, value, ())
    if any(not c for c in cubes) or not cubes:
        p.const = value if any(not c for c in cubes) else 1 - value
        return p
    p.support = tuple(dict.fromkeys(n for c in cubes for n in c))
    if len(p.support) <= _TABLE_LIMIT:
        n = len(p.support)
        p.table = _table(cubes, p.support, value)
        keep = tuple(i for i in range(n) if _depends(p.table, n, i))
        p.reduced = tuple(p.support[i] for i in keep)
        p.reduced_table = _restrict(p.table, n, keep)
        if not keep:
            p.const = p.table[0]
        elif len(keep) == 1:
            p.alias = (p.reduced[0], p.reduced_table == (1, 0))
    return p


# -- main flow --------------------------------------------------------------

def _map_nodes(network, library, options, cost_model, use_composites):
    allowed = options.patterns
    matcher = _Matcher(library, cost_model, allowed) if use_composites else None
    fa_ok = use_composites and "FA" in library and (allowed is None or "FA" in allowed)
    names = set(network.inputs) | set(network.outputs) | {n.output for n in network.nodes}
    b = _Builder(library, cost_model, names)
    env = {pi: ("sig", (pi, False)) for pi in network.inputs}
    outputs = set(network.outputs)
    controls, report, poly_roots = [], [], {}
    poly = set(options.polymorphic_cells)
    unknown = poly - {n.output for n in network.nodes}
    if unknown:
        raise MappingError(f"polymorphic cell(s) not in network: {', '.join(sorted(unknown))}")
    done = set()
    nodes = list(network.nodes)
    for idx, node in enumerate(nodes):
        if node.output in done:
            continue
        start = len(b.instances)
        p = _prepare(node, env)
        out = node.output
        if node.output in poly:
            root = _map_poly(b, p, library)
            poly_roots[out] = root
            env[out] = ("sig", (out, False))
        elif p.const is not None:
            env[out] = ("const", p.const)
            if out in outputs:
                controls.append(Control(out, p.const))
        elif p.alias is not None:
            env[out] = ("sig", p.alias)
            if out in outputs:
                b.literal(p.alias, out)
                env[out] = ("sig", (out, False))
        else:
            partner = None
            if fa_ok and p.reduced is not None and len(p.reduced) == 3 and \
                    p.reduced_table in (_XOR3, _MAJ3):
                partner = _fa_partner(p, nodes[idx + 1:], env, done, poly)
            if partner is not None:
                s, c = (p, partner) if p.reduced_table == _XOR3 else (partner, p)
                t = library["FA"]
                pins = dict(zip(t.port_names, s.reduced))
                pins.update({"S": s.node.output, "CO": c.node.output})
                b.instances.append(Gate(b.next_id("x"), "FA", 0, ordered_pins(t, pins)))
                done.add(partner.node.output)
                env[s.node.output] = ("sig", (s.node.output, False))
                env[c.node.output] = ("sig", (c.node.output, False))
                report.append((partner.node.output, ("FA (shared)",)))
            else:
                _map_single(b, p, options.style, matcher, fa_ok, library)
                env[out] = ("sig", (out, False))
        report.append((out, tuple(_kind(i) for i in b.instances[start:])))
    order = {n.output: k for k, n in enumerate(nodes)}
    report.sort(key=lambda r: order[r[0]])
    return b, controls, tuple(report), poly_roots


def _kind(inst):
    if isinstance(inst, Gate):
        return inst.template
    return "INV" if isinstance(inst, Inverter) else "BUF"


def _fa_partner(p, later, env, done, poly):
    want = _MAJ3 if p.reduced_table == _XOR3 else _XOR3
    for other in later:
        if other.output in done or other.output in poly:
            continue
        if any(v not in env for v in other.inputs):
            continue
        q = _prepare(other, env)
        if q.reduced is None or len(q.reduced) != 3 or set(q.reduced) != set(p.reduced):
            continue
        if _restrict_to(q, p.reduced) == want:
            return _reorder(q, p.reduced)
    return None


def _restrict_to(q, order):
    idx = [q.reduced.index(n) for n in order]
    return _permuted(q.reduced_table, 3, idx, (0, 0, 0))


def _reorder(q, order):
    q.reduced_table = _restrict_to(q, order)
    q.reduced = tuple(order)
    return q


def _map_single(b, p, style, matcher, fa_ok, library):
    out = p.node.output
    options = [(None, lambda: b.sop(p.cubes, p.value, style, out))]
    if matcher is not None and p.reduced is not None and len(p.reduced) <= MAX_FANIN:
        for m in matcher.candidates(len(p.reduced), p.reduced_table):
            options.append((m, lambda m=m: b.match(m, p.reduced, out)))
        if fa_ok and len(p.reduced) == 3 and p.reduced_table == _XOR3:
            def sum_only():
                t = library["FA"]
                pins = dict(zip(t.port_names, p.reduced))
                pins["S"] = out
                b.instances.append(Gate(b.next_id("x"), "FA", 0, ordered_pins(t, pins)))
            options.append(("FA", sum_only))
    if p.cubes and max(len(c) for c in p.cubes) > 64:
        raise UnmappableNode(out, "product term wider than 64 literals")
    best = None
    for k, (tag, fn) in enumerate(options):
        cost = b.trial(fn)
        # ties go to library cells over the generic decomposition
        key = (cost, tag is None, k)
        if best is None or key < best[0]:
            best = (key, fn)
    best[1]()


def _map_poly(b, p, library):
    out = p.node.output
    if p.reduced is not None:
        for name in _PAIR_FUNCTIONS:
            if name not in library:
                continue
            t = library[name]
            if t.n_inputs != len(p.reduced):
                continue
            table = t.function(())[0]
            for perm in itertools.permutations(range(t.n_inputs)):
                if _permuted(table, t.n_inputs, perm, (0,) * t.n_inputs) == p.reduced_table:
                    nets = [p.reduced[perm[i]] for i in range(t.n_inputs)]
                    b.gate(name, nets, out)
                    return b.instances[-1].id
    raise PairMismatch(out, "function is not a mode of any polymorphic pair "
                       f"({', '.join(_PAIR_FUNCTIONS)})")


def map_network(network, library=None, options: Optional[MapOptions] = None,
                cost_model=None):
    """Map ``network`` and return ``(CrosstalkNetlist, MapReport)``."""
    from .metrics import DEFAULT_COST_MODEL, transistor_count

    library = library if library is not None else builtin_library()
    options = options or MapOptions()
    cost_model = cost_model if cost_model is not None else DEFAULT_COST_MODEL
    result = _map_once(network, library, options, cost_model, options.use_composites)
    if options.use_composites:
        # the greedy matcher must never lose against plain decomposition
        plain = _map_once(network, library, options, cost_model, False)
        if transistor_count(plain[0], cost_model, library).total < \
                transistor_count(result[0], cost_model, library).total:
            result = plain
    return result


def _map_once(network, library, options, cost_model, use_composites):
    from .metrics import transistor_count

    b, controls, nodes, poly_roots = _map_nodes(network, library, options, cost_model,
                                                use_composites)
    netlist = CrosstalkNetlist(network.name, library.params, tuple(network.inputs),
                               tuple(network.outputs), tuple(controls), tuple(b.instances))
    if poly_roots:
        netlist = make_polymorphic(netlist, {node: None for node in poly_roots}, library)
    if options.balance_phases:
        netlist = balance_phases(netlist, library)
    netlist = schedule_phases(netlist, library)
    if options.buffers:
        netlist = insert_buffers(netlist, options.fanout_limit, library)
    if options.balance_phases:
        diag = validate(netlist, library, options.fanout_limit)
        if not diag.ok:
            raise MappingError("mapped netlist failed validation:\n" + str(diag))
    levels = levelize(netlist, library)
    report = MapReport(
        network.name, options.style, nodes,
        sum(isinstance(i, Inverter) for i in netlist.instances),
        sum(isinstance(i, Buffer) for i in netlist.instances),
        sum(isinstance(i, Gate) and i.template == "XBUF" for i in netlist.instances),
        max(levels.values(), default=-1),
        transistor_count(netlist, cost_model, library).total,
        use_composites)
    return netlist, report


# -- netlist transformations -------------------------------------------------

def _all_nets(netlist):
    nets = set(netlist.inputs) | set(netlist.outputs) | {c.net for c in netlist.controls}
    for inst in netlist.instances:
        if isinstance(inst, Gate):
            nets.update(n for _, n in inst.pins)
        else:
            nets.update((inst.input, inst.output))
    return nets


class _Names:
    def __init__(self, taken):
        self.taken = set(taken)

    def __call__(self, base):
        name, k = base, 1
        while name in self.taken:
            name, k = f"{base}_{k}", k + 1
        self.taken.add(name)
        return name


def balance_phases(netlist, library=None):
    """Insert XBUF delay stages on crosstalk edges spanning an even level gap."""
    library = library if library is not None else builtin_library()
    levels, out_level = net_levels(netlist, library)
    nets = _Names(_all_nets(netlist))
    ids = _Names(i.id for i in netlist.instances)
    delayed, added, result = {}, [], []
    for inst in netlist.instances:
        if not isinstance(inst, Gate):
            result.append(inst)
            continue
        t = library[inst.template]
        pins = dict(inst.pins)
        for p in stage0_ports(t):
            src = out_level.get(pins[p])
            if src is None or (levels[inst.id] - src) % 2:
                continue
            net = pins[p]
            if net not in delayed:
                if "XBUF" not in library:
                    raise MissingTemplate("XBUF")
                delayed[net] = nets(f"{net}_d")
                added.append(Gate(ids(f"d{len(added)}"), "XBUF", 0,
                                  (("A", net), ("Y", delayed[net]))))
            pins[p] = delayed[net]
        result.append(replace(inst, pins=ordered_pins(t, pins)))
    return netlist.with_instances(result + added)


def schedule_phases(netlist, library=None):
    """Phase of every crosstalk gate = its level mod 2."""
    library = library if library is not None else builtin_library()
    levels = levelize(netlist, library)
    return netlist.with_instances(
        replace(i, phase=levels[i.id] % 2) if isinstance(i, Gate) else i
        for i in netlist.instances)


def insert_buffers(netlist, fanout_limit: int = 4, library=None):
    """Buffer every crosstalk output whose fan-out exceeds ``fanout_limit``.

    The buffer keeps the original net name; the gate now drives ``<net>_xb``.
    """
    library = library if library is not None else builtin_library()
    sinks = sink_map(netlist, library)
    nets = _Names(_all_nets(netlist))
    ids = _Names(i.id for i in netlist.instances)
    result = []
    for inst in netlist.instances:
        if not isinstance(inst, Gate):
            result.append(inst)
            continue
        t = library[inst.template]
        pins, bufs = dict(inst.pins), []
        for p in t.output_ports:
            net = pins.get(p)
            k = len(sinks.get(net, ())) if net is not None else 0
            if k > fanout_limit:
                inner = nets(f"{net}_xb")
                pins[p] = inner
                bufs.append(Buffer(ids(f"buf_{net}"), inner, net, math.ceil(k / fanout_limit)))
        result.append(replace(inst, pins=ordered_pins(t, pins)) if bufs else inst)
        result.extend(bufs)
    return netlist.with_instances(result)


def pair_for(template, library) -> tuple:
    """(pair name, mode index) realizing ``template``'s function; mode 0 preferred."""
    t = library[template]
    if t.is_polymorphic or len(t.output_ports) != 1:
        return None
    table = t.function(())[0]
    hits = []
    for name in PAIR_NAMES:
        if name not in library:
            continue
        pair = library[name]
        if pair.n_inputs != t.n_inputs:
            continue
        for m in pair.modes:
            if pair.function(m.control_assignment)[0] == table:
                hits.append((m.mode_id != 0, name, m.mode_id))
    if not hits:
        return None
    _, name, mode = min(hits, key=lambda h: (h[0], PAIR_NAMES.index(h[1])))
    return name, mode


def make_polymorphic(netlist, mapping: dict, library=None):
    """Replace instances by polymorphic pair cells with a free control net each.

    ``mapping`` keys are instance ids or the net an instance drives; a value
    of None picks the pair automatically.  The control net is
    ``ctrl_<key>`` and its default key bit selects the original function.
    """
    library = library if library is not None else builtin_library()
    by_key = {}
    for inst in netlist.gates():
        by_key[inst.id] = inst
        outs = library[inst.template].output_ports
        for p, n in inst.pins:
            if p in outs:
                by_key.setdefault(n, inst)
    nets = _Names(_all_nets(netlist))
    swap, controls = {}, list(netlist.controls)
    for key, pair in mapping.items():
        inst = by_key.get(key)
        if inst is None:
            raise MappingError(f"no crosstalk instance named or driving {key!r}")
        t = library[inst.template]
        if pair is None:
            found = pair_for(inst.template, library)
            if found is None:
                raise PairMismatch(key, f"{inst.template} is not a mode of any polymorphic pair")
            pair, mode = found
        else:
            if pair not in library:
                raise MissingTemplate(pair)
            p = library[pair]
            if not p.is_polymorphic or p.n_inputs != t.n_inputs or len(t.output_ports) != 1:
                raise PairMismatch(key, f"{inst.template} cannot become {pair}")
            table = t.function(())[0]
            modes = [m.mode_id for m in p.modes if p.function(m.control_assignment)[0] == table]
            if not modes:
                raise PairMismatch(key, f"{inst.template} is in neither mode of {pair}")
            mode = modes[0]
        p = library[pair]
        ctrl = nets(f"ctrl_{key}")
        pins = dict(inst.pins)
        pins[p.control_names[0]] = ctrl
        swap[inst.id] = Gate(inst.id, pair, inst.phase, ordered_pins(p, pins))
        controls.append(Control(ctrl, None, mode))
    return replace(netlist, controls=tuple(controls),
                   instances=tuple(swap.get(i.id, i) for i in netlist.instances))
