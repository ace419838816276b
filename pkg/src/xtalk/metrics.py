"""Transistor counting, CMOS reference comparison and cost reports."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Optional

from .errors import MissingTemplate
from .gatelib.library import builtin_library
from .gatelib.model import CompositeInverter, CompositeNode
from .netlist.ir import Gate, Inverter

CSV_COLUMNS = ("design", "crosstalk_T", "cmos_T", "reduction_pct", "paper_ref_pct")
REPORT_SCHEMA = "xtalk-cost-report/1"
DEVIATION_WARN_POINTS = 20

# reference reductions quoted for the published benchmarks
PAPER_REFERENCE = MappingProxyType({
    "mux": Fraction(62), "cm85a": Fraction(59), "pcle": Fraction(23),
    "full_adder": Fraction(135, 2),
})


@dataclass(frozen=True)
class CostModel:
    """Crosstalk transistor accounting.

    A victim node costs one discharge transistor plus two per inverter stage
    (one stage when the node output is used inverted, two when it is paired
    with a restoring inverter).  Polymorphic cells add one pass transistor
    per branch the control switches.
    """

    discharge: int = 1
    inverter_stage: int = 2
    switched_branch: int = 1
    inverter: int = 2
    buffer: int = 4
    use_declared: bool = True

    def node_cost(self, inverted: bool) -> int:
        return self.discharge + self.inverter_stage * (1 if inverted else 2)

    def switched_branches(self, template) -> int:
        if len(template.modes) < 2:
            return 0
        modes = template.modes
        count = int(len({m.aux_load for m in modes}) > 1)
        count += sum(len(set(ws)) > 1 for ws in zip(*(m.data_weights for m in modes)))
        return count

    def formula_cost(self, template) -> int:
        if template.composite is not None:
            total = 0
            for e in template.composite.elements:
                if isinstance(e, CompositeNode):
                    total += self.node_cost(e.output_inverted)
                elif isinstance(e, CompositeInverter):
                    total += self.inverter
            return total
        return (self.node_cost(template.output_inverted)
                + self.switched_branch * self.switched_branches(template))

    def template_cost(self, template) -> int:
        if self.use_declared and template.declared_cost is not None:
            return template.declared_cost
        return self.formula_cost(template)

    def instance_cost(self, inst, library) -> int:
        if isinstance(inst, Gate):
            return self.template_cost(library[inst.template])
        if isinstance(inst, Inverter):
            return self.inverter
        return self.buffer * inst.drive


DEFAULT_COST_MODEL = CostModel()

_CMOS = {
    # quoted reference counts
    "INV": 2, "NAND2": 4, "NOR2": 4, "NAND3": 6, "NOR3": 6, "AND2": 6, "OR2": 6,
    "AOI21": 6, "OAI21": 6, "XOR2": 12, "FA": 40,
    # derived: inverting cell plus output inverter, mirror majority, two-inverter buffer
    "AND3": 8, "OR3": 8, "AO21": 8, "OA21": 8, "XNOR2": 14, "MAJ3": 12, "XBUF": 4, "BUF": 4,
}


@dataclass(frozen=True)
class CmosRefLibrary:
    costs: Mapping = field(default_factory=lambda: MappingProxyType(dict(_CMOS)))

    def __getitem__(self, name) -> int:
        return self.costs[name]

    def instance_cost(self, inst, library=None) -> int:
        if isinstance(inst, Gate):
            if inst.template not in self.costs:
                raise MissingTemplate(f"{inst.template} (no CMOS reference count)")
            return self.costs[inst.template]
        if isinstance(inst, Inverter):
            return self.costs["INV"]
        return self.costs["BUF"] * inst.drive


DEFAULT_CMOS = CmosRefLibrary()


@dataclass(frozen=True)
class Breakdown:
    """Total transistor count with per-kind ``(kind, instances, transistors)``."""

    total: int
    kinds: tuple

    def as_dict(self) -> dict:
        return {k: {"count": n, "transistors": t} for k, n, t in self.kinds}


def _kind(inst):
    if isinstance(inst, Gate):
        return inst.template
    return "INV" if isinstance(inst, Inverter) else "BUF"


def transistor_count(netlist, cost_model=None, library=None) -> Breakdown:
    cost_model = cost_model if cost_model is not None else DEFAULT_COST_MODEL
    library = library if library is not None else builtin_library()
    per = {}
    for inst in netlist.instances:
        n, t = per.get(_kind(inst), (0, 0))
        per[_kind(inst)] = (n + 1, t + cost_model.instance_cost(inst, library))
    kinds = tuple((k, n, t) for k, (n, t) in sorted(per.items()))
    return Breakdown(sum(t for _, _, t in kinds), kinds)


def declared_cost_flags(netlist, library, cost_model=DEFAULT_COST_MODEL) -> tuple:
    flags = []
    for name in sorted({g.template for g in netlist.gates()}):
        t = library[name]
        if t.declared_cost is not None and t.declared_cost != cost_model.formula_cost(t):
            flags.append(f"{name}: formula cost {cost_model.formula_cost(t)} differs from "
                         f"declared cost {t.declared_cost} (declared value used)")
    return tuple(flags)


def reduction(crosstalk: int, cmos: int) -> Optional[Fraction]:
    """Percentage saved, ``100 * (1 - crosstalk / cmos)``; None when undefined."""
    if cmos == 0:
        return None
    return 100 * (1 - Fraction(crosstalk, cmos))


def format_pct(value: Optional[Fraction]) -> str:
    """One decimal place, round half to even on the exact value."""
    if value is None:
        return "n/a"
    tenths = round(Fraction(value) * 10)
    sign = "-" if tenths < 0 else ""
    whole, frac = divmod(abs(tenths), 10)
    return f"{sign}{whole}.{frac}"


@dataclass(frozen=True)
class CostReport:
    design: str
    crosstalk: Breakdown
    cmos: Breakdown
    reduction: Optional[Fraction]
    paper_ref: Optional[Fraction] = None
    warnings: tuple = ()
    flags: tuple = ()

    @property
    def crosstalk_total(self) -> int:
        return self.crosstalk.total

    @property
    def cmos_total(self) -> int:
        return self.cmos.total

    @property
    def reduction_pct(self) -> str:
        return format_pct(self.reduction)

    @property
    def paper_ref_pct(self) -> str:
        return "" if self.paper_ref is None else format_pct(self.paper_ref)

    def row(self) -> tuple:
        return (self.design, str(self.crosstalk_total), str(self.cmos_total),
                self.reduction_pct, self.paper_ref_pct)

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "design": self.design,
            "crosstalk_total": self.crosstalk_total,
            "crosstalk_breakdown": self.crosstalk.as_dict(),
            "cmos_total": self.cmos_total,
            "cmos_breakdown": self.cmos.as_dict(),
            "reduction_pct": None if self.reduction is None else float(self.reduction_pct),
            "paper_ref_pct": None if self.paper_ref is None else float(self.paper_ref_pct),
            "warnings": list(self.warnings),
            "flags": list(self.flags),
        }


def build_report(design, crosstalk: Breakdown, cmos: Breakdown, flags=()) -> CostReport:
    red = reduction(crosstalk.total, cmos.total)
    ref = PAPER_REFERENCE.get(design)
    warnings = []
    if ref is not None and red is not None and abs(red - ref) > DEVIATION_WARN_POINTS:
        warnings.append(f"{design}: reduction {format_pct(red)}% deviates from the reference "
                        f"{format_pct(ref)}% by more than {DEVIATION_WARN_POINTS} points")
    if red is not None and red <= 0:
        warnings.append(f"{design}: no transistor reduction over the CMOS baseline")
    return CostReport(design, crosstalk, cmos, red, ref, tuple(warnings), tuple(flags))


def cmos_baseline(network, ref=None, library=None, style="nand_nand"):
    """The network decomposed with the same flow, FA/XOR patterns only, CMOS-costed."""
    from .mapper import MapOptions, map_network

    ref = ref if ref is not None else DEFAULT_CMOS
    options = MapOptions(style=style, use_composites=True, patterns=("FA", "XOR2", "XNOR2"),
                         balance_phases=False, buffers=False)
    netlist, _ = map_network(network, library, options, cost_model=ref)
    return netlist


def compare_cmos(network, mapped, ref=None, library=None, cost_model=None,
                 style="nand_nand") -> CostReport:
    library = library if library is not None else builtin_library()
    ref = ref if ref is not None else DEFAULT_CMOS
    cost_model = cost_model if cost_model is not None else DEFAULT_COST_MODEL
    crosstalk = transistor_count(mapped, cost_model, library)
    cmos = transistor_count(cmos_baseline(network, ref, library, style), ref, library)
    return build_report(network.name, crosstalk, cmos,
                        declared_cost_flags(mapped, library, cost_model))


def _text(reports) -> str:
    rows = [CSV_COLUMNS] + [r.row() for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_COLUMNS))]
    out = []
    for row in rows:
        cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"


def emit_report(report, fmt: str, sink) -> None:
    """Write one report (or a sequence of them) as ``text``, ``csv`` or ``json``."""
    reports = list(report) if isinstance(report, Sequence) else [report]
    if fmt == "text":
        sink.write(_text(reports))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(r.row() for r in reports)
        sink.write(buf.getvalue())
    elif fmt == "json":
        doc = reports[0].to_dict() if not isinstance(report, Sequence) else \
            [r.to_dict() for r in reports]
        sink.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")
    else:
        raise ValueError(f"unknown report format {fmt!r}")
