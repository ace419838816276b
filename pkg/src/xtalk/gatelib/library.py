"""Builtin crosstalk cell library and its JSON representation.

The mode tables below are the output of :func:`calibrate` under the default
:class:`SimParams`; ``tests/test_gatelib.py`` re-derives every one of them.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache

from ..errors import LibraryError
from .model import (CONTROL, DATA, DEFAULT_PARAMS, AggressorPort, Composite, CompositeInverter,
                    CompositeNode, GateMode, GateTemplate, SimParams, mode_consistency,
                    template_modes)

FORMAT_VERSION = 1

# name: (weights, aux_load, margin) for the single-node static cells
_STATIC = {
    "AND": ((10, 10), 20, 20),
    "OR": ((10, 10), 0, 10),
    "AND3": ((10, 10, 10), 50, 30),
    "OR3": ((10, 10, 10), 0, 10),
    "MAJ3": ((10, 10, 10), 10, 20),
    "AO21": ((10, 10, 20), 0, 20),
    "OA21": ((10, 10, 20), 40, 30),
    "ID": ((10,), 0, 10),
}

# (template, flip kind, output inverted)
_STATIC_CELLS = [
    ("NAND2", "AND", True), ("NOR2", "OR", True),
    ("AND2", "AND", False), ("OR2", "OR", False),
    ("NAND3", "AND3", True), ("NOR3", "OR3", True),
    ("AND3", "AND3", False), ("OR3", "OR3", False),
    ("MAJ3", "MAJ3", False),
    ("AO21", "AO21", False), ("OA21", "OA21", False),
    ("AOI21", "AO21", True), ("OAI21", "OA21", True),
    # single-input delay stage used to keep cascaded phases alternating
    ("XBUF", "ID", False),
]

# polymorphic pairs: mode 0 (Ct=0) then mode 1 (Ct=1); entries are
# (weights, aux_load, margin).  AND-AO21 takes AND3 with the AO21 weights.
_PAIRS = {
    "AND2_OR2": (((10, 10), 20, 20), ((10, 10), 0, 10)),
    "AND3_OR3": (((10, 10, 10), 50, 30), ((10, 10, 10), 0, 10)),
    "AO21_OA21": (((10, 10, 20), 0, 20), ((10, 10, 20), 40, 30)),
    "AND3_AO21": (((10, 10, 20), 70, 40), ((10, 10, 20), 0, 20)),
    "AND3_OA21": (((10, 10, 20), 70, 40), ((10, 10, 20), 40, 30)),
    "OR3_AO21": (((10, 10, 10), 0, 10), ((10, 10, 20), 0, 20)),
    "OR3_OA21": (((10, 10, 10), 0, 10), ((10, 10, 20), 40, 30)),
}

PAIR_NAMES = tuple(_PAIRS)
_PORTS = "ABCDEF"


def _data_ports(weights):
    return tuple(AggressorPort(_PORTS[i], DATA, w) for i, w in enumerate(weights))


def _static(name, kind, inverted):
    weights, aux, margin = _STATIC[kind]
    return GateTemplate(name, _data_ports(weights), (),
                        (GateMode(0, (), weights, aux, margin),), inverted)


def _pair(name):
    modes = tuple(GateMode(i, (i,), w, a, m) for i, (w, a, m) in enumerate(_PAIRS[name]))
    switched = max(
        [abs(modes[0].aux_load - modes[1].aux_load)]
        + [abs(x - y) for x, y in zip(modes[0].data_weights, modes[1].data_weights)])
    ct = AggressorPort("Ct", CONTROL, max(switched, 1))
    return GateTemplate(name, _data_ports(modes[0].data_weights), (ct,), modes, False)


def _node(kind, name, inputs, inverted):
    w, a, m = _STATIC[kind]
    return CompositeNode(name, tuple(inputs), GateMode(0, (), w, a, m), inverted)


def _xor(name, inverted_output):
    # NAND node feeding a second node that flips on (A|B) & nand
    elements = (
        _node("AND", "nand", ("A", "B"), True),
        _node("OA21", "x", ("A", "B", "nand"), inverted_output),
    )
    return GateTemplate(name, _data_ports((10, 10)),
                        composite=Composite(elements, (("Y", "x"),)))


def _full_adder():
    sum_mode = GateMode(0, (), (10, 10, 10, 20), 30, 30)
    elements = (
        _node("MAJ3", "carry_n", ("A", "B", "CI"), True),
        CompositeNode("sum_n", ("A", "B", "CI", "carry_n"), sum_mode, True),
        CompositeInverter("sum", "sum_n"),
        CompositeInverter("carry", "carry_n"),
    )
    ports = (AggressorPort("A", DATA, 10), AggressorPort("B", DATA, 10),
             AggressorPort("CI", DATA, 10))
    return GateTemplate("FA", ports, declared_cost=13, output_ports=("S", "CO"),
                        composite=Composite(elements, (("S", "sum"), ("CO", "carry"))))


class TemplateSet(Mapping):
    """Immutable name -> :class:`GateTemplate` mapping plus its SimParams."""

    def __init__(self, templates, params: SimParams = DEFAULT_PARAMS):
        self._templates = {}
        for t in templates:
            if t.name in self._templates:
                raise LibraryError(f"duplicate template {t.name}")
            self._templates[t.name] = t
        self.params = params

    def __getitem__(self, name):
        return self._templates[name]

    def __iter__(self):
        return iter(self._templates)

    def __len__(self):
        return len(self._templates)

    def __repr__(self):
        return f"TemplateSet({len(self)} templates)"

    def merged(self, other: "TemplateSet") -> "TemplateSet":
        """Templates of ``other`` override same-named ones in ``self``."""
        combined = dict(self._templates)
        combined.update(other._templates)
        return TemplateSet(combined.values(), other.params)

    def self_check(self, params: SimParams = None):
        """Consistency reports for every victim node in the library."""
        params = params or self.params
        return [mode_consistency(m, params, label)
                for t in self.values() for label, m in template_modes(t)]


@lru_cache(maxsize=None)
def builtin_library() -> TemplateSet:
    templates = [_static(*spec) for spec in _STATIC_CELLS]
    templates += [_xor("XOR2", False), _xor("XNOR2", True), _full_adder()]
    templates += [_pair(name) for name in _PAIRS]
    lib = TemplateSet(templates, DEFAULT_PARAMS)
    bad = [r for r in lib.self_check() if not r.passed]
    if bad:
        raise LibraryError("builtin library failed self-check:\n" +
                           "\n".join(r.describe() for r in bad))
    return lib


# -- JSON -------------------------------------------------------------------

def _mode_json(m):
    return {"mode_id": m.mode_id, "control": list(m.control_assignment),
            "data_weights": list(m.data_weights), "aux_load": m.aux_load, "margin": m.margin}


def _port_json(p):
    return {"name": p.name, "weight": p.weight}


def template_to_json(t: GateTemplate) -> dict:
    out = {
        "name": t.name,
        "data_ports": [_port_json(p) for p in t.data_ports],
        "control_ports": [_port_json(p) for p in t.control_ports],
        "output_ports": list(t.output_ports),
        "output_inverted": t.output_inverted,
        "declared_cost": t.declared_cost,
        "modes": [_mode_json(m) for m in t.modes],
    }
    if t.composite is not None:
        elements = []
        for e in t.composite.elements:
            if isinstance(e, CompositeNode):
                d = {"kind": "node", "name": e.name, "inputs": list(e.inputs),
                     "output_inverted": e.output_inverted}
                d.update({k: v for k, v in _mode_json(e.mode).items()
                          if k in ("data_weights", "aux_load", "margin")})
            else:
                d = {"kind": "inv", "name": e.name, "input": e.input}
            elements.append(d)
        out["composite"] = {"elements": elements,
                            "outputs": [list(o) for o in t.composite.outputs]}
    return out


def library_to_json(lib: TemplateSet) -> str:
    doc = {
        "xtalk_library": FORMAT_VERSION,
        "params": {"vm": str(lib.params.vm), "delta_min": str(lib.params.delta_min),
                   "c_load": lib.params.c_load},
        "templates": [template_to_json(t) for t in lib.values()],
    }
    return json.dumps(doc, indent=2) + "\n"


def _mode_from(d, mode_id=0):
    return GateMode(d.get("mode_id", mode_id), tuple(d.get("control", ())),
                    tuple(d["data_weights"]), d["aux_load"], d["margin"])


def template_from_json(d: dict) -> GateTemplate:
    try:
        data = tuple(AggressorPort(p["name"], DATA, p["weight"]) for p in d["data_ports"])
        ctrl = tuple(AggressorPort(p["name"], CONTROL, p["weight"])
                     for p in d.get("control_ports", ()))
        composite = None
        if d.get("composite"):
            elements = []
            for e in d["composite"]["elements"]:
                if e["kind"] == "node":
                    elements.append(CompositeNode(e["name"], tuple(e["inputs"]), _mode_from(e),
                                                  e.get("output_inverted", True)))
                elif e["kind"] == "inv":
                    elements.append(CompositeInverter(e["name"], e["input"]))
                else:
                    raise LibraryError(f"unknown composite element kind {e['kind']!r}")
            composite = Composite(tuple(elements),
                                  tuple(tuple(o) for o in d["composite"]["outputs"]))
        return GateTemplate(d["name"], data, ctrl, tuple(_mode_from(m) for m in d.get("modes", ())),
                            d.get("output_inverted", True), d.get("declared_cost"), composite,
                            tuple(d.get("output_ports", ("Y",))))
    except (KeyError, TypeError) as exc:
        raise LibraryError(f"template {d.get('name', '?')}: missing or bad field {exc}") from exc


def library_from_json(text: str) -> TemplateSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LibraryError(f"library JSON: {exc}") from exc
    if doc.get("xtalk_library") != FORMAT_VERSION:
        raise LibraryError("not an xtalk library document (missing 'xtalk_library': 1)")
    p = doc.get("params", {})
    params = SimParams(Fraction(p.get("vm", DEFAULT_PARAMS.vm)),
                       Fraction(p.get("delta_min", DEFAULT_PARAMS.delta_min)),
                       int(p.get("c_load", DEFAULT_PARAMS.c_load)))
    return TemplateSet([template_from_json(t) for t in doc["templates"]], params)


def load_library(path=None) -> TemplateSet:
    """Builtin library, optionally extended/overridden by a JSON file."""
    lib = builtin_library()
    if path is None:
        return lib
    with open(path, encoding="utf-8") as fh:
        user = library_from_json(fh.read())
    return lib.merged(user)
