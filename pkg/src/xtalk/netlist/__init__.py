"""Boolean-network and crosstalk-netlist IRs, readers, writers and checks."""

from .checks import (Diagnostic, Diagnostics, levelize, max_level, net_levels, stage_levels,
                     validate)
from .ir import Buffer, Control, CrosstalkNetlist, Gate, Inverter, ordered_pins
from .logic import LogicNetwork, LogicNode, network_to_blif, parse_blif
from .xtn import parse_xtn, serialize_xtn

__all__ = [
    "Buffer", "Control", "CrosstalkNetlist", "Diagnostic", "Diagnostics", "Gate", "Inverter",
    "LogicNetwork", "LogicNode", "levelize", "max_level", "net_levels", "network_to_blif",
    "ordered_pins", "parse_blif", "parse_xtn", "serialize_xtn", "stage_levels", "validate",
]
