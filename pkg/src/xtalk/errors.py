"""Exception hierarchy shared by all xtalk modules.

The CLI maps each family onto a stable exit code, see :mod:`xtalk.cli`.
"""


class XtalkError(Exception):
    """Base class for every error raised by this package."""


# -- gate library -----------------------------------------------------------

class ModeNotFound(XtalkError):
    def __init__(self, template, mode_id):
        super().__init__(f"template {template!r} has no mode {mode_id!r}")
        self.template = template
        self.mode_id = mode_id


class InconsistentMode(XtalkError):
    """A mode whose behavioral and analytical decisions disagree."""


class Infeasible(XtalkError):
    """Raised by :func:`xtalk.gatelib.calibrate` when no mode exists.

    ``reason`` is one of :data:`NOT_THRESHOLD` or :data:`BOUNDS_EXHAUSTED`.
    """

    NOT_THRESHOLD = "NotThreshold"
    BOUNDS_EXHAUSTED = "BoundsExhausted"

    def __init__(self, reason, detail=""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


class LibraryError(XtalkError):
    """Malformed template or template-set description."""


# -- parsing ----------------------------------------------------------------

class ParseError(XtalkError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class Unsupported(ParseError):
    """A syntactically valid construct outside the supported subset."""


class UnknownTemplate(ParseError):
    pass


class DuplicateDriver(ParseError):
    pass


# -- structure --------------------------------------------------------------

class CycleDetected(XtalkError):
    def __init__(self, cycle):
        super().__init__("combinational cycle through " + " -> ".join(cycle))
        self.cycle = list(cycle)


class NetlistError(XtalkError):
    """Structural problem that makes a netlist unusable."""


class UndrivenNet(NetlistError):
    def __init__(self, net):
        super().__init__(f"net {net!r} has no driver")
        self.net = net


# -- mapping ----------------------------------------------------------------

class MappingError(XtalkError):
    pass


class UnmappableNode(MappingError):
    def __init__(self, node, reason):
        super().__init__(f"node {node!r}: {reason}")
        self.node = node
        self.reason = reason


class MissingTemplate(MappingError):
    def __init__(self, name):
        super().__init__(f"library lacks required template {name!r}")
        self.name = name


class PairMismatch(MappingError):
    def __init__(self, node, detail):
        super().__init__(f"node {node!r}: {detail}")
        self.node = node


# -- simulation / verification ---------------------------------------------

class StimulusWidthMismatch(XtalkError):
    pass


class InterfaceMismatch(XtalkError):
    def __init__(self, missing):
        super().__init__("interface mismatch: " + ", ".join(missing))
        self.missing = list(missing)


# -- keys -------------------------------------------------------------------

class KeyWidthMismatch(XtalkError):
    pass


class TooManyKeys(XtalkError):
    pass
