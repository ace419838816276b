"""Crosstalk gate templates, electrical models and calibration."""

from .calibrate import (DEFAULT_BOUNDS, CalibrationBounds, calibrate, calibrate_modes,
                        flip_set_from_rows, is_monotone, threshold_realizable)
from .injection import InjectionReport, prove_injection_infeasible
from .library import (PAIR_NAMES, TemplateSet, builtin_library, library_from_json,
                      library_to_json, load_library)
from .model import (CONTROL, DATA, DEFAULT_PARAMS, AggressorPort, Composite, CompositeInverter,
                    CompositeNode, ConsistencyReport, GateMode, GateTemplate, SimParams,
                    check_consistency, input_vectors, margin_eval, mode_consistency,
                    node_output, noise_margin, template_modes, victim_voltage)

__all__ = [
    "AggressorPort", "CONTROL", "CalibrationBounds", "Composite", "CompositeInverter",
    "CompositeNode", "ConsistencyReport", "DATA", "DEFAULT_BOUNDS", "DEFAULT_PARAMS",
    "GateMode", "GateTemplate", "InjectionReport", "PAIR_NAMES", "SimParams", "TemplateSet",
    "builtin_library", "calibrate", "calibrate_modes", "check_consistency", "flip_set_from_rows",
    "input_vectors", "is_monotone", "library_from_json", "library_to_json", "load_library",
    "margin_eval", "mode_consistency", "node_output", "noise_margin",
    "prove_injection_infeasible", "template_modes", "threshold_realizable", "victim_voltage",
]
