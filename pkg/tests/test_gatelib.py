import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_threshold, divider_voltage, is_monotone_brute, vectors
from xtalk.errors import InconsistentMode, Infeasible, LibraryError, ModeNotFound
from xtalk.gatelib import (DEFAULT_PARAMS, GateMode, GateTemplate, SimParams,
                           calibrate, calibrate_modes, check_consistency, flip_set_from_rows,
                           is_monotone, library_from_json, library_to_json, margin_eval,
                           mode_consistency, noise_margin, prove_injection_infeasible,
                           template_modes, threshold_realizable, victim_voltage)
from xtalk.gatelib.library import _PAIRS, _STATIC
from xtalk.gatelib.model import AggressorPort

AND = (0, 0, 0, 1)
OR = (0, 1, 1, 1)


def table_of(fn, n):
    return tuple(int(fn(x)) for x in vectors(n))


# -- parameters and model --------------------------------------------------

def test_default_params():
    p = SimParams()
    assert (p.vm, p.delta_min, p.c_load, p.vdd_norm) == (Fraction(3, 10), Fraction(1, 50), 1, 1)


@pytest.mark.parametrize("vm,delta", [(0, Fraction(1, 50)), (1, 0), (Fraction(1, 100), Fraction(1, 50)),
                                      (Fraction(99, 100), Fraction(1, 50))])
def test_params_invariants(vm, delta):
    with pytest.raises(ValueError):
        SimParams(vm, delta)


def test_mode_rejects_unreachable_margin():
    with pytest.raises(LibraryError):
        GateMode(0, (), (10, 10), 0, 21)


def test_library_contents(lib):
    for name in ["NAND2", "NOR2", "AND2", "OR2", "AND3", "OR3", "MAJ3", "AO21", "OA21",
                 "XOR2", "XNOR2", "FA", "AND2_OR2", "AND3_OR3", "AO21_OA21", "AND3_AO21",
                 "AND3_OA21", "OR3_AO21", "OR3_OA21"]:
        assert name in lib
    assert lib["FA"].declared_cost == 13
    assert lib["FA"].output_ports == ("S", "CO")


def test_and2_mode_values(lib):
    m = lib["AND2"].mode(0)
    assert (m.data_weights, m.aux_load, m.margin) == ((10, 10), 20, 20)
    pair = lib["AND2_OR2"]
    assert (pair.mode(1).aux_load, pair.mode(1).margin) == (0, 10)


def test_margin_eval_examples(lib):
    pair = lib["AND2_OR2"]
    assert margin_eval(pair, 0, (1, 0)) == 0
    assert margin_eval(pair, 1, (1, 0)) == 1
    assert margin_eval(lib["MAJ3"], 0, (1, 0, 1)) == 1
    for x in vectors(3):
        assert margin_eval(lib["MAJ3"], 0, x) == int(sum(x) >= 2)
    with pytest.raises(ModeNotFound):
        margin_eval(pair, 7, (1, 0))


def test_node_output_inversion(lib):
    assert lib["NAND2"].evaluate((1, 1)) == (0,)
    assert lib["AND2"].evaluate((1, 1)) == (1,)


def test_victim_voltage_examples(lib):
    assert victim_voltage(lib["AND2"], 0, (1, 0), DEFAULT_PARAMS) == Fraction(10, 41)
    assert victim_voltage(lib["AND2"], 0, (1, 1), DEFAULT_PARAMS) == Fraction(20, 41)
    for t in lib.values():
        for label, m in template_modes(t):
            assert m.voltage((0,) * len(m.data_weights), DEFAULT_PARAMS) == 0


def test_check_consistency_examples(lib):
    assert check_consistency(lib["AND2"], 0).passed
    assert check_consistency(lib["AND2"], 0).worst_slack >= Fraction(1, 50)
    assert check_consistency(lib["OR3"], 0).passed
    bad = GateTemplate("BAD", (AggressorPort("A", "data", 10), AggressorPort("B", "data", 10)),
                       modes=(GateMode(0, (), (10, 10), 0, 20),))
    report = check_consistency(bad, 0)
    assert not report.passed
    assert (1, 0) in [v.inputs for v in report.violations]
    assert Fraction(10, 21) in [v.voltage for v in report.violations]


def test_noise_margin_examples(lib):
    assert noise_margin(lib["AND2"], 0) == Fraction(23, 410)
    assert noise_margin(lib["OR3"], 0) == Fraction(10, 31) - Fraction(3, 10)
    # a vector landing exactly on vm: weights 30, total 100 -> 3/10
    exact = GateTemplate("EDGE", (AggressorPort("A", "data", 30),),
                         modes=(GateMode(0, (), (30,), 69, 30),))
    with pytest.raises(InconsistentMode):
        noise_margin(exact, 0)


def test_model_agreement_all_builtin(lib):
    for t in lib.values():
        for label, m in template_modes(t):
            for x in vectors(len(m.data_weights)):
                v = m.voltage(x, DEFAULT_PARAMS)
                assert v == divider_voltage(m.data_weights, m.aux_load, 1, x)
                assert m.flips(x) == (v >= DEFAULT_PARAMS.vm), (label, x)
                assert 0 <= v < 1
                assert (v == 0) == (not any(x))
            assert mode_consistency(m, DEFAULT_PARAMS).worst_slack >= Fraction(1, 50)


def test_monotonicity_all_builtin(lib):
    for t in lib.values():
        for _, m in template_modes(t):
            n = len(m.data_weights)
            for x in vectors(n):
                for i in range(n):
                    if not x[i]:
                        y = x[:i] + (1,) + x[i + 1:]
                        assert m.voltage(y, DEFAULT_PARAMS) >= m.voltage(x, DEFAULT_PARAMS)
                        assert m.flips(y) >= m.flips(x)


def test_polymorphism_and2_or2(lib):
    pair = lib["AND2_OR2"]
    assert pair.function((0,)) == (AND,)
    assert pair.function((1,)) == (OR,)
    assert len(pair.modes) == 2


def test_composite_functions(lib):
    xor = table_of(lambda x: x[0] ^ x[1], 2)
    assert lib["XOR2"].function() == (xor,)
    assert lib["XNOR2"].function() == (tuple(1 - v for v in xor),)
    s = table_of(lambda x: sum(x) % 2, 3)
    c = table_of(lambda x: sum(x) >= 2, 3)
    assert lib["FA"].function() == (s, c)


def test_pair_functions(lib):
    fns = {
        "AND2": AND, "OR2": OR,
        "AND3": table_of(all, 3), "OR3": table_of(any, 3),
        "AO21": table_of(lambda x: (x[0] and x[1]) or x[2], 3),
        "OA21": table_of(lambda x: (x[0] or x[1]) and x[2], 3),
    }
    for name in _PAIRS:
        first, second = name.split("_")
        t = lib[name]
        assert t.function((0,)) == (fns[first],)
        assert t.function((1,)) == (fns[second],)


# -- calibration -------------------------------------------------------------

@pytest.mark.parametrize("kind", sorted(_STATIC))
def test_builtin_static_modes_are_calibrated(kind, lib):
    weights, aux, margin = _STATIC[kind]
    table = GateMode(0, (), weights, aux, margin).flip_table()
    m = calibrate(table)
    assert (m.data_weights, m.aux_load, m.margin) == (weights, aux, margin)


def _min_cost_oracle(table, n, params=DEFAULT_PARAMS):
    """Exhaustive minimal (cost, weights) mode with the same search grid."""
    best = None
    for w in itertools.product(range(10, 81, 10), repeat=n):
        flips = [sum(a for a, b in zip(w, x) if b) for x, f in zip(vectors(n), table) if f]
        offs = [sum(a for a, b in zip(w, x) if b) for x, f in zip(vectors(n), table) if not f]
        if not flips or (offs and max(offs) >= min(flips)):
            continue
        for aux in range(0, 81, 10):
            m = GateMode(0, (), w, aux, min(flips))
            if mode_consistency(m, params).passed:
                key = (sum(w) + aux, w)
                if best is None or key < best[0]:
                    best = (key, m)
                break
    return best[1] if best else None


@pytest.mark.parametrize("fn", [
    lambda x: x[0] and x[1], lambda x: x[0] or x[1], lambda x: x[0],
    lambda x: sum(x) >= 2, lambda x: (x[0] and x[1]) or x[2], lambda x: x[0] and (x[1] or x[2]),
])
def test_calibrate_is_minimal(fn):
    for n in (2, 3):
        try:
            table = table_of(fn, n)
        except IndexError:
            continue
        expect = _min_cost_oracle(table, n)
        got = calibrate(table)
        assert (got.data_weights, got.aux_load, got.margin) == \
            (expect.data_weights, expect.aux_load, expect.margin)


def test_calibrate_xor_not_threshold():
    with pytest.raises(Infeasible) as exc:
        calibrate((0, 1, 1, 0))
    assert exc.value.reason == Infeasible.NOT_THRESHOLD


def test_calibrate_constant_false():
    with pytest.raises(Infeasible):
        calibrate((0, 0, 0, 0))


def test_calibrate_bounds_exhausted():
    # a six-input OR cannot keep one input above vm + delta with the load of five others
    with pytest.raises(Infeasible) as exc:
        calibrate(table_of(any, 6))
    assert exc.value.reason == Infeasible.BOUNDS_EXHAUSTED


def test_calibrate_fixed_weights():
    m = calibrate(table_of(all, 3), weights=(10, 10, 20))
    assert (m.data_weights, m.aux_load, m.margin) == ((10, 10, 20), 70, 40)


def test_calibrate_modes_pairs():
    for name, modes in _PAIRS.items():
        first, second = name.split("_")
        tables = [GateMode(0, (), *spec).flip_table() for spec in modes]
        got = calibrate_modes(tables)
        assert [(m.data_weights, m.aux_load, m.margin) for m in got] == list(modes), name


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 1), min_size=2 ** n, max_size=2 ** n))))
def test_calibrate_sound_and_complete(case):
    n, table = case
    table = tuple(table)
    realizable = brute_force_threshold(table, n)
    if realizable:
        m = calibrate(table)
        assert m.flip_table() == table
        assert mode_consistency(m, DEFAULT_PARAMS).passed
    else:
        with pytest.raises(Infeasible) as exc:
            calibrate(table)
        assert exc.value.reason == Infeasible.NOT_THRESHOLD


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=8, max_size=8))
def test_is_monotone_matches_oracle(table):
    assert is_monotone(tuple(table), 3) == is_monotone_brute(table, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=8, max_size=8))
def test_threshold_lp_matches_brute_force(table):
    table = tuple(table)
    if any(table) and not table[0]:
        assert threshold_realizable(table) == brute_force_threshold(table, 3)


def test_flip_set_from_rows():
    assert flip_set_from_rows({"11"}, 2) == AND
    with pytest.raises(ValueError):
        flip_set_from_rows({"1x"}, 2)


# -- library JSON --------------------------------------------------------------

def test_library_json_round_trip(lib):
    text = library_to_json(lib)
    back = library_from_json(text)
    assert list(back) == list(lib)
    for name in lib:
        assert back[name] == lib[name]
    assert library_to_json(back) == text


def test_library_json_rejects_foreign_document():
    with pytest.raises(LibraryError):
        library_from_json(json.dumps({"templates": []}))
    with pytest.raises(LibraryError):
        library_from_json("{not json")


# -- injection lemma -----------------------------------------------------------

def test_injection_report():
    r = prove_injection_infeasible()
    assert len(r.cases) == 8
    assert r.collision_weight == 20
    pairs = {((x.ct, x.a, x.b), (y.ct, y.a, y.b)) for x, y in r.collisions}
    assert ((0, 1, 1), (1, 0, 0)) in pairs
    assert all(p.collision for p in r.scan) and len(r.scan) == 99
    assert r.load_mod_realizes_both
    assert all(p.load_mod_realized for p in r.scan)
    assert r.to_text() == prove_injection_infeasible().to_text()
