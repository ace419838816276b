import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import corpus_files, load_corpus
from oracles import adder, steady_state
from strategies import networks
from xtalk.errors import PairMismatch
from xtalk.gatelib import builtin_library
from xtalk.mapper import (MapOptions, insert_buffers, make_polymorphic, map_network,
                          schedule_phases)
from xtalk.metrics import transistor_count
from xtalk.netlist import Buffer, Inverter, parse_blif, parse_xtn, serialize_xtn, validate
from xtalk.polymorph import apply_key, default_key
from xtalk.simulator import verify_equivalence


def _blif(inputs, body, outputs="f"):
    return parse_blif(f".model t\n.inputs {inputs}\n.outputs {outputs}\n{body}.end\n")


def test_and2_single_instance(lib):
    netlist, report = map_network(_blif("a b", ".names a b f\n11 1\n"), lib)
    assert [i.template for i in netlist.instances] == ["AND2"]
    assert report.total == 5 == transistor_count(netlist, library=lib).total


def test_ao21_matched(lib):
    netlist, report = map_network(_blif("a b c", ".names a b c f\n11- 1\n--1 1\n"), lib)
    assert [i.template for i in netlist.instances] == ["AO21"]
    assert report.total == 5


def test_full_adder_composite(lib):
    net = load_corpus("full_adder")
    netlist, report = map_network(net, lib)
    assert [i.template for i in netlist.instances] == ["FA"]
    assert report.total == 13
    assert verify_equivalence(netlist, net).passed


def test_wide_term_is_split(lib):
    names = " ".join(f"x{i}" for i in range(7))
    netlist, _ = map_network(_blif(names, f".names {names} f\n{'1' * 7} 1\n"), lib)
    for g in netlist.gates():
        assert lib[g.template].n_inputs <= 3
    assert verify_equivalence(netlist, _blif(names, f".names {names} f\n{'1' * 7} 1\n")).passed


def test_shared_inverter(lib):
    net = _blif("a b c", ".names a b f\n01 1\n.names a c g\n01 1\n", outputs="f g")
    netlist, _ = map_network(net, lib)
    drivers = [i for i in netlist.instances if isinstance(i, Inverter) and i.input == "a"]
    assert len(drivers) <= 1
    assert verify_equivalence(netlist, net).passed


def test_constant_and_alias_outputs(lib):
    net = _blif("a", ".names one\n1\n.names a g\n1 1\n", outputs="one g")
    netlist, _ = map_network(net, lib)
    assert validate(netlist, lib).ok
    assert verify_equivalence(netlist, net).passed


def test_and_or_style(lib):
    net = load_corpus("cmp2")
    netlist, report = map_network(net, lib, MapOptions(style="and-or"))
    assert report.style == "and_or"
    assert verify_equivalence(netlist, net).passed


def test_options_validation():
    with pytest.raises(ValueError):
        MapOptions(fanout_limit=0)
    with pytest.raises(ValueError):
        MapOptions(style="nor_nor")


# -- buffers ------------------------------------------------------------------------

def _fanout_netlist(k):
    lines = ["xtn 1", "input a b", "output " + " ".join(f"y{i}" for i in range(k)),
             "gate g0 template=NAND2 phase=0 A=a B=b Y=m"]
    lines += [f"inv i{i} in=m out=y{i}" for i in range(k)]
    return parse_xtn("\n".join(lines) + "\n")


@pytest.mark.parametrize("k,drive", [(5, 2), (4, None), (9, 3)])
def test_insert_buffers(k, drive, lib):
    out = insert_buffers(_fanout_netlist(k), 4, lib)
    bufs = [i for i in out.instances if isinstance(i, Buffer)]
    if drive is None:
        assert bufs == []
    else:
        assert bufs == [Buffer("buf_m", "m_xb", "m", drive)]
        assert out.instance("g0").pins[-1] == ("Y", "m_xb")


@pytest.mark.parametrize("k", [3, 5, 9, 13])
def test_insert_buffers_idempotent(k, lib):
    once = insert_buffers(_fanout_netlist(k), 4, lib)
    assert insert_buffers(once, 4, lib) == once


# -- phases ---------------------------------------------------------------------------

def test_schedule_cascaded_nand(lib):
    text = ("xtn 1\ninput a b c\noutput y\ngate g0 template=NAND2 phase=1 A=a B=b Y=m\n"
            "gate g1 template=NAND2 phase=1 A=m B=c Y=y\n")
    out = schedule_phases(parse_xtn(text), lib)
    assert [g.phase for g in out.gates()] == [0, 1]
    assert validate(out, lib).ok


def test_schedule_parallel(lib):
    text = ("xtn 1\ninput a b\noutput y z\ngate g0 template=NAND2 phase=1 A=a B=b Y=y\n"
            "gate g1 template=NOR2 phase=1 A=a B=b Y=z\n")
    assert [g.phase for g in schedule_phases(parse_xtn(text), lib).gates()] == [0, 0]


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_mapped_netlists_alternate(path, lib):
    netlist, _ = map_network(parse_blif(path.read_text()), lib)
    diag = validate(netlist, lib)
    assert diag.ok, diag.errors


# -- polymorphic cells --------------------------------------------------------------------

def test_make_polymorphic_and2(lib):
    netlist, _ = map_network(_blif("a b", ".names a b f\n11 1\n"), lib)
    poly = make_polymorphic(netlist, {"f": "AND2_OR2"}, lib)
    g = poly.gates()[0]
    assert g.template == "AND2_OR2"
    assert poly.free_controls() == ("ctrl_f",)
    assert default_key(poly).bits == (0,)
    assert verify_equivalence(apply_key(poly, default_key(poly)),
                              _blif("a b", ".names a b f\n11 1\n")).passed


def test_make_polymorphic_or3_auto(lib):
    text = "xtn 1\ninput a b c\noutput y\ngate g0 template=OR3 phase=0 A=a B=b C=c Y=y\n"
    poly = make_polymorphic(parse_xtn(text), {"g0": None}, lib)
    g = poly.gates()[0]
    assert g.template == "OR3_AO21"
    mode = lib["OR3_AO21"].modes[default_key(poly).bits[0]]
    assert lib["OR3_AO21"].function(mode.control_assignment)[0] == lib["OR3"].function(())[0]


def test_make_polymorphic_xor_rejected(lib):
    netlist, _ = map_network(load_corpus("xor2"), lib)
    key = netlist.gates()[0].id
    with pytest.raises(PairMismatch):
        make_polymorphic(netlist, {key: None}, lib)
    with pytest.raises(PairMismatch):
        make_polymorphic(netlist, {key: "AND2_OR2"}, lib)


def test_map_with_poly_option(lib):
    net = load_corpus("poly4")
    netlist, _ = map_network(net, lib, MapOptions(polymorphic_cells=("y1", "y2", "y3", "y4")))
    assert len(netlist.free_controls()) == 4
    assert verify_equivalence(apply_key(netlist, default_key(netlist)), net).passed


# -- corpus properties ---------------------------------------------------------------------

@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_corpus_semantics_and_cost(path, lib):
    net = parse_blif(path.read_text())
    netlist, report = map_network(net, lib)
    assert verify_equivalence(netlist, net).passed
    assert report.total == transistor_count(netlist, library=lib).total
    plain, plain_report = map_network(net, lib, MapOptions(use_composites=False))
    assert verify_equivalence(plain, net).passed
    assert report.total <= plain_report.total


@pytest.mark.parametrize("name", ["cm85a", "ripple8", "mux4"])
def test_determinism(name, lib):
    a, ra = map_network(load_corpus(name), lib)
    b, rb = map_network(load_corpus(name), builtin_library())
    assert serialize_xtn(a) == serialize_xtn(b)
    assert ra.to_json() == rb.to_json()


def test_report_json_fields(lib):
    _, report = map_network(load_corpus("full_adder"), lib)
    d = report.to_dict()
    assert d["total_transistors"] == 13 and d["style"] == "nand_nand"
    assert set(d) >= {"nodes", "inverters", "buffers", "delays", "max_level"}


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(networks())
def test_random_networks_map_correctly(network):
    lib = builtin_library()
    for composites in (True, False):
        netlist, report = map_network(network, lib, MapOptions(use_composites=composites))
        assert validate(netlist, lib).ok
        assert verify_equivalence(netlist, network).passed
        assert report.total == transistor_count(netlist, library=lib).total


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 1))
def test_ripple8_adds(a, b, cin):
    lib = builtin_library()
    netlist, _ = _ripple8(lib)
    bits_a = [a >> i & 1 for i in range(8)]
    bits_b = [b >> i & 1 for i in range(8)]
    s, cout = adder(bits_a, bits_b, cin)
    got = steady_state(netlist, lib, tuple(bits_a + bits_b + [cin]))
    assert got == tuple(s) + (cout,)
    assert sum(bit << i for i, bit in enumerate(got[:8])) + (got[8] << 8) == a + b + cin


_RIPPLE = {}


def _ripple8(lib):
    if not _RIPPLE:
        _RIPPLE["v"] = map_network(load_corpus("ripple8"), lib)
    return _RIPPLE["v"]
