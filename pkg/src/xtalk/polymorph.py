"""Key bits for polymorphic cells: configuration, function atlas and key recovery.

A key assigns one bit to every free control net, in declaration order with
the first net as the most significant bit.  Keys travel as hex strings plus
a JSON manifest naming the control nets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Callable, Optional

from .errors import KeyWidthMismatch, TooManyKeys
from .gatelib.library import builtin_library
from .netlist.ir import Control
from .simulator import DEFAULT_SEED, Compiled, exhaustive_words, random_words, settle_outputs

DEFAULT_KEY_LIMIT = 16
EXHAUSTIVE_INPUTS = 12
SAMPLED_VECTORS = 1024
FOUND, AMBIGUOUS, NOT_FOUND = "found", "ambiguous", "not_found"


@dataclass(frozen=True)
class Key:
    controls: tuple
    bits: tuple

    def __post_init__(self):
        if len(self.controls) != len(self.bits):
            raise KeyWidthMismatch(f"{len(self.bits)} key bits for {len(self.controls)} controls")
        if set(self.bits) - {0, 1}:
            raise KeyWidthMismatch("key bits must be 0 or 1")

    @classmethod
    def from_int(cls, controls, value: int) -> "Key":
        w = len(controls)
        if value < 0 or value >> w:
            raise KeyWidthMismatch(f"key {value:#x} does not fit in {w} bits")
        return cls(tuple(controls), tuple(value >> (w - 1 - i) & 1 for i in range(w)))

    @classmethod
    def from_hex(cls, controls, text: str) -> "Key":
        try:
            value = int(text, 16)
        except ValueError:
            raise KeyWidthMismatch(f"bad hex key {text!r}") from None
        return cls.from_int(controls, value)

    @property
    def value(self) -> int:
        v = 0
        for b in self.bits:
            v = v << 1 | b
        return v

    @property
    def width(self) -> int:
        return len(self.bits)

    def hex(self) -> str:
        return f"{self.value:0{max(1, -(-self.width // 4))}x}"

    def manifest(self) -> str:
        return json.dumps({"controls": list(self.controls), "key": self.hex()}, indent=2) + "\n"

    @classmethod
    def from_manifest(cls, text: str) -> "Key":
        doc = json.loads(text)
        return cls.from_hex(tuple(doc["controls"]), doc["key"])


def default_key(netlist) -> Key:
    """Key made of each free control's documented default bit."""
    bits = []
    for c in netlist.controls:
        if c.free:
            if c.default is None:
                raise KeyWidthMismatch(f"free control {c.net} has no default bit")
            bits.append(c.default)
    return Key(netlist.free_controls(), tuple(bits))


def apply_key(netlist, key: Key):
    """Tie every free control net to its key bit."""
    free = netlist.free_controls()
    if len(key.bits) != len(free):
        raise KeyWidthMismatch(f"key has {len(key.bits)} bits, netlist has {len(free)} "
                               "free control nets")
    if tuple(key.controls) != free:
        raise KeyWidthMismatch(f"key controls {list(key.controls)} do not match {list(free)}")
    bits = dict(zip(key.controls, key.bits))
    return replace(netlist, controls=tuple(
        Control(c.net, bits[c.net], c.default) if c.free else c for c in netlist.controls))


def _check_width(netlist, limit):
    w = len(netlist.free_controls())
    if w > limit:
        raise TooManyKeys(f"{w} free control nets exceed the limit of {limit} key bits")
    return w


def _key_lanes(compiled, controls, keys, words, width):
    """Outputs per key: one bit-parallel run per key over the packed vectors."""
    mask = (1 << width) - 1
    out = {}
    for k in keys:
        key = Key.from_int(controls, k)
        ctrl = {c: mask if b else 0 for c, b in zip(key.controls, key.bits)}
        res = settle_outputs(compiled, words, width, controls=ctrl)
        out[k] = tuple(res[o] for o in compiled.netlist.outputs)
    return out


@dataclass(frozen=True)
class FunctionAtlas:
    controls: tuple
    inputs: tuple
    outputs: tuple
    exhaustive: bool
    vectors: int
    seed: Optional[int]
    signatures: tuple     # (key value, per-output packed word) in key order

    @property
    def n_keys(self) -> int:
        return len(self.signatures)

    @property
    def distinct(self) -> int:
        return len({s for _, s in self.signatures})

    def signature(self, key) -> tuple:
        value = key.value if isinstance(key, Key) else key
        return dict(self.signatures)[value]

    def table(self, key) -> list:
        """Output tuples per vector (exhaustive atlases: standard row order)."""
        sig = self.signature(key)
        return [tuple(w >> lane & 1 for w in sig) for lane in range(self.vectors)]

    def classes(self) -> list:
        groups = {}
        for k, s in self.signatures:
            groups.setdefault(s, []).append(k)
        return sorted(groups.values())


def enumerate_functions(netlist, limit: int = DEFAULT_KEY_LIMIT, library=None,
                        seed: int = DEFAULT_SEED, samples: int = SAMPLED_VECTORS) -> FunctionAtlas:
    width = _check_width(netlist, limit)
    compiled = Compiled(netlist, library if library is not None else builtin_library())
    n = len(netlist.inputs)
    if n <= EXHAUSTIVE_INPUTS:
        lanes, words, used_seed = 1 << n, exhaustive_words(n), None
    else:
        lanes, words, used_seed = samples, random_words(n, samples, seed), seed
    controls = netlist.free_controls()
    sigs = _key_lanes(compiled, controls, range(1 << width), dict(zip(netlist.inputs, words)),
                      lanes)
    return FunctionAtlas(controls, tuple(netlist.inputs), tuple(netlist.outputs),
                         n <= EXHAUSTIVE_INPUTS, lanes, used_seed, tuple(sorted(sigs.items())))


@dataclass(frozen=True)
class AttackResult:
    status: str
    key: Optional[Key]
    candidates: tuple     # surviving keys
    queries: int

    def to_dict(self) -> dict:
        return {"status": self.status, "key": self.key.hex() if self.key else None,
                "candidates": [k.hex() for k in self.candidates], "queries": self.queries}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def gray_vectors(n: int):
    for i in range(1 << n):
        g = i ^ (i >> 1)
        yield tuple(g >> (n - 1 - j) & 1 for j in range(n))


def brute_force_key(netlist, oracle: Callable, max_queries: Optional[int] = None,
                    limit: int = DEFAULT_KEY_LIMIT, library=None) -> AttackResult:
    """Recover the key by querying ``oracle`` on vectors in Gray-code order.

    Every key inconsistent with an observed output is eliminated.  The scan
    stops when no candidate is left or the vectors (or ``max_queries``) run
    out, so a surviving key agrees with the oracle on every queried vector.
    """
    width = _check_width(netlist, limit)
    compiled = Compiled(netlist, library if library is not None else builtin_library())
    controls = netlist.free_controls()
    n = len(netlist.inputs)
    budget = (1 << n) if max_queries is None else min(max_queries, 1 << n)
    alive = list(range(1 << width))
    queries = 0
    # keys ride the lanes: lane k carries key k
    lanes = 1 << width
    mask = (1 << lanes) - 1
    ctrl = {c: sum(1 << k for k in range(lanes) if Key.from_int(controls, k).bits[i])
            for i, c in enumerate(controls)}
    for vector in gray_vectors(n):
        if queries >= budget or not alive:
            break
        want = tuple(oracle(vector))
        queries += 1
        words = {x: mask if b else 0 for x, b in zip(netlist.inputs, vector)}
        got = settle_outputs(compiled, words, lanes, controls=ctrl)
        outs = [got[o] for o in netlist.outputs]
        alive = [k for k in alive if tuple(w >> k & 1 for w in outs) == want]
    keys = tuple(Key.from_int(controls, k) for k in alive)
    if not keys:
        return AttackResult(NOT_FOUND, None, (), queries)
    if len(keys) == 1:
        return AttackResult(FOUND, keys[0], keys, queries)
    return AttackResult(AMBIGUOUS, None, keys, queries)


def netlist_oracle(netlist, library=None) -> Callable:
    """Black-box oracle simulating a fully configured netlist."""
    compiled = Compiled(netlist, library if library is not None else builtin_library())
    ctrl = {c.net: c.default for c in netlist.controls if c.free}

    def query(vector):
        words = dict(zip(netlist.inputs, vector))
        res = settle_outputs(compiled, words, 1, controls=ctrl)
        return tuple(res[o] for o in netlist.outputs)
    return query


def network_oracle(network) -> Callable:
    def query(vector):
        return network.evaluate(vector)
    return query


__all__ = ["AMBIGUOUS", "AttackResult", "FOUND", "FunctionAtlas", "Key", "NOT_FOUND",
           "apply_key", "brute_force_key", "default_key", "enumerate_functions", "gray_vectors",
           "netlist_oracle", "network_oracle"]
