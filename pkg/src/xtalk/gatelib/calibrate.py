"""Search for integer coupling weights that realize a flip set.

The search is exhaustive over the weight grid described by
:class:`CalibrationBounds`; the grid is evaluated with numpy so that six-input
cells stay tractable.  Results are ordered by total capacitance
(``sum(weights) + aux_load``) and then by the weight vector, which makes
library builds reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from ..errors import Infeasible
from .model import DEFAULT_PARAMS, GateMode, SimParams, input_vectors, mode_consistency

MAX_INPUTS = 6
_CHUNK = 1 << 15


@dataclass(frozen=True)
class CalibrationBounds:
    max_weight: int = 80
    max_aux: int = 80
    weight_granularity: int = 10

    def __post_init__(self):
        if min(self.max_weight, self.max_aux, self.weight_granularity) <= 0:
            raise ValueError("calibration bounds must be positive")

    def weight_values(self):
        return np.arange(self.weight_granularity, self.max_weight + 1, self.weight_granularity)

    def aux_values(self):
        return np.arange(0, self.max_aux + 1, self.weight_granularity)


DEFAULT_BOUNDS = CalibrationBounds()


def flip_set_from_rows(rows, n: int) -> tuple:
    """Build a truth table from row strings such as ``{"11"}``."""
    rows = {r if isinstance(r, str) else "".join(map(str, r)) for r in rows}
    for r in rows:
        if len(r) != n or set(r) - {"0", "1"}:
            raise ValueError(f"bad row {r!r} for {n} inputs")
    return tuple(int("".join(map(str, x)) in rows) for x in input_vectors(n))


def _arity(flip_set) -> int:
    size = len(flip_set)
    n = size.bit_length() - 1
    if size < 2 or 1 << n != size:
        raise ValueError(f"flip set length {size} is not a power of two")
    if n > MAX_INPUTS:
        raise ValueError(f"calibrate supports at most {MAX_INPUTS} inputs, got {n}")
    return n


def is_monotone(table: Sequence[int], n: int) -> bool:
    for r in range(len(table)):
        for j in range(n):
            if table[r] and not table[r | 1 << j]:
                return False
    return True


def threshold_realizable(flip_set: Sequence[int]) -> bool:
    """Real-valued feasibility of ``[w.x >= M]`` with every ``w_i >= 1``.

    A feasible rational solution scales to an integer one, so this decides
    whether the function is a positive threshold function at all.
    """
    n = _arity(flip_set)
    X = np.array(list(input_vectors(n)), dtype=float)
    on = np.array(flip_set, dtype=bool)
    if not on.any() or on[0]:
        return False
    # variables: w_1..w_n, M
    A_on = np.hstack([-X[on], np.ones((on.sum(), 1))])        # M - w.x <= 0
    A_off = np.hstack([X[~on], -np.ones(((~on).sum(), 1))])   # w.x - M <= -1
    A = np.vstack([A_on, A_off])
    b = np.concatenate([np.zeros(on.sum()), -np.ones((~on).sum())])
    res = linprog(np.zeros(n + 1), A_ub=A, b_ub=b,
                  bounds=[(1, None)] * n + [(1, None)], method="highs")
    return res.status == 0


def _thresholds(params: SimParams):
    hi = params.vm + params.delta_min
    lo = params.vm - params.delta_min
    return hi, lo


def _aux_ok(minflip, maxoff, wsum, aux, params):
    """Vectorized consistency test for candidate rows (numpy int arrays)."""
    hi, lo = _thresholds(params)
    D = wsum + aux + params.c_load
    ok = minflip * hi.denominator >= hi.numerator * D
    if params.delta_min > 0:
        ok &= maxoff * lo.denominator <= lo.numerator * D
    else:
        vm = params.vm
        ok &= maxoff * vm.denominator < vm.numerator * D
    return ok


def _weight_grid(n, bounds, weights):
    if weights is not None:
        yield np.array([weights], dtype=np.int64)
        return
    vals = bounds.weight_values()
    total = len(vals) ** n
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK))
        digits = []
        for _ in range(n):
            digits.append(idx % len(vals))
            idx = idx // len(vals)
        # first input most significant -> lexicographic order of the grid
        yield vals[np.stack(digits[::-1], axis=1)]


def _scan(tables, params, bounds, weights=None):
    """Best (weights, auxes) pair serving every table with shared weights."""
    n = _arity(tables[0])
    X = np.array(list(input_vectors(n)), dtype=np.int64)
    masks = [np.array(t, dtype=bool) for t in tables]
    auxes = bounds.aux_values()
    best = None
    any_behavioral = False
    for W in _weight_grid(n, bounds, weights):
        S = W @ X.T
        valid = np.ones(len(W), dtype=bool)
        mins, maxs = [], []
        for on in masks:
            mn = S[:, on].min(axis=1)
            mx = S[:, ~on].max(axis=1)
            valid &= mn > mx
            mins.append(mn)
            maxs.append(mx)
        if not valid.any():
            continue
        any_behavioral = True
        W, wsum = W[valid], W[valid].sum(axis=1)
        chosen = []
        feasible = np.ones(len(W), dtype=bool)
        for mn, mx in zip(mins, maxs):
            mn, mx = mn[valid], mx[valid]
            ok = np.stack([_aux_ok(mn, mx, wsum, a, params) for a in auxes], axis=1)
            has = ok.any(axis=1)
            feasible &= has
            chosen.append(auxes[np.argmax(ok, axis=1)])
        if not feasible.any():
            continue
        A = np.stack(chosen, axis=1)[feasible]
        W, wsum = W[feasible], wsum[feasible]
        totals = wsum + A.sum(axis=1)
        keys = [W[:, j] for j in range(n - 1, -1, -1)] + [totals]
        i = np.lexsort(keys)[0]
        cand = (int(totals[i]), tuple(int(v) for v in W[i]), tuple(int(a) for a in A[i]))
        if best is None or cand[:2] < best[:2]:
            best = cand
    return best, any_behavioral


def _mode(table, weights, aux, params, mode_id=0, controls=()):
    n = len(weights)
    margin = min(sum(w for w, x in zip(weights, v) if x)
                 for v, f in zip(input_vectors(n), table) if f)
    mode = GateMode(mode_id, controls, weights, aux, margin)
    report = mode_consistency(mode, params)
    assert report.passed and mode.flip_table() == tuple(table), report.describe()
    return mode


def _precheck(table):
    n = _arity(table)
    if set(table) - {0, 1}:
        raise ValueError("flip set entries must be 0 or 1")
    if not any(table):
        raise Infeasible(Infeasible.NOT_THRESHOLD,
                         "nothing may flip: margin would have to exceed the sum of weights")
    if table[0]:
        raise Infeasible(Infeasible.NOT_THRESHOLD, "the all-zero vector cannot flip a victim")
    if not is_monotone(table, n):
        raise Infeasible(Infeasible.NOT_THRESHOLD, "flip set is not monotone")
    return n


def calibrate(flip_set: Sequence[int], params: SimParams = DEFAULT_PARAMS,
              bounds: CalibrationBounds = DEFAULT_BOUNDS,
              weights: Optional[Sequence[int]] = None) -> GateMode:
    """Minimal-capacitance mode realizing ``flip_set`` (a ``2**n`` truth table).

    When ``weights`` is given only the auxiliary load is searched.
    Raises :class:`~xtalk.errors.Infeasible` when no mode exists.
    """
    table = tuple(int(b) for b in flip_set)
    n = _precheck(table)
    if weights is not None and len(weights) != n:
        raise ValueError("fixed weight vector has the wrong arity")
    best, behavioral = _scan([table], params, bounds, weights)
    if best is None:
        if not behavioral and not threshold_realizable(table):
            raise Infeasible(Infeasible.NOT_THRESHOLD, "no positive weights separate the flip set")
        raise Infeasible(Infeasible.BOUNDS_EXHAUSTED,
                         f"no weights/aux within {bounds} meet the noise margin")
    _, w, aux = best
    return _mode(table, w, aux[0], params)


def calibrate_modes(flip_sets: Sequence[Sequence[int]], params: SimParams = DEFAULT_PARAMS,
                    bounds: CalibrationBounds = DEFAULT_BOUNDS) -> tuple:
    """Modes for a polymorphic cell, one per flip set (control value = index).

    Shared coupling weights with per-mode auxiliary load are preferred; when no
    shared vector fits, each mode gets its own weights (switched branches).
    """
    tables = [tuple(int(b) for b in t) for t in flip_sets]
    for t in tables:
        _precheck(t)
    if len({len(t) for t in tables}) != 1:
        raise ValueError("flip sets differ in arity")
    n_ctrl = max(1, (len(tables) - 1).bit_length())
    ctrl = [tuple(int(b) for b in format(i, f"0{n_ctrl}b")) for i in range(len(tables))]
    best, _ = _scan(tables, params, bounds)
    if best is not None:
        _, w, auxes = best
        return tuple(_mode(t, w, a, params, i, ctrl[i]) for i, (t, a) in enumerate(zip(tables, auxes)))
    modes = []
    for i, t in enumerate(tables):
        m = calibrate(t, params, bounds)
        modes.append(GateMode(i, ctrl[i], m.data_weights, m.aux_load, m.margin))
    return tuple(modes)
