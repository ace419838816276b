"""Why the control input of a polymorphic cell cannot simply inject charge.

If Ct were one more aggressor (weight 20 next to A and B at 10 each) sharing
the victim's single capacitive divider, then ``(Ct=1, A=B=0)`` and
``(Ct=0, A=B=1)`` both put a total weight of 20 on the victim.  They produce
the same voltage, hence the same decision for *every* inverter threshold, yet
AND2-at-Ct=0 needs the second case to flip while OR2-at-Ct=1 needs the first
one to stay low.  The builtin cells therefore switch load (and, where needed,
coupling branches) instead of injecting charge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .library import builtin_library
from .model import DEFAULT_PARAMS

W_DATA = 10
W_CTRL = 20
SCAN = tuple(Fraction(k, 100) for k in range(1, 100))


@dataclass(frozen=True)
class Case:
    ct: int
    a: int
    b: int
    injected: int
    required_flip: int
    load_mod_flip: int


@dataclass(frozen=True)
class ScanPoint:
    vm: Fraction
    collision: bool
    failing_requirement: str
    load_mod_realized: bool
    load_mod_charge_agrees: bool


@dataclass(frozen=True)
class InjectionReport:
    cases: tuple
    collisions: tuple  # ((case, case), ...) equal injected weight, different requirement
    scan: tuple

    @property
    def collision_weight(self):
        return self.collisions[0][0].injected if self.collisions else None

    @property
    def load_mod_realizes_both(self) -> bool:
        return all(c.load_mod_flip == c.required_flip for c in self.cases)

    def to_text(self) -> str:
        lines = ["injection model: w_A = w_B = %d, w_Ct = %d, one shared divider" % (W_DATA, W_CTRL),
                 "Ct A B  injected  required  load-mod"]
        for c in self.cases:
            lines.append(f" {c.ct} {c.a} {c.b}  {c.injected:8d}  {c.required_flip:8d}  {c.load_mod_flip:8d}")
        for x, y in self.collisions:
            lines.append(f"collision: (Ct={x.ct},A={x.a},B={x.b}) and (Ct={y.ct},A={y.a},B={y.b}) "
                         f"both inject {x.injected} but require flip {x.required_flip} vs {y.required_flip}")
        hits = sum(p.collision for p in self.scan)
        realized = sum(p.load_mod_realized for p in self.scan)
        lines.append(f"threshold scan: collision at {hits}/{len(self.scan)} values of vm")
        lines.append(f"load modulation: both modes realized at {realized}/{len(self.scan)} values of vm")
        agree = [p.vm for p in self.scan if p.load_mod_charge_agrees]
        if agree:
            lines.append(f"builtin AND2_OR2 charge model agrees with its margins for vm in "
                         f"[{agree[0]}, {agree[-1]}] ({len(agree)} scan points)")
        return "\n".join(lines) + "\n"


def _required(ct, a, b):
    return int(a or b) if ct else int(a and b)


def prove_injection_infeasible(params=DEFAULT_PARAMS) -> InjectionReport:
    cell = builtin_library()["AND2_OR2"]
    cases = []
    for ct, a, b in itertools.product((0, 1), repeat=3):
        injected = W_CTRL * ct + W_DATA * (a + b)
        cases.append(Case(ct, a, b, injected, _required(ct, a, b),
                          int(cell.mode_for((ct,)).flips((a, b)))))
    collisions = tuple((x, y) for x, y in itertools.combinations(cases, 2)
                       if x.injected == y.injected and x.required_flip != y.required_flip)

    denom = 2 * W_DATA + W_CTRL + params.c_load
    scan = []
    for vm in SCAN:
        failing = ""
        collide = False
        for x, y in collisions:
            # identical injected weight -> identical voltage -> identical decision
            fx = Fraction(x.injected, denom) >= vm
            fy = Fraction(y.injected, denom) >= vm
            if fx == fy:
                collide = True
                bad = x if fx != bool(x.required_flip) else y
                failing = "OR2 at Ct=1" if bad.ct else "AND2 at Ct=0"
        realized = all(
            int(cell.mode_for((c.ct,)).flips((c.a, c.b))) == c.required_flip for c in cases)
        agrees = all(
            (cell.mode_for((c.ct,)).voltage((c.a, c.b), params) >= vm) == bool(c.required_flip)
            for c in cases)
        scan.append(ScanPoint(vm, collide, failing, realized, agrees))
    return InjectionReport(tuple(cases), collisions, tuple(scan))
