"""Randomized move-invariance battery.

Each trial draws a diagram from a seed derived from ``(seed, trial)``, applies
every applicable move plus a few random additive ones, and checks that the
invariant and the Milnor numbers of length <= 3 are unchanged.  Moves through
self-arrow deletion or insertion (SA, C2) are only required to keep the
invariants with distinct indices.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .coloring import phi_g_to_a
from .gauss import (
    GaussDiagram,
    Move,
    applicable_moves,
    apply_move,
    emit,
    random_additive_moves,
    random_diagram,
    validate,
)
from .milnor import longitudes

SELF_ARROW_KINDS = {"SA-add", "SA-del", "C2"}


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def _mu_table(g: GaussDiagram, max_length: int) -> Dict[Tuple[int, ...], int]:
    """Nonzero ``mu_I`` with ``|I| <= max_length``, keyed by ``I``."""
    out = {}
    for lam in longitudes(g, max_length):
        for mono, c in lam.series.coeffs.items():
            if mono:
                out[mono + (lam.strand,)] = c
    return out


def _distinct(table):
    return {k: v for k, v in table.items() if len(set(k)) == len(k)}


@dataclass
class Counterexample:
    trial: int
    diagram: str
    move: Move
    reason: str

    def to_json(self) -> dict:
        m = self.move
        return {
            "trial": self.trial,
            "diagram": self.diagram,
            "move": {"kind": m.kind, "arrows": list(m.arrows), "strand": m.strand,
                     "gap": m.gap, "strand2": m.strand2, "gap2": m.gap2,
                     "sign": m.sign, "tail_first": m.tail_first},
            "reason": self.reason,
        }


@dataclass
class BatteryReport:
    trials: int = 0
    moves_checked: int = 0
    by_kind: Dict[str, int] = field(default_factory=dict)
    counterexample: Optional[Counterexample] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "trials": self.trials,
            "moves_checked": self.moves_checked,
            "by_kind": dict(sorted(self.by_kind.items())),
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
        }


def check_diagram(g: GaussDiagram, moves: List[Move], trial: int = 0,
                  max_length: int = 3, report: Optional[BatteryReport] = None) -> BatteryReport:
    report = report or BatteryReport()
    phi = phi_g_to_a(g)
    mu = _mu_table(g, max_length)
    mu_distinct = _distinct(mu)
    for m in moves:
        h = apply_move(g, m)
        reason = None
        errs = validate(h)
        if errs:
            reason = "invalid output: " + "; ".join(errs)
        elif phi_g_to_a(h) != phi:
            reason = "invariant changed"
        else:
            mu2 = _mu_table(h, max_length)
            if m.kind in SELF_ARROW_KINDS:
                if _distinct(mu2) != mu_distinct:
                    reason = "Milnor invariant with distinct indices changed"
            elif mu2 != mu:
                reason = "Milnor invariant changed"
        report.moves_checked += 1
        report.by_kind[m.kind] = report.by_kind.get(m.kind, 0) + 1
        if reason:
            report.counterexample = Counterexample(trial, emit(g), m, reason)
            break
    return report


def _draw(rng: random.Random, n_max: int, arrows_max: int) -> GaussDiagram:
    n = rng.randint(1, n_max)
    return random_diagram(n, rng.randint(0, arrows_max), rng.getrandbits(32))


def trial_diagram(seed: int, trial: int, n_max: int = 4, arrows_max: int = 8) -> GaussDiagram:
    """The diagram examined by trial ``trial`` of a battery run with ``seed``."""
    return _draw(trial_rng(seed, trial), n_max, arrows_max)


def run_trial(seed: int, trial: int, n_max: int = 4, arrows_max: int = 8,
              additive: int = 3) -> BatteryReport:
    rng = trial_rng(seed, trial)
    g = _draw(rng, n_max, arrows_max)
    moves = applicable_moves(g) + random_additive_moves(g, rng, additive)
    report = check_diagram(g, moves, trial)
    report.trials = 1
    return report


def _merge(total: BatteryReport, part: BatteryReport):
    total.trials += part.trials
    total.moves_checked += part.moves_checked
    for k, v in part.by_kind.items():
        total.by_kind[k] = total.by_kind.get(k, 0) + v
    if total.counterexample is None:
        total.counterexample = part.counterexample


def run_battery(trials: int, seed: int = 0, n_max: int = 4, arrows_max: int = 8,
                workers: int = 1) -> BatteryReport:
    """Run ``trials`` independent trials; stops at the first counterexample.

    With ``workers > 1`` trials run in processes, all of them to completion,
    and the reported counterexample is the one with the lowest trial number.
    """
    total = BatteryReport()
    if workers <= 1:
        for t in range(trials):
            _merge(total, run_trial(seed, t, n_max, arrows_max))
            if not total.ok:
                break
        return total
    with ProcessPoolExecutor(workers) as pool:
        parts = pool.map(run_trial, [seed] * trials, range(trials),
                         [n_max] * trials, [arrows_max] * trials)
        for p in parts:
            _merge(total, p)
    return total
