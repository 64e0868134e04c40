"""Tail intervals, the coloring map, and the invariant in Aut_C(RF_n).

A tail interval is a stretch of strand between consecutive heads (or strand
endpoints).  The coloring assigns to each interval a conjugate of its strand's
generator, starting from ``x_i`` at the bottom of strand ``i`` and, at each
head ``h`` of sign ``e``, conjugating by the color of the interval holding the
matching tail raised to ``e``.  Reading the top intervals gives a conjugating
automorphism, which classifies diagrams up to welded moves and self-arrow
deletion.

Colors are computed on the multilinear expansions of their conjugators, which
is exact in RF_n and keeps sizes bounded; words are recovered at the end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .freegroup import (
    Coeffs,
    Word,
    conjugate,
    invert,
    series_inverse,
    series_mul,
    series_restrict,
)
from .gauss import Arrow, GaussDiagram, horizontal_order
from .reduced import ConjAut, InternalError, MultilinearPoly, ReducedElement, rf_equal


class NotHorizontal(ValueError):
    pass


@dataclass(frozen=True, order=True)
class TailInterval:
    strand: int
    rank: int  # 0 at the bottom endpoint


@dataclass(frozen=True)
class HeadData:
    arrow: int
    sign: int
    minus: TailInterval
    plus: TailInterval
    zero: TailInterval


@dataclass(frozen=True)
class IntervalData:
    intervals: Tuple[TailInterval, ...]
    heads: Tuple[Tuple[HeadData, ...], ...]  # per strand, bottom to top
    tail_interval: Dict[int, TailInterval]

    def bottom(self, i: int) -> TailInterval:
        return TailInterval(i, 0)

    def top(self, i: int) -> TailInterval:
        return TailInterval(i, len(self.heads[i - 1]))


ColorMap = Dict[TailInterval, Word]


def tail_intervals(g: GaussDiagram) -> IntervalData:
    intervals = []
    tail_of: Dict[int, TailInterval] = {}
    for s, seq in enumerate(g.sequences(), start=1):
        rank = 0
        intervals.append(TailInterval(s, 0))
        for a, kind in seq:
            if kind == "T":
                tail_of[a] = TailInterval(s, rank)
            else:
                rank += 1
                intervals.append(TailInterval(s, rank))
    heads = []
    for s, seq in enumerate(g.sequences(), start=1):
        rank = 0
        row = []
        for a, kind in seq:
            if kind == "H":
                row.append(HeadData(a, g.arrows[a].sign, TailInterval(s, rank),
                                    TailInterval(s, rank + 1), tail_of[a]))
                rank += 1
        heads.append(tuple(row))
    return IntervalData(tuple(intervals), tuple(heads), tail_of)


def _meridian(conj: Coeffs, s: int, sign: int, n: int) -> Coeffs:
    """Multilinear expansion of ``(x_s^c)^sign`` given that of ``c``."""
    inv = series_inverse(conj, n, True)
    mid = {(): 1, (s,): sign}
    return series_mul(series_mul(inv, mid, n, True), conj, n, True)


def conjugator_polys(g: GaussDiagram, data: IntervalData = None) -> Dict[TailInterval, Coeffs]:
    """Multilinear expansions of each interval's conjugator (``x_s``-free).

    Fixed-point iteration: every interval starts at ``x_s``; sweeps run
    bottom-to-top along strands in index order.  Each sweep is exact one
    lower-central degree deeper, so RF_n (class <= n) settles within n sweeps.
    """
    n = g.n
    data = data or tail_intervals(g)
    conj: Dict[TailInterval, Coeffs] = {t: {(): 1} for t in data.intervals}
    for _ in range(n + 1):
        changed = False
        for s in range(1, n + 1):
            for h in data.heads[s - 1]:
                z = h.zero
                m = _meridian(conj[z], z.strand, h.sign, n)
                new = series_restrict(series_mul(conj[h.minus], m, n, True), s)
                if new != conj[h.plus]:
                    conj[h.plus] = new
                    changed = True
        if not changed:
            return conj
    raise InternalError("coloring did not stabilize within n+1 sweeps")


def color(g: GaussDiagram, verify: bool = True) -> ColorMap:
    """The unique RF_n coloring, as words ``x_s^{c}`` with canonical ``c``."""
    data = tail_intervals(g)
    conj = conjugator_polys(g, data)
    out: ColorMap = {}
    for t, c in conj.items():
        cw = ReducedElement(poly=MultilinearPoly._raw(g.n, c)).word
        out[t] = conjugate(Word.gen(t.strand, g.n), cw)
    if verify:
        for s in range(1, g.n + 1):
            if out[data.bottom(s)] != Word.gen(s, g.n):
                raise InternalError(f"bottom color of strand {s} is not x{s}")
            for h in data.heads[s - 1]:
                zc = out[h.zero] if h.sign > 0 else invert(out[h.zero])
                if not rf_equal(out[h.plus], conjugate(out[h.minus], zc)):
                    raise InternalError(f"coloring relation fails at head of arrow {h.arrow}")
    return out


def phi_g_to_a(g: GaussDiagram) -> ConjAut:
    """The conjugating automorphism ``x_i -> color(top of strand i)``."""
    data = tail_intervals(g)
    conj = conjugator_polys(g, data)
    polys = [MultilinearPoly._raw(g.n, conj[data.top(i)]) for i in range(1, g.n + 1)]
    return ConjAut.from_polys(polys)


def phi_a_to_g(f: ConjAut) -> GaussDiagram:
    """Ascending diagram realizing ``f``, one arrow per conjugator letter.

    Letters are processed in (strand, position) order; each new arrow has its
    head at the very top of strand ``i`` and its tail at the very bottom of
    the letter's strand.
    """
    n = f.n
    seqs: List[list] = [[] for _ in range(n)]
    signs = {}
    for i, g in enumerate(f.conjugators, start=1):
        for j, e in g.word.pairs():
            a = len(signs)
            signs[a] = e
            seqs[i - 1].append((a, "H"))
            seqs[j - 1].insert(0, (a, "T"))
    return GaussDiagram.from_sequences(n, signs, seqs)


def ascending_conjugators(g: GaussDiagram) -> List[Word]:
    """For an ascending diagram, read each conjugator straight off the heads.

    The conjugator of ``x_i`` is ``x_{j_1}^{e_1} ... x_{j_s}^{e_s}`` over the
    heads on strand ``i`` from bottom to top, ``j_k`` being the strand of the
    matching tail (all tails sit in bottom intervals, colored ``x_j``).
    """
    out = []
    for i, seq in enumerate(g.sequences(), start=1):
        letters = []
        for a, kind in seq:
            if kind == "H":
                arr: Arrow = g.arrows[a]
                letters.append(arr.tail[0] * arr.sign)
        out.append(Word(letters, g.n))
    return out


def fn_color(g: GaussDiagram) -> ColorMap:
    """Free-group coloring of a horizontal diagram, arrows taken in global order."""
    order = horizontal_order(g)
    if order is None:
        raise NotHorizontal("free-group coloring needs a horizontal diagram")
    n = g.n
    current = {s: Word.gen(s, n) for s in range(1, n + 1)}
    rank = {s: 0 for s in range(1, n + 1)}
    out: ColorMap = {TailInterval(s, 0): current[s] for s in current}
    for a in order:
        arr = g.arrows[a]
        t, h = arr.tail[0], arr.head[0]
        c = current[t] if arr.sign > 0 else invert(current[t])
        current[h] = conjugate(current[h], c)
        rank[h] += 1
        out[TailInterval(h, rank[h])] = current[h]
    return out


# --------------------------------------------------------------------------
# Wirtinger presentation


_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


@dataclass(frozen=True)
class Relation:
    lhs: TailInterval
    base: TailInterval
    conj: TailInterval
    sign: int


@dataclass(frozen=True)
class Presentation:
    """``< tail intervals | T_h^+ = (T_h^-)^{(T_h^0)^e} for each head h >``."""

    generators: Tuple[TailInterval, ...]
    relations: Tuple[Relation, ...]
    top_rank: Dict[int, int]

    def label(self, t: TailInterval) -> str:
        if t.rank == 0:
            return f"m_{t.strand}^0"
        if t.rank == self.top_rank[t.strand]:
            return f"m_{t.strand}^1"
        return f"T{t.strand}.{t.rank}"

    def _pretty(self, t: TailInterval) -> str:
        lab = self.label(t)
        if lab.startswith("m_"):
            stem, sup = lab.split("^")
            return stem + sup.translate(_SUP)
        return lab

    def to_json(self) -> dict:
        return {
            "generators": [self.label(t) for t in self.generators],
            "relations": [
                {"lhs": self.label(r.lhs), "base": self.label(r.base),
                 "conj": self.label(r.conj), "sign": r.sign}
                for r in self.relations
            ],
        }

    def __str__(self):
        gens = ", ".join(self._pretty(t) for t in self.generators)
        rels = []
        for r in self.relations:
            c = self._pretty(r.conj)
            exp = f"({c})⁻¹" if r.sign < 0 else c
            rels.append(f"{self._pretty(r.lhs)} = ({self._pretty(r.base)})^{{{exp}}}")
        if not rels:
            return f"⟨{gens}⟩"
        return f"⟨{gens} | {', '.join(rels)}⟩"


def pi1_presentation(g: GaussDiagram) -> Presentation:
    data = tail_intervals(g)
    rels = tuple(
        Relation(h.plus, h.minus, h.zero, h.sign) for row in data.heads for h in row
    )
    top = {s: len(data.heads[s - 1]) for s in range(1, g.n + 1)}
    return Presentation(tuple(sorted(data.intervals)), rels, top)


def presentation_json(g: GaussDiagram) -> str:
    return json.dumps(pi1_presentation(g).to_json())
