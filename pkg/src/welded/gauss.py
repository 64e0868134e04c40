"""Gauss diagrams of welded string links and their move calculus.

A diagram has ``n`` upward strands carrying the ends of signed arrows.  Ends
on a strand are ranked ``1..m`` from the bottom.  Arrows are identified by
their position in ``GaussDiagram.arrows``; a move that adds arrows appends
them, and a move that deletes arrows shifts the later ones down.

Moves work on the per-strand end sequences.  The composite moves (C3-1, C3-2,
C3-3, C2) have a direct rewrite and an expansion into primitive moves
(:func:`expand`); the two agree.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Dict, List, Optional, Sequence, Tuple

from .freegroup import MalformedInput

End = Tuple[int, str]  # (arrow index, "T" or "H")
Slot = Tuple[int, int]  # (strand, rank)


class MoveError(ValueError):
    pass


class PatternNotFound(MoveError):
    pass


class R3ConditionViolated(MoveError):
    pass


class NotSelfArrow(MoveError):
    pass


@dataclass(frozen=True)
class Arrow:
    sign: int
    tail: Slot
    head: Slot

    @property
    def is_self(self) -> bool:
        return self.tail[0] == self.head[0]


class GaussDiagram:
    """``n`` ordered upward strands with signed arrows between them."""

    __slots__ = ("n", "arrows", "_seqs")

    def __init__(self, n: int, arrows: Sequence[Arrow] = ()):
        if n < 1:
            raise MalformedInput("a diagram needs at least one strand")
        self.n = n
        self.arrows: Tuple[Arrow, ...] = tuple(arrows)
        self._seqs = None

    @classmethod
    def empty(cls, n: int) -> "GaussDiagram":
        return cls(n, ())

    @classmethod
    def from_sequences(cls, n: int, signs: Dict[int, int], seqs) -> "GaussDiagram":
        """Build from bottom-to-top end lists; arrow ids are renumbered in order."""
        order = sorted(signs)
        new_id = {a: k for k, a in enumerate(order)}
        tails: Dict[int, Slot] = {}
        heads: Dict[int, Slot] = {}
        for s, seq in enumerate(seqs, start=1):
            for r, (a, kind) in enumerate(seq, start=1):
                (tails if kind == "T" else heads)[a] = (s, r)
        arrows = [Arrow(signs[a], tails[a], heads[a]) for a in order]
        g = cls(n, arrows)
        g._seqs = tuple(tuple((new_id[a], k) for a, k in seq) for seq in seqs)
        return g

    def sequences(self) -> Tuple[Tuple[End, ...], ...]:
        """Per strand (index ``s - 1``), the ends from bottom to top."""
        if self._seqs is None:
            slots: List[Dict[int, End]] = [dict() for _ in range(self.n)]
            for a, arr in enumerate(self.arrows):
                slots[arr.tail[0] - 1][arr.tail[1]] = (a, "T")
                slots[arr.head[0] - 1][arr.head[1]] = (a, "H")
            self._seqs = tuple(tuple(d[r] for r in sorted(d)) for d in slots)
        return self._seqs

    def slot_counts(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.sequences())

    def signs(self) -> Dict[int, int]:
        return {a: arr.sign for a, arr in enumerate(self.arrows)}

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.n == other.n and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.n, self.arrows))

    def __len__(self):
        return len(self.arrows)

    def __repr__(self):
        return f"GaussDiagram(n={self.n}, arrows={len(self.arrows)})"

    def to_text(self) -> str:
        return emit(self)


# --------------------------------------------------------------------------
# validation and text format


def validate(g: GaussDiagram) -> List[str]:
    """All violated structural invariants; an empty list means valid."""
    errors = []
    used: Dict[Slot, int] = {}
    for a, arr in enumerate(g.arrows):
        if arr.sign not in (1, -1):
            errors.append(f"arrow {a}: sign {arr.sign} is not +1 or -1")
        for name, (s, r) in (("tail", arr.tail), ("head", arr.head)):
            if not 1 <= s <= g.n:
                errors.append(f"arrow {a}: {name} strand {s} out of range 1..{g.n}")
                continue
            if r < 1:
                errors.append(f"arrow {a}: {name} rank {r} is not positive")
            if (s, r) in used:
                errors.append(f"arrow {a}: {name} shares slot {s}.{r} with arrow {used[(s, r)]}")
            used[(s, r)] = a
    for s in range(1, g.n + 1):
        ranks = sorted(r for (t, r) in used if t == s)
        if ranks != list(range(1, len(ranks) + 1)):
            errors.append(f"strand {s}: ranks {ranks} are not contiguous from 1")
    return errors


_ARROW = re.compile(r"^arrow\s+([+-])\s+(\d+)\.(\d+)\s+(\d+)\.(\d+)$")


def parse(text: str, check: bool = True) -> GaussDiagram:
    """Read the text format; with ``check=False`` structural errors are left for :func:`validate`."""
    n = None
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = re.match(r"^gd\s+(\d+)$", line)
            if m is None:
                raise MalformedInput(f"line {lineno}: expected 'gd <n>' header")
            n = int(m.group(1))
            if n < 1:
                raise MalformedInput(f"line {lineno}: strand count must be positive")
            continue
        m = _ARROW.match(line)
        if m is None:
            raise MalformedInput(f"line {lineno}: cannot parse {line!r}")
        sign = 1 if m.group(1) == "+" else -1
        ts, tr, hs, hr = (int(m.group(k)) for k in range(2, 6))
        arrows.append(Arrow(sign, (ts, tr), (hs, hr)))
    if n is None:
        raise MalformedInput("missing 'gd <n>' header")
    g = GaussDiagram(n, arrows)
    errors = validate(g) if check else None
    if errors:
        raise MalformedInput("; ".join(errors))
    return g


def emit(g: GaussDiagram) -> str:
    lines = [f"gd {g.n}"]
    for arr in g.arrows:
        sign = "+" if arr.sign > 0 else "-"
        lines.append(
            f"arrow {sign} {arr.tail[0]}.{arr.tail[1]} {arr.head[0]}.{arr.head[1]}"
        )
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# products, predicates, strand deletion, random diagrams


def stack(g1: GaussDiagram, g2: GaussDiagram) -> GaussDiagram:
    """``g1`` below ``g2``."""
    if g1.n != g2.n:
        raise MalformedInput(f"cannot stack {g1.n} strands on {g2.n}")
    shift = g1.slot_counts()
    arrows = list(g1.arrows)
    for arr in g2.arrows:
        (ts, tr), (hs, hr) = arr.tail, arr.head
        arrows.append(Arrow(arr.sign, (ts, tr + shift[ts - 1]), (hs, hr + shift[hs - 1])))
    return GaussDiagram(g1.n, arrows)


def horizontal_order(g: GaussDiagram) -> Optional[List[int]]:
    """A global arrow order compatible with every strand, or None."""
    if any(arr.is_self for arr in g.arrows):
        return None
    ts = TopologicalSorter({a: () for a in range(len(g.arrows))})
    for seq in g.sequences():
        for (lo, _), (hi, _) in zip(seq, seq[1:]):
            ts.add(hi, lo)
    try:
        return list(ts.static_order())
    except CycleError:
        return None


def is_horizontal(g: GaussDiagram) -> bool:
    return horizontal_order(g) is not None


def is_ascending(g: GaussDiagram) -> bool:
    for seq in g.sequences():
        kinds = "".join(k for _, k in seq)
        if "HT" in kinds:
            return False
    return True


def delete_strand(g: GaussDiagram, i: int) -> GaussDiagram:
    if not 1 <= i <= g.n:
        raise MalformedInput(f"strand {i} out of range 1..{g.n}")
    if g.n == 1:
        raise MalformedInput("cannot delete the only strand")
    keep = {a for a, arr in enumerate(g.arrows) if arr.tail[0] != i and arr.head[0] != i}
    seqs = [
        [e for e in seq if e[0] in keep]
        for s, seq in enumerate(g.sequences(), start=1)
        if s != i
    ]
    return GaussDiagram.from_sequences(g.n - 1, {a: g.arrows[a].sign for a in keep}, seqs)


def delete_arrows(g: GaussDiagram, drop) -> GaussDiagram:
    drop = set(drop)
    seqs = [[e for e in seq if e[0] not in drop] for seq in g.sequences()]
    signs = {a: arr.sign for a, arr in enumerate(g.arrows) if a not in drop}
    return GaussDiagram.from_sequences(g.n, signs, seqs)


def delete_self_arrows(g: GaussDiagram) -> GaussDiagram:
    return delete_arrows(g, [a for a, arr in enumerate(g.arrows) if arr.is_self])


def random_diagram(n: int, arrow_count: int, seed, self_arrows: bool = True) -> GaussDiagram:
    """Uniform strands, signs and interleavings; deterministic in ``seed``."""
    if n < 1:
        raise MalformedInput("n must be positive")
    rng = random.Random(seed)
    seqs: List[List[End]] = [[] for _ in range(n)]
    signs = {}
    for a in range(arrow_count):
        signs[a] = rng.choice((1, -1))
        t = rng.randint(1, n)
        h = rng.randint(1, n)
        while not self_arrows and n > 1 and h == t:
            h = rng.randint(1, n)
        for s, kind in ((t, "T"), (h, "H")):
            seq = seqs[s - 1]
            seq.insert(rng.randint(0, len(seq)), (a, kind))
    return GaussDiagram.from_sequences(n, signs, seqs)


# --------------------------------------------------------------------------
# moves

PRIMITIVE = ("R1-add", "R1-del", "R2-add", "R2-del", "R3", "TC", "SA-add", "SA-del")
COMPOSITE = ("C3-1", "C3-2", "C3-3", "C2")
KINDS = PRIMITIVE + COMPOSITE


@dataclass(frozen=True)
class Move:
    """A move instance.

    Parameters by kind:

    * ``R1-add``: ``strand``, ``gap``, ``sign``, ``tail_first`` (order of the
      two adjacent ends).
    * ``SA-add``: ``strand``, tail ``gap``, head ``gap2``, ``sign``;
      ``tail_first`` breaks a tie between equal gaps.
    * ``R2-add``: tails at (``strand``, ``gap``), heads at (``strand2``,
      ``gap2``); the lower arrow has ``sign``, the upper ``-sign``.
    * ``R1-del``, ``SA-del``: ``arrows=(a,)``.  ``R2-del``, ``TC``, ``C3-2``:
      ``arrows=(a, b)``.
    * ``R3``: ``arrows=(A, B, C)`` with A top->middle, B top->bottom,
      C middle->bottom.
    * ``C3-1``: ``arrows=(a, b)`` with the head of a directly below the tail
      of b.  ``C3-3``: the tail of b directly below the head of a.
    * ``C2``: ``arrows=(a, b)`` with adjacent ends on ``strand``.

    A gap ``g`` on a strand with ``m`` ends is the position after the ``g``-th
    end, ``0 <= g <= m``.
    """

    kind: str
    arrows: Tuple[int, ...] = ()
    strand: int = 0
    gap: int = 0
    strand2: int = 0
    gap2: int = 0
    sign: int = 1
    tail_first: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MalformedInput(f"unknown move kind {self.kind!r}")


class _Work:
    """Mutable copy of a diagram's end sequences used while rewriting."""

    def __init__(self, g: GaussDiagram):
        self.n = g.n
        self.seqs = [list(s) for s in g.sequences()]
        self.signs = g.signs()
        self.next_id = len(g.arrows)

    def where(self, end: End) -> Tuple[int, int]:
        for s, seq in enumerate(self.seqs):
            if end in seq:
                return s, seq.index(end)
        raise PatternNotFound(f"end {end} not present")

    def adjacent(self, lower: End, upper: End) -> bool:
        s1, p1 = self.where(lower)
        s2, p2 = self.where(upper)
        return s1 == s2 and p2 == p1 + 1

    def swap_adjacent(self, e1: End, e2: End):
        s1, p1 = self.where(e1)
        s2, p2 = self.where(e2)
        if s1 != s2 or abs(p1 - p2) != 1:
            raise PatternNotFound(f"ends {e1} and {e2} are not adjacent")
        seq = self.seqs[s1]
        seq[p1], seq[p2] = seq[p2], seq[p1]

    def insert_rel(self, anchor: End, items: List[End], above: bool):
        s, p = self.where(anchor)
        p = p + 1 if above else p
        self.seqs[s][p:p] = items

    def new_arrow(self, sign: int) -> int:
        a = self.next_id
        self.next_id += 1
        self.signs[a] = sign
        return a

    def remove(self, a: int):
        for seq in self.seqs:
            seq[:] = [e for e in seq if e[0] != a]
        del self.signs[a]

    def strand_of(self, end: End) -> int:
        return self.where(end)[0]

    def finish(self) -> GaussDiagram:
        return GaussDiagram.from_sequences(self.n, self.signs, self.seqs)


def _check_arrows(g: GaussDiagram, m: Move, count: int):
    if len(m.arrows) != count:
        raise PatternNotFound(f"{m.kind} needs {count} arrow ids")
    for a in m.arrows:
        if not 0 <= a < len(g.arrows):
            raise PatternNotFound(f"arrow {a} does not exist")
    if len(set(m.arrows)) != count:
        raise PatternNotFound(f"{m.kind} needs distinct arrows")


def _insert_gaps(w: _Work, strand: int, inserts):
    """``inserts``: (gap, tiebreak, items) relative to the current sequence."""
    if not 1 <= strand <= w.n:
        raise PatternNotFound(f"strand {strand} out of range")
    seq = w.seqs[strand - 1]
    for gap, _, _ in inserts:
        if not 0 <= gap <= len(seq):
            raise PatternNotFound(f"gap {gap} out of range on strand {strand}")
    for gap, _, items in sorted(inserts, key=lambda t: (t[0], t[1]), reverse=True):
        seq[gap:gap] = items


def _r1_add(w, m):
    a = w.new_arrow(m.sign)
    ends = [(a, "T"), (a, "H")] if m.tail_first else [(a, "H"), (a, "T")]
    _insert_gaps(w, m.strand, [(m.gap, 0, ends)])


def _sa_add(w, m):
    a = w.new_arrow(m.sign)
    t_key, h_key = (0, 1) if m.tail_first else (1, 0)
    if m.gap == m.gap2:
        first, second = ((a, "T"), (a, "H")) if m.tail_first else ((a, "H"), (a, "T"))
        _insert_gaps(w, m.strand, [(m.gap, 0, [first, second])])
    else:
        _insert_gaps(w, m.strand, [(m.gap, t_key, [(a, "T")]), (m.gap2, h_key, [(a, "H")])])


def _r2_add(w, m):
    a = w.new_arrow(m.sign)
    b = w.new_arrow(-m.sign)
    tails = [(a, "T"), (b, "T")]
    heads = [(a, "H"), (b, "H")]
    if m.strand == m.strand2:
        tk, hk = (0, 1) if m.tail_first else (1, 0)
        _insert_gaps(w, m.strand, [(m.gap, tk, tails), (m.gap2, hk, heads)])
    else:
        _insert_gaps(w, m.strand, [(m.gap, 0, tails)])
        _insert_gaps(w, m.strand2, [(m.gap2, 0, heads)])


def _is_self(w: _Work, a: int) -> bool:
    return w.strand_of((a, "T")) == w.strand_of((a, "H"))


def _r1_del(w, m):
    (a,) = m.arrows
    t, h = (a, "T"), (a, "H")
    if not (w.adjacent(t, h) or w.adjacent(h, t)):
        raise PatternNotFound(f"arrow {a} is not an isolated self-arrow")
    w.remove(a)


def _sa_del(w, m):
    (a,) = m.arrows
    if not _is_self(w, a):
        raise NotSelfArrow(f"arrow {a} is not a self-arrow")
    w.remove(a)


def _adjacent_any(w, e1, e2) -> bool:
    return w.adjacent(e1, e2) or w.adjacent(e2, e1)


def _r2_del(w, m):
    a, b = m.arrows
    if w.signs[a] != -w.signs[b]:
        raise PatternNotFound("R2 arrows must have opposite signs")
    if not (_adjacent_any(w, (a, "T"), (b, "T")) and _adjacent_any(w, (a, "H"), (b, "H"))):
        raise PatternNotFound("R2 arrows need adjacent tails and adjacent heads")
    w.remove(a)
    w.remove(b)


def _tc(w, m):
    a, b = m.arrows
    w.swap_adjacent((a, "T"), (b, "T"))


def _r3(w, m):
    A, B, C = m.arrows
    if not _adjacent_any(w, (A, "T"), (B, "T")):
        raise PatternNotFound("R3: tails of A and B are not adjacent")
    config1 = w.adjacent((C, "T"), (A, "H")) and w.adjacent((C, "H"), (B, "H"))
    config2 = w.adjacent((A, "H"), (C, "T")) and w.adjacent((B, "H"), (C, "H"))
    if not (config1 or config2):
        raise PatternNotFound("R3: middle and bottom pieces do not match")
    if w.signs[A] != w.signs[B]:
        raise R3ConditionViolated(
            "R3: the two arrows with tails on the top piece must have equal signs"
        )
    w.swap_adjacent((A, "T"), (B, "T"))
    w.swap_adjacent((A, "H"), (C, "T"))
    w.swap_adjacent((B, "H"), (C, "H"))


def _c3_1(w, m):
    a, b = m.arrows
    if not w.adjacent((a, "H"), (b, "T")):
        raise PatternNotFound("C3-1: head of a is not directly below tail of b")
    e = w.signs[a]
    lo, hi = w.new_arrow(-e), w.new_arrow(e)
    w.insert_rel((a, "T"), [(lo, "T"), (hi, "T")], above=False)
    w.swap_adjacent((a, "H"), (b, "T"))
    w.insert_rel((b, "H"), [(lo, "H")], above=False)
    w.insert_rel((b, "H"), [(hi, "H")], above=True)


def _c3_3(w, m):
    a, b = m.arrows
    if not w.adjacent((b, "T"), (a, "H")):
        raise PatternNotFound("C3-3: tail of b is not directly below head of a")
    e = w.signs[a]
    lo, hi = w.new_arrow(e), w.new_arrow(-e)
    w.insert_rel((a, "T"), [(lo, "T"), (hi, "T")], above=True)
    w.swap_adjacent((b, "T"), (a, "H"))
    w.insert_rel((b, "H"), [(lo, "H")], above=False)
    w.insert_rel((b, "H"), [(hi, "H")], above=True)


def _c2_ends(w: _Work, m: Move):
    """Adjacent ends ``(lower, upper)`` on ``m.strand`` and their partners."""
    a, b = m.arrows
    found = None
    for ka in "TH":
        for kb in "TH":
            ea, eb = (a, ka), (b, kb)
            sa, _ = w.where(ea)
            if sa + 1 != m.strand:
                continue
            if w.adjacent(ea, eb):
                found = (ea, eb)
            elif w.adjacent(eb, ea):
                found = (eb, ea)
    if found is None:
        raise PatternNotFound(f"C2: arrows {a}, {b} have no adjacent ends on strand {m.strand}")
    lower, upper = found
    other = lambda e: (e[0], "H" if e[1] == "T" else "T")  # noqa: E731
    if w.strand_of(other(lower)) != w.strand_of(other(upper)):
        raise PatternNotFound("C2: the other two ends are not on one strand")
    return lower, upper


def _c2(w, m):
    lower, upper = _c2_ends(w, m)
    w.swap_adjacent(lower, upper)


_APPLY = {
    "R1-add": _r1_add,
    "R1-del": _r1_del,
    "SA-add": _sa_add,
    "SA-del": _sa_del,
    "R2-add": _r2_add,
    "R2-del": _r2_del,
    "R3": _r3,
    "TC": _tc,
    "C3-1": _c3_1,
    "C3-2": _tc,
    "C3-3": _c3_3,
    "C2": _c2,
}
_ARITY = {"R1-del": 1, "SA-del": 1, "R2-del": 2, "TC": 2, "R3": 3,
          "C3-1": 2, "C3-2": 2, "C3-3": 2, "C2": 2}


def apply_move(g: GaussDiagram, m: Move) -> GaussDiagram:
    """Apply one move, raising :class:`MoveError` if its pattern is absent."""
    if m.kind in _ARITY:
        _check_arrows(g, m, _ARITY[m.kind])
    if m.kind in ("R1-add", "SA-add", "R2-add"):
        if m.sign not in (1, -1):
            raise PatternNotFound("sign must be +1 or -1")
    w = _Work(g)
    _APPLY[m.kind](w, m)
    return w.finish()


def apply_script(g: GaussDiagram, script: Sequence[Move]) -> GaussDiagram:
    for m in script:
        g = apply_move(g, m)
    return g


# --------------------------------------------------------------------------
# composite moves as primitive scripts


def _gap_below(g: GaussDiagram, end: End) -> Tuple[int, int]:
    for s, seq in enumerate(g.sequences(), start=1):
        if end in seq:
            return s, seq.index(end)
    raise PatternNotFound(f"end {end} not present")


def _gap_above(g: GaussDiagram, end: End) -> Tuple[int, int]:
    s, p = _gap_below(g, end)
    return s, p + 1


def expand(g: GaussDiagram, m: Move) -> List[Move]:
    """Primitive-move script realizing a composite move on ``g``."""
    if m.kind in PRIMITIVE:
        return [m]
    _check_arrows(g, m, _ARITY[m.kind])
    N = len(g.arrows)
    if m.kind == "C3-2":
        return [Move("TC", m.arrows)]
    a, b = m.arrows
    e = g.arrows[a].sign
    if m.kind == "C3-1":
        apply_move(g, m)  # pattern check
        q, qg = _gap_below(g, (a, "T"))
        r, rg = _gap_below(g, (b, "H"))
        return [
            Move("R2-add", strand=q, gap=qg, strand2=r, gap2=rg, sign=-e),
            Move("R3", (a, N + 1, b)),
            Move("TC", (a, N + 1)),
        ]
    if m.kind == "C3-3":
        apply_move(g, m)
        q, qg = _gap_above(g, (a, "T"))
        r, rg = _gap_above(g, (b, "H"))
        return [
            Move("R2-add", strand=q, gap=qg, strand2=r, gap2=rg, sign=e),
            Move("R3", (a, N, b)),
            Move("TC", (a, N)),
        ]
    return _expand_c2(g, m)


def _expand_c2(g: GaussDiagram, m: Move) -> List[Move]:
    w = _Work(g)
    lower, upper = _c2_ends(w, m)
    target = apply_move(g, m)
    if lower[1] == "T" and upper[1] == "T":
        return [Move("TC", (lower[0], upper[0]))]
    N = len(g.arrows)
    candidates = []
    if lower[1] == "H" and upper[1] == "H":
        L, U = lower[0], upper[0]
        # bottom piece (H_C, H_B) with C=L, B=U: helper head just above T_L
        # bottom piece (H_B, H_C) with B=L, C=U: helper head just below T_U
        for x, c, head_anchor, above in ((U, L, (L, "T"), True), (L, U, (U, "T"), False)):
            candidates.append((x, c, head_anchor, above, (N, x, c)))
    else:
        h_end = lower if lower[1] == "H" else upper
        t_end = upper if h_end is lower else lower
        A, C = h_end[0], t_end[0]
        # middle piece on this strand; helper plays top->bottom
        above = h_end is upper  # (T_C, H_A): helper head above H_C
        candidates.append((A, C, (C, "H"), above, (A, N, C)))
    for x, _c, head_anchor, head_above, roles in candidates:
        for tail_above in (True, False):
            for sign in (1, -1):
                for tie in (True, False):
                    q, hg = (_gap_above if head_above else _gap_below)(g, head_anchor)
                    q2, tg = (_gap_above if tail_above else _gap_below)(g, (x, "T"))
                    if q != q2:
                        continue
                    script = [
                        Move("SA-add", strand=q, gap=tg, gap2=hg, sign=sign, tail_first=tie),
                        Move("R3", roles),
                        Move("SA-del", (N,)),
                    ]
                    try:
                        out = apply_script(g, script)
                    except MoveError:
                        continue
                    if out == target:
                        return script
    raise PatternNotFound("C2: no helper self-arrow configuration is valid")


# --------------------------------------------------------------------------
# enumeration of move instances


def applicable_moves(g: GaussDiagram) -> List[Move]:
    """Every applicable instance of the non-additive move kinds."""
    moves: List[Move] = []
    seqs = g.sequences()
    arrows = g.arrows
    pos: Dict[End, Tuple[int, int]] = {}
    for s, seq in enumerate(seqs):
        for p, e in enumerate(seq):
            pos[e] = (s, p)

    def adj(lo: End, hi: End) -> bool:
        s1, p1 = pos[lo]
        s2, p2 = pos[hi]
        return s1 == s2 and p2 == p1 + 1

    for a, arr in enumerate(arrows):
        if arr.is_self:
            moves.append(Move("SA-del", (a,)))
            if adj((a, "T"), (a, "H")) or adj((a, "H"), (a, "T")):
                moves.append(Move("R1-del", (a,)))
    for s, seq in enumerate(seqs, start=1):
        for lo, hi in zip(seq, seq[1:]):
            x, y = lo[0], hi[0]
            if x == y:
                continue
            kinds = lo[1] + hi[1]
            if kinds == "TT":
                moves.append(Move("TC", (x, y)))
                moves.append(Move("C3-2", (x, y)))
                if arrows[x].sign == -arrows[y].sign:
                    hx, hy = (x, "H"), (y, "H")
                    if adj(hx, hy) or adj(hy, hx):
                        moves.append(Move("R2-del", (x, y)))
            elif kinds == "HT":
                moves.append(Move("C3-1", (x, y)))
            elif kinds == "TH":
                moves.append(Move("C3-3", (y, x)))
            other = {"T": "H", "H": "T"}
            if pos[(x, other[lo[1]])][0] == pos[(y, other[hi[1]])][0]:
                moves.append(Move("C2", (x, y), strand=s))
    # R3: A, B tails adjacent; pieces as in _r3
    for s, seq in enumerate(seqs):
        for lo, hi in zip(seq, seq[1:]):
            if lo[1] != "T" or hi[1] != "T" or lo[0] == hi[0]:
                continue
            if arrows[lo[0]].sign != arrows[hi[0]].sign:
                continue
            for A, B in ((lo[0], hi[0]), (hi[0], lo[0])):
                hs, hp = pos[(A, "H")]
                hseq = seqs[hs]
                for q, kind in ((hp - 1, "T"), (hp + 1, "T")):
                    if not 0 <= q < len(hseq) or hseq[q][1] != kind:
                        continue
                    C = hseq[q][0]
                    if C in (A, B):
                        continue
                    cfg1 = q == hp - 1 and adj((C, "H"), (B, "H"))
                    cfg2 = q == hp + 1 and adj((B, "H"), (C, "H"))
                    if cfg1 or cfg2:
                        moves.append(Move("R3", (A, B, C)))
    return moves


def random_additive_moves(g: GaussDiagram, rng: random.Random, count: int = 1) -> List[Move]:
    """Random instances of R1-add, SA-add and R2-add."""
    counts = g.slot_counts()
    out = []
    for _ in range(count):
        s = rng.randint(1, g.n)
        out.append(Move("R1-add", strand=s, gap=rng.randint(0, counts[s - 1]),
                        sign=rng.choice((1, -1)), tail_first=rng.random() < 0.5))
        s = rng.randint(1, g.n)
        out.append(Move("SA-add", strand=s, gap=rng.randint(0, counts[s - 1]),
                        gap2=rng.randint(0, counts[s - 1]), sign=rng.choice((1, -1)),
                        tail_first=rng.random() < 0.5))
        s, t = rng.randint(1, g.n), rng.randint(1, g.n)
        out.append(Move("R2-add", strand=s, gap=rng.randint(0, counts[s - 1]), strand2=t,
                        gap2=rng.randint(0, counts[t - 1]), sign=rng.choice((1, -1)),
                        tail_first=rng.random() < 0.5))
    return out
