"""Ascending and horizontal representatives of a diagram's class.

Both normal forms preserve the invariant of :func:`phi_g_to_a`, which is how
they are certified.  Neither tries to be small.
"""

from __future__ import annotations

from typing import List, Optional

from .coloring import phi_g_to_a
from .gauss import (
    Arrow,
    GaussDiagram,
    Move,
    apply_move,
    delete_self_arrows,
    is_horizontal,
    stack,
)
from .reduced import ConjAut, InternalError, compose, invert_aut


def _first_descent(g: GaussDiagram) -> Optional[Move]:
    for seq in g.sequences():
        for (a, ka), (b, kb) in zip(seq, seq[1:]):
            if ka == "H" and kb == "T":
                return Move("C3-1", (a, b))
    return None


def ascending_form(g: GaussDiagram, certify: bool = True) -> GaussDiagram:
    """Every tail below every head on each strand.

    Self-arrows are deleted, then each strand (in index order) is sorted by
    C3-1 moves.  A C3-1 on strand ``s`` only adds tails next to an existing
    tail and heads next to an existing head on other strands, so strands
    already sorted stay sorted.  Self-arrows it creates are deleted at once.
    """
    out = delete_self_arrows(g)
    while True:
        m = _first_descent(out)
        if m is None:
            break
        out = delete_self_arrows(apply_move(out, m))
    if certify and phi_g_to_a(out) != phi_g_to_a(g):
        raise InternalError("ascending form changed the invariant")
    return out


def conjugation_diagram(n: int, i: int, word) -> GaussDiagram:
    """Horizontal diagram of ``x_i -> x_i^word`` (``word`` free of ``x_i``).

    One arrow per letter, stacked in letter order: tail on the letter's
    strand, head on ``i``.
    """
    out = GaussDiagram.empty(n)
    for j, e in word.pairs():
        if j == i:
            raise ValueError(f"conjugator of x{i} must not contain x{i}")
        out = stack(out, GaussDiagram(n, [Arrow(e, (j, 1), (i, 1))]))
    return out


def realize(f: ConjAut) -> GaussDiagram:
    """A horizontal diagram whose invariant is ``f``.

    Writes ``f`` as ``P_1 o P_2 o ...`` with each ``P`` a product of partial
    conjugations ``x_i -> x_i^{c_i}`` read off the current residual; every
    round clears one more lower-central degree, so ``n`` rounds suffice.
    """
    n = f.n
    pieces: List[GaussDiagram] = []
    residual = f
    for _ in range(n + 1):
        if residual.is_identity():
            break
        words = [c.word for c in residual.conjugators]
        piece = GaussDiagram.empty(n)
        for i, w in enumerate(words, start=1):
            piece = stack(piece, conjugation_diagram(n, i, w))
        pieces.append(piece)
        residual = compose(invert_aut(phi_g_to_a(piece)), residual)
    else:
        raise InternalError("partial-conjugation factorization did not terminate")
    out = GaussDiagram.empty(n)
    for p in pieces:
        out = stack(out, p)
    return out


def horizontal_form(g: GaussDiagram, certify: bool = True) -> GaussDiagram:
    """A horizontal diagram equivalent to ``g`` (self-arrows removed)."""
    h = delete_self_arrows(g)
    if is_horizontal(h):
        return h
    target = phi_g_to_a(g)
    out = realize(target)
    if certify and (not is_horizontal(out) or phi_g_to_a(out) != target):
        raise InternalError("horizontal form failed certification")
    return out
