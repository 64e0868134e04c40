"""Welded Milnor invariants from longitudes modulo the lower central series.

The longitude of strand ``j`` is the product, bottom to top, of the meridians
``(T_h^0)^{e_h}`` met at the heads on ``j``.  Meridians of interior intervals
are expressed in the bottom generators by iterated Wirtinger substitution,
carried out on truncated Magnus expansions: modulo ``Gamma_k`` this is exact
and the sizes stay bounded.  The longitude is then zero-framed by a left
factor ``x_j^{-e}``.  A kink on strand ``j`` multiplies the raw longitude by
``x_j`` on the left, so this is the side that makes every coefficient
invariant; a right correction only agrees on monomials avoiding ``j``.

``mu(i_1 .. i_m, j)`` is the coefficient of ``X_{i_1} .. X_{i_m}`` in the
expansion of the depth ``m + 1`` longitude of strand ``j``.  Signs follow the
conventions ``x^g = g^-1 x g`` and ``[a;b] = a^-1 b^-1 a b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .coloring import IntervalData, TailInterval, tail_intervals
from .freegroup import (
    Coeffs,
    MalformedInput,
    TruncatedSeries,
    Word,
    series_conjugate_gen,
    series_inverse,
    series_letter,
    series_mul,
    word_from_series,
)
from .gauss import GaussDiagram
from .reduced import InternalError


@dataclass(frozen=True)
class Longitude:
    strand: int
    depth: int
    series: TruncatedSeries  # expansion truncated at degree depth - 1
    n: int
    framing_corrected: bool = True
    _word: list = field(default_factory=list, compare=False, repr=False)

    @property
    def word(self) -> Word:
        """A word representing the longitude modulo ``Gamma_depth``."""
        if not self._word:
            if self.depth <= 1:
                self._word.append(Word.identity(self.n))
            else:
                self._word.append(
                    word_from_series(self.series.coeffs, self.n, self.series.degree)
                )
        return self._word[0]


def _interval_conjugators(g: GaussDiagram, k: int, data: IntervalData) -> Dict[TailInterval, Coeffs]:
    """Truncated expansions (degree k-1) of each interval's conjugator in F_n.

    The conjugator of the top interval of strand ``j`` is its (unframed)
    longitude.  k substitution passes suffice; one more confirms the fixed
    point.
    """
    D = k - 1
    conj: Dict[TailInterval, Coeffs] = {t: {(): 1} for t in data.intervals}
    for _ in range(k + 1):
        changed = False
        for s in range(1, g.n + 1):
            for h in data.heads[s - 1]:
                z = h.zero
                merid = series_conjugate_gen(conj[z], z.strand, D)
                if h.sign < 0:
                    merid = series_inverse(merid, D)
                new = series_mul(conj[h.minus], merid, D)
                if new != conj[h.plus]:
                    conj[h.plus] = new
                    changed = True
        if not changed:
            return conj
    raise InternalError(f"longitude substitution did not stabilize at depth {k}")


def longitudes(g: GaussDiagram, k: int, framing: str = "left") -> List[Longitude]:
    """Zero-framed longitudes of all strands modulo ``Gamma_k``.

    ``framing`` is ``"left"`` (default), ``"right"`` or ``"none"``.
    """
    if framing not in ("left", "right", "none"):
        raise MalformedInput(f"unknown framing {framing!r}")
    if k < 1:
        raise MalformedInput("depth k must be positive")
    n = g.n
    if k == 1:
        return [Longitude(j, 1, TruncatedSeries(0, {(): 1}), n) for j in range(1, n + 1)]
    D = k - 1
    data = tail_intervals(g)
    conj = _interval_conjugators(g, k, data)
    out = []
    for j in range(1, n + 1):
        lam = conj[data.top(j)]
        e = lam.get((j,), 0)
        if e and framing != "none":
            fix: Coeffs = {(): 1}
            for _ in range(abs(e)):
                fix = series_mul(fix, series_letter(-j if e > 0 else j, D), D)
            lam = series_mul(lam, fix, D) if framing == "right" else series_mul(fix, lam, D)
        out.append(Longitude(j, k, TruncatedSeries(D, lam), n, framing != "none"))
    return out


def _check_index(g: GaussDiagram, index: Sequence[int]) -> Tuple[int, ...]:
    index = tuple(int(i) for i in index)
    if not index:
        raise MalformedInput("a Milnor index needs at least one entry")
    if any(not 1 <= i <= g.n for i in index):
        raise MalformedInput(f"index {index} out of range 1..{g.n}")
    return index


def milnor_mu(g: GaussDiagram, index: Sequence[int], depth: Optional[int] = None) -> int:
    """``mu_I`` for ``I = (i_1, .., i_m, j)``; ``depth`` defaults to ``m + 1``."""
    index = _check_index(g, index)
    m = len(index) - 1
    k = depth if depth is not None else m + 1
    if k <= m:
        raise MalformedInput(f"depth must exceed {m} for an index of length {m + 1}")
    lam = longitudes(g, k)[index[-1] - 1]
    return lam.series[index[:-1]]


def universal_milnor(g: GaussDiagram, k: int) -> Dict[Tuple[int, Tuple[int, ...]], int]:
    """Nonzero length ``k + 1`` invariants keyed by ``(j, (i_1..i_k))``."""
    if k < 1:
        raise MalformedInput("k must be positive")
    out = {}
    for lam in longitudes(g, k + 1):
        for mono, c in lam.series.homogeneous(k).items():
            out[(lam.strand, mono)] = c
    return out


def milnor_table(g: GaussDiagram, max_length: int) -> List[dict]:
    """All ``mu_I`` with ``2 <= |I| <= max_length`` as ``{"I": [...], "mu": v}``."""
    rows = []
    for length in range(2, max_length + 1):
        k = length - 1
        inv = universal_milnor(g, k)
        for j in range(1, g.n + 1):
            for seq in itertools.product(range(1, g.n + 1), repeat=k):
                rows.append({"I": list(seq) + [j], "mu": inv.get((j, seq), 0)})
    return rows


def milnor_filtration_order(g: GaussDiagram, k_max: int) -> Optional[int]:
    """Least length of a nonvanishing invariant, or None if none up to ``k_max``."""
    if k_max < 2:
        raise MalformedInput("k_max must be at least 2")
    for length in range(2, k_max + 1):
        if universal_milnor(g, length - 1):
            return length
    return None
