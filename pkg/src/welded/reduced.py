"""The reduced free group RF_n and its conjugating automorphisms.

RF_n is F_n modulo ``[x_i; x_i^g]`` for all i and g.  It is nilpotent of class
at most n, and two words are equal in RF_n exactly when their Magnus
expansions agree after deleting every monomial with a repeated index.  That
multilinear expansion is finite (at most ``sum_k n!/(n-k)!`` terms) and is the
equality oracle used throughout.

A conjugating automorphism sends ``x_i`` to ``x_i^{g_i}``.  Since
``x_i^{a x_i b} = x_i^{ab}`` in RF_n, each ``g_i`` can be taken free of
``x_i``, and it is then unique; :class:`ConjAut` always stores that form.

Injectivity of the multilinear expansion on RF_n is relied on, not proven
here: it follows from nilpotency together with injectivity of the Magnus
expansion on each lower central quotient.
"""

from __future__ import annotations

import json
from typing import Dict, Optional, Sequence

from .freegroup import (
    Coeffs,
    MalformedInput,
    RankMismatch,
    Word,
    _same_rank,
    delete_generator,
    format_series,
    invert,
    multiply,
    reduce,
    series_conjugate_gen,
    series_inverse,
    series_mul,
    series_of_word,
    series_restrict,
    word_from_series,
)


class InternalError(RuntimeError):
    """An invariant that the mathematics guarantees did not hold."""


class MultilinearPoly:
    """Expansion of an element of RF_n: keys are tuples of distinct indices."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Coeffs):
        for k, c in coeffs.items():
            if len(set(k)) != len(k):
                raise ValueError(f"monomial {k} has a repeated index")
            if any(not 1 <= i <= n for i in k):
                raise ValueError(f"monomial {k} out of range for rank {n}")
            if not c:
                raise ValueError("zero coefficients must not be stored")
        self.n = n
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, n: int, coeffs: Coeffs) -> "MultilinearPoly":
        p = object.__new__(cls)
        p.n, p.coeffs = n, coeffs
        return p

    @classmethod
    def one(cls, n: int) -> "MultilinearPoly":
        return cls._raw(n, {(): 1})

    def __eq__(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __getitem__(self, m) -> int:
        return self.coeffs.get(tuple(m), 0)

    def __mul__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        if self.n != other.n:
            raise RankMismatch(f"rank {other.n} != {self.n}")
        return MultilinearPoly._raw(self.n, series_mul(self.coeffs, other.coeffs, self.n, True))

    def inverse(self) -> "MultilinearPoly":
        return MultilinearPoly._raw(self.n, series_inverse(self.coeffs, self.n, True))

    def restrict(self, i: int) -> "MultilinearPoly":
        """Image under ``x_i -> 1``."""
        return MultilinearPoly._raw(self.n, series_restrict(self.coeffs, i))

    def is_one(self) -> bool:
        return self.coeffs == {(): 1}

    def __repr__(self):
        return f"MultilinearPoly({format_series(self.coeffs)}, n={self.n})"


def reduced_magnus(w: Word) -> MultilinearPoly:
    return MultilinearPoly._raw(w.n, series_of_word(w.letters, w.n, True))


def rf_equal(a: Word, b: Word) -> bool:
    _same_rank(a, b)
    return reduced_magnus(multiply(a, invert(b))).is_one()


class ReducedElement:
    """An element of RF_n, carried as a representative word and/or its expansion.

    Built from a word, the word is kept verbatim.  Built from an expansion, the
    representative is the canonical word recovered from it, computed lazily.
    """

    __slots__ = ("_word", "_poly")

    def __init__(self, word: Optional[Word] = None, poly: Optional[MultilinearPoly] = None):
        if word is None and poly is None:
            raise ValueError("need a word or an expansion")
        self._word = word
        self._poly = poly

    @classmethod
    def of(cls, w: Word) -> "ReducedElement":
        return cls(word=w)

    @property
    def n(self) -> int:
        return self._word.n if self._word is not None else self._poly.n

    @property
    def word(self) -> Word:
        if self._word is None:
            self._word = word_from_series(self._poly.coeffs, self._poly.n, self._poly.n, True)
        return self._word

    @property
    def poly(self) -> MultilinearPoly:
        if self._poly is None:
            self._poly = reduced_magnus(self._word)
        return self._poly

    def normal_form(self) -> Word:
        return word_from_series(self.poly.coeffs, self.n, self.n, True)

    def __eq__(self, other):
        if not isinstance(other, ReducedElement):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"ReducedElement({str(self.word)!r})"


def rho(g: Word, i: int) -> ReducedElement:
    """Conjugator of ``x_i`` with every ``x_i`` letter deleted."""
    if not 1 <= i <= g.n:
        raise MalformedInput(f"generator index {i} out of range for rank {g.n}")
    return ReducedElement(word=delete_generator(g, i))


class ConjAut:
    """A conjugating automorphism ``x_i -> x_i^{g_i}`` of RF_n.

    Conjugators are stored with ``x_i`` stripped from ``g_i``; equality is
    componentwise equality in RF_n.
    """

    __slots__ = ("n", "conjugators")

    def __init__(self, conjugators: Sequence, n: Optional[int] = None):
        items = list(conjugators)
        if n is None:
            if not items:
                raise ValueError("rank required for an empty automorphism")
            n = items[0].n
        if len(items) != n:
            raise MalformedInput(f"expected {n} conjugators, got {len(items)}")
        conj = []
        for i, g in enumerate(items, start=1):
            if isinstance(g, str):
                g = Word.parse(g, n)
            if isinstance(g, Word):
                g = rho(g, i)
            if g.n != n:
                raise RankMismatch(f"conjugator {i} has rank {g.n}, expected {n}")
            if g._word is not None and any(abs(a) == i for a in g._word.letters):
                g = rho(g._word, i)
            elif g._word is None and any(i in k for k in g.poly.coeffs):
                g = ReducedElement(poly=g.poly.restrict(i))
            conj.append(g)
        self.n = n
        self.conjugators = tuple(conj)

    @classmethod
    def identity(cls, n: int) -> "ConjAut":
        return cls([Word.identity(n)] * n, n)

    @classmethod
    def from_polys(cls, polys: Sequence[MultilinearPoly]) -> "ConjAut":
        n = polys[0].n
        return cls([ReducedElement(poly=p.restrict(i)) for i, p in enumerate(polys, 1)], n)

    def polys(self):
        return [g.poly for g in self.conjugators]

    def image_poly(self, i: int) -> MultilinearPoly:
        """Expansion of ``x_i^{g_i}``."""
        c = series_conjugate_gen(self.conjugators[i - 1].poly.coeffs, i, self.n, True)
        return MultilinearPoly._raw(self.n, c)

    def is_identity(self) -> bool:
        return all(g.poly.is_one() for g in self.conjugators)

    def __eq__(self, other):
        if not isinstance(other, ConjAut):
            return NotImplemented
        return aut_equal(self, other)

    def __hash__(self):
        return hash(tuple(self.polys()))

    def normalized(self) -> "ConjAut":
        """Same automorphism with canonical representative words."""
        return ConjAut([ReducedElement(poly=g.poly) for g in self.conjugators], self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "conjugators": [str(g.word) for g in self.conjugators]}

    @classmethod
    def from_json(cls, data) -> "ConjAut":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        words = [Word.parse(s, n) for s in data["conjugators"]]
        for i, w in enumerate(words, 1):
            if any(abs(a) == i for a in w.letters):
                raise MalformedInput(f"conjugator {i} mentions x{i}")
        return cls(words, n)

    def __repr__(self):
        return f"ConjAut({[str(g.word) for g in self.conjugators]})"


def _check_rank(f: ConjAut, g: ConjAut):
    if f.n != g.n:
        raise RankMismatch(f"rank {g.n} != {f.n}")


def substitute(f: ConjAut, p: MultilinearPoly) -> MultilinearPoly:
    """Expansion of ``f(w)`` from the expansion of ``w``.

    ``X_j -> E(f(x_j)) - 1`` extends to a ring endomorphism of the multilinear
    quotient because every monomial of the image of ``X_j`` contains ``j``.
    """
    n = f.n
    images = {}
    for j in range(1, n + 1):
        im = dict(f.image_poly(j).coeffs)
        del im[()]
        images[j] = im
    out: Coeffs = {}
    for k, c in p.coeffs.items():
        term: Coeffs = {(): c}
        for j in k:
            term = series_mul(term, images[j], n, True)
            if not term:
                break
        for kk, cc in term.items():
            out[kk] = out.get(kk, 0) + cc
    return MultilinearPoly._raw(n, {k: c for k, c in out.items() if c})


def apply(f: ConjAut, w: Word) -> Word:
    """Letterwise substitution ``x_i -> x_i^{g_i}``."""
    if f.n != w.n:
        raise RankMismatch(f"rank {w.n} != {f.n}")
    images: Dict[int, tuple] = {}
    for i, g in enumerate(f.conjugators, 1):
        gl = g.word.letters
        images[i] = tuple(-a for a in reversed(gl)) + (i,) + gl
        images[-i] = tuple(-a for a in reversed(gl)) + (-i,) + gl
    letters = []
    for a in w.letters:
        letters.extend(images[a])
    return reduce(letters, w.n)


def compose(f: ConjAut, g: ConjAut) -> ConjAut:
    """``f o g``: conjugator ``i`` is ``rho(h_i f(k_i))`` for ``f: x_i^{h_i}``, ``g: x_i^{k_i}``."""
    _check_rank(f, g)
    polys = []
    for i in range(1, f.n + 1):
        h = f.conjugators[i - 1].poly
        k = g.conjugators[i - 1].poly
        polys.append((h * substitute(f, k)).restrict(i))
    return ConjAut.from_polys(polys)


def aut_equal(f: ConjAut, g: ConjAut) -> bool:
    _check_rank(f, g)
    return all(a.poly == b.poly for a, b in zip(f.conjugators, g.conjugators))


def invert_aut(f: ConjAut) -> ConjAut:
    """Inverse by successive approximation; exact after at most n rounds."""
    n = f.n
    cand = ConjAut.from_polys([g.poly.inverse() for g in f.conjugators])
    for _ in range(n + 1):
        nxt = ConjAut.from_polys(
            [substitute(cand, g.poly).inverse() for g in f.conjugators]
        )
        if aut_equal(nxt, cand):
            break
        cand = nxt
    else:
        raise InternalError("inverse did not converge within n+1 rounds")
    if not (compose(cand, f).is_identity() and compose(f, cand).is_identity()):
        raise InternalError("computed inverse fails the group law")
    return cand


def elementary(n: int, i: int, j: int, e: int = 1) -> ConjAut:
    """``x_i -> x_i^{x_j^e}``, all other generators fixed."""
    conj = [Word.identity(n)] * n
    conj[i - 1] = Word.gen(j, n, e)
    return ConjAut(conj, n)
