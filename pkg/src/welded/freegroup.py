"""Free group words, the Magnus expansion and the lower central series.

Words are stored as tuples of nonzero signed integers: ``3`` is ``x3`` and
``-3`` is ``x3^-1``.  Every :class:`Word` is freely reduced on construction.

Series in noncommuting variables ``X_1..X_n`` are sparse dicts keyed by index
tuples (the empty tuple is the constant term).  The same arithmetic serves the
truncated power series used here and the multilinear quotient used by
:mod:`welded.reduced`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Tuple

Monomial = Tuple[int, ...]
Coeffs = Dict[Monomial, int]

_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


class MalformedInput(ValueError):
    """Raised for syntactically or structurally invalid input."""


class RankMismatch(ValueError):
    pass


def reduce(letters: Iterable[int], n: int) -> "Word":
    """Freely reduce a raw letter sequence into a :class:`Word` of rank ``n``."""
    out: list = []
    for a in letters:
        a = int(a)
        if a == 0 or abs(a) > n:
            raise MalformedInput(f"generator index {a} out of range for rank {n}")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return Word(tuple(out), n, _checked=True)


class Word:
    """A freely reduced word in the free group of rank ``n``."""

    __slots__ = ("letters", "n")

    def __init__(self, letters: Iterable[int] = (), n: int = 1, _checked: bool = False):
        if not _checked:
            letters = reduce(letters, n).letters
        self.letters: Tuple[int, ...] = tuple(letters)
        self.n = n

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters and self.n == other.n

    def __hash__(self):
        return hash((self.letters, self.n))

    @classmethod
    def identity(cls, n: int) -> "Word":
        return cls((), n, _checked=True)

    @classmethod
    def gen(cls, i: int, n: int, e: int = 1) -> "Word":
        return reduce([i if e > 0 else -i], n)

    @classmethod
    def parse(cls, text: str, n: int) -> "Word":
        """Parse ``"x2 x1 x2^-1"``; ``xK^p`` with any integer ``p`` is accepted."""
        letters = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if m is None:
                raise MalformedInput(f"bad word token {tok!r}")
            i, p = int(m.group(1)), int(m.group(2) or 1)
            letters.extend([i if p > 0 else -i] * abs(p))
        return reduce(letters, n)

    def pairs(self):
        """Letters as ``(generator index, sign)`` pairs."""
        return [(abs(a), 1 if a > 0 else -1) for a in self.letters]

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return True

    def __str__(self):
        return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r}, n={self.n})"

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)


def _same_rank(*words: Word) -> int:
    n = words[0].n
    for w in words[1:]:
        if w.n != n:
            raise RankMismatch(f"rank {w.n} != {n}")
    return n


def multiply(a: Word, b: Word) -> Word:
    n = _same_rank(a, b)
    la, lb = a.letters, b.letters
    k = 0
    while k < min(len(la), len(lb)) and la[-1 - k] == -lb[k]:
        k += 1
    return Word(la[: len(la) - k] + lb[k:], n, _checked=True)


def invert(a: Word) -> Word:
    return Word(tuple(-x for x in reversed(a.letters)), a.n, _checked=True)


def power(a: Word, k: int) -> Word:
    base = a if k >= 0 else invert(a)
    out = Word.identity(a.n)
    for _ in range(abs(k)):
        out = multiply(out, base)
    return out


def conjugate(x: Word, g: Word) -> Word:
    """``x^g = g^-1 x g``."""
    _same_rank(x, g)
    return multiply(multiply(invert(g), x), g)


def commutator(a: Word, b: Word) -> Word:
    """``[a;b] = a^-1 b^-1 a b``."""
    _same_rank(a, b)
    return multiply(multiply(invert(a), invert(b)), multiply(a, b))


def exponent_sum(w: Word, i: int) -> int:
    if not 1 <= i <= w.n:
        raise MalformedInput(f"generator index {i} out of range for rank {w.n}")
    return sum(1 if a == i else -1 for a in w.letters if abs(a) == i)


def delete_generator(w: Word, i: int) -> Word:
    """Image of ``w`` under ``x_i -> 1``."""
    return reduce((a for a in w.letters if abs(a) != i), w.n)


# --------------------------------------------------------------------------
# sparse noncommutative series arithmetic


@lru_cache(maxsize=None)
def _mask(m: Monomial) -> int:
    out = 0
    for i in m:
        out |= 1 << i
    return out


def series_mul(a: Coeffs, b: Coeffs, cap: int, multilinear: bool = False) -> Coeffs:
    """Product of two sparse series, dropping terms longer than ``cap``.

    With ``multilinear`` set, monomials with a repeated index are dropped as
    well (they span a two-sided ideal, so the quotient is a ring).
    """
    out: Coeffs = {}
    get = out.get
    if multilinear:
        bl = [(kb, cb, len(kb), _mask(kb)) for kb, cb in b.items()]
        for ka, ca in a.items():
            la, ma = len(ka), _mask(ka)
            for kb, cb, lb, mb in bl:
                if la + lb > cap or ma & mb:
                    continue
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
    else:
        bl = [(kb, cb, len(kb)) for kb, cb in b.items()]
        for ka, ca in a.items():
            la = len(ka)
            for kb, cb, lb in bl:
                if la + lb > cap:
                    continue
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def series_letter(a: int, cap: int, multilinear: bool = False) -> Coeffs:
    """Expansion of a single letter: ``1 + X_i`` or ``sum (-1)^k X_i^k``."""
    i = abs(a)
    if cap <= 0:
        return {(): 1}
    if a > 0:
        return {(): 1, (i,): 1}
    if multilinear:
        return {(): 1, (i,): -1}
    return {(i,) * k: (-1) ** k for k in range(cap + 1)}


def series_mul_letter(s: Coeffs, a: int, cap: int, multilinear: bool = False) -> Coeffs:
    """Right-multiply ``s`` by the expansion of one letter (fast path)."""
    i = abs(a)
    out = dict(s)
    if a > 0 or multilinear:
        e = 1 if a > 0 else -1
        for k, c in s.items():
            if len(k) < cap and not (multilinear and i in k):
                kk = k + (i,)
                out[kk] = out.get(kk, 0) + e * c
    else:
        return series_mul(s, series_letter(a, cap), cap)
    return {k: c for k, c in out.items() if c}


def series_inverse(s: Coeffs, cap: int, multilinear: bool = False) -> Coeffs:
    """Inverse of a series with constant term 1 (geometric series in ``s - 1``)."""
    if s.get((), 0) != 1:
        raise ValueError("series must have constant term 1")
    nil = {k: -c for k, c in s.items() if k}
    out: Coeffs = {(): 1}
    term: Coeffs = {(): 1}
    while True:
        term = series_mul(term, nil, cap, multilinear)
        if not term:
            return out
        for k, c in term.items():
            out[k] = out.get(k, 0) + c
        out = {k: c for k, c in out.items() if c}


def series_of_word(letters: Iterable[int], cap: int, multilinear: bool = False) -> Coeffs:
    s: Coeffs = {(): 1}
    for a in letters:
        s = series_mul_letter(s, a, cap, multilinear)
    return s


def series_restrict(s: Coeffs, i: int) -> Coeffs:
    """Set ``X_i = 0`` (the image of ``x_i -> 1``)."""
    return {k: c for k, c in s.items() if i not in k}


def series_conjugate_gen(conj: Coeffs, i: int, cap: int, multilinear: bool = False) -> Coeffs:
    """Expansion of ``x_i^g`` given the expansion of ``g``."""
    inv = series_inverse(conj, cap, multilinear)
    return series_mul(series_mul_letter(inv, i, cap, multilinear), conj, cap, multilinear)


# --------------------------------------------------------------------------
# truncated Magnus expansion


@dataclass(frozen=True)
class TruncatedSeries:
    """Element of Z<<X_1..X_n>> modulo monomials of degree > ``degree``."""

    degree: int
    coeffs: Dict[Monomial, int]

    def __post_init__(self):
        for k, c in self.coeffs.items():
            if len(k) > self.degree:
                raise ValueError(f"monomial {k} exceeds degree cap {self.degree}")
            if c == 0:
                raise ValueError("zero coefficients must not be stored")

    def __getitem__(self, m) -> int:
        return self.coeffs.get(tuple(m), 0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        d = min(self.degree, other.degree)
        return TruncatedSeries(d, series_mul(self.coeffs, other.coeffs, d))

    def is_one(self) -> bool:
        return self.coeffs == {(): 1}

    def homogeneous(self, d: int) -> Coeffs:
        return {k: c for k, c in self.coeffs.items() if len(k) == d}

    def __str__(self):
        return format_series(self.coeffs)


def format_series(coeffs: Coeffs) -> str:
    parts = []
    for k in sorted(coeffs, key=lambda m: (len(m), m)):
        c = coeffs[k]
        mono = "".join(f"X{i}" for i in k)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}{mono}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def magnus(w: Word, degree: int) -> TruncatedSeries:
    """Magnus expansion of ``w`` truncated above ``degree``."""
    if degree < 1:
        raise MalformedInput("degree cap must be positive")
    return TruncatedSeries(degree, series_of_word(w.letters, degree))


def lcs_equal(a: Word, b: Word, k: int) -> bool:
    """Whether ``a == b`` in ``F_n / Gamma_k``."""
    _same_rank(a, b)
    if k < 1:
        raise MalformedInput("k must be positive")
    if k == 1:
        return True
    return magnus(multiply(a, invert(b)), k - 1).is_one()


# --------------------------------------------------------------------------
# words from expansions (Lyndon basis peeling)


def _standard_factorization(w: Monomial) -> Tuple[Monomial, Monomial]:
    # right factor is the longest proper suffix that is a Lyndon word
    for s in range(1, len(w)):
        v = w[s:]
        if _is_lyndon(v):
            return w[:s], v
    raise ValueError(f"{w} is not a Lyndon word of length >= 2")


def _is_lyndon(w: Monomial) -> bool:
    return all(w < w[s:] + w[:s] for s in range(1, len(w)))


@lru_cache(maxsize=None)
def _bracket_letters(w: Monomial) -> Tuple[int, ...]:
    """Group commutator realizing the Lyndon bracketing of ``w`` (unreduced)."""
    if len(w) == 1:
        return (w[0],)
    u, v = _standard_factorization(w)
    a, b = _bracket_letters(u), _bracket_letters(v)
    inv = lambda t: tuple(-x for x in reversed(t))  # noqa: E731
    return inv(a) + inv(b) + a + b


def word_from_series(coeffs: Coeffs, n: int, cap: int, multilinear: bool = False) -> Word:
    """A word whose expansion is ``coeffs``.

    ``coeffs`` must be the image of a group element (truncated at ``cap``, or
    in the multilinear quotient).  The lowest nonvanishing homogeneous part of
    the residual is a Lie element; its lexicographically least monomial is a
    Lyndon word, and subtracting the matching iterated commutator clears that
    coefficient without touching lower degrees.  The result is canonical.
    """
    if coeffs.get((), 0) != 1:
        raise ValueError("not a group-like expansion")
    letters: list = []
    residual = dict(coeffs)
    while len(residual) > 1:
        d = min(len(k) for k in residual if k)
        w = min(k for k in residual if len(k) == d)
        c = residual[w]
        if not _is_lyndon(w):
            raise ValueError(f"expansion is not group-like: leading monomial {w}")
        block = _bracket_letters(w)
        if c < 0:
            block = tuple(-x for x in reversed(block))
        for _ in range(abs(c)):
            letters.extend(block)
            inv = series_of_word([-x for x in reversed(block)], cap, multilinear)
            residual = series_mul(inv, residual, cap, multilinear)
    return reduce(letters, n)
