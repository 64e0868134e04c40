"""
Words, Magnus expansions and the reduced free group
===================================================

Run with ``python demos/free_groups.py``.
"""

from welded import Word, commutator, conjugate, magnus, lcs_equal, rf_equal, reduced_magnus
from welded.reduced import ReducedElement

# words in F_3 are freely reduced on construction
x1, x2, x3 = (Word.gen(i, 3) for i in (1, 2, 3))
w = Word.parse("x1 x2 x2^-1 x3", 3)
print("reduced:", w)

# conjugation is x^g = g^-1 x g, the commutator is [a;b] = a^-1 b^-1 a b
print("x1^x2 =", conjugate(x1, x2))
c = commutator(x1, x2)
print("[x1;x2] =", c)

# the Magnus expansion sees [x1;x2] first in degree 2
print("E([x1;x2]) =", magnus(c, 3))
print("trivial mod Gamma_2:", lcs_equal(c, Word.identity(3), 2))
print("trivial mod Gamma_3:", lcs_equal(c, Word.identity(3), 3))

# RF_n kills [x_i; x_i^g]; the multilinear expansion decides equality there
r = commutator(x1, conjugate(x1, x2 * x3))
print("\nrelator", r, "has", len(r), "letters")
print("reduced expansion:", reduced_magnus(r))
print("equal to 1 in RF_3:", rf_equal(r, Word.identity(3)))

# canonical representatives come from the expansion
messy = Word.parse("x2 x3 x2^-1 x3^-1 x1 x2 x1^-1", 3)
nf = ReducedElement.of(messy).normal_form()
print("\nnormal form of", messy, "is", nf, "and they agree:", rf_equal(messy, nf))
