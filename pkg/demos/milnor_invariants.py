"""
Milnor invariants
=================

Longitudes are read modulo the lower central series and expanded; their
coefficients are the invariants mu_I.
"""

from welded import ConjAut, longitudes, milnor_filtration_order, milnor_mu, parse, phi_a_to_g, universal_milnor
from welded.milnor import milnor_table

one = parse("gd 2\narrow + 1.1 2.1\n")
print("single arrow, mu(1,2) =", milnor_mu(one, (1, 2)))

B = phi_a_to_g(ConjAut(["", "", "x2 x1 x2^-1 x1^-1"], 3))
for lam in longitudes(B, 3):
    print(f"longitude {lam.strand} mod Gamma_3:", lam.word or "1", "|", lam.series)

print("mu(1,2,3) =", milnor_mu(B, (1, 2, 3)))
print("mu(2,1,3) =", milnor_mu(B, (2, 1, 3)))
print("length 2:", universal_milnor(B, 1))
print("length 3:", universal_milnor(B, 2))
print("first nonvanishing length:", milnor_filtration_order(B, 4))

nonzero = [row for row in milnor_table(B, 4) if row["mu"]]
print("nonzero up to length 4:", nonzero)
