"""
The classifying invariant
=========================

Every diagram determines a conjugating automorphism of RF_n.  Two diagrams are
equivalent up to welded moves and self-arrow deletion exactly when these
agree.
"""

from welded import ConjAut, GaussDiagram, parse, phi_a_to_g, phi_g_to_a, pi1_presentation, stack
from welded.gauss import delete_strand, emit

H = parse("gd 2\narrow - 2.1 1.1\n")
print("pi_1:", pi1_presentation(H))
print("phi(H) =", phi_g_to_a(H).to_json())

# powers of H are pairwise distinct
G = GaussDiagram.empty(2)
seen = []
for k in range(5):
    f = phi_g_to_a(G)
    print(f"H^{k}:", f.to_json()["conjugators"], "new" if f not in seen else "repeat")
    seen.append(f)
    G = stack(G, H)

# a diagram realizing x3 -> x3^[x2^-1; x1^-1]
B = phi_a_to_g(ConjAut(["", "", "x2 x1 x2^-1 x1^-1"], 3))
print("\nB:\n" + emit(B))
print("phi(B) =", phi_g_to_a(B).to_json())
for i in (1, 2, 3):
    print(f"delete strand {i}: trivial =", phi_g_to_a(delete_strand(B, i)).is_identity())

# a self-arrow does not change the class
S = parse("gd 2\narrow - 2.1 1.2\narrow + 1.1 1.3\n")
print("\nH plus a self-arrow equivalent to H:", phi_g_to_a(S) == phi_g_to_a(H))
