"""
Gauss diagrams and the move calculus
====================================

A diagram is a set of signed arrows between upward strands.  Moves rewrite it
locally; composite moves unfold into primitive ones.
"""

from welded import Move, applicable_moves, apply_move, apply_script, expand, parse, emit
from welded.gauss import random_diagram

g = parse("""
gd 3
# head of arrow 0 sits just below the tail of arrow 1 on strand 2
arrow + 1.1 2.1
arrow + 2.2 3.1
""")
print(emit(g))

# list what can be done here
for m in applicable_moves(g):
    print(m.kind, m.arrows)

# C3-1 moves a head above the next tail at the cost of two new arrows
h = apply_move(g, Move("C3-1", (0, 1)))
print("after C3-1:\n" + emit(h))

# the same thing as a script of R2, R3 and TC
script = expand(g, Move("C3-1", (0, 1)))
print("script:", [m.kind for m in script])
print("script agrees with direct rewrite:", apply_script(g, script) == h)

# R3 needs the two arrows whose tails are adjacent to carry the same sign
rg = parse("gd 3\narrow + 3.1 2.2\narrow - 3.2 1.2\narrow + 2.1 1.1\n")
try:
    apply_move(rg, Move("R3", (0, 1, 2)))
except Exception as exc:
    print("\nR3 refused:", exc)

# random diagrams are reproducible from their seed
d = random_diagram(3, 6, 42)
print("\nrandom diagram, seed 42:\n" + emit(d))
print("moves available:", len(applicable_moves(d)))
