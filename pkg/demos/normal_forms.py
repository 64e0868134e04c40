"""
Ascending and horizontal forms
==============================
"""

from welded import ascending_form, emit, horizontal_form, is_ascending, is_horizontal, parse, phi_g_to_a

g = parse("""
gd 2
arrow + 1.1 2.2
arrow + 2.1 1.2
arrow - 1.3 1.4
""")
print("input is horizontal:", is_horizontal(g), " ascending:", is_ascending(g))

a = ascending_form(g)
print("\nascending form:\n" + emit(a))

h = horizontal_form(g)
print("horizontal form:\n" + emit(h))

print("same invariant:", phi_g_to_a(a) == phi_g_to_a(g) == phi_g_to_a(h))
